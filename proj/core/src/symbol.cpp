#include "lsym/symbol.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "lsym/errors.hpp"

namespace lsym {
namespace {

using Key = std::tuple<int, int, int, std::string>;

struct Table {
    std::shared_mutex mu;
    std::map<Key, std::unique_ptr<SymbolInfo>> entries;
};

Table& table() {
    static Table t;
    return t;
}

}  // namespace

Symbol Symbol::intern(SymbolKind kind, int a, int b, const std::string& name) {
    Table& t = table();
    Key key{static_cast<int>(kind), a, b, kind == SymbolKind::Named ? name : std::string()};
    {
        std::shared_lock lock(t.mu);
        auto it = t.entries.find(key);
        if (it != t.entries.end()) return Symbol(it->second.get());
    }
    const SymbolInfo* parent = nullptr;
    if (kind == SymbolKind::Root) parent = eigenvalue(a).p_;
    std::unique_lock lock(t.mu);
    auto [it, inserted] = t.entries.try_emplace(key);
    if (inserted) it->second.reset(new SymbolInfo{kind, a, b, name, parent});
    return Symbol(it->second.get());
}

Symbol Symbol::eigenvalue(int i) { return intern(SymbolKind::Eigenvalue, i, 0, "t" + std::to_string(i)); }

Symbol Symbol::root(int i, int order) {
    if (order < 1) throw ValidationError("root order must be positive");
    return intern(SymbolKind::Root, i, order, "u" + std::to_string(i));
}

Symbol Symbol::char_value(int block, int r) {
    return intern(SymbolKind::CharValue, block, r, "x" + std::to_string(block) + "_" + std::to_string(r));
}

Symbol Symbol::named(const std::string& name) {
    if (name.empty()) throw ValidationError("symbol name must be nonempty");
    return intern(SymbolKind::Named, 0, 0, name);
}

std::strong_ordering operator<=>(Symbol x, Symbol y) {
    if (x.p_ == y.p_) return std::strong_ordering::equal;
    const SymbolInfo& a = *x.p_;
    const SymbolInfo& b = *y.p_;
    if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) return c;
    if (auto c = a.a <=> b.a; c != 0) return c;
    if (auto c = a.b <=> b.b; c != 0) return c;
    return a.name.compare(b.name) <=> 0;
}

std::size_t symbol_table_size() {
    Table& t = table();
    std::shared_lock lock(t.mu);
    return t.entries.size();
}

}  // namespace lsym
