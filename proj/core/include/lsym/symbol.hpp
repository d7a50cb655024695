#pragma once

#include <compare>
#include <cstddef>
#include <string>

namespace lsym {

enum class SymbolKind : int {
    Eigenvalue = 0,  // t_i, value of a character at a uniformizer
    Root = 1,        // u_i with u_i^order = parent
    CharValue = 2,   // x_{block,r}, an inducing character value
    Named = 3,       // free-form symbol, ordered by name
};

struct SymbolInfo {
    SymbolKind kind;
    int a;           // primary index
    int b;           // secondary index (root order for Root)
    std::string name;
    const SymbolInfo* parent;  // Root only
};

// Interned formal symbol. Handles are pointer-sized and compare by a canonical key
// (kind, a, b, name), so ordering does not depend on registration order.
class Symbol {
public:
    static Symbol eigenvalue(int i);
    static Symbol root(int i, int order);  // parent is eigenvalue(i)
    static Symbol char_value(int block, int r);
    static Symbol named(const std::string& name);

    const SymbolInfo& info() const { return *p_; }
    const std::string& name() const { return p_->name; }
    SymbolKind kind() const { return p_->kind; }
    bool is_root() const { return p_->kind == SymbolKind::Root; }
    int root_order() const { return p_->b; }
    Symbol parent() const { return Symbol(p_->parent); }

    friend bool operator==(Symbol x, Symbol y) { return x.p_ == y.p_; }
    friend std::strong_ordering operator<=>(Symbol x, Symbol y);

    std::size_t hash() const { return std::hash<const void*>{}(p_); }

private:
    explicit Symbol(const SymbolInfo* p) : p_(p) {}
    static Symbol intern(SymbolKind kind, int a, int b, const std::string& name);
    const SymbolInfo* p_;
};

// Number of distinct symbols registered so far (diagnostics).
std::size_t symbol_table_size();

}  // namespace lsym
