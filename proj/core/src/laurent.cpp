#include "lsym/laurent.hpp"

#include <algorithm>

#include "lsym/errors.hpp"

namespace lsym {

// ---- Monomial ----

Monomial::Monomial(Symbol s, int e) {
    if (e != 0) f_.emplace_back(s, e);
}

Monomial Monomial::from_factors(std::vector<Factor> f) {
    std::sort(f.begin(), f.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [s, e] : f) {
        if (!m.f_.empty() && m.f_.back().first == s)
            m.f_.back().second += e;
        else
            m.f_.emplace_back(s, e);
        if (m.f_.back().second == 0) m.f_.pop_back();
    }
    return m;
}

int Monomial::degree_in(Symbol s) const {
    for (const auto& [t, e] : f_)
        if (t == s) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [s, e] : f_) d += e;
    return d;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int k) const {
    Monomial m;
    if (k == 0) return m;
    m.f_ = f_;
    for (auto& [s, e] : m.f_) e *= k;
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.f_.reserve(a.f_.size() + b.f_.size());
    std::size_t i = 0, j = 0;
    while (i < a.f_.size() || j < b.f_.size()) {
        if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
            m.f_.push_back(a.f_[i++]);
        } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
            m.f_.push_back(b.f_[j++]);
        } else {
            int e = a.f_[i].second + b.f_[j].second;
            if (e != 0) m.f_.emplace_back(a.f_[i].first, e);
            ++i;
            ++j;
        }
    }
    return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
    // graded by total degree, then lexicographic on (symbol, exponent) with higher exponents first
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    std::size_t n = std::min(a.f_.size(), b.f_.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (a.f_[k].first != b.f_[k].first) return a.f_[k].first < b.f_[k].first;
        if (a.f_[k].second != b.f_[k].second) return a.f_[k].second > b.f_[k].second;
    }
    return a.f_.size() < b.f_.size();
}

std::size_t Monomial::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [s, e] : f_) {
        h ^= s.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Monomial::to_string() const {
    if (f_.empty()) return "1";
    std::string out;
    for (const auto& [s, e] : f_) {
        if (!out.empty()) out += "*";
        out += s.name();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// ---- LaurentPoly ----

LaurentPoly::LaurentPoly(const Cyclotomic& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

LaurentPoly::LaurentPoly(const Monomial& m, const Cyclotomic& c) {
    if (!c.is_zero()) terms_.emplace(m, c);
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [m, c] = *terms_.begin();
    return m.is_one() && c.is_one();
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Cyclotomic LaurentPoly::constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

std::vector<Term> LaurentPoly::sorted_terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back({m, c});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    return out;
}

Term LaurentPoly::single_term() const {
    if (terms_.size() != 1) throw MathError("expected a single-term Laurent polynomial");
    const auto& [m, c] = *terms_.begin();
    return {m, c};
}

void LaurentPoly::add_term(const Monomial& m, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void LaurentPoly::add_scaled(const LaurentPoly& p, const Monomial& m, const Cyclotomic& c) {
    if (c.is_zero()) return;
    for (const auto& [pm, pc] : p.terms_) add_term(pm * m, pc * c);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    const LaurentPoly& small = a.size() <= b.size() ? a : b;
    const LaurentPoly& large = a.size() <= b.size() ? b : a;
    for (const auto& [m, c] : small.terms_) out.add_scaled(large, m, c);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::scale(const Cyclotomic& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
        auto it = b.terms_.find(m);
        if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::inverse_unit() const {
    Term t = single_term();
    return LaurentPoly(t.mono.inverse(), t.coeff.inverse());
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) return inverse_unit().pow(-k);
    LaurentPoly result(1LL), base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

namespace {

Cyclotomic cyclotomic_pow(const Cyclotomic& c, int k) {
    if (k < 0) return cyclotomic_pow(c.inverse(), -k);
    Cyclotomic r(1), b = c;
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k > 0) b *= b;
    }
    return r;
}

}  // namespace

LaurentPoly LaurentPoly::substitute(const std::function<std::optional<Term>(Symbol)>& image) const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Factor> kept;
        Monomial extra;
        Cyclotomic coeff = c;
        for (const auto& [s, e] : m.factors()) {
            if (auto img = image(s)) {
                extra = extra * img->mono.pow(e);
                if (!img->coeff.is_one()) coeff *= cyclotomic_pow(img->coeff, e);
            } else {
                kept.emplace_back(s, e);
            }
        }
        out.add_term(Monomial::from_factors(std::move(kept)) * extra, coeff);
    }
    return out;
}

LaurentPoly LaurentPoly::substitute_roots() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Factor> f;
        bool changed = false;
        for (const auto& [s, e] : m.factors()) {
            if (!s.is_root()) {
                f.emplace_back(s, e);
                continue;
            }
            int l = s.root_order();
            int r = ((e % l) + l) % l;
            int q = (e - r) / l;
            if (r != 0) f.emplace_back(s, r);
            if (q != 0) f.emplace_back(s.parent(), q);
            changed = changed || q != 0;
        }
        out.add_term(changed ? Monomial::from_factors(std::move(f)) : m, c);
    }
    return out;
}

Cyclotomic LaurentPoly::specialize_all_to_one() const {
    Cyclotomic s(0);
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : sorted_terms()) {
        const Cyclotomic& c = t.coeff;
        bool neg = c.is_rational() && c.rational_part().sign() < 0;
        Cyclotomic mag = neg ? -c : c;
        std::string body;
        if (t.mono.is_one())
            body = mag.to_string();
        else if (mag.is_one())
            body = t.mono.to_string();
        else
            body = mag.to_string() + "*" + t.mono.to_string();
        if (first)
            out += neg ? "-" + body : body;
        else
            out += neg ? " - " + body : " + " + body;
        first = false;
    }
    return out;
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = 0;
    for (const auto& [m, c] : terms_) h += m.hash();
    return h;
}

LaurentPoly poly_normalize(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [m, c] : p.raw_terms()) out.add_term(m, c);
    return out;
}

}  // namespace lsym
