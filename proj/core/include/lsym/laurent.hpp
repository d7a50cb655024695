#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lsym/cyclotomic.hpp"
#include "lsym/symbol.hpp"

namespace lsym {

// Finitely supported symbol -> nonzero integer exponent, sorted by the canonical symbol order.
class Monomial {
public:
    using Factor = std::pair<Symbol, int>;

    Monomial() = default;
    explicit Monomial(Symbol s, int e = 1);
    static Monomial from_factors(std::vector<Factor> f);  // merges duplicates, drops zeros

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    int degree_in(Symbol s) const;
    int total_degree() const;

    Monomial inverse() const;
    Monomial pow(int k) const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
    friend bool operator<(const Monomial& a, const Monomial& b);

    std::size_t hash() const;
    std::string to_string() const;  // "1", "t1*t2^-1"

private:
    std::vector<Factor> f_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// A coefficient-times-monomial term.
struct Term {
    Monomial mono;
    Cyclotomic coeff;
};

// Sparse Laurent polynomial in formal symbols with cyclotomic coefficients.
// No zero coefficient is ever stored, so structural equality is value equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Cyclotomic& c);  // NOLINT: constants embed
    LaurentPoly(long long c) : LaurentPoly(Cyclotomic(c)) {}  // NOLINT
    LaurentPoly(Symbol s) : LaurentPoly(Monomial(s)) {}  // NOLINT
    LaurentPoly(const Monomial& m, const Cyclotomic& c = Cyclotomic(1));

    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_unit_term() const { return terms_.size() == 1; }
    Cyclotomic constant_term() const;
    const std::unordered_map<Monomial, Cyclotomic, MonomialHash>& raw_terms() const { return terms_; }
    std::vector<Term> sorted_terms() const;
    Term single_term() const;  // requires is_unit_term()

    void add_term(const Monomial& m, const Cyclotomic& c);
    void add_scaled(const LaurentPoly& p, const Monomial& m, const Cyclotomic& c);  // += c*m*p

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& scale(const Cyclotomic& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly pow(int k) const;  // k < 0 only for single terms
    LaurentPoly inverse_unit() const;  // inverse of a single term

    // Replace each symbol for which `image` returns a term by that term (units only, any exponent sign).
    LaurentPoly substitute(const std::function<std::optional<Term>(Symbol)>& image) const;
    // Reduce root symbols: u^e -> t^(e div l) * u^(e mod l) with 0 <= e mod l < l.
    LaurentPoly substitute_roots() const;
    // Evaluate every symbol at 1.
    Cyclotomic specialize_all_to_one() const;

    std::string to_string() const;
    std::size_t hash() const;  // order independent

private:
    std::unordered_map<Monomial, Cyclotomic, MonomialHash> terms_;
};

LaurentPoly poly_normalize(const LaurentPoly& p);

}  // namespace lsym
