#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lsym/laurent.hpp"

namespace lsym {

using Multiset = std::vector<LaurentPoly>;

// Reciprocal of an unramified local L-factor: a polynomial in the place variable X
// with Laurent coefficients, stored densely by X-degree. The constant term is 1.
class EulerFactorDenom {
public:
    explicit EulerFactorDenom(std::string place = "X");  // the constant 1

    static EulerFactorDenom from_coefficients(std::vector<LaurentPoly> c, int residue_degree = 1,
                                              std::string place = "X");

    const std::string& place() const { return place_; }
    int residue_degree() const { return f_ == 0 ? 1 : f_; }  // the constant 1 carries no tag internally
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<LaurentPoly>& coefficients() const { return c_; }
    const LaurentPoly& coefficient(int k) const;

    // Multiply in place by (1 - e*X^f).
    EulerFactorDenom& mul_linear(const LaurentPoly& e, int f);
    EulerFactorDenom& operator*=(const EulerFactorDenom& o);
    friend EulerFactorDenom operator*(EulerFactorDenom a, const EulerFactorDenom& b) { return a *= b; }
    friend bool operator==(const EulerFactorDenom& a, const EulerFactorDenom& b);
    friend bool operator!=(const EulerFactorDenom& a, const EulerFactorDenom& b) { return !(a == b); }

    EulerFactorDenom pow(int k) const;  // k >= 0
    EulerFactorDenom inflate(int k) const;  // X -> X^k
    EulerFactorDenom substitute_roots() const;
    EulerFactorDenom map_coefficients(const std::function<LaurentPoly(const LaurentPoly&)>& fn) const;
    std::vector<Cyclotomic> specialize_all_to_one() const;

    // "1 - (t1 + t2)*X + t1*t2*X^2"
    std::string to_string() const;
    // to_string(), or an order-independent digest "fnv1a64:<hex>;terms=<N>;deg=<D>" when longer than max_len.
    std::string canonical(std::size_t max_len = 2000) const;
    std::size_t term_count() const;

private:
    void trim();

    std::string place_;
    int f_;
    std::vector<LaurentPoly> c_;
};

EulerFactorDenom euler_from_eigenvalues(const Multiset& eigs, int f);
EulerFactorDenom euler_product(const std::vector<EulerFactorDenom>& factors, const std::string& place = "X");
Multiset tensor_eigenvalues(const Multiset& a, const Multiset& b);

// The unique P with P(0) = 1 and P^2 = s. Throws MathError when s is not a perfect square.
EulerFactorDenom poly_sqrt(const EulerFactorDenom& s);

}  // namespace lsym
