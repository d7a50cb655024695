#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lsym/cyclotomic.hpp"

namespace lsym {

// 32 significant decimal digits.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<32>>;

struct ComplexApprox {
    Real re = 0;
    Real im = 0;
    Real error = 0;  // bound on the distance to the exact value

    Real abs() const;
    ComplexApprox conj() const { return {re, -im, error}; }
};

// Dirichlet character modulo N with values in the group of L-th roots of unity.
// Stored as exponents: chi(a) = zeta_L^{exps[a mod N]}, or 0 when gcd(a, N) > 1.
class DirichletChar {
public:
    DirichletChar(int modulus, int order, std::vector<int> exps);

    static DirichletChar principal(int modulus);
    static DirichletChar kronecker(int discriminant);    // (D / .) for a fundamental discriminant D
    static std::vector<DirichletChar> all(int modulus);  // the full character group, in a fixed order

    int modulus() const { return n_; }
    int order() const { return order_; }
    bool is_unit(long long a) const;
    Cyclotomic value(long long a) const;           // exact
    ComplexApprox numeric(long long a) const;
    int exponent(long long a) const;               // -1 off units

    bool is_principal() const;
    bool is_primitive() const;  // checked against every proper divisor of N
    int conductor() const;
    DirichletChar conj() const;
    bool multiplicative() const;  // chi(ab) = chi(a) chi(b) on units, exhaustively
    std::string label() const;

private:
    int n_;
    int order_;
    std::vector<int> exps_;
};

bool is_fundamental_discriminant(long long d);
int kronecker_symbol(long long a, long long n);

// sum over a mod N of chi(a) e^{2 pi i a / N}.
ComplexApprox gauss_sum(const DirichletChar& chi);

// L(s, chi) as a head of s-power terms over full periods plus an Euler-Maclaurin tail per residue class.
ComplexApprox dirichlet_L(const DirichletChar& chi, const Real& s, const Real& tol);

struct NumericReport {
    std::string case_id;
    Real lhs = 0;
    Real rhs = 0;
    Real abs_err = 0;
    Real tol = 0;
    Real error_bound = 0;  // propagated bound on the numeric side
    bool equal = false;
    double elapsed_ms = 0.0;
};

// G(chi_D) against i sqrt|D| for a negative fundamental discriminant with |D| <= 200.
NumericReport verify_quadratic_gauss(int d, const Real& tol = Real("1e-9"));
// |G(chi)|^2 against the modulus, for a primitive character.
NumericReport verify_gauss_norm(const DirichletChar& chi, const Real& tol = Real("1e-9"));
// L(1, chi_D) against 2 pi h / (w sqrt|D|).
NumericReport class_number_check(int d, int h, int w, const Real& tol = Real("1e-6"));

}  // namespace lsym
