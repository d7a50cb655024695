#pragma once

#include <string>
#include <vector>

#include "lsym/rational.hpp"

namespace lsym {

// Euler totient and integer coefficients of the m-th cyclotomic polynomial (low degree first).
int euler_phi(int m);
const std::vector<long long>& cyclotomic_polynomial(int m);

// Element of Q(zeta_m) stored as a residue of degree < phi(m) modulo the m-th cyclotomic polynomial.
// Binary operations on mixed orders lift both operands to the lcm of the orders.
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(const BigRational& q);  // NOLINT: rationals embed at order 1
    Cyclotomic(long long v) : Cyclotomic(BigRational(v)) {}  // NOLINT

    static Cyclotomic zero(int m);
    static Cyclotomic one(int m);
    static Cyclotomic rational(int m, const BigRational& q);
    static Cyclotomic zeta(int m, long long k = 1);  // zeta_m^k
    static Cyclotomic from_coefficients(int m, std::vector<BigRational> coeffs);  // any length, reduced

    int order() const { return order_; }
    const std::vector<BigRational>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    BigRational rational_part() const { return c_[0]; }

    Cyclotomic lift(int m) const;  // m must be a multiple of order()
    Cyclotomic inverse() const;
    Cyclotomic conj() const;  // complex conjugation zeta -> zeta^{-1}

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
    Cyclotomic& scale(const BigRational& q);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Numerical value using zeta_m = exp(2 pi i / m).
    void evaluate(double& re, double& im) const;

    // "3/2", "z6", "(1 - 2*z6)"; the generator prints as z<m>.
    std::string to_string() const;
    bool needs_parens() const;

private:
    Cyclotomic(int m, std::vector<BigRational> c) : order_(m), c_(std::move(c)) {}
    static void align(Cyclotomic& a, Cyclotomic& b);

    int order_;
    std::vector<BigRational> c_;
};

int lcm_int(int a, int b);

}  // namespace lsym
