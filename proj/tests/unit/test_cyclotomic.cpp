#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lsym/cyclotomic.hpp"
#include "lsym/errors.hpp"
#include "oracle.hpp"

using lsym::BigRational;
using lsym::Cyclotomic;

namespace {

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Cyclotomic random_element(std::mt19937_64& g, int m) {
    std::uniform_int_distribution<int> c(-4, 4);
    std::vector<BigRational> coeffs;
    for (int k = 0; k < m; ++k) coeffs.emplace_back(c(g), 1 + (k % 3));
    return Cyclotomic::from_coefficients(m, coeffs);
}

}  // namespace

TEST(Cyclotomic, TotientMatchesGcdCount) {
    for (int m = 1; m <= 120; ++m) {
        int count = 0;
        for (int k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
        EXPECT_EQ(lsym::euler_phi(m), count) << m;
    }
}

TEST(Cyclotomic, ProductOverDivisorsIsXToTheMMinusOne) {
    for (int m = 1; m <= 60; ++m) {
        std::vector<long long> prod{1};
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) prod = poly_mul(prod, lsym::cyclotomic_polynomial(d));
        std::vector<long long> want(static_cast<std::size_t>(m) + 1, 0);
        want[0] = -1;
        want[static_cast<std::size_t>(m)] = 1;
        EXPECT_EQ(prod, want) << m;
        EXPECT_EQ(static_cast<int>(lsym::cyclotomic_polynomial(m).size()) - 1, lsym::euler_phi(m));
    }
}

TEST(Cyclotomic, GeneratorPowersMatchRootsOfUnity) {
    for (int m : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15}) {
        for (int k = -2 * m; k <= 2 * m; ++k) {
            auto z = Cyclotomic::zeta(m, k);
            EXPECT_LT(std::abs(oracle::eval(z) - oracle::root_of_unity(((k % m) + m) % m, m)), 1e-12) << m << " " << k;
        }
        EXPECT_TRUE((Cyclotomic::zeta(m).inverse() * Cyclotomic::zeta(m)).is_one());
    }
    // Reduced forms are unique: zeta_4^2 is exactly -1, zeta_3 + zeta_3^2 is exactly -1.
    EXPECT_EQ(Cyclotomic::zeta(4, 2), Cyclotomic(-1));
    EXPECT_EQ(Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2), Cyclotomic(-1));
}

TEST(Cyclotomic, MixedOrdersLiftToTheLeastCommonMultiple) {
    auto s = Cyclotomic::zeta(4) + Cyclotomic::zeta(6);
    EXPECT_EQ(s.order(), 12);
    EXPECT_LT(std::abs(oracle::eval(s) - (oracle::root_of_unity(1, 4) + oracle::root_of_unity(1, 6))), 1e-12);
    EXPECT_THROW(Cyclotomic::zeta(4).lift(6), lsym::ValidationError);
}

TEST(Cyclotomic, InverseOfZeroIsReported) { EXPECT_THROW(Cyclotomic::zero(5).inverse(), lsym::MathError); }

TEST(Cyclotomic, PrintsGeneratorAsZ) {
    EXPECT_EQ(Cyclotomic(BigRational(3, 2)).to_string(), "3/2");
    EXPECT_EQ(Cyclotomic::zeta(6).to_string(), "z6");
}

TEST(CyclotomicProperty, RingAxiomsAndNumericValues) {
    std::mt19937_64 g(77);
    for (int m : {3, 4, 5, 7, 8, 12}) {
        for (int trial = 0; trial < 60; ++trial) {
            Cyclotomic a = random_element(g, m), b = random_element(g, m), c = random_element(g, m);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a + b, b + a);
            EXPECT_LT(oracle::rel_err(oracle::eval(a * b), oracle::eval(a) * oracle::eval(b)), 1e-10);
            EXPECT_LT(oracle::rel_err(oracle::eval(a.conj()), std::conj(oracle::eval(a))), 1e-10);
            if (!a.is_zero()) {
                EXPECT_TRUE((a * a.inverse()).is_one());
                EXPECT_EQ(b / a * a, b);
            }
            double re = 0, im = 0;
            a.evaluate(re, im);
            EXPECT_LT(std::abs(oracle::C(re, im) - oracle::eval(a)), 1e-10);
            EXPECT_EQ(a.lift(2 * m).lift(6 * m), a.lift(6 * m));
        }
    }
}
