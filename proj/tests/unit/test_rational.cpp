#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "lsym/errors.hpp"
#include "lsym/rational.hpp"

using lsym::BigRational;

namespace {

mpq_class q(long long n, long long d = 1) {
    mpq_class x(mpz_class(std::to_string(n)), mpz_class(std::to_string(d)));
    x.canonicalize();
    return x;
}

std::string q_string(const mpq_class& x) { return x.get_den() == 1 ? x.get_num().get_str() : x.get_str(); }

}  // namespace

TEST(Rational, ReducesToLowestTermsWithPositiveDenominator) {
    EXPECT_EQ(BigRational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(BigRational(0, -7).to_string(), "0");
    EXPECT_TRUE(BigRational(10, 5).is_integer());
    EXPECT_THROW(BigRational(1, 0), lsym::ValidationError);
}

TEST(Rational, ParsesIntegerAndFractionText) {
    EXPECT_EQ(BigRational::parse("-3/6"), BigRational(-1, 2));
    EXPECT_EQ(BigRational::parse("17"), BigRational(17));
    EXPECT_EQ(BigRational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
    EXPECT_THROW(BigRational::parse("1/0"), lsym::ValidationError);
    EXPECT_THROW(BigRational::parse("abc"), lsym::ValidationError);
    EXPECT_THROW(BigRational::parse(""), lsym::ValidationError);
}

TEST(Rational, OverflowSpillsToArbitraryPrecision) {
    const long long big = std::numeric_limits<long long>::max();
    BigRational x(big);
    BigRational y = x * x + BigRational(1);
    mpq_class want = q(big) * q(big) + 1;
    EXPECT_EQ(y.to_string(), q_string(want));
    EXPECT_FALSE(y.is_small());
    // Coming back into range returns to the inline form.
    BigRational z = (y - BigRational(1)) / x;
    EXPECT_EQ(z, x);
    EXPECT_TRUE(z.is_small());
}

TEST(Rational, HashAgreesForEqualValuesInEitherRepresentation) {
    const long long big = std::numeric_limits<long long>::max();
    BigRational a = BigRational(big) * BigRational(2) / BigRational(2);
    EXPECT_EQ(a, BigRational(big));
    EXPECT_EQ(a.hash(), BigRational(big).hash());
}

TEST(RationalProperty, FieldOperationsMatchGmpOnRandomOperands) {
    std::mt19937_64 g(20240611);
    std::uniform_int_distribution<long long> small(-50, 50);
    std::uniform_int_distribution<long long> wide(std::numeric_limits<long long>::min() / 2,
                                                  std::numeric_limits<long long>::max() / 2);
    for (int trial = 0; trial < 4000; ++trial) {
        auto pick = [&](bool w) { return w ? wide(g) : small(g); };
        bool w = trial % 3 == 0;
        long long an = pick(w), ad = pick(w), bn = pick(w), bd = pick(w);
        if (ad == 0) ad = 1;
        if (bd == 0) bd = 1;
        BigRational a(an, ad), b(bn, bd);
        mpq_class qa = q(an, ad), qb = q(bn, bd);
        ASSERT_EQ((a + b).to_string(), q_string(qa + qb));
        ASSERT_EQ((a - b).to_string(), q_string(qa - qb));
        ASSERT_EQ((a * b).to_string(), q_string(qa * qb));
        if (bn != 0) ASSERT_EQ((a / b).to_string(), q_string(qa / qb));
        ASSERT_EQ(a < b, qa < qb);
        ASSERT_EQ(a == b, qa == qb);
        ASSERT_EQ(a.sign(), sgn(qa));
    }
}

TEST(RationalProperty, DivisionByZeroIsReported) {
    EXPECT_THROW(BigRational(1) / BigRational(0), lsym::MathError);
}
