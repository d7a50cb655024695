#include <gtest/gtest.h>

#include <random>

#include "lsym/errors.hpp"
#include "lsym/laurent.hpp"
#include "oracle.hpp"

using lsym::Cyclotomic;
using lsym::LaurentPoly;
using lsym::Monomial;
using lsym::Symbol;

namespace {

LaurentPoly t(int i) { return LaurentPoly(Symbol::eigenvalue(i)); }

LaurentPoly random_poly(std::mt19937_64& g, int root_order) {
    std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2), count(1, 5), which(0, 3);
    LaurentPoly p;
    int terms = count(g);
    for (int k = 0; k < terms; ++k) {
        std::vector<Monomial::Factor> f;
        f.emplace_back(Symbol::eigenvalue(1), expo(g));
        f.emplace_back(Symbol::eigenvalue(2), expo(g));
        if (root_order > 1) f.emplace_back(Symbol::root(1, root_order), expo(g));
        Cyclotomic c = which(g) == 0 ? Cyclotomic::zeta(4, coef(g)) : Cyclotomic(coef(g));
        p.add_term(Monomial::from_factors(f), c);
    }
    return p;
}

}  // namespace

TEST(Laurent, ZeroCoefficientsArePruned) {
    LaurentPoly p = t(1) * LaurentPoly(0LL) + LaurentPoly(1LL);
    EXPECT_TRUE(p.is_one());
    LaurentPoly q = (t(1) - t(1)) + t(2);
    EXPECT_EQ(q, t(2));
    EXPECT_EQ(q.size(), 1u);
}

TEST(Laurent, RootOfOrderThreeCubedReducesToItsParent) {
    LaurentPoly u(Symbol::root(1, 3));
    EXPECT_EQ(u.pow(3).substitute_roots(), t(1));
    // u^-4 = t^-2 * u^2, since -4 = 3*(-2) + 2.
    LaurentPoly want = t(1).pow(2).inverse_unit() * u.pow(2);
    EXPECT_EQ(u.pow(4).inverse_unit().substitute_roots(), want);
}

TEST(Laurent, NegativePowersNeedASingleTerm) {
    EXPECT_EQ(t(1).pow(-2) * t(1).pow(2), LaurentPoly(1LL));
    EXPECT_THROW((t(1) + t(2)).pow(-1), lsym::MathError);
    EXPECT_THROW((t(1) + t(2)).inverse_unit(), lsym::MathError);
}

TEST(Laurent, MonomialsMergeAndCancel) {
    Monomial m = Monomial::from_factors({{Symbol::eigenvalue(2), 1}, {Symbol::eigenvalue(1), 2}, {Symbol::eigenvalue(2), -1}});
    EXPECT_EQ(m.to_string(), "t1^2");
    EXPECT_TRUE((m * m.inverse()).is_one());
    EXPECT_EQ(m.pow(3).degree_in(Symbol::eigenvalue(1)), 6);
}

TEST(Laurent, SubstitutionByUnits) {
    // t1 -> t2^-1 in t1 + t1*t2 gives t2^-1 + 1.
    LaurentPoly p = t(1) + t(1) * t(2);
    Symbol t1 = Symbol::eigenvalue(1), t2 = Symbol::eigenvalue(2);
    LaurentPoly q = p.substitute([&](Symbol s) -> std::optional<lsym::Term> {
        if (s == t1) return lsym::Term{Monomial(t2, -1), Cyclotomic(1)};
        return std::nullopt;
    });
    EXPECT_EQ(q, t(2).inverse_unit() + LaurentPoly(1LL));
}

TEST(LaurentProperty, EvaluationIsARingHomomorphism) {
    std::mt19937_64 g(4242);
    oracle::Assignment at;
    at.root_order = 3;
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly a = random_poly(g, 3), b = random_poly(g, 3), c = random_poly(g, 3);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a - a), LaurentPoly());
        EXPECT_LT(oracle::rel_err(oracle::eval(a * b, at), oracle::eval(a, at) * oracle::eval(b, at)), 1e-9);
        EXPECT_LT(oracle::rel_err(oracle::eval(a + c, at), oracle::eval(a, at) + oracle::eval(c, at)), 1e-9);
        // Root reduction keeps the value when t1 = u1^3.
        EXPECT_LT(oracle::rel_err(oracle::eval(a.substitute_roots(), at), oracle::eval(a, at)), 1e-9);
        // Specializing every symbol to 1 is the sum of coefficients.
        Cyclotomic sum;
        for (const auto& term : a.sorted_terms()) sum += term.coeff;
        EXPECT_EQ(a.specialize_all_to_one(), sum);
        EXPECT_EQ(a.hash(), LaurentPoly(a).hash());
    }
}
