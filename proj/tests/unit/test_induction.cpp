#include <gtest/gtest.h>

#include "lsym/errors.hpp"
#include "lsym/induction.hpp"
#include "oracle.hpp"

using lsym::ConjAction;
using lsym::EulerFactorDenom;
using lsym::InducedDatum;
using lsym::LaurentPoly;
using lsym::Symbol;

namespace {

LaurentPoly t(int i) { return LaurentPoly(Symbol::eigenvalue(i)); }

// Numeric Satake parameters of the induced representation, from the definition: every l-th root of the
// place value, twisted by -1 in even degree.
std::vector<oracle::C> induced_values(const InducedDatum& d, const oracle::Assignment& at) {
    std::vector<oracle::C> out;
    for (int i = 1; i <= d.m; ++i) {
        oracle::C u = 1.0;
        if (d.action == ConjAction::SplitV) u = at.root(i);
        if (d.action == ConjAction::InertHalfSwap) u = i <= d.m / 2 ? at.root(i) : 1.0 / at.root(i - d.m / 2);
        for (int a = 1; a <= d.l; ++a) out.push_back((d.n % 2 == 0 ? -1.0 : 1.0) * u * oracle::root_of_unity(a, d.l));
    }
    return out;
}

oracle::C lhs_oracle(const InducedDatum& d, const oracle::Assignment& at, oracle::C x) {
    auto a = induced_values(d, at);
    oracle::C acc = 1.0;
    if (d.action == ConjAction::SplitV) {
        for (auto p : a)
            for (auto q : a) acc *= 1.0 - p / q * x;
        return acc;
    }
    const double gamma = d.n % 2 == 1 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc *= 1.0 - gamma * a[i] * x;
        for (std::size_t j = i + 1; j < a.size(); ++j) acc *= 1.0 - a[i] * a[j] * x * x;
    }
    return acc;
}

}  // namespace

TEST(InducedDatum, RejectsDegenerateAndInconsistentData) {
    EXPECT_THROW((InducedDatum{1, 1, 1, ConjAction::SplitV, 1}).validate(), lsym::ValidationError);
    EXPECT_THROW((InducedDatum{4, 3, 1, ConjAction::SplitV, 1}).validate(), lsym::ValidationError);
    EXPECT_THROW((InducedDatum{3, 3, 1, ConjAction::InertHalfSwap, 1}).validate(), lsym::ValidationError);
    EXPECT_THROW(lsym::conj_action_from_string("sideways"), lsym::ValidationError);
}

TEST(InducedDatum, GridListsEveryAdmissibleCase) {
    auto grid = lsym::induced_grid(6);
    std::size_t want = 0;
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m <= n; ++m) {
            if (n % m) continue;
            want += 1 + ((n / m) % 2 == 1) + (m % 2 == 0);
        }
    EXPECT_EQ(grid.size(), want);
    bool has_half_swap_422 = false;
    for (const auto& d : lsym::induced_grid(4))
        has_half_swap_422 |= d.n == 4 && d.m == 2 && d.l == 2 && d.action == ConjAction::InertHalfSwap;
    EXPECT_TRUE(has_half_swap_422);
}

TEST(InducedEigenvalues, NoRootsWhenResidueDegreeIsOne) {
    InducedDatum d{3, 3, 1, ConjAction::SplitV, 1};
    EXPECT_EQ(lsym::induced_eigenvalues(d), (lsym::Multiset{t(1), t(2), t(3)}));
}

TEST(InducedEigenvalues, SquareRootsComeInSignPairs) {
    InducedDatum d{2, 1, 2, ConjAction::SplitV, 1};
    LaurentPoly u(Symbol::root(1, 2));
    auto e = lsym::induced_eigenvalues(d);
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(e[0], u);
    EXPECT_EQ(e[1], -u);
}

TEST(InducedFactor, AllFixedOddDegreeClosedForm) {
    InducedDatum d{3, 3, 1, ConjAction::InertAllFixed, 1};
    EulerFactorDenom want;
    for (int i = 0; i < 3; ++i) want.mul_linear(LaurentPoly(-1LL), 1);
    for (int i = 0; i < 3; ++i) want.mul_linear(LaurentPoly(1LL), 2);
    EXPECT_EQ(lsym::prop34_lhs(d), want);
    EXPECT_EQ(lsym::all_fixed_closed_form(3, 1), want);
    EXPECT_TRUE(lsym::verify_prop34(d).equal);
}

TEST(InducedFactor, SplitDegreeTwoIsAllOrderedRatios) {
    InducedDatum d{2, 2, 1, ConjAction::SplitV, 1};
    EulerFactorDenom want;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) want.mul_linear(t(i) * t(j).inverse_unit(), 1);
    EXPECT_EQ(lsym::prop34_rhs(d), want);
    EXPECT_EQ(lsym::prop34_lhs(d), want);
}

TEST(InducedFactor, DegreeFourCasesWithRoots) {
    EXPECT_TRUE(lsym::verify_prop34({4, 2, 2, ConjAction::SplitV, 1}).equal);
    auto r = lsym::verify_prop34({4, 2, 2, ConjAction::InertHalfSwap, 1});
    EXPECT_TRUE(r.equal);
    bool saw_sqrt = false;
    for (const auto& [name, ok] : r.checks) saw_sqrt |= name == "sqrt_matches_pair_product" && ok;
    EXPECT_TRUE(saw_sqrt);
}

TEST(InducedFactorProperty, RightSideMatchesNumericLeftSideOverTheGrid) {
    for (const auto& d : lsym::induced_grid(6)) {
        oracle::Assignment at;
        at.root_order = d.l;
        at.salt = 17;
        EulerFactorDenom rhs = lsym::prop34_rhs(d);
        EXPECT_EQ(rhs.degree(), d.n * d.n) << d.label();
        for (oracle::C x : {oracle::C(0.21, 0.05), oracle::C(-0.4, 0.33)})
            EXPECT_LT(oracle::rel_err(oracle::eval(rhs, x, at), lhs_oracle(d, at, x)), 1e-8) << d.label();
    }
}

TEST(InducedFactorProperty, ExactIdentityHoldsOverTheGrid) {
    for (const auto& d : lsym::induced_grid(5)) EXPECT_TRUE(lsym::verify_prop34(d).equal) << d.label();
}
