#include <gtest/gtest.h>

#include "lsym/derive.hpp"
#include "lsym/errors.hpp"

using namespace lsym;

namespace {

Derivation run(Goal g, int n, int d, int m = 0, int l = 0, std::vector<int> shape = {}) {
    DeriveParams p;
    p.n = n;
    p.d = d;
    p.m = m;
    p.l = l;
    p.shape = std::move(shape);
    return derive(g, p);
}

// Closed forms restated on the test side.
long long formula(Goal g, long long n, long long d, long long m, long long l) {
    switch (g) {
        case Goal::AsaiInduced: return n * (n + 1) * d / 2;
        case Goal::RsInduced: return (1 + 2 * m) * d * n * (n - 1) / 2;
        case Goal::ArchAsai: return d * n;
        case Goal::ArchRs: return m * d * n * (n - 1) - d * (n - 1) * (n - 2) / 2;
        case Goal::ThmA: return m * d * n * (n - 1) - d * (n - 1) * (n - 2) / 2;
        case Goal::ThmB: return d * n;
        case Goal::ThmC: return m * d * n * (n - 1) - d * n * (n + 1) / 2;
        case Goal::ThmE: return d * (m - l) * n * (n - 1);
        case Goal::Delta: return d * n * (n + 1) / 2;
    }
    return 0;
}

PeriodMonomial chi_check_periods(int n, int d) {
    PeriodMonomial out;
    CharExpr chk = CharExpr::of("L", {CharFactor{"chi", "L", true}});
    for (int iota = 1; iota <= d; ++iota)
        for (int i = 1; i <= n; ++i) {
            if (i > 1) out.mul(PeriodAtom::cm_period(chk, {Embedding{"L", iota, i, 0, false}}), i - 1);
            if (i < n) out.mul(PeriodAtom::cm_period(chk, {Embedding{"L", iota, i, 0, true}}), n - i);
        }
    return out;
}

void expect_sound(const Derivation& r) {
    EXPECT_EQ(r.exponent, r.expected);
    EXPECT_EQ(r.residual, r.expected_residual);
    for (const auto& c : r.checks) EXPECT_TRUE(c.ok) << c.name;
    for (const auto& [name, t] : r.traces) EXPECT_EQ(t.replay(), t.final) << name;
    EXPECT_TRUE(r.ok());
}

}  // namespace

TEST(GoalNames, RoundTrip) {
    for (Goal g : all_goals()) EXPECT_EQ(goal_from_string(to_string(g)), g);
    EXPECT_EQ(all_goals().size(), 9u);
    EXPECT_THROW(goal_from_string("ThmZ"), ValidationError);
}

TEST(AsaiInduced, ExponentsAndResiduals) {
    auto two = run(Goal::AsaiInduced, 2, 1);
    EXPECT_EQ(two.exponent, 3);
    EXPECT_EQ(two.residual, chi_check_periods(2, 1));
    auto three = run(Goal::AsaiInduced, 3, 1);
    EXPECT_EQ(three.exponent, 6);
    EXPECT_EQ(three.residual, chi_check_periods(3, 1));
    auto five = run(Goal::AsaiInduced, 5, 2);
    EXPECT_EQ(five.exponent, 30);
    EXPECT_EQ(five.residual, chi_check_periods(5, 2));
    expect_sound(five);
}

TEST(AsaiInduced, AnyGaloisCycleGivesTheSameExponent) {
    for (const auto& c : CycleDatum::all_cycles(4)) {
        DeriveParams p;
        p.n = 4;
        p.d = 1;
        p.cycle = c;
        auto r = derive(Goal::AsaiInduced, p);
        EXPECT_EQ(r.exponent, 10);
        expect_sound(r);
    }
}

TEST(RsInduced, Exponents) {
    EXPECT_EQ(run(Goal::RsInduced, 2, 1, 0).exponent, 1);
    EXPECT_EQ(run(Goal::RsInduced, 3, 1, 1).exponent, 9);
    // Pairs (i, j) with i + j >= n + 1 for ranks n and n - 1 number n(n-1)/2.
    for (int n = 2; n <= 8; ++n) {
        int count = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n - 1; ++j) count += i + j >= n + 1;
        EXPECT_EQ(count, n * (n - 1) / 2);
    }
}

TEST(IsobaricWhittaker, BlockExpansion) {
    auto one = derive_isobaric_whittaker({3});
    EXPECT_EQ(one.final.size(), 1u);
    auto two = derive_isobaric_whittaker({2, 1});
    std::size_t periods = 0, lvalues = 0;
    for (const auto& [atom, e] : two.final.exponents()) {
        periods += atom.kind == AtomKind::Whittaker;
        lvalues += atom.kind == AtomKind::LValue;
    }
    EXPECT_EQ(periods, 2u);
    EXPECT_EQ(lvalues, 1u);
    auto three = derive_isobaric_whittaker({1, 1, 1});
    periods = lvalues = 0;
    for (const auto& [atom, e] : three.final.exponents()) {
        periods += atom.kind == AtomKind::Whittaker;
        lvalues += atom.kind == AtomKind::LValue;
    }
    EXPECT_EQ(periods, 3u);
    EXPECT_EQ(lvalues, 3u);
    EXPECT_THROW(derive_isobaric_whittaker({1, 1}, {true, false}), ValidationError);
}

TEST(ArchAsai, ExponentIsDegreeTimesRank) {
    EXPECT_EQ(run(Goal::ArchAsai, 2, 1).exponent, 2);
    EXPECT_EQ(run(Goal::ArchAsai, 7, 3).exponent, 21);
    for (int m : {0, 1, 2}) {
        auto r = run(Goal::ArchAsai, 4, 2, m);
        EXPECT_EQ(r.exponent, 8);
        expect_sound(r);
    }
    auto with_hyp = run(Goal::ArchAsai, 3, 1, 0);
    EXPECT_EQ(with_hyp.assumptions.size(), 2u);
}

TEST(ArchRs, ResidualCancels) {
    EXPECT_EQ(run(Goal::ArchRs, 2, 1, 0).exponent, 0);
    auto r = run(Goal::ArchRs, 3, 1, 1);
    EXPECT_EQ(r.exponent, 5);
    EXPECT_TRUE(r.residual.is_identity());
    expect_sound(r);
}

TEST(MainFormulas, Examples) {
    EXPECT_EQ(run(Goal::Delta, 3, 1).exponent, 6);
    EXPECT_EQ(run(Goal::Delta, 2, 1).exponent, 3);
    EXPECT_EQ(run(Goal::ThmC, 2, 1, 0).exponent, -3);
    EXPECT_EQ(run(Goal::ThmC, 3, 2, 1).exponent, 0);
    EXPECT_EQ(run(Goal::ThmE, 3, 1, 2, 1).exponent, 6);
    EXPECT_EQ(run(Goal::ThmB, 4, 1).exponent, 4);
    EXPECT_EQ(run(Goal::ThmB, 4, 1, 0, 0, {2, 1, 1}).exponent, 4);
    EXPECT_TRUE(run(Goal::ThmC, 3, 2, 1).residual.is_identity());
}

TEST(MainFormulas, ValidationOfParameters) {
    EXPECT_THROW(run(Goal::ThmA, 1, 1), ValidationError);
    EXPECT_THROW(run(Goal::ThmA, 3, 0), ValidationError);
    EXPECT_THROW(run(Goal::ThmB, 4, 1, 0, 0, {2, 1}), ValidationError);
    EXPECT_THROW(run(Goal::ThmB, 3, 1, 0, 0, {3, 0}), ValidationError);
    DeriveParams p;
    p.n = 3;
    p.cycle = CycleDatum::standard(3);
    EXPECT_THROW(derive(Goal::ThmA, p), ValidationError);
    p.cycle = CycleDatum::standard(4);
    EXPECT_THROW(derive(Goal::AsaiInduced, p), ValidationError);
    EXPECT_NO_THROW(run(Goal::Delta, 1, 1));
}

TEST(MainFormulasProperty, EngineMatchesClosedFormsOnASmallGrid) {
    for (Goal g : all_goals())
        for (int n = 2; n <= 5; ++n)
            for (int d = 1; d <= 2; ++d)
                for (int m = -1; m <= 2; ++m) {
                    int l = g == Goal::ThmE ? 1 - m : 0;
                    auto r = run(g, n, d, m, l);
                    ASSERT_EQ(r.exponent, formula(g, n, d, m, l)) << to_string(g) << " n=" << n << " d=" << d << " m=" << m;
                    ASSERT_EQ(closed_form(g, r.params), formula(g, n, d, m, l));
                    expect_sound(r);
                    if (g == Goal::ArchRs || g == Goal::ThmC) EXPECT_TRUE(r.residual.is_identity());
                }
}

TEST(Interpolation, FiniteDifferenceDegree) {
    EXPECT_EQ(finite_difference_degree({0, 0, 0, 0}), -1);
    EXPECT_EQ(finite_difference_degree({5, 5, 5, 5}), 0);
    EXPECT_EQ(finite_difference_degree({1, 3, 5, 7, 9}), 1);
    EXPECT_EQ(finite_difference_degree({0, 1, 4, 9, 16}), 2);
    EXPECT_EQ(finite_difference_degree({0, 1, 8, 27, 64}), 3);
    EXPECT_EQ(finite_difference_degree({0, 1, 16, 81, 256}), -2);
}

TEST(Interpolation, EngineDegreesMatch) {
    for (Goal g : all_goals()) EXPECT_EQ(engine_degrees(g), expected_degrees(g)) << to_string(g);
}
