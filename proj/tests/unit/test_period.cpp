#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "lsym/errors.hpp"
#include "lsym/period.hpp"

using namespace lsym;

namespace {

Embedding emb(int iota, bool bar, const std::string& field = "F") { return Embedding{field, iota, 0, 0, bar}; }

CharExpr base(const std::string& name, bool check = false) { return CharExpr::of("F", {CharFactor{name, "F", check}}); }

// s^k(i) by walking the permutation, independent of CycleDatum::apply.
int walk(const CycleDatum& c, int i, int k) {
    for (int step = 0; step < k; ++step) i = c.s[static_cast<std::size_t>(i - 1)];
    return i;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Cycle, DescentExamples) {
    CycleDatum c{4, {3, 4, 2, 1}};  // 1 -> 3 -> 2 -> 4 -> 1
    c.validate();
    EXPECT_EQ(count_descents(c, 1), 0);
    EXPECT_EQ(count_descents(c, 3), 2);
    EXPECT_EQ(count_descents(c, 4), 3);
}

TEST(Cycle, RejectsPermutationsThatAreNotFullCycles) {
    EXPECT_THROW((CycleDatum{3, {2, 1, 3}}).validate(), ValidationError);
    EXPECT_THROW((CycleDatum{3, {1, 1, 2}}).validate(), ValidationError);
    EXPECT_THROW((CycleDatum{3, {2, 3}}).validate(), ValidationError);
    EXPECT_NO_THROW(CycleDatum::standard(5).validate());
}

TEST(Cycle, EnumerationAndSampling) {
    for (int n = 1; n <= 7; ++n) {
        auto all = CycleDatum::all_cycles(n);
        EXPECT_EQ(static_cast<long long>(all.size()), factorial(n - 1));
        std::set<std::vector<int>> unique;
        for (const auto& c : all) unique.insert(c.s);
        EXPECT_EQ(unique.size(), all.size());
    }
    auto a = CycleDatum::random(10, 5), b = CycleDatum::random(10, 5);
    EXPECT_EQ(a.s, b.s);
    EXPECT_NO_THROW(a.validate());
}

TEST(CycleProperty, DescentsCountSmallerIndices) {
    for (int n = 2; n <= 7; ++n)
        for (const auto& c : CycleDatum::all_cycles(n))
            for (int i = 1; i <= n; ++i) {
                int below = 0;
                for (int k = 1; k < n; ++k) below += walk(c, i, k) < i;
                ASSERT_EQ(count_descents(c, i), below);
                ASSERT_EQ(count_descents(c, i), i - 1);
                ASSERT_EQ(c.apply(i, n - 1), walk(c, i, n - 1));
                ASSERT_EQ(c.apply(i, -1), walk(c, i, n - 1));
            }
}

TEST(CycleProperty, InducedTypesPartitionTheIndices) {
    auto two = cm_types_induced(CycleDatum::standard(2), 1);
    EXPECT_EQ(two.top, std::vector<int>{2});
    EXPECT_EQ(two.bottom, std::vector<int>{1});
    for (int n = 2; n <= 6; ++n)
        for (const auto& c : CycleDatum::all_cycles(n))
            for (int k = 1; k < n; ++k) {
                auto t = cm_types_induced(c, k);
                ASSERT_EQ(t.top.size() + t.bottom.size(), static_cast<std::size_t>(n));
                for (int i : t.top) ASSERT_GT(i, walk(c, i, k));
                for (int i : t.bottom) ASSERT_LT(i, walk(c, i, k));
                // The k-th top set is the (n-k)-th bottom set translated by s^(n-k).
                auto u = cm_types_induced(c, n - k);
                std::vector<int> moved;
                for (int i : u.bottom) moved.push_back(walk(c, i, n - k));
                std::sort(moved.begin(), moved.end());
                std::vector<int> top = t.top;
                std::sort(top.begin(), top.end());
                ASSERT_EQ(top, moved);
            }
}

TEST(CharExpr, CanonicalFormMergesFactors) {
    auto e = CharExpr::of("F", {CharFactor{"phi", "F"}, CharFactor{"norm", "F"}, CharFactor{"phi", "F", false, false, 0, 2}});
    ASSERT_EQ(e.factors.size(), 2u);
    EXPECT_EQ(e.factors[1].name, "phi");
    EXPECT_EQ(e.factors[1].power, 3);
    auto z = CharExpr::of("F", {CharFactor{"phi", "F"}, CharFactor{"phi", "F", false, false, 0, -1}});
    EXPECT_TRUE(z.factors.empty());
    EXPECT_EQ(e.dual().dual(), e);
}

TEST(PeriodMonomial, GroupOperations) {
    PeriodMonomial a(PeriodAtom::whittaker("Pi"), 2);
    a.mul(PeriodAtom::two_pi_i(), 3);
    EXPECT_EQ(a.two_pi_exponent(), 3);
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(a.pow(2).exponent(PeriodAtom::whittaker("Pi")), 4);
    EXPECT_EQ(PeriodMonomial().to_string(), "1");
    EXPECT_EQ(a.without_two_pi_i(), PeriodMonomial(PeriodAtom::whittaker("Pi"), 2));
}

TEST(FieldTag, JoinIsASemilattice) {
    FieldTag a{"E(chi)"}, b{"L^Gal"};
    FieldTag ab = FieldTag(a).join(b);
    EXPECT_TRUE(ab.contains(a));
    EXPECT_TRUE(ab.contains(b));
    EXPECT_EQ(FieldTag(ab).join(a), ab);
    EXPECT_EQ(FieldTag().to_string(), "Q");
    EXPECT_EQ(ab.to_string(), "E(chi),L^Gal");
}

TEST(Blasius, OneNegativeExponentAtDegreeOne) {
    PeriodContext ctx(1);
    ctx.add_standard_base_characters();
    ctx.add_character(CharDesc{"chi", "F", {{emb(1, false), -1}, {emb(1, true), 0}}});
    auto one = rule_blasius(ctx, PeriodAtom::hecke_l(1, base("chi")));
    PeriodMonomial want = PeriodMonomial::two_pi_i(1);
    want.mul(PeriodAtom::cm_period(base("chi", true), {emb(1, false)}), 1);
    EXPECT_EQ(one, want);
    auto zero = rule_blasius(ctx, PeriodAtom::hecke_l(0, base("chi")));
    EXPECT_EQ(zero.two_pi_exponent(), 0);
    EXPECT_EQ(zero, PeriodMonomial(PeriodAtom::cm_period(base("chi", true), {emb(1, false)})));
}

TEST(Blasius, RejectsNonCriticalCharactersAndPoints) {
    PeriodContext ctx(1);
    ctx.add_standard_base_characters();
    EXPECT_THROW(rule_blasius(ctx, PeriodAtom::hecke_l(1, base("norm"))), ValidationError);
    EXPECT_THROW(rule_blasius(ctx, PeriodAtom::hecke_l(BigRational(1, 2), base("phi"))), ValidationError);
}

TEST(ZetaValues, EvenZetaAndOddQuadratic) {
    PeriodContext one(1), three(3);
    EXPECT_EQ(apply_zeta_rule(one, PeriodAtom::dedekind_zeta(2, "F")), PeriodMonomial::two_pi_i(2));
    EXPECT_EQ(apply_zeta_rule(three, PeriodAtom::quadratic_l(1, "F")), PeriodMonomial::two_pi_i(3));
    EXPECT_FALSE(apply_zeta_rule(one, PeriodAtom::dedekind_zeta(3, "F")).has_value());
    EXPECT_FALSE(apply_zeta_rule(one, PeriodAtom::quadratic_l(2, "F")).has_value());
}

TEST(Rewriter, StructuralRelations) {
    PeriodContext ctx(2);
    ctx.add_standard_base_characters();
    ctx.add_character(CharDesc{"chi", "F", {{emb(1, false), -1}, {emb(1, true), 2}, {emb(2, false), 0}, {emb(2, true), 1}}});
    Rewriter rw(ctx, kHecke);

    // partition
    auto split = rw.run(PeriodMonomial(PeriodAtom::cm_period(base("chi"), {emb(1, false), emb(2, false)})));
    PeriodMonomial want(PeriodAtom::cm_period(base("chi"), {emb(1, false)}));
    want.mul(PeriodAtom::cm_period(base("chi"), {emb(2, false)}), 1);
    EXPECT_EQ(split.final, want);

    // the norm character
    auto norm = rw.run(PeriodMonomial(PeriodAtom::cm_period(base("norm"), {emb(1, false)})));
    EXPECT_EQ(norm.final, PeriodMonomial::two_pi_i(-1));

    // pairing of phi-check at a conjugate pair
    PeriodMonomial pair(PeriodAtom::cm_period(base("phi", true), {emb(1, false)}));
    pair.mul(PeriodAtom::cm_period(base("phi", true), {emb(1, true)}), 1);
    auto paired = rw.run(pair);
    EXPECT_EQ(paired.final, PeriodMonomial::two_pi_i(1));
    EXPECT_EQ(paired.replay(), paired.final);
    EXPECT_TRUE(paired.measure_decreases(ctx));

    // finite-order characters have trivial periods
    auto triv = rw.run(PeriodMonomial(PeriodAtom::cm_period(base("triv"), {emb(1, false)}), 3));
    EXPECT_TRUE(triv.final.is_identity());
}

TEST(Rewriter, BlasiusThenPartitionInsideOneRun) {
    PeriodContext ctx(2);
    ctx.add_standard_base_characters();
    auto t = Rewriter(ctx, kHecke).run(PeriodMonomial(PeriodAtom::hecke_l(2, base("phi"))));
    // phi has exponents (1, 0), so its CM type is the conjugate embeddings, one per place.
    EXPECT_EQ(t.final.two_pi_exponent(), 4);
    EXPECT_EQ(t.final.without_two_pi_i().size(), 2u);
    EXPECT_EQ(t.replay(), t.final);
    EXPECT_TRUE(t.measure_decreases(ctx));
}

TEST(Rules, RegistryNamesAreUnique) {
    std::set<std::string> names;
    for (const auto& r : all_rules()) EXPECT_TRUE(names.insert(r.name).second) << r.name;
    for (const auto& r : rule_cm_relations()) EXPECT_TRUE(names.count(r.name)) << r.name;
    for (const auto& r : rule_zeta_values()) EXPECT_TRUE(names.count(r.name)) << r.name;
}
