#include <gtest/gtest.h>

#include <set>

#include "lsym/errors.hpp"
#include "lsym/satake.hpp"
#include "oracle.hpp"

using lsym::EulerFactorDenom;
using lsym::LaurentPoly;
using lsym::Multiset;
using lsym::PlaceKind;
using lsym::Symbol;

namespace {

LaurentPoly t(int i) { return LaurentPoly(Symbol::eigenvalue(i)); }
LaurentPoly x(int block) { return LaurentPoly(Symbol::char_value(block, 1)); }

EulerFactorDenom from_linear(const Multiset& eigs, int f) {
    EulerFactorDenom e;
    for (const auto& v : eigs) e.mul_linear(v, f);
    return e;
}

const std::vector<oracle::C> kPoints{{0.31, 0.12}, {-0.55, 0.47}, {0.9, -0.35}};

}  // namespace

TEST(LocalFactor, RankinSelbergOfTrivialAndSelfPairing) {
    EXPECT_EQ(lsym::rs_local_factor({LaurentPoly(1LL)}, {LaurentPoly(1LL)}, 1).to_string(), "1 - X");
    EXPECT_EQ(lsym::rs_local_factor({t(1)}, {t(1).inverse_unit()}, 1).to_string(), "1 - X");
}

TEST(LocalFactor, RankinSelbergTensorThenExpand) {
    LaurentPoly s1(Symbol::named("s1"));
    EulerFactorDenom want = from_linear({t(1) * s1, t(2) * s1}, 2);
    EXPECT_EQ(lsym::rs_local_factor({t(1), t(2)}, {s1}, 2), want);
    EXPECT_THROW(lsym::rs_local_factor({}, {s1}, 1), lsym::ValidationError);
}

TEST(LocalFactor, SplitTwistedTensor) {
    EXPECT_EQ(lsym::asai_local_factor_split({LaurentPoly(1LL)}, {LaurentPoly(1LL)}).to_string(), "1 - X");
    EXPECT_EQ(lsym::asai_local_factor_split({t(1)}, {t(1).inverse_unit()}).to_string(), "1 - X");
    LaurentPoly r12 = t(1) * t(2).inverse_unit();
    EulerFactorDenom want = from_linear({LaurentPoly(1LL), LaurentPoly(1LL), r12, r12.inverse_unit()}, 1);
    EXPECT_EQ(lsym::asai_local_factor_split({t(1), t(2)}, {t(1).inverse_unit(), t(2).inverse_unit()}), want);
    EXPECT_THROW(lsym::asai_local_factor_split({t(1)}, {t(1), t(2)}), lsym::ValidationError);
}

TEST(LocalFactor, InertTwistedTensor) {
    using lsym::UnramifiedChar;
    EXPECT_EQ(lsym::asai_local_factor_inert({{UnramifiedChar{LaurentPoly(1LL), true}}}, -1).to_string(), "1 + X");
    EulerFactorDenom want = from_linear({x(1), x(2)}, 1);
    want.mul_linear(x(1) * x(2), 2);
    auto separate = lsym::asai_local_factor_inert({{UnramifiedChar{x(1), true}}, {UnramifiedChar{x(2), true}}}, 1);
    auto together = lsym::asai_local_factor_inert({{UnramifiedChar{x(1), true}, UnramifiedChar{x(2), true}}}, 1);
    EXPECT_EQ(separate, want);
    EXPECT_EQ(together, want);
    EXPECT_THROW(lsym::asai_local_factor_inert({{UnramifiedChar{x(1), true}}}, 2), lsym::ValidationError);
}

TEST(Compositions, CountIsTwoToTheNMinusOne) {
    for (int n = 1; n <= 9; ++n) {
        auto all = lsym::compositions(n);
        EXPECT_EQ(all.size(), std::size_t{1} << (n - 1));
        std::set<std::vector<int>> unique(all.begin(), all.end());
        EXPECT_EQ(unique.size(), all.size());
        for (const auto& c : all) {
            int sum = 0;
            for (int p : c) {
                EXPECT_GT(p, 0);
                sum += p;
            }
            EXPECT_EQ(sum, n);
        }
    }
    EXPECT_THROW(lsym::compositions(0), lsym::ValidationError);
}

TEST(IsobaricFactorization, SmallCases) {
    for (PlaceKind k : {PlaceKind::Split, PlaceKind::Inert}) {
        for (int n1 = 1; n1 <= 4; ++n1) EXPECT_TRUE(lsym::verify_lemma32({n1}, k).equal);
        EXPECT_TRUE(lsym::verify_lemma32({1, 1}, k).equal);
    }
    auto r = lsym::verify_lemma32({2, 1}, PlaceKind::Inert);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.degree, 9);
    EXPECT_EQ(r.case_id, "lemma32:inert:2+1");
    EXPECT_THROW(lsym::verify_lemma32({}, PlaceKind::Split), lsym::ValidationError);
    EXPECT_THROW(lsym::verify_lemma32({2, 0}, PlaceKind::Split), lsym::ValidationError);
}

// The library's split-place factor of an isobaric sum against the product over all pairs of inducing
// character values, computed numerically from the block data.
TEST(IsobaricFactorizationProperty, SplitFactorMatchesPairProduct) {
    oracle::Assignment at;
    for (int n = 1; n <= 4; ++n)
        for (const auto& parts : lsym::compositions(n)) {
            Multiset w1, w2;
            std::vector<oracle::C> v1, v2;
            for (std::size_t b = 0; b < parts.size(); ++b) {
                auto [a1, a2] = lsym::split_block_data(static_cast<int>(b) + 1, parts[b]);
                for (int r = 1; r <= parts[b]; ++r) {
                    oracle::C c = at.char_value(static_cast<int>(b) + 1, r);
                    v1.push_back(c);
                    v2.push_back(1.0 / c);
                }
                w1.insert(w1.end(), a1.begin(), a1.end());
                w2.insert(w2.end(), a2.begin(), a2.end());
            }
            std::vector<oracle::C> pairs;
            for (auto a : v1)
                for (auto b : v2) pairs.push_back(a * b);
            EulerFactorDenom lib = lsym::asai_local_factor_split(w1, w2);
            for (auto p : kPoints) EXPECT_LT(oracle::rel_err(oracle::eval(lib, p, at), oracle::linear_product(pairs, p, 1)), 1e-9);
        }
}

TEST(IsobaricFactorizationProperty, InertFactorMatchesDiagonalAndPairProduct) {
    oracle::Assignment at;
    for (int n = 1; n <= 5; ++n)
        for (const auto& parts : lsym::compositions(n)) {
            std::vector<std::vector<lsym::UnramifiedChar>> blocks;
            std::vector<oracle::C> chars;
            for (std::size_t b = 0; b < parts.size(); ++b) {
                const int block = static_cast<int>(b) + 1;
                blocks.push_back(lsym::inert_block_data(block, parts[b], b % 2 == 0 ? 1 : -1));
                for (const auto& c : blocks.back()) chars.push_back(oracle::eval(c.eigenvalue, at));
            }
            const int sign = lsym::gamma_sign(n);
            EulerFactorDenom lib = lsym::asai_local_factor_inert(blocks, sign);
            for (auto p : kPoints) {
                oracle::C want = 1.0;
                for (std::size_t i = 0; i < chars.size(); ++i) {
                    want *= 1.0 - static_cast<double>(sign) * chars[i] * p;
                    for (std::size_t j = i + 1; j < chars.size(); ++j) want *= 1.0 - chars[i] * chars[j] * p * p;
                }
                EXPECT_LT(oracle::rel_err(oracle::eval(lib, p, at), want), 1e-9);
            }
            EXPECT_TRUE(lsym::verify_lemma32(parts, PlaceKind::Inert).equal);
            EXPECT_TRUE(lsym::verify_lemma32(parts, PlaceKind::Split).equal);
        }
}
