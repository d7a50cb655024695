#include "lsym/satake.hpp"

#include <chrono>
#include <tuple>

#include "lsym/errors.hpp"

namespace lsym {

std::string to_string(PlaceKind k) { return k == PlaceKind::Split ? "split" : "inert"; }

PlaceKind place_kind_from_string(const std::string& s) {
    if (s == "split") return PlaceKind::Split;
    if (s == "inert") return PlaceKind::Inert;
    throw ValidationError("unknown place kind '" + s + "'");
}

EulerFactorDenom rs_local_factor(const Multiset& a, const Multiset& b, int f) {
    if (a.empty() || b.empty()) throw ValidationError("Rankin-Selberg factor needs nonempty Satake data");
    return euler_from_eigenvalues(tensor_eigenvalues(a, b), f);
}

EulerFactorDenom asai_local_factor_split(const Multiset& at_w1, const Multiset& at_w2) {
    if (at_w1.size() != at_w2.size())
        throw ValidationError("split twisted tensor factor needs equal ranks at both places");
    return euler_from_eigenvalues(tensor_eigenvalues(at_w1, at_w2), 1);
}

EulerFactorDenom asai_local_factor_inert(const std::vector<std::vector<UnramifiedChar>>& blocks, int sign) {
    if (sign != 1 && sign != -1) throw ValidationError("twisting sign must be +1 or -1");
    Multiset chars;
    for (const auto& b : blocks)
        for (const auto& c : b) chars.push_back(c.eigenvalue);
    if (chars.empty()) throw ValidationError("inert twisted tensor factor needs at least one character");
    EulerFactorDenom e;
    const Cyclotomic s(sign);
    for (const auto& x : chars) e.mul_linear(LaurentPoly(x).scale(s), 1);
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = i + 1; j < chars.size(); ++j) e.mul_linear(chars[i] * chars[j], 2);
    return e;
}

int gamma_sign(int n) { return n % 2 == 0 ? 1 : -1; }

std::pair<Multiset, Multiset> split_block_data(int block, int size) {
    Multiset w1, w2;
    for (int r = 1; r <= size; ++r) {
        LaurentPoly x(Symbol::char_value(block, r));
        w1.push_back(x);
        w2.push_back(x.inverse_unit());
    }
    return {w1, w2};
}

std::vector<UnramifiedChar> inert_block_data(int block, int size, int central_sign) {
    std::vector<UnramifiedChar> out;
    for (int r = 1; r <= size / 2; ++r) {
        LaurentPoly x(Symbol::char_value(block, r));
        out.push_back({x, true});
        out.push_back({x.inverse_unit(), true});
    }
    if (size % 2 == 1) out.push_back({LaurentPoly(static_cast<long long>(central_sign)), true});
    return out;
}

namespace {

Multiset inverses(const Multiset& a) {
    Multiset out;
    out.reserve(a.size());
    for (const auto& x : a) out.push_back(x.inverse_unit());
    return out;
}

Multiset values(const std::vector<UnramifiedChar>& block) {
    Multiset out;
    for (const auto& c : block) out.push_back(c.eigenvalue);
    return out;
}

std::string parts_label(const std::vector<int>& parts) {
    std::string s;
    for (int p : parts) s += (s.empty() ? "" : "+") + std::to_string(p);
    return s;
}

}  // namespace

VerificationReport verify_lemma32(const std::vector<int>& parts, PlaceKind kind) {
    if (parts.empty()) throw ValidationError("partition must have at least one part");
    int n = 0;
    for (int p : parts) {
        if (p <= 0) throw ValidationError("partition parts must be positive");
        n += p;
    }
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.case_id = "lemma32:" + to_string(kind) + ":" + parts_label(parts);
    const std::size_t k = parts.size();
    EulerFactorDenom lhs, rhs;

    if (kind == PlaceKind::Split) {
        std::vector<Multiset> a1(k), a2(k);
        Multiset all1, all2;
        for (std::size_t i = 0; i < k; ++i) {
            std::tie(a1[i], a2[i]) = split_block_data(static_cast<int>(i) + 1, parts[i]);
            all1.insert(all1.end(), a1[i].begin(), a1[i].end());
            all2.insert(all2.end(), a2[i].begin(), a2[i].end());
        }
        lhs = asai_local_factor_split(all1, all2);
        for (std::size_t i = 0; i < k; ++i) rhs *= asai_local_factor_split(a1[i], a2[i]);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                rhs *= rs_local_factor(a1[i], inverses(a1[j]), 1);
                rhs *= rs_local_factor(a2[i], inverses(a2[j]), 1);
            }
        auto ones = lhs.specialize_all_to_one();
        EulerFactorDenom expect = euler_from_eigenvalues(Multiset(static_cast<std::size_t>(n * n), LaurentPoly(1LL)), 1);
        bool spec_ok = ones == expect.specialize_all_to_one() && rhs.specialize_all_to_one() == ones;
        rep.checks.emplace_back("specialize_to_one", spec_ok);
    } else {
        std::vector<std::vector<UnramifiedChar>> blocks(k);
        for (std::size_t i = 0; i < k; ++i) blocks[i] = inert_block_data(static_cast<int>(i) + 1, parts[i], i % 2 == 0 ? 1 : -1);
        const int g = gamma_sign(n);
        lhs = asai_local_factor_inert(blocks, g);
        EulerFactorDenom cross;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) cross *= rs_local_factor(values(blocks[i]), inverses(values(blocks[j])), 2);
        rhs = cross;
        for (std::size_t i = 0; i < k; ++i) rhs *= asai_local_factor_inert({blocks[i]}, g);
        // the same identity with each block replaced by its algebraic twist and its own twisting sign
        EulerFactorDenom alg = cross;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<UnramifiedChar> twisted = blocks[i];
            if ((n - parts[i]) % 2 != 0)
                for (auto& c : twisted) c.eigenvalue = -c.eigenvalue;
            alg *= asai_local_factor_inert({twisted}, gamma_sign(parts[i]));
        }
        rep.checks.emplace_back("algebraic_twist_form", alg == lhs);
    }

    rep.degree = lhs.degree();
    rep.checks.emplace_back("degree_n_squared", lhs.degree() == n * n && rhs.degree() == n * n);
    rep.lhs = lhs.canonical();
    rep.rhs = rhs.canonical();
    rep.equal = lhs == rhs;
    rep.checks.insert(rep.checks.begin(), {"lhs_equals_rhs", rep.equal});
    for (const auto& [name, ok] : rep.checks) rep.equal = rep.equal && ok;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<std::vector<int>> compositions(int n) {
    if (n < 1) throw ValidationError("compositions need n >= 1");
    std::vector<std::vector<int>> out;
    // bit b of mask set means a cut after position b+1
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int b = 0; b < n - 1; ++b) {
            if (mask & (1u << b)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(std::move(parts));
    }
    return out;
}

}  // namespace lsym
