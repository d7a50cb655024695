#include "lsym/derive.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <tuple>

#include "lsym/errors.hpp"
#include "lsym/weights.hpp"

namespace lsym {

namespace {

const BigRational kHalf(1, 2);

BigRational rs_point(int m) { return kHalf + BigRational(m); }

// Exponents of the character inducing the larger representation: 2(n - i), strictly decreasing.
std::vector<int> upper_exponents(int n) {
    std::vector<int> a;
    for (int i = 1; i <= n; ++i) a.push_back(2 * (n - i));
    return a;
}

// Exponents interlacing with upper_exponents(n + 1) after the phi shift: 1 - 2j.
std::vector<int> lower_exponents(int n) {
    std::vector<int> b;
    for (int j = 1; j <= n; ++j) b.push_back(1 - 2 * j);
    return b;
}

void add_induced(PeriodContext& ctx, const std::string& field, int n, const CycleDatum& cycle, const std::string& chr,
                 const std::vector<int>& a, const std::string& rep, const std::string& arch) {
    ctx.add_cyclic_field(field, n, cycle);
    ctx.add_self_dual_character(chr, field, a);
    RepDesc r;
    r.label = rep;
    r.kind = RepKind::Induced;
    r.rank = n;
    r.arch = arch;
    r.character = chr;
    r.field = field;
    ctx.add_rep(std::move(r));
}

void add_cuspidal(PeriodContext& ctx, const std::string& label, int rank, const std::string& arch) {
    RepDesc r;
    r.label = label;
    r.kind = RepKind::Cuspidal;
    r.rank = rank;
    r.arch = arch;
    ctx.add_rep(std::move(r));
}

// p(chi^v, iota_i)^{i-1} p(chi^v, iota_i c)^{n-i} over every iota.
PeriodMonomial asai_residual(const PeriodContext& ctx, const std::string& chr, const std::string& field) {
    const int n = ctx.field(field).n;
    auto expr = CharExpr::of(field, {{chr, field, true}});
    PeriodMonomial out;
    for (const auto& e : ctx.embeddings(field)) out.mul(PeriodAtom::cm_period(expr, {e}), e.bar ? n - e.i : e.i - 1);
    return out;
}

void merge_assumptions(std::vector<std::string>& into, const std::vector<std::string>& from) {
    for (const auto& s : from)
        if (std::find(into.begin(), into.end(), s) == into.end()) into.push_back(s);
}

void add_trace(Derivation& out, const PeriodContext& ctx, std::string name, DerivationTrace t) {
    out.checks.push_back({name + ".replay", t.replay() == t.final});
    out.checks.push_back({name + ".terminates", t.measure_decreases(ctx)});
    FieldTag joined = t.joined_tag();
    bool monotone = true;
    for (const auto& s : t.steps) monotone = monotone && joined.contains(s.tag);
    out.checks.push_back({name + ".tag", monotone});
    out.tag.join(joined);
    merge_assumptions(out.assumptions, t.assumptions);
    out.traces.emplace_back(std::move(name), std::move(t));
}

// Solve relation ~ 1 for the target atom: target ~ (2 pi i)^e. Nullopt when other atoms remain or the
// exponent does not divide.
std::optional<long long> solve_for(const PeriodMonomial& relation, const PeriodAtom& target) {
    long long k = relation.exponent(target);
    if (k == 0) return std::nullopt;
    PeriodMonomial rest = relation.without_two_pi_i();
    rest.mul(target, -k);
    if (!rest.is_identity()) return std::nullopt;
    long long t = relation.two_pi_exponent();
    if (t % k != 0) return std::nullopt;
    return -t / k;
}

struct ArchValue {
    long long exponent = 0;
    std::vector<std::string> assumptions;
};

Derivation derive_arch_asai_impl(const DeriveParams& p);
Derivation derive_arch_rs_impl(const DeriveParams& p);

// Archimedean lemmas reused across goals, computed once per parameter tuple.
ArchValue cached_arch(Goal g, int n, int m, int d) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int>, ArchValue> cache;
    auto key = std::make_tuple(static_cast<int>(g), n, m, d);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    DeriveParams p;
    p.n = n;
    p.m = m;
    p.d = d;
    Derivation r = g == Goal::ArchAsai ? derive_arch_asai_impl(p) : derive_arch_rs_impl(p);
    if (!r.ok()) throw MathError("archimedean lemma " + to_string(g) + " failed at n=" + std::to_string(n) + " d=" + std::to_string(d));
    ArchValue v{r.exponent, r.assumptions};
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, v);
    return v;
}

void set_arch_asai(PeriodContext& ctx, const std::string& arch, int n, int d) {
    auto v = cached_arch(Goal::ArchAsai, n, 1, d);
    ctx.set_arch_value(PeriodAtom::arch_asai(arch), PeriodMonomial::two_pi_i(v.exponent), v.assumptions);
}

void set_arch_rs(PeriodContext& ctx, const std::string& a1, const std::string& a2, int n, int m, int d) {
    auto v = cached_arch(Goal::ArchRs, n, m, d);
    ctx.set_arch_value(PeriodAtom::arch_rs(BigRational(m), a1, a2), PeriodMonomial::two_pi_i(v.exponent), v.assumptions);
}

void finish(Derivation& out, const PeriodMonomial& value) {
    out.exponent = value.two_pi_exponent();
    out.residual = value.without_two_pi_i();
    out.expected = closed_form(out.goal, out.params);
}

Derivation derive_asai_induced_impl(const DeriveParams& p) {
    Derivation out;
    out.goal = Goal::AsaiInduced;
    out.params = p;
    PeriodContext ctx(p.d);
    ctx.add_standard_base_characters();
    CycleDatum cycle = p.cycle ? *p.cycle : CycleDatum::standard(p.n);
    add_induced(ctx, "L", p.n, cycle, "chi", upper_exponents(p.n), "Pi_chi", "Pi_chi_inf");

    Rewriter rw(ctx, kFactorization | kHecke);
    auto t = rw.run(PeriodMonomial(PeriodAtom::asai_l(1, "Pi_chi")));
    PeriodMonomial value = t.final;
    add_trace(out, ctx, "asai", std::move(t));

    bool types_ok = true;
    for (int k = 1; k < p.n; ++k) {
        auto expected = cm_types_induced(cycle, k);
        auto chr = CharExpr::of("L", {{"chi", "L"}, {"chi", "L", false, true, k}});
        std::vector<Embedding> want;
        for (int iota = 1; iota <= p.d; ++iota) {
            for (int i : expected.top) want.push_back({"L", iota, i, 0, false});
            for (int i : expected.bottom) want.push_back({"L", iota, i, 0, true});
        }
        std::sort(want.begin(), want.end());
        types_ok = types_ok && ctx.cm_type(chr) == want;
    }
    out.checks.push_back({"cm_types", types_ok});
    out.expected_residual = asai_residual(ctx, "chi", "L");
    finish(out, value);
    return out;
}

Derivation derive_rs_induced_impl(const DeriveParams& p) {
    Derivation out;
    out.goal = Goal::RsInduced;
    out.params = p;
    const int n = p.n;
    PeriodContext ctx(p.d);
    ctx.add_standard_base_characters();
    add_induced(ctx, "L", n, CycleDatum::standard(n), "chi", upper_exponents(n), "Pi_chi", "Pi_chi_inf");
    add_induced(ctx, "L'", n - 1, CycleDatum::standard(n - 1), "chi'", lower_exponents(n - 1), "Pi_chi'", "Pi_chi'_inf");
    ctx.add_compositum("LL'", "L", "L'");

    auto chr = CharExpr::of("LL'", {{"chi", "L"}, {"chi'", "L'"}, {"phi", "F"}});
    long long in_type = 0;
    for (const auto& e : ctx.cm_type(chr))
        if (!e.bar) ++in_type;
    out.checks.push_back({"cm_type_count", in_type == static_cast<long long>(p.d) * n * (n - 1) / 2});

    Rewriter rw(ctx, kFactorization | kHecke);
    rw.pair_self_dual({"chi'"});
    auto t = rw.run(PeriodMonomial(PeriodAtom::rs_l(rs_point(p.m), "Pi_chi", "Pi_chi'")));
    PeriodMonomial value = t.final;
    add_trace(out, ctx, "rankin_selberg", std::move(t));
    out.expected_residual = asai_residual(ctx, "chi", "L") * asai_residual(ctx, "chi'", "L'");
    finish(out, value);
    return out;
}

Derivation derive_arch_asai_impl(const DeriveParams& p) {
    Derivation out;
    out.goal = Goal::ArchAsai;
    out.params = p;
    const int n = p.n;
    PeriodContext ctx(p.d);
    ctx.add_standard_base_characters();
    add_induced(ctx, "Ls", n + 1, CycleDatum::standard(n + 1), "chis", upper_exponents(n + 1), "Pi_sharp", "Pi_sharp_inf");
    add_induced(ctx, "L", n, CycleDatum::standard(n), "chi", lower_exponents(n), "Pi_chi", "Pi_inf");
    ctx.add_compositum("LsL", "Ls", "L");

    // the isobaric sum of base characters sharing the archimedean component of Pi_chi
    std::vector<std::string> chars, blocks;
    for (int j = 1; j <= n; ++j) {
        std::string c = "chi_" + std::to_string(j);
        ctx.add_self_dual_character(c, "F", {1 - 2 * j});
        RepDesc r;
        r.label = "Chi_" + std::to_string(j);
        r.kind = RepKind::Character;
        r.rank = 1;
        r.arch = r.label + "_inf";
        r.character = c;
        ctx.add_rep(r);
        chars.push_back(c);
        blocks.push_back(r.label);
    }
    RepDesc flat;
    flat.label = "Pi_flat";
    flat.kind = RepKind::IsobaricChars;
    flat.rank = n;
    flat.arch = "Pi_inf";
    flat.blocks = blocks;
    ctx.add_rep(flat);

    const BigRational s = rs_point(p.m);
    PeriodMonomial q1(PeriodAtom::rs_l(s, "Pi_sharp", "Pi_chi"));
    q1.mul(PeriodAtom::asai_l(1, "Pi_sharp"), -1);
    q1.mul(PeriodAtom::asai_l(1, "Pi_chi"), -1);
    PeriodMonomial q2(PeriodAtom::rs_l(s, "Pi_sharp", "Pi_flat"));
    q2.mul(PeriodAtom::asai_l(1, "Pi_sharp"), -1);
    q2.mul(PeriodAtom::whittaker("Pi_flat"), -1);

    Rewriter axioms(ctx, kAxioms | kGauss);
    Rewriter induced1(ctx, kFactorization | kHecke);
    induced1.pair_self_dual({"chi"});
    Rewriter induced2(ctx, kFactorization | kWhittaker | kHecke);
    induced2.pair_self_dual(chars);

    auto a1 = axioms.run(q1);
    auto b1 = induced1.run(q1);
    auto a2 = axioms.run(q2);
    auto b2 = induced2.run(q2);
    out.checks.push_back({"route1.residual", b1.final.without_two_pi_i().is_identity()});
    out.checks.push_back({"route2.residual", b2.final.without_two_pi_i().is_identity()});

    PeriodMonomial relation = a1.final * b1.final.inverse() * (a2.final * b2.final.inverse()).inverse();
    auto target = PeriodAtom::arch_asai("Pi_inf");
    auto solved = solve_for(relation, target);
    out.checks.push_back({"solved", solved.has_value()});

    add_trace(out, ctx, "route1.axioms", std::move(a1));
    add_trace(out, ctx, "route1.induced", std::move(b1));
    add_trace(out, ctx, "route2.axioms", std::move(a2));
    add_trace(out, ctx, "route2.induced", std::move(b2));
    if (p.m == 0) {
        merge_assumptions(out.assumptions, {"hyp_a0: L(1/2, Pi_sharp x Pi_chi) != 0", "hyp_a1: L(1/2, Pi_sharp x Pi_flat) != 0"});
    }
    finish(out, solved ? PeriodMonomial::two_pi_i(*solved) : relation);
    return out;
}

Derivation derive_arch_rs_impl(const DeriveParams& p) {
    Derivation out;
    out.goal = Goal::ArchRs;
    out.params = p;
    const int n = p.n;
    PeriodContext ctx(p.d);
    ctx.add_standard_base_characters();
    add_induced(ctx, "L", n, CycleDatum::standard(n), "chi", upper_exponents(n), "Pi_chi", "Pi_inf");
    add_induced(ctx, "L'", n - 1, CycleDatum::standard(n - 1), "chi'", lower_exponents(n - 1), "Pi_chi'", "Pi'_inf");
    ctx.add_compositum("LL'", "L", "L'");
    set_arch_asai(ctx, "Pi_inf", n, p.d);
    set_arch_asai(ctx, "Pi'_inf", n - 1, p.d);

    PeriodMonomial q(PeriodAtom::rs_l(rs_point(p.m), "Pi_chi", "Pi_chi'"));
    q.mul(PeriodAtom::asai_l(1, "Pi_chi"), -1);
    q.mul(PeriodAtom::asai_l(1, "Pi_chi'"), -1);

    Rewriter axioms(ctx, kAxioms | kGauss | kArchValues);
    Rewriter induced(ctx, kFactorization | kHecke);
    induced.pair_self_dual({"chi'"});
    auto a = axioms.run(q);
    auto b = induced.run(q);
    out.checks.push_back({"induced.residual", b.final.without_two_pi_i().is_identity()});

    PeriodMonomial relation = a.final * b.final.inverse();
    auto solved = solve_for(relation, PeriodAtom::arch_rs(BigRational(p.m), "Pi_inf", "Pi'_inf"));
    out.checks.push_back({"solved", solved.has_value()});
    add_trace(out, ctx, "axioms", std::move(a));
    add_trace(out, ctx, "induced", std::move(b));
    if (p.m == 0) merge_assumptions(out.assumptions, {"cond: L(1/2, Pi_chi x Pi_chi') != 0"});
    finish(out, solved ? PeriodMonomial::two_pi_i(*solved) : relation);
    return out;
}

Derivation derive_thm_a(const DeriveParams& p) {
    Derivation out;
    out.goal = Goal::ThmA;
    out.params = p;
    PeriodContext ctx(p.d);
    add_cuspidal(ctx, "Pi", p.n, "Pi_inf");
    add_cuspidal(ctx, "Pi'", p.n - 1, "Pi'_inf");
    set_arch_rs(ctx, "Pi_inf", "Pi'_inf", p.n, p.m, p.d);
    PeriodMonomial q(PeriodAtom::rs_l(rs_point(p.m), "Pi", "Pi'"));
    q.mul(PeriodAtom::whittaker("Pi"), -1);
    q.mul(PeriodAtom::whittaker("Pi'"), -1);
    auto t = Rewriter(ctx, kAxioms | kGauss | kArchValues).run(q);
    PeriodMonomial value = t.final;
    add_trace(out, ctx, "quotient", std::move(t));
    finish(out, value);
    return out;
}

Derivation derive_thm_b(const DeriveParams& p) {
    Derivation out;
    out.goal = Goal::ThmB;
    out.params = p;
    IsobaricShape shape{p.shape.empty() ? std::vector<int>{p.n} : p.shape};
    PeriodContext ctx(p.d);
    const std::size_t k = shape.parts.size();
    PeriodMonomial q;
    if (k == 1) {
        add_cuspidal(ctx, "Pi'", p.n, "Pi'_inf");
        set_arch_asai(ctx, "Pi'_inf", p.n, p.d);
    } else {
        RepDesc iso;
        iso.label = "Pi'";
        iso.kind = RepKind::Isobaric;
        iso.rank = p.n;
        iso.arch = "Pi'_inf";
        for (std::size_t i = 1; i <= k; ++i) {
            int ni = shape.parts[i - 1];
            std::string b = "Pi_" + std::to_string(i);
            add_cuspidal(ctx, b, ni, b + "_inf");
            add_cuspidal(ctx, b + "^alg", ni, b + "^alg_inf");
            set_arch_asai(ctx, b + "^alg_inf", ni, p.d);
            iso.blocks.push_back(b);
            iso.alg_blocks.push_back(b + "^alg");
            iso.alg_exponent.push_back(alg_twist(shape, static_cast<int>(i)).e);
        }
        ctx.add_rep(iso);
    }
    q.mul(PeriodAtom::asai_l(1, "Pi'"), 1);
    q.mul(PeriodAtom::whittaker("Pi'"), -1);
    auto t = Rewriter(ctx, kFactorization | kAxioms | kWhittaker | kGauss | kArchValues).run(q);
    PeriodMonomial value = t.final;
    add_trace(out, ctx, "quotient", std::move(t));
    finish(out, value);
    return out;
}

Derivation derive_thm_c(const DeriveParams& p) {
    Derivation out;
    out.goal = Goal::ThmC;
    out.params = p;
    PeriodContext ctx(p.d);
    add_cuspidal(ctx, "Pi", p.n, "Pi_inf");
    add_cuspidal(ctx, "Pi'", p.n - 1, "Pi'_inf");
    set_arch_rs(ctx, "Pi_inf", "Pi'_inf", p.n, p.m, p.d);
    set_arch_asai(ctx, "Pi_inf", p.n, p.d);
    set_arch_asai(ctx, "Pi'_inf", p.n - 1, p.d);
    PeriodMonomial q(PeriodAtom::rs_l(rs_point(p.m), "Pi", "Pi'"));
    q.mul(PeriodAtom::asai_l(1, "Pi"), -1);
    q.mul(PeriodAtom::asai_l(1, "Pi'"), -1);
    auto t = Rewriter(ctx, kAxioms | kGauss | kArchValues).run(q);
    PeriodMonomial value = t.final;
    add_trace(out, ctx, "quotient", std::move(t));
    finish(out, value);
    return out;
}

Derivation derive_thm_e(const DeriveParams& p) {
    Derivation out;
    out.goal = Goal::ThmE;
    out.params = p;
    PeriodContext ctx(p.d);
    add_cuspidal(ctx, "Pi", p.n, "Pi_inf");
    add_cuspidal(ctx, "Pi'", p.n - 1, "Pi'_inf");
    set_arch_rs(ctx, "Pi_inf", "Pi'_inf", p.n, p.m, p.d);
    if (p.l != p.m) set_arch_rs(ctx, "Pi_inf", "Pi'_inf", p.n, p.l, p.d);
    PeriodMonomial q(PeriodAtom::rs_l(rs_point(p.m), "Pi", "Pi'"));
    q.mul(PeriodAtom::rs_l(rs_point(p.l), "Pi", "Pi'"), -1);
    auto t = Rewriter(ctx, kAxioms | kGauss | kArchValues).run(q);
    PeriodMonomial value = t.final;
    add_trace(out, ctx, "quotient", std::move(t));
    if (p.l == 0) merge_assumptions(out.assumptions, {"cond: L(1/2, Pi x Pi') != 0"});
    finish(out, value);
    return out;
}

Derivation derive_delta(const DeriveParams& p) {
    Derivation out;
    out.goal = Goal::Delta;
    out.params = p;
    PeriodContext ctx(p.d);
    PeriodMonomial q;
    for (int j = 1; j <= p.n; ++j)
        q.mul(j % 2 ? PeriodAtom::quadratic_l(j, "F") : PeriodAtom::dedekind_zeta(j, "F"), 1);
    auto t = Rewriter(ctx, kHecke).run(q);
    PeriodMonomial value = t.final;
    add_trace(out, ctx, "product", std::move(t));
    finish(out, value);
    return out;
}

}  // namespace

std::string to_string(Goal g) {
    switch (g) {
        case Goal::AsaiInduced: return "asai-induced";
        case Goal::RsInduced: return "rs-induced";
        case Goal::ArchAsai: return "arch-asai";
        case Goal::ArchRs: return "arch-rs";
        case Goal::ThmA: return "ThmA";
        case Goal::ThmB: return "ThmB";
        case Goal::ThmC: return "ThmC";
        case Goal::ThmE: return "ThmE";
        case Goal::Delta: return "Delta";
    }
    return "?";
}

std::vector<Goal> all_goals() {
    return {Goal::AsaiInduced, Goal::RsInduced, Goal::ArchAsai, Goal::ArchRs, Goal::ThmA,
            Goal::ThmB,        Goal::ThmC,      Goal::ThmE,     Goal::Delta};
}

Goal goal_from_string(const std::string& s) {
    for (Goal g : all_goals())
        if (to_string(g) == s) return g;
    throw ValidationError("unknown goal '" + s + "'");
}

void DeriveParams::validate(Goal g) const {
    if (d < 1) throw ValidationError("d must be at least 1");
    int min_n = (g == Goal::Delta || g == Goal::ThmB) ? 1 : 2;
    if (n < min_n) throw ValidationError("n must be at least " + std::to_string(min_n) + " for " + to_string(g));
    if (g == Goal::ThmB && !shape.empty()) {
        IsobaricShape{shape}.validate();
        if (IsobaricShape{shape}.total() != n) throw ValidationError("isobaric shape does not sum to n");
    }
    if (cycle) {
        if (g != Goal::AsaiInduced) throw ValidationError("a Galois cycle only applies to asai-induced");
        if (cycle->n != n) throw ValidationError("cycle length must equal n");
        cycle->validate();
    }
}

bool Derivation::ok() const {
    if (exponent != expected || residual != expected_residual) return false;
    return std::all_of(checks.begin(), checks.end(), [](const DeriveCheck& c) { return c.ok; });
}

std::size_t Derivation::step_count() const {
    std::size_t total = 0;
    for (const auto& [name, t] : traces) total += t.steps.size();
    return total;
}

long long closed_form(Goal g, const DeriveParams& p) {
    const long long n = p.n, m = p.m, l = p.l, d = p.d;
    switch (g) {
        case Goal::AsaiInduced: return n * (n + 1) * d / 2;
        case Goal::RsInduced: return d * n * (n - 1) / 2 + m * d * n * (n - 1);
        case Goal::ArchAsai: return d * n;
        case Goal::ArchRs:
        case Goal::ThmA: return m * d * n * (n - 1) - d * (n - 1) * (n - 2) / 2;
        case Goal::ThmB: return d * n;
        case Goal::ThmC: return m * d * n * (n - 1) - d * n * (n + 1) / 2;
        case Goal::ThmE: return d * (m - l) * n * (n - 1);
        case Goal::Delta: return d * n * (n + 1) / 2;
    }
    return 0;
}

Derivation derive(Goal g, const DeriveParams& p) {
    p.validate(g);
    switch (g) {
        case Goal::AsaiInduced: return derive_asai_induced_impl(p);
        case Goal::RsInduced: return derive_rs_induced_impl(p);
        case Goal::ArchAsai: return derive_arch_asai_impl(p);
        case Goal::ArchRs: return derive_arch_rs_impl(p);
        case Goal::ThmA: return derive_thm_a(p);
        case Goal::ThmB: return derive_thm_b(p);
        case Goal::ThmC: return derive_thm_c(p);
        case Goal::ThmE: return derive_thm_e(p);
        case Goal::Delta: return derive_delta(p);
    }
    throw ValidationError("unknown goal");
}

DerivationTrace derive_isobaric_whittaker(const std::vector<int>& shape_parts, const std::vector<bool>& conjugate_self_dual) {
    IsobaricShape shape{shape_parts};
    shape.validate();
    const std::size_t k = shape.parts.size();
    if (!conjugate_self_dual.empty() && conjugate_self_dual.size() != k) throw ValidationError("one self-duality flag per block expected");
    PeriodContext ctx(1);
    RepDesc iso;
    iso.label = "Pi'";
    iso.kind = RepKind::Isobaric;
    iso.rank = shape.total();
    iso.arch = "Pi'_inf";
    for (std::size_t i = 1; i <= k; ++i) {
        std::string b = "Pi_" + std::to_string(i);
        RepDesc block;
        block.label = b;
        block.rank = shape.parts[i - 1];
        block.arch = b + "_inf";
        block.conjugate_self_dual = conjugate_self_dual.empty() || conjugate_self_dual[i - 1];
        ctx.add_rep(block);
        add_cuspidal(ctx, b + "^alg", shape.parts[i - 1], b + "^alg_inf");
        iso.blocks.push_back(b);
        iso.alg_blocks.push_back(b + "^alg");
        iso.alg_exponent.push_back(alg_twist(shape, static_cast<int>(i)).e);
    }
    ctx.add_rep(iso);
    return Rewriter(ctx, kWhittaker | kGauss).run(PeriodMonomial(PeriodAtom::whittaker("Pi'")));
}

int finite_difference_degree(const std::vector<long long>& values) {
    std::vector<long long> v = values;
    for (int deg = -1; !v.empty(); ++deg) {
        if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) return deg;
        if (v.size() == 1) return -2;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
        v.pop_back();
    }
    return -2;
}

std::map<std::string, int> expected_degrees(Goal g) {
    switch (g) {
        case Goal::ArchAsai: return {{"n", 1}, {"m", 0}, {"d", 1}};
        case Goal::ThmB: return {{"n", 1}, {"m", 0}, {"d", 1}};
        case Goal::AsaiInduced:
        case Goal::Delta: return {{"n", 2}, {"m", 0}, {"d", 1}};
        default: return {{"n", 2}, {"m", 1}, {"d", 1}};
    }
}

std::map<std::string, int> engine_degrees(Goal g) {
    DeriveParams base;
    base.n = 3;
    base.m = 2;
    base.l = 0;
    base.d = 1;
    auto sample = [&](auto set) {
        std::vector<long long> v;
        for (int t = 0; t < 5; ++t) {
            DeriveParams p = base;
            set(p, t);
            v.push_back(derive(g, p).exponent);
        }
        return finite_difference_degree(v);
    };
    std::map<std::string, int> out;
    out["n"] = sample([](DeriveParams& p, int t) { p.n = 2 + t; });
    out["m"] = sample([](DeriveParams& p, int t) { p.m = -2 + t; });
    out["d"] = sample([](DeriveParams& p, int t) { p.d = 1 + t; });
    return out;
}

}  // namespace lsym
