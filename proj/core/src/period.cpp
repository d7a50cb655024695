#include "lsym/period.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "lsym/errors.hpp"

namespace lsym {

namespace {

long long to_ll(const BigRational& x) {
    if (!x.is_integer()) throw MathError("expected an integer, got " + x.to_string());
    mpq_class q = x.to_mpq();
    if (!q.get_num().fits_slong_p()) throw MathError("integer out of range: " + x.to_string());
    return q.get_num().get_si();
}

int mod(int a, int n) { return ((a % n) + n) % n; }

std::string e_label(const std::string& name) { return "E(" + name + ")"; }
std::string gal_label(const std::string& field) { return field + "^Gal"; }

const BigRational kHalf(1, 2);

}  // namespace

// ---------------------------------------------------------------------------
// Cycles

void CycleDatum::validate() const {
    if (n < 1) throw ValidationError("cycle length must be positive");
    if (static_cast<int>(s.size()) != n) throw ValidationError("cycle has " + std::to_string(s.size()) + " entries, expected " + std::to_string(n));
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : s) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) throw ValidationError("cycle is not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(x)] = true;
    }
    int len = 0, x = 1;
    do {
        x = s[static_cast<std::size_t>(x - 1)];
        ++len;
    } while (x != 1);
    if (len != n) throw ValidationError("permutation is not a single " + std::to_string(n) + "-cycle");
}

int CycleDatum::apply(int i, int k) const {
    if (i < 1 || i > n) throw ValidationError("cycle index out of range");
    int steps = mod(k, n);
    for (int t = 0; t < steps; ++t) i = s[static_cast<std::size_t>(i - 1)];
    return i;
}

CycleDatum CycleDatum::standard(int n) {
    CycleDatum c{n, {}};
    for (int i = 1; i <= n; ++i) c.s.push_back(i % n + 1);
    c.validate();
    return c;
}

namespace {
CycleDatum from_order(const std::vector<int>& order) {
    // order lists the cycle (order[0] -> order[1] -> ... -> order[0])
    const int n = static_cast<int>(order.size());
    CycleDatum c{n, std::vector<int>(static_cast<std::size_t>(n))};
    for (int t = 0; t < n; ++t) c.s[static_cast<std::size_t>(order[static_cast<std::size_t>(t)] - 1)] = order[static_cast<std::size_t>((t + 1) % n)];
    return c;
}
}  // namespace

std::vector<CycleDatum> CycleDatum::all_cycles(int n) {
    if (n < 1) throw ValidationError("cycle length must be positive");
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 2);
    std::vector<CycleDatum> out;
    do {
        std::vector<int> order{1};
        order.insert(order.end(), rest.begin(), rest.end());
        out.push_back(from_order(order));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

CycleDatum CycleDatum::random(int n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("cycle length must be positive");
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 2);
    std::mt19937_64 rng(seed);
    std::shuffle(rest.begin(), rest.end(), rng);
    std::vector<int> order{1};
    order.insert(order.end(), rest.begin(), rest.end());
    return from_order(order);
}

int count_descents(const CycleDatum& c, int i) {
    int count = 0;
    for (int k = 1; k < c.n; ++k)
        if (c.apply(i, k) < i) ++count;
    return count;
}

InducedCmType cm_types_induced(const CycleDatum& c, int k) {
    c.validate();
    if (k < 1 || k >= c.n) throw ValidationError("shift must lie in 1..n-1");
    InducedCmType t;
    for (int i = 1; i <= c.n; ++i) {
        int j = c.apply(i, k);
        if (i > j) t.top.push_back(i);
        if (i < j) t.bottom.push_back(i);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Embeddings and characters

std::string Embedding::to_string() const {
    std::string out = field + ".iota" + std::to_string(iota);
    if (i) out += "_" + std::to_string(i);
    if (j) out += "_" + std::to_string(j);
    if (bar) out += "c";
    return out;
}

std::string CharFactor::to_string() const {
    std::string out = name;
    if (check) out += "^v";
    if (conj) out += "^c";
    if (shift) out += "^th" + std::to_string(shift);
    if (power != 1) out += "^" + std::to_string(power);
    return out;
}

CharExpr CharExpr::of(std::string field, std::vector<CharFactor> factors) {
    std::sort(factors.begin(), factors.end());
    CharExpr e;
    e.field = std::move(field);
    for (auto& f : factors) {
        if (!e.factors.empty() && e.factors.back().key() == f.key())
            e.factors.back().power += f.power;
        else
            e.factors.push_back(std::move(f));
    }
    std::erase_if(e.factors, [](const CharFactor& f) { return f.power == 0; });
    return e;
}

CharExpr CharExpr::dual() const {
    auto fs = factors;
    for (auto& f : fs) f.check = !f.check;
    return of(field, std::move(fs));
}

std::string CharExpr::to_string() const {
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) out += "*";
        out += factors[k].to_string();
        if (factors[k].home != field) out += "[" + factors[k].home + "]";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Atoms

namespace {
auto atom_tie(const PeriodAtom& x) { return std::tie(x.kind, x.lkind, x.chr, x.emb, x.a, x.b, x.dual_b, x.point); }
}  // namespace

bool operator==(const PeriodAtom& x, const PeriodAtom& y) { return atom_tie(x) == atom_tie(y); }
bool operator<(const PeriodAtom& x, const PeriodAtom& y) { return atom_tie(x) < atom_tie(y); }

PeriodAtom PeriodAtom::two_pi_i() { return PeriodAtom{}; }

PeriodAtom PeriodAtom::cm_period(CharExpr chr, std::vector<Embedding> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty()) throw ValidationError("CM period needs a nonempty set of embeddings");
    for (const auto& e : set)
        if (e.field != chr.field) throw ValidationError("embedding " + e.to_string() + " is not an embedding of " + chr.field);
    PeriodAtom a;
    a.kind = AtomKind::CMPeriod;
    a.chr = std::move(chr);
    a.emb = std::move(set);
    return a;
}

PeriodAtom PeriodAtom::whittaker(std::string rep) {
    PeriodAtom a;
    a.kind = AtomKind::Whittaker;
    a.a = std::move(rep);
    return a;
}

PeriodAtom PeriodAtom::gauss_sum(std::string label) {
    PeriodAtom a;
    a.kind = AtomKind::GaussSum;
    a.a = std::move(label);
    return a;
}

PeriodAtom PeriodAtom::arch_asai(std::string arch) {
    PeriodAtom a;
    a.kind = AtomKind::ArchAsai;
    a.a = std::move(arch);
    return a;
}

PeriodAtom PeriodAtom::arch_rs(const BigRational& m, std::string arch1, std::string arch2) {
    PeriodAtom a;
    a.kind = AtomKind::ArchRS;
    a.point = m;
    a.a = std::move(arch1);
    a.b = std::move(arch2);
    return a;
}

PeriodAtom PeriodAtom::hecke_l(const BigRational& s, CharExpr chr) {
    PeriodAtom a;
    a.kind = AtomKind::LValue;
    a.lkind = LKind::Hecke;
    a.point = s;
    a.chr = std::move(chr);
    return a;
}

PeriodAtom PeriodAtom::asai_l(const BigRational& s, std::string rep) {
    PeriodAtom a;
    a.kind = AtomKind::LValue;
    a.lkind = LKind::Asai;
    a.point = s;
    a.a = std::move(rep);
    return a;
}

PeriodAtom PeriodAtom::rs_l(const BigRational& s, std::string rep1, std::string rep2, bool dual2) {
    PeriodAtom a;
    a.kind = AtomKind::LValue;
    a.lkind = LKind::RankinSelberg;
    a.point = s;
    a.a = std::move(rep1);
    a.b = std::move(rep2);
    a.dual_b = dual2;
    return a;
}

PeriodAtom PeriodAtom::dedekind_zeta(const BigRational& s, std::string field) {
    PeriodAtom a;
    a.kind = AtomKind::LValue;
    a.lkind = LKind::DedekindZeta;
    a.point = s;
    a.a = std::move(field);
    return a;
}

PeriodAtom PeriodAtom::quadratic_l(const BigRational& s, std::string field) {
    PeriodAtom a;
    a.kind = AtomKind::LValue;
    a.lkind = LKind::Quadratic;
    a.point = s;
    a.a = std::move(field);
    return a;
}

std::string PeriodAtom::to_string() const {
    switch (kind) {
        case AtomKind::TwoPiI: return "(2pi i)";
        case AtomKind::CMPeriod: {
            std::string set;
            if (emb.size() == 1) {
                set = emb.front().to_string();
            } else {
                set = "{";
                for (std::size_t k = 0; k < emb.size(); ++k) set += (k ? "," : "") + emb[k].to_string();
                set += "}";
            }
            return "p(" + chr.to_string() + ", " + set + ")";
        }
        case AtomKind::Whittaker: return "W(" + a + ")";
        case AtomKind::GaussSum: return "G(" + a + ")";
        case AtomKind::ArchAsai: return "a(" + a + ")";
        case AtomKind::ArchRS: return "a(" + point.to_string() + "; " + a + ", " + b + ")";
        case AtomKind::LValue:
            switch (lkind) {
                case LKind::Hecke: return "L(" + point.to_string() + ", " + chr.to_string() + "; " + chr.field + ")";
                case LKind::Asai: return "L_As(" + point.to_string() + ", " + a + ")";
                case LKind::RankinSelberg:
                    return "L(" + point.to_string() + ", " + a + " x " + b + (dual_b ? "^v" : "") + ")";
                case LKind::DedekindZeta: return "zeta_" + a + "+(" + point.to_string() + ")";
                case LKind::Quadratic: return "L(" + point.to_string() + ", eps_" + a + ")";
            }
    }
    return "?";
}

long long PeriodAtom::rank(const PeriodContext& ctx) const {
    auto rep_rank = [&](const std::string& label) -> long long { return ctx.has_rep(label) ? ctx.rep(label).rank : 1; };
    auto isobaric = [&](const std::string& label) {
        if (!ctx.has_rep(label)) return false;
        auto k = ctx.rep(label).kind;
        return k == RepKind::Isobaric || k == RepKind::IsobaricChars;
    };
    switch (kind) {
        case AtomKind::TwoPiI: return 0;
        case AtomKind::CMPeriod: {
            long long w = 1 + static_cast<long long>(emb.size()) - 1;
            for (const auto& f : chr.factors) {
                long long base = 1 + (f.conj ? 2 : 0) + (f.shift ? 2 : 0) + (f.home != chr.field ? 8 : 0);
                long long mult = std::abs(static_cast<long long>(f.power)) + (f.power < 0 ? 1 : 0);
                w += mult * base;
            }
            return w;
        }
        case AtomKind::Whittaker: return isobaric(a) ? 200'000'000LL * rep_rank(a) : 10;
        case AtomKind::GaussSum:
        case AtomKind::ArchAsai:
        case AtomKind::ArchRS: return 10;
        case AtomKind::LValue:
            switch (lkind) {
                case LKind::Asai: return 300'000'000LL * rep_rank(a);
                case LKind::RankinSelberg: return 100'000'000LL * (rep_rank(a) + rep_rank(b));
                default: return 1'000'000;
            }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Monomials

PeriodMonomial::PeriodMonomial(const PeriodAtom& a, long long e) {
    if (e != 0) e_[a] = e;
}

long long PeriodMonomial::exponent(const PeriodAtom& a) const {
    auto it = e_.find(a);
    return it == e_.end() ? 0 : it->second;
}

PeriodMonomial& PeriodMonomial::mul(const PeriodAtom& a, long long e) {
    if (e == 0) return *this;
    auto [it, inserted] = e_.emplace(a, e);
    if (!inserted) {
        it->second += e;
        if (it->second == 0) e_.erase(it);
    }
    return *this;
}

PeriodMonomial& PeriodMonomial::operator*=(const PeriodMonomial& o) {
    for (const auto& [a, e] : o.e_) mul(a, e);
    return *this;
}

PeriodMonomial PeriodMonomial::pow(long long k) const {
    PeriodMonomial out;
    if (k == 0) return out;
    for (const auto& [a, e] : e_) out.e_.emplace(a, e * k);
    return out;
}

PeriodMonomial PeriodMonomial::without_two_pi_i() const {
    PeriodMonomial out = *this;
    out.e_.erase(PeriodAtom::two_pi_i());
    return out;
}

PeriodMonomial PeriodMonomial::restricted_to(AtomKind kind) const {
    PeriodMonomial out;
    for (const auto& [a, e] : e_)
        if (a.kind == kind) out.e_.emplace(a, e);
    return out;
}

std::vector<long long> PeriodMonomial::measure(const PeriodContext& ctx) const {
    std::vector<long long> out;
    for (const auto& [a, e] : e_) out.insert(out.end(), static_cast<std::size_t>(std::abs(e)), a.rank(ctx));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::string PeriodMonomial::to_string() const {
    if (e_.empty()) return "1";
    std::string out;
    for (const auto& [a, e] : e_) {
        if (!out.empty()) out += " * ";
        out += a.to_string();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool measure_less(const std::vector<long long>& a, const std::vector<long long>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// Field tags

FieldTag::FieldTag(std::initializer_list<std::string> labels) : labels_(labels) {}

FieldTag& FieldTag::join(const FieldTag& o) {
    labels_.insert(o.labels_.begin(), o.labels_.end());
    return *this;
}

bool FieldTag::contains(const FieldTag& o) const {
    return std::includes(labels_.begin(), labels_.end(), o.labels_.begin(), o.labels_.end());
}

std::string FieldTag::to_string() const {
    if (labels_.empty()) return "Q";
    std::string out;
    for (const auto& l : labels_) out += (out.empty() ? "" : ",") + l;
    return out;
}

// ---------------------------------------------------------------------------
// Rule registry

RuleSet rule_cm_relations() {
    return {
        {"partition", kHecke, "p(chi, A u B) = p(chi, A) p(chi, B)", "Q"},
        {"multiplicativity", kHecke, "p(chi1 chi2, S) = p(chi1, S) p(chi2, S)", "E(chi1)E(chi2)"},
        {"restriction_lift", kHecke, "p(chi|_Lb, iota_i) = p(chi chi^(th^(n/2) c), iota_i)", "E(chi)L^Gal"},
        {"norm_collapse", kHecke, "p(chi o N, S) = p(chi, S|_H)", "E(chi)K^Gal"},
        {"conjugation", kHecke, "p(chi^c, S) = p(chi, cS)", "E(chi)K^Gal"},
        {"galois_translation", kHecke, "p(chi^(th^k), S) = p(chi, th^k S)", "E(chi)K^Gal"},
        {"finite_order", kHecke, "p(chi, S) = 1 for chi of finite order", "E(chi)"},
        {"norm_character", kHecke, "p(||.||, iota) = (2 pi i)^-1", "Q"},
        {"phi_pairing", kHecke, "p(phi^v, iota) p(phi^v, iota c) = (2 pi i)", "E(phi)"},
        {"self_dual_pairing", kHecke, "p(chi^v, iota) p(chi^v, iota c) = 1 for chi chi^c = 1", "E(chi)"},
        {"blasius", kHecke, "L(m, chi) = (2 pi i)^(m |Phi|) p(chi^v, Phi)", "E(chi)K^Gal"},
    };
}

RuleSet rule_zeta_values() {
    return {
        {"zeta_even", kHecke, "zeta_F+(m) = (2 pi i)^(m d), m even >= 2", "Q"},
        {"quadratic_odd", kHecke, "L(m, eps_K) = (2 pi i)^(m [K:Q]/2), m odd >= 1", "Q"},
    };
}

RuleSet all_rules() {
    RuleSet out = {
        {"isobaric_asai_factorization", kFactorization, "L(1, Pi', As) = prod L(1, Pi_i^alg, As) prod_{i<j} L(1, Pi_i x Pi_j^v)", "E(Pi')"},
        {"asai_induced_factorization", kFactorization, "L(1, Pi_chi, As) = prod_k L(1, chi chi^(th^k c)) L(1, eps_L) [L(1, chi|_Lb eps)]", "Q"},
        {"rs_induced_factorization", kFactorization, "L(1/2+m, Pi_chi x Pi_chi') = L(m, (chi o N)(chi' o N)(phi o N))", "Q"},
        {"rs_isobaric_factorization", kFactorization, "L(1/2+m, Pi_chi x (+)chi_j) = prod_j L(m, chi (chi_j o N)(phi o N))", "Q"},
        {"rs_character_pair", kFactorization, "L(s, chi_j x chi_k^v) = L(s, chi_j chi_k^c)", "Q"},
        {"asai_axiom", kAxioms, "L(1, Pi, As) = p(Pi) a(Pi_inf)", "E(Pi)"},
        {"rankin_selberg_axiom", kAxioms, "L(1/2+m, Pi x Pi') = p(Pi) p(Pi') a(m; Pi_inf, Pi'_inf) G(omega_Pi')", "E(Pi)E(Pi')"},
        {"isobaric_whittaker", kWhittaker, "p(Pi') = prod p(Pi_i^alg) prod_{i<j} L(1, Pi_i x Pi_j^v) prod G(phi^e_i)^(n_i(n_i-1)/2)", "E(Pi')E(phi)"},
        {"character_whittaker", kWhittaker, "p(chi) = 1", "E(chi)"},
        {"gauss_removal", kGauss, "G(omega_Pi') = 1 for conjugate self-dual Pi'", "E(Pi')"},
        {"gauss_phi_removal", kGauss, "G(phi^-1) = 1", "E(phi)"},
        {"arch_asai_value", kArchValues, "a(Pi_inf) = established value", "Q"},
        {"arch_rs_value", kArchValues, "a(m; Pi_inf, Pi'_inf) = established value", "Q"},
    };
    for (auto& r : rule_cm_relations()) out.push_back(r);
    for (auto& r : rule_zeta_values()) out.push_back(r);
    return out;
}

// ---------------------------------------------------------------------------
// Traces

FieldTag DerivationTrace::joined_tag() const {
    FieldTag t;
    for (const auto& s : steps) t.join(s.tag);
    return t;
}

PeriodMonomial DerivationTrace::replay() const {
    PeriodMonomial cur = initial;
    for (const auto& s : steps) {
        cur *= s.matched.inverse();
        cur *= s.replacement;
    }
    return cur;
}

bool DerivationTrace::measure_decreases(const PeriodContext& ctx) const {
    PeriodMonomial cur = initial;
    auto before = cur.measure(ctx);
    for (const auto& s : steps) {
        cur *= s.matched.inverse();
        cur *= s.replacement;
        auto after = cur.measure(ctx);
        if (!measure_less(after, before)) return false;
        before = std::move(after);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Context

PeriodContext::PeriodContext(int d) : d_(d) {
    if (d < 1) throw ValidationError("degree d must be positive");
    fields_["F"] = FieldDesc{"F", FieldKind::Base, 1, "", "", {}};
}

void PeriodContext::add_cyclic_field(const std::string& name, int n, const CycleDatum& cycle) {
    if (fields_.count(name)) throw ValidationError("field " + name + " already registered");
    if (cycle.n != n) throw ValidationError("cycle length does not match the degree of " + name);
    cycle.validate();
    fields_[name] = FieldDesc{name, FieldKind::Cyclic, n, "", "", cycle};
    if (n % 2 == 0) add_flat_field(name + "b", name);
}

void PeriodContext::add_compositum(const std::string& name, const std::string& left, const std::string& right) {
    if (fields_.count(name)) throw ValidationError("field " + name + " already registered");
    if (field(left).kind != FieldKind::Cyclic || field(right).kind != FieldKind::Cyclic)
        throw ValidationError("compositum needs two cyclic fields");
    fields_[name] = FieldDesc{name, FieldKind::Compositum, 1, left, right, {}};
}

void PeriodContext::add_flat_field(const std::string& name, const std::string& ambient) {
    const auto& amb = field(ambient);
    if (amb.kind != FieldKind::Cyclic || amb.n % 2 != 0) throw ValidationError("index-two subfield needs an even cyclic field");
    if (fields_.count(name)) throw ValidationError("field " + name + " already registered");
    fields_[name] = FieldDesc{name, FieldKind::Flat, amb.n, ambient, "", {}};
    CharDesc eps{"eps_" + name, name, {}, true, true, false};
    for (const auto& e : embeddings(name)) eps.z_exponent[e] = 0;
    add_character(std::move(eps));
}

void PeriodContext::add_character(CharDesc c) {
    if (chars_.count(c.name)) throw ValidationError("character " + c.name + " already registered");
    field(c.field);
    for (const auto& e : embeddings(c.field))
        if (!c.z_exponent.count(e)) throw ValidationError("character " + c.name + " has no exponent at " + e.to_string());
    chars_[c.name] = std::move(c);
}

void PeriodContext::add_rep(RepDesc r) {
    if (reps_.count(r.label)) throw ValidationError("representation " + r.label + " already registered");
    reps_[r.label] = std::move(r);
}

void PeriodContext::add_self_dual_character(const std::string& name, const std::string& fname, const std::vector<int>& a) {
    const auto& f = field(fname);
    int n = f.kind == FieldKind::Cyclic ? f.n : 1;
    if (f.kind != FieldKind::Cyclic && f.kind != FieldKind::Base) throw ValidationError("self-dual characters live on the base or a cyclic field");
    if (static_cast<int>(a.size()) != n) throw ValidationError("character " + name + " needs " + std::to_string(n) + " exponents");
    CharDesc c{name, fname, {}, true, false, false};
    for (const auto& e : embeddings(fname)) {
        int v = a[static_cast<std::size_t>(f.kind == FieldKind::Cyclic ? e.i - 1 : 0)];
        c.z_exponent[e] = e.bar ? -v : v;
    }
    add_character(std::move(c));
}

void PeriodContext::add_standard_base_characters() {
    auto make = [&](const std::string& name, int at, int at_bar, bool finite, bool norm) {
        CharDesc c{name, "F", {}, false, finite, norm};
        for (const auto& e : embeddings("F")) c.z_exponent[e] = e.bar ? at_bar : at;
        add_character(std::move(c));
    };
    make("phi", 1, 0, false, false);
    make("norm", 1, 1, false, true);
    make("triv", 0, 0, true, false);
}

void PeriodContext::set_arch_value(const PeriodAtom& atom, const PeriodMonomial& value, const std::vector<std::string>& assumptions) {
    if (atom.kind != AtomKind::ArchAsai && atom.kind != AtomKind::ArchRS) throw ValidationError("arch values attach to archimedean atoms only");
    arch_[atom] = {value, assumptions};
}

const FieldDesc& PeriodContext::field(const std::string& name) const {
    auto it = fields_.find(name);
    if (it == fields_.end()) throw ValidationError("unknown field " + name);
    return it->second;
}

const CharDesc& PeriodContext::character(const std::string& name) const {
    auto it = chars_.find(name);
    if (it == chars_.end()) throw ValidationError("unknown character " + name);
    return it->second;
}

const RepDesc& PeriodContext::rep(const std::string& label) const {
    auto it = reps_.find(label);
    if (it == reps_.end()) throw ValidationError("unknown representation " + label);
    return it->second;
}

std::vector<Embedding> PeriodContext::embeddings(const std::string& name) const {
    const auto& f = field(name);
    std::vector<Embedding> out;
    for (int t = 1; t <= d_; ++t) {
        switch (f.kind) {
            case FieldKind::Base:
                for (bool b : {false, true}) out.push_back({name, t, 0, 0, b});
                break;
            case FieldKind::Cyclic:
                for (int i = 1; i <= f.n; ++i)
                    for (bool b : {false, true}) out.push_back({name, t, i, 0, b});
                break;
            case FieldKind::Compositum: {
                int nl = field(f.left).n, nr = field(f.right).n;
                for (int i = 1; i <= nl; ++i)
                    for (int j = 1; j <= nr; ++j)
                        for (bool b : {false, true}) out.push_back({name, t, i, j, b});
                break;
            }
            case FieldKind::Flat:
                for (int i = 1; i <= f.n; ++i) out.push_back({name, t, i, 0, false});
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Embedding PeriodContext::conj(const Embedding& e) const {
    const auto& f = field(e.field);
    Embedding out = e;
    if (f.kind == FieldKind::Flat) {
        const auto& amb = field(f.left);
        out.i = amb.cycle.apply(e.i, f.n / 2);
    } else {
        out.bar = !e.bar;
    }
    return out;
}

Embedding PeriodContext::translate(const Embedding& e, int k) const {
    const auto& f = field(e.field);
    if (f.kind != FieldKind::Cyclic) throw ValidationError("Galois translation needs a cyclic field, got " + e.field);
    Embedding out = e;
    out.i = f.cycle.apply(e.i, k);
    return out;
}

Embedding PeriodContext::restrict(const Embedding& e, const std::string& target) const {
    if (e.field == target) return e;
    const auto& f = field(e.field);
    const auto& t = field(target);
    if (t.kind == FieldKind::Base && f.kind != FieldKind::Flat) return {target, e.iota, 0, 0, e.bar};
    if (f.kind == FieldKind::Compositum && target == f.left) return {target, e.iota, e.i, 0, e.bar};
    if (f.kind == FieldKind::Compositum && target == f.right) return {target, e.iota, e.j, 0, e.bar};
    throw ValidationError(target + " is not a subfield of " + e.field);
}

bool PeriodContext::is_subfield(const std::string& sub, const std::string& of) const {
    if (sub == of) return true;
    const auto& s = field(sub);
    const auto& o = field(of);
    if (s.kind == FieldKind::Base) return o.kind != FieldKind::Flat;
    if (o.kind == FieldKind::Compositum) return sub == o.left || sub == o.right;
    return false;
}

std::string PeriodContext::compositum_of(const std::string& left, const std::string& right) const {
    for (const auto& [name, f] : fields_)
        if (f.kind == FieldKind::Compositum && f.left == left && f.right == right) return name;
    throw ValidationError("no compositum of " + left + " and " + right + " registered");
}

int PeriodContext::half_degree(const std::string& name) const { return static_cast<int>(embeddings(name).size() / 2); }

int PeriodContext::twisted_base_exponent(const CharFactor& f, const Embedding& e_home) const {
    Embedding e = e_home;
    if (f.conj) e = conj(e);
    if (f.shift) e = translate(e, f.shift);
    const auto& c = character(f.name);
    auto it = c.z_exponent.find(e);
    if (it == c.z_exponent.end()) throw MathError("character " + f.name + " has no exponent at " + e.to_string());
    return it->second;
}

int PeriodContext::factor_exponent(const CharFactor& f, const std::string& expr_field, const Embedding& e) const {
    if (f.check) {
        CharFactor g = f;
        g.check = false;
        return -factor_exponent(g, expr_field, conj(e));
    }
    const std::string& home = character(f.name).field;
    if (home != f.home) throw ValidationError("factor " + f.name + " declares home " + f.home + " but lives on " + home);
    int v = 0;
    if (is_subfield(home, expr_field)) {
        v = twisted_base_exponent(f, restrict(e, home));
    } else {
        const auto& k = field(expr_field);
        if (k.kind != FieldKind::Flat || k.left != home) throw ValidationError("character " + f.name + " cannot be moved from " + home + " to " + expr_field);
        // sum over the embeddings of the ambient field above e
        const auto& amb = field(home);
        Embedding up{home, e.iota, e.i, 0, false};
        Embedding down{home, e.iota, amb.cycle.apply(e.i, amb.n / 2), 0, true};
        v = twisted_base_exponent(f, up) + twisted_base_exponent(f, down);
    }
    return v * f.power;
}

int PeriodContext::z_exponent(const CharExpr& chr, const Embedding& e) const {
    if (e.field != chr.field) throw ValidationError("embedding " + e.to_string() + " does not belong to " + chr.field);
    int v = 0;
    for (const auto& f : chr.factors) v += factor_exponent(f, chr.field, e);
    return v;
}

bool PeriodContext::critical(const CharExpr& chr) const {
    for (const auto& e : embeddings(chr.field))
        if (z_exponent(chr, e) == z_exponent(chr, conj(e))) return false;
    return true;
}

std::vector<Embedding> PeriodContext::cm_type(const CharExpr& chr) const {
    std::vector<Embedding> out;
    for (const auto& e : embeddings(chr.field))
        if (z_exponent(chr, e) < z_exponent(chr, conj(e))) out.push_back(e);
    return out;
}

// ---------------------------------------------------------------------------
// Hecke L-values

PeriodMonomial rule_blasius(const PeriodContext& ctx, const PeriodAtom& l) {
    if (l.kind != AtomKind::LValue || l.lkind != LKind::Hecke) throw ValidationError("Blasius rule applies to Hecke L-values");
    if (!l.point.is_integer()) throw ValidationError("Blasius rule needs an integral point, got " + l.point.to_string());
    if (!ctx.critical(l.chr)) throw ValidationError("character " + l.chr.to_string() + " is not critical");
    auto phi = ctx.cm_type(l.chr);
    long long m = to_ll(l.point);
    PeriodMonomial out = PeriodMonomial::two_pi_i(m * static_cast<long long>(phi.size()));
    out.mul(PeriodAtom::cm_period(l.chr.dual(), std::move(phi)), 1);
    return out;
}

std::optional<PeriodMonomial> apply_zeta_rule(const PeriodContext& ctx, const PeriodAtom& l) {
    if (l.kind != AtomKind::LValue || !l.point.is_integer()) return std::nullopt;
    long long m = to_ll(l.point);
    if (l.lkind == LKind::DedekindZeta && m >= 2 && m % 2 == 0) return PeriodMonomial::two_pi_i(m * ctx.d());
    if (l.lkind == LKind::Quadratic && m >= 1 && m % 2 == 1) return PeriodMonomial::two_pi_i(m * ctx.half_degree(l.a));
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rewriter

Rewriter::Rewriter(const PeriodContext& ctx, unsigned families) : ctx_(ctx), families_(families) {}

std::optional<Rewriter::Rewrite> Rewriter::rep_rule(const PeriodAtom& a) const {
    if (a.kind == AtomKind::LValue && a.lkind == LKind::Asai) {
        const auto& r = ctx_.rep(a.a);
        if (a.point != BigRational(1)) return std::nullopt;
        if ((families_ & kFactorization) && r.kind == RepKind::Isobaric) {
            PeriodMonomial out;
            for (const auto& alg : r.alg_blocks) out.mul(PeriodAtom::asai_l(1, alg), 1);
            for (std::size_t i = 0; i < r.blocks.size(); ++i)
                for (std::size_t j = i + 1; j < r.blocks.size(); ++j) out.mul(PeriodAtom::rs_l(1, r.blocks[i], r.blocks[j], true), 1);
            return Rewrite{"isobaric_asai_factorization", {e_label(r.label)}, out, {}};
        }
        if ((families_ & kFactorization) && r.kind == RepKind::Induced) {
            const auto& L = ctx_.field(r.field);
            const int n = L.n;
            const int top = n % 2 ? (n - 1) / 2 : (n - 2) / 2;
            PeriodMonomial out;
            for (int k = 1; k <= top; ++k) {
                auto chr = CharExpr::of(L.name, {{r.character, L.name}, {r.character, L.name, false, true, k}});
                out.mul(PeriodAtom::hecke_l(1, chr), 1);
            }
            out.mul(PeriodAtom::quadratic_l(1, L.name), 1);
            if (n % 2 == 0) {
                std::string flat = L.name + "b";
                auto chr = CharExpr::of(flat, {{r.character, L.name}, {"eps_" + flat, flat}});
                out.mul(PeriodAtom::hecke_l(1, chr), 1);
            }
            return Rewrite{"asai_induced_factorization", {}, out, {}};
        }
        if ((families_ & kAxioms) && (r.kind == RepKind::Cuspidal || r.kind == RepKind::Induced)) {
            PeriodMonomial out(PeriodAtom::whittaker(r.label));
            out.mul(PeriodAtom::arch_asai(r.arch), 1);
            return Rewrite{"asai_axiom", {e_label(r.label)}, out, {}};
        }
        return std::nullopt;
    }
    if (a.kind == AtomKind::LValue && a.lkind == LKind::RankinSelberg) {
        const auto& r1 = ctx_.rep(a.a);
        const auto& r2 = ctx_.rep(a.b);
        const bool half = (a.point - kHalf).is_integer();
        if (families_ & kFactorization) {
            if (half && r1.kind == RepKind::Induced && r2.kind == RepKind::Induced) {
                if (a.dual_b && !r2.conjugate_self_dual) throw ValidationError("dual of " + r2.label + " is not available as a conjugate");
                std::string K = ctx_.compositum_of(r1.field, r2.field);
                auto chr = CharExpr::of(K, {{r1.character, r1.field}, {r2.character, r2.field, false, a.dual_b}, {"phi", "F"}});
                return Rewrite{"rs_induced_factorization", {}, PeriodMonomial(PeriodAtom::hecke_l(a.point - kHalf, chr)), {}};
            }
            if (half && r1.kind == RepKind::Induced && r2.kind == RepKind::IsobaricChars) {
                PeriodMonomial out;
                for (const auto& b : r2.blocks) {
                    const auto& c = ctx_.rep(b).character;
                    auto chr = CharExpr::of(r1.field, {{r1.character, r1.field}, {c, "F", false, a.dual_b}, {"phi", "F"}});
                    out.mul(PeriodAtom::hecke_l(a.point - kHalf, chr), 1);
                }
                return Rewrite{"rs_isobaric_factorization", {}, out, {}};
            }
            if (a.point.is_integer() && r1.kind == RepKind::Character && r2.kind == RepKind::Character) {
                if (a.dual_b && !r2.conjugate_self_dual) throw ValidationError("dual of " + r2.label + " is not available as a conjugate");
                auto chr = CharExpr::of("F", {{r1.character, "F"}, {r2.character, "F", false, a.dual_b}});
                return Rewrite{"rs_character_pair", {}, PeriodMonomial(PeriodAtom::hecke_l(a.point, chr)), {}};
            }
        }
        if ((families_ & kAxioms) && half && (r1.kind == RepKind::Cuspidal || r1.kind == RepKind::Induced) &&
            r2.rank == r1.rank - 1) {
            PeriodMonomial out(PeriodAtom::whittaker(r1.label));
            out.mul(PeriodAtom::whittaker(r2.label), 1);
            out.mul(PeriodAtom::arch_rs(a.point - kHalf, r1.arch, r2.arch), 1);
            out.mul(PeriodAtom::gauss_sum("omega(" + r2.label + ")"), 1);
            return Rewrite{"rankin_selberg_axiom", {e_label(r1.label), e_label(r2.label)}, out, {}};
        }
        return std::nullopt;
    }
    if (a.kind == AtomKind::Whittaker && (families_ & kWhittaker)) {
        const auto& r = ctx_.rep(a.a);
        if (r.kind == RepKind::Character) return Rewrite{"character_whittaker", {e_label(r.label)}, {}, {}};
        if (r.kind == RepKind::IsobaricChars || r.kind == RepKind::Isobaric) {
            PeriodMonomial out;
            const auto& parts = r.kind == RepKind::Isobaric ? r.alg_blocks : r.blocks;
            for (const auto& b : r.blocks)
                if (!ctx_.rep(b).conjugate_self_dual) throw ValidationError("block " + b + " of " + r.label + " is not conjugate self-dual");
            for (const auto& p : parts) out.mul(PeriodAtom::whittaker(p), 1);
            for (std::size_t i = 0; i < r.blocks.size(); ++i)
                for (std::size_t j = i + 1; j < r.blocks.size(); ++j) out.mul(PeriodAtom::rs_l(1, r.blocks[i], r.blocks[j], true), 1);
            if (r.kind == RepKind::Isobaric) {
                for (std::size_t i = 0; i < r.blocks.size(); ++i) {
                    long long ni = ctx_.rep(r.blocks[i]).rank;
                    if (r.alg_exponent.at(i) == -1) out.mul(PeriodAtom::gauss_sum("phi^-1"), ni * (ni - 1) / 2);
                }
            }
            return Rewrite{"isobaric_whittaker", {e_label(r.label), e_label("phi")}, out, {}};
        }
        return std::nullopt;
    }
    if (a.kind == AtomKind::GaussSum && (families_ & kGauss)) {
        if (a.a == "phi^-1") return Rewrite{"gauss_phi_removal", {e_label("phi")}, {}, {}};
        if (a.a.rfind("omega(", 0) == 0 && a.a.back() == ')') {
            std::string label = a.a.substr(6, a.a.size() - 7);
            if (ctx_.has_rep(label) && ctx_.rep(label).conjugate_self_dual)
                return Rewrite{"gauss_removal", {e_label(label)}, {}, {}};
        }
        return std::nullopt;
    }
    if ((a.kind == AtomKind::ArchAsai || a.kind == AtomKind::ArchRS) && (families_ & kArchValues)) {
        auto it = ctx_.arch_values().find(a);
        if (it == ctx_.arch_values().end()) return std::nullopt;
        return Rewrite{a.kind == AtomKind::ArchAsai ? "arch_asai_value" : "arch_rs_value", {}, it->second.first, it->second.second};
    }
    return std::nullopt;
}

std::optional<Rewriter::Rewrite> Rewriter::hecke_rule(const PeriodAtom& a) const {
    if (a.kind != AtomKind::LValue) return std::nullopt;
    if (a.lkind == LKind::Hecke) {
        FieldTag tag{gal_label(a.chr.field)};
        for (const auto& f : a.chr.factors) tag.join({e_label(f.name)});
        return Rewrite{"blasius", tag, rule_blasius(ctx_, a), {}};
    }
    if (auto z = apply_zeta_rule(ctx_, a)) return Rewrite{a.lkind == LKind::DedekindZeta ? "zeta_even" : "quadratic_odd", {}, *z, {}};
    return std::nullopt;
}

std::optional<Rewriter::Rewrite> Rewriter::structural_rule(const PeriodAtom& a) const {
    if (a.kind != AtomKind::CMPeriod) return std::nullopt;
    if (a.emb.size() > 1) {
        PeriodMonomial out;
        for (const auto& e : a.emb) out.mul(PeriodAtom::cm_period(a.chr, {e}), 1);
        return Rewrite{"partition", {}, out, {}};
    }
    const Embedding& e = a.emb.front();
    if (a.chr.factors.size() > 1) {
        PeriodMonomial out;
        FieldTag tag;
        for (const auto& f : a.chr.factors) {
            out.mul(PeriodAtom::cm_period(CharExpr::of(a.chr.field, {f}), {e}), 1);
            tag.join({e_label(f.name)});
        }
        return Rewrite{"multiplicativity", tag, out, {}};
    }
    if (a.chr.factors.empty()) return Rewrite{"finite_order", {}, {}, {}};
    CharFactor f = a.chr.factors.front();
    if (f.power != 1) {
        long long p = f.power;
        f.power = 1;
        return Rewrite{"multiplicativity", {e_label(f.name)}, PeriodMonomial(PeriodAtom::cm_period(CharExpr::of(a.chr.field, {f}), {e}), p), {}};
    }
    const auto& c = ctx_.character(f.name);
    if (c.finite_order) return Rewrite{"finite_order", {e_label(f.name)}, {}, {}};
    if (c.norm) return Rewrite{"norm_character", {}, PeriodMonomial::two_pi_i(f.check ? 1 : -1), {}};
    if (f.home != a.chr.field) {
        if (ctx_.is_subfield(f.home, a.chr.field)) {
            auto chr = CharExpr::of(f.home, {f});
            return Rewrite{"norm_collapse", {e_label(f.name), gal_label(a.chr.field)},
                           PeriodMonomial(PeriodAtom::cm_period(chr, {ctx_.restrict(e, f.home)})), {}};
        }
        const auto& k = ctx_.field(a.chr.field);
        if (k.kind == FieldKind::Flat && k.left == f.home) {
            if (f.conj || f.shift) throw MathError("restriction of a twisted character is not supported");
            CharFactor twisted = f;
            twisted.conj = true;
            twisted.shift = k.n / 2;
            auto chr = CharExpr::of(f.home, {f, twisted});
            Embedding up{f.home, e.iota, e.i, 0, false};
            return Rewrite{"restriction_lift", {e_label(f.name), gal_label(f.home)}, PeriodMonomial(PeriodAtom::cm_period(chr, {up})), {}};
        }
        throw MathError("cannot relate " + f.name + " on " + f.home + " to " + a.chr.field);
    }
    if (f.conj) {
        CharFactor g = f;
        g.conj = false;
        return Rewrite{"conjugation", {e_label(f.name), gal_label(f.home)},
                       PeriodMonomial(PeriodAtom::cm_period(CharExpr::of(f.home, {g}), {ctx_.conj(e)})), {}};
    }
    if (f.shift) {
        CharFactor g = f;
        g.shift = 0;
        return Rewrite{"galois_translation", {e_label(f.name), gal_label(f.home)},
                       PeriodMonomial(PeriodAtom::cm_period(CharExpr::of(f.home, {g}), {ctx_.translate(e, f.shift)})), {}};
    }
    return std::nullopt;
}

namespace {

void record(DerivationTrace& t, PeriodMonomial& cur, std::string rule, FieldTag tag, PeriodMonomial matched,
            PeriodMonomial replacement, const std::vector<std::string>& assumptions) {
    cur *= matched.inverse();
    cur *= replacement;
    for (const auto& s : assumptions)
        if (std::find(t.assumptions.begin(), t.assumptions.end(), s) == t.assumptions.end()) t.assumptions.push_back(s);
    t.steps.push_back({std::move(rule), std::move(tag), std::move(matched), std::move(replacement)});
}

}  // namespace

bool Rewriter::run_stage(DerivationTrace& t, PeriodMonomial& cur, int stage) const {
    bool any = false;
    for (;;) {
        bool changed = false;
        std::vector<PeriodAtom> snapshot;
        snapshot.reserve(cur.size());
        for (const auto& [atom, e] : cur.exponents()) snapshot.push_back(atom);
        for (const auto& atom : snapshot) {
            long long e = cur.exponent(atom);
            if (e == 0) continue;
            std::optional<Rewrite> rw = stage == 0 ? rep_rule(atom) : stage == 1 ? hecke_rule(atom) : structural_rule(atom);
            if (!rw) continue;
            record(t, cur, rw->rule, rw->tag, PeriodMonomial(atom, e), rw->replacement.pow(e), rw->assumptions);
            changed = true;
        }
        if (!changed) break;
        any = true;
    }
    return any;
}

void Rewriter::pairing_stage(DerivationTrace& t, PeriodMonomial& cur) const {
    auto pair_exponent = [](long long x, long long y) -> long long {
        if (x > 0 && y > 0) return std::min(x, y);
        if (x < 0 && y < 0) return std::max(x, y);
        return 0;
    };
    auto once = [](long long x, long long y) -> long long {
        if (x > 0 && y > 0) return 1;
        if (x < 0 && y < 0) return -1;
        return 0;
    };
    auto cancel = [&](const std::string& name, const std::string& home, PeriodMonomial per_pair, const std::string& rule,
                      auto&& amount) {
        auto chr = CharExpr::of(home, {{name, home, true}});
        for (const auto& e : ctx_.embeddings(home)) {
            if (e.bar) continue;
            auto p = PeriodAtom::cm_period(chr, {e});
            auto q = PeriodAtom::cm_period(chr, {ctx_.conj(e)});
            long long k = amount(cur.exponent(p), cur.exponent(q));
            if (k == 0) continue;
            PeriodMonomial matched(p, k);
            matched.mul(q, k);
            record(t, cur, rule, {e_label(name)}, matched, per_pair.pow(k), {});
        }
    };
    cancel("phi", "F", PeriodMonomial::two_pi_i(1), "phi_pairing", pair_exponent);
    for (const auto& name : pair_self_dual_) {
        const auto& c = ctx_.character(name);
        if (!c.conjugate_self_dual) throw ValidationError("character " + name + " is not conjugate self-dual");
        cancel(name, c.field, {}, "self_dual_pairing", once);
    }
}

DerivationTrace Rewriter::run(const PeriodMonomial& start) const {
    DerivationTrace t;
    t.initial = start;
    PeriodMonomial cur = start;
    run_stage(t, cur, 0);
    if (families_ & kHecke) {
        run_stage(t, cur, 1);
        run_stage(t, cur, 2);
        pairing_stage(t, cur);
    }
    t.final = cur;
    return t;
}

}  // namespace lsym
