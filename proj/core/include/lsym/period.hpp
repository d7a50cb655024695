#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lsym/rational.hpp"

namespace lsym {

class PeriodContext;

// ---------------------------------------------------------------------------
// Cycle combinatorics for the Galois action on embeddings of a cyclic extension

// An n-cycle s of {1..n}, stored 1-based: s[i-1] is the image of i.
struct CycleDatum {
    int n = 0;
    std::vector<int> s;

    void validate() const;  // permutation of {1..n} of order exactly n
    int apply(int i, int k) const;  // s^k(i), any integer k

    static CycleDatum standard(int n);  // i -> i+1 mod n
    static std::vector<CycleDatum> all_cycles(int n);  // (n-1)! cycles, lexicographic
    static CycleDatum random(int n, std::uint64_t seed);
};

int count_descents(const CycleDatum& c, int i);

// Indices i of the two halves of the CM type attached to the k-th shifted pairing.
struct InducedCmType {
    std::vector<int> top;     // iota_i with i > s^k(i)
    std::vector<int> bottom;  // conjugate embeddings with i < s^k(i)
};
InducedCmType cm_types_induced(const CycleDatum& c, int k);

// ---------------------------------------------------------------------------
// Fields, embeddings, characters

enum class FieldKind { Base, Cyclic, Compositum, Flat };

struct FieldDesc {
    std::string name;
    FieldKind kind = FieldKind::Base;
    int n = 1;                 // Cyclic: degree over the base; Flat: degree of the ambient cyclic field
    std::string left, right;   // Compositum: the two cyclic factors; Flat: the ambient cyclic field
    CycleDatum cycle;          // Cyclic only
};

// One complex embedding. Base: (iota); Cyclic: (iota, i); Compositum: (iota, i, j).
// Embeddings of a Flat field are indexed by the ambient index i and carry no bar flag.
struct Embedding {
    std::string field;
    int iota = 1;
    int i = 0;
    int j = 0;
    bool bar = false;

    std::string to_string() const;  // "L.iota1_2", "LL'.iota1_2_3c"
    auto tie() const { return std::tie(field, iota, i, j, bar); }
    friend bool operator==(const Embedding& a, const Embedding& b) { return a.tie() == b.tie(); }
    friend bool operator<(const Embedding& a, const Embedding& b) { return a.tie() < b.tie(); }
};

// A base Hecke character with an explicit synthetic infinity-type: the exponent of z at each embedding.
struct CharDesc {
    std::string name;
    std::string field;
    std::map<Embedding, int> z_exponent;
    bool conjugate_self_dual = false;
    bool finite_order = false;
    bool norm = false;  // the idele norm character
};

// One factor of a character expression: a base character, optionally twisted by a power of the
// generator of the cyclic Galois group, by complex conjugation, and dualized (check = inverse composed
// with conjugation). Its home field may be a subfield of the expression's field (composition with the norm)
// or contain it (restriction).
struct CharFactor {
    std::string name;
    std::string home;  // field of definition of the base character
    bool check = false;
    bool conj = false;
    int shift = 0;
    int power = 1;

    auto key() const { return std::tie(name, home, check, conj, shift); }
    std::string to_string() const;  // "chi^v^c^th2"
    friend bool operator==(const CharFactor& a, const CharFactor& b) {
        return a.key() == b.key() && a.power == b.power;
    }
    friend bool operator<(const CharFactor& a, const CharFactor& b) {
        if (a.key() != b.key()) return a.key() < b.key();
        return a.power < b.power;
    }
};

struct CharExpr {
    std::string field;
    std::vector<CharFactor> factors;  // canonical: sorted, merged, no zero powers

    static CharExpr of(std::string field, std::vector<CharFactor> factors);
    CharExpr dual() const;  // toggles check on every factor
    std::string to_string() const;
    friend bool operator==(const CharExpr& a, const CharExpr& b) {
        return a.field == b.field && a.factors == b.factors;
    }
    friend bool operator<(const CharExpr& a, const CharExpr& b) {
        return std::tie(a.field, a.factors) < std::tie(b.field, b.factors);
    }
};

// ---------------------------------------------------------------------------
// Representations entering the rewrite rules

enum class RepKind {
    Cuspidal,        // opaque cuspidal representation
    Induced,         // automorphic induction of a character of a cyclic extension (assumed cuspidal)
    Character,       // a Hecke character of the base field viewed on GL_1
    IsobaricChars,   // isobaric sum of Hecke characters of the base field
    Isobaric,        // isobaric sum of cuspidal blocks
};

struct RepDesc {
    std::string label;
    RepKind kind = RepKind::Cuspidal;
    int rank = 1;
    std::string arch;                 // label of the archimedean component
    bool conjugate_self_dual = true;
    std::string character;            // Induced / Character
    std::string field;                // Induced: cyclic field
    std::vector<std::string> blocks;  // labels of the block representations (Character reps for IsobaricChars)
    std::vector<std::string> alg_blocks;  // Isobaric: labels of the algebraic twists of the blocks
    std::vector<int> alg_exponent;        // Isobaric: exponent of phi relating block and twist (0 or -1)
};

// ---------------------------------------------------------------------------
// Period atoms and monomials

enum class AtomKind { TwoPiI, CMPeriod, Whittaker, GaussSum, ArchAsai, ArchRS, LValue };
enum class LKind { Hecke, Asai, RankinSelberg, DedekindZeta, Quadratic };

struct PeriodAtom {
    AtomKind kind = AtomKind::TwoPiI;
    LKind lkind = LKind::Hecke;
    CharExpr chr;                 // CMPeriod, Hecke L-value
    std::vector<Embedding> emb;   // CMPeriod: sorted set of embeddings
    std::string a, b;             // representation / field / arch labels
    bool dual_b = false;          // Rankin-Selberg with the contragredient of b
    BigRational point;            // L-value point, or m for ArchRS

    static PeriodAtom two_pi_i();
    static PeriodAtom cm_period(CharExpr chr, std::vector<Embedding> set);
    static PeriodAtom whittaker(std::string rep);
    static PeriodAtom gauss_sum(std::string label);
    static PeriodAtom arch_asai(std::string arch);
    static PeriodAtom arch_rs(const BigRational& m, std::string arch1, std::string arch2);
    static PeriodAtom hecke_l(const BigRational& s, CharExpr chr);
    static PeriodAtom asai_l(const BigRational& s, std::string rep);
    static PeriodAtom rs_l(const BigRational& s, std::string rep1, std::string rep2, bool dual2 = false);
    static PeriodAtom dedekind_zeta(const BigRational& s, std::string field);
    static PeriodAtom quadratic_l(const BigRational& s, std::string field);

    std::string to_string() const;
    // Well-founded size used to certify that every rewrite step shrinks the monomial.
    long long rank(const PeriodContext& ctx) const;

    friend bool operator==(const PeriodAtom& x, const PeriodAtom& y);
    friend bool operator<(const PeriodAtom& x, const PeriodAtom& y);
};

class PeriodMonomial {
public:
    PeriodMonomial() = default;
    explicit PeriodMonomial(const PeriodAtom& a, long long e = 1);

    static PeriodMonomial two_pi_i(long long e) { return e == 0 ? PeriodMonomial() : PeriodMonomial(PeriodAtom::two_pi_i(), e); }

    const std::map<PeriodAtom, long long>& exponents() const { return e_; }
    long long exponent(const PeriodAtom& a) const;
    long long two_pi_exponent() const { return exponent(PeriodAtom::two_pi_i()); }
    bool is_identity() const { return e_.empty(); }
    std::size_t size() const { return e_.size(); }

    PeriodMonomial& mul(const PeriodAtom& a, long long e);
    PeriodMonomial& operator*=(const PeriodMonomial& o);
    PeriodMonomial pow(long long k) const;
    PeriodMonomial inverse() const { return pow(-1); }
    PeriodMonomial without_two_pi_i() const;
    PeriodMonomial restricted_to(AtomKind kind) const;

    // Sorted descending atom ranks with multiplicity; compares in the multiset order.
    std::vector<long long> measure(const PeriodContext& ctx) const;

    std::string to_string() const;  // "1" for the identity

    friend PeriodMonomial operator*(PeriodMonomial a, const PeriodMonomial& b) { return a *= b; }
    friend bool operator==(const PeriodMonomial& a, const PeriodMonomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const PeriodMonomial& a, const PeriodMonomial& b) { return !(a == b); }

private:
    std::map<PeriodAtom, long long> e_;
};

bool measure_less(const std::vector<long long>& a, const std::vector<long long>& b);

// Join-semilattice of number-field labels over which a relation holds.
class FieldTag {
public:
    FieldTag() = default;
    FieldTag(std::initializer_list<std::string> labels);
    FieldTag& join(const FieldTag& o);
    bool contains(const FieldTag& o) const;
    const std::set<std::string>& labels() const { return labels_; }
    std::string to_string() const;  // "Q" when empty
    friend bool operator==(const FieldTag& a, const FieldTag& b) { return a.labels_ == b.labels_; }

private:
    std::set<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Rules

enum RuleFamily : unsigned {
    kAxioms = 1u << 0,         // imported rationality theorems for cuspidal representations
    kFactorization = 1u << 1,  // Euler-product factorizations of induced and isobaric L-functions
    kWhittaker = 1u << 2,      // Whittaker periods of isobaric sums and characters
    kGauss = 1u << 3,          // Gauss-sum removal
    kArchValues = 1u << 4,     // archimedean factors established by earlier derivations
    kHecke = 1u << 5,          // Blasius, zeta values, CM-period relations and pairings
};

struct RuleInfo {
    std::string name;
    RuleFamily family;
    std::string relation;
    std::string tag;
};
using RuleSet = std::vector<RuleInfo>;

RuleSet rule_cm_relations();
RuleSet rule_zeta_values();
RuleSet all_rules();

struct DerivationStep {
    std::string rule;
    FieldTag tag;
    PeriodMonomial matched;
    PeriodMonomial replacement;
};

struct DerivationTrace {
    PeriodMonomial initial;
    std::vector<DerivationStep> steps;
    PeriodMonomial final;
    std::vector<std::string> assumptions;

    FieldTag joined_tag() const;
    PeriodMonomial replay() const;  // initial with every step applied in order
    bool measure_decreases(const PeriodContext& ctx) const;  // each step strictly shrinks the multiset of atom ranks
};

// Blasius: L(m, chi) ~ (2 pi i)^{m |Phi|} p(chi-check, Phi) with Phi = {e : a_e < a_{conj e}}.
// Throws ValidationError for non-critical characters or non-integral points.
PeriodMonomial rule_blasius(const PeriodContext& ctx, const PeriodAtom& l_value);
// Zeta and quadratic L-values of the stated parity; nullopt outside the rule's range.
std::optional<PeriodMonomial> apply_zeta_rule(const PeriodContext& ctx, const PeriodAtom& l_value);

// Registry of fields, characters, representations and archimedean lemmas for one derivation.
class PeriodContext {
public:
    explicit PeriodContext(int d);

    int d() const { return d_; }

    // For even n this also registers the index-two subfield "<name>b" and its quadratic character "eps_<name>b".
    void add_cyclic_field(const std::string& name, int n, const CycleDatum& cycle);
    void add_compositum(const std::string& name, const std::string& left, const std::string& right);
    void add_flat_field(const std::string& name, const std::string& ambient);
    void add_character(CharDesc c);
    void add_rep(RepDesc r);
    // Exponent data for a character of a cyclic field that is conjugate self-dual: a_i at iota_i, -a_i at its conjugate.
    void add_self_dual_character(const std::string& name, const std::string& field, const std::vector<int>& a);
    void add_standard_base_characters();  // phi, norm, trivial, eps

    // An archimedean factor established elsewhere, consumed by the arch-value rules.
    void set_arch_value(const PeriodAtom& atom, const PeriodMonomial& value, const std::vector<std::string>& assumptions);

    const FieldDesc& field(const std::string& name) const;
    const CharDesc& character(const std::string& name) const;
    const RepDesc& rep(const std::string& label) const;
    bool has_field(const std::string& name) const { return fields_.count(name) != 0; }
    bool has_rep(const std::string& label) const { return reps_.count(label) != 0; }

    std::vector<Embedding> embeddings(const std::string& field) const;
    Embedding conj(const Embedding& e) const;
    Embedding translate(const Embedding& e, int k) const;
    Embedding restrict(const Embedding& e, const std::string& target) const;
    bool is_subfield(const std::string& sub, const std::string& of) const;
    std::string compositum_of(const std::string& left, const std::string& right) const;
    int half_degree(const std::string& field) const;  // number of embeddings divided by two

    int z_exponent(const CharExpr& chr, const Embedding& e) const;
    bool critical(const CharExpr& chr) const;
    std::vector<Embedding> cm_type(const CharExpr& chr) const;

    const std::map<PeriodAtom, std::pair<PeriodMonomial, std::vector<std::string>>>& arch_values() const { return arch_; }

private:
    int factor_exponent(const CharFactor& f, const std::string& expr_field, const Embedding& e) const;
    int twisted_base_exponent(const CharFactor& f, const Embedding& e_home) const;

    int d_;
    std::map<std::string, FieldDesc> fields_;
    std::map<std::string, CharDesc> chars_;
    std::map<std::string, RepDesc> reps_;
    std::map<PeriodAtom, std::pair<PeriodMonomial, std::vector<std::string>>> arch_;
};

// Staged deterministic rewriting: representation-level rules, then Blasius and zeta values, then the
// structural CM-period relations to a fixpoint, then the pairing cancellations.
class Rewriter {
public:
    Rewriter(const PeriodContext& ctx, unsigned families);

    // Conjugate self-dual characters whose periods at a conjugate pair of embeddings cancel once in the pairing stage.
    void pair_self_dual(std::vector<std::string> chars) { pair_self_dual_ = std::move(chars); }

    DerivationTrace run(const PeriodMonomial& start) const;

private:
    struct Rewrite {
        std::string rule;
        FieldTag tag;
        PeriodMonomial replacement;
        std::vector<std::string> assumptions;
    };
    std::optional<Rewrite> rep_rule(const PeriodAtom& a) const;
    std::optional<Rewrite> hecke_rule(const PeriodAtom& a) const;
    std::optional<Rewrite> structural_rule(const PeriodAtom& a) const;
    bool run_stage(DerivationTrace& t, PeriodMonomial& cur, int stage) const;
    void pairing_stage(DerivationTrace& t, PeriodMonomial& cur) const;

    const PeriodContext& ctx_;
    unsigned families_;
    std::vector<std::string> pair_self_dual_;
};

}  // namespace lsym
