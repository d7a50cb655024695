#include "lsym/induction.hpp"

#include <chrono>
#include <numeric>
#include <set>
#include <utility>

#include "lsym/errors.hpp"

namespace lsym {

std::string to_string(ConjAction a) {
    switch (a) {
        case ConjAction::SplitV: return "SplitV";
        case ConjAction::InertAllFixed: return "InertAllFixed";
        case ConjAction::InertHalfSwap: return "InertHalfSwap";
    }
    return "?";
}

ConjAction conj_action_from_string(const std::string& s) {
    if (s == "SplitV") return ConjAction::SplitV;
    if (s == "InertAllFixed") return ConjAction::InertAllFixed;
    if (s == "InertHalfSwap") return ConjAction::InertHalfSwap;
    throw ValidationError("unknown conjugation action '" + s + "'");
}

bool admissible(int n, int m, ConjAction a) {
    if (n < 2 || m < 1 || n % m != 0) return false;
    int l = n / m;
    switch (a) {
        case ConjAction::SplitV: return true;
        case ConjAction::InertAllFixed: return l % 2 == 1;  // the decomposition group Z/l x Z/2 must be cyclic
        case ConjAction::InertHalfSwap: return m % 2 == 0;
    }
    return false;
}

void InducedDatum::validate() const {
    if (n == 1) throw ValidationError("degree-one induction is degenerate");
    if (n < 2) throw ValidationError("induction degree must be at least 2");
    if (m < 1 || l < 1 || m * l != n) throw ValidationError("induced datum needs m*l = n");
    if (action == ConjAction::InertHalfSwap && m % 2 != 0)
        throw ValidationError("half-swap conjugation needs an even number of places");
    if (action == ConjAction::InertAllFixed && l % 2 == 0)
        throw ValidationError("conjugation fixing every place needs odd residue degree l");
    if (std::gcd(((zeta_power % l) + l) % l, l) != 1 && l > 1)
        throw ValidationError("zeta power must be coprime to l");
}

std::string InducedDatum::label() const {
    std::string s = "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",l=" + std::to_string(l) + "," + to_string(action);
    if (zeta_power != 1) s += ",zeta^" + std::to_string(zeta_power);
    return s;
}

std::vector<InducedDatum> induced_grid(int max_n) {
    std::vector<InducedDatum> out;
    for (int n = 2; n <= max_n; ++n)
        for (int m = 1; m <= n; ++m) {
            if (n % m != 0) continue;
            for (ConjAction a : {ConjAction::SplitV, ConjAction::InertAllFixed, ConjAction::InertHalfSwap})
                if (admissible(n, m, a)) out.push_back({n, m, n / m, a, 1});
        }
    return out;
}

LaurentPoly place_eigenvalue(const InducedDatum& d, int i) {
    if (i < 1 || i > d.m) throw ValidationError("place index out of range");
    switch (d.action) {
        case ConjAction::SplitV: return LaurentPoly(Symbol::eigenvalue(i));
        case ConjAction::InertAllFixed: return LaurentPoly(1LL);
        case ConjAction::InertHalfSwap:
            if (i <= d.m / 2) return LaurentPoly(Symbol::eigenvalue(i));
            return LaurentPoly(Symbol::eigenvalue(i - d.m / 2)).inverse_unit();
    }
    return LaurentPoly(1LL);
}

LaurentPoly place_root(const InducedDatum& d, int i) {
    if (d.l == 1) return place_eigenvalue(d, i);
    if (i < 1 || i > d.m) throw ValidationError("place index out of range");
    switch (d.action) {
        case ConjAction::SplitV: return LaurentPoly(Symbol::root(i, d.l));
        case ConjAction::InertAllFixed: return LaurentPoly(1LL);
        case ConjAction::InertHalfSwap:
            if (i <= d.m / 2) return LaurentPoly(Symbol::root(i, d.l));
            return LaurentPoly(Symbol::root(i - d.m / 2, d.l)).inverse_unit();
    }
    return LaurentPoly(1LL);
}

namespace {

Multiset eigenvalues_with(const InducedDatum& d, bool conjugate) {
    d.validate();
    const Cyclotomic sign(d.n % 2 == 0 ? -1 : 1);
    Multiset out;
    out.reserve(static_cast<std::size_t>(d.n));
    for (int i = 1; i <= d.m; ++i) {
        LaurentPoly u = place_root(d, i);
        if (conjugate) u = u.inverse_unit();
        for (int a = 1; a <= d.l; ++a) {
            Cyclotomic z = d.l == 1 ? Cyclotomic(1) : Cyclotomic::zeta(d.l, static_cast<long long>(d.zeta_power) * a);
            out.push_back(LaurentPoly(u).scale(z * sign));
        }
    }
    return out;
}

// Z/n x Z/2 with theta = (1,0) and c = (0,1).
struct Elem {
    int a, b;
    friend bool operator<(Elem x, Elem y) { return x.b != y.b ? x.b < y.b : x.a < y.a; }
    friend bool operator==(Elem x, Elem y) { return x.a == y.a && x.b == y.b; }
};

struct PlaceModel {
    int n;
    std::set<Elem> D;

    Elem add(Elem x, Elem y) const { return {(x.a + y.a) % n, (x.b + y.b) % 2}; }

    std::set<Elem> generate(std::vector<Elem> gens) const {
        std::set<Elem> s{{0, 0}};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Elem> cur(s.begin(), s.end());
            for (Elem x : cur)
                for (Elem g : gens)
                    if (s.insert(add(x, g)).second) grew = true;
        }
        return s;
    }

    // canonical representatives of G/H
    std::vector<Elem> cosets(const std::set<Elem>& H) const {
        std::set<Elem> seen;
        std::vector<Elem> reps;
        for (int b = 0; b < 2; ++b)
            for (int a = 0; a < n; ++a) {
                Elem x{a, b};
                if (seen.count(x)) continue;
                reps.push_back(x);
                for (Elem h : H) seen.insert(add(x, h));
            }
        return reps;
    }
};

PlaceModel make_model(const InducedDatum& d) {
    PlaceModel pm{d.n, {}};
    switch (d.action) {
        case ConjAction::SplitV: pm.D = pm.generate({{d.m % d.n, 0}}); break;
        case ConjAction::InertAllFixed: pm.D = pm.generate({{d.m % d.n, 0}, {0, 1}}); break;
        case ConjAction::InertHalfSwap: pm.D = pm.generate({{d.m / 2, 1}}); break;
    }
    return pm;
}

LaurentPoly value_at(const InducedDatum& d, Elem x) {
    int i = x.a % d.m;
    if (i == 0) i = d.m;
    LaurentPoly t = place_eigenvalue(d, i);
    return x.b == 0 ? t : t.inverse_unit();
}

// value of the character at the L-place x*D, checked to be constant on the coset
LaurentPoly coset_value(const InducedDatum& d, const PlaceModel& pm, Elem x) {
    LaurentPoly t = value_at(d, x);
    for (Elem h : pm.D)
        if (value_at(d, pm.add(x, h)) != t) throw MathError("character values are not constant on a decomposition coset");
    return t;
}

}  // namespace

Multiset induced_eigenvalues(const InducedDatum& d) { return eigenvalues_with(d, false); }

Multiset induced_eigenvalues_conjugate(const InducedDatum& d) {
    if (d.action != ConjAction::SplitV) throw ValidationError("conjugate place exists only when v splits");
    return eigenvalues_with(d, true);
}

EulerFactorDenom prop34_square(const InducedDatum& d) {
    Multiset a = induced_eigenvalues(d);
    EulerFactorDenom s;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j) s.mul_linear(a[i] * a[j], 1);
    return s;
}

EulerFactorDenom prop34_lhs(const InducedDatum& d) {
    d.validate();
    if (d.action == ConjAction::SplitV)
        return asai_local_factor_split(induced_eigenvalues(d), induced_eigenvalues_conjugate(d)).substitute_roots();
    Multiset a = induced_eigenvalues(d);
    const Cyclotomic g(gamma_sign(d.n));
    EulerFactorDenom lhs;
    for (const auto& x : a) lhs.mul_linear(LaurentPoly(x).scale(g), 1);
    lhs *= poly_sqrt(prop34_square(d)).inflate(2);
    return lhs.substitute_roots();
}

EulerFactorDenom prop34_rhs(const InducedDatum& d) {
    d.validate();
    PlaceModel pm = make_model(d);
    const int dsize = static_cast<int>(pm.D.size());
    const Elem c{0, 1};
    const bool c_in_d = pm.D.count(c) > 0;
    std::vector<Elem> l_places = pm.cosets(pm.D);

    EulerFactorDenom rhs;
    int kmax = d.n % 2 == 1 ? (d.n - 1) / 2 : (d.n - 2) / 2;
    for (int k = 1; k <= kmax; ++k) {
        Elem shift{k % d.n, 1};
        for (Elem w : l_places)
            rhs.mul_linear(coset_value(d, pm, w) * coset_value(d, pm, pm.add(shift, w)), dsize);
    }

    // quadratic character of L/L+ at the places of L+
    std::set<Elem> dc = pm.D;
    dc.insert(c);
    dc = pm.generate(std::vector<Elem>(dc.begin(), dc.end()));
    int f_plus = c_in_d ? dsize / 2 : dsize;
    for (std::size_t p = 0; p < pm.cosets(dc).size(); ++p) rhs.mul_linear(LaurentPoly(c_in_d ? -1LL : 1LL), f_plus);

    if (d.n % 2 == 0) {
        const Elem h{d.n / 2, 1};
        std::set<Elem> dh = pm.D;
        dh.insert(h);
        dh = pm.generate(std::vector<Elem>(dh.begin(), dh.end()));
        const bool h_in_d = pm.D.count(h) > 0;
        for (Elem w : pm.cosets(dh)) {
            if (h_in_d)
                rhs.mul_linear(-coset_value(d, pm, w), dsize / 2);
            else
                rhs.mul_linear(coset_value(d, pm, w) * coset_value(d, pm, pm.add(h, w)), dsize);
        }
    }
    return rhs;
}

EulerFactorDenom all_fixed_closed_form(int m, int l) {
    if (m < 1 || l < 1) throw ValidationError("closed form needs positive m and l");
    EulerFactorDenom e;
    for (int i = 0; i < m; ++i) e.mul_linear(LaurentPoly(-1LL), l);
    int pairs = (m * m * l - m) / 2;
    for (int i = 0; i < pairs; ++i) e.mul_linear(LaurentPoly(1LL), 2 * l);
    return e;
}

VerificationReport verify_prop34(const InducedDatum& d) {
    d.validate();
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.case_id = "prop34:" + d.label();
    EulerFactorDenom lhs = prop34_lhs(d);
    EulerFactorDenom rhs = prop34_rhs(d);
    rep.equal = lhs == rhs;
    rep.checks.emplace_back("lhs_equals_rhs", rep.equal);
    rep.checks.emplace_back("degree_n_squared", lhs.degree() == d.n * d.n && rhs.degree() == d.n * d.n);
    if (d.action != ConjAction::SplitV) {
        // the extracted root must agree with the product over unordered pairs
        Multiset a = induced_eigenvalues(d);
        EulerFactorDenom pairs;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j) pairs.mul_linear(a[i] * a[j], 1);
        rep.checks.emplace_back("sqrt_matches_pair_product", poly_sqrt(prop34_square(d)) == pairs);
    }
    if (d.action == ConjAction::InertAllFixed && d.n % 2 == 1)
        rep.checks.emplace_back("closed_form", lhs == all_fixed_closed_form(d.m, d.l));
    if (d.l >= 3) {
        InducedDatum other = d;
        other.zeta_power = d.l - 1;
        rep.checks.emplace_back("zeta_independent", prop34_lhs(other) == lhs);
    }
    for (const auto& [name, ok] : rep.checks) rep.equal = rep.equal && ok;
    rep.degree = lhs.degree();
    rep.lhs = lhs.canonical();
    rep.rhs = rhs.canonical();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace lsym
