#pragma once

#include <string>
#include <vector>

#include "lsym/satake.hpp"

namespace lsym {

// How complex conjugation meets the decomposition group of the base place v.
enum class ConjAction {
    SplitV,         // v splits in the CM field
    InertAllFixed,  // v inert, conjugation fixes every place of the cyclic extension above it
    InertHalfSwap,  // v inert, conjugation moves place i to place i + m/2
};

std::string to_string(ConjAction a);
ConjAction conj_action_from_string(const std::string& s);

// Unramified data of a character of a cyclic degree-n extension L/F at the places above v.
struct InducedDatum {
    int n = 0;  // [L:F]
    int m = 0;  // number of L-places above a place of F over v
    int l = 0;  // residue degree of those places, n = m*l
    ConjAction action = ConjAction::SplitV;
    int zeta_power = 1;  // the primitive l-th root used is zeta_l^zeta_power

    void validate() const;  // throws ValidationError
    std::string label() const;
};

// Admissible data for all n in [2, max_n], in a fixed order.
std::vector<InducedDatum> induced_grid(int max_n);
bool admissible(int n, int m, ConjAction a);

// Value of the character at a uniformizer of L-place i (1..m), after imposing the datum's constraints,
// and the chosen l-th root of that value.
LaurentPoly place_eigenvalue(const InducedDatum& d, int i);
LaurentPoly place_root(const InducedDatum& d, int i);

// Satake parameters of the induced representation at a place of F above v (eta-twisted for even n).
Multiset induced_eigenvalues(const InducedDatum& d);
// Same, at the conjugate place (split case only).
Multiset induced_eigenvalues_conjugate(const InducedDatum& d);

// Left side: twisted tensor factor of the induced representation, via the square-root
// construction at inert places. Reduced by root substitution.
EulerFactorDenom prop34_lhs(const InducedDatum& d);
// Square of the auxiliary polynomial at inert places: prod over ordered i != j of (1 - a_i a_j X).
EulerFactorDenom prop34_square(const InducedDatum& d);

// Right side: product of the shifted pairing factors, the quadratic factor of L/L+, and
// for even n the factor of the restriction to the index-two subfield fixed by theta^{n/2} c.
EulerFactorDenom prop34_rhs(const InducedDatum& d);

VerificationReport verify_prop34(const InducedDatum& d);

// (1 + X^l)^m (1 - X^{2l})^{(m^2 l - m)/2}
EulerFactorDenom all_fixed_closed_form(int m, int l);

}  // namespace lsym
