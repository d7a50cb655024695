#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lsym/euler.hpp"

namespace lsym {

// Unramified character of a local multiplicative group, recorded by its value at a uniformizer.
struct UnramifiedChar {
    LaurentPoly eigenvalue;
    bool conjugate_dual = true;  // the value at the conjugate place is the inverse
};

enum class PlaceKind { Split, Inert };

std::string to_string(PlaceKind k);
PlaceKind place_kind_from_string(const std::string& s);

struct VerificationReport {
    std::string case_id;
    std::string lhs;  // canonical denominator
    std::string rhs;
    bool equal = false;
    double elapsed_ms = 0.0;
    int degree = 0;  // X-degree of the left side
    std::vector<std::pair<std::string, bool>> checks;  // named sub-checks folded into `equal`
};

// prod over a in A, b in B of (1 - a*b*X^f).
EulerFactorDenom rs_local_factor(const Multiset& a, const Multiset& b, int f);

// Twisted tensor factor at a place split in the quadratic extension: prod (1 - a*b*X).
EulerFactorDenom asai_local_factor_split(const Multiset& at_w1, const Multiset& at_w2);

// Twisted tensor factor at an inert place for a representation induced from unramified
// characters: prod_chi (1 - sign*chi*X) * prod over unordered pairs (1 - chi*chi'*X^2).
// `sign` is the value of the twisting character at a uniformizer (+1 or -1).
EulerFactorDenom asai_local_factor_inert(const std::vector<std::vector<UnramifiedChar>>& blocks, int sign);

// Sign of the twisting character for rank n: -1 for odd n, +1 for even n.
int gamma_sign(int n);

// Split-place Satake data of a conjugate self-dual block: fresh symbols at w1, inverses at w2.
std::pair<Multiset, Multiset> split_block_data(int block, int size);
// Inert-place Satake data of a conjugate self-dual block: pairs (x, 1/x) plus a central sign when size is odd.
std::vector<UnramifiedChar> inert_block_data(int block, int size, int central_sign);

// Factorization of the twisted tensor L-factor of an isobaric sum of conjugate self-dual blocks.
VerificationReport verify_lemma32(const std::vector<int>& parts, PlaceKind kind);

// All ordered partitions (compositions) of n.
std::vector<std::vector<int>> compositions(int n);

}  // namespace lsym
