#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsym/rational.hpp"

namespace lsym {

// Highest weight of an algebraic representation of GL_n over a CM field of degree 2d:
// one pair of weakly decreasing integer vectors per conjugate pair of embeddings.
struct HighestWeight {
    struct Place {
        std::vector<int> mu;      // at the embedding in the CM type
        std::vector<int> mu_bar;  // at its conjugate
    };
    std::vector<Place> places;

    int rank() const;  // n; throws on ragged input
    int degree() const { return static_cast<int>(places.size()); }
    void validate() const;  // weakly decreasing, consistent ranks

    // Build from the CM-type components only; the conjugate components are the dual weights.
    static HighestWeight conjugate_self_dual(const std::vector<std::vector<int>>& mu);
};

std::vector<int> dual_weight(const std::vector<int>& mu);  // (-mu_n, ..., -mu_1)

// Exponents a_{iota,i} per embedding in the CM type, stored doubled, sorted decreasing.
struct InfinityType {
    std::vector<std::vector<int>> doubled;
    BigRational shift;

    int rank() const;
    bool regular() const;  // pairwise distinct exponents at every embedding
    bool conjugate_self_dual() const;  // each embedding's exponents are closed under negation
    std::string to_string() const;  // "[[1/2,-1/2]]"
};

InfinityType infinity_type(const HighestWeight& mu, const BigRational& r);

struct IsobaricShape {
    std::vector<int> parts;
    int total() const;
    void validate() const;
};

std::vector<int> rho_exponents(const IsobaricShape& shape);

enum class Twist { None, Eta };
struct AlgTwist {
    Twist twist;
    int e;  // 0 without twist, -1 with
};
AlgTwist alg_twist(const IsobaricShape& shape, int i);  // 1-based block index

bool no_middle_class(const InfinityType& a, const InfinityType& b, const BigRational& r, const BigRational& s);

enum class AsaiSign { Same, Opposite };  // sign of the Asai L-function relative to (-1)^n

// Critical points stored as a window lo < x <= hi plus a lattice condition, never materialized eagerly.
struct CriticalSet {
    enum class Kind { RankinSelberg, Asai } kind = Kind::RankinSelberg;
    bool has_points = true;  // false signals the no-critical-points case
    BigRational lo_exclusive;
    BigRational hi_inclusive;
    std::optional<AsaiSign> parity;  // Asai only

    bool contains(const BigRational& x) const;
    std::vector<BigRational> enumerate() const;
    std::string to_string() const;  // "{1/2, 3/2}"
};

CriticalSet crit_rankin_selberg(const InfinityType& a, const InfinityType& b, const BigRational& r,
                                const BigRational& s);
CriticalSet crit_asai(const InfinityType& a, AsaiSign sign);

bool piano_check(const HighestWeight& mu, const HighestWeight& mu_prime);
bool sufficiently_regular(const HighestWeight& mu);
long long bottom_degree(int n, int d);

}  // namespace lsym
