#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsym/period.hpp"

namespace lsym {

enum class Goal {
    AsaiInduced,  // Asai L-value of an induced representation
    RsInduced,    // Rankin-Selberg L-value of two induced representations
    ArchAsai,     // archimedean Asai factor, by comparing two factorizations
    ArchRs,       // archimedean Rankin-Selberg factor
    ThmA,         // Rankin-Selberg value over Whittaker periods
    ThmB,         // Asai value at 1 over the Whittaker period, any isobaric shape
    ThmC,         // Rankin-Selberg value over both Asai values at 1
    ThmE,         // quotient of two critical Rankin-Selberg values
    Delta,        // product of the quadratic and zeta values at 1..n
};

std::string to_string(Goal g);
Goal goal_from_string(const std::string& s);  // throws ValidationError
std::vector<Goal> all_goals();

struct DeriveParams {
    int n = 2;
    int m = 0;  // Rankin-Selberg point 1/2 + m; internal point for ArchAsai
    int l = 0;  // second point for ThmE
    int d = 1;  // degree of the totally real subfield
    std::vector<int> shape;              // ThmB isobaric shape, {n} when empty
    std::optional<CycleDatum> cycle;     // AsaiInduced Galois cycle, standard when empty

    void validate(Goal g) const;  // throws ValidationError
};

struct DeriveCheck {
    std::string name;
    bool ok = false;
};

struct Derivation {
    Goal goal = Goal::ThmA;
    DeriveParams params;
    long long exponent = 0;   // power of 2 pi i in the derived value
    long long expected = 0;   // closed form
    PeriodMonomial residual;  // remaining period factors of the derived value
    PeriodMonomial expected_residual;
    std::vector<std::pair<std::string, DerivationTrace>> traces;
    std::vector<std::string> assumptions;
    FieldTag tag;
    std::vector<DeriveCheck> checks;

    bool ok() const;
    std::size_t step_count() const;
};

long long closed_form(Goal g, const DeriveParams& p);

// Whittaker period of an isobaric sum of conjugate self-dual blocks of the given sizes, expanded into
// periods of the algebraic twists of the blocks and cross L-values. Blocks flagged false in
// conjugate_self_dual make the expansion unavailable (ValidationError).
DerivationTrace derive_isobaric_whittaker(const std::vector<int>& shape, const std::vector<bool>& conjugate_self_dual = {});

Derivation derive(Goal g, const DeriveParams& p);

// Degree of the polynomial interpolating equally spaced samples (-1 for all zeros), or -2 when the
// samples are too few to certify a degree.
int finite_difference_degree(const std::vector<long long>& values);

// Degrees of the engine exponent in n, m and d, sampled on five consecutive values of each.
std::map<std::string, int> engine_degrees(Goal g);
std::map<std::string, int> expected_degrees(Goal g);

}  // namespace lsym
