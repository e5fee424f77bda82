// Independent validators over fixed-point data. Each check is a pure function
// returning a CheckResult whose witness explains any failure (and for the c1
// check carries the constant k on success). verify_all runs the full battery
// in a fixed order and aggregates a report.
#pragma once

#include <string>
#include <vector>

#include "hamfp/core.hpp"

namespace hamfp {

struct CheckResult {
    std::string name;
    bool passed = false;
    json witness;  // non-null whenever passed == false

    json to_json() const {
        json j{{"name", name}, {"passed", passed}};
        if (!witness.is_null()) j["witness"] = witness;
        return j;
    }
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool overall = false;  // conjunction of the individual results

    const CheckResult* find(const std::string& name) const;
    json to_json() const;
};

namespace check_name {
inline constexpr const char* structural = "structural";
inline constexpr const char* index_pattern = "index_pattern";
inline constexpr const char* effectiveness = "effectiveness";
inline constexpr const char* c1_constant = "c1_constant";
inline constexpr const char* largest_weight_index = "largest_weight_index";
inline constexpr const char* smallest_weight_pairing = "smallest_weight_pairing";
inline constexpr const char* mod_congruence = "mod_congruence";
inline constexpr const char* isotropy_components = "isotropy_components";
inline constexpr const char* poincare_duality = "poincare_duality";
}  // namespace check_name

std::vector<std::string> all_check_names();

struct VerifyOptions {
    // Primitive [omega] forces the c1 proportionality constant to be an
    // integer; allow a rational k for un-normalized data.
    bool require_integral_k = true;
    // Check names to skip (negative-control experiments).
    std::vector<std::string> disabled_checks;
};

/// Wraps structural validation as a named check.
CheckResult check_structural(const FixedPointData& data);

/// Point i must have exactly i negative weights (Morse index 2i).
CheckResult check_index_pattern(const FixedPointData& data);

/// gcd of the absolute weights at every fixed point is 1; a common divisor
/// m > 1 would make a Z_m subgroup act trivially near the point.
CheckResult check_effectiveness(const FixedPointData& data);

/// There is a single constant k with gamma_i - gamma_j = k (phi_j - phi_i)
/// for all pairs; this is c1(M) = k [omega] read off at the fixed points.
/// Witness carries k on success.
CheckResult check_c1_constant(const FixedPointData& data, bool require_integral_k = true);

/// Exposed for callers that already ran check_c1_constant.
std::optional<Rat> c1_slope(const FixedPointData& data);

/// For every edge (P,Q,w) such that w is the largest absolute weight at both
/// endpoints, -w is not a weight at P and -w has multiplicity 1 at Q:
/// j - i + 1 = k (phi(Q) - phi(P)) / w where 2i, 2j are the Morse indices.
/// Only edges meeting all hypotheses are enforced; the witness records which
/// edges were applicable.
CheckResult check_largest_weight_index(const FixedPointData& data, const Rat& k);

/// Smallest positive weight pairing: with w the smallest positive weight on
/// the data, the number of +w at index-2m points equals the number of -w at
/// index-(2m+2) points, for every level m.
CheckResult check_smallest_weight_pairing(const FixedPointData& data);

/// For every edge (P,Q,w) with w > 1 the weight multisets at P and Q are
/// congruent mod w.
CheckResult check_mod_congruence(const FixedPointData& data);

/// For each m >= 2 dividing some edge weight, the subgraph of edges with
/// m | w approximates the Z_m-fixed submanifold: every point of a connected
/// component must carry the same number d of weights divisible by m, the
/// component must contain at least d+1 fixed points, and the extremal points
/// of the component must have all their component weights positive (minimum)
/// resp. negative (maximum). Divisors are enumerated by trial division, so
/// this is meant for search-sized weights, not cryptographic ones.
CheckResult check_isotropy_components(const FixedPointData& data);

/// Runs all checks in fixed order (structural, index, effectiveness, c1,
/// largest-weight, smallest-weight pairing, mod, isotropy, duality),
/// short-circuiting only on structural failure. The duality check runs for
/// half_dimension == 3, where it reads a2 == a3 on both orientations.
VerificationReport verify_all(const FixedPointData& data, const VerifyOptions& opts = {});

}  // namespace hamfp
