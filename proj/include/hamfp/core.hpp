// Data model for the fixed-point data of a Hamiltonian circle action with
// minimal isolated fixed points: n+1 ordered fixed points with exact integer
// moment values, and a multiset of isotropy edges carrying positive integer
// weights. An edge of weight w between a lower and an upper point contributes
// the signed weight +w at the lower point and -w at the upper one.
//
// All values are immutable after construction and every operation is a pure
// function, so everything here is safe to share across threads.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hamfp/numeric.hpp"
#include "hamfp/result.hpp"

namespace hamfp {

struct FixedPoint {
    int id = 0;
    Int moment;
};

struct IsotropyEdge {
    int lower = 0;
    int upper = 0;
    Int weight;  // > 0
};

/// Canonical edge order: lexicographic by (lower, upper, weight).
bool edge_less(const IsotropyEdge& a, const IsotropyEdge& b);
bool operator==(const IsotropyEdge& a, const IsotropyEdge& b);

struct FixedPointData {
    int half_dimension = 0;           // n
    std::vector<FixedPoint> points;   // ids 0..n, strictly increasing moment
    std::vector<IsotropyEdge> edges;  // n(n+1)/2 edges in canonical order

    int n() const { return half_dimension; }
    int num_points() const { return int(points.size()); }
    const Int& moment(int i) const { return points[size_t(i)].moment; }
    /// Moment gap between consecutive points i and i+1.
    Int gap(int i) const { return moment(i + 1) - moment(i); }
};

/// Equality is on canonical form; data built through build() is canonical.
bool operator==(const FixedPointData& a, const FixedPointData& b);
/// Total order used for deterministic deduplication and output ordering.
bool operator<(const FixedPointData& a, const FixedPointData& b);

struct WeightProfile {
    std::vector<Int> weights;  // signed weights, ascending
    Int lambda_minus;          // product of the negative weights (empty product = 1)
    Int lambda_full;           // product of all weights
    Int gamma;                 // sum of weights
    Int sigma2;                // degree-2 elementary symmetric polynomial
    int index = 0;             // Morse index, 2 * (number of negative weights)
};

/// Sorts edges into canonical order in place.
void canonicalize(FixedPointData& data);

/// Structural validation: point ids and ordering, edge endpoints and counts,
/// weight divisibility of moment gaps, Morse index pattern. Returns every
/// violation found, empty when the data is valid.
std::vector<Failure> validate(const FixedPointData& data);

/// Validated construction from raw parts. Edges may be given in any order.
Result<FixedPointData> build(const std::vector<std::pair<int, Int>>& points,
                             std::vector<IsotropyEdge> edges, int half_dimension);

/// Signed weight multiset at point i (ascending): +w for each edge with i as
/// lower endpoint, -w for each with i as upper endpoint.
std::vector<Int> weights_of(const FixedPointData& data, int i);

WeightProfile profile_point(const FixedPointData& data, int i);
std::vector<WeightProfile> profile(const FixedPointData& data);

/// Moment map negation: moment values negated, points relabelled so the
/// ordering invariant holds, edges preserved. The weights of new point i are
/// the negated weights of old point n-i. An exact involution.
FixedPointData reverse(const FixedPointData& data);

/// Shifts every moment value by delta. Everything derived is unchanged.
FixedPointData translate(const FixedPointData& data, const Int& delta);

/// Multiplies all moment values and weights by m >= 1. Preserves structural
/// validity; destroys effectiveness for m > 1.
FixedPointData scaled(const FixedPointData& data, const Int& m);

bool equal_up_to_translation(const FixedPointData& a, const FixedPointData& b);

// JSON wire format:
// {"half_dimension":3,"points":[{"id":0,"moment":0},...],
//  "edges":[{"lower":0,"upper":1,"weight":1},...]}
// Emission is deterministic: canonical edge order, sorted keys, no whitespace.
json to_json(const FixedPointData& data);
std::string emit(const FixedPointData& data);

/// Field-level decoding only: keys, integer fields, point ids 0..n in order,
/// well-formed edges. Structural invariants (monotone moments, edge counts,
/// divisibility, index pattern) are NOT enforced, so a decoded document can
/// be handed to the verifier and fail there with a proper report.
Result<FixedPointData> decode_json(const json& j);
Result<FixedPointData> decode_text(const std::string& text);

/// Decoding plus full structural validation (same contract as build()).
Result<FixedPointData> from_json(const json& j);
Result<FixedPointData> parse_data(const std::string& text);

}  // namespace hamfp
