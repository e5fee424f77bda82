// Bounded exhaustive classification of dimension-6 fixed-point data with 4
// fixed points. Candidates are generated per multigraph type over a gap grid
// with edge weights ranging over divisors of the corresponding moment gaps,
// run through the full check battery plus the ring/Chern cross-checks, and
// the survivors are matched against the four parametric families.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamfp/checks.hpp"
#include "hamfp/core.hpp"

namespace hamfp {

enum class GraphType { type1 = 1, type2 = 2, type3 = 3 };

/// Multigraph shape of 4-point data. The pairs P_0 P_1 and P_2 P_3 always
/// carry exactly one edge; the remaining four edge-endpoints fall into one of
/// three patterns:
///   type1: one edge between every pair,
///   type2: double edges P_1 P_2 and P_0 P_3,
///   type3: double edges P_0 P_2 and P_1 P_3.
/// Any other pattern is impossible for structurally valid data
/// (Errc::unknown_graph_shape signals a model bug or invalid input).
Result<GraphType> graph_type(const FixedPointData& data);

enum class Family { f1a, f1b, f2a, f2b, unclassified };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct FamilyMatch {
    Family family = Family::unclassified;
    std::vector<Int> params;  // (a,b,c) for 1a; (a,b) for 1b; empty otherwise

    json to_json() const;
};

/// Tests the input against the four parametric templates, modulo moment
/// translation. A match regenerates the translated input exactly.
FamilyMatch match_family(const FixedPointData& data);

/// Canonical data for a family match (translated to phi(P_0) = 0).
std::optional<FixedPointData> regenerate(const FamilyMatch& match);

struct EnumerateOptions {
    std::optional<GraphType> graph_filter;
    VerifyOptions verify;
    int jobs = 1;
};

struct EnumeratedEntry {
    FixedPointData data;
    VerificationReport report;
    FamilyMatch family;
};

struct EnumerationResult {
    std::vector<EnumeratedEntry> entries;  // sorted canonically, deduplicated
    long long candidates = 0;
    // First failing check per rejected candidate; survivors are not counted.
    std::map<std::string, long long> rejections;

    json summary_json(bool with_histogram) const;
};

/// Exhaustive search over gaps 1 <= a,b,c <= max_gap. The edge P_0 P_1 is
/// forced to weight a and P_2 P_3 to weight c (the canonical basis makes
/// [omega] the degree-2 generator); all other weights range over the divisors
/// of their moment gaps. Unordered weight pairs on double edges are generated
/// once, so results are duplicate-free by construction. Output is identical
/// for any jobs count.
EnumerationResult enumerate_candidates(int max_gap, const EnumerateOptions& opts = {});

}  // namespace hamfp
