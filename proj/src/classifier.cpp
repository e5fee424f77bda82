#include "hamfp/classifier.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <thread>

#include "hamfp/catalog.hpp"
#include "hamfp/invariants.hpp"

namespace hamfp {

Result<GraphType> graph_type(const FixedPointData& data) {
    if (data.half_dimension != 3)
        return Failure{Errc::unsupported_dimension,
                       "graph typing is defined for half_dimension 3", {}};
    std::map<std::pair<int, int>, int> mult;
    for (const auto& e : data.edges) ++mult[{e.lower, e.upper}];
    auto m = [&](int l, int u) {
        auto it = mult.find({l, u});
        return it == mult.end() ? 0 : it->second;
    };
    if (m(0, 1) == 1 && m(2, 3) == 1) {
        if (m(0, 2) == 1 && m(0, 3) == 1 && m(1, 2) == 1 && m(1, 3) == 1)
            return GraphType::type1;
        if (m(1, 2) == 2 && m(0, 3) == 2 && m(0, 2) == 0 && m(1, 3) == 0)
            return GraphType::type2;
        if (m(0, 2) == 2 && m(1, 3) == 2 && m(1, 2) == 0 && m(0, 3) == 0)
            return GraphType::type3;
    }
    json w = json::object();
    for (const auto& [pair, count] : mult)
        w[std::to_string(pair.first) + std::to_string(pair.second)] = count;
    return Failure{Errc::unknown_graph_shape,
                   "edge multiplicities match none of the three shapes", w};
}

const char* family_name(Family f) {
    switch (f) {
        case Family::f1a: return "1a";
        case Family::f1b: return "1b";
        case Family::f2a: return "2a";
        case Family::f2b: return "2b";
        case Family::unclassified: return "unclassified";
    }
    return "unclassified";
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "1a") return Family::f1a;
    if (name == "1b") return Family::f1b;
    if (name == "2a") return Family::f2a;
    if (name == "2b") return Family::f2b;
    return std::nullopt;
}

json FamilyMatch::to_json() const {
    json j{{"family", family_name(family)}};
    if (family == Family::f1a)
        j["params"] = json{{"a", int_to_json(params[0])},
                           {"b", int_to_json(params[1])},
                           {"c", int_to_json(params[2])}};
    if (family == Family::f1b)
        j["params"] = json{{"a", int_to_json(params[0])}, {"b", int_to_json(params[1])}};
    return j;
}

FamilyMatch match_family(const FixedPointData& data) {
    if (data.half_dimension != 3 || data.num_points() != 4) return {};
    const FixedPointData d = translate(data, -data.moment(0));
    const Int a = d.gap(0), b = d.gap(1), c = d.gap(2);

    if (make_cp3(a, b, c) == d) return {Family::f1a, {a, b, c}};
    if (a == c && b % 2 == 0) {
        auto g = make_grass(a, b);
        if (g.ok() && g.value() == d) return {Family::f1b, {a, b}};
    }
    if (make_v5() == d) return {Family::f2a, {}};
    if (make_v22() == d) return {Family::f2b, {}};
    return {};
}

std::optional<FixedPointData> regenerate(const FamilyMatch& match) {
    switch (match.family) {
        case Family::f1a:
            if (match.params.size() != 3) return std::nullopt;
            return make_cp3(match.params[0], match.params[1], match.params[2]);
        case Family::f1b: {
            if (match.params.size() != 2) return std::nullopt;
            auto g = make_grass(match.params[0], match.params[1]);
            if (!g.ok()) return std::nullopt;
            return g.value();
        }
        case Family::f2a: return make_v5();
        case Family::f2b: return make_v22();
        case Family::unclassified: return std::nullopt;
    }
    return std::nullopt;
}

json EnumerationResult::summary_json(bool with_histogram) const {
    json s{{"candidates", candidates}, {"survivors", static_cast<long long>(entries.size())}};
    if (with_histogram) {
        json h = json::object();
        for (const auto& [name, count] : rejections) h[name] = count;
        s["rejections"] = h;
    }
    return json{{"summary", s}};
}

namespace {

bool is_disabled(const VerifyOptions& opts, const char* name) {
    return std::find(opts.disabled_checks.begin(), opts.disabled_checks.end(), name) !=
           opts.disabled_checks.end();
}

// Fixed-order pipeline; returns the first failing check name, or nullopt for
// a survivor. Generated candidates satisfy the structural and index
// invariants by construction.
std::optional<std::string> first_failure(const FixedPointData& data, const VerifyOptions& opts) {
    if (!is_disabled(opts, check_name::effectiveness) && !check_effectiveness(data).passed)
        return check_name::effectiveness;
    const auto k = c1_slope(data);
    if (!is_disabled(opts, check_name::c1_constant) &&
        !check_c1_constant(data, opts.require_integral_k).passed)
        return check_name::c1_constant;
    if (!is_disabled(opts, check_name::largest_weight_index)) {
        if (!k || !check_largest_weight_index(data, *k).passed)
            return check_name::largest_weight_index;
    }
    if (!is_disabled(opts, check_name::smallest_weight_pairing) &&
        !check_smallest_weight_pairing(data).passed)
        return check_name::smallest_weight_pairing;
    if (!is_disabled(opts, check_name::mod_congruence) && !check_mod_congruence(data).passed)
        return check_name::mod_congruence;
    if (!is_disabled(opts, check_name::isotropy_components) &&
        !check_isotropy_components(data).passed)
        return check_name::isotropy_components;
    if (!is_disabled(opts, check_name::poincare_duality) &&
        !check_poincare_duality(data).passed)
        return check_name::poincare_duality;
    if (!invariants_report(data).ok()) return "chern_cross_check";
    return std::nullopt;
}

struct Accumulator {
    std::vector<EnumeratedEntry> entries;
    long long candidates = 0;
    std::map<std::string, long long> rejections;
};

FixedPointData assemble(const Int& a, const Int& b, const Int& c,
                        std::vector<IsotropyEdge> edges) {
    FixedPointData d;
    d.half_dimension = 3;
    d.points = {{0, 0}, {1, a}, {2, a + b}, {3, a + b + c}};
    d.edges = std::move(edges);  // generated in canonical order
    return d;
}

void consider(const FixedPointData& data, const EnumerateOptions& opts, Accumulator& acc) {
    ++acc.candidates;
    if (auto fail = first_failure(data, opts.verify)) {
        ++acc.rejections[*fail];
        return;
    }
    acc.entries.push_back({data, verify_all(data, opts.verify), match_family(data)});
}

// Unordered pairs (x, y) with x <= y from a divisor list.
void for_divisor_pairs(const std::vector<Int>& divs,
                       const std::function<void(const Int&, const Int&)>& fn) {
    for (std::size_t i = 0; i < divs.size(); ++i)
        for (std::size_t j = i; j < divs.size(); ++j) fn(divs[i], divs[j]);
}

void enumerate_triple(const Int& a, const Int& b, const Int& c,
                      const std::vector<std::vector<Int>>& divs,
                      const EnumerateOptions& opts, Accumulator& acc) {
    const auto& div_b = divs[b.convert_to<std::size_t>()];
    const auto& div_ab = divs[(a + b).convert_to<std::size_t>()];
    const auto& div_bc = divs[(b + c).convert_to<std::size_t>()];
    const auto& div_abc = divs[(a + b + c).convert_to<std::size_t>()];
    const bool want1 = !opts.graph_filter || *opts.graph_filter == GraphType::type1;
    const bool want2 = !opts.graph_filter || *opts.graph_filter == GraphType::type2;
    const bool want3 = !opts.graph_filter || *opts.graph_filter == GraphType::type3;

    if (want1) {
        for (const Int& w02 : div_ab)
            for (const Int& w12 : div_b)
                for (const Int& w03 : div_abc)
                    for (const Int& w13 : div_bc)
                        consider(assemble(a, b, c,
                                          {{0, 1, a},
                                           {0, 2, w02},
                                           {0, 3, w03},
                                           {1, 2, w12},
                                           {1, 3, w13},
                                           {2, 3, c}}),
                                 opts, acc);
    }
    if (want2) {
        for_divisor_pairs(div_abc, [&](const Int& v1, const Int& v2) {
            for_divisor_pairs(div_b, [&](const Int& u1, const Int& u2) {
                consider(assemble(a, b, c,
                                  {{0, 1, a},
                                   {0, 3, v1},
                                   {0, 3, v2},
                                   {1, 2, u1},
                                   {1, 2, u2},
                                   {2, 3, c}}),
                         opts, acc);
            });
        });
    }
    if (want3) {
        for_divisor_pairs(div_ab, [&](const Int& w1, const Int& w2) {
            for_divisor_pairs(div_bc, [&](const Int& x1, const Int& x2) {
                consider(assemble(a, b, c,
                                  {{0, 1, a},
                                   {0, 2, w1},
                                   {0, 2, w2},
                                   {1, 3, x1},
                                   {1, 3, x2},
                                   {2, 3, c}}),
                         opts, acc);
            });
        });
    }
}

}  // namespace

EnumerationResult enumerate_candidates(int max_gap, const EnumerateOptions& opts) {
    assert(max_gap >= 1);
    // Divisor table for every moment gap sum that can occur.
    std::vector<std::vector<Int>> divs(std::size_t(3 * max_gap) + 1);
    for (int v = 1; v <= 3 * max_gap; ++v) divs[std::size_t(v)] = divisors(v);

    const long long triples = static_cast<long long>(max_gap) * max_gap * max_gap;
    const int jobs = std::max(1, std::min(opts.jobs, 64));

    std::vector<Accumulator> acc;
    acc.resize(std::size_t(jobs));
    auto worker = [&](int t) {
        for (long long idx = t; idx < triples; idx += jobs) {
            const int a = int(idx / (max_gap * static_cast<long long>(max_gap))) + 1;
            const int b = int((idx / max_gap) % max_gap) + 1;
            const int c = int(idx % max_gap) + 1;
            enumerate_triple(a, b, c, divs, opts, acc[std::size_t(t)]);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
        for (auto& th : threads) th.join();
    }

    EnumerationResult result;
    for (auto& a : acc) {
        result.candidates += a.candidates;
        for (auto& e : a.entries) result.entries.push_back(std::move(e));
        for (const auto& [name, count] : a.rejections) result.rejections[name] += count;
    }
    // Canonical output order independent of the evaluation schedule. The
    // generation grid produces each candidate once, so this is a plain sort.
    std::sort(result.entries.begin(), result.entries.end(),
              [](const EnumeratedEntry& x, const EnumeratedEntry& y) { return x.data < y.data; });
    return result;
}

}  // namespace hamfp
