#include "hamfp/core.hpp"

#include <algorithm>
#include <tuple>

namespace hamfp {

bool edge_less(const IsotropyEdge& a, const IsotropyEdge& b) {
    return std::tie(a.lower, a.upper, a.weight) < std::tie(b.lower, b.upper, b.weight);
}

bool operator==(const IsotropyEdge& a, const IsotropyEdge& b) {
    return a.lower == b.lower && a.upper == b.upper && a.weight == b.weight;
}

bool operator==(const FixedPointData& a, const FixedPointData& b) {
    if (a.half_dimension != b.half_dimension) return false;
    if (a.points.size() != b.points.size() || a.edges.size() != b.edges.size()) return false;
    for (std::size_t i = 0; i < a.points.size(); ++i)
        if (a.points[i].id != b.points[i].id || a.points[i].moment != b.points[i].moment)
            return false;
    for (std::size_t i = 0; i < a.edges.size(); ++i)
        if (!(a.edges[i] == b.edges[i])) return false;
    return true;
}

bool operator<(const FixedPointData& a, const FixedPointData& b) {
    if (a.half_dimension != b.half_dimension) return a.half_dimension < b.half_dimension;
    if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        if (a.points[i].moment != b.points[i].moment)
            return a.points[i].moment < b.points[i].moment;
    }
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        if (!(a.edges[i] == b.edges[i])) return edge_less(a.edges[i], b.edges[i]);
    }
    return false;
}

void canonicalize(FixedPointData& data) {
    std::sort(data.edges.begin(), data.edges.end(), edge_less);
}

std::vector<Failure> validate(const FixedPointData& data) {
    std::vector<Failure> issues;
    const int n = data.half_dimension;

    if (n < 1) {
        issues.push_back({Errc::malformed_input, "half_dimension must be >= 1", {}});
        return issues;
    }
    if (int(data.points.size()) != n + 1) {
        issues.push_back({Errc::malformed_input,
                          "expected " + std::to_string(n + 1) + " points, got " +
                              std::to_string(data.points.size()),
                          {}});
        return issues;
    }
    for (int i = 0; i <= n; ++i) {
        if (data.points[size_t(i)].id != i) {
            issues.push_back({Errc::malformed_input, "point ids must be 0..n in order",
                              json{{"position", i}, {"id", data.points[size_t(i)].id}}});
            return issues;
        }
    }

    for (int i = 0; i < n; ++i) {
        if (!(data.moment(i) < data.moment(i + 1))) {
            issues.push_back({Errc::non_monotone_moment,
                              "moment values must strictly increase with the point index",
                              json{{"point", i + 1}}});
        }
    }

    bool edges_usable = true;
    for (const auto& e : data.edges) {
        if (e.lower < 0 || e.upper > n || e.lower >= e.upper || e.weight <= 0) {
            issues.push_back({Errc::malformed_input,
                              "edge endpoints must satisfy 0 <= lower < upper <= n with a "
                              "positive weight",
                              json{{"lower", e.lower}, {"upper", e.upper}}});
            edges_usable = false;
        }
    }
    if (!edges_usable) return issues;

    if (int(data.edges.size()) != n * (n + 1) / 2) {
        issues.push_back({Errc::wrong_edge_count,
                          "expected n(n+1)/2 = " + std::to_string(n * (n + 1) / 2) +
                              " edges, got " + std::to_string(data.edges.size()),
                          {}});
    }
    std::vector<int> degree(size_t(n) + 1, 0), uppers(size_t(n) + 1, 0);
    for (const auto& e : data.edges) {
        ++degree[size_t(e.lower)];
        ++degree[size_t(e.upper)];
        ++uppers[size_t(e.upper)];
    }
    for (int i = 0; i <= n; ++i) {
        if (degree[size_t(i)] != n) {
            issues.push_back({Errc::wrong_edge_count,
                              "every point must carry exactly n edge endpoints",
                              json{{"point", i}, {"endpoints", degree[size_t(i)]}}});
        }
    }

    for (const auto& e : data.edges) {
        const Int gap = data.moment(e.upper) - data.moment(e.lower);
        if (!divides(e.weight, gap)) {
            issues.push_back({Errc::divisibility_violation,
                              "edge weight must divide the moment gap of its endpoints",
                              json{{"lower", e.lower},
                                   {"upper", e.upper},
                                   {"weight", int_to_json(e.weight)},
                                   {"gap", int_to_json(gap)}}});
        }
    }

    for (int i = 0; i <= n; ++i) {
        if (uppers[size_t(i)] != i) {
            issues.push_back({Errc::index_pattern_violation,
                              "point i must have exactly i negative weights (Morse index 2i)",
                              json{{"point", i}, {"negative_weights", uppers[size_t(i)]}}});
        }
    }

    return issues;
}

Result<FixedPointData> build(const std::vector<std::pair<int, Int>>& points,
                             std::vector<IsotropyEdge> edges, int half_dimension) {
    FixedPointData data;
    data.half_dimension = half_dimension;
    data.points.reserve(points.size());
    for (const auto& [id, moment] : points) data.points.push_back({id, moment});
    data.edges = std::move(edges);
    canonicalize(data);

    auto issues = validate(data);
    if (issues.empty()) return data;

    Failure first = issues.front();
    if (issues.size() > 1) {
        json all = json::array();
        for (const auto& f : issues) all.push_back(f.to_json());
        first.detail = json{{"violations", all}};
    }
    return first;
}

std::vector<Int> weights_of(const FixedPointData& data, int i) {
    std::vector<Int> ws;
    ws.reserve(size_t(data.half_dimension));
    for (const auto& e : data.edges) {
        if (e.lower == i) ws.push_back(e.weight);
        if (e.upper == i) ws.push_back(-e.weight);
    }
    std::sort(ws.begin(), ws.end());
    return ws;
}

WeightProfile profile_point(const FixedPointData& data, int i) {
    WeightProfile p;
    p.weights = weights_of(data, i);
    p.lambda_minus = 1;
    p.lambda_full = 1;
    p.gamma = 0;
    p.sigma2 = 0;
    int negatives = 0;
    for (const auto& w : p.weights) {
        if (w < 0) {
            p.lambda_minus *= w;
            ++negatives;
        }
        p.lambda_full *= w;
        p.gamma += w;
    }
    for (std::size_t s = 0; s < p.weights.size(); ++s)
        for (std::size_t t = s + 1; t < p.weights.size(); ++t)
            p.sigma2 += p.weights[s] * p.weights[t];
    p.index = 2 * negatives;
    return p;
}

std::vector<WeightProfile> profile(const FixedPointData& data) {
    std::vector<WeightProfile> ps;
    ps.reserve(data.points.size());
    for (int i = 0; i < data.num_points(); ++i) ps.push_back(profile_point(data, i));
    return ps;
}

FixedPointData reverse(const FixedPointData& data) {
    const int n = data.half_dimension;
    FixedPointData out;
    out.half_dimension = n;
    out.points.reserve(data.points.size());
    for (int i = 0; i <= n; ++i) out.points.push_back({i, -data.moment(n - i)});
    out.edges.reserve(data.edges.size());
    for (const auto& e : data.edges) out.edges.push_back({n - e.upper, n - e.lower, e.weight});
    canonicalize(out);
    return out;
}

FixedPointData translate(const FixedPointData& data, const Int& delta) {
    FixedPointData out = data;
    for (auto& p : out.points) p.moment += delta;
    return out;
}

FixedPointData scaled(const FixedPointData& data, const Int& m) {
    FixedPointData out = data;
    for (auto& p : out.points) p.moment *= m;
    for (auto& e : out.edges) e.weight *= m;
    canonicalize(out);
    return out;
}

bool equal_up_to_translation(const FixedPointData& a, const FixedPointData& b) {
    if (a.points.empty() || b.points.empty()) return a == b;
    return translate(a, -a.moment(0)) == translate(b, -b.moment(0));
}

json to_json(const FixedPointData& data) {
    json points = json::array();
    for (const auto& p : data.points)
        points.push_back(json{{"id", p.id}, {"moment", int_to_json(p.moment)}});
    json edges = json::array();
    for (const auto& e : data.edges)
        edges.push_back(json{
            {"lower", e.lower}, {"upper", e.upper}, {"weight", int_to_json(e.weight)}});
    return json{{"half_dimension", data.half_dimension}, {"points", points}, {"edges", edges}};
}

std::string emit(const FixedPointData& data) { return to_json(data).dump(); }

namespace {

std::optional<int> small_int_from_json(const json& j) {
    auto v = int_from_json(j);
    if (!v || *v < 0 || *v > 1'000'000) return std::nullopt;
    return v->convert_to<int>();
}

}  // namespace

Result<FixedPointData> decode_json(const json& j) {
    const auto bad = [](const std::string& msg) {
        return Failure{Errc::malformed_input, msg, {}};
    };
    if (!j.is_object()) return bad("expected a JSON object");
    if (!j.contains("half_dimension") || !j.contains("points") || !j.contains("edges"))
        return bad("expected keys half_dimension, points, edges");

    auto n = small_int_from_json(j["half_dimension"]);
    if (!n || *n < 1) return bad("half_dimension must be a small positive integer");
    if (!j["points"].is_array() || !j["edges"].is_array())
        return bad("points and edges must be arrays");

    FixedPointData data;
    data.half_dimension = *n;
    for (const auto& pj : j["points"]) {
        if (!pj.is_object() || !pj.contains("id") || !pj.contains("moment"))
            return bad("each point needs id and moment");
        auto id = small_int_from_json(pj["id"]);
        auto moment = int_from_json(pj["moment"]);
        if (!id || !moment) return bad("point id/moment not an integer");
        data.points.push_back({*id, *moment});
    }
    if (int(data.points.size()) != *n + 1) return bad("expected half_dimension + 1 points");
    for (int i = 0; i <= *n; ++i)
        if (data.points[size_t(i)].id != i) return bad("point ids must be 0..n in order");

    for (const auto& ej : j["edges"]) {
        if (!ej.is_object() || !ej.contains("lower") || !ej.contains("upper") ||
            !ej.contains("weight"))
            return bad("each edge needs lower, upper, weight");
        auto lower = small_int_from_json(ej["lower"]);
        auto upper = small_int_from_json(ej["upper"]);
        auto weight = int_from_json(ej["weight"]);
        if (!lower || !upper || !weight) return bad("edge fields must be integers");
        if (*lower >= *upper || *upper > *n || *weight < 1)
            return bad("edge endpoints must satisfy 0 <= lower < upper <= n with a positive "
                       "weight");
        data.edges.push_back({*lower, *upper, *weight});
    }
    canonicalize(data);
    return data;
}

Result<FixedPointData> decode_text(const std::string& text) {
    try {
        return decode_json(json::parse(text));
    } catch (const json::parse_error& e) {
        return Failure{Errc::malformed_input, e.what(), json{{"byte", e.byte}}};
    }
}

Result<FixedPointData> from_json(const json& j) {
    auto decoded = decode_json(j);
    if (!decoded.ok()) return decoded;
    auto issues = validate(decoded.value());
    if (issues.empty()) return decoded;
    Failure first = issues.front();
    if (issues.size() > 1) {
        json all = json::array();
        for (const auto& f : issues) all.push_back(f.to_json());
        first.detail = json{{"violations", all}};
    }
    return first;
}

Result<FixedPointData> parse_data(const std::string& text) {
    try {
        return from_json(json::parse(text));
    } catch (const json::parse_error& e) {
        return Failure{Errc::malformed_input, e.what(), json{{"byte", e.byte}}};
    }
}

}  // namespace hamfp
