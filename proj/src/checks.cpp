#include "hamfp/checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hamfp/invariants.hpp"

namespace hamfp {

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

json VerificationReport::to_json() const {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(c.to_json());
    return json{{"overall", overall}, {"checks", arr}};
}

std::vector<std::string> all_check_names() {
    return {check_name::structural,         check_name::index_pattern,
            check_name::effectiveness,      check_name::c1_constant,
            check_name::largest_weight_index, check_name::smallest_weight_pairing,
            check_name::mod_congruence,     check_name::isotropy_components,
            check_name::poincare_duality};
}

CheckResult check_structural(const FixedPointData& data) {
    auto issues = validate(data);
    if (issues.empty()) return {check_name::structural, true, {}};
    json arr = json::array();
    for (const auto& f : issues) arr.push_back(f.to_json());
    return {check_name::structural, false, json{{"violations", arr}}};
}

CheckResult check_index_pattern(const FixedPointData& data) {
    json bad = json::array();
    for (int i = 0; i < data.num_points(); ++i) {
        int negatives = 0;
        for (const auto& w : weights_of(data, i))
            if (w < 0) ++negatives;
        if (negatives != i)
            bad.push_back(json{{"point", i}, {"negative_weights", negatives}});
    }
    if (bad.empty()) return {check_name::index_pattern, true, {}};
    return {check_name::index_pattern, false, json{{"points", bad}}};
}

CheckResult check_effectiveness(const FixedPointData& data) {
    json bad = json::array();
    for (int i = 0; i < data.num_points(); ++i) {
        Int g = 0;
        for (const auto& w : weights_of(data, i)) g = gcd(g, abs(w));
        if (g != 1)
            bad.push_back(json{{"point", i}, {"gcd", int_to_json(g)}});
    }
    if (bad.empty()) return {check_name::effectiveness, true, {}};
    return {check_name::effectiveness, false, json{{"points", bad}}};
}

std::optional<Rat> c1_slope(const FixedPointData& data) {
    const int n = data.num_points() - 1;
    if (n < 1) return std::nullopt;
    auto profs = profile(data);
    const Rat k = make_rat(profs[0].gamma - profs[size_t(n)].gamma,
                           data.moment(n) - data.moment(0));
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Rat lhs{profs[size_t(i)].gamma - profs[size_t(j)].gamma};
            if (lhs != k * Rat(data.moment(j) - data.moment(i))) return std::nullopt;
        }
    }
    return k;
}

CheckResult check_c1_constant(const FixedPointData& data, bool require_integral_k) {
    auto k = c1_slope(data);
    if (!k)
        return {check_name::c1_constant, false,
                json{{"reason", "no single constant fits all weight-sum differences"}}};
    if (require_integral_k && !is_integer(*k))
        return {check_name::c1_constant, false,
                json{{"reason", "constant is not an integer"}, {"k", rat_to_json(*k)}}};
    return {check_name::c1_constant, true, json{{"k", rat_to_json(*k)}}};
}

namespace {

long long count_of(const std::vector<Int>& ws, const Int& v) {
    return std::count(ws.begin(), ws.end(), v);
}

json edge_json(const IsotropyEdge& e) {
    return json{{"lower", e.lower}, {"upper", e.upper}, {"weight", int_to_json(e.weight)}};
}

}  // namespace

CheckResult check_largest_weight_index(const FixedPointData& data, const Rat& k) {
    auto profs = profile(data);
    json applicable = json::array(), violations = json::array();
    for (const auto& e : data.edges) {
        const auto& wp = profs[size_t(e.lower)].weights;
        const auto& wq = profs[size_t(e.upper)].weights;
        if (count_of(wp, -e.weight) != 0) continue;
        if (count_of(wq, -e.weight) != 1) continue;
        Int max_abs = 0;
        for (const auto& w : wp) max_abs = std::max(max_abs, abs(w));
        for (const auto& w : wq) max_abs = std::max(max_abs, abs(w));
        if (max_abs != e.weight) continue;

        const Int gap = data.moment(e.upper) - data.moment(e.lower);
        auto q = exact_div(gap, e.weight);
        if (!q) continue;  // caught by the structural check
        const int i = profs[size_t(e.lower)].index / 2;
        const int j = profs[size_t(e.upper)].index / 2;
        if (Rat(j - i + 1) == k * Rat(*q)) {
            applicable.push_back(edge_json(e));
        } else {
            json v = edge_json(e);
            v["i"] = i;
            v["j"] = j;
            v["k_gap_over_w"] = rat_to_json(k * Rat(*q));
            violations.push_back(v);
        }
    }
    json witness{{"applicable_edges", applicable}};
    if (violations.empty()) return {check_name::largest_weight_index, true, witness};
    witness["violations"] = violations;
    return {check_name::largest_weight_index, false, witness};
}

CheckResult check_smallest_weight_pairing(const FixedPointData& data) {
    auto profs = profile(data);
    std::optional<Int> smallest;
    for (const auto& p : profs)
        for (const auto& w : p.weights)
            if (w > 0 && (!smallest || w < *smallest)) smallest = w;
    if (!smallest)
        return {check_name::smallest_weight_pairing, true, json{{"note", "no positive weights"}}};

    const Int& w = *smallest;
    json bad = json::array();
    for (int level = 0; level < data.half_dimension; ++level) {
        long long plus = 0, minus = 0;
        for (const auto& p : profs) {
            if (p.index == 2 * level) plus += count_of(p.weights, w);
            if (p.index == 2 * level + 2) minus += count_of(p.weights, -w);
        }
        if (plus != minus)
            bad.push_back(json{{"level", level}, {"plus", plus}, {"minus", minus}});
    }
    if (bad.empty())
        return {check_name::smallest_weight_pairing, true, json{{"weight", int_to_json(w)}}};
    return {check_name::smallest_weight_pairing, false,
            json{{"weight", int_to_json(w)}, {"levels", bad}}};
}

CheckResult check_mod_congruence(const FixedPointData& data) {
    json bad = json::array();
    for (const auto& e : data.edges) {
        if (e.weight <= 1) continue;
        auto residues = [&](int point) {
            std::vector<Int> rs;
            for (const auto& w : weights_of(data, point)) rs.push_back(residue(w, e.weight));
            std::sort(rs.begin(), rs.end());
            return rs;
        };
        if (residues(e.lower) != residues(e.upper)) {
            json v = edge_json(e);
            json lower_r = json::array(), upper_r = json::array();
            for (const auto& r : residues(e.lower)) lower_r.push_back(int_to_json(r));
            for (const auto& r : residues(e.upper)) upper_r.push_back(int_to_json(r));
            v["lower_residues"] = lower_r;
            v["upper_residues"] = upper_r;
            bad.push_back(v);
        }
    }
    if (bad.empty()) return {check_name::mod_congruence, true, {}};
    return {check_name::mod_congruence, false, json{{"edges", bad}}};
}

CheckResult check_isotropy_components(const FixedPointData& data) {
    std::set<Int> moduli;
    for (const auto& e : data.edges)
        for (const auto& d : divisors(e.weight))
            if (d >= 2) moduli.insert(d);

    const int np = data.num_points();
    json bad = json::array();
    for (const auto& m : moduli) {
        // Subgraph of edges whose weight is divisible by m; its connected
        // components approximate the Z_m-fixed submanifold.
        std::vector<int> parent(static_cast<std::size_t>(np), 0);
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](int x) {
            while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            return x;
        };
        std::vector<int> lower_deg(size_t(np), 0), upper_deg(size_t(np), 0);
        for (const auto& e : data.edges) {
            if (!divides(m, e.weight)) continue;
            parent[size_t(root(e.lower))] = root(e.upper);
            ++lower_deg[size_t(e.lower)];
            ++upper_deg[size_t(e.upper)];
        }
        std::map<int, std::vector<int>> components;
        for (int i = 0; i < np; ++i)
            if (lower_deg[size_t(i)] + upper_deg[size_t(i)] > 0)
                components[root(i)].push_back(i);

        for (const auto& [r, pts] : components) {
            // d = number of weights divisible by m at a member point, which is
            // its degree in the subgraph; the component is a 2d-manifold.
            const int d = lower_deg[size_t(pts.front())] + upper_deg[size_t(pts.front())];
            bool same_d = true;
            for (int p : pts)
                if (lower_deg[size_t(p)] + upper_deg[size_t(p)] != d) same_d = false;
            std::string reason;
            if (!same_d) {
                reason = "member points carry different numbers of weights divisible by m";
            } else if (int(pts.size()) < d + 1) {
                reason = "component has fewer than d+1 fixed points";
            } else {
                // Points are moment-ordered by id, so the extremes are the
                // component's minimum and maximum.
                const int lo = pts.front(), hi = pts.back();
                if (upper_deg[size_t(lo)] != 0)
                    reason = "minimum point of the component has a negative component weight";
                else if (lower_deg[size_t(hi)] != 0)
                    reason = "maximum point of the component has a positive component weight";
            }
            if (!reason.empty()) {
                json comp = json::array();
                for (int p : pts) comp.push_back(p);
                bad.push_back(json{{"m", int_to_json(m)},
                                   {"component", comp},
                                   {"d", d},
                                   {"reason", reason}});
            }
        }
    }
    if (bad.empty()) return {check_name::isotropy_components, true, {}};
    return {check_name::isotropy_components, false, json{{"components", bad}}};
}

VerificationReport verify_all(const FixedPointData& data, const VerifyOptions& opts) {
    VerificationReport rep;
    auto disabled = [&](const char* name) {
        return std::find(opts.disabled_checks.begin(), opts.disabled_checks.end(), name) !=
               opts.disabled_checks.end();
    };

    CheckResult structural = check_structural(data);
    const bool structural_ok = structural.passed;
    rep.checks.push_back(std::move(structural));
    if (!structural_ok) {
        rep.overall = false;
        return rep;
    }

    if (!disabled(check_name::index_pattern)) rep.checks.push_back(check_index_pattern(data));
    if (!disabled(check_name::effectiveness)) rep.checks.push_back(check_effectiveness(data));

    auto k = c1_slope(data);
    if (!disabled(check_name::c1_constant))
        rep.checks.push_back(check_c1_constant(data, opts.require_integral_k));
    if (!disabled(check_name::largest_weight_index)) {
        if (k) {
            rep.checks.push_back(check_largest_weight_index(data, *k));
        } else {
            rep.checks.push_back({check_name::largest_weight_index, false,
                                  json{{"error", "inapplicable_k"},
                                       {"reason", "no consistent c1 constant upstream"}}});
        }
    }
    if (!disabled(check_name::smallest_weight_pairing))
        rep.checks.push_back(check_smallest_weight_pairing(data));
    if (!disabled(check_name::mod_congruence)) rep.checks.push_back(check_mod_congruence(data));
    if (!disabled(check_name::isotropy_components))
        rep.checks.push_back(check_isotropy_components(data));
    if (data.half_dimension == 3 && !disabled(check_name::poincare_duality))
        rep.checks.push_back(check_poincare_duality(data));

    rep.overall = std::all_of(rep.checks.begin(), rep.checks.end(),
                              [](const CheckResult& c) { return c.passed; });
    return rep;
}

}  // namespace hamfp
