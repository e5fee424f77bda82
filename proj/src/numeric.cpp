#include "hamfp/numeric.hpp"

#include <cctype>
#include <limits>

#include "hamfp/result.hpp"

namespace hamfp {

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            Int q = n / d;
            if (q != d) large.push_back(q);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

json int_to_json(const Int& v) {
    static const Int i64_min{std::numeric_limits<std::int64_t>::min()};
    static const Int i64_max{std::numeric_limits<std::int64_t>::max()};
    if (v >= i64_min && v <= i64_max) return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

std::optional<Int> int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return std::nullopt;
        for (std::size_t k = i; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
        return Int(s);
    }
    return std::nullopt;
}

json rat_to_json(const Rat& q) {
    if (is_integer(q)) return int_to_json(numerator(q));
    return json(numerator(q).str() + "/" + denominator(q).str());
}

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::malformed_input: return "malformed_input";
        case Errc::non_monotone_moment: return "non_monotone_moment";
        case Errc::wrong_edge_count: return "wrong_edge_count";
        case Errc::divisibility_violation: return "divisibility_violation";
        case Errc::index_pattern_violation: return "index_pattern_violation";
        case Errc::inapplicable_k: return "inapplicable_k";
        case Errc::non_integral_coefficient: return "non_integral_coefficient";
        case Errc::duality_failure: return "duality_failure";
        case Errc::non_integral_restriction: return "non_integral_restriction";
        case Errc::non_integral_chern_coefficient: return "non_integral_chern_coefficient";
        case Errc::cross_check_mismatch: return "cross_check_mismatch";
        case Errc::non_vanishing_negative_degree: return "non_vanishing_negative_degree";
        case Errc::unknown_graph_shape: return "unknown_graph_shape";
        case Errc::odd_b: return "odd_b";
        case Errc::unsupported_dimension: return "unsupported_dimension";
    }
    return "unknown";
}

}  // namespace hamfp
