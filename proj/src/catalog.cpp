#include "hamfp/catalog.hpp"

#include <cassert>

namespace hamfp {

namespace {

FixedPointData must_build(const std::vector<std::pair<int, Int>>& points,
                          std::vector<IsotropyEdge> edges) {
    auto r = build(points, std::move(edges), 3);
    assert(r.ok());
    return r.value();
}

}  // namespace

FixedPointData make_cp3(const Int& a, const Int& b, const Int& c) {
    assert(a >= 1 && b >= 1 && c >= 1);
    return must_build({{0, 0}, {1, a}, {2, a + b}, {3, a + b + c}},
                      {{0, 1, a},
                       {0, 2, a + b},
                       {0, 3, a + b + c},
                       {1, 2, b},
                       {1, 3, b + c},
                       {2, 3, c}});
}

Result<FixedPointData> make_grass(const Int& a, const Int& b) {
    if (b % 2 != 0)
        return Failure{Errc::odd_b, "the middle gap must be even", json{{"b", int_to_json(b)}}};
    assert(a >= 1 && b >= 1);
    const Int half = b / 2;
    return must_build({{0, 0}, {1, a}, {2, a + b}, {3, 2 * a + b}},
                      {{0, 1, a},
                       {0, 2, a + b},
                       {0, 3, a + half},
                       {1, 2, half},
                       {1, 3, a + b},
                       {2, 3, a}});
}

FixedPointData make_v5() {
    return must_build({{0, 0}, {1, 1}, {2, 5}, {3, 6}},
                      {{0, 1, 1}, {0, 3, 2}, {0, 3, 3}, {1, 2, 1}, {1, 2, 4}, {2, 3, 1}});
}

FixedPointData make_v22() {
    return must_build({{0, 0}, {1, 1}, {2, 11}, {3, 12}},
                      {{0, 1, 1}, {0, 3, 2}, {0, 3, 3}, {1, 2, 1}, {1, 2, 5}, {2, 3, 1}});
}

}  // namespace hamfp
