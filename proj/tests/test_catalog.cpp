#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamfp/catalog.hpp"
#include "hamfp/checks.hpp"
#include "hamfp/classifier.hpp"
#include "hamfp/invariants.hpp"

using namespace hamfp;

namespace {

std::vector<Int> ints(std::initializer_list<long long> vs) {
    return std::vector<Int>(vs.begin(), vs.end());
}

}  // namespace

TEST_CASE("make_cp3") {
    auto d = make_cp3(1, 1, 1);
    CHECK(weights_of(d, 1) == ints({-1, 1, 2}));
    CHECK(weights_of(make_cp3(1, 2, 3), 3) == ints({-6, -5, -3}));
    CHECK(d.moment(3) == 3);

    // verify_all passes exactly when the weight gcd condition holds,
    // which for this family is gcd(a,b,c) = 1.
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
                const bool effective = gcd(gcd(Int(a), Int(b)), Int(c)) == 1;
                CHECK(verify_all(make_cp3(a, b, c)).overall == effective);
            }
}

TEST_CASE("make_grass") {
    auto g = make_grass(1, 2);
    REQUIRE(g.ok());
    CHECK(g.value().moment(1) == 1);
    CHECK(g.value().moment(2) == 3);
    CHECK(g.value().moment(3) == 4);
    CHECK(weights_of(g.value(), 0) == ints({1, 2, 3}));
    CHECK(weights_of(g.value(), 3) == ints({-3, -2, -1}));
    CHECK(ring_structure(g.value()).value().structure_constant == 2);

    CHECK(!make_grass(1, 3).ok());
    CHECK(make_grass(1, 3).error().code == Errc::odd_b);

    // effectiveness is gcd(a, b/2) = 1
    CHECK(verify_all(make_grass(2, 2).value()).overall);
    auto g24 = make_grass(2, 4).value();
    CHECK(weights_of(g24, 1) == ints({-2, 2, 6}));
    CHECK(!check_effectiveness(g24).passed);
    CHECK(!verify_all(g24).overall);
}

TEST_CASE("make_v5 and make_v22") {
    auto v5 = make_v5();
    auto v22 = make_v22();
    CHECK(v5.gap(0) == 1);
    CHECK(v5.gap(1) == 4);
    CHECK(v5.gap(2) == 1);
    CHECK(v22.gap(0) == 1);
    CHECK(v22.gap(1) == 10);
    CHECK(v22.gap(2) == 1);

    auto cd = chern_classes(v5);
    REQUIRE(cd.ok());
    CHECK(cd.value().k1 == 2);
    CHECK(cd.value().k2 == 12);
    CHECK(cd.value().k3 == 4);

    CHECK(verify_all(v5).overall);
    CHECK(verify_all(v22).overall);

    // both are fixed by orientation reversal up to translation
    CHECK(equal_up_to_translation(reverse(v5), v5));
    CHECK(equal_up_to_translation(reverse(v22), v22));
}

TEST_CASE("family matching regenerates the constructors") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                auto m = match_family(make_cp3(a, b, c));
                CHECK(m.family == Family::f1a);
                CHECK(m.params == ints({a, b, c}));
                CHECK(regenerate(m).value() == make_cp3(a, b, c));
            }
    for (int a = 1; a <= 3; ++a)
        for (int b = 2; b <= 6; b += 2) {
            auto m = match_family(make_grass(a, b).value());
            CHECK(m.family == Family::f1b);
            CHECK(m.params == ints({a, b}));
        }
    CHECK(match_family(make_v5()).family == Family::f2a);
    CHECK(match_family(make_v22()).family == Family::f2b);
}
