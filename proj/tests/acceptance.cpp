// Acceptance suite: runs every top-level requirement end to end and prints
// one PASS/FAIL line per criterion. All comparisons are exact; expected
// runtime is a few seconds.
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "hamfp/catalog.hpp"
#include "hamfp/checks.hpp"
#include "hamfp/classifier.hpp"
#include "hamfp/core.hpp"
#include "hamfp/invariants.hpp"
#include "testutil.hpp"

using namespace hamfp;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

std::set<FixedPointData> expected_families(int max_gap) {
    std::set<FixedPointData> out;
    for (int a = 1; a <= max_gap; ++a)
        for (int b = 1; b <= max_gap; ++b)
            for (int c = 1; c <= max_gap; ++c)
                if (gcd(gcd(Int(a), Int(b)), Int(c)) == 1) out.insert(make_cp3(a, b, c));
    for (int a = 1; a <= max_gap; ++a)
        for (int b = 2; b <= max_gap; b += 2)
            if (gcd(Int(a), Int(b / 2)) == 1) out.insert(make_grass(a, b).value());
    if (max_gap >= 4) out.insert(make_v5());
    if (max_gap >= 10) out.insert(make_v22());
    return out;
}

// 1. Every catalog instance with an effective action passes all checks.
void criterion1() {
    bool ok = true;
    int checked = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
                if (gcd(gcd(Int(a), Int(b)), Int(c)) != 1) continue;
                ++checked;
                ok = ok && verify_all(make_cp3(a, b, c)).overall;
            }
    for (int a = 1; a <= 4; ++a)
        for (int b = 2; b <= 4; b += 2) {
            if (gcd(Int(a), Int(b / 2)) != 1) continue;
            ++checked;
            ok = ok && verify_all(make_grass(a, b).value()).overall;
        }
    ok = ok && verify_all(make_v5()).overall && verify_all(make_v22()).overall;
    checked += 2;
    report(1, "catalog families verify", ok, std::to_string(checked) + " data sets");
}

// 2. Bounded search at 12 returns exactly the family instances; V5 and V22
//    are the only type-2 survivors and type 3 is empty.
void criterion2() {
    EnumerateOptions opts;
    opts.jobs = 4;
    auto result = enumerate_candidates(12, opts);
    auto expected = expected_families(12);

    bool ok = result.entries.size() == expected.size();
    std::set<FixedPointData> found;
    for (const auto& e : result.entries) {
        ok = ok && expected.count(e.data) == 1 && found.insert(e.data).second;
        ok = ok && e.report.overall && e.family.family != Family::unclassified;
    }

    int type2_count = 0;
    bool type2_ok = true;
    bool type3_empty = true;
    for (const auto& e : result.entries) {
        auto g = graph_type(e.data);
        if (!g.ok()) {
            ok = false;
            continue;
        }
        if (g.value() == GraphType::type2) {
            ++type2_count;
            type2_ok = type2_ok && (e.data == make_v5() || e.data == make_v22());
        }
        if (g.value() == GraphType::type3) type3_empty = false;
    }
    ok = ok && type2_count == 2 && type2_ok && type3_empty;
    report(2, "search at bound 12 reproduces the classification", ok,
           std::to_string(result.entries.size()) + " survivors of " +
               std::to_string(result.candidates) + " candidates");
}

// 3. Ring presentations N = 1, 2, 5, 22.
void criterion3() {
    bool ok = true;
    auto n_of = [&](const FixedPointData& d) {
        auto r = ring_structure(d);
        if (!r.ok()) {
            ok = false;
            return Int(0);
        }
        return r.value().structure_constant;
    };
    ok = ok && n_of(make_cp3(1, 1, 1)) == 1 && n_of(make_cp3(3, 2, 5)) == 1;
    ok = ok && n_of(make_grass(1, 2).value()) == 2 && n_of(make_grass(4, 6).value()) == 2;
    ok = ok && n_of(make_v5()) == 5 && n_of(make_v22()) == 22;
    ok = ok && ring_structure(make_v5()).value().presentation() == "Z[x,y]/(x^2-5y, y^2)";
    ok = ok && ring_structure(make_cp3(1, 1, 1)).value().presentation() == "Z[x]/(x^4)";
    report(3, "ring presentations N = 1, 2, 5, 22", ok);
}

// 4. Total Chern classes (k1,k2,k3) per family.
void criterion4() {
    bool ok = true;
    auto expect = [&](const FixedPointData& d, long long k1, long long k2) {
        auto r = chern_classes(d);
        if (!r.ok()) {
            ok = false;
            return;
        }
        ok = ok && r.value().k1 == k1 && r.value().k2 == k2 && r.value().k3 == 4;
    };
    expect(make_cp3(1, 1, 1), 4, 6);
    expect(make_cp3(2, 1, 4), 4, 6);
    expect(make_grass(1, 2).value(), 3, 8);
    expect(make_grass(3, 4).value(), 3, 8);
    expect(make_v5(), 2, 12);
    expect(make_v22(), 1, 24);
    report(4, "total Chern classes (4,6,4), (3,8,4), (2,12,4), (1,24,4)", ok);
}

// 5. Chern numbers by localization, agreeing exactly with the ring products.
void criterion5() {
    bool ok = true;
    auto expect = [&](const FixedPointData& d, long long c13) {
        auto nums = chern_numbers(d);
        auto cls = chern_classes(d);
        auto ring = ring_structure(d);
        if (!nums.ok() || !cls.ok() || !ring.ok()) {
            ok = false;
            return;
        }
        const auto& v = nums.value();
        ok = ok && v.c1_cubed == c13 && v.c1c2 == 24 && v.c3 == 4;
        // the two computation routes must agree exactly
        const Int& k1 = cls.value().k1;
        ok = ok && v.c1_cubed == k1 * k1 * k1 * ring.value().structure_constant;
        ok = ok && v.c1c2 == k1 * cls.value().k2;
        ok = ok && v.c3 == 4;
    };
    expect(make_cp3(1, 1, 1), 64);
    expect(make_cp3(4, 2, 1), 64);
    expect(make_grass(1, 2).value(), 54);
    expect(make_grass(2, 2).value(), 54);
    expect(make_v5(), 40);
    expect(make_v22(), 22);
    report(5, "Chern numbers (64|54|40|22, 24, 4) equal on both routes", ok);
}

// 6. Localization identities over every survivor of the bound-8 search,
//    cross-checked against an independent fraction oracle.
void criterion6() {
    EnumerateOptions opts;
    opts.jobs = 4;
    auto result = enumerate_candidates(8, opts);
    bool ok = !result.entries.empty();
    for (const auto& e : result.entries) {
        const auto& d = e.data;
        for (int deg = 0; deg < 3; ++deg) {
            std::vector<Poly> r;
            std::vector<long long> oracle_num;
            for (int i = 0; i < d.num_points(); ++i) {
                using boost::multiprecision::pow;
                r.push_back(Poly::monomial(pow(d.moment(i), unsigned(deg)), deg));
                long long phi = d.moment(i).convert_to<long long>();
                long long v = 1;
                for (int t = 0; t < deg; ++t) v *= phi;
                oracle_num.push_back(v);
            }
            auto s = localize(d, r, deg);
            ok = ok && s.ok() && s.value() == 0;
            ok = ok && testutil::oracle_localization_sum(d, oracle_num).is_zero();
        }
        std::vector<Poly> u3;
        std::vector<long long> oracle_num;
        for (int i = 0; i < d.num_points(); ++i) {
            u3.push_back(Poly::monomial(-d.moment(i), 1).pow(3));
            long long phi = d.moment(i).convert_to<long long>();
            oracle_num.push_back(-phi * phi * phi);
        }
        auto vol = localize(d, u3, 3);
        auto bc = basis_coefficients(d);
        ok = ok && vol.ok() && bc.ok() && vol.value() == Rat(bc.value().a[3]);
        ok = ok &&
             testutil::oracle_localization_sum(d, oracle_num)
                 .equals_int(bc.value().a[3].convert_to<long long>());
        if (!ok) break;
    }
    report(6, "localization identities over the bound-8 survivors", ok,
           std::to_string(result.entries.size()) + " data sets");
}

// 7. Invariance under translation and reversal, reversal involution, and
//    bit-exact JSON round trips, over survivors and random candidates.
void criterion7() {
    bool ok = true;
    EnumerateOptions opts;
    opts.jobs = 4;
    auto result = enumerate_candidates(8, opts);

    std::vector<FixedPointData> pool;
    for (const auto& e : result.entries) pool.push_back(e.data);
    std::mt19937_64 rng(20260809);
    for (int i = 0; i < 1000; ++i) pool.push_back(testutil::random_valid_data(rng));

    for (const auto& d : pool) {
        ok = ok && reverse(reverse(d)) == d;

        auto base = verify_all(d);
        for (const auto& variant : {translate(d, 1000), translate(d, -3), reverse(d)}) {
            auto rep = verify_all(variant);
            ok = ok && rep.overall == base.overall && rep.checks.size() == base.checks.size();
            for (std::size_t i = 0; ok && i < base.checks.size(); ++i)
                ok = ok && rep.checks[i].name == base.checks[i].name &&
                     rep.checks[i].passed == base.checks[i].passed;
        }

        auto parsed = parse_data(emit(d));
        ok = ok && parsed.ok() && parsed.value() == d && emit(parsed.value()) == emit(d);
        if (!ok) break;
    }

    // survivors additionally keep every invariant under both symmetries
    for (const auto& e : result.entries) {
        auto base = chern_classes(e.data);
        auto base_ring = ring_structure(e.data);
        for (const auto& variant : {translate(e.data, 7), reverse(e.data)}) {
            auto c = chern_classes(variant);
            auto r = ring_structure(variant);
            ok = ok && base.ok() && c.ok() && base_ring.ok() && r.ok();
            if (!ok) break;
            ok = ok && c.value().k1 == base.value().k1 && c.value().k2 == base.value().k2 &&
                 c.value().c1_cubed == base.value().c1_cubed &&
                 c.value().c1c2 == base.value().c1c2 &&
                 r.value().structure_constant == base_ring.value().structure_constant;
        }
        if (!ok) break;
    }
    report(7, "invariance, involution and JSON round-trip suite", ok,
           std::to_string(pool.size()) + " data sets");
}

// 8. Negative controls: scaling V5 by 2 breaks effectiveness only, and the
//    smallest-weight pairing check actively prunes the bound-6 search (its
//    rejections reappear downstream when the check is disabled).
void criterion8() {
    bool ok = true;

    auto doubled = scaled(make_v5(), 2);
    ok = ok && validate(doubled).empty();
    ok = ok && !check_effectiveness(doubled).passed;
    auto c1 = check_c1_constant(doubled);
    ok = ok && c1.passed && c1.witness["k"] == 2;

    EnumerateOptions with_all;
    with_all.jobs = 4;
    auto full = enumerate_candidates(6, with_all);

    EnumerateOptions without_jt = with_all;
    without_jt.verify.disabled_checks = {check_name::smallest_weight_pairing};
    auto pruned = enumerate_candidates(6, without_jt);

    const long long jt_rejections = full.rejections.count(check_name::smallest_weight_pairing)
                                        ? full.rejections.at(check_name::smallest_weight_pairing)
                                        : 0;
    // the check is the first rejector for some candidates...
    ok = ok && jt_rejections >= 1;
    // ...and disabling it admits every one of them past that stage
    ok = ok && pruned.rejections.count(check_name::smallest_weight_pairing) == 0;
    ok = ok && pruned.candidates == full.candidates;
    long long resurfaced = 0;
    for (const auto& [name, count] : pruned.rejections) {
        long long before = full.rejections.count(name) ? full.rejections.at(name) : 0;
        resurfaced += count - before;
    }
    resurfaced += static_cast<long long>(pruned.entries.size()) -
                  static_cast<long long>(full.entries.size());
    ok = ok && resurfaced == jt_rejections;

    // an explicit candidate the classification excludes whose first failing
    // check is the smallest-weight pairing: gaps (1,2,3), double edges
    // {2,2} and {1,3}
    auto witness = build({{0, 0}, {1, 1}, {2, 3}, {3, 6}},
                         {{0, 1, 1}, {0, 3, 1}, {0, 3, 3}, {1, 2, 2}, {1, 2, 2}, {2, 3, 3}}, 3);
    ok = ok && witness.ok();
    if (witness.ok()) {
        const auto& d = witness.value();
        auto rep = verify_all(d);
        ok = ok && !rep.overall;
        ok = ok && rep.find(check_name::effectiveness)->passed;
        ok = ok && rep.find(check_name::c1_constant)->passed;
        ok = ok && rep.find(check_name::largest_weight_index)->passed;
        ok = ok && !rep.find(check_name::smallest_weight_pairing)->passed;
        ok = ok && match_family(d).family == Family::unclassified;
    }

    report(8, "negative controls (scaled data, disabled pairing check)", ok,
           std::to_string(jt_rejections) + " candidates first rejected by the pairing check");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures == 0) {
        std::cout << "all acceptance criteria pass\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
