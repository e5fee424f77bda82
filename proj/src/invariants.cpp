#include "hamfp/invariants.hpp"

#include <algorithm>

namespace hamfp {

std::string RingPresentation::presentation() const {
    if (structure_constant == 1) return "Z[x]/(x^4)";
    return "Z[x,y]/(x^2-" + structure_constant.str() + "y, y^2)";
}

json RingPresentation::to_json() const {
    json coeffs = json::array();
    for (std::size_t i = 1; i < a.size(); ++i) coeffs.push_back(int_to_json(a[i]));
    return json{{"N", int_to_json(structure_constant)},
                {"a", coeffs},
                {"presentation", presentation()}};
}

json ChernData::to_json() const {
    return json{{"c", json::array({1, int_to_json(k1), int_to_json(k2), int_to_json(k3)})},
                {"numbers",
                 json{{"c1^3", int_to_json(c1_cubed)},
                      {"c1c2", int_to_json(c1c2)},
                      {"c3", int_to_json(c3)}}}};
}

Result<BasisCoefficients> basis_coefficients(const FixedPointData& data) {
    const int n = data.half_dimension;
    BasisCoefficients bc;
    bc.a.assign(size_t(n) + 1, Int(1));
    for (int i = 1; i <= n; ++i) {
        // prod_{j<i} (phi(P_j) - phi(P_i)) = a_i * Lambda_i^-
        Int numer = 1;
        for (int j = 0; j < i; ++j) numer *= data.moment(j) - data.moment(i);
        const Int lambda_minus = profile_point(data, i).lambda_minus;
        auto q = exact_div(numer, lambda_minus);
        if (!q || *q <= 0)
            return Failure{Errc::non_integral_coefficient,
                           "basis coefficient a_" + std::to_string(i) +
                               " is not a positive integer",
                           json{{"i", i},
                                {"numerator", int_to_json(numer)},
                                {"lambda_minus", int_to_json(lambda_minus)}}};
        bc.a[size_t(i)] = *q;
    }
    return bc;
}

CheckResult check_poincare_duality(const FixedPointData& data) {
    const char* name = check_name::poincare_duality;
    if (data.half_dimension != 3)
        return {name, true, json{{"note", "only evaluated for half_dimension 3"}}};

    auto forward = basis_coefficients(data);
    if (!forward.ok())
        return {name, false,
                json{{"orientation", "forward"}, {"error", forward.error().to_json()}}};
    auto reversed = basis_coefficients(reverse(data));
    if (!reversed.ok())
        return {name, false,
                json{{"orientation", "reversed"}, {"error", reversed.error().to_json()}}};

    const auto& af = forward.value().a;
    const auto& ar = reversed.value().a;
    json witness{{"a2", int_to_json(af[2])},
                 {"a3", int_to_json(af[3])},
                 {"reversed_a2", int_to_json(ar[2])},
                 {"reversed_a3", int_to_json(ar[3])}};
    if (af[2] == af[3] && ar[2] == ar[3]) return {name, true, witness};
    return {name, false, witness};
}

Result<RingPresentation> ring_structure(const FixedPointData& data) {
    if (data.half_dimension != 3)
        return Failure{Errc::unsupported_dimension,
                       "ring presentation is implemented for half_dimension 3", {}};
    auto duality = check_poincare_duality(data);
    if (!duality.passed)
        return Failure{Errc::duality_failure, "Poincare duality fails", duality.witness};

    auto forward = basis_coefficients(data);
    auto reversed = basis_coefficients(reverse(data));
    // a1 = 1 on both orientations: [omega] must be the degree-2 generator.
    if (forward.value().a[1] != 1 || reversed.value().a[1] != 1)
        return Failure{Errc::duality_failure,
                       "[omega] is not the degree-2 generator (a1 != 1)",
                       json{{"a1", int_to_json(forward.value().a[1])},
                            {"reversed_a1", int_to_json(reversed.value().a[1])}}};

    RingPresentation rp;
    rp.a = forward.value().a;
    rp.structure_constant = rp.a[2];
    return rp;
}

Result<EquivariantBasis> equivariant_basis(const FixedPointData& data) {
    auto bc = basis_coefficients(data);
    if (!bc.ok()) return bc.error();
    const int n = data.half_dimension;

    EquivariantBasis eb;
    eb.entries.assign(size_t(n) + 1, std::vector<Poly>(size_t(n) + 1));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            // B[i][j] = (1/a_i) prod_{k<i} (phi(P_k) - phi(P_j)) t^i.
            // The product vanishes for j < i, giving the triangular shape.
            Int numer = 1;
            for (int k = 0; k < i; ++k) numer *= data.moment(k) - data.moment(j);
            auto c = exact_div(numer, bc.value().a[size_t(i)]);
            if (!c)
                return Failure{Errc::non_integral_restriction,
                               "equivariant basis restriction is not integral",
                               json{{"i", i}, {"j", j}, {"numerator", int_to_json(numer)},
                                    {"a_i", int_to_json(bc.value().a[size_t(i)])}}};
            eb.entries[size_t(i)][size_t(j)] = Poly::monomial(*c, i);
        }
    }
    return eb;
}

Result<Rat> localize(const FixedPointData& data, const std::vector<Poly>& restrictions,
                     int degree_d) {
    const int n = data.half_dimension;
    if (int(restrictions.size()) != data.num_points())
        return Failure{Errc::malformed_input, "one restriction per fixed point is required", {}};
    Rat sum = 0;
    for (int i = 0; i < data.num_points(); ++i) {
        const Int lambda = profile_point(data, i).lambda_full;
        if (lambda == 0)
            return Failure{Errc::malformed_input, "zero weight product at a fixed point", {}};
        sum += make_rat(restrictions[size_t(i)].coeff(degree_d), lambda);
    }
    if (degree_d < n && sum != 0)
        return Failure{Errc::non_vanishing_negative_degree,
                       "localization sum below the top degree must vanish",
                       json{{"degree", degree_d}, {"sum", rat_to_json(sum)}}};
    return sum;
}

namespace {

struct ChernCoefficients {
    Int k1, k2, k3;
};

// Solves c1 and c2 as integer combinations of the equivariant basis from
// their restrictions at P_0, P_1, P_2; P_2 (for c1) and P_3 are consistency
// checks rather than inputs.
Result<ChernCoefficients> solve_chern_coefficients(const FixedPointData& data) {
    if (data.half_dimension != 3)
        return Failure{Errc::unsupported_dimension,
                       "Chern class solving is implemented for half_dimension 3", {}};
    auto eb = equivariant_basis(data);
    if (!eb.ok()) return eb.error();
    auto profs = profile(data);
    const auto& basis = eb.value();

    // c1 restricts to gamma_i t; write c1 = gamma_0 t + k1 alphatilde_1.
    auto k1 = exact_div(profs[1].gamma - profs[0].gamma, profs[1].lambda_minus);
    if (!k1)
        return Failure{Errc::non_integral_chern_coefficient,
                       "(gamma_1 - gamma_0) / Lambda_1^- is not an integer",
                       json{{"class", "c1"}}};
    for (int j = 2; j <= 3; ++j) {
        if (profs[size_t(j)].gamma != profs[0].gamma + *k1 * basis.coefficient(1, j))
            return Failure{Errc::non_integral_chern_coefficient,
                           "c1 restriction mismatch at a point not used in the solve",
                           json{{"class", "c1"}, {"point", j}}};
    }

    // c2 restricts to sigma2(P_i) t^2; write
    // c2 = sigma2(P_0) t^2 + b1 t alphatilde_1 + b2 alphatilde_2.
    auto b1 = exact_div(profs[1].sigma2 - profs[0].sigma2, profs[1].lambda_minus);
    if (!b1)
        return Failure{Errc::non_integral_chern_coefficient,
                       "(sigma2(P_1) - sigma2(P_0)) / Lambda_1^- is not an integer",
                       json{{"class", "c2"}, {"coefficient", "b1"}}};
    const Int c2_numer = profs[2].sigma2 - profs[0].sigma2 - *b1 * basis.coefficient(1, 2);
    auto b2 = exact_div(c2_numer, profs[2].lambda_minus);
    if (!b2)
        return Failure{Errc::non_integral_chern_coefficient,
                       "c2 coefficient of alphatilde_2 is not an integer",
                       json{{"class", "c2"}, {"coefficient", "b2"},
                            {"numerator", int_to_json(c2_numer)},
                            {"lambda2_minus", int_to_json(profs[2].lambda_minus)}}};
    if (profs[3].sigma2 !=
        profs[0].sigma2 + *b1 * basis.coefficient(1, 3) + *b2 * basis.coefficient(2, 3))
        return Failure{Errc::non_integral_chern_coefficient,
                       "c2 restriction mismatch at P_3",
                       json{{"class", "c2"}, {"point", 3}}};

    // The top Chern number equals the number of fixed points.
    return ChernCoefficients{*k1, *b2, Int(data.num_points())};
}

}  // namespace

Result<ChernNumbers> chern_numbers(const FixedPointData& data) {
    if (data.half_dimension != 3)
        return Failure{Errc::unsupported_dimension,
                       "Chern numbers are implemented for half_dimension 3", {}};
    auto profs = profile(data);

    // Localization route.
    Rat c13 = 0, c1c2 = 0, c3 = 0;
    for (const auto& p : profs) {
        c13 += make_rat(p.gamma * p.gamma * p.gamma, p.lambda_full);
        c1c2 += make_rat(p.gamma * p.sigma2, p.lambda_full);
        c3 += make_rat(p.lambda_full, p.lambda_full);  // sigma3 = Lambda
    }
    if (!is_integer(c13) || !is_integer(c1c2) || !is_integer(c3))
        return Failure{Errc::cross_check_mismatch,
                       "localized Chern numbers are not integers",
                       json{{"c1^3", rat_to_json(c13)},
                            {"c1c2", rat_to_json(c1c2)},
                            {"c3", rat_to_json(c3)}}};

    // Ring route: c1^3 = k1^3 N and c1 c2 = k1 k2 against the presentation.
    auto ring = ring_structure(data);
    if (!ring.ok()) return ring.error();
    auto coeffs = solve_chern_coefficients(data);
    if (!coeffs.ok()) return coeffs.error();
    const Int& k1 = coeffs.value().k1;
    const Int& k2 = coeffs.value().k2;
    const Int ring_c13 = k1 * k1 * k1 * ring.value().structure_constant;
    const Int ring_c1c2 = k1 * k2;

    ChernNumbers out{numerator(c13), numerator(c1c2), numerator(c3)};
    if (out.c1_cubed != ring_c13 || out.c1c2 != ring_c1c2 ||
        out.c3 != Int(data.num_points()))
        return Failure{Errc::cross_check_mismatch,
                       "localization and ring products disagree",
                       json{{"local", json{{"c1^3", int_to_json(out.c1_cubed)},
                                           {"c1c2", int_to_json(out.c1c2)},
                                           {"c3", int_to_json(out.c3)}}},
                            {"ring", json{{"c1^3", int_to_json(ring_c13)},
                                          {"c1c2", int_to_json(ring_c1c2)},
                                          {"c3", data.num_points()}}}}};
    return out;
}

Result<ChernData> chern_classes(const FixedPointData& data) {
    auto coeffs = solve_chern_coefficients(data);
    if (!coeffs.ok()) return coeffs.error();
    auto numbers = chern_numbers(data);
    if (!numbers.ok()) return numbers.error();
    ChernData cd;
    cd.k1 = coeffs.value().k1;
    cd.k2 = coeffs.value().k2;
    cd.k3 = coeffs.value().k3;
    cd.c1_cubed = numbers.value().c1_cubed;
    cd.c1c2 = numbers.value().c1c2;
    cd.c3 = numbers.value().c3;
    return cd;
}

Result<json> invariants_report(const FixedPointData& data) {
    auto ring = ring_structure(data);
    if (!ring.ok()) return ring.error();
    auto chern = chern_classes(data);
    if (!chern.ok()) return chern.error();

    const int n = data.half_dimension;
    using boost::multiprecision::pow;

    // Vanishing identities: sum phi_i^d / Lambda_i = 0 for d < n.
    for (int d = 0; d < n; ++d) {
        std::vector<Poly> r;
        for (int i = 0; i < data.num_points(); ++i)
            r.push_back(Poly::monomial(pow(data.moment(i), unsigned(d)), d));
        auto s = localize(data, r, d);
        if (!s.ok()) return s.error();
    }
    // Volume identity: sum (-phi_i)^n / Lambda_i = a_n.
    std::vector<Poly> un;
    for (int i = 0; i < data.num_points(); ++i)
        un.push_back(Poly::monomial(pow(Int(-data.moment(i)), unsigned(n)), n));
    auto vol = localize(data, un, n);
    if (!vol.ok()) return vol.error();
    if (vol.value() != Rat(ring.value().a[size_t(n)]))
        return Failure{Errc::cross_check_mismatch,
                       "volume integral does not match the top basis coefficient",
                       json{{"integral", rat_to_json(vol.value())},
                            {"a_n", int_to_json(ring.value().a[size_t(n)])}}};

    return json{{"ring", ring.value().to_json()},
                {"chern", chern.value().to_json()},
                {"localization_checks", "pass"}};
}

}  // namespace hamfp
