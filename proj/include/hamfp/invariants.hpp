// Global invariants computed from local fixed-point data: the canonical
// integral basis of the cohomology ring, the ring presentation, the
// equivariant restriction matrix, the total Chern class, and Chern numbers
// via fixed-point localization.
//
// The canonical basis alpha_i satisfies [omega]^i = a_i alpha_i with
//   a_i = prod_{j<i} (phi(P_j) - phi(P_i)) / Lambda_i^-,
// where Lambda_i^- is the product of the negative weights at P_i. The a_i
// must come out positive integers for consistent data.
#pragma once

#include <vector>

#include "hamfp/checks.hpp"
#include "hamfp/core.hpp"
#include "hamfp/polynomial.hpp"

namespace hamfp {

struct BasisCoefficients {
    std::vector<Int> a;  // a[0] = 1, a[i] for 1 <= i <= n
};

/// Ring presentation for n = 3: Z[x,y]/(x^2 - N y, y^2) with deg x = 2,
/// deg y = 4 and top generator xy; collapses to Z[x]/x^4 when N = 1.
struct RingPresentation {
    std::vector<Int> a;  // basis coefficients, a[0] = 1
    Int structure_constant;  // N = a2

    std::string presentation() const;
    json to_json() const;
};

/// Coefficients of the total Chern class in the canonical basis,
/// c(M) = 1 + k1 x + k2 y + k3 xy, plus the Chern numbers.
struct ChernData {
    Int k1;  // c1(M) = k1 x
    Int k2;  // c2(M) = k2 y
    Int k3;  // c3(M) = k3 xy; equals the number of fixed points
    Int c1_cubed;
    Int c1c2;
    Int c3;

    json to_json() const;
};

/// Restriction matrix B[i][j] = alphatilde_i|_{P_j}, each entry a polynomial
/// in t. Triangular: B[i][j] = 0 for j < i, B[i][i] = Lambda_i^- t^i,
/// B[0][j] = 1.
struct EquivariantBasis {
    std::vector<std::vector<Poly>> entries;

    const Poly& at(int i, int j) const { return entries[size_t(i)][size_t(j)]; }
    /// Scalar coefficient of B[i][j] (the entry is c * t^i).
    Int coefficient(int i, int j) const { return at(i, j).coeff(i); }
};

/// a_i for 0 <= i <= n; rejects data whose coefficients are not positive
/// integers (Errc::non_integral_coefficient).
Result<BasisCoefficients> basis_coefficients(const FixedPointData& data);

/// Poincare duality for n = 3: a2 == a3 must hold for the data and for its
/// orientation reversal. Integrality failures of either basis propagate into
/// the witness.
CheckResult check_poincare_duality(const FixedPointData& data);

/// Requires duality and a1 = 1 on both orientations (primitive [omega]).
Result<RingPresentation> ring_structure(const FixedPointData& data);

/// B[i][j] = (1/a_i) prod_{k<i} (phi(P_k) - phi(P_j)) t^i, all entries
/// verified to have integer coefficients.
Result<EquivariantBasis> equivariant_basis(const FixedPointData& data);

/// Pushforward of per-point restrictions r_i(t) of a degree-2d equivariant
/// class: returns sum_i coeff_{t^d}(r_i) / Lambda_i, the t^(d-n) coefficient
/// of the localization sum. For d < n the sum must vanish
/// (Errc::non_vanishing_negative_degree otherwise); for d = n it is the
/// integral over M.
Result<Rat> localize(const FixedPointData& data, const std::vector<Poly>& restrictions,
                     int degree_d);

/// Chern numbers by localization:
///   c1^3 = sum gamma_i^3 / Lambda_i,
///   c1c2 = sum gamma_i sigma2(P_i) / Lambda_i,
///   c3   = sum sigma3(P_i) / Lambda_i = number of fixed points,
/// cross-checked against the ring-side products k1^3 N and k1 k2
/// (Errc::cross_check_mismatch on disagreement).
struct ChernNumbers {
    Int c1_cubed;
    Int c1c2;
    Int c3;
};
Result<ChernNumbers> chern_numbers(const FixedPointData& data);

/// Total Chern class for n = 3. k1 = (gamma_1 - gamma_0)/Lambda_1^-; k2 is
/// solved from the restrictions of the equivariant c2 at P_0, P_1, P_2 with
/// P_3 used as a consistency check; k3 is the number of fixed points. All
/// divisions must be exact. Includes the localization Chern numbers.
Result<ChernData> chern_classes(const FixedPointData& data);

/// Combined report: {"ring":...,"chern":...,"localization_checks":"pass"}.
/// The localization checks are the vanishing identities
/// sum phi_i^d / Lambda_i = 0 for d < n and the volume identity
/// sum (-phi_i)^n / Lambda_i = a_n.
Result<json> invariants_report(const FixedPointData& data);

}  // namespace hamfp
