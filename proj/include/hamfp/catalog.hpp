// Canonical constructors for the four families of dimension-6 fixed-point
// data with 4 fixed points. Moment values are normalized to phi(P_0) = 0.
#pragma once

#include "hamfp/core.hpp"

namespace hamfp {

/// CP^3 with gaps (a,b,c): one edge between each pair of points,
/// weights a, a+b, a+b+c from P_0 and b, b+c, c between the others.
FixedPointData make_cp3(const Int& a, const Int& b, const Int& c);

/// Oriented Grassmannian of 2-planes in R^5 with gaps (a,b,a), b even:
/// like CP^3 but the P_0 P_3 edge carries weight (2a+b)/2.
/// Fails with Errc::odd_b when b is odd.
Result<FixedPointData> make_grass(const Int& a, const Int& b);

/// The quintic del Pezzo 3-fold data: gaps (1,4,1), double edges
/// P_1 P_2 of weights {1,4} and P_0 P_3 of weights {2,3}.
FixedPointData make_v5();

/// The degree-22 prime Fano 3-fold data: gaps (1,10,1), double edges
/// P_1 P_2 of weights {1,5} and P_0 P_3 of weights {2,3}.
FixedPointData make_v22();

}  // namespace hamfp
