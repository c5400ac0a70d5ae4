#pragma once

// The three-parameter family of maps on M_3 with cyclic diagonal weights
// (a, b, c) and negated off-diagonals, their 9x9 Choi matrices, and the
// closed-form membership predicates for the positive / completely
// positive / completely copositive / decomposable regions.

#include "choiwit/linalg.hpp"

#include <array>
#include <optional>

namespace choiwit {

struct MapParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// Throws std::invalid_argument on negative or non-finite entries.
void validate_params(const MapParams& p);

/// Images of the nine matrix units E_ij under a map on M_3.
using MapAction = std::array<std::array<CMat, 3>, 3>;

struct WitnessMatrix {
    CMat mat;                        // 9x9 Hermitian
    std::optional<MapParams> params; // set when built from (a,b,c)
};

struct RegionProfile {
    bool positive = false;
    bool completely_positive = false;
    bool completely_copositive = false;
    bool decomposable = false;
    // Signed raw residuals of the defining inequalities; margin_pos_bc is
    // +infinity when a >= 1 and the second positivity condition is vacuous.
    double margin_pos_sum = 0.0;
    double margin_pos_bc = 0.0;
    double margin_cp = 0.0;
    double margin_ccp = 0.0;
    double margin_dec = 0.0;
};

CMat phi_apply(const MapParams& p, const CMat& x);
MapAction phi_action(const MapParams& p);

/// Direct entry-by-entry construction of the 9x9 witness matrix:
/// diagonal (a,c,b,b,a,c,c,b,a), -1 at the six off-diagonal block corners.
WitnessMatrix choi_matrix(const MapParams& p);

/// Generic Choi matrix Sum_ij |i><j| (x) m[i][j]. Rejects actions that
/// violate the Hermiticity-preserving invariant.
WitnessMatrix choi_from_action(const MapAction& m);

RegionProfile region_profile(const MapParams& p);

/// Boundary curve (a(t),b(t),c(t)) = ((1-t)^2, t^2, 1)/(1-t+t^2), t > 0.
MapParams choi_curve(double t);

/// Kills the off-diagonal part of a 3x3 matrix.
CMat diagonal_map_apply(const CMat& x);

}  // namespace choiwit
