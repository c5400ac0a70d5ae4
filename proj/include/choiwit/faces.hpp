#pragma once

// Face classification of the 3-dimensional parameter body cut out by the
// positivity condition, and the lookup table mapping each face to its
// six-property profile (spanning / co-spanning / bi-spanning, optimal /
// co-optimal / bi-optimal).

#include "choiwit/choi.hpp"

#include <optional>
#include <string>

namespace choiwit {

enum class FaceTag {
    F_AB,
    F_AC,
    F_BC,
    F_ABC,
    E_A,
    E_B,
    E_C,
    E_AB,
    E_AC,
    E_T,      // carries t != 1
    V_200,
    V_101,
    V_110,
    V_CURVE,  // carries t != 1
    V_BC,     // carries t > 0
    INTERIOR,
    OUTSIDE,
};

struct FaceLabel {
    FaceTag tag = FaceTag::OUTSIDE;
    std::optional<double> t;  // present iff tag in {E_T, V_CURVE, V_BC}
};

struct PropertyProfile {
    bool spanning = false;
    bool co_spanning = false;
    bool bi_spanning = false;
    bool optimal = false;
    bool co_optimal = false;
    bool bi_optimal = false;
};

struct ClassifiedPoint {
    MapParams params;
    FaceLabel face;
    std::optional<PropertyProfile> profile;  // absent only for OUTSIDE
    RegionProfile region;
    std::string notes;
};

/// Smallest face containing p, resolved vertex -> edge -> facet ->
/// interior with a single absolute tolerance on the raw residuals.
FaceLabel classify_face(const MapParams& p, double tol = 1e-9);

/// Six-property row for a face. Throws std::invalid_argument for OUTSIDE.
PropertyProfile property_profile(const FaceLabel& face);

ClassifiedPoint classify(const MapParams& p, double tol = 1e-9);

std::string face_name(const FaceLabel& face);

}  // namespace choiwit
