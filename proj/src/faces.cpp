#include "choiwit/faces.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace choiwit {

namespace {

double recover_t(const MapParams& p, double tol) {
    if (1.0 - p.a <= tol) {
        std::ostringstream os;
        os << "cannot recover curve parameter: 1 - a = " << 1.0 - p.a
           << " is below tolerance " << tol;
        throw std::invalid_argument(os.str());
    }
    return p.b / (1.0 - p.a);
}

}  // namespace

FaceLabel classify_face(const MapParams& p, double tol) {
    validate_params(p);
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const double a = p.a, b = p.b, c = p.c;
    const double bc = b * c;
    const double r_sum = a + b + c - 2.0;
    const double r_curve = bc - (1.0 - a) * (1.0 - a);

    const bool pos = r_sum >= -tol && (a >= 1.0 - tol || r_curve >= -tol);
    if (!pos) return {FaceTag::OUTSIDE, std::nullopt};

    // vertices
    if (std::abs(a - 2.0) <= tol && b <= tol && c <= tol)
        return {FaceTag::V_200, std::nullopt};
    if (std::abs(a - 1.0) <= tol && b <= tol && std::abs(c - 1.0) <= tol)
        return {FaceTag::V_101, std::nullopt};
    if (std::abs(a - 1.0) <= tol && std::abs(b - 1.0) <= tol && c <= tol)
        return {FaceTag::V_110, std::nullopt};
    if (a <= tol && std::abs(bc - 1.0) <= tol)
        return {FaceTag::V_BC, b};
    if (a < 1.0 - tol && std::abs(r_curve) <= tol && std::abs(r_sum) <= tol)
        return {FaceTag::V_CURVE, recover_t(p, tol)};

    // 1-dimensional faces (relative interiors; endpoints were caught above)
    if (b <= tol && c <= tol) return {FaceTag::E_A, std::nullopt};
    if (std::abs(a - 1.0) <= tol && c <= tol) return {FaceTag::E_B, std::nullopt};
    if (std::abs(a - 1.0) <= tol && b <= tol) return {FaceTag::E_C, std::nullopt};
    if (c <= tol && std::abs(a + b - 2.0) <= tol) return {FaceTag::E_AB, std::nullopt};
    if (b <= tol && std::abs(a + c - 2.0) <= tol) return {FaceTag::E_AC, std::nullopt};
    if (a > tol && a < 1.0 - tol && std::abs(r_curve) <= tol)
        return {FaceTag::E_T, recover_t(p, tol)};

    // 2-dimensional faces
    if (c <= tol) return {FaceTag::F_AB, std::nullopt};
    if (b <= tol) return {FaceTag::F_AC, std::nullopt};
    if (a <= tol) return {FaceTag::F_BC, std::nullopt};
    if (std::abs(r_sum) <= tol) return {FaceTag::F_ABC, std::nullopt};

    return {FaceTag::INTERIOR, std::nullopt};
}

PropertyProfile property_profile(const FaceLabel& face) {
    PropertyProfile pp;
    switch (face.tag) {
        case FaceTag::F_AB:
        case FaceTag::F_AC:
        case FaceTag::F_BC:
        case FaceTag::F_ABC:
        case FaceTag::E_A:
        case FaceTag::E_B:
        case FaceTag::E_C:
        case FaceTag::INTERIOR:
            break;  // all false
        case FaceTag::E_AB:
        case FaceTag::E_AC:
        case FaceTag::V_200:
            pp.co_spanning = true;
            pp.co_optimal = true;
            break;
        case FaceTag::E_T:
        case FaceTag::V_BC:
            pp.spanning = true;
            pp.optimal = true;
            break;
        case FaceTag::V_101:
        case FaceTag::V_110:
            pp.co_spanning = true;
            pp.optimal = true;
            pp.co_optimal = true;
            break;
        case FaceTag::V_CURVE:
            pp.spanning = true;
            pp.co_spanning = true;
            pp.optimal = true;
            pp.co_optimal = true;
            break;
        case FaceTag::OUTSIDE:
            throw std::invalid_argument("not a positive map; no witness properties");
    }
    pp.bi_spanning = pp.spanning && pp.co_spanning;
    pp.bi_optimal = pp.optimal && pp.co_optimal;
    return pp;
}

ClassifiedPoint classify(const MapParams& p, double tol) {
    ClassifiedPoint cp;
    cp.params = p;
    cp.region = region_profile(p);
    cp.face = classify_face(p, tol);
    if (cp.face.tag != FaceTag::OUTSIDE) cp.profile = property_profile(cp.face);
    switch (cp.face.tag) {
        case FaceTag::V_110: cp.notes = "smallest exposed face: e_ab"; break;
        case FaceTag::V_101: cp.notes = "smallest exposed face: e_ac"; break;
        case FaceTag::V_200:
            cp.notes = "contained in smallest exposed face of v_(1,0,1)";
            break;
        default: break;
    }
    return cp;
}

std::string face_name(const FaceLabel& face) {
    switch (face.tag) {
        case FaceTag::F_AB: return "f_ab";
        case FaceTag::F_AC: return "f_ac";
        case FaceTag::F_BC: return "f_bc";
        case FaceTag::F_ABC: return "f_abc";
        case FaceTag::E_A: return "e_a";
        case FaceTag::E_B: return "e_b";
        case FaceTag::E_C: return "e_c";
        case FaceTag::E_AB: return "e_ab";
        case FaceTag::E_AC: return "e_ac";
        case FaceTag::E_T: return "e_t";
        case FaceTag::V_200: return "v_(2,0,0)";
        case FaceTag::V_101: return "v_(1,0,1)";
        case FaceTag::V_110: return "v_(1,1,0)";
        case FaceTag::V_CURVE: return "v_curve";
        case FaceTag::V_BC: return "v_bc";
        case FaceTag::INTERIOR: return "interior";
        case FaceTag::OUTSIDE: return "outside";
    }
    return "?";
}

}  // namespace choiwit
