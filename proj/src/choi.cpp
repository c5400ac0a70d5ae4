#include "choiwit/choi.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace choiwit {

void validate_params(const MapParams& p) {
    if (!(std::isfinite(p.a) && std::isfinite(p.b) && std::isfinite(p.c)))
        throw std::invalid_argument("map parameters must be finite");
    if (p.a < 0.0 || p.b < 0.0 || p.c < 0.0)
        throw std::invalid_argument("map parameters must be nonnegative");
}

CMat phi_apply(const MapParams& p, const CMat& x) {
    validate_params(p);
    if (x.rows() != 3 || x.cols() != 3)
        throw std::invalid_argument("phi_apply expects a 3x3 matrix");
    CMat out = -x;
    out(0, 0) = p.a * x(0, 0) + p.b * x(1, 1) + p.c * x(2, 2);
    out(1, 1) = p.c * x(0, 0) + p.a * x(1, 1) + p.b * x(2, 2);
    out(2, 2) = p.b * x(0, 0) + p.c * x(1, 1) + p.a * x(2, 2);
    return out;
}

MapAction phi_action(const MapParams& p) {
    MapAction act;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CMat unit = CMat::Zero(3, 3);
            unit(i, j) = 1.0;
            act[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                phi_apply(p, unit);
        }
    return act;
}

WitnessMatrix choi_matrix(const MapParams& p) {
    validate_params(p);
    CMat w = CMat::Zero(9, 9);
    const double diag[9] = {p.a, p.c, p.b, p.b, p.a, p.c, p.c, p.b, p.a};
    for (int k = 0; k < 9; ++k) w(k, k) = diag[k];
    const int corners[3][2] = {{0, 4}, {0, 8}, {4, 8}};
    for (const auto& rc : corners) {
        w(rc[0], rc[1]) = -1.0;
        w(rc[1], rc[0]) = -1.0;
    }
    return WitnessMatrix{std::move(w), p};
}

WitnessMatrix choi_from_action(const MapAction& m) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const CMat& img = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (img.rows() != 3 || img.cols() != 3)
                throw std::invalid_argument("map action blocks must be 3x3");
            const CMat& mirror = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if ((img - mirror.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
                throw std::invalid_argument(
                    "map action violates the Hermiticity-preserving invariant");
        }
    CMat w(9, 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            w.block(3 * i, 3 * j, 3, 3) =
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    require_hermitian(w, 1e-12);
    return WitnessMatrix{std::move(w), std::nullopt};
}

RegionProfile region_profile(const MapParams& p) {
    validate_params(p);
    const double bc = p.b * p.c;
    RegionProfile r;
    r.margin_pos_sum = p.a + p.b + p.c - 2.0;
    r.margin_pos_bc = p.a < 1.0 ? bc - (1.0 - p.a) * (1.0 - p.a)
                                : std::numeric_limits<double>::infinity();
    r.margin_cp = p.a - 2.0;
    r.margin_ccp = bc - 1.0;
    const double half = (2.0 - p.a) / 2.0;
    r.margin_dec = bc - half * half;
    r.positive = r.margin_pos_sum >= 0.0 && r.margin_pos_bc >= 0.0;
    r.completely_positive = p.a >= 2.0;
    r.completely_copositive = bc >= 1.0;
    r.decomposable = p.a > 2.0 || r.margin_dec >= 0.0;
    // nesting CP|coCP => decomposable => positive is a theorem of the
    // closed forms; a violation means arithmetic is broken
    if ((r.completely_positive || r.completely_copositive) && !r.decomposable)
        throw std::logic_error("region nesting violated: CP/coCP but not decomposable");
    if (r.decomposable && !r.positive)
        throw std::logic_error("region nesting violated: decomposable but not positive");
    return r;
}

MapParams choi_curve(double t) {
    if (!(t > 0.0))
        throw std::invalid_argument("choi_curve requires t > 0");
    const double denom = 1.0 - t + t * t;
    return MapParams{(1.0 - t) * (1.0 - t) / denom, t * t / denom, 1.0 / denom};
}

CMat diagonal_map_apply(const CMat& x) {
    if (x.rows() != 3 || x.cols() != 3)
        throw std::invalid_argument("diagonal_map_apply expects a 3x3 matrix");
    return x.diagonal().asDiagonal();
}

}  // namespace choiwit
