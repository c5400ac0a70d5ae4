#include "choiwit/spanning.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace choiwit {

ProductVector make_product_vector(CVec xi, CVec eta) {
    if (xi.size() != 3 || eta.size() != 3)
        throw std::invalid_argument("product vector factors must have dimension 3");
    if (xi.norm() == 0.0 || eta.norm() == 0.0)
        throw std::invalid_argument("product vector factors must be nonzero");
    CVec tensor = kron3(xi, eta);
    return ProductVector{std::move(xi), std::move(eta), std::move(tensor)};
}

std::array<ProductVector, 3> family_vectors(const MapParams& p, const PhasePair& phase) {
    validate_params(p);
    if (p.b <= 0.0 || p.c <= 0.0)
        throw std::invalid_argument("family degenerates; use search path");
    const double b4 = std::pow(p.b, 0.25);
    const double c4 = std::pow(p.c, 0.25);
    const double bc4 = std::pow(p.b * p.c, 0.25);
    const double b2 = std::sqrt(p.b);
    const Complex et = std::polar(1.0, phase.theta);
    const Complex es = std::polar(1.0, phase.sigma);
    std::array<ProductVector, 3> out;
    for (int k = 0; k < 3; ++k) {
        CVec xi = CVec::Zero(3);
        CVec eta = CVec::Zero(3);
        xi((k + 1) % 3) = et * b4;
        xi((k + 2) % 3) = es * c4;
        eta((k + 1) % 3) = std::conj(et) * bc4;
        eta((k + 2) % 3) = std::conj(es) * b2;
        out[static_cast<std::size_t>(k)] = make_product_vector(std::move(xi), std::move(eta));
    }
    return out;
}

double family_value(const MapParams& p) {
    validate_params(p);
    return -2.0 * (1.0 - p.a) * p.b * std::sqrt(p.c) + 2.0 * std::pow(p.b, 1.5) * p.c;
}

double det_m(const MapParams& p) {
    validate_params(p);
    if (p.b <= 0.0 || p.c <= 0.0)
        throw std::invalid_argument("determinant matrix degenerates for b = 0 or c = 0");
    const double sigmas[3] = {0.0, std::numbers::pi / 2.0, std::numbers::pi};
    CMat m(9, 9);
    int col = 0;
    for (int k = 0; k < 3; ++k)
        for (double sigma : sigmas) {
            const auto fam = family_vectors(p, PhasePair{0.0, sigma});
            m.col(col++) = fam[static_cast<std::size_t>(k)].tensor;
        }
    return std::abs(m.determinant());
}

double det_m_closed_form(const MapParams& p) {
    return 128.0 * std::pow(p.b, 4.5) * std::pow(p.c, 2.25);
}

NotPositiveError::NotPositiveError(ProductVector v, double val)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "map not positive: product vector with quadratic form value " << val;
          return os.str();
      }()),
      violator(std::move(v)),
      value(val) {}

namespace {

SpanningCertificate build_certificate(const WitnessMatrix& w, const SearchConfig& cfg,
                                      SpanTarget target) {
    require_hermitian(w.mat, 1e-12);
    SpanningCertificate cert;
    cert.target = target;
    cert.params = w.params;
    cert.zero_tol = cfg.zero_tol * std::max(1.0, w.mat.norm());
    cert.rank_tol = cfg.rank_tol;
    cert.seed = cfg.seed;

    auto add = [&](ProductVector v) {
        v.xi.normalize();
        v.eta.normalize();
        v.tensor = kron3(v.xi, v.eta);
        const double val = quad_form(w.mat, v.tensor);
        if (val < -cert.zero_tol) throw NotPositiveError(std::move(v), val);
        if (std::abs(val) <= cert.zero_tol) {
            cert.values.push_back(val);
            cert.vectors.push_back(std::move(v));
        }
    };

    auto rank_now = [&] {
        std::vector<CVec> tensors;
        tensors.reserve(cert.vectors.size());
        for (const auto& v : cert.vectors) tensors.push_back(v.tensor);
        return numerical_rank(tensors, cfg.rank_tol);
    };

    // closed-form family on the zero surface bc = (1-a)^2, a <= 1
    if (w.params && w.params->b > 0.0 && w.params->c > 0.0 &&
        std::abs(family_value(*w.params)) <= cert.zero_tol) {
        const double sigmas[3] = {0.0, std::numbers::pi / 2.0, std::numbers::pi};
        for (double sigma : sigmas)
            for (auto& v : family_vectors(*w.params, PhasePair{0.0, sigma}))
                add(std::move(v));
    }

    cert.rank = rank_now();

    // structured candidates: basis vectors and two-support combinations with
    // unit or quarter-turn relative phase; the random descent converges to
    // the high-dimensional zero components and can miss these isolated ones
    if (cert.rank < 9) {
        std::vector<CVec> dict;
        for (int i = 0; i < 3; ++i) {
            CVec e = CVec::Zero(3);
            e(i) = 1.0;
            dict.push_back(std::move(e));
        }
        const Complex phases[4] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                for (const Complex& ph : phases) {
                    CVec v = CVec::Zero(3);
                    v(i) = 1.0;
                    v(j) = ph;
                    dict.push_back(std::move(v));
                }
        for (const auto& xi : dict)
            for (const auto& eta : dict) add(make_product_vector(xi, eta));
        cert.rank = rank_now();
    }

    // multistart zero search; each restart is deterministic in (seed, index)
    if (cert.rank < 9) {
        for (int r = 0; r < cfg.restarts; ++r) {
            auto res = min_product_form_single(w.mat, cfg, r);
            add(std::move(res.argmin));
        }
        cert.rank = rank_now();
    }

    cert.verdict = cert.rank == 9 ? SpanVerdict::CERTIFIED : SpanVerdict::EVIDENCE_ONLY;
    return cert;
}

}  // namespace

SpanningCertificate spanning_certificate(const WitnessMatrix& w, const SearchConfig& cfg) {
    return build_certificate(w, cfg, SpanTarget::SPANNING);
}

SpanningCertificate co_spanning_certificate(const WitnessMatrix& w, const SearchConfig& cfg) {
    // the transposed matrix is no longer of the parametric form, so the
    // family shortcut must not apply to it
    WitnessMatrix gamma{partial_transpose(w.mat), std::nullopt};
    auto cert = build_certificate(gamma, cfg, SpanTarget::CO_SPANNING);
    cert.params = w.params;
    return cert;
}

}  // namespace choiwit
