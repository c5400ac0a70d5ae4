#include "choiwit/oracle.hpp"

#include "choiwit/spanning.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace choiwit {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step so that (seed, restart) streams do not overlap
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

CVec random_unit_vector(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    v.normalize();
    return v;
}

// B(xi)_{jl} = sum_{i,k} conj(xi_i) xi_k W[(i,j),(k,l)]; for unit xi the
// minimal eigenvalue of B is the form minimum over unit eta.
CMat contract_first(const CMat& w, const CVec& xi) {
    CMat b = CMat::Zero(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            const Complex coeff = std::conj(xi(i)) * xi(k);
            if (coeff == Complex(0.0, 0.0)) continue;
            b += coeff * w.block(3 * i, 3 * k, 3, 3);
        }
    return b;
}

CMat contract_second(const CMat& w, const CVec& eta) {
    CMat a = CMat::Zero(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            Complex entry(0.0, 0.0);
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l)
                    entry += std::conj(eta(j)) * eta(l) * w(3 * i + j, 3 * k + l);
            a(i, k) = entry;
        }
    return a;
}

std::pair<double, CVec> min_eig_pair(const CMat& h) {
    Eigen::SelfAdjointEigenSolver<CMat> solver((h + h.adjoint()) / 2.0);
    return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

}  // namespace

MinFormResult min_product_form_single(const CMat& w, const SearchConfig& cfg,
                                      int restart_index) {
    std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(restart_index)));
    CVec xi = random_unit_vector(rng, 3);
    CVec eta = random_unit_vector(rng, 3);
    double value = quad_form(w, kron3(xi, eta));
    for (int it = 0; it < cfg.max_iters; ++it) {
        const double prev = value;
        auto [ve, eta_new] = min_eig_pair(contract_first(w, xi));
        eta = eta_new;
        auto [vx, xi_new] = min_eig_pair(contract_second(w, eta));
        xi = xi_new;
        value = vx;
        // run to a numerical fixed point: the form value is exactly
        // non-increasing per half-step, so the first non-improvement
        // below conv_tol * ulp-scale marks convergence; stopping on a
        // crude decrease threshold would leave zeros only sqrt(eps)
        // close to the zero manifold
        if (prev - value <= cfg.conv_tol * std::abs(value)) break;
    }
    return MinFormResult{value, make_product_vector(std::move(xi), std::move(eta))};
}

MinFormResult min_product_form(const CMat& w, const SearchConfig& cfg) {
    require_hermitian(w, 1e-12);
    if (cfg.restarts < 1) throw std::invalid_argument("restarts must be positive");
    MinFormResult best;
    bool have = false;
    for (int r = 0; r < cfg.restarts; ++r) {
        auto res = min_product_form_single(w, cfg, r);
        if (!have || res.value < best.value) {
            best = std::move(res);
            have = true;
        }
    }
    return best;
}

PositivityReport positivity_cross_check(const MapParams& p, const SearchConfig& cfg) {
    PositivityReport rep;
    rep.verdict_closed = region_profile(p).positive;
    auto res = min_product_form(choi_matrix(p).mat, cfg);
    rep.min_found = res.value;
    rep.argmin = std::move(res.argmin);
    rep.agree = rep.verdict_closed == (rep.min_found >= -1e-7);
    return rep;
}

double witness_expectation(const CMat& w, const CMat& rho) {
    if (w.rows() != rho.rows() || w.cols() != rho.cols() || w.rows() != w.cols())
        throw std::invalid_argument("witness_expectation dimension mismatch");
    const Complex raw = (w * rho).trace();
    const double scale = std::max(1.0, w.norm() * rho.norm());
    if (std::abs(raw.imag()) > 1e-10 * scale)
        throw std::runtime_error("witness expectation has non-negligible imaginary part");
    return raw.real();
}

void validate_density(const CMat& rho, double tol) {
    if (rho.rows() != 9 || rho.cols() != 9)
        throw std::invalid_argument("density matrix must be 9x9");
    if (hermiticity_defect(rho) > tol)
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
        throw std::invalid_argument("density matrix trace differs from 1");
    if (min_eigenvalue((rho + rho.adjoint()) / 2.0) < -tol)
        throw std::invalid_argument("density matrix is not positive semidefinite");
}

PptResult is_ppt(const CMat& rho, double tol) {
    const double margin = min_eigenvalue(partial_transpose(rho));
    return PptResult{margin >= -tol, margin};
}

namespace {

CMat project_psd(const CMat& h) {
    Eigen::SelfAdjointEigenSolver<CMat> solver((h + h.adjoint()) / 2.0);
    Eigen::VectorXd vals = solver.eigenvalues().cwiseMax(0.0);
    return solver.eigenvectors() * vals.asDiagonal() * solver.eigenvectors().adjoint();
}

CMat project_state(const CMat& h, double feas_tol, int max_rounds = 60) {
    CMat rho = h;
    for (int round = 0; round < max_rounds; ++round) {
        rho = project_psd(rho);
        const double tr = rho.trace().real();
        if (tr > 0.0) rho /= tr;
        else rho = CMat::Identity(9, 9) / 9.0;
        rho = partial_transpose(project_psd(partial_transpose(rho)));
        const double tr2 = rho.trace().real();
        if (tr2 > 0.0) rho /= tr2;
        if (min_eigenvalue((rho + rho.adjoint()) / 2.0) >= -feas_tol &&
            min_eigenvalue(partial_transpose(rho)) >= -feas_tol)
            break;
    }
    return rho;
}

}  // namespace

DetectionReport pptes_search(const WitnessMatrix& w, const SearchConfig& cfg) {
    require_hermitian(w.mat, 1e-12);
    DetectionReport rep;
    rep.state = CMat::Identity(9, 9) / 9.0;
    if (w.params) {
        const auto region = region_profile(*w.params);
        if (region.completely_copositive) {
            rep.note = "completely copositive - cannot detect PPT states";
            rep.witness_value = witness_expectation(w.mat, rep.state);
            rep.ppt_margin = is_ppt(rep.state).margin;
            return rep;
        }
        if (region.decomposable) {
            rep.note = "decomposable - detection impossible";
            rep.witness_value = witness_expectation(w.mat, rep.state);
            rep.ppt_margin = is_ppt(rep.state).margin;
            return rep;
        }
    }
    const double zero_abs = cfg.zero_tol * std::max(1.0, w.mat.norm());
    const double feas_tol = 1e-10;
    double best_value = std::numeric_limits<double>::infinity();
    for (int r = 0; r < cfg.restarts; ++r) {
        std::mt19937_64 rng(mix_seed(cfg.seed ^ 0x5054455353ULL,
                                     static_cast<std::uint64_t>(r)));
        std::normal_distribution<double> gauss(0.0, 1.0);
        CMat g(9, 9);
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
        CMat rho = g * g.adjoint();
        rho /= rho.trace().real();
        rho = project_state(rho, feas_tol);
        double step = 0.1 / std::max(1.0, w.mat.norm());
        double value = witness_expectation(w.mat, rho);
        for (int it = 0; it < cfg.max_iters; ++it) {
            CMat candidate = project_state(rho - step * w.mat, feas_tol);
            const double cand_value = witness_expectation(w.mat, candidate);
            if (cand_value < value - 1e-15) {
                rho = std::move(candidate);
                value = cand_value;
            } else {
                step /= 2.0;
                if (step < 1e-12) break;
            }
            if (value < -zero_abs) break;
        }
        if (value < best_value) {
            best_value = value;
            rep.state = rho;
        }
        if (value < -zero_abs) break;
    }
    rep.witness_value = best_value;
    rep.ppt_margin = is_ppt(rep.state).margin;
    if (best_value < -zero_abs && rep.ppt_margin >= -feas_tol &&
        min_eigenvalue((rep.state + rep.state.adjoint()) / 2.0) >= -feas_tol &&
        std::abs(rep.state.trace().real() - 1.0) <= feas_tol) {
        rep.status = DetectStatus::FOUND;
    } else {
        rep.status = DetectStatus::NOT_FOUND;
        if (rep.note.empty()) rep.note = "budget exhausted";
    }
    return rep;
}

}  // namespace choiwit
