#include "choiwit/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace choiwit {

double hermiticity_defect(const CMat& m) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

void require_hermitian(const CMat& m, double tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
    const double defect = hermiticity_defect(m);
    if (defect > tol) {
        std::ostringstream os;
        os << "matrix is not Hermitian: max asymmetry " << defect
           << " exceeds tolerance " << tol;
        throw std::invalid_argument(os.str());
    }
}

EigSystem hermitian_eigs(const CMat& h) {
    require_hermitian(h);
    Eigen::SelfAdjointEigenSolver<CMat> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed to converge");
    return EigSystem{solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const CMat& h) {
    return hermitian_eigs(h).values(0);
}

CMat partial_transpose(const CMat& w) {
    if (w.rows() != 9 || w.cols() != 9)
        throw std::invalid_argument("partial_transpose expects a 9x9 matrix");
    CMat out(9, 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    out(3 * i + j, 3 * k + l) = w(3 * i + l, 3 * k + j);
    return out;
}

CVec kron3(const CVec& xi, const CVec& eta) {
    if (xi.size() != 3 || eta.size() != 3)
        throw std::invalid_argument("kron3 expects two vectors of dimension 3");
    CVec out(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out(3 * i + j) = xi(i) * eta(j);
    return out;
}

double quad_form(const CMat& w, const CVec& v) {
    if (w.rows() != w.cols() || w.rows() != v.size())
        throw std::invalid_argument("quad_form dimension mismatch");
    const Complex raw = v.dot(w * v);  // v.dot conjugates the left factor
    const double scale = w.norm() * v.squaredNorm();
    if (std::abs(raw.imag()) > 1e-10 * scale)
        throw std::runtime_error("quad_form imaginary residual exceeds tolerance");
    return raw.real();
}

int numerical_rank(const std::vector<CVec>& vectors, double tol) {
    if (vectors.empty()) return 0;
    if (tol <= 0.0) throw std::invalid_argument("numerical_rank tolerance must be positive");
    const Eigen::Index dim = vectors.front().size();
    CMat stacked(dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (vectors[k].size() != dim)
            throw std::invalid_argument("numerical_rank: inconsistent vector dimensions");
        stacked.col(static_cast<Eigen::Index>(k)) = vectors[k];
    }
    Eigen::JacobiSVD<CMat> svd(stacked);
    const auto& sigma = svd.singularValues();
    const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
    if (smax == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index k = 0; k < sigma.size(); ++k)
        if (sigma(k) > tol * smax) ++rank;
    return rank;
}

}  // namespace choiwit
