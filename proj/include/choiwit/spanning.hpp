#pragma once

// Closed-form product-vector families on the zero surface bc = (1-a)^2,
// the witness-value and determinant identities they satisfy, and
// numerical spanning / co-spanning certificates built from the rank of
// zero-value product vectors.

#include "choiwit/choi.hpp"
#include "choiwit/oracle.hpp"
#include "choiwit/spanning_types.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace choiwit {

struct PhasePair {
    double theta = 0.0;
    double sigma = 0.0;
};

/// The three product vectors (k = 0,1,2)
///   xi^k  = e^{i theta} b^{1/4} |k+1> + e^{i sigma} c^{1/4} |k+2>,
///   eta^k = e^{-i theta} (bc)^{1/4} |k+1> + e^{-i sigma} b^{1/2} |k+2>
/// (indices mod 3). Requires b > 0 and c > 0.
std::array<ProductVector, 3> family_vectors(const MapParams& p, const PhasePair& phase);

/// The common quadratic-form value -2(1-a) b sqrt(c) + 2 b^{3/2} c taken
/// by every family vector against W[a,b,c].
double family_value(const MapParams& p);

/// |det| of the 9x9 matrix whose columns are the family tensors for
/// k in {0,1,2}, theta = 0, sigma in {0, pi/2, pi}.
double det_m(const MapParams& p);

/// The closed form 128 b^{9/2} c^{9/4} the determinant must match.
double det_m_closed_form(const MapParams& p);

enum class SpanTarget { SPANNING, CO_SPANNING };
enum class SpanVerdict { CERTIFIED, EVIDENCE_ONLY };

struct SpanningCertificate {
    SpanTarget target = SpanTarget::SPANNING;
    std::optional<MapParams> params;
    double zero_tol = 0.0;  // effective absolute threshold on |value|
    double rank_tol = 0.0;
    std::vector<ProductVector> vectors;
    std::vector<double> values;  // quad-form residuals, one per vector
    int rank = 0;
    SpanVerdict verdict = SpanVerdict::EVIDENCE_ONLY;
    std::uint64_t seed = 0;
};

/// Raised when the search uncovers a product vector with a negative
/// quadratic-form value: the underlying map is not positive.
struct NotPositiveError : std::runtime_error {
    NotPositiveError(ProductVector v, double val);
    ProductVector violator;
    double value;
};

/// Collects zero-value product vectors from the closed-form family (when
/// the parameters sit on the zero surface) and from multistart
/// minimization, and reports the numerical rank of their span.
/// CERTIFIED means rank 9 with every residual below zero_tol.
SpanningCertificate spanning_certificate(const WitnessMatrix& w, const SearchConfig& cfg);

/// spanning_certificate of the partial transpose.
SpanningCertificate co_spanning_certificate(const WitnessMatrix& w, const SearchConfig& cfg);

}  // namespace choiwit
