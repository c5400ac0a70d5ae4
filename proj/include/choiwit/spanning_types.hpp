#pragma once

#include "choiwit/linalg.hpp"

namespace choiwit {

/// A nonzero product vector xi (x) eta in C^3 (x) C^3 with its cached
/// 9-dimensional tensor.
struct ProductVector {
    CVec xi;
    CVec eta;
    CVec tensor;
};

/// Builds the cached tensor; rejects zero factors.
ProductVector make_product_vector(CVec xi, CVec eta);

}  // namespace choiwit
