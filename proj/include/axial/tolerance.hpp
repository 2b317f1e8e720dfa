#pragma once

namespace axial {

/// Degeneracy threshold. Comparisons against zero use tau(scale), where scale is the
/// largest magnitude among the coefficients being tested, so that large germs do not
/// misclassify.
struct Tolerance {
    double base = 1e-9;

    double tau(double scale) const noexcept { return base * (1.0 + scale); }
};

}  // namespace axial
