#pragma once

// Gaussian curvature of a fold germ pulled back by the blow-up
// Π(r,θ) = (r cosθ, r² cosθ sinθ / 2), its leading term K̃, and the contour
// generator profile seen along a normal direction.

#include <array>
#include <vector>

#include "axial/normalization.hpp"

namespace axial {

struct BlowupOptions {
    double cos_margin = 0.1;  ///< |cos θ| must be at least this
    double r_max = 0.1;
    int min_order = 4;
};

struct BlowupSample {
    double r = 0.0;
    double theta = 0.0;
    double K = 0.0;
};

/// Point Π(r,θ) in the source.
std::array<double, 2> blowup_point(double r, double theta);

/// Gaussian curvature at Π(r,θ), evaluated on the fold normal form of f.
BlowupSample blowup_gauss(const MapGerm& f, double r, double theta, const BlowupOptions& opt = {},
                          const Tolerance& tol = {});

/// Same, reusing a precomputed normal form.
BlowupSample blowup_gauss(const FoldNormalForm& fnf, double r, double theta, const BlowupOptions& opt = {},
                          const Tolerance& tol = {});

/// K r⁴ cosθ (b1² cos²θ + a2² sin²θ)² / 4, which tends to K̃(θ)·a2 as r -> 0.
double normalized_blowup(const FoldNormalForm& fnf, const BlowupSample& s);

struct KTildeValue {
    double theta = 0.0;
    double value = 0.0;
};

/// b1 (kappa_a b1 cosθ - kappa_u sinθ), with kappa_u the signed b0.
KTildeValue ktilde(const FoldNormalForm& fnf, double kappa_a, double kappa_u, double theta);

struct BlowupLimit {
    std::array<double, 3> radii{};
    std::array<double, 3> values{};  ///< normalized quantity at each radius
    double limit = 0.0;              ///< first-order Richardson extrapolation
};

/// Evaluates the normalized quantity at r, r/10, r/100 and extrapolates to r = 0.
BlowupLimit blowup_limit(const FoldNormalForm& fnf, double theta, double r = 1e-2, const BlowupOptions& opt = {},
                         const Tolerance& tol = {});

struct ContourProfile {
    std::vector<std::array<double, 3>> samples;  ///< (u, p1, p2)
    double kappa1 = 0.0;                         ///< curvature of the contour at u = 0
    double v1_second = 0.0;                      ///< v1''(0)
    TruncatedPoly2 v1;                           ///< series of the contour generator v = v1(u)
};

/// Profile of the contour generator for ξ = (0, cosφ, sinφ) in the fold normal frame.
ContourProfile koenderink_profile(const MapGerm& f, double phi, int samples = 21, double u_max = 0.05,
                                  const Tolerance& tol = {});

}  // namespace axial
