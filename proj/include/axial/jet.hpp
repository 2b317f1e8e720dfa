#pragma once

// Truncated bivariate Taylor polynomials and the map germs built from them.
//
// A TruncatedPoly2 of order N stores the coefficients c_ij of u^i v^j for i+j <= N.
// Products and compositions are truncated at N (standard jet semantics), so all
// results are exact on the retained band. Differentiation keeps the stored order;
// the top band of a derivative is always zero and carries no information.

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace axial {

inline constexpr int kDefaultOrder = 5;

enum class Var { u, v };

class TruncatedPoly2 {
public:
    explicit TruncatedPoly2(int order = kDefaultOrder);

    static TruncatedPoly2 constant(int order, double c);
    static TruncatedPoly2 monomial(int order, int i, int j, double c = 1.0);
    /// The coordinate function u or v.
    static TruncatedPoly2 variable(int order, Var var);

    int order() const noexcept { return order_; }

    /// Coefficient of u^i v^j; exactly 0 for absent or out-of-band exponents.
    double coeff(int i, int j) const noexcept;
    void set_coeff(int i, int j, double c);
    void add_coeff(int i, int j, double c);

    /// ∂_u^i ∂_v^j p (0,0) = i! j! c_ij.
    double derivative_at_origin(int i, int j) const noexcept;

    double eval(double u, double v) const noexcept;

    /// Copy at a different order. Raising the order pads with zeros; callers must only do
    /// that for polynomials that are genuinely exact (e.g. finite polynomials).
    TruncatedPoly2 with_order(int order) const;

    /// Largest |c_ij| over the terms with i+j <= max_degree.
    double max_abs_coeff(int max_degree) const noexcept;
    double max_abs_coeff() const noexcept { return max_abs_coeff(order_); }

    TruncatedPoly2& operator+=(const TruncatedPoly2& q);
    TruncatedPoly2& operator-=(const TruncatedPoly2& q);
    TruncatedPoly2& operator*=(double s) noexcept;

    friend TruncatedPoly2 operator+(TruncatedPoly2 p, const TruncatedPoly2& q) { return p += q; }
    friend TruncatedPoly2 operator-(TruncatedPoly2 p, const TruncatedPoly2& q) { return p -= q; }
    friend TruncatedPoly2 operator*(TruncatedPoly2 p, double s) noexcept { return p *= s; }
    friend TruncatedPoly2 operator*(double s, TruncatedPoly2 p) noexcept { return p *= s; }
    friend TruncatedPoly2 operator-(TruncatedPoly2 p) noexcept { return p *= -1.0; }
    friend TruncatedPoly2 operator*(const TruncatedPoly2& p, const TruncatedPoly2& q);

    friend bool operator==(const TruncatedPoly2&, const TruncatedPoly2&) = default;

    static constexpr std::size_t band_size(int order) noexcept {
        return static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(order + 2) / 2;
    }

private:
    static constexpr std::size_t index(int i, int j) noexcept {
        const auto d = static_cast<std::size_t>(i + j);
        return d * (d + 1) / 2 + static_cast<std::size_t>(j);
    }

    int order_;
    std::vector<double> coeffs_;
};

TruncatedPoly2 poly_add(const TruncatedPoly2& p, const TruncatedPoly2& q);
TruncatedPoly2 poly_mul(const TruncatedPoly2& p, const TruncatedPoly2& q);
TruncatedPoly2 poly_diff(const TruncatedPoly2& p, Var var);
TruncatedPoly2 pow(const TruncatedPoly2& p, int k);

/// p(x(u,v), y(u,v)) truncated at p.order(). The substituted series must have zero
/// constant term and be resolved at least to p.order(); no invertibility is required,
/// so this also substitutes curves such as (u, c(u)).
TruncatedPoly2 compose(const TruncatedPoly2& p, const TruncatedPoly2& x, const TruncatedPoly2& y);

/// Jet of the curve v = c(u) with F(u, c(u)) = 0, for F(0,0) = 0 and F_v(0,0) != 0.
/// Chord iteration c <- c - F(u,c)/F_v(0,0); each pass fixes one more order. The result
/// depends on u only and is exact through degree F.order() - 1.
TruncatedPoly2 implicit_curve(const TruncatedPoly2& F);

/// |p(a,b) coefficients| <= tol on the band i+j <= max_degree.
bool is_negligible(const TruncatedPoly2& p, double tol, int max_degree);

/// Source diffeomorphism germ (u,v) -> (x(u,v), y(u,v)) fixing the origin.
class SourceChange {
public:
    SourceChange(TruncatedPoly2 x, TruncatedPoly2 y);

    static SourceChange identity(int order);
    static SourceChange linear(int order, const Eigen::Matrix2d& m);

    int order() const noexcept { return x_.order(); }
    const TruncatedPoly2& x() const noexcept { return x_; }
    const TruncatedPoly2& y() const noexcept { return y_; }
    Eigen::Matrix2d jacobian() const noexcept;

    /// this ∘ inner, i.e. (u,v) -> this(inner(u,v)).
    SourceChange after(const SourceChange& inner) const;

private:
    TruncatedPoly2 x_;
    TruncatedPoly2 y_;
};

TruncatedPoly2 poly_compose(const TruncatedPoly2& p, const SourceChange& s);

class TargetIsometry {
public:
    explicit TargetIsometry(const Eigen::Matrix3d& rotation);
    static TargetIsometry identity() { return TargetIsometry(Eigen::Matrix3d::Identity()); }

    const Eigen::Matrix3d& matrix() const noexcept { return r_; }

private:
    Eigen::Matrix3d r_;
};

/// A vector of three polynomials with a common order, e.g. a partial derivative of a germ.
struct PolyVec3 {
    std::array<TruncatedPoly2, 3> c;

    int order() const noexcept { return c[0].order(); }
    const TruncatedPoly2& operator[](int k) const { return c.at(static_cast<std::size_t>(k)); }
    Eigen::Vector3d eval(double u, double v) const noexcept;
    Eigen::Vector3d at_origin() const noexcept { return eval(0.0, 0.0); }
};

PolyVec3 diff(const PolyVec3& f, Var var);
TruncatedPoly2 dot(const PolyVec3& a, const PolyVec3& b);
PolyVec3 cross(const PolyVec3& a, const PolyVec3& b);
TruncatedPoly2 dot(const PolyVec3& a, const Eigen::Vector3d& w);

/// Map germ f:(R^2,0) -> (R^3,0): three components of a common order, zero constant terms.
class MapGerm {
public:
    MapGerm(TruncatedPoly2 x, TruncatedPoly2 y, TruncatedPoly2 z);
    explicit MapGerm(const PolyVec3& components);

    int order() const noexcept { return comps_.order(); }
    const TruncatedPoly2& operator[](int k) const { return comps_[k]; }
    const PolyVec3& components() const noexcept { return comps_; }

    Eigen::Vector3d eval(double u, double v) const noexcept { return comps_.eval(u, v); }
    /// ∂_u^i ∂_v^j f (0,0).
    Eigen::Vector3d derivative(int i, int j) const noexcept;
    /// The derivative polynomial ∂_u^i ∂_v^j f.
    PolyVec3 partial(int i, int j) const;

    /// Largest coefficient magnitude over the terms of total degree <= max_degree.
    double scale(int max_degree = 2) const noexcept;

    friend bool operator==(const MapGerm& a, const MapGerm& b) { return a.comps_.c == b.comps_.c; }

private:
    PolyVec3 comps_;
};

/// R · (f ∘ s).
MapGerm germ_transform(const MapGerm& f, const SourceChange& s, const TargetIsometry& r);
MapGerm germ_compose(const MapGerm& f, const SourceChange& s);
MapGerm germ_rotate(const MapGerm& f, const Eigen::Matrix3d& r);

}  // namespace axial
