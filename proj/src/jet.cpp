#include "axial/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "axial/errors.hpp"

namespace axial {

namespace {

void require_same_order(const TruncatedPoly2& p, const TruncatedPoly2& q, const char* op) {
    if (p.order() != q.order()) {
        throw PreconditionError(std::string(op) + ": order mismatch (" + std::to_string(p.order()) +
                                " vs " + std::to_string(q.order()) + ")");
    }
}

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace

TruncatedPoly2::TruncatedPoly2(int order) : order_(order) {
    if (order < 0) throw PreconditionError("negative truncation order");
    coeffs_.assign(band_size(order), 0.0);
}

TruncatedPoly2 TruncatedPoly2::constant(int order, double c) {
    TruncatedPoly2 p(order);
    p.coeffs_[0] = c;
    return p;
}

TruncatedPoly2 TruncatedPoly2::monomial(int order, int i, int j, double c) {
    TruncatedPoly2 p(order);
    if (i + j <= order) p.set_coeff(i, j, c);
    return p;
}

TruncatedPoly2 TruncatedPoly2::variable(int order, Var var) {
    return var == Var::u ? monomial(order, 1, 0) : monomial(order, 0, 1);
}

double TruncatedPoly2::coeff(int i, int j) const noexcept {
    if (i < 0 || j < 0 || i + j > order_) return 0.0;
    return coeffs_[index(i, j)];
}

void TruncatedPoly2::set_coeff(int i, int j, double c) {
    if (i < 0 || j < 0 || i + j > order_) {
        throw PreconditionError("monomial u^" + std::to_string(i) + " v^" + std::to_string(j) +
                                " exceeds truncation order " + std::to_string(order_));
    }
    coeffs_[index(i, j)] = c;
}

void TruncatedPoly2::add_coeff(int i, int j, double c) { set_coeff(i, j, coeff(i, j) + c); }

double TruncatedPoly2::derivative_at_origin(int i, int j) const noexcept {
    return factorial(i) * factorial(j) * coeff(i, j);
}

double TruncatedPoly2::eval(double u, double v) const noexcept {
    // Horner in v inside Horner in u would need a different layout; powers are cheap here.
    std::array<double, 32> up{}, vp{};
    const int n = std::min(order_, 31);
    up[0] = vp[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        up[k] = up[k - 1] * u;
        vp[k] = vp[k - 1] * v;
    }
    double s = 0.0;
    for (int d = n; d >= 0; --d) {
        for (int j = 0; j <= d; ++j) s += coeffs_[index(d - j, j)] * up[d - j] * vp[j];
    }
    return s;
}

TruncatedPoly2 TruncatedPoly2::with_order(int order) const {
    TruncatedPoly2 p(order);
    const int n = std::min(order, order_);
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j) p.coeffs_[index(d - j, j)] = coeffs_[index(d - j, j)];
    return p;
}

double TruncatedPoly2::max_abs_coeff(int max_degree) const noexcept {
    double m = 0.0;
    const int n = std::min(max_degree, order_);
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j) m = std::max(m, std::abs(coeffs_[index(d - j, j)]));
    return m;
}

TruncatedPoly2& TruncatedPoly2::operator+=(const TruncatedPoly2& q) {
    require_same_order(*this, q, "poly_add");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += q.coeffs_[k];
    return *this;
}

TruncatedPoly2& TruncatedPoly2::operator-=(const TruncatedPoly2& q) {
    require_same_order(*this, q, "poly_sub");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= q.coeffs_[k];
    return *this;
}

TruncatedPoly2& TruncatedPoly2::operator*=(double s) noexcept {
    for (double& c : coeffs_) c *= s;
    return *this;
}

TruncatedPoly2 operator*(const TruncatedPoly2& p, const TruncatedPoly2& q) {
    require_same_order(p, q, "poly_mul");
    const int n = p.order_;
    TruncatedPoly2 r(n);
    for (int d1 = 0; d1 <= n; ++d1) {
        for (int j1 = 0; j1 <= d1; ++j1) {
            const double a = p.coeffs_[TruncatedPoly2::index(d1 - j1, j1)];
            if (a == 0.0) continue;
            for (int d2 = 0; d1 + d2 <= n; ++d2) {
                for (int j2 = 0; j2 <= d2; ++j2) {
                    const double b = q.coeffs_[TruncatedPoly2::index(d2 - j2, j2)];
                    if (b == 0.0) continue;
                    r.coeffs_[TruncatedPoly2::index(d1 - j1 + d2 - j2, j1 + j2)] += a * b;
                }
            }
        }
    }
    return r;
}

TruncatedPoly2 poly_add(const TruncatedPoly2& p, const TruncatedPoly2& q) { return p + q; }
TruncatedPoly2 poly_mul(const TruncatedPoly2& p, const TruncatedPoly2& q) { return p * q; }

TruncatedPoly2 poly_diff(const TruncatedPoly2& p, Var var) {
    const int n = p.order();
    TruncatedPoly2 r(n);
    for (int d = 1; d <= n; ++d) {
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            const double c = p.coeff(i, j);
            if (c == 0.0) continue;
            if (var == Var::u && i > 0) r.set_coeff(i - 1, j, c * i);
            if (var == Var::v && j > 0) r.set_coeff(i, j - 1, c * j);
        }
    }
    return r;
}

TruncatedPoly2 pow(const TruncatedPoly2& p, int k) {
    if (k < 0) throw PreconditionError("negative power of a jet");
    TruncatedPoly2 r = TruncatedPoly2::constant(p.order(), 1.0);
    for (int e = 0; e < k; ++e) r = r * p;
    return r;
}

TruncatedPoly2 compose(const TruncatedPoly2& p, const TruncatedPoly2& x, const TruncatedPoly2& y) {
    const int n = p.order();
    if (x.coeff(0, 0) != 0.0 || y.coeff(0, 0) != 0.0) {
        throw PreconditionError("poly_compose: substitution has a nonzero constant term");
    }
    if (x.order() < n || y.order() < n) {
        throw PreconditionError("poly_compose: substitution is resolved only to order " +
                                std::to_string(std::min(x.order(), y.order())) + " < " +
                                std::to_string(n));
    }
    const TruncatedPoly2 xs = x.with_order(n);
    const TruncatedPoly2 ys = y.with_order(n);
    std::vector<TruncatedPoly2> xp, yp;
    xp.reserve(static_cast<std::size_t>(n) + 1);
    yp.reserve(static_cast<std::size_t>(n) + 1);
    xp.push_back(TruncatedPoly2::constant(n, 1.0));
    yp.push_back(TruncatedPoly2::constant(n, 1.0));
    for (int k = 1; k <= n; ++k) {
        xp.push_back(xp.back() * xs);
        yp.push_back(yp.back() * ys);
    }
    TruncatedPoly2 r(n);
    for (int d = 0; d <= n; ++d) {
        for (int j = 0; j <= d; ++j) {
            const double c = p.coeff(d - j, j);
            if (c == 0.0) continue;
            r += c * (xp[static_cast<std::size_t>(d - j)] * yp[static_cast<std::size_t>(j)]);
        }
    }
    return r;
}

TruncatedPoly2 implicit_curve(const TruncatedPoly2& F) {
    const int n = F.order();
    const double fv = F.coeff(0, 1);
    if (fv == 0.0) throw PreconditionError("implicit_curve: F_v(0,0) = 0");
    if (F.coeff(0, 0) != 0.0) throw PreconditionError("implicit_curve: F(0,0) != 0");
    const TruncatedPoly2 u = TruncatedPoly2::variable(n, Var::u);
    TruncatedPoly2 c(n);
    for (int pass = 0; pass < n; ++pass) c -= compose(F, u, c) * (1.0 / fv);
    TruncatedPoly2 out(n);
    for (int i = 1; i < n; ++i) out.set_coeff(i, 0, c.coeff(i, 0));
    return out;
}

bool is_negligible(const TruncatedPoly2& p, double tol, int max_degree) {
    return p.max_abs_coeff(max_degree) <= tol;
}

// ---------------------------------------------------------------------------------------------

SourceChange::SourceChange(TruncatedPoly2 x, TruncatedPoly2 y) : x_(std::move(x)), y_(std::move(y)) {
    require_same_order(x_, y_, "SourceChange");
    if (x_.coeff(0, 0) != 0.0 || y_.coeff(0, 0) != 0.0) {
        throw PreconditionError("SourceChange: nonzero constant term");
    }
    if (std::abs(jacobian().determinant()) <= 1e-12) {
        throw PreconditionError("SourceChange: Jacobian at the origin is not invertible");
    }
}

SourceChange SourceChange::identity(int order) {
    return SourceChange(TruncatedPoly2::variable(order, Var::u), TruncatedPoly2::variable(order, Var::v));
}

SourceChange SourceChange::linear(int order, const Eigen::Matrix2d& m) {
    TruncatedPoly2 x(order), y(order);
    x.set_coeff(1, 0, m(0, 0));
    x.set_coeff(0, 1, m(0, 1));
    y.set_coeff(1, 0, m(1, 0));
    y.set_coeff(0, 1, m(1, 1));
    return SourceChange(std::move(x), std::move(y));
}

Eigen::Matrix2d SourceChange::jacobian() const noexcept {
    Eigen::Matrix2d j;
    j << x_.coeff(1, 0), x_.coeff(0, 1), y_.coeff(1, 0), y_.coeff(0, 1);
    return j;
}

SourceChange SourceChange::after(const SourceChange& inner) const {
    return SourceChange(compose(x_, inner.x_, inner.y_), compose(y_, inner.x_, inner.y_));
}

TruncatedPoly2 poly_compose(const TruncatedPoly2& p, const SourceChange& s) {
    return compose(p, s.x(), s.y());
}

TargetIsometry::TargetIsometry(const Eigen::Matrix3d& rotation) : r_(rotation) {
    const double err = (r_.transpose() * r_ - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (err > 1e-12) throw PreconditionError("TargetIsometry: matrix is not orthogonal");
}

// ---------------------------------------------------------------------------------------------

Eigen::Vector3d PolyVec3::eval(double u, double v) const noexcept {
    return {c[0].eval(u, v), c[1].eval(u, v), c[2].eval(u, v)};
}

PolyVec3 diff(const PolyVec3& f, Var var) {
    return {{poly_diff(f.c[0], var), poly_diff(f.c[1], var), poly_diff(f.c[2], var)}};
}

TruncatedPoly2 dot(const PolyVec3& a, const PolyVec3& b) {
    return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}

PolyVec3 cross(const PolyVec3& a, const PolyVec3& b) {
    return {{a.c[1] * b.c[2] - a.c[2] * b.c[1], a.c[2] * b.c[0] - a.c[0] * b.c[2],
             a.c[0] * b.c[1] - a.c[1] * b.c[0]}};
}

TruncatedPoly2 dot(const PolyVec3& a, const Eigen::Vector3d& w) {
    return w.x() * a.c[0] + w.y() * a.c[1] + w.z() * a.c[2];
}

MapGerm::MapGerm(TruncatedPoly2 x, TruncatedPoly2 y, TruncatedPoly2 z)
    : MapGerm(PolyVec3{{std::move(x), std::move(y), std::move(z)}}) {}

MapGerm::MapGerm(const PolyVec3& components) : comps_(components) {
    require_same_order(comps_.c[0], comps_.c[1], "MapGerm");
    require_same_order(comps_.c[0], comps_.c[2], "MapGerm");
    for (const auto& p : comps_.c) {
        if (p.coeff(0, 0) != 0.0) throw PreconditionError("MapGerm: germ must satisfy f(0,0) = 0");
    }
}

Eigen::Vector3d MapGerm::derivative(int i, int j) const noexcept {
    return {comps_.c[0].derivative_at_origin(i, j), comps_.c[1].derivative_at_origin(i, j),
            comps_.c[2].derivative_at_origin(i, j)};
}

PolyVec3 MapGerm::partial(int i, int j) const {
    PolyVec3 r = comps_;
    for (int k = 0; k < i; ++k) r = diff(r, Var::u);
    for (int k = 0; k < j; ++k) r = diff(r, Var::v);
    return r;
}

double MapGerm::scale(int max_degree) const noexcept {
    return std::max({comps_.c[0].max_abs_coeff(max_degree), comps_.c[1].max_abs_coeff(max_degree),
                     comps_.c[2].max_abs_coeff(max_degree)});
}

MapGerm germ_compose(const MapGerm& f, const SourceChange& s) {
    return MapGerm(poly_compose(f[0], s), poly_compose(f[1], s), poly_compose(f[2], s));
}

MapGerm germ_rotate(const MapGerm& f, const Eigen::Matrix3d& r) {
    std::array<TruncatedPoly2, 3> out{TruncatedPoly2(f.order()), TruncatedPoly2(f.order()),
                                      TruncatedPoly2(f.order())};
    for (int row = 0; row < 3; ++row) {
        for (int col = 0; col < 3; ++col) {
            if (r(row, col) != 0.0) out[static_cast<std::size_t>(row)] += r(row, col) * f[col];
        }
    }
    return MapGerm(PolyVec3{out});
}

MapGerm germ_transform(const MapGerm& f, const SourceChange& s, const TargetIsometry& r) {
    return germ_rotate(germ_compose(f, s), r.matrix());
}

}  // namespace axial
