#include "geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "quadrature.hpp"

namespace hh {

namespace {

constexpr int kPolygonPanelOrder = 10; // Gauss-Legendre nodes per polygon panel

std::uint64_t next_curve_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Truncated Taylor jets in the real parameter t; enough series arithmetic to
// push analytic derivatives through T(t) = z'/|z'| for offset curves.
struct Jet {
    std::vector<cplx> c; // c[k] = f^(k)(t)/k!

    explicit Jet(int deg) : c(deg + 1, cplx(0.0)) {}
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

Jet jet_conj(const Jet& a) {
    Jet r(a.degree());
    for (size_t k = 0; k < a.c.size(); ++k) r.c[k] = std::conj(a.c[k]);
    return r;
}

Jet jet_mul(const Jet& a, const Jet& b) {
    Jet r(a.degree());
    for (int k = 0; k <= r.degree(); ++k) {
        cplx acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += a.c[j] * b.c[k - j];
        r.c[k] = acc;
    }
    return r;
}

// Square root of a series with positive real constant term.
Jet jet_sqrt_real(const Jet& a) {
    Jet r(a.degree());
    double s0 = std::sqrt(a.c[0].real());
    r.c[0] = s0;
    for (int k = 1; k <= r.degree(); ++k) {
        cplx acc = a.c[k];
        for (int j = 1; j < k; ++j) acc -= r.c[j] * r.c[k - j];
        r.c[k] = acc / (2.0 * s0);
    }
    return r;
}

// a / b with b having nonzero constant term.
Jet jet_div(const Jet& a, const Jet& b) {
    Jet r(a.degree());
    for (int k = 0; k <= r.degree(); ++k) {
        cplx acc = a.c[k];
        for (int j = 1; j <= k; ++j) acc -= b.c[j] * r.c[k - j];
        r.c[k] = acc / b.c[0];
    }
    return r;
}

class DiscModel : public CurveModel {
public:
    DiscModel(cplx center, double radius) : center_(center), radius_(radius) {}
    cplx point(double t) const override { return center_ + radius_ * std::polar(1.0, t); }
    cplx derivative(double t, int order) const override {
        cplx i_pow = std::polar(1.0, 0.5 * M_PI * order);
        return radius_ * i_pow * std::polar(1.0, t);
    }
    double radius() const { return radius_; }
    cplx center() const { return center_; }

private:
    cplx center_;
    double radius_;
};

class EllipseModel : public CurveModel {
public:
    EllipseModel(double a, double b, cplx center) : a_(a), b_(b), center_(center) {}
    cplx point(double t) const override {
        return center_ + cplx(a_ * std::cos(t), b_ * std::sin(t));
    }
    cplx derivative(double t, int order) const override {
        switch (order % 4) {
            case 0: return cplx(a_ * std::cos(t), b_ * std::sin(t));
            case 1: return cplx(-a_ * std::sin(t), b_ * std::cos(t));
            case 2: return cplx(-a_ * std::cos(t), -b_ * std::sin(t));
            default: return cplx(a_ * std::sin(t), -b_ * std::cos(t));
        }
    }

private:
    double a_, b_;
    cplx center_;
};

class StarModel : public CurveModel {
public:
    StarModel(double r0, double amp, int k, cplx center)
        : r0_(r0), amp_(amp), k_(k), center_(center) {}
    cplx point(double t) const override {
        return center_ + rho(t, 0) * std::polar(1.0, t);
    }
    cplx derivative(double t, int order) const override {
        // Leibniz on rho(t) * exp(i t).
        cplx acc = 0.0;
        double binom = 1.0;
        for (int j = 0; j <= order; ++j) {
            cplx i_pow = std::polar(1.0, 0.5 * M_PI * (order - j));
            acc += binom * rho(t, j) * i_pow;
            binom *= static_cast<double>(order - j) / (j + 1.0);
        }
        return acc * std::polar(1.0, t);
    }

private:
    double rho(double t, int j) const {
        if (j == 0) return r0_ + amp_ * std::cos(k_ * t);
        return amp_ * std::pow(static_cast<double>(k_), j) * std::cos(k_ * t + 0.5 * M_PI * j);
    }
    double r0_, amp_;
    int k_;
    cplx center_;
};

class OffsetModel : public CurveModel {
public:
    OffsetModel(std::shared_ptr<const CurveModel> base, double eps)
        : base_(std::move(base)), eps_(eps) {}

    cplx point(double t) const override {
        cplx dz = base_->derivative(t, 1);
        return base_->point(t) + cplx(0.0, eps_) * dz / std::abs(dz);
    }

    cplx derivative(double t, int order) const override {
        // Jet of T = z'/|z'| to the requested degree, then read one coefficient.
        Jet w(order);
        for (int k = 0; k <= order; ++k)
            w.c[k] = base_->derivative(t, k + 1) / factorial(k);
        Jet speed2 = jet_mul(w, jet_conj(w));
        for (auto& ck : speed2.c) ck = cplx(ck.real(), 0.0);
        Jet speed = jet_sqrt_real(speed2);
        Jet tang = jet_div(w, speed);
        return base_->derivative(t, order) +
               cplx(0.0, eps_) * tang.c[order] * factorial(order);
    }

private:
    std::shared_ptr<const CurveModel> base_;
    double eps_;
};

class PolygonModel : public CurveModel {
public:
    PolygonModel(std::vector<cplx> vertices, std::vector<double> corner_t)
        : vertices_(std::move(vertices)), corner_t_(std::move(corner_t)) {}

    cplx point(double t) const override {
        int side = locate(t);
        double t0 = corner_t_[side];
        double dt = corner_t_[side + 1] - t0;
        cplx v0 = vertices_[side];
        cplx v1 = vertices_[(side + 1) % vertices_.size()];
        return v0 + (t - t0) / dt * (v1 - v0);
    }

    cplx derivative(double t, int order) const override {
        if (order >= 2) return 0.0;
        int side = locate(t);
        double dt = corner_t_[side + 1] - corner_t_[side];
        cplx v0 = vertices_[side];
        cplx v1 = vertices_[(side + 1) % vertices_.size()];
        return (v1 - v0) / dt;
    }

private:
    int locate(double t) const {
        auto it = std::upper_bound(corner_t_.begin(), corner_t_.end(), t);
        int side = static_cast<int>(it - corner_t_.begin()) - 1;
        return std::clamp(side, 0, static_cast<int>(vertices_.size()) - 1);
    }
    std::vector<cplx> vertices_;
    std::vector<double> corner_t_; // size nv + 1, corner_t_[0] = 0, back() = 2*pi
};

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool segments_intersect(cplx p1, cplx p2, cplx q1, cplx q2) {
    double d1 = cross(p2 - p1, q1 - p1);
    double d2 = cross(p2 - p1, q2 - p1);
    double d3 = cross(q2 - q1, p1 - q1);
    double d4 = cross(q2 - q1, p2 - q1);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

double shoelace(const std::vector<cplx>& v) {
    double area = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        cplx p = v[i], q = v[(i + 1) % v.size()];
        area += cross(p, q);
    }
    return 0.5 * area;
}

void sample_smooth(JordanCurve& curve, int n) {
    curve.t.resize(n);
    curve.z.resize(n);
    curve.dz.resize(n);
    curve.w.assign(n, 2.0 * M_PI / n);
    curve.tangent.resize(n);
    curve.s.resize(n);
    for (int j = 0; j < n; ++j) {
        double tj = 2.0 * M_PI * j / n;
        curve.t[j] = tj;
        curve.z[j] = curve.model->point(tj);
        curve.dz[j] = curve.model->derivative(tj, 1);
        double speed = std::abs(curve.dz[j]);
        require(speed > 0.0, errc::invalid_spec, "curve has a stationary point");
        curve.tangent[j] = curve.dz[j] / speed;
        curve.s[j] = speed * curve.w[j];
    }
}

void finalize(JordanCurve& curve) {
    curve.length = 0.0;
    cplx area = 0.0;
    for (int j = 0; j < curve.size(); ++j) {
        curve.length += curve.s[j];
        area += std::conj(curve.z[j]) * curve.dz[j] * curve.w[j];
    }
    curve.signed_area = (area / cplx(0.0, 2.0)).real();
    curve.id = next_curve_id();
}

std::vector<double> panel_breakpoints(int panels_per_side, int depth) {
    // Uniform panels on [0, 1], end panels split dyadically toward 0 and 1.
    std::vector<double> pts;
    pts.push_back(0.0);
    double first = 1.0 / panels_per_side;
    for (int d = depth; d >= 1; --d) pts.push_back(first * std::ldexp(1.0, -d));
    for (int p = 1; p < panels_per_side; ++p) pts.push_back(static_cast<double>(p) / panels_per_side);
    double last = 1.0 - first;
    for (int d = 1; d <= depth; ++d) pts.push_back(last + first * (1.0 - std::ldexp(1.0, -d)));
    pts.push_back(1.0);
    return pts;
}

JordanCurve build_polygon(const CurveSpec& spec) {
    const auto& v = spec.vertices;
    require(v.size() >= 3, errc::invalid_spec, "polygon needs at least 3 vertices");
    require(spec.panels_per_side >= 2, errc::invalid_spec, "polygon needs at least 2 panels per side");
    require(spec.grading_depth >= 0 && spec.grading_depth <= 40, errc::invalid_spec,
            "grading depth out of range");
    require(shoelace(v) > 0.0, errc::invalid_spec, "polygon vertices must be counterclockwise");
    require(!polyline_self_intersects(v), errc::invalid_spec, "polygon is self-intersecting");

    int nv = static_cast<int>(v.size());
    double perimeter = 0.0;
    for (int i = 0; i < nv; ++i) perimeter += std::abs(v[(i + 1) % nv] - v[i]);

    JordanCurve curve;
    curve.kind = CurveKind::polygon;
    curve.spec = spec;
    curve.vertices = v;
    curve.corner_t.resize(nv + 1);
    curve.corner_t[0] = 0.0;
    for (int i = 0; i < nv; ++i) {
        double side = std::abs(v[(i + 1) % nv] - v[i]);
        curve.corner_t[i + 1] = curve.corner_t[i] + 2.0 * M_PI * side / perimeter;
    }
    curve.corner_t[nv] = 2.0 * M_PI;
    curve.model = std::make_shared<PolygonModel>(v, curve.corner_t);

    const GaussRule& rule = gauss_legendre(kPolygonPanelOrder);
    std::vector<double> bkpts = panel_breakpoints(spec.panels_per_side, spec.grading_depth);
    for (int i = 0; i < nv; ++i) {
        curve.side_start.push_back(curve.size());
        double t0 = curve.corner_t[i];
        double dt = curve.corner_t[i + 1] - t0;
        cplx dzd = (v[(i + 1) % nv] - v[i]) / dt;
        double speed = std::abs(dzd);
        for (size_t p = 0; p + 1 < bkpts.size(); ++p) {
            double pa = t0 + dt * bkpts[p];
            double pb = t0 + dt * bkpts[p + 1];
            curve.panel_start.push_back(curve.size());
            for (int k = 0; k < kPolygonPanelOrder; ++k) {
                double tk = 0.5 * (pa + pb) + 0.5 * (pb - pa) * rule.nodes[k];
                double wk = 0.5 * (pb - pa) * rule.weights[k];
                curve.t.push_back(tk);
                curve.z.push_back(curve.model->point(tk));
                curve.dz.push_back(dzd);
                curve.w.push_back(wk);
                curve.tangent.push_back(dzd / speed);
                curve.s.push_back(speed * wk);
            }
        }
    }
    finalize(curve);
    return curve;
}

} // namespace

CurveSpec CurveSpec::disc(cplx center, double radius, int n) {
    CurveSpec s;
    s.kind = CurveKind::disc;
    s.center = center;
    s.radius = radius;
    s.n = n;
    return s;
}

CurveSpec CurveSpec::ellipse(double a, double b, int n, cplx center) {
    CurveSpec s;
    s.kind = CurveKind::ellipse;
    s.a = a;
    s.b = b;
    s.n = n;
    s.center = center;
    return s;
}

CurveSpec CurveSpec::star(double r0, double amp, int wavenumber, int n, cplx center) {
    CurveSpec s;
    s.kind = CurveKind::star;
    s.r0 = r0;
    s.amp = amp;
    s.wavenumber = wavenumber;
    s.n = n;
    s.center = center;
    return s;
}

CurveSpec CurveSpec::polygon(std::vector<cplx> vertices, int panels_per_side, int grading_depth) {
    CurveSpec s;
    s.kind = CurveKind::polygon;
    s.vertices = std::move(vertices);
    s.panels_per_side = panels_per_side;
    s.grading_depth = grading_depth;
    return s;
}

JordanCurve build_curve(const CurveSpec& spec) {
    if (spec.kind == CurveKind::polygon) return build_polygon(spec);

    require(spec.n >= 4, errc::invalid_spec, "node count must be at least 4");
    JordanCurve curve;
    curve.kind = spec.kind;
    curve.spec = spec;
    switch (spec.kind) {
        case CurveKind::disc:
            require(spec.radius > 0.0, errc::invalid_spec, "disc radius must be positive");
            curve.model = std::make_shared<DiscModel>(spec.center, spec.radius);
            break;
        case CurveKind::ellipse:
            require(spec.a >= spec.b && spec.b > 0.0, errc::invalid_spec,
                    "ellipse requires a >= b > 0");
            curve.model = std::make_shared<EllipseModel>(spec.a, spec.b, spec.center);
            break;
        case CurveKind::star:
            require(spec.r0 > 0.0, errc::invalid_spec, "star base radius must be positive");
            require(spec.amp >= 0.0 && spec.amp < spec.r0, errc::invalid_spec,
                    "star amplitude must satisfy 0 <= A < r0");
            require(spec.wavenumber >= 1, errc::invalid_spec, "star wavenumber must be >= 1");
            curve.model = std::make_shared<StarModel>(spec.r0, spec.amp, spec.wavenumber,
                                                      spec.center);
            break;
        default:
            fail(errc::invalid_spec, "unknown curve kind");
    }
    sample_smooth(curve, spec.n);
    finalize(curve);
    require(curve.signed_area > 0.0, errc::invalid_spec, "curve orientation is not counterclockwise");
    return curve;
}

JordanCurve offset_curve(const JordanCurve& curve, double eps) {
    require(curve.smooth(), errc::polygon_not_supported, "offset requires a smooth curve");
    require(std::abs(eps) > 0.0, errc::invalid_argument, "offset distance must be nonzero");

    JordanCurve out;
    if (auto disc = std::dynamic_pointer_cast<const DiscModel>(curve.model)) {
        double r = disc->radius() - eps;
        require(r > 0.0, errc::offset_too_large, "offset exceeds disc radius");
        return build_curve(CurveSpec::disc(disc->center(), r, curve.size()));
    }

    out.kind = curve.kind;
    out.spec = curve.spec;
    out.model = std::make_shared<OffsetModel>(curve.model, eps);
    sample_smooth(out, curve.size());
    finalize(out);
    require(out.signed_area > 0.0, errc::offset_too_large, "offset curve reverses orientation");
    require(!polyline_self_intersects(out.z), errc::offset_too_large,
            "offset curve self-intersects");
    return out;
}

int winding_number(const std::vector<cplx>& nodes, cplx p) {
    int wn = 0;
    size_t n = nodes.size();
    for (size_t i = 0; i < n; ++i) {
        cplx a = nodes[i], b = nodes[(i + 1) % n];
        if (a.imag() <= p.imag()) {
            if (b.imag() > p.imag() && cross(b - a, p - a) > 0.0) ++wn;
        } else {
            if (b.imag() <= p.imag() && cross(b - a, p - a) < 0.0) --wn;
        }
    }
    return wn;
}

double polyline_distance(const std::vector<cplx>& nodes, cplx p) {
    double best = std::numeric_limits<double>::max();
    size_t n = nodes.size();
    for (size_t i = 0; i < n; ++i) {
        cplx a = nodes[i], b = nodes[(i + 1) % n];
        cplx ab = b - a;
        double len2 = std::norm(ab);
        double u = len2 > 0.0 ? std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, std::abs(p - (a + u * ab)));
    }
    return best;
}

bool polyline_self_intersects(const std::vector<cplx>& nodes) {
    size_t n = nodes.size();
    for (size_t i = 0; i < n; ++i) {
        cplx p1 = nodes[i], p2 = nodes[(i + 1) % n];
        for (size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue; // adjacent through wrap
            cplx q1 = nodes[j], q2 = nodes[(j + 1) % n];
            if (segments_intersect(p1, p2, q1, q2)) return true;
        }
    }
    return false;
}

EvaluationGrid classify_points(const JordanCurve& curve, const std::vector<cplx>& points,
                               double near_threshold) {
    if (near_threshold < 0.0) near_threshold = curve.near_threshold();
    EvaluationGrid grid;
    grid.points = points;
    grid.label.resize(points.size());
    grid.distance.resize(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        double d = polyline_distance(curve.z, points[i]);
        grid.distance[i] = d;
        if (d < near_threshold) {
            grid.label[i] = PointClass::near_boundary;
        } else {
            grid.label[i] = winding_number(curve.z, points[i]) != 0 ? PointClass::interior
                                                                    : PointClass::exterior;
        }
    }
    return grid;
}

bool point_inside(const JordanCurve& curve, cplx p) { return winding_number(curve.z, p) != 0; }

double distance_to_curve(const JordanCurve& curve, cplx p) {
    return polyline_distance(curve.z, p);
}

} // namespace hh
