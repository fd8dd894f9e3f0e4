#include "dirichlet.hpp"

#include <cmath>

#include "errors.hpp"

namespace hh {

namespace {

void require_disc(const JordanCurve& curve) {
    require(curve.kind == CurveKind::disc, errc::not_a_disc,
            "the reflection z -> 1/conj(z) solver is disc-specific");
}

void require_unit_disc(const JordanCurve& curve) {
    require_disc(curve);
    require(std::abs(curve.spec.center) < 1e-12 && std::abs(curve.spec.radius - 1.0) < 1e-12,
            errc::not_a_disc, "operation expects the unit disc");
}

} // namespace

void require_real(const BoundaryFunction& u) {
    for (const cplx& v : u.samples)
        require(std::abs(v.imag()) <= 1e-12, errc::data_not_real,
                "boundary data must be real-valued");
}

cplx mean_value(const JordanCurve& curve, const BoundaryFunction& u) {
    check_binding(curve, u);
    cplx acc = 0.0;
    for (int j = 0; j < curve.size(); ++j) acc += u.samples[j] * curve.s[j];
    return acc / curve.length;
}

HarmonicField dirichlet_disc(const JordanCurve& curve, const BoundaryFunction& u,
                             const std::vector<cplx>& points) {
    check_binding(curve, u);
    require_disc(curve);
    cplx c = curve.spec.center;
    double r = curve.spec.radius;

    HardyDecomposition d = decompose(curve, u);
    HarmonicField field;
    field.method = FieldMethod::h_plus_reflected_H;
    field.points = points;
    field.values.reserve(points.size());
    field.boundary_mean = mean_value(curve, u);
    field.center_value = cauchy_extension(curve, d.h.samples, c, true);

    for (cplx z : points) {
        require(std::abs(z - c) < r, errc::point_not_interior,
                "grid point lies outside the disc");
        cplx interior = cauchy_extension(curve, d.h.samples, z, true);
        cplx reflected = 0.0;
        if (std::abs(z - c) > 1e-14 * r) {
            cplx zr = c + r * r / std::conj(z - c);
            reflected = -cauchy_extension(curve, d.H.samples, zr, false);
        } // else H(infinity) = 0
        field.values.push_back(interior + reflected);
    }
    return field;
}

HarmonicField dirichlet_disc_real(const JordanCurve& curve, const BoundaryFunction& u,
                                  const std::vector<cplx>& points) {
    check_binding(curve, u);
    require_disc(curve);
    require_real(u);
    cplx c = curve.spec.center;
    double r = curve.spec.radius;

    HarmonicField field;
    field.method = FieldMethod::two_re_cauchy;
    field.points = points;
    field.values.reserve(points.size());
    field.boundary_mean = mean_value(curve, u);
    double u0 = field.boundary_mean.real();
    field.center_value = 2.0 * cauchy_extension(curve, u.samples, c, true).real() - u0;

    for (cplx z : points) {
        require(std::abs(z - c) < r, errc::point_not_interior,
                "grid point lies outside the disc");
        field.values.push_back(2.0 * cauchy_extension(curve, u.samples, z, true).real() - u0);
    }
    return field;
}

double poisson_kernel(cplx z, double t) {
    require(std::abs(z) < 1.0, errc::point_not_interior, "Poisson kernel needs |z| < 1");
    cplx w = std::polar(1.0, t);
    return (w / (w - z) - 0.5).real() / M_PI;
}

cplx poisson_extension(const JordanCurve& curve, const BoundaryFunction& u, cplx z, bool* warn) {
    check_binding(curve, u);
    require_unit_disc(curve);
    require(std::abs(z) < 1.0, errc::point_not_interior, "Poisson extension needs |z| < 1");
    if (warn) *warn = std::abs(z) > 1.0 - curve.near_threshold();
    cplx acc = 0.0;
    for (int j = 0; j < curve.size(); ++j)
        acc += poisson_kernel(z, curve.t[j]) * u.samples[j] * curve.w[j];
    return acc;
}

GeneralExtension harmonic_extension_general(const JordanCurve& curve, const BoundaryFunction& u,
                                            cplx z) {
    check_binding(curve, u);
    require(curve.smooth(), errc::polygon_not_supported,
            "double-layer identity requires a smooth curve");
    require_real(u);
    require(point_inside(curve, z), errc::point_not_interior, "point is not interior");

    GeneralExtension out;
    out.value = cauchy_extension(curve, u.samples, z, true).real();
    // Double layer with the geometric kernel: (1/2*pi) <w - z, n_w> / |w - z|^2.
    double acc = 0.0;
    for (int k = 0; k < curve.size(); ++k) {
        cplx n_out = -cplx(0.0, 1.0) * curve.tangent[k]; // outward normal
        cplx dk = curve.z[k] - z;
        double kernel = (dk * std::conj(n_out)).real() / (2.0 * M_PI * std::norm(dk));
        acc += u.samples[k].real() * kernel * curve.s[k];
    }
    out.double_layer = acc;
    out.discrepancy = std::abs(out.value - out.double_layer);
    return out;
}

} // namespace hh
