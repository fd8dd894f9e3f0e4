#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "cauchy.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "oracle.hpp"
#include "quadrature.hpp"
#include "spectral.hpp"
#include "szego.hpp"

using namespace hh;

namespace {

JordanCurve unit_disc(int n) { return build_curve(CurveSpec::disc(0.0, 1.0, n)); }
JordanCurve ellipse21(int n) { return build_curve(CurveSpec::ellipse(2.0, 1.0, n)); }
JordanCurve star135(int n) { return build_curve(CurveSpec::star(1.0, 0.3, 5, n)); }

} // namespace

TEST_CASE("Kerzman-Stein operator vanishes on the disc") {
    JordanCurve disc = unit_disc(64);
    KerzmanSteinOperator a = build_ks_operator(disc);
    CHECK(a.max_abs() < 1e-10);
}

TEST_CASE("Kerzman-Stein operator is skew-adjoint with finite diagonal") {
    JordanCurve ell = ellipse21(256);
    KerzmanSteinOperator a = build_ks_operator(ell);
    CHECK(a.skew_defect() < 1e-10);
    // Spectral radius below one (I + A stays far from singular).
    Eigen::VectorXcd s = Eigen::MatrixXcd(a.kernel).eigenvalues();
    double rho = 0.0;
    for (int i = 0; i < s.size(); ++i) rho = std::max(rho, std::abs(s[i]));
    CHECK(rho < 1.0);

    JordanCurve star = star135(512);
    KerzmanSteinOperator as = build_ks_operator(star);
    CHECK(as.skew_defect() < 1e-10);
    // Diagonal stays bounded under refinement.
    JordanCurve star2 = star135(1024);
    KerzmanSteinOperator as2 = build_ks_operator(star2);
    double d1 = 0.0, d2 = 0.0;
    for (int j = 0; j < star.size(); ++j) d1 = std::max(d1, std::abs(as.kernel(j, j)));
    for (int j = 0; j < star2.size(); ++j) d2 = std::max(d2, std::abs(as2.kernel(j, j)));
    CHECK(d2 < d1 + 1.0);

    JordanCurve sq = build_curve(CurveSpec::polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, 8, 4));
    CHECK_THROWS_AS(build_ks_operator(sq), Error);
}

TEST_CASE("Szego projection truncates Fourier series on the disc") {
    JordanCurve disc = unit_disc(128);
    SzegoProjector projector(disc);
    for (int n : {0, 2, 5}) {
        BoundaryFunction u =
            sample_boundary_param(disc, [n](double t) { return std::polar(1.0, n * t); });
        BoundaryFunction pu = projector.project(disc, u);
        CHECK(max_abs_diff(pu.samples, u.samples) < 1e-8);
    }
    for (int n : {-1, -4, -9}) {
        BoundaryFunction u =
            sample_boundary_param(disc, [n](double t) { return std::polar(1.0, n * t); });
        BoundaryFunction pu = projector.project(disc, u);
        CHECK(max_abs(pu.samples) < 1e-8);
    }
}

TEST_CASE("holomorphic polynomials are fixed on smooth curves") {
    for (const JordanCurve& curve : {ellipse21(256), star135(512)}) {
        SzegoProjector projector(curve);
        for (int m : {0, 3, 8}) {
            BoundaryFunction u =
                sample_boundary(curve, [m](cplx w) { return std::pow(w, m); });
            BoundaryFunction pu = projector.project(curve, u);
            CHECK(max_abs_diff(pu.samples, u.samples) < 1e-8);
        }
    }
}

TEST_CASE("the orthogonal complement is annihilated") {
    JordanCurve ell = ellipse21(256);
    SzegoProjector projector(ell);
    // u = conj(G T) with G holomorphic near the closure: orthogonal to h^2.
    BoundaryFunction u;
    u.curve_id = ell.id;
    u.samples.resize(ell.size());
    for (int j = 0; j < ell.size(); ++j)
        u.samples[j] = std::conj((1.0 / (ell.z[j] - 4.0)) * ell.tangent[j]);
    BoundaryFunction pu = projector.project(ell, u);
    CHECK(max_abs(pu.samples) < 1e-6);
}

TEST_CASE("discrete projection is idempotent and self-adjoint") {
    for (const JordanCurve& curve : {ellipse21(256), star135(512)}) {
        SzegoProjector projector(curve);
        FourierData fu = random_fourier(10, 31), fv = random_fourier(10, 32);
        BoundaryFunction u = sample_boundary_param(curve, [&](double t) { return fu.eval(t); });
        BoundaryFunction v = sample_boundary_param(curve, [&](double t) { return fv.eval(t); });
        BoundaryFunction pu = projector.project(curve, u);
        BoundaryFunction ppu = projector.project(curve, pu);
        double nu = boundary_norm(curve, u), nv = boundary_norm(curve, v);
        double drift = 0.0;
        for (int j = 0; j < curve.size(); ++j)
            drift += std::norm(ppu.samples[j] - pu.samples[j]) * curve.s[j];
        CHECK(std::sqrt(drift) <= 1e-8 * nu);

        BoundaryFunction pv = projector.project(curve, v);
        cplx lhs = boundary_inner(curve, pu, v);
        cplx rhs = boundary_inner(curve, u, pv);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * nu * nv);

        // Range lies in the discrete Hardy class.
        BoundaryFunction cpu = cauchy_boundary(curve, pu);
        CHECK(max_abs_diff(cpu.samples, pu.samples) < 1e-6);

        // The complement u - Pu is orthogonal to the range.
        BoundaryFunction res = u;
        for (int j = 0; j < curve.size(); ++j) res.samples[j] -= pu.samples[j];
        CHECK(std::abs(boundary_inner(curve, res, pu)) <= 1e-8 * nu * nu);
    }
}

TEST_CASE("on the disc the Szego and Cauchy projections coincide") {
    JordanCurve disc = unit_disc(256);
    SzegoProjector projector(disc);
    FourierData fu = random_fourier(16, 77);
    BoundaryFunction u = sample_boundary_param(disc, [&](double t) { return fu.eval(t); });
    BoundaryFunction pu = projector.project(disc, u);
    BoundaryFunction cu = cauchy_boundary(disc, u);
    CHECK(max_abs_diff(pu.samples, cu.samples) < 1e-8);
}

TEST_CASE("Szego and Garabedian kernels on the disc") {
    JordanCurve disc = unit_disc(128);
    SzegoProjector projector(disc);

    SzegoKernels k0 = szego_kernels(disc, projector, 0.0);
    for (const cplx& s : k0.szego) CHECK(std::abs(s - 1.0 / (2.0 * M_PI)) < 1e-8);

    SzegoKernels k5 = szego_kernels(disc, projector, 0.5);
    for (int j = 0; j < disc.size(); ++j) {
        cplx w = disc.z[j];
        cplx s_exact = 1.0 / (2.0 * M_PI * (1.0 - 0.5 * std::conj(w)));
        cplx l_exact = 1.0 / (2.0 * M_PI * (w - 0.5));
        CHECK(std::abs(k5.szego[j] - s_exact) < 1e-8);
        CHECK(std::abs(k5.garabedian[j] - l_exact) < 1e-8);
    }
}

TEST_CASE("reproducing identity on the ellipse") {
    JordanCurve ell = ellipse21(256);
    SzegoProjector projector(ell);
    cplx z(0.2, 0.0);
    SzegoKernels k = szego_kernels(ell, projector, z);
    double norm2 = 0.0;
    for (int j = 0; j < ell.size(); ++j) norm2 += std::norm(k.szego[j]) * ell.s[j];
    // S(z, z) via interior evaluation of the projected kernel row.
    BoundaryFunction srow;
    srow.curve_id = ell.id;
    srow.samples.resize(ell.size());
    for (int j = 0; j < ell.size(); ++j) srow.samples[j] = std::conj(k.szego[j]);
    cplx szz = cauchy_interior(ell, srow, z);
    CHECK(std::abs(norm2 - szz) < 1e-6);
}

TEST_CASE("cap-split residue identity on the disc") {
    // integral_sigma S(z,w) h(w) ds = h(z) + (1/i) integral_lambda L(w,z) h(w) dw
    // with closed-form kernels, sigma an arc, lambda the interior return path.
    auto h = [](cplx w) { return w * w; };
    double t_a = 1.8, t_b = 2.6; // sigma inside the cap [pi/2, 3pi/2]
    double eps = 0.15;
    cplx z = std::polar(1.0 - 0.5 * eps, 0.5 * (t_a + t_b)); // inside the rectangle

    auto S = [&](cplx zz, cplx w) { return 1.0 / (2.0 * M_PI * (1.0 - zz * std::conj(w))); };
    auto L = [&](cplx w, cplx zz) { return 1.0 / (2.0 * M_PI * (w - zz)); };

    // Left side: arclength integral over sigma.
    cplx lhs = adaptive_simpson(
        [&](double t) {
            cplx w = std::polar(1.0, t);
            return S(z, w) * h(w);
        },
        t_a, t_b, 1e-12);

    // Right side: residue term plus the inner return path lambda, traversed so
    // that sigma + (-lambda) bounds the curvilinear rectangle positively.
    cplx wa = std::polar(1.0, t_a), wb = std::polar(1.0, t_b);
    cplx wa_in = std::polar(1.0 - eps, t_a), wb_in = std::polar(1.0 - eps, t_b);
    auto Lh = [&](cplx w) { return L(w, z) * h(w); };
    cplx path = segment_integral(Lh, wb, wb_in, 4, 16);
    path += adaptive_simpson(
        [&](double t) {
            cplx w = std::polar(1.0 - eps, t);
            return Lh(w) * cplx(0.0, 1.0 - eps) * std::polar(1.0, t);
        },
        t_b, t_a, 1e-12);
    path += segment_integral(Lh, wa_in, wa, 4, 16);
    cplx rhs = h(z) - path / cplx(0.0, 1.0);
    CHECK(std::abs(lhs - rhs) < 1e-6);
}

TEST_CASE("pseudo-locality of the projected arc indicator") {
    CurveSpec disc = CurveSpec::disc(0.0, 1.0, 256);
    PseudolocalReport rep =
        pseudolocal_experiment(disc, 0.5 * M_PI, 1.5 * M_PI, [](cplx) { return cplx(1.0); });
    CHECK(rep.mid_ratio <= 1.5);
    CHECK(rep.end_ratio >= 1.8);
    CHECK(rep.certified);
}

TEST_CASE("projected indicator matches the sampled Fourier split in the cap interior") {
    // Independent oracle: split the sampled data by discrete frequency sign.
    int n = 256;
    JordanCurve disc = unit_disc(n);
    double t1 = 0.5 * M_PI, t2 = 1.5 * M_PI;
    BoundaryFunction u;
    u.curve_id = disc.id;
    u.samples.assign(n, cplx(0.0));
    for (int j = 0; j < n; ++j)
        if (disc.t[j] > t1 && disc.t[j] < t2) u.samples[j] = 1.0;

    BoundaryFunction f = szego_project(disc, u);
    std::vector<cplx> coeffs = fourier_coefficients(u.samples);
    int n_min = fourier_min_frequency(n);
    for (int m = 0; m < n; ++m)
        if (n_min + m < 0) coeffs[m] = 0.0;
    // The Nyquist mode is direction-ambiguous on an even grid; the split
    // keeps its symmetric half.
    coeffs[0] = 0.5 * fourier_coefficients(u.samples)[0];
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        double t = disc.t[j];
        if (t < t1 + (t2 - t1) / 3.0 || t > t1 + 2.0 * (t2 - t1) / 3.0) continue;
        worst = std::max(worst, std::abs(f.samples[j] - fourier_eval(coeffs, t)));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("pseudo-locality for smooth local data on the ellipse") {
    CurveSpec ell = CurveSpec::ellipse(2.0, 1.0, 256);
    PseudolocalReport rep = pseudolocal_experiment(
        ell, 0.5 * M_PI, 1.5 * M_PI, [](cplx w) { return 1.0 / (w - 4.0); });
    CHECK(rep.mid_ratio <= 1.5);
    CHECK(rep.end_ratio >= 1.8);
}

TEST_CASE("short caps are rejected") {
    CurveSpec disc = CurveSpec::disc(0.0, 1.0, 256);
    CHECK_THROWS_AS(
        pseudolocal_experiment(disc, 1.0, 1.0 + 8.0 * 2.0 * M_PI / 256, [](cplx) {
            return cplx(1.0);
        }),
        Error);
}
