#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "cauchy.hpp"
#include "decomp.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "oracle.hpp"

using namespace hh;

namespace {

JordanCurve unit_disc(int n) { return build_curve(CurveSpec::disc(0.0, 1.0, n)); }
JordanCurve ellipse21(int n) { return build_curve(CurveSpec::ellipse(2.0, 1.0, n)); }
JordanCurve star135(int n) { return build_curve(CurveSpec::star(1.0, 0.3, 5, n)); }
JordanCurve square86() {
    return build_curve(CurveSpec::polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, 8, 6));
}

} // namespace

TEST_CASE("disc decomposition matches the Fourier split oracle") {
    JordanCurve disc = unit_disc(128);
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
        FourierData data = random_fourier(8, seed);
        FourierSplit split = fourier_split(data);
        BoundaryFunction u = sample_fourier(disc, data);
        HardyDecomposition d = decompose(disc, u);
        BoundaryFunction h_ref = sample_fourier(disc, split.h);
        BoundaryFunction H_ref = sample_fourier(disc, split.H);
        CHECK(max_abs_diff(d.h.samples, h_ref.samples) < 1e-10);
        CHECK(max_abs_diff(d.H.samples, H_ref.samples) < 1e-10);
        CHECK(d.residual == 0.0);
        CHECK(d.projection_defect < 1e-10);
        CHECK(d.exterior_defect < 1e-10);
    }
}

TEST_CASE("rational decomposition on every curve kind") {
    auto run = [](const JordanCurve& curve, cplx a, cplx b, double tol) {
        RationalData data = make_rational(curve, {a, b}, {cplx(1.0), cplx(1.0)});
        RationalSplit oracle = rational_split(data, curve);
        HardyDecomposition d = decompose(curve, oracle.u);
        CHECK(max_abs_diff(d.h.samples, oracle.h.samples) < tol);
        CHECK(max_abs_diff(d.H.samples, oracle.H.samples) < tol);
    };
    run(unit_disc(512), cplx(0.3, 0.0), cplx(2.5, 0.0), 1e-8);
    run(ellipse21(512), cplx(0.3, 0.1), cplx(3.0, 0.5), 1e-8);
    run(star135(512), cplx(0.2, -0.1), cplx(2.5, 0.0), 1e-8);
    run(square86(), cplx(0.3, 0.0), cplx(2.5, 0.0), 1e-4);
}

TEST_CASE("constants are interior-Hardy") {
    JordanCurve star = star135(256);
    BoundaryFunction c = sample_boundary(star, [](cplx) { return cplx(2.0, -1.0); });
    HardyDecomposition d = decompose(star, c);
    CHECK(max_abs_diff(d.h.samples, c.samples) < 1e-10);
    CHECK(max_abs(d.H.samples) < 1e-10);
}

TEST_CASE("decomposition is idempotent and linear") {
    JordanCurve ell = ellipse21(256);
    FourierData fu = random_fourier(10, 5), fv = random_fourier(10, 6);
    BoundaryFunction u = sample_boundary_param(ell, [&](double t) { return fu.eval(t); });
    BoundaryFunction v = sample_boundary_param(ell, [&](double t) { return fv.eval(t); });

    HardyDecomposition d = decompose(ell, u);
    BoundaryFunction resum = d.u;
    for (int j = 0; j < ell.size(); ++j) resum.samples[j] = d.h.samples[j] + d.H.samples[j];
    HardyDecomposition d2 = decompose(ell, resum);
    CHECK(max_abs_diff(d2.h.samples, d.h.samples) < 1e-8);
    CHECK(max_abs_diff(d2.H.samples, d.H.samples) < 1e-8);

    cplx alpha(0.7, -0.3), beta(-1.2, 0.4);
    BoundaryFunction mix = u;
    for (int j = 0; j < ell.size(); ++j)
        mix.samples[j] = alpha * u.samples[j] + beta * v.samples[j];
    HardyDecomposition dm = decompose(ell, mix);
    HardyDecomposition dv = decompose(ell, v);
    double worst = 0.0;
    for (int j = 0; j < ell.size(); ++j) {
        worst = std::max(worst, std::abs(dm.h.samples[j] - alpha * d.h.samples[j] -
                                         beta * dv.h.samples[j]));
        worst = std::max(worst, std::abs(dm.H.samples[j] - alpha * d.H.samples[j] -
                                         beta * dv.H.samples[j]));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("jump consistency along the normal") {
    JordanCurve ell = ellipse21(512);
    FourierData fu = random_fourier(6, 11);
    BoundaryFunction u = sample_boundary_param(ell, [&](double t) { return fu.eval(t); });
    int j = 100;
    cplx nu = -cplx(0.0, 1.0) * ell.tangent[j]; // outward normal
    std::vector<double> errs;
    for (double delta : {1e-1, 1e-2, 1e-3}) {
        cplx vi = cauchy_interior(ell, u, ell.z[j] - delta * nu);
        cplx ve = cauchy_exterior(ell, u, ell.z[j] + delta * nu);
        errs.push_back(std::abs(vi + ve - u.samples[j]));
    }
    CHECK(errs[0] > errs[1]);
    CHECK(errs[1] > errs[2]);
    // O(delta) decay: a decade of delta buys roughly a decade of error.
    CHECK(errs[0] / errs[2] > 10.0);
    CHECK(errs[2] < 2e-2 * max_abs(u.samples));
}

TEST_CASE("exterior part vanishes at infinity with the right rate") {
    JordanCurve disc = unit_disc(128);
    BoundaryFunction Hinv = sample_boundary(disc, [](cplx w) { return 1.0 / w; });
    auto records = verify_exterior_vanishing(disc, Hinv, {100.0});
    for (double scaled : records[0].scaled) CHECK(std::abs(scaled - 1.0) < 1e-6);
    CHECK(std::abs(exterior_moment(disc, Hinv) - 1.0) < 1e-12);

    BoundaryFunction zero = sample_boundary(disc, [](cplx) { return cplx(0.0); });
    auto zrec = verify_exterior_vanishing(disc, zero, {50.0, 100.0});
    for (const auto& rec : zrec)
        for (double s : rec.scaled) CHECK(s == 0.0);

    // Pole near the centroid keeps the higher Laurent coefficients small.
    JordanCurve star = star135(512);
    RationalData data = make_rational(star, {cplx(0.005, 0.0)}, {cplx(1.0)});
    RationalSplit split = rational_split(data, star);
    cplx c1 = exterior_moment(star, split.H);
    auto srec = verify_exterior_vanishing(star, split.H, {100.0});
    for (double scaled : srec[0].scaled) CHECK(std::abs(scaled - std::abs(c1)) < 1e-4);

    CHECK_THROWS_AS(verify_exterior_vanishing(disc, Hinv, {1.5}), Error);
}

TEST_CASE("boundary antiderivative of monomials") {
    JordanCurve disc = unit_disc(128);
    BoundaryFunction h2 = sample_boundary(disc, [](cplx w) { return w * w; });
    AntiderivativeResult r = antiderivative_boundary(disc, h2);
    CHECK(r.endpoint_residual < 1e-10);
    CHECK(std::abs(r.boundary[0]) == 0.0);
    for (int j = 0; j < disc.size(); ++j) {
        cplx expect = (std::polar(1.0, 3.0 * disc.t[j]) - 1.0) / 3.0;
        CHECK(std::abs(r.boundary[j] - expect) < 1e-12);
    }

    BoundaryFunction one = sample_boundary(disc, [](cplx) { return cplx(1.0); });
    AntiderivativeResult r1 = antiderivative_boundary(disc, one);
    CHECK(r1.endpoint_residual < 1e-12);
    for (int j = 0; j < disc.size(); ++j) {
        cplx expect = std::polar(1.0, disc.t[j]) - 1.0;
        CHECK(std::abs(r1.boundary[j] - expect) < 1e-12);
    }
}

TEST_CASE("boundary antiderivative tracks the logarithm branch") {
    JordanCurve disc = unit_disc(128);
    BoundaryFunction h = sample_boundary(disc, [](cplx w) { return 1.0 / (w - 2.0); });
    AntiderivativeResult r = antiderivative_boundary(disc, h);
    CHECK(r.endpoint_residual < 1e-10);
    // Continuous branch of log(w - 2) by cumulative argument tracking.
    double arg_prev = std::arg(disc.z[0] - 2.0);
    double unwound = arg_prev;
    for (int j = 0; j < disc.size(); ++j) {
        double a = std::arg(disc.z[j] - 2.0);
        double step = a - arg_prev;
        if (step > M_PI) step -= 2.0 * M_PI;
        if (step < -M_PI) step += 2.0 * M_PI;
        unwound += step;
        arg_prev = a;
        cplx log_branch(std::log(std::abs(disc.z[j] - 2.0)), unwound);
        cplx log_base(std::log(std::abs(disc.z[0] - 2.0)), std::arg(disc.z[0] - 2.0));
        CHECK(std::abs(r.boundary[j] - (log_branch - log_base)) < 1e-8);
    }
}

TEST_CASE("absolute continuity bound on the boundary antiderivative") {
    JordanCurve ell = ellipse21(256);
    FourierData fu = random_fourier(8, 21);
    BoundaryFunction u = sample_boundary_param(ell, [&](double t) { return fu.eval(t); });
    BoundaryFunction h = cauchy_boundary(ell, u);
    AntiderivativeResult r = antiderivative_boundary(ell, h);
    CHECK(r.total_variation <= r.variation_bound * (1.0 + 1e-8));
    CHECK(r.endpoint_residual < 1e-8 * boundary_norm(ell, h));
}

TEST_CASE("square antiderivative integrates exactly through panels") {
    JordanCurve sq = square86();
    BoundaryFunction h = sample_boundary(sq, [](cplx w) { return w * w; });
    AntiderivativeResult r = antiderivative_boundary(sq, h);
    CHECK(r.endpoint_residual < 1e-12);
    for (int j = 0; j < sq.size(); j += 50) {
        cplx expect = (std::pow(sq.z[j], 3) - std::pow(sq.vertices[0], 3)) / 3.0;
        CHECK(std::abs(r.boundary[j] - expect) < 1e-10);
    }
}

TEST_CASE("exterior data is rejected by the Hardy gate") {
    JordanCurve disc = unit_disc(128);
    BoundaryFunction H = sample_boundary(disc, [](cplx w) { return 1.0 / w; });
    CHECK_THROWS_AS(antiderivative_boundary(disc, H), Error);
}

TEST_CASE("interior antiderivative differentiates back to the data") {
    JordanCurve disc = unit_disc(256);
    BoundaryFunction h2 = sample_boundary(disc, [](cplx w) { return w * w; });
    InteriorAntiderivative probe = antiderivative_interior(disc, h2, 0.4, 1e-4);
    CHECK(probe.rel_error < 1e-6);

    BoundaryFunction one = sample_boundary(disc, [](cplx) { return cplx(1.0); });
    InteriorAntiderivative p1 = antiderivative_interior(disc, one, cplx(0.0, 0.5), 1e-4);
    CHECK(std::abs(p1.value - (cplx(0.0, 0.5) - disc.z[0])) < 1e-9);

    JordanCurve ell = ellipse21(256);
    FourierData fu = random_fourier(8, 33);
    BoundaryFunction u = sample_boundary_param(ell, [&](double t) { return fu.eval(t); });
    BoundaryFunction h = cauchy_boundary(ell, u);
    InteriorAntiderivative pe = antiderivative_interior(ell, h, cplx(0.3, 0.2), 1e-4);
    CHECK(pe.rel_error < 1e-5);
}

TEST_CASE("modulus of continuity inequalities") {
    JordanCurve disc = unit_disc(128);
    BoundaryFunction hw = sample_boundary(disc, [](cplx w) { return w; });
    ModulusReport rep = modulus_of_continuity_check(disc, hw, 2.0, 8);
    CHECK(rep.ok);
    CHECK(rep.max_ratio <= 1.0 + 1e-12);

    BoundaryFunction zero = sample_boundary(disc, [](cplx) { return cplx(0.0); });
    ModulusReport rz = modulus_of_continuity_check(disc, zero, 2.0, 8);
    for (const auto& seg : rz.segments) CHECK(seg.integral == 0.0);

    JordanCurve star = star135(512);
    FourierData fu = random_fourier(10, 17);
    BoundaryFunction u = sample_boundary_param(star, [&](double t) { return fu.eval(t); });
    BoundaryFunction h = cauchy_boundary(star, u);
    ModulusReport rs = modulus_of_continuity_check(star, h, 4.0, 32);
    CHECK(rs.ok);

    CHECK_THROWS_AS(modulus_of_continuity_check(disc, hw, 1.0, 8), Error);
    CHECK_THROWS_AS(modulus_of_continuity_check(disc, hw, 2.0, 1), Error);
}

TEST_CASE("offset norms on the disc match the closed form") {
    JordanCurve disc = unit_disc(256);
    BoundaryFunction u =
        sample_boundary_param(disc, [](double t) { return std::polar(1.0, t); });
    OffsetNormReport rep = hardy_norm_offset(disc, u, 2.0, {0.2, 0.1});
    for (const auto& rec : rep.norms) {
        double expect = std::sqrt(2.0 * M_PI * std::pow(1.0 - rec.eps, 3));
        CHECK(std::abs(rec.norm - expect) < 1e-8);
    }

    BoundaryFunction one = sample_boundary(disc, [](cplx) { return cplx(1.0); });
    OffsetNormReport r1 = hardy_norm_offset(disc, one, 2.0, {0.2, 0.1, 0.05});
    for (const auto& rec : r1.norms) {
        double expect = std::sqrt(2.0 * M_PI * (1.0 - rec.eps));
        CHECK(std::abs(rec.norm - expect) < 1e-10);
    }
}

TEST_CASE("offset norms converge to the boundary norm") {
    JordanCurve ell = ellipse21(512);
    FourierData fu = random_fourier(4, 9);
    BoundaryFunction u = sample_boundary_param(ell, [&](double t) { return fu.eval(t); });
    OffsetNormReport rep = hardy_norm_offset(ell, u, 2.0, {0.2, 0.1, 0.05, 0.025});
    // Monotone toward the boundary, bounded by the boundary norm.
    for (size_t i = 1; i < rep.norms.size(); ++i)
        CHECK(rep.norms[i].norm >= rep.norms[i - 1].norm - 1e-10);
    CHECK(rep.norms.back().norm <= rep.boundary_norm * (1.0 + 1e-8));
    // Richardson extrapolation of the halving tail hits the boundary norm.
    double extrap = 2.0 * rep.norms[3].norm - rep.norms[2].norm;
    CHECK(std::abs(extrap - rep.boundary_norm) / rep.boundary_norm < 0.02);
}

TEST_CASE("Holder exponent estimates") {
    JordanCurve disc = unit_disc(512);
    BoundaryFunction f =
        sample_boundary_param(disc, [](double t) { return std::polar(1.0, t); });
    HolderEstimate smooth = holder_exponent_estimate(disc, f, {0.02, 0.05, 0.1, 0.2});
    CHECK(smooth.alpha > 0.95);
    CHECK(smooth.alpha < 1.05);

    JordanCurve sq = square86();
    BoundaryFunction prof = sample_boundary_param(sq, [&](double t) {
        double dmin = 1e300;
        for (double tc : sq.corner_t) dmin = std::min(dmin, std::abs(t - tc));
        return cplx(std::sqrt(dmin), 0.0);
    });
    HolderEstimate half = holder_exponent_estimate(sq, prof, {0.05, 0.1, 0.2, 0.5});
    CHECK(half.alpha > 0.45);
    CHECK(half.alpha < 0.55);

    // Holder-1/2 datum through the transform: no exponent loss beyond tolerance.
    BoundaryFunction u_half = sample_boundary(
        sq, [&](cplx w) { return cplx(std::sqrt(std::abs(w - sq.vertices[0])), 0.0); });
    BoundaryFunction cu = cauchy_boundary(sq, u_half);
    HolderEstimate est = holder_exponent_estimate(sq, cu, {0.02, 0.05, 0.1, 0.2});
    CHECK(est.alpha >= 0.45);
    // Consistency against a finer resolution run.
    JordanCurve sq2 = build_curve(CurveSpec::polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, 16, 6));
    BoundaryFunction u2 = sample_boundary(
        sq2, [&](cplx w) { return cplx(std::sqrt(std::abs(w - sq2.vertices[0])), 0.0); });
    HolderEstimate est2 = holder_exponent_estimate(sq2, cauchy_boundary(sq2, u2),
                                                   {0.02, 0.05, 0.1, 0.2});
    CHECK(std::abs(est.alpha - est2.alpha) < 0.1);

    BoundaryFunction c = sample_boundary(disc, [](cplx) { return cplx(3.0); });
    HolderEstimate degen = holder_exponent_estimate(disc, c, {0.02, 0.05, 0.1, 0.2});
    CHECK(degen.degenerate);
    CHECK(degen.alpha == 1.0);
}
