#include "szego.hpp"

#include <cmath>

#include "errors.hpp"

namespace hh {

namespace {

const cplx kTwoPiI(0.0, 2.0 * M_PI);

cplx arclength_cauchy_kernel(const JordanCurve& curve, int target, int source) {
    return curve.tangent[source] / (curve.z[source] - curve.z[target]) / kTwoPiI;
}

} // namespace

std::vector<cplx> KerzmanSteinOperator::apply(const JordanCurve& curve,
                                              const std::vector<cplx>& f) const {
    int n = static_cast<int>(f.size());
    std::vector<cplx> out(n, cplx(0.0));
    for (int j = 0; j < n; ++j) {
        cplx acc = 0.0;
        for (int k = 0; k < n; ++k) acc += kernel(j, k) * f[k] * curve.s[k];
        out[j] = acc;
    }
    return out;
}

double KerzmanSteinOperator::skew_defect() const {
    return (kernel + kernel.adjoint()).cwiseAbs().maxCoeff();
}

KerzmanSteinOperator build_ks_operator(const JordanCurve& curve) {
    require(curve.smooth(), errc::polygon_not_supported,
            "the Kerzman-Stein kernel needs a continuously differentiable curve");
    int n = curve.size();
    KerzmanSteinOperator op;
    op.curve_id = curve.id;
    op.kernel = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            op.kernel(j, k) = arclength_cauchy_kernel(curve, j, k) -
                              std::conj(arclength_cauchy_kernel(curve, k, j));
        }
    // Diagonal: one-sided Richardson extrapolation along the parametrization,
    // then restriction to the skew part (the limit is purely imaginary).
    for (int j = 0; j < n; ++j) {
        cplx a1 = op.kernel(j, (j + 1) % n);
        cplx a2 = op.kernel(j, (j + 2) % n);
        cplx a3 = op.kernel(j, (j + 3) % n);
        cplx extrap = 3.0 * a1 - 3.0 * a2 + a3;
        op.kernel(j, j) = cplx(0.0, extrap.imag());
    }
    return op;
}

SzegoProjector::SzegoProjector(const JordanCurve& curve)
    : curve_id_(curve.id), ks_(build_ks_operator(curve)), cauchy_(build_cauchy_operator(curve)) {
    int n = curve.size();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m(j, k) += ks_.kernel(j, k) * curve.s[k];
    lu_.compute(m);
    require(lu_.matrixLU().diagonal().cwiseAbs().minCoeff() > 1e-14, errc::solver_failure,
            "I + A is numerically singular");
}

BoundaryFunction SzegoProjector::project(const JordanCurve& curve,
                                         const BoundaryFunction& u) const {
    check_binding(curve, u);
    require(curve.id == curve_id_, errc::curve_mismatch,
            "projector was built for a different curve");
    Eigen::Map<const Eigen::VectorXcd> rhs(u.samples.data(), u.samples.size());
    Eigen::VectorXcd x = lu_.solve(rhs);
    Eigen::VectorXcd y = cauchy_.matrix * x;
    BoundaryFunction out;
    out.curve_id = curve.id;
    out.label = u.label.empty() ? "" : "P[" + u.label + "]";
    out.samples.assign(y.data(), y.data() + y.size());
    return out;
}

BoundaryFunction szego_project(const JordanCurve& curve, const BoundaryFunction& u) {
    return SzegoProjector(curve).project(curve, u);
}

SzegoKernels szego_kernels(const JordanCurve& curve, const SzegoProjector& projector, cplx z) {
    require(point_inside(curve, z), errc::point_not_interior, "kernel point must be interior");
    require(distance_to_curve(curve, z) > curve.near_threshold(), errc::invalid_argument,
            "kernel point is too close to the boundary");

    // Project the conjugated Cauchy kernel row for z; with the Hermitian
    // convention S(z, w) = conj((P c_z)(w)).
    BoundaryFunction row;
    row.curve_id = curve.id;
    row.samples.resize(curve.size());
    for (int k = 0; k < curve.size(); ++k)
        row.samples[k] = std::conj(curve.tangent[k] / (curve.z[k] - z) / kTwoPiI);
    BoundaryFunction s = projector.project(curve, row);

    SzegoKernels kernels;
    kernels.curve_id = curve.id;
    kernels.z = z;
    kernels.szego.resize(curve.size());
    kernels.garabedian.resize(curve.size());
    for (int k = 0; k < curve.size(); ++k) {
        kernels.szego[k] = std::conj(s.samples[k]);
        kernels.garabedian[k] = cplx(0.0, 1.0) * kernels.szego[k] / curve.tangent[k];
    }
    return kernels;
}

namespace {

struct CapScan {
    double mid = 0.0;
    double end = 0.0;
};

// Max |d/dt (f - h)| over cap nodes, split into the middle third and the
// endpoint-adjacent windows. Differences stay strictly inside the cap.
CapScan scan_cap(const JordanCurve& curve, const std::vector<cplx>& d, double t1, double t2) {
    int n = curve.size();
    double lo_third = t1 + (t2 - t1) / 3.0;
    double hi_third = t1 + 2.0 * (t2 - t1) / 3.0;
    double window = 6.0 * 2.0 * M_PI / n;

    CapScan scan;
    for (int j = 0; j < n; ++j) {
        double t = curve.t[j];
        if (t <= t1 || t >= t2) continue;
        int jm = (j - 1 + n) % n, jp = (j + 1) % n;
        if (curve.t[jm] <= t1 || curve.t[jp] >= t2 || jp < j || jm > j) continue;
        double deriv = std::abs(d[jp] - d[jm]) / (curve.t[jp] - curve.t[jm]);
        if (t >= lo_third && t <= hi_third) scan.mid = std::max(scan.mid, deriv);
        if (t - t1 <= window || t2 - t <= window) scan.end = std::max(scan.end, deriv);
    }
    return scan;
}

CapScan run_resolution(const CurveSpec& spec, int n, double t1, double t2,
                       const std::function<cplx(cplx)>& h_local) {
    CurveSpec sized = spec;
    sized.n = n;
    JordanCurve curve = build_curve(sized);

    BoundaryFunction u;
    u.curve_id = curve.id;
    u.samples.assign(curve.size(), cplx(0.0));
    for (int j = 0; j < curve.size(); ++j)
        if (curve.t[j] > t1 && curve.t[j] < t2) u.samples[j] = h_local(curve.z[j]);

    BoundaryFunction f = szego_project(curve, u);
    std::vector<cplx> d(curve.size(), cplx(0.0));
    for (int j = 0; j < curve.size(); ++j)
        if (curve.t[j] > t1 && curve.t[j] < t2) d[j] = f.samples[j] - h_local(curve.z[j]);
    return scan_cap(curve, d, t1, t2);
}

} // namespace

PseudolocalReport pseudolocal_experiment(const CurveSpec& spec, double t1, double t2,
                                         const std::function<cplx(cplx)>& h_local) {
    require(spec.kind != CurveKind::polygon, errc::polygon_not_supported,
            "pseudo-locality experiment runs on smooth curves");
    require(t1 >= 0.0 && t2 <= 2.0 * M_PI && t1 < t2, errc::invalid_argument,
            "cap must satisfy 0 <= t1 < t2 <= 2*pi");
    require(t2 - t1 >= 16.0 * 2.0 * M_PI / spec.n, errc::cap_too_short,
            "cap shorter than 16 node spacings");

    PseudolocalReport report;
    report.n_coarse = spec.n;
    report.n_fine = 2 * spec.n;
    CapScan coarse = run_resolution(spec, report.n_coarse, t1, t2, h_local);
    CapScan fine = run_resolution(spec, report.n_fine, t1, t2, h_local);
    report.mid_coarse = coarse.mid;
    report.mid_fine = fine.mid;
    report.end_coarse = coarse.end;
    report.end_fine = fine.end;
    report.mid_ratio = fine.mid / std::max(coarse.mid, 1e-300);
    report.end_ratio = fine.end / std::max(coarse.end, 1e-300);
    report.certified = report.mid_ratio <= 1.5 && report.end_ratio >= 1.8;
    return report;
}

} // namespace hh
