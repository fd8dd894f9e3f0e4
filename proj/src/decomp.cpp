#include "decomp.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "quadrature.hpp"
#include "spectral.hpp"

namespace hh {

namespace {

// Barycentric interpolation through the points (x_i, f_i).
cplx bary_eval(const std::vector<double>& x, const std::vector<cplx>& f,
               const std::vector<double>& wts, double xq) {
    cplx num = 0.0;
    double den = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        double dx = xq - x[i];
        if (std::abs(dx) < 1e-15) return f[i];
        double c = wts[i] / dx;
        num += c * f[i];
        den += c;
    }
    return num / den;
}

std::vector<double> bary_weights(const std::vector<double>& x) {
    std::vector<double> w(x.size(), 1.0);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (j != i) w[i] /= (x[i] - x[j]);
    return w;
}

} // namespace

HardyDecomposition decompose(const JordanCurve& curve, const BoundaryFunction& u) {
    check_binding(curve, u);
    HardyDecomposition d;
    d.curve_id = curve.id;
    d.u = u;
    d.h = cauchy_boundary(curve, u);
    d.H.curve_id = curve.id;
    d.H.label = u.label.empty() ? "" : "(I-C)[" + u.label + "]";
    d.H.samples.resize(curve.size());
    for (int j = 0; j < curve.size(); ++j) d.H.samples[j] = u.samples[j] - d.h.samples[j];

    d.residual = 0.0; // H := u - h
    BoundaryFunction hh2 = cauchy_boundary(curve, d.h);
    BoundaryFunction cH = cauchy_boundary(curve, d.H);
    d.projection_defect = max_abs_diff(hh2.samples, d.h.samples);
    d.exterior_defect = max_abs(cH.samples);
    return d;
}

cplx exterior_moment(const JordanCurve& curve, const BoundaryFunction& H) {
    check_binding(curve, H);
    cplx acc = 0.0;
    for (int j = 0; j < curve.size(); ++j) acc += H.samples[j] * curve.dz[j] * curve.w[j];
    return acc / cplx(0.0, 2.0 * M_PI);
}

std::vector<VanishingRecord> verify_exterior_vanishing(const JordanCurve& curve,
                                                       const BoundaryFunction& H,
                                                       const std::vector<double>& radii) {
    check_binding(curve, H);
    double r_min = 0.0;
    for (int j = 0; j < curve.size(); ++j) r_min = std::max(r_min, std::abs(curve.z[j]));
    std::vector<VanishingRecord> records;
    for (double radius : radii) {
        require(radius > r_min + 1.0, errc::invalid_argument,
                "sampling radius must exceed max |z_j| + 1");
        VanishingRecord rec;
        rec.radius = radius;
        for (int q = 0; q < 4; ++q) {
            cplx z = std::polar(radius, 0.5 * M_PI * q);
            rec.scaled.push_back(radius * std::abs(cauchy_exterior(curve, H, z)));
        }
        records.push_back(std::move(rec));
    }
    return records;
}

AntiderivativeResult antiderivative_boundary(const JordanCurve& curve, const BoundaryFunction& h) {
    check_binding(curve, h);
    double tol = hardy_tolerance(curve);
    BoundaryFunction ch = cauchy_boundary(curve, h);
    double defect = max_abs_diff(ch.samples, h.samples);
    require(defect <= 10.0 * tol, errc::input_not_hardy,
            "input is not in the discrete Hardy class (projection defect " +
                std::to_string(defect) + ")");

    AntiderivativeResult result;
    result.curve_id = curve.id;
    result.hardy_defect = defect;
    int n = curve.size();

    std::vector<cplx> f(n);
    for (int j = 0; j < n; ++j) f[j] = h.samples[j] * curve.dz[j];

    if (curve.smooth()) {
        CumulativeIntegral ci = spectral_cumulative_integral(f, 2.0 * M_PI);
        result.boundary = std::move(ci.partial);
        result.endpoint_residual = std::abs(ci.full);
    } else {
        // Panel-wise integration of the Gauss-Legendre interpolant, accumulated
        // from the parameter origin t = 0 (the base corner).
        result.boundary.assign(n, cplx(0.0));
        cplx running = 0.0;
        const GaussRule& fine = gauss_legendre(16);
        for (size_t p = 0; p < curve.panel_start.size(); ++p) {
            int begin = curve.panel_start[p];
            int end = (p + 1 < curve.panel_start.size()) ? curve.panel_start[p + 1] : n;
            std::vector<double> x(curve.t.begin() + begin, curve.t.begin() + end);
            std::vector<cplx> fx(f.begin() + begin, f.begin() + end);
            std::vector<double> bw = bary_weights(x);
            // Recover the panel interval from its own Gauss rule: the nodes sit
            // at mid + (b-a)/2 * xi_k with xi the reference nodes.
            const GaussRule& rule = gauss_legendre(static_cast<int>(x.size()));
            double mid = 0.5 * (x.front() + x.back());
            double half = (x.back() - x.front()) / (rule.nodes.back() - rule.nodes.front());
            double a = mid - half;
            cplx panel_total = 0.0;
            for (int i = begin; i < end; ++i) panel_total += f[i] * curve.w[i];
            for (int i = 0; i < end - begin; ++i) {
                cplx acc = 0.0;
                double lo = a, hi = x[i];
                for (size_t k = 0; k < fine.nodes.size(); ++k) {
                    double tq = 0.5 * (lo + hi) + 0.5 * (hi - lo) * fine.nodes[k];
                    acc += bary_eval(x, fx, bw, tq) * 0.5 * (hi - lo) * fine.weights[k];
                }
                result.boundary[begin + i] = running + acc;
            }
            running += panel_total;
        }
        result.endpoint_residual = std::abs(running);
    }

    for (int j = 0; j < n; ++j) {
        result.total_variation += std::abs(result.boundary[(j + 1) % n] - result.boundary[j]);
        result.variation_bound += std::abs(h.samples[j]) * curve.s[j];
    }
    return result;
}

namespace {

// Path integral of the Cauchy-represented interior extension of h along the
// straight segment [za, zb]. Interiority of the path is checked by the caller.
cplx extension_segment(const JordanCurve& curve, const BoundaryFunction& h, cplx za, cplx zb) {
    return segment_integral(
        [&](cplx zeta) { return cauchy_extension(curve, h.samples, zeta, true); }, za, zb, 8, 12);
}

void check_segment_inside(const JordanCurve& curve, cplx za, cplx zb, bool skip_start) {
    for (int i = skip_start ? 1 : 0; i <= 64; ++i) {
        cplx p = za + (zb - za) * (i / 64.0);
        require(point_inside(curve, p), errc::path_leaves_domain,
                "integration path leaves the domain");
    }
}

} // namespace

InteriorAntiderivative antiderivative_interior(const JordanCurve& curve,
                                               const BoundaryFunction& h, cplx z, double step) {
    check_binding(curve, h);
    require(step > 0.0, errc::invalid_argument, "difference step must be positive");
    require(point_inside(curve, z), errc::point_not_interior, "target point is not interior");
    require(distance_to_curve(curve, z) > curve.near_threshold(), errc::invalid_argument,
            "target point is too close to the boundary");

    cplx z0 = curve.z[0];
    cplx p1 = z0 + curve.near_threshold() * cplx(0.0, 1.0) * curve.tangent[0];
    require(point_inside(curve, p1), errc::path_leaves_domain,
            "inward normal segment leaves the domain");
    check_segment_inside(curve, z0, p1, true);
    check_segment_inside(curve, p1, z, false);

    InteriorAntiderivative out;
    cplx first_leg = extension_segment(curve, h, z0, p1);
    out.value = first_leg + extension_segment(curve, h, p1, z);

    // The first leg is shared, so it drops out of the centered difference.
    cplx hp = extension_segment(curve, h, p1, z + step);
    cplx hm = extension_segment(curve, h, p1, z - step);
    out.fd_derivative = (hp - hm) / (2.0 * step);
    out.cauchy_derivative = cauchy_interior(curve, h, z);
    double scale = std::max(std::abs(out.cauchy_derivative), 1e-300);
    out.rel_error = std::abs(out.fd_derivative - out.cauchy_derivative) / scale;
    return out;
}

ModulusReport modulus_of_continuity_check(const JordanCurve& curve, const BoundaryFunction& h,
                                          double p, int segment_count) {
    check_binding(curve, h);
    require(segment_count >= 2, errc::invalid_argument, "need at least two segments");
    require(p > 1.0, errc::invalid_argument, "exponent must lie in (1, infinity)");
    double q = p / (p - 1.0);
    double norm = boundary_norm(curve, h, p);

    ModulusReport report;
    report.ok = true;
    int n = curve.size();
    for (int i = 0; i < segment_count; ++i) {
        int lo = static_cast<int>(static_cast<long long>(i) * n / segment_count);
        int hi = static_cast<int>(static_cast<long long>(i + 1) * n / segment_count);
        cplx integral = 0.0;
        double length = 0.0;
        for (int k = lo; k < hi; ++k) {
            integral += h.samples[k] * curve.dz[k] * curve.w[k];
            length += curve.s[k];
        }
        SegmentBound sb;
        sb.integral = std::abs(integral);
        sb.bound = norm * std::pow(length, 1.0 / q);
        if (sb.integral > sb.bound + 1e-8) report.ok = false;
        if (sb.bound > 0.0) report.max_ratio = std::max(report.max_ratio, sb.integral / sb.bound);
        report.segments.push_back(sb);
    }
    return report;
}

OffsetNormReport hardy_norm_offset(const JordanCurve& curve, const BoundaryFunction& u, double p,
                                   const std::vector<double>& epsilons) {
    check_binding(curve, u);
    require(curve.smooth(), errc::polygon_not_supported, "offset norms require a smooth curve");
    require(p >= 1.0, errc::invalid_argument, "norm exponent must be >= 1");
    for (size_t i = 1; i < epsilons.size(); ++i)
        require(epsilons[i] < epsilons[i - 1], errc::invalid_argument,
                "offsets must decrease toward the boundary");

    BoundaryFunction h = cauchy_boundary(curve, u);
    OffsetNormReport report;
    report.boundary_norm = boundary_norm(curve, h, p);
    for (double eps : epsilons) {
        require(eps > 0.0, errc::invalid_argument, "offsets must be positive");
        JordanCurve inner = offset_curve(curve, eps);
        double acc = 0.0;
        for (int j = 0; j < inner.size(); ++j) {
            cplx f = cauchy_interior(curve, h, inner.z[j]);
            acc += std::pow(std::abs(f), p) * inner.s[j];
        }
        report.norms.push_back({eps, std::pow(acc, 1.0 / p)});
    }
    return report;
}

HolderEstimate holder_exponent_estimate(const JordanCurve& curve, const BoundaryFunction& f,
                                        const std::vector<double>& scales) {
    check_binding(curve, f);
    require(scales.size() >= 3, errc::invalid_argument, "need at least three scales");
    double lo = *std::min_element(scales.begin(), scales.end());
    double hi = *std::max_element(scales.begin(), scales.end());
    require(lo > 0.0 && hi / lo >= 10.0, errc::invalid_argument,
            "scales must span at least a decade");

    int n = curve.size();
    std::vector<double> arc(n + 1, 0.0);
    for (int j = 0; j < n; ++j) arc[j + 1] = arc[j] + curve.s[j];

    // Node whose arclength position is nearest the target.
    auto node_at = [&](double position) {
        double target = std::fmod(position, curve.length);
        auto it = std::upper_bound(arc.begin(), arc.end(), target);
        int lo = std::clamp(static_cast<int>(it - arc.begin()) - 1, 0, n - 1);
        int hi = (lo + 1) % n;
        double d_lo = std::abs(arc[lo] - target);
        double d_hi = std::min(std::abs(arc[lo + 1] - target), curve.length - target + arc[hi]);
        return d_lo <= d_hi ? lo : hi;
    };

    std::vector<double> log_delta, log_omega;
    double scale_f = max_abs(f.samples);
    for (double delta : scales) {
        double omega = 0.0;
        double sep_sum = 0.0;
        int pairs = 0;
        for (int j = 0; j < n; ++j) {
            int k = node_at(arc[j] + delta);
            if (k == j) continue;
            double sep = std::abs(arc[k] - arc[j]);
            sep = std::min(sep, curve.length - sep);
            omega = std::max(omega, std::abs(f.samples[j] - f.samples[k]));
            sep_sum += sep;
            ++pairs;
        }
        require(pairs > 0, errc::invalid_argument, "scale is below the node spacing");
        if (omega < 1e-14 * std::max(scale_f, 1.0)) {
            HolderEstimate degenerate;
            degenerate.alpha = 1.0;
            degenerate.degenerate = true;
            return degenerate;
        }
        log_delta.push_back(std::log(sep_sum / pairs)); // realized separation
        log_omega.push_back(std::log(omega));
    }

    // Least squares fit log omega = alpha * log delta + c.
    double mx = 0.0, my = 0.0;
    int m = static_cast<int>(log_delta.size());
    for (int i = 0; i < m; ++i) {
        mx += log_delta[i];
        my += log_omega[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < m; ++i) {
        sxx += (log_delta[i] - mx) * (log_delta[i] - mx);
        sxy += (log_delta[i] - mx) * (log_omega[i] - my);
    }
    HolderEstimate est;
    est.alpha = sxy / sxx;
    for (int i = 0; i < m; ++i) {
        double resid = log_omega[i] - my - est.alpha * (log_delta[i] - mx);
        est.fit_residual += resid * resid;
    }
    est.fit_residual = std::sqrt(est.fit_residual / m);
    return est;
}

} // namespace hh
