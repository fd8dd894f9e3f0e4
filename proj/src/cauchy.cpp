#include "cauchy.hpp"

#include <cmath>

#include "errors.hpp"
#include "spectral.hpp"

namespace hh {

namespace {

const cplx kTwoPiI(0.0, 2.0 * M_PI);

int nearest_node(const JordanCurve& curve, cplx z) {
    int best = 0;
    double bd = std::abs(z - curve.z[0]);
    for (int k = 1; k < curve.size(); ++k) {
        double d = std::abs(z - curve.z[k]);
        if (d < bd) {
            bd = d;
            best = k;
        }
    }
    return best;
}

// Barycentric differentiation matrix entries for one polygon panel.
void panel_derivative(const JordanCurve& curve, int begin, int end,
                      const std::vector<cplx>& samples, std::vector<cplx>& out) {
    int q = end - begin;
    std::vector<double> bary(q, 1.0);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            if (j != i) bary[i] /= (curve.t[begin + i] - curve.t[begin + j]);
    for (int i = 0; i < q; ++i) {
        cplx acc = 0.0;
        double diag = 0.0;
        for (int j = 0; j < q; ++j) {
            if (j == i) continue;
            double dij = (bary[j] / bary[i]) / (curve.t[begin + i] - curve.t[begin + j]);
            acc += dij * samples[begin + j];
            diag -= dij;
        }
        out[begin + i] = acc + diag * samples[begin + i];
    }
}

} // namespace

BoundaryFunction sample_boundary(const JordanCurve& curve, const std::function<cplx(cplx)>& f,
                                 const std::string& label) {
    BoundaryFunction u;
    u.curve_id = curve.id;
    u.label = label;
    u.samples.resize(curve.size());
    for (int j = 0; j < curve.size(); ++j) u.samples[j] = f(curve.z[j]);
    return u;
}

BoundaryFunction sample_boundary_param(const JordanCurve& curve,
                                       const std::function<cplx(double)>& f,
                                       const std::string& label) {
    BoundaryFunction u;
    u.curve_id = curve.id;
    u.label = label;
    u.samples.resize(curve.size());
    for (int j = 0; j < curve.size(); ++j) u.samples[j] = f(curve.t[j]);
    return u;
}

void check_binding(const JordanCurve& curve, const BoundaryFunction& u) {
    require(u.curve_id == curve.id, errc::curve_mismatch,
            "boundary data is bound to a different curve");
    require(u.size() == curve.size(), errc::curve_mismatch,
            "boundary data sample count does not match curve");
}

double max_abs(const std::vector<cplx>& v) {
    double m = 0.0;
    for (const cplx& x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double boundary_norm(const JordanCurve& curve, const BoundaryFunction& u, double p) {
    check_binding(curve, u);
    double acc = 0.0;
    for (int j = 0; j < curve.size(); ++j) acc += std::pow(std::abs(u.samples[j]), p) * curve.s[j];
    return std::pow(acc, 1.0 / p);
}

cplx boundary_inner(const JordanCurve& curve, const BoundaryFunction& f,
                    const BoundaryFunction& g) {
    check_binding(curve, f);
    check_binding(curve, g);
    cplx acc = 0.0;
    for (int j = 0; j < curve.size(); ++j)
        acc += f.samples[j] * std::conj(g.samples[j]) * curve.s[j];
    return acc;
}

namespace {

// Centered 8th-order differences of periodic samples at node j.
void local_derivatives(const std::vector<cplx>& u, int j, double h, cplx& d1, cplx& d2) {
    static const double c1[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
    static const double c2[4] = {8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0};
    int n = static_cast<int>(u.size());
    d1 = 0.0;
    d2 = -205.0 / 72.0 * u[j];
    for (int k = 1; k <= 4; ++k) {
        cplx up = u[(j + k) % n], um = u[(j - k + n) % n];
        d1 += c1[k - 1] * (up - um);
        d2 += c2[k - 1] * (up + um);
    }
    d1 /= h;
    d2 /= (h * h);
}

} // namespace

// Quadrature of (1/2*pi*i) * integral u/(w-z) dw off the curve. Within the
// near-boundary band the local Taylor polynomial of u around the nearest
// node is subtracted; its moments integrate to the polynomial at z inside
// the curve and to zero outside.
cplx cauchy_extension(const JordanCurve& curve, const std::vector<cplx>& u, cplx z, bool inside) {
    double d = distance_to_curve(curve, z);
    if (d >= curve.near_threshold()) {
        cplx acc = 0.0;
        for (int k = 0; k < curve.size(); ++k)
            acc += u[k] * curve.dz[k] * curve.w[k] / (curve.z[k] - z);
        return acc / kTwoPiI;
    }

    int j = nearest_node(curve, z);
    cplx c0 = u[j], c1 = 0.0, c2 = 0.0;
    if (curve.smooth() && curve.size() >= 16) {
        // Convert parametric derivatives into the Taylor series in w - w*.
        cplx a1, a2;
        local_derivatives(u, j, curve.w[j], a1, a2);
        cplx dz = curve.dz[j];
        cplx ddz = curve.model->derivative(curve.t[j], 2);
        c1 = a1 / dz;
        c2 = (0.5 * a2 - 0.5 * c1 * ddz) / (dz * dz);
    }
    cplx wstar = curve.z[j];
    cplx acc = 0.0;
    for (int k = 0; k < curve.size(); ++k) {
        cplx dw = curve.z[k] - wstar;
        cplx taylor = c0 + dw * (c1 + dw * c2);
        acc += (u[k] - taylor) * curve.dz[k] * curve.w[k] / (curve.z[k] - z);
    }
    cplx dzs = z - wstar;
    cplx series = inside ? c0 + dzs * (c1 + dzs * c2) : cplx(0.0);
    return series + acc / kTwoPiI;
}

std::vector<cplx> parametric_derivative(const JordanCurve& curve,
                                        const std::vector<cplx>& samples) {
    if (curve.smooth()) return spectral_derivative(samples, 2.0 * M_PI);
    std::vector<cplx> out(samples.size());
    for (size_t p = 0; p < curve.panel_start.size(); ++p) {
        int begin = curve.panel_start[p];
        int end = (p + 1 < curve.panel_start.size()) ? curve.panel_start[p + 1] : curve.size();
        panel_derivative(curve, begin, end, samples, out);
    }
    return out;
}

cplx cauchy_interior(const JordanCurve& curve, const BoundaryFunction& u, cplx z) {
    check_binding(curve, u);
    require(point_inside(curve, z), errc::point_not_interior, "evaluation point is not interior");
    return cauchy_extension(curve, u.samples, z, true);
}

cplx cauchy_exterior(const JordanCurve& curve, const BoundaryFunction& u, cplx z) {
    check_binding(curve, u);
    require(!point_inside(curve, z), errc::point_not_exterior, "evaluation point is not exterior");
    return -cauchy_extension(curve, u.samples, z, false);
}

BoundaryFunction cauchy_boundary(const JordanCurve& curve, const BoundaryFunction& u) {
    check_binding(curve, u);
    std::vector<cplx> deriv = parametric_derivative(curve, u.samples);

    BoundaryFunction out;
    out.curve_id = curve.id;
    out.label = u.label.empty() ? "" : "C[" + u.label + "]";
    out.samples.resize(curve.size());
    for (int j = 0; j < curve.size(); ++j) {
        cplx acc = deriv[j] * curve.w[j];
        for (int k = 0; k < curve.size(); ++k) {
            if (k == j) continue;
            acc += (u.samples[k] - u.samples[j]) / (curve.z[k] - curve.z[j]) * curve.dz[k] *
                   curve.w[k];
        }
        out.samples[j] = u.samples[j] + acc / kTwoPiI;
    }
    return out;
}

cplx cauchy_interior_derivative(const JordanCurve& curve, const BoundaryFunction& u, cplx z) {
    check_binding(curve, u);
    require(point_inside(curve, z), errc::point_not_interior, "evaluation point is not interior");
    cplx acc = 0.0;
    for (int k = 0; k < curve.size(); ++k) {
        cplx dk = curve.z[k] - z;
        acc += u.samples[k] * curve.dz[k] * curve.w[k] / (dk * dk);
    }
    return acc / kTwoPiI;
}

BoundaryFunction cauchy_derivative_density(const JordanCurve& curve, const BoundaryFunction& u) {
    check_binding(curve, u);
    require(curve.smooth(), errc::polygon_not_supported,
            "derivative density requires a continuously differentiable curve");
    std::vector<cplx> deriv = spectral_derivative(u.samples, 2.0 * M_PI);
    BoundaryFunction g;
    g.curve_id = curve.id;
    g.label = u.label.empty() ? "" : "ddz[" + u.label + "]";
    g.samples.resize(curve.size());
    for (int j = 0; j < curve.size(); ++j) g.samples[j] = deriv[j] / curve.dz[j];
    return g;
}

std::vector<JumpEstimate> plemelj_jump(const JordanCurve& curve, const BoundaryFunction& u,
                                       int node, const std::vector<double>& deltas) {
    check_binding(curve, u);
    require(node >= 0 && node < curve.size(), errc::invalid_argument, "node index out of range");
    std::vector<JumpEstimate> out;
    out.reserve(deltas.size());
    cplx inward = cplx(0.0, 1.0) * curve.tangent[node];
    for (double delta : deltas) {
        require(delta > 0.0, errc::invalid_argument, "jump probe distance must be positive");
        cplx zi = curve.z[node] + delta * inward;
        cplx ze = curve.z[node] - delta * inward;
        require(point_inside(curve, zi) && !point_inside(curve, ze), errc::invalid_argument,
                "jump probe distance exceeds the reach of the curve");
        cplx jump = cauchy_extension(curve, u.samples, zi, true) -
                    cauchy_extension(curve, u.samples, ze, false);
        out.push_back({delta, jump, std::abs(jump - u.samples[node])});
    }
    return out;
}

std::vector<cplx> NystromOperator::apply(const std::vector<cplx>& samples) const {
    Eigen::Map<const Eigen::VectorXcd> x(samples.data(), samples.size());
    Eigen::VectorXcd y = matrix * x;
    return std::vector<cplx>(y.data(), y.data() + y.size());
}

NystromOperator build_cauchy_operator(const JordanCurve& curve) {
    int n = curve.size();
    NystromOperator op;
    op.curve_id = curve.id;
    op.role = NystromOperator::Role::boundary_cauchy;
    op.matrix = Eigen::MatrixXcd::Zero(n, n);

    // Kernel part of the singularity-subtracted transform.
    for (int j = 0; j < n; ++j) {
        cplx row_sum = 0.0;
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            cplx e = curve.dz[k] * curve.w[k] / (curve.z[k] - curve.z[j]) / kTwoPiI;
            op.matrix(j, k) += e;
            row_sum += e;
        }
        op.matrix(j, j) += 1.0 - row_sum;
    }
    // Diagonal limit contributes w_j * (u o z)'(t_j) / (2*pi*i).
    if (curve.smooth()) {
        for (int j = 0; j < n; ++j) {
            cplx scale = curve.w[j] / kTwoPiI;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                op.matrix(j, k) += scale * spectral_diff_entry(n, j, k, 2.0 * M_PI);
            }
        }
    } else {
        for (size_t p = 0; p < curve.panel_start.size(); ++p) {
            int begin = curve.panel_start[p];
            int end = (p + 1 < curve.panel_start.size()) ? curve.panel_start[p + 1] : n;
            int q = end - begin;
            std::vector<double> bary(q, 1.0);
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j)
                    if (j != i) bary[i] /= (curve.t[begin + i] - curve.t[begin + j]);
            for (int i = 0; i < q; ++i) {
                cplx scale = curve.w[begin + i] / kTwoPiI;
                double diag = 0.0;
                for (int j = 0; j < q; ++j) {
                    if (j == i) continue;
                    double dij =
                        (bary[j] / bary[i]) / (curve.t[begin + i] - curve.t[begin + j]);
                    op.matrix(begin + i, begin + j) += scale * dij;
                    diag -= dij;
                }
                op.matrix(begin + i, begin + i) += scale * diag;
            }
        }
    }
    return op;
}

} // namespace hh
