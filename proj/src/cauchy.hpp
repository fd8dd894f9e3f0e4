#ifndef HH_CAUCHY_HPP
#define HH_CAUCHY_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace hh {

// Complex samples at the nodes of one specific curve.
struct BoundaryFunction {
    std::uint64_t curve_id = 0;
    std::vector<cplx> samples;
    std::string label;

    int size() const { return static_cast<int>(samples.size()); }
};

BoundaryFunction sample_boundary(const JordanCurve& curve, const std::function<cplx(cplx)>& f,
                                 const std::string& label = "");
BoundaryFunction sample_boundary_param(const JordanCurve& curve,
                                       const std::function<cplx(double)>& f,
                                       const std::string& label = "");
void check_binding(const JordanCurve& curve, const BoundaryFunction& u);

double max_abs(const std::vector<cplx>& v);
double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b);

// Discrete arclength norms and inner product.
double boundary_norm(const JordanCurve& curve, const BoundaryFunction& u, double p = 2.0);
cplx boundary_inner(const JordanCurve& curve, const BoundaryFunction& f,
                    const BoundaryFunction& g);

// d/dt of the samples along the parametrization: spectral on smooth curves,
// per-panel interpolant derivative on polygons.
std::vector<cplx> parametric_derivative(const JordanCurve& curve, const std::vector<cplx>& samples);

// (1/2*pi*i) * integral u(w)/(w-z) dw off the curve, without side validation.
// `inside` selects the constant restored by the near-boundary subtraction.
cplx cauchy_extension(const JordanCurve& curve, const std::vector<cplx>& samples, cplx z,
                      bool inside);

// (1/2*pi*i) * integral u(w)/(w-z) dw for z strictly inside.
cplx cauchy_interior(const JordanCurve& curve, const BoundaryFunction& u, cplx z);

// Exterior Cauchy integral C_e u(z) = -(1/2*pi*i) * integral u(w)/(w-z) dw, z outside.
cplx cauchy_exterior(const JordanCurve& curve, const BoundaryFunction& u, cplx z);

// Boundary values of the Cauchy transform via singularity subtraction.
BoundaryFunction cauchy_boundary(const JordanCurve& curve, const BoundaryFunction& u);

// d/dz of the interior Cauchy integral by the differentiated kernel.
cplx cauchy_interior_derivative(const JordanCurve& curve, const BoundaryFunction& u, cplx z);

// Density g with C(g)(z) = d/dz C(u)(z): g = (d/dt u(z(t))) / z'(t).
BoundaryFunction cauchy_derivative_density(const JordanCurve& curve, const BoundaryFunction& u);

struct JumpEstimate {
    double delta;
    cplx jump;      // interior minus exterior limit of the Cauchy integral
    double error;   // |jump - u(z_j)|
};
std::vector<JumpEstimate> plemelj_jump(const JordanCurve& curve, const BoundaryFunction& u,
                                       int node, const std::vector<double>& deltas);

// Dense Nystrom matrix of the boundary Cauchy transform acting on node samples.
struct NystromOperator {
    enum class Role { boundary_cauchy, kerzman_stein };
    std::uint64_t curve_id = 0;
    Role role = Role::boundary_cauchy;
    Eigen::MatrixXcd matrix;

    std::vector<cplx> apply(const std::vector<cplx>& samples) const;
};
NystromOperator build_cauchy_operator(const JordanCurve& curve);

} // namespace hh

#endif
