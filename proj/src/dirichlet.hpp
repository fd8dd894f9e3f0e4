#ifndef HH_DIRICHLET_HPP
#define HH_DIRICHLET_HPP

#include <vector>

#include "cauchy.hpp"
#include "decomp.hpp"
#include "geometry.hpp"

namespace hh {

enum class FieldMethod { h_plus_reflected_H, two_re_cauchy, poisson_quadrature, double_layer };

struct HarmonicField {
    std::vector<cplx> points;
    std::vector<cplx> values;
    FieldMethod method = FieldMethod::h_plus_reflected_H;
    cplx center_value = 0.0;  // field evaluated at the disc center
    cplx boundary_mean = 0.0; // arclength mean of the data
};

// Harmonic extension on a disc: U(z) = h(z) + H at the reflected point, with
// h + H the decomposition of u. The reflection z -> c + r^2/conj(z - c) is
// disc-specific.
HarmonicField dirichlet_disc(const JordanCurve& curve, const BoundaryFunction& u,
                             const std::vector<cplx>& points);

// Real data on a disc: U = 2 Re(Cauchy extension of u) - mean(u).
HarmonicField dirichlet_disc_real(const JordanCurve& curve, const BoundaryFunction& u,
                                  const std::vector<cplx>& points);

// P(z, e^{it}) = (1/pi) Re[e^{it}/(e^{it} - z) - 1/2] on the unit disc.
double poisson_kernel(cplx z, double t);

// Trapezoid quadrature of the Poisson integral on the unit circle. Sets *warn
// when z sits beyond the accuracy cliff near the boundary.
cplx poisson_extension(const JordanCurve& curve, const BoundaryFunction& u, cplx z,
                       bool* warn = nullptr);

struct GeneralExtension {
    double value;       // Re of the interior Cauchy integral
    double double_layer; // direct double-layer quadrature
    double discrepancy; // |value - double_layer|
};
GeneralExtension harmonic_extension_general(const JordanCurve& curve, const BoundaryFunction& u,
                                            cplx z);

cplx mean_value(const JordanCurve& curve, const BoundaryFunction& u);

void require_real(const BoundaryFunction& u);

} // namespace hh

#endif
