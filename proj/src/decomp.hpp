#ifndef HH_DECOMP_HPP
#define HH_DECOMP_HPP

#include <vector>

#include "cauchy.hpp"
#include "geometry.hpp"

namespace hh {

// Tolerance for Hardy-class defects: spectral quadrature on smooth curves,
// corner-graded panels on polygons.
inline double hardy_tolerance(const JordanCurve& curve) {
    return curve.smooth() ? 1e-8 : 1e-4;
}

struct HardyDecomposition {
    std::uint64_t curve_id = 0;
    BoundaryFunction u, h, H;
    double residual = 0.0;          // max |u - h - H|, zero by construction
    double projection_defect = 0.0; // max |C h - h|
    double exterior_defect = 0.0;   // max |C H|
};

// u = C u + (I - C) u with verification diagnostics.
HardyDecomposition decompose(const JordanCurve& curve, const BoundaryFunction& u);

// First exterior Laurent coefficient c1 = (1/2*pi*i) * integral H dw.
cplx exterior_moment(const JordanCurve& curve, const BoundaryFunction& H);

struct VanishingRecord {
    double radius;
    std::vector<double> scaled; // R * |C_e H(R e^{i theta})| at theta = 0, pi/2, pi, 3pi/2
};
std::vector<VanishingRecord> verify_exterior_vanishing(const JordanCurve& curve,
                                                       const BoundaryFunction& H,
                                                       const std::vector<double>& radii);

struct AntiderivativeResult {
    std::uint64_t curve_id = 0;
    std::vector<cplx> boundary;     // H(z(t_j)), starting from H = 0 at the first node
    double endpoint_residual = 0.0; // |integral of h dz over the full boundary|
    double hardy_defect = 0.0;      // projection defect of the input
    double total_variation = 0.0;   // sum |H_{j+1} - H_j|
    double variation_bound = 0.0;   // sum |h_j| s_j
};
AntiderivativeResult antiderivative_boundary(const JordanCurve& curve, const BoundaryFunction& h);

struct InteriorAntiderivative {
    cplx value;             // path integral from the base node
    cplx fd_derivative;     // centered difference of the path integral
    cplx cauchy_derivative; // interior Cauchy evaluation of h
    double rel_error;       // |fd - cauchy| / max(|cauchy|, eps)
};
InteriorAntiderivative antiderivative_interior(const JordanCurve& curve,
                                               const BoundaryFunction& h, cplx z, double step);

struct SegmentBound {
    double integral; // |sum over segment of h dz|
    double bound;    // ||h||_p * length^{1/q}
};
struct ModulusReport {
    std::vector<SegmentBound> segments;
    double max_ratio = 0.0;
    bool ok = false; // every integral <= bound + 1e-8
};
ModulusReport modulus_of_continuity_check(const JordanCurve& curve, const BoundaryFunction& h,
                                          double p, int segment_count);

struct OffsetNorm {
    double eps;
    double norm; // arclength p-norm of the interior extension on the offset curve
};
struct OffsetNormReport {
    std::vector<OffsetNorm> norms;
    double boundary_norm = 0.0; // p-norm of C u on the boundary itself
};
OffsetNormReport hardy_norm_offset(const JordanCurve& curve, const BoundaryFunction& u, double p,
                                   const std::vector<double>& epsilons);

struct HolderEstimate {
    double alpha = 0.0;
    double fit_residual = 0.0;
    bool degenerate = false; // constant data, alpha reported as 1 by convention
};
HolderEstimate holder_exponent_estimate(const JordanCurve& curve, const BoundaryFunction& f,
                                        const std::vector<double>& scales);

} // namespace hh

#endif
