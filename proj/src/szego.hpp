#ifndef HH_SZEGO_HPP
#define HH_SZEGO_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "cauchy.hpp"
#include "geometry.hpp"

namespace hh {

// Kerzman-Stein kernel A(z, w) = C(z, w) - conj(C(w, z)) where
// C(z, w) = (1/2*pi*i) T(w)/(w - z) is the Cauchy kernel against arclength.
// Skew-adjoint with respect to <f, g> = sum f_j conj(g_j) s_j.
struct KerzmanSteinOperator {
    std::uint64_t curve_id = 0;
    Eigen::MatrixXcd kernel; // point values A(z_j, z_k); diagonal extrapolated

    // Nystrom action (A f)_j = sum_k kernel(j, k) f_k s_k.
    std::vector<cplx> apply(const JordanCurve& curve, const std::vector<cplx>& f) const;
    // max_jk |kernel + adjoint| with the arclength pairing.
    double skew_defect() const;
    double max_abs() const { return kernel.cwiseAbs().maxCoeff(); }
};

KerzmanSteinOperator build_ks_operator(const JordanCurve& curve);

// Dense Szego projection P = C (I + A)^{-1}; the factorization is reused
// across right-hand sides.
class SzegoProjector {
public:
    explicit SzegoProjector(const JordanCurve& curve);

    BoundaryFunction project(const JordanCurve& curve, const BoundaryFunction& u) const;
    const KerzmanSteinOperator& ks() const { return ks_; }

private:
    std::uint64_t curve_id_;
    KerzmanSteinOperator ks_;
    NystromOperator cauchy_;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_; // of I + A s-weighted
};

// One-shot projection (builds the dense operator internally).
BoundaryFunction szego_project(const JordanCurve& curve, const BoundaryFunction& u);

struct SzegoKernels {
    std::uint64_t curve_id = 0;
    cplx z;
    std::vector<cplx> szego;      // S(z, w_j)
    std::vector<cplx> garabedian; // L(w_j, z) = i S(z, w_j) / T_j
};
SzegoKernels szego_kernels(const JordanCurve& curve, const SzegoProjector& projector, cplx z);

struct PseudolocalReport {
    int n_coarse = 0, n_fine = 0;
    double mid_coarse = 0.0, mid_fine = 0.0; // max |d'| on the middle third of the cap
    double end_coarse = 0.0, end_fine = 0.0; // max |d'| near the cap endpoints
    double mid_ratio = 0.0;                  // fine / coarse
    double end_ratio = 0.0;
    bool certified = false; // mid_ratio <= 1.5 and end_ratio >= 1.8
};

// Theorem proxy: project h 1_[t1,t2] extended by zero, measure tangential
// derivatives of f - h on the cap at two resolutions.
PseudolocalReport pseudolocal_experiment(const CurveSpec& spec, double t1, double t2,
                                         const std::function<cplx(cplx)>& h_local);

} // namespace hh

#endif
