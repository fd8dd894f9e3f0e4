#ifndef HH_ORACLE_HPP
#define HH_ORACLE_HPP

#include <vector>

#include "cauchy.hpp"
#include "geometry.hpp"

namespace hh {

// Trigonometric polynomial sum a_n e^{i n t}, n in [-M, M], on the unit circle.
struct FourierData {
    std::vector<cplx> coeffs; // index m holds frequency m - M
    int max_frequency() const { return (static_cast<int>(coeffs.size()) - 1) / 2; }
    cplx coeff(int n) const { return coeffs[n + max_frequency()]; }
    cplx eval(double t) const;
};

// Deterministic coefficients with |a_n| <= 1, driven by a 64-bit seed.
FourierData random_fourier(int max_frequency, std::uint64_t seed);

struct FourierSplit {
    FourierData h; // frequencies n >= 0
    FourierData H; // frequencies n < 0
};
FourierSplit fourier_split(const FourierData& data);

BoundaryFunction sample_fourier(const JordanCurve& curve, const FourierData& data,
                                const char* label = "");

// Simple poles with residues; tagged interior or exterior relative to a curve.
struct RationalData {
    struct Pole {
        cplx location;
        cplx residue;
        bool interior;
    };
    std::vector<Pole> poles;
    cplx eval(cplx w) const;
};

RationalData make_rational(const JordanCurve& curve, const std::vector<cplx>& locations,
                           const std::vector<cplx>& residues);

struct RationalSplit {
    BoundaryFunction u, h, H;
};
// h collects exterior poles (holomorphic inside), H the interior ones.
RationalSplit rational_split(const RationalData& data, const JordanCurve& curve);

// Independent slow evaluation of the boundary Cauchy transform at node j:
// symmetric exclusion |t - t_j| > delta, adaptive quadrature, Richardson
// extrapolation delta -> 0, plus the Plemelj term u_j / 2.
struct BrutePvResult {
    cplx value;
    std::vector<cplx> excluded; // quadrature values for each exclusion radius
};
BrutePvResult brute_pv(const JordanCurve& curve, const BoundaryFunction& u, int node,
                       const std::vector<double>& deltas = {1e-2, 1e-3, 1e-4},
                       double tol = 1e-9);

} // namespace hh

#endif
