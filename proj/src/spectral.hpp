#ifndef HH_SPECTRAL_HPP
#define HH_SPECTRAL_HPP

#include <complex>
#include <vector>

namespace hh {

using cplx = std::complex<double>;

// Helpers for periodic data sampled at t_j = a + j*(b-a)/N on [a, b).
// Frequencies are balanced: n in [-N/2, N/2) for even N, [-(N-1)/2, (N-1)/2] for odd N.

// Entry (j, k) of the trigonometric differentiation matrix (d/dt, period length given).
double spectral_diff_entry(int n, int j, int k, double period);

// Derivative of the trigonometric interpolant, sampled at the nodes.
std::vector<cplx> spectral_derivative(const std::vector<cplx>& samples, double period);

// Balanced Fourier coefficients c_n with f(t) ~= sum c_n exp(2*pi*i*n*(t-a)/period).
std::vector<cplx> fourier_coefficients(const std::vector<cplx>& samples);

// Sample sum over the balanced frequency set at node j (coeffs indexed as returned above).
cplx fourier_eval(const std::vector<cplx>& coeffs, double theta);

// Lowest balanced frequency for a coefficient vector of size N.
int fourier_min_frequency(int n);

// Partial integrals S_j = int_a^{t_j} f dt of the trigonometric interpolant,
// plus the full-period integral (returned separately).
struct CumulativeIntegral {
    std::vector<cplx> partial; // S_0 = 0
    cplx full;                 // int over one period
};
CumulativeIntegral spectral_cumulative_integral(const std::vector<cplx>& samples, double period);

} // namespace hh

#endif
