#ifndef HH_QUADRATURE_HPP
#define HH_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace hh {

using cplx = std::complex<double>;

struct GaussRule {
    std::vector<double> nodes;   // ascending on (-1, 1), endpoints excluded
    std::vector<double> weights; // sum to 2
};

// Gauss-Legendre rule of order q, computed by Newton iteration on P_q.
const GaussRule& gauss_legendre(int q);

namespace detail {

template <class F, class T>
T simpson_step(F& f, double a, T fa, double b, T fb, double m, T fm, T whole, double tol,
               int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    T flm = f(lm), frm = f(rm);
    T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    T delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, fa, m, fm, lm, flm, left, tol * 0.5, depth - 1) +
           simpson_step(f, m, fm, b, fb, rm, frm, right, tol * 0.5, depth - 1);
}

} // namespace detail

// Adaptive Simpson on [a, b] with absolute tolerance tol.
template <class F>
auto adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 48)
    -> decltype(f(a)) {
    using T = decltype(f(a));
    double m = 0.5 * (a + b);
    T fa = f(a), fb = f(b), fm = f(m);
    T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

// Composite Gauss-Legendre along the straight segment [za, zb] in the plane.
cplx segment_integral(const std::function<cplx(cplx)>& f, cplx za, cplx zb,
                      int panels = 8, int q = 12);

} // namespace hh

#endif
