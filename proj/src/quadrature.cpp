#include "quadrature.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "errors.hpp"

namespace hh {

namespace {

GaussRule compute_gauss_legendre(int q) {
    GaussRule rule;
    rule.nodes.resize(q);
    rule.weights.resize(q);
    for (int i = 0; i < q; ++i) {
        // Chebyshev initial guess, then Newton on P_q(x) = 0.
        double x = std::cos(M_PI * (i + 0.75) / (q + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= q; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = q * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    // Newton sweep produces descending nodes; callers expect ascending order.
    std::reverse(rule.nodes.begin(), rule.nodes.end());
    std::reverse(rule.weights.begin(), rule.weights.end());
    return rule;
}

} // namespace

const GaussRule& gauss_legendre(int q) {
    require(q >= 1 && q <= 64, errc::invalid_argument, "Gauss-Legendre order out of range");
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, compute_gauss_legendre(q)).first;
    return it->second;
}

cplx segment_integral(const std::function<cplx(cplx)>& f, cplx za, cplx zb, int panels, int q) {
    const GaussRule& rule = gauss_legendre(q);
    cplx total = 0.0;
    cplx step = (zb - za) / static_cast<double>(panels);
    for (int p = 0; p < panels; ++p) {
        cplx pa = za + step * static_cast<double>(p);
        for (int i = 0; i < q; ++i) {
            cplx zi = pa + step * (0.5 * (rule.nodes[i] + 1.0));
            total += f(zi) * rule.weights[i] * 0.5 * step;
        }
    }
    return total;
}

} // namespace hh
