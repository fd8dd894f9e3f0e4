#include "spectral.hpp"

#include <cmath>

#include "errors.hpp"

namespace hh {

double spectral_diff_entry(int n, int j, int k, double period) {
    if (j == k) return 0.0;
    double h = period / n;
    double arg = 0.5 * (j - k) * h * (2.0 * M_PI / period);
    double sign = ((j - k) % 2 == 0) ? 1.0 : -1.0;
    double scale = 2.0 * M_PI / period;
    if (n % 2 == 0) return scale * 0.5 * sign / std::tan(arg);
    return scale * 0.5 * sign / std::sin(arg);
}

std::vector<cplx> spectral_derivative(const std::vector<cplx>& samples, double period) {
    int n = static_cast<int>(samples.size());
    require(n >= 2, errc::invalid_argument, "spectral derivative needs at least 2 samples");
    std::vector<cplx> out(n, cplx(0.0));
    for (int j = 0; j < n; ++j) {
        cplx acc = 0.0;
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            acc += spectral_diff_entry(n, j, k, period) * samples[k];
        }
        out[j] = acc;
    }
    return out;
}

int fourier_min_frequency(int n) { return -(n / 2); }

std::vector<cplx> fourier_coefficients(const std::vector<cplx>& samples) {
    int n = static_cast<int>(samples.size());
    std::vector<cplx> coeffs(n, cplx(0.0));
    int n_min = fourier_min_frequency(n);
    for (int m = 0; m < n; ++m) {
        int freq = n_min + m;
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) {
            double phase = -2.0 * M_PI * freq * j / n;
            acc += samples[j] * cplx(std::cos(phase), std::sin(phase));
        }
        coeffs[m] = acc / static_cast<double>(n);
    }
    return coeffs;
}

cplx fourier_eval(const std::vector<cplx>& coeffs, double theta) {
    int n = static_cast<int>(coeffs.size());
    int n_min = fourier_min_frequency(n);
    cplx acc = 0.0;
    for (int m = 0; m < n; ++m) {
        double phase = (n_min + m) * theta;
        acc += coeffs[m] * cplx(std::cos(phase), std::sin(phase));
    }
    return acc;
}

CumulativeIntegral spectral_cumulative_integral(const std::vector<cplx>& samples, double period) {
    int n = static_cast<int>(samples.size());
    std::vector<cplx> coeffs = fourier_coefficients(samples);
    int n_min = fourier_min_frequency(n);
    cplx mean = coeffs[-n_min]; // frequency 0

    CumulativeIntegral result;
    result.partial.assign(n, cplx(0.0));
    result.full = mean * period;
    // S(t) = mean*(t-a) + sum_{freq != 0} c_freq / (i*omega*freq) * (e^{i*omega*freq*(t-a)} - 1)
    double omega = 2.0 * M_PI / period;
    for (int j = 0; j < n; ++j) {
        double theta = omega * period * j / n; // omega*(t_j - a)
        cplx acc = mean * (period * j / static_cast<double>(n));
        for (int m = 0; m < n; ++m) {
            int freq = n_min + m;
            if (freq == 0) continue;
            cplx iw(0.0, omega * freq);
            double phase = freq * theta;
            acc += coeffs[m] / iw * (cplx(std::cos(phase), std::sin(phase)) - 1.0);
        }
        result.partial[j] = acc;
    }
    return result;
}

} // namespace hh
