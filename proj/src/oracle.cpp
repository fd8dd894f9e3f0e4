#include "oracle.hpp"

#include <cmath>
#include <random>

#include "errors.hpp"
#include "quadrature.hpp"
#include "spectral.hpp"

namespace hh {

cplx FourierData::eval(double t) const {
    int m_max = max_frequency();
    cplx acc = 0.0;
    for (int n = -m_max; n <= m_max; ++n)
        acc += coeff(n) * std::polar(1.0, n * t);
    return acc;
}

FourierData random_fourier(int max_frequency, std::uint64_t seed) {
    require(max_frequency >= 0, errc::invalid_argument, "max frequency must be nonnegative");
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    FourierData data;
    data.coeffs.resize(2 * max_frequency + 1);
    for (auto& c : data.coeffs) c = cplx(unit(), unit());
    return data;
}

FourierSplit fourier_split(const FourierData& data) {
    int m_max = data.max_frequency();
    FourierSplit split;
    split.h.coeffs.assign(2 * m_max + 1, cplx(0.0));
    split.H.coeffs.assign(2 * m_max + 1, cplx(0.0));
    for (int n = -m_max; n <= m_max; ++n) {
        if (n >= 0)
            split.h.coeffs[n + m_max] = data.coeff(n);
        else
            split.H.coeffs[n + m_max] = data.coeff(n);
    }
    return split;
}

BoundaryFunction sample_fourier(const JordanCurve& curve, const FourierData& data,
                                const char* label) {
    require(4 * data.max_frequency() <= curve.size(), errc::invalid_argument,
            "fourier data exceeds the anti-aliasing budget of the curve");
    BoundaryFunction u;
    u.curve_id = curve.id;
    u.label = label;
    u.samples.resize(curve.size());
    for (int j = 0; j < curve.size(); ++j) u.samples[j] = data.eval(curve.t[j]);
    return u;
}

cplx RationalData::eval(cplx w) const {
    cplx acc = 0.0;
    for (const Pole& p : poles) acc += p.residue / (w - p.location);
    return acc;
}

RationalData make_rational(const JordanCurve& curve, const std::vector<cplx>& locations,
                           const std::vector<cplx>& residues) {
    require(locations.size() == residues.size(), errc::invalid_argument,
            "pole/residue count mismatch");
    RationalData data;
    double guard = 3.0 * curve.mean_spacing();
    for (size_t i = 0; i < locations.size(); ++i) {
        require(distance_to_curve(curve, locations[i]) > guard, errc::pole_on_curve,
                "pole lies too close to the curve");
        data.poles.push_back({locations[i], residues[i], point_inside(curve, locations[i])});
    }
    return data;
}

RationalSplit rational_split(const RationalData& data, const JordanCurve& curve) {
    RationalSplit split;
    split.u.curve_id = split.h.curve_id = split.H.curve_id = curve.id;
    split.u.samples.assign(curve.size(), cplx(0.0));
    split.h.samples.assign(curve.size(), cplx(0.0));
    split.H.samples.assign(curve.size(), cplx(0.0));
    for (int j = 0; j < curve.size(); ++j) {
        for (const auto& p : data.poles) {
            cplx term = p.residue / (curve.z[j] - p.location);
            split.u.samples[j] += term;
            (p.interior ? split.H.samples[j] : split.h.samples[j]) += term;
        }
    }
    return split;
}

BrutePvResult brute_pv(const JordanCurve& curve, const BoundaryFunction& u, int node,
                       const std::vector<double>& deltas, double tol) {
    check_binding(curve, u);
    require(curve.smooth(), errc::polygon_not_supported, "brute PV requires a smooth curve");
    require(node >= 0 && node < curve.size(), errc::invalid_argument, "node index out of range");
    require(deltas.size() >= 2, errc::invalid_argument, "need at least two exclusion radii");

    // Trigonometric interpolant of the samples drives the off-node evaluation.
    std::vector<cplx> coeffs = fourier_coefficients(u.samples);
    double tj = curve.t[node];
    cplx zj = curve.z[node];
    auto integrand = [&](double t) {
        cplx w = curve.model->point(t);
        cplx dw = curve.model->derivative(t, 1);
        return fourier_eval(coeffs, t) * dw / (w - zj);
    };

    BrutePvResult result;
    for (double delta : deltas) {
        cplx v = adaptive_simpson(integrand, tj + delta, tj + 2.0 * M_PI - delta, tol);
        result.excluded.push_back(v / cplx(0.0, 2.0 * M_PI));
    }

    // Neville extrapolation of the exclusion values to delta = 0.
    std::vector<cplx> table = result.excluded;
    std::vector<double> x(deltas.begin(), deltas.end());
    int m = static_cast<int>(table.size());
    for (int level = 1; level < m; ++level)
        for (int i = 0; i < m - level; ++i)
            table[i] = (table[i + 1] * x[i] - table[i] * x[i + level]) / (x[i] - x[i + level]);

    cplx last_pair = result.excluded[m - 1];
    double step = std::abs(result.excluded[m - 2] - result.excluded[m - 1]);
    require(std::abs(table[0] - last_pair) <= 10.0 * step + 1e-6, errc::non_convergent,
            "principal-value extrapolation did not settle");

    result.value = table[0] + 0.5 * u.samples[node];
    return result;
}

} // namespace hh
