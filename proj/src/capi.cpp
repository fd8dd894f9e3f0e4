#include "hhdec.h"

#include <cmath>
#include <cstring>
#include <string>

#include "cauchy.hpp"
#include "decomp.hpp"
#include "dirichlet.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "szego.hpp"

struct hhdec_curve {
    hh::JordanCurve curve;
};

struct hhdec_data {
    hh::BoundaryFunction data;
};

namespace {

thread_local std::string g_last_error;

hhdec_status map_errc(hh::errc code) {
    switch (code) {
        case hh::errc::invalid_argument: return HHDEC_ERR_INVALID_ARGUMENT;
        case hh::errc::invalid_spec: return HHDEC_ERR_INVALID_SPEC;
        case hh::errc::parse_error: return HHDEC_ERR_PARSE;
        case hh::errc::io_error: return HHDEC_ERR_IO;
        case hh::errc::offset_too_large: return HHDEC_ERR_OFFSET_TOO_LARGE;
        case hh::errc::point_not_interior: return HHDEC_ERR_POINT_NOT_INTERIOR;
        case hh::errc::point_not_exterior: return HHDEC_ERR_POINT_NOT_EXTERIOR;
        case hh::errc::curve_mismatch: return HHDEC_ERR_CURVE_MISMATCH;
        case hh::errc::polygon_not_supported: return HHDEC_ERR_POLYGON_UNSUPPORTED;
        case hh::errc::input_not_hardy: return HHDEC_ERR_INPUT_NOT_HARDY;
        case hh::errc::path_leaves_domain: return HHDEC_ERR_PATH_LEAVES_DOMAIN;
        case hh::errc::data_not_real: return HHDEC_ERR_DATA_NOT_REAL;
        case hh::errc::not_a_disc: return HHDEC_ERR_NOT_A_DISC;
        case hh::errc::pole_on_curve: return HHDEC_ERR_POLE_ON_CURVE;
        case hh::errc::cap_too_short: return HHDEC_ERR_CAP_TOO_SHORT;
        case hh::errc::solver_failure: return HHDEC_ERR_SOLVER;
        case hh::errc::non_convergent: return HHDEC_ERR_NON_CONVERGENT;
        case hh::errc::internal: return HHDEC_ERR_INTERNAL;
    }
    return HHDEC_ERR_INTERNAL;
}

template <class Fn>
hhdec_status guarded(Fn&& fn) {
    try {
        fn();
        return HHDEC_OK;
    } catch (const hh::Error& e) {
        g_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HHDEC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return HHDEC_ERR_INTERNAL;
    }
}

hhdec_data* wrap(hh::BoundaryFunction data) {
    return new hhdec_data{std::move(data)};
}

void require_handle(const void* p, const char* what) {
    hh::require(p != nullptr, hh::errc::invalid_argument, std::string(what) + " is null");
}

hh::CurveSpec spec_with_override(const std::string& path, int n_override) {
    hh::CurveSpec spec = hh::curve_spec_from_json_file(path);
    if (n_override > 0) {
        if (spec.kind == hh::CurveKind::polygon)
            spec.panels_per_side = n_override;
        else
            spec.n = n_override;
    }
    return spec;
}

} // namespace

extern "C" {

const char* hhdec_last_error(void) { return g_last_error.c_str(); }

const char* hhdec_version(void) { return "hhdec 1.0.0"; }

hhdec_status hhdec_curve_from_json(const char* json_text, hhdec_curve** out) {
    return guarded([&] {
        require_handle(json_text, "json text");
        require_handle(out, "output handle");
        *out = new hhdec_curve{hh::build_curve(hh::curve_spec_from_json(json_text))};
    });
}

hhdec_status hhdec_curve_from_json_file(const char* path, hhdec_curve** out) {
    return hhdec_curve_from_json_file_n(path, 0, out);
}

hhdec_status hhdec_curve_from_json_file_n(const char* path, int n_override, hhdec_curve** out) {
    return guarded([&] {
        require_handle(path, "path");
        require_handle(out, "output handle");
        *out = new hhdec_curve{hh::build_curve(spec_with_override(path, n_override))};
    });
}

void hhdec_curve_free(hhdec_curve* curve) { delete curve; }

int hhdec_curve_size(const hhdec_curve* curve) { return curve ? curve->curve.size() : 0; }

double hhdec_curve_length(const hhdec_curve* curve) { return curve ? curve->curve.length : 0.0; }

hhdec_status hhdec_curve_nodes(const hhdec_curve* curve, double* t, double* re_z, double* im_z,
                               double* re_dz, double* im_dz, double* w) {
    return guarded([&] {
        require_handle(curve, "curve");
        for (int j = 0; j < curve->curve.size(); ++j) {
            if (t) t[j] = curve->curve.t[j];
            if (re_z) re_z[j] = curve->curve.z[j].real();
            if (im_z) im_z[j] = curve->curve.z[j].imag();
            if (re_dz) re_dz[j] = curve->curve.dz[j].real();
            if (im_dz) im_dz[j] = curve->curve.dz[j].imag();
            if (w) w[j] = curve->curve.w[j];
        }
    });
}

hhdec_status hhdec_curve_offset(const hhdec_curve* curve, double eps, hhdec_curve** out) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(out, "output handle");
        *out = new hhdec_curve{hh::offset_curve(curve->curve, eps)};
    });
}

hhdec_status hhdec_curve_write_csv(const hhdec_curve* curve, const char* path) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(path, "path");
        hh::write_curve_csv(curve->curve, path);
    });
}

hhdec_status hhdec_curve_classify(const hhdec_curve* curve, int npts, const double* re,
                                  const double* im, double near_threshold, int* labels,
                                  double* distance) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(re, "points");
        require_handle(im, "points");
        std::vector<hh::cplx> pts(npts);
        for (int i = 0; i < npts; ++i) pts[i] = hh::cplx(re[i], im[i]);
        hh::EvaluationGrid grid = hh::classify_points(curve->curve, pts, near_threshold);
        for (int i = 0; i < npts; ++i) {
            if (labels) labels[i] = static_cast<int>(grid.label[i]);
            if (distance) distance[i] = grid.distance[i];
        }
    });
}

hhdec_status hhdec_data_from_csv(const hhdec_curve* curve, const char* path, hhdec_data** out) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(path, "path");
        require_handle(out, "output handle");
        *out = wrap(hh::read_data_csv(curve->curve, path));
    });
}

hhdec_status hhdec_data_builtin(const hhdec_curve* curve, const char* name,
                                unsigned long long seed, hhdec_data** out) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(name, "datum name");
        require_handle(out, "output handle");
        *out = wrap(hh::builtin_data(curve->curve, name, seed));
    });
}

hhdec_status hhdec_data_from_values(const hhdec_curve* curve, const double* re, const double* im,
                                    hhdec_data** out) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(re, "values");
        require_handle(out, "output handle");
        hh::BoundaryFunction u;
        u.curve_id = curve->curve.id;
        u.samples.resize(curve->curve.size());
        for (int j = 0; j < curve->curve.size(); ++j)
            u.samples[j] = hh::cplx(re[j], im ? im[j] : 0.0);
        *out = wrap(std::move(u));
    });
}

void hhdec_data_free(hhdec_data* data) { delete data; }

int hhdec_data_size(const hhdec_data* data) { return data ? data->data.size() : 0; }

hhdec_status hhdec_data_values(const hhdec_data* data, double* re, double* im) {
    return guarded([&] {
        require_handle(data, "data");
        for (int j = 0; j < data->data.size(); ++j) {
            if (re) re[j] = data->data.samples[j].real();
            if (im) im[j] = data->data.samples[j].imag();
        }
    });
}

hhdec_status hhdec_data_write_csv(const hhdec_curve* curve, const hhdec_data* data,
                                  const char* path) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(data, "data");
        require_handle(path, "path");
        hh::write_data_csv(curve->curve, data->data, path);
    });
}

hhdec_status hhdec_oracle_split(const hhdec_curve* curve, const char* name,
                                unsigned long long seed, hhdec_data** u, hhdec_data** h,
                                hhdec_data** H) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(name, "datum name");
        hh::BuiltinSplit split = hh::builtin_split(curve->curve, name, seed);
        if (u) *u = wrap(std::move(split.u));
        if (h) *h = wrap(std::move(split.h));
        if (H) *H = wrap(std::move(split.H));
    });
}

hhdec_status hhdec_decompose(const hhdec_curve* curve, const hhdec_data* u, hhdec_data** h,
                             hhdec_data** H, hhdec_decomp_diag* diag) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(u, "data");
        hh::HardyDecomposition d = hh::decompose(curve->curve, u->data);
        if (diag) {
            diag->residual = d.residual;
            diag->projection_defect = d.projection_defect;
            diag->exterior_defect = d.exterior_defect;
            // Probe the jump at the node farthest from any corner.
            const hh::JordanCurve& c = curve->curve;
            int node = c.size() / 2;
            if (!c.smooth()) {
                double best = -1.0;
                for (int j = 0; j < c.size(); ++j) {
                    double dmin = 1e300;
                    for (const hh::cplx& v : c.vertices)
                        dmin = std::min(dmin, std::abs(c.z[j] - v));
                    if (dmin > best) {
                        best = dmin;
                        node = j;
                    }
                }
            }
            auto jumps = hh::plemelj_jump(c, u->data, node, {1e-3});
            diag->jump_error = jumps.front().error;
        }
        if (h) *h = wrap(std::move(d.h));
        if (H) *H = wrap(std::move(d.H));
    });
}

hhdec_status hhdec_cauchy_interior(const hhdec_curve* curve, const hhdec_data* u, double re_z,
                                   double im_z, double* re_out, double* im_out) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(u, "data");
        hh::cplx v = hh::cauchy_interior(curve->curve, u->data, hh::cplx(re_z, im_z));
        if (re_out) *re_out = v.real();
        if (im_out) *im_out = v.imag();
    });
}

hhdec_status hhdec_cauchy_exterior(const hhdec_curve* curve, const hhdec_data* u, double re_z,
                                   double im_z, double* re_out, double* im_out) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(u, "data");
        hh::cplx v = hh::cauchy_exterior(curve->curve, u->data, hh::cplx(re_z, im_z));
        if (re_out) *re_out = v.real();
        if (im_out) *im_out = v.imag();
    });
}

hhdec_status hhdec_cauchy_boundary(const hhdec_curve* curve, const hhdec_data* u,
                                   hhdec_data** out) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(u, "data");
        require_handle(out, "output handle");
        *out = wrap(hh::cauchy_boundary(curve->curve, u->data));
    });
}

hhdec_status hhdec_plemelj_jump(const hhdec_curve* curve, const hhdec_data* u, int node,
                                int ndeltas, const double* deltas, double* re_jump,
                                double* im_jump, double* abs_err) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(u, "data");
        require_handle(deltas, "deltas");
        std::vector<double> ds(deltas, deltas + ndeltas);
        auto jumps = hh::plemelj_jump(curve->curve, u->data, node, ds);
        for (int i = 0; i < ndeltas; ++i) {
            if (re_jump) re_jump[i] = jumps[i].jump.real();
            if (im_jump) im_jump[i] = jumps[i].jump.imag();
            if (abs_err) abs_err[i] = jumps[i].error;
        }
    });
}

hhdec_status hhdec_brute_pv(const hhdec_curve* curve, const hhdec_data* u, int node,
                            double* re_out, double* im_out) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(u, "data");
        hh::BrutePvResult r = hh::brute_pv(curve->curve, u->data, node);
        if (re_out) *re_out = r.value.real();
        if (im_out) *im_out = r.value.imag();
    });
}

hhdec_status hhdec_antiderivative(const hhdec_curve* curve, const hhdec_data* h,
                                  hhdec_data** boundary, hhdec_antider_diag* diag) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(h, "data");
        const hh::JordanCurve& c = curve->curve;
        hh::AntiderivativeResult r = hh::antiderivative_boundary(c, h->data);
        if (diag) {
            diag->endpoint_residual = r.endpoint_residual;
            diag->hardy_defect = r.hardy_defect;
            diag->interior_rel_error = 0.0;
            if (c.smooth()) {
                // Probe the derivative identity halfway toward the centroid.
                hh::cplx centroid = 0.0;
                for (int j = 0; j < c.size(); ++j) centroid += c.z[j];
                centroid /= static_cast<double>(c.size());
                hh::cplx zp = centroid + 0.25 * (c.z[c.size() / 4] - centroid);
                hh::InteriorAntiderivative probe =
                    hh::antiderivative_interior(c, h->data, zp, 1e-4);
                diag->interior_rel_error = probe.rel_error;
            }
        }
        if (boundary) {
            hh::BoundaryFunction out;
            out.curve_id = c.id;
            out.samples = std::move(r.boundary);
            *boundary = wrap(std::move(out));
        }
    });
}

hhdec_status hhdec_dirichlet_disc(const hhdec_curve* curve, const hhdec_data* u, int npts,
                                  const double* re_z, const double* im_z, double* method1,
                                  double* method2, double* abs_diff) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(u, "data");
        require_handle(re_z, "points");
        require_handle(im_z, "points");
        hh::require_real(u->data);
        std::vector<hh::cplx> pts(npts);
        for (int i = 0; i < npts; ++i) pts[i] = hh::cplx(re_z[i], im_z[i]);
        hh::HarmonicField f1 = hh::dirichlet_disc(curve->curve, u->data, pts);
        hh::HarmonicField f2 = hh::dirichlet_disc_real(curve->curve, u->data, pts);
        for (int i = 0; i < npts; ++i) {
            if (method1) method1[i] = f1.values[i].real();
            if (method2) method2[i] = f2.values[i].real();
            if (abs_diff) abs_diff[i] = std::abs(f1.values[i] - f2.values[i]);
        }
    });
}

hhdec_status hhdec_szego_project(const hhdec_curve* curve, const hhdec_data* u, hhdec_data** out,
                                 hhdec_szego_diag* diag) {
    return guarded([&] {
        require_handle(curve, "curve");
        require_handle(u, "data");
        const hh::JordanCurve& c = curve->curve;
        hh::SzegoProjector projector(c);
        hh::BoundaryFunction pu = projector.project(c, u->data);
        if (diag) {
            diag->ks_skew_defect = projector.ks().skew_defect();
            diag->ks_max_abs = projector.ks().max_abs();
            hh::BoundaryFunction ppu = projector.project(c, pu);
            double nu = std::max(hh::boundary_norm(c, u->data), 1e-300);
            diag->idempotence = 0.0;
            for (int j = 0; j < c.size(); ++j)
                diag->idempotence += std::norm(ppu.samples[j] - pu.samples[j]) * c.s[j];
            diag->idempotence = std::sqrt(diag->idempotence) / nu;
            // Self-adjointness against a fixed band-limited probe.
            hh::BoundaryFunction v =
                hh::sample_fourier(c, hh::random_fourier(std::min(8, c.size() / 4), 12345), "v");
            hh::BoundaryFunction pv = projector.project(c, v);
            hh::cplx lhs = hh::boundary_inner(c, pu, v);
            hh::cplx rhs = hh::boundary_inner(c, u->data, pv);
            double nv = std::max(hh::boundary_norm(c, v), 1e-300);
            diag->self_adjointness = std::abs(lhs - rhs) / (nu * nv);
        }
        if (out) *out = wrap(std::move(pu));
    });
}

hhdec_status hhdec_szego_pseudolocal(const char* curve_json, double t1, double t2,
                                     const char* datum, hhdec_pseudolocal_report* report) {
    return guarded([&] {
        require_handle(curve_json, "curve json");
        require_handle(datum, "datum");
        require_handle(report, "report");
        hh::CurveSpec spec = hh::curve_spec_from_json(curve_json);

        std::string name(datum);
        std::function<hh::cplx(hh::cplx)> h_local;
        if (name == "indicator") {
            h_local = [](hh::cplx) { return hh::cplx(1.0); };
        } else if (name.rfind("monomial:", 0) == 0) {
            int k = std::stoi(name.substr(9));
            h_local = [k](hh::cplx w) { return std::pow(w, k); };
        } else if (name.rfind("rational:", 0) == 0) {
            double a = std::stod(name.substr(9));
            h_local = [a](hh::cplx w) { return 1.0 / (w - a); };
        } else {
            hh::fail(hh::errc::parse_error, "unknown pseudolocal datum '" + name + "'");
        }

        hh::PseudolocalReport r = hh::pseudolocal_experiment(spec, t1, t2, h_local);
        report->n_coarse = r.n_coarse;
        report->n_fine = r.n_fine;
        report->mid_coarse = r.mid_coarse;
        report->mid_fine = r.mid_fine;
        report->end_coarse = r.end_coarse;
        report->end_fine = r.end_fine;
        report->mid_ratio = r.mid_ratio;
        report->end_ratio = r.end_ratio;
        report->certified = r.certified ? 1 : 0;
    });
}

} // extern "C"
