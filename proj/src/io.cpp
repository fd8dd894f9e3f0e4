#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace hh {

using nlohmann::json;

namespace {

cplx complex_from_json(const json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    require(j.is_array() && j.size() == 2, errc::parse_error,
            "complex values must be [re, im] pairs");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            fail(errc::parse_error, "invalid number '" + item + "' in datum spec");
        }
    }
    return values;
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CurveSpec curve_spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("curve JSON: ") + e.what());
    }
    require(j.contains("kind"), errc::parse_error, "curve JSON needs a 'kind' field");
    std::string kind = j["kind"].get<std::string>();

    CurveSpec spec;
    try {
        if (kind == "disc") {
            spec.kind = CurveKind::disc;
            if (j.contains("center")) spec.center = complex_from_json(j["center"]);
            spec.radius = j.value("radius", 1.0);
            spec.n = j.value("n", 256);
        } else if (kind == "ellipse") {
            spec.kind = CurveKind::ellipse;
            if (j.contains("center")) spec.center = complex_from_json(j["center"]);
            spec.a = j.value("a", 2.0);
            spec.b = j.value("b", 1.0);
            spec.n = j.value("n", 256);
        } else if (kind == "star") {
            spec.kind = CurveKind::star;
            if (j.contains("center")) spec.center = complex_from_json(j["center"]);
            spec.r0 = j.value("r0", 1.0);
            spec.amp = j.value("amp", 0.3);
            spec.wavenumber = j.value("k", 5);
            spec.n = j.value("n", 512);
        } else if (kind == "polygon") {
            spec.kind = CurveKind::polygon;
            require(j.contains("vertices"), errc::parse_error, "polygon JSON needs 'vertices'");
            for (const auto& v : j["vertices"]) spec.vertices.push_back(complex_from_json(v));
            spec.panels_per_side = j.value("panels_per_side", 8);
            spec.grading_depth = j.value("grading_depth", 6);
        } else {
            fail(errc::parse_error, "unknown curve kind '" + kind + "'");
        }
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("curve JSON: ") + e.what());
    }
    return spec;
}

CurveSpec curve_spec_from_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::io_error, "cannot open curve file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return curve_spec_from_json(ss.str());
}

void write_curve_csv(const JordanCurve& curve, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), errc::io_error, "cannot write '" + path + "'");
    out << "t,re_z,im_z,re_dz,im_dz,w\n";
    for (int j = 0; j < curve.size(); ++j) {
        out << format_double(curve.t[j]) << ',' << format_double(curve.z[j].real()) << ','
            << format_double(curve.z[j].imag()) << ',' << format_double(curve.dz[j].real()) << ','
            << format_double(curve.dz[j].imag()) << ',' << format_double(curve.w[j]) << '\n';
    }
}

void write_data_csv(const JordanCurve& curve, const BoundaryFunction& u,
                    const std::string& path) {
    check_binding(curve, u);
    std::ofstream out(path);
    require(out.good(), errc::io_error, "cannot write '" + path + "'");
    out << "t,re_u,im_u\n";
    for (int j = 0; j < curve.size(); ++j) {
        out << format_double(curve.t[j]) << ',' << format_double(u.samples[j].real()) << ','
            << format_double(u.samples[j].imag()) << '\n';
    }
}

BoundaryFunction read_data_csv(const JordanCurve& curve, const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::io_error, "cannot open data file '" + path + "'");
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), errc::parse_error,
            "data CSV is empty");

    BoundaryFunction u;
    u.curve_id = curve.id;
    u.label = path;
    int j = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double t, re, im;
        require(std::sscanf(line.c_str(), "%lf,%lf,%lf", &t, &re, &im) == 3, errc::parse_error,
                "malformed data CSV row '" + line + "'");
        require(j < curve.size(), errc::curve_mismatch, "data CSV has more rows than curve nodes");
        require(std::abs(t - curve.t[j]) <= 1e-9, errc::curve_mismatch,
                "data CSV nodes do not match the curve");
        u.samples.push_back(cplx(re, im));
        ++j;
    }
    require(j == curve.size(), errc::curve_mismatch, "data CSV has fewer rows than curve nodes");
    return u;
}

BoundaryFunction builtin_data(const JordanCurve& curve, const std::string& name,
                              std::uint64_t seed) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);

    if (head == "fourier") {
        int m = static_cast<int>(parse_number_list(args).at(0));
        BoundaryFunction u = sample_fourier(curve, random_fourier(m, seed), name.c_str());
        return u;
    }
    if (head == "rational") {
        std::vector<double> locs = parse_number_list(args);
        require(!locs.empty(), errc::parse_error, "rational datum needs pole locations");
        std::vector<cplx> locations(locs.begin(), locs.end());
        std::vector<cplx> residues(locs.size(), cplx(1.0));
        RationalSplit split = rational_split(make_rational(curve, locations, residues), curve);
        split.u.label = name;
        return split.u;
    }
    if (head == "indicator") {
        std::vector<double> ts = parse_number_list(args);
        require(ts.size() == 2 && ts[0] < ts[1], errc::parse_error,
                "indicator datum needs t1 < t2");
        BoundaryFunction u;
        u.curve_id = curve.id;
        u.label = name;
        u.samples.assign(curve.size(), cplx(0.0));
        for (int j = 0; j < curve.size(); ++j)
            if (curve.t[j] > ts[0] && curve.t[j] < ts[1]) u.samples[j] = 1.0;
        return u;
    }
    fail(errc::parse_error, "unknown builtin datum '" + name + "'");
}

BuiltinSplit builtin_split(const JordanCurve& curve, const std::string& name,
                           std::uint64_t seed) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);

    BuiltinSplit out;
    if (head == "fourier") {
        require(curve.kind == CurveKind::disc && std::abs(curve.spec.center) < 1e-12 &&
                    std::abs(curve.spec.radius - 1.0) < 1e-12,
                errc::invalid_argument, "the fourier split oracle lives on the unit circle");
        int m = static_cast<int>(parse_number_list(args).at(0));
        FourierData data = random_fourier(m, seed);
        FourierSplit split = fourier_split(data);
        out.u = sample_fourier(curve, data, name.c_str());
        out.h = sample_fourier(curve, split.h, "h");
        out.H = sample_fourier(curve, split.H, "H");
        return out;
    }
    if (head == "rational") {
        std::vector<double> locs = parse_number_list(args);
        require(!locs.empty(), errc::parse_error, "rational datum needs pole locations");
        std::vector<cplx> locations(locs.begin(), locs.end());
        std::vector<cplx> residues(locs.size(), cplx(1.0));
        RationalSplit split = rational_split(make_rational(curve, locations, residues), curve);
        out.u = split.u;
        out.h = split.h;
        out.H = split.H;
        out.u.label = name;
        return out;
    }
    fail(errc::invalid_argument, "no oracle split for datum '" + name + "'");
}

} // namespace hh
