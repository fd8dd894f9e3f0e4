#ifndef HH_IO_HPP
#define HH_IO_HPP

#include <string>

#include "cauchy.hpp"
#include "geometry.hpp"
#include "oracle.hpp"

namespace hh {

CurveSpec curve_spec_from_json(const std::string& text);
CurveSpec curve_spec_from_json_file(const std::string& path);

// CSV with columns t,re_z,im_z,re_dz,im_dz,w at full precision.
void write_curve_csv(const JordanCurve& curve, const std::string& path);

// Boundary data CSV with columns t,re_u,im_u; reading checks the nodes
// against the curve.
void write_data_csv(const JordanCurve& curve, const BoundaryFunction& u, const std::string& path);
BoundaryFunction read_data_csv(const JordanCurve& curve, const std::string& path);

// Seeded builtin data: "fourier:M", "rational:a,b,..." (real pole locations,
// unit residues), "indicator:t1,t2".
BoundaryFunction builtin_data(const JordanCurve& curve, const std::string& name,
                              std::uint64_t seed);

// Reference split for the builtins that admit one (fourier, rational).
struct BuiltinSplit {
    BoundaryFunction u, h, H;
};
BuiltinSplit builtin_split(const JordanCurve& curve, const std::string& name, std::uint64_t seed);

std::string format_double(double v); // shortest round-trip decimal form

} // namespace hh

#endif
