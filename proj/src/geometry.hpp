#ifndef HH_GEOMETRY_HPP
#define HH_GEOMETRY_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hh {

using cplx = std::complex<double>;

enum class CurveKind { disc, ellipse, star, polygon };

// Parametric description of a curve; all smooth kinds live on t in [0, 2*pi).
class CurveModel {
public:
    virtual ~CurveModel() = default;
    virtual cplx point(double t) const = 0;
    virtual cplx derivative(double t, int order) const = 0; // order >= 1
};

struct CurveSpec {
    CurveKind kind = CurveKind::disc;
    cplx center = 0.0;
    double radius = 1.0;      // disc
    double a = 2.0, b = 1.0;  // ellipse semi-axes, a >= b > 0
    double r0 = 1.0, amp = 0.0; // star base radius and amplitude
    int wavenumber = 5;       // star
    std::vector<cplx> vertices; // polygon, counterclockwise
    int n = 256;              // node count (smooth kinds)
    int panels_per_side = 8;  // polygon
    int grading_depth = 6;    // polygon dyadic refinement toward corners

    static CurveSpec disc(cplx center, double radius, int n);
    static CurveSpec ellipse(double a, double b, int n, cplx center = 0.0);
    static CurveSpec star(double r0, double amp, int wavenumber, int n, cplx center = 0.0);
    static CurveSpec polygon(std::vector<cplx> vertices, int panels_per_side, int grading_depth);
};

struct JordanCurve {
    CurveKind kind = CurveKind::disc;
    CurveSpec spec; // as built; offsets of non-disc curves keep the base spec
    std::shared_ptr<const CurveModel> model;
    std::vector<double> t;    // parameter nodes in [0, 2*pi)
    std::vector<cplx> z;      // positions
    std::vector<cplx> dz;     // z'(t)
    std::vector<double> w;    // quadrature weights w.r.t. dt
    std::vector<cplx> tangent; // dz/|dz|
    std::vector<double> s;    // arclength weights |dz|*w
    std::vector<cplx> vertices;     // polygon only
    std::vector<double> corner_t;   // polygon only: parameter of each corner
    std::vector<int> side_start;    // polygon only: first node index of each side
    std::vector<int> panel_start;   // polygon only: first node index of each quadrature panel
    double length = 0.0;
    double signed_area = 0.0;
    std::uint64_t id = 0;

    int size() const { return static_cast<int>(z.size()); }
    bool smooth() const { return kind != CurveKind::polygon; }
    double mean_spacing() const { return length / size(); }
    // Default cutoff for near-boundary handling: five node spacings.
    double near_threshold() const { return 5.0 * mean_spacing(); }
};

enum class PointClass { interior, exterior, near_boundary };

struct EvaluationGrid {
    std::vector<cplx> points;
    std::vector<PointClass> label;
    std::vector<double> distance; // to the discretized curve
};

JordanCurve build_curve(const CurveSpec& spec);

// Normal offset z_eps(t) = z(t) + i*eps*T(t); eps > 0 moves inward.
JordanCurve offset_curve(const JordanCurve& curve, double eps);

EvaluationGrid classify_points(const JordanCurve& curve, const std::vector<cplx>& points,
                               double near_threshold = -1.0);

// Winding number of the closed node polyline about p (1 inside, 0 outside).
int winding_number(const std::vector<cplx>& nodes, cplx p);
double polyline_distance(const std::vector<cplx>& nodes, cplx p);
bool polyline_self_intersects(const std::vector<cplx>& nodes);

bool point_inside(const JordanCurve& curve, cplx p);
double distance_to_curve(const JordanCurve& curve, cplx p);

} // namespace hh

#endif
