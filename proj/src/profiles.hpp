#pragma once

#include <string>
#include <vector>

#include "numerics.hpp"

namespace rmcf {

/// Graph representation r(y) of an O(n)xO(1)-symmetric hypersurface in
/// R^{n+1}: the body is {(u,y) : |u| <= r(y)}.
enum class ProfileMode {
    Compact,   // r -> 0 at the domain ends (caps)
    Cylinder,  // Neumann ends, body extends as a straight cylinder beyond
    Clamped,   // Dirichlet ends, r fixed
};

struct RadialProfile {
    int n = 2;  // hypersurface dimension, ambient R^{n+1}
    ProfileMode mode = ProfileMode::Compact;
    bool half = false;  // stored over [0, y1] with even symmetry at y=0
    double y0 = 0.0;
    double y1 = 0.0;
    std::vector<double> r;

    double dy() const { return (y1 - y0) / (double(r.size()) - 1.0); }
    double y(size_t i) const { return y0 + dy() * double(i); }
    void validate() const;  // throws std::invalid_argument

    /// Boundary as a meridian polyline in the (x=radius, y) half-plane,
    /// ordered from low y to high y. Compact profiles include the tips.
    std::vector<Vec2> meridian() const;
};

/// Arc-length sampled generating curve of an O(p)xO(q)-symmetric
/// hypersurface in R^{p+q}. Coordinates: x = |u| (u in R^p), and
/// y = |v| for q >= 2 (first quadrant) or y = v in R for q = 1.
enum class CurveEnd {
    AxisX,    // endpoint on y = 0, tangent parallel to the y-axis (q >= 2)
    AxisY,    // endpoint on x = 0, tangent parallel to the x-axis
    Neumann,  // truncated end, mirror across the horizontal line y = const
};

struct QuadrantCurve {
    int p = 2;
    int q = 1;
    CurveEnd end0 = CurveEnd::AxisY;
    CurveEnd end1 = CurveEnd::AxisY;
    std::vector<Vec2> pts;  // ordered so the enclosed region lies to the left
    double h_target = 0.0;

    int ambient_dim() const { return p + q; }
    int surface_dim() const { return p + q - 1; }
    void validate() const;
};

/// Versioned snapshot block (bit-exact round trip).
std::string snapshot_to_string(const RadialProfile& prof);
std::string snapshot_to_string(const QuadrantCurve& curve);
bool snapshot_parse(const std::string& text, RadialProfile& prof, QuadrantCurve& curve,
                    bool& is_radial, std::string& err);

}  // namespace rmcf
