#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rmcf {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a);

/// Gauss-Legendre nodes and weights on [-1,1], cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

/// Composite Gauss-Legendre integration of f over [a,b] with panels of
/// width at most panel_width.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    double panel_width, int order = 8);

/// Natural cubic spline through (t_i, v_i); t strictly increasing.
class CubicSpline {
  public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> t, std::vector<double> v);
    double operator()(double t) const;

  private:
    std::vector<double> t_, v_, m_;  // m_: second derivatives
};

/// One adaptive Dormand-Prince 5(4) integration of y' = f(t,y).
/// Records every accepted node. max_err_est is the largest accepted
/// local error estimate (per step, sup over components).
struct OdeResult {
    std::vector<double> t;
    std::vector<std::vector<double>> y;
    double max_err_est = 0.0;
    bool completed = false;
};
OdeResult integrate_dopri5(
    const std::function<void(double, std::span<const double>, std::span<double>)>& f,
    std::vector<double> y0, double t0, double t1, double abs_tol,
    const std::function<bool(double, std::span<const double>)>& stop = nullptr);

/// Fixed-step classic RK4 (used as an independent cross-check).
std::vector<double> integrate_rk4(
    const std::function<void(double, std::span<const double>, std::span<double>)>& f,
    std::vector<double> y0, double t0, double t1, int steps);

// --- polyline helpers ---

double polyline_length(std::span<const Vec2> pts);

/// Distance from p to the segment [a,b].
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

/// Distance from p to an open polyline.
double point_polyline_distance(Vec2 p, std::span<const Vec2> pts);

/// Signed Menger curvature of the circumscribed circle through a,b,c.
/// Positive when the polyline turns left (counterclockwise).
double menger_curvature(Vec2 a, Vec2 b, Vec2 c);

/// Resample an open polyline to m+1 points at uniform arc length using
/// cubic splines in the chord-length parameter; endpoints preserved.
std::vector<Vec2> resample_polyline(std::span<const Vec2> pts, int m);

}  // namespace rmcf
