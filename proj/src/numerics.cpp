#include "numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rmcf {

double norm(Vec2 a) { return std::hypot(a.x, a.y); }

namespace {

GaussRule compute_gauss(int order)
{
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    // Newton iteration on Legendre polynomials, symmetric roots.
    for (int i = 0; i < (order + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order)
{
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss(order)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    double panel_width, int order)
{
    if (b <= a) return 0.0;
    int panels = std::max(1, (int)std::ceil((b - a) / panel_width));
    const GaussRule& rule = gauss_legendre(order);
    double total = 0.0;
    double w = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * w;
        double mid = lo + 0.5 * w, half = 0.5 * w;
        double s = 0.0;
        for (int i = 0; i < order; ++i)
            s += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += s * half;
    }
    return total;
}

CubicSpline::CubicSpline(std::vector<double> t, std::vector<double> v)
    : t_(std::move(t)), v_(std::move(v))
{
    size_t n = t_.size();
    if (n != v_.size() || n < 2) throw std::invalid_argument("spline: bad input");
    m_.assign(n, 0.0);
    if (n == 2) return;
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
    for (size_t i = 1; i + 1 < n; ++i) {
        double h0 = t_[i] - t_[i - 1], h1 = t_[i + 1] - t_[i];
        a[i] = h0 / 6.0;
        b[i] = (h0 + h1) / 3.0;
        c[i] = h1 / 6.0;
        d[i] = (v_[i + 1] - v_[i]) / h1 - (v_[i] - v_[i - 1]) / h0;
    }
    // Thomas solve on the interior (natural BC: m_0 = m_{n-1} = 0).
    for (size_t i = 2; i + 1 < n; ++i) {
        double f = a[i] / b[i - 1];
        b[i] -= f * c[i - 1];
        d[i] -= f * d[i - 1];
    }
    for (size_t i = n - 2; i >= 1; --i) {
        m_[i] = (d[i] - c[i] * m_[i + 1]) / b[i];
        if (i == 1) break;
    }
}

double CubicSpline::operator()(double t) const
{
    size_t n = t_.size();
    size_t j = std::upper_bound(t_.begin(), t_.end(), t) - t_.begin();
    if (j == 0) j = 1;
    if (j >= n) j = n - 1;
    double h = t_[j] - t_[j - 1];
    double u = (t - t_[j - 1]) / h;
    double a = v_[j - 1], b = v_[j];
    double ma = m_[j - 1], mb = m_[j];
    return (1 - u) * a + u * b +
           h * h / 6.0 * ((std::pow(1 - u, 3) - (1 - u)) * ma + (std::pow(u, 3) - u) * mb);
}

OdeResult integrate_dopri5(
    const std::function<void(double, std::span<const double>, std::span<double>)>& f,
    std::vector<double> y0, double t0, double t1, double abs_tol,
    const std::function<bool(double, std::span<const double>)>& stop)
{
    // Dormand-Prince 5(4) coefficients.
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    size_t n = y0.size();
    OdeResult res;
    std::vector<double> y = std::move(y0);
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), yn(n);
    double t = t0;
    double h = (t1 - t0) * 1e-4;
    res.t.push_back(t);
    res.y.push_back(y);

    int max_steps = 2000000;
    while (t < t1 && max_steps-- > 0) {
        h = std::min(h, t1 - t);
        f(t, y, k1);
        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
        f(t + c2 * h, yt, k2);
        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(t + c3 * h, yt, k3);
        for (size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(t + c4 * h, yt, k4);
        for (size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(t + c5 * h, yt, k5);
        for (size_t i = 0; i < n; ++i)
            yt[i] = y[i] +
                    h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        f(t + h, yt, k6);
        for (size_t i = 0; i < n; ++i)
            yn[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        f(t + h, yn, k7);

        double err = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * k7[i]);
            err = std::max(err, std::abs(e));
        }
        if (err <= abs_tol) {
            t += h;
            y = yn;
            res.t.push_back(t);
            res.y.push_back(y);
            res.max_err_est = std::max(res.max_err_est, err);
            if (stop && stop(t, y)) return res;
        }
        double fac = 0.9 * std::pow(abs_tol / std::max(err, 1e-300), 0.2);
        h *= std::clamp(fac, 0.2, 5.0);
        if (!(h > 0.0) || !std::isfinite(h)) return res;
    }
    res.completed = (t >= t1);
    return res;
}

std::vector<double> integrate_rk4(
    const std::function<void(double, std::span<const double>, std::span<double>)>& f,
    std::vector<double> y0, double t0, double t1, int steps)
{
    size_t n = y0.size();
    std::vector<double> y = std::move(y0);
    std::vector<double> k1(n), k2(n), k3(n), k4(n), yt(n);
    double h = (t1 - t0) / steps;
    double t = t0;
    for (int s = 0; s < steps; ++s) {
        f(t, y, k1);
        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + 0.5 * h * k1[i];
        f(t + 0.5 * h, yt, k2);
        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + 0.5 * h * k2[i];
        f(t + 0.5 * h, yt, k3);
        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * k3[i];
        f(t + h, yt, k4);
        for (size_t i = 0; i < n; ++i)
            y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        t += h;
    }
    return y;
}

double polyline_length(std::span<const Vec2> pts)
{
    double L = 0.0;
    for (size_t i = 1; i < pts.size(); ++i) L += norm(pts[i] - pts[i - 1]);
    return L;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b)
{
    Vec2 ab = b - a;
    double len2 = dot(ab, ab);
    double t = len2 > 0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
    return norm(p - (a + ab * t));
}

double point_polyline_distance(Vec2 p, std::span<const Vec2> pts)
{
    double best = norm(p - pts[0]);
    for (size_t i = 1; i < pts.size(); ++i)
        best = std::min(best, point_segment_distance(p, pts[i - 1], pts[i]));
    return best;
}

double menger_curvature(Vec2 a, Vec2 b, Vec2 c)
{
    double la = norm(b - a), lb = norm(c - b), lc = norm(c - a);
    double denom = la * lb * lc;
    if (denom == 0.0) return 0.0;
    return 2.0 * cross(b - a, c - b) / denom;
}

std::vector<Vec2> resample_polyline(std::span<const Vec2> pts, int m)
{
    size_t n = pts.size();
    if (n < 2 || m < 1) throw std::invalid_argument("resample: bad input");
    std::vector<double> s(n, 0.0), xs(n), ys(n);
    for (size_t i = 0; i < n; ++i) {
        if (i > 0) s[i] = s[i - 1] + std::max(norm(pts[i] - pts[i - 1]), 1e-300);
        xs[i] = pts[i].x;
        ys[i] = pts[i].y;
    }
    CubicSpline sx(s, xs), sy(s, ys);
    std::vector<Vec2> out(m + 1);
    for (int j = 0; j <= m; ++j) {
        double sj = s.back() * j / m;
        out[j] = {sx(sj), sy(sj)};
    }
    out.front() = pts.front();
    out.back() = pts.back();
    return out;
}

}  // namespace rmcf
