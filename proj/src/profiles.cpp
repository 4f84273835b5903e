#include "profiles.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace rmcf {

void RadialProfile::validate() const
{
    if (n < 1) throw std::invalid_argument("RadialProfile: n must be >= 1");
    if (r.size() < 5) throw std::invalid_argument("RadialProfile: too few samples");
    if (!(y1 > y0)) throw std::invalid_argument("RadialProfile: empty domain");
    if (half && y0 != 0.0)
        throw std::invalid_argument("RadialProfile: half profile must start at y=0");
    size_t last = r.size() - 1;
    for (size_t i = 0; i <= last; ++i) {
        if (!std::isfinite(r[i])) throw std::invalid_argument("RadialProfile: non-finite value");
        bool tip = (mode == ProfileMode::Compact) && (i == last || (!half && i == 0));
        if (tip) {
            if (r[i] != 0.0) throw std::invalid_argument("RadialProfile: compact ends need r=0");
        } else if (!(r[i] > 0.0)) {
            throw std::invalid_argument("RadialProfile: r must be positive on the open domain");
        }
    }
}

std::vector<Vec2> RadialProfile::meridian() const
{
    std::vector<Vec2> pts;
    if (half) {
        // mirror across y=0
        for (size_t i = r.size(); i-- > 1;) pts.push_back({r[i], -y(i)});
        for (size_t i = 0; i < r.size(); ++i) pts.push_back({r[i], y(i)});
    } else {
        for (size_t i = 0; i < r.size(); ++i) pts.push_back({r[i], y(i)});
    }
    return pts;
}

void QuadrantCurve::validate() const
{
    if (p < 1 || q < 1) throw std::invalid_argument("QuadrantCurve: ranks must be >= 1");
    if (pts.size() < 3) throw std::invalid_argument("QuadrantCurve: too few samples");
    for (const Vec2& v : pts) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y))
            throw std::invalid_argument("QuadrantCurve: non-finite sample");
        if (v.x < -1e-12) throw std::invalid_argument("QuadrantCurve: x must be >= 0");
        if (q >= 2 && v.y < -1e-12) throw std::invalid_argument("QuadrantCurve: y must be >= 0");
    }
    if (end0 == CurveEnd::AxisX && std::abs(pts.front().y) > 1e-9)
        throw std::invalid_argument("QuadrantCurve: start flagged on x-axis but y != 0");
    if (end0 == CurveEnd::AxisY && std::abs(pts.front().x) > 1e-9)
        throw std::invalid_argument("QuadrantCurve: start flagged on y-axis but x != 0");
    if (end1 == CurveEnd::AxisX && std::abs(pts.back().y) > 1e-9)
        throw std::invalid_argument("QuadrantCurve: end flagged on x-axis but y != 0");
    if (end1 == CurveEnd::AxisY && std::abs(pts.back().x) > 1e-9)
        throw std::invalid_argument("QuadrantCurve: end flagged on y-axis but x != 0");
    if (q >= 2 && end0 != CurveEnd::AxisX)
        throw std::invalid_argument("QuadrantCurve: quadrant curve must start on the x-axis");
}

namespace {

const char* kSnapMagic = "RMCFLAB-SNAP v1";

void append_num(std::string& out, double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

const char* mode_token(ProfileMode m)
{
    switch (m) {
        case ProfileMode::Compact: return "radial-compact";
        case ProfileMode::Cylinder: return "radial-cylinder";
        case ProfileMode::Clamped: return "radial-clamped";
    }
    return "radial-compact";
}

const char* end_token(CurveEnd e)
{
    switch (e) {
        case CurveEnd::AxisX: return "ax";
        case CurveEnd::AxisY: return "ay";
        case CurveEnd::Neumann: return "nm";
    }
    return "ay";
}

bool parse_end(const std::string& s, CurveEnd& e)
{
    if (s == "ax") e = CurveEnd::AxisX;
    else if (s == "ay") e = CurveEnd::AxisY;
    else if (s == "nm") e = CurveEnd::Neumann;
    else return false;
    return true;
}

}  // namespace

std::string snapshot_to_string(const RadialProfile& prof)
{
    std::string out = kSnapMagic;
    out += " ";
    out += mode_token(prof.mode);
    out += prof.half ? "-half" : "";
    out += " " + std::to_string(prof.n) + " " + std::to_string(prof.r.size()) + "\n";
    for (size_t i = 0; i < prof.r.size(); ++i) {
        append_num(out, prof.y(i));
        out += " ";
        append_num(out, prof.r[i]);
        out += "\n";
    }
    return out;
}

std::string snapshot_to_string(const QuadrantCurve& curve)
{
    std::string out = kSnapMagic;
    out += " quadrant-";
    out += end_token(curve.end0);
    out += "-";
    out += end_token(curve.end1);
    out += " " + std::to_string(curve.p) + "," + std::to_string(curve.q) + " " +
           std::to_string(curve.pts.size()) + "\n";
    for (const Vec2& v : curve.pts) {
        append_num(out, v.x);
        out += " ";
        append_num(out, v.y);
        out += "\n";
    }
    return out;
}

bool snapshot_parse(const std::string& text, RadialProfile& prof, QuadrantCurve& curve,
                    bool& is_radial, std::string& err)
{
    std::istringstream in(text);
    std::string m1, m2, kind;
    if (!(in >> m1 >> m2 >> kind) || m1 + " " + m2 != kSnapMagic) {
        err = "snapshot: bad magic";
        return false;
    }
    if (kind.rfind("radial-", 0) == 0) {
        is_radial = true;
        std::string rest = kind.substr(7);
        prof = RadialProfile{};
        if (rest.size() >= 5 && rest.substr(rest.size() - 5) == "-half") {
            prof.half = true;
            rest = rest.substr(0, rest.size() - 5);
        }
        if (rest == "compact") prof.mode = ProfileMode::Compact;
        else if (rest == "cylinder") prof.mode = ProfileMode::Cylinder;
        else if (rest == "clamped") prof.mode = ProfileMode::Clamped;
        else {
            err = "snapshot: unknown radial mode " + rest;
            return false;
        }
        size_t count = 0;
        if (!(in >> prof.n >> count) || count < 2) {
            err = "snapshot: bad radial header";
            return false;
        }
        std::vector<double> ys(count);
        prof.r.resize(count);
        for (size_t i = 0; i < count; ++i) {
            if (!(in >> ys[i] >> prof.r[i])) {
                err = "snapshot: truncated radial samples";
                return false;
            }
        }
        prof.y0 = ys.front();
        prof.y1 = ys.back();
        return true;
    }
    if (kind.rfind("quadrant-", 0) == 0) {
        is_radial = false;
        curve = QuadrantCurve{};
        std::string rest = kind.substr(9);
        size_t dash = rest.find('-');
        if (dash == std::string::npos || !parse_end(rest.substr(0, dash), curve.end0) ||
            !parse_end(rest.substr(dash + 1), curve.end1)) {
            err = "snapshot: bad quadrant end flags";
            return false;
        }
        std::string pq;
        size_t count = 0;
        if (!(in >> pq >> count) || count < 2) {
            err = "snapshot: bad quadrant header";
            return false;
        }
        if (std::sscanf(pq.c_str(), "%d,%d", &curve.p, &curve.q) != 2) {
            err = "snapshot: bad p,q";
            return false;
        }
        curve.pts.resize(count);
        for (size_t i = 0; i < count; ++i) {
            if (!(in >> curve.pts[i].x >> curve.pts[i].y)) {
                err = "snapshot: truncated quadrant samples";
                return false;
            }
        }
        double len = polyline_length(curve.pts);
        curve.h_target = len / double(count - 1);
        return true;
    }
    err = "snapshot: unknown kind " + kind;
    return false;
}

}  // namespace rmcf
