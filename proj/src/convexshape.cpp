#include "convexshape.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace rmcf {

ConvexShape ConvexShape::ball(std::vector<double> center, double radius)
{
    if (center.empty()) throw std::invalid_argument("ball: empty center");
    if (!(radius > 0.0)) throw std::invalid_argument("ball: radius must be positive");
    for (double c : center)
        if (!std::isfinite(c)) throw std::invalid_argument("ball: non-finite center");
    int d = (int)center.size();
    return ConvexShape(d, BallBody{std::move(center), radius});
}

ConvexShape ConvexShape::ball(int dim, double radius)
{
    return ball(std::vector<double>(dim, 0.0), radius);
}

ConvexShape ConvexShape::cylinder(ConvexShape cross, int axis_rank)
{
    if (axis_rank < 1) throw std::invalid_argument("cylinder: axis rank must be >= 1");
    int d = cross.dim() + axis_rank;
    return ConvexShape(d, CylinderBody{axis_rank, std::make_shared<ConvexShape>(std::move(cross))});
}

ConvexShape ConvexShape::ellipsoid(std::vector<double> alphas)
{
    int positive = 0;
    for (double a : alphas) {
        if (!(a >= 0.0) || !std::isfinite(a))
            throw std::invalid_argument("ellipsoid: reciprocals must be finite and >= 0");
        if (a > 0.0) ++positive;
    }
    if (positive < 2)
        throw std::invalid_argument("ellipsoid: needs at least two positive reciprocals");
    int d = (int)alphas.size();
    if (d < 2) throw std::invalid_argument("ellipsoid: dimension must be >= 2");
    return ConvexShape(d, EllipsoidBody{std::move(alphas)});
}

ConvexShape ConvexShape::half_space(std::vector<double> normal, double offset)
{
    double len = 0.0;
    for (double v : normal) len += v * v;
    len = std::sqrt(len);
    if (!(len > 0.0)) throw std::invalid_argument("half_space: zero normal");
    for (double& v : normal) v /= len;
    if (!std::isfinite(offset)) throw std::invalid_argument("half_space: bad offset");
    int d = (int)normal.size();
    return ConvexShape(d, HalfSpaceBody{std::move(normal), offset});
}

ConvexShape ConvexShape::full_space(int dim)
{
    if (dim < 1) throw std::invalid_argument("full_space: bad dimension");
    return ConvexShape(dim, FullSpaceBody{});
}

ConvexShape ConvexShape::flat_disk(int dim, double radius)
{
    if (dim < 2) throw std::invalid_argument("flat_disk: dimension must be >= 2");
    if (!(radius > 0.0)) throw std::invalid_argument("flat_disk: radius must be positive");
    return ConvexShape(dim, FlatDiskBody{radius});
}

ConvexShape ConvexShape::radial(RadialProfile profile)
{
    profile.validate();
    return ConvexShape(profile.n + 1, RadialBody{std::move(profile)});
}

ConvexShape ConvexShape::quadrant(QuadrantCurve curve)
{
    curve.validate();
    return ConvexShape(curve.ambient_dim(), QuadrantBody{std::move(curve)});
}

ShapeKind ConvexShape::kind() const
{
    return std::visit(
        [](const auto& b) -> ShapeKind {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, BallBody>) return ShapeKind::Ball;
            else if constexpr (std::is_same_v<T, CylinderBody>) return ShapeKind::Cylinder;
            else if constexpr (std::is_same_v<T, EllipsoidBody>) return ShapeKind::Ellipsoid;
            else if constexpr (std::is_same_v<T, HalfSpaceBody>) return ShapeKind::HalfSpace;
            else if constexpr (std::is_same_v<T, FullSpaceBody>) return ShapeKind::FullSpace;
            else if constexpr (std::is_same_v<T, FlatDiskBody>) return ShapeKind::FlatDisk;
            else if constexpr (std::is_same_v<T, RadialBody>) return ShapeKind::Radial;
            else return ShapeKind::Quadrant;
        },
        body_);
}

std::string ConvexShape::kind_name() const
{
    switch (kind()) {
        case ShapeKind::Ball: return "ball";
        case ShapeKind::Cylinder: return "cylinder";
        case ShapeKind::Ellipsoid: return "ellipsoid";
        case ShapeKind::HalfSpace: return "half_space";
        case ShapeKind::FullSpace: return "full_space";
        case ShapeKind::FlatDisk: return "flat_disk";
        case ShapeKind::Radial: return "radial_profile";
        case ShapeKind::Quadrant: return "quadrant_curve";
    }
    return "?";
}

bool ConvexShape::compact() const
{
    switch (kind()) {
        case ShapeKind::Ball:
        case ShapeKind::FlatDisk: return true;
        case ShapeKind::Ellipsoid: {
            for (double a : get<EllipsoidBody>().alphas)
                if (a == 0.0) return false;
            return true;
        }
        case ShapeKind::Radial: return get<RadialBody>().profile.mode == ProfileMode::Compact;
        case ShapeKind::Quadrant: {
            const QuadrantCurve& c = get<QuadrantBody>().curve;
            return c.end0 != CurveEnd::Neumann && c.end1 != CurveEnd::Neumann;
        }
        default: return false;
    }
}

ConvexShape ConvexShape::scaled(double kappa) const
{
    if (!(kappa > 0.0)) throw std::invalid_argument("scaled: kappa must be positive");
    switch (kind()) {
        case ShapeKind::Ball: {
            BallBody b = get<BallBody>();
            for (double& c : b.center) c *= kappa;
            b.radius *= kappa;
            return ConvexShape(dim_, std::move(b));
        }
        case ShapeKind::Cylinder: {
            const CylinderBody& c = get<CylinderBody>();
            return cylinder(c.cross->scaled(kappa), c.axis_rank);
        }
        case ShapeKind::Ellipsoid: {
            EllipsoidBody e = get<EllipsoidBody>();
            for (double& a : e.alphas) a /= kappa;
            return ConvexShape(dim_, std::move(e));
        }
        case ShapeKind::HalfSpace: {
            HalfSpaceBody h = get<HalfSpaceBody>();
            h.offset *= kappa;
            return ConvexShape(dim_, std::move(h));
        }
        case ShapeKind::FullSpace: return *this;
        case ShapeKind::FlatDisk: {
            FlatDiskBody f = get<FlatDiskBody>();
            f.radius *= kappa;
            return ConvexShape(dim_, std::move(f));
        }
        case ShapeKind::Radial: {
            RadialBody b = get<RadialBody>();
            b.profile.y0 *= kappa;
            b.profile.y1 *= kappa;
            for (double& v : b.profile.r) v *= kappa;
            return ConvexShape(dim_, std::move(b));
        }
        case ShapeKind::Quadrant: {
            QuadrantBody b = get<QuadrantBody>();
            for (Vec2& v : b.curve.pts) v = v * kappa;
            b.curve.h_target *= kappa;
            return ConvexShape(dim_, std::move(b));
        }
    }
    throw std::logic_error("scaled: unreachable");
}

ProductSplit split_product(const ConvexShape& shape)
{
    switch (shape.kind()) {
        case ShapeKind::Cylinder: {
            const CylinderBody& c = shape.get<CylinderBody>();
            ProductSplit inner = split_product(*c.cross);
            inner.flat_rank += c.axis_rank;
            return inner;
        }
        case ShapeKind::Ellipsoid: {
            const EllipsoidBody& e = shape.get<EllipsoidBody>();
            std::vector<double> pos;
            int zeros = 0;
            for (double a : e.alphas) {
                if (a == 0.0) ++zeros;
                else pos.push_back(a);
            }
            if (zeros == 0) return {shape, 0};
            return {ConvexShape::ellipsoid(std::move(pos)), zeros};
        }
        default: return {shape, 0};
    }
}

std::optional<ReducedView> reduced_view(const ConvexShape& shape)
{
    switch (shape.kind()) {
        case ShapeKind::Ball: {
            const BallBody& b = shape.get<BallBody>();
            for (double c : b.center)
                if (c != 0.0) return std::nullopt;
            if (shape.dim() < 2) return std::nullopt;
            ReducedView v;
            v.p = shape.dim() - 1;
            v.q = 1;
            v.analytic = true;
            v.A = v.B = b.radius;
            return v;
        }
        case ShapeKind::Ellipsoid: {
            const EllipsoidBody& e = shape.get<EllipsoidBody>();
            // group reciprocals by value; at most two distinct groups
            std::map<double, int> groups;
            for (double a : e.alphas) groups[a]++;
            if (groups.count(0.0)) return std::nullopt;  // product, split first
            if (groups.size() == 1) {
                ReducedView v;
                v.p = shape.dim() - 1;
                v.q = 1;
                v.analytic = true;
                v.A = v.B = 1.0 / groups.begin()->first;
                return v;
            }
            if (groups.size() != 2) return std::nullopt;
            auto it = groups.begin();
            double a0 = it->first;
            int m0 = it->second;
            ++it;
            double a1 = it->first;
            int m1 = it->second;
            ReducedView v;
            v.analytic = true;
            if (m1 == 1) {
                v.p = m0;
                v.q = 1;
                v.A = 1.0 / a0;
                v.B = 1.0 / a1;
            } else if (m0 == 1) {
                v.p = m1;
                v.q = 1;
                v.A = 1.0 / a1;
                v.B = 1.0 / a0;
            } else {
                v.p = m0;
                v.q = m1;
                v.A = 1.0 / a0;
                v.B = 1.0 / a1;
            }
            if (v.p < 1) return std::nullopt;
            return v;
        }
        case ShapeKind::Radial: {
            const RadialProfile& prof = shape.get<RadialBody>().profile;
            if (prof.mode != ProfileMode::Compact) return std::nullopt;
            ReducedView v;
            v.p = prof.n;
            v.q = 1;
            v.boundary = prof.meridian();
            return v;
        }
        case ShapeKind::Quadrant: {
            const QuadrantCurve& c = shape.get<QuadrantBody>().curve;
            if (c.end0 == CurveEnd::Neumann || c.end1 == CurveEnd::Neumann) return std::nullopt;
            ReducedView v;
            v.p = c.p;
            v.q = c.q;
            if (c.q == 1) {
                v.boundary = c.pts;
            } else {
                v.boundary = c.pts;
            }
            return v;
        }
        default: return std::nullopt;
    }
}

QuadrantCurve discretize_view(const ReducedView& view, double h)
{
    QuadrantCurve out;
    out.p = view.p;
    out.q = view.q;
    out.h_target = h;
    if (view.analytic) {
        double A = view.A, B = view.B;
        // quarter (q>=2) or half (q=1) ellipse, sampled uniformly in a
        // stretched angle so arc spacing stays close to h
        double phi0 = (view.q == 1) ? -M_PI / 2 : 0.0;
        double phi1 = M_PI / 2;
        // estimate arc length
        double arc = 0.0;
        int probe = 512;
        Vec2 prev{A * std::cos(phi0), B * std::sin(phi0)};
        for (int i = 1; i <= probe; ++i) {
            double phi = phi0 + (phi1 - phi0) * i / probe;
            Vec2 cur{A * std::cos(phi), B * std::sin(phi)};
            arc += norm(cur - prev);
            prev = cur;
        }
        int m = std::max(8, (int)std::lround(arc / h));
        std::vector<Vec2> raw;
        raw.reserve(probe + 1);
        for (int i = 0; i <= probe; ++i) {
            double phi = phi0 + (phi1 - phi0) * i / probe;
            raw.push_back({A * std::cos(phi), B * std::sin(phi)});
        }
        out.pts = resample_polyline(raw, m);
        out.end0 = (view.q == 1) ? CurveEnd::AxisY : CurveEnd::AxisX;
        out.end1 = CurveEnd::AxisY;
        // pin the axis endpoints exactly
        if (view.q == 1) out.pts.front() = {0.0, -B};
        else out.pts.front() = {A, 0.0};
        out.pts.back() = {0.0, B};
    } else {
        double arc = polyline_length(view.boundary);
        int m = std::max(8, (int)std::lround(arc / h));
        out.pts = resample_polyline(view.boundary, m);
        out.end0 = (view.q == 1) ? CurveEnd::AxisY : CurveEnd::AxisX;
        out.end1 = CurveEnd::AxisY;
    }
    return out;
}

}  // namespace rmcf
