#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "profiles.hpp"

namespace rmcf {

/// Element of the phase space: a closed convex set in R^d with nonempty
/// interior (plus two degenerate test hooks, FullSpace and FlatDisk).
class ConvexShape;

struct BallBody {
    std::vector<double> center;
    double radius = 1.0;
};

/// cross x R^m, the flat factor along the last m coordinates.
struct CylinderBody {
    int axis_rank = 1;
    std::shared_ptr<const ConvexShape> cross;
};

/// { x : sum_i alpha_i^2 x_i^2 <= 1 }, alpha_i the reciprocal semi-axes.
struct EllipsoidBody {
    std::vector<double> alphas;
};

struct HalfSpaceBody {
    std::vector<double> normal;  // unit
    double offset = 0.0;         // { x : <normal, x> <= offset }
};

struct FullSpaceBody {};

/// Flat n-disk { (xi, 0) : |xi| <= radius } in the hyperplane x_d = 0;
/// empty interior, used only for the doubled-measure energy convention.
struct FlatDiskBody {
    double radius = 1.0;
};

struct RadialBody {
    RadialProfile profile;
};

struct QuadrantBody {
    QuadrantCurve curve;
};

enum class ShapeKind { Ball, Cylinder, Ellipsoid, HalfSpace, FullSpace, FlatDisk, Radial, Quadrant };

class ConvexShape {
  public:
    using Body = std::variant<BallBody, CylinderBody, EllipsoidBody, HalfSpaceBody,
                              FullSpaceBody, FlatDiskBody, RadialBody, QuadrantBody>;

    static ConvexShape ball(std::vector<double> center, double radius);
    static ConvexShape ball(int dim, double radius);  // centered at the origin
    static ConvexShape cylinder(ConvexShape cross, int axis_rank);
    static ConvexShape ellipsoid(std::vector<double> alphas);
    static ConvexShape half_space(std::vector<double> normal, double offset);
    static ConvexShape full_space(int dim);
    static ConvexShape flat_disk(int dim, double radius);
    static ConvexShape radial(RadialProfile profile);
    static ConvexShape quadrant(QuadrantCurve curve);

    int dim() const { return dim_; }
    int surface_dim() const { return dim_ - 1; }
    ShapeKind kind() const;
    std::string kind_name() const;

    template <class T>
    const T& get() const
    {
        const T* b = std::get_if<T>(&body_);
        if (!b) throw std::logic_error("ConvexShape: wrong body access");
        return *b;
    }
    template <class T>
    bool is() const
    {
        return std::holds_alternative<T>(body_);
    }

    bool compact() const;
    /// All lengths multiplied by kappa.
    ConvexShape scaled(double kappa) const;

  private:
    ConvexShape(int dim, Body body) : dim_(dim), body_(std::move(body)) {}
    int dim_;
    Body body_;
};

/// shape = core x R^m with m maximal (m = 0 when the shape has no flat
/// factor). Peels Cylinder bodies and zero ellipsoid reciprocals.
struct ProductSplit {
    ConvexShape core;
    int flat_rank = 0;
};
ProductSplit split_product(const ConvexShape& shape);

/// Cohomogeneity-one view of a compact shape without flat factors:
/// body = {(u,v) : (|u|, y(v)) inside the meridian region}, y = |v| for
/// q >= 2 or y = v for q = 1. Analytic for balls and ellipsoids
/// (quarter/half ellipse with semi-axes A, B), sampled otherwise.
struct ReducedView {
    int p = 2;
    int q = 1;
    bool analytic = false;
    double A = 0.0, B = 0.0;     // x-semi-axis, y-semi-axis when analytic
    std::vector<Vec2> boundary;  // meridian polyline when not analytic
};
std::optional<ReducedView> reduced_view(const ConvexShape& shape);

/// Discretize an analytic reduced view into a QuadrantCurve at spacing h.
QuadrantCurve discretize_view(const ReducedView& view, double h);

}  // namespace rmcf
