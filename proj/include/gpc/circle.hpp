#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gpc/exactnum.hpp"

namespace gpc {

// Rational point on the unit circle x^2 + y^2 = 1.
class CirclePoint {
public:
    // Throws NotOnCircle unless x^2 + y^2 == 1 exactly.
    CirclePoint(Rational x, Rational y);

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

    // Same point with the ordinate replaced by |y|.
    CirclePoint canonical() const;

    friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
    friend auto operator<=>(const CirclePoint&, const CirclePoint&) = default;

private:
    Rational x_;
    Rational y_;
};

// Circle points whose abscissae form a nontrivial geometric progression.
class GPSequence {
public:
    // Validates the progression; throws TooShort or InvalidSequence.
    explicit GPSequence(std::vector<CirclePoint> points);

    const Rational& ratio() const { return ratio_; }
    const std::vector<CirclePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    std::vector<Rational> abscissae() const;
    Integer max_height() const;

    // Every ordinate replaced by its absolute value.
    GPSequence canonical() const;

    friend bool operator==(const GPSequence&, const GPSequence&) = default;

private:
    Rational ratio_;
    std::vector<CirclePoint> points_;
};

// t -> (2t/(1+t^2), (1-t^2)/(1+t^2)).
CirclePoint point_from_t(const Rational& t);

// Inverse of point_from_t: t = x/(1+y). Throws PoleOfParametrization at (0,-1).
Rational t_from_point(const CirclePoint& p);

// (x, sqrt(1-x^2)) when 1-x^2 is a rational square.
std::optional<CirclePoint> lift_x(const Rational& x);

// Common abscissa ratio if the points form a nontrivial GP (ratio not in
// {0, 1, -1}, no zero abscissa), otherwise nothing. Ordinate signs are
// irrelevant. Throws TooShort for fewer than two points.
std::optional<Rational> verify_gp(std::span<const CirclePoint> points);

// (x, y) -> (y, x); turns ordinate progressions into abscissa progressions.
std::vector<CirclePoint> swap_axes(std::span<const CirclePoint> points);

} // namespace gpc
