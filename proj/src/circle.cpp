#include "gpc/circle.hpp"

#include <algorithm>

#include "gpc/error.hpp"

namespace gpc {

CirclePoint::CirclePoint(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_ * x_ + y_ * y_ != Rational(1)) {
        throw Error(ErrorKind::NotOnCircle, "(" + x_.str() + ", " + y_.str() + ")");
    }
}

CirclePoint CirclePoint::canonical() const { return CirclePoint(x_, y_.abs()); }

GPSequence::GPSequence(std::vector<CirclePoint> points) : points_(std::move(points)) {
    auto ratio = verify_gp(points_);
    if (!ratio) throw Error(ErrorKind::InvalidSequence, "abscissae do not form a nontrivial GP");
    ratio_ = *ratio;
}

std::vector<Rational> GPSequence::abscissae() const {
    std::vector<Rational> xs;
    xs.reserve(points_.size());
    for (const auto& p : points_) xs.push_back(p.x());
    return xs;
}

Integer GPSequence::max_height() const {
    Integer h = 1;
    for (const auto& p : points_) {
        h = std::max({h, height(p.x()), height(p.y())});
    }
    return h;
}

GPSequence GPSequence::canonical() const {
    std::vector<CirclePoint> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_) pts.push_back(p.canonical());
    return GPSequence(std::move(pts));
}

CirclePoint point_from_t(const Rational& t) {
    Rational t2 = t * t;
    Rational denom = Rational(1) + t2;
    return CirclePoint(Rational(2) * t / denom, (Rational(1) - t2) / denom);
}

Rational t_from_point(const CirclePoint& p) {
    Rational denom = Rational(1) + p.y();
    if (denom.is_zero()) throw Error(ErrorKind::PoleOfParametrization, "t is undefined at (0, -1)");
    return p.x() / denom;
}

std::optional<CirclePoint> lift_x(const Rational& x) {
    auto y = rat_sqrt(Rational(1) - x * x);
    if (!y) return std::nullopt;
    return CirclePoint(x, *y);
}

std::optional<Rational> verify_gp(std::span<const CirclePoint> points) {
    if (points.size() < 2) throw Error(ErrorKind::TooShort, "a GP needs at least two points");
    for (const auto& p : points) {
        if (p.x().is_zero()) return std::nullopt;
    }
    Rational ratio = points[1].x() / points[0].x();
    if (ratio == Rational(1) || ratio == Rational(-1)) return std::nullopt;
    for (std::size_t i = 2; i < points.size(); ++i) {
        if (points[i].x() != ratio * points[i - 1].x()) return std::nullopt;
    }
    return ratio;
}

std::vector<CirclePoint> swap_axes(std::span<const CirclePoint> points) {
    std::vector<CirclePoint> out;
    out.reserve(points.size());
    for (const auto& p : points) out.emplace_back(p.y(), p.x());
    return out;
}

} // namespace gpc
