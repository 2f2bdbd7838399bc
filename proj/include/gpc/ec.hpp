#pragma once

#include <optional>
#include <variant>

#include "gpc/exactnum.hpp"

namespace gpc {

// Affine point (x, y) or the point at infinity.
class ECPoint {
public:
    ECPoint() = default; // identity
    ECPoint(Rational x, Rational y) : affine_(std::in_place, std::move(x), std::move(y)) {}

    static ECPoint identity() { return ECPoint(); }

    bool is_identity() const { return !affine_.has_value(); }
    // Only valid on affine points.
    const Rational& x() const { return affine_->x; }
    const Rational& y() const { return affine_->y; }

    ECPoint negated() const { return is_identity() ? *this : ECPoint(x(), -y()); }

    friend bool operator==(const ECPoint&, const ECPoint&) = default;

private:
    struct Affine {
        Rational x;
        Rational y;
        Affine(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
        friend bool operator==(const Affine&, const Affine&) = default;
    };
    std::optional<Affine> affine_;
};

// y^2 = x^3 + a2 x^2 + a4 x + a6. Construction rejects singular curves.
class WeierstrassCurve {
public:
    WeierstrassCurve(Rational a2, Rational a4, Rational a6);

    const Rational& a2() const { return a2_; }
    const Rational& a4() const { return a4_; }
    const Rational& a6() const { return a6_; }

    Rational rhs(const Rational& x) const { return ((x + a2_) * x + a4_) * x + a6_; }
    const Rational& discriminant() const { return disc_; }
    Rational j_invariant() const;

    friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
        return a.a2_ == b.a2_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
    }

private:
    Rational a2_, a4_, a6_;
    Rational disc_;
};

// Discriminant of y^2 = x^3 + a2 x^2 + a4 x + a6 (zero iff singular).
Rational weierstrass_discriminant(const Rational& a2, const Rational& a4, const Rational& a6);

bool ec_on_curve(const WeierstrassCurve& curve, const ECPoint& p);

// Chord-and-tangent addition. Throws PointNotOnCurve.
ECPoint ec_add(const WeierstrassCurve& curve, const ECPoint& p, const ECPoint& q);

// k-fold multiple via double-and-add; negative k multiplies the negation.
ECPoint ec_mul(const WeierstrassCurve& curve, const Integer& k, const ECPoint& p);

struct Torsion {
    int order;
    friend bool operator==(const Torsion&, const Torsion&) = default;
};
struct InfiniteOrder {
    friend bool operator==(const InfiniteOrder&, const InfiniteOrder&) = default;
};
using PointOrder = std::variant<Torsion, InfiniteOrder>;

// Over Q a torsion point has order in {1..10, 12} (Mazur), so a point with
// nP != O for n = 1..12 has infinite order.
PointOrder ec_classify(const WeierstrassCurve& curve, const ECPoint& p);

inline bool is_infinite_order(const PointOrder& o) { return std::holds_alternative<InfiniteOrder>(o); }

// Short model y^2 = x^3 + A x + B reached by x -> x + a2/3.
struct ShortForm {
    WeierstrassCurve curve;
    Rational shift; // x_short = x + shift

    ECPoint to_short(const ECPoint& p) const;
    ECPoint from_short(const ECPoint& p) const;
};

ShortForm short_form(const WeierstrassCurve& curve);

// The scaling (x, y) -> (lambda^2 x, lambda^3 y).
ECPoint scale_point(const ECPoint& p, const Rational& lambda);

} // namespace gpc
