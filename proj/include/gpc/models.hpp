#pragma once

#include <array>
#include <optional>

#include "gpc/ec.hpp"
#include "gpc/exactnum.hpp"

namespace gpc {

struct QuarticPoint {
    Rational t;
    Rational w;
    friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

// w^2 = a4 t^4 + a3 t^3 + a2 t^2 + a1 t + a0 with a marked rational point.
class QuarticCurve {
public:
    using Coefficients = std::array<Rational, 5>; // a4, a3, a2, a1, a0

    // Throws PointNotOnCurve if the base is off the curve, ExceptionalPoint if
    // its w is zero, SingularQuartic if the quartic has a repeated root.
    QuarticCurve(Coefficients coeffs, QuarticPoint base);

    const Coefficients& coeffs() const { return coeffs_; }
    const QuarticPoint& base() const { return base_; }

    Rational eval(const Rational& t) const;
    bool contains(const QuarticPoint& p) const { return p.w * p.w == eval(p.t); }

    // Classical invariants of the binary quartic; 4I^3 - J^2 = 27 * disc.
    Rational invariant_i() const;
    Rational invariant_j() const;
    Rational discriminant() const;

private:
    Coefficients coeffs_;
    QuarticPoint base_;
};

// Birational map between a quartic with a rational point and a short
// Weierstrass model.
//
// The base is moved to t = 0 and the quartic becomes v^2 = a u^4 + b u^3 +
// c u^2 + d u + q^2 with q = -w0. The standard substitution
//   x = (2q(v+q) + d u)/u^2,
//   y = (4q^2(v+q) + 2q(d u + c u^2) - d^2 u^2/(2q))/u^3
// lands on y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, after which the
// square is completed and the x^2 term removed. With q = -w0 the reflected
// base (t0, -w0) is the point sent to the identity, while the base itself
// has an affine image.
class QuarticReduction {
public:
    explicit QuarticReduction(const QuarticCurve& quartic);

    const QuarticCurve& quartic() const { return quartic_; }
    const WeierstrassCurve& curve() const { return curve_; }

    // The quartic point that corresponds to the identity: (t0, -w0).
    QuarticPoint marked_point() const;

    // Throws PointNotOnCurve.
    ECPoint to_weierstrass(const QuarticPoint& p) const;

    // Identity goes to marked_point(); points with vanishing long-form
    // ordinate are exceptional and give nothing. Throws PointNotOnCurve.
    std::optional<QuarticPoint> to_quartic(const ECPoint& p) const;

private:
    struct Data {
        Rational t0, q, b, c, d;
        Rational a1, a2, a3;
        Rational shift; // x_short = x_long + shift
    };
    static Data derive(const QuarticCurve& quartic);
    static WeierstrassCurve build_curve(const Data& data, const Rational& a);

    QuarticCurve quartic_;
    Data data_;
    WeierstrassCurve curve_;
};

WeierstrassCurve quartic_to_weierstrass(const QuarticCurve& quartic);
ECPoint q2w_point(const QuarticCurve& quartic, const QuarticPoint& p);
std::optional<QuarticPoint> w2q_point(const QuarticCurve& quartic, const ECPoint& p);

// lambda > 0 with (x, y) -> (lambda^2 x, lambda^3 y) carrying `from` onto `to`.
// Solved exactly from the coefficient ratios.
std::optional<Rational> find_iso(const WeierstrassCurve& from, const WeierstrassCurve& to);

// Twisted Huff curve t(s^2+1) = r^2 s(t^2+1) and its Legendre model
// y^2 = x(x-1)(x-r^4).
class HuffParams {
public:
    // Throws DegenerateRatio for r in {0, 1, -1}.
    explicit HuffParams(Rational r);

    const Rational& r() const { return r_; }
    WeierstrassCurve weierstrass() const;

private:
    Rational r_;
};

struct HuffPoint {
    Rational s;
    Rational t;
    friend bool operator==(const HuffPoint&, const HuffPoint&) = default;
};

bool huff_contains(const HuffParams& params, const HuffPoint& p);

// Throws PointNotOnCurve, or ExceptionalPoint where r^2 s = t.
ECPoint huff_to_w(const HuffParams& params, const HuffPoint& p);

// Throws ExceptionalPoint for the identity and for y = 0, PointNotOnCurve.
HuffPoint w_to_huff(const HuffParams& params, const ECPoint& p);

// Projective point on x1^2 + y1^2 = z^2, r^2 x1^2 + y2^2 = z^2, scaled to z = 1.
struct QuadricPoint {
    Rational x1, y1, y2, z;
    friend bool operator==(const QuadricPoint&, const QuadricPoint&) = default;
};

bool quadric_contains(const Rational& r, const QuadricPoint& p);

// y^2 = x(x-4)(x-4r^2), the Weierstrass model of the quadric intersection.
WeierstrassCurve quadric_curve(const Rational& r);

// Image of a point of quadric_curve(r) on the quadric intersection; nothing on
// the exceptional set (identity, 2-torsion, x1 = 0). Throws PointNotOnCurve,
// DegenerateRatio.
std::optional<QuadricPoint> er_to_quadric(const Rational& r, const ECPoint& p);

} // namespace gpc
