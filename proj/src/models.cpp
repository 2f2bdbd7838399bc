#include "gpc/models.hpp"

#include "gpc/error.hpp"

namespace gpc {

namespace {

bool degenerate_ratio(const Rational& r) {
    return r.is_zero() || r == Rational(1) || r == Rational(-1);
}

std::string point_str(const Rational& a, const Rational& b) {
    return "(" + a.str() + ", " + b.str() + ")";
}

} // namespace

// --- quartic ---------------------------------------------------------------

QuarticCurve::QuarticCurve(Coefficients coeffs, QuarticPoint base)
    : coeffs_(std::move(coeffs)), base_(std::move(base)) {
    if (!contains(base_)) throw Error(ErrorKind::PointNotOnCurve, "quartic base " + point_str(base_.t, base_.w));
    if (base_.w.is_zero()) throw Error(ErrorKind::ExceptionalPoint, "quartic base must have w != 0");
    if (discriminant().is_zero()) throw Error(ErrorKind::SingularQuartic, "quartic has a repeated root");
}

Rational QuarticCurve::eval(const Rational& t) const {
    Rational acc = coeffs_[0];
    for (std::size_t i = 1; i < coeffs_.size(); ++i) acc = acc * t + coeffs_[i];
    return acc;
}

Rational QuarticCurve::invariant_i() const {
    const auto& [a, b, c, d, e] = coeffs_;
    return Rational(12) * a * e - Rational(3) * b * d + c * c;
}

Rational QuarticCurve::invariant_j() const {
    const auto& [a, b, c, d, e] = coeffs_;
    return Rational(72) * a * c * e + Rational(9) * b * c * d - Rational(27) * a * d * d -
           Rational(27) * e * b * b - Rational(2) * c * c * c;
}

Rational QuarticCurve::discriminant() const {
    Rational i = invariant_i();
    Rational j = invariant_j();
    return (Rational(4) * i * i * i - j * j) / Rational(27);
}

QuarticReduction::Data QuarticReduction::derive(const QuarticCurve& quartic) {
    const auto& [a4, a3, a2, a1, a0] = quartic.coeffs();
    const Rational& t0 = quartic.base().t;
    Data data;
    data.t0 = t0;
    data.q = -quartic.base().w;
    // Taylor coefficients at t0.
    data.b = Rational(4) * a4 * t0 + a3;
    data.c = Rational(6) * a4 * t0 * t0 + Rational(3) * a3 * t0 + a2;
    data.d = Rational(4) * a4 * t0 * t0 * t0 + Rational(3) * a3 * t0 * t0 + Rational(2) * a2 * t0 + a1;
    const Rational& q = data.q;
    data.a1 = data.d / q;
    data.a2 = data.c - data.d * data.d / (Rational(4) * q * q);
    data.a3 = Rational(2) * q * data.b;
    // y -> y - (a1 x + a3)/2 brings x^2 coefficient to a2 + a1^2/4.
    data.shift = (data.a2 + data.a1 * data.a1 / Rational(4)) / Rational(3);
    return data;
}

WeierstrassCurve QuarticReduction::build_curve(const Data& data, const Rational& a) {
    const Rational& q = data.q;
    Rational l4 = Rational(-4) * q * q * a;
    Rational l6 = data.a2 * l4;
    Rational c2 = data.a2 + data.a1 * data.a1 / Rational(4);
    Rational c4 = l4 + data.a1 * data.a3 / Rational(2);
    Rational c6 = l6 + data.a3 * data.a3 / Rational(4);
    try {
        return short_form(WeierstrassCurve(c2, c4, c6)).curve;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SingularCurve) throw Error(ErrorKind::SingularQuartic, e.what());
        throw;
    }
}

QuarticReduction::QuarticReduction(const QuarticCurve& quartic)
    : quartic_(quartic), data_(derive(quartic)), curve_(build_curve(data_, quartic.coeffs()[0])) {}

QuarticPoint QuarticReduction::marked_point() const { return {data_.t0, data_.q}; }

ECPoint QuarticReduction::to_weierstrass(const QuarticPoint& p) const {
    if (!quartic_.contains(p)) throw Error(ErrorKind::PointNotOnCurve, "quartic point " + point_str(p.t, p.w));
    const auto& [t0, q, b, c, d, a1, a2, a3, shift] = data_;
    Rational u = p.t - t0;
    const Rational& v = p.w;
    Rational x, y;
    if (u.is_zero()) {
        if (v == q) return ECPoint::identity();
        x = -a2;
        y = a1 * a2 - a3;
    } else {
        Rational u2 = u * u;
        x = (Rational(2) * q * (v + q) + d * u) / u2;
        y = (Rational(4) * q * q * (v + q) + Rational(2) * q * (d * u + c * u2) -
             d * d * u2 / (Rational(2) * q)) /
            (u2 * u);
    }
    ECPoint image(x + shift, y + (a1 * x + a3) / Rational(2));
    if (!ec_on_curve(curve_, image)) {
        throw std::logic_error("quartic transport left the Weierstrass model");
    }
    return image;
}

std::optional<QuarticPoint> QuarticReduction::to_quartic(const ECPoint& p) const {
    if (!ec_on_curve(curve_, p)) throw Error(ErrorKind::PointNotOnCurve, "Weierstrass point " + point_str(p.x(), p.y()));
    if (p.is_identity()) return marked_point();
    const auto& [t0, q, b, c, d, a1, a2, a3, shift] = data_;
    Rational x = p.x() - shift;
    Rational y = p.y() - (a1 * x + a3) / Rational(2);
    if (y.is_zero()) return std::nullopt;
    Rational two_q = Rational(2) * q;
    Rational u = (two_q * (x + c) - d * d / two_q) / y;
    Rational v = -q + u * (u * x - d) / two_q;
    QuarticPoint image{u + t0, v};
    if (!quartic_.contains(image)) return std::nullopt;
    return image;
}

WeierstrassCurve quartic_to_weierstrass(const QuarticCurve& quartic) { return QuarticReduction(quartic).curve(); }

ECPoint q2w_point(const QuarticCurve& quartic, const QuarticPoint& p) {
    return QuarticReduction(quartic).to_weierstrass(p);
}

std::optional<QuarticPoint> w2q_point(const QuarticCurve& quartic, const ECPoint& p) {
    return QuarticReduction(quartic).to_quartic(p);
}

std::optional<Rational> find_iso(const WeierstrassCurve& from, const WeierstrassCurve& to) {
    // Coefficients scale as a2 -> mu a2, a4 -> mu^2 a4, a6 -> mu^3 a6 with mu = lambda^2.
    const auto zero_pattern = [](const WeierstrassCurve& w) {
        return std::array{w.a2().is_zero(), w.a4().is_zero(), w.a6().is_zero()};
    };
    if (zero_pattern(from) != zero_pattern(to)) return std::nullopt;
    std::optional<Rational> mu;
    if (!from.a2().is_zero()) {
        mu = to.a2() / from.a2();
    } else if (!from.a4().is_zero() && !from.a6().is_zero()) {
        mu = (to.a6() / from.a6()) / (to.a4() / from.a4());
    } else if (!from.a4().is_zero()) {
        mu = rat_sqrt(to.a4() / from.a4());
    } else {
        mu = rat_cbrt(to.a6() / from.a6());
    }
    if (!mu) return std::nullopt;
    auto lambda = rat_sqrt(*mu);
    if (!lambda || lambda->is_zero()) return std::nullopt;
    const Rational& m = *mu;
    if (from.a2() * m != to.a2() || from.a4() * m * m != to.a4() || from.a6() * m * m * m != to.a6()) {
        return std::nullopt;
    }
    return lambda;
}

// --- twisted Huff -----------------------------------------------------------

HuffParams::HuffParams(Rational r) : r_(std::move(r)) {
    if (degenerate_ratio(r_)) throw Error(ErrorKind::DegenerateRatio, "Huff parameter r = " + r_.str());
}

WeierstrassCurve HuffParams::weierstrass() const {
    Rational r4 = r_.pow(4);
    return WeierstrassCurve(-(Rational(1) + r4), r4, 0);
}

bool huff_contains(const HuffParams& params, const HuffPoint& p) {
    Rational r2 = params.r() * params.r();
    return p.t * (p.s * p.s + Rational(1)) == r2 * p.s * (p.t * p.t + Rational(1));
}

ECPoint huff_to_w(const HuffParams& params, const HuffPoint& p) {
    if (!huff_contains(params, p)) throw Error(ErrorKind::PointNotOnCurve, "Huff point " + point_str(p.s, p.t));
    Rational r2 = params.r() * params.r();
    Rational denom = r2 * p.s - p.t;
    if (denom.is_zero()) throw Error(ErrorKind::ExceptionalPoint, "Huff point " + point_str(p.s, p.t) + " has t = r^2 s");
    ECPoint image(-r2 * (r2 * p.t - p.s) / denom, -r2 * (r2 * r2 - Rational(1)) / denom);
    if (!ec_on_curve(params.weierstrass(), image)) {
        throw std::logic_error("Huff transport left the Legendre model");
    }
    return image;
}

HuffPoint w_to_huff(const HuffParams& params, const ECPoint& p) {
    WeierstrassCurve curve = params.weierstrass();
    if (p.is_identity()) throw Error(ErrorKind::ExceptionalPoint, "identity has no Huff image");
    if (!ec_on_curve(curve, p)) throw Error(ErrorKind::PointNotOnCurve, "Legendre point " + point_str(p.x(), p.y()));
    if (p.y().is_zero()) throw Error(ErrorKind::ExceptionalPoint, "2-torsion point has no Huff image");
    Rational r2 = params.r() * params.r();
    HuffPoint image{(p.x() - r2 * r2) / p.y(), r2 * (p.x() - Rational(1)) / p.y()};
    if (!huff_contains(params, image)) throw std::logic_error("Legendre transport left the Huff curve");
    return image;
}

// --- intersection of two quadrics -------------------------------------------

bool quadric_contains(const Rational& r, const QuadricPoint& p) {
    Rational z2 = p.z * p.z;
    return p.x1 * p.x1 + p.y1 * p.y1 == z2 && r * r * p.x1 * p.x1 + p.y2 * p.y2 == z2;
}

WeierstrassCurve quadric_curve(const Rational& r) {
    if (degenerate_ratio(r)) throw Error(ErrorKind::DegenerateRatio, "r = " + r.str());
    Rational four_r2 = Rational(4) * r * r;
    return WeierstrassCurve(-(Rational(4) + four_r2), Rational(4) * four_r2, 0);
}

std::optional<QuadricPoint> er_to_quadric(const Rational& r, const ECPoint& p) {
    WeierstrassCurve curve = quadric_curve(r);
    if (!ec_on_curve(curve, p)) throw Error(ErrorKind::PointNotOnCurve, "E_r point " + point_str(p.x(), p.y()));
    if (p.is_identity() || p.y().is_zero()) return std::nullopt;
    // Parametrize x1^2 + y1^2 = z^2 from (0, 1, 1) by T; the second quadric
    // becomes y2^2 = T^4 + (2 - 4r^2) T^2 + 1, whose reduction is exactly
    // y^2 = X(X-4)(X-4r^2) with X = x + 2.
    Rational T = Rational(2) * (p.x() - Rational(4) * r * r) / p.y();
    if (T.is_zero()) return std::nullopt;
    Rational T2 = T * T;
    Rational y2 = T2 * (p.x() - Rational(2)) / Rational(2) - Rational(1);
    Rational z = Rational(1) + T2;
    QuadricPoint image{Rational(2) * T / z, (Rational(1) - T2) / z, y2 / z, 1};
    if (!quadric_contains(r, image)) throw std::logic_error("quadric transport left the intersection");
    return image;
}

} // namespace gpc
