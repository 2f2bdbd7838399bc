#include "gpc/ec.hpp"

#include "gpc/error.hpp"

namespace gpc {

namespace {

void require_on_curve(const WeierstrassCurve& curve, const ECPoint& p) {
    if (!ec_on_curve(curve, p)) {
        throw Error(ErrorKind::PointNotOnCurve, "(" + p.x().str() + ", " + p.y().str() + ")");
    }
}

ECPoint add_unchecked(const WeierstrassCurve& curve, const ECPoint& p, const ECPoint& q) {
    if (p.is_identity()) return q;
    if (q.is_identity()) return p;
    Rational slope;
    if (p.x() == q.x()) {
        // vertical chord or tangent at a 2-torsion point
        if (p.y() != q.y() || p.y().is_zero()) return ECPoint::identity();
        const Rational& x = p.x();
        slope = (Rational(3) * x * x + Rational(2) * curve.a2() * x + curve.a4()) / (Rational(2) * p.y());
    } else {
        slope = (q.y() - p.y()) / (q.x() - p.x());
    }
    Rational x3 = slope * slope - curve.a2() - p.x() - q.x();
    Rational y3 = slope * (p.x() - x3) - p.y();
    return ECPoint(std::move(x3), std::move(y3));
}

} // namespace

Rational weierstrass_discriminant(const Rational& a2, const Rational& a4, const Rational& a6) {
    Rational b2 = Rational(4) * a2;
    Rational b4 = Rational(2) * a4;
    Rational b6 = Rational(4) * a6;
    Rational b8 = Rational(4) * a2 * a6 - a4 * a4;
    return -b2 * b2 * b8 - Rational(8) * b4 * b4 * b4 - Rational(27) * b6 * b6 + Rational(9) * b2 * b4 * b6;
}

WeierstrassCurve::WeierstrassCurve(Rational a2, Rational a4, Rational a6)
    : a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)),
      disc_(weierstrass_discriminant(a2_, a4_, a6_)) {
    if (disc_.is_zero()) {
        throw Error(ErrorKind::SingularCurve,
                    "y^2 = x^3 + (" + a2_.str() + ")x^2 + (" + a4_.str() + ")x + (" + a6_.str() + ")");
    }
}

Rational WeierstrassCurve::j_invariant() const {
    Rational b2 = Rational(4) * a2_;
    Rational b4 = Rational(2) * a4_;
    Rational c4 = b2 * b2 - Rational(24) * b4;
    return c4 * c4 * c4 / disc_;
}

bool ec_on_curve(const WeierstrassCurve& curve, const ECPoint& p) {
    return p.is_identity() || p.y() * p.y() == curve.rhs(p.x());
}

ECPoint ec_add(const WeierstrassCurve& curve, const ECPoint& p, const ECPoint& q) {
    require_on_curve(curve, p);
    require_on_curve(curve, q);
    return add_unchecked(curve, p, q);
}

ECPoint ec_mul(const WeierstrassCurve& curve, const Integer& k, const ECPoint& p) {
    require_on_curve(curve, p);
    Integer n = k;
    ECPoint base = p;
    if (n < 0) {
        n = -n;
        base = base.negated();
    }
    ECPoint acc;
    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = add_unchecked(curve, acc, acc);
        if (mpz_tstbit(n.get_mpz_t(), i)) acc = add_unchecked(curve, acc, base);
    }
    return acc;
}

PointOrder ec_classify(const WeierstrassCurve& curve, const ECPoint& p) {
    require_on_curve(curve, p);
    ECPoint multiple = p;
    for (int n = 1; n <= 12; ++n) {
        if (multiple.is_identity()) return Torsion{n};
        multiple = add_unchecked(curve, multiple, p);
    }
    return InfiniteOrder{};
}

ECPoint ShortForm::to_short(const ECPoint& p) const {
    return p.is_identity() ? p : ECPoint(p.x() + shift, p.y());
}

ECPoint ShortForm::from_short(const ECPoint& p) const {
    return p.is_identity() ? p : ECPoint(p.x() - shift, p.y());
}

ShortForm short_form(const WeierstrassCurve& curve) {
    const Rational& a2 = curve.a2();
    const Rational& a4 = curve.a4();
    const Rational& a6 = curve.a6();
    Rational a = a4 - a2 * a2 / Rational(3);
    Rational b = a6 - a2 * a4 / Rational(3) + Rational(2) * a2 * a2 * a2 / Rational(27);
    return ShortForm{WeierstrassCurve(0, std::move(a), std::move(b)), a2 / Rational(3)};
}

ECPoint scale_point(const ECPoint& p, const Rational& lambda) {
    if (p.is_identity()) return p;
    Rational l2 = lambda * lambda;
    return ECPoint(l2 * p.x(), l2 * lambda * p.y());
}

} // namespace gpc
