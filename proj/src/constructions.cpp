#include "gpc/constructions.hpp"

#include <algorithm>

#include "gpc/error.hpp"

namespace gpc {

namespace {

const Rational kOne{1};

bool is_unit_or_zero(const Rational& q) { return q.is_zero() || q == kOne || q == -kOne; }

long step_of(long k) { return k < 0 ? -1 : 1; }

Json order_json(const PointOrder& order) {
    if (auto t = std::get_if<Torsion>(&order)) return Json{{"torsion", t->order}};
    return "infinite";
}

void require_nondegenerate_s(const Rational& s) {
    if (is_unit_or_zero(s)) throw Error(ErrorKind::DegenerateParameter, "s = " + s.str() + " (need s not in {0, 1, -1})");
}

} // namespace

// --- length 2, ratio r -------------------------------------------------------------

ConicPoint lemma1_r(const Rational& m) {
    Rational denom = m * m + Rational(2);
    ConicPoint c{Rational(-4) * m / denom, Rational(2) * (m * m - Rational(2)) / denom};
    if (is_unit_or_zero(c.r)) throw Error(ErrorKind::DegenerateRatio, "m = " + m.str() + " gives r = " + c.r.str());
    return c;
}

WeierstrassCurve lemma1_curve(const Rational& r) { return quadric_curve(r); }

ECPoint lemma1_base(const ConicPoint& c) {
    if (c.s * c.s + Rational(2) * c.r * c.r != Rational(4)) {
        throw Error(ErrorKind::PointNotOnCurve, "(r, s) = (" + c.r.str() + ", " + c.s.str() + ") is off s^2 + 2r^2 = 4");
    }
    WeierstrassCurve curve = lemma1_curve(c.r);
    Rational x = Rational(2) * c.r * c.r;
    ECPoint p(x, x * c.s);
    if (!ec_on_curve(curve, p)) throw std::logic_error("lemma1 base point is off E_r");
    return p;
}

Construction lemma1_gp2(const Rational& m, long k) {
    if (k == 0) throw Error(ErrorKind::DegenerateParameter, "multiple must be nonzero");
    ConicPoint c = lemma1_r(m);
    WeierstrassCurve curve = lemma1_curve(c.r);
    ECPoint base = lemma1_base(c);
    long multiple = k;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt, multiple += step_of(k)) {
        ECPoint p = ec_mul(curve, multiple, base);
        auto image = er_to_quadric(c.r, p);
        if (!image || image->x1.is_zero()) continue;
        GPSequence seq({CirclePoint(image->x1, image->y1), CirclePoint(c.r * image->x1, image->y2)});
        Json trace{{"pipeline", "lemma1"},
                   {"m", m},
                   {"r", c.r},
                   {"conic_s", c.s},
                   {"curve", curve},
                   {"base_point", base},
                   {"base_order", order_json(ec_classify(curve, base))},
                   {"multiple", multiple},
                   {"point", p},
                   {"quadric_point", *image}};
        return {std::move(seq), std::move(trace)};
    }
    throw Error(ErrorKind::ExhaustedAttempts, "no usable multiple of P0 starting at " + std::to_string(k));
}

// --- length 2, ratio r^2 ------------------------------------------------------------

WeierstrassCurve prop1_curve(const Rational& r) { return HuffParams(r).weierstrass(); }

QuarticCurve prop1_hquartic(const Rational& u) {
    if (is_unit_or_zero(u)) throw Error(ErrorKind::DegenerateParameter, "u = " + u.str() + " (need u not in {0, 1, -1})");
    Rational u4 = u.pow(4);
    Rational c = u4 - kOne;
    return QuarticCurve({-c, 0, 0, 0, c * u4}, QuarticPoint{1, c});
}

namespace {

struct RStreamValue {
    Rational r;
    Rational w;
    long multiple;
    QuarticCurve quartic;
    ECPoint base_image;
};

RStreamValue r_stream(const Rational& u, long k) {
    if (k >= -1 && k <= 1) throw Error(ErrorKind::DegenerateParameter, "multiple must satisfy |k| >= 2");
    QuarticCurve quartic = prop1_hquartic(u);
    QuarticReduction reduction(quartic);
    ECPoint base = reduction.to_weierstrass(quartic.base());
    long multiple = k;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt, multiple += step_of(k)) {
        auto p = reduction.to_quartic(ec_mul(reduction.curve(), multiple, base));
        if (!p || is_unit_or_zero(p->t) || p->w.is_zero()) continue;
        return {p->t, p->w, multiple, quartic, base};
    }
    throw Error(ErrorKind::ExhaustedAttempts, "no usable r from multiples starting at " + std::to_string(k));
}

} // namespace

Rational prop1_r_stream(const Rational& u, long k) { return r_stream(u, k).r; }

GPSequence gp2_from_huff(const HuffParams& params, const HuffPoint& p) {
    if (!huff_contains(params, p)) throw Error(ErrorKind::PointNotOnCurve, "(s, t) off the Huff curve");
    if (p.s.is_zero() || p.t.is_zero()) throw Error(ErrorKind::ExceptionalPoint, "Huff point with zero coordinate");
    return GPSequence({point_from_t(p.s), point_from_t(p.t)});
}

Construction prop1_gp2(const Rational& u, long k, long j) {
    if (j == 0) throw Error(ErrorKind::DegenerateParameter, "point multiple must be nonzero");
    RStreamValue rv = r_stream(u, k);
    HuffParams params(rv.r);
    WeierstrassCurve curve = params.weierstrass();
    // x = u^4 forces y^2 = u^4 (u^4-1)(u^4-r^4) = (u^2 w)^2.
    ECPoint seed(u.pow(4), u * u * rv.w);
    if (!ec_on_curve(curve, seed)) throw std::logic_error("prop1 seed is off E'_r");
    long multiple = j;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt, multiple += step_of(j)) {
        ECPoint p = ec_mul(curve, multiple, seed);
        if (p.is_identity() || p.y().is_zero()) continue;
        HuffPoint hp = w_to_huff(params, p);
        if (hp.s.is_zero() || hp.t.is_zero()) continue;
        GPSequence seq = gp2_from_huff(params, hp);
        Json trace{{"pipeline", "prop1"},
                   {"u", u},
                   {"h_quartic", rv.quartic},
                   {"h_base_image", rv.base_image},
                   {"r_multiple", rv.multiple},
                   {"r", rv.r},
                   {"curve", curve},
                   {"seed_point", seed},
                   {"seed_order", order_json(ec_classify(curve, seed))},
                   {"point_multiple", multiple},
                   {"point", p},
                   {"huff_point", hp}};
        return {std::move(seq), std::move(trace)};
    }
    throw Error(ErrorKind::ExhaustedAttempts, "no usable multiple of the seed starting at " + std::to_string(j));
}

// --- length 3 ------------------------------------------------------------------------

WeierstrassCurve thm1_curve(const Rational& s) {
    require_nondegenerate_s(s);
    Rational e1 = Rational(16) * s.pow(4);
    Rational e2 = (kOne + s * s).pow(4);
    return WeierstrassCurve(e1 + e2, e1 * e2, 0);
}

QuarticCurve thm1_quartic(const Rational& s) {
    require_nondegenerate_s(s);
    Rational s4 = s.pow(4);
    Rational lead = Rational(-4) * s4;
    return QuarticCurve({lead, 0, (s * s + kOne).pow(4) - Rational(8) * s4, 0, lead},
                        QuarticPoint{s, s.pow(5) - s});
}

Rational thm1_square_condition(const Rational& s) {
    return (((s - Rational(2)) * s + Rational(6)) * s - Rational(2)) * s + kOne;
}

QuarticCurve thm1_s_quartic() { return QuarticCurve({1, -2, 6, -2, 1}, QuarticPoint{0, 1}); }

GPSequence gp3_from_t(const Rational& s, const Rational& t) {
    if (s.is_zero() || t.is_zero()) throw Error(ErrorKind::DegenerateInput, "s and t must be nonzero");
    Rational t2 = t * t;
    Rational s2p1 = s * s + kOne;
    Rational u = Rational(2) * s / s2p1;
    Rational ratio = u * (kOne + t2) / (Rational(2) * t);
    if (ratio == kOne || ratio == -kOne) {
        throw Error(ErrorKind::DegenerateInput, "(s, t) = (" + s.str() + ", " + t.str() + ") gives ratio " + ratio.str());
    }
    Rational h_squared = t2 * s2p1.pow(4) - Rational(4) * s.pow(4) * (t2 + kOne).pow(2);
    auto big_h = rat_sqrt(h_squared);
    if (!big_h) {
        throw Error(ErrorKind::NotOnCircle,
                    "third abscissa has no rational ordinate at (s, t) = (" + s.str() + ", " + t.str() + ")");
    }
    Rational h = *big_h / (s2p1 * s2p1 * t);
    return GPSequence({point_from_t(t), point_from_t(s), CirclePoint(u * ratio, h)});
}

std::optional<ECPoint> thm1_special_x(const Rational& s) {
    WeierstrassCurve curve = thm1_curve(s);
    auto w = rat_sqrt(thm1_square_condition(s));
    if (!w) return std::nullopt;
    Rational s3 = s.pow(3);
    Rational s2p1 = kOne + s * s;
    Rational one_plus_s = kOne + s;
    ECPoint p(Rational(8) * s3 * s2p1, Rational(8) * s3 * one_plus_s * one_plus_s * s2p1 * *w);
    if (!ec_on_curve(curve, p)) throw std::logic_error("special point is off E_s");
    return p;
}

WeierstrassCurve GCurveGenerator::curve() { return WeierstrassCurve(0, -972, 0); }
ECPoint GCurveGenerator::point() { return ECPoint(-27, 81); }

std::vector<Rational> thm1_svalues(std::size_t count) {
    QuarticReduction reduction(thm1_s_quartic());
    WeierstrassCurve g = GCurveGenerator::curve();
    auto lambda = find_iso(reduction.curve(), g);
    if (!lambda) throw Error(ErrorKind::IsomorphismNotFound, "derived model of the s-quartic is not a scaling of G");
    Rational inv_lambda = lambda->inverse();
    ECPoint generator = GCurveGenerator::point();

    std::vector<Rational> out;
    ECPoint multiple = generator;
    const std::size_t max_multiples = 4 * count + 16;
    for (std::size_t n = 1; out.size() < count; ++n) {
        if (n > max_multiples) throw Error(ErrorKind::ExhaustedAttempts, "s-value stream stalled");
        auto p = reduction.to_quartic(scale_point(multiple, inv_lambda));
        multiple = ec_add(g, multiple, generator);
        if (!p || is_unit_or_zero(p->t)) continue;
        if (std::find(out.begin(), out.end(), p->t) != out.end()) continue;
        out.push_back(p->t);
    }
    return out;
}

Rational thm1_svalue_stream(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::DegenerateParameter, "stream index is 1-based");
    return thm1_svalues(n).back();
}

Construction gp3_generate(const Rational& s, long k) {
    if (k == 0) throw Error(ErrorKind::DegenerateParameter, "multiple must be nonzero");
    WeierstrassCurve es = thm1_curve(s);
    QuarticCurve quartic = thm1_quartic(s);
    QuarticReduction reduction(quartic);
    ShortForm es_short = short_form(es);
    auto lambda = find_iso(es_short.curve, reduction.curve());
    if (!lambda) throw Error(ErrorKind::IsomorphismNotFound, "E_s is not a scaling of the quartic's model");

    Json trace{{"pipeline", "thm1"}, {"s", s}, {"curve", es}, {"quartic", quartic}};
    std::optional<ECPoint> seed;
    if (auto special = thm1_special_x(s); special && is_infinite_order(ec_classify(es, *special))) {
        trace["seed_source"] = "special_x";
        trace["seed_point"] = *special;
        seed = scale_point(es_short.to_short(*special), *lambda);
    } else {
        ECPoint base_image = reduction.to_weierstrass(quartic.base());
        PointOrder order = ec_classify(reduction.curve(), base_image);
        if (!is_infinite_order(order)) {
            throw Error(ErrorKind::NoInfiniteOrderPointFound,
                        "s = " + s.str() + ": no special point and the quartic base image is torsion");
        }
        trace["seed_source"] = "quartic_base";
        trace["seed_point"] = base_image;
        seed = base_image;
    }
    trace["model"] = reduction.curve();

    const Rational u = Rational(2) * s / (kOne + s * s);
    long multiple = k;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt, multiple += step_of(k)) {
        auto p = reduction.to_quartic(ec_mul(reduction.curve(), multiple, *seed));
        if (!p || p->t.is_zero()) continue;
        Rational ratio = u * (kOne + p->t * p->t) / (Rational(2) * p->t);
        if (ratio == kOne || ratio == -kOne) continue;
        GPSequence seq = gp3_from_t(s, p->t);
        trace["multiple"] = multiple;
        trace["quartic_point"] = *p;
        return {std::move(seq), std::move(trace)};
    }
    throw Error(ErrorKind::ExhaustedAttempts, "no usable multiple for s = " + s.str());
}

const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = [] {
        const char* raw[6][6] = {
            {"39/25", "3", "5", "5/13", "3/5", "117/125"},
            {"6409/3034", "4", "328/37", "24272/108953", "8/17", "1508/1517"},
            {"5987825/3616561", "5", "1537/181", "278197/1197565", "5/13", "29939125/47015293"},
            {"55045/24531", "6", "234/17", "7956/55045", "12/37", "220180/302549"},
            {"7935762913/2225017375", "7", "125885/4949", "623004865/7935762913", "7/25", "7935762913/7946490625"},
            {"6548713889/6051759025", "8", "80392/9265", "1489663760/6548713889", "16/65",
             "104779422224/393364336625"},
        };
        std::vector<Table1Row> out;
        for (const auto& r : raw) {
            out.push_back({Rational::parse(r[0]), Rational::parse(r[1]), Rational::parse(r[2]), Rational::parse(r[3]),
                           Rational::parse(r[4]), Rational::parse(r[5])});
        }
        return out;
    }();
    return rows;
}

} // namespace gpc
