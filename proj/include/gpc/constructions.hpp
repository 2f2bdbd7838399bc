#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gpc/circle.hpp"
#include "gpc/ec.hpp"
#include "gpc/models.hpp"
#include "gpc/serialize.hpp"

namespace gpc {

// Exceptional multiples are skipped by stepping the multiple away from zero;
// a pipeline gives up with ExhaustedAttempts after this many tries.
inline constexpr int kMaxAttempts = 5;

// A generated sequence together with the data that produced it (curves,
// seed points, multiples actually used).
struct Construction {
    GPSequence sequence;
    Json trace;
};

// --- length 2, ratio r = -4m/(m^2+2) ----------------------------------------

// Point on the conic s^2 + 2r^2 = 4.
struct ConicPoint {
    Rational r;
    Rational s;
};

ConicPoint lemma1_r(const Rational& m);
WeierstrassCurve lemma1_curve(const Rational& r);
ECPoint lemma1_base(const ConicPoint& c);
Construction lemma1_gp2(const Rational& m, long k);

// --- length 2, ratio r^2 (twisted Huff) ---------------------------------------

WeierstrassCurve prop1_curve(const Rational& r);
QuarticCurve prop1_hquartic(const Rational& u);
Rational prop1_r_stream(const Rational& u, long k);
Construction prop1_gp2(const Rational& u, long k, long j);

// The pair (point_from_t(s), point_from_t(t)) for a Huff point; its ratio is r^2.
GPSequence gp2_from_huff(const HuffParams& params, const HuffPoint& p);

// --- length 3 ------------------------------------------------------------------

// y^2 = x(x + 16s^4)(x + (1+s^2)^4).
WeierstrassCurve thm1_curve(const Rational& s);

// H^2 = t^2(s^2+1)^4 - 4s^4(t^2+1)^2 with base (s, s^5 - s).
QuarticCurve thm1_quartic(const Rational& s);

// s^4 - 2s^3 + 6s^2 - 2s + 1.
Rational thm1_square_condition(const Rational& s);

// Quartic w^2 = thm1_square_condition(s) with base (0, 1).
QuarticCurve thm1_s_quartic();

GPSequence gp3_from_t(const Rational& s, const Rational& t);
std::optional<ECPoint> thm1_special_x(const Rational& s);

// First `count` values of s, in multiple order, for which the special point
// exists. thm1_svalue_stream(n) is the n-th of them (1-based).
std::vector<Rational> thm1_svalues(std::size_t count);
Rational thm1_svalue_stream(std::size_t n);

Construction gp3_generate(const Rational& s, long k);

// v^2 = u^3 - 972u and its generator (-27, 81).
struct GCurveGenerator {
    static WeierstrassCurve curve();
    static ECPoint point();
};

// --- published Table 1 rows ------------------------------------------------------

struct Table1Row {
    Rational ratio, s, t;
    Rational x1, x2, x3;
};

const std::vector<Table1Row>& table1_rows();

} // namespace gpc
