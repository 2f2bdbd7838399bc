#include "gpc/serialize.hpp"

#include "gpc/error.hpp"

namespace gpc {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

} // namespace

void to_json(Json& j, const Rational& q) { j = q.str(); }

void to_json(Json& j, const CirclePoint& p) { j = Json{{"x", p.x()}, {"y", p.y()}}; }

void to_json(Json& j, const GPSequence& seq) { j = Json{{"ratio", seq.ratio()}, {"points", seq.points()}}; }

void to_json(Json& j, const ECPoint& p) {
    if (p.is_identity()) {
        j = "identity";
    } else {
        j = Json{{"x", p.x()}, {"y", p.y()}};
    }
}

void to_json(Json& j, const WeierstrassCurve& c) { j = Json{{"a2", c.a2()}, {"a4", c.a4()}, {"a6", c.a6()}}; }

void to_json(Json& j, const QuarticPoint& p) { j = Json{{"t", p.t}, {"w", p.w}}; }

void to_json(Json& j, const QuarticCurve& q) {
    Json coeffs = Json::array();
    for (const auto& c : q.coeffs()) coeffs.push_back(c);
    j = Json{{"coeffs", coeffs}, {"base", q.base()}};
}

void to_json(Json& j, const HuffPoint& p) { j = Json{{"s", p.s}, {"t", p.t}}; }

void to_json(Json& j, const QuadricPoint& p) {
    j = Json{{"x1", p.x1}, {"y1", p.y1}, {"y2", p.y2}, {"z", p.z}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw Error(ErrorKind::ParseError, "rational must be a \"p/q\" string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

CirclePoint circle_point_from_json(const Json& j) {
    return CirclePoint(rational_from_json(field(j, "x")), rational_from_json(field(j, "y")));
}

ECPoint ec_point_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "identity") return ECPoint::identity();
    return ECPoint(rational_from_json(field(j, "x")), rational_from_json(field(j, "y")));
}

WeierstrassCurve curve_from_json(const Json& j) {
    return WeierstrassCurve(rational_from_json(field(j, "a2")), rational_from_json(field(j, "a4")),
                            rational_from_json(field(j, "a6")));
}

QuarticCurve quartic_from_json(const Json& j) {
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != 5) throw Error(ErrorKind::ParseError, "quartic needs five coefficients");
    QuarticCurve::Coefficients c;
    for (std::size_t i = 0; i < 5; ++i) c[i] = rational_from_json(coeffs[i]);
    const Json& base = field(j, "base");
    return QuarticCurve(c, QuarticPoint{rational_from_json(field(base, "t")), rational_from_json(field(base, "w"))});
}

SequenceRecord sequence_record_from_json(const Json& j) {
    SequenceRecord record{rational_from_json(field(j, "ratio")), {}};
    const Json& points = field(j, "points");
    if (!points.is_array()) throw Error(ErrorKind::ParseError, "\"points\" must be an array");
    for (const auto& p : points) record.points.push_back(circle_point_from_json(p));
    return record;
}

GPSequence sequence_from_json(const Json& j) {
    SequenceRecord record = sequence_record_from_json(j);
    GPSequence seq(std::move(record.points));
    if (seq.ratio() != record.ratio) {
        throw Error(ErrorKind::InvalidSequence, "declared ratio " + record.ratio.str() + " but abscissae give " +
                                                    seq.ratio().str());
    }
    return seq;
}

std::string csv_line(const GPSequence& seq) {
    std::string line = seq.ratio().str();
    for (const auto& p : seq.points()) line += "," + p.x().str();
    return line;
}

} // namespace gpc
