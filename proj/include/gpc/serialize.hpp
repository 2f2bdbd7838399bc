#pragma once

#include <vector>

#include <json.hpp>

#include "gpc/circle.hpp"
#include "gpc/ec.hpp"
#include "gpc/models.hpp"

namespace gpc {

using Json = nlohmann::ordered_json;

// Rationals travel as exact "num/den" strings; nothing else is accepted.
void to_json(Json& j, const Rational& q);
void to_json(Json& j, const CirclePoint& p);
void to_json(Json& j, const GPSequence& seq);
void to_json(Json& j, const ECPoint& p);
void to_json(Json& j, const WeierstrassCurve& c);
void to_json(Json& j, const QuarticPoint& p);
void to_json(Json& j, const QuarticCurve& q);
void to_json(Json& j, const HuffPoint& p);
void to_json(Json& j, const QuadricPoint& p);

// Parsers throw ParseError on malformed documents.
Rational rational_from_json(const Json& j);
CirclePoint circle_point_from_json(const Json& j);
ECPoint ec_point_from_json(const Json& j);
WeierstrassCurve curve_from_json(const Json& j);
QuarticCurve quartic_from_json(const Json& j);

// The raw content of a GPSequence record, before any validation beyond
// on-circle membership of each point.
struct SequenceRecord {
    Rational ratio;
    std::vector<CirclePoint> points;
};
SequenceRecord sequence_record_from_json(const Json& j);
GPSequence sequence_from_json(const Json& j);

// Abscissa chain as one CSV line: ratio,x1,x2,...
std::string csv_line(const GPSequence& seq);

} // namespace gpc
