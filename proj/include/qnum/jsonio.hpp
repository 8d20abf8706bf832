#pragma once

#include <json.hpp>

#include "qnum/checks.hpp"
#include "qnum/frieze.hpp"
#include "qnum/qreal.hpp"

namespace qnum {

// Field order is fixed and coefficients are decimal strings, so a document
// parsed and re-serialized is byte-identical and arbitrarily large
// coefficients survive consumers that lack big integers.
using Json = nlohmann::ordered_json;

Json to_json(const IntPoly& p);
Json to_json(const LaurentPoly& p);
Json to_json(const RationalFunc& f);
Json to_json(const LaurentSeries& s);
Json to_json(const QRational& v);
Json to_json(const ClassicalFrieze& f);
Json to_json(const QFrieze& f);
Json to_json(const QReal& v);
Json to_json(const CheckReport& rep);

} // namespace qnum
