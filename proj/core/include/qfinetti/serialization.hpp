#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qfinetti/definetti.hpp"
#include "qfinetti/measures.hpp"

namespace qfinetti {

/// Malformed JSON or a record that does not follow the measure schema.
class SerializationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Records have the shape
//   {"kind": "q_exchangeable" | "mixing", "mode": "exact" | "float",
//    "n": <int>, "q": "p/r", "base": ["p/r", ...]}
// with rationals as decimal-digit strings. "kind" and "mode" are optional on
// input (mode defaults to exact). Exact records round-trip bit for bit.

std::string to_json(const QExchMeasure& m, int indent = -1);
std::string to_json(const MixingMeasure& mu, int indent = -1);
/// Exact strings for every scalar; "lower" is null when absent.
std::string to_json(const DistanceReport& r, int indent = -1);

QExchMeasure measure_from_json(std::string_view text);
MixingMeasure mixing_from_json(std::string_view text);

}  // namespace qfinetti
