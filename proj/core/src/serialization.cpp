#include "qfinetti/serialization.hpp"

#include <json.hpp>

namespace qfinetti {

namespace {

using nlohmann::json;

constexpr std::string_view kMeasureKind = "q_exchangeable";
constexpr std::string_view kMixingKind = "mixing";

json record(std::string_view kind, int n, const QParam& q, const std::vector<Scalar>& values) {
  json base = json::array();
  for (const auto& v : values) base.push_back(v.to_string());
  return json{{"kind", kind}, {"mode", to_string(q.mode())}, {"n", n}, {"q", q.to_string()}, {"base", base}};
}

struct ParsedRecord {
  int n;
  QParam q;
  std::vector<Scalar> values;
};

ParsedRecord parse_record(std::string_view text, std::string_view expected_kind) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SerializationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SerializationError("measure record must be a JSON object");

  if (auto it = doc.find("kind"); it != doc.end()) {
    if (!it->is_string() || it->get<std::string>() != expected_kind) {
      throw SerializationError("expected a record of kind '" + std::string(expected_kind) + "'");
    }
  }
  Mode mode = Mode::exact;
  if (auto it = doc.find("mode"); it != doc.end()) {
    if (!it->is_string()) throw SerializationError("'mode' must be a string");
    try {
      mode = parse_mode(it->get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SerializationError(e.what());
    }
  }

  auto n_it = doc.find("n");
  if (n_it == doc.end() || !n_it->is_number_integer() || n_it->get<long>() < 0 || n_it->get<long>() > 4096) {
    throw SerializationError("'n' must be a nonnegative integer");
  }
  const int n = n_it->get<int>();

  auto q_it = doc.find("q");
  if (q_it == doc.end() || !q_it->is_string()) throw SerializationError("'q' must be a fraction string \"p/r\"");
  auto base_it = doc.find("base");
  if (base_it == doc.end() || !base_it->is_array()) throw SerializationError("'base' must be an array of strings");

  try {
    QParam q = QParam::parse(q_it->get<std::string>(), mode);
    std::vector<Scalar> values;
    values.reserve(base_it->size());
    for (const auto& v : *base_it) {
      if (!v.is_string()) throw SerializationError("'base' entries must be strings");
      values.push_back(Scalar::parse(v.get<std::string>(), mode));
    }
    return {n, std::move(q), std::move(values)};
  } catch (const SerializationError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SerializationError(e.what());
  }
}

}  // namespace

std::string to_json(const QExchMeasure& m, int indent) {
  return record(kMeasureKind, m.n(), m.q(), m.base()).dump(indent);
}

std::string to_json(const MixingMeasure& mu, int indent) {
  return record(kMixingKind, mu.n(), mu.q(), mu.alpha()).dump(indent);
}

std::string to_json(const DistanceReport& r, int indent) {
  json doc{{"n", r.n},
           {"k", r.k},
           {"n1", r.n1},
           {"q", r.q.to_string()},
           {"mode", to_string(r.mode())},
           {"distance", r.distance.to_string()},
           {"upper", r.upper.to_string()},
           {"lower", r.lower ? json(r.lower->to_string()) : json(nullptr)},
           {"upper_ok", r.upper_ok()},
           {"lower_ok", r.lower_ok()},
           {"pass", r.passes()}};
  return doc.dump(indent);
}

QExchMeasure measure_from_json(std::string_view text) {
  auto rec = parse_record(text, kMeasureKind);
  return QExchMeasure(rec.n, std::move(rec.q), std::move(rec.values));
}

MixingMeasure mixing_from_json(std::string_view text) {
  auto rec = parse_record(text, kMixingKind);
  return MixingMeasure(rec.n, std::move(rec.q), std::move(rec.values));
}

}  // namespace qfinetti
