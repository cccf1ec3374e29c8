#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

#include "dets2/configuration.hpp"

namespace dets2 {

// Malformed configuration file: bad JSON, schema violation, bad scalar.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON schema: {"v": {"12": [a, b], "13": ..., "14": ..., "23": ..., "24":
// ..., "34": ...}}. Scalars are integers or "p/q" strings; plain decimal
// numbers are accepted by the float reader only.
inline constexpr std::array<const char*, 6> kPairKeys{"12", "13", "14", "23", "24", "34"};

namespace detail {

inline nlohmann::json parse_config_document(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.size() != 1 || !doc.contains("v"))
    throw config_error("expected a top-level object with the single key \"v\"");
  const auto& v = doc.at("v");
  if (!v.is_object()) throw config_error("\"v\" must be an object");
  for (const char* key : kPairKeys)
    if (!v.contains(key)) throw config_error(std::string("missing pair key \"") + key + "\"");
  if (v.size() != 6) throw config_error("\"v\" must contain exactly the six pair keys");
  for (const char* key : kPairKeys) {
    const auto& e = v.at(key);
    if (!e.is_array() || e.size() != 2)
      throw config_error(std::string("entry \"") + key + "\" must be a 2-element array");
  }
  return doc;
}

inline Rational json_to_rational(const nlohmann::json& x) {
  if (x.is_number_unsigned()) return Rational(BigInt(static_cast<unsigned long>(x.get<std::uint64_t>())));
  if (x.is_number_integer()) return Rational(BigInt(static_cast<long>(x.get<std::int64_t>())));
  if (x.is_string()) {
    try {
      return Rational::from_string(x.get<std::string>());
    } catch (const invalid_scalar& e) {
      throw config_error(e.what());
    }
  }
  if (x.is_number()) throw config_error("decimal entries require the float backend");
  throw config_error("scalar entries must be integers or \"p/q\" strings");
}

inline double json_to_double(const nlohmann::json& x) {
  if (x.is_number()) return x.get<double>();
  if (x.is_string()) {
    try {
      return Rational::from_string(x.get<std::string>()).to_double();
    } catch (const invalid_scalar& e) {
      throw config_error(e.what());
    }
  }
  throw config_error("scalar entries must be numbers or \"p/q\" strings");
}

}  // namespace detail

inline Configuration<Rational> read_config_rational(std::istream& in) {
  const auto doc = detail::parse_config_document(in);
  Configuration<Rational> c;
  for (std::size_t s = 0; s < 6; ++s) {
    const auto& e = doc.at("v").at(kPairKeys[s]);
    c.slot(s) = {detail::json_to_rational(e[0]), detail::json_to_rational(e[1])};
  }
  return c;
}

inline Configuration<double> read_config_float(std::istream& in) {
  const auto doc = detail::parse_config_document(in);
  Configuration<double> c;
  for (std::size_t s = 0; s < 6; ++s) {
    const auto& e = doc.at("v").at(kPairKeys[s]);
    c.slot(s) = {detail::json_to_double(e[0]), detail::json_to_double(e[1])};
  }
  return c;
}

// Writes the schema above; exact round trip with read_config_rational.
// Integers that fit in a JSON number are written bare, everything else as a
// "p/q" string.
inline void write_config(std::ostream& out, const Configuration<Rational>& c) {
  const auto scalar = [](const Rational& r) -> nlohmann::ordered_json {
    if (r.den() == 1 && r.num().fits_slong_p()) return static_cast<std::int64_t>(r.num().get_si());
    return r.to_string();
  };
  nlohmann::ordered_json v;
  for (std::size_t s = 0; s < 6; ++s)
    v[kPairKeys[s]] = nlohmann::ordered_json::array({scalar(c.slot(s).x), scalar(c.slot(s).y)});
  nlohmann::ordered_json doc;
  doc["v"] = std::move(v);
  out << doc.dump(2) << "\n";
}

}  // namespace dets2
