#pragma once

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qsub {

// Thrown when a requested computation exceeds a configured size cap.
// `axis` names the cap that tripped: "gamma", "ell", "rank", or "enum".
struct CapExceeded : std::runtime_error {
  std::string axis;

  CapExceeded(std::string axis_, const std::string& msg)
      : std::runtime_error(msg), axis(std::move(axis_)) {}
};

inline constexpr long kDefaultEnumerationCap = 1000000;

// Desk-scale size limits. Enumeration routines take the relevant cap as a
// parameter; the CLI populates one of these from QSUB_CAPS.
struct Caps {
  long max_gamma = 16;        // |Gamma|
  long max_ell = 7;           // root-of-unity order
  long max_rank = 3;          // Cartan rank for enumeration
  long max_enum = kDefaultEnumerationCap;  // any single enumerated list

  // Parses "gamma=16,ell=7,rank=3,enum=1000000"; unknown keys or
  // non-positive values are rejected.
  static Caps parse(const std::string& text) {
    Caps caps;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("caps: expected key=value, got " + item);
      std::string key = item.substr(0, eq);
      long value = 0;
      try {
        value = std::stol(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("caps: bad value in " + item);
      }
      if (value <= 0) throw std::invalid_argument("caps: value must be positive in " + item);
      if (key == "gamma") caps.max_gamma = value;
      else if (key == "ell") caps.max_ell = value;
      else if (key == "rank") caps.max_rank = value;
      else if (key == "enum") caps.max_enum = value;
      else throw std::invalid_argument("caps: unknown key " + key);
    }
    return caps;
  }

  // Reads QSUB_CAPS if set, defaults otherwise.
  static Caps from_env() {
    const char* env = std::getenv("QSUB_CAPS");
    return env ? parse(env) : Caps{};
  }
};

}  // namespace qsub
