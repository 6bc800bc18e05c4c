#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betacert/enclosure.hpp"

namespace betacert::cli {

enum Exit : int { kOk = 0, kUncertified = 1, kUsage = 2, kPrecision = 3 };

inline constexpr int kDefaultPrecision = 256;
inline constexpr int kMinPrecision = 64;

struct RunConfig {
  int precision_bits = kDefaultPrecision;
  int depth = 0;  // 0: command default
  std::string format;
  std::string out;
};

// Flag, then the BETACERT_PREC value, then the default.  Throws
// MalformedInput for unparsable text and DomainError below 64 bits.
int resolve_precision(std::optional<int> flag, const char* env_value);

// "p/r", a decimal, "iq" for 1/(q-1), or "pi:<sequence>" for pi_q of a
// symbolic sequence such as "pi:1 (10)^inf".
Enclosure parse_point(std::string_view text, const Enclosure& q);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betacert::cli
