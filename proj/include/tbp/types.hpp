#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tbp {

// All times are integral. lambda >= 1 on every edge, so walk lengths are
// bounded and exhaustive enumeration terminates.
using Time = std::int64_t;
using Vertex = std::int32_t;

// Sentinels for "no valid value": kInf for min-objectives (earliest arrival,
// duration, distance), kNegInf for max-objectives (latest departure).
inline constexpr Time kInf = std::numeric_limits<Time>::max();
inline constexpr Time kNegInf = std::numeric_limits<Time>::min();

struct TimeWindow {
  Time alpha = 0;  // no edge may start before alpha
  Time omega = 0;  // no edge may end after omega

  TimeWindow() = default;
  TimeWindow(Time a, Time o) : alpha(a), omega(o) {
    if (a > o) throw std::invalid_argument("time window: alpha > omega");
  }
};

// Serializes a time value; sentinels become the literals "inf" / "-inf".
inline std::string format_time(Time t) {
  if (t == kInf) return "inf";
  if (t == kNegInf) return "-inf";
  return std::to_string(t);
}

// Raised on malformed input files; messages carry the offending line number.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tbp
