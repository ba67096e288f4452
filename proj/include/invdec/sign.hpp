#pragma once

namespace invdec {

enum class Sign : int { minus = -1, zero = 0, plus = 1 };

inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

inline Sign operator-(Sign a) { return static_cast<Sign>(-static_cast<int>(a)); }

inline int to_int(Sign s) { return static_cast<int>(s); }

inline const char* to_cstring(Sign s) {
  switch (s) {
    case Sign::minus: return "-";
    case Sign::zero: return "0";
    default: return "+";
  }
}

}  // namespace invdec
