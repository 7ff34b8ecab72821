#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "planarflow/error.hpp"

namespace planarflow {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Exact scaled arithmetic. A Weight holds value/2^scale for a scale exponent
// that is fixed per solve; the solver keeps every epsilon of the halving
// schedule integral at that scale. Finite magnitudes are capped at 2^120 and
// anything beyond raises OverflowGuard. Infinity is a distinguished sentinel:
// it saturates under addition and never mixes into finite arithmetic.
struct Weight {
  static constexpr int kMaxBits = 120;

  i128 v = 0;
  bool inf = false;

  Weight() = default;
  Weight(i128 value) : v(value) { guard(v); }  // NOLINT: implicit by design

  static Weight infinity() {
    Weight w;
    w.inf = true;
    return w;
  }

  static i128 bound() { return (i128(1) << kMaxBits); }

  static void guard(i128 x) {
    if (x >= bound() || x <= -bound()) throw OverflowGuard("weight magnitude");
  }

  bool finite() const { return !inf; }

  Weight operator+(const Weight& o) const {
    if (inf || o.inf) return infinity();
    i128 r = v + o.v;
    guard(r);
    return Weight(r);
  }
  Weight operator-() const {
    if (inf) throw OverflowGuard("negating infinite weight");
    return Weight(-v);
  }
  Weight operator-(const Weight& o) const {
    if (o.inf) throw OverflowGuard("subtracting infinite weight");
    if (inf) return infinity();
    i128 r = v - o.v;
    guard(r);
    return Weight(r);
  }
  Weight& operator+=(const Weight& o) { return *this = *this + o; }

  // Infinity compares greater than every finite value and equal to itself.
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.inf) return false;
    if (b.inf) return true;
    return a.v < b.v;
  }
  friend bool operator>(const Weight& a, const Weight& b) { return b < a; }
  friend bool operator<=(const Weight& a, const Weight& b) { return !(b < a); }
  friend bool operator>=(const Weight& a, const Weight& b) { return !(a < b); }
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.inf == b.inf && (a.inf || a.v == b.v);
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
};

inline i128 checked_mul(i128 a, i128 b) {
  if (a == 0 || b == 0) return 0;
  i128 r = a * b;
  if (r / b != a) throw OverflowGuard("i128 multiply");
  Weight::guard(r);
  return r;
}

inline i128 shift_left(i128 x, int bits) {
  for (int i = 0; i < bits; ++i) {
    x *= 2;
    Weight::guard(x);
  }
  return x;
}

inline std::string to_string(i128 x) {
  if (x == 0) return "0";
  bool neg = x < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)x : (unsigned __int128)x;
  std::string s;
  while (u) {
    s += char('0' + int(u % 10));
    u /= 10;
  }
  if (neg) s += '-';
  return std::string(s.rbegin(), s.rend());
}

inline std::string to_string(const Weight& w) {
  return w.inf ? "inf" : to_string(w.v);
}

}  // namespace planarflow
