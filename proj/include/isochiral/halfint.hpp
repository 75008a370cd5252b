#pragma once

#include <cmath>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace isochiral {

// Half-integer quantum number stored as 2x its value, so j, m, m' stay exact.
class HalfInt {
 public:
  constexpr HalfInt() : tw_(0) {}
  constexpr explicit HalfInt(int twice_value) : tw_(twice_value) {}

  static constexpr HalfInt from_twice(int tw) { return HalfInt(tw); }
  static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }
  // Nearest half-integer to x; throws if x is not within tol of one.
  static HalfInt from_double(double x, double tol = 1e-9) {
    const double tw = 2.0 * x;
    const double r = std::round(tw);
    if (std::abs(tw - r) > tol)
      throw std::invalid_argument("HalfInt: " + std::to_string(x) +
                                  " is not a half-integer");
    return HalfInt(static_cast<int>(r));
  }

  constexpr int twice() const { return tw_; }
  constexpr double value() const { return 0.5 * tw_; }
  constexpr bool is_integer() const { return (tw_ % 2) == 0; }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(tw_ + o.tw_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(tw_ - o.tw_); }
  constexpr HalfInt operator-() const { return HalfInt(-tw_); }
  HalfInt& operator+=(HalfInt o) { tw_ += o.tw_; return *this; }
  HalfInt& operator-=(HalfInt o) { tw_ -= o.tw_; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  constexpr HalfInt abs() const { return HalfInt(tw_ < 0 ? -tw_ : tw_); }

  std::string str() const {
    if (is_integer()) return std::to_string(tw_ / 2);
    return std::to_string(tw_) + "/2";
  }

 private:
  int tw_;
};

constexpr HalfInt operator""_half(unsigned long long tw) {
  return HalfInt(static_cast<int>(tw));
}

// true when a - b is a whole integer
inline bool integer_spaced(HalfInt a, HalfInt b) {
  return ((a.twice() - b.twice()) % 2) == 0;
}

}  // namespace isochiral
