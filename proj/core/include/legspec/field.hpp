#pragma once

#include <cstdint>
#include <ostream>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace legspec {

/// Element of the two-element field. Addition is XOR, multiplication is AND.
class F2 {
 public:
  constexpr F2() = default;
  constexpr F2(int v) : bit_(static_cast<std::uint8_t>(v & 1)) {}  // NOLINT: implicit from literals

  [[nodiscard]] constexpr bool is_zero() const { return bit_ == 0; }
  [[nodiscard]] constexpr std::uint8_t bit() const { return bit_; }

  friend constexpr F2 operator+(F2 a, F2 b) { return F2(a.bit_ ^ b.bit_); }
  friend constexpr F2 operator-(F2 a, F2 b) { return F2(a.bit_ ^ b.bit_); }
  friend constexpr F2 operator-(F2 a) { return a; }
  friend constexpr F2 operator*(F2 a, F2 b) { return F2(a.bit_ & b.bit_); }
  friend F2 operator/(F2 a, F2 b);
  constexpr F2& operator+=(F2 b) { bit_ ^= b.bit_; return *this; }
  constexpr F2& operator-=(F2 b) { bit_ ^= b.bit_; return *this; }
  constexpr F2& operator*=(F2 b) { bit_ &= b.bit_; return *this; }
  friend constexpr bool operator==(F2 a, F2 b) = default;

  friend std::ostream& operator<<(std::ostream& os, F2 a) { return os << int(a.bit_); }

 private:
  std::uint8_t bit_ = 0;
};

using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field selector used where the choice is made at run time.
enum class Field { f2, q };

[[nodiscard]] std::string_view to_string(Field field);
[[nodiscard]] Field parse_field(std::string_view text);

template <class F>
[[nodiscard]] bool is_zero(const F& x) {
  if constexpr (std::is_same_v<F, F2>) {
    return x.is_zero();
  } else {
    return x == 0;
  }
}

}  // namespace legspec
