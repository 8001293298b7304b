#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace pathweights {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rat {
 public:
  Rat() = default;

  template <std::integral T>
  Rat(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::signed_integral<T>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  /// Throws InvalidParameter when `den` is zero.
  Rat(std::int64_t num, std::int64_t den);

  /// Accepts "p" or "p/q" with an optional leading minus sign.
  static Rat parse(std::string_view text);

  /// Canonical text: "p" for integers, "p/q" otherwise.
  std::string str() const;

  std::string numerator_str() const;
  std::string denominator_str() const;
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& other);
  Rat& operator-=(const Rat& other);
  Rat& operator*=(const Rat& other);
  Rat& operator/=(const Rat& other);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat half() const;

  std::size_t hash() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rat(mpq_class value);
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace pathweights

template <>
struct std::hash<pathweights::Rat> {
  std::size_t operator()(const pathweights::Rat& r) const noexcept { return r.hash(); }
};
