#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hd {

/// Exact scalar in (1/4)Z. Every measure and index in this library is a
/// multiple of a quarter, so the value is stored as an integer count of
/// quarter units.
struct Quarter {
  long long units = 0;  // value = units / 4

  constexpr Quarter() = default;

  static constexpr Quarter from_quarters(long long q) { return Quarter{q}; }
  static constexpr Quarter from_integer(long long n) { return Quarter{4 * n}; }

  constexpr bool is_integer() const { return units % 4 == 0; }

  long long to_integer() const {
    if (!is_integer()) throw std::domain_error("Quarter value " + str() + " is not an integer");
    return units / 4;
  }

  constexpr Quarter operator+(Quarter o) const { return Quarter{units + o.units}; }
  constexpr Quarter operator-(Quarter o) const { return Quarter{units - o.units}; }
  constexpr Quarter operator-() const { return Quarter{-units}; }
  constexpr Quarter operator*(long long n) const { return Quarter{units * n}; }
  Quarter& operator+=(Quarter o) { units += o.units; return *this; }
  Quarter& operator-=(Quarter o) { units -= o.units; return *this; }

  constexpr bool operator==(const Quarter&) const = default;
  constexpr bool operator<(Quarter o) const { return units < o.units; }
  constexpr bool operator<=(Quarter o) const { return units <= o.units; }
  constexpr bool operator>(Quarter o) const { return units > o.units; }
  constexpr bool operator>=(Quarter o) const { return units >= o.units; }

  /// Reduced fraction, e.g. "-1/4", "1/2", "3", "0".
  std::string str() const {
    long long n = units, d = 4;
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (d == 1) return std::to_string(n);
    return std::to_string(n) + "/" + std::to_string(d);
  }

private:
  explicit constexpr Quarter(long long q, int) : units(q) {}
  constexpr Quarter(long long q) : units(q) {}
  friend struct Twelfth;
};

/// Exact scalar in (1/12)Z, used only while evaluating expressions with
/// 1/3 coefficients. Converts back to Quarter when divisibility allows.
struct Twelfth {
  long long units = 0;  // value = units / 12

  static Twelfth from_quarter(Quarter q) { return Twelfth{3 * q.units}; }
  static Twelfth from_quarters_over_three(long long quarter_units) { return Twelfth{quarter_units}; }

  Twelfth operator+(Twelfth o) const { return Twelfth{units + o.units}; }
  Twelfth operator-(Twelfth o) const { return Twelfth{units - o.units}; }
  Twelfth operator*(long long n) const { return Twelfth{units * n}; }

  Quarter to_quarter() const {
    if (units % 3 != 0) throw std::domain_error("twelfth-exact value is not a quarter multiple");
    return Quarter::from_quarters(units / 3);
  }

private:
  explicit Twelfth(long long u) : units(u) {}
};

inline std::string to_string(Quarter q) { return q.str(); }

}  // namespace hd
