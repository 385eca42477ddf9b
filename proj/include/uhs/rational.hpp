#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace uhs {

/// Exact rational number, always in lowest terms with positive denominator.
/// Arithmetic throws std::overflow_error if a result leaves the int64 range.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rat abs() const { return num_ < 0 ? Rat(-num_, den_) : *this; }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(-num_, den_); }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
  static Rat parse(const std::string& s);

  /// Lowest-terms string: "0", "2", "-1/3", ...
  std::string str() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace uhs

template <>
struct std::hash<uhs::Rat> {
  std::size_t operator()(const uhs::Rat& r) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(r.num());
    return h * 1000003u ^ std::hash<std::int64_t>{}(r.den());
  }
};
