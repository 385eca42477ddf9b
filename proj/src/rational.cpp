#include "uhs/rational.hpp"

#include <numeric>

namespace uhs {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat: value out of range");
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rat make(i128 num, i128 den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rat(checked_narrow(num), checked_narrow(den));
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("Rat: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat operator+(const Rat& a, const Rat& b) {
  return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num_ == 0) throw std::invalid_argument("Rat: division by zero");
  return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

bool operator<(const Rat& a, const Rat& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat: empty string");
  std::size_t slash = s.find('/');
  try {
    std::size_t used = 0;
    std::int64_t num = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash))
      throw std::invalid_argument("trailing");
    std::int64_t den = 1;
    if (slash != std::string::npos) {
      den = std::stoll(s.substr(slash + 1), &used);
      if (used != s.size() - slash - 1) throw std::invalid_argument("trailing");
    }
    return Rat(num, den);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("Rat: cannot parse '" + s + "'");
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat: cannot parse '" + s + "'");
  }
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace uhs
