#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mwcut {

/// Exact rational number in canonical form (gcd 1, positive denominator).
///
/// Values whose numerator and denominator fit in 63 bits are stored inline;
/// anything larger is promoted to an arbitrary-precision representation and
/// demoted again as soon as it fits. The two representations never coexist
/// for the same value, so equality can compare either pair directly.
class Rational {
 public:
  using Big = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t value) { assign_wide(value, 1); }  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    assign_wide(num, den);
  }
  explicit Rational(const Big& big) { assign_big(big); }

  /// Parses "p", "-p", "p/q". Whitespace is not accepted.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    auto parse_int = [](std::string_view s) {
      if (s.empty()) throw std::invalid_argument("Rational: empty integer");
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) throw std::invalid_argument("Rational: bad integer");
      for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("Rational: bad integer '" + std::string(s) + "'");
      }
      return boost::multiprecision::cpp_int(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    if (slash == std::string_view::npos) return Rational(Big(parse_int(text)));
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(Big(num, den));
  }

  bool is_small() const { return !big_; }
  /// Numerator and denominator in lowest terms; only valid when is_small().
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return !big_ && num_ == 0; }
  int sign() const {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
  }
  bool is_integer() const {
    return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
  }

  Big to_big() const { return big_ ? *big_ : Big(num_, den_); }
  double to_double() const {
    return big_ ? big_->convert_to<double>() : static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (big_) return big_->str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (big_) return Rational(Big(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      if (a.den_ == b.den_) return from_wide(static_cast<Wide>(a.num_) + b.num_, a.den_);
      return from_wide(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                       static_cast<Wide>(a.den_) * b.den_);
    }
    return Rational(a.to_big() + b.to_big());
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      if (a.den_ == b.den_) return from_wide(static_cast<Wide>(a.num_) - b.num_, a.den_);
      return from_wide(static_cast<Wide>(a.num_) * b.den_ - static_cast<Wide>(b.num_) * a.den_,
                       static_cast<Wide>(a.den_) * b.den_);
    }
    return Rational(a.to_big() - b.to_big());
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      return from_wide(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
    }
    return Rational(a.to_big() * b.to_big());
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    if (a.is_small() && b.is_small()) {
      Wide num = static_cast<Wide>(a.num_) * b.den_;
      Wide den = static_cast<Wide>(a.den_) * b.num_;
      if (den < 0) {
        num = -num;
        den = -den;
      }
      return from_wide(num, den);
    }
    return Rational(a.to_big() / b.to_big());
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.is_small() != b.is_small()) return false;  // canonical: a value has exactly one representation
    if (a.is_small()) return a.num_ == b.num_ && a.den_ == b.den_;
    return *a.big_ == *b.big_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      Wide lhs = static_cast<Wide>(a.num_) * b.den_;
      Wide rhs = static_cast<Wide>(b.num_) * a.den_;
      return lhs <=> rhs;
    }
    auto x = a.to_big();
    auto y = b.to_big();
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using Wide = __int128;

  static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

  static Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static boost::multiprecision::cpp_int to_cpp_int(Wide v) {
    bool neg = v < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    boost::multiprecision::cpp_int r = static_cast<std::uint64_t>(mag >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(mag);
    return neg ? boost::multiprecision::cpp_int(-r) : r;
  }

  // den > 0 required.
  static Rational from_wide(Wide num, Wide den) {
    Rational r;
    r.assign_wide(num, den);
    return r;
  }

  void assign_wide(Wide num, Wide den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      set_small(0, 1);
      return;
    }
    Wide g = wide_gcd(num, den);
    num /= g;
    den /= g;
    if (num <= kMax && num >= -kMax && den <= kMax) {
      set_small(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    } else {
      big_ = std::make_shared<const Big>(to_cpp_int(num), to_cpp_int(den));
    }
  }

  void assign_big(const Big& big) {
    const auto& n = boost::multiprecision::numerator(big);
    const auto& d = boost::multiprecision::denominator(big);
    if (n <= kMax && n >= -kMax && d <= kMax) {
      set_small(n.convert_to<std::int64_t>(), d.convert_to<std::int64_t>());
    } else {
      big_ = std::make_shared<const Big>(big);
    }
  }

  void set_small(std::int64_t num, std::int64_t den) {
    num_ = num;
    den_ = den;
    big_.reset();
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

}  // namespace mwcut
