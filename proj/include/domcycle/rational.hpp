#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace domcycle {

/// Non-negative exact rational with a +infinity sentinel. Always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ <= 0) throw std::invalid_argument("rational denominator must be positive");
    if (num_ < 0) throw std::invalid_argument("rational must be non-negative");
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static constexpr Rational infinity() {
    Rational r;
    r.infinite_ = true;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  constexpr bool operator==(const Rational& o) const {
    if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
    return num_ == o.num_ && den_ == o.den_;
  }

  constexpr std::strong_ordering operator<=>(const Rational& o) const {
    if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
    // Cross-multiplication; operands stay tiny (vertex counts), no overflow.
    return num_ * o.den_ <=> o.num_ * den_;
  }

  std::string to_string() const {
    if (infinite_) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "p", "p/q" or "inf".
  static Rational parse(std::string_view text) {
    if (text == "inf") return infinity();
    auto to_int = [](std::string_view s) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
      return static_cast<std::int64_t>(std::stoll(std::string(s)));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(to_int(text));
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace domcycle
