#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace blowup {

/// Exact rational; gmp keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders `p` or `p/q`.
std::string to_string(const Rational& value);
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);
/// Throws Precondition when the value is not an integer that fits.
std::int64_t to_int64(const Rational& value);

/// Least positive rational that is an integer multiple of every input.
Rational rational_lcm(const Rational& a, const Rational& b);

Integer factorial(unsigned n);

/// Rational extended by an "infinite-plus" tier: every finite value is below
/// every infinite one, and within a tier values compare as rationals.
class ExtRational {
 public:
  enum class Tier { Finite, Infinite };

  ExtRational() = default;
  ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)
  ExtRational(long value) : value_(value) {}                 // NOLINT(implicit)

  static ExtRational infinite(Rational offset = 0) {
    ExtRational r(std::move(offset));
    r.tier_ = Tier::Infinite;
    return r;
  }

  Tier tier() const { return tier_; }
  bool is_finite() const { return tier_ == Tier::Finite; }
  bool is_infinite() const { return tier_ == Tier::Infinite; }
  const Rational& value() const { return value_; }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.tier_ == b.tier_ && a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.tier_ != b.tier_) return a.tier_ == Tier::Finite ? std::strong_ordering::less
                                                            : std::strong_ordering::greater;
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// `15/2`, `inf`, `inf+2`.
  std::string to_string() const;
  static ExtRational parse(std::string_view text);

 private:
  Tier tier_ = Tier::Finite;
  Rational value_ = 0;
};

}  // namespace blowup
