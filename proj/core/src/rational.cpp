#include "blowup/rational.hpp"

#include <limits>

#include "blowup/error.hpp"

namespace blowup {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AmbientMismatch: return "ambient-mismatch";
    case ErrorKind::UnknownVariable: return "unknown-variable";
    case ErrorKind::TruncationOverflow: return "truncation-overflow";
    case ErrorKind::NotInvertible: return "not-invertible";
    case ErrorKind::NoMaximalContact: return "no-maximal-contact";
    case ErrorKind::InfiniteOrder: return "infinite-order";
    case ErrorKind::InadmissibleCenter: return "inadmissible-center";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NonCoordinateCenter: return "non-coordinate-center";
    case ErrorKind::NoRationalWitness: return "no-rational-witness";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Budget: return "budget-exhausted";
  }
  return "unknown";
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value) || !value.get_num().fits_slong_p()) {
    throw Error(ErrorKind::Precondition, "expected a machine integer, got " + to_string(value));
  }
  return value.get_num().get_si();
}

Rational rational_lcm(const Rational& a, const Rational& b) {
  Integer num, den;
  mpz_lcm(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_gcd(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Rational r(num, den);
  r.canonicalize();
  return abs(r);
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string ExtRational::to_string() const {
  if (is_finite()) return blowup::to_string(value_);
  if (value_ == 0) return "inf";
  return (value_ > 0 ? "inf+" : "inf") + blowup::to_string(value_);
}

ExtRational ExtRational::parse(std::string_view text) {
  if (text.starts_with("inf")) {
    auto rest = text.substr(3);
    if (rest.empty()) return infinite();
    if (rest.front() == '+') rest.remove_prefix(1);
    return infinite(parse_rational(rest));
  }
  return ExtRational(parse_rational(text));
}

}  // namespace blowup
