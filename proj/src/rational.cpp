#include "hopf/rational.hpp"

#include <cctype>
#include <climits>

#include "hopf/error.hpp"

namespace hopf {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t uabs64(std::int64_t v) { return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v); }

void mpz_set_i128(mpz_t z, i128 v) {
  u128 u = uabs(v);
  std::uint64_t limbs[2] = {std::uint64_t(u), std::uint64_t(u >> 64)};
  mpz_import(z, 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  if (v < 0) mpz_neg(z, z);
}

mpq_class small_to_mpq(std::int64_t n, std::int64_t d) {
  mpq_class q;
  mpz_set_si(q.get_num_mpz_t(), n);
  mpz_set_si(q.get_den_mpz_t(), d);
  return q;
}

bool fits_small(i128 v) { return v > i128(INT64_MIN) && v <= i128(INT64_MAX); }

}  // namespace

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotAHopfIdeal: return "NotAHopfIdeal";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NotAnIntegral: return "NotAnIntegral";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::ClaimNotGrouplike: return "ClaimNotGrouplike";
    case ErrorCode::ClaimIncomplete: return "ClaimIncomplete";
    case ErrorCode::ClaimOvercomplete: return "ClaimOvercomplete";
    case ErrorCode::AntipodeOrderExceedsBound: return "AntipodeOrderExceedsBound";
    case ErrorCode::NotAHopfMap: return "NotAHopfMap";
    case ErrorCode::SectionFails: return "SectionFails";
    case ErrorCode::NonTerminatingRewrite: return "NonTerminatingRewrite";
    case ErrorCode::NonMonomialConstraint: return "NonMonomialConstraint";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::WeakActionFails: return "WeakActionFails";
    case ErrorCode::CocycleConditionFails: return "CocycleConditionFails";
    case ErrorCode::NotQuasitriangular: return "NotQuasitriangular";
    case ErrorCode::NotRibbon: return "NotRibbon";
    case ErrorCode::ScaleGateExceeded: return "ScaleGateExceeded";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DimensionGateExceeded: return "DimensionGateExceeded";
    case ErrorCode::IntegralSpaceNotOneDim: return "IntegralSpaceNotOneDim";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ExtractionInconsistent: return "ExtractionInconsistent";
    case ErrorCode::NotGrouplike: return "NotGrouplike";
    case ErrorCode::FixtureRejected: return "FixtureRejected";
    case ErrorCode::IdentityFails: return "IdentityFails";
  }
  return "Unknown";
}

Rational::Rational(long long n, long long d) {
  if (d == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  *this = from_mpq(small_to_mpq(n, d));
}

Rational Rational::make_big(mpq_class q) {
  q.canonicalize();
  const mpz_srcptr n = q.get_num_mpz_t();
  const mpz_srcptr d = q.get_den_mpz_t();
  if (mpz_fits_slong_p(n) && mpz_fits_slong_p(d) && mpz_cmp_si(n, LONG_MIN) != 0) {
    Rational r;
    r.num_ = mpz_get_si(n);
    r.den_ = mpz_get_si(d);
    return r;
  }
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(const mpq_class& q) { return make_big(q); }

Rational Rational::from_i128(i128 n, i128 d) {
  if (fits_small(n) && fits_small(d)) {
    Rational r;
    r.num_ = std::int64_t(n);
    r.den_ = std::int64_t(d);
    return r;
  }
  mpq_class q;
  mpz_set_i128(q.get_num_mpz_t(), n);
  mpz_set_i128(q.get_den_mpz_t(), d);
  return make_big(std::move(q));
}

Rational Rational::parse(std::string_view s) {
  std::string t(s);
  auto trim = [](std::string& x) {
    std::size_t a = x.find_first_not_of(" \t");
    std::size_t b = x.find_last_not_of(" \t");
    x = a == std::string::npos ? std::string() : x.substr(a, b - a + 1);
  };
  trim(t);
  if (t.empty()) fail(ErrorCode::ParseError, "empty rational");
  for (char c : t)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+'))
      fail(ErrorCode::ParseError, "bad rational '" + t + "'");
  mpq_class q;
  if (q.set_str(t, 10) != 0) fail(ErrorCode::ParseError, "bad rational '" + t + "'");
  if (q.get_den() == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  return make_big(std::move(q));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const { return big_ ? *big_ : small_to_mpq(num_, den_); }

Rational Rational::operator-() const {
  if (!big_) return from_i128(-i128(num_), den_);
  return make_big(-*big_);
}

Rational Rational::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational");
  if (!big_) {
    i128 n = den_, d = num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return from_i128(n, d);
  }
  return make_big(1 / *big_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_i128(i128(a.num_) + b.num_, 1);
    i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    i128 d = i128(a.den_) * b.den_;
    if (n == 0) return Rational();
    u128 g = gcd_u128(uabs(n), u128(d));
    return Rational::from_i128(n / i128(g), d / i128(g));
  }
  return Rational::make_big(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_i128(i128(a.num_) * b.num_, 1);
    std::uint64_t g1 = gcd_u64(uabs64(a.num_), std::uint64_t(b.den_));
    std::uint64_t g2 = gcd_u64(uabs64(b.num_), std::uint64_t(a.den_));
    i128 n = i128(a.num_ / std::int64_t(g1)) * (b.num_ / std::int64_t(g2));
    i128 d = i128(a.den_ / std::int64_t(g2)) * (b.den_ / std::int64_t(g1));
    return Rational::from_i128(n, d);
  }
  return Rational::make_big(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in storage class
}

std::string Rational::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace hopf
