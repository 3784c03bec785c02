#include "hopf/cyclo.hpp"

#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "hopf/error.hpp"

namespace hopf {

namespace {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic polynomial.
IntPoly poly_div_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    long long c = a[k];
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  for (std::size_t j = 0; j < db; ++j)
    if (a[j] != 0) fail(ErrorCode::VerificationFailed, "inexact cyclotomic division");
  return q;
}

struct Field {
  int m = 1;
  int phi = 1;
  IntPoly poly;
  // X^k mod Phi_M for k in [phi, 2*phi-2], as sparse (index, coeff) lists.
  std::vector<std::vector<std::pair<int, long long>>> high;
};

std::unique_ptr<Field> build_field(int m) {
  auto f = std::make_unique<Field>();
  f->m = m;
  f->poly = cyclotomic_polynomial(m);
  f->phi = static_cast<int>(f->poly.size()) - 1;
  const int phi = f->phi;
  std::vector<long long> cur(phi, 0);  // X^{phi} mod Phi = -(Phi - X^phi)
  for (int j = 0; j < phi; ++j) cur[j] = -f->poly[j];
  for (int k = phi; k <= 2 * phi - 2; ++k) {
    std::vector<std::pair<int, long long>> sp;
    for (int j = 0; j < phi; ++j)
      if (cur[j] != 0) sp.emplace_back(j, cur[j]);
    f->high.push_back(std::move(sp));
    // multiply by X
    long long top = cur[phi - 1];
    for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (int j = 0; j < phi; ++j) cur[j] -= top * f->poly[j];
  }
  return f;
}

const Field& field(int m) {
  static std::array<std::atomic<const Field*>, 512> fast{};
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> store;
  if (m >= 1 && m < 512) {
    const Field* p = fast[m].load(std::memory_order_acquire);
    if (p) return *p;
  }
  std::lock_guard<std::mutex> lock(mu);
  auto it = store.find(m);
  if (it == store.end()) it = store.emplace(m, build_field(m)).first;
  if (m >= 1 && m < 512) fast[m].store(it->second.get(), std::memory_order_release);
  return *it->second;
}

using RPoly = std::vector<Rational>;

void rtrim(RPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder and quotient of a by b over Q (b nonzero, trimmed).
void rdivmod(RPoly a, const RPoly& b, RPoly& q, RPoly& r) {
  rtrim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational());
  const Rational lead_inv = b.back().inv();
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    rtrim(a);
  }
  r = std::move(a);
}

}  // namespace

int euler_phi(int m) {
  int r = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1) fail(ErrorCode::BadParameter, "conductor must be positive");
  IntPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  IntPoly den{1};
  for (int d = 1; d < m; ++d)
    if (m % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
  return poly_div_monic(num, den);
}

CycloNum::CycloNum(const Rational& r) {
  if (!r.is_zero()) c_.push_back(r);
}

CycloNum::CycloNum(int conductor, const Rational& r) : m_(conductor) {
  if (conductor < 1) fail(ErrorCode::BadParameter, "conductor must be positive");
  if (!r.is_zero()) c_.push_back(r);
}

CycloNum CycloNum::zero(int conductor) { return CycloNum(conductor, Rational()); }

CycloNum CycloNum::zeta(int conductor, long long k) {
  long long e = ((k % conductor) + conductor) % conductor;
  RPoly p(e + 1, Rational());
  p[e] = Rational(1);
  return from_poly(conductor, p);
}

CycloNum CycloNum::from_poly(int conductor, const std::vector<Rational>& poly) {
  const Field& f = field(conductor);
  RPoly a(std::min<std::size_t>(poly.size(), conductor), Rational());
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (!poly[i].is_zero()) a[i % conductor] += poly[i];
  rtrim(a);
  for (std::size_t k = a.size(); k-- > static_cast<std::size_t>(f.phi);) {
    if (a[k].is_zero()) continue;
    Rational c = a[k];
    for (int j = 0; j <= f.phi; ++j)
      if (f.poly[j] != 0) a[k - f.phi + j] -= c * Rational(f.poly[j]);
  }
  if (a.size() > static_cast<std::size_t>(f.phi)) a.resize(f.phi);
  CycloNum r;
  r.m_ = conductor;
  r.c_ = std::move(a);
  r.trim();
  return r;
}

void CycloNum::trim() { rtrim(c_); }

std::vector<Rational> CycloNum::coords() const {
  std::vector<Rational> out = c_;
  out.resize(field(m_).phi, Rational());
  return out;
}

Rational CycloNum::rational_value() const {
  if (!is_rational()) fail(ErrorCode::BadParameter, "not a rational value: " + str());
  return c_.empty() ? Rational() : c_[0];
}

int CycloNum::join(int a, int b) {
  if (a == b) return a;
  if (a == 1) return b;
  if (b == 1) return a;
  fail(ErrorCode::ConductorMismatch, "conductors " + std::to_string(a) + " and " + std::to_string(b));
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& b) {
  m_ = join(m_, b.m_);
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    if (!b.c_[i].is_zero()) c_[i] += b.c_[i];
  trim();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& b) {
  m_ = join(m_, b.m_);
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    if (!b.c_[i].is_zero()) c_[i] -= b.c_[i];
  trim();
  return *this;
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  CycloNum r = a;
  r += b;
  return r;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) {
  CycloNum r = a;
  r -= b;
  return r;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  const int m = CycloNum::join(a.m_, b.m_);
  CycloNum r;
  r.m_ = m;
  if (a.c_.empty() || b.c_.empty()) return r;
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    const CycloNum& s = a.c_.size() == 1 ? a : b;
    const CycloNum& v = a.c_.size() == 1 ? b : a;
    r.c_.reserve(v.c_.size());
    for (const auto& x : v.c_) r.c_.push_back(x * s.c_[0]);
    r.trim();
    return r;
  }
  const Field& f = field(m);
  RPoly prod(a.c_.size() + b.c_.size() - 1, Rational());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  const std::size_t phi = f.phi;
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    for (const auto& [j, c] : f.high[k - phi]) prod[j] += prod[k] * Rational(c);
  }
  if (prod.size() > phi) prod.resize(phi);
  r.c_ = std::move(prod);
  r.trim();
  return r;
}

void CycloNum::addmul(const CycloNum& a, const CycloNum& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  if (a.c_.size() == 1 && b.c_.size() == 1) {
    m_ = join(m_, join(a.m_, b.m_));
    if (c_.empty()) c_.resize(1);
    c_[0] += a.c_[0] * b.c_[0];
    trim();
    return;
  }
  *this += a * b;
}

CycloNum CycloNum::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return CycloNum(m_, c_[0].inv());
  const Field& f = field(m_);
  RPoly r0(f.poly.begin(), f.poly.end());
  RPoly r1 = c_;
  RPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    RPoly q, r;
    rdivmod(r0, r1, q, r);
    // s0 - q*s1
    RPoly ns(std::max(s0.size(), q.size() + s1.size() - 1), Rational());
    for (std::size_t i = 0; i < s0.size(); ++i) ns[i] += s0[i];
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) ns[i + j] -= q[i] * s1[j];
    rtrim(ns);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  if (r1.empty()) fail(ErrorCode::DivisionByZero, "non-invertible cyclotomic element");
  Rational c = r1[0].inv();
  for (auto& x : s1) x *= c;
  return from_poly(m_, s1);
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) {
  CycloNum::join(a.m_, b.m_);
  return a * b.inv();
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.m_ != b.m_ && a.m_ != 1 && b.m_ != 1) return false;
  return a.c_ == b.c_;
}

CycloNum CycloNum::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  CycloNum result = CycloNum::one(m_);
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CycloNum CycloNum::embed(int new_conductor) const {
  if (new_conductor < 1 || new_conductor % m_ != 0)
    fail(ErrorCode::NotASubfield, "conductor " + std::to_string(m_) + " does not divide " +
                                      std::to_string(new_conductor));
  if (new_conductor == m_) return *this;
  const int step = new_conductor / m_;
  RPoly p(c_.empty() ? 0 : (c_.size() - 1) * step + 1, Rational());
  for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return from_poly(new_conductor, p);
}

std::string CycloNum::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[i].str();
    if (i == 1) out += "*z";
    if (i > 1) out += "*z^" + std::to_string(i);
  }
  return out;
}

CycloNum CycloNum::parse(std::string_view text, int conductor) {
  RPoly poly;
  std::size_t pos = 0;
  bool any = false;
  while (pos <= text.size()) {
    std::size_t next = text.find('+', pos);
    std::string_view term = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    while (!term.empty() && (term.front() == ' ' || term.front() == '\t')) term.remove_prefix(1);
    while (!term.empty() && (term.back() == ' ' || term.back() == '\t')) term.remove_suffix(1);
    if (term.empty()) fail(ErrorCode::ParseError, "empty term in '" + std::string(text) + "'");
    Rational coeff(1);
    long long power = 0;
    std::size_t star = term.find('*');
    std::string_view zpart;
    if (star != std::string_view::npos) {
      coeff = Rational::parse(term.substr(0, star));
      zpart = term.substr(star + 1);
    } else if (term.front() == 'z') {
      zpart = term;
    } else {
      coeff = Rational::parse(term);
    }
    if (!zpart.empty()) {
      if (zpart == "z") {
        power = 1;
      } else if (zpart.size() > 2 && zpart.substr(0, 2) == "z^") {
        std::string digits(zpart.substr(2));
        if (digits.find_first_not_of("0123456789") != std::string::npos)
          fail(ErrorCode::ParseError, "bad exponent in '" + std::string(term) + "'");
        power = std::stoll(digits);
      } else {
        fail(ErrorCode::ParseError, "bad term '" + std::string(term) + "'");
      }
    }
    if (static_cast<std::size_t>(power) >= poly.size()) poly.resize(power + 1);
    poly[power] += coeff;
    any = true;
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (!any) fail(ErrorCode::ParseError, "empty number");
  return from_poly(conductor, poly);
}

}  // namespace hopf
