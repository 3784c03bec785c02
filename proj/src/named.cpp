#include "hopf/constructors.hpp"
#include "hopf/error.hpp"

namespace hopf {

namespace {

int mod(long long a, long long n) { return static_cast<int>(((a % n) + n) % n); }

int inverse_mod(int a, int p) {
  for (int b = 1; b < p; ++b)
    if (mod(static_cast<long long>(a) * b, p) == 1) return b;
  fail(ErrorCode::BadParameter, std::to_string(a) + " is not invertible mod " + std::to_string(p));
}

int resolve_conductor(int p, int conductor) {
  if (conductor == 0) return p * p;
  if (conductor < 0 || conductor % (p * p) != 0)
    fail(ErrorCode::FieldTooSmall, "conductor " + std::to_string(conductor) + " does not contain the p^2-th roots");
  return conductor;
}

std::string qlabel(const std::string& name, int p, int e, const std::string& extra = "") {
  return name + "(p=" + std::to_string(p) + ",q=" + std::to_string(e) + extra + ")";
}

Vec group_elem(const PresentationSpec& s, int k) {
  std::vector<int> a(s.skew.size(), 0);
  return unit_vector(s.dim(), s.index(a, {k}));
}

Vec skew_elem(const PresentationSpec& s, int i) {
  std::vector<int> a(s.skew.size(), 0);
  a[i] = 1;
  return unit_vector(s.dim(), s.index(a, {0}));
}

}  // namespace

void check_prime_param(int p) {
  bool prime = p >= 3 && p % 2 == 1;
  for (int d = 3; prime && d * d <= p; d += 2) prime = p % d != 0;
  if (!prime) fail(ErrorCode::BadParameter, "p must be an odd prime, got " + std::to_string(p));
}

int check_q_exponent(int p, int e) {
  check_prime_param(p);
  if (mod(e, p) == 0) fail(ErrorCode::BadParameter, "q exponent must be nonzero mod p");
  return mod(e, p);
}

PresentationSpec taft_spec(int p, int e, int conductor) {
  e = check_q_exponent(p, e);
  const int M = resolve_conductor(p, conductor), z = M / (p * p);
  PresentationSpec s;
  s.label = qlabel("taft", p, e);
  s.conductor = M;
  s.group_names = {"g"};
  s.group_orders = {p};
  s.skew.push_back({"x", p, {}, {p * e * z}, {0}, {1}});
  return s;
}

PresentationSpec ttilde_spec(int p, int e, int j, int conductor) {
  e = check_q_exponent(p, e);
  if (j < 0 || j >= p) fail(ErrorCode::BadParameter, "root choice j must lie in [0, p)");
  const int M = resolve_conductor(p, conductor), z = M / (p * p);
  PresentationSpec s;
  s.label = qlabel("ttilde", p, e, ",j=" + std::to_string(j));
  s.conductor = M;
  s.group_names = {"g"};
  s.group_orders = {p * p};
  s.skew.push_back({"x", p, {}, {(e + p * j) * z}, {p}, {0}});
  return s;
}

PresentationSpec that_spec(int p, int e, int conductor) {
  e = check_q_exponent(p, e);
  const int M = resolve_conductor(p, conductor), z = M / (p * p);
  PresentationSpec s;
  s.label = qlabel("that", p, e);
  s.conductor = M;
  s.group_names = {"g"};
  s.group_orders = {p * p};
  s.skew.push_back({"x", p, {}, {p * e * z}, {1}, {0}});
  return s;
}

PresentationSpec rq_spec(int p, int e, int conductor) {
  PresentationSpec s = that_spec(p, e, conductor);
  s.label = qlabel("rq", p, mod(e, p));
  s.skew[0].power_value = {{{0}, CycloNum(1)}, {{p}, CycloNum(-1)}};
  return s;
}

PresentationSpec uq_spec(int p, int e, int conductor) {
  e = check_q_exponent(p, e);
  const int M = resolve_conductor(p, conductor), z = M / (p * p);
  PresentationSpec s;
  s.label = qlabel("uq_sl2", p, e);
  s.conductor = M;
  s.group_names = {"g"};
  s.group_orders = {p};
  s.skew.push_back({"x", p, {}, {2 * p * e * z}, {1}, {0}});
  s.skew.push_back({"y", p, {}, {-2 * p * e * z}, {0}, {p - 1}});
  // xy - yx = g - g^{-1}
  s.rules.push_back({1, 0, CycloNum(1), {{{1}, CycloNum(-1)}, {{p - 1}, CycloNum(1)}}});
  return s;
}

PresentationSpec book_spec(int p, int e, int m, int conductor) {
  e = check_q_exponent(p, e);
  if (mod(m, p) == 0) fail(ErrorCode::BadParameter, "book parameter m must be nonzero mod p");
  m = mod(m, p);
  const int M = resolve_conductor(p, conductor), z = M / (p * p);
  PresentationSpec s;
  s.label = qlabel("book", p, e, ",m=" + std::to_string(m));
  s.conductor = M;
  s.group_names = {"g"};
  s.group_orders = {p};
  s.skew.push_back({"x", p, {}, {p * e * z}, {1}, {0}});
  s.skew.push_back({"y", p, {}, {p * e * m * z}, {0}, {m}});
  s.rules.push_back({1, 0, CycloNum(1), {}});
  return s;
}

FinHopf taft(int p, int e, int conductor) { return build_from_presentation(taft_spec(p, e, conductor)); }

FinHopf taft_tensor(int p, int e, int conductor) {
  const int M = resolve_conductor(p, conductor);
  FinHopf t = tensor(taft(p, e, M), group_algebra(cyclic_product_group({p}), M));
  t.label = qlabel("taft_tensor", p, mod(e, p));
  return t;
}

FinHopf that(int p, int e, int conductor) { return build_from_presentation(that_spec(p, e, conductor)); }
FinHopf rq(int p, int e, int conductor) { return build_from_presentation(rq_spec(p, e, conductor)); }
FinHopf uq_sl2(int p, int e, int conductor) { return build_from_presentation(uq_spec(p, e, conductor)); }

FinHopf ttilde(int p, int e, int j, int conductor) {
  FinHopf h = build_from_presentation(ttilde_spec(p, e, j, conductor));
  if (conductor == 0) {
    const int j2 = (j + 1) % p;
    h.claims.iso_fixtures.push_back({ttilde_spec(p, e, j2).label, ttilde_root_iso(p, e, j, j2)});
  }
  return h;
}

FinHopf book(int p, int e, int m, int conductor) {
  FinHopf h = build_from_presentation(book_spec(p, e, m, conductor));
  if (conductor == 0) {
    const int mi = inverse_mod(mod(m, p), p);
    const int e2 = mod(-static_cast<long long>(m) * m * e, p);
    h.claims.iso_fixtures.push_back({book_spec(p, e2, mi).label, book_swap_iso(p, e, m)});
    h.claims.iso_fixtures.push_back({"dual(" + book_spec(p, e, -m).label + ")", book_dual_iso(p, e, m)});
  }
  return h;
}

// g -> g'^{-m'}, x -> y' g'^{-m'}, y -> x' g'^{-1}.
Matrix book_swap_iso(int p, int e, int m) {
  const PresentationSpec src = book_spec(p, e, m);
  const int mi = inverse_mod(mod(m, p), p);
  const int e2 = mod(-static_cast<long long>(m) * m * e, p);
  const PresentationSpec ts = book_spec(p, e2, mi);
  const FinHopf t = build_from_presentation(ts);
  const Vec g = group_elem(ts, mod(-mi, p));
  const Vec x = hmul(t, skew_elem(ts, 1), g);
  const Vec y = hmul(t, skew_elem(ts, 0), group_elem(ts, p - 1));
  return extend_generator_map(src, {x, y, g}, t);
}

// g -> gamma, x -> xi gamma, y -> eta, where gamma is the character with
// g -> q^{-1}, xi = sum_c (x g^c)^* and eta = sum_c (y g^c)^*. In the dual,
// Delta(xi) = xi (x) 1 + chi_q (x) xi and Delta(eta) = eta (x) 1 + chi_{q^{-m}} (x) eta.
Matrix book_dual_iso(int p, int e, int m) {
  const PresentationSpec src = book_spec(p, e, m);
  const PresentationSpec ts = book_spec(p, e, -m);
  const FinHopf t = dual(build_from_presentation(ts));
  const int M = ts.conductor, z = M / (p * p);
  Vec gamma(ts.dim()), xi(ts.dim()), eta(ts.dim());
  for (int c = 0; c < p; ++c) {
    gamma[ts.index({0, 0}, {c})] = CycloNum::zeta(M, mod(-static_cast<long long>(p) * e * z * c, M));
    xi[ts.index({1, 0}, {c})] = CycloNum(1);
    eta[ts.index({0, 1}, {c})] = CycloNum(1);
  }
  return extend_generator_map(src, {hmul(t, xi, gamma), eta, gamma}, t);
}

// g -> g^{1+pl}, x -> x with l = (j - j2) e^{-1} mod p.
Matrix ttilde_root_iso(int p, int e, int j, int j2) {
  const PresentationSpec src = ttilde_spec(p, e, j);
  const PresentationSpec ts = ttilde_spec(p, e, j2);
  const FinHopf t = build_from_presentation(ts);
  const int l = mod(static_cast<long long>(j - j2) * inverse_mod(mod(e, p), p), p);
  return extend_generator_map(src, {skew_elem(ts, 0), group_elem(ts, 1 + p * l)}, t);
}

std::vector<std::string> constructor_names() {
  return {"group_algebra", "dual_group_algebra", "taft", "taft_tensor", "ttilde", "that", "rq", "uq_sl2", "book"};
}

FinHopf construct_by_name(const std::string& name, const ConstructorParams& a) {
  check_prime_param(a.p);
  if (name == "group_algebra" || name == "dual_group_algebra") {
    if (a.group.empty()) fail(ErrorCode::BadParameter, name + " needs a group");
    const FiniteGroup g = group_by_name(a.group, a.p);
    const int M = a.conductor == 0 ? default_group_conductor(g, a.p) : a.conductor;
    if (M < 1) fail(ErrorCode::BadParameter, "conductor must be positive");
    FinHopf h = group_algebra(g, M);
    return name == "group_algebra" ? h : dual(h);
  }
  if (name == "taft") return taft(a.p, a.q, a.conductor);
  if (name == "taft_tensor") return taft_tensor(a.p, a.q, a.conductor);
  if (name == "ttilde") return ttilde(a.p, a.q, a.j, a.conductor);
  if (name == "that") return that(a.p, a.q, a.conductor);
  if (name == "rq") return rq(a.p, a.q, a.conductor);
  if (name == "uq_sl2") return uq_sl2(a.p, a.q, a.conductor);
  if (name == "book") return book(a.p, a.q, a.m, a.conductor);
  fail(ErrorCode::BadParameter, "unknown constructor " + name);
}

}  // namespace hopf
