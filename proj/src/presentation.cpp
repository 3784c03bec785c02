#include <map>

#include "hopf/constructors.hpp"
#include "hopf/error.hpp"

namespace hopf {

namespace {

int mod(long long a, long long n) { return static_cast<int>(((a % n) + n) % n); }

std::vector<int> add_exps(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& orders) {
  std::vector<int> r(orders.size());
  for (std::size_t j = 0; j < orders.size(); ++j) r[j] = mod(a[j] + b[j], orders[j]);
  return r;
}

std::vector<int> neg_exps(const std::vector<int>& a, const std::vector<int>& orders) {
  std::vector<int> r(orders.size());
  for (std::size_t j = 0; j < orders.size(); ++j) r[j] = mod(-a[j], orders[j]);
  return r;
}

struct RTerm {
  std::vector<int> word;
  std::vector<int> group;
  CycloNum coef;
};

class Rewriter {
 public:
  explicit Rewriter(const PresentationSpec& s) : s_(s) {
    for (const auto& r : s.rules) rules_[{r.later, r.earlier}] = &r;
  }

  // zeta^{sum h_j action_j}: h x = chi(h) x h.
  CycloNum chi(int gen, const std::vector<int>& h) const {
    long long e = 0;
    for (std::size_t j = 0; j < h.size(); ++j) e += static_cast<long long>(h[j]) * s_.skew[gen].action[j];
    return CycloNum::zeta(s_.conductor, mod(e, s_.conductor));
  }

  // Moves h right past the letters word[from..].
  CycloNum pass_right(const std::vector<int>& word, std::size_t from, const std::vector<int>& h) const {
    CycloNum c(1);
    for (std::size_t t = from; t < word.size(); ++t) c *= chi(word[t], h);
    return c;
  }

  void reduce(RTerm start, std::map<int, CycloNum>& out) {
    std::vector<RTerm> stack{std::move(start)};
    while (!stack.empty()) {
      RTerm t = std::move(stack.back());
      stack.pop_back();
      if (t.coef.is_zero()) continue;
      if (++steps_ > s_.step_budget) fail(ErrorCode::NonTerminatingRewrite, s_.label + ": rewrite budget exhausted");
      const auto& w = t.word;
      std::size_t pos = w.size();
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) {
          pos = i;
          break;
        }
      if (pos < w.size()) {
        auto it = rules_.find({w[pos], w[pos + 1]});
        if (it == rules_.end())
          fail(ErrorCode::BadParameter, s_.label + ": no commutation rule for " + s_.skew[w[pos]].name + "*" +
                                            s_.skew[w[pos + 1]].name);
        const CommutationRule& r = *it->second;
        if (!r.theta.is_zero()) {
          RTerm sw = t;
          std::swap(sw.word[pos], sw.word[pos + 1]);
          sw.coef *= r.theta;
          stack.push_back(std::move(sw));
        }
        splice(t, pos, 2, r.correction, stack);
        continue;
      }
      bool replaced = false;
      for (std::size_t i = 0; i < w.size();) {
        std::size_t e = i;
        while (e < w.size() && w[e] == w[i]) ++e;
        const int n = s_.skew[w[i]].order;
        if (static_cast<int>(e - i) >= n) {
          splice(t, i, n, s_.skew[w[i]].power_value, stack);
          replaced = true;
          break;
        }
        i = e;
      }
      if (replaced) continue;
      std::vector<int> a(s_.skew.size(), 0);
      for (int x : w) ++a[x];
      out[s_.index(a, t.group)] += t.coef;
    }
  }

 private:
  // Replaces word[pos, pos+len) by a group algebra element moved to the right.
  void splice(const RTerm& t, std::size_t pos, std::size_t len, const GroupAlgElem& value, std::vector<RTerm>& stack) {
    for (const auto& [h, k] : value) {
      RTerm n;
      n.word.assign(t.word.begin(), t.word.begin() + static_cast<long>(pos));
      n.word.insert(n.word.end(), t.word.begin() + static_cast<long>(pos + len), t.word.end());
      n.coef = t.coef * k * pass_right(t.word, pos + len, h);
      n.group = add_exps(h, t.group, s_.group_orders);
      stack.push_back(std::move(n));
    }
  }

  const PresentationSpec& s_;
  std::map<std::pair<int, int>, const CommutationRule*> rules_;
  long long steps_ = 0;
};

std::vector<int> word_of(const std::vector<int>& a) {
  std::vector<int> w;
  for (std::size_t i = 0; i < a.size(); ++i) w.insert(w.end(), a[i], static_cast<int>(i));
  return w;
}

void validate(const PresentationSpec& s) {
  const std::size_t ng = s.group_orders.size();
  if (s.conductor < 1) fail(ErrorCode::BadParameter, "conductor must be positive");
  for (int o : s.group_orders)
    if (o < 1) fail(ErrorCode::BadParameter, s.label + ": group generator order must be positive");
  for (const auto& x : s.skew) {
    if (x.order < 2) fail(ErrorCode::BadParameter, s.label + ": skew generator order must be at least 2");
    if (x.action.size() != ng || x.right.size() != ng || x.left.size() != ng)
      fail(ErrorCode::BadParameter, s.label + ": generator " + x.name + " has wrong group data length");
    for (const auto& [h, c] : x.power_value)
      if (h.size() != ng) fail(ErrorCode::BadParameter, s.label + ": power value outside the group algebra");
  }
  const int ns = static_cast<int>(s.skew.size());
  std::map<std::pair<int, int>, int> seen;
  for (const auto& r : s.rules) {
    if (r.later <= r.earlier || r.earlier < 0 || r.later >= ns)
      fail(ErrorCode::BadParameter, s.label + ": commutation rules must move a later generator past an earlier one");
    for (const auto& [h, c] : r.correction)
      if (h.size() != ng) fail(ErrorCode::BadParameter, s.label + ": correction outside the group algebra");
    ++seen[{r.later, r.earlier}];
  }
  for (int i = 0; i < ns; ++i)
    for (int j = i + 1; j < ns; ++j)
      if (seen[{j, i}] != 1) fail(ErrorCode::BadParameter, s.label + ": need exactly one rule per generator pair");
}

}  // namespace

int PresentationSpec::group_size() const {
  int n = 1;
  for (int o : group_orders) n *= o;
  return n;
}

int PresentationSpec::monomial_count() const {
  int n = 1;
  for (const auto& x : skew) n *= x.order;
  return n;
}

int PresentationSpec::index(const std::vector<int>& a, const std::vector<int>& c) const {
  int m = 0;
  for (std::size_t i = 0; i < skew.size(); ++i) m = m * skew[i].order + a[i];
  int g = 0;
  for (std::size_t j = 0; j < group_orders.size(); ++j) g = g * group_orders[j] + mod(c[j], group_orders[j]);
  return m * group_size() + g;
}

void PresentationSpec::decompose(int idx, std::vector<int>& a, std::vector<int>& c) const {
  int g = idx % group_size();
  int m = idx / group_size();
  c.assign(group_orders.size(), 0);
  for (std::size_t j = group_orders.size(); j-- > 0;) {
    c[j] = g % group_orders[j];
    g /= group_orders[j];
  }
  a.assign(skew.size(), 0);
  for (std::size_t i = skew.size(); i-- > 0;) {
    a[i] = m % skew[i].order;
    m /= skew[i].order;
  }
}

std::vector<Vec> solve_characters(const PresentationSpec& s) {
  validate(s);
  const int M = s.conductor;
  // x -> 0 for every skew generator: nilpotent ones must vanish, and one moved
  // by a nontrivial scalar satisfies phi(x) = chi phi(x).
  for (const auto& x : s.skew) {
    if (x.power_value.empty()) continue;
    bool moved = false;
    for (int a : x.action) moved = moved || mod(a, M) != 0;
    if (!moved) fail(ErrorCode::NonMonomialConstraint, s.label + ": " + x.name + " is neither nilpotent nor moved");
  }
  for (int o : s.group_orders)
    if (M % o != 0)
      fail(ErrorCode::FieldTooSmall, s.label + ": need " + std::to_string(o) + "-th roots of unity in conductor " +
                                         std::to_string(M));
  const std::size_t ng = s.group_orders.size();
  auto value = [&](const std::vector<int>& k, const GroupAlgElem& e) {
    CycloNum v;
    for (const auto& [h, c] : e) {
      long long x = 0;
      for (std::size_t j = 0; j < ng; ++j) x += static_cast<long long>(h[j]) * k[j];
      v += c * CycloNum::zeta(M, mod(x, M));
    }
    return v;
  };
  std::vector<Vec> out;
  std::vector<int> k(ng, 0);  // zeta_M exponents of the generator images
  while (true) {
    bool ok = true;
    for (const auto& r : s.rules) ok = ok && value(k, r.correction).is_zero();
    for (const auto& x : s.skew) ok = ok && value(k, x.power_value).is_zero();
    if (ok) {
      Vec chi(s.dim());
      std::vector<int> a, c;
      for (int idx = 0; idx < s.dim(); ++idx) {
        s.decompose(idx, a, c);
        bool pure = true;
        for (int ai : a) pure = pure && ai == 0;
        if (!pure) continue;
        long long x = 0;
        for (std::size_t j = 0; j < ng; ++j) x += static_cast<long long>(c[j]) * k[j];
        chi[idx] = CycloNum::zeta(M, mod(x, M));
      }
      out.push_back(std::move(chi));
    }
    std::size_t j = 0;
    for (; j < ng; ++j) {
      k[j] += M / s.group_orders[j];
      if (k[j] < M) break;
      k[j] = 0;
    }
    if (j == ng) break;
  }
  return out;
}

FinHopf build_from_presentation(const PresentationSpec& s) {
  validate(s);
  const int n = s.dim();
  const std::size_t ng = s.group_orders.size();
  const std::size_t ns = s.skew.size();
  Rewriter rw(s);

  FinHopf h;
  h.dim = n;
  h.conductor = s.conductor;
  h.label = s.label;

  std::vector<Entry3> mult;
  std::vector<int> a, c, b, d;
  for (int x = 0; x < n; ++x) {
    s.decompose(x, a, c);
    const std::vector<int> wa = word_of(a);
    for (int y = 0; y < n; ++y) {
      s.decompose(y, b, d);
      const std::vector<int> wb = word_of(b);
      RTerm t;
      t.word = wa;
      t.word.insert(t.word.end(), wb.begin(), wb.end());
      t.coef = rw.pass_right(t.word, wa.size(), c);
      t.group = add_exps(c, d, s.group_orders);
      std::map<int, CycloNum> out;
      rw.reduce(std::move(t), out);
      for (auto& [z, v] : out)
        if (!v.is_zero()) mult.push_back({x, y, z, v});
    }
  }
  h.mult = SparseTensor3(n, n, n, std::move(mult));
  h.unit = unit_vector(n, 0);
  h.counit = Vec(n);
  h.claims.grouplikes.clear();
  const std::vector<int> zero_a(ns, 0), zero_c(ng, 0);
  for (int g = 0; g < s.group_size(); ++g) {
    h.counit[g] = CycloNum(1);
    h.claims.grouplikes.push_back(unit_vector(n, g));
  }

  auto group_index = [&](const std::vector<int>& e) { return s.index(zero_a, e); };
  std::vector<Tensor> dgen_x(ns), dgen_g(ng);
  std::vector<Vec> sgen_x(ns), sgen_g(ng);
  std::vector<int> idx_x(ns), idx_g(ng);
  for (std::size_t j = 0; j < ng; ++j) {
    std::vector<int> e = zero_c;
    e[j] = 1;
    idx_g[j] = group_index(e);
    dgen_g[j] = {{static_cast<long long>(idx_g[j]) * n + idx_g[j], CycloNum(1)}};
    sgen_g[j] = unit_vector(n, group_index(neg_exps(e, s.group_orders)));
  }
  for (std::size_t i = 0; i < ns; ++i) {
    std::vector<int> e = zero_a;
    e[i] = 1;
    idx_x[i] = s.index(e, zero_c);
    const SkewGenerator& x = s.skew[i];
    Accum acc;
    acc.add(static_cast<long long>(idx_x[i]) * n + group_index(x.right), CycloNum(1));
    acc.add(static_cast<long long>(group_index(x.left)) * n + idx_x[i], CycloNum(1));
    dgen_x[i] = acc.finish();
    // S(x) = -v^{-1} x u^{-1} for Delta(x) = x (x) u + v (x) x
    Vec vinv = unit_vector(n, group_index(neg_exps(x.left, s.group_orders)));
    Vec uinv = unit_vector(n, group_index(neg_exps(x.right, s.group_orders)));
    sgen_x[i] = scale(hmul(h, hmul(h, vinv, unit_vector(n, idx_x[i])), uinv), CycloNum(-1));
  }

  // Monomial = first letter * rest, with rest of smaller index.
  std::vector<Tensor> delta(n);
  std::vector<Vec> anti(n);
  delta[0] = {{0, CycloNum(1)}};
  anti[0] = unit_vector(n, 0);
  for (int idx = 1; idx < n; ++idx) {
    s.decompose(idx, a, c);
    const Tensor* dfirst = nullptr;
    const Vec* sfirst = nullptr;
    std::size_t i = 0;
    while (i < ns && a[i] == 0) ++i;
    if (i < ns) {
      --a[i];
      dfirst = &dgen_x[i];
      sfirst = &sgen_x[i];
    } else {
      std::size_t j = 0;
      while (c[j] == 0) ++j;
      --c[j];
      dfirst = &dgen_g[j];
      sfirst = &sgen_g[j];
    }
    const int rest = s.index(a, c);
    delta[idx] = tmul2(h, *dfirst, delta[rest]);
    anti[idx] = hmul(h, anti[rest], *sfirst);
  }
  std::vector<Entry3> comult;
  for (int idx = 0; idx < n; ++idx)
    for (const auto& [key, v] : delta[idx])
      comult.push_back({idx, static_cast<int>(key / n), static_cast<int>(key % n), v});
  h.comult = SparseTensor3(n, n, n, std::move(comult));
  h.antipode = Matrix::from_columns(anti, n);
  h.claims.characters = solve_characters(s);
  require_hopf(h);
  return h;
}

Matrix extend_generator_map(const PresentationSpec& src, const std::vector<Vec>& images, const FinHopf& target) {
  const std::size_t ns = src.skew.size(), ng = src.group_orders.size();
  if (images.size() != ns + ng) fail(ErrorCode::DimensionMismatch, "one image per generator expected");
  std::vector<Vec> cols(src.dim());
  std::vector<int> a, c;
  for (int idx = 0; idx < src.dim(); ++idx) {
    src.decompose(idx, a, c);
    Vec v = target.unit;
    for (std::size_t i = 0; i < ns; ++i)
      for (int t = 0; t < a[i]; ++t) v = hmul(target, v, images[i]);
    for (std::size_t j = 0; j < ng; ++j)
      for (int t = 0; t < c[j]; ++t) v = hmul(target, v, images[ns + j]);
    cols[idx] = std::move(v);
  }
  return Matrix::from_columns(cols, target.dim);
}

}  // namespace hopf
