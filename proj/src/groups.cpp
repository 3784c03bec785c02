#include <numeric>

#include "hopf/constructors.hpp"
#include "hopf/error.hpp"

namespace hopf {

namespace {

int mod(long long a, long long n) { return static_cast<int>(((a % n) + n) % n); }

}  // namespace

int FiniteGroup::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (table[a][b] == identity) return b;
  fail(ErrorCode::BadParameter, name + ": element without inverse");
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != identity) {
    x = table[x][a];
    ++k;
  }
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < order; ++a) e = std::lcm(e, element_order(a));
  return e;
}

FiniteGroup cyclic_product_group(const std::vector<int>& orders) {
  FiniteGroup g;
  g.order = 1;
  for (int o : orders) {
    if (o < 1) fail(ErrorCode::BadParameter, "cyclic factor order must be positive");
    g.order *= o;
    g.name += (g.name.empty() ? "Z" : "xZ") + std::to_string(o);
  }
  auto split = [&](int idx) {
    std::vector<int> e(orders.size());
    for (std::size_t j = orders.size(); j-- > 0;) {
      e[j] = idx % orders[j];
      idx /= orders[j];
    }
    return e;
  };
  auto join = [&](const std::vector<int>& e) {
    int idx = 0;
    for (std::size_t j = 0; j < orders.size(); ++j) idx = idx * orders[j] + mod(e[j], orders[j]);
    return idx;
  };
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      auto ea = split(a), eb = split(b);
      for (std::size_t j = 0; j < orders.size(); ++j) ea[j] += eb[j];
      g.table[a][b] = join(ea);
    }
  for (std::size_t j = 0; j < orders.size(); ++j) {
    std::vector<int> e(orders.size(), 0);
    e[j] = 1;
    g.generators.push_back(join(e));
  }
  return g;
}

// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'), index a p^2 + b p + c.
FiniteGroup heisenberg_group(int p) {
  FiniteGroup g;
  g.name = "heisenberg";
  g.order = p * p * p;
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      const int a = x / (p * p), b = (x / p) % p, c = x % p;
      const int a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      g.table[x][y] = mod(a + a2, p) * p * p + mod(b + b2, p) * p + mod(c + c2 + a * b2, p);
    }
  g.generators = {p * p, p};
  return g;
}

// (i,j)(i',j') = (i + (1+p)^j i', j + j'), i mod p^2, j mod p, index i p + j.
FiniteGroup metacyclic_group(int p) {
  FiniteGroup g;
  g.name = p == 3 ? "Z9sdZ3" : "metacyclic";
  const int n = p * p;
  g.order = n * p;
  std::vector<int> pw(p, 1);
  for (int j = 1; j < p; ++j) pw[j] = mod(static_cast<long long>(pw[j - 1]) * (1 + p), n);
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      const int i = x / p, j = x % p, i2 = y / p, j2 = y % p;
      g.table[x][y] = mod(i + static_cast<long long>(pw[j]) * i2, n) * p + mod(j + j2, p);
    }
  g.generators = {p, 1};
  return g;
}

FiniteGroup group_by_name(const std::string& name, int p) {
  if (name == "heisenberg") return heisenberg_group(p);
  if (name == "metacyclic" || name == "Z9sdZ3") {
    if (name == "Z9sdZ3" && p != 3) fail(ErrorCode::BadParameter, "Z9sdZ3 needs p = 3");
    return metacyclic_group(p);
  }
  std::vector<int> orders;
  std::size_t pos = 0;
  while (pos < name.size()) {
    if (name[pos] != 'Z') fail(ErrorCode::BadParameter, "unknown group " + name);
    std::size_t end = name.find('x', pos);
    if (end == std::string::npos) end = name.size();
    const std::string num = name.substr(pos + 1, end - pos - 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorCode::BadParameter, "unknown group " + name);
    orders.push_back(std::stoi(num));
    pos = end == name.size() ? end : end + 1;
  }
  if (orders.empty()) fail(ErrorCode::BadParameter, "empty group name");
  return cyclic_product_group(orders);
}

std::vector<Vec> group_characters(const FiniteGroup& g, int conductor) {
  const int M = conductor;
  const std::size_t ng = g.generators.size();
  std::vector<int> step(ng);
  for (std::size_t t = 0; t < ng; ++t) {
    const int o = g.element_order(g.generators[t]);
    step[t] = M / std::gcd(M, o);
  }
  std::vector<Vec> out;
  std::vector<int> k(ng, 0);
  std::vector<int> phi(g.order);
  std::vector<char> seen(g.order);
  while (true) {
    // Extend along words in the generators, then test the whole table.
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> queue{g.identity};
    phi[g.identity] = 0;
    seen[g.identity] = 1;
    bool ok = true;
    for (std::size_t h = 0; h < queue.size() && ok; ++h)
      for (std::size_t t = 0; t < ng; ++t) {
        const int y = g.table[queue[h]][g.generators[t]];
        const int v = mod(phi[queue[h]] + k[t], M);
        if (!seen[y]) {
          seen[y] = 1;
          phi[y] = v;
          queue.push_back(y);
        } else if (phi[y] != v) {
          ok = false;
          break;
        }
      }
    for (int a = 0; a < g.order && ok; ++a)
      for (int b = 0; b < g.order; ++b)
        if (phi[g.table[a][b]] != mod(phi[a] + phi[b], M)) {
          ok = false;
          break;
        }
    if (ok) {
      Vec chi(g.order);
      for (int a = 0; a < g.order; ++a) chi[a] = CycloNum::zeta(M, phi[a]);
      out.push_back(std::move(chi));
    }
    std::size_t t = 0;
    for (; t < ng; ++t) {
      k[t] += step[t];
      if (k[t] < M) break;
      k[t] = 0;
    }
    if (t == ng) break;
  }
  return out;
}

int default_group_conductor(const FiniteGroup& g, int p) { return std::lcm(p * p, g.exponent()); }

FinHopf group_algebra(const FiniteGroup& g, int conductor) {
  FinHopf h;
  const int n = g.order;
  h.dim = n;
  h.conductor = conductor;
  h.label = "k[" + g.name + "]";
  std::vector<Entry3> m, c;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) m.push_back({a, b, g.table[a][b], CycloNum(1)});
    c.push_back({a, a, a, CycloNum(1)});
  }
  h.mult = SparseTensor3(n, n, n, std::move(m));
  h.comult = SparseTensor3(n, n, n, std::move(c));
  h.unit = unit_vector(n, g.identity);
  h.counit = Vec(n, CycloNum(1));
  h.antipode = Matrix(n, n);
  for (int a = 0; a < n; ++a) {
    h.antipode.at(g.inverse(a), a) = CycloNum(1);
    h.claims.grouplikes.push_back(unit_vector(n, a));
  }
  h.claims.characters = group_characters(g, conductor);
  require_hopf(h);
  return h;
}

}  // namespace hopf
