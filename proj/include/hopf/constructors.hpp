#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopf/hopf.hpp"

namespace hopf {

// Element of the group algebra of the presentation's abelian group part,
// keyed by exponent vectors.
using GroupTerm = std::pair<std::vector<int>, CycloNum>;
using GroupAlgElem = std::vector<GroupTerm>;

// Nilpotent-type generator x with g_j x g_j^{-1} = zeta_M^{action[j]} x,
// x^N = power_value and Delta(x) = x (x) g^right + g^left (x) x.
struct SkewGenerator {
  std::string name;
  int order = 0;
  GroupAlgElem power_value;
  std::vector<int> action;
  std::vector<int> right;
  std::vector<int> left;
};

// x_later x_earlier = theta x_earlier x_later + correction, later > earlier.
struct CommutationRule {
  int later = 1;
  int earlier = 0;
  CycloNum theta = CycloNum(1);
  GroupAlgElem correction;
};

struct PresentationSpec {
  std::string label;
  int conductor = 1;
  std::vector<std::string> group_names;
  std::vector<int> group_orders;
  std::vector<SkewGenerator> skew;
  std::vector<CommutationRule> rules;
  long long step_budget = 1 << 22;

  int group_size() const;
  int monomial_count() const;
  int dim() const { return monomial_count() * group_size(); }
  // Basis index of x_1^{a_1}...x_s^{a_s} g^c.
  int index(const std::vector<int>& a, const std::vector<int>& c) const;
  void decompose(int idx, std::vector<int>& a, std::vector<int>& c) const;
};

FinHopf build_from_presentation(const PresentationSpec& spec);
std::vector<Vec> solve_characters(const PresentationSpec& spec);
// Images listed as skew generators first, then group generators.
Matrix extend_generator_map(const PresentationSpec& src, const std::vector<Vec>& images, const FinHopf& target);

struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = index of ab
  std::vector<int> generators;
  int identity = 0;

  int inverse(int a) const;
  int element_order(int a) const;
  int exponent() const;
};

FiniteGroup cyclic_product_group(const std::vector<int>& orders);
FiniteGroup heisenberg_group(int p);
FiniteGroup metacyclic_group(int p);  // Z/p^2 x| Z/p, generator acting by 1+p
// Named groups: Z<n>, products like Z9xZ3, heisenberg, Z9sdZ3 (p=3 spelling
// of the metacyclic group), for general p "metacyclic".
FiniteGroup group_by_name(const std::string& name, int p);

// Homomorphisms G -> mu_M, as covectors on k[G].
std::vector<Vec> group_characters(const FiniteGroup& g, int conductor);
FinHopf group_algebra(const FiniteGroup& g, int conductor);
int default_group_conductor(const FiniteGroup& g, int p);

// q = zeta_{p^2}^{p*e}; all constructors use conductor p^2 unless told otherwise.
void check_prime_param(int p);
int check_q_exponent(int p, int e);

// conductor 0 means p^2; any other value must be a multiple of p^2.
PresentationSpec taft_spec(int p, int e, int conductor = 0);
PresentationSpec ttilde_spec(int p, int e, int j, int conductor = 0);
PresentationSpec that_spec(int p, int e, int conductor = 0);
PresentationSpec rq_spec(int p, int e, int conductor = 0);
PresentationSpec uq_spec(int p, int e, int conductor = 0);
PresentationSpec book_spec(int p, int e, int m, int conductor = 0);

FinHopf taft(int p, int e, int conductor = 0);
FinHopf taft_tensor(int p, int e, int conductor = 0);
FinHopf ttilde(int p, int e, int j, int conductor = 0);
FinHopf that(int p, int e, int conductor = 0);
FinHopf rq(int p, int e, int conductor = 0);
FinHopf uq_sl2(int p, int e, int conductor = 0);
FinHopf book(int p, int e, int m, int conductor = 0);

// Fixture maps between constructed algebras.
Matrix book_swap_iso(int p, int e, int m);   // h(q,m) -> h(q^{-m^2}, m^{-1})
Matrix book_dual_iso(int p, int e, int m);   // h(q,m) -> h(q,-m)^*
Matrix ttilde_root_iso(int p, int e, int j, int j2);  // T~ with root j -> root j2

struct CrossedProductData {
  Algebra base;
  int group_order = 1;             // cyclic group <t>
  std::vector<Matrix> action;      // action[k]: a -> t^k . a
  std::vector<std::vector<Vec>> sigma;  // sigma[k][l] in base
};

struct CrossedProductCheck {
  bool weak_action = true;
  bool cocycle = true;
  bool normalized = true;
  TripleFailure associativity;
  std::string detail;
  bool ok() const { return weak_action && cocycle && normalized && !associativity.failed; }
};

CrossedProductCheck check_crossed_product(const CrossedProductData& d);
// Basis index base_index * group_order + k for a # t^k. Throws
// WeakActionFails / CocycleConditionFails.
Algebra crossed_product(const CrossedProductData& d);

CrossedProductData crossed_trivial_fixture(const Algebra& base, int group_order);
CrossedProductData crossed_z9_fixture();
CrossedProductData crossed_taft_fixture(int p, int e);
CrossedProductData crossed_broken_fixture();

FinHopf drinfeld_double(const FinHopf& h, int max_dim = 9);

// Registry for the command line and the corpus sweep.
struct ConstructorParams {
  int p = 3;
  int q = 1;
  int m = 1;
  int j = 0;
  int conductor = 0;  // 0 = default
  std::string group;
};
FinHopf construct_by_name(const std::string& name, const ConstructorParams& params);
std::vector<std::string> constructor_names();

}  // namespace hopf
