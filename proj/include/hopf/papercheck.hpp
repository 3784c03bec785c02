#pragma once

#include <string>
#include <vector>

#include "hopf/hopf.hpp"
#include "hopf/invariants.hpp"

namespace hopf {

struct CorpusEntry {
  std::string name;  // e.g. "taft(q=1)", "dual(uq_sl2(q=1))"
  std::string item;  // list letter "a".."k", or "-" for members outside the dim p^3 list
  FinHopf h;
};
// Group algebras (abelian, Heisenberg, metacyclic) and duals of the nonabelian
// ones, T(q) for every q, T(q) (x) k[Z/p], T~(q), T^(q), r(q), u_q, h(q,m) for
// m = 1, 2, and the duals of u_q and r(q).
std::vector<CorpusEntry> corpus(int p, int conductor = 0);

struct SpectraWitness {
  std::vector<int> multiset;  // values as 2*i + (sign < 0), sorted
  int sign = 1;
  int m = 0;  // least representative mod p^{n-1}
};
struct SpectraCheckResult {
  int p = 0, n = 0, conductor = 0;
  long long scanned = 0;
  long long trace_zero = 0;
  bool all_conform = true;
  std::vector<SpectraWitness> witnesses;  // one per trace-zero multiset
  std::string str() const;
};
// Multisets of size p from {+-omega^i : 0 <= i < p^n}, omega = zeta_{p^n}.
// Throws ScaleGateExceeded above 10^6 multisets.
SpectraCheckResult spectra_lemma_check(int p, int n);

struct Dim27Case {
  int h0_dim = 0;
  std::vector<int> blocks;  // n_1 <= ... <= n_t
  int bound = 0;            // (1 + 2 n_1) 3 + sum n_i^2
  bool contradiction = false;  // bound >= 27
};
struct Dim27Result {
  std::vector<Dim27Case> cases;
  bool all_eliminated = true;
  std::string str() const;
};
Dim27Result dim27_case_elimination();

struct TypeTableRow {
  std::string name;
  std::string item;
  Fingerprint fp;
  std::string expected_type;  // empty when no slot applies
  std::string problem;        // empty when the row passes
};
struct TypeTableResult {
  int p = 0;
  std::vector<TypeTableRow> rows;
  int forbidden_seen = 0;
  bool ok() const;
  std::string str() const;
};
// Dim p^3 corpus members only.
TypeTableResult type_table_sweep(int p, int conductor = 0);
std::vector<std::string> forbidden_types(int p);

}  // namespace hopf
