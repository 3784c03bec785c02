#include "hopf/papercheck.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hopf/constructors.hpp"
#include "hopf/error.hpp"

namespace hopf {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string qname(const std::string& base, int e, const std::string& extra = "") {
  return base + "(q=" + std::to_string(e) + extra + ")";
}

}  // namespace

std::vector<CorpusEntry> corpus(int p, int conductor) {
  check_prime_param(p);
  std::vector<CorpusEntry> out;
  const std::string P = std::to_string(p), P2 = std::to_string(p * p), P3 = std::to_string(p * p * p);
  auto group = [&](const std::string& g, const std::string& item, bool with_dual) {
    ConstructorParams a;
    a.p = p;
    a.group = g;
    a.conductor = conductor;
    out.push_back({"k[" + g + "]", item, construct_by_name("group_algebra", a)});
    if (with_dual) out.push_back({"k^" + g, item, construct_by_name("dual_group_algebra", a)});
  };
  group("Z" + P3, "a", false);
  group("Z" + P2 + "xZ" + P, "a", false);
  group("Z" + P + "xZ" + P + "xZ" + P, "a", false);
  group("heisenberg", "b", true);
  group("metacyclic", "b", true);
  for (int e = 1; e < p; ++e) out.push_back({qname("taft", e), "-", taft(p, e, conductor)});
  for (int e = 1; e < p; ++e) {
    out.push_back({qname("taft_tensor", e), "d", taft_tensor(p, e, conductor)});
    out.push_back({qname("ttilde", e, ",j=0"), "e", ttilde(p, e, 0, conductor)});
    out.push_back({qname("that", e), "f", that(p, e, conductor)});
    const FinHopf r = rq(p, e, conductor);
    out.push_back({qname("rq", e), "g", r});
    const FinHopf u = uq_sl2(p, e, conductor);
    out.push_back({qname("uq_sl2", e), "h", u});
    for (int m : {1, 2}) out.push_back({qname("book", e, ",m=" + std::to_string(m)), "i", book(p, e, m, conductor)});
    out.push_back({"dual(" + qname("uq_sl2", e) + ")", "j", dual(u)});
    out.push_back({"dual(" + qname("rq", e) + ")", "k", dual(r)});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string SpectraCheckResult::str() const {
  std::ostringstream os;
  os << "spectra p=" << p << " n=" << n << " conductor=" << conductor << " scanned=" << scanned
     << " trace_zero=" << trace_zero << " all_conform=" << (all_conform ? "yes" : "no") << "\n";
  for (const SpectraWitness& w : witnesses) {
    os << "  {";
    for (std::size_t i = 0; i < w.multiset.size(); ++i)
      os << (i ? "," : "") << (w.multiset[i] % 2 ? "-" : "+") << "w^" << w.multiset[i] / 2;
    os << "} sign=" << (w.sign > 0 ? "+" : "-") << " m=" << w.m << "\n";
  }
  return os.str();
}

SpectraCheckResult spectra_lemma_check(int p, int n) {
  check_prime_param(p);
  if (n < 1) fail(ErrorCode::BadParameter, "n must be positive");
  SpectraCheckResult r;
  r.p = p;
  r.n = n;
  const int N = ipow(p, n), step = ipow(p, n - 1), V = 2 * N;
  r.conductor = N;
  // C(V + p - 1, p) multisets
  long double count = 1;
  for (int i = 0; i < p; ++i) count = count * (V + i) / (i + 1);
  if (count > 1e6) fail(ErrorCode::ScaleGateExceeded, "too many multisets for p=" + std::to_string(p) + " n=" + std::to_string(n));

  std::vector<CycloNum> val(V);
  for (int i = 0; i < N; ++i) {
    val[2 * i] = CycloNum::zeta(N, i);
    val[2 * i + 1] = -val[2 * i];
  }
  std::vector<int> idx(p, 0);
  while (true) {
    ++r.scanned;
    CycloNum tr = CycloNum::zero(N);
    for (int v : idx) tr += val[v];
    if (tr.is_zero()) {
      ++r.trace_zero;
      SpectraWitness w;
      w.multiset = idx;
      w.sign = idx[0] % 2 ? -1 : 1;
      w.m = (idx[0] / 2) % step;
      bool ok = true;
      std::set<int> shifts;
      for (int v : idx) {
        const int e = v / 2;
        ok = ok && (v % 2 == idx[0] % 2) && e % step == w.m;
        shifts.insert(e / step);
      }
      ok = ok && static_cast<int>(shifts.size()) == p;
      // every eigenvalue of T^p equals sign * omega^{mp}
      const CycloNum target = CycloNum(w.sign) * CycloNum::zeta(N, static_cast<long long>(w.m) * p);
      for (int v : idx) ok = ok && val[v].pow(p) == target;
      r.all_conform = r.all_conform && ok;
      r.witnesses.push_back(w);
    }
    int k = p - 1;
    while (k >= 0 && idx[k] == V - 1) --k;
    if (k < 0) break;
    ++idx[k];
    for (int t = k + 1; t < p; ++t) idx[t] = idx[k];
  }
  return r;
}

// ---------------------------------------------------------------------------

std::string Dim27Result::str() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const Dim27Case& k = cases[c];
    os << "case " << c + 1 << " dimH0=" << k.h0_dim << " n=(";
    for (std::size_t i = 0; i < k.blocks.size(); ++i) os << (i ? "," : "") << k.blocks[i];
    os << ") bound=" << k.bound << " eliminated=" << (k.contradiction ? "yes" : "no") << "\n";
  }
  os << "all_eliminated=" << (all_eliminated ? "yes" : "no") << "\n";
  return os.str();
}

Dim27Result dim27_case_elimination() {
  // |G(H)| = 3 plus the listed matrix coalgebra blocks
  const std::vector<std::vector<int>> blocks = {{3}, {2, 2, 2}, {3, 3}, {2, 2, 2, 3}};
  const std::vector<int> h0 = {12, 15, 21, 24};
  Dim27Result r;
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    Dim27Case k;
    k.blocks = blocks[c];
    int sq = 0;
    for (int b : k.blocks) sq += b * b;
    k.h0_dim = 3 + sq;
    if (k.h0_dim != h0[c]) fail(ErrorCode::ExtractionInconsistent, "case data does not match dim H0");
    k.bound = (1 + 2 * k.blocks.front()) * 3 + sq;
    k.contradiction = k.bound >= 27;
    r.all_eliminated = r.all_eliminated && k.contradiction;
    r.cases.push_back(k);
  }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::string> forbidden_types(int p) {
  const std::string P = std::to_string(p), P2 = std::to_string(p * p);
  return {"(1;1)", "(" + P + "," + P + ";1)", "(" + P + "," + P + ";" + P + ")", "(" + P + "," + P + ";" + P2 + ")",
          "(" + P2 + ";1)"};
}

bool TypeTableResult::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const TypeTableRow& r) { return r.problem.empty(); });
}

std::string TypeTableResult::str() const {
  std::ostringstream os;
  for (const TypeTableRow& r : rows) {
    os << r.item << " " << r.name << " " << r.fp.str();
    if (!r.problem.empty()) os << " MISMATCH " << r.problem;
    os << "\n";
  }
  os << "forbidden_seen=" << forbidden_seen << " result=" << (ok() ? "pass" : "fail") << "\n";
  return os.str();
}

TypeTableResult type_table_sweep(int p, int conductor) {
  const std::string P = std::to_string(p), P2 = std::to_string(p * p);
  auto expected = [&](const std::string& item) -> std::string {
    if (item == "d") return "(" + P + "," + P + ";" + P + "," + P + ")";
    if (item == "e" || item == "f") return "(" + P2 + ";" + P2 + ")";
    if (item == "g") return "(" + P2 + ";" + P + ")";
    if (item == "h") return "(" + P + ";1)";
    if (item == "i") return "(" + P + ";" + P + ")";
    if (item == "j") return "(1;" + P + ")";
    if (item == "k") return "(" + P + ";" + P2 + ")";
    return "";
  };
  const std::vector<std::string> bad = forbidden_types(p);
  TypeTableResult res;
  res.p = p;
  for (CorpusEntry& e : corpus(p, conductor)) {
    if (e.h.dim != p * p * p) continue;
    TypeTableRow row;
    row.name = e.name;
    row.item = e.item;
    row.fp = fingerprint(e.h);
    row.expected_type = expected(e.item);
    const std::string t = row.fp.type();
    if (std::find(bad.begin(), bad.end(), t) != bad.end()) {
      ++res.forbidden_seen;
      row.problem = "forbidden type " + t;
    } else if (!row.expected_type.empty() && t != row.expected_type) {
      row.problem = "type " + t + " expected " + row.expected_type;
    } else if (e.item >= "d" && e.item <= "i" && !row.fp.pointed) {
      row.problem = "expected pointed";
    } else if ((e.item == "j" || e.item == "k") && (row.fp.pointed || !row.fp.dual_pointed)) {
      row.problem = "expected dual pointed and not pointed";
    }
    res.rows.push_back(std::move(row));
  }
  return res;
}

}  // namespace hopf
