#include "hopf/report.hpp"

#include <random>
#include <sstream>

#include "hopf/error.hpp"
#include "hopf/invariants.hpp"

namespace hopf {

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }
const char* pf(bool b) { return b ? "pass" : "fail"; }

}  // namespace

std::string sparse_str(const Vec& v) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    os << (first ? "" : ", ") << i << ":" << v[i].str();
    first = false;
  }
  os << "}";
  return os.str();
}

std::string list_str(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

ReportResult hopf_report(const FinHopf& h, const ReportOptions& opt) {
  ReportResult res;
  std::ostringstream os;
  os << "label=" << h.label << "\n";
  os << "dim=" << h.dim << " conductor=" << h.conductor << "\n";
  const VerificationReport v = verify_hopf(h);
  os << "verify=" << pf(v.ok()) << "\n";
  if (!v.ok()) {
    os << v.str() << "\n";
    res.ok = false;
    res.text = os.str();
    return res;
  }
  os << "fingerprint " << fingerprint(h).str() << "\n";

  if (opt.integrals) {
    const IntegralData in = integrals(h);
    const ModularData md = modular_elements(h, in);
    os << "integral_left=" << sparse_str(in.left_integral) << "\n";
    os << "integral_right_dual=" << sparse_str(in.right_integral_dual) << "\n";
    os << "normalized=" << yn(in.normalized) << "\n";
    os << "alpha=" << sparse_str(md.alpha) << "\n";
    os << "g=" << sparse_str(md.g) << "\n";
    const bool s4 = radford_s4_check(h, md);
    os << "radford_s4=" << pf(s4) << "\n";
    std::mt19937 rng(opt.seed);
    bool tr = true;
    for (int k = 0; k < opt.trace_samples; ++k) tr = tr && trace_formula_check(h, in, random_integer_matrix(h.dim, rng)).equal();
    os << "trace_formula=" << pf(tr) << " samples=" << opt.trace_samples << " seed=" << opt.seed << "\n";
    const Semisimplicity ss = semisimplicity(h);
    os << "semisimple=" << yn(ss.semisimple) << " cosemisimple=" << yn(ss.cosemisimple) << "\n";
    res.ok = res.ok && s4 && tr;
  }

  if (opt.coradical) {
    const CoradicalReport c = coradical_filtration(h);
    os << "corad=" << list_str(c.filtration) << " h0=" << c.h0_dim << " grouplike_span=" << c.grouplike_span_dim
       << " blocks=" << c.blocks << " one_dim_blocks=" << c.one_dim_blocks << " candidates=[";
    for (std::size_t i = 0; i < c.candidates.size(); ++i) os << (i ? "," : "") << list_str(c.candidates[i]);
    os << "]\n";
  }

  if (opt.census) {
    const Census g = grouplike_census(h);
    const Census x = character_census(h);
    os << "grouplikes=" << g.order() << " type=" << g.type() << " certificate=" << g.certificate
       << " abelian=" << yn(g.abelian) << "\n";
    os << "characters=" << x.order() << " type=" << x.type() << " certificate=" << x.certificate
       << " abelian=" << yn(x.abelian) << "\n";
    const PairingTable pt = pairing_table(h);
    os << "pairing_nontrivial=" << yn(pt.bosonization_criterion) << "\n";
  }
  res.text = os.str();
  return res;
}

ReportResult qt_report(const FinHopf& h, const Tensor& R) {
  ReportResult res;
  std::ostringstream os;
  const QtResult q = verify_qt(h, R);
  for (const AxiomCheck& c : q.report.checks) os << c.axiom << "=" << pf(c.passed) << "\n";
  if (!q.ok()) {
    res.ok = false;
    os << "quasitriangular=no\n";
    res.text = os.str();
    return res;
  }
  const RMatrixData& rm = q.data;
  os << "rank=" << rm.rank << " dimK=" << rm.K.dim() << " dimL=" << rm.L.dim() << "\n";
  const DrinfeldData d = drinfeld_element(rm);
  os << "u=" << sparse_str(d.u) << "\n";
  os << "drinfeld_identities=" << (d.identities.ok() ? "clean" : "fail") << "\n";
  const RibbonCertificate rc = ribbon_search(rm, d);
  os << "QT1..QT5 pass; minimal=" << yn(rm.minimal) << "; ribbon_count=" << rc.ribbon_elements.size() << "\n";
  res.ok = d.identities.ok();
  res.text = os.str();
  return res;
}

ReportResult ribbon_report(const FinHopf& h, const Tensor& R) {
  ReportResult res;
  std::ostringstream os;
  const RMatrixData rm = require_qt(h, R);
  const DrinfeldData d = drinfeld_element(rm);
  const RibbonCertificate rc = ribbon_search(rm, d);
  for (std::size_t i = 0; i < rc.candidate_grouplikes.size(); ++i)
    os << "candidate l=" << sparse_str(rc.candidate_grouplikes[i]) << " result=" << rc.failures[i] << "\n";
  for (const Vec& v : rc.ribbon_elements) {
    const bool ok = ribbon_axioms(rm, d, v).ok();
    os << "ribbon v=" << sparse_str(v) << " R1..R5=" << pf(ok) << "\n";
    res.ok = res.ok && ok;
  }
  os << "ribbon_count=" << rc.ribbon_elements.size() << "\n";
  res.text = os.str();
  return res;
}

}  // namespace hopf
