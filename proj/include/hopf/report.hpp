#pragma once

#include <cstdint>
#include <string>

#include "hopf/hopf.hpp"
#include "hopf/quasitri.hpp"

namespace hopf {

// "{i:c, ...}" over the nonzero coordinates, "{}" for zero.
std::string sparse_str(const Vec& v);
std::string list_str(const std::vector<int>& v);

struct ReportOptions {
  bool integrals = false;
  bool coradical = false;
  bool census = false;
  std::uint32_t seed = 1;
  int trace_samples = 20;
};

struct ReportResult {
  std::string text;
  bool ok = true;  // every internal verification passed
};

// Fixed-order key=value lines; the fingerprint line is always present.
ReportResult hopf_report(const FinHopf& h, const ReportOptions& opt);
ReportResult qt_report(const FinHopf& h, const Tensor& R);
ReportResult ribbon_report(const FinHopf& h, const Tensor& R);

}  // namespace hopf
