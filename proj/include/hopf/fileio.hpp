#pragma once

#include <optional>
#include <string>

#include "hopf/hopf.hpp"

namespace hopf {

inline constexpr int kFormatVersion = 1;

struct HopfFile {
  FinHopf h;
  std::optional<Tensor> R;  // key i*dim + j
};

// JSON text; sparse triples sorted, coefficients in CycloNum::str() form.
std::string export_hopf(const FinHopf& h, const std::optional<Tensor>& R = std::nullopt);
// conductor 0 keeps the file's conductor; otherwise every coefficient is embedded
// into Q(zeta_conductor), which must contain the file's field. Runs verify_hopf.
// Throws ParseError (with line:column), ConductorMismatch or VerificationFailed.
HopfFile import_hopf(const std::string& text, int conductor = 0);

std::string read_file(const std::string& path);
// Writes path.tmp and renames it over path.
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace hopf
