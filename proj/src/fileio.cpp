#include "hopf/fileio.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hopf/error.hpp"

namespace hopf {

using nlohmann::ordered_json;

namespace {

ordered_json dense(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const CycloNum& c : v) a.push_back(c.str());
  return a;
}

ordered_json triples(const SparseTensor3& t) {
  ordered_json a = ordered_json::array();
  for (const Entry3& e : t.entries()) a.push_back({e.i, e.j, e.k, e.c.str()});
  return a;
}

ordered_json sparse_matrix(const Matrix& m) {
  ordered_json a = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) a.push_back({r, c, m.at(r, c).str()});
  return a;
}

// Byte offset -> "line L, column C".
std::string where(const std::string& text, std::size_t off) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < off && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

struct Reader {
  int file_conductor = 1;
  int conductor = 1;

  CycloNum num(const ordered_json& j) const {
    if (!j.is_string()) fail(ErrorCode::ParseError, "coefficient must be a string: " + j.dump());
    const CycloNum c = CycloNum::parse(j.get<std::string>(), file_conductor);
    return conductor == file_conductor ? c : c.embed(conductor);
  }

  int index(const ordered_json& j, int bound, const char* what) const {
    if (!j.is_number_integer()) fail(ErrorCode::ParseError, std::string(what) + " index must be an integer");
    const int v = j.get<int>();
    if (v < 0 || v >= bound) fail(ErrorCode::ParseError, std::string(what) + " index out of range: " + std::to_string(v));
    return v;
  }

  Vec vec(const ordered_json& j, int n, const char* what) const {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
      fail(ErrorCode::ParseError, std::string(what) + " must be an array of length " + std::to_string(n));
    Vec v;
    v.reserve(n);
    for (const auto& x : j) v.push_back(num(x));
    return v;
  }

  SparseTensor3 tensor3(const ordered_json& j, int n, const char* what) const {
    std::vector<Entry3> e;
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 4) fail(ErrorCode::ParseError, std::string(what) + " entries are [i, j, k, coeff]");
      e.push_back({index(t[0], n, what), index(t[1], n, what), index(t[2], n, what), num(t[3])});
    }
    return SparseTensor3(n, n, n, std::move(e));
  }

  Matrix matrix(const ordered_json& j, int rows, int cols, const char* what) const {
    Matrix m(rows, cols);
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 3) fail(ErrorCode::ParseError, std::string(what) + " entries are [row, col, coeff]");
      m.at(index(t[0], rows, what), index(t[1], cols, what)) = num(t[2]);
    }
    return m;
  }
};

const ordered_json& field(const ordered_json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// Top-level keys one per line, array fields one element per line.
std::string layout(const ordered_json& j) {
  std::string s = "{\n";
  std::size_t left = j.size();
  for (const auto& [key, v] : j.items()) {
    s += "\"" + key + "\": ";
    if (v.is_object()) {
      s += "{\n";
      std::size_t inner = v.size();
      for (const auto& [k2, v2] : v.items()) {
        s += " \"" + k2 + "\": ";
        if (v2.is_array() && !v2.empty()) {
          s += "[\n";
          for (std::size_t i = 0; i < v2.size(); ++i) s += "  " + v2[i].dump() + (i + 1 < v2.size() ? ",\n" : "\n");
          s += " ]";
        } else {
          s += v2.dump();
        }
        s += --inner ? ",\n" : "\n";
      }
      s += "}";
    } else if (v.is_array() && !v.empty()) {
      s += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) s += " " + v[i].dump() + (i + 1 < v.size() ? ",\n" : "\n");
      s += "]";
    } else {
      s += v.dump();
    }
    s += --left ? ",\n" : "\n";
  }
  return s + "}\n";
}

}  // namespace

std::string export_hopf(const FinHopf& h, const std::optional<Tensor>& R) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["label"] = h.label;
  j["dim"] = h.dim;
  j["conductor"] = h.conductor;
  j["mult"] = triples(h.mult);
  j["unit"] = dense(h.unit);
  j["comult"] = triples(h.comult);
  j["counit"] = dense(h.counit);
  j["antipode"] = sparse_matrix(h.antipode);
  ordered_json claims;
  claims["grouplikes"] = ordered_json::array();
  for (const Vec& g : h.claims.grouplikes) claims["grouplikes"].push_back(dense(g));
  claims["characters"] = ordered_json::array();
  for (const Vec& c : h.claims.characters) claims["characters"].push_back(dense(c));
  claims["iso_fixtures"] = ordered_json::array();
  for (const IsoFixture& f : h.claims.iso_fixtures)
    claims["iso_fixtures"].push_back(
        {{"target", f.target}, {"rows", f.map.rows()}, {"cols", f.map.cols()}, {"map", sparse_matrix(f.map)}});
  j["claims"] = claims;
  if (R) {
    ordered_json r = ordered_json::array();
    for (const auto& [key, c] : *R) r.push_back({key / h.dim, key % h.dim, c.str()});
    j["rmatrix"] = r;
  }
  return layout(j);
}

HopfFile import_hopf(const std::string& text, int conductor) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, where(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  HopfFile out;
  FinHopf& h = out.h;
  try {
    if (field(j, "format_version").get<int>() != kFormatVersion)
      fail(ErrorCode::ParseError, "unsupported format_version");
    Reader rd;
    rd.file_conductor = field(j, "conductor").get<int>();
    if (rd.file_conductor < 1) fail(ErrorCode::ParseError, "conductor must be positive");
    rd.conductor = conductor == 0 ? rd.file_conductor : conductor;
    if (rd.conductor % rd.file_conductor != 0 && rd.file_conductor != 1)
      fail(ErrorCode::ConductorMismatch, "file conductor " + std::to_string(rd.file_conductor) +
                                             " does not divide " + std::to_string(rd.conductor));
    h.label = field(j, "label").get<std::string>();
    h.dim = field(j, "dim").get<int>();
    if (h.dim < 1) fail(ErrorCode::ParseError, "dim must be positive");
    h.conductor = rd.conductor;
    h.mult = rd.tensor3(field(j, "mult"), h.dim, "mult");
    h.unit = rd.vec(field(j, "unit"), h.dim, "unit");
    h.comult = rd.tensor3(field(j, "comult"), h.dim, "comult");
    h.counit = rd.vec(field(j, "counit"), h.dim, "counit");
    h.antipode = rd.matrix(field(j, "antipode"), h.dim, h.dim, "antipode");
    const ordered_json& claims = field(j, "claims");
    for (const auto& g : field(claims, "grouplikes")) h.claims.grouplikes.push_back(rd.vec(g, h.dim, "grouplike"));
    for (const auto& c : field(claims, "characters")) h.claims.characters.push_back(rd.vec(c, h.dim, "character"));
    for (const auto& f : field(claims, "iso_fixtures")) {
      const int rows = field(f, "rows").get<int>(), cols = field(f, "cols").get<int>();
      h.claims.iso_fixtures.push_back({field(f, "target").get<std::string>(), rd.matrix(field(f, "map"), rows, cols, "map")});
    }
    if (j.contains("rmatrix")) {
      Accum acc;
      for (const auto& t : j.at("rmatrix")) {
        if (!t.is_array() || t.size() != 3) fail(ErrorCode::ParseError, "rmatrix entries are [i, j, coeff]");
        acc.add(static_cast<long long>(rd.index(t[0], h.dim, "rmatrix")) * h.dim + rd.index(t[1], h.dim, "rmatrix"),
                rd.num(t[2]));
      }
      out.R = acc.finish();
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  require_hopf(h);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot write " + tmp);
    out << text;
    if (!out.flush()) fail(ErrorCode::IoError, "write failed on " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    fail(ErrorCode::IoError, "cannot rename " + tmp + " to " + path);
  }
}

}  // namespace hopf
