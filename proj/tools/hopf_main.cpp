#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hopf/constructors.hpp"
#include "hopf/error.hpp"
#include "hopf/fileio.hpp"
#include "hopf/invariants.hpp"
#include "hopf/papercheck.hpp"
#include "hopf/quasitri.hpp"
#include "hopf/report.hpp"

using namespace hopf;

namespace {

// 0 ok, 1 mathematical failure, 2 usage or input error.
int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::BadParameter:
    case ErrorCode::IoError:
    case ErrorCode::ConductorMismatch:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::ScaleGateExceeded:
    case ErrorCode::DimensionGateExceeded:
      return 2;
    default:
      return 1;
  }
}

struct Globals {
  int conductor = 0;
  std::string out;
  std::uint32_t seed = 1;
};

HopfFile load(const std::string& path, const Globals& g) { return import_hopf(read_file(path), g.conductor); }

void emit(const FinHopf& h, const Globals& g, const std::optional<Tensor>& R = std::nullopt) {
  const std::string text = export_hopf(h, R);
  if (g.out.empty())
    std::cout << text;
  else
    write_file_atomic(g.out, text);
}

// "i:coeff,i:coeff" -> dense vector
Vec parse_sparse(const std::string& s, int dim, int conductor) {
  Vec v(dim);
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, ',')) {
    const auto colon = term.find(':');
    if (colon == std::string::npos) fail(ErrorCode::ParseError, "expected index:coefficient in \"" + term + "\"");
    int i = -1;
    try {
      i = std::stoi(term.substr(0, colon));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad index in \"" + term + "\"");
    }
    if (i < 0 || i >= dim) fail(ErrorCode::ParseError, "index out of range in \"" + term + "\"");
    v[i] += CycloNum::parse(term.substr(colon + 1), conductor);
  }
  return v;
}

// "a,b;c,d" -> exponent matrix
std::vector<std::vector<int>> parse_exps(const std::string& s) {
  std::vector<std::vector<int>> m;
  std::stringstream rows(s);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<int> r;
    std::stringstream cols(row);
    std::string x;
    while (std::getline(cols, x, ',')) {
      try {
        r.push_back(std::stoi(x));
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad exponent \"" + x + "\"");
      }
    }
    m.push_back(r);
  }
  return m;
}

Tensor r_of(const HopfFile& f, const std::string& path) {
  if (!f.R) fail(ErrorCode::ParseError, path + " has no rmatrix block");
  return *f.R;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-dimensional Hopf algebras over cyclotomic fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--conductor", g.conductor, "Work over Q(zeta_M); 0 keeps the default")->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out, "Write the result here (atomic) instead of stdout");
  app.add_option("--seed", g.seed, "Seed for the trace-formula random matrices");

  std::function<int()> run;

  // construct
  ConstructorParams cp;
  std::string cname;
  auto* construct = app.add_subcommand("construct", "Build a named algebra, verify it and print its fingerprint");
  construct->add_option("name", cname, "Constructor name")->required();
  construct->add_option("--p", cp.p, "Odd prime");
  construct->add_option("--q", cp.q, "q exponent e");
  construct->add_option("--m", cp.m, "Book parameter m");
  construct->add_option("--j", cp.j, "Root index for ttilde");
  construct->add_option("--group", cp.group, "Group name for group_algebra / dual_group_algebra");
  construct->callback([&] {
    run = [&] {
      cp.conductor = g.conductor;
      const FinHopf h = construct_by_name(cname, cp);
      require_hopf(h);
      std::cout << fingerprint(h).str() << "\n";
      if (!g.out.empty()) write_file_atomic(g.out, export_hopf(h));
      return 0;
    };
  });

  // report
  std::string file, file2;
  bool all = false, integ = false, corad = false, census = false;
  std::string rfile;
  auto* report = app.add_subcommand("report", "Print invariant reports for a .hopf file");
  report->add_option("file", file)->required();
  report->add_flag("--all", all);
  report->add_flag("--integrals", integ);
  report->add_flag("--coradical", corad);
  report->add_flag("--census", census);
  report->add_option("--qt", rfile, "File carrying an rmatrix block for this host");
  report->callback([&] {
    run = [&] {
      const HopfFile f = load(file, g);
      ReportOptions o;
      o.integrals = all || integ;
      o.coradical = all || corad;
      o.census = all || census;
      o.seed = g.seed;
      ReportResult r = hopf_report(f.h, o);
      std::cout << r.text;
      if (!rfile.empty()) {
        const ReportResult q = qt_report(f.h, r_of(load(rfile, g), rfile));
        std::cout << q.text;
        r.ok = r.ok && q.ok;
      }
      return r.ok ? 0 : 1;
    };
  });

  // dual / op / cop
  for (const char* name : {"dual", "op", "cop"}) {
    auto* sc = app.add_subcommand(name, std::string("Write the ") + name + " of a .hopf file");
    sc->add_option("file", file)->required();
    sc->callback([&, n = std::string(name)] {
      run = [&, n] {
        const FinHopf h = load(file, g).h;
        FinHopf r = n == "dual" ? dual(h) : op_cop(h, n == "op" ? OpCop::op : OpCop::cop);
        require_hopf(r);
        emit(r, g);
        return 0;
      };
    });
  }

  auto* tens = app.add_subcommand("tensor", "Write the tensor product of two .hopf files");
  tens->add_option("left", file)->required();
  tens->add_option("right", file2)->required();
  tens->callback([&] {
    run = [&] {
      const FinHopf t = tensor(load(file, g).h, load(file2, g).h);
      require_hopf(t);
      emit(t, g);
      return 0;
    };
  });

  int max_dim = 9;
  auto* dbl = app.add_subcommand("double", "Write the Drinfeld double of a .hopf file");
  dbl->add_option("file", file)->required();
  dbl->add_option("--max-dim", max_dim, "Refuse hosts above this dimension");
  dbl->callback([&] {
    run = [&] {
      const FinHopf d = drinfeld_double(load(file, g).h, max_dim);
      require_hopf(d);
      emit(d, g);
      return 0;
    };
  });

  std::vector<std::string> gens;
  auto* quot = app.add_subcommand("quotient", "Quotient by the Hopf ideal generated by --gen vectors");
  quot->add_option("file", file)->required();
  quot->add_option("--gen", gens, "Generator as i:coeff,i:coeff (repeatable)");
  quot->callback([&] {
    run = [&] {
      const FinHopf h = load(file, g).h;
      std::vector<Vec> vs;
      for (const std::string& s : gens) vs.push_back(parse_sparse(s, h.dim, h.conductor));
      const HopfQuotient q = quotient_by_hopf_ideal(h, vs);
      emit(q.quotient, g);
      return 0;
    };
  });

  // rmatrix: host plus an rmatrix block
  std::string rkind, rgroup = "Z3", rexps;
  int rp = 3, rq_e = 1;
  auto* rmat = app.add_subcommand("rmatrix", "Write a host with an rmatrix block (uq-standard | bicharacter)");
  rmat->add_option("kind", rkind)->required()->check(CLI::IsMember({"uq-standard", "bicharacter"}));
  rmat->add_option("--p", rp);
  rmat->add_option("--q", rq_e);
  rmat->add_option("--group", rgroup, "Abelian group for bicharacter, e.g. Z3xZ3");
  rmat->add_option("--exps", rexps, "Exponent matrix rows separated by ';'");
  rmat->callback([&] {
    run = [&] {
      if (rkind == "uq-standard") {
        const RMatrixData rm = uq_standard_rmatrix(rp, rq_e);
        emit(rm.host, g, rm.R);
        return 0;
      }
      check_prime_param(rp);
      const FiniteGroup grp = group_by_name(rgroup, rp);
      const int M = g.conductor == 0 ? default_group_conductor(grp, rp) : g.conductor;
      const FinHopf h = group_algebra(grp, M);
      const Tensor R = bicharacter_r(grp, M, parse_exps(rexps.empty() ? "0" : rexps));
      require_qt(h, R);
      emit(h, g, R);
      return 0;
    };
  });

  auto* qtv = app.add_subcommand("qt-verify", "Check QT1..QT5 for a host and an rmatrix file");
  qtv->add_option("host", file)->required();
  qtv->add_option("rfile", rfile)->required();
  qtv->callback([&] {
    run = [&] {
      const ReportResult r = qt_report(load(file, g).h, r_of(load(rfile, g), rfile));
      std::cout << r.text;
      return r.ok ? 0 : 1;
    };
  });

  auto* rib = app.add_subcommand("ribbon", "Enumerate ribbon elements for a host and an rmatrix file");
  rib->add_option("host", file)->required();
  rib->add_option("rfile", rfile)->required();
  rib->callback([&] {
    run = [&] {
      const ReportResult r = ribbon_report(load(file, g).h, r_of(load(rfile, g), rfile));
      std::cout << r.text;
      return r.ok ? 0 : 1;
    };
  });

  // papercheck
  std::string which;
  int pp = 3, pn = 1;
  auto* pc = app.add_subcommand("papercheck", "spectra | dim27 | typetable");
  pc->add_option("which", which)->required()->check(CLI::IsMember({"spectra", "dim27", "typetable"}));
  pc->add_option("--p", pp);
  pc->add_option("--n", pn);
  pc->callback([&] {
    run = [&] {
      if (which == "spectra") {
        const SpectraCheckResult r = spectra_lemma_check(pp, pn);
        std::cout << r.str();
        return r.all_conform ? 0 : 1;
      }
      if (which == "dim27") {
        const Dim27Result r = dim27_case_elimination();
        std::cout << r.str();
        return r.all_eliminated ? 0 : 1;
      }
      const TypeTableResult r = type_table_sweep(pp, g.conductor);
      std::cout << r.str();
      return r.ok() ? 0 : 1;
    };
  });

  auto* exp = app.add_subcommand("export", "Re-export a .hopf file canonically (embedding into --conductor)");
  exp->add_option("file", file)->required();
  exp->callback([&] {
    run = [&] {
      const HopfFile f = load(file, g);
      emit(f.h, g, f.R);
      return 0;
    };
  });

  auto* imp = app.add_subcommand("import", "Parse and verify a .hopf file");
  imp->add_option("file", file)->required();
  imp->callback([&] {
    run = [&] {
      const std::string text = read_file(file);
      const HopfFile f = import_hopf(text, g.conductor);
      const bool exact = g.conductor != 0 || export_hopf(f.h, f.R) == text;
      std::cout << "label=" << f.h.label << " dim=" << f.h.dim << " conductor=" << f.h.conductor
                << " rmatrix=" << (f.R ? "yes" : "no") << " verify=pass roundtrip=" << (exact ? "exact" : "changed") << "\n";
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return run ? run() : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}
