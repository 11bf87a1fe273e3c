#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wordmorph/wordmorph.hpp"

namespace {

using namespace wordmorph;

// 0 success/pass, 1 verification failed, 2 input or parse error,
// 3 search-bound exhaustion
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBoundExhausted = 3;

int exit_code_for(errc code) {
  switch (code) {
    case errc::not_found:
    case errc::likely_periodic:
    case errc::insufficient_occurrences:
      return kExitBoundExhausted;
    default:
      return kExitInputError;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string render(const Word& w, bool compact) {
  if (!compact) return to_string(w);
  std::string out;
  for (Symbol s : w) {
    if (s.name().size() != 1)
      fail(errc::parse_error,
           "--compact requires single-character symbol names; found '" + s.name() + "'");
    out += s.name();
  }
  return out;
}

void print_report(const VerificationReport& report) {
  for (const Check& check : report.checks) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name;
    if (!check.passed && !check.witness.empty()) std::cout << "  [" << check.witness << "]";
    std::cout << "\n";
  }
}

int cmd_generate(const std::string& path, std::size_t n, bool compact) {
  MorphicPresentation p = parse_spec(read_file(path));
  std::cout << render(p.prefix(n), compact) << "\n";
  return 0;
}

int cmd_transform(const std::string& path, const std::string& out_path,
                  bool assert_aperiodic, unsigned bound) {
  MorphicPresentation p = parse_spec(read_file(path));
  NonUniformizeOptions opts;
  opts.assert_aperiodic = assert_aperiodic;
  opts.expanding_bound = bound;
  NonUniformizationResult result = nonuniformize(p, opts);

  const auto& t = result.trace;
  std::cout << "# fresh-start " << (t.fresh_start ? t.fresh_start->name() : "none") << "\n"
            << "# power " << t.power_applied << "\n"
            << "# b " << t.b.name() << "\n"
            << "# c " << t.c.name() << "\n"
            << "# |z| " << t.z.size() << "\n"
            << "# |t| " << t.t.size() << "\n"
            << "# alphabet-in " << p.morphism().domain().size() << "\n"
            << "# alphabet-out " << result.gamma_prime.domain().size() << "\n";

  std::string spec = emit_spec(result);
  if (out_path.empty()) {
    std::cout << spec;
  } else {
    std::ofstream out(out_path);
    if (!out) fail(errc::parse_error, "cannot write '" + out_path + "'");
    out << spec;
  }
  return 0;
}

int cmd_verify(const std::string& path_a, const std::string& path_b, std::size_t n) {
  MorphicPresentation a = parse_spec(read_file(path_a));
  MorphicPresentation b = parse_spec(read_file(path_b));
  VerificationReport report = verify_prefix_equal(a, b, n);
  print_report(report);
  return report.overall() ? 0 : kExitVerifyFailed;
}

int cmd_analyze(const std::string& path, unsigned bound) {
  SpecParts parts = parse_spec_parts(read_file(path));
  const Morphism& m = parts.morphism;

  if (auto arity = m.uniform_arity())
    std::cout << "arity: " << *arity << "\n";
  else
    std::cout << "arity: non-uniform\n";

  bool prolongable = is_prolongable(m, parts.start);
  std::cout << "prolongable from " << parts.start.name() << ": "
            << (prolongable ? "yes" : "no") << "\n";

  if (prolongable) {
    Alphabet occ = occurring_letters(m, parts.start);
    std::cout << "occurring:";
    for (Symbol s : occ) std::cout << ' ' << s.name();
    std::cout << "\n";

    IncidenceMatrix base = incidence_matrix(m);
    std::cout << "expanding (bound " << bound << "):";
    bool any = false;
    for (Symbol b : occ) {
      std::size_t i = *m.domain().index_of(b);
      IncidenceMatrix current = base;
      for (unsigned e = 1; e <= bound; ++e) {
        if (e > 1) current = multiply(base, current);
        if (current.at(i, i) >= 2) {
          std::cout << ' ' << b.name() << "@" << e;
          any = true;
          break;
        }
      }
    }
    if (!any) std::cout << " none";
    std::cout << "\n";
  }

  IncidenceMatrix matrix = incidence_matrix(m);
  std::cout << "incidence matrix (rows and columns in alphabet order):\n";
  for (std::size_t row = 0; row < matrix.dimension(); ++row) {
    std::cout << "  " << matrix.index()[row].name() << ":";
    for (std::size_t col = 0; col < matrix.dimension(); ++col)
      std::cout << ' ' << matrix.at(row, col);
    std::cout << "\n";
  }
  return 0;
}

int cmd_runs(const std::string& path, const std::string& zero, const std::string& one,
             std::size_t n) {
  MorphicPresentation p = parse_spec(read_file(path));
  Word prefix = p.prefix(n);
  std::vector<std::size_t> counts = runs_between_zeros(prefix, Symbol(zero), Symbol(one));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0) std::cout << ' ';
    std::cout << counts[i];
  }
  std::cout << "\n";
  return 0;
}

int cmd_catalog(const std::string& name) {
  if (name.empty()) {
    for (const CatalogEntry& entry : catalog_entries())
      std::cout << entry.name << ": " << entry.notes << "\n";
    return 0;
  }
  std::cout << emit_spec(catalog_get(name).presentation);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"morphisms on finite alphabets: fixed points, codings, and "
               "non-uniform re-presentation of uniform fixed points"};
  app.require_subcommand(1);

  std::string spec_path, spec_path_b, out_path, catalog_name, zero_name, one_name;
  std::size_t n = 0;
  bool compact = false, assert_aperiodic = false;
  unsigned bound = 64;

  auto* generate = app.add_subcommand("generate", "print a prefix of the presented sequence");
  generate->add_option("spec", spec_path, "spec file")->required();
  generate->add_option("-n", n, "prefix length")->required();
  generate->add_flag("--compact", compact, "concatenate single-character symbol names");

  auto* transform = app.add_subcommand(
      "transform", "re-present a uniform fixed point with a non-uniform morphism");
  transform->add_option("spec", spec_path, "spec file")->required();
  transform->add_option("-o", out_path, "write the output spec to a file");
  transform->add_flag("--assert-aperiodic", assert_aperiodic,
                      "skip the ultimate-periodicity guard");
  transform->add_option("--bound", bound, "expanding-letter exponent bound");

  auto* verify = app.add_subcommand("verify", "compare two presented prefixes");
  verify->add_option("specA", spec_path, "first spec file")->required();
  verify->add_option("specB", spec_path_b, "second spec file")->required();
  verify->add_option("-n", n, "prefix length")->required();

  auto* analyze = app.add_subcommand("analyze", "arity, prolongability, occurring and "
                                                "expanding letters, incidence matrix");
  analyze->add_option("spec", spec_path, "spec file")->required();
  analyze->add_option("--bound", bound, "expanding-letter exponent bound");

  auto* runs = app.add_subcommand("runs", "block lengths of ones between consecutive zeros");
  runs->add_option("spec", spec_path, "spec file")->required();
  runs->add_option("--zero", zero_name, "zero symbol")->required();
  runs->add_option("--one", one_name, "one symbol")->required();
  runs->add_option("-n", n, "prefix length to scan")->required();

  auto* catalog = app.add_subcommand("catalog", "list built-in presentations or print one");
  catalog->add_option("name", catalog_name, "entry name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (generate->parsed()) return cmd_generate(spec_path, n, compact);
    if (transform->parsed()) return cmd_transform(spec_path, out_path, assert_aperiodic, bound);
    if (verify->parsed()) return cmd_verify(spec_path, spec_path_b, n);
    if (analyze->parsed()) return cmd_analyze(spec_path, bound);
    if (runs->parsed()) return cmd_runs(spec_path, zero_name, one_name, n);
    if (catalog->parsed()) return cmd_catalog(catalog_name);
  } catch (const wordmorph::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
