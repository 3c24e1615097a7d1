// Command-line front end: construct example complexes, inspect complexes,
// cut slicings, enumerate partitions, and verify the bound suite.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 theorem-violation alarm.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsurf/bounds.hpp"
#include "nsurf/builders.hpp"
#include "nsurf/io.hpp"
#include "nsurf/search.hpp"
#include "nsurf/slicing.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitViolation = 3;

std::vector<nsurf::Vertex> parse_label_list(const std::string& text) {
  std::vector<nsurf::Vertex> labels;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw CLI::ValidationError("--v1", "expected comma-separated positive integers");
    labels.push_back(std::stoi(item));
  }
  if (labels.empty()) throw CLI::ValidationError("--v1", "empty vertex list");
  return labels;
}

nsurf::SimplicialComplex load_complex(const std::string& path) {
  std::vector<std::string> warnings;
  nsurf::SimplicialComplex k = nsurf::read_complex_file(path, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  return k;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot write file: " + output_path);
  out << text;
}

int run_construct(const std::string& name, const std::string& output_path) {
  const nsurf::SimplicialComplex k = nsurf::builtin(name);
  emit(nsurf::render_complex(k, name), output_path);
  return 0;
}

int run_info(const std::string& path) {
  const nsurf::SimplicialComplex k = load_complex(path);
  std::cout << "dimension = " << k.dimension() << "\n";
  std::cout << "f-vector = " << nsurf::to_string(nsurf::f_vector(k)) << "\n";
  std::cout << "euler characteristic = " << nsurf::euler_characteristic(k) << "\n";
  std::cout << "connected = " << (nsurf::is_connected(k) ? "yes" : "no") << "\n";

  if (k.dimension() == 3) {
    const nsurf::ManifoldReport report = nsurf::is_combinatorial_3_manifold(k);
    std::cout << "closed = " << (report.closed ? "yes" : "no") << "\n";
    switch (report.verdict) {
      case nsurf::ManifoldVerdict::Yes:
        std::cout << "combinatorial 3-manifold = yes\n";
        break;
      case nsurf::ManifoldVerdict::PseudomanifoldOnly:
        std::cout << "combinatorial 3-manifold = pseudomanifold only (" << report.certificate
                  << ")\n";
        break;
      case nsurf::ManifoldVerdict::No:
        if (report.bounded_manifold)
          std::cout << "combinatorial 3-manifold = bounded manifold (" << report.certificate
                    << ")\n";
        else
          std::cout << "combinatorial 3-manifold = no (" << report.certificate << ")\n";
        break;
    }
    if (report.closed && report.verdict != nsurf::ManifoldVerdict::No && nsurf::is_connected(k))
      std::cout << "orientable = "
                << (nsurf::orientability(k) == nsurf::Orientability::Orientable ? "yes" : "no")
                << "\n";
  }
  std::cout << "2-neighborly = " << (nsurf::is_k_neighborly(k, 2) ? "yes" : "no") << "\n";

  if (k.dimension() == 3) {
    const nsurf::LbtDsReport lbt = nsurf::lbt_ds_check(k);
    if (!lbt.applicable) {
      std::cout << "face-count relations: not applicable (" << lbt.reason << ")\n";
    } else {
      std::cout << "lower bound slack f1 - (4 f0 - 10) = " << lbt.lower_slack << "\n";
      std::cout << "upper bound slack C(f0,2) - f1 = " << lbt.upper_slack << "\n";
      std::cout << "dehn-sommerville residuals = " << lbt.ds_alternating << ", "
                << lbt.ds_triangles << (lbt.ok() ? " (ok)" : " (VIOLATED)") << "\n";
    }
  }
  return 0;
}

int run_slice(const std::string& path, const std::string& v1_text, const std::string& off_path,
              bool with_report) {
  const nsurf::SimplicialComplex m = load_complex(path);
  const nsurf::VertexPartition p = nsurf::make_partition(m, parse_label_list(v1_text));
  const nsurf::Slicing s = nsurf::slice(m, p);
  std::cout << "V1 = {" << [&] {
    std::string t;
    for (std::size_t i = 0; i < p.v1.size(); ++i) t += (i ? "," : "") + std::to_string(p.v1[i]);
    return t;
  }() << "}\n";
  std::cout << nsurf::render_stats(nsurf::stats(s));
  std::cout << "weakly neighborly = " << (nsurf::is_weakly_neighborly(s) ? "yes" : "no") << "\n";
  if (!off_path.empty()) nsurf::write_off(s, off_path);
  if (with_report) {
    const nsurf::BoundReport report = nsurf::evaluate_all(m, p, s);
    std::cout << nsurf::render_report(report);
    if (report.any_violated()) return kExitViolation;
  }
  return 0;
}

int run_verify(const std::string& path, const std::string& v1_text) {
  const nsurf::SimplicialComplex m = load_complex(path);
  const nsurf::VertexPartition p = nsurf::make_partition(m, parse_label_list(v1_text));
  const nsurf::Slicing s = nsurf::slice(m, p);
  std::cout << nsurf::render_stats(nsurf::stats(s));

  bool alarm = false;
  const nsurf::StructureReport structure = nsurf::validate_structure(s);
  std::cout << "structure = " << (structure.ok ? "ok" : "VIOLATED: " + structure.violation)
            << "\n";
  alarm = alarm || !structure.ok;

  const auto [coords, compat] = nsurf::normal_coordinates(s);
  std::cout << "normal coordinates = "
            << (compat.compatible
                    ? "compatible (" + std::to_string(compat.equations_checked) + " equations)"
                    : "VIOLATED: " + compat.violation)
            << "\n";
  alarm = alarm || !compat.compatible;

  const nsurf::BoundReport report = nsurf::evaluate_all(m, p, s);
  std::cout << nsurf::render_report(report);
  alarm = alarm || report.any_violated();
  return alarm ? kExitViolation : 0;
}

std::vector<nsurf::Permutation> load_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::vector<nsurf::Permutation> gens;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(nsurf::Permutation::from_cycles(line));
  }
  if (gens.empty()) throw std::runtime_error("no generators in " + path);
  return gens;
}

int run_enumerate(const std::string& path, const std::string& sizes_text,
                  const std::string& sym_path, bool wn_only, int jobs,
                  const std::string& format) {
  const nsurf::SimplicialComplex m = load_complex(path);
  nsurf::SearchSpec spec;
  spec.complex = &m;
  spec.wn_only = wn_only;
  spec.jobs = jobs;
  if (!sizes_text.empty()) {
    const auto colon = sizes_text.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--sizes", "expected s1:s2, e.g. 3:3");
    const std::string a = sizes_text.substr(0, colon), b = sizes_text.substr(colon + 1);
    if (a.empty() || b.empty() ||
        a.find_first_not_of("0123456789") != std::string::npos ||
        b.find_first_not_of("0123456789") != std::string::npos)
      throw CLI::ValidationError("--sizes", "expected s1:s2, e.g. 3:3");
    spec.part_sizes = {std::stoi(a), std::stoi(b)};
  }
  if (!sym_path.empty()) spec.symmetry = load_generators(sym_path);

  const nsurf::SearchResult result = nsurf::enumerate_slicings(spec);
  std::cout << (format == "tsv" ? nsurf::render_rows_tsv(result)
                                : nsurf::render_rows_table(result));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slicings of combinatorial 3-manifolds: construction, bounds, enumeration"};
  app.require_subcommand(1);

  std::string name, output_path;
  auto* construct = app.add_subcommand("construct", "emit a builtin complex as a facet list");
  construct->add_option("name", name, "builtin name, e.g. bdC4:4 or gruenbaum-sphere-10")
      ->required();
  construct->add_option("-o,--output", output_path, "write to file instead of stdout");

  std::string info_path;
  auto* info = app.add_subcommand("info", "f-vector, manifold verdict, face-count relations");
  info->add_option("complexfile", info_path, "facet list file")->required();

  std::string slice_path, v1_text, off_path;
  bool with_report = false;
  auto* slice_cmd = app.add_subcommand("slice", "cut the slicing for a vertex partition");
  slice_cmd->add_option("complexfile", slice_path, "facet list file")->required();
  slice_cmd->add_option("--v1", v1_text, "comma-separated labels of the first part")->required();
  slice_cmd->add_option("-o,--off", off_path, "write the slicing as a polygonal OFF mesh");
  slice_cmd->add_flag("--report", with_report, "print the bound report");

  std::string verify_path, verify_v1;
  auto* verify = app.add_subcommand("verify", "run every structural and bound check");
  verify->add_option("complexfile", verify_path, "facet list file")->required();
  verify->add_option("--v1", verify_v1, "comma-separated labels of the first part")->required();

  std::string enum_path, sizes_text, sym_path, format = "table";
  bool wn_only = false;
  int jobs = 1;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate slicings over vertex partitions");
  enumerate->add_option("complexfile", enum_path, "facet list file")->required();
  enumerate->add_option("--sizes", sizes_text, "restrict part sizes, e.g. 3:3");
  enumerate->add_flag("--wn-only", wn_only, "keep only weakly neighborly slicings");
  enumerate->add_option("--sym", sym_path, "file of symmetry generators in cycle notation");
  enumerate->add_option("--jobs", jobs, "parallel workers")->check(CLI::Range(1, 256));
  enumerate->add_option("--format", format, "tsv or table")
      ->check(CLI::IsMember({"tsv", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(name, output_path);
    if (info->parsed()) return run_info(info_path);
    if (slice_cmd->parsed()) return run_slice(slice_path, v1_text, off_path, with_report);
    if (verify->parsed()) return run_verify(verify_path, verify_v1);
    if (enumerate->parsed()) return run_enumerate(enum_path, sizes_text, sym_path, wn_only, jobs, format);
  } catch (const CLI::ParseError& e) {  // malformed option values
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
