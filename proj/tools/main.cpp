// Command-line front end: conversions and checks for signed BW complex
// specifications and alternating link diagrams.
//
// Exit codes: 0 success (or verdict yes), 1 verdict no / not isomorphic,
// 2 invalid input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sbw/census.hpp"
#include "sbw/complex.hpp"
#include "sbw/diagram.hpp"
#include "sbw/error.hpp"
#include "sbw/serialize.hpp"
#include "sbw/spec.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw sbw::InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_check(const std::string& path, bool as_json) {
  const sbw::SbwSpec spec = sbw::parse_spec(read_input(path));
  const sbw::CriterionReport report = sbw::criterion_check(spec);
  if (as_json)
    std::cout << sbw::to_json(report) << "\n";
  else
    std::cout << sbw::check_line(report) << "\n";
  return report.verdict ? 0 : 1;
}

int run_build(const std::string& path, int dim, bool homology) {
  const sbw::SbwSpec spec = sbw::parse_spec(read_input(path));
  sbw::HomologyResult h1;
  const sbw::HomologyResult* h1_ptr = nullptr;
  if (homology) {
    h1 = sbw::first_homology(
        sbw::fundamental_group_presentation(sbw::build_squared_complex(spec)));
    h1_ptr = &h1;
  }
  if (dim == 2) {
    std::cout << sbw::complex_json(sbw::build_squared_complex(spec), nullptr, h1_ptr)
              << "\n";
  } else {
    const sbw::QuotientComplex c3 = sbw::build_cubed_complex(spec);
    const std::vector<sbw::SurfaceModel> boundary = sbw::boundary_complex(c3);
    std::cout << sbw::complex_json(c3, &boundary, h1_ptr) << "\n";
  }
  return 0;
}

int run_from_pd(const std::string& path) {
  const sbw::PDCode pd = sbw::parse_pd(read_input(path));
  const sbw::DiagramModel m = sbw::checkerboard_coloring(sbw::trace_faces(pd));
  std::cout << sbw::format_spec(sbw::extract_sbw(m));
  return 0;
}

int run_reconstruct(const std::string& path) {
  const sbw::SbwSpec spec = sbw::parse_spec(read_input(path));
  const sbw::ReconstructedDiagram rec = sbw::reconstruct_diagram(spec);
  if (rec.pd.has_value()) {
    std::cout << sbw::format_pd(*rec.pd);
    return 0;
  }
  std::cerr << rec.pd_obstruction << "\n";
  std::cout << sbw::surface_diagram_json(rec) << "\n";
  return 1;
}

int run_census(int n, bool raw, bool as_json, bool force) {
  sbw::EnumerateOptions options;
  options.up_to_iso = !raw;
  options.max_n = force ? 5 : 0;
  if (!raw) {
    const sbw::CensusRow row = sbw::census_report(n, options);
    std::cout << (as_json ? sbw::to_json(row) + "\n" : sbw::census_table(row));
    return 0;
  }
  // Raw listing: one line per bijection, no isomorphism dedup.
  std::ostringstream out;
  long long count = 0;
  std::ostringstream rows;
  sbw::enumerate_specs(n, options, [&](const sbw::SbwSpec& spec) {
    const sbw::CriterionReport r = sbw::criterion_check(spec);
    rows << count << " orbits=" << r.orbit_count
         << " verdict=" << (r.verdict ? "yes" : "no") << " chi=" << r.chi
         << " connected=" << (r.connected ? "yes" : "no") << " phi=";
    for (int p = 0; p < 2 * spec.n; ++p) {
      if (p) rows << ",";
      rows << to_string(sbw::positive_corner(p)) << ">" << to_string(spec.phi[p]);
    }
    rows << "\n";
    ++count;
  });
  out << "n " << n << "\n" << "bijections " << count << "\n" << rows.str();
  std::cout << out.str();
  return 0;
}

int run_isomorphic(const std::string& a, const std::string& b) {
  if (a == "-" && b == "-")
    throw sbw::InvalidInput("only one argument may be standard input");
  const sbw::SbwSpec sa = sbw::parse_spec(read_input(a));
  const sbw::SbwSpec sb = sbw::parse_spec(read_input(b));
  const bool iso = sbw::isomorphic(sa, sb);
  std::cout << "isomorphic=" << (iso ? "yes" : "no") << "\n";
  return iso ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed BW squared/cubed complexes for alternating link exteriors"};
  app.require_subcommand(1);

  std::string spec_path, pd_path, path_a, path_b;
  bool as_json = false, homology = false, raw = false, force = false;
  int dim = 2, census_n = 0;

  auto* check = app.add_subcommand("check", "run the orbit-count criterion on a spec");
  check->add_option("spec", spec_path, "spec file, '-' for stdin")->required();
  check->add_flag("--json", as_json, "emit JSON");

  auto* build = app.add_subcommand("build", "emit the squared or cubed complex");
  build->add_option("spec", spec_path, "spec file, '-' for stdin")->required();
  build->add_option("--dim", dim, "complex dimension")->check(CLI::IsMember({2, 3}));
  build->add_flag("--homology", homology, "include first homology of the spine");

  auto* from_pd = app.add_subcommand("from-pd", "extract a spec from a PD code");
  from_pd->add_option("pd", pd_path, "PD file, '-' for stdin")->required();

  auto* reconstruct =
      app.add_subcommand("reconstruct", "rebuild the diagram described by a spec");
  reconstruct->add_option("spec", spec_path, "spec file, '-' for stdin")->required();

  auto* census = app.add_subcommand("census", "enumerate and classify small specs");
  census->add_option("--n", census_n, "number of squares")->required();
  census->add_flag("--raw", raw, "list every bijection instead of classes");
  census->add_flag("--json", as_json, "emit JSON");
  census->add_flag("--force", force, "raise the size cap to n=5");

  auto* iso = app.add_subcommand("isomorphic", "compare two specs up to isomorphism");
  iso->add_option("a", path_a, "first spec file, '-' for stdin")->required();
  iso->add_option("b", path_b, "second spec file, '-' for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*check) return run_check(spec_path, as_json);
    if (*build) return run_build(spec_path, dim, homology);
    if (*from_pd) return run_from_pd(pd_path);
    if (*reconstruct) return run_reconstruct(spec_path);
    if (*census) return run_census(census_n, raw, as_json, force);
    if (*iso) return run_isomorphic(path_a, path_b);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
