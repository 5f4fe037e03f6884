#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "numrange/bounds.hpp"
#include "numrange/enclosure.hpp"
#include "numrange/ensemble.hpp"
#include "numrange/matrix_io.hpp"
#include "numrange/oracle.hpp"
#include "numrange/svg_plot.hpp"

namespace {

using numrange::NormKind;

int cmd_bounds(const std::string& path) {
  auto t = numrange::io::read_matrix_file(path);
  std::cout << numrange::io::bound_report_json(numrange::bound_report(t)) << "\n";
  return 0;
}

int cmd_octagon(const std::string& path, NormKind kind) {
  auto t = numrange::io::read_matrix_file(path);
  auto region = numrange::enclosure_region(numrange::cartesian_split(t), kind);
  std::cout << numrange::io::region_json(region) << "\n";
  return 0;
}

void scale_region(numrange::EnclosureRegion<double>& region, double factor) {
  if (auto* seg = std::get_if<numrange::Segment<double>>(&region)) {
    seg->endpoint *= factor;
    return;
  }
  for (auto& v : std::get<numrange::ConvexPolygon<double>>(region).vertices) {
    v *= factor;
  }
}

int cmd_check(const std::string& path, NormKind kind, int angles, int samples,
              std::uint64_t seed, double tol_flag, double debug_scale) {
  auto t = numrange::io::read_matrix_file(path);
  auto pair = numrange::cartesian_split(t);
  auto region = numrange::enclosure_region(pair, kind);
  auto sample = numrange::sample_fov(t, angles, samples, seed);

  double scale = numrange::spectral_norm(t);
  double tol = tol_flag >= 0 ? tol_flag : 1e-8 * (1.0 + scale);
  if (debug_scale != 1.0) scale_region(region, debug_scale);

  double worst = 0;
  std::size_t points = 0;
  auto account = [&](const numrange::Vec2<double>& p) {
    worst = std::max(worst, numrange::containment_defect(region, p));
    ++points;
  };
  for (const auto& b : sample.boundary) account(b.point);
  for (const auto& p : sample.interior) account(p);
  bool contained = worst <= tol;

  std::cout << "matrix: " << t.rows() << "x" << t.cols()
            << ", norm: " << numrange::norm_kind_name(kind) << "\n";
  if (const auto* seg = std::get_if<numrange::Segment<double>>(&region)) {
    std::cout << "region: segment, endpoint ("
              << numrange::io::format_sig12(seg->endpoint.x()) << ", "
              << numrange::io::format_sig12(seg->endpoint.y()) << ")\n";
  } else {
    const auto& poly = std::get<numrange::ConvexPolygon<double>>(region);
    std::cout << "region: " << numrange::shape_name(poly.shape) << " ("
              << poly.vertices.size() << " vertices)\n";
  }
  std::cout << "containment: " << points << " sampled points, max defect "
            << numrange::io::format_sig12(worst) << ", tol "
            << numrange::io::format_sig12(tol)
            << (contained ? " -> ok" : " -> VIOLATED") << "\n";

  bool tangency_ok = true;
  bool degenerate = std::holds_alternative<numrange::Segment<double>>(region);
  if (kind != NormKind::Spectral) {
    std::cout << "tangency: skipped (needs the spectral norm)\n";
  } else if (degenerate) {
    std::cout << "tangency: skipped (operator is a Hermitian multiple)\n";
  } else {
    auto report = numrange::tangency_check(pair, tol);
    const char* names[4] = {"+x", "+y", "diag+", "diag-"};
    for (int i = 0; i < 4; ++i) {
      const auto& side = report.sides[i];
      std::cout << "tangency " << names[i] << ": offset "
                << numrange::io::format_sig12(side.offset) << ", support "
                << numrange::io::format_sig12(side.support) << ", gap "
                << numrange::io::format_sig12(side.gap)
                << (side.tangent ? " -> ok" : " -> MISSED") << "\n";
    }
    tangency_ok = report.all_tangent;
  }

  bool pass = contained && tangency_ok;
  std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 4;
}

int cmd_plot(const std::string& path, const std::string& out_path, int angles,
             int samples, std::uint64_t seed) {
  auto t = numrange::io::read_matrix_file(path);
  auto region = numrange::enclosure_region(numrange::cartesian_split(t));
  auto sample = numrange::sample_fov(t, angles, samples, seed);
  auto svg = numrange::plot::render_svg(region, sample, numrange::bound_report(t));
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  out << svg;
  out.flush();
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 5;
  }
  return 0;
}

int cmd_ensemble(const numrange::EnsembleConfig& config, const std::string& format) {
  auto rows = numrange::run_ensemble(config);
  std::cout << (format == "csv" ? numrange::ensemble_csv(rows)
                                : numrange::ensemble_json(rows) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Polygon enclosures and numerical-radius bounds for the numerical "
      "range of a complex square matrix"};
  app.require_subcommand(1);

  const std::map<std::string, NormKind> norm_names{
      {"spectral", NormKind::Spectral},
      {"one", NormKind::InducedOne},
      {"inf", NormKind::InducedInf},
      {"frobenius", NormKind::Frobenius}};

  std::string matrix_path;
  std::string out_path;
  NormKind kind = NormKind::Spectral;
  int angles = 720;
  int samples = 200;
  std::uint64_t seed = 1;
  double tol = -1.0;
  double debug_scale = 1.0;

  auto* bounds = app.add_subcommand(
      "bounds", "Numerical-radius upper bounds as JSON");
  bounds->add_option("matrix", matrix_path, "Matrix file (JSON or text grid)")
      ->required();

  auto* octagon = app.add_subcommand(
      "octagon", "Polygon (or segment) enclosing the numerical range, as JSON");
  octagon->add_option("matrix", matrix_path, "Matrix file (JSON or text grid)")
      ->required();
  octagon
      ->add_option("--norm", kind,
                   "Norm for the slab widths: spectral, one, inf, frobenius")
      ->transform(CLI::CheckedTransformer(norm_names, CLI::ignore_case));

  auto* check = app.add_subcommand(
      "check", "Verify the enclosure against brute-force sampling");
  check->add_option("matrix", matrix_path, "Matrix file (JSON or text grid)")
      ->required();
  check
      ->add_option("--norm", kind,
                   "Norm for the slab widths: spectral, one, inf, frobenius")
      ->transform(CLI::CheckedTransformer(norm_names, CLI::ignore_case));
  check->add_option("--angles", angles, "Support directions to sweep")
      ->check(CLI::Range(3, 1000000));
  check->add_option("--samples", samples, "Random interior points")
      ->check(CLI::Range(0, 10000000));
  check->add_option("--seed", seed, "Seed for the interior samples");
  check->add_option("--tol", tol,
                    "Absolute containment tolerance (default scales with "
                    "the matrix norm)");
  check
      ->add_option("--debug-scale-region", debug_scale,
                   "Shrink or grow the region before checking (testing aid)")
      ->group("");

  auto* plot = app.add_subcommand(
      "plot", "Render the sampled range, enclosure and bound circles as SVG");
  plot->add_option("matrix", matrix_path, "Matrix file (JSON or text grid)")
      ->required();
  plot->add_option("output", out_path, "Output SVG path")->required();
  plot->add_option("--angles", angles, "Support directions to sweep")
      ->check(CLI::Range(3, 1000000));
  plot->add_option("--samples", samples, "Random interior points")
      ->check(CLI::Range(0, 10000000));
  plot->add_option("--seed", seed, "Seed for the interior samples");

  numrange::EnsembleConfig config;
  std::string format = "json";
  auto* ensemble = app.add_subcommand(
      "ensemble", "Mean bound ratios over random matrix ensembles");
  ensemble->add_option("--sizes", config.sizes, "Matrix sizes")
      ->delimiter(',')
      ->check(CLI::Range(1, 2000));
  ensemble->add_option("--trials", config.trials, "Matrices per size")
      ->check(CLI::Range(1, 10000000));
  ensemble->add_option("--seed", config.seed, "Ensemble seed");
  ensemble->add_option("--entry-range", config.entry_range,
                       "Entries are uniform on [-range, range]^2")
      ->check(CLI::PositiveNumber);
  ensemble->add_option("--threads", config.threads,
                       "Worker threads (0 = hardware)");
  ensemble->add_option("--format", format, "json or csv")
      ->transform(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bounds) return cmd_bounds(matrix_path);
    if (*octagon) return cmd_octagon(matrix_path, kind);
    if (*check) {
      return cmd_check(matrix_path, kind, angles, samples, seed, tol, debug_scale);
    }
    if (*plot) return cmd_plot(matrix_path, out_path, angles, samples, seed);
    if (*ensemble) return cmd_ensemble(config, format);
  } catch (const numrange::ZeroOperatorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const numrange::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
