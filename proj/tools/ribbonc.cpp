#include <Eigen/Core>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ribbon/analysis.hpp"
#include "ribbon/svg.hpp"
#include "ribbon/verify.hpp"

namespace {

using nlohmann::ordered_json;

void check_order(int n, bool force) {
  if (n < 2) throw std::domain_error("order must be at least 2");
  if (n > 8 && !force)
    throw std::domain_error("order above 8 requires --force (matrix dimension n!)");
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    const int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

std::vector<std::string> poly_strings(const ribbon::Poly& p) {
  std::vector<std::string> out;
  for (const auto& c : p) out.push_back(c.str());
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact enumeration of order-n ribbon tilings of n-by-N strips"};
  app.require_subcommand(1);

  if (const char* threads = std::getenv("RIBBONC_THREADS"))
    Eigen::setNbThreads(std::max(1, std::atoi(threads)));

  int order = 3;
  long length = 5;
  bool force = false;
  bool reduced = false;
  bool aprime = false;
  double tol = 1e-9;
  long limit = 100;
  long index = 0;
  std::string orders = "2..8";
  std::string lengths = "1..10";
  std::string format = "csv";
  std::string out_path;
  std::string suite = "all";

  auto* count = app.add_subcommand("count", "number of tilings of the strip");
  count->add_option("--order", order)->required();
  count->add_option("--length", length)->required();
  count->add_flag("--force", force);

  auto* table = app.add_subcommand("table", "counts over ranges of n and N");
  table->add_option("--orders", orders);
  table->add_option("--lengths", lengths);
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* matrix = app.add_subcommand("matrix", "transfer matrix");
  matrix->add_option("--order", order)->required();
  matrix->add_option("--out", out_path);
  matrix->add_flag("--aprime", aprime, "print the top block in text form");
  matrix->add_flag("--force", force);

  auto* fund = app.add_subcommand("fundamentals", "fundamental and boundary sequences");
  fund->add_option("--order", order)->required();
  fund->add_flag("--force", force);

  auto* genfun = app.add_subcommand("genfun", "exact generating function");
  genfun->add_option("--order", order)->required();
  genfun->add_flag("--reduced", reduced);
  genfun->add_flag("--force", force);

  auto* eig = app.add_subcommand("eig", "dominant eigenvalue and growth rate");
  eig->add_option("--order", order)->required();
  eig->add_option("--tol", tol);
  eig->add_flag("--force", force);

  auto* spec = app.add_subcommand("spectrum", "all eigenvalues as re,im rows");
  spec->add_option("--order", order)->required();
  spec->add_option("--out", out_path);
  spec->add_flag("--force", force);

  auto* enumerate = app.add_subcommand("enumerate", "list tilings of the strip");
  enumerate->add_option("--order", order)->required();
  enumerate->add_option("--length", length)->required();
  enumerate->add_option("--limit", limit);

  auto* render = app.add_subcommand("render", "render one tiling as SVG");
  render->add_option("--order", order)->required();
  render->add_option("--length", length)->required();
  render->add_option("--index", index);
  render->add_option("--out", out_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "cross-validation suites");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"oracle", "lemmas", "matrix", "genfun", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (count->parsed()) {
    check_order(order, force);
    std::cout << ribbon::count_strip(order, length).str() << "\n";
    return 0;
  }

  if (table->parsed()) {
    const auto [n_lo, n_hi] = parse_range(orders);
    const auto [N_lo, N_hi] = parse_range(lengths);
    check_order(n_hi, false);
    ordered_json rows = ordered_json::object();
    std::ostringstream csv;
    csv << "n\\N";
    for (long N = N_lo; N <= N_hi; ++N) csv << "," << N;
    csv << "\n";
    for (int n = n_lo; n <= n_hi; ++n) {
      ribbon::CountingEngine engine(n);
      csv << n;
      ordered_json row = ordered_json::array();
      for (long N = N_lo; N <= N_hi; ++N) {
        const std::string v = engine.count(N).str();
        csv << "," << v;
        row.push_back(v);
      }
      csv << "\n";
      rows[std::to_string(n)] = row;
    }
    if (format == "csv") {
      std::cout << csv.str();
    } else {
      ordered_json j;
      j["orders"] = {n_lo, n_hi};
      j["lengths"] = {N_lo, N_hi};
      j["rows"] = rows;
      std::cout << j.dump() << "\n";
    }
    return 0;
  }

  if (matrix->parsed()) {
    check_order(order, force);
    const ribbon::TransferMatrix a = ribbon::build_transfer_matrix(order);
    if (aprime) {
      const long t = a.block();
      for (long r = 0; r < t; ++r) {
        for (long c = 0; c < (order - 1) * t; ++c)
          std::cout << (c ? " " : "") << a.entry(r, c);
        std::cout << "\n";
      }
      return 0;
    }
    ordered_json j;
    j["n"] = order;
    j["dim"] = a.dim;
    j["order"] = "paper";
    ordered_json rows = ordered_json::array();
    for (long r = 0; r < a.dim; ++r) {
      std::vector<int> row(a.dim, 0);
      for (const auto& [c, v] : a.rows[r]) row[c] += v;
      rows.push_back(row);
    }
    j["rows"] = rows;
    emit(j.dump() + "\n", out_path);
    return 0;
  }

  if (fund->parsed()) {
    check_order(order, force);
    const ribbon::FundamentalCatalog cat = ribbon::generate_fundamentals(order);
    ordered_json j;
    j["n"] = order;
    j["sequences"] = cat.sequences;
    ordered_json boundaries = ordered_json::array();
    for (const auto& f : cat.sequences) boundaries.push_back(ribbon::sigma(f, order));
    j["boundaries"] = boundaries;
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (genfun->parsed()) {
    check_order(order, force);
    if (order > 5 && !force)
      throw std::domain_error(
          "exact determinants above order 5 need --force (long runtime)");
    const ribbon::TransferMatrix a = ribbon::build_transfer_matrix(order);
    const ribbon::RationalFunction g = ribbon::generating_function(a, reduced);
    ordered_json j;
    j["n"] = order;
    j["reduced"] = reduced;
    j["numerator"] = poly_strings(g.num);
    j["denominator"] = poly_strings(g.den);
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (eig->parsed()) {
    check_order(order, force);
    const ribbon::TransferMatrix a = ribbon::build_transfer_matrix(order);
    const double lambda = ribbon::dominant_eigenvalue(a, tol);
    const ribbon::GrowthBounds b = ribbon::growth_rate_bounds(order);
    std::printf("lambda=%.6f\n", lambda);
    std::printf("mu=%.6f\n", b.mu);
    std::printf("lower=%.6f upper=%.6f ok=%s\n", b.lower, b.upper,
                b.ok ? "true" : "false");
    return 0;
  }

  if (spec->parsed()) {
    check_order(order, force);
    const ribbon::SpectrumReport rep =
        ribbon::spectrum(ribbon::build_transfer_matrix(order));
    std::ostringstream csv;
    csv << "re,im\n";
    for (const auto& ev : rep.eigenvalues) {
      char line[80];
      std::snprintf(line, sizeof line, "%.12g,%.12g\n", ev.real(), ev.imag());
      csv << line;
    }
    emit(csv.str(), out_path);
    return 0;
  }

  if (enumerate->parsed()) {
    check_order(order, false);
    const auto tilings = ribbon::enumerate_tilings(
        ribbon::RegionProfile::strip(order, length), limit);
    ordered_json j = ordered_json::array();
    for (const auto& tiling : tilings) {
      ordered_json tiles = ordered_json::array();
      for (const auto& tile : tiling) {
        std::string steps;
        for (const auto s : tile.steps)
          steps.push_back(s == ribbon::Step::Right ? 'R' : 'U');
        tiles.push_back({{"start", {tile.start.x, tile.start.y}},
                         {"level", tile.tile_level()},
                         {"steps", steps}});
      }
      j.push_back(tiles);
    }
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (render->parsed()) {
    check_order(order, false);
    const auto region = ribbon::RegionProfile::strip(order, length);
    const auto tilings = ribbon::enumerate_tilings(region, index + 1);
    if (index >= static_cast<long>(tilings.size()))
      throw std::domain_error("tiling index out of range");
    ribbon::render_svg_file(region, tilings[index], out_path);
    return 0;
  }

  if (verify_cmd->parsed()) {
    const ribbon::VerifyReport rep = ribbon::verify(suite);
    bool all_ok = true;
    for (const auto& r : rep.results) {
      std::cout << (r.ok ? "PASS " : "FAIL ") << r.name;
      if (!r.ok && !r.detail.empty()) std::cout << " [" << r.detail << "]";
      std::cout << "\n";
      all_ok = all_ok && r.ok;
    }
    return all_ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
