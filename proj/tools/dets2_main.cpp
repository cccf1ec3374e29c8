// dets2 — evaluate the det^{S^2} multilinear form on six plane vectors,
// decide quadrilateral realizability, and re-derive the form from its
// vanishing constraints.
//
//   dets2 eval PATH [--backend rational|float] [--all-formulas]
//   dets2 solve PATH [--svg OUTPATH]
//   dets2 uniqueness
//   dets2 --version
//
// Exit codes: 0 success, 1 user/input error, 2 internal error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dets2/config_io.hpp"
#include "dets2/det_s2.hpp"
#include "dets2/realizability.hpp"
#include "dets2/svg.hpp"
#include "dets2/universality.hpp"
#include "dets2/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;
constexpr int kExitInternalError = 2;

constexpr double kFloatAgreeTolerance = 1e-9;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);
  return buf;
}

int run_eval(const std::string& path, const std::string& backend, bool all_formulas) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open \"" << path << "\"\n";
    return kExitUserError;
  }
  if (backend == "rational") {
    const auto c = dets2::read_config_rational(in);
    if (!all_formulas) {
      std::cout << dets2::det_s2_direct(c) << "\n";
      return kExitOk;
    }
    const dets2::Rational direct = dets2::det_s2_direct(c);
    const dets2::Rational inner = dets2::det_s2_inner_product(c);
    const dets2::Rational matrix = dets2::det_s2_via_matrix(c);
    std::cout << "direct        = " << direct << "\n";
    std::cout << "inner_product = " << inner << "\n";
    std::cout << "via_matrix    = " << matrix << "\n";
    if (direct == inner && inner == matrix) {
      std::cout << "AGREE\n";
      return kExitOk;
    }
    std::cout << "DISAGREE\n";
    return kExitInternalError;
  }

  const auto c = dets2::read_config_float(in);
  if (!all_formulas) {
    std::cout << format_double(dets2::det_s2_direct(c)) << "\n";
    return kExitOk;
  }
  const double direct = dets2::det_s2_direct(c);
  const double inner = dets2::det_s2_inner_product(c);
  const double matrix = dets2::det_s2_via_matrix(c);
  std::cout << "direct        = " << format_double(direct) << "\n";
  std::cout << "inner_product = " << format_double(inner) << "\n";
  std::cout << "via_matrix    = " << format_double(matrix) << "\n";
  if (std::abs(direct - inner) <= kFloatAgreeTolerance && std::abs(inner - matrix) <= kFloatAgreeTolerance) {
    std::cout << "AGREE\n";
    return kExitOk;
  }
  std::cout << "DISAGREE\n";
  return kExitInternalError;
}

std::string svg_output_name(std::string base, std::size_t index) {
  const std::string ext = ".svg";
  if (base.size() >= ext.size() && base.compare(base.size() - ext.size(), ext.size(), ext) == 0)
    base.erase(base.size() - ext.size());
  return base + "-" + std::to_string(index) + ext;
}

int run_solve(const std::string& path, const std::string& svg_base) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open \"" << path << "\"\n";
    return kExitUserError;
  }
  // Exact scalars only: the rank decision is meaningless under rounding.
  const auto c = dets2::read_config_rational(in);
  const auto result = dets2::classify(c);

  std::cout << "rank " << result.rank << "\n";
  std::cout << (result.realizable ? "REALIZABLE" : "NOT REALIZABLE") << "\n";
  for (std::size_t k = 0; k < result.lambda_basis.size(); ++k) {
    std::cout << "lambda[" << k << "]:";
    for (std::size_t col = 0; col < 6; ++col) {
      const auto& [i, j] = dets2::kLambdaPairs[col];
      std::cout << " l" << i << j << "=" << result.lambda_basis[k][col];
    }
    std::cout << "\n";
    std::cout << "quad[" << k << "]:";
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& p = result.quadrilaterals[k].pts[i];
      std::cout << " Q" << (i + 1) << "=(" << p.x << "," << p.y << ")";
    }
    std::cout << "\n";
  }

  if (!svg_base.empty()) {
    for (std::size_t k = 0; k < result.quadrilaterals.size(); ++k) {
      const std::string name = svg_output_name(svg_base, k);
      std::ofstream out(name);
      if (!out) {
        std::cerr << "error: cannot write \"" << name << "\"\n";
        return kExitUserError;
      }
      dets2::write_quad_svg(out, result.quadrilaterals[k], c);
      if (!out.good()) {
        std::cerr << "error: failed while writing \"" << name << "\"\n";
        return kExitUserError;
      }
      std::cout << "svg[" << k << "]: " << name << "\n";
    }
  }
  return kExitOk;
}

int run_uniqueness() {
  const auto result = dets2::solve_uniqueness();
  std::cout << "constraint matrix " << result.rows << "x" << result.cols << "\n";
  std::cout << "nullspace dimension " << result.dimension << "\n";
  if (result.dimension != 1 || !result.generator) {
    std::cout << "MISMATCH: expected a one-dimensional solution space\n";
    return kExitInternalError;
  }

  const auto canonical = dets2::canonical_coefficients();
  const auto& gen = *result.generator;
  std::size_t support = 0;
  bool plus = true;
  bool minus = true;
  for (std::size_t w = 0; w < dets2::kWordCount; ++w) {
    if (!gen[w].is_zero()) ++support;
    plus = plus && gen[w] == canonical[w];
    minus = minus && gen[w] == -canonical[w];
  }
  std::cout << "generator support " << support << "\n";
  if (plus || minus) {
    std::cout << "MATCHES CANONICAL (sign " << (plus ? "+1" : "-1") << ")\n";
    return kExitOk;
  }
  std::cout << "MISMATCH: generator differs from the twelve-term table\n";
  return kExitInternalError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"det^{S^2}: a determinant-like multilinear form on six plane vectors"};
  app.set_version_flag("--version", std::string("dets2 ") + dets2::kVersion);
  app.require_subcommand(1);

  std::string eval_path;
  std::string backend = "rational";
  bool all_formulas = false;
  auto* eval = app.add_subcommand("eval", "evaluate the form on a configuration file");
  eval->add_option("path", eval_path, "configuration JSON file")->required();
  eval->add_option("--backend", backend, "scalar backend (default rational)")
      ->check(CLI::IsMember({"rational", "float"}));
  eval->add_flag("--all-formulas", all_formulas, "evaluate all three formulas and cross-check");

  std::string solve_path;
  std::string svg_base;
  auto* solve = app.add_subcommand("solve", "decide realizability and reconstruct quadrilaterals");
  solve->add_option("path", solve_path, "configuration JSON file (exact rationals only)")->required();
  solve->add_option("--svg", svg_base, "write one SVG per kernel basis vector (suffix -0, -1, ...)");

  auto* uniqueness = app.add_subcommand("uniqueness", "re-derive the form from its vanishing constraints");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  }

  try {
    if (eval->parsed()) return run_eval(eval_path, backend, all_formulas);
    if (solve->parsed()) return run_solve(solve_path, svg_base);
    if (uniqueness->parsed()) return run_uniqueness();
    return kExitUserError;
  } catch (const dets2::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}
