#pragma once

// Command-line front end. Exit codes: 0 ok, 2 parse error, 3 shape error
// (length mismatch, dimension cap, containment), 4 I/O error, 5 Schur
// mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <immaculate/immaculate.hpp>

namespace nsym::cli {

enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kShape = 3,
  kIo = 4,
  kMismatch = 5,
};

/// IMMACULATE_DIM_CAP if set, else `fallback`. Caps above 12 are refused
/// since 13! terms is far beyond exact expansion.
inline std::size_t dim_cap_from_env(std::size_t fallback) {
  const char* raw = std::getenv("IMMACULATE_DIM_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  std::size_t value = 0;
  const std::string_view text(raw);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0 || value > 12) {
    throw ParseError("IMMACULATE_DIM_CAP must be an integer in 1..12, got '" +
                     std::string(text) + "'");
  }
  return value;
}

/// beta parsed and, with `pad`, extended by zeros to alpha's length.
inline WeakComposition resolve_beta(const Composition& alpha, const std::string& text, bool pad) {
  WeakComposition beta = parse_weak_composition(text);
  if (pad && beta.size() < alpha.size()) beta = pad_to_length(beta, alpha.size());
  if (beta.size() != alpha.size()) {
    throw ShapeError("length mismatch: " + alpha.to_string() + " has " +
                     std::to_string(alpha.size()) + " parts, " + beta.to_string() + " has " +
                     std::to_string(beta.size()));
  }
  return beta;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew immaculate functions in the H basis, and when they vanish"};
  app.require_subcommand(1);

  std::string alpha_text;
  std::string beta_text;
  bool pad = false;
  bool show_matrix = false;

  auto* expand = app.add_subcommand("expand", "Print the H-expansion of I_alpha or I_alpha/beta");
  expand->add_option("alpha", alpha_text, "Composition, e.g. 6,4,3")->required();
  expand->add_option("--skew", beta_text, "Skewing sequence beta (zeros allowed)");
  expand->add_flag("--pad", pad, "Pad a shorter beta with trailing zeros");
  expand->add_flag("--show-matrix", show_matrix, "Also print the subscript matrix");

  auto* classify_cmd = app.add_subcommand("classify", "Classify the pair alpha/beta");
  classify_cmd->add_option("alpha", alpha_text, "Composition")->required();
  classify_cmd->add_option("beta", beta_text, "Skewing sequence")->required();
  classify_cmd->add_flag("--pad", pad, "Pad a shorter beta with trailing zeros");
  classify_cmd->add_flag("--show-matrix", show_matrix, "Also print the subscript matrix");

  int n = 0;
  int length = 0;
  int max_n = 14;
  bool partitions_only = false;
  bool timing = false;
  unsigned threads = 1;
  std::string format = "json-lines";
  std::string out_path;
  auto* enumerate = app.add_subcommand("enumerate", "Classify every pair of compositions of n");
  enumerate->add_option("--n", n, "Size of both compositions")->required();
  enumerate->add_option("--len", length, "Number of parts")->required();
  enumerate->add_flag("--partitions-only", partitions_only, "Restrict beta to partitions");
  enumerate->add_option("--format", format, "json-lines or csv")
      ->check(CLI::IsMember({"json-lines", "csv"}));
  enumerate->add_option("--out", out_path, "Output file (default: standard output)");
  enumerate->add_option("--max-n", max_n, "Largest accepted n")->capture_default_str();
  enumerate->add_option("--threads", threads, "Worker threads")->capture_default_str();
  enumerate->add_flag("--timing", timing, "Record per-pair microseconds (non-deterministic)");

  std::string outer_text;
  std::string inner_text;
  std::size_t vars = 0;
  auto* schur = app.add_subcommand("schur-check",
                                   "Compare Schur polynomials from tableaux and Jacobi-Trudi");
  schur->add_option("outer", outer_text, "Outer partition")->required();
  schur->add_option("--inner", inner_text, "Inner partition");
  schur->add_option("--vars", vars, "Number of variables")->required()->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }

  try {
    if (expand->parsed()) {
      const std::size_t cap = dim_cap_from_env(kDefaultDimCap);
      const Composition alpha = parse_composition(alpha_text);
      const WeakComposition beta =
          beta_text.empty() ? WeakComposition(std::vector<int>(alpha.size(), 0))
                            : resolve_beta(alpha, beta_text, pad);
      const SubscriptMatrix m = build_matrix(alpha, beta);
      if (show_matrix) out << render_matrix(m);
      out << canonical_render(ndet_laplace(m, cap)) << '\n';
      return kOk;
    }

    if (classify_cmd->parsed()) {
      const std::size_t cap = dim_cap_from_env(kDefaultDimCap);
      const Composition alpha = parse_composition(alpha_text);
      const WeakComposition beta = resolve_beta(alpha, beta_text, pad);
      if (show_matrix) out << render_matrix(build_matrix(alpha, beta));
      out << classify(alpha, beta, cap).to_line() << '\n';
      return kOk;
    }

    if (enumerate->parsed()) {
      const std::size_t cap = dim_cap_from_env(7);
      if (n < 1 || length < 1) throw ParseError("--n and --len must be positive");
      if (n > max_n) {
        throw ShapeError("n = " + std::to_string(n) + " exceeds --max-n " +
                         std::to_string(max_n));
      }
      if (static_cast<std::size_t>(length) > cap) {
        throw ShapeError("length " + std::to_string(length) + " exceeds the dimension cap " +
                         std::to_string(cap));
      }
      CensusOptions opt;
      opt.n = n;
      opt.length = length;
      opt.partitions_only = partitions_only;
      opt.dim_cap = cap;
      opt.threads = threads;
      opt.timing = timing;

      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
          err << "error: cannot open '" << out_path << "' for writing\n";
          return kIo;
        }
      }
      const auto records = run_census(opt);
      std::ostream& sink = out_path.empty() ? out : file;
      if (format == "csv") {
        write_csv(sink, records);
      } else {
        write_json_lines(sink, records);
      }
      if (!out_path.empty()) {
        file.close();
        if (!file) {
          err << "error: failed writing '" << out_path << "'\n";
          return kIo;
        }
        out << census_summary(records) << '\n';
      } else {
        err << census_summary(records) << '\n';
      }
      return kOk;
    }

    if (schur->parsed()) {
      WeakComposition outer;
      WeakComposition inner;
      try {
        outer = parse_composition(outer_text);
        if (!inner_text.empty()) inner = parse_weak_composition(inner_text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      SparsePolynomial via_tableaux(vars);
      SparsePolynomial via_jt(vars);
      try {
        via_tableaux = schur_via_tableaux(outer, inner, vars);
        via_jt = schur_via_jacobi_trudi(outer, inner, vars);
      } catch (const ShapeError& e) {
        // Non-partitions and non-contained shapes are input errors here.
        throw ParseError(e.what());
      }
      if (via_tableaux == via_jt) {
        out << "MATCH\n" << render_polynomial(via_tableaux) << '\n';
        return kOk;
      }
      out << "MISMATCH\n"
          << "tableaux:     " << render_polynomial(via_tableaux) << '\n'
          << "jacobi-trudi: " << render_polynomial(via_jt) << '\n'
          << "difference:   " << render_polynomial(via_tableaux - via_jt) << '\n';
      return kMismatch;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kShape;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kShape;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}

}  // namespace nsym::cli
