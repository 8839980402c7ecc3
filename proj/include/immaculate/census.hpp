#pragma once

// Exhaustive classification runs over all pairs of compositions of n with a
// fixed number of parts, written as JSON lines or CSV.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "compositions.hpp"
#include "predicates.hpp"

namespace nsym {

struct CensusRecord {
  std::string alpha;
  std::string beta;
  ClassKind kind;
  std::optional<std::string> certificate;
  std::size_t terms = 0;
  std::int64_t micros = 0;
};

struct CensusOptions {
  int n = 0;
  int length = 0;
  bool partitions_only = false;
  std::size_t dim_cap = kDefaultDimCap;
  unsigned threads = 1;
  /// When false every record carries micros = 0, keeping output
  /// byte-identical across runs.
  bool timing = false;
};

inline CensusRecord census_record(const WeakComposition& alpha, const WeakComposition& beta,
                                  std::size_t dim_cap, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  const Classification c = classify(alpha, beta, dim_cap);
  const auto stop = std::chrono::steady_clock::now();
  CensusRecord r{alpha.to_string(), beta.to_string(), c.kind, std::nullopt, 0, 0};
  if (c.shows_certificate()) r.certificate = c.certificate->to_string();
  if (c.expansion) r.terms = c.expansion->size();
  if (timing) {
    r.micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
  }
  return r;
}

/// Rows ordered lexicographically by alpha, then beta, regardless of the
/// thread count.
inline std::vector<CensusRecord> run_census(const CensusOptions& opt) {
  const std::vector<Composition> alphas = compositions(opt.n, opt.length);
  const std::vector<Composition> betas =
      opt.partitions_only ? partitions(opt.n, opt.length) : compositions(opt.n, opt.length);

  std::vector<std::vector<CensusRecord>> per_alpha(alphas.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < alphas.size(); i = next++) {
      auto& rows = per_alpha[i];
      rows.reserve(betas.size());
      for (const auto& beta : betas) {
        rows.push_back(census_record(alphas[i], beta, opt.dim_cap, opt.timing));
      }
    }
  };
  const unsigned threads = std::max(1u, opt.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<CensusRecord> out;
  for (auto& rows : per_alpha) {
    for (auto& r : rows) out.push_back(std::move(r));
  }
  return out;
}

inline std::map<ClassKind, std::size_t> class_counts(const std::vector<CensusRecord>& records) {
  std::map<ClassKind, std::size_t> counts;
  for (ClassKind k : kAllClassKinds) counts[k] = 0;
  for (const auto& r : records) ++counts[r.kind];
  return counts;
}

/// `total=N ALL_ZERO_PRE_CANCELLATION=a NONZERO_TERM_EXISTS=b ...`
inline std::string census_summary(const std::vector<CensusRecord>& records) {
  std::string out = "total=" + std::to_string(records.size());
  for (const auto& [k, count] : class_counts(records)) {
    out += ' ';
    out += to_token(k);
    out += '=' + std::to_string(count);
  }
  return out;
}

/// One object per line with keys alpha, beta, class, certificate, terms,
/// micros in that order.
inline void write_json_lines(std::ostream& os, const std::vector<CensusRecord>& records) {
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["alpha"] = r.alpha;
    j["beta"] = r.beta;
    j["class"] = std::string(to_token(r.kind));
    j["certificate"] = r.certificate ? nlohmann::ordered_json(*r.certificate) : nullptr;
    j["terms"] = r.terms;
    j["micros"] = r.micros;
    os << j.dump() << '\n';
  }
}

/// Header row then one row per record; composition fields are quoted since
/// they contain commas.
inline void write_csv(std::ostream& os, const std::vector<CensusRecord>& records) {
  os << "alpha,beta,class,certificate,terms,micros\n";
  for (const auto& r : records) {
    os << '"' << r.alpha << "\",\"" << r.beta << "\"," << to_token(r.kind) << ",\""
       << r.certificate.value_or("") << "\"," << r.terms << ',' << r.micros << '\n';
  }
}

}  // namespace nsym
