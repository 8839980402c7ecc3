#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include <immaculate/compositions.hpp>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

/// Compositions of n into `length` parts via cut sets of {1..n-1}.
inline std::vector<std::vector<int>> compositions_by_cuts(int n, int length) {
  std::vector<std::vector<int>> out;
  if (n < 1 || length < 1 || length > n) return out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    if (__builtin_popcount(mask) != length - 1) continue;
    std::vector<int> parts;
    int last = 0;
    for (int cut = 1; cut < n; ++cut) {
      if (mask & (1u << (cut - 1))) {
        parts.push_back(cut - last);
        last = cut;
      }
    }
    parts.push_back(n - last);
    out.push_back(parts);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// (a_i - i) - (b_j - j), written out directly.
inline Matrix subscripts(const std::vector<int>& a, const std::vector<int>& b) {
  Matrix m(a.size(), std::vector<int>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      m[i][j] = (a[i] - static_cast<int>(i + 1)) - (b[j] - static_cast<int>(j + 1));
    }
  }
  return m;
}

/// Some permutation selects only nonnegative entries.
inline bool some_permutation_survives(const Matrix& m) {
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t r = 0; r < m.size() && ok; ++r) ok = m[r][p[r]] >= 0;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Literal reading: every set S of k rows contains a row with at least k
/// nonnegative entries. Checked over all 2^l subsets.
inline bool subsets_have_rich_row(const Matrix& m) {
  const std::size_t l = m.size();
  for (unsigned mask = 1; mask < (1u << l); ++mask) {
    const int k = __builtin_popcount(mask);
    bool found = false;
    for (std::size_t r = 0; r < l && !found; ++r) {
      if (!(mask & (1u << r))) continue;
      const auto nonneg = std::count_if(m[r].begin(), m[r].end(), [](int x) { return x >= 0; });
      found = nonneg >= k;
    }
    if (!found) return false;
  }
  return true;
}

/// Hall's condition literally: every row set S reaches >= |S| columns
/// through nonnegative entries.
inline bool hall_condition(const Matrix& m) {
  const std::size_t l = m.size();
  for (unsigned mask = 1; mask < (1u << l); ++mask) {
    unsigned cols = 0;
    for (std::size_t r = 0; r < l; ++r) {
      if (!(mask & (1u << r))) continue;
      for (std::size_t c = 0; c < l; ++c) {
        if (m[r][c] >= 0) cols |= 1u << c;
      }
    }
    if (__builtin_popcount(cols) < __builtin_popcount(mask)) return false;
  }
  return true;
}

inline std::vector<int> random_composition(std::mt19937_64& rng, std::size_t length, int max_part) {
  std::uniform_int_distribution<int> d(1, max_part);
  std::vector<int> out(length);
  for (auto& x : out) x = d(rng);
  return out;
}

/// Random weakly decreasing sequence with parts in [min_part, max_part].
inline std::vector<int> random_partition(std::mt19937_64& rng, std::size_t length, int min_part,
                                         int max_part) {
  std::uniform_int_distribution<int> d(min_part, max_part);
  std::vector<int> out(length);
  for (auto& x : out) x = d(rng);
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Partitions of exactly `length` parts (each >= 1) with sum <= max_sum.
inline std::vector<std::vector<int>> partitions_up_to(int max_sum, int length) {
  std::vector<std::vector<int>> out;
  for (int n = length; n <= max_sum; ++n) {
    for (auto& c : compositions_by_cuts(n, length)) {
      if (std::is_sorted(c.rbegin(), c.rend())) out.push_back(c);
    }
  }
  return out;
}

/// Compositions of exactly `length` parts with sum <= max_sum.
inline std::vector<std::vector<int>> compositions_up_to(int max_sum, int length) {
  std::vector<std::vector<int>> out;
  for (int n = length; n <= max_sum; ++n) {
    for (auto& c : compositions_by_cuts(n, length)) out.push_back(c);
  }
  return out;
}

}  // namespace oracle
