#pragma once

// Noncommutative determinant of a subscript matrix. Two independent
// evaluations are provided: a brute-force sum over permutations and a
// row-by-row Laplace recursion. Factors are always multiplied in increasing
// row order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compositions.hpp"
#include "errors.hpp"
#include "hword.hpp"
#include "skew_matrix.hpp"

namespace nsym {

/// Largest dimension for which exact expansion is attempted by default.
inline constexpr std::size_t kDefaultDimCap = 10;

/// Permutation sign from the inversion count.
inline int permutation_sign(std::span<const std::size_t> perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

/// One column per row, forming a permutation matrix.
class SignedSelection {
 public:
  explicit SignedSelection(std::vector<std::size_t> column_of_row)
      : column_of_row_(std::move(column_of_row)) {
    std::vector<bool> seen(column_of_row_.size(), false);
    for (std::size_t c : column_of_row_) {
      if (c >= seen.size() || seen[c]) throw std::invalid_argument("selection is not a permutation");
      seen[c] = true;
    }
    sign_ = permutation_sign(column_of_row_);
  }

  /// From one-line notation with 1-based columns, e.g. {2,4,1,3}.
  static SignedSelection from_one_based(const std::vector<int>& one_line) {
    std::vector<std::size_t> cols;
    for (int c : one_line) {
      if (c < 1) throw std::invalid_argument("selection columns are 1-based");
      cols.push_back(static_cast<std::size_t>(c - 1));
    }
    return SignedSelection(std::move(cols));
  }

  std::size_t dim() const noexcept { return column_of_row_.size(); }
  std::size_t column_of_row(std::size_t r) const { return column_of_row_[r]; }
  const std::vector<std::size_t>& columns() const noexcept { return column_of_row_; }
  int sign() const noexcept { return sign_; }

  /// `1->c1,2->c2,...` with 1-based labels.
  std::string to_string() const {
    std::string out;
    for (std::size_t r = 0; r < column_of_row_.size(); ++r) {
      if (r) out += ',';
      out += std::to_string(r + 1) + "->" + std::to_string(column_of_row_[r] + 1);
    }
    return out;
  }

  friend bool operator==(const SignedSelection&, const SignedSelection&) = default;

 private:
  std::vector<std::size_t> column_of_row_;
  int sign_ = 1;
};

struct SignedTerm {
  int sign;
  HWord word;
  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

inline void require_within_cap(const SubscriptMatrix& m, std::size_t dim_cap) {
  if (m.dim() > dim_cap) {
    throw DimensionError("matrix dimension " + std::to_string(m.dim()) +
                         " exceeds the exact-expansion cap of " + std::to_string(dim_cap));
  }
}

/// The term contributed by one permutation; absent if it selects a
/// negative subscript.
inline std::optional<SignedTerm> term_of_selection(const SubscriptMatrix& m,
                                                   const SignedSelection& s) {
  if (s.dim() != m.dim()) throw ShapeError("selection and matrix dimensions differ");
  std::vector<int> raw(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) raw[r] = m(r, s.column_of_row(r));
  auto w = normalize_word(raw);
  if (!w) return std::nullopt;
  return SignedTerm{s.sign(), std::move(*w)};
}

/// Sum over all dim! permutations of sign * H-word. Reference evaluation.
inline HExpansion ndet_permutation_sum(const SubscriptMatrix& m,
                                       std::size_t dim_cap = kDefaultDimCap) {
  require_within_cap(m, dim_cap);
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> raw(n);
  HExpansion out;
  do {
    for (std::size_t r = 0; r < n; ++r) raw[r] = m(r, perm[r]);
    if (auto w = normalize_word(raw)) out.add(*w, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace detail {
inline void laplace_rec(const SubscriptMatrix& m, std::size_t row, std::uint32_t used,
                        std::vector<int>& prefix, int sign, HExpansion& out) {
  const std::size_t n = m.dim();
  if (row == n) {
    out.add(*normalize_word(prefix), sign);
    return;
  }
  // Cofactor sign alternates along the columns still available.
  int position = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (used & (1u << c)) continue;
    const int entry = m(row, c);
    const int cofactor = position % 2 == 0 ? sign : -sign;
    ++position;
    // H_negative = 0 kills every term of this cofactor.
    if (entry < 0) continue;
    prefix.push_back(entry);
    laplace_rec(m, row + 1, used | (1u << c), prefix, cofactor, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// Laplace expansion along the top row, recursively.
inline HExpansion ndet_laplace(const SubscriptMatrix& m, std::size_t dim_cap = kDefaultDimCap) {
  require_within_cap(m, dim_cap);
  HExpansion out;
  std::vector<int> prefix;
  prefix.reserve(m.dim());
  detail::laplace_rec(m, 0, 0, prefix, 1, out);
  return out;
}

inline HExpansion skew_immaculate(const WeakComposition& alpha, const WeakComposition& beta,
                                  std::size_t dim_cap = kDefaultDimCap) {
  return ndet_laplace(build_matrix(alpha, beta), dim_cap);
}

/// I_mu: the (i, j) subscript is mu_i - i + j.
inline HExpansion immaculate(const Composition& mu, std::size_t dim_cap = kDefaultDimCap) {
  return skew_immaculate(mu, WeakComposition(std::vector<int>(mu.size(), 0)), dim_cap);
}

}  // namespace nsym
