#pragma once

// Classification of composition pairs by whether the skew immaculate has a
// nonzero term before cancellation (rows vs. negative-entry counts, and the
// equivalent row/column matching), and whether it is provably nonzero after
// cancellation when skewing by a partition.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "compositions.hpp"
#include "errors.hpp"
#include "hword.hpp"
#include "ndet.hpp"
#include "skew_matrix.hpp"

namespace nsym {

namespace detail {
inline void require_equal_lengths(const WeakComposition& alpha, const WeakComposition& beta) {
  if (alpha.size() != beta.size()) {
    throw ShapeError("length mismatch: alpha has " + std::to_string(alpha.size()) +
                     " parts, beta has " + std::to_string(beta.size()));
  }
}
}  // namespace detail

/// For every k in 1..l, fewer than k rows have at least l-k+1 negative
/// entries. A row's negative count is the number of beta-hat entries
/// exceeding its alpha-hat entry.
inline bool necessary_condition_holds(const WeakComposition& alpha, const WeakComposition& beta) {
  detail::require_equal_lengths(alpha, beta);
  const auto ah = hat(alpha);
  const auto bh = hat(beta);
  const std::size_t len = ah.size();
  std::vector<std::size_t> negatives(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) negatives[i] += bh[j] > ah[i] ? 1 : 0;
  }
  for (std::size_t k = 1; k <= len; ++k) {
    const auto rows_in_set = static_cast<std::size_t>(std::count_if(
        negatives.begin(), negatives.end(), [&](std::size_t n) { return n >= len - k + 1; }));
    if (rows_in_set > k - 1) return false;
  }
  return true;
}

/// Every alpha-hat entry is >= some beta-hat entry (the k = 1 case).
inline bool every_row_has_nonnegative_entry(const WeakComposition& alpha,
                                            const WeakComposition& beta) {
  detail::require_equal_lengths(alpha, beta);
  const auto ah = hat(alpha);
  const auto bh = hat(beta);
  if (bh.entries.empty()) return true;
  const int smallest = *std::min_element(bh.entries.begin(), bh.entries.end());
  return std::all_of(ah.entries.begin(), ah.entries.end(), [&](int a) { return a >= smallest; });
}

/// Row-to-column assignment through nonnegative entries only.
struct MatchingCertificate {
  std::vector<std::size_t> column_of_row;

  SignedSelection selection() const { return SignedSelection(column_of_row); }
  std::string to_string() const { return selection().to_string(); }
  friend bool operator==(const MatchingCertificate&, const MatchingCertificate&) = default;
};

namespace detail {
inline bool augment(const SubscriptMatrix& m, std::size_t row, std::vector<bool>& visited,
                    std::vector<std::optional<std::size_t>>& row_of_col) {
  // A free column is taken before any existing assignment is disturbed.
  for (std::size_t c = 0; c < m.dim(); ++c) {
    if (m(row, c) >= 0 && !visited[c] && !row_of_col[c]) {
      visited[c] = true;
      row_of_col[c] = row;
      return true;
    }
  }
  for (std::size_t c = 0; c < m.dim(); ++c) {
    if (m(row, c) < 0 || visited[c]) continue;
    visited[c] = true;
    if (!row_of_col[c] || augment(m, *row_of_col[c], visited, row_of_col)) {
      row_of_col[c] = row;
      return true;
    }
  }
  return false;
}
}  // namespace detail

/// Complete matching by augmenting paths. Rows are inserted top to bottom
/// and columns tried left to right, so the result is deterministic; an
/// all-nonnegative matrix yields the identity.
inline std::optional<MatchingCertificate> find_matching_certificate(const SubscriptMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::optional<std::size_t>> row_of_col(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> visited(n, false);
    if (!detail::augment(m, r, visited, row_of_col)) return std::nullopt;
  }
  MatchingCertificate cert;
  cert.column_of_row.assign(n, 0);
  for (std::size_t c = 0; c < n; ++c) cert.column_of_row[*row_of_col[c]] = c;
  return cert;
}

/// Self-check: the counting condition and the matching must agree.
inline bool certificate_agrees_with_condition(const WeakComposition& alpha,
                                              const WeakComposition& beta) {
  const bool matched = find_matching_certificate(build_matrix(alpha, beta)).has_value();
  return matched == necessary_condition_holds(alpha, beta);
}

/// Any k rows include one with at least k nonnegative entries. Evaluated on
/// the ascending row counts: the worst k-subset is the k smallest.
inline bool nocancel_condition_one(const SubscriptMatrix& m) {
  auto counts = row_nonneg_counts(m);
  std::sort(counts.begin(), counts.end());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] < static_cast<int>(k + 1)) return false;
  }
  return true;
}

/// No two identical rows contain a zero subscript.
inline bool nocancel_condition_two(const SubscriptMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const auto ri = m.row(i);
    if (std::find(ri.begin(), ri.end(), 0) == ri.end()) continue;
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      if (m.row(j) == ri) return false;
    }
  }
  return true;
}

inline bool nocancel_conditions_hold(const SubscriptMatrix& m) {
  return nocancel_condition_one(m) && nocancel_condition_two(m);
}

/// Throws ShapeError unless lambda is a partition, possibly zero-padded.
inline bool nocancel_conditions_hold(const WeakComposition& alpha, const WeakComposition& lambda) {
  detail::require_equal_lengths(alpha, lambda);
  if (!is_padded_partition(lambda)) {
    throw ShapeError("skewing sequence " + lambda.to_string() + " is not a partition");
  }
  return nocancel_conditions_hold(build_matrix(alpha, lambda));
}

struct GreedyTerm {
  int sign;
  HWord word;
  SignedSelection selection;
};

/// Builds the term that captures every H_0 of the matrix: repeatedly take a
/// row that is nonnegative across all remaining columns (preferring one
/// holding a zero, else the topmost), select its leftmost remaining entry,
/// and drop that row and column.
///
/// Throws std::invalid_argument if the matrix fails the no-cancellation
/// conditions, and std::logic_error if the conditions stop holding on a
/// reduced matrix.
inline GreedyTerm greedy_h0_term(const SubscriptMatrix& m) {
  if (!nocancel_conditions_hold(m)) {
    throw std::invalid_argument("greedy term requires the no-cancellation conditions");
  }
  const std::size_t n = m.dim();
  std::vector<bool> taken(n, false);
  std::vector<std::size_t> column_of_row(n, 0);
  for (std::size_t col = 0; col < n; ++col) {
    // Condition one on the reduced matrix (remaining rows, columns >= col).
    std::vector<int> counts;
    for (std::size_t r = 0; r < n; ++r) {
      if (taken[r]) continue;
      int nonneg = 0;
      for (std::size_t c = col; c < n; ++c) nonneg += m(r, c) >= 0 ? 1 : 0;
      counts.push_back(nonneg);
    }
    std::sort(counts.begin(), counts.end());
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] < static_cast<int>(k + 1)) {
        throw std::logic_error("no-cancellation condition lost after deleting column " +
                               std::to_string(col));
      }
    }

    std::optional<std::size_t> topmost_full;
    std::optional<std::size_t> full_with_zero;
    for (std::size_t r = 0; r < n && !full_with_zero; ++r) {
      if (taken[r]) continue;
      bool full = true;
      bool has_zero = false;
      for (std::size_t c = col; c < n; ++c) {
        full = full && m(r, c) >= 0;
        has_zero = has_zero || m(r, c) == 0;
      }
      if (!full) continue;
      if (!topmost_full) topmost_full = r;
      if (has_zero) full_with_zero = r;
    }
    if (!topmost_full) {
      throw std::logic_error("no fully nonnegative row at column " + std::to_string(col + 1));
    }
    const std::size_t chosen = full_with_zero ? *full_with_zero : *topmost_full;
    taken[chosen] = true;
    column_of_row[chosen] = col;
  }
  SignedSelection selection(std::move(column_of_row));
  auto term = term_of_selection(m, selection);
  if (!term) throw std::logic_error("greedy selection hit a negative subscript");
  return GreedyTerm{term->sign, std::move(term->word), std::move(selection)};
}

enum class ClassKind {
  AllZeroPreCancellation,
  NonzeroTermExists,
  ProvablyNonzero,
  ZeroAfterCancellation,
};

inline constexpr std::string_view to_token(ClassKind k) {
  switch (k) {
    case ClassKind::AllZeroPreCancellation:
      return "ALL_ZERO_PRE_CANCELLATION";
    case ClassKind::NonzeroTermExists:
      return "NONZERO_TERM_EXISTS";
    case ClassKind::ProvablyNonzero:
      return "PROVABLY_NONZERO";
    case ClassKind::ZeroAfterCancellation:
      return "ZERO_AFTER_CANCELLATION";
  }
  return "?";
}

inline constexpr ClassKind kAllClassKinds[] = {
    ClassKind::AllZeroPreCancellation,
    ClassKind::NonzeroTermExists,
    ClassKind::ProvablyNonzero,
    ClassKind::ZeroAfterCancellation,
};

struct Classification {
  ClassKind kind;
  std::optional<MatchingCertificate> certificate;
  /// Full H-expansion when it was computed (within the dimension cap), or
  /// the known zero for ALL_ZERO_PRE_CANCELLATION.
  std::optional<HExpansion> expansion;
  std::optional<GreedyTerm> witness;
  /// Set when the pair is above the dimension cap and nothing here decides
  /// cancellation.
  bool cancellation_undecided = false;

  /// Certificate printed only for the two nonzero-term classes.
  bool shows_certificate() const {
    return certificate && (kind == ClassKind::NonzeroTermExists ||
                           kind == ClassKind::ProvablyNonzero);
  }

  /// `TOKEN [1->c1,2->c2,...]`.
  std::string to_line() const {
    std::string out(to_token(kind));
    if (shows_certificate()) out += " " + certificate->to_string();
    if (cancellation_undecided) out += " (cancellation undecided)";
    return out;
  }
};

/// Throws ShapeError on length mismatch.
inline Classification classify(const WeakComposition& alpha, const WeakComposition& beta,
                               std::size_t dim_cap = kDefaultDimCap) {
  const SubscriptMatrix m = build_matrix(alpha, beta);
  Classification out{ClassKind::AllZeroPreCancellation, std::nullopt, std::nullopt, std::nullopt};
  if (!necessary_condition_holds(alpha, beta)) {
    out.expansion = HExpansion{};
    return out;
  }
  out.certificate = find_matching_certificate(m);
  if (!out.certificate) {
    throw std::logic_error("counting condition holds but no matching exists for " +
                           alpha.to_string() + " / " + beta.to_string());
  }
  const bool within_cap = m.dim() <= dim_cap;
  if (within_cap) out.expansion = ndet_laplace(m, dim_cap);

  if (is_padded_partition(beta) && nocancel_conditions_hold(m)) {
    out.kind = ClassKind::ProvablyNonzero;
    out.witness = greedy_h0_term(m);
    return out;
  }
  if (!within_cap) {
    out.kind = ClassKind::NonzeroTermExists;
    out.cancellation_undecided = true;
    return out;
  }
  out.kind = out.expansion->is_zero() ? ClassKind::ZeroAfterCancellation
                                      : ClassKind::NonzeroTermExists;
  return out;
}

}  // namespace nsym
