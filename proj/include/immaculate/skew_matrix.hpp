#pragma once

// The matrix of H-subscripts attached to a pair (alpha, beta) and the
// structural checks run against it.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compositions.hpp"
#include "errors.hpp"

namespace nsym {

/// Square matrix of H-subscripts. Entry (i, j) of the associated matrix is
/// (alpha_i - i) - (beta_j - j); the H_a wrapper only appears at the
/// algebra layer. Indices are 0-based here, 1-based in rendered output.
class SubscriptMatrix {
 public:
  /// Arbitrary square matrix, no provenance. Throws ShapeError when ragged
  /// or empty.
  static SubscriptMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    SubscriptMatrix m;
    m.dim_ = rows.size();
    if (m.dim_ == 0) throw ShapeError("matrix must be at least 1x1");
    m.entries_.reserve(m.dim_ * m.dim_);
    for (const auto& row : rows) {
      if (row.size() != m.dim_) throw ShapeError("matrix must be square");
      m.entries_.insert(m.entries_.end(), row.begin(), row.end());
    }
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  int operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  std::vector<int> row(std::size_t r) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * dim_),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * dim_)};
  }
  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out;
    for (std::size_t r = 0; r < dim_; ++r) out.push_back(row(r));
    return out;
  }

  /// The (alpha, beta) pair this matrix was built from, if any.
  const std::optional<std::pair<WeakComposition, WeakComposition>>& provenance() const noexcept {
    return provenance_;
  }

  /// Copy with row `r` and column `c` removed; provenance is dropped.
  SubscriptMatrix minor(std::size_t r, std::size_t c) const {
    SubscriptMatrix m;
    m.dim_ = dim_ - 1;
    m.entries_.reserve(m.dim_ * m.dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j != c) m.entries_.push_back((*this)(i, j));
      }
    }
    return m;
  }

  friend bool operator==(const SubscriptMatrix& a, const SubscriptMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  friend SubscriptMatrix build_matrix(const WeakComposition&, const WeakComposition&);

  std::size_t dim_ = 0;
  std::vector<int> entries_;
  std::optional<std::pair<WeakComposition, WeakComposition>> provenance_;
};

/// Throws ShapeError on unequal or zero lengths, std::invalid_argument when
/// alpha has a zero part.
inline SubscriptMatrix build_matrix(const WeakComposition& alpha, const WeakComposition& beta) {
  if (alpha.size() != beta.size()) {
    throw ShapeError("length mismatch: alpha has " + std::to_string(alpha.size()) +
                     " parts, beta has " + std::to_string(beta.size()));
  }
  if (alpha.empty()) throw ShapeError("compositions must be nonempty");
  for (int a : alpha) {
    if (a < 1) throw std::invalid_argument("alpha parts must be >= 1");
  }
  const HatSequence ah = hat(alpha);
  const HatSequence bh = hat(beta);
  SubscriptMatrix m;
  m.dim_ = alpha.size();
  m.entries_.reserve(m.dim_ * m.dim_);
  for (std::size_t i = 0; i < m.dim_; ++i) {
    for (std::size_t j = 0; j < m.dim_; ++j) m.entries_.push_back(ah[i] - bh[j]);
  }
  m.provenance_ = std::make_pair(alpha, beta);
  return m;
}

/// Rows of space-separated subscripts, newline-terminated.
inline std::string render_matrix(const SubscriptMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ' ';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

/// Boolean matrix, true where the subscript is nonnegative. Rectangular
/// patterns are allowed so that counterexample row pairs can be checked.
class SignPattern {
 public:
  SignPattern(std::size_t rows, std::size_t cols, std::vector<bool> nonneg)
      : rows_(rows), cols_(cols), cells_(std::move(nonneg)) {
    if (cells_.size() != rows_ * cols_) throw ShapeError("sign pattern size mismatch");
  }

  static SignPattern of(const SubscriptMatrix& m) {
    std::vector<bool> cells;
    cells.reserve(m.dim() * m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
      for (std::size_t j = 0; j < m.dim(); ++j) cells.push_back(m(i, j) >= 0);
    }
    return SignPattern(m.dim(), m.dim(), std::move(cells));
  }

  /// Parses rows such as {">=<<<>=", ...}: each cell is `>=` (nonnegative)
  /// or `<` (negative).
  static SignPattern parse(const std::vector<std::string>& rows) {
    std::vector<bool> cells;
    std::size_t cols = 0;
    for (const auto& text : rows) {
      std::size_t n = 0;
      for (std::size_t k = 0; k < text.size();) {
        if (text.compare(k, 2, ">=") == 0) {
          cells.push_back(true);
          k += 2;
        } else if (text[k] == '<') {
          cells.push_back(false);
          k += 1;
        } else if (text[k] == ' ') {
          k += 1;
          continue;
        } else {
          throw ParseError("bad sign pattern cell in '" + text + "'");
        }
        ++n;
      }
      if (cols != 0 && n != cols) throw ShapeError("ragged sign pattern");
      cols = n;
    }
    return SignPattern(rows.size(), cols, std::move(cells));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool nonneg(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<bool> cells_;
};

/// True iff some 2x2 submatrix (rows r < s, cols m < n) is
///   [<  >=]      [>= < ]
///   [>= < ]  or  [<  >=].
inline bool has_negative_crossing_violation(const SignPattern& p) {
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t s = r + 1; s < p.rows(); ++s) {
      for (std::size_t m = 0; m < p.cols(); ++m) {
        for (std::size_t n = m + 1; n < p.cols(); ++n) {
          const bool a = p.nonneg(r, m), b = p.nonneg(r, n);
          const bool c = p.nonneg(s, m), d = p.nonneg(s, n);
          if (!a && b && c && !d) return true;
          if (a && !b && !c && d) return true;
        }
      }
    }
  }
  return false;
}

inline std::vector<int> row_nonneg_counts(const SubscriptMatrix& m) {
  std::vector<int> counts(m.dim(), 0);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) counts[i] += m(i, j) >= 0 ? 1 : 0;
  }
  return counts;
}

/// Every row strictly increasing left to right (holds when beta is a
/// partition).
inline bool check_partition_row_monotonicity(const SubscriptMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 1; j < m.dim(); ++j) {
      if (m(i, j) <= m(i, j - 1)) return false;
    }
  }
  return true;
}

}  // namespace nsym
