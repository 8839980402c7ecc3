#pragma once

// Commutative symmetric polynomials in finitely many variables: complete
// homogeneous and monomial polynomials, semistandard tableaux, Schur
// polynomials two ways, and the forgetful image of H-expansions. This is the
// oracle side used to cross-check the noncommutative code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "compositions.hpp"
#include "errors.hpp"
#include "hword.hpp"
#include "ndet.hpp"

namespace nsym {

using Exponents = std::vector<int>;

/// Higher total degree first, then lexicographically larger exponents.
struct GradedLexOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Integer polynomial in x1..xn stored as exponent vector -> coefficient.
class SparsePolynomial {
 public:
  using TermMap = std::map<Exponents, Coefficient, GradedLexOrder>;

  explicit SparsePolynomial(std::size_t vars) : vars_(vars) {
    if (vars == 0) throw std::invalid_argument("polynomial needs at least one variable");
  }

  static SparsePolynomial constant(std::size_t vars, Coefficient c) {
    SparsePolynomial p(vars);
    p.add(Exponents(vars, 0), c);
    return p;
  }

  std::size_t vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coefficient coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  SparsePolynomial& add(const Exponents& e, Coefficient c) {
    if (e.size() != vars_) throw ShapeError("exponent vector length differs from variable count");
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add(e, checked_mul(c, -1));
    return *this;
  }
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
    return a += b;
  }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
    return a -= b;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    a.require_same_vars(b);
    SparsePolynomial out(a.vars_);
    Exponents e(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add(e, checked_mul(ca, cb));
      }
    }
    return out;
  }

  SparsePolynomial scaled(Coefficient k) const {
    SparsePolynomial out(vars_);
    for (const auto& [e, c] : terms_) out.add(e, checked_mul(c, k));
    return out;
  }

  /// Exchange of two variables applied to every exponent vector.
  SparsePolynomial swap_variables(std::size_t i, std::size_t j) const {
    SparsePolynomial out(vars_);
    for (const auto& [key, c] : terms_) {
      Exponents e = key;
      std::swap(e[i], e[j]);
      out.add(e, c);
    }
    return out;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_vars(const SparsePolynomial& o) const {
    if (o.vars_ != vars_) throw ShapeError("polynomials over different variable counts");
  }

  std::size_t vars_;
  TermMap terms_;
};

/// `+1·x1^2·x2 +2·x1·x2·x3`, graded-lex order; `0` when zero.
inline std::string render_polynomial(const SparsePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += ' ';
    out += render_signed(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += kDot;
      out += "x" + std::to_string(i + 1);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

/// Complete homogeneous h_k(x1..xn); zero for k < 0, one for k = 0.
inline SparsePolynomial h_poly(int k, std::size_t n) {
  SparsePolynomial out(n);
  if (k < 0) return out;
  // Weakly increasing index selections i1 <= ... <= ik correspond to
  // exponent vectors of total degree k.
  Exponents e(n, 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t var, int remaining) {
    if (var + 1 == n) {
      e[var] = remaining;
      out.add(e, 1);
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      e[var] = a;
      fill(var + 1, remaining - a);
    }
  };
  fill(0, k);
  return out;
}

/// Monomial symmetric m_lambda(x1..xn): every distinct rearrangement of the
/// exponents. Zero when lambda has more parts than variables.
inline SparsePolynomial m_poly(const WeakComposition& lambda, std::size_t n) {
  if (!is_padded_partition(lambda)) throw ShapeError(lambda.to_string() + " is not a partition");
  SparsePolynomial out(n);
  std::size_t parts = 0;
  for (int p : lambda) parts += p > 0 ? 1 : 0;
  if (parts > n) return out;
  Exponents e(n, 0);
  for (std::size_t i = 0; i < parts; ++i) e[i] = lambda[i];
  std::sort(e.begin(), e.end());
  do {
    out.add(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

/// Filled skew diagram in French notation: rows[0] is the bottom row and
/// holds outer[0] cells; inner-shape cells hold 0.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Exponents weight(std::size_t n) const {
    Exponents e(n, 0);
    for (const auto& row : rows) {
      for (int v : row) {
        if (v > 0) ++e[static_cast<std::size_t>(v - 1)];
      }
    }
    return e;
  }
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

namespace detail {
/// Validates outer/inner and returns inner padded to outer's length.
inline std::vector<int> check_skew_shape(const WeakComposition& outer,
                                         const WeakComposition& inner) {
  if (!is_partition(outer)) throw ShapeError(outer.to_string() + " is not a partition");
  if (!inner.empty() && !is_padded_partition(inner)) {
    throw ShapeError(inner.to_string() + " is not a partition");
  }
  std::vector<int> in(outer.size(), 0);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == 0) continue;
    if (i >= outer.size() || inner[i] > outer[i]) {
      throw ShapeError("inner shape " + inner.to_string() + " is not contained in " +
                       outer.to_string());
    }
    in[i] = inner[i];
  }
  return in;
}
}  // namespace detail

/// Calls `visit(const Tableau&)` for every semistandard tableau of shape
/// outer/inner with entries in 1..n: rows weakly increase left to right,
/// columns strictly increase bottom to top. Cells are filled bottom row
/// first, left to right, trying values in increasing order, so the visiting
/// order is lexicographic on the reading word.
template <class Visitor>
void for_each_ssyt(const WeakComposition& outer, const WeakComposition& inner, std::size_t n,
                   Visitor&& visit) {
  const std::vector<int> in = detail::check_skew_shape(outer, inner);
  Tableau t;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < outer.size(); ++r) {
    t.rows.emplace_back(static_cast<std::size_t>(outer[r]), 0);
    for (int c = in[r]; c < outer[r]; ++c) cells.emplace_back(r, static_cast<std::size_t>(c));
  }
  const int top = static_cast<int>(n);
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == cells.size()) {
      visit(static_cast<const Tableau&>(t));
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    // Left neighbour filled iff c - 1 lies outside the inner shape.
    if (static_cast<int>(c) > in[r]) lo = std::max(lo, t.rows[r][c - 1]);
    if (r > 0 && c < t.rows[r - 1].size() && static_cast<int>(c) >= in[r - 1]) {
      lo = std::max(lo, t.rows[r - 1][c] + 1);
    }
    for (int v = lo; v <= top; ++v) {
      t.rows[r][c] = v;
      place(k + 1);
    }
    t.rows[r][c] = 0;
  };
  place(0);
}

inline std::vector<Tableau> generate_ssyt(const WeakComposition& outer,
                                          const WeakComposition& inner, std::size_t n) {
  std::vector<Tableau> out;
  for_each_ssyt(outer, inner, n, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

/// Sum of tableau weights.
inline SparsePolynomial schur_via_tableaux(const WeakComposition& outer,
                                           const WeakComposition& inner, std::size_t n) {
  SparsePolynomial out(n);
  for_each_ssyt(outer, inner, n, [&](const Tableau& t) { out.add(t.weight(n), 1); });
  return out;
}

/// det( h_{(outer_i - i) - (inner_j - j)} ), commutative.
inline SparsePolynomial schur_via_jacobi_trudi(const WeakComposition& outer,
                                               const WeakComposition& inner, std::size_t n) {
  const std::vector<int> in = detail::check_skew_shape(outer, inner);
  const std::size_t len = outer.size();
  std::map<int, SparsePolynomial> h_cache;
  auto h = [&](int k) -> const SparsePolynomial& {
    auto it = h_cache.find(k);
    if (it == h_cache.end()) it = h_cache.emplace(k, h_poly(k, n)).first;
    return it->second;
  };
  std::vector<std::size_t> perm(len);
  std::iota(perm.begin(), perm.end(), 0);
  SparsePolynomial out(n);
  do {
    SparsePolynomial term = SparsePolynomial::constant(n, permutation_sign(perm));
    for (std::size_t i = 0; i < len && !term.is_zero(); ++i) {
      const std::size_t j = perm[i];
      const int sub = (outer[i] - static_cast<int>(i)) - (in[j] - static_cast<int>(j));
      term = term * h(sub);
    }
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Image of an H-expansion under H_a -> h_a in n commuting variables.
inline SparsePolynomial forgetful(const HExpansion& e, std::size_t n) {
  SparsePolynomial out(n);
  std::map<int, SparsePolynomial> h_cache;
  for (const auto& [w, c] : e.terms()) {
    SparsePolynomial term = SparsePolynomial::constant(n, c);
    for (int a : w.subscripts()) {
      auto it = h_cache.find(a);
      if (it == h_cache.end()) it = h_cache.emplace(a, h_poly(a, n)).first;
      term = term * it->second;
    }
    out += term;
  }
  return out;
}

/// Expresses a symmetric polynomial as an integer combination of Schur
/// polynomials in the same variables. Repeatedly peels off the lex-leading
/// monomial x^lambda, whose Schur polynomial s_lambda has leading term
/// exactly x^lambda. Keys are partitions (trailing zeros stripped).
/// Throws std::invalid_argument when the input is not symmetric.
inline std::map<std::vector<int>, Coefficient> schur_decompose(SparsePolynomial p) {
  std::map<std::vector<int>, Coefficient> out;
  const std::size_t n = p.vars();
  while (!p.is_zero()) {
    // Graded-lex storage puts the lex-leading top-degree monomial first.
    const Exponents lead = p.terms().begin()->first;
    if (!std::is_sorted(lead.rbegin(), lead.rend())) {
      throw std::invalid_argument("polynomial is not symmetric");
    }
    const Coefficient c = p.coefficient(lead);
    std::vector<int> lambda(lead.begin(), lead.end());
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    SparsePolynomial s = lambda.empty()
                             ? SparsePolynomial::constant(n, 1)
                             : schur_via_tableaux(WeakComposition(lambda), WeakComposition{}, n);
    p -= s.scaled(c);
    out[lambda] = checked_add(out[lambda], c);
  }
  return out;
}

}  // namespace nsym
