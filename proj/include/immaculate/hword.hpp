#pragma once

// H-basis of NSym: words in the free monoid on H_1, H_2, ... and finite
// integer linear combinations of them.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace nsym {

using Coefficient = std::int64_t;

/// Product H_{a1} H_{a2} ... H_{ak} with every a_i >= 1. The empty word is
/// the unit H_0 = 1.
class HWord {
 public:
  HWord() = default;
  explicit HWord(std::vector<int> subscripts) : subscripts_(std::move(subscripts)) {
    for (int s : subscripts_) {
      if (s < 1) throw std::invalid_argument("H-word subscripts must be >= 1");
    }
  }
  HWord(std::initializer_list<int> subscripts) : HWord(std::vector<int>(subscripts)) {}

  std::size_t length() const noexcept { return subscripts_.size(); }
  bool is_unit() const noexcept { return subscripts_.empty(); }
  std::span<const int> subscripts() const noexcept { return subscripts_; }
  int degree() const {
    int d = 0;
    for (int s : subscripts_) d += s;
    return d;
  }

  /// `H[a1,a2,...]`, `H[]` for the unit.
  std::string to_string() const {
    std::string out = "H[";
    for (std::size_t i = 0; i < subscripts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(subscripts_[i]);
    }
    return out + ']';
  }

  friend bool operator==(const HWord&, const HWord&) = default;

  /// Canonical order: shorter words first, then lexicographic on subscripts.
  friend std::strong_ordering operator<=>(const HWord& a, const HWord& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.subscripts_ <=> b.subscripts_;
  }

 private:
  std::vector<int> subscripts_;
};

inline std::ostream& operator<<(std::ostream& os, const HWord& w) { return os << w.to_string(); }

/// Absent when some entry is negative (H_a = 0 for a < 0); otherwise the
/// word with zero entries dropped (H_0 = 1).
inline std::optional<HWord> normalize_word(std::span<const int> raw) {
  std::vector<int> kept;
  kept.reserve(raw.size());
  for (int s : raw) {
    if (s < 0) return std::nullopt;
    if (s > 0) kept.push_back(s);
  }
  return HWord(std::move(kept));
}

inline std::optional<HWord> normalize_word(std::initializer_list<int> raw) {
  return normalize_word(std::span<const int>(raw.begin(), raw.size()));
}

inline HWord concat(const HWord& u, const HWord& v) {
  std::vector<int> out(u.subscripts().begin(), u.subscripts().end());
  out.insert(out.end(), v.subscripts().begin(), v.subscripts().end());
  return HWord(std::move(out));
}

inline Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw CoefficientOverflow("H-expansion coefficient overflow");
  }
  return r;
}

inline Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw CoefficientOverflow("H-expansion coefficient overflow");
  }
  return r;
}

/// Finite Z-linear combination of H-words. Zero coefficients are never
/// stored.
class HExpansion {
 public:
  using TermMap = std::map<HWord, Coefficient>;

  HExpansion() = default;
  HExpansion(std::initializer_list<std::pair<const HWord, Coefficient>> terms) {
    for (const auto& [w, c] : terms) add(w, c);
  }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coefficient coefficient(const HWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  HExpansion& add(const HWord& w, Coefficient c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  HExpansion& operator+=(const HExpansion& other) {
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
  }

  /// Noncommutative product: concatenation of words, extended bilinearly.
  friend HExpansion operator*(const HExpansion& a, const HExpansion& b) {
    HExpansion out;
    for (const auto& [u, cu] : a.terms_) {
      for (const auto& [v, cv] : b.terms_) out.add(concat(u, v), checked_mul(cu, cv));
    }
    return out;
  }

  friend bool operator==(const HExpansion&, const HExpansion&) = default;

 private:
  TermMap terms_;
};

/// Adds sign * (normalized raw word); a raw word with a negative entry
/// contributes nothing.
inline HExpansion add_term(HExpansion e, int sign, std::span<const int> raw) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("term sign must be +1 or -1");
  if (auto w = normalize_word(raw)) e.add(*w, sign);
  return e;
}

inline HExpansion add_term(HExpansion e, int sign, std::initializer_list<int> raw) {
  return add_term(std::move(e), sign, std::span<const int>(raw.begin(), raw.size()));
}

inline bool expansion_equal(const HExpansion& a, const HExpansion& b) { return a == b; }

/// Minus sign used in rendered output (U+2212).
inline constexpr std::string_view kMinus = "−";
/// Coefficient/basis separator (U+00B7).
inline constexpr std::string_view kDot = "·";

/// Signed coefficient as rendered in term listings: `+3`, `−2`.
inline std::string render_signed(Coefficient c) {
  std::string out = c < 0 ? std::string(kMinus) : std::string("+");
  // Magnitude via unsigned to cover INT64_MIN.
  const auto mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
  return out + std::to_string(mag);
}

/// `+1·H[4,2] −1·H[3,1,2]`; `0` for the zero expansion. Terms appear in the
/// canonical word order.
inline std::string canonical_render(const HExpansion& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    if (!out.empty()) out += ' ';
    out += render_signed(c);
    out += kDot;
    out += w.to_string();
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const HExpansion& e) {
  return os << canonical_render(e);
}

}  // namespace nsym
