#pragma once

// Integer sequences indexing immaculate functions: compositions, weak
// compositions, partitions, the hat transform, and lexicographic
// enumeration.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <iterator>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace nsym {

/// Finite sequence of nonnegative integers.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 0) {
        throw std::invalid_argument("weak composition part must be >= 0, got " +
                                    std::to_string(p));
      }
    }
  }
  WeakComposition(std::initializer_list<int> parts)
      : WeakComposition(std::vector<int>(parts)) {}

  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::span<const int> parts() const noexcept { return parts_; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Comma-separated form, e.g. `6,4,3`.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
  friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

 protected:
  std::vector<int> parts_;
};

/// Nonempty sequence of positive integers.
class Composition : public WeakComposition {
 public:
  explicit Composition(std::vector<int> parts) : WeakComposition(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
    for (int p : parts_) {
      if (p < 1) {
        throw std::invalid_argument("composition part must be >= 1, got " +
                                    std::to_string(p));
      }
    }
  }
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
};

inline std::ostream& operator<<(std::ostream& os, const WeakComposition& c) {
  return os << '(' << c.to_string() << ')';
}

/// Entries c_i - i (1-based i). May be negative.
struct HatSequence {
  std::vector<int> entries;

  std::size_t size() const noexcept { return entries.size(); }
  int operator[](std::size_t i) const { return entries[i]; }
  friend bool operator==(const HatSequence&, const HatSequence&) = default;
};

inline HatSequence hat(const WeakComposition& c) {
  HatSequence h;
  h.entries.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    h.entries.push_back(c[i] - static_cast<int>(i + 1));
  }
  return h;
}

/// Weakly decreasing with every part >= 1.
inline bool is_partition(const WeakComposition& c) {
  if (c.empty()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1) return false;
    if (i > 0 && c[i] > c[i - 1]) return false;
  }
  return true;
}

/// A partition followed by zero or more trailing zeros (the all-zero sequence
/// counts, as the empty partition padded out).
inline bool is_padded_partition(const WeakComposition& c) {
  std::size_t len = c.size();
  while (len > 0 && c[len - 1] == 0) --len;
  for (std::size_t i = 0; i < len; ++i) {
    if (c[i] < 1) return false;
    if (i > 0 && c[i] > c[i - 1]) return false;
  }
  return true;
}

inline WeakComposition pad_to_length(const WeakComposition& c, std::size_t length) {
  if (length < c.size()) {
    throw ShapeError("cannot pad a sequence of length " + std::to_string(c.size()) +
                     " to length " + std::to_string(length));
  }
  std::vector<int> parts(c.begin(), c.end());
  parts.resize(length, 0);
  return WeakComposition(std::move(parts));
}

/// Lazily yields the compositions of n with exactly `length` parts in
/// lexicographic order. Empty when length == 0 or n < length.
class CompositionStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::vector<int>*;
    using reference = Composition;

    iterator() = default;
    explicit iterator(std::vector<int> first) : current_(std::move(first)), done_(false) {}

    Composition operator*() const { return Composition(current_); }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    void advance() {
      // Rightmost slot whose tail is not all ones gets incremented; the
      // tail collapses to 1,...,1,rest.
      const std::size_t len = current_.size();
      int tail_sum = current_[len - 1];
      for (std::size_t i = len - 1; i-- > 0;) {
        const int tail_len = static_cast<int>(len - 1 - i);
        if (tail_sum > tail_len) {
          ++current_[i];
          for (std::size_t j = i + 1; j + 1 < len; ++j) current_[j] = 1;
          current_[len - 1] = tail_sum - 1 - (tail_len - 1);
          return;
        }
        tail_sum += current_[i];
      }
      done_ = true;
    }

    std::vector<int> current_;
    bool done_ = true;
  };

  CompositionStream(int n, int length) : n_(n), length_(length) {}

  iterator begin() const {
    if (length_ < 1 || n_ < length_) return iterator();
    std::vector<int> first(static_cast<std::size_t>(length_), 1);
    first.back() = n_ - (length_ - 1);
    return iterator(std::move(first));
  }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
  int length_;
};

inline CompositionStream enumerate_compositions(int n, int length) {
  return CompositionStream(n, length);
}

inline std::vector<Composition> compositions(int n, int length) {
  std::vector<Composition> out;
  for (auto c : enumerate_compositions(n, length)) out.push_back(std::move(c));
  return out;
}

namespace detail {
inline void partitions_rec(int remaining, int slots, int max_part, std::vector<int>& prefix,
                           std::vector<Composition>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  // Smallest feasible part first, so the output is lexicographically ascending.
  const int lo = (remaining + slots - 1) / slots;
  const int hi = std::min(max_part, remaining - (slots - 1));
  for (int p = lo; p <= hi; ++p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, slots - 1, p, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// Partitions of n with exactly `length` parts, lexicographically ascending.
inline std::vector<Composition> partitions(int n, int length) {
  std::vector<Composition> out;
  if (length < 1 || n < length) return out;
  std::vector<int> prefix;
  detail::partitions_rec(n, length, n, prefix, out);
  return out;
}

/// Parses `a1,a2,...` into nonnegative integers. Throws ParseError.
inline std::vector<int> parse_integer_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw ParseError("empty composition");
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() ||
        token.front() == '-' || token.front() == '+') {
      throw ParseError("bad composition part '" + std::string(token) + "' in '" +
                       std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline WeakComposition parse_weak_composition(std::string_view text) {
  return WeakComposition(parse_integer_list(text));
}

inline Composition parse_composition(std::string_view text) {
  auto parts = parse_integer_list(text);
  for (int p : parts) {
    if (p < 1) throw ParseError("composition parts must be positive: '" + std::string(text) + "'");
  }
  return Composition(std::move(parts));
}

}  // namespace nsym
