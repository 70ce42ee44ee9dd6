#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace hermsos {

/// Exponent vector of a monomial. Entries are non-negative; ordering is lex
/// with the first slot most significant.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t length) : e_(length, 0) {}
  MultiIndex(std::initializer_list<int> e) : MultiIndex(std::vector<int>(e)) {}
  explicit MultiIndex(std::vector<int> e) : e_(std::move(e)) {
    for (int v : e_) {
      if (v < 0) throw std::invalid_argument("MultiIndex entries must be non-negative");
    }
  }

  static MultiIndex unit(std::size_t length, std::size_t slot, int power = 1) {
    MultiIndex m(length);
    m.e_.at(slot) = power;
    return m;
  }

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  int total() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_zero() const { return total() == 0; }

  /// True if this monomial divides `other`.
  bool divides(const MultiIndex& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > other.e_[i]) return false;
    }
    return true;
  }

  MultiIndex& operator+=(const MultiIndex& o) {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }

  /// Componentwise difference; requires `b` to divide `a`.
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
    a.check(b);
    if (!b.divides(a)) throw std::invalid_argument("MultiIndex subtraction would go negative");
    MultiIndex r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }

  friend MultiIndex min(const MultiIndex& a, const MultiIndex& b) {
    a.check(b);
    MultiIndex r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
  }

  /// Concatenation (a, b); used for the (alpha, beta) keys of Hermitian terms.
  friend MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    r.e_.insert(r.e_.end(), b.e_.begin(), b.e_.end());
    return r;
  }

  MultiIndex slice(std::size_t begin, std::size_t count) const {
    return MultiIndex(std::vector<int>(e_.begin() + static_cast<std::ptrdiff_t>(begin),
                                       e_.begin() + static_cast<std::ptrdiff_t>(begin + count)));
  }

  /// Copy with slot `slot` removed.
  MultiIndex erase(std::size_t slot) const {
    std::vector<int> v = e_;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(slot));
    return MultiIndex(std::move(v));
  }

  /// Copy with `value` inserted before slot `slot`.
  MultiIndex insert(std::size_t slot, int value) const {
    std::vector<int> v = e_;
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(slot), value);
    return MultiIndex(std::move(v));
  }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  friend std::ostream& operator<<(std::ostream& os, const MultiIndex& m) {
    os << '(';
    for (std::size_t i = 0; i < m.e_.size(); ++i) os << (i ? "," : "") << m.e_[i];
    return os << ')';
  }

 private:
  void check(const MultiIndex& o) const {
    if (o.e_.size() != e_.size()) throw std::invalid_argument("MultiIndex length mismatch");
  }

  std::vector<int> e_;
};

/// Signed exponent difference mu - nu labelling a diagonal of a coefficient
/// matrix.
struct SignedOffset {
  std::vector<int> deltas;

  static SignedOffset between(const MultiIndex& mu, const MultiIndex& nu) {
    SignedOffset s;
    s.deltas.resize(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) s.deltas[i] = mu[i] - nu[i];
    return s;
  }

  MultiIndex positive_part() const {
    std::vector<int> v(deltas.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(deltas[i], 0);
    return MultiIndex(std::move(v));
  }
  MultiIndex negative_part() const {
    std::vector<int> v(deltas.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(-deltas[i], 0);
    return MultiIndex(std::move(v));
  }

  friend auto operator<=>(const SignedOffset&, const SignedOffset&) = default;
  friend bool operator==(const SignedOffset&, const SignedOffset&) = default;

  friend std::ostream& operator<<(std::ostream& os, const SignedOffset& s) {
    os << '(';
    for (std::size_t i = 0; i < s.deltas.size(); ++i) os << (i ? "," : "") << s.deltas[i];
    return os << ')';
  }
};

/// All exponent vectors of length `nvars` with total degree exactly `degree`,
/// in descending lex order (z1^d first).
inline std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<MultiIndex> out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t slot, int left) -> void {
    if (slot + 1 == nvars) {
      e[slot] = left;
      out.emplace_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[slot] = v;
      self(self, slot + 1, left - v);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

/// All exponent vectors with lo <= total degree <= hi, graded ascending.
inline std::vector<MultiIndex> monomials_up_to(std::size_t nvars, int lo, int hi) {
  std::vector<MultiIndex> out;
  for (int k = lo; k <= hi; ++k) {
    auto part = monomials_of_degree(nvars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace hermsos
