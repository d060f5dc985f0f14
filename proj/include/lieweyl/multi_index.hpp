#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace lieweyl {

/// Largest ambient dimension the engine supports.
inline constexpr std::size_t kMaxDim = 16;

/// Exponent vector (x^a, d^b, X^nu) over an ambient dimension n <= kMaxDim.
class MultiIndex {
 public:
  using value_type = std::uint16_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : n_(check_dim(n)) {}
  MultiIndex(std::initializer_list<unsigned> exps) : n_(check_dim(exps.size())) {
    std::size_t k = 0;
    for (unsigned e : exps) set(k++, e);
  }

  static MultiIndex unit(std::size_t n, std::size_t k) {
    MultiIndex m(n);
    m.set(k, 1);
    return m;
  }

  std::size_t size() const { return n_; }
  unsigned operator[](std::size_t k) const { return e_[k]; }

  void set(std::size_t k, unsigned v) {
    if (k >= n_) throw std::out_of_range("MultiIndex: slot out of range");
    if (v > 0xFFFFu) throw std::overflow_error("MultiIndex: exponent overflow");
    e_[k] = static_cast<value_type>(v);
  }
  void bump(std::size_t k, int delta = 1) { set(k, static_cast<unsigned>(static_cast<int>(e_[k]) + delta)); }

  unsigned degree() const {
    unsigned d = 0;
    for (std::size_t k = 0; k < n_; ++k) d += e_[k];
    return d;
  }
  bool is_zero() const { return degree() == 0; }

  /// Index of the first nonzero slot, or size() when this is the zero index.
  std::size_t first_nonzero() const {
    for (std::size_t k = 0; k < n_; ++k)
      if (e_[k] != 0) return k;
    return n_;
  }

  /// Componentwise <=.
  bool divides(const MultiIndex& o) const {
    for (std::size_t k = 0; k < n_; ++k)
      if (e_[k] > o.e_[k]) return false;
    return true;
  }

  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
    for (std::size_t k = 0; k < a.n_; ++k) a.set(k, unsigned(a.e_[k]) + b.e_[k]);
    return a;
  }
  /// Requires b.divides(a).
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) {
    for (std::size_t k = 0; k < a.n_; ++k) a.e_[k] = static_cast<value_type>(a.e_[k] - b.e_[k]);
    return a;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t k = 0; k < a.n_; ++k)
      if (auto c = a.e_[k] <=> b.e_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t k = 0; k < n_; ++k) h = h * 1000003u ^ e_[k];
    return h;
  }

 private:
  static std::uint8_t check_dim(std::size_t n) {
    if (n > kMaxDim) throw std::invalid_argument("MultiIndex: dimension " + std::to_string(n) + " exceeds limit");
    return static_cast<std::uint8_t>(n);
  }

  std::array<value_type, kMaxDim> e_{};
  std::uint8_t n_ = 0;
};

/// Total degree first, then lexicographic; the storage order for
/// polynomials and PBW elements.
struct GradedLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a < b;
  }
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const { return m.hash(); }
};

}  // namespace lieweyl
