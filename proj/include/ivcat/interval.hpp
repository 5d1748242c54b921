#pragma once

// Interval arithmetic for the category of multisets of intervals of type n.
//
// An interval [a,b] with 1 <= a <= b <= n stands for the indecomposable object
// supported on the vertices a..b.  Hom spaces are at most one-dimensional over
// F_2, so every statement about morphisms, kernels, cokernels and extensions
// reduces to inequalities between endpoints.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ivcat/errors.hpp"

namespace ivcat {

class Interval {
 public:
  /// Throws ValidationError unless 1 <= a <= b.
  constexpr Interval(int a, int b) : a_(a), b_(b) {
    if (a < 1 || b < a) throw ValidationError(bad_message(a, b));
  }

  constexpr int a() const noexcept { return a_; }
  constexpr int b() const noexcept { return b_; }

  /// b - a.
  constexpr int length() const noexcept { return b_ - a_; }

  /// Canonical index b(b-1)/2 + (a-1).  Intervals of type n occupy a prefix.
  constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(b_) * static_cast<std::size_t>(b_ - 1) / 2 +
           static_cast<std::size_t>(a_ - 1);
  }

  static Interval from_index(std::size_t index);

  /// Parses "a,b" (surrounding whitespace allowed).
  static Interval parse(std::string_view text);
  std::string to_string() const;

  friend constexpr bool operator==(const Interval&, const Interval&) = default;
  friend constexpr std::strong_ordering operator<=>(const Interval& x, const Interval& y) noexcept {
    return x.index() <=> y.index();
  }

 private:
  static std::string bad_message(int a, int b);

  int a_;
  int b_;
};

/// Number of vertices n of the linearly oriented A_n quiver.
class Ambient {
 public:
  explicit Ambient(int n);

  int n() const noexcept { return n_; }
  /// n(n+1)/2.
  std::size_t universe_size() const noexcept {
    return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ + 1) / 2;
  }
  bool contains(const Interval& x) const noexcept { return x.b() <= n_; }
  /// Throws ValidationError if x does not fit.
  void require(const Interval& x) const;

  friend bool operator==(const Ambient&, const Ambient&) = default;

 private:
  int n_;
};

/// A finite multiset of intervals, kept sorted by canonical index.  The zero
/// object is the empty barcode.
using Barcode = std::vector<Interval>;

Barcode make_barcode(std::vector<Interval> intervals);
std::string to_string(const Barcode& barcode);

// --- Morphisms ---------------------------------------------------------------

/// dim Hom([a,b],[c,d]) over F_2: 1 iff a <= c <= b <= d.
constexpr int hom_dim(const Interval& x, const Interval& y) noexcept {
  return (x.a() <= y.a() && y.a() <= x.b() && x.b() <= y.b()) ? 1 : 0;
}

/// Whether the composite of the nonzero maps x -> y -> z is nonzero.
/// Throws ValidationError if either hom space is zero.
bool compose_nonzero(const Interval& x, const Interval& y, const Interval& z);

/// Image [c,b] of the nonzero map [a,b] -> [c,d], if there is one.
std::optional<Interval> image(const Interval& x, const Interval& y);

/// Nonzero quotients [c,b], a <= c <= b, in canonical order.
std::vector<Interval> quotients(const Interval& x);
/// Nonzero subobjects [c,b'], c <= b' <= d, in canonical order.
std::vector<Interval> subobjects(const Interval& x);

/// Middle term (y, y') of the nonsplit extension 0 -> x -> y (+) y' -> x' -> 0.
/// Absent when Ext^1(x', x) = 0.  y' is absent when it would be [b+1,b].
std::optional<std::pair<Interval, std::optional<Interval>>> ext_middle(const Interval& xprime,
                                                                       const Interval& x);

/// Cokernel of the nonzero map x -> y.  Throws ValidationError if hom_dim(x,y) = 0.
Barcode cokernel_single(const Interval& x, const Interval& y);
/// Cokernel of x -> y1 (+) y2 with both components nonzero.
Barcode cokernel_pair(const Interval& x, const Interval& y1, const Interval& y2);

/// Kernel of the nonzero map y -> x.
Barcode kernel_single(const Interval& y, const Interval& x);
/// Kernel of y1 (+) y2 -> x with both components nonzero.
Barcode kernel_pair(const Interval& y1, const Interval& y2, const Interval& x);

/// The involution i -> n+1-i.
Interval dual(const Interval& x, const Ambient& ambient);
Barcode dual(const Barcode& barcode, const Ambient& ambient);

constexpr int comp_length(const Interval& x) noexcept { return x.b() - x.a() + 1; }
int comp_length(const Barcode& barcode) noexcept;

/// Ob I_n in canonical index order.
std::vector<Interval> all_intervals(const Ambient& ambient);

// --- Interval sets -------------------------------------------------------------

/// Largest n whose interval universe fits in a 64-bit mask.
inline constexpr int kMaxSetN = 10;

using Mask = std::uint64_t;

/// A subset of Ob I_n, i.e. an additive subcategory closed under sums and
/// summands.  Bit i of the mask is the interval of canonical index i.
class IntervalSet {
 public:
  /// Throws CapExceeded if n > kMaxSetN.
  explicit IntervalSet(Ambient ambient, Mask mask = 0);
  IntervalSet(Ambient ambient, const std::vector<Interval>& members);

  static IntervalSet full(Ambient ambient);

  const Ambient& ambient() const noexcept { return ambient_; }
  Mask mask() const noexcept { return mask_; }
  /// Mask with every interval of the ambient set.
  static Mask universe_mask(const Ambient& ambient);

  bool contains(const Interval& x) const noexcept;
  bool contains_all(const Barcode& xs) const noexcept;
  void insert(const Interval& x);
  void erase(const Interval& x);
  std::size_t size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }

  std::vector<Interval> members() const;
  std::vector<std::size_t> indices() const;

  bool is_subset_of(const IntervalSet& other) const noexcept;
  IntervalSet operator&(const IntervalSet& other) const;
  IntervalSet operator|(const IntervalSet& other) const;
  IntervalSet operator-(const IntervalSet& other) const;

  /// Image under the involution i -> n+1-i.
  IntervalSet dual() const;

  /// "0,2,5": sorted canonical indices.
  std::string to_index_list() const;
  static IntervalSet from_index_list(Ambient ambient, std::string_view text);
  /// '0'/'1' string of length n(n+1)/2, character i = bit i.
  std::string to_bitmask() const;
  static IntervalSet from_bitmask(Ambient ambient, std::string_view bits);
  /// Semicolon-separated "a,b" pairs, e.g. "1,1;2,2".  Empty text is the empty set.
  std::string to_literal() const;
  static IntervalSet parse_literal(Ambient ambient, std::string_view text);

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  Ambient ambient_;
  Mask mask_;
};

}  // namespace ivcat
