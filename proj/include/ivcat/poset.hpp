#pragma once

// Finite posets: ideal lattices, representable subfunctors, incidence algebras
// over F_2 and the finite forms of the coherence conditions.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ivcat/errors.hpp"

namespace ivcat::poset {

/// Element subsets are bit masks; posets are limited to 64 elements.
using ElementSet = std::uint64_t;
inline constexpr std::size_t kMaxElements = 64;
inline constexpr std::size_t kMaxIdeals = std::size_t{1} << 20;

class FinitePoset {
 public:
  /// Takes the reflexive-transitive closure of `relations` (pairs x <= y by
  /// position).  Throws ValidationError naming a cycle if antisymmetry fails.
  FinitePoset(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);
  /// Random order on n elements: each pair i < j is related with probability p,
  /// then transitively closed.
  static FinitePoset random(std::size_t n, double p, std::mt19937_64& rng);
  /// Text format: "elements: a b c" lines, "x <= y" lines, '#' comments.
  static FinitePoset parse(std::istream& in);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t index_of(std::string_view label) const;

  bool leq(std::size_t x, std::size_t y) const noexcept { return ((below_[y] >> x) & 1U) != 0; }
  /// { y : y <= x }.
  ElementSet down(std::size_t x) const noexcept { return below_[x]; }
  /// { y : x <= y }.
  ElementSet up(std::size_t x) const noexcept { return above_[x]; }
  ElementSet all() const noexcept;

  /// Subposet on the given elements, labels preserved.
  FinitePoset restrict_to(ElementSet elements) const;

 private:
  std::vector<std::string> labels_;
  std::vector<ElementSet> below_;
  std::vector<ElementSet> above_;
};

/// A down-closed subset.
struct Ideal {
  ElementSet members = 0;
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

Ideal principal_ideal(const FinitePoset& p, std::size_t x);
bool is_ideal(const FinitePoset& p, ElementSet s) noexcept;

/// All ideals, sorted by mask; join is union and meet is intersection.
struct IdealLattice {
  std::vector<Ideal> ideals;

  std::size_t size() const noexcept { return ideals.size(); }
  bool contains(ElementSet s) const;
};

/// Depth-first over a linear extension.  Throws CapExceeded past kMaxIdeals.
IdealLattice ideals(const FinitePoset& p);

/// Finite lattice given by its meet and join tables.
struct FiniteLattice {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> meet;
  std::vector<std::vector<std::size_t>> join;

  static FiniteLattice from_ideals(const IdealLattice& lattice);
  /// Throws ValidationError if some pair lacks a meet or join.
  static FiniteLattice from_order(const FinitePoset& order);
};

bool is_distributive(const FiniteLattice& lattice);
bool is_distributive(const IdealLattice& lattice);

/// Counts the subfunctors of h_x by brute force over support assignments on
/// the principal ideal of x.
std::size_t subfunctor_count(const FinitePoset& p, std::size_t x);

/// F_2 P with basis the comparable pairs (x, y), x <= y.
class IncidenceAlgebra {
 public:
  explicit IncidenceAlgebra(const FinitePoset& p);

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& basis() const noexcept { return basis_; }

  /// Elements are coordinate vectors over the basis.
  using Element = std::vector<bool>;
  Element basis_element(std::size_t k) const;
  Element identity() const;
  /// u * v with alpha_yz * alpha_xy = alpha_xz and every other product 0.
  Element multiply(const Element& u, const Element& v) const;

  /// Triple products over all basis elements.
  bool is_associative() const;
  bool has_two_sided_identity() const;

 private:
  std::size_t poset_size_;
  std::vector<std::pair<std::size_t, std::size_t>> basis_;
  std::vector<std::vector<std::ptrdiff_t>> index_;  // (x, y) -> basis position or -1
};

/// For every [a,b] in I_n, the cokernel of h_{a-1} -> h_b decomposes as {[a,b]}.
bool chain_equivalence_check(int n);

/// For each x, meets of compact ideals of the principal ideal of x are compact.
bool compact_meet_check(const FinitePoset& p);
/// Every span y <= x >= y' has finitely many maximal common lower bounds
/// dominating all common lower bounds.
bool coherent_check(const FinitePoset& p);

}  // namespace ivcat::poset
