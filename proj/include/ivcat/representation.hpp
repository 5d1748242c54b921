#pragma once

// Explicit F_2-linear representations of the linearly oriented A_n quiver.
//
// This is the linear-algebra ground truth that the interval formulas are
// checked against.  Representations are contravariant: the arrow i -> i+1
// carries a linear map M(i+1) -> M(i), stored as a dim M(i) x dim M(i+1)
// matrix.  Every direction convention lives in this file.

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ivcat/f2_matrix.hpp"
#include "ivcat/interval.hpp"

namespace ivcat::oracle {

class Representation {
 public:
  /// dims has n entries; maps has n-1 entries, maps[k] : M(k+2) -> M(k+1).
  /// Throws ValidationError on inconsistent shapes.
  Representation(Ambient ambient, std::vector<std::size_t> dims, std::vector<F2Matrix> maps);

  static Representation zero(Ambient ambient);

  const Ambient& ambient() const noexcept { return ambient_; }
  int n() const noexcept { return ambient_.n(); }
  /// Dimension at vertex i, 1 <= i <= n.
  std::size_t dim(int vertex) const { return dims_.at(static_cast<std::size_t>(vertex - 1)); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t total_dim() const noexcept;
  /// Structure map M(i+1) -> M(i), 1 <= i < n.
  const F2Matrix& map(int i) const { return maps_.at(static_cast<std::size_t>(i - 1)); }
  /// Composite M(to) -> M(from) for from <= to (identity when equal).
  F2Matrix composite(int from, int to) const;

  std::string to_string() const;

 private:
  Ambient ambient_;
  std::vector<std::size_t> dims_;
  std::vector<F2Matrix> maps_;
};

class RepMorphism {
 public:
  /// components[k] : source(k+1) -> target(k+1).  Throws ValidationError if a
  /// shape is wrong or a square fails to commute.
  RepMorphism(Representation source, Representation target, std::vector<F2Matrix> components);

  static RepMorphism zero(const Representation& source, const Representation& target);
  static RepMorphism identity(const Representation& x);

  const Representation& source() const noexcept { return source_; }
  const Representation& target() const noexcept { return target_; }
  const F2Matrix& component(int vertex) const {
    return components_.at(static_cast<std::size_t>(vertex - 1));
  }
  const std::vector<F2Matrix>& components() const noexcept { return components_; }
  bool is_zero() const noexcept;

  /// Coordinates of all component entries, vertex by vertex, row-major.
  std::vector<bool> flatten() const;

 private:
  Representation source_;
  Representation target_;
  std::vector<F2Matrix> components_;
};

/// g o f.
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);

struct Subobject {
  Representation object;
  RepMorphism inclusion;
};

struct Quotient {
  Representation object;
  RepMorphism projection;
};

/// M_x: F_2 on the vertices of x, identity maps inside the support.
Representation module_of(const Interval& x, const Ambient& ambient);
Representation direct_sum(std::span<const Representation> parts, const Ambient& ambient);
Representation module_of(const Barcode& xs, const Ambient& ambient);

std::size_t hom_space_dim(const Representation& x, const Representation& y);
/// Basis of Hom(x, y) as explicit morphisms.
std::vector<RepMorphism> hom_basis(const Representation& x, const Representation& y);
/// Uniformly random element of Hom(x, y).
RepMorphism random_morphism(const Representation& x, const Representation& y, std::mt19937_64& rng);

Subobject kernel(const RepMorphism& f);
Quotient cokernel(const RepMorphism& f);
Subobject image(const RepMorphism& f);

inline Representation kernel_rep(const RepMorphism& f) { return kernel(f).object; }
inline Representation cokernel_rep(const RepMorphism& f) { return cokernel(f).object; }
inline Representation image_rep(const RepMorphism& f) { return image(f).object; }

/// Interval decomposition by rank inclusion-exclusion over the composites.
Barcode barcode(const Representation& x);

/// dim Ext^1(xprime, x), from the projective resolution
/// 0 -> h_{a-1} -> h_b -> M_[a,b] -> 0 of each summand of xprime.
std::size_t ext_dim(const Representation& xprime, const Representation& x);

/// Middle term of a nonsplit extension 0 -> x -> E -> M_xprime -> 0, built as
/// the pushout of the projective resolution of M_xprime along a cocycle.
/// nullopt when Ext^1 vanishes.
std::optional<Representation> nonsplit_extension(const Interval& xprime, const Representation& x);

/// Morphism h_j = M_[1,j] -> x sending the generator to v in x(j).
RepMorphism yoneda_morphism(const Representation& x, int vertex, const F2Matrix& v);

/// Inclusions of every subrepresentation of x.  Throws CapExceeded when some
/// vertex has dimension above 4 or the search space exceeds a million cases.
std::vector<Subobject> subrepresentations(const Representation& x);

/// Subrepresentation generated by a few random vectors.
Subobject random_subrepresentation(const Representation& x, std::mt19937_64& rng);

}  // namespace ivcat::oracle
