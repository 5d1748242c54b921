#include "ivcat/poset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <sstream>

#include "ivcat/representation.hpp"

namespace ivcat::poset {

namespace {

ElementSet one(std::size_t i) { return ElementSet{1} << i; }

std::vector<std::size_t> elements_of(ElementSet s) {
  std::vector<std::size_t> out;
  for (; s != 0; s &= s - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
  return out;
}

// Path x = v0 <= v1 <= ... <= y along the given relation pairs.
std::vector<std::size_t> relation_path(std::size_t n,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& rel,
                                       std::size_t from, std::size_t to) {
  std::vector<std::ptrdiff_t> parent(n, -1);
  std::deque<std::size_t> queue{from};
  parent[from] = static_cast<std::ptrdiff_t>(from);
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (const auto& [lo, hi] : rel) {
      if (lo == v && parent[hi] < 0) {
        parent[hi] = static_cast<std::ptrdiff_t>(v);
        queue.push_back(hi);
      }
    }
  }
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(static_cast<std::size_t>(parent[path.back()]));
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

// --- FinitePoset -----------------------------------------------------------------

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& relations)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n > kMaxElements) {
    throw ValidationError("posets are limited to " + std::to_string(kMaxElements) + " elements");
  }
  {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw ValidationError("duplicate element label '" + *dup + "'");
  }
  below_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) below_[i] = one(i);
  for (const auto& [x, y] : relations) {
    if (x >= n || y >= n) throw ValidationError("relation refers to an unknown element");
    below_[y] |= one(x);
  }
  // Warshall: below_[y] becomes everything reachable downward from y.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t y = 0; y < n; ++y) {
      if (below_[y] & one(k)) below_[y] |= below_[k];
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (leq(x, y) && leq(y, x)) {
        auto path = relation_path(n, relations, x, y);
        const auto back = relation_path(n, relations, y, x);
        path.insert(path.end(), back.begin() + 1, back.end());
        std::string cycle;
        for (std::size_t i = 0; i < path.size(); ++i) {
          if (i) cycle += " <= ";
          cycle += labels_[path[i]];
        }
        throw ValidationError("relation is not antisymmetric; cycle: " + cycle);
      }
    }
  }
  above_.assign(n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    for (auto x : elements_of(below_[y])) above_[x] |= one(y);
  }
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return FinitePoset(std::move(labels), rel);
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return FinitePoset(std::move(labels), {});
}

FinitePoset FinitePoset::random(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t j = 0; j < n; ++j) {
    labels.push_back("e" + std::to_string(j));
    for (std::size_t i = 0; i < j; ++i) {
      if (coin(rng)) rel.emplace_back(i, j);
    }
  }
  return FinitePoset(std::move(labels), rel);
}

FinitePoset FinitePoset::parse(std::istream& in) {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  std::string line;
  std::size_t line_no = 0;
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) {
      throw ValidationError("line " + std::to_string(line_no) + ": unknown element '" + label + "'");
    }
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) continue;
    if (first == "elements:") {
      std::string label;
      while (words >> label) {
        if (index.count(label)) {
          throw ValidationError("line " + std::to_string(line_no) + ": duplicate element '" + label + "'");
        }
        index.emplace(label, labels.size());
        labels.push_back(label);
      }
      continue;
    }
    std::string op, second, extra;
    if (!(words >> op >> second) || op != "<=" || (words >> extra)) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected 'elements: ...' or 'x <= y', got '" + line + "'");
    }
    rel.emplace_back(lookup(first), lookup(second));
  }
  return FinitePoset(std::move(labels), rel);
}

std::size_t FinitePoset::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw ValidationError("unknown element '" + std::string(label) + "'");
}

ElementSet FinitePoset::all() const noexcept {
  return size() >= 64 ? ~ElementSet{0} : one(size()) - 1;
}

FinitePoset FinitePoset::restrict_to(ElementSet elements) const {
  const auto keep = elements_of(elements & all());
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(labels_[keep[i]]);
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (i != j && leq(keep[i], keep[j])) rel.emplace_back(i, j);
    }
  }
  return FinitePoset(std::move(labels), rel);
}

// --- Ideals ----------------------------------------------------------------------

Ideal principal_ideal(const FinitePoset& p, std::size_t x) {
  if (x >= p.size()) throw ValidationError("element index out of range");
  return Ideal{p.down(x)};
}

bool is_ideal(const FinitePoset& p, ElementSet s) noexcept {
  for (auto y : elements_of(s)) {
    if ((p.down(y) & ~s) != 0) return false;
  }
  return true;
}

bool IdealLattice::contains(ElementSet s) const {
  return std::binary_search(ideals.begin(), ideals.end(), Ideal{s},
                            [](const Ideal& l, const Ideal& r) { return l.members < r.members; });
}

IdealLattice ideals(const FinitePoset& p) {
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // x < y forces |down x| < |down y|, so this is a linear extension.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return std::popcount(p.down(l)) < std::popcount(p.down(r));
  });

  IdealLattice out;
  auto dfs = [&](auto&& self, std::size_t k, ElementSet current) -> void {
    if (k == order.size()) {
      if (out.ideals.size() >= kMaxIdeals) {
        throw CapExceeded("more than " + std::to_string(kMaxIdeals) + " ideals");
      }
      out.ideals.push_back(Ideal{current});
      return;
    }
    const auto e = order[k];
    self(self, k + 1, current);
    if ((p.down(e) & ~one(e) & ~current) == 0) self(self, k + 1, current | one(e));
  };
  dfs(dfs, 0, 0);
  std::sort(out.ideals.begin(), out.ideals.end(),
            [](const Ideal& l, const Ideal& r) { return l.members < r.members; });
  return out;
}

// --- Lattices --------------------------------------------------------------------

FiniteLattice FiniteLattice::from_ideals(const IdealLattice& lattice) {
  const std::size_t n = lattice.size();
  std::map<ElementSet, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(lattice.ideals[i].members, i);
  FiniteLattice out{n, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n)),
                    std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = lattice.ideals[i].members;
      const auto b = lattice.ideals[j].members;
      out.meet[i][j] = pos.at(a & b);
      out.join[i][j] = pos.at(a | b);
    }
  }
  return out;
}

FiniteLattice FiniteLattice::from_order(const FinitePoset& order) {
  const std::size_t n = order.size();
  FiniteLattice out{n, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n)),
                    std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ElementSet lower = order.down(i) & order.down(j);
      const ElementSet upper = order.up(i) & order.up(j);
      bool has_meet = false, has_join = false;
      for (std::size_t g = 0; g < n; ++g) {
        if ((lower >> g & 1U) && (lower & ~order.down(g)) == 0) {
          out.meet[i][j] = g;
          has_meet = true;
        }
        if ((upper >> g & 1U) && (upper & ~order.up(g)) == 0) {
          out.join[i][j] = g;
          has_join = true;
        }
      }
      if (!has_meet || !has_join) {
        throw ValidationError("not a lattice: " + order.labels()[i] + " and " + order.labels()[j] +
                              " lack a " + (has_meet ? "join" : "meet"));
      }
    }
  }
  return out;
}

bool is_distributive(const FiniteLattice& l) {
  for (std::size_t x = 0; x < l.size; ++x) {
    for (std::size_t y = 0; y < l.size; ++y) {
      for (std::size_t z = 0; z < l.size; ++z) {
        if (l.meet[x][l.join[y][z]] != l.join[l.meet[x][y]][l.meet[x][z]]) return false;
      }
    }
  }
  return true;
}

bool is_distributive(const IdealLattice& lattice) {
  return is_distributive(FiniteLattice::from_ideals(lattice));
}

// --- Subfunctors of representables -----------------------------------------------

std::size_t subfunctor_count(const FinitePoset& p, std::size_t x) {
  const auto support = elements_of(p.down(x));
  if (support.size() > 24) throw CapExceeded("subfunctor_count: principal ideal above 24 elements");
  // h_x(y) = F_2 for y <= x; for y' <= y the restriction h_x(y) -> h_x(y') is
  // the identity, so a choice of subspaces is a subfunctor iff every chosen
  // h_x(y) maps into a chosen h_x(y').
  std::size_t count = 0;
  const std::uint64_t assignments = std::uint64_t{1} << support.size();
  for (std::uint64_t f = 0; f < assignments; ++f) {
    bool ok = true;
    for (std::size_t i = 0; i < support.size() && ok; ++i) {
      if (!((f >> i) & 1U)) continue;
      for (std::size_t j = 0; j < support.size(); ++j) {
        if (p.leq(support[j], support[i]) && !((f >> j) & 1U)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

// --- Incidence algebra -----------------------------------------------------------

IncidenceAlgebra::IncidenceAlgebra(const FinitePoset& p)
    : poset_size_(p.size()), index_(p.size(), std::vector<std::ptrdiff_t>(p.size(), -1)) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) {
        index_[x][y] = static_cast<std::ptrdiff_t>(basis_.size());
        basis_.emplace_back(x, y);
      }
    }
  }
}

IncidenceAlgebra::Element IncidenceAlgebra::basis_element(std::size_t k) const {
  Element e(dimension(), false);
  e.at(k) = true;
  return e;
}

IncidenceAlgebra::Element IncidenceAlgebra::identity() const {
  Element e(dimension(), false);
  for (std::size_t x = 0; x < poset_size_; ++x) e[static_cast<std::size_t>(index_[x][x])] = true;
  return e;
}

IncidenceAlgebra::Element IncidenceAlgebra::multiply(const Element& u, const Element& v) const {
  Element out(dimension(), false);
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (!u[i]) continue;
    const auto [y, z] = basis_[i];
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (!v[j]) continue;
      const auto [x, y2] = basis_[j];
      if (y2 != y) continue;
      const auto k = static_cast<std::size_t>(index_[x][z]);
      out[k] = !out[k];
    }
  }
  return out;
}

bool IncidenceAlgebra::is_associative() const {
  for (std::size_t i = 0; i < dimension(); ++i) {
    const auto ei = basis_element(i);
    for (std::size_t j = 0; j < dimension(); ++j) {
      const auto ej = basis_element(j);
      const auto ij = multiply(ei, ej);
      for (std::size_t k = 0; k < dimension(); ++k) {
        const auto ek = basis_element(k);
        if (multiply(ij, ek) != multiply(ei, multiply(ej, ek))) return false;
      }
    }
  }
  return true;
}

bool IncidenceAlgebra::has_two_sided_identity() const {
  const auto one_element = identity();
  for (std::size_t k = 0; k < dimension(); ++k) {
    const auto e = basis_element(k);
    if (multiply(one_element, e) != e || multiply(e, one_element) != e) return false;
  }
  return true;
}

// --- Chain example ---------------------------------------------------------------

bool chain_equivalence_check(int n) {
  using namespace ivcat::oracle;
  const Ambient ambient(n);
  for (const auto& x : all_intervals(ambient)) {
    const int lower_top = x.a() - 1;
    auto upper = module_of(Interval(1, x.b()), ambient);
    auto lower = lower_top >= 1 ? module_of(Interval(1, lower_top), ambient)
                                : Representation::zero(ambient);
    std::vector<F2Matrix> comps;
    for (int i = 1; i <= n; ++i) {
      comps.push_back(i <= lower_top ? F2Matrix::identity(1) : F2Matrix(upper.dim(i), lower.dim(i)));
    }
    const RepMorphism inc(std::move(lower), std::move(upper), std::move(comps));
    if (barcode(cokernel_rep(inc)) != Barcode{x}) return false;
  }
  return true;
}

// --- Coherence -------------------------------------------------------------------

namespace {

ElementSet maximal_elements(const FinitePoset& p, ElementSet s) {
  ElementSet out = 0;
  for (auto y : elements_of(s)) {
    if ((p.up(y) & s) == one(y)) out |= one(y);
  }
  return out;
}

// An ideal is compact iff it is the union of the principal ideals of finitely
// many of its elements; for a finite poset, its maximal elements.
bool is_compact(const FinitePoset& p, ElementSet ideal) {
  ElementSet generated = 0;
  for (auto m : elements_of(maximal_elements(p, ideal))) generated |= p.down(m);
  return generated == ideal;
}

}  // namespace

bool compact_meet_check(const FinitePoset& p) {
  // Pairwise over all compact ideals while there are at most 2^11 of them.
  constexpr std::size_t kPairwiseElements = 11;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const ElementSet region = p.down(x);
    const auto sub = p.restrict_to(region);
    if (sub.size() <= kPairwiseElements) {
      std::vector<ElementSet> compact;
      // Lift the ideals of the principal ideal back to element masks of p.
      const auto keep = elements_of(region);
      for (const auto& ideal : ideals(sub).ideals) {
        ElementSet lifted = 0;
        for (auto i : elements_of(ideal.members)) lifted |= one(keep[i]);
        if (is_compact(p, lifted)) compact.push_back(lifted);
      }
      for (auto i : compact) {
        for (auto j : compact) {
          if (!is_compact(p, i & j)) return false;
        }
      }
    } else {
      // Compact ideals are finite unions of principal ones and meets
      // distribute over unions, so principal pairs suffice.
      for (auto y : elements_of(region)) {
        for (auto y2 : elements_of(region)) {
          if (!is_compact(p, p.down(y) & p.down(y2))) return false;
        }
      }
    }
  }
  return true;
}

bool coherent_check(const FinitePoset& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto below_x = elements_of(p.down(x));
    for (auto y : below_x) {
      for (auto y2 : below_x) {
        const ElementSet common = p.down(y) & p.down(y2);
        const ElementSet dominating = maximal_elements(p, common);
        for (auto z : elements_of(common)) {
          if ((p.up(z) & dominating) == 0) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ivcat::poset
