#include "ivcat/representation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ivcat::oracle {

namespace {

F2Matrix vconcat(const F2Matrix& top, const F2Matrix& bottom) {
  return top.transpose().hconcat(bottom.transpose()).transpose();
}

F2Matrix block_diag(const std::vector<F2Matrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  F2Matrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out.set(r0 + r, c0 + c, b.get(r, c));
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

F2Matrix solve_or_throw(const F2Matrix& a, const F2Matrix& rhs, const char* what) {
  auto x = a.solve(rhs);
  if (!x) throw std::logic_error(std::string("inconsistent induced map in ") + what);
  return *std::move(x);
}

void require_same_ambient(const Representation& x, const Representation& y) {
  if (!(x.ambient() == y.ambient())) {
    throw ValidationError("representations live over different n (" + std::to_string(x.n()) +
                          " vs " + std::to_string(y.n()) + ")");
  }
}

}  // namespace

// --- Representation ------------------------------------------------------------

Representation::Representation(Ambient ambient, std::vector<std::size_t> dims,
                               std::vector<F2Matrix> maps)
    : ambient_(ambient), dims_(std::move(dims)), maps_(std::move(maps)) {
  const auto n = static_cast<std::size_t>(ambient_.n());
  if (dims_.size() != n || maps_.size() != n - 1) {
    throw ValidationError("representation needs " + std::to_string(n) + " dims and " +
                          std::to_string(n - 1) + " maps");
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (maps_[k].rows() != dims_[k] || maps_[k].cols() != dims_[k + 1]) {
      throw ValidationError("structure map " + std::to_string(k + 2) + "->" +
                            std::to_string(k + 1) + " has shape " +
                            std::to_string(maps_[k].rows()) + "x" +
                            std::to_string(maps_[k].cols()));
    }
  }
}

Representation Representation::zero(Ambient ambient) {
  const auto n = static_cast<std::size_t>(ambient.n());
  return Representation(ambient, std::vector<std::size_t>(n, 0),
                        std::vector<F2Matrix>(n - 1, F2Matrix(0, 0)));
}

std::size_t Representation::total_dim() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

F2Matrix Representation::composite(int from, int to) const {
  if (from < 1 || to > n() || from > to) throw std::out_of_range("composite: bad vertex range");
  F2Matrix out = F2Matrix::identity(dim(to));
  for (int i = to - 1; i >= from; --i) out = map(i) * out;
  return out;
}

std::string Representation::to_string() const {
  std::string out = "dims";
  for (auto d : dims_) out += ' ' + std::to_string(d);
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    out += "\nmap " + std::to_string(k + 2) + "->" + std::to_string(k + 1) + ": " +
           maps_[k].to_string();
  }
  return out;
}

// --- RepMorphism ---------------------------------------------------------------

RepMorphism::RepMorphism(Representation source, Representation target,
                         std::vector<F2Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_same_ambient(source_, target_);
  const int n = source_.n();
  if (components_.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("morphism needs one component per vertex");
  }
  for (int i = 1; i <= n; ++i) {
    const auto& f = component(i);
    if (f.rows() != target_.dim(i) || f.cols() != source_.dim(i)) {
      throw ValidationError("morphism component at vertex " + std::to_string(i) +
                            " has the wrong shape");
    }
  }
  for (int i = 1; i < n; ++i) {
    if (!(component(i) * source_.map(i) == target_.map(i) * component(i + 1))) {
      throw ValidationError("morphism does not commute with the arrow " + std::to_string(i) +
                            "->" + std::to_string(i + 1));
    }
  }
}

RepMorphism RepMorphism::zero(const Representation& source, const Representation& target) {
  std::vector<F2Matrix> comps;
  for (int i = 1; i <= source.n(); ++i) comps.emplace_back(target.dim(i), source.dim(i));
  return RepMorphism(source, target, std::move(comps));
}

RepMorphism RepMorphism::identity(const Representation& x) {
  std::vector<F2Matrix> comps;
  for (int i = 1; i <= x.n(); ++i) comps.push_back(F2Matrix::identity(x.dim(i)));
  return RepMorphism(x, x, std::move(comps));
}

bool RepMorphism::is_zero() const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [](const F2Matrix& m) { return m.is_zero(); });
}

std::vector<bool> RepMorphism::flatten() const {
  std::vector<bool> out;
  for (const auto& m : components_) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.get(r, c));
    }
  }
  return out;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  if (f.target().dims() != g.source().dims()) {
    throw ValidationError("compose: target of f is not the source of g");
  }
  std::vector<F2Matrix> comps;
  for (int i = 1; i <= f.source().n(); ++i) comps.push_back(g.component(i) * f.component(i));
  return RepMorphism(f.source(), g.target(), std::move(comps));
}

// --- Constructions -------------------------------------------------------------

Representation module_of(const Interval& x, const Ambient& ambient) {
  ambient.require(x);
  const int n = ambient.n();
  std::vector<std::size_t> dims(static_cast<std::size_t>(n), 0);
  for (int i = x.a(); i <= x.b(); ++i) dims[static_cast<std::size_t>(i - 1)] = 1;
  std::vector<F2Matrix> maps;
  for (int i = 1; i < n; ++i) {
    const bool inside = x.a() <= i && i + 1 <= x.b();
    maps.push_back(inside ? F2Matrix::identity(1)
                          : F2Matrix(dims[static_cast<std::size_t>(i - 1)],
                                     dims[static_cast<std::size_t>(i)]));
  }
  return Representation(ambient, std::move(dims), std::move(maps));
}

Representation direct_sum(std::span<const Representation> parts, const Ambient& ambient) {
  const int n = ambient.n();
  std::vector<std::size_t> dims(static_cast<std::size_t>(n), 0);
  std::vector<F2Matrix> maps;
  for (const auto& p : parts) {
    if (!(p.ambient() == ambient)) throw ValidationError("direct_sum: mixed ambients");
    for (int i = 1; i <= n; ++i) dims[static_cast<std::size_t>(i - 1)] += p.dim(i);
  }
  for (int i = 1; i < n; ++i) {
    std::vector<F2Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(i));
    maps.push_back(block_diag(blocks));
  }
  return Representation(ambient, std::move(dims), std::move(maps));
}

Representation module_of(const Barcode& xs, const Ambient& ambient) {
  std::vector<Representation> parts;
  for (const auto& x : xs) parts.push_back(module_of(x, ambient));
  return direct_sum(parts, ambient);
}

// --- Hom -----------------------------------------------------------------------

namespace {

// Unknowns are the entries of the components F_i, laid out vertex by vertex in
// row-major order.  Each arrow contributes F_i S_i + T_i F_{i+1} = 0.
struct HomSystem {
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  F2Matrix equations;
};

HomSystem hom_system(const Representation& x, const Representation& y) {
  require_same_ambient(x, y);
  const int n = x.n();
  HomSystem sys;
  sys.offset.resize(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    sys.offset[static_cast<std::size_t>(i)] =
        sys.offset[static_cast<std::size_t>(i - 1)] + y.dim(i) * x.dim(i);
  }
  sys.unknowns = sys.offset[static_cast<std::size_t>(n)];
  auto var = [&](int vertex, std::size_t r, std::size_t c) {
    return sys.offset[static_cast<std::size_t>(vertex - 1)] + r * x.dim(vertex) + c;
  };

  std::size_t rows = 0;
  for (int i = 1; i < n; ++i) rows += y.dim(i) * x.dim(i + 1);
  sys.equations = F2Matrix(rows, sys.unknowns);
  std::size_t row = 0;
  for (int i = 1; i < n; ++i) {
    const auto& s = x.map(i);
    const auto& t = y.map(i);
    for (std::size_t r = 0; r < y.dim(i); ++r) {
      for (std::size_t c = 0; c < x.dim(i + 1); ++c, ++row) {
        for (std::size_t k = 0; k < x.dim(i); ++k) {
          if (s.get(k, c)) sys.equations.set(row, var(i, r, k), !sys.equations.get(row, var(i, r, k)));
        }
        for (std::size_t k = 0; k < y.dim(i + 1); ++k) {
          if (t.get(r, k)) {
            const auto v = var(i + 1, k, c);
            sys.equations.set(row, v, !sys.equations.get(row, v));
          }
        }
      }
    }
  }
  return sys;
}

RepMorphism morphism_from_vector(const Representation& x, const Representation& y,
                                 const HomSystem& sys, const F2Matrix& basis, std::size_t col) {
  std::vector<F2Matrix> comps;
  for (int i = 1; i <= x.n(); ++i) {
    F2Matrix f(y.dim(i), x.dim(i));
    for (std::size_t r = 0; r < y.dim(i); ++r) {
      for (std::size_t c = 0; c < x.dim(i); ++c) {
        f.set(r, c, basis.get(sys.offset[static_cast<std::size_t>(i - 1)] + r * x.dim(i) + c, col));
      }
    }
    comps.push_back(std::move(f));
  }
  return RepMorphism(x, y, std::move(comps));
}

}  // namespace

std::size_t hom_space_dim(const Representation& x, const Representation& y) {
  const auto sys = hom_system(x, y);
  return sys.unknowns - sys.equations.rank();
}

std::vector<RepMorphism> hom_basis(const Representation& x, const Representation& y) {
  const auto sys = hom_system(x, y);
  const auto basis = sys.equations.kernel_basis();
  std::vector<RepMorphism> out;
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    out.push_back(morphism_from_vector(x, y, sys, basis, k));
  }
  return out;
}

RepMorphism random_morphism(const Representation& x, const Representation& y, std::mt19937_64& rng) {
  const auto sys = hom_system(x, y);
  const auto basis = sys.equations.kernel_basis();
  F2Matrix pick(basis.cols(), 1);
  for (std::size_t k = 0; k < basis.cols(); ++k) pick.set(k, 0, (rng() & 1U) != 0);
  return morphism_from_vector(x, y, sys, basis * pick, 0);
}

// --- Kernels, cokernels, images ------------------------------------------------

Subobject kernel(const RepMorphism& f) {
  const auto& src = f.source();
  const int n = src.n();
  std::vector<F2Matrix> bases;
  std::vector<std::size_t> dims;
  for (int i = 1; i <= n; ++i) {
    bases.push_back(f.component(i).kernel_basis());
    dims.push_back(bases.back().cols());
  }
  std::vector<F2Matrix> maps;
  for (int i = 1; i < n; ++i) {
    const auto& lower = bases[static_cast<std::size_t>(i - 1)];
    const auto& upper = bases[static_cast<std::size_t>(i)];
    maps.push_back(solve_or_throw(lower, src.map(i) * upper, "kernel"));
  }
  Representation obj(src.ambient(), std::move(dims), std::move(maps));
  RepMorphism inc(obj, src, std::move(bases));
  return {std::move(obj), std::move(inc)};
}

Quotient cokernel(const RepMorphism& f) {
  const auto& tgt = f.target();
  const int n = tgt.n();
  // Q_i has kernel exactly im f_i: its rows span the left null space of f_i.
  std::vector<F2Matrix> proj;
  std::vector<std::size_t> dims;
  for (int i = 1; i <= n; ++i) {
    proj.push_back(f.component(i).transpose().kernel_basis().transpose());
    dims.push_back(proj.back().rows());
  }
  std::vector<F2Matrix> maps;
  for (int i = 1; i < n; ++i) {
    // M Q_{i+1} = Q_i T_i, solved through the transposes; Q_{i+1} is onto.
    const auto& lower = proj[static_cast<std::size_t>(i - 1)];
    const auto& upper = proj[static_cast<std::size_t>(i)];
    maps.push_back(
        solve_or_throw(upper.transpose(), (lower * tgt.map(i)).transpose(), "cokernel").transpose());
  }
  Representation obj(tgt.ambient(), std::move(dims), std::move(maps));
  RepMorphism p(tgt, obj, std::move(proj));
  return {std::move(obj), std::move(p)};
}

Subobject image(const RepMorphism& f) {
  const auto& tgt = f.target();
  const int n = tgt.n();
  std::vector<F2Matrix> bases;
  std::vector<std::size_t> dims;
  for (int i = 1; i <= n; ++i) {
    bases.push_back(f.component(i).column_space_basis());
    dims.push_back(bases.back().cols());
  }
  std::vector<F2Matrix> maps;
  for (int i = 1; i < n; ++i) {
    const auto& lower = bases[static_cast<std::size_t>(i - 1)];
    const auto& upper = bases[static_cast<std::size_t>(i)];
    maps.push_back(solve_or_throw(lower, tgt.map(i) * upper, "image"));
  }
  Representation obj(tgt.ambient(), std::move(dims), std::move(maps));
  RepMorphism inc(obj, tgt, std::move(bases));
  return {std::move(obj), std::move(inc)};
}

// --- Barcode -------------------------------------------------------------------

Barcode barcode(const Representation& x) {
  const int n = x.n();
  // rank[a][b] = rank of M(b) -> M(a), zero outside 1 <= a <= b <= n.
  std::vector<std::vector<long>> rank(static_cast<std::size_t>(n) + 2,
                                      std::vector<long>(static_cast<std::size_t>(n) + 2, 0));
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      rank[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<long>(x.composite(a, b).rank());
    }
  }
  auto r = [&](int a, int b) {
    return rank[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  Barcode out;
  for (int b = 1; b <= n; ++b) {
    for (int a = 1; a <= b; ++a) {
      const long mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
      if (mult < 0) throw std::logic_error("negative barcode multiplicity");
      for (long k = 0; k < mult; ++k) out.emplace_back(a, b);
    }
  }
  return out;
}

// --- Ext -----------------------------------------------------------------------

namespace {

// Inclusion h_{a-1} -> h_b of projectives, a-1 <= b.
RepMorphism projective_inclusion(int lower_top, int upper_top, const Ambient& ambient) {
  auto lower = lower_top >= 1 ? module_of(Interval(1, lower_top), ambient) : Representation::zero(ambient);
  auto upper = module_of(Interval(1, upper_top), ambient);
  std::vector<F2Matrix> comps;
  for (int i = 1; i <= ambient.n(); ++i) {
    comps.push_back(i <= lower_top ? F2Matrix::identity(1) : F2Matrix(upper.dim(i), lower.dim(i)));
  }
  return RepMorphism(std::move(lower), std::move(upper), std::move(comps));
}

F2Matrix as_columns(const std::vector<RepMorphism>& fs, std::size_t coords) {
  F2Matrix m(coords, fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const auto v = fs[k].flatten();
    for (std::size_t r = 0; r < v.size(); ++r) m.set(r, k, v[r]);
  }
  return m;
}

std::size_t coordinate_count(const Representation& x, const Representation& y) {
  std::size_t total = 0;
  for (int i = 1; i <= x.n(); ++i) total += x.dim(i) * y.dim(i);
  return total;
}

// Hom(h_b, x) -> Hom(h_{a-1}, x) by precomposition; returns the images.
std::vector<RepMorphism> restricted_homs(const RepMorphism& inc, const Representation& x) {
  std::vector<RepMorphism> out;
  for (const auto& g : hom_basis(inc.target(), x)) out.push_back(compose(g, inc));
  return out;
}

}  // namespace

std::size_t ext_dim(const Representation& xprime, const Representation& x) {
  require_same_ambient(xprime, x);
  std::size_t total = 0;
  for (const auto& summand : barcode(xprime)) {
    if (summand.a() == 1) continue;  // projective
    const auto inc = projective_inclusion(summand.a() - 1, summand.b(), x.ambient());
    const auto restricted = restricted_homs(inc, x);
    const std::size_t image_rank =
        as_columns(restricted, coordinate_count(inc.source(), x)).rank();
    total += hom_space_dim(inc.source(), x) - image_rank;
  }
  return total;
}

std::optional<Representation> nonsplit_extension(const Interval& xprime, const Representation& x) {
  const Ambient& ambient = x.ambient();
  ambient.require(xprime);
  if (xprime.a() == 1) return std::nullopt;
  const auto inc = projective_inclusion(xprime.a() - 1, xprime.b(), ambient);
  const auto coords = coordinate_count(inc.source(), x);
  const auto restricted = as_columns(restricted_homs(inc, x), coords);
  const std::size_t base_rank = restricted.rank();

  for (const auto& phi : hom_basis(inc.source(), x)) {
    if (restricted.hconcat(as_columns({phi}, coords)).rank() == base_rank) continue;
    // Pushout: E = (h_b (+) x) / {(inc p, phi p)}.
    const std::vector<Representation> parts{inc.target(), x};
    auto sum = direct_sum(parts, ambient);
    std::vector<F2Matrix> comps;
    for (int i = 1; i <= ambient.n(); ++i) comps.push_back(vconcat(inc.component(i), phi.component(i)));
    return cokernel_rep(RepMorphism(inc.source(), std::move(sum), std::move(comps)));
  }
  return std::nullopt;
}

// --- Subrepresentations ----------------------------------------------------------

RepMorphism yoneda_morphism(const Representation& x, int vertex, const F2Matrix& v) {
  const Ambient& ambient = x.ambient();
  if (v.rows() != x.dim(vertex) || v.cols() != 1) {
    throw ValidationError("yoneda_morphism: vector has the wrong size");
  }
  auto source = module_of(Interval(1, vertex), ambient);
  std::vector<F2Matrix> comps;
  for (int i = 1; i <= ambient.n(); ++i) {
    comps.push_back(i <= vertex ? x.composite(i, vertex) * v : F2Matrix(x.dim(i), 0));
  }
  return RepMorphism(std::move(source), x, std::move(comps));
}

namespace {

// Basis matrices of every subspace of F_2^d.
std::vector<F2Matrix> subspaces(std::size_t d) {
  const std::size_t vectors = std::size_t{1} << d;
  std::vector<F2Matrix> out;
  const std::uint64_t limit = std::uint64_t{1} << vectors;
  for (std::uint64_t set = 1; set < limit; set += 2) {  // must contain 0
    bool closed = true;
    for (std::size_t u = 1; u < vectors && closed; ++u) {
      if (!((set >> u) & 1U)) continue;
      for (std::size_t w = u + 1; w < vectors; ++w) {
        if (((set >> w) & 1U) && !((set >> (u ^ w)) & 1U)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    F2Matrix gens(d, 0);
    for (std::size_t u = 1; u < vectors; ++u) {
      if (!((set >> u) & 1U)) continue;
      F2Matrix col(d, 1);
      for (std::size_t r = 0; r < d; ++r) col.set(r, 0, ((u >> r) & 1U) != 0);
      gens = gens.hconcat(col);
    }
    out.push_back(gens.column_space_basis());
  }
  return out;
}

}  // namespace

std::vector<Subobject> subrepresentations(const Representation& x) {
  const int n = x.n();
  std::map<std::size_t, std::vector<F2Matrix>> by_dim;
  double cases = 1;
  for (int i = 1; i <= n; ++i) {
    if (x.dim(i) > 4) throw CapExceeded("subrepresentations: vertex dimension above 4");
    auto& list = by_dim[x.dim(i)];
    if (list.empty()) list = subspaces(x.dim(i));
    cases *= static_cast<double>(list.size());
  }
  if (cases > 1e6) throw CapExceeded("subrepresentations: search space too large");

  std::vector<Subobject> out;
  std::vector<F2Matrix> chosen(static_cast<std::size_t>(n));
  // Choose U_n first; U_i must contain the image of U_{i+1}.
  auto recurse = [&](auto&& self, int vertex) -> void {
    if (vertex == 0) {
      std::vector<std::size_t> dims;
      for (const auto& u : chosen) dims.push_back(u.cols());
      std::vector<F2Matrix> maps;
      for (int i = 1; i < n; ++i) {
        maps.push_back(solve_or_throw(chosen[static_cast<std::size_t>(i - 1)],
                                      x.map(i) * chosen[static_cast<std::size_t>(i)], "subrep"));
      }
      Representation obj(x.ambient(), std::move(dims), std::move(maps));
      RepMorphism inc(obj, x, chosen);
      out.push_back({std::move(obj), std::move(inc)});
      return;
    }
    for (const auto& u : by_dim[x.dim(vertex)]) {
      if (vertex < n) {
        const auto pushed = x.map(vertex) * chosen[static_cast<std::size_t>(vertex)];
        if (u.hconcat(pushed).rank() != u.cols()) continue;
      }
      chosen[static_cast<std::size_t>(vertex - 1)] = u;
      self(self, vertex - 1);
    }
  };
  recurse(recurse, n);
  return out;
}

Subobject random_subrepresentation(const Representation& x, std::mt19937_64& rng) {
  const Ambient& ambient = x.ambient();
  std::vector<int> support;
  for (int i = 1; i <= x.n(); ++i) {
    if (x.dim(i) > 0) support.push_back(i);
  }
  const std::size_t generators = support.empty() ? 0 : rng() % 3;  // 0, 1 or 2
  std::vector<Representation> sources;
  std::vector<RepMorphism> maps;
  for (std::size_t g = 0; g < generators; ++g) {
    const int vertex = support[rng() % support.size()];
    F2Matrix v(x.dim(vertex), 1);
    for (std::size_t r = 0; r < v.rows(); ++r) v.set(r, 0, (rng() & 1U) != 0);
    maps.push_back(yoneda_morphism(x, vertex, v));
    sources.push_back(maps.back().source());
  }
  auto source = direct_sum(sources, ambient);
  std::vector<F2Matrix> comps;
  for (int i = 1; i <= ambient.n(); ++i) {
    F2Matrix c(x.dim(i), 0);
    for (const auto& m : maps) c = c.hconcat(m.component(i));
    comps.push_back(std::move(c));
  }
  return image(RepMorphism(std::move(source), x, std::move(comps)));
}

}  // namespace ivcat::oracle
