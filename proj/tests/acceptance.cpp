// Acceptance checks 1-8.  Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ivcat/closure.hpp"
#include "ivcat/enumerator.hpp"
#include "ivcat/poset.hpp"
#include "ivcat/representation.hpp"

using namespace ivcat;
using namespace ivcat::oracle;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

// --- 1 ----------------------------------------------------------------------

Outcome sequence_regression() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<std::uint64_t>>> expected{
      {"QSE", {2, 4, 8, 16, 32, 64}},
      {"CKE", {2, 5, 14, 42, 132, 429}},
      {"QE", {2, 5, 14, 42, 132, 429}},
      {"QS", {2, 5, 14, 42, 132, 429}},
      {"Q", {2, 6, 24, 120, 720, 5040}},
      {"E", {2, 7, 34, 199, 1308, 9300}},
      {"CK", {2, 6, 22, 86, 345, 1411}},
      {"C", {2, 7, 37, 261, 2284, 23777}},
  };
  for (const auto& [ops, values] : expected) {
    const auto spec = ClosureSpec::parse(ops);
    std::vector<std::uint64_t> got;
    for (int n = 1; n <= 6; ++n) got.push_back(count_next_closure(Ambient(n), spec));
    o.require(got == values, spec.sequence_name() + " computed " + join(got) + ", expected " + join(values));
  }
  return o;
}

// --- 2 ----------------------------------------------------------------------

Outcome formula_checks() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const auto count = count_next_closure(Ambient(n), ClosureSpec());
    o.require(count == (std::uint64_t{1} << (n * (n + 1) / 2)),
              "#(∅) n=" + std::to_string(n) + " = " + std::to_string(count));
  }
  o.require(count_next_closure(Ambient(6), ClosureSpec()) == 2097152, "#(∅) n=6 != 2097152");
  for (const auto& spec : ClosureSpec::all())
    for (int n = 1; n <= 6; ++n) {
      const auto ref = reference_sequence(spec, n);
      if (!ref) continue;
      const auto count = count_next_closure(Ambient(n), spec);
      o.require(BigInt(count) == *ref, spec.sequence_name() + " n=" + std::to_string(n) + ": " +
                                           std::to_string(count) + " vs reference " + ref->str());
    }
  return o;
}

// --- 3 ----------------------------------------------------------------------

Outcome algorithm_cross_validation() {
  Outcome o;
  for (const auto& spec : ClosureSpec::all())
    for (int n = 1; n <= 4; ++n) {
      const Ambient amb(n);
      const auto brute = count_brute(amb, spec);
      const auto nc = count_next_closure(amb, spec);
      std::string tag = spec.sequence_name() + " n=" + std::to_string(n);
      o.require(brute == nc, tag + ": brute " + std::to_string(brute) + " vs next-closure " + std::to_string(nc));
      for (unsigned k : {1U, 2U, 4U}) {
        const auto sc = shard_count(amb, spec, k);
        o.require(sc == brute, tag + ": shard(" + std::to_string(k) + ") " + std::to_string(sc));
      }
    }
  return o;
}

// --- 4 ----------------------------------------------------------------------

F2Matrix vstack(const F2Matrix& top, const F2Matrix& bottom) {
  return top.transpose().hconcat(bottom.transpose()).transpose();
}

RepMorphism single_map(const Interval& x, const Interval& y, const Ambient& amb) {
  return hom_basis(module_of(x, amb), module_of(y, amb)).front();
}

// x -> y1 (+) y2 with both components nonzero.
RepMorphism map_into_pair(const Interval& x, const Interval& y1, const Interval& y2, const Ambient& amb) {
  const auto f1 = single_map(x, y1, amb);
  const auto f2 = single_map(x, y2, amb);
  const std::vector<Representation> parts{module_of(y1, amb), module_of(y2, amb)};
  const auto target = direct_sum(parts, amb);
  std::vector<F2Matrix> comps;
  for (int v = 1; v <= amb.n(); ++v) comps.push_back(vstack(f1.component(v), f2.component(v)));
  return RepMorphism(module_of(x, amb), target, comps);
}

// y1 (+) y2 -> x with both components nonzero.
RepMorphism map_from_pair(const Interval& y1, const Interval& y2, const Interval& x, const Ambient& amb) {
  const auto g1 = single_map(y1, x, amb);
  const auto g2 = single_map(y2, x, amb);
  const std::vector<Representation> parts{module_of(y1, amb), module_of(y2, amb)};
  const auto source = direct_sum(parts, amb);
  std::vector<F2Matrix> comps;
  for (int v = 1; v <= amb.n(); ++v) comps.push_back(g1.component(v).hconcat(g2.component(v)));
  return RepMorphism(source, module_of(x, amb), comps);
}

Outcome oracle_equivalence() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const Ambient amb(n);
    const auto all = all_intervals(amb);
    const std::string at = " (n=" + std::to_string(n) + ")";
    for (const auto& x : all) {
      const auto mx = module_of(x, amb);
      // quotients and subobjects
      std::set<Barcode> subs;
      std::set<Barcode> quots;
      for (const auto& s : subrepresentations(mx)) {
        subs.insert(barcode(s.object));
        quots.insert(barcode(cokernel_rep(s.inclusion)));
      }
      std::set<Barcode> want_subs{Barcode{}};
      std::set<Barcode> want_quots{Barcode{}};
      for (const auto& s : subobjects(x)) want_subs.insert(Barcode{s});
      for (const auto& q : quotients(x)) want_quots.insert(Barcode{q});
      o.require(subs == want_subs, "subobjects of [" + x.to_string() + "]" + at);
      o.require(quots == want_quots, "quotients of [" + x.to_string() + "]" + at);

      for (const auto& y : all) {
        const auto my = module_of(y, amb);
        const std::string pair = "[" + x.to_string() + "],[" + y.to_string() + "]" + at;
        o.require(hom_space_dim(mx, my) == static_cast<std::size_t>(hom_dim(x, y)), "hom " + pair);
        const auto ext = ext_dim(mx, my);
        o.require(ext <= 1 && (ext == 1) == ext_middle(x, y).has_value(), "ext " + pair);
        if (const auto middle = ext_middle(x, y)) {
          Barcode want{middle->first};
          if (middle->second) want.push_back(*middle->second);
          const auto e = nonsplit_extension(x, my);
          o.require(e && barcode(*e) == make_barcode(want), "extension middle " + pair);
        }
        if (hom_dim(x, y) == 0) continue;
        const auto f = single_map(x, y, amb);
        o.require(barcode(cokernel_rep(f)) == cokernel_single(x, y), "cokernel " + pair);
        o.require(barcode(kernel_rep(f)) == kernel_single(x, y), "kernel " + pair);
        for (const auto& y2 : all) {
          if (hom_dim(x, y2) == 1) {
            const auto g = map_into_pair(x, y, y2, amb);
            o.require(barcode(cokernel_rep(g)) == cokernel_pair(x, y, y2),
                      "cokernel pair " + pair + " [" + y2.to_string() + "]");
          }
          // x (+) y2 -> y
          if (hom_dim(y2, y) == 1) {
            const auto h = map_from_pair(x, y2, y, amb);
            o.require(barcode(kernel_rep(h)) == kernel_pair(x, y2, y),
                      "kernel pair " + pair + " [" + y2.to_string() + "]");
          }
        }
      }
    }
  }

  std::mt19937_64 rng(20240601);
  for (int n = 1; n <= 6; ++n) {
    const Ambient amb(n);
    const auto all = all_intervals(amb);
    const RuleTable table(amb, ClosureSpec::parse("C"));
    for (int trial = 0; trial < 1000; ++trial) {
      Barcode src;
      Barcode tgt;
      const auto ns = 1 + rng() % 3;
      const auto nt = 1 + rng() % 3;
      for (std::size_t i = 0; i < ns; ++i) src.push_back(all[rng() % all.size()]);
      for (std::size_t i = 0; i < nt; ++i) tgt.push_back(all[rng() % all.size()]);
      src = make_barcode(src);
      tgt = make_barcode(tgt);
      IntervalSet supports(amb, src);
      for (const auto& y : tgt) supports.insert(y);
      const auto closed = table.closure(supports);
      const auto f = random_morphism(module_of(src, amb), module_of(tgt, amb), rng);
      const auto coker = barcode(cokernel_rep(f));
      o.require(closed.contains_all(coker), "random cokernel " + to_string(coker) + " of " + to_string(src) +
                                                " -> " + to_string(tgt) + " (n=" + std::to_string(n) + ")");
    }
  }
  return o;
}

// --- 5 ----------------------------------------------------------------------

Outcome closure_laws() {
  Outcome o;
  std::mt19937_64 rng(77);
  const auto specs = ClosureSpec::all();
  std::map<std::pair<int, std::uint8_t>, RuleTable> tables;
  for (int n = 1; n <= 6; ++n)
    for (const auto& spec : specs) tables.emplace(std::pair{n, spec.bits()}, RuleTable(Ambient(n), spec));
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto spec = specs[rng() % specs.size()];
    const auto& table = tables.at({n, spec.bits()});
    const Mask universe = IntervalSet::universe_mask(Ambient(n));
    // sparse and dense sets both occur
    const Mask a = rng() & rng() & universe;
    const Mask b = a | (rng() & universe);
    const Mask ca = table.close(a);
    const Mask cb = table.close(b);
    const std::string tag = spec.sequence_name() + " n=" + std::to_string(n) + " mask=" + std::to_string(a);
    o.require((ca & a) == a, "not extensive: " + tag);
    o.require(table.close(ca) == ca, "not idempotent: " + tag);
    o.require((cb & ca) == ca, "not monotone: " + tag);
    o.require(table.is_closed(ca), "closure not closed: " + tag);
  }
  for (int n = 1; n <= 3; ++n)
    for (const auto& spec : specs) {
      const RuleTable table(Ambient(n), spec);
      std::vector<Mask> closed;
      for_each_closed(table, [&](Mask m) { closed.push_back(m); });
      for (const auto a : closed)
        for (const auto b : closed)
          o.require(table.is_closed(a & b), "intersection not closed: " + spec.sequence_name() +
                                                " n=" + std::to_string(n));
    }
  return o;
}

// --- 6 ----------------------------------------------------------------------

Outcome duality() {
  Outcome o;
  std::uint64_t factorial = 1;
  for (int n = 1; n <= 5; ++n) {
    factorial *= static_cast<std::uint64_t>(n + 1);
    const Ambient amb(n);
    for (const auto& spec : ClosureSpec::all()) {
      const auto a = count_next_closure(amb, spec);
      const auto b = count_next_closure(amb, spec.dual());
      o.require(a == b, spec.sequence_name() + " vs " + spec.dual().sequence_name() + " n=" + std::to_string(n));
    }
    o.require(count_next_closure(amb, ClosureSpec::parse("S")) == factorial, "#(S) != (n+1)!");
    o.require(count_next_closure(amb, ClosureSpec::parse("K")) == count_next_closure(amb, ClosureSpec::parse("C")),
              "#(K) != #(C)");
  }
  return o;
}

// --- 7 ----------------------------------------------------------------------

Outcome poset_suite() {
  using namespace ivcat::poset;
  Outcome o;
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t size = 1 + rng() % 8;
    const double density = 0.1 + 0.1 * static_cast<double>(rng() % 6);
    const auto p = FinitePoset::random(size, density, rng);
    const std::string tag = "random poset " + std::to_string(trial);
    for (std::size_t x = 0; x < p.size(); ++x) {
      const auto below = ideals(p.restrict_to(p.down(x))).size();
      o.require(subfunctor_count(p, x) == below, tag + ": subfunctors of element " + std::to_string(x));
    }
    const auto lattice = ideals(p);
    o.require(is_distributive(lattice), tag + ": ideal lattice not distributive");
    o.require(is_distributive(FiniteLattice::from_ideals(lattice)), tag + ": meet/join tables not distributive");
    o.require(coherent_check(p), tag + ": coherent_check");
    o.require(compact_meet_check(p), tag + ": compact_meet_check");
  }
  for (int n = 1; n <= 6; ++n) o.require(chain_equivalence_check(n), "chain check n=" + std::to_string(n));

  // Every order on {0..k-1} refining the natural order, k <= 5: all isomorphism types occur.
  for (std::size_t k = 1; k <= 5; ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    std::set<std::vector<ElementSet>> seen;
    for (std::uint32_t bits = 0; bits < (1U << pairs.size()); ++bits) {
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((bits >> e) & 1U) rel.push_back(pairs[e]);
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
      const FinitePoset p(labels, rel);
      std::vector<ElementSet> key;
      for (std::size_t x = 0; x < k; ++x) key.push_back(p.down(x));
      if (!seen.insert(key).second) continue;
      const IncidenceAlgebra algebra(p);
      o.require(algebra.is_associative(), "incidence algebra not associative, |P|=" + std::to_string(k));
      o.require(algebra.has_two_sided_identity(), "incidence algebra without identity, |P|=" + std::to_string(k));
      o.require(coherent_check(p) && compact_meet_check(p), "coherence on small poset, |P|=" + std::to_string(k));
    }
  }
  return o;
}

// --- 8 ----------------------------------------------------------------------

Outcome length_bookkeeping() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const Ambient amb(n);
    for (const auto& x : all_intervals(amb)) {
      o.require(comp_length(x) == x.b() - x.a() + 1, "comp_length [" + x.to_string() + "]");
      o.require(module_of(x, amb).total_dim() == static_cast<std::size_t>(comp_length(x)),
                "dimension of [" + x.to_string() + "]");
      for (const auto& y : all_intervals(amb)) {
        if (hom_dim(x, y) == 0) continue;
        const auto ker = kernel_single(x, y);
        const auto coker = cokernel_single(x, y);
        const std::string tag = "[" + x.to_string() + "] -> [" + y.to_string() + "]";
        o.require(comp_length(ker) + comp_length(y) == comp_length(x) + comp_length(coker), tag);
        const auto f = single_map(x, y, amb);
        o.require(comp_length(barcode(kernel_rep(f))) + comp_length(y) ==
                      comp_length(x) + comp_length(barcode(cokernel_rep(f))),
                  "oracle " + tag);
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 sequence regression", sequence_regression},
      {"2 formula checks", formula_checks},
      {"3 algorithm cross-validation", algorithm_cross_validation},
      {"4 oracle equivalence", oracle_equivalence},
      {"5 closure-operator laws", closure_laws},
      {"6 duality", duality},
      {"7 poset suite", poset_suite},
      {"8 length bookkeeping", length_bookkeeping},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const auto outcome = run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s (%zu checks, %.2fs)\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.checks, seconds);
    for (const auto& note : outcome.notes) std::printf("    %s\n", note.c_str());
    if (!outcome.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
