#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ivcat/representation.hpp"

using namespace ivcat;
using namespace ivcat::oracle;

namespace {

RepMorphism nonzero_map(const Interval& x, const Interval& y, const Ambient& amb) {
  const auto basis = hom_basis(module_of(x, amb), module_of(y, amb));
  REQUIRE(basis.size() == 1);
  return basis.front();
}

}  // namespace

TEST_CASE("interval modules") {
  const Ambient amb(4);
  const auto m = module_of(Interval(2, 3), amb);
  CHECK(m.dims() == std::vector<std::size_t>{0, 1, 1, 0});
  CHECK(m.map(2) == F2Matrix{{1}});
  CHECK(barcode(m) == Barcode{Interval(2, 3)});
  const auto sum = module_of(make_barcode({Interval(1, 2), Interval(1, 2), Interval(3, 4)}), amb);
  CHECK(sum.total_dim() == 6);
  CHECK(barcode(sum) == make_barcode({Interval(1, 2), Interval(1, 2), Interval(3, 4)}));
  CHECK(barcode(Representation::zero(amb)).empty());
  CHECK_THROWS_AS(Representation(amb, {1, 1}, {}), ValidationError);
  CHECK_THROWS_AS(Representation(amb, {1, 1, 1, 1}, {F2Matrix{{1}}, F2Matrix{{1}}, F2Matrix{{1, 0}}}),
                  ValidationError);
}

TEST_CASE("morphisms validate commutativity") {
  const Ambient amb(2);
  const auto x = module_of(Interval(1, 2), amb);
  const auto y = module_of(Interval(2, 2), amb);
  // [2,2] -> [1,2] nonzero at vertex 2 only: the square at the arrow does not commute
  CHECK_THROWS_AS(RepMorphism(y, x, {F2Matrix(1, 0), F2Matrix{{1}}}), ValidationError);
  CHECK_NOTHROW(RepMorphism(x, y, {F2Matrix(0, 1), F2Matrix{{1}}}));
  CHECK(hom_space_dim(y, x) == 0);
  CHECK(hom_space_dim(x, y) == 1);
  CHECK(hom_space_dim(module_of(Interval(1, 1), amb), x) == 1);
  CHECK(RepMorphism::identity(x).flatten() == std::vector<bool>{true, true});
  CHECK(RepMorphism::zero(x, x).is_zero());
}

TEST_CASE("hom dimensions agree with the interval formula") {
  for (int n = 1; n <= 4; ++n) {
    const Ambient amb(n);
    for (const auto& x : all_intervals(amb))
      for (const auto& y : all_intervals(amb))
        CHECK(hom_space_dim(module_of(x, amb), module_of(y, amb)) ==
              static_cast<std::size_t>(hom_dim(x, y)));
  }
}

TEST_CASE("kernel, image and cokernel of single maps") {
  for (int n = 1; n <= 4; ++n) {
    const Ambient amb(n);
    for (const auto& x : all_intervals(amb))
      for (const auto& y : all_intervals(amb)) {
        if (hom_dim(x, y) == 0) continue;
        const auto f = nonzero_map(x, y, amb);
        CHECK(barcode(cokernel_rep(f)) == cokernel_single(x, y));
        CHECK(barcode(kernel_rep(f)) == kernel_single(x, y));
        CHECK(barcode(image_rep(f)) == Barcode{*image(x, y)});
        const auto q = cokernel(f);
        CHECK(compose(q.projection, f).is_zero());
        const auto k = kernel(f);
        CHECK(compose(f, k.inclusion).is_zero());
      }
  }
}

TEST_CASE("composition of nonzero maps") {
  const Ambient amb(4);
  for (const auto& x : all_intervals(amb))
    for (const auto& y : all_intervals(amb))
      for (const auto& z : all_intervals(amb)) {
        if (hom_dim(x, y) == 0 || hom_dim(y, z) == 0) continue;
        const auto gf = compose(nonzero_map(y, z, amb), nonzero_map(x, y, amb));
        CHECK(!gf.is_zero() == compose_nonzero(x, y, z));
      }
}

TEST_CASE("extensions agree with the oracle") {
  for (int n = 1; n <= 4; ++n) {
    const Ambient amb(n);
    for (const auto& xp : all_intervals(amb))
      for (const auto& x : all_intervals(amb)) {
        const auto dim = ext_dim(module_of(xp, amb), module_of(x, amb));
        const auto middle = ext_middle(xp, x);
        CHECK(dim == (middle ? 1U : 0U));
        const auto e = nonsplit_extension(xp, module_of(x, amb));
        CHECK(e.has_value() == middle.has_value());
        if (middle && e) {
          Barcode expected{middle->first};
          if (middle->second) expected.push_back(*middle->second);
          CHECK(barcode(*e) == make_barcode(expected));
        }
      }
  }
}

TEST_CASE("subrepresentations of interval modules are the subobjects") {
  for (int n = 1; n <= 4; ++n) {
    const Ambient amb(n);
    for (const auto& x : all_intervals(amb)) {
      const auto m = module_of(x, amb);
      std::set<Barcode> subs;
      std::set<Barcode> quots;
      for (const auto& s : subrepresentations(m)) {
        subs.insert(barcode(s.object));
        quots.insert(barcode(cokernel_rep(s.inclusion)));
      }
      std::set<Barcode> expected_subs{Barcode{}};
      for (const auto& s : subobjects(x)) expected_subs.insert(Barcode{s});
      std::set<Barcode> expected_quots{Barcode{}};
      for (const auto& q : quotients(x)) expected_quots.insert(Barcode{q});
      CHECK(subs == expected_subs);
      CHECK(quots == expected_quots);
    }
  }
}

TEST_CASE("subrepresentations of a sum") {
  const Ambient amb(2);
  const auto m = module_of(make_barcode({Interval(1, 1), Interval(1, 2)}), amb);
  // subspaces U1 of F_2^2 containing the image of U2 in {0, F_2}
  const auto subs = subrepresentations(m);
  CHECK(subs.size() == 7);
  for (const auto& s : subs) CHECK(barcode(s.object).size() <= 2);
}

TEST_CASE("random morphisms and subrepresentations stay well formed") {
  std::mt19937_64 rng(3);
  const Ambient amb(4);
  const auto x = module_of(make_barcode({Interval(1, 3), Interval(2, 2)}), amb);
  const auto y = module_of(make_barcode({Interval(2, 4), Interval(1, 3)}), amb);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_morphism(x, y, rng);
    const auto q = cokernel(f);
    const auto k = kernel(f);
    CHECK(comp_length(barcode(k.object)) + comp_length(barcode(y)) ==
          comp_length(barcode(x)) + comp_length(barcode(q.object)));
    const auto s = random_subrepresentation(y, rng);
    CHECK(s.inclusion.target().dims() == y.dims());
  }
}

TEST_CASE("yoneda morphisms") {
  const Ambient amb(3);
  const auto x = module_of(Interval(2, 3), amb);
  const auto f = yoneda_morphism(x, 3, F2Matrix{{1}});
  CHECK(barcode(f.source()) == Barcode{Interval(1, 3)});
  CHECK(barcode(image_rep(f)) == Barcode{Interval(2, 3)});
}
