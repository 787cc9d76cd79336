#include <doctest.h>

#include "tfr/complexes.hpp"
#include "tfr/ideal.hpp"

#include <algorithm>
#include <set>

using namespace tfr;

namespace {

IVec iv(std::vector<int> v) { return IVec(v.begin(), v.end()); }

std::vector<IVec> ivs(std::vector<std::vector<int>> v) {
  std::vector<IVec> out;
  for (auto& x : v) out.push_back(iv(x));
  return out;
}

MonoidalComplex ex29() {
  return build_complex(3, ivs({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}}),
                       {{0, 1, 3}, {0, 2}, {1, 2}});
}

MonoidalComplex ex55() {
  return build_complex(4,
                       ivs({{2, 0, 0, 0},
                            {0, 2, 0, 0},
                            {0, 0, 2, 0},
                            {1, 1, 0, 0},
                            {0, 1, 1, 0},
                            {0, 0, 0, 2}}),
                       {{0, 1, 2, 3, 4}, {0, 2, 5}, {1, 5}});
}

MonoidalComplex ex63() {
  return build_complex(3,
                       ivs({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
                       {{0, 1, 5}, {0, 2, 4}, {1, 2, 3}});
}

MonoidalComplex free_monoid(int n) {
  std::vector<IVec> gens;
  std::vector<int> all;
  for (int i = 0; i < n; ++i) {
    IVec e(n, Int(0));
    e[i] = 1;
    gens.push_back(std::move(e));
    all.push_back(i);
  }
  return build_complex(n, std::move(gens), {all});
}

MonoidalComplex two_ray_union() {
  return build_complex(2, ivs({{1, 0}, {0, 1}}), {{0}, {1}});
}

} // namespace

TEST_CASE("build_complex: Ex 2.9") {
  MonoidalComplex cx = ex29();
  CHECK(cx.generator_count() == 4);
  CHECK(cx.facet_count() == 3);
  CHECK(cx.fan().facet_indices().size() == 3);
  CHECK(cx.facet(0).gens == std::vector<int>{0, 1, 3});
  CHECK(cx.facet_degree(0, iv({1, 1, 0})) == Rat(1));
  CHECK(cx.facet_degree(0, iv({2, 0, 0})) == Rat(1));
  CHECK(cx.facet_degree(0, iv({1, 0, 0})) == Rat(1, 2));
}

TEST_CASE("build_complex: free monoid and Ex 5.5") {
  MonoidalComplex f = free_monoid(4);
  CHECK(f.facet_count() == 1);
  CHECK(f.facet(0).gens.size() == 4);

  MonoidalComplex e = ex55();
  CHECK(e.generator_count() == 6);
  CHECK(e.facet_count() == 3);
}

TEST_CASE("build_complex: rejections") {
  // duplicate generator
  CHECK_THROWS_AS(build_complex(2, ivs({{1, 0}, {1, 0}}), {{0, 1}}), GenerationFailureError);
  // a generator covered by no facet
  CHECK_THROWS_AS(build_complex(2, ivs({{1, 0}, {0, 1}}), {{0}}), GenerationFailureError);
  // no degree-1 grading functional: (1,0) and (2,0) on one ray
  CHECK_THROWS_AS(build_complex(2, ivs({{1, 0}, {2, 0}}), {{0, 1}}), NotHomogeneousError);
  // overlapping facet cones
  CHECK_THROWS_AS(build_complex(2, ivs({{1, 0}, {1, 2}, {1, 1}, {0, 1}}), {{0, 1}, {2, 3}}),
                  FanViolationError);
  // a cone containing a line
  CHECK_THROWS_AS(build_complex(2, ivs({{1, 0}, {-1, 0}}), {{0, 1}}), NotPointedError);
}

TEST_CASE("validate: Ex 2.9 passes up to degree 6") {
  ValidationReport rep = validate(ex29(), 6);
  CHECK(rep.ok);
  CHECK(rep.degree_bound == 6);
}

TEST_CASE("validate: single free monoid passes") {
  CHECK(validate(free_monoid(3), 4).ok);
}

TEST_CASE("validate: shared ray with mismatched monoids fails with witness") {
  // facet 1 induces <(2,0)> on the shared x-ray, facet 2 induces <(3,0)>
  MonoidalComplex bad =
      build_complex(2, ivs({{2, 0}, {0, 1}, {3, 0}, {1, -1}}), {{0, 1}, {2, 3}});
  ValidationReport rep = validate(bad, 4);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.witness.has_value());
  CHECK(*rep.witness == iv({2, 0}));
  REQUIRE(rep.facet_pair.has_value());
  CHECK(*rep.facet_pair == std::pair<int, int>{0, 1});
}

TEST_CASE("build_complex rejects gradings that disagree across facets") {
  // (2,0) would have degree 2 in the orthant facet but degree 1 in its own
  CHECK_THROWS_AS(build_complex(2, ivs({{1, 0}, {0, 1}, {2, 0}, {1, -1}}), {{0, 1}, {2, 3}}),
                  NotHomogeneousError);
}

TEST_CASE("nerve: Ex 2.9") {
  NerveComplex nv = nerve(ex29());
  CHECK(nv.facets() == std::vector<std::vector<int>>{{0, 1, 3}, {0, 2}, {1, 2}});
  CHECK(nv.is_face({0, 1}));
  CHECK(nv.is_face({2}));
  CHECK_FALSE(nv.is_face({2, 3}));
  CHECK(nv.minimal_non_faces() == std::vector<std::vector<int>>{{2, 3}, {0, 1, 2}});
  CHECK_FALSE(nv.is_flag());
}

TEST_CASE("nerve: full simplex for one facet") {
  NerveComplex nv = nerve(free_monoid(3));
  CHECK(nv.minimal_non_faces().empty());
  CHECK(nv.is_flag());
}

TEST_CASE("nerve: Ex 6.3 minimal non-faces") {
  NerveComplex nv = nerve(ex63());
  std::vector<std::vector<int>> expected = {{0, 3}, {1, 4}, {2, 5}, {3, 4},
                                            {3, 5}, {4, 5}, {0, 1, 2}};
  CHECK(nv.minimal_non_faces() == expected);
}

TEST_CASE("monoid_membership: spec examples") {
  MonoidalComplex cx = ex29();
  auto w1 = monoid_membership(cx, 0, iv({1, 1, 0}));
  REQUIRE(w1.has_value());
  CHECK(*w1 == std::vector<int>{3});

  CHECK_FALSE(monoid_membership(cx, 0, iv({1, 0, 0})).has_value()); // degree 1/2

  auto w2 = monoid_membership(cx, 0, iv({2, 2, 0}));
  REQUIRE(w2.has_value());
  CHECK(*w2 == std::vector<int>{0, 1}); // A1 + A2; {A4, A4} is the other witness
  IVec sum(3, Int(0));
  for (int j : *w2)
    for (int c = 0; c < 3; ++c) sum[c] += cx.generator(j)[c];
  CHECK(sum == iv({2, 2, 0}));
}

TEST_CASE("facet_elements_of_degree: Ex 2.9 facet 0") {
  MonoidalComplex cx = ex29();
  auto deg1 = facet_elements_of_degree(cx, 0, 1);
  CHECK(deg1.size() == 3);
  auto deg2 = facet_elements_of_degree(cx, 0, 2);
  // multisets of size 2 over 3 generators, with A1+A2 = A4+A4 identified
  CHECK(deg2.size() == 5);
}

TEST_CASE("veronese: spec examples") {
  MonoidalComplex line = free_monoid(1);
  MonoidalComplex v2 = veronese(line, 2);
  CHECK(v2.generator_count() == 1);
  CHECK(v2.generators()[0] == iv({2}));

  MonoidalComplex plane = free_monoid(2);
  MonoidalComplex pv = veronese(plane, 2);
  CHECK(pv.generators() == ivs({{0, 2}, {1, 1}, {2, 0}}));
  // classical quadratic Veronese: one binomial relation
  auto t = toric_ideal(pv.facet_generator_vectors(0));
  REQUIRE(t.generators().size() == 1);
  CHECK(render_ideal(t, TermOrder::grevlex(3)) == "(X2^2 - X1*X3)");

  // veronese(cx, 1) is the same complex with generators in canonical
  // (lexicographic) order
  MonoidalComplex same = veronese(ex29(), 1);
  std::vector<IVec> sorted29 = ex29().generators();
  std::sort(sorted29.begin(), sorted29.end());
  CHECK(same.generators() == sorted29);
  CHECK(same.facet_count() == 3);
  std::set<std::vector<IVec>> facet_vecs_same, facet_vecs_29;
  for (int i = 0; i < 3; ++i) {
    auto a = same.facet_generator_vectors(i);
    auto b = ex29().facet_generator_vectors(i);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    facet_vecs_same.insert(a);
    facet_vecs_29.insert(b);
  }
  CHECK(facet_vecs_same == facet_vecs_29);
}

TEST_CASE("veronese outputs validate at the input bound") {
  CHECK(validate(veronese(ex29(), 2), 4).ok);
  CHECK(validate(veronese(ex55(), 2), 3).ok);
}

TEST_CASE("tensor_join: spec examples") {
  MonoidalComplex ray = free_monoid(1);
  MonoidalComplex j = tensor_join(ray, ray);
  CHECK(j.generator_count() == 2);
  CHECK(j.facet_count() == 1);
  CHECK(j.facet(0).gens.size() == 2); // free N^2

  MonoidalComplex ext = tensor_join(ex29(), ray);
  CHECK(ext.generator_count() == 5);
  CHECK(ext.facet_count() == 3);
  CHECK(validate(ext, 4).ok);
}

TEST_CASE("fiber_union: spec examples") {
  MonoidalComplex u = fiber_union(free_monoid(1), free_monoid(1));
  CHECK(u.generator_count() == 2);
  CHECK(u.facet_count() == 2);
  NerveComplex nv = nerve(u);
  CHECK(nv.minimal_non_faces() == std::vector<std::vector<int>>{{0, 1}});

  MonoidalComplex bigger = fiber_union(ex29(), free_monoid(1));
  CHECK(bigger.generator_count() == 5);
  CHECK(bigger.facet_count() == 4);
  CHECK(validate(bigger, 4).ok);
}

TEST_CASE("segre: spec examples") {
  MonoidalComplex s = segre(free_monoid(2), free_monoid(2));
  CHECK(s.generator_count() == 4);
  CHECK(s.facet_count() == 1);
  auto t = toric_ideal(s.facet_generator_vectors(0));
  REQUIRE(t.generators().size() == 1);
  // X11*X22 - X12*X21 in the pair ordering
  CHECK(render_ideal(t, TermOrder::grevlex(4)) == "(X2*X3 - X1*X4)");

  // Segre with N^1 is the other factor relabeled
  MonoidalComplex id = segre(free_monoid(1), ex29());
  CHECK(id.generator_count() == 4);
  CHECK(id.facet_count() == 3);
  NerveComplex nv = nerve(id);
  CHECK(nv.minimal_non_faces() == nerve(ex29()).minimal_non_faces());
}

TEST_CASE("construction outputs validate") {
  CHECK(validate(tensor_join(two_ray_union(), free_monoid(2)), 4).ok);
  CHECK(validate(fiber_union(two_ray_union(), free_monoid(2)), 4).ok);
  CHECK(validate(segre(free_monoid(2), two_ray_union()), 4).ok);
}

TEST_CASE("restricted_subcomplex: spec examples") {
  MonoidalComplex cx = ex29();
  const Fan& fan = cx.fan();

  int c12 = fan.index_of(cx.facet(0).cone);
  REQUIRE(c12 >= 0);
  auto single = restricted_subcomplex(cx, {c12});
  CHECK(single.is_restricted);
  CHECK(single.complex.facet_count() == 1);
  CHECK(single.generator_map == std::vector<int>{0, 1, 3});

  int ray1 = fan.index_of(Cone::from_rays(3, ivs({{1, 0, 0}})));
  int ray2 = fan.index_of(Cone::from_rays(3, ivs({{0, 1, 0}})));
  REQUIRE(ray1 >= 0);
  REQUIRE(ray2 >= 0);
  auto rays = restricted_subcomplex(cx, {ray1, ray2});
  CHECK_FALSE(rays.is_restricted); // A1, A2 share a cone upstairs but not here
  CHECK(rays.complex.facet_count() == 2);

  std::vector<int> all;
  for (int i = 0; i < int(fan.cones().size()); ++i) all.push_back(i);
  auto full = restricted_subcomplex(cx, all);
  CHECK(full.is_restricted);
  CHECK(full.complex.generator_count() == 4);
}
