#include <doctest.h>

#include "tfr/ideal.hpp"

#include <algorithm>
#include <random>

using namespace tfr;

namespace {

// Readable builders for fixed variable counts.
Expo ex(std::vector<int> e) { return e; }

IdealElement mono(std::vector<int> e) { return IdealElement(ex(std::move(e))); }
IdealElement bino(std::vector<int> a, std::vector<int> b) {
  return IdealElement(ex(std::move(a)), ex(std::move(b)));
}

std::vector<std::vector<Int>> ivecs(std::vector<std::vector<int>> v) {
  std::vector<std::vector<Int>> out;
  for (auto& x : v) out.emplace_back(x.begin(), x.end());
  return out;
}

// Ex 2.9 presentation ideal I = (X1X2 - X4^2, X3X4) in 4 variables.
PresentedIdeal ex29_ideal() {
  return PresentedIdeal(4, {bino({1, 1, 0, 0}, {0, 0, 0, 2}), mono({0, 0, 1, 1})});
}

// Ex 6.3 presentation ideal in 6 variables.
PresentedIdeal ex63_ideal() {
  return PresentedIdeal(6, {
    bino({1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 2}), // X1X2 - X6^2
    bino({0, 1, 1, 0, 0, 0}, {0, 0, 0, 2, 0, 0}), // X2X3 - X4^2
    bino({1, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 2, 0}), // X3X1 - X5^2
    mono({1, 0, 0, 1, 0, 0}),                     // X1X4
    mono({0, 1, 0, 0, 1, 0}),                     // X2X5
    mono({0, 0, 1, 0, 0, 1}),                     // X3X6
    mono({0, 0, 0, 1, 1, 0}),                     // X4X5
    mono({0, 0, 0, 1, 0, 1}),                     // X4X6
    mono({0, 0, 0, 0, 1, 1}),                     // X5X6
  });
}

PresentedIdeal with_vars(const PresentedIdeal& ideal, std::vector<int> vars) {
  std::vector<IdealElement> gens = ideal.generators();
  for (int v : vars) {
    Expo e(ideal.nvars(), 0);
    e[v] = 1;
    gens.push_back(IdealElement(std::move(e)));
  }
  return PresentedIdeal(ideal.nvars(), std::move(gens));
}

} // namespace

TEST_CASE("term orders: basic comparisons") {
  TermOrder lex = TermOrder::lex(4);
  TermOrder grevlex = TermOrder::grevlex(4);
  Expo x1x2 = {1, 1, 0, 0}, x4sq = {0, 0, 0, 2}, x3x4 = {0, 0, 1, 1};
  CHECK(lex.greater(x1x2, x4sq));
  CHECK(grevlex.greater(x1x2, x4sq));
  CHECK(grevlex.greater(x1x2, x3x4));
  CHECK(lex.compare(x1x2, x1x2) == 0);
  // degree dominates in grevlex
  CHECK(grevlex.greater(ex({0, 0, 0, 3}), x1x2));
  // lex with permuted sequence X4 > X3 > X2 > X1
  TermOrder lexr = TermOrder::lex(4, {3, 2, 1, 0});
  CHECK(lexr.greater(x4sq, x1x2));
}

TEST_CASE("term orders: restriction to a subring keeps relative comparisons") {
  TermOrder g = TermOrder::grevlex(5);
  TermOrder r = g.restricted({0, 2, 4}); // X1, X3, X5 -> local Y1, Y2, Y3
  CHECK(r.nvars() == 3);
  Expo a = {1, 0, 1}, b = {0, 2, 0}; // Y1Y3 vs Y2^2  <->  X1X5 vs X3^2
  CHECK(r.compare(a, b) == g.compare(ex({1, 0, 0, 0, 1}), ex({0, 0, 2, 0, 0})));
}

TEST_CASE("IdealElement validation") {
  CHECK_THROWS_AS(bino({1, 0}, {1, 0}), UnsupportedGeneratorError);
  CHECK_THROWS_AS(IdealElement(Expo{-1, 0}), UnsupportedGeneratorError);
  CHECK_NOTHROW(bino({1, 0}, {0, 0})); // X1 - 1 is a pure difference
}

TEST_CASE("buchberger: Ex 2.9 generators are already a reduced GB (lex)") {
  auto gb = ex29_ideal().groebner(TermOrder::lex(4));
  REQUIRE(gb.elements().size() == 2);
  CHECK(render_basis(gb) == "(X1*X2 - X4^2, X3*X4)");
  CHECK(gb.max_degree() == 2);
}

TEST_CASE("buchberger: Ex 5.5 facet ideal is a GB under grevlex") {
  PresentedIdeal i1(5, {bino({1, 1, 0, 0, 0}, {0, 0, 0, 2, 0}),
                        bino({0, 1, 1, 0, 0}, {0, 0, 0, 0, 2})});
  auto gb = i1.groebner(TermOrder::grevlex(5, {4, 3, 2, 1, 0}));
  // the paper's revlex with X1 < ... < X5: the two quadrics form a GB
  CHECK(gb.elements().size() == 2);
  CHECK(gb.max_degree() == 2);
}

TEST_CASE("buchberger: monomial ideal reduces to minimal generators") {
  PresentedIdeal m(3, {mono({2, 0, 0}), mono({2, 1, 0}), mono({0, 1, 1}), mono({1, 1, 1})});
  auto gb = m.groebner(TermOrder::grevlex(3));
  REQUIRE(gb.elements().size() == 2);
  CHECK(render_basis(gb) == "(X1^2, X2*X3)");
}

TEST_CASE("normal_form: spec examples") {
  PresentedIdeal q(4, {bino({1, 1, 0, 0}, {0, 0, 0, 2})});
  auto gb = q.groebner(TermOrder::lex(4));
  auto nf = normal_form_monomial(ex({1, 1, 0, 0}), gb);
  REQUIRE(nf.has_value());
  CHECK(*nf == ex({0, 0, 0, 2}));

  auto zero_gb = PresentedIdeal::zero(4).groebner(TermOrder::lex(4));
  CHECK(*normal_form_monomial(ex({3, 1, 2, 0}), zero_gb) == ex({3, 1, 2, 0}));

  auto full = ex29_ideal().groebner(TermOrder::lex(4));
  CHECK_FALSE(normal_form_monomial(ex({0, 0, 1, 1}), full).has_value()); // X3X4 -> 0
}

TEST_CASE("reduced GB is independent of generator order") {
  std::mt19937 rng(7);
  PresentedIdeal base = ex63_ideal();
  auto reference = base.groebner(TermOrder::grevlex(6)).elements();
  std::vector<IdealElement> gens = base.generators();
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    auto gb = buchberger(6, gens, TermOrder::grevlex(6));
    CHECK(gb.elements() == reference);
  }
}

TEST_CASE("toric_ideal: spec examples") {
  // Ex 2.9 facet {A1, A2, A4}
  auto t = toric_ideal(ivecs({{2, 0, 0}, {0, 2, 0}, {1, 1, 0}}));
  CHECK(render_ideal(t, TermOrder::lex(3)) == "(X1*X2 - X3^2)");

  auto z = toric_ideal(ivecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(z.generators().empty());

  // Ex 5.5 five points
  auto f = toric_ideal(ivecs({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}}));
  auto gb = f.groebner(TermOrder::grevlex(5));
  PresentedIdeal expected(5, {bino({1, 1, 0, 0, 0}, {0, 0, 0, 2, 0}),
                              bino({0, 1, 1, 0, 0}, {0, 0, 0, 0, 2})});
  CHECK(ideal_equal(f, expected, TermOrder::grevlex(5)));
}

TEST_CASE("toric homogeneity: binomials preserve lattice image and degree") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick(0, 5);
  std::vector<std::vector<int>> pool = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  for (int trial = 0; trial < 20; ++trial) {
    std::set<int> chosen;
    while (chosen.size() < 4) chosen.insert(pick(rng));
    std::vector<std::vector<int>> gens;
    for (int i : chosen) gens.push_back(pool[i]);
    auto t = toric_ideal(ivecs(gens));
    for (const auto& e : t.generators()) {
      REQUIRE_FALSE(e.is_monomial());
      CHECK(degree(e.a()) == degree(e.b()));
      for (int coord = 0; coord < 3; ++coord) {
        long la = 0, lb = 0;
        for (size_t i = 0; i < gens.size(); ++i) {
          la += long(e.a()[i]) * gens[i][coord];
          lb += long(e.b()[i]) * gens[i][coord];
        }
        CHECK(la == lb);
      }
    }
  }
}

TEST_CASE("saturate: spec examples") {
  // (x^2) : x^inf = (1)
  PresentedIdeal xsq(1, {mono({2})});
  auto s1 = saturate(xsq, ex({1}));
  CHECK(render_ideal(s1, TermOrder::lex(1)) == "(1)");

  // (xy) : x^inf = (y)
  PresentedIdeal xy(2, {mono({1, 1})});
  auto s2 = saturate(xy, ex({1, 0}));
  CHECK(render_ideal(s2, TermOrder::lex(2)) == "(X2)");

  // lattice ideal of {(1,1,-2)} is already saturated
  PresentedIdeal lat(3, {bino({1, 1, 0}, {0, 0, 2})});
  auto s3 = saturate(lat, ex({1, 1, 1}));
  CHECK(ideal_equal(s3, lat, TermOrder::grevlex(3)));
}

TEST_CASE("colon: polynomial ring and Ex 6.3 annihilator identities") {
  // (X1) : X2 = (X1)
  PresentedIdeal x1(2, {mono({1, 0})});
  CHECK(ideal_equal(colon_by_var(x1, 1), x1, TermOrder::grevlex(2)));

  PresentedIdeal i63 = ex63_ideal();
  TermOrder g6 = TermOrder::grevlex(6);
  // 0 : X1 = (X4) in the quotient ring, i.e. colon(I, X1) = I + (X4)
  CHECK(ideal_equal(colon_by_var(i63, 0), with_vars(i63, {3}), g6));
  // 0 : X4 = (X1, X5, X6)
  CHECK(ideal_equal(colon_by_var(i63, 3), with_vars(i63, {0, 4, 5}), g6));
}

TEST_CASE("ideal_equal: spec examples") {
  TermOrder g4 = TermOrder::grevlex(4);
  PresentedIdeal a(4, {bino({1, 1, 0, 0}, {0, 0, 0, 2}), mono({0, 0, 1, 1})});
  PresentedIdeal b(4, {mono({0, 0, 1, 1}), bino({1, 1, 0, 0}, {0, 0, 0, 2})});
  CHECK(ideal_equal(a, b, g4));
  PresentedIdeal x(1, {mono({1})}), x2(1, {mono({2})});
  CHECK_FALSE(ideal_equal(x, x2, TermOrder::grevlex(1)));
}

TEST_CASE("initial_ideal: spec examples") {
  auto ini = initial_ideal(ex29_ideal(), TermOrder::lex(4));
  CHECK(render_ideal(ini, TermOrder::lex(4)) == "(X1*X2, X3*X4)");

  auto z = initial_ideal(PresentedIdeal::zero(2), TermOrder::lex(2));
  CHECK(z.generators().empty());

  PresentedIdeal m(2, {mono({1, 0}), mono({0, 2})});
  CHECK(ideal_equal(initial_ideal(m, TermOrder::lex(2)), m, TermOrder::lex(2)));
}

TEST_CASE("structural closure: GB of monomial/binomial input stays monomial/binomial") {
  // The GBElement representation cannot hold anything else; check that a
  // saturation-heavy computation still produces sensible pure elements.
  auto t = toric_ideal(ivecs({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
  auto gb = t.groebner(TermOrder::grevlex(4));
  CHECK(gb.elements().size() >= 3);
  for (const auto& e : gb.elements()) {
    if (e.tail) {
      CHECK(degree(e.lead) == degree(*e.tail));
      CHECK(e.lead != *e.tail);
    }
  }
}

TEST_CASE("normal form is a proper remainder: no lead divides any term") {
  PresentedIdeal i63 = ex63_ideal();
  auto gb = i63.groebner(TermOrder::grevlex(6));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    Expo m(6);
    for (int i = 0; i < 6; ++i) m[i] = e(rng);
    auto nf = normal_form(IdealElement(m), gb);
    if (!nf) continue;
    for (const auto& g : gb.elements()) {
      CHECK_FALSE(divides(g.lead, nf->a()));
      if (!nf->is_monomial()) CHECK_FALSE(divides(g.lead, nf->b()));
    }
  }
}
