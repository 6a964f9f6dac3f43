#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "qsub/abelian.hpp"

using qsub::abstract_decomposition;
using qsub::annihilator;
using qsub::CapExceeded;
using qsub::dual;
using qsub::Element;
using qsub::elements;
using qsub::FinAbGroup;
using qsub::Hom;
using qsub::homs;
using qsub::pairing;
using qsub::Subgroup;
using qsub::subgroups;

namespace {

using Coords = std::vector<long>;

// independent closure oracle on raw coordinate vectors
Coords mod_add(const Coords& a, const Coords& b, const std::vector<long>& m) {
  Coords r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % m[i];
  return r;
}

std::set<Coords> close_oracle(std::set<Coords> gens,
                              const std::vector<long>& m) {
  std::set<Coords> out{Coords(m.size(), 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<Coords> next = out;
    for (const Coords& x : out)
      for (const Coords& g : gens)
        if (next.insert(mod_add(x, g, m)).second) grew = true;
    out = std::move(next);
  }
  return out;
}

// every subgroup of G as a member set, by exhaustive closure
std::set<std::set<Coords>> subgroups_oracle(const FinAbGroup& G) {
  std::vector<Coords> all;
  for (const Element& x : elements(G)) all.push_back(x.coords);
  const std::vector<long>& m = G.factors();
  std::set<std::set<Coords>> found{close_oracle({}, m)};
  std::vector<std::set<Coords>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::set<Coords>> next;
    for (const std::set<Coords>& S : frontier)
      for (const Coords& g : all) {
        if (S.count(g)) continue;
        std::set<Coords> gens(S.begin(), S.end());
        gens.insert(g);
        std::set<Coords> T = close_oracle(gens, m);
        if (found.insert(T).second) next.push_back(T);
      }
    frontier = std::move(next);
  }
  return found;
}

}  // namespace

TEST_CASE("group validation and basic data") {
  CHECK_THROWS_AS(FinAbGroup({1}), std::domain_error);
  CHECK_THROWS_AS(FinAbGroup({2, 3}), std::domain_error);
  CHECK_THROWS_AS(FinAbGroup({4, 2}), std::domain_error);
  CHECK(FinAbGroup({2, 4}).order() == 8);
  CHECK(FinAbGroup::trivial().order() == 1);
  CHECK(FinAbGroup::trivial().exponent() == 1);
  CHECK(FinAbGroup({3, 3}).exponent() == 3);
  CHECK(FinAbGroup::torus(3, 2) == FinAbGroup({3, 3}));
}

TEST_CASE("element arithmetic") {
  FinAbGroup g({2, 4});
  Element x(g, {1, 3}), y(g, {1, 2});
  CHECK((x + y).coords == Coords{0, 1});
  CHECK((x - y).coords == Coords{0, 1});
  CHECK((x * 2).coords == Coords{0, 2});
  CHECK((-x).coords == Coords{1, 1});
  CHECK(Element(g, {3, -1}).coords == Coords{1, 3});
  CHECK(x.order() == 4);
  CHECK(Element(g, {1, 0}).order() == 2);
  CHECK(Element::zero(g).order() == 1);
  CHECK_THROWS_AS(Element(g, {1}), std::invalid_argument);
  CHECK_THROWS_AS(x + Element(FinAbGroup({2}), {1}), std::invalid_argument);
}

TEST_CASE("element enumeration") {
  CHECK(elements(FinAbGroup::trivial()).size() == 1);
  CHECK(elements(FinAbGroup({3})).size() == 3);
  auto e9 = elements(FinAbGroup({3, 3}));
  REQUIRE(e9.size() == 9);
  CHECK(e9[0].coords == Coords{0, 0});
  CHECK(e9[1].coords == Coords{0, 1});
  CHECK(e9[3].coords == Coords{1, 0});
  CHECK(std::is_sorted(e9.begin(), e9.end()));

  try {
    elements(FinAbGroup({100, 100, 100}), 1000);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.axis == "enum");
  }
}

TEST_CASE("subgroup canonical form and membership") {
  FinAbGroup g({3, 3});
  Subgroup full1(g, {Element(g, {1, 0}), Element(g, {0, 1})});
  Subgroup full2(g, {Element(g, {1, 1}), Element(g, {1, 2})});
  CHECK(full1 == full2);
  CHECK(full1.order() == 9);

  Subgroup diag1(g, {Element(g, {1, 1})});
  Subgroup diag2(g, {Element(g, {2, 2})});
  CHECK(diag1 == diag2);
  CHECK(diag1.order() == 3);
  CHECK_FALSE(diag1 == full1);
  CHECK(diag1.contains(Element(g, {2, 2})));
  CHECK_FALSE(diag1.contains(Element(g, {1, 2})));
  CHECK(diag1.members() ==
        std::vector<Coords>{{0, 0}, {1, 1}, {2, 2}});

  Subgroup trivial(g, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.members() == std::vector<Coords>{{0, 0}});
}

TEST_CASE("subgroup enumeration counts") {
  CHECK(subgroups(FinAbGroup({3})).size() == 2);
  // 6 = trivial + four lines + full; matches the closure oracle below
  CHECK(subgroups(FinAbGroup({3, 3})).size() == 6);
  // 28 = 2 + 2*(9+3+1) subspaces of a rank-3 space over F_3
  CHECK(subgroups(FinAbGroup({3, 3, 3})).size() == 28);
  CHECK(subgroups(FinAbGroup({4})).size() == 3);
  CHECK(subgroups(FinAbGroup({2, 4})).size() == 8);
  CHECK(subgroups(FinAbGroup({12})).size() == 6);
}

TEST_CASE("subgroup enumeration matches the exhaustive closure oracle") {
  for (const FinAbGroup& g :
       {FinAbGroup({3, 3}), FinAbGroup({3, 3, 3}), FinAbGroup({2, 4}),
        FinAbGroup({2, 2, 2}), FinAbGroup({12}),
        FinAbGroup({3, 3, 3, 3})}) {
    auto got = subgroups(g);
    auto expect = subgroups_oracle(g);
    REQUIRE(got.size() == expect.size());
    for (const Subgroup& S : got) {
      std::set<Coords> mem(S.members().begin(), S.members().end());
      CHECK(expect.count(mem) == 1);
    }
  }
}

TEST_CASE("hom enumeration") {
  FinAbGroup z2({2}), z3({3}), z4({4}), z6({6});
  CHECK(homs(z2, z3).size() == 1);  // coprime orders: zero map only
  CHECK(homs(z3, z3).size() == 3);
  CHECK(homs(z4, z6).size() == 2);
  CHECK(homs(z6, z4).size() == 2);
  CHECK(homs(FinAbGroup({12}), FinAbGroup({9})).size() == 3);

  // 8 = 9 - 1 nonzero images, each of order 3, giving an injective map
  CHECK(homs(z3, FinAbGroup({3, 3}), true).size() == 8);
  CHECK(homs(z4, z6, true).empty());
  CHECK(homs(FinAbGroup::trivial(), z4).size() == 1);

  CHECK_THROWS_AS(Hom(z2, z4, {{1}}), std::domain_error);
}

TEST_CASE("homs are additive on all pairs") {
  std::vector<std::pair<FinAbGroup, FinAbGroup>> cases{
      {FinAbGroup({2, 4}), FinAbGroup({4})},
      {FinAbGroup({3, 3}), FinAbGroup({3, 3})},
      {FinAbGroup({6}), FinAbGroup({12})},
      {FinAbGroup({2, 2, 2}), FinAbGroup({2, 4})},
  };
  for (const auto& [G, H] : cases) {
    auto all = elements(G);
    for (const Hom& f : homs(G, H))
      for (const Element& a : all)
        for (const Element& b : all)
          CHECK(f.apply(a + b) == f.apply(a) + f.apply(b));
  }
}

TEST_CASE("hom application and composition") {
  FinAbGroup z2({2}), z4({4});
  Hom doubling(z2, z4, {{2}});
  CHECK(doubling.apply(Element(z2, {1})).coords == Coords{2});
  Hom projection(z4, z2, {{1}});
  Hom round_trip = projection.compose(doubling);
  CHECK(round_trip.apply(Element(z2, {1})).is_zero());
  CHECK(Hom::identity(z4).apply(Element(z4, {3})).coords == Coords{3});
  CHECK_THROWS_AS(doubling.apply(Element(z4, {1})), std::invalid_argument);
  CHECK_THROWS_AS(doubling.compose(doubling), std::invalid_argument);
}

TEST_CASE("dual and pairing") {
  CHECK(dual(FinAbGroup({3, 3})) == FinAbGroup({3, 3}));
  FinAbGroup t(FinAbGroup::torus(3, 2));
  CHECK(pairing(Element(t, {1, 0}), Element(t, {0, 1})) == 0);
  CHECK(pairing(Element(t, {1, 2}), Element(t, {2, 1})) == 1);
  CHECK_THROWS_AS(
      pairing(Element(t, {1, 0}), Element(FinAbGroup({3}), {1})),
      std::invalid_argument);
  FinAbGroup mixed({2, 4});
  CHECK_THROWS_AS(pairing(Element(mixed, {1, 1}), Element(mixed, {1, 1})),
                  std::invalid_argument);
}

TEST_CASE("annihilator basics") {
  FinAbGroup t(FinAbGroup::torus(3, 2));
  Subgroup zero(t, {});
  CHECK(annihilator(zero).order() == 9);
  Subgroup full(t, {Element(t, {1, 0}), Element(t, {0, 1})});
  CHECK(annihilator(full).order() == 1);
  Subgroup line(t, {Element(t, {1, 0})});
  CHECK(annihilator(line) == Subgroup(t, {Element(t, {0, 1})}));
}

TEST_CASE("double annihilator and order identity") {
  for (long ell : {3L, 5L}) {
    for (int s = 0; s <= 3; ++s) {
      FinAbGroup t(FinAbGroup::torus(ell, s));
      mpz_class full = t.order();
      for (const Subgroup& N : subgroups(t)) {
        Subgroup ann = annihilator(N);
        CHECK(N.order() * ann.order() == full);
        CHECK(annihilator(ann) == N);
      }
    }
  }
}

TEST_CASE("abstract decomposition examples") {
  FinAbGroup t(FinAbGroup::torus(3, 2));
  auto dec = abstract_decomposition(Subgroup(t, {Element(t, {1, 1})}));
  CHECK(dec.abstract_group == FinAbGroup({3}));
  REQUIRE(dec.generators.size() == 1);
  CHECK(dec.generators[0].order() == 3);
  CHECK(dec.to_abstract.size() == 3);

  FinAbGroup g24({2, 4});
  auto full = abstract_decomposition(
      Subgroup(g24, {Element(g24, {1, 0}), Element(g24, {0, 1})}));
  CHECK(full.abstract_group == FinAbGroup({2, 4}));

  FinAbGroup g44({4, 4});
  auto two = abstract_decomposition(
      Subgroup(g44, {Element(g44, {2, 0}), Element(g44, {0, 2})}));
  CHECK(two.abstract_group == FinAbGroup({2, 2}));

  auto triv = abstract_decomposition(Subgroup(t, {}));
  CHECK(triv.abstract_group == FinAbGroup::trivial());
  CHECK(triv.generators.empty());
  CHECK(triv.to_abstract.size() == 1);
}

TEST_CASE("abstract decomposition is a group isomorphism") {
  for (const FinAbGroup& g :
       {FinAbGroup({3, 3, 3}), FinAbGroup({2, 4}), FinAbGroup({2, 2, 2}),
        FinAbGroup({12}), FinAbGroup({5, 5})}) {
    for (const Subgroup& S : subgroups(g)) {
      auto dec = abstract_decomposition(S);
      mpz_class prod = dec.abstract_group.order();
      CHECK(prod == S.order());
      const auto& factors = dec.abstract_group.factors();
      REQUIRE(dec.generators.size() == factors.size());
      for (size_t i = 0; i < factors.size(); ++i)
        CHECK(dec.generators[i].order() == factors[i]);
      // the generators generate exactly S
      CHECK(Subgroup(g, dec.generators) == S);
      // the coordinate table is a bijection onto the members
      REQUIRE(dec.to_abstract.size() == S.members().size());
      for (const auto& m : S.members())
        CHECK(dec.to_abstract.count(m) == 1);
      // and a homomorphism
      std::vector<Element> mem;
      for (const auto& m : S.members()) mem.push_back(Element(g, m));
      for (const Element& x : mem)
        for (const Element& y : mem) {
          const auto& ax = dec.to_abstract.at(x.coords);
          const auto& ay = dec.to_abstract.at(y.coords);
          Coords sum(ax.size());
          for (size_t i = 0; i < ax.size(); ++i)
            sum[i] = (ax[i] + ay[i]) % factors[i];
          CHECK(dec.to_abstract.at((x + y).coords) == sum);
        }
    }
  }
}
