#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "qsub/datum.hpp"

using qsub::Cyclotomic;
using qsub::dcharacter;
using qsub::dim_AD;
using qsub::dim_H;
using qsub::dim_uel;
using qsub::Element;
using qsub::FinAbGroup;
using qsub::Hom;
using qsub::RootSystem;
using qsub::sigma_group;
using qsub::Subgroup;
using qsub::SubgroupDatum;
using qsub::Triple;

namespace {

// datum with trivial Gamma (sigma and delta forced)
SubgroupDatum plain_datum(char letter, int rank, long ell, std::set<int> ip,
                          std::set<int> im, const std::vector<std::vector<long>>& n_gens) {
  RootSystem rs({letter, rank});
  std::set<int> I = ip;
  I.insert(im.begin(), im.end());
  int s = rank - static_cast<int>(I.size());
  FinAbGroup torus = FinAbGroup::torus(ell, s);
  std::vector<Element> gens;
  for (const auto& g : n_gens) gens.push_back(Element(torus, g));
  Subgroup N(torus, gens);
  FinAbGroup gamma = FinAbGroup::trivial();
  std::vector<Hom> sigma(rank, Hom(gamma, gamma, {}));
  Hom delta(qsub::abstract_decomposition(N).abstract_group, gamma, {});
  return SubgroupDatum(rs, ell, ip, im, N, gamma, sigma, delta);
}

std::vector<std::vector<long>> full_gens(int s) {
  std::vector<std::vector<long>> gens;
  for (int i = 0; i < s; ++i) {
    std::vector<long> e(s, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return gens;
}

bool has_violation(const std::vector<std::string>& vs, const std::string& needle) {
  return std::any_of(vs.begin(), vs.end(), [&](const std::string& v) {
    return v.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("validate accepts the full rank-1 datum") {
  auto d = plain_datum('A', 1, 3, {1}, {1}, {});
  CHECK(qsub::validate(d).empty());
}

TEST_CASE("validate flags a non-injective sigma") {
  RootSystem rs({'A', 1});
  FinAbGroup z2({2});
  Subgroup N(FinAbGroup::trivial(), {});
  std::vector<Hom> sigma{Hom(z2, z2, {{0}})};  // kills all of Gamma
  Hom delta(FinAbGroup::trivial(), z2, {{}});
  SubgroupDatum d(rs, 3, {1}, {1}, N, z2, sigma, delta);
  CHECK(has_violation(qsub::validate(d), "sigma not injective"));

  // the identity character is injective, same datum otherwise
  SubgroupDatum good(rs, 3, {1}, {1}, N, z2, {Hom(z2, z2, {{1}})}, delta);
  CHECK(qsub::validate(good).empty());
}

TEST_CASE("validate flags bad ell") {
  auto g2 = plain_datum('G', 2, 9, {1, 2}, {1, 2}, {});
  CHECK(has_violation(qsub::validate(g2), "3 divides ell for G2"));
  CHECK(qsub::validate(plain_datum('G', 2, 5, {1, 2}, {1, 2}, {})).empty());

  auto even = plain_datum('A', 1, 4, {1}, {1}, {});
  CHECK(has_violation(qsub::validate(even), "odd"));
}

TEST_CASE("validate flags structural mismatches") {
  RootSystem rs({'A', 2});
  FinAbGroup gamma = FinAbGroup::trivial();
  // N in a torus of the wrong rank: I = {1}, so s should be 1, not 2
  Subgroup wrong_n(FinAbGroup::torus(3, 2), {});
  std::vector<Hom> sigma(2, Hom(gamma, gamma, {}));
  Hom delta(FinAbGroup::trivial(), gamma, {});
  SubgroupDatum d(rs, 3, {1}, {}, wrong_n, gamma, sigma, delta);
  CHECK(has_violation(qsub::validate(d), "N must be a subgroup"));

  // sigma count mismatch
  Subgroup n1(FinAbGroup::torus(3, 1), {});
  SubgroupDatum d2(rs, 3, {1}, {}, n1, gamma, {Hom(gamma, gamma, {})}, delta);
  CHECK(has_violation(qsub::validate(d2), "one character per simple root"));

  // delta with the wrong source
  FinAbGroup z3({3});
  Subgroup full_n(FinAbGroup::torus(3, 1), {Element(FinAbGroup::torus(3, 1), {1})});
  Hom bad_delta(FinAbGroup::trivial(), gamma, {});
  SubgroupDatum d3(rs, 3, {1}, {}, full_n, gamma, sigma, bad_delta);
  CHECK(has_violation(qsub::validate(d3), "delta source"));
  (void)z3;
}

TEST_CASE("sigma_group examples") {
  // s = 0: Sigma is the whole torus
  auto d1 = plain_datum('A', 1, 3, {1}, {}, {});
  Triple t1 = sigma_group(d1);
  CHECK(t1.Sigma.order() == 3);

  // I empty, N the full dual: Sigma collapses
  auto d2 = plain_datum('A', 1, 3, {}, {}, {{1}});
  CHECK(sigma_group(d2).Sigma.order() == 1);

  // A2, ell=5, I = {1}, N = <(1)>: |Sigma| = 25 / 5
  auto d3 = plain_datum('A', 2, 5, {1}, {}, {{1}});
  Triple t3 = sigma_group(d3);
  CHECK(t3.Sigma.order() == 5);
  CHECK(qsub::hopf_subalgebra_dim(t3, d3.rs, 5) == 5 * 5);
}

TEST_CASE("sigma_group satisfies the order identity on small families") {
  for (const auto& [letter, rank] :
       std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}}) {
    for (long ell : {3L, 5L}) {
      for (int ip_mask = 0; ip_mask < (1 << rank); ++ip_mask)
        for (int im_mask = 0; im_mask < (1 << rank); ++im_mask) {
          std::set<int> ip, im;
          for (int b = 0; b < rank; ++b) {
            if (ip_mask & (1 << b)) ip.insert(b + 1);
            if (im_mask & (1 << b)) im.insert(b + 1);
          }
          std::set<int> I = ip;
          I.insert(im.begin(), im.end());
          int s = rank - static_cast<int>(I.size());
          FinAbGroup torus = FinAbGroup::torus(ell, s);
          for (const Subgroup& N : qsub::subgroups(torus)) {
            std::vector<std::vector<long>> gens;
            for (const Element& g : N.generators()) gens.push_back(g.coords);
            auto d = plain_datum(letter, rank, ell, ip, im, gens);
            mpz_class torus_order = qsub::pow_z(ell, rank);
            CHECK(sigma_group(d).Sigma.order() * N.order() == torus_order);
            CHECK(dim_H(d) * N.order() == dim_uel(d));
          }
        }
    }
  }
}

TEST_CASE("dim_uel examples") {
  RootSystem a1({'A', 1}), a2({'A', 2});
  CHECK(dim_uel(a1, 3, {1}, {1}) == 27);
  CHECK(dim_uel(a2, 3, {}, {}) == 9);
  CHECK(dim_uel(a2, 3, {1, 2}, {}) == 243);
}

TEST_CASE("dim_H and dim_AD examples") {
  CHECK(dim_H(plain_datum('A', 1, 3, {1}, {1}, {})) == 27);
  CHECK(dim_H(plain_datum('A', 1, 3, {}, {}, {{1}})) == 1);
  CHECK(dim_H(plain_datum('A', 1, 5, {1}, {}, {})) == 25);

  // Gamma = Z/2 doubles dim_AD
  RootSystem rs({'A', 1});
  FinAbGroup z2({2});
  Subgroup N(FinAbGroup::trivial(), {});
  Hom delta(FinAbGroup::trivial(), z2, {{}});
  SubgroupDatum d(rs, 3, {1}, {1}, N, z2, {Hom(z2, z2, {{1}})}, delta);
  CHECK(dim_AD(d) == 54);
  CHECK(dim_AD(plain_datum('A', 1, 3, {1}, {1}, {})) == 27);

  // counit-like datum with Gamma = Z/4
  FinAbGroup z4({4});
  FinAbGroup t1 = FinAbGroup::torus(3, 1);
  Subgroup full_n(t1, {Element(t1, {1})});
  Hom delta4(FinAbGroup({3}), z4, {{0}});  // forced zero map, coprime orders
  SubgroupDatum d4(rs, 3, {}, {}, full_n, z4, {Hom(z4, z4, {{1}})}, delta4);
  CHECK(dim_AD(d4) == 4);

  // invalid datum is rejected rather than measured
  auto bad = plain_datum('G', 2, 9, {1, 2}, {1, 2}, {});
  CHECK_THROWS_AS(dim_H(bad), std::domain_error);
}

TEST_CASE("full-datum specialization reaches the whole-algebra dimension") {
  for (const auto& [letter, rank] :
       std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}}) {
    for (long ell : {3L, 5L}) {
      std::set<int> full;
      for (int i = 1; i <= rank; ++i) full.insert(i);
      auto d = plain_datum(letter, rank, ell, full, full, {});
      RootSystem rs({letter, rank});
      CHECK(dim_AD(d) == qsub::pow_z(ell, rs.dim_g()));
    }
  }
}

TEST_CASE("hopf_subalgebra_dim examples") {
  RootSystem a1({'A', 1}), a2({'A', 2});
  FinAbGroup t1 = FinAbGroup::torus(3, 1), t2 = FinAbGroup::torus(3, 2);
  Subgroup full1(t1, {Element(t1, {1})});
  CHECK(qsub::hopf_subalgebra_dim(Triple{full1, {1}, {1}}, a1, 3) == 27);

  Subgroup full2(t2, {Element(t2, {1, 0}), Element(t2, {0, 1})});
  CHECK(qsub::hopf_subalgebra_dim(Triple{full2, {}, {}}, a2, 3) == 9);

  Subgroup k1(t2, {Element(t2, {1, 0})});
  CHECK(qsub::hopf_subalgebra_dim(Triple{k1, {1}, {}}, a2, 3) == 9);

  // K_2 not in Sigma
  CHECK_THROWS_AS(qsub::hopf_subalgebra_dim(Triple{k1, {2}, {}}, a2, 3),
                  std::domain_error);
}

TEST_CASE("DCharacter group law and injectivity") {
  for (long ell : {3L, 5L}) {
    for (int s = 0; s <= 3; ++s) {
      // A3 with |I| = 3 - s via Iplus
      std::set<int> ip;
      for (int i = 1; i <= 3 - s; ++i) ip.insert(i);
      auto d = plain_datum('A', 3, ell, ip, {}, {});
      REQUIRE(d.s() == s);
      auto zs = qsub::elements(d.N.ambient());
      std::set<std::vector<long>> images;
      for (const Element& z : zs) {
        auto dc = dcharacter(d, z);
        images.insert(dc.extended());
        // trivial on the I-indexed torus coordinates
        for (int i : ip) CHECK(dc.extended()[i - 1] == 0);
      }
      CHECK(images.size() == zs.size());  // injective
      for (const Element& z1 : zs)
        for (const Element& z2 : zs) {
          auto prod = dcharacter(d, z1) * dcharacter(d, z2);
          CHECK(prod.extended() == dcharacter(d, z1 + z2).extended());
        }
    }
  }
}

TEST_CASE("DCharacter evaluation multiplies like a character") {
  auto d = plain_datum('A', 2, 3, {1}, {}, {});
  FinAbGroup torus = FinAbGroup::torus(3, 2);
  auto zs = qsub::elements(d.N.ambient());
  auto ts = qsub::elements(torus);
  for (const Element& z1 : zs)
    for (const Element& z2 : zs) {
      auto a = dcharacter(d, z1), b = dcharacter(d, z2);
      auto ab = dcharacter(d, z1 + z2);
      for (const Element& t : ts)
        CHECK(a.evaluate(t) * b.evaluate(t) == ab.evaluate(t));
    }
  CHECK(dcharacter(d, Element::zero(d.N.ambient())).is_trivial());
  CHECK_THROWS_AS(dcharacter(d, Element(torus, {1, 1})),
                  std::invalid_argument);
}
