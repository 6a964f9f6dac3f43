#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "qsub/enumerate.hpp"
#include "qsub/json_io.hpp"
#include "qsub/order.hpp"

using qsub::Caps;
using qsub::CapExceeded;
using qsub::Element;
using qsub::FinAbGroup;
using qsub::Hom;
using qsub::RootSystem;
using qsub::Subgroup;
using qsub::SubgroupDatum;

#include "naive_generator.hpp"

namespace {

std::vector<std::string> sorted_keys(const std::vector<SubgroupDatum>& v) {
  std::vector<std::string> k;
  for (const SubgroupDatum& d : v) k.push_back(qsub::canonical_string(d));
  std::sort(k.begin(), k.end());
  return k;
}

long class_count(const std::vector<SubgroupDatum>& v) {
  std::vector<int> cls(v.size(), -1);
  long nc = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (cls[i] >= 0) continue;
    for (size_t j = i; j < v.size(); ++j)
      if (cls[j] < 0 && qsub::equiv(v[i], v[j])) cls[j] = static_cast<int>(nc);
    ++nc;
  }
  return nc;
}

}  // namespace

TEST_CASE("enumeration agrees with the nested-loop generator") {
  const long ell = 3;

  // golden sizes below were produced by the generator in this file
  // (naive census run, 2026-08-19) and frozen afterwards
  struct Golden {
    char letter;
    int rank;
    std::string gamma;
    size_t size;
  };
  std::vector<Golden> golden{
      {'A', 1, "1", 5},      {'A', 1, "Z2", 5},     {'A', 1, "Z3", 14},
      {'A', 1, "Z4", 10},    {'A', 1, "Z2xZ2", 0},  {'A', 2, "1", 27},
      {'A', 2, "Z2", 81},    {'A', 2, "Z3", 440},   {'A', 2, "Z4", 324},
      {'A', 2, "Z2xZ2", 162},
  };

  for (const Golden& g : golden) {
    DYNAMIC_SECTION(g.letter << g.rank << " gamma " << g.gamma) {
      RootSystem rs({g.letter, g.rank});
      FinAbGroup gamma = qsub::parse_gamma_catalog(g.gamma).at(0);
      std::vector<SubgroupDatum> lib = qsub::enumerate_data(rs, ell, {gamma});
      std::vector<SubgroupDatum> ref = naive::enumerate(rs, ell, gamma);
      CHECK(ref.size() == g.size);
      CHECK(lib.size() == g.size);
      CHECK(sorted_keys(lib) == sorted_keys(ref));
      for (const SubgroupDatum& d : lib) CHECK(qsub::validate(d).empty());
    }
  }
}

TEST_CASE("class counts match the nested-loop generator modulo equivalence") {
  const long ell = 3;
  RootSystem a1({'A', 1});
  std::vector<FinAbGroup> catalog = qsub::parse_gamma_catalog("1,Z2,Z3");

  std::vector<SubgroupDatum> ref;
  for (const FinAbGroup& g : catalog)
    for (SubgroupDatum& d : naive::enumerate(a1, ell, g))
      ref.push_back(std::move(d));

  // 24 data in 17 classes, confirmed by the generator above before
  // freezing (naive census run, 2026-08-19)
  REQUIRE(ref.size() == 24);
  CHECK(class_count(ref) == 17);

  qsub::CensusReport report = qsub::census(a1, ell, catalog);
  REQUIRE(report.data.size() == 24);
  CHECK(report.diagram.classes.size() == 17);
  CHECK(sorted_keys(report.data) == sorted_keys(ref));

  // each library class representative is equivalent to some generator
  // datum, and inequivalent to every other class representative
  for (size_t i = 0; i < report.diagram.classes.size(); ++i) {
    const SubgroupDatum& rep = report.data[report.diagram.classes[i].rep];
    bool found = false;
    for (const SubgroupDatum& d : ref) found = found || qsub::equiv(rep, d);
    CHECK(found);
    for (size_t j = i + 1; j < report.diagram.classes.size(); ++j)
      CHECK_FALSE(qsub::equiv(
          rep, report.data[report.diagram.classes[j].rep]));
  }
}

TEST_CASE("enumeration order is the documented product order") {
  RootSystem a1({'A', 1});
  std::vector<SubgroupDatum> fam =
      qsub::enumerate_data(a1, 3, {FinAbGroup::trivial()});
  REQUIRE(fam.size() == 5);

  // I+ mask then I- mask, subgroups by ascending order inside each slot
  CHECK(fam[0].Iplus.empty());
  CHECK(fam[0].Iminus.empty());
  CHECK(fam[0].N.order() == 1);
  CHECK(fam[1].Iplus.empty());
  CHECK(fam[1].Iminus.empty());
  CHECK(fam[1].N.order() == 3);
  CHECK(fam[2].Iplus.empty());
  CHECK(fam[2].Iminus == std::set<int>{1});
  CHECK(fam[3].Iplus == std::set<int>{1});
  CHECK(fam[3].Iminus.empty());
  CHECK(fam[4].Iplus == std::set<int>{1});
  CHECK(fam[4].Iminus == std::set<int>{1});

  std::vector<SubgroupDatum> again =
      qsub::enumerate_data(a1, 3, {FinAbGroup::trivial()});
  for (size_t i = 0; i < fam.size(); ++i)
    CHECK(qsub::canonical_string(fam[i]) == qsub::canonical_string(again[i]));
}

TEST_CASE("census output is deterministic") {
  RootSystem a1({'A', 1});
  std::vector<FinAbGroup> catalog = qsub::parse_gamma_catalog("1,Z2,Z3");
  qsub::CensusReport a = qsub::census(a1, 3, catalog);
  qsub::CensusReport b = qsub::census(a1, 3, catalog);

  REQUIRE(a.diagram.classes.size() == b.diagram.classes.size());
  for (size_t i = 0; i < a.diagram.classes.size(); ++i) {
    CHECK(a.diagram.classes[i].rep == b.diagram.classes[i].rep);
    CHECK(a.diagram.classes[i].members == b.diagram.classes[i].members);
  }
  CHECK(a.diagram.edges == b.diagram.edges);
  CHECK(a.class_dims == b.class_dims);
  CHECK(a.dim_histogram == b.dim_histogram);

  // no duplicate data, dimension is a class invariant, histogram adds up
  std::vector<std::string> keys = sorted_keys(a.data);
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
  long hist_total = 0;
  for (const auto& [dim, count] : a.dim_histogram) hist_total += count;
  CHECK(hist_total == static_cast<long>(a.diagram.classes.size()));
  for (size_t i = 0; i < a.diagram.classes.size(); ++i)
    for (size_t m : a.diagram.classes[i].members)
      CHECK(qsub::dim_AD(a.data[m]) == a.class_dims[i]);
}

TEST_CASE("domain violations and caps are reported on the right axis") {
  RootSystem a1({'A', 1});
  RootSystem g2({'G', 2});
  std::vector<FinAbGroup> triv{FinAbGroup::trivial()};

  SECTION("root order must be odd and at least 3") {
    CHECK_THROWS_AS(qsub::enumerate_data(a1, 4, triv), std::domain_error);
    CHECK_THROWS_AS(qsub::enumerate_data(a1, 1, triv), std::domain_error);
  }

  SECTION("G2 excludes orders divisible by 3") {
    CHECK_THROWS_AS(qsub::enumerate_data(g2, 3, triv), std::domain_error);
    CHECK_NOTHROW(qsub::enumerate_data(g2, 5, triv));
  }

  SECTION("each cap names its axis") {
    try {
      qsub::enumerate_data(a1, 9, triv);
      FAIL("expected a cap failure");
    } catch (const CapExceeded& e) {
      CHECK(e.axis == "ell");
    }
    try {
      qsub::enumerate_data(RootSystem({'B', 4}), 3, triv);
      FAIL("expected a cap failure");
    } catch (const CapExceeded& e) {
      CHECK(e.axis == "rank");
    }
    try {
      qsub::enumerate_data(a1, 3, {FinAbGroup({17})});
      FAIL("expected a cap failure");
    } catch (const CapExceeded& e) {
      CHECK(e.axis == "gamma");
    }
    Caps tight;
    tight.max_enum = 10;
    try {
      qsub::enumerate_data(a1, 3, qsub::parse_gamma_catalog("1,Z2,Z3"),
                           tight);
      FAIL("expected a cap failure");
    } catch (const CapExceeded& e) {
      CHECK(e.axis == "enum");
    }
  }

  SECTION("raised caps admit larger inputs") {
    Caps wide;
    wide.max_ell = 9;
    CHECK_NOTHROW(qsub::enumerate_data(a1, 9, triv, wide));
  }
}

TEST_CASE("gamma catalog notation") {
  SECTION("plain list") {
    std::vector<FinAbGroup> cat = qsub::parse_gamma_catalog("1,Z2,Z3,Z2xZ2");
    REQUIRE(cat.size() == 4);
    CHECK(cat[0].num_factors() == 0);
    CHECK(cat[1].factors() == std::vector<long>{2});
    CHECK(cat[2].factors() == std::vector<long>{3});
    CHECK(cat[3].factors() == std::vector<long>{2, 2});
  }

  SECTION("products are normalized to invariant factors") {
    CHECK(qsub::parse_gamma_catalog("Z2xZ3").at(0).factors() ==
          std::vector<long>{6});
    CHECK(qsub::parse_gamma_catalog("Z6xZ4").at(0).factors() ==
          std::vector<long>{2, 12});
    CHECK(qsub::parse_gamma_catalog("Z4xZ2xZ4").at(0).factors() ==
          std::vector<long>{2, 4, 4});
    CHECK(qsub::parse_gamma_catalog("Z12").at(0).factors() ==
          std::vector<long>{12});
  }

  SECTION("malformed tokens are rejected") {
    CHECK_THROWS_AS(qsub::parse_gamma_catalog(""), std::invalid_argument);
    CHECK_THROWS_AS(qsub::parse_gamma_catalog("1,,Z2"),
                    std::invalid_argument);
    CHECK_THROWS_AS(qsub::parse_gamma_catalog("Z1"), std::invalid_argument);
    CHECK_THROWS_AS(qsub::parse_gamma_catalog("Z0"), std::invalid_argument);
    CHECK_THROWS_AS(qsub::parse_gamma_catalog("Z"), std::invalid_argument);
    CHECK_THROWS_AS(qsub::parse_gamma_catalog("Zx"), std::invalid_argument);
    CHECK_THROWS_AS(qsub::parse_gamma_catalog("Z2x"), std::invalid_argument);
    CHECK_THROWS_AS(qsub::parse_gamma_catalog("S3"), std::invalid_argument);
    CHECK_THROWS_AS(qsub::parse_gamma_catalog("Z-3"), std::invalid_argument);
  }
}
