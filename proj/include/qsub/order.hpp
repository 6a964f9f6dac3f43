#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "qsub/datum.hpp"
#include "qsub/json_io.hpp"

namespace qsub {

// Successful comparison certificate: the group map tau realizing the
// character compatibility, plus the two side conditions re-checked on the
// way out.
struct OrderWitness {
  Hom tau;  // Gamma' -> Gamma with sigma tau = sigma'
  bool eta_image_ok = false;
  bool delta_compat_ok = false;
};

// Extension by zero from the torus over the coordinates ic into the torus
// over ic_prime; both lists are ascending ambient indices and ic must be
// contained in ic_prime. Restriction back to ic undoes it.
inline Hom eta(const std::vector<int>& ic, const std::vector<int>& ic_prime,
               long ell) {
  if (!std::includes(ic_prime.begin(), ic_prime.end(), ic.begin(), ic.end()))
    throw std::invalid_argument(
        "eta: source coordinates must be a subset of the target's");
  FinAbGroup src = FinAbGroup::torus(ell, static_cast<int>(ic.size()));
  FinAbGroup dst = FinAbGroup::torus(ell, static_cast<int>(ic_prime.size()));
  std::vector<std::vector<long>> m(ic_prime.size(),
                                   std::vector<long>(ic.size(), 0));
  for (size_t j = 0; j < ic_prime.size(); ++j)
    for (size_t i = 0; i < ic.size(); ++i)
      if (ic_prime[j] == ic[i]) m[j][i] = 1;
  return Hom(src, dst, std::move(m));
}

namespace detail {

// tau: G' -> G induces the map of character groups dual(G) -> dual(G')
// by precomposition; in invariant-factor coordinates the (j,i) entry is
// m'_j T_ij / m_i, integral because tau respects generator orders.
inline Hom transpose_on_duals(const Hom& tau) {
  const FinAbGroup& gp = tau.source();  // G'
  const FinAbGroup& g = tau.target();   // G
  std::vector<std::vector<long>> m(gp.num_factors(),
                                   std::vector<long>(g.num_factors(), 0));
  for (int j = 0; j < gp.num_factors(); ++j)
    for (int i = 0; i < g.num_factors(); ++i) {
      long num = gp.factors()[j] * tau.matrix()[i][j];
      if (num % g.factors()[i] != 0)
        throw std::logic_error("transpose entry not integral");
      m[j][i] = (num / g.factors()[i]) % gp.factors()[j];
    }
  return Hom(dual(g), dual(gp), std::move(m));
}

// Characters into Z/e and Z/e' agree as root-of-unity valued maps iff
// their exponents match after lifting to the common modulus lcm(e, e').
inline bool characters_equal(const Hom& a, const Hom& b) {
  if (!(a.source() == b.source()))
    throw std::invalid_argument("character comparison needs a common source");
  long ea = a.target().num_factors() == 0 ? 1 : a.target().factors()[0];
  long eb = b.target().num_factors() == 0 ? 1 : b.target().factors()[0];
  long l = std::lcm(ea, eb);
  for (int i = 0; i < a.source().num_factors(); ++i) {
    long va = a.target().num_factors() == 0 ? 0 : a.matrix()[0][i];
    long vb = b.target().num_factors() == 0 ? 0 : b.matrix()[0][i];
    if ((va * (l / ea)) % l != (vb * (l / eb)) % l) return false;
  }
  return true;
}

inline bool subset(const std::set<int>& a, const std::set<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

// Decides D <= D', i.e. whether the quotient attached to D' is a quotient
// of the one attached to D. Conditions, in evaluation order: the primed
// index sets are contained in the unprimed ones; the zero-extension of N
// lands inside N'; some tau: Gamma' -> Gamma matches the characters; the
// same tau makes the pairings commute. The tau scan follows the
// deterministic hom enumeration order and the first full match wins.
inline std::optional<OrderWitness> leq(const SubgroupDatum& d,
                                       const SubgroupDatum& dp) {
  if (!(d.rs.type() == dp.rs.type()) || d.ell != dp.ell)
    throw std::invalid_argument("leq: data live over different ambients");
  require_valid(d);
  require_valid(dp);

  if (!detail::subset(dp.Iplus, d.Iplus) ||
      !detail::subset(dp.Iminus, d.Iminus))
    return std::nullopt;

  Hom ext = eta(d.complement(), dp.complement(), d.ell);
  for (const Element& g : d.N.generators())
    if (!dp.N.contains(ext.apply(g))) return std::nullopt;

  // images of the abstract generators of N inside N', fixed ahead of the
  // tau scan since they do not depend on tau
  const FinAbGroup& n_abs = d.n_decomp.abstract_group;
  const FinAbGroup& np_abs = dp.n_decomp.abstract_group;
  std::vector<Element> eta_abs;
  for (const Element& gen : d.n_decomp.generators) {
    Element img = ext.apply(gen);
    eta_abs.push_back(Element(np_abs, dp.n_decomp.to_abstract.at(img.coords)));
  }

  for (const Hom& tau : homs(dp.Gamma, d.Gamma)) {
    bool chars_ok = true;
    for (int i = 0; i < d.rs.rank() && chars_ok; ++i)
      chars_ok = detail::characters_equal(d.sigma[i].compose(tau),
                                          dp.sigma[i]);
    if (!chars_ok) continue;
    Hom ttau = detail::transpose_on_duals(tau);
    bool delta_ok = true;
    for (int g = 0; g < n_abs.num_factors() && delta_ok; ++g) {
      std::vector<long> unit(n_abs.num_factors(), 0);
      unit[g] = 1;
      Element lhs = dp.delta.apply(eta_abs[g]);
      Element rhs = ttau.apply(d.delta.apply(Element(n_abs, unit)));
      delta_ok = lhs == rhs;
    }
    if (delta_ok) return OrderWitness{tau, true, true};
  }
  return std::nullopt;
}

inline bool equiv(const SubgroupDatum& d, const SubgroupDatum& dp) {
  return leq(d, dp).has_value() && leq(dp, d).has_value();
}

struct HasseClass {
  size_t rep;                  // index into the input family
  std::vector<size_t> members;
};

struct HasseDiagram {
  std::vector<HasseClass> classes;
  std::vector<std::array<size_t, 2>> edges;  // [lower, upper] covering pairs
};

// Equivalence classes of the family plus the covering relation between
// them. Classes are listed by the canonical serialization of their
// representative, which is the member with the smallest serialization;
// this makes repeat runs byte-identical.
inline HasseDiagram hasse(const std::vector<SubgroupDatum>& family) {
  size_t n = family.size();
  for (size_t i = 1; i < n; ++i)
    if (!(family[i].rs.type() == family[0].rs.type()) ||
        family[i].ell != family[0].ell)
      throw std::invalid_argument("hasse: family mixes ambients");

  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      le[i][j] = leq(family[i], family[j]).has_value();

  HasseDiagram out;
  std::vector<long> cls(n, -1);
  for (size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    HasseClass c;
    c.rep = i;
    for (size_t j = i; j < n; ++j)
      if (cls[j] < 0 && le[i][j] && le[j][i]) {
        cls[j] = static_cast<long>(out.classes.size());
        c.members.push_back(j);
      }
    for (size_t m : c.members)
      if (canonical_string(family[m]) < canonical_string(family[c.rep]))
        c.rep = m;
    out.classes.push_back(std::move(c));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [&](const HasseClass& a, const HasseClass& b) {
              return canonical_string(family[a.rep]) <
                     canonical_string(family[b.rep]);
            });

  size_t k = out.classes.size();
  std::vector<std::vector<bool>> cle(k, std::vector<bool>(k, false));
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b)
      cle[a][b] = le[out.classes[a].rep][out.classes[b].rep];
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) {
      if (a == b || !cle[a][b]) continue;
      bool covering = true;
      for (size_t c = 0; c < k && covering; ++c)
        if (c != a && c != b && cle[a][c] && cle[c][b]) covering = false;
      if (covering) out.edges.push_back({a, b});
    }
  return out;
}

}  // namespace qsub
