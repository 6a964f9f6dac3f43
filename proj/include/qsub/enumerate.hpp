#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsub/caps.hpp"
#include "qsub/datum.hpp"
#include "qsub/order.hpp"

namespace qsub {

// Every datum for the given ambient, in a fixed product-space order:
// ascending I+ mask, then I- mask, then subgroups of the complementary
// torus as listed by subgroups(), then the catalog order of Gamma, then
// the character tuple odometer, then the hom order on delta. Emitted data
// all validate; equivalent data are emitted separately on purpose, since
// classing is the order module's job.
inline std::vector<SubgroupDatum> enumerate_data(
    const RootSystem& rs, long ell,
    const std::vector<FinAbGroup>& gamma_catalog, const Caps& caps = Caps{}) {
  if (ell < 3 || ell % 2 == 0)
    throw std::domain_error("root order must be odd and >= 3");
  if (rs.type().letter == 'G' && ell % 3 == 0)
    throw std::domain_error("3 divides ell for G2");
  if (ell > caps.max_ell)
    throw CapExceeded("ell", "root order " + std::to_string(ell) +
                                 " exceeds cap " +
                                 std::to_string(caps.max_ell));
  if (rs.rank() > caps.max_rank)
    throw CapExceeded("rank", "rank " + std::to_string(rs.rank()) +
                                  " exceeds cap " +
                                  std::to_string(caps.max_rank));
  for (const FinAbGroup& g : gamma_catalog)
    if (g.order() > caps.max_gamma)
      throw CapExceeded("gamma", "group of order " + g.order().get_str() +
                                     " exceeds cap " +
                                     std::to_string(caps.max_gamma));

  int n = rs.rank();
  std::vector<SubgroupDatum> out;
  for (long mask_p = 0; mask_p < (1L << n); ++mask_p)
    for (long mask_m = 0; mask_m < (1L << n); ++mask_m) {
      std::set<int> ip, im, both;
      for (int i = 0; i < n; ++i) {
        if (mask_p >> i & 1) ip.insert(i + 1);
        if (mask_m >> i & 1) im.insert(i + 1);
      }
      both = ip;
      both.insert(im.begin(), im.end());
      int s = n - static_cast<int>(both.size());
      FinAbGroup ambient = FinAbGroup::torus(ell, s);
      for (const Subgroup& sub_n : subgroups(ambient, caps.max_enum)) {
        FinAbGroup n_abs = abstract_decomposition(sub_n).abstract_group;
        for (const FinAbGroup& gamma : gamma_catalog) {
          long e = gamma.exponent();
          FinAbGroup chi = e == 1 ? FinAbGroup::trivial() : FinAbGroup({e});
          std::vector<Hom> candidates = homs(gamma, chi, false,
                                             caps.max_enum);
          std::vector<Element> gamma_elements = elements(gamma);
          std::vector<Hom> deltas = homs(n_abs, dual(gamma), false,
                                         caps.max_enum);
          // odometer over n character slots, filtered to jointly
          // injective tuples
          std::vector<size_t> pick(n, 0);
          for (;;) {
            bool injective = true;
            for (const Element& g : gamma_elements) {
              if (g.is_zero()) continue;
              bool killed = true;
              for (int i = 0; i < n && killed; ++i)
                killed = candidates[pick[i]].apply(g).is_zero();
              if (killed) {
                injective = false;
                break;
              }
            }
            if (injective) {
              std::vector<Hom> sigma;
              for (int i = 0; i < n; ++i) sigma.push_back(candidates[pick[i]]);
              for (const Hom& delta : deltas) {
                if (static_cast<long>(out.size()) >= caps.max_enum)
                  throw CapExceeded(
                      "enum", "datum enumeration exceeds cap " +
                                  std::to_string(caps.max_enum));
                out.push_back(SubgroupDatum(rs, ell, ip, im, sub_n, gamma,
                                            sigma, delta));
              }
            }
            int i = n - 1;
            while (i >= 0 && ++pick[i] == candidates.size()) pick[i--] = 0;
            if (i < 0) break;
          }
        }
      }
    }
  return out;
}

struct CensusReport {
  std::vector<SubgroupDatum> data;
  HasseDiagram diagram;
  std::vector<mpz_class> class_dims;            // dim_AD per diagram class
  std::map<std::string, long> dim_histogram;    // decimal dim_AD -> classes
};

// Full census: enumerate, class by equivalence, attach dimensions. The
// report is a deterministic function of its inputs.
inline CensusReport census(const RootSystem& rs, long ell,
                           const std::vector<FinAbGroup>& gamma_catalog,
                           const Caps& caps = Caps{}) {
  CensusReport r;
  r.data = enumerate_data(rs, ell, gamma_catalog, caps);
  r.diagram = hasse(r.data);
  for (const HasseClass& c : r.diagram.classes) {
    mpz_class dim = dim_AD(r.data[c.rep]);
    r.dim_histogram[dim.get_str()] += 1;
    r.class_dims.push_back(std::move(dim));
  }
  return r;
}

// Catalog notation: comma-separated entries, each "1" or Z<k> terms glued
// with x, e.g. "1,Z2,Z3,Z2xZ2". Products are normalized to the invariant
// factor chain, so Z2xZ3 comes back as the cyclic group of order 6.
inline std::vector<FinAbGroup> parse_gamma_catalog(const std::string& text) {
  std::vector<FinAbGroup> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string token = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty())
      throw std::invalid_argument("empty group token in catalog");
    if (token == "1") {
      out.push_back(FinAbGroup::trivial());
    } else {
      // split on x, each part Z<k>
      std::vector<long> cyclic;
      size_t tpos = 0;
      while (tpos <= token.size()) {
        size_t xm = token.find('x', tpos);
        std::string part = token.substr(
            tpos, xm == std::string::npos ? std::string::npos : xm - tpos);
        if (part.size() < 2 || part[0] != 'Z')
          throw std::invalid_argument("bad group token: " + token);
        long k = 0;
        for (size_t i = 1; i < part.size(); ++i) {
          if (part[i] < '0' || part[i] > '9')
            throw std::invalid_argument("bad group token: " + token);
          k = k * 10 + (part[i] - '0');
        }
        if (k < 2) throw std::invalid_argument("bad group token: " + token);
        cyclic.push_back(k);
        if (xm == std::string::npos) break;
        tpos = xm + 1;
      }
      // invariant factors: align prime-power exponents largest-first
      std::map<long, std::vector<int>> prime_exps;
      for (long k : cyclic)
        for (long p = 2; p <= k; ++p)
          if (k % p == 0) {
            int e = 0;
            while (k % p == 0) k /= p, ++e;
            prime_exps[p].push_back(e);
          }
      size_t slots = 0;
      for (auto& [p, exps] : prime_exps) {
        std::sort(exps.rbegin(), exps.rend());
        slots = std::max(slots, exps.size());
      }
      std::vector<long> factors(slots, 1);
      for (const auto& [p, exps] : prime_exps)
        for (size_t i = 0; i < exps.size(); ++i)
          for (int t = 0; t < exps[i]; ++t) factors[i] *= p;
      std::reverse(factors.begin(), factors.end());  // ascending chain
      out.push_back(FinAbGroup(factors));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace qsub
