#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qsub/datum.hpp"

namespace qsub {

using Json = nlohmann::json;

inline Json group_json(const FinAbGroup& g) {
  return Json{{"factors", g.factors()}};
}

inline FinAbGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
    throw std::invalid_argument("group JSON needs a factors array");
  return FinAbGroup(j["factors"].get<std::vector<long>>());
}

inline Json hom_json(const Hom& h) {
  return Json{{"matrix", h.matrix()}};
}

// The subgroup is written through its canonical form so that equal
// subgroups always serialize identically.
inline Json subgroup_json(const Subgroup& s) {
  return Json{{"hnf", s.canonical_form()}};
}

// Canonical datum serialization; object keys are emitted sorted, so equal
// data give byte-identical strings. Schema v1.
inline Json datum_json(const SubgroupDatum& d) {
  Json j;
  j["v"] = 1;
  j["type"] = std::string(1, d.rs.type().letter);
  j["rank"] = d.rs.rank();
  j["ell"] = d.ell;
  j["Iplus"] = std::vector<int>(d.Iplus.begin(), d.Iplus.end());
  j["Iminus"] = std::vector<int>(d.Iminus.begin(), d.Iminus.end());
  j["N"] = subgroup_json(d.N);
  j["Gamma"] = group_json(d.Gamma);
  Json sig = Json::array();
  for (const Hom& h : d.sigma) sig.push_back(hom_json(h));
  j["sigma"] = sig;
  j["delta"] = hom_json(d.delta);
  return j;
}

inline SubgroupDatum datum_from_json(const Json& j) {
  try {
    if (j.value("v", 0) != 1)
      throw std::invalid_argument("datum JSON must declare v = 1");
    std::string type = j.at("type").get<std::string>();
    if (type.size() != 1)
      throw std::invalid_argument("type must be a single letter");
    RootSystem rs({type[0], j.at("rank").get<int>()});
    long ell = j.at("ell").get<long>();
    auto ip_list = j.at("Iplus").get<std::vector<int>>();
    auto im_list = j.at("Iminus").get<std::vector<int>>();
    std::set<int> ip(ip_list.begin(), ip_list.end());
    std::set<int> im(im_list.begin(), im_list.end());
    std::set<int> both = ip;
    both.insert(im.begin(), im.end());
    int s = rs.rank() - static_cast<int>(both.size());
    FinAbGroup ambient = FinAbGroup::torus(ell, s);
    std::vector<Element> gens;
    for (const auto& row :
         j.at("N").at("hnf").get<std::vector<std::vector<long>>>())
      gens.push_back(Element(ambient, row));
    Subgroup n(ambient, gens);
    FinAbGroup gamma = group_from_json(j.at("Gamma"));
    long e = gamma.exponent();
    FinAbGroup chi = e == 1 ? FinAbGroup::trivial() : FinAbGroup({e});
    std::vector<Hom> sigma;
    for (const Json& entry : j.at("sigma"))
      sigma.push_back(Hom(gamma, chi,
                          entry.at("matrix")
                              .get<std::vector<std::vector<long>>>()));
    Hom delta(abstract_decomposition(n).abstract_group, dual(gamma),
              j.at("delta").at("matrix")
                  .get<std::vector<std::vector<long>>>());
    return SubgroupDatum(rs, ell, ip, im, n, gamma, sigma, delta);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed datum JSON: ") +
                                e.what());
  }
}

// Total order on data used for picking class representatives.
inline std::string canonical_string(const SubgroupDatum& d) {
  return datum_json(d).dump();
}

}  // namespace qsub
