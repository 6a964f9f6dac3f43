#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qsub/enumerate.hpp"
#include "qsub/json_io.hpp"
#include "qsub/order.hpp"
#include "qsub/uqsl2.hpp"

namespace qsub {
namespace cli {

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " +
                                e.what());
  }
}

inline std::vector<SubgroupDatum> family_from_json(const Json& j) {
  if (!j.is_object() || j.value("v", 0) != 1 || !j.contains("data"))
    throw std::invalid_argument("family JSON must be {\"v\":1,\"data\":[..]}");
  std::vector<SubgroupDatum> out;
  for (const Json& entry : j["data"]) out.push_back(datum_from_json(entry));
  return out;
}

inline std::string hasse_dot(const HasseDiagram& diagram,
                             const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (size_t i = 0; i < diagram.classes.size(); ++i)
    os << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  for (const auto& e : diagram.edges)
    os << "  n" << e[0] << " -> n" << e[1] << ";\n";
  os << "}\n";
  return os.str();
}

inline int cmd_roots(const std::string& type, int rank, std::ostream& out) {
  RootSystem rs({type.empty() ? '?' : type[0], rank});
  Json j;
  j["v"] = 1;
  j["type"] = type;
  j["rank"] = rank;
  j["cartan"] = rs.cartan();
  j["d"] = rs.d();
  j["positive_roots"] = rs.positive_roots();
  j["dim_g"] = rs.dim_g();
  ConvexOrder co = rs.convex_order();
  j["reduced_word"] = co.reduced_word;
  j["convex_order"] = co.beta;
  out << j.dump() << "\n";
  return 0;
}

inline int cmd_datum_dim(const std::string& path, std::ostream& out,
                         std::ostream& err) {
  SubgroupDatum d = datum_from_json(read_json_file(path));
  std::vector<std::string> violations = validate(d);
  if (!violations.empty()) {
    for (const std::string& v : violations) err << v << "\n";
    return 1;
  }
  Json j;
  j["v"] = 1;
  j["dim_uel"] = dim_uel(d).get_str();
  j["dim_H"] = dim_H(d).get_str();
  j["dim_AD"] = dim_AD(d).get_str();
  j["sigma_order"] = sigma_group(d).Sigma.order().get_str();
  out << j.dump() << "\n";
  return 0;
}

inline int cmd_leq(const std::string& left, const std::string& right,
                   std::ostream& out) {
  SubgroupDatum d = datum_from_json(read_json_file(left));
  SubgroupDatum dp = datum_from_json(read_json_file(right));
  std::optional<OrderWitness> w = leq(d, dp);
  Json j;
  j["v"] = 1;
  j["leq"] = w.has_value();
  if (w) {
    j["witness"] = Json{{"tau", hom_json(w->tau)},
                        {"eta_image_ok", w->eta_image_ok},
                        {"delta_compat_ok", w->delta_compat_ok}};
  }
  out << j.dump() << "\n";
  return 0;
}

inline int cmd_poset(const std::string& path, const std::string& format,
                     std::ostream& out) {
  std::vector<SubgroupDatum> family = family_from_json(read_json_file(path));
  HasseDiagram diagram = hasse(family);
  if (format == "dot") {
    std::vector<std::string> labels;
    for (size_t i = 0; i < diagram.classes.size(); ++i)
      labels.push_back("c" + std::to_string(i) + " size " +
                       std::to_string(diagram.classes[i].members.size()));
    out << hasse_dot(diagram, labels);
    return 0;
  }
  Json j;
  j["v"] = 1;
  Json classes = Json::array();
  for (const HasseClass& c : diagram.classes)
    classes.push_back(Json{{"rep", datum_json(family[c.rep])},
                           {"members", c.members}});
  j["classes"] = classes;
  Json edges = Json::array();
  for (const auto& e : diagram.edges)
    edges.push_back(Json::array({e[0], e[1]}));
  j["edges"] = edges;
  out << j.dump() << "\n";
  return 0;
}

inline int cmd_census(const std::string& type, int rank, long ell,
                      const std::string& gammas, const std::string& format,
                      const Caps& caps, std::ostream& out) {
  RootSystem rs({type.empty() ? '?' : type[0], rank});
  CensusReport report =
      census(rs, ell, parse_gamma_catalog(gammas), caps);
  if (format == "dot") {
    std::vector<std::string> labels;
    for (size_t i = 0; i < report.diagram.classes.size(); ++i)
      labels.push_back("dim " + report.class_dims[i].get_str() + ", size " +
                       std::to_string(
                           report.diagram.classes[i].members.size()));
    out << hasse_dot(report.diagram, labels);
    return 0;
  }
  Json j;
  j["v"] = 1;
  j["params"] = Json{{"type", type},
                     {"rank", rank},
                     {"ell", ell},
                     {"gammas", gammas}};
  j["class_count"] = report.diagram.classes.size();
  Json classes = Json::array();
  for (size_t i = 0; i < report.diagram.classes.size(); ++i) {
    const HasseClass& c = report.diagram.classes[i];
    classes.push_back(Json{{"rep", datum_json(report.data[c.rep])},
                           {"size", c.members.size()},
                           {"dim_AD", report.class_dims[i].get_str()}});
  }
  j["classes"] = classes;
  Json edges = Json::array();
  for (const auto& e : report.diagram.edges)
    edges.push_back(Json::array({e[0], e[1]}));
  j["hasse"] = Json{{"edges", edges}};
  Json hist = Json::object();
  for (const auto& [dim, count] : report.dim_histogram) hist[dim] = count;
  j["dim_histogram"] = hist;
  out << j.dump() << "\n";
  return 0;
}

namespace oracle_detail {

inline bool check_relations(const UqSl2& uq) {
  long ell = uq.ell();
  PbwElement e = uq.e(), f = uq.f(), k = uq.k();
  Cyclotomic denominv = (root_power(ell, 1) - root_power(ell, -1)).inverse();
  return uq.multiply(k, e) == uq.multiply(e, k).scaled(root_power(ell, 2)) &&
         uq.multiply(k, f) == uq.multiply(f, k).scaled(root_power(ell, -2)) &&
         uq.multiply(e, f) - uq.multiply(f, e) ==
             (k - uq.k_inverse()).scaled(denominv) &&
         uq.power(e, ell).is_zero() && uq.power(f, ell).is_zero() &&
         uq.power(k, ell) == PbwElement::one(ell);
}

inline bool check_hopf(const UqSl2& uq) {
  long ell = uq.ell();
  for (long a = 0; a < ell; ++a)
    for (long b = 0; b < ell; ++b)
      for (long c = 0; c < ell; ++c) {
        PbwIndex m{a, b, c};
        // coassociativity via the two refinements of the coproduct
        std::map<std::vector<long>, Cyclotomic> lhs, rhs;
        for (const auto& [t, gamma] : uq.comultiply_basis(m).coeffs) {
          for (const auto& [s, delta] :
               uq.comultiply_basis({t[0], t[1], t[2]}).coeffs) {
            std::vector<long> key{s[0], s[1], s[2], s[3], s[4],
                                  s[5], t[3], t[4], t[5]};
            auto it = lhs.find(key);
            if (it == lhs.end())
              lhs.emplace(key, gamma * delta);
            else
              it->second = it->second + gamma * delta;
          }
          for (const auto& [s, delta] :
               uq.comultiply_basis({t[3], t[4], t[5]}).coeffs) {
            std::vector<long> key{t[0], t[1], t[2], s[0], s[1],
                                  s[2], s[3], s[4], s[5]};
            auto it = rhs.find(key);
            if (it == rhs.end())
              rhs.emplace(key, gamma * delta);
            else
              it->second = it->second + gamma * delta;
          }
        }
        for (auto it = lhs.begin(); it != lhs.end();)
          it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
        for (auto it = rhs.begin(); it != rhs.end();)
          it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
        if (!(lhs == rhs)) return false;
        // counit and antipode axioms
        PbwElement cl = PbwElement::zero(ell), cr = PbwElement::zero(ell);
        PbwElement al = PbwElement::zero(ell), ar = PbwElement::zero(ell);
        for (const auto& [t, gamma] : uq.comultiply_basis(m).coeffs) {
          PbwElement l = PbwElement::monomial(ell, t[0], t[1], t[2]);
          PbwElement r = PbwElement::monomial(ell, t[3], t[4], t[5]);
          cl = cl + r.scaled(gamma * uq.counit(l));
          cr = cr + l.scaled(gamma * uq.counit(r));
          al = al + uq.multiply(uq.antipode(l), r).scaled(gamma);
          ar = ar + uq.multiply(l, uq.antipode(r)).scaled(gamma);
        }
        PbwElement self = PbwElement::monomial(ell, a, b, c);
        PbwElement want = PbwElement::one(ell).scaled(uq.counit(self));
        if (!(cl == self) || !(cr == self)) return false;
        if (!(al == want) || !(ar == want)) return false;
      }
  return true;
}

inline bool check_characters(const UqSl2& uq) {
  long ell = uq.ell();
  if (uq.characters(Subalgebra::torus()).size() !=
          static_cast<size_t>(ell) ||
      uq.characters(Subalgebra::borel_plus()).size() !=
          static_cast<size_t>(ell) ||
      uq.characters(Subalgebra::borel_minus()).size() !=
          static_cast<size_t>(ell))
    return false;
  std::vector<DualElement> full = uq.characters(Subalgebra::full());
  if (full.size() != 1 || !(full[0] == uq.counit_dual())) return false;
  // the torus characters are the convolution powers of the first one
  DualElement acc = uq.counit_dual();
  for (long j = 0; j < ell; ++j) {
    if (!(acc == uq.character(j))) return false;
    acc = uq.dual_convolution(acc, uq.character(1), Subalgebra::torus());
  }
  return acc == uq.counit_dual();
}

inline bool check_central(const UqSl2& uq) {
  for (Subalgebra sub : {Subalgebra::torus(), Subalgebra::borel_plus(),
                         Subalgebra::borel_minus(), Subalgebra::full()})
    for (const DualElement& dz : uq.dcharacters(sub))
      if (!uq.is_central_dual(dz, sub)) return false;
  return true;
}

inline bool check_quotient(const UqSl2& uq) {
  long ell = uq.ell();
  RootSystem a1({'A', 1});
  FinAbGroup gamma = FinAbGroup::trivial();
  DualElement eps = uq.counit_dual();
  struct Shape {
    std::set<int> ip, im;
    bool n_full;
    Subalgebra sub;
  };
  std::vector<Shape> shapes{{{}, {}, false, Subalgebra::torus()},
                            {{}, {}, true, Subalgebra::torus()},
                            {{1}, {}, false, Subalgebra::borel_plus()},
                            {{}, {1}, false, Subalgebra::borel_minus()},
                            {{1}, {1}, false, Subalgebra::full()}};
  for (const Shape& sh : shapes) {
    int s = (sh.ip.empty() && sh.im.empty()) ? 1 : 0;
    FinAbGroup ambient = FinAbGroup::torus(ell, s);
    std::vector<Element> ngens;
    std::vector<DualElement> ideal;
    if (sh.n_full) {
      ngens.push_back(Element(ambient, {1}));
      for (long z = 1; z < ell; ++z)
        ideal.push_back(uq.character(z) - eps);
    }
    Subgroup n(ambient, ngens);
    std::vector<Hom> sigma(1, Hom(gamma, gamma, {}));
    Hom delta(abstract_decomposition(n).abstract_group, gamma, {});
    SubgroupDatum d(a1, ell, sh.ip, sh.im, n, gamma, sigma, delta);
    auto res = uq.quotient_dim(sh.sub, ideal);
    if (!res.all_central || mpz_class(res.dim) != dim_H(d)) return false;
  }
  return true;
}

}  // namespace oracle_detail

inline int cmd_oracle(long ell, const std::string& which,
                      std::ostream& out) {
  UqSl2 uq(ell);
  std::vector<std::pair<std::string, bool (*)(const UqSl2&)>> table{
      {"relations", &oracle_detail::check_relations},
      {"hopf", &oracle_detail::check_hopf},
      {"characters", &oracle_detail::check_characters},
      {"central", &oracle_detail::check_central},
      {"quotient", &oracle_detail::check_quotient}};
  Json checks = Json::array();
  bool all_ok = true;
  bool matched = false;
  for (const auto& [name, fn] : table) {
    if (which != "all" && which != name) continue;
    matched = true;
    bool pass = fn(uq);
    all_ok = all_ok && pass;
    checks.push_back(Json{{"name", name}, {"pass", pass}});
  }
  if (!matched)
    throw std::invalid_argument("unknown check: " + which);
  Json j;
  j["v"] = 1;
  j["ell"] = ell;
  j["checks"] = checks;
  out << j.dump() << "\n";
  return all_ok ? 0 : 1;
}

// Front end: parses one subcommand and dispatches. Exit code 0 on success,
// 1 when the mathematics rejects the input, 2 when the command line is
// malformed.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"subgroup data toolkit for quantized coordinate algebras"};
  app.require_subcommand(1);

  std::string type;
  int rank = 1;
  long ell = 3;
  std::string datum_path, left_path, right_path, family_path;
  std::string gammas;
  std::string format = "json";
  std::string check = "all";

  CLI::App* roots = app.add_subcommand("roots", "root system facts");
  roots->add_option("--type", type, "Cartan letter A..G")->required();
  roots->add_option("--rank", rank, "rank")->required();

  CLI::App* datum_dim =
      app.add_subcommand("datum-dim", "dimensions attached to a datum");
  datum_dim->add_option("--datum", datum_path, "datum JSON file")->required();

  CLI::App* leq_cmd = app.add_subcommand("leq", "compare two data");
  leq_cmd->add_option("--left", left_path, "left datum JSON file")
      ->required();
  leq_cmd->add_option("--right", right_path, "right datum JSON file")
      ->required();

  CLI::App* poset = app.add_subcommand("poset", "class a family of data");
  poset->add_option("--family", family_path, "family JSON file")->required();
  poset->add_option("--out", format, "json or dot");

  CLI::App* census_cmd =
      app.add_subcommand("census", "enumerate and class all data");
  census_cmd->add_option("--type", type, "Cartan letter")->required();
  census_cmd->add_option("--rank", rank, "rank")->required();
  census_cmd->add_option("--ell", ell, "odd root order")->required();
  census_cmd->add_option("--gammas", gammas, "catalog, e.g. 1,Z2,Z3")
      ->required();
  census_cmd->add_option("--out", format, "json or dot");

  CLI::App* oracle = app.add_subcommand("oracle", "rank-1 verification");
  oracle->add_option("--ell", ell, "odd root order");
  oracle->add_option("--check", check,
                     "all, relations, hopf, characters, central, quotient");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    Caps caps = Caps::from_env();
    if (*roots) return cmd_roots(type, rank, out);
    if (*datum_dim) return cmd_datum_dim(datum_path, out, err);
    if (*leq_cmd) return cmd_leq(left_path, right_path, out);
    if (*poset) {
      if (format != "json" && format != "dot")
        throw std::invalid_argument("unknown output format: " + format);
      return cmd_poset(family_path, format, out);
    }
    if (*census_cmd) {
      if (format != "json" && format != "dot")
        throw std::invalid_argument("unknown output format: " + format);
      return cmd_census(type, rank, ell, gammas, format, caps, out);
    }
    if (*oracle) return cmd_oracle(ell, check, out);
  } catch (const CapExceeded& e) {
    err << "cap exceeded on axis " << e.axis << ": " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cli
}  // namespace qsub
