#pragma once

#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qsub/abelian.hpp"
#include "qsub/cyclotomic.hpp"
#include "qsub/root_system.hpp"

namespace qsub {

inline mpz_class pow_z(long base, long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return out;
}

// PBW dimension of the regular subalgebra: ell^(n + |Psi+| + |Psi-|),
// the monomials F^a K^t E^m with all exponents below ell, F-part indexed
// by the positive roots supported on Iminus and E-part by those on Iplus.
inline mpz_class dim_uel(const RootSystem& rs, long ell,
                         const std::set<int>& Iplus,
                         const std::set<int>& Iminus) {
  return pow_z(ell, rs.dim_l(Iplus, Iminus));
}

// Hopf subalgebra triple: a subgroup of the full finite torus plus the
// simple-root index sets; the torus generators named by Iplus and Iminus
// must lie in Sigma.
struct Triple {
  Subgroup Sigma;  // subgroup of (Z/ell)^n
  std::set<int> Iplus;
  std::set<int> Iminus;
};

inline mpz_class hopf_subalgebra_dim(const Triple& t, const RootSystem& rs,
                                     long ell) {
  const FinAbGroup torus = FinAbGroup::torus(ell, rs.rank());
  if (!(t.Sigma.ambient() == torus))
    throw std::invalid_argument("triple: Sigma must live in (Z/ell)^n");
  std::set<int> I = t.Iplus;
  I.insert(t.Iminus.begin(), t.Iminus.end());
  for (int i : I) {
    std::vector<long> e(rs.rank(), 0);
    e[i - 1] = 1;
    if (!t.Sigma.contains(Element(torus, e)))
      throw std::domain_error("triple: torus generator " + std::to_string(i) +
                              " missing from Sigma");
  }
  long roots = static_cast<long>(rs.psi(t.Iplus).size()) +
               static_cast<long>(rs.psi(t.Iminus).size());
  return pow_z(ell, roots) * t.Sigma.order();
}

// Quotient datum: index sets, a subgroup N of the dual of the complementary
// torus, a finite abelian group Gamma embedded in the maximal torus via n
// characters, and a pairing map delta from N into the characters of Gamma.
struct SubgroupDatum {
  RootSystem rs;
  long ell;
  std::set<int> Iplus;
  std::set<int> Iminus;
  Subgroup N;              // subgroup of (Z/ell)^s, s = n - |I|
  FinAbGroup Gamma;
  std::vector<Hom> sigma;  // n characters Gamma -> Z/exponent(Gamma)
  Hom delta;               // N (in invariant-factor form) -> dual(Gamma)
  Decomposition n_decomp;  // abstract form of N, fixed at construction

  SubgroupDatum(RootSystem rs_, long ell_, std::set<int> iplus,
                std::set<int> iminus, Subgroup n_, FinAbGroup gamma,
                std::vector<Hom> sigma_, Hom delta_)
      : rs(std::move(rs_)), ell(ell_), Iplus(std::move(iplus)),
        Iminus(std::move(iminus)), N(std::move(n_)), Gamma(std::move(gamma)),
        sigma(std::move(sigma_)), delta(std::move(delta_)),
        n_decomp(abstract_decomposition(N)) {}

  std::set<int> I() const {
    std::set<int> u = Iplus;
    u.insert(Iminus.begin(), Iminus.end());
    return u;
  }

  // ambient coordinates not named by I, ascending; these index N's torus
  std::vector<int> complement() const {
    std::set<int> u = I();
    std::vector<int> out;
    for (int i = 1; i <= rs.rank(); ++i)
      if (!u.count(i)) out.push_back(i);
    return out;
  }

  int s() const { return rs.rank() - static_cast<int>(I().size()); }

  // target group of each sigma coordinate
  FinAbGroup character_target() const {
    long e = Gamma.exponent();
    return e == 1 ? FinAbGroup::trivial() : FinAbGroup({e});
  }

  bool operator==(const SubgroupDatum& o) const {
    return rs.type() == o.rs.type() && ell == o.ell && Iplus == o.Iplus &&
           Iminus == o.Iminus && N == o.N && Gamma == o.Gamma &&
           sigma_matrices() == o.sigma_matrices() &&
           delta.matrix() == o.delta.matrix();
  }

  std::vector<std::vector<std::vector<long>>> sigma_matrices() const {
    std::vector<std::vector<std::vector<long>>> out;
    for (const Hom& h : sigma) out.push_back(h.matrix());
    return out;
  }
};

// Structural check of every datum invariant; returns human-readable
// violations instead of throwing.
inline std::vector<std::string> validate(const SubgroupDatum& d) {
  std::vector<std::string> out;
  if (d.ell < 3 || d.ell % 2 == 0)
    out.push_back("ell must be odd and >= 3");
  if (d.rs.type().letter == 'G' && d.ell % 3 == 0)
    out.push_back("3 divides ell for G2");
  for (int i : d.Iplus)
    if (i < 1 || i > d.rs.rank()) out.push_back("Iplus index out of range");
  for (int i : d.Iminus)
    if (i < 1 || i > d.rs.rank()) out.push_back("Iminus index out of range");

  if (!(d.N.ambient() == FinAbGroup::torus(d.ell, d.s())))
    out.push_back("N must be a subgroup of (Z/ell)^s for s complementary indices");

  FinAbGroup chi = d.character_target();
  if (static_cast<int>(d.sigma.size()) != d.rs.rank())
    out.push_back("sigma must have one character per simple root");
  bool sigma_shape_ok = true;
  for (const Hom& h : d.sigma)
    if (!(h.source() == d.Gamma) || !(h.target() == chi)) {
      out.push_back("sigma coordinate has wrong source or target");
      sigma_shape_ok = false;
      break;
    }
  if (sigma_shape_ok && static_cast<int>(d.sigma.size()) == d.rs.rank()) {
    // injectivity = trivial joint kernel of the coordinate characters
    for (const Element& g : elements(d.Gamma)) {
      if (g.is_zero()) continue;
      bool in_kernel = true;
      for (const Hom& h : d.sigma)
        if (!h.apply(g).is_zero()) {
          in_kernel = false;
          break;
        }
      if (in_kernel) {
        out.push_back("sigma not injective");
        break;
      }
    }
  }

  if (!(d.delta.source() == d.n_decomp.abstract_group))
    out.push_back("delta source must be N in invariant-factor form");
  if (!(d.delta.target() == dual(d.Gamma)))
    out.push_back("delta target must be the dual of Gamma");
  return out;
}

inline void require_valid(const SubgroupDatum& d) {
  std::vector<std::string> violations = validate(d);
  if (violations.empty()) return;
  std::string msg = "invalid datum:";
  for (const std::string& v : violations) msg += " " + v + ";";
  throw std::domain_error(msg);
}

// The Hopf-subalgebra triple attached to a datum: Sigma has the I-indexed
// torus coordinates free and the complementary coordinates running over the
// annihilator of N, so |Sigma| * |N| = ell^n.
inline Triple sigma_group(const SubgroupDatum& d) {
  require_valid(d);
  const FinAbGroup torus = FinAbGroup::torus(d.ell, d.rs.rank());
  std::vector<int> comp = d.complement();
  std::vector<Element> gens;
  for (int i : d.I()) {
    std::vector<long> e(d.rs.rank(), 0);
    e[i - 1] = 1;
    gens.push_back(Element(torus, e));
  }
  Subgroup omega = annihilator(d.N);
  for (const Element& w : omega.generators()) {
    std::vector<long> e(d.rs.rank(), 0);
    for (size_t j = 0; j < comp.size(); ++j) e[comp[j] - 1] = w.coords[j];
    gens.push_back(Element(torus, e));
  }
  return Triple{Subgroup(torus, gens), d.Iplus, d.Iminus};
}

inline mpz_class dim_uel(const SubgroupDatum& d) {
  return dim_uel(d.rs, d.ell, d.Iplus, d.Iminus);
}

// dim of the quotient Hopf algebra presented by N: dim_uel / |N|.
inline mpz_class dim_H(const SubgroupDatum& d) {
  require_valid(d);
  mpz_class total = dim_uel(d);
  mpz_class n_order = d.N.order();
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(),
              n_order.get_mpz_t());
  if (r != 0) throw std::logic_error("|N| does not divide dim_uel");
  return q;
}

inline mpz_class dim_AD(const SubgroupDatum& d) {
  return d.Gamma.order() * dim_H(d);
}

// Character of the full finite torus determined by z in (Z/ell)^s: the
// z-coordinates act on the complementary torus coordinates, the I-indexed
// coordinates are ignored.
struct DCharacter {
  long ell;
  int n;
  std::vector<int> complement;  // 1-based ambient indices carrying z
  Element z;                    // element of (Z/ell)^s

  // exponent vector on the full torus: z spread onto its coordinates
  std::vector<long> extended() const {
    std::vector<long> out(n, 0);
    for (size_t j = 0; j < complement.size(); ++j)
      out[complement[j] - 1] = z.coords[j];
    return out;
  }

  // value on a torus element, a power of the primitive root
  Cyclotomic evaluate(const Element& t) const {
    if (!(t.group == FinAbGroup::torus(ell, n)))
      throw std::invalid_argument("DCharacter evaluated outside its torus");
    std::vector<long> e = extended();
    long acc = 0;
    for (int i = 0; i < n; ++i) acc = (acc + e[i] * t.coords[i]) % ell;
    return root_power(ell, acc);
  }

  DCharacter operator*(const DCharacter& o) const {
    if (ell != o.ell || n != o.n || complement != o.complement)
      throw std::invalid_argument("DCharacter product shape mismatch");
    return DCharacter{ell, n, complement, z + o.z};
  }

  bool is_trivial() const { return z.is_zero(); }
};

inline DCharacter dcharacter(const SubgroupDatum& d, const Element& z) {
  if (!(z.group == d.N.ambient()))
    throw std::invalid_argument("dcharacter: z must lie in (Z/ell)^s");
  return DCharacter{d.ell, d.rs.rank(), d.complement(), z};
}

}  // namespace qsub
