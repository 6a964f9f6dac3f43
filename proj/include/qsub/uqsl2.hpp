#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsub/cyclotomic.hpp"
#include "qsub/linalg.hpp"
#include "qsub/qnumbers.hpp"

namespace qsub {

// PBW monomial index (a, b, c) standing for F^a K^b E^c, all exponents in
// [0, ell). Map keys compare lexicographically, which fixes the print and
// iteration order everywhere below.
using PbwIndex = std::array<long, 3>;
using TensorIndex = std::array<long, 6>;  // (a,b,c | a',b',c')

// Sparse element of the rank-1 small quantum group.
struct PbwElement {
  long ell = 0;
  std::map<PbwIndex, Cyclotomic> coeffs;

  static PbwElement zero(long ell) { return PbwElement{ell, {}}; }

  static PbwElement monomial(long ell, long a, long b, long c) {
    if (a < 0 || a >= ell || b < 0 || b >= ell || c < 0 || c >= ell)
      throw std::invalid_argument("PBW exponent out of range");
    PbwElement x{ell, {}};
    x.coeffs.emplace(PbwIndex{a, b, c}, Cyclotomic::one(ell));
    return x;
  }

  static PbwElement one(long ell) { return monomial(ell, 0, 0, 0); }

  void add_term(const PbwIndex& m, const Cyclotomic& coeff) {
    if (coeff.is_zero()) return;
    auto it = coeffs.find(m);
    if (it == coeffs.end()) {
      coeffs.emplace(m, coeff);
      return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) coeffs.erase(it);
  }

  bool is_zero() const { return coeffs.empty(); }

  PbwElement operator+(const PbwElement& o) const {
    require_same(o);
    PbwElement r = *this;
    for (const auto& [m, coeff] : o.coeffs) r.add_term(m, coeff);
    return r;
  }

  PbwElement operator-(const PbwElement& o) const {
    require_same(o);
    PbwElement r = *this;
    for (const auto& [m, coeff] : o.coeffs) r.add_term(m, -coeff);
    return r;
  }

  PbwElement operator-() const {
    PbwElement r{ell, {}};
    for (const auto& [m, coeff] : coeffs) r.coeffs.emplace(m, -coeff);
    return r;
  }

  PbwElement scaled(const Cyclotomic& s) const {
    PbwElement r{ell, {}};
    if (s.is_zero()) return r;
    for (const auto& [m, coeff] : coeffs) r.add_term(m, s * coeff);
    return r;
  }

  bool operator==(const PbwElement& o) const {
    return ell == o.ell && coeffs == o.coeffs;
  }

 private:
  void require_same(const PbwElement& o) const {
    if (ell != o.ell)
      throw std::invalid_argument("mixed root orders in PBW arithmetic");
  }
};

// Sparse element of the tensor square, components kept in PBW form.
struct TensorElement {
  long ell = 0;
  std::map<TensorIndex, Cyclotomic> coeffs;

  static TensorElement zero(long ell) { return TensorElement{ell, {}}; }

  static TensorElement unit(long ell) {
    TensorElement t{ell, {}};
    t.coeffs.emplace(TensorIndex{0, 0, 0, 0, 0, 0}, Cyclotomic::one(ell));
    return t;
  }

  void add_term(const TensorIndex& m, const Cyclotomic& coeff) {
    if (coeff.is_zero()) return;
    auto it = coeffs.find(m);
    if (it == coeffs.end()) {
      coeffs.emplace(m, coeff);
      return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) coeffs.erase(it);
  }

  TensorElement operator+(const TensorElement& o) const {
    if (ell != o.ell)
      throw std::invalid_argument("mixed root orders in tensor arithmetic");
    TensorElement r = *this;
    for (const auto& [m, coeff] : o.coeffs) r.add_term(m, coeff);
    return r;
  }

  bool operator==(const TensorElement& o) const {
    return ell == o.ell && coeffs == o.coeffs;
  }

  bool is_zero() const { return coeffs.empty(); }
};

// Which of the four distinguished subalgebras an operation runs in: the
// torus span of K, either Borel half, or the whole algebra.
struct Subalgebra {
  bool with_f = false;  // admit F^a with a > 0
  bool with_e = false;  // admit E^c with c > 0

  static Subalgebra torus() { return {false, false}; }
  static Subalgebra borel_plus() { return {false, true}; }
  static Subalgebra borel_minus() { return {true, false}; }
  static Subalgebra full() { return {true, true}; }

  std::string name() const {
    if (with_f && with_e) return "full";
    if (with_e) return "borel+";
    if (with_f) return "borel-";
    return "torus";
  }
};

// Functional on the algebra, stored dense over the full PBW basis; entries
// away from a chosen subalgebra stay zero.
struct DualElement {
  long ell = 0;
  std::vector<Cyclotomic> values;

  static DualElement zero(long ell) {
    return DualElement{ell, std::vector<Cyclotomic>(
                                static_cast<size_t>(ell) * ell * ell,
                                Cyclotomic::zero(ell))};
  }

  DualElement operator+(const DualElement& o) const {
    require_same(o);
    DualElement r = *this;
    for (size_t i = 0; i < values.size(); ++i)
      r.values[i] = r.values[i] + o.values[i];
    return r;
  }

  DualElement operator-(const DualElement& o) const {
    require_same(o);
    DualElement r = *this;
    for (size_t i = 0; i < values.size(); ++i)
      r.values[i] = r.values[i] - o.values[i];
    return r;
  }

  bool operator==(const DualElement& o) const {
    return ell == o.ell && values == o.values;
  }

  bool is_zero() const {
    for (const Cyclotomic& v : values)
      if (!v.is_zero()) return false;
    return true;
  }

 private:
  void require_same(const DualElement& o) const {
    if (ell != o.ell || values.size() != o.values.size())
      throw std::invalid_argument("mixed root orders in dual arithmetic");
  }
};

// Rank-1 small quantum group at a primitive odd root of unity, with exact
// coefficients. Generators E, F, K subject to
//   K E = eps^2 E K,   K F = eps^-2 F K,
//   E F - F E = (K - K^-1) / (eps - eps^-1),
//   E^ell = F^ell = 0,  K^ell = 1.
// Products straighten through a crossing table X[c][a] = E^c F^a built once
// at construction; the coproduct and antipode power tables are also built
// eagerly, so a constructed instance is read-only and safe to share.
class UqSl2 {
 public:
  explicit UqSl2(long ell)
      : ell_(check_order(ell)),
        eps_(root_power(ell, 1)),
        denominv_((root_power(ell, 1) - root_power(ell, -1)).inverse()) {
    build_crossing_table();
    build_coproduct_tables();
    build_antipode_tables();
    self_check();
  }

  long ell() const { return ell_; }
  long dim() const { return ell_ * ell_ * ell_; }

  PbwElement e() const { return PbwElement::monomial(ell_, 0, 0, 1); }
  PbwElement f() const { return PbwElement::monomial(ell_, 1, 0, 0); }
  PbwElement k() const { return PbwElement::monomial(ell_, 0, 1, 0); }
  PbwElement k_inverse() const {
    return PbwElement::monomial(ell_, 0, ell_ - 1, 0);
  }

  // -- algebra ------------------------------------------------------------

  PbwElement multiply(const PbwElement& x, const PbwElement& y) const {
    require_ell(x.ell);
    require_ell(y.ell);
    PbwElement r = PbwElement::zero(ell_);
    for (const auto& [m1, c1] : x.coeffs)
      for (const auto& [m2, c2] : y.coeffs)
        accumulate_monomial_product(r, m1, m2, c1 * c2);
    return r;
  }

  PbwElement power(const PbwElement& x, long n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    PbwElement r = PbwElement::one(ell_);
    for (long i = 0; i < n; ++i) r = multiply(r, x);
    return r;
  }

  // -- coalgebra ----------------------------------------------------------

  Cyclotomic counit(const PbwElement& x) const {
    require_ell(x.ell);
    Cyclotomic r = Cyclotomic::zero(ell_);
    for (const auto& [m, coeff] : x.coeffs)
      if (m[0] == 0 && m[2] == 0) r = r + coeff;
    return r;
  }

  const TensorElement& comultiply_basis(const PbwIndex& m) const {
    return coproduct_[dense_index(m)];
  }

  TensorElement comultiply(const PbwElement& x) const {
    require_ell(x.ell);
    TensorElement r = TensorElement::zero(ell_);
    for (const auto& [m, coeff] : x.coeffs)
      for (const auto& [t, gamma] : comultiply_basis(m).coeffs)
        r.add_term(t, coeff * gamma);
    return r;
  }

  TensorElement tensor_multiply(const TensorElement& x,
                                const TensorElement& y) const {
    if (x.ell != ell_ || y.ell != ell_)
      throw std::invalid_argument("mixed root orders in tensor arithmetic");
    TensorElement r = TensorElement::zero(ell_);
    for (const auto& [t1, c1] : x.coeffs)
      for (const auto& [t2, c2] : y.coeffs) {
        PbwElement left = PbwElement::zero(ell_);
        accumulate_monomial_product(left, {t1[0], t1[1], t1[2]},
                                    {t2[0], t2[1], t2[2]},
                                    Cyclotomic::one(ell_));
        PbwElement right = PbwElement::zero(ell_);
        accumulate_monomial_product(right, {t1[3], t1[4], t1[5]},
                                    {t2[3], t2[4], t2[5]},
                                    Cyclotomic::one(ell_));
        Cyclotomic cc = c1 * c2;
        for (const auto& [ml, cl] : left.coeffs)
          for (const auto& [mr, cr] : right.coeffs)
            r.add_term({ml[0], ml[1], ml[2], mr[0], mr[1], mr[2]},
                       cc * cl * cr);
      }
    return r;
  }

  PbwElement antipode(const PbwElement& x) const {
    require_ell(x.ell);
    PbwElement r = PbwElement::zero(ell_);
    for (const auto& [m, coeff] : x.coeffs) {
      // anti-homomorphism: S(F^a K^b E^c) = S(E)^c S(K)^b S(F)^a
      PbwElement t = multiply(antipode_e_[m[2]],
                              PbwElement::monomial(ell_, 0, inv_exp(m[1]), 0));
      t = multiply(t, antipode_f_[m[0]]);
      for (const auto& [mt, ct] : t.coeffs) r.add_term(mt, coeff * ct);
    }
    return r;
  }

  // -- bases ---------------------------------------------------------------

  long dense_index(const PbwIndex& m) const {
    return (m[0] * ell_ + m[1]) * ell_ + m[2];
  }

  std::vector<PbwIndex> basis(const Subalgebra& sub) const {
    std::vector<PbwIndex> out;
    long amax = sub.with_f ? ell_ : 1;
    long cmax = sub.with_e ? ell_ : 1;
    for (long a = 0; a < amax; ++a)
      for (long b = 0; b < ell_; ++b)
        for (long c = 0; c < cmax; ++c) out.push_back({a, b, c});
    return out;
  }

  long basis_size(const Subalgebra& sub) const {
    return ell_ * (sub.with_f ? ell_ : 1) * (sub.with_e ? ell_ : 1);
  }

  // -- dual algebra ---------------------------------------------------------

  DualElement basis_dual(const PbwIndex& m) const {
    DualElement d = DualElement::zero(ell_);
    d.values[dense_index(m)] = Cyclotomic::one(ell_);
    return d;
  }

  // convolution unit: the counit viewed as a functional
  DualElement counit_dual() const {
    DualElement d = DualElement::zero(ell_);
    for (long b = 0; b < ell_; ++b)
      d.values[dense_index({0, b, 0})] = Cyclotomic::one(ell_);
    return d;
  }

  // multiplicative functional candidate K |-> eps^j, E, F |-> 0
  DualElement character(long j) const {
    DualElement d = DualElement::zero(ell_);
    for (long b = 0; b < ell_; ++b)
      d.values[dense_index({0, b, 0})] = root_power(ell_, j * b);
    return d;
  }

  // All algebra maps to the field, found by checking the eps-power
  // candidates against every basis product of the subalgebra. The torus
  // and both Borel halves admit ell of them; the full algebra only the
  // counit, since the E F commutator forces the K value to 1.
  std::vector<DualElement> characters(const Subalgebra& sub) const {
    std::vector<PbwIndex> bs = basis(sub);
    std::vector<DualElement> out;
    for (long j = 0; j < ell_; ++j) {
      DualElement chi = character(j);
      bool ok = true;
      for (size_t p = 0; p < bs.size() && ok; ++p)
        for (size_t q = 0; q < bs.size() && ok; ++q) {
          PbwElement prod = PbwElement::zero(ell_);
          accumulate_monomial_product(prod, bs[p], bs[q],
                                      Cyclotomic::one(ell_));
          Cyclotomic lhs = Cyclotomic::zero(ell_);
          for (const auto& [m, coeff] : prod.coeffs)
            lhs = lhs + coeff * chi.values[dense_index(m)];
          Cyclotomic rhs = chi.values[dense_index(bs[p])] *
                           chi.values[dense_index(bs[q])];
          if (!(lhs == rhs)) ok = false;
        }
      if (ok) out.push_back(std::move(chi));
    }
    return out;
  }

  // The distinguished character family of the subalgebra: one character
  // per torus direction not consumed by E or F. Only the torus leaves a
  // free direction at rank 1; elsewhere the family is just the counit.
  std::vector<DualElement> dcharacters(const Subalgebra& sub) const {
    std::vector<DualElement> out;
    if (!sub.with_e && !sub.with_f) {
      for (long j = 0; j < ell_; ++j) out.push_back(character(j));
    } else {
      out.push_back(counit_dual());
    }
    return out;
  }

  DualElement dual_convolution(const DualElement& f, const DualElement& g,
                               const Subalgebra& sub) const {
    require_support(f, sub, "left");
    require_support(g, sub, "right");
    DualElement r = DualElement::zero(ell_);
    for (const PbwIndex& m : basis(sub)) {
      Cyclotomic acc = Cyclotomic::zero(ell_);
      for (const auto& [t, gamma] : comultiply_basis(m).coeffs) {
        const Cyclotomic& fv = f.values[dense_index({t[0], t[1], t[2]})];
        if (fv.is_zero()) continue;
        const Cyclotomic& gv = g.values[dense_index({t[3], t[4], t[5]})];
        if (gv.is_zero()) continue;
        acc = acc + gamma * fv * gv;
      }
      r.values[dense_index(m)] = std::move(acc);
    }
    return r;
  }

  bool is_central_dual(const DualElement& f, const Subalgebra& sub) const {
    for (const PbwIndex& m : basis(sub)) {
      DualElement em = basis_dual(m);
      if (!(dual_convolution(f, em, sub) == dual_convolution(em, f, sub)))
        return false;
    }
    return true;
  }

  struct QuotientResult {
    long dim = 0;
    bool all_central = true;
  };

  // Dimension of the dual algebra of the subalgebra modulo the two-sided
  // ideal generated by ideal_gens. The span of e_u * g * e_v over all dual
  // basis pairs (u, v) is reduced exactly; non-central generators are
  // legal, the flag just records whether any occurred.
  QuotientResult quotient_dim(const Subalgebra& sub,
                              const std::vector<DualElement>& ideal_gens)
      const {
    std::vector<PbwIndex> bs = basis(sub);
    QuotientResult res;
    EchelonBasis span(bs.size());
    std::vector<DualElement> duals;
    duals.reserve(bs.size());
    for (const PbwIndex& m : bs) duals.push_back(basis_dual(m));
    for (const DualElement& g : ideal_gens) {
      require_support(g, sub, "ideal generator");
      if (!is_central_dual(g, sub)) res.all_central = false;
      for (size_t v = 0; v < bs.size(); ++v) {
        DualElement gv = dual_convolution(g, duals[v], sub);
        for (size_t u = 0; u < bs.size(); ++u) {
          DualElement row = dual_convolution(duals[u], gv, sub);
          std::vector<Cyclotomic> vec;
          vec.reserve(bs.size());
          for (const PbwIndex& m : bs)
            vec.push_back(row.values[dense_index(m)]);
          span.insert(std::move(vec));
        }
      }
    }
    res.dim = static_cast<long>(bs.size() - span.rank());
    return res;
  }

 private:
  static long check_order(long ell) {
    if (ell < 3 || ell % 2 == 0)
      throw std::domain_error("root order must be odd and >= 3");
    return ell;
  }

  long ell_;
  Cyclotomic eps_;
  Cyclotomic denominv_;  // (eps - eps^-1)^-1
  std::vector<std::vector<PbwElement>> cross_;  // cross_[c][a] = E^c F^a
  std::vector<TensorElement> coproduct_;        // per dense basis index
  std::vector<PbwElement> antipode_e_;          // (-K^-1 E)^c
  std::vector<PbwElement> antipode_f_;          // (-F K)^a

  void require_ell(long other) const {
    if (other != ell_)
      throw std::invalid_argument("element has a different root order");
  }

  long inv_exp(long b) const { return (ell_ - b) % ell_; }

  // E^c F^a holds straightened once; the recurrence multiplies by E on the
  // left, using E F^i = F^i E + [i] F^{i-1} (eps^{1-i} K - eps^{i-1} K^-1)
  //                                        / (eps - eps^-1).
  void build_crossing_table() {
    cross_.assign(ell_, std::vector<PbwElement>(ell_, PbwElement::zero(ell_)));
    for (long a = 0; a < ell_; ++a)
      cross_[0][a].add_term({a, 0, 0}, Cyclotomic::one(ell_));
    for (long c = 1; c < ell_; ++c)
      for (long a = 0; a < ell_; ++a) {
        PbwElement& out = cross_[c][a];
        for (const auto& [m, gamma] : cross_[c - 1][a].coeffs) {
          long i = m[0], j = m[1], kk = m[2];
          if (kk + 1 < ell_)
            out.add_term({i, j, kk + 1}, gamma * root_power(ell_, -2 * j));
          if (i >= 1) {
            Cyclotomic qi = q_number(i, eps_);
            out.add_term({i - 1, (j + 1) % ell_, kk},
                         gamma * qi * denominv_ * root_power(ell_, 1 - i));
            out.add_term({i - 1, (j - 1 + ell_) % ell_, kk},
                         -(gamma * qi * denominv_ * root_power(ell_, i - 1)));
          }
        }
      }
  }

  // (F^a K^b E^c)(F^a' K^b' E^c') straightened through cross_[c][a'];
  // K-exponents add mod ell, E- and F-overflow terms vanish.
  void accumulate_monomial_product(PbwElement& out, const PbwIndex& m1,
                                   const PbwIndex& m2,
                                   const Cyclotomic& scale) const {
    if (scale.is_zero()) return;
    for (const auto& [m, gamma] : cross_[m1[2]][m2[0]].coeffs) {
      long i = m[0], j = m[1], kk = m[2];
      if (m1[0] + i >= ell_ || kk + m2[2] >= ell_) continue;
      Cyclotomic factor =
          scale * gamma * root_power(ell_, -2 * (m1[1] * i + kk * m2[1]));
      out.add_term({m1[0] + i, (m1[1] + j + m2[1]) % ell_, kk + m2[2]},
                   factor);
    }
  }

  // Coproduct on generators:
  //   K |-> K (x) K,  E |-> E (x) 1 + K (x) E,  F |-> F (x) K^-1 + 1 (x) F.
  // Powers are memoized, then every basis monomial gets its coproduct
  // precomputed so convolution loops stay table lookups.
  void build_coproduct_tables() {
    std::vector<TensorElement> dE(ell_, TensorElement::unit(ell_));
    std::vector<TensorElement> dF(ell_, TensorElement::unit(ell_));
    std::vector<TensorElement> dK(ell_, TensorElement::unit(ell_));
    TensorElement de1 = TensorElement::zero(ell_);
    de1.add_term({0, 0, 1, 0, 0, 0}, Cyclotomic::one(ell_));
    de1.add_term({0, 1, 0, 0, 0, 1}, Cyclotomic::one(ell_));
    TensorElement df1 = TensorElement::zero(ell_);
    df1.add_term({1, 0, 0, 0, ell_ - 1, 0}, Cyclotomic::one(ell_));
    df1.add_term({0, 0, 0, 1, 0, 0}, Cyclotomic::one(ell_));
    for (long p = 1; p < ell_; ++p) {
      dE[p] = tensor_multiply(dE[p - 1], de1);
      dF[p] = tensor_multiply(dF[p - 1], df1);
      TensorElement dk = TensorElement::zero(ell_);
      dk.add_term({0, p, 0, 0, p, 0}, Cyclotomic::one(ell_));
      dK[p] = std::move(dk);
    }
    coproduct_.assign(dim(), TensorElement::zero(ell_));
    for (long a = 0; a < ell_; ++a)
      for (long b = 0; b < ell_; ++b) {
        TensorElement fk = tensor_multiply(dF[a], dK[b]);
        for (long c = 0; c < ell_; ++c)
          coproduct_[dense_index({a, b, c})] = tensor_multiply(fk, dE[c]);
      }
  }

  // S(K) = K^-1, S(E) = -K^-1 E, S(F) = -F K; powers memoized.
  void build_antipode_tables() {
    antipode_e_.assign(ell_, PbwElement::one(ell_));
    antipode_f_.assign(ell_, PbwElement::one(ell_));
    PbwElement se = PbwElement::zero(ell_);
    se.add_term({0, ell_ - 1, 1}, -Cyclotomic::one(ell_));
    PbwElement sf = PbwElement::zero(ell_);
    sf.add_term({1, 1, 0}, -Cyclotomic::one(ell_));
    for (long p = 1; p < ell_; ++p) {
      antipode_e_[p] = multiply(antipode_e_[p - 1], se);
      antipode_f_[p] = multiply(antipode_f_[p - 1], sf);
    }
  }

  // The coproduct convention is pinned by the antipode axiom
  //   mult (S (x) id) coprod = counit * 1 = mult (id (x) S) coprod
  // on the generators; construction fails if the two disagree.
  void self_check() const {
    Cyclotomic eps2 = root_power(ell_, 2);
    if (!(multiply(k(), e()) == multiply(e(), k()).scaled(eps2)))
      throw std::logic_error("K E relation violated by the crossing table");
    if (!(multiply(k(), f()).scaled(eps2) == multiply(f(), k())))
      throw std::logic_error("K F relation violated by the crossing table");
    PbwElement comm = multiply(e(), f()) - multiply(f(), e());
    PbwElement expect = (k() - k_inverse()).scaled(denominv_);
    if (!(comm == expect))
      throw std::logic_error("E F commutator violated by the crossing table");
    if (!power(e(), ell_).is_zero() || !power(f(), ell_).is_zero())
      throw std::logic_error("nilpotency degree violated");
    for (const PbwElement& x : {e(), f(), k()}) {
      PbwElement left = PbwElement::zero(ell_);
      PbwElement right = PbwElement::zero(ell_);
      for (const auto& [t, gamma] : comultiply(x).coeffs) {
        PbwElement l = PbwElement::monomial(ell_, t[0], t[1], t[2]);
        PbwElement r = PbwElement::monomial(ell_, t[3], t[4], t[5]);
        PbwElement ls = multiply(antipode(l), r).scaled(gamma);
        PbwElement rs = multiply(l, antipode(r)).scaled(gamma);
        left = left + ls;
        right = right + rs;
      }
      PbwElement want = PbwElement::one(ell_).scaled(counit(x));
      if (!(left == want) || !(right == want))
        throw std::logic_error(
            "coproduct convention fails the antipode axiom");
    }
  }

  void require_support(const DualElement& d, const Subalgebra& sub,
                       const char* what) const {
    if (d.ell != ell_ ||
        d.values.size() != static_cast<size_t>(dim()))
      throw std::invalid_argument("dual element has a different root order");
    for (long a = 0; a < ell_; ++a)
      for (long b = 0; b < ell_; ++b)
        for (long c = 0; c < ell_; ++c) {
          if ((sub.with_f || a == 0) && (sub.with_e || c == 0)) continue;
          if (!d.values[dense_index({a, b, c})].is_zero())
            throw std::invalid_argument(
                std::string(what) + " functional supported outside the " +
                sub.name() + " subalgebra");
        }
  }
};

}  // namespace qsub
