#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qsub/caps.hpp"

namespace qsub {

// Finite abelian group in invariant-factor form m_1 | m_2 | ... | m_k,
// each factor >= 2; the empty list is the trivial group.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  explicit FinAbGroup(std::vector<long> factors) : factors_(std::move(factors)) {
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 2)
        throw std::domain_error("invariant factors must be >= 2");
      if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
        throw std::domain_error("invariant factors must form a divisibility chain");
    }
  }

  static FinAbGroup trivial() { return FinAbGroup(); }

  // (Z/ell)^s
  static FinAbGroup torus(long ell, int s) {
    return FinAbGroup(std::vector<long>(s, ell));
  }

  const std::vector<long>& factors() const { return factors_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }

  mpz_class order() const {
    mpz_class n = 1;
    for (long m : factors_) n *= m;
    return n;
  }

  long exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  bool operator==(const FinAbGroup&) const = default;

 private:
  std::vector<long> factors_;
};

// Element of a FinAbGroup, coordinates reduced mod the invariant factors.
struct Element {
  FinAbGroup group;
  std::vector<long> coords;

  Element(FinAbGroup g, std::vector<long> cs)
      : group(std::move(g)), coords(std::move(cs)) {
    if (coords.size() != group.factors().size())
      throw std::invalid_argument("element coordinate count mismatch");
    for (size_t i = 0; i < coords.size(); ++i) {
      long m = group.factors()[i];
      coords[i] = ((coords[i] % m) + m) % m;
    }
  }

  static Element zero(const FinAbGroup& g) {
    return Element(g, std::vector<long>(g.factors().size(), 0));
  }

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](long c) { return c == 0; });
  }

  Element operator+(const Element& o) const {
    check_group(o);
    std::vector<long> cs(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) cs[i] = coords[i] + o.coords[i];
    return Element(group, std::move(cs));
  }

  Element operator-() const {
    std::vector<long> cs(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) cs[i] = -coords[i];
    return Element(group, std::move(cs));
  }

  Element operator-(const Element& o) const { return *this + (-o); }

  Element operator*(long n) const {
    std::vector<long> cs(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) {
      long m = group.factors()[i];
      cs[i] = (coords[i] % m) * (n % m);
    }
    return Element(group, std::move(cs));
  }

  long order() const {
    long n = 1;
    for (size_t i = 0; i < coords.size(); ++i) {
      long m = group.factors()[i];
      long o = m / std::gcd(coords[i], m);  // order of coords[i] in Z/m
      n = std::lcm(n, o);
    }
    return n;
  }

  bool operator==(const Element&) const = default;
  bool operator<(const Element& o) const { return coords < o.coords; }

 private:
  void check_group(const Element& o) const {
    if (!(group == o.group))
      throw std::invalid_argument("elements of different groups");
  }
};

namespace detail {

// Row Hermite normal form of the lattice spanned by the given rows:
// upper echelon, positive pivots, entries above each pivot reduced into
// [0, pivot). Unique per lattice, so usable as a canonical form.
inline std::vector<std::vector<long>> hnf_rows(
    std::vector<std::vector<long>> rows, int k) {
  int r = 0;
  for (int c = 0; c < k && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
      // gcd-combine rows r and i to clear rows[i][c]
      while (rows[i][c] != 0) {
        long q = rows[r][c] / rows[i][c];
        for (int j = 0; j < k; ++j) rows[r][j] -= q * rows[i][j];
        std::swap(rows[r], rows[i]);
      }
    }
    if (rows[r][c] < 0)
      for (int j = 0; j < k; ++j) rows[r][j] = -rows[r][j];
    for (int i = 0; i < r; ++i) {
      long q = rows[i][c] / rows[r][c];
      if (rows[i][c] % rows[r][c] < 0) --q;  // floor division
      if (q != 0)
        for (int j = 0; j < k; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

// Solves x * H = v for integer x, H upper triangular with positive diagonal.
// Throws if the solution is not integral.
inline std::vector<long> solve_left_triangular(
    const std::vector<std::vector<long>>& H, const std::vector<long>& v) {
  int k = static_cast<int>(v.size());
  std::vector<long> x(k, 0);
  for (int j = 0; j < k; ++j) {
    long acc = v[j];
    for (int i = 0; i < j; ++i) acc -= x[i] * H[i][j];
    if (acc % H[j][j] != 0)
      throw std::logic_error("non-integral triangular solve");
    x[j] = acc / H[j][j];
  }
  return x;
}

// Smith normal form D = U*A*V, tracking the inverse of the accumulated
// column operations: each column op A <- A*E mirrors as Vinv <- E^{-1}*Vinv.
// Returns {diag(D), V^{-1}}.
inline std::pair<std::vector<long>, std::vector<std::vector<long>>>
smith_with_vinv(std::vector<std::vector<long>> A) {
  int k = static_cast<int>(A.size());
  std::vector<std::vector<long>> W(k, std::vector<long>(k, 0));
  for (int i = 0; i < k; ++i) W[i][i] = 1;

  auto col_sub = [&](int dst, int src, long q) {  // col dst -= q * col src
    for (int i = 0; i < k; ++i) A[i][dst] -= q * A[i][src];
    for (int j = 0; j < k; ++j) W[src][j] += q * W[dst][j];
  };
  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < k; ++i) std::swap(A[i][a], A[i][b]);
    std::swap(W[a], W[b]);
  };
  auto col_neg = [&](int c) {
    for (int i = 0; i < k; ++i) A[i][c] = -A[i][c];
    for (int j = 0; j < k; ++j) W[c][j] = -W[c][j];
  };

  for (int t = 0; t < k; ++t) {
    for (;;) {
      // move a nonzero entry of the trailing block to (t,t)
      int pi = -1, pj = -1;
      for (int i = t; i < k; ++i)
        for (int j = t; j < k; ++j)
          if (A[i][j] != 0 &&
              (pi < 0 || std::abs(A[i][j]) < std::abs(A[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;  // trailing block zero
      if (pi != t) std::swap(A[pi], A[t]);
      if (pj != t) col_swap(pj, t);

      bool clean = true;
      for (int i = t + 1; i < k; ++i)
        if (A[i][t] != 0) {
          long q = A[i][t] / A[t][t];
          for (int j = 0; j < k; ++j) A[i][j] -= q * A[t][j];
          if (A[i][t] != 0) clean = false;
        }
      for (int j = t + 1; j < k; ++j)
        if (A[t][j] != 0) {
          long q = A[t][j] / A[t][t];
          col_sub(j, t, q);
          if (A[t][j] != 0) clean = false;
        }
      if (!clean) continue;

      // enforce divisibility of the rest of the block by A[t][t]
      bool divides = true;
      for (int i = t + 1; i < k && divides; ++i)
        for (int j = t + 1; j < k && divides; ++j)
          if (A[i][j] % A[t][t] != 0) {
            col_sub(t, j, -1);  // col t += col j, reintroduces work at (i,t)
            divides = false;
          }
      if (divides) break;
    }
    if (A[t][t] < 0) col_neg(t);
  }

  std::vector<long> diag(k);
  for (int t = 0; t < k; ++t) diag[t] = A[t][t];
  return {diag, W};
}

}  // namespace detail

// Subgroup of a FinAbGroup, generated by a list of elements. The canonical
// form is the Hermite normal form of the lattice spanned by the generators
// together with the relation rows m_i e_i; the full member list is kept for
// ambient order <= 10^4.
class Subgroup {
 public:
  static constexpr long kMemberListLimit = 10000;

  Subgroup(FinAbGroup ambient, const std::vector<Element>& gens)
      : ambient_(std::move(ambient)) {
    int k = ambient_.num_factors();
    std::vector<std::vector<long>> rows;
    for (const Element& g : gens) {
      if (!(g.group == ambient_))
        throw std::invalid_argument("generator from a different group");
      rows.push_back(g.coords);
      generators_.push_back(g);
    }
    for (int i = 0; i < k; ++i) {
      std::vector<long> rel(k, 0);
      rel[i] = ambient_.factors()[i];
      rows.push_back(rel);
    }
    hnf_ = detail::hnf_rows(std::move(rows), k);

    mpz_class idx = 1;
    for (int i = 0; i < k; ++i) idx *= hnf_[i][i];
    order_ = ambient_.order() / idx;

    if (ambient_.order() <= kMemberListLimit) enumerate_members();
  }

  const FinAbGroup& ambient() const { return ambient_; }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::vector<long>>& canonical_form() const { return hnf_; }
  mpz_class order() const { return order_; }

  // sorted coordinate vectors of all members; ambient must be small
  const std::vector<std::vector<long>>& members() const {
    if (ambient_.order() > kMemberListLimit)
      throw std::logic_error("member list unavailable for large ambient group");
    return members_;
  }

  bool contains(const Element& x) const {
    if (!(x.group == ambient_))
      throw std::invalid_argument("element from a different group");
    // back-substitution against the triangular canonical form
    std::vector<long> v = x.coords;
    int k = ambient_.num_factors();
    for (int j = 0; j < k; ++j) {
      if (v[j] % hnf_[j][j] != 0) return false;
      long q = v[j] / hnf_[j][j];
      for (int c = j; c < k; ++c) v[c] -= q * hnf_[j][c];
    }
    return true;
  }

  bool operator==(const Subgroup& o) const {
    return ambient_ == o.ambient_ && hnf_ == o.hnf_;
  }
  bool operator<(const Subgroup& o) const { return hnf_ < o.hnf_; }

 private:
  void enumerate_members() {
    // BFS closure of the generators
    std::set<std::vector<long>> seen;
    std::vector<Element> frontier{Element::zero(ambient_)};
    seen.insert(frontier[0].coords);
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (const Element& x : frontier)
        for (const Element& g : generators_) {
          Element y = x + g;
          if (seen.insert(y.coords).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    members_.assign(seen.begin(), seen.end());
    if (mpz_class(static_cast<long>(members_.size())) != order_)
      throw std::logic_error("member closure disagrees with the lattice index");
  }

  FinAbGroup ambient_;
  std::vector<Element> generators_;
  std::vector<std::vector<long>> hnf_;
  mpz_class order_;
  std::vector<std::vector<long>> members_;
};

// Homomorphism between finite abelian groups, stored as the integer matrix
// with matrix[j][i] = j-th target coordinate of the image of the i-th
// source generator, entries reduced mod the target factors.
class Hom {
 public:
  Hom(FinAbGroup source, FinAbGroup target,
      std::vector<std::vector<long>> matrix)
      : source_(std::move(source)), target_(std::move(target)),
        matrix_(std::move(matrix)) {
    int rows = target_.num_factors(), cols = source_.num_factors();
    if (static_cast<int>(matrix_.size()) != rows)
      throw std::invalid_argument("hom matrix row count mismatch");
    for (auto& row : matrix_)
      if (static_cast<int>(row.size()) != cols)
        throw std::invalid_argument("hom matrix column count mismatch");
    for (int j = 0; j < rows; ++j) {
      long mt = target_.factors()[j];
      for (int i = 0; i < cols; ++i)
        matrix_[j][i] = ((matrix_[j][i] % mt) + mt) % mt;
    }
    // well-definedness: each source generator's order kills its image
    for (int i = 0; i < cols; ++i) {
      long ms = source_.factors()[i];
      for (int j = 0; j < rows; ++j)
        if ((matrix_[j][i] * ms) % target_.factors()[j] != 0)
          throw std::domain_error("hom not well-defined on generator " +
                                  std::to_string(i + 1));
    }
  }

  static Hom zero(const FinAbGroup& source, const FinAbGroup& target) {
    return Hom(source, target,
               std::vector<std::vector<long>>(
                   target.num_factors(),
                   std::vector<long>(source.num_factors(), 0)));
  }

  static Hom identity(const FinAbGroup& g) {
    std::vector<std::vector<long>> m(g.num_factors(),
                                     std::vector<long>(g.num_factors(), 0));
    for (int i = 0; i < g.num_factors(); ++i) m[i][i] = 1;
    return Hom(g, g, std::move(m));
  }

  const FinAbGroup& source() const { return source_; }
  const FinAbGroup& target() const { return target_; }
  const std::vector<std::vector<long>>& matrix() const { return matrix_; }

  Element apply(const Element& x) const {
    if (!(x.group == source_))
      throw std::invalid_argument("hom applied outside its source");
    std::vector<long> out(target_.num_factors(), 0);
    for (int j = 0; j < target_.num_factors(); ++j) {
      long mt = target_.factors()[j];
      long acc = 0;
      for (int i = 0; i < source_.num_factors(); ++i)
        acc = (acc + matrix_[j][i] * (x.coords[i] % mt)) % mt;
      out[j] = acc;
    }
    return Element(target_, std::move(out));
  }

  // this o other
  Hom compose(const Hom& other) const {
    if (!(other.target_ == source_))
      throw std::invalid_argument("hom composition mismatch");
    int rows = target_.num_factors(), cols = other.source_.num_factors();
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols, 0));
    for (int j = 0; j < rows; ++j)
      for (int i = 0; i < cols; ++i) {
        long acc = 0;
        for (int t = 0; t < source_.num_factors(); ++t)
          acc += matrix_[j][t] * other.matrix_[t][i];
        m[j][i] = acc % target_.factors()[j];
      }
    return Hom(other.source_, target_, std::move(m));
  }

  bool operator==(const Hom&) const = default;
  bool operator<(const Hom& o) const { return matrix_ < o.matrix_; }

 private:
  FinAbGroup source_;
  FinAbGroup target_;
  std::vector<std::vector<long>> matrix_;
};

// All elements in lexicographic coordinate order.
inline std::vector<Element> elements(const FinAbGroup& G,
                                     long cap = kDefaultEnumerationCap) {
  if (G.order() > cap)
    throw CapExceeded("enum", "element enumeration over " +
                                  G.order().get_str() + " exceeds cap " +
                                  std::to_string(cap));
  std::vector<Element> out;
  std::vector<long> c(G.num_factors(), 0);
  for (;;) {
    out.push_back(Element(G, c));
    int i = G.num_factors() - 1;
    while (i >= 0 && ++c[i] == G.factors()[i]) c[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

// Every subgroup exactly once, found by closing generator sets one element
// at a time and deduplicating by canonical form. Sorted by order, then by
// canonical form.
inline std::vector<Subgroup> subgroups(const FinAbGroup& G,
                                       long cap = kDefaultEnumerationCap) {
  std::vector<Element> all = elements(G, cap);
  std::map<std::vector<std::vector<long>>, Subgroup> found;
  std::vector<Subgroup> frontier{Subgroup(G, {})};
  found.emplace(frontier[0].canonical_form(), frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& S : frontier)
      for (const Element& g : all) {
        if (S.contains(g)) continue;
        std::vector<Element> gens = S.generators();
        gens.push_back(g);
        Subgroup bigger(G, gens);
        if (found.emplace(bigger.canonical_form(), bigger).second)
          next.push_back(bigger);
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& [form, S] : found) out.push_back(S);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.canonical_form() < b.canonical_form();
  });
  return out;
}

// All homomorphisms G -> H; a hom is any choice, for each source generator
// of order m_i, of a target element killed by m_i.
inline std::vector<Hom> homs(const FinAbGroup& G, const FinAbGroup& H,
                             bool injective_only = false,
                             long cap = kDefaultEnumerationCap) {
  std::vector<Element> targets = elements(H, cap);
  int k = G.num_factors();
  std::vector<std::vector<const Element*>> candidates(k);
  mpz_class total = 1;
  for (int i = 0; i < k; ++i) {
    long m = G.factors()[i];
    for (const Element& h : targets)
      if ((h * m).is_zero()) candidates[i].push_back(&h);
    total *= static_cast<long>(candidates[i].size());
  }
  if (total > cap)
    throw CapExceeded("enum", "hom enumeration of size " + total.get_str() +
                                  " exceeds cap " + std::to_string(cap));

  std::vector<Element> source_elements;
  if (injective_only) source_elements = elements(G, cap);

  std::vector<Hom> out;
  std::vector<size_t> pick(k, 0);
  for (;;) {
    std::vector<std::vector<long>> m(H.num_factors(), std::vector<long>(k, 0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < H.num_factors(); ++j)
        m[j][i] = candidates[i][pick[i]]->coords[j];
    Hom f(G, H, std::move(m));
    bool keep = true;
    if (injective_only) {
      for (const Element& x : source_elements)
        if (!x.is_zero() && f.apply(x).is_zero()) {
          keep = false;
          break;
        }
    }
    if (keep) out.push_back(f);

    if (k == 0) break;
    int i = k - 1;
    while (i >= 0 && ++pick[i] == candidates[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

// The character group; abstractly isomorphic, same invariant factors.
inline FinAbGroup dual(const FinAbGroup& G) { return G; }

// Perfect pairing on (Z/ell)^s: sum of coordinate products mod ell.
inline long pairing(const Element& x, const Element& y) {
  if (!(x.group == y.group))
    throw std::invalid_argument("pairing requires matching ranks");
  const auto& f = x.group.factors();
  if (f.empty()) return 0;
  long ell = f[0];
  for (long m : f)
    if (m != ell)
      throw std::invalid_argument("pairing requires a homocyclic torus");
  long acc = 0;
  for (size_t i = 0; i < f.size(); ++i)
    acc = (acc + x.coords[i] * y.coords[i]) % ell;
  return acc;
}

// {y : pairing(x, y) = 0 for all x in N}; it suffices to scan against the
// generators of N.
inline Subgroup annihilator(const Subgroup& N,
                            long cap = kDefaultEnumerationCap) {
  const FinAbGroup& G = N.ambient();
  std::vector<Element> member_gens;
  std::vector<Element> all = elements(G, cap);
  for (const Element& y : all) {
    bool ok = true;
    for (const Element& g : N.generators())
      if (pairing(g, y) != 0) {
        ok = false;
        break;
      }
    if (ok) member_gens.push_back(y);
  }
  return Subgroup(G, member_gens);
}

// A subgroup rewritten as an abstract group in invariant-factor form,
// together with concrete generators realizing the isomorphism and the
// member -> abstract-coordinate table.
struct Decomposition {
  FinAbGroup abstract_group;
  std::vector<Element> generators;  // generators[i] has order factors()[i]
  std::map<std::vector<long>, std::vector<long>> to_abstract;
};

// Computes the decomposition from the Smith normal form of the relation
// matrix of the subgroup's lattice presentation.
inline Decomposition abstract_decomposition(const Subgroup& S) {
  const FinAbGroup& G = S.ambient();
  int k = G.num_factors();
  const auto& H = S.canonical_form();

  // relation rows: m_i e_i = B[i] * H, B integral since m_i e_i lies in
  // the subgroup's lattice
  std::vector<std::vector<long>> B;
  for (int i = 0; i < k; ++i) {
    std::vector<long> rel(k, 0);
    rel[i] = G.factors()[i];
    B.push_back(detail::solve_left_triangular(H, rel));
  }
  auto [diag, Vinv] = detail::smith_with_vinv(std::move(B));

  // abstract coordinate a maps to the concrete element (a V^{-1}) H
  std::vector<long> kept_factors;
  std::vector<Element> gens;
  for (int t = 0; t < k; ++t) {
    if (diag[t] == 1) continue;
    std::vector<long> concrete(k, 0);
    for (int j = 0; j < k; ++j)
      for (int c = 0; c < k; ++c) concrete[c] += Vinv[t][j] * H[j][c];
    kept_factors.push_back(diag[t]);
    gens.push_back(Element(G, std::move(concrete)));
  }

  Decomposition dec;
  dec.abstract_group = FinAbGroup(kept_factors);
  dec.generators = gens;

  if (G.order() <= Subgroup::kMemberListLimit) {
    std::vector<long> a(kept_factors.size(), 0);
    for (;;) {
      Element x = Element::zero(G);
      for (size_t i = 0; i < gens.size(); ++i) x = x + gens[i] * a[i];
      if (!dec.to_abstract.emplace(x.coords, a).second)
        throw std::logic_error("decomposition coordinates collide");
      int i = static_cast<int>(a.size()) - 1;
      while (i >= 0 && ++a[i] == kept_factors[i]) a[i--] = 0;
      if (i < 0) break;
    }
  }
  return dec;
}

}  // namespace qsub
