#pragma once
/**
 * @file cyclotomic.hpp
 * Exact arithmetic in the cyclotomic field Q(eps), where eps is a primitive
 * root of unity of odd order ell >= 3.
 *
 * Elements are represented canonically as polynomials in eps of degree less
 * than deg(Phi_ell) with exact rational coefficients, i.e. as residues in
 * Q[q]/(Phi_ell(q)).  Canonical form makes equality coefficient-wise, and all
 * operations are exact; there is no floating-point mode.
 */

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsub {

using Int = mpz_class;
using Rat = mpq_class;

/// Euler totient of n >= 1, by trial-division factorization.
inline long euler_phi(long n) {
  long m = n, result = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace detail {

/// Coefficients (index = degree) of the monic integer polynomial Phi_n.
/// Computed as (x^n - 1) / prod_{d|n, d<n} Phi_d via exact division.
inline const std::vector<Int>& cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<Int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Int> f(static_cast<size_t>(n) + 1, Int(0));
  f[0] = -1;
  f[static_cast<size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<Int>& g = cyclotomic_polynomial(d);
    // exact division of f by the monic polynomial g
    std::vector<Int> q(f.size() - g.size() + 1, Int(0));
    std::vector<Int> r = f;
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
      q[static_cast<size_t>(k)] = r[static_cast<size_t>(k) + g.size() - 1];
      if (q[static_cast<size_t>(k)] == 0) continue;
      for (size_t j = 0; j < g.size(); ++j)
        r[static_cast<size_t>(k) + j] -= q[static_cast<size_t>(k)] * g[j];
    }
    f = std::move(q);
  }
  return cache.emplace(n, std::move(f)).first->second;
}

/// Per-order field data: minimal polynomial and reduction rows for the
/// monomials x^(phi .. 2*phi-2) that appear in degree-(phi-1) products.
struct FieldTable {
  long ell = 0;
  long phi = 0;
  std::vector<Int> minimal;                      // Phi_ell, monic
  std::vector<std::vector<Int>> high_power_red;  // x^(phi+j) reduced, j >= 0
};

inline const FieldTable& field_table(long ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::domain_error("cyclotomic order must be odd and >= 3, got " +
                            std::to_string(ell));
  static std::map<long, FieldTable> cache;
  auto it = cache.find(ell);
  if (it != cache.end()) return it->second;

  FieldTable t;
  t.ell = ell;
  t.phi = euler_phi(ell);
  t.minimal = cyclotomic_polynomial(ell);
  const size_t phi = static_cast<size_t>(t.phi);
  // x^phi = -(minimal[0] + minimal[1] x + ... + minimal[phi-1] x^(phi-1))
  std::vector<Int> row(phi);
  for (size_t j = 0; j < phi; ++j) row[j] = -t.minimal[j];
  t.high_power_red.push_back(row);
  for (size_t k = 1; k + 1 < phi; ++k) {
    // x^(phi+k) = x * x^(phi+k-1): shift, then fold the overflow term
    const std::vector<Int>& prev = t.high_power_red.back();
    std::vector<Int> next(phi, Int(0));
    for (size_t j = 0; j + 1 < phi; ++j) next[j + 1] = prev[j];
    const Int& top = prev[phi - 1];
    if (top != 0)
      for (size_t j = 0; j < phi; ++j)
        next[j] += top * t.high_power_red[0][j];
    t.high_power_red.push_back(std::move(next));
  }
  return cache.emplace(ell, std::move(t)).first->second;
}

}  // namespace detail

/**
 * A value in Q(eps) for eps of odd order ell >= 3, stored as the unique
 * reduced residue mod Phi_ell.  Equality is coefficient-wise; arithmetic
 * never leaves the field, and division by a nonzero element always succeeds.
 */
class Cyclotomic {
 public:
  /// The zero element of Q(eps) at the given order.
  explicit Cyclotomic(long ell)
      : ell_(ell),
        coeffs_(static_cast<size_t>(detail::field_table(ell).phi), Rat(0)) {}

  static Cyclotomic from_rational(long ell, const Rat& r) {
    Cyclotomic x(ell);
    x.coeffs_[0] = r;
    return x;
  }

  static Cyclotomic zero(long ell) { return Cyclotomic(ell); }
  static Cyclotomic one(long ell) { return from_rational(ell, Rat(1)); }

  long ell() const { return ell_; }
  long degree_bound() const { return static_cast<long>(coeffs_.size()); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const Rat& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t j = 1; j < coeffs_.size(); ++j)
      if (coeffs_[j] != 0) return false;
    return true;
  }

  /// True when the value lies in Q (only the constant coefficient survives).
  bool is_rational() const {
    for (size_t j = 1; j < coeffs_.size(); ++j)
      if (coeffs_[j] != 0) return false;
    return true;
  }

  /// Constant coefficient (the value itself when is_rational()).
  const Rat& rational_part() const { return coeffs_[0]; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.ell_ == b.ell_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  Cyclotomic operator-() const {
    Cyclotomic r(*this);
    for (Rat& c : r.coeffs_) c = -c;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_field(a, b);
    Cyclotomic r(a);
    for (size_t j = 0; j < r.coeffs_.size(); ++j) r.coeffs_[j] += b.coeffs_[j];
    return r;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_field(a, b);
    Cyclotomic r(a);
    for (size_t j = 0; j < r.coeffs_.size(); ++j) r.coeffs_[j] -= b.coeffs_[j];
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_field(a, b);
    const auto& table = detail::field_table(a.ell_);
    const size_t phi = static_cast<size_t>(table.phi);
    std::vector<Rat> prod(2 * phi - 1, Rat(0));
    for (size_t i = 0; i < phi; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (size_t j = 0; j < phi; ++j) {
        if (b.coeffs_[j] == 0) continue;
        prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    Cyclotomic r(a.ell_);
    for (size_t j = 0; j < phi; ++j) r.coeffs_[j] = std::move(prod[j]);
    for (size_t k = phi; k < prod.size(); ++k) {
      if (prod[k] == 0) continue;
      const std::vector<Int>& row = table.high_power_red[k - phi];
      for (size_t j = 0; j < phi; ++j) {
        if (row[j] != 0) r.coeffs_[j] += prod[k] * Rat(row[j]);
      }
    }
    return r;
  }

  friend Cyclotomic operator*(const Rat& s, const Cyclotomic& a) {
    Cyclotomic r(a);
    for (Rat& c : r.coeffs_) c *= s;
    return r;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
  /// against the (irreducible) minimal polynomial.
  Cyclotomic inverse() const {
    if (is_zero())
      throw std::domain_error("division by zero in Q(eps)");
    const auto& table = detail::field_table(ell_);
    // polynomials as dense rational coefficient vectors, low degree first
    std::vector<Rat> r0(table.minimal.size());
    for (size_t j = 0; j < r0.size(); ++j) r0[j] = Rat(table.minimal[j]);
    std::vector<Rat> r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    std::vector<Rat> t0{Rat(0)}, t1{Rat(1)};
    while (!r1.empty()) {
      // divide r0 by r1: quotient q, remainder r
      std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1
                                                : 0,
                         Rat(0));
      std::vector<Rat> rem = r0;
      const Rat lead = r1.back();
      for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
        Rat c = rem[static_cast<size_t>(k) + r1.size() - 1] / lead;
        q[static_cast<size_t>(k)] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < r1.size(); ++j)
          rem[static_cast<size_t>(k) + j] -= c * r1[j];
      }
      trim(rem);
      std::vector<Rat> t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 is a nonzero constant gcd (minimal polynomial is irreducible)
    Cyclotomic result(ell_);
    const Rat& g = r0[0];
    for (size_t j = 0; j < t0.size() && j < result.coeffs_.size(); ++j)
      result.coeffs_[j] = t0[j] / g;
    return result;
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_field(a, b);
    return a * b.inverse();
  }

  /// Integer power; negative exponents go through the inverse.
  Cyclotomic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base(*this), acc = one(ell_);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      Rat c = coeffs_[j];
      if (!first) {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      if (j == 0) {
        os << c;
      } else {
        if (c != 1) os << c << "*";
        os << "e";
        if (j > 1) os << "^" << j;
      }
    }
    if (first) os << "0";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
    return os << x.to_string();
  }

  /// Construct directly from reduced coefficients (length must match).
  static Cyclotomic from_coeffs(long ell, std::vector<Rat> cs) {
    Cyclotomic x(ell);
    if (cs.size() != x.coeffs_.size())
      throw std::invalid_argument("coefficient vector has wrong length");
    x.coeffs_ = std::move(cs);
    return x;
  }

 private:
  static void check_same_field(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.ell_ != b.ell_)
      throw std::invalid_argument("mixed cyclotomic orders " +
                                  std::to_string(a.ell_) + " and " +
                                  std::to_string(b.ell_));
  }

  static void trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  }

  static std::vector<Rat> sub(const std::vector<Rat>& a,
                              const std::vector<Rat>& b) {
    std::vector<Rat> r(std::max(a.size(), b.size()), Rat(0));
    for (size_t j = 0; j < a.size(); ++j) r[j] += a[j];
    for (size_t j = 0; j < b.size(); ++j) r[j] -= b[j];
    trim(r);
    return r;
  }

  static std::vector<Rat> mul(const std::vector<Rat>& a,
                              const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
  }

  long ell_;
  std::vector<Rat> coeffs_;
};

/// eps^k in canonical reduced form; exponents are taken mod ell.
inline Cyclotomic root_power(long ell, long k) {
  const auto& table = detail::field_table(ell);
  long e = k % ell;
  if (e < 0) e += ell;
  Cyclotomic x(ell);
  if (e < table.phi) {
    std::vector<Rat> cs(static_cast<size_t>(table.phi), Rat(0));
    cs[static_cast<size_t>(e)] = 1;
    return Cyclotomic::from_coeffs(ell, std::move(cs));
  }
  long idx = e - table.phi;
  if (idx < static_cast<long>(table.high_power_red.size())) {
    std::vector<Rat> cs(static_cast<size_t>(table.phi));
    for (size_t j = 0; j < cs.size(); ++j)
      cs[j] = Rat(table.high_power_red[static_cast<size_t>(idx)][j]);
    return Cyclotomic::from_coeffs(ell, std::move(cs));
  }
  // orders where e exceeds the product-reduction table: fall back to pow
  return root_power(ell, 1).pow(e);
}

}  // namespace qsub
