#pragma once
/**
 * @file qnumbers.hpp
 * q-combinatorics evaluated at concrete cyclotomic arguments: bracket
 * q-numbers [t]_u, q-factorials, bracket q-binomials [m t]_u, and the
 * parenthesis (Gaussian) versions (t)_u and (m t)_u.
 *
 * Binomials are computed by the q-Pascal recursions, which stay valid in the
 * ring even where intermediate q-factorials vanish at roots of unity (the
 * factorial quotient would be 0/0 there).
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "qsub/cyclotomic.hpp"

namespace qsub {

/// [t]_u = u^(t-1) + u^(t-3) + ... + u^(1-t), the balanced q-number.
/// Evaluated as the telescoped sum, so no division occurs; equals
/// (u^t - u^-t)/(u - u^-1) whenever that fraction is defined.
inline Cyclotomic q_number(long t, const Cyclotomic& u) {
  if (u.is_zero()) throw std::domain_error("q_number: u must be nonzero");
  if (t < 0) return -q_number(-t, u);
  Cyclotomic sum(u.ell());
  if (t == 0) return sum;
  Cyclotomic term = u.pow(1 - t);
  const Cyclotomic u2 = u * u;
  for (long j = 0; j < t; ++j) {
    sum = sum + term;
    if (j + 1 < t) term = term * u2;
  }
  return sum;
}

/// [t]_u! = [1]_u [2]_u ... [t]_u.
inline Cyclotomic q_factorial(long t, const Cyclotomic& u) {
  if (t < 0) throw std::domain_error("q_factorial: t must be nonnegative");
  Cyclotomic prod = Cyclotomic::one(u.ell());
  for (long j = 1; j <= t; ++j) prod = prod * q_number(j, u);
  return prod;
}

/// Bracket q-binomial [m t]_u by the q-Pascal recursion
///   [m t] = u^(t-m) [m-1 t-1] + u^t [m-1 t].
/// Agrees with [m]!/([t]![m-t]!) whenever all denominators are nonzero.
inline Cyclotomic q_binomial(long m, long t, const Cyclotomic& u) {
  if (t < 0 || t > m)
    throw std::domain_error("q_binomial: need 0 <= t <= m, got t=" +
                            std::to_string(t) + ", m=" + std::to_string(m));
  if (u.is_zero()) throw std::domain_error("q_binomial: u must be nonzero");
  const long ell = u.ell();
  std::vector<Cyclotomic> row(static_cast<size_t>(t) + 1, Cyclotomic(ell));
  row[0] = Cyclotomic::one(ell);
  for (long i = 1; i <= m; ++i) {
    for (long j = std::min(i, t); j >= 1; --j) {
      // row[j] currently holds [i-1 j], row[j-1] holds [i-1 j-1]
      Cyclotomic keep = (j == i) ? Cyclotomic(ell) : u.pow(j) * row[static_cast<size_t>(j)];
      row[static_cast<size_t>(j)] =
          u.pow(j - i) * row[static_cast<size_t>(j) - 1] + keep;
    }
  }
  return row[static_cast<size_t>(t)];
}

/// (t)_u = 1 + u + ... + u^(t-1), the parenthesis (Gaussian) q-number.
inline Cyclotomic gaussian_number(long t, const Cyclotomic& u) {
  if (t < 0) throw std::domain_error("gaussian_number: t must be nonnegative");
  Cyclotomic sum(u.ell());
  Cyclotomic term = Cyclotomic::one(u.ell());
  for (long j = 0; j < t; ++j) {
    sum = sum + term;
    if (j + 1 < t) term = term * u;
  }
  return sum;
}

/// (t)_u! = (1)_u (2)_u ... (t)_u.
inline Cyclotomic gaussian_factorial(long t, const Cyclotomic& u) {
  if (t < 0)
    throw std::domain_error("gaussian_factorial: t must be nonnegative");
  Cyclotomic prod = Cyclotomic::one(u.ell());
  for (long j = 1; j <= t; ++j) prod = prod * gaussian_number(j, u);
  return prod;
}

/// Parenthesis (Gaussian) q-binomial (m t)_u by the recursion
///   (m t) = (m-1 t-1) + u^t (m-1 t).
inline Cyclotomic gaussian_binomial(long m, long t, const Cyclotomic& u) {
  if (t < 0 || t > m)
    throw std::domain_error("gaussian_binomial: need 0 <= t <= m, got t=" +
                            std::to_string(t) + ", m=" + std::to_string(m));
  const long ell = u.ell();
  std::vector<Cyclotomic> row(static_cast<size_t>(t) + 1, Cyclotomic(ell));
  row[0] = Cyclotomic::one(ell);
  for (long i = 1; i <= m; ++i) {
    for (long j = std::min(i, t); j >= 1; --j) {
      Cyclotomic keep = (j == i) ? Cyclotomic(ell) : u.pow(j) * row[static_cast<size_t>(j)];
      row[static_cast<size_t>(j)] = row[static_cast<size_t>(j) - 1] + keep;
    }
  }
  return row[static_cast<size_t>(t)];
}

}  // namespace qsub
