#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsub/convex_order.hpp"

namespace qsub {

// Simple Lie type. Supported ranks: A 1-8, B/C 2-8, D 4-8, E 6-8, F 4, G 2.
struct CartanType {
  char letter;
  int rank;

  bool operator==(const CartanType&) const = default;

  std::string name() const { return letter + std::to_string(rank); }
};

inline void validate_type(const CartanType& t) {
  auto ok = [&](int lo, int hi) { return t.rank >= lo && t.rank <= hi; };
  bool valid = false;
  switch (t.letter) {
    case 'A': valid = ok(1, 8); break;
    case 'B': valid = ok(2, 8); break;
    case 'C': valid = ok(2, 8); break;
    case 'D': valid = ok(4, 8); break;
    case 'E': valid = ok(6, 8); break;
    case 'F': valid = t.rank == 4; break;
    case 'G': valid = t.rank == 2; break;
    default: break;
  }
  if (!valid)
    throw std::domain_error("invalid Cartan type " + std::string(1, t.letter) +
                            std::to_string(t.rank));
}

// A root as integer coordinates in the simple-root basis.
using Root = std::vector<int>;

// Order in which positive roots are stored: by height, then lexicographic.
struct GradedLexLess {
  bool operator()(const Root& a, const Root& b) const {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  }
};

// Positive-root convex ordering induced by a reduced word for the longest
// Weyl element: beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}).
struct ConvexOrder {
  std::vector<int> reduced_word;  // 1-based simple-reflection indices
  std::vector<Root> beta;
};

class RootSystem {
 public:
  explicit RootSystem(CartanType type) : type_(type) {
    validate_type(type);
    build_cartan();
    close_roots();
  }

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<int>& d() const { return d_; }

  // All positive roots, in graded-lex order.
  const std::vector<Root>& positive_roots() const { return positive_; }

  long dim_g() const { return rank() + 2 * static_cast<long>(positive_.size()); }

  // Symmetrized form (a, b) = sum_i,j a_i d_i cartan_ij b_j.
  long bilinear(const Root& a, const Root& b) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        s += static_cast<long>(a[i]) * d_[i] * cartan_[i][j] * b[j];
    return s;
  }

  // Simple reflection s_i, i 1-based.
  Root reflect(int i, const Root& beta) const {
    check_index(i);
    long c = 0;
    for (int j = 0; j < rank(); ++j) c += cartan_[i - 1][j] * beta[j];
    Root r = beta;
    r[i - 1] -= static_cast<int>(c);
    return r;
  }

  // 1-based indices of the nonzero coordinates of a stored positive root.
  std::set<int> support(const Root& beta) const {
    if (!index_.count(beta))
      throw std::domain_error("support: not a positive root of this system");
    std::set<int> s;
    for (int j = 0; j < rank(); ++j)
      if (beta[j] != 0) s.insert(j + 1);
    return s;
  }

  // Positive roots whose support lies inside I (1-based), graded-lex order.
  std::vector<Root> psi(const std::set<int>& I) const {
    for (int i : I) check_index(i);
    std::vector<Root> out;
    for (const Root& beta : positive_) {
      bool inside = true;
      for (int j = 0; j < rank() && inside; ++j)
        if (beta[j] != 0 && !I.count(j + 1)) inside = false;
      if (inside) out.push_back(beta);
    }
    return out;
  }

  // Dimension of the regular subalgebra cut out by the index pair:
  // rank + |psi(Iplus)| + |psi(Iminus)|.
  long dim_l(const std::set<int>& Iplus, const std::set<int>& Iminus) const {
    return rank() + static_cast<long>(psi(Iplus).size()) +
           static_cast<long>(psi(Iminus).size());
  }

  // Replays the stored reduced word and validates the result: the beta list
  // must enumerate the positive roots exactly once, and whenever
  // beta_j + beta_k = beta_m with j < k, m lies strictly between them.
  ConvexOrder convex_order() const {
    const std::vector<int>& word = detail::w0_word(type_.letter, type_.rank);
    int n = rank();
    std::vector<std::vector<int>> W(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) W[i][i] = 1;

    std::vector<Root> beta;
    beta.reserve(word.size());
    for (int letter : word) {
      int i = letter - 1;
      Root b(n);
      for (int r = 0; r < n; ++r) b[r] = W[r][i];
      beta.push_back(b);
      // W <- W * S_i with S_i(alpha_j) = alpha_j - cartan_ij alpha_i
      for (int r = 0; r < n; ++r) {
        int wi = W[r][i];
        for (int j = 0; j < n; ++j)
          W[r][j] = (j == i) ? -wi : W[r][j] - wi * cartan_[i][j];
      }
    }

    std::map<Root, int> pos;
    for (size_t k = 0; k < beta.size(); ++k) {
      if (!index_.count(beta[k]) || pos.count(beta[k]))
        throw std::logic_error("reduced-word table: not a bijection onto the "
                               "positive roots");
      pos[beta[k]] = static_cast<int>(k);
    }
    if (pos.size() != positive_.size())
      throw std::logic_error("reduced-word table: wrong length");
    for (size_t j = 0; j < beta.size(); ++j)
      for (size_t k = j + 1; k < beta.size(); ++k) {
        Root sum(n);
        for (int r = 0; r < n; ++r) sum[r] = beta[j][r] + beta[k][r];
        auto it = pos.find(sum);
        if (it == pos.end()) continue;
        size_t m = static_cast<size_t>(it->second);
        if (!(j < m && m < k))
          throw std::logic_error("reduced-word table: convexity violated");
      }
    return ConvexOrder{word, std::move(beta)};
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > rank())
      throw std::domain_error("simple-root index out of range");
  }

  void build_cartan() {
    int n = rank();
    cartan_.assign(n, std::vector<int>(n, 0));
    d_.assign(n, 1);
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    auto bond = [&](int i, int j) {
      cartan_[i][j] = -1;
      cartan_[j][i] = -1;
    };
    switch (type_.letter) {
      case 'A':
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
        break;
      case 'B':
        // last simple root short
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
        cartan_[n - 1][n - 2] = -2;
        for (int i = 0; i + 1 < n; ++i) d_[i] = 2;
        break;
      case 'C':
        // last simple root long
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
        cartan_[n - 2][n - 1] = -2;
        d_[n - 1] = 2;
        break;
      case 'D':
        for (int i = 0; i + 2 < n - 1; ++i) bond(i, i + 1);
        bond(n - 3, n - 2);
        bond(n - 3, n - 1);
        break;
      case 'E':
        // chain 1-3-4-5-..., branch node 2 attached to 4
        bond(0, 2);
        for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
        bond(1, 3);
        break;
      case 'F':
        bond(0, 1);
        bond(1, 2);
        bond(2, 3);
        cartan_[2][1] = -2;
        d_[0] = d_[1] = 2;
        break;
      case 'G':
        cartan_[0][1] = -3;
        cartan_[1][0] = -1;
        d_[1] = 3;
        break;
    }
  }

  // Reflection closure starting from the simple roots, keeping the results
  // with nonnegative coordinates. Every positive root is reached this way.
  void close_roots() {
    int n = rank();
    std::set<Root> seen;
    std::vector<Root> frontier;
    for (int i = 0; i < n; ++i) {
      Root e(n, 0);
      e[i] = 1;
      frontier.push_back(e);
    }
    while (!frontier.empty()) {
      std::vector<Root> next;
      for (const Root& b : frontier) {
        if (!seen.insert(b).second) continue;
        for (int i = 1; i <= n; ++i) {
          Root r = reflect_unchecked(i, b);
          if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }) &&
              !seen.count(r))
            next.push_back(r);
        }
      }
      frontier = std::move(next);
    }
    positive_.assign(seen.begin(), seen.end());
    std::sort(positive_.begin(), positive_.end(), GradedLexLess{});
    for (size_t k = 0; k < positive_.size(); ++k)
      index_[positive_[k]] = static_cast<int>(k);
  }

  Root reflect_unchecked(int i, const Root& beta) const {
    long c = 0;
    for (int j = 0; j < rank(); ++j) c += cartan_[i - 1][j] * beta[j];
    Root r = beta;
    r[i - 1] -= static_cast<int>(c);
    return r;
  }

  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<Root> positive_;
  std::map<Root, int> index_;
};

}  // namespace qsub
