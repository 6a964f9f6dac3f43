#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsub::detail {

// Reduced words for the longest Weyl-group element, one per supported type.
// Each was produced by the greedy rule: starting from w = id, repeatedly
// append the smallest index i with w(alpha_i) still positive. The table is
// revalidated on every lookup path (bijectivity onto the positive roots and
// convexity), and the test suite regenerates it from the rule independently.
inline const std::vector<int>& w0_word(char letter, int rank) {
  static const std::map<std::pair<char, int>, std::vector<int>> table{
      {{'A', 1},
       {1}},
      {{'A', 2},
       {1, 2, 1}},
      {{'A', 3},
       {1, 2, 1, 3, 2, 1}},
      {{'A', 4},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1}},
      {{'A', 5},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1}},
      {{'A', 6},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1}},
      {{'A', 7},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6,
        5, 4, 3, 2, 1}},
      {{'A', 8},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6,
        5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1}},
      {{'B', 2},
       {1, 2, 1, 2}},
      {{'B', 3},
       {1, 2, 1, 3, 2, 1, 3, 2, 3}},
      {{'B', 4},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 4, 3, 2, 4, 3, 4}},
      {{'B', 5},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 5, 4, 3, 2, 5, 4, 3, 5,
        4, 5}},
      {{'B', 6},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 6, 5,
        4, 3, 2, 6, 5, 4, 3, 6, 5, 4, 6, 5, 6}},
      {{'B', 7},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6,
        5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 7, 6, 5, 4, 3, 7, 6, 5, 4, 7, 6, 5,
        7, 6, 7}},
      {{'B', 8},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6,
        5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 8, 7, 6,
        5, 4, 3, 8, 7, 6, 5, 4, 8, 7, 6, 5, 8, 7, 6, 8, 7, 8}},
      {{'C', 2},
       {1, 2, 1, 2}},
      {{'C', 3},
       {1, 2, 1, 3, 2, 1, 3, 2, 3}},
      {{'C', 4},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 4, 3, 2, 4, 3, 4}},
      {{'C', 5},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 5, 4, 3, 2, 5, 4, 3, 5,
        4, 5}},
      {{'C', 6},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 6, 5,
        4, 3, 2, 6, 5, 4, 3, 6, 5, 4, 6, 5, 6}},
      {{'C', 7},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6,
        5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 7, 6, 5, 4, 3, 7, 6, 5, 4, 7, 6, 5,
        7, 6, 7}},
      {{'C', 8},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6,
        5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 8, 7, 6,
        5, 4, 3, 8, 7, 6, 5, 4, 8, 7, 6, 5, 8, 7, 6, 8, 7, 8}},
      {{'D', 4},
       {1, 2, 1, 3, 2, 1, 4, 2, 1, 3, 2, 4}},
      {{'D', 5},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 3, 2, 1, 4, 3, 2, 5, 3, 4}},
      {{'D', 6},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 4, 3, 2, 1, 5, 4, 3,
        2, 6, 4, 3, 5, 4, 6}},
      {{'D', 7},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 5,
        4, 3, 2, 1, 6, 5, 4, 3, 2, 7, 5, 4, 3, 6, 5, 4, 7, 5, 6}},
      {{'D', 8},
       {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6,
        5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 8, 6, 5, 4, 3,
        7, 6, 5, 4, 8, 6, 5, 7, 6, 8}},
      {{'E', 6},
       {1, 2, 3, 1, 4, 2, 3, 1, 4, 3, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4,
        2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1}},
      {{'E', 7},
       {1, 2, 3, 1, 4, 2, 3, 1, 4, 3, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4,
        2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5,
        4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7}},
      {{'E', 8},
       {1, 2, 3, 1, 4, 2, 3, 1, 4, 3, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4,
        2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5,
        4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8, 7, 6, 5, 4, 2,
        3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8,
        7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3,
        4, 5, 6, 7, 8}},
      {{'F', 4},
       {1, 2, 1, 3, 2, 1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3,
        4}},
      {{'G', 2},
       {1, 2, 1, 2, 1, 2}},
  };
  auto it = table.find({letter, rank});
  if (it == table.end())
    throw std::logic_error("no stored reduced word for this type");
  return it->second;
}

}  // namespace qsub::detail
