#pragma once

// Brute-force reference implementations used only by tests.  These stay
// independent of the library's fast paths: Bruhat comparison goes through
// the subword characterization, extrema through full enumeration.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "kkpath/coxeter.hpp"

namespace oracles {

using kkpath::ParabolicSubset;
using kkpath::WeylGroup;
using kkpath::WIndex;

// u <= v iff u is a subword-product of one (hence any) reduced word of v.
inline bool subword_leq(const WeylGroup& g, WIndex u, WIndex v) {
  std::vector<int> word = g.word(v);
  std::set<WIndex> reach{g.identity()};
  for (int s : word) {
    std::set<WIndex> next = reach;
    for (WIndex x : reach) {
      WIndex xs = g.rmul(x, s);
      if (g.length(xs) > g.length(x)) next.insert(xs);
    }
    reach = std::move(next);
  }
  return reach.count(u) > 0;
}

inline std::vector<WIndex> all_elements(const WeylGroup& g) {
  std::vector<WIndex> out(g.size());
  for (WIndex w = 0; w < g.size(); ++w) out[w] = w;
  return out;
}

// All reduced words of w, via right descents.
inline void all_reduced_words_rec(const WeylGroup& g, WIndex w,
                                  std::vector<int>& acc,
                                  std::vector<std::vector<int>>& out) {
  if (w == g.identity()) {
    out.emplace_back(acc.rbegin(), acc.rend());
    return;
  }
  for (int s = 0; s < g.rank(); ++s) {
    if (g.right_descent(w, s)) {
      acc.push_back(s);
      all_reduced_words_rec(g, g.rmul(w, s), acc, out);
      acc.pop_back();
    }
  }
}

inline std::vector<std::vector<int>> all_reduced_words(const WeylGroup& g,
                                                       WIndex w) {
  std::vector<int> acc;
  std::vector<std::vector<int>> out;
  all_reduced_words_rec(g, w, acc, out);
  return out;
}

// Bruhat interval I(sigma) = {x : x <= sigma}.
inline std::vector<WIndex> lower_interval(const WeylGroup& g, WIndex sigma) {
  std::vector<WIndex> out;
  for (WIndex x = 0; x < g.size(); ++x)
    if (subword_leq(g, x, sigma)) out.push_back(x);
  return out;
}

// Unique minimum of a set, if it exists (checks the element is below all).
inline std::optional<WIndex> brute_min(const WeylGroup& g,
                                       const std::vector<WIndex>& set) {
  if (set.empty()) return std::nullopt;
  WIndex best = set[0];
  for (WIndex x : set)
    if (g.length(x) < g.length(best)) best = x;
  for (WIndex x : set)
    if (!subword_leq(g, best, x)) return std::nullopt;
  return best;
}

inline std::optional<WIndex> brute_max(const WeylGroup& g,
                                       const std::vector<WIndex>& set) {
  if (set.empty()) return std::nullopt;
  WIndex best = set[0];
  for (WIndex x : set)
    if (g.length(x) > g.length(best)) best = x;
  for (WIndex x : set)
    if (!subword_leq(g, x, best)) return std::nullopt;
  return best;
}

inline std::vector<WIndex> product_of_sets(const WeylGroup& g,
                                           const std::vector<WIndex>& a,
                                           const std::vector<WIndex>& b) {
  std::set<WIndex> out;
  for (WIndex x : a)
    for (WIndex y : b) out.insert(g.mul(x, y));
  return {out.begin(), out.end()};
}

inline std::vector<WIndex> left_coset(const WeylGroup& g, WIndex w,
                                      ParabolicSubset j) {
  std::set<WIndex> out;
  for (WIndex u : g.parabolic_elements(j)) out.insert(g.mul(w, u));
  return {out.begin(), out.end()};
}

inline std::vector<WIndex> double_coset(const WeylGroup& g, WIndex w,
                                        ParabolicSubset jl,
                                        ParabolicSubset jr) {
  std::set<WIndex> out;
  for (WIndex a : g.parabolic_elements(jl))
    for (WIndex b : g.parabolic_elements(jr))
      out.insert(g.mul(a, g.mul(w, b)));
  return {out.begin(), out.end()};
}

}  // namespace oracles
