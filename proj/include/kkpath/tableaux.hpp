#pragma once

#include <optional>
#include <vector>

#include "kkpath/concat.hpp"
#include "kkpath/types.hpp"

namespace kkpath {

// Partitions are weakly decreasing lists of positive parts (no trailing
// zeros stored).
using Partition = std::vector<Int>;
using Word = std::vector<int>;
// Permutations of [n] in one-line notation, 1-based values.
using Permutation = std::vector<int>;

Partition normalize_partition(std::vector<Int> parts);
bool partition_contains(const Partition& outer, const Partition& inner);

// Partition with < d parts <-> dominant sl_d weight (fundamental coords).
IntVec partition_to_weight(const Partition& p, int d);
Partition weight_to_partition(const IntVec& w);

struct SSYT {
  std::vector<std::vector<int>> rows;

  std::size_t boxes() const {
    std::size_t b = 0;
    for (auto& r : rows) b += r.size();
    return b;
  }
  Partition shape() const;
  int max_entry() const;
  bool valid() const;  // semistandard

  friend bool operator==(const SSYT& a, const SSYT& b) {
    return a.rows == b.rows;
  }
};

// Skew tableau of shape nu/lambda: rows hold only the entries beyond the
// inner shape.
struct SkewTableau {
  Partition inner;
  std::vector<std::vector<int>> rows;

  Partition outer() const;
  bool valid() const;

  friend bool operator==(const SkewTableau& a, const SkewTableau& b) {
    return a.inner == b.inner && a.rows == b.rows;
  }
};

Word reverse_reading_word(const SkewTableau& t);
Word reverse_reading_word(const SSYT& s);
Word column_word(const SkewTableau& t);
Word column_word(const SSYT& s);

bool is_ballot(const Word& w);
std::vector<Int> word_type(const Word& w);
IntVec word_weight(const Word& w, int d);  // sl_d fundamental coordinates

// word(p): p_1 ones then p_2 twos ...
Word superstandard_word(const Partition& p);
bool p_dominant(const Word& w, const Partition& p);
// Unique smallest p with w p-dominant.
Partition smallest_dominating_partition(const Word& w);

// All LR tableaux of shape nu/lambda (nu varying, at most d parts) and type
// mu, ordered lexicographically by their position word.
std::vector<SkewTableau> lr_tableaux(const Partition& lambda,
                                     const Partition& mu, int d);

// Row j of the image lists the row numbers of T holding entry j.
SSYT lr_to_ssyt(const SkewTableau& t);
// Inverse: rebuild the LR tableau over the inner shape lambda.
SkewTableau ssyt_to_lr(const SSYT& s, const Partition& lambda);

// All SSYT of shape mu with entries in [d]; lexicographic by reading word.
std::vector<SSYT> enumerate_ssyt(const Partition& mu, int d);

// Depth-sequence procedure: the permutation of [max entry] attached to an
// SSYT; equals the initial element of its minimal standard lift.
Permutation ssyt_key_permutation(const SSYT& s);

// The p-depth sequence y_1 < ... < y_p used by the procedure (y_j = maximal
// entry at depth p-j from the rightmost box of row p).
std::vector<int> depth_sequence(const SSYT& s, int p);

// Staircase tableau S(r, x): column j holds the first n+1-j entries of x in
// increasing order.
SSYT ssyt_from_permutation(int r, const Permutation& x);

// Bruhat order on permutations by the sorted-prefix (tableau) criterion;
// different sizes compare through the natural embedding.
bool perm_bruhat_leq(const Permutation& a, const Permutation& b);

// Natural embedding into S_n (append fixed points).
Permutation pad_permutation(Permutation p, int n);

// Sorts entries after position r (the r-truncation x^{(r)}).
Permutation truncate_permutation(const Permutation& x, int r);
// Sorts the first r entries (floor |x|_r).
Permutation sort_prefix(const Permutation& x, int r);
// First r rows.
SSYT truncate_ssyt(const SSYT& s, int r);

// brmin{ v in sigma W_r : v >= w } by the one-line recipe.  Requires sigma
// minimal in its coset (both blocks increasing) and w with increasing first
// r entries; throws invalid_input when empty or on precondition violation.
Permutation sn_deodhar_recipe(const Permutation& sigma, int r,
                              const Permutation& w);

Int refined_lr_coefficient(const Partition& lambda, const Partition& mu,
                           const Partition& nu, const Permutation& w, int d);

// Tableau decomposition rule.  sl_d mode reduces each nu(T) modulo the
// determinant (nu_bar_j = nu_j - nu_d); gl_d mode keeps nu(T) itself.
enum class TableauxMode { sl, gl };
std::vector<std::pair<Partition, Int>> kk_decompose_tableaux(
    const Partition& lambda, const Partition& mu, const Permutation& w, int d,
    TableauxMode mode = TableauxMode::sl);

// SSYT with entries <= d as a standard concatenation of straight LS paths of
// fundamental sl_d shapes, columns taken right to left.
ConcatPath ssyt_to_concat(const WeylGroup& g, const SSYT& s, int d);
std::vector<IntVec> ssyt_concat_shapes(const WeylGroup& g, const Partition& mu,
                                       int d);

std::string permutation_to_string(const Permutation& p);
Permutation parse_permutation(const std::string& s);

}  // namespace kkpath
