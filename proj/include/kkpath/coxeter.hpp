#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kkpath/types.hpp"

namespace kkpath {

using WIndex = std::int32_t;

// Subset of simple-root indices (0-based), as a bitmask.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  explicit ParabolicSubset(std::uint32_t mask) : mask_(mask) {}
  static ParabolicSubset of(std::initializer_list<int> indices) {
    std::uint32_t m = 0;
    for (int i : indices) m |= 1u << i;
    return ParabolicSubset(m);
  }
  bool contains(int i) const { return (mask_ >> i) & 1u; }
  std::uint32_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  friend bool operator==(ParabolicSubset a, ParabolicSubset b) {
    return a.mask_ == b.mask_;
  }
  friend bool operator!=(ParabolicSubset a, ParabolicSubset b) {
    return !(a == b);
  }

 private:
  std::uint32_t mask_ = 0;
};

// A positive root, carried in three coordinate systems at once.
struct Root {
  IntVec fundamental;   // as a weight
  IntVec simple_coords; // coefficients on simple roots
  IntVec coroot_coords; // coefficients of the coroot on simple coroots
};

// Finite Weyl group attached to a Cartan matrix.  Elements are enumerated
// once (BFS on images of rho, so indices are sorted by length) and all
// operations below are table lookups.  Everything is immutable after
// construction except the lazily built Bruhat table, which is guarded.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultOrbitCap = 1000000;

  explicit WeylGroup(CartanMatrix cartan,
                     std::size_t orbit_cap = kDefaultOrbitCap);

  int rank() const { return cartan_.rank(); }
  WIndex size() const { return static_cast<WIndex>(rho_images_.size()); }
  const CartanMatrix& cartan() const { return cartan_; }

  WIndex identity() const { return 0; }
  WIndex longest() const { return size() - 1; }

  int length(WIndex w) const { return lengths_[w]; }
  const IntVec& rho_image(WIndex w) const { return rho_images_[w]; }

  WIndex lmul(int s, WIndex w) const { return lmul_[s][w]; }
  WIndex rmul(WIndex w, int s) const { return rmul_[s][w]; }
  WIndex inverse(WIndex w) const { return inverse_[w]; }
  WIndex mul(WIndex a, WIndex b) const;

  bool left_descent(WIndex w, int s) const { return rho_images_[w](s) < 0; }
  bool right_descent(WIndex w, int s) const {
    return rho_images_[inverse_[w]](s) < 0;
  }
  // Smallest descent index, or -1 if none (identity).
  int first_left_descent(WIndex w) const;
  int first_right_descent(WIndex w) const;

  // Reduced word by repeated smallest-left-descent stripping; w equals the
  // product s_{word[0]} s_{word[1]} ... .
  std::vector<int> word(WIndex w) const;
  WIndex from_word(const std::vector<int>& word) const;

  bool bruhat_leq(WIndex u, WIndex v) const;

  // min/max of {w, s.w} resp. {w, w.s} by length.
  WIndex meet_left(int s, WIndex w) const {
    WIndex sw = lmul_[s][w];
    return lengths_[sw] < lengths_[w] ? sw : w;
  }
  WIndex join_left(int s, WIndex w) const {
    WIndex sw = lmul_[s][w];
    return lengths_[sw] > lengths_[w] ? sw : w;
  }
  WIndex meet_right(WIndex w, int s) const {
    WIndex ws = rmul_[s][w];
    return lengths_[ws] < lengths_[w] ? ws : w;
  }
  WIndex join_right(WIndex w, int s) const {
    WIndex ws = rmul_[s][w];
    return lengths_[ws] > lengths_[w] ? ws : w;
  }

  // brmin(I(sigma) w) and brmin(w I(sigma)), by the wedge recursion along a
  // reduced word of sigma; the braid relations make the word irrelevant.
  WIndex brmin_interval_left(WIndex sigma, WIndex w) const;
  WIndex brmin_interval_right(WIndex w, WIndex sigma) const;

  // Demazure product: max(I(w) I(x)).
  WIndex star(WIndex w, WIndex x) const;

  // Minimal representative of wW_J (strip right descents in J) or W_Jw.
  WIndex coset_min_left_quotient(WIndex w, ParabolicSubset j) const;
  WIndex coset_min_right_quotient(WIndex w, ParabolicSubset j) const;
  // Unique minimum of W_jl . w . W_jr, by alternate stripping.
  WIndex double_coset_min(WIndex w, ParabolicSubset jl,
                          ParabolicSubset jr) const;

  // min{v in sigma W_J : v >= w}, Deodhar's recursion.  sigma need not be the
  // minimal coset representative.  Empty iff wW_J is not <= sigma W_J.
  std::optional<WIndex> deodhar_min(WIndex sigma, ParabolicSubset j,
                                    WIndex w) const;
  // max{v in sigma W_J : v <= w}, by scanning the coset.
  std::optional<WIndex> coset_max_below(WIndex sigma, ParabolicSubset j,
                                        WIndex w) const;

  // brmin(W_jl I(tau^-1) phi W_jr): the element attached to a pair of
  // direction cosets.  Independent of the choice of lifts tau, phi.
  WIndex kk_brmin(ParabolicSubset jl, WIndex tau, WIndex phi,
                  ParabolicSubset jr) const;

  bool in_parabolic(WIndex w, ParabolicSubset j) const;
  std::vector<WIndex> parabolic_elements(ParabolicSubset j) const;

  // Stabilizer {i : v[i] = 0} of a dominant weight.
  static ParabolicSubset stabilizer(const IntVec& v);

  // Action on weights through the reduced word.
  IntVec act(WIndex w, const IntVec& v) const;
  RatVec act(WIndex w, const RatVec& v) const;

  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  // Index of the positive root with the given simple-root coordinates.
  int positive_root_index(const IntVec& simple_coords) const;
  IntVec rho() const { return IntVec::Ones(rank()); }

  // Weyl dimension formula, exact.
  Int dimension(const IntVec& highest_weight) const;

  // (nu_bar, u) with nu_bar dominant, u minimal, u(nu_bar) = nu.
  std::pair<IntVec, WIndex> dominant_conjugate(const IntVec& nu) const;

 private:
  void enumerate(std::size_t orbit_cap);
  void compute_positive_roots();
  void ensure_bruhat_table() const;
  bool bruhat_leq_uncached(WIndex u, WIndex v) const;

  CartanMatrix cartan_;
  std::vector<IntVec> rho_images_;
  std::vector<int> lengths_;
  std::vector<std::vector<WIndex>> lmul_;  // [s][w]
  std::vector<std::vector<WIndex>> rmul_;  // [s][w]
  std::vector<WIndex> inverse_;
  std::vector<Root> positive_roots_;

  mutable std::once_flag bruhat_once_;
  mutable std::vector<std::uint64_t> bruhat_bits_;  // downset bitmaps
  mutable std::size_t bruhat_stride_ = 0;
};

using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

// Value handle for a group element.  The group outlives all of its elements.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(const WeylGroup* g, WIndex i) : g_(g), i_(i) {}

  const WeylGroup& group() const { return *g_; }
  WIndex index() const { return i_; }
  int length() const { return g_->length(i_); }
  IntVec rho_image() const { return g_->rho_image(i_); }
  std::vector<int> word() const { return g_->word(i_); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.g_ == b.g_ && a.i_ == b.i_;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) {
    return !(a == b);
  }

 private:
  const WeylGroup* g_ = nullptr;
  WIndex i_ = 0;
};

enum class CosetSide { left_quotient, right_quotient };

// One-sided parabolic coset, identified by its minimal representative.
struct Coset {
  WIndex min_rep = 0;
  ParabolicSubset parabolic;
  CosetSide side = CosetSide::left_quotient;
};

// Double coset W_left . min_rep . W_right.
struct DoubleCoset {
  WIndex min_rep = 0;
  ParabolicSubset left;
  ParabolicSubset right;
};

Coset make_coset(const WeylGroup& g, WIndex w, ParabolicSubset j,
                 CosetSide side);
DoubleCoset make_double_coset(const WeylGroup& g, WIndex w, ParabolicSubset jl,
                              ParabolicSubset jr);

// Bruhat order on coset spaces (comparison of minimal representatives).
bool coset_leq(const WeylGroup& g, const Coset& a, const Coset& b);
bool coset_leq(const WeylGroup& g, const DoubleCoset& a, const DoubleCoset& b);

// One-line notation helpers for type A_{n-1}.
std::vector<int> weyl_to_permutation(const WeylGroup& g, WIndex w);
WIndex permutation_to_weyl(const WeylGroup& g, const std::vector<int>& oneline);

std::string word_to_string(const std::vector<int>& word);
std::vector<int> parse_word(const std::string& s);

}  // namespace kkpath
