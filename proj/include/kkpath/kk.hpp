#pragma once

#include <atomic>
#include <memory>
#include <vector>

#include "kkpath/paths.hpp"

namespace kkpath {

// K(lambda, w, mu): w is stored as the minimum of its (W_lambda, W_mu)
// double coset, since the module only depends on that coset.
struct KKIndex {
  IntVec lambda;
  WIndex w = 0;
  IntVec mu;
};

KKIndex make_kk_index(const WeylGroup& g, IntVec lambda, WIndex w, IntVec mu);

// Shared context for one (lambda, mu) pair: both crystals, direction data
// and the kk_weyl cache keyed on (final direction, initial direction).
class KKContext {
 public:
  KKContext(const WeylGroup& g, IntVec lambda, IntVec mu);

  const WeylGroup& group() const { return *g_; }
  const IntVec& lambda() const { return lambda_; }
  const IntVec& mu() const { return mu_; }
  ParabolicSubset stab_lambda() const { return jl_; }
  ParabolicSubset stab_mu() const { return jr_; }
  const Crystal& crystal_lambda() const { return *cl_; }
  const Crystal& crystal_mu() const { return *cm_; }

  // w(pi * pi'): brmin(W_lambda I(tau^-1) phi W_mu) for tau, phi lifts of the
  // final direction of pi and the initial direction of pi'.
  WIndex kk_weyl(const LSPath& p1, const LSPath& p2) const;
  WIndex kk_weyl_dirs(WIndex final_dir, WIndex initial_dir) const;

  // Index pairs (into the two crystals) of the KK set of w.
  std::vector<std::pair<std::size_t, std::size_t>> kk_path_set(WIndex w) const;

  // P^lambda_mu(w): lambda-dominant LS paths of shape mu with initial
  // direction <= w W_mu, as indices into crystal_mu.
  std::vector<std::size_t> lambda_dominant_paths(WIndex w) const;

  Decomposition kk_decompose(WIndex w) const;
  FormalCharacter kk_character_paths(WIndex w) const;
  // Kumar's formula D_{w0}(e^lambda . D_w(e^mu)).
  FormalCharacter kk_character_demazure(WIndex w) const;

  bool lambda_dominant(std::size_t mu_path_idx) const {
    return mu_dom_[mu_path_idx];
  }

 private:
  const WeylGroup* g_;
  IntVec lambda_, mu_;
  ParabolicSubset jl_, jr_;
  std::shared_ptr<const Crystal> cl_, cm_;
  std::vector<char> mu_dom_;  // lambda-dominance per mu-path
  // [final * |W| + initial], -1 unset; recomputation races are idempotent.
  mutable std::unique_ptr<std::atomic<WIndex>[]> weyl_cache_;
};

// Demazure operator D_i on formal characters, and D along a word (applied
// right-to-left, D_{word} = D_{word[0]} ... D_{word[k-1]}).
FormalCharacter demazure_apply(const WeylGroup& g, int i,
                               const FormalCharacter& f);
FormalCharacter demazure_word(const WeylGroup& g, const std::vector<int>& word,
                              const FormalCharacter& f);

// Character of the irreducible of the given highest weight via the path
// model (sum over the crystal).
FormalCharacter irreducible_character(const WeylGroup& g, const IntVec& hw);
// Same via the Weyl character formula (alternating sum quotient); used as an
// independent cross-check.
FormalCharacter irreducible_character_weyl(const WeylGroup& g,
                                           const IntVec& hw);

// Decomposition of a character known to be a nonnegative sum of irreducibles,
// by repeated subtraction at a maximal weight.
Decomposition decompose_character(const WeylGroup& g, FormalCharacter ch);

// Minimal double-coset representative, verified to satisfy the geometric
// description: w(mu) is W_lambda-dominant, i.e. lambda + t w(mu) is dominant
// for small positive t.
WIndex geometric_rep(const WeylGroup& g, const IntVec& lambda,
                     const IntVec& mu, const DoubleCoset& c);

// All (W_lambda, W_mu) double cosets, as their minimal representatives.
std::vector<WIndex> double_cosets(const WeylGroup& g, ParabolicSubset jl,
                                  ParabolicSubset jr);

// #{ double cosets tau <= W_lambda w W_mu with dominant conjugate of
// lambda + tau_min(mu) equal to nu }.
Int prv_lower_bound(const WeylGroup& g, const IntVec& lambda, const IntVec& mu,
                    WIndex w, const IntVec& nu);

struct GPRVInput {
  WIndex v = 0;
  WIndex u = 0;
  int beta = 0;  // index into g.positive_roots()
  Int k = 0;
};

// Checks the generalized PRV membership: nu = v(lambda) + u(mu) - k beta is
// dominant and V_nu occurs in K(lambda, v^-1 s_beta u, mu).  Preconditions
// (one of v^-1 beta, u^-1 beta simple; k in range; nu dominant) are
// validated and violations throw invalid_input.
bool generalized_prv_check(const WeylGroup& g, const IntVec& lambda,
                           const IntVec& mu, const GPRVInput& in);
bool generalized_prv_check(const KKContext& ctx, const GPRVInput& in);

// Dominant conjugate of the endpoint of p1 * p2 equals the endpoint of the
// dominant representative of its class.
bool is_extremal(const WeylGroup& g, const LSPath& p1, const LSPath& p2);

}  // namespace kkpath
