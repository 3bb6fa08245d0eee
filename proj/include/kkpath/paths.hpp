#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kkpath/coxeter.hpp"
#include "kkpath/types.hpp"

namespace kkpath {

// Piecewise-linear path from the origin, identified up to reparametrization:
// the canonical form keeps the vertex list with zero segments dropped and
// consecutive positively-parallel segments merged.
class PLPath {
 public:
  PLPath() = default;
  // Vertices must start at the origin; the list is canonicalized.
  explicit PLPath(std::vector<RatVec> vertices);

  static PLPath constant(int rank);
  static PLPath straight(const IntVec& endpoint);
  static PLPath straight(const RatVec& endpoint);

  int rank() const {
    return vertices_.empty() ? 0 : static_cast<int>(vertices_[0].size());
  }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  std::size_t segments() const { return vertices_.size() - 1; }
  const RatVec& endpoint() const { return vertices_.back(); }
  IntVec endpoint_weight() const;  // requires an integral endpoint

  friend bool operator==(const PLPath& a, const PLPath& b) {
    return a.vertices_ == b.vertices_;
  }
  friend bool operator!=(const PLPath& a, const PLPath& b) { return !(a == b); }
  bool operator<(const PLPath& b) const;

  std::size_t hash() const;

  PLPath reversed() const;  // t -> p(1-t) - p(1)

 private:
  std::vector<RatVec> vertices_;
};

struct PLPathHash {
  std::size_t operator()(const PLPath& p) const { return p.hash(); }
};

PLPath concat(const PLPath& a, const PLPath& b);

// Littelmann root operators on paths whose h-functions have integral local
// minima (members of crystals generated from straight paths).  Throws
// invariant_violation on a non-integral minimum.
std::optional<PLPath> root_e(const CartanMatrix& cartan, const PLPath& p, int i);
std::optional<PLPath> root_f(const CartanMatrix& cartan, const PLPath& p, int i);

// eps = max k with e_i^k defined, phi = max k with f_i^k defined.
int eps_i(const PLPath& p, int i);
int phi_i(const PLPath& p, int i);

// True iff lambda + p(t) stays in the dominant chamber (checked on vertices).
bool is_lambda_dominant(const PLPath& p, const IntVec& lambda);

struct RaiseLog {
  std::vector<int> indices;  // e_{indices[0]} applied first
};

// The unique dominant path in the root-operator class of p, with the replay
// log of raising operators.
std::pair<PLPath, RaiseLog> raise_to_dominant(const CartanMatrix& cartan,
                                              const PLPath& p);

// LS path: member of the crystal generated from the straight path of its
// shape.  Initial and final direction cosets are cached on construction.
class LSPath {
 public:
  LSPath(const WeylGroup& g, PLPath path, IntVec shape);

  const PLPath& path() const { return path_; }
  const IntVec& shape() const { return shape_; }
  // Minimal coset representatives of the direction cosets over W_shape.
  WIndex initial_direction() const { return initial_dir_; }
  WIndex final_direction() const { return final_dir_; }

 private:
  PLPath path_;
  IntVec shape_;
  WIndex initial_dir_;
  WIndex final_dir_;
};

// Minimal coset representative u with u(shape) positively parallel to the
// given direction vector; throws if the ray is not in the W-orbit cone.
WIndex direction_coset(const WeylGroup& g, const IntVec& shape,
                       const RatVec& direction);

// Crystal of LS paths of a dominant shape, generated from the straight path.
// Paths are kept in a canonical order; per-path root-operator transition
// tables make bulk scans cheap.
class Crystal {
 public:
  Crystal(const WeylGroup& g, IntVec shape);

  const WeylGroup& group() const { return *g_; }
  const IntVec& shape() const { return shape_; }
  std::size_t size() const { return paths_.size(); }
  const LSPath& path(std::size_t idx) const { return paths_[idx]; }
  const std::vector<LSPath>& paths() const { return paths_; }
  std::size_t index_of(const PLPath& p) const;

  // -1 when the operator vanishes.
  int f_next(std::size_t idx, int i) const { return f_next_[idx * rank_ + i]; }
  int e_next(std::size_t idx, int i) const { return e_next_[idx * rank_ + i]; }
  int eps(std::size_t idx, int i) const { return eps_[idx * rank_ + i]; }
  int phi(std::size_t idx, int i) const { return phi_[idx * rank_ + i]; }
  const IntVec& endpoint(std::size_t idx) const { return endpoints_[idx]; }

  FormalCharacter character() const;

 private:
  const WeylGroup* g_;
  IntVec shape_;
  int rank_;
  std::vector<LSPath> paths_;
  std::unordered_map<PLPath, std::size_t, PLPathHash> index_;
  std::vector<int> f_next_, e_next_, eps_, phi_;
  std::vector<IntVec> endpoints_;
};

// Demazure subset C(p, word) = { f_{word[0]}^{n_0} ... f_{word[k-1]}^{n_k} p }
// for p dominant and a reduced word; independent of the chosen word.
std::vector<PLPath> demazure_crystal(const WeylGroup& g, const PLPath& p,
                                     const std::vector<int>& word);

}  // namespace kkpath
