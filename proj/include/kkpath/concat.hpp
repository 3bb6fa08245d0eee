#pragma once

#include <optional>
#include <vector>

#include "kkpath/paths.hpp"

namespace kkpath {

// Concatenation pi_1 * ... * pi_n of LS paths of prescribed shapes.  Root
// operators act on exactly one piece; which one is decided by the usual
// tensor rule on (eps, phi) statistics.
class ConcatPath {
 public:
  ConcatPath(const WeylGroup& g, std::vector<LSPath> pieces);

  const WeylGroup& group() const { return *g_; }
  const std::vector<LSPath>& pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }

  PLPath assembled() const;
  IntVec endpoint() const;

  std::optional<ConcatPath> apply_f(int i) const;
  std::optional<ConcatPath> apply_e(int i) const;

  friend bool operator==(const ConcatPath& a, const ConcatPath& b);
  bool operator<(const ConcatPath& b) const;
  std::size_t hash() const;

 private:
  const WeylGroup* g_;
  std::vector<LSPath> pieces_;
};

struct ConcatPathHash {
  std::size_t operator()(const ConcatPath& p) const { return p.hash(); }
};

ConcatPath straight_concat(const WeylGroup& g,
                           const std::vector<IntVec>& shapes);

// One entry of the flattened direction chain: a left coset over the
// stabilizer of the shape of the piece it came from.
struct ChainEntry {
  WIndex coset_min = 0;
  ParabolicSubset parabolic;
};

// Direction cosets of all pieces, concatenated; cut points are dropped.
std::vector<ChainEntry> flatten(const ConcatPath& theta);

// Bruhat-decreasing chain lifting the flattened chain entrywise; nullopt iff
// no lift exists.  The minimal lift is computed by Deodhar steps from the
// right.
std::optional<std::vector<WIndex>> minimal_standard_lift(
    const WeylGroup& g, const std::vector<ChainEntry>& chain);

bool is_standard(const ConcatPath& theta);

// Initial element of the minimal standard lift; throws when not standard.
WIndex concat_weyl(const ConcatPath& theta);

// The dominant representative of the root-operator class of the assembled
// path; equals the all-straight concatenation iff theta is standard.
PLPath eta_of(const ConcatPath& theta);

// Unique crystal isomorphism P_{sum shapes} -> standard concatenations,
// computed by replaying the raising log of pi onto the straight
// concatenation.  Throws on a shape mismatch.
ConcatPath crystal_iso(const WeylGroup& g, const LSPath& pi,
                       const std::vector<IntVec>& shapes);

}  // namespace kkpath
