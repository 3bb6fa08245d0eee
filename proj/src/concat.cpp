#include "kkpath/concat.hpp"

#include <algorithm>

namespace kkpath {

ConcatPath::ConcatPath(const WeylGroup& g, std::vector<LSPath> pieces)
    : g_(&g), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw invalid_input("concatenation needs pieces");
}

PLPath ConcatPath::assembled() const {
  PLPath out = pieces_[0].path();
  for (std::size_t j = 1; j < pieces_.size(); ++j)
    out = concat(out, pieces_[j].path());
  return out;
}

IntVec ConcatPath::endpoint() const {
  IntVec out = pieces_[0].path().endpoint_weight();
  for (std::size_t j = 1; j < pieces_.size(); ++j)
    out += pieces_[j].path().endpoint_weight();
  return out;
}

namespace {

struct PieceStats {
  Int offset;  // h-value at the start of the piece
  Int min;     // global h-minimum over the piece (offset + local min)
  Int end;     // h-value at the end of the piece
};

std::vector<PieceStats> piece_stats(const std::vector<LSPath>& pieces, int i) {
  std::vector<PieceStats> st(pieces.size());
  Int off = 0;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    st[j].offset = off;
    st[j].min = off - eps_i(pieces[j].path(), i);
    off += pieces[j].path().endpoint_weight()(i);
    st[j].end = off;
  }
  return st;
}

}  // namespace

std::optional<ConcatPath> ConcatPath::apply_f(int i) const {
  auto st = piece_stats(pieces_, i);
  Int m = st[0].min;
  for (auto& s : st) m = std::min(m, s.min);
  // f cuts at the last attainment of the minimum; a boundary attainment
  // belongs to the later piece.
  std::size_t j0 = 0;
  for (std::size_t j = 0; j < st.size(); ++j)
    if (st[j].min == m) j0 = j;
  auto down = root_f(g_->cartan(), pieces_[j0].path(), i);
  if (!down) return std::nullopt;
  std::vector<LSPath> out = pieces_;
  out[j0] = LSPath(*g_, std::move(*down), pieces_[j0].shape());
  return ConcatPath(*g_, std::move(out));
}

std::optional<ConcatPath> ConcatPath::apply_e(int i) const {
  auto st = piece_stats(pieces_, i);
  Int m = st[0].min;
  for (auto& s : st) m = std::min(m, s.min);
  if (m >= 0) return std::nullopt;
  // e cuts at the first attainment; a boundary attainment belongs to the
  // earlier piece, i.e. to the first piece whose minimum equals m even if
  // only at its end.
  std::size_t j0 = st.size();
  for (std::size_t j = 0; j < st.size(); ++j)
    if (st[j].min == m) {
      j0 = j;
      break;
    }
  auto up = root_e(g_->cartan(), pieces_[j0].path(), i);
  if (!up) return std::nullopt;
  std::vector<LSPath> out = pieces_;
  out[j0] = LSPath(*g_, std::move(*up), pieces_[j0].shape());
  return ConcatPath(*g_, std::move(out));
}

bool operator==(const ConcatPath& a, const ConcatPath& b) {
  if (a.pieces_.size() != b.pieces_.size()) return false;
  for (std::size_t j = 0; j < a.pieces_.size(); ++j) {
    if (a.pieces_[j].shape() != b.pieces_[j].shape()) return false;
    if (a.pieces_[j].path() != b.pieces_[j].path()) return false;
  }
  return true;
}

bool ConcatPath::operator<(const ConcatPath& b) const {
  for (std::size_t j = 0; j < std::min(pieces_.size(), b.pieces_.size());
       ++j) {
    if (pieces_[j].path() != b.pieces_[j].path())
      return pieces_[j].path() < b.pieces_[j].path();
  }
  return pieces_.size() < b.pieces_.size();
}

std::size_t ConcatPath::hash() const {
  std::size_t h = 0x811c9dc5u;
  for (const LSPath& p : pieces_)
    h ^= p.path().hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

ConcatPath straight_concat(const WeylGroup& g,
                           const std::vector<IntVec>& shapes) {
  std::vector<LSPath> pieces;
  for (const IntVec& s : shapes) {
    PLPath p = s.isZero() ? PLPath::constant(g.rank()) : PLPath::straight(s);
    pieces.emplace_back(g, std::move(p), s);
  }
  return ConcatPath(g, std::move(pieces));
}

std::vector<ChainEntry> flatten(const ConcatPath& theta) {
  const WeylGroup& g = theta.group();
  std::vector<ChainEntry> chain;
  for (const LSPath& piece : theta.pieces()) {
    if (piece.shape().isZero()) continue;
    ParabolicSubset j = WeylGroup::stabilizer(piece.shape());
    const auto& v = piece.path().vertices();
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      ChainEntry e;
      e.parabolic = j;
      e.coset_min = direction_coset(g, piece.shape(), RatVec(v[k + 1] - v[k]));
      chain.push_back(e);
    }
  }
  return chain;
}

std::optional<std::vector<WIndex>> minimal_standard_lift(
    const WeylGroup& g, const std::vector<ChainEntry>& chain) {
  std::vector<WIndex> lift(chain.size());
  WIndex below = g.identity();
  for (std::size_t k = chain.size(); k-- > 0;) {
    auto step = g.deodhar_min(chain[k].coset_min, chain[k].parabolic, below);
    if (!step) return std::nullopt;
    lift[k] = *step;
    below = *step;
  }
  return lift;
}

bool is_standard(const ConcatPath& theta) {
  return minimal_standard_lift(theta.group(), flatten(theta)).has_value();
}

WIndex concat_weyl(const ConcatPath& theta) {
  auto lift = minimal_standard_lift(theta.group(), flatten(theta));
  if (!lift) throw invalid_input("path is not standard");
  return lift->empty() ? theta.group().identity() : lift->front();
}

PLPath eta_of(const ConcatPath& theta) {
  return raise_to_dominant(theta.group().cartan(), theta.assembled()).first;
}

ConcatPath crystal_iso(const WeylGroup& g, const LSPath& pi,
                       const std::vector<IntVec>& shapes) {
  IntVec total = IntVec::Zero(g.rank());
  for (const IntVec& s : shapes) total += s;
  if (total != pi.shape())
    throw invalid_input("shapes must sum to the shape of the path");
  auto [top, log] = raise_to_dominant(g.cartan(), pi.path());
  ConcatPath cur = straight_concat(g, shapes);
  // pi = f_{i1}(f_{i2}(...(pi_lambda))) for the raising log i1, i2, ...;
  // replay in reverse order onto the straight concatenation.
  for (auto it = log.indices.rbegin(); it != log.indices.rend(); ++it) {
    auto down = cur.apply_f(*it);
    if (!down)
      throw invariant_violation("raising log does not replay on the target");
    cur = std::move(*down);
  }
  return cur;
}

}  // namespace kkpath
