#include "kkpath/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace kkpath {

namespace {

std::string cap_exceeded_message(std::size_t cap) {
  return "rho-orbit exceeded the configured bound (" + std::to_string(cap) +
         "); the Cartan matrix is not of finite type (or raise "
         "KKPATH_MAX_GROUP)";
}

}  // namespace

CartanMatrix CartanMatrix::named(const std::string& type) {
  auto a_series = [](int n) {
    IntMat a = IntMat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      a(i, i) = 2;
      if (i + 1 < n) {
        a(i, i + 1) = -1;
        a(i + 1, i) = -1;
      }
    }
    return a;
  };
  // B2 and G2 follow the convention with the short root first, matching the
  // planar pictures this library is tested against.
  if (type == "A1") return CartanMatrix(a_series(1));
  if (type == "A2") return CartanMatrix(a_series(2));
  if (type == "A3") return CartanMatrix(a_series(3));
  if (type == "A4") return CartanMatrix(a_series(4));
  if (type == "A5") return CartanMatrix(a_series(5));
  if (type == "B2") {
    IntMat a(2, 2);
    a << 2, -2, -1, 2;
    return CartanMatrix(a);
  }
  if (type == "B3") {
    IntMat a(3, 3);
    a << 2, -1, 0, -1, 2, -1, 0, -2, 2;
    return CartanMatrix(a);
  }
  if (type == "C3") {
    IntMat a(3, 3);
    a << 2, -1, 0, -1, 2, -2, 0, -1, 2;
    return CartanMatrix(a);
  }
  if (type == "G2") {
    IntMat a(2, 2);
    a << 2, -3, -1, 2;
    return CartanMatrix(a);
  }
  throw invalid_input("unknown named type: " + type +
                      " (use --cartan for anything beyond A1..A5, B2, B3, "
                      "C3, G2)");
}

WeylGroup::WeylGroup(CartanMatrix cartan, std::size_t orbit_cap)
    : cartan_(std::move(cartan)) {
  enumerate(orbit_cap);
  compute_positive_roots();
}

void WeylGroup::enumerate(std::size_t orbit_cap) {
  const int n = rank();
  std::unordered_map<IntVec, WIndex, IntVecHash, IntVecEq> index_of;

  rho_images_.push_back(rho());
  lengths_.push_back(0);
  index_of.emplace(rho_images_[0], 0);
  lmul_.assign(n, {});

  // BFS on left multiplication; layers are lengths, so indices come out
  // sorted by length.
  for (std::size_t head = 0; head < rho_images_.size(); ++head) {
    IntVec cur = rho_images_[head];
    for (int s = 0; s < n; ++s) {
      IntVec img = cartan_.reflect(s, cur);
      auto [it, inserted] =
          index_of.emplace(img, static_cast<WIndex>(rho_images_.size()));
      if (inserted) {
        if (rho_images_.size() >= orbit_cap)
          throw invalid_input(cap_exceeded_message(orbit_cap));
        rho_images_.push_back(std::move(img));
        lengths_.push_back(lengths_[head] + 1);
      }
      for (int t = 0; t < n; ++t)
        lmul_[t].resize(rho_images_.size(), -1);
      lmul_[s][head] = it->second;
      lmul_[s][it->second] = static_cast<WIndex>(head);
    }
  }
  const WIndex m = size();
  for (int s = 0; s < n; ++s) lmul_[s].resize(m);

  // Inverses: w = s_{i1}...s_{ik} (left stripping) gives w^{-1} by left
  // multiplying the letters in word order.
  inverse_.assign(m, 0);
  for (WIndex w = 0; w < m; ++w) {
    WIndex inv = 0;
    WIndex cur = w;
    while (cur != 0) {
      int s = first_left_descent(cur);
      inv = lmul_[s][inv];
      cur = lmul_[s][cur];
    }
    inverse_[w] = inv;
  }

  rmul_.assign(n, std::vector<WIndex>(m));
  for (int s = 0; s < n; ++s)
    for (WIndex w = 0; w < m; ++w)
      rmul_[s][w] = inverse_[lmul_[s][inverse_[w]]];
}

void WeylGroup::compute_positive_roots() {
  const int n = rank();
  std::unordered_set<IntVec, IntVecHash, IntVecEq> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r;
    r.fundamental = cartan_.simple_root(i);
    r.simple_coords = IntVec::Zero(n);
    r.simple_coords(i) = 1;
    r.coroot_coords = IntVec::Zero(n);
    r.coroot_coords(i) = 1;
    seen.insert(r.fundamental);
    positive_roots_.push_back(r);
    queue.push_back(std::move(r));
  }
  while (!queue.empty()) {
    Root r = std::move(queue.front());
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      Root img;
      img.fundamental = cartan_.reflect(j, r.fundamental);
      img.simple_coords = r.simple_coords;
      img.simple_coords(j) -= r.fundamental(j);
      // s_j on coroots: c -> c - <alpha_j, beta^vee> e_j, the pairing being
      // dot(c, column j of the Cartan matrix).
      Int pair = 0;
      for (int i = 0; i < n; ++i) pair += r.coroot_coords(i) * cartan_.entry(i, j);
      img.coroot_coords = r.coroot_coords;
      img.coroot_coords(j) -= pair;
      bool positive = true;
      for (int i = 0; i < n; ++i)
        if (img.simple_coords(i) < 0) positive = false;
      if (positive && seen.insert(img.fundamental).second) {
        positive_roots_.push_back(img);
        queue.push_back(img);
      }
    }
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const Root& a, const Root& b) {
              return lex_less(a.simple_coords, b.simple_coords);
            });
}

int WeylGroup::first_left_descent(WIndex w) const {
  const IntVec& v = rho_images_[w];
  for (int i = 0; i < rank(); ++i)
    if (v(i) < 0) return i;
  return -1;
}

int WeylGroup::first_right_descent(WIndex w) const {
  return first_left_descent(inverse_[w]);
}

std::vector<int> WeylGroup::word(WIndex w) const {
  std::vector<int> out;
  while (w != 0) {
    int s = first_left_descent(w);
    out.push_back(s);
    w = lmul_[s][w];
  }
  return out;
}

WIndex WeylGroup::from_word(const std::vector<int>& word) const {
  WIndex w = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rank()) throw invalid_input("word letter out of range");
    w = lmul_[*it][w];
  }
  return w;
}

WIndex WeylGroup::mul(WIndex a, WIndex b) const {
  // a * b: apply the letters of a on the left of b, last letter first.
  std::vector<int> wa = word(a);
  WIndex out = b;
  for (auto it = wa.rbegin(); it != wa.rend(); ++it) out = lmul_[*it][out];
  return out;
}

void WeylGroup::ensure_bruhat_table() const {
  std::call_once(bruhat_once_, [this] {
    const std::size_t m = static_cast<std::size_t>(size());
    if (m > 16384) return;  // fall back to the O(length) lifting recursion
    bruhat_stride_ = (m + 63) / 64;
    bruhat_bits_.assign(m * bruhat_stride_, 0);
    auto bit = [this](WIndex v, WIndex u) -> std::uint64_t& {
      return bruhat_bits_[static_cast<std::size_t>(v) * bruhat_stride_ +
                          static_cast<std::size_t>(u) / 64];
    };
    bit(0, 0) |= 1ull;
    // Indices are length-sorted, so D(sv) is ready before D(v):
    // D(v) = D(sv) | s.D(sv) for any left descent s of v.
    for (WIndex v = 1; v < size(); ++v) {
      int s = first_left_descent(v);
      WIndex sv = lmul_[s][v];
      const std::uint64_t* src =
          &bruhat_bits_[static_cast<std::size_t>(sv) * bruhat_stride_];
      std::uint64_t* dst =
          &bruhat_bits_[static_cast<std::size_t>(v) * bruhat_stride_];
      for (std::size_t i = 0; i < bruhat_stride_; ++i) dst[i] = src[i];
      for (std::size_t blk = 0; blk < bruhat_stride_; ++blk) {
        std::uint64_t bits = src[blk];
        while (bits) {
          int off = __builtin_ctzll(bits);
          bits &= bits - 1;
          WIndex u = static_cast<WIndex>(blk * 64 + off);
          WIndex su = lmul_[s][u];
          bit(v, su) |= 1ull << (su % 64);
        }
      }
    }
  });
}

bool WeylGroup::bruhat_leq(WIndex u, WIndex v) const {
  ensure_bruhat_table();
  if (bruhat_stride_ == 0) return bruhat_leq_uncached(u, v);
  return (bruhat_bits_[static_cast<std::size_t>(v) * bruhat_stride_ +
                       static_cast<std::size_t>(u) / 64] >>
          (u % 64)) &
         1ull;
}

bool WeylGroup::bruhat_leq_uncached(WIndex u, WIndex v) const {
  // Lifting recursion; one branch per step, so O(length(v)).
  while (true) {
    if (lengths_[u] > lengths_[v]) return false;
    if (u == v) return true;
    if (v == 0) return false;
    int s = first_left_descent(v);
    WIndex su = lmul_[s][u];
    if (lengths_[su] < lengths_[u]) u = su;
    v = lmul_[s][v];
  }
}

WIndex WeylGroup::brmin_interval_left(WIndex sigma, WIndex w) const {
  // brmin(I(sigma) w): wedge along a reduced word of sigma, last letter
  // first.
  std::vector<int> ws = word(sigma);
  WIndex out = w;
  for (auto it = ws.rbegin(); it != ws.rend(); ++it)
    out = meet_left(*it, out);
  return out;
}

WIndex WeylGroup::brmin_interval_right(WIndex w, WIndex sigma) const {
  std::vector<int> ws = word(sigma);
  WIndex out = w;
  for (int s : ws) out = meet_right(out, s);
  return out;
}

WIndex WeylGroup::star(WIndex w, WIndex x) const {
  std::vector<int> wx = word(x);
  WIndex out = w;
  for (int s : wx) out = join_right(out, s);
  return out;
}

WIndex WeylGroup::coset_min_left_quotient(WIndex w, ParabolicSubset j) const {
  for (;;) {
    int hit = -1;
    const IntVec& rinv = rho_images_[inverse_[w]];
    for (int s = 0; s < rank(); ++s)
      if (j.contains(s) && rinv(s) < 0) {
        hit = s;
        break;
      }
    if (hit < 0) return w;
    w = rmul_[hit][w];
  }
}

WIndex WeylGroup::coset_min_right_quotient(WIndex w, ParabolicSubset j) const {
  for (;;) {
    int hit = -1;
    const IntVec& r = rho_images_[w];
    for (int s = 0; s < rank(); ++s)
      if (j.contains(s) && r(s) < 0) {
        hit = s;
        break;
      }
    if (hit < 0) return w;
    w = lmul_[hit][w];
  }
}

WIndex WeylGroup::double_coset_min(WIndex w, ParabolicSubset jl,
                                   ParabolicSubset jr) const {
  for (;;) {
    WIndex before = w;
    w = coset_min_right_quotient(w, jl);
    w = coset_min_left_quotient(w, jr);
    if (w == before) return w;
  }
}

std::optional<WIndex> WeylGroup::deodhar_min(WIndex sigma, ParabolicSubset j,
                                             WIndex w) const {
  WIndex sigma_min = coset_min_left_quotient(sigma, j);
  std::vector<int> ws = word(sigma_min);
  WIndex v = w;
  for (int s : ws) v = meet_left(s, v);
  if (!in_parabolic(v, j)) return std::nullopt;
  return mul(sigma_min, v);
}

std::optional<WIndex> WeylGroup::coset_max_below(WIndex sigma,
                                                 ParabolicSubset j,
                                                 WIndex w) const {
  WIndex sigma_min = coset_min_left_quotient(sigma, j);
  std::optional<WIndex> best;
  for (WIndex u : parabolic_elements(j)) {
    WIndex v = mul(sigma_min, u);
    if (!bruhat_leq(v, w)) continue;
    if (!best || bruhat_leq(*best, v)) best = v;
  }
  return best;
}

WIndex WeylGroup::kk_brmin(ParabolicSubset jl, WIndex tau, WIndex phi,
                           ParabolicSubset jr) const {
  WIndex u = brmin_interval_left(inverse_[tau], phi);
  return double_coset_min(u, jl, jr);
}

bool WeylGroup::in_parabolic(WIndex w, ParabolicSubset j) const {
  while (w != 0) {
    int s = first_left_descent(w);
    if (!j.contains(s)) return false;
    w = lmul_[s][w];
  }
  return true;
}

std::vector<WIndex> WeylGroup::parabolic_elements(ParabolicSubset j) const {
  std::vector<WIndex> out{0};
  std::unordered_set<WIndex> seen{0};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int s = 0; s < rank(); ++s) {
      if (!j.contains(s)) continue;
      WIndex nxt = lmul_[s][out[head]];
      if (seen.insert(nxt).second) out.push_back(nxt);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParabolicSubset WeylGroup::stabilizer(const IntVec& v) {
  std::uint32_t m = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) == 0) m |= 1u << i;
  return ParabolicSubset(m);
}

IntVec WeylGroup::act(WIndex w, const IntVec& v) const {
  IntVec out = v;
  std::vector<int> ws = word(w);
  for (auto it = ws.rbegin(); it != ws.rend(); ++it)
    out = cartan_.reflect(*it, out);
  return out;
}

RatVec WeylGroup::act(WIndex w, const RatVec& v) const {
  RatVec out = v;
  std::vector<int> ws = word(w);
  for (auto it = ws.rbegin(); it != ws.rend(); ++it)
    out = cartan_.reflect(*it, out);
  return out;
}

int WeylGroup::positive_root_index(const IntVec& simple_coords) const {
  for (std::size_t k = 0; k < positive_roots_.size(); ++k)
    if (positive_roots_[k].simple_coords == simple_coords)
      return static_cast<int>(k);
  throw invalid_input("not a positive root");
}

Int WeylGroup::dimension(const IntVec& highest_weight) const {
  if (!is_dominant(highest_weight))
    throw invalid_input("dimension requires a dominant weight");
  Rational dim(1);
  for (const Root& beta : positive_roots_) {
    Int num = 0, den = 0;
    for (int i = 0; i < rank(); ++i) {
      num += (highest_weight(i) + 1) * beta.coroot_coords(i);
      den += beta.coroot_coords(i);
    }
    dim *= Rational(num, den);
  }
  if (!dim.is_integer()) throw invariant_violation("Weyl dimension not integral");
  return dim.num();
}

std::pair<IntVec, WIndex> WeylGroup::dominant_conjugate(
    const IntVec& nu) const {
  IntVec v = nu;
  WIndex u = 0;  // built so that u(v) = nu at every step
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rank(); ++i)
      if (v(i) < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    v = cartan_.reflect(neg, v);
    u = rmul_[neg][u];
  }
  u = coset_min_left_quotient(u, stabilizer(v));
  return {v, u};
}

Coset make_coset(const WeylGroup& g, WIndex w, ParabolicSubset j,
                 CosetSide side) {
  Coset c;
  c.parabolic = j;
  c.side = side;
  c.min_rep = side == CosetSide::left_quotient
                  ? g.coset_min_left_quotient(w, j)
                  : g.coset_min_right_quotient(w, j);
  return c;
}

DoubleCoset make_double_coset(const WeylGroup& g, WIndex w, ParabolicSubset jl,
                              ParabolicSubset jr) {
  DoubleCoset c;
  c.left = jl;
  c.right = jr;
  c.min_rep = g.double_coset_min(w, jl, jr);
  return c;
}

bool coset_leq(const WeylGroup& g, const Coset& a, const Coset& b) {
  if (a.parabolic != b.parabolic || a.side != b.side)
    throw invalid_input("coset comparison across different quotients");
  return g.bruhat_leq(a.min_rep, b.min_rep);
}

bool coset_leq(const WeylGroup& g, const DoubleCoset& a, const DoubleCoset& b) {
  if (a.left != b.left || a.right != b.right)
    throw invalid_input("double coset comparison across different quotients");
  return g.bruhat_leq(a.min_rep, b.min_rep);
}

std::vector<int> weyl_to_permutation(const WeylGroup& g, WIndex w) {
  const int n = g.rank() + 1;
  std::vector<int> oneline(n);
  for (int i = 0; i < n; ++i) oneline[i] = i + 1;
  // w = s_{i1}...s_{im}; as functions the rightmost acts first, and s_i is
  // the transposition of values i, i+1, which composes into one-line form as
  // a swap of values.
  std::vector<int> ws = g.word(w);
  for (auto it = ws.rbegin(); it != ws.rend(); ++it) {
    for (int& x : oneline)
      if (x == *it + 1)
        x = *it + 2;
      else if (x == *it + 2)
        x = *it + 1;
  }
  return oneline;
}

WIndex permutation_to_weyl(const WeylGroup& g, const std::vector<int>& oneline) {
  if (static_cast<int>(oneline.size()) != g.rank() + 1)
    throw invalid_input("one-line permutation length must be rank+1");
  std::vector<int> v = oneline;
  std::vector<char> used(v.size() + 1, 0);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || used[x])
      throw invalid_input("not a permutation in one-line notation");
    used[x] = 1;
  }
  // Bubble sort by right multiplications records a reduced word.
  std::vector<int> rev;
  for (;;) {
    int d = -1;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] > v[i + 1]) {
        d = static_cast<int>(i);
        break;
      }
    if (d < 0) break;
    std::swap(v[d], v[d + 1]);
    rev.push_back(d);
  }
  std::reverse(rev.begin(), rev.end());
  return g.from_word(rev);
}

std::string word_to_string(const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i] + 1);
  }
  return out;
}

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> out;
  if (s.empty() || s == "e" || s == "1-line:e") return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    int letter = std::stoi(s.substr(pos, next - pos));
    if (letter < 1) throw invalid_input("word letters are 1-based indices");
    out.push_back(letter - 1);
    pos = next + 1;
  }
  return out;
}

}  // namespace kkpath
