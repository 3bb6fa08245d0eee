#include "kkpath/tableaux.hpp"

#include <algorithm>
#include <map>

namespace kkpath {

Partition normalize_partition(std::vector<Int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1])
      throw invalid_input("partition parts must weakly decrease");
  for (Int p : parts)
    if (p <= 0) throw invalid_input("partition parts must be positive");
  return parts;
}

bool partition_contains(const Partition& outer, const Partition& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

IntVec partition_to_weight(const Partition& p, int d) {
  if (static_cast<int>(p.size()) >= d)
    throw invalid_input("partition needs fewer than d parts to be an sl_d weight");
  IntVec w = IntVec::Zero(d - 1);
  for (int i = 0; i < d - 1; ++i) {
    Int pi = i < static_cast<int>(p.size()) ? p[i] : 0;
    Int pj = i + 1 < static_cast<int>(p.size()) ? p[i + 1] : 0;
    w(i) = pi - pj;
  }
  return w;
}

Partition weight_to_partition(const IntVec& w) {
  std::vector<Int> parts(w.size());
  Int acc = 0;
  for (Eigen::Index i = w.size(); i-- > 0;) {
    acc += w(i);
    parts[i] = acc;
  }
  return normalize_partition(std::move(parts));
}

Partition SSYT::shape() const {
  std::vector<Int> p;
  for (auto& r : rows) p.push_back(static_cast<Int>(r.size()));
  return normalize_partition(std::move(p));
}

int SSYT::max_entry() const {
  int m = 0;
  for (auto& r : rows)
    for (int e : r) m = std::max(m, e);
  return m;
}

bool SSYT::valid() const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) return false;
      if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) return false;
      if (r + 1 < rows.size() && c < rows[r + 1].size() &&
          rows[r][c] >= rows[r + 1][c])
        return false;
    }
  }
  return true;
}

Partition SkewTableau::outer() const {
  std::vector<Int> p;
  std::size_t nrows = std::max(inner.size(), rows.size());
  for (std::size_t r = 0; r < nrows; ++r) {
    Int in = r < inner.size() ? inner[r] : 0;
    Int extra = r < rows.size() ? static_cast<Int>(rows[r].size()) : 0;
    p.push_back(in + extra);
  }
  return normalize_partition(std::move(p));
}

bool SkewTableau::valid() const {
  auto entry = [&](std::size_t r, Int c) -> int {
    // 0 for inner boxes, -1 for absent, else the entry; c is 0-based over
    // the full row.
    Int in = r < inner.size() ? inner[r] : 0;
    if (c < in) return 0;
    if (r >= rows.size()) return -1;
    Int k = c - in;
    if (k >= static_cast<Int>(rows[r].size())) return -1;
    return rows[r][k];
  };
  Partition out;
  try {
    out = outer();
  } catch (const invalid_input&) {
    return false;
  }
  if (!partition_contains(out, inner)) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Int in = r < inner.size() ? inner[r] : 0;
    Int full = in + static_cast<Int>(rows[r].size());
    for (Int c = in; c < full; ++c) {
      int e = entry(r, c);
      if (e < 1) return false;
      int right = entry(r, c + 1);
      if (right > 0 && e > right) return false;
      int below = entry(r + 1, c);
      if (below == 0) return false;  // inner shape not top-left justified
      if (below > 0 && e >= below) return false;
    }
  }
  return true;
}

Word reverse_reading_word(const SkewTableau& t) {
  Word w;
  for (auto& r : t.rows)
    for (auto it = r.rbegin(); it != r.rend(); ++it) w.push_back(*it);
  return w;
}

Word reverse_reading_word(const SSYT& s) {
  SkewTableau t;
  t.rows = s.rows;
  return reverse_reading_word(t);
}

Word column_word(const SkewTableau& t) {
  Word w;
  Int width = 0;
  std::vector<Int> in(t.rows.size(), 0);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    in[r] = r < t.inner.size() ? t.inner[r] : 0;
    width = std::max(width, in[r] + static_cast<Int>(t.rows[r].size()));
  }
  for (Int c = width - 1; c >= 0; --c) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      Int k = c - in[r];
      if (k >= 0 && k < static_cast<Int>(t.rows[r].size()))
        w.push_back(t.rows[r][k]);
    }
  }
  return w;
}

Word column_word(const SSYT& s) {
  SkewTableau t;
  t.rows = s.rows;
  return column_word(t);
}

bool is_ballot(const Word& w) {
  int m = 0;
  for (int e : w) m = std::max(m, e);
  std::vector<Int> cnt(m + 2, 0);
  for (int e : w) {
    if (e < 1) throw invalid_input("word letters must be positive");
    ++cnt[e];
    if (e > 1 && cnt[e] > cnt[e - 1]) return false;
  }
  return true;
}

std::vector<Int> word_type(const Word& w) {
  int m = 0;
  for (int e : w) m = std::max(m, e);
  std::vector<Int> cnt(m, 0);
  for (int e : w) ++cnt[e - 1];
  return cnt;
}

IntVec word_weight(const Word& w, int d) {
  std::vector<Int> cnt(d + 1, 0);
  for (int e : w) {
    if (e > d) throw invalid_input("letter exceeds d");
    ++cnt[e];
  }
  IntVec out(d - 1);
  for (int i = 1; i < d; ++i) out(i - 1) = cnt[i] - cnt[i + 1];
  return out;
}

Word superstandard_word(const Partition& p) {
  Word w;
  for (std::size_t j = 0; j < p.size(); ++j)
    for (Int k = 0; k < p[j]; ++k) w.push_back(static_cast<int>(j + 1));
  return w;
}

bool p_dominant(const Word& w, const Partition& p) {
  Word full = superstandard_word(p);
  full.insert(full.end(), w.begin(), w.end());
  return is_ballot(full);
}

Partition smallest_dominating_partition(const Word& w) {
  // D_e = max prefix deficit of e against e-1; the minimal partition is
  // p_j = sum_{e > j} D_e.
  int m = 0;
  for (int e : w) m = std::max(m, e);
  if (m <= 1) return {};
  std::vector<Int> cnt(m + 1, 0), deficit(m + 1, 0);
  for (int e : w) {
    ++cnt[e];
    if (e > 1) deficit[e] = std::max(deficit[e], cnt[e] - cnt[e - 1]);
  }
  std::vector<Int> p(m - 1, 0);
  Int acc = 0;
  for (int j = m - 1; j >= 1; --j) {
    acc += deficit[j + 1];
    p[j - 1] = acc;
  }
  return normalize_partition(std::move(p));
}

namespace {

void enumerate_ssyt_rec(const Partition& mu, int d,
                        std::vector<std::vector<int>>& rows, std::size_t r,
                        std::size_t c, std::vector<SSYT>& out) {
  if (r == mu.size()) {
    out.push_back(SSYT{rows});
    return;
  }
  if (c == static_cast<std::size_t>(mu[r])) {
    enumerate_ssyt_rec(mu, d, rows, r + 1, 0, out);
    return;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, rows[r][c - 1]);
  if (r > 0 && c < rows[r - 1].size()) lo = std::max(lo, rows[r - 1][c] + 1);
  for (int e = lo; e <= d; ++e) {
    rows[r][c] = e;
    enumerate_ssyt_rec(mu, d, rows, r, c + 1, out);
  }
  rows[r][c] = 0;
}

}  // namespace

std::vector<SSYT> enumerate_ssyt(const Partition& mu, int d) {
  std::vector<std::vector<int>> rows;
  for (Int p : mu) rows.emplace_back(p, 0);
  std::vector<SSYT> out;
  enumerate_ssyt_rec(mu, d, rows, 0, 0, out);
  return out;
}

SSYT lr_to_ssyt(const SkewTableau& t) {
  Word w = reverse_reading_word(t);
  if (!is_ballot(w)) throw invalid_input("tableau is not LR");
  int m = 0;
  for (int e : w) m = std::max(m, e);
  SSYT s;
  s.rows.assign(m, {});
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (int e : t.rows[r]) s.rows[e - 1].push_back(static_cast<int>(r + 1));
  for (auto& row : s.rows) std::sort(row.begin(), row.end());
  while (!s.rows.empty() && s.rows.back().empty()) s.rows.pop_back();
  return s;
}

SkewTableau ssyt_to_lr(const SSYT& s, const Partition& lambda) {
  SkewTableau t;
  t.inner = lambda;
  for (std::size_t j = 0; j < s.rows.size(); ++j) {
    for (int r : s.rows[j]) {
      if (static_cast<std::size_t>(r) > t.rows.size())
        t.rows.resize(r);
      t.rows[r - 1].push_back(static_cast<int>(j + 1));
    }
  }
  if (!t.valid()) throw invalid_input("SSYT does not define an LR tableau over lambda");
  return t;
}

std::vector<SkewTableau> lr_tableaux(const Partition& lambda,
                                     const Partition& mu, int d) {
  // Through the bijection: SSYT of shape mu, entries <= d, lambda-dominant
  // column word.
  std::vector<std::pair<Word, SkewTableau>> keyed;
  for (const SSYT& s : enumerate_ssyt(mu, d)) {
    if (!p_dominant(column_word(s), lambda)) continue;
    SkewTableau t = ssyt_to_lr(s, lambda);
    keyed.emplace_back(reverse_reading_word(s), std::move(t));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SkewTableau> out;
  out.reserve(keyed.size());
  for (auto& [w, t] : keyed) out.push_back(std::move(t));
  return out;
}

std::vector<int> depth_sequence(const SSYT& s, int p) {
  if (!s.valid()) throw invalid_input("not a semistandard tableau");
  if (p < 1 || p > static_cast<int>(s.rows.size()))
    throw invalid_input("row index out of range");
  struct Box {
    int row, col, entry;
  };
  std::vector<Box> boxes;
  for (int r = 0; r < static_cast<int>(s.rows.size()); ++r)
    for (int c = 0; c < static_cast<int>(s.rows[r].size()); ++c)
      boxes.push_back({r, c, s.rows[r][c]});
  // Chain steps go weakly North-East with strictly smaller entries; sorting
  // by row descending makes every potential predecessor come first.
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
    return a.row > b.row || (a.row == b.row && a.col < b.col);
  });
  // depth[b] = longest chain from the rightmost box of row p.
  const int br = p - 1;
  const int bc = static_cast<int>(s.rows[br].size()) - 1;
  std::vector<int> depth(boxes.size(), -1);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (boxes[i].row == br && boxes[i].col == bc) depth[i] = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (depth[j] < 0) continue;
      if (boxes[j].row >= boxes[i].row && boxes[j].col <= boxes[i].col &&
          boxes[i].entry < boxes[j].entry)
        depth[i] = std::max(depth[i], depth[j] + 1);
    }
  }
  // y_j = max entry at depth p - j.
  std::vector<int> y(p + 1, 0);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    int dpt = depth[i];
    if (dpt >= 0 && dpt < p) y[p - dpt] = std::max(y[p - dpt], boxes[i].entry);
  }
  return {y.begin() + 1, y.end()};
}

Permutation ssyt_key_permutation(const SSYT& s) {
  if (!s.valid()) throw invalid_input("not a semistandard tableau");
  const int m = s.max_entry();
  const int nrows = static_cast<int>(s.rows.size());
  if (nrows == 0) return {};

  std::vector<int> key;
  key.push_back(s.rows[0].back());
  for (int p = 2; p <= nrows; ++p) {
    std::vector<int> y = depth_sequence(s, p);
    std::vector<int> a(key);
    std::sort(a.begin(), a.end());
    int chosen = -1;
    for (int k = p; k >= 1; --k) {
      if (y[k - 1] == 0) continue;
      if (k == 1 || a[k - 2] < y[k - 1]) {
        chosen = y[k - 1];
        break;
      }
    }
    if (chosen < 0)
      throw invariant_violation("depth sequence selection failed");
    key.push_back(chosen);
  }

  std::vector<char> used(m + 1, 0);
  for (int v : key) used[v] = 1;
  Permutation out = key;
  for (int v = 1; v <= m; ++v)
    if (!used[v]) out.push_back(v);
  return out;
}

SSYT ssyt_from_permutation(int r, const Permutation& x) {
  const int n = static_cast<int>(x.size());
  if (r < 1 || r > n) throw invalid_input("r out of range");
  SSYT s;
  // Column j (from the left, 0-based) holds the first n-j entries of x,
  // sorted; rows are assembled from the columns.
  int ncols = n - r + 1;
  std::vector<std::vector<int>> cols(ncols);
  for (int j = 0; j < ncols; ++j) {
    cols[j].assign(x.begin(), x.begin() + (n - j));
    std::sort(cols[j].begin(), cols[j].end());
  }
  s.rows.assign(n, {});
  for (int j = 0; j < ncols; ++j)
    for (std::size_t k = 0; k < cols[j].size(); ++k)
      s.rows[k].push_back(cols[j][k]);
  while (!s.rows.empty() && s.rows.back().empty()) s.rows.pop_back();
  return s;
}

bool perm_bruhat_leq(const Permutation& a, const Permutation& b) {
  std::size_t n = std::max(a.size(), b.size());
  auto at = [n](const Permutation& p, std::size_t i) -> int {
    return i < p.size() ? p[i] : static_cast<int>(i + 1);
  };
  std::vector<int> pa, pb;
  for (std::size_t s = 1; s < n; ++s) {
    pa.clear();
    pb.clear();
    for (std::size_t i = 0; i < s; ++i) {
      pa.push_back(at(a, i));
      pb.push_back(at(b, i));
    }
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    for (std::size_t i = 0; i < s; ++i)
      if (pa[i] > pb[i]) return false;
  }
  return true;
}

Permutation pad_permutation(Permutation p, int n) {
  if (static_cast<int>(p.size()) > n)
    throw invalid_input("cannot pad a permutation downward");
  for (int v = static_cast<int>(p.size()) + 1; v <= n; ++v) p.push_back(v);
  return p;
}

Permutation truncate_permutation(const Permutation& x, int r) {
  Permutation out = x;
  if (r < 0) r = 0;
  if (r < static_cast<int>(out.size()))
    std::sort(out.begin() + r, out.end());
  return out;
}

Permutation sort_prefix(const Permutation& x, int r) {
  Permutation out = x;
  r = std::min<int>(r, static_cast<int>(out.size()));
  std::sort(out.begin(), out.begin() + std::max(r, 0));
  return out;
}

SSYT truncate_ssyt(const SSYT& s, int r) {
  SSYT out;
  out.rows.assign(s.rows.begin(),
                  s.rows.begin() + std::min<std::size_t>(r, s.rows.size()));
  return out;
}

Permutation sn_deodhar_recipe(const Permutation& sigma, int r,
                              const Permutation& w) {
  const int n = static_cast<int>(sigma.size());
  if (static_cast<int>(w.size()) != n)
    throw invalid_input("sigma and w must have the same size");
  if (r < 1 || r >= n) throw invalid_input("recipe needs 1 <= r < n");
  for (int i = 1; i < n; ++i)
    if (i != r && sigma[i - 1] > sigma[i])
      throw invalid_input("sigma must be minimal in its coset (both blocks increasing)");
  for (int i = 1; i < r; ++i)
    if (w[i - 1] > w[i])
      throw invalid_input("recipe requires w_1..w_r increasing");
  {
    std::vector<int> wr(w.begin(), w.begin() + r);
    std::sort(wr.begin(), wr.end());
    for (int i = 0; i < r; ++i)
      if (wr[i] > sigma[i])
        throw invalid_input("empty: sorted w-prefix must be dominated by sigma's");
  }

  Permutation tau(sigma.begin(), sigma.begin() + r);
  for (int j = r + 1; j <= n; ++j) {
    std::vector<int> tprev(tau);
    std::sort(tprev.begin(), tprev.end());
    std::vector<int> wj(w.begin(), w.begin() + j);
    std::sort(wj.begin(), wj.end());
    int pick = -1;
    for (int k = j; k >= 1; --k) {
      if (k == 1 || tprev[k - 2] < wj[k - 1]) {
        pick = wj[k - 1];
        break;
      }
    }
    if (pick < 0) throw invariant_violation("recipe selection failed");
    tau.push_back(pick);
  }
  return tau;
}

Int refined_lr_coefficient(const Partition& lambda, const Partition& mu,
                           const Partition& nu, const Permutation& w, int d) {
  Int count = 0;
  for (const SkewTableau& t : lr_tableaux(lambda, mu, d)) {
    if (t.outer() != nu) continue;
    if (perm_bruhat_leq(ssyt_key_permutation(lr_to_ssyt(t)), w)) ++count;
  }
  return count;
}

std::vector<std::pair<Partition, Int>> kk_decompose_tableaux(
    const Partition& lambda, const Partition& mu, const Permutation& w, int d,
    TableauxMode mode) {
  std::map<Partition, Int> acc;
  for (const SkewTableau& t : lr_tableaux(lambda, mu, d)) {
    if (!perm_bruhat_leq(ssyt_key_permutation(lr_to_ssyt(t)), w)) continue;
    Partition nu = t.outer();
    if (mode == TableauxMode::sl) {
      Int floor = nu.size() == static_cast<std::size_t>(d) ? nu[d - 1] : 0;
      std::vector<Int> reduced;
      for (Int part : nu) reduced.push_back(part - floor);
      nu = normalize_partition(std::move(reduced));
    }
    ++acc[nu];
  }
  return {acc.begin(), acc.end()};
}

std::vector<IntVec> ssyt_concat_shapes(const WeylGroup& g, const Partition& mu,
                                       int d) {
  if (g.rank() != d - 1) throw invalid_input("group rank must be d-1");
  std::vector<Int> conj;  // column lengths of mu, left to right
  if (!mu.empty()) {
    for (Int c = 0; c < mu[0]; ++c) {
      Int len = 0;
      for (Int part : mu)
        if (part > c) ++len;
      conj.push_back(len);
    }
  }
  // Pieces right to left: column c contributes the fundamental weight of its
  // length.
  std::vector<IntVec> shapes;
  for (auto it = conj.rbegin(); it != conj.rend(); ++it) {
    if (*it >= d) throw invalid_input("mu has too many parts for sl_d");
    IntVec f = IntVec::Zero(d - 1);
    f(static_cast<int>(*it) - 1) = 1;
    shapes.push_back(f);
  }
  return shapes;
}

ConcatPath ssyt_to_concat(const WeylGroup& g, const SSYT& s, int d) {
  if (!s.valid()) throw invalid_input("not a semistandard tableau");
  if (s.max_entry() > d) throw invalid_input("entry exceeds d");
  Partition mu = s.shape();
  if (!mu.empty() && static_cast<int>(mu.size()) > d)
    throw invalid_input("shape has too many rows for sl_d");
  std::vector<LSPath> pieces;
  Int ncols = mu.empty() ? 0 : mu[0];
  for (Int c = ncols - 1; c >= 0; --c) {
    IntVec eps_mult = IntVec::Zero(d);
    int len = 0;
    for (std::size_t r = 0; r < s.rows.size(); ++r)
      if (c < static_cast<Int>(s.rows[r].size())) {
        eps_mult(s.rows[r][c] - 1) += 1;
        ++len;
      }
    // epsilon-multiplicities to fundamental coordinates.
    IntVec wt(d - 1);
    for (int i = 0; i < d - 1; ++i) wt(i) = eps_mult(i) - eps_mult(i + 1);
    IntVec shape = IntVec::Zero(d - 1);
    if (len < d) {
      shape(len - 1) = 1;
      pieces.emplace_back(g, PLPath::straight(wt), shape);
    } else {
      // a full column is forced (entries 1..d) and carries weight zero
      pieces.emplace_back(g, PLPath::constant(d - 1), shape);
    }
  }
  return ConcatPath(g, std::move(pieces));
}

std::string permutation_to_string(const Permutation& p) {
  bool digits = p.size() <= 9;
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!digits && i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

Permutation parse_permutation(const std::string& s) {
  Permutation p;
  if (s.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      p.push_back(std::stoi(s.substr(pos, next - pos)));
      pos = next + 1;
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw invalid_input("bad permutation digit");
      p.push_back(c - '0');
    }
  }
  std::vector<char> used(p.size() + 1, 0);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || used[v])
      throw invalid_input("not a permutation in one-line notation");
    used[v] = 1;
  }
  return p;
}

}  // namespace kkpath
