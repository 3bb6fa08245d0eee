#include "kkpath/kk.hpp"

#include <algorithm>

namespace kkpath {

KKIndex make_kk_index(const WeylGroup& g, IntVec lambda, WIndex w, IntVec mu) {
  if (!is_dominant(lambda) || !is_dominant(mu))
    throw invalid_input("KK index requires dominant weights");
  KKIndex idx;
  idx.w = g.double_coset_min(w, WeylGroup::stabilizer(lambda),
                             WeylGroup::stabilizer(mu));
  idx.lambda = std::move(lambda);
  idx.mu = std::move(mu);
  return idx;
}

KKContext::KKContext(const WeylGroup& g, IntVec lambda, IntVec mu)
    : g_(&g), lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (!is_dominant(lambda_) || !is_dominant(mu_))
    throw invalid_input("KK context requires dominant weights");
  jl_ = WeylGroup::stabilizer(lambda_);
  jr_ = WeylGroup::stabilizer(mu_);
  cl_ = std::make_shared<Crystal>(g, lambda_);
  cm_ = std::make_shared<Crystal>(g, mu_);
  mu_dom_.resize(cm_->size());
  for (std::size_t k = 0; k < cm_->size(); ++k)
    mu_dom_[k] = is_lambda_dominant(cm_->path(k).path(), lambda_);
  std::size_t cache_size = static_cast<std::size_t>(g.size()) * g.size();
  weyl_cache_ = std::make_unique<std::atomic<WIndex>[]>(cache_size);
  for (std::size_t k = 0; k < cache_size; ++k)
    weyl_cache_[k].store(-1, std::memory_order_relaxed);
}

WIndex KKContext::kk_weyl_dirs(WIndex final_dir, WIndex initial_dir) const {
  std::size_t key =
      static_cast<std::size_t>(final_dir) * g_->size() + initial_dir;
  WIndex cached = weyl_cache_[key].load(std::memory_order_relaxed);
  if (cached >= 0) return cached;
  WIndex w = g_->kk_brmin(jl_, final_dir, initial_dir, jr_);
  weyl_cache_[key].store(w, std::memory_order_relaxed);
  return w;
}

WIndex KKContext::kk_weyl(const LSPath& p1, const LSPath& p2) const {
  return kk_weyl_dirs(p1.final_direction(), p2.initial_direction());
}

std::vector<std::pair<std::size_t, std::size_t>> KKContext::kk_path_set(
    WIndex w) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < cl_->size(); ++a) {
    WIndex fin = cl_->path(a).final_direction();
    for (std::size_t b = 0; b < cm_->size(); ++b) {
      WIndex v = kk_weyl_dirs(fin, cm_->path(b).initial_direction());
      if (g_->bruhat_leq(v, w)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> KKContext::lambda_dominant_paths(WIndex w) const {
  WIndex wmin = g_->coset_min_left_quotient(w, jr_);
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < cm_->size(); ++b) {
    if (!mu_dom_[b]) continue;
    if (g_->bruhat_leq(cm_->path(b).initial_direction(), wmin))
      out.push_back(b);
  }
  return out;
}

Decomposition KKContext::kk_decompose(WIndex w) const {
  Decomposition d;
  for (std::size_t b : lambda_dominant_paths(w))
    d.add(lambda_ + cm_->endpoint(b), 1);
  return d;
}

FormalCharacter KKContext::kk_character_paths(WIndex w) const {
  FormalCharacter ch(g_->rank());
  for (auto [a, b] : kk_path_set(w))
    ch.add(cl_->endpoint(a) + cm_->endpoint(b), 1);
  return ch;
}

FormalCharacter KKContext::kk_character_demazure(WIndex w) const {
  FormalCharacter emu(g_->rank());
  emu.add(mu_, 1);
  FormalCharacter inner = demazure_word(*g_, g_->word(w), emu);
  return demazure_word(*g_, g_->word(g_->longest()), inner.shifted(lambda_));
}

FormalCharacter demazure_apply(const WeylGroup& g, int i,
                               const FormalCharacter& f) {
  FormalCharacter out(f.rank());
  IntVec alpha = g.cartan().simple_root(i);
  for (const auto& [nu, c] : f.terms()) {
    Int m = nu(i);
    if (m >= 0) {
      IntVec cur = nu;
      for (Int j = 0; j <= m; ++j) {
        out.add(cur, c);
        cur -= alpha;
      }
    } else if (m <= -2) {
      IntVec cur = nu + alpha;
      for (Int j = 1; j <= -m - 1; ++j) {
        out.add(cur, -c);
        cur += alpha;
      }
    }
    // m == -1 contributes nothing.
  }
  return out;
}

FormalCharacter demazure_word(const WeylGroup& g, const std::vector<int>& word,
                              const FormalCharacter& f) {
  FormalCharacter out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = demazure_apply(g, *it, out);
  return out;
}

FormalCharacter irreducible_character(const WeylGroup& g, const IntVec& hw) {
  return Crystal(g, hw).character();
}

namespace {

// Lex order on simple-root coordinates; subtracting a nonzero nonnegative
// combination of simple roots strictly lowers it, which makes it a valid
// division order for character quotients.
class RootCoordOrder {
 public:
  explicit RootCoordOrder(const WeylGroup& g) : n_(g.rank()) {
    // Invert the Cartan matrix by Gauss-Jordan over rationals.
    std::vector<std::vector<Rational>> m(n_, std::vector<Rational>(2 * n_));
    for (int r = 0; r < n_; ++r) {
      for (int c = 0; c < n_; ++c) m[r][c] = Rational(g.cartan().entry(r, c));
      m[r][n_ + r] = Rational(1);
    }
    for (int col = 0; col < n_; ++col) {
      int piv = -1;
      for (int r = col; r < n_; ++r)
        if (!m[r][col].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) throw invariant_violation("singular Cartan matrix");
      std::swap(m[col], m[piv]);
      Rational d = m[col][col];
      for (int c = 0; c < 2 * n_; ++c) m[col][c] /= d;
      for (int r = 0; r < n_; ++r) {
        if (r == col || m[r][col].is_zero()) continue;
        Rational factor = m[r][col];
        for (int c = 0; c < 2 * n_; ++c) m[r][c] -= factor * m[col][c];
      }
    }
    inv_.assign(n_, std::vector<Rational>(n_));
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) inv_[r][c] = m[r][n_ + c];
  }

  RatVec root_coords(const IntVec& v) const {
    RatVec out(n_);
    for (int r = 0; r < n_; ++r) {
      Rational acc(0);
      for (int c = 0; c < n_; ++c) acc += inv_[r][c] * Rational(v(c));
      out(r) = acc;
    }
    return out;
  }

  bool greater(const IntVec& a, const IntVec& b) const {
    RatVec ra = root_coords(a), rb = root_coords(b);
    for (int i = 0; i < n_; ++i)
      if (ra(i) != rb(i)) return ra(i) > rb(i);
    return false;
  }

 private:
  int n_;
  std::vector<std::vector<Rational>> inv_;
};

}  // namespace

FormalCharacter irreducible_character_weyl(const WeylGroup& g,
                                           const IntVec& hw) {
  if (!is_dominant(hw)) throw invalid_input("highest weight must be dominant");
  RootCoordOrder ord(g);
  const IntVec rho = g.rho();
  FormalCharacter num(g.rank()), den(g.rank());
  for (WIndex w = 0; w < g.size(); ++w) {
    Int sign = g.length(w) % 2 == 0 ? 1 : -1;
    num.add(g.act(w, IntVec(hw + rho)), sign);
    den.add(g.act(w, rho), sign);
  }
  // Exact division: the lead of the numerator pairs with the denominator's
  // lead e^rho.
  FormalCharacter quot(g.rank());
  while (!num.empty()) {
    auto lead = num.terms().begin();
    for (auto it = num.terms().begin(); it != num.terms().end(); ++it)
      if (ord.greater(it->first, lead->first)) lead = it;
    IntVec shift = lead->first - rho;
    Int c = lead->second;
    quot.add(shift, c);
    for (const auto& [w, cw] : den.terms()) num.add(w + shift, -c * cw);
  }
  return quot;
}

Decomposition decompose_character(const WeylGroup& g, FormalCharacter ch) {
  RootCoordOrder ord(g);
  Decomposition out;
  while (!ch.empty()) {
    // A maximal weight of a genuine character is dominant and its coefficient
    // is the multiplicity of that irreducible.
    auto lead = ch.terms().begin();
    for (auto it = ch.terms().begin(); it != ch.terms().end(); ++it)
      if (ord.greater(it->first, lead->first)) lead = it;
    IntVec hw = lead->first;
    Int mult = lead->second;
    if (!is_dominant(hw) || mult <= 0)
      throw invariant_violation("not a nonnegative sum of irreducibles");
    out.add(hw, mult);
    FormalCharacter irr = irreducible_character(g, hw);
    for (const auto& [w, c] : irr.terms()) ch.add(w, -mult * c);
  }
  return out;
}

WIndex geometric_rep(const WeylGroup& g, const IntVec& lambda,
                     const IntVec& mu, const DoubleCoset& c) {
  if (c.left != WeylGroup::stabilizer(lambda) ||
      c.right != WeylGroup::stabilizer(mu))
    throw invalid_input("double coset parabolics must be the stabilizers");
  IntVec wmu = g.act(c.min_rep, mu);
  for (int i = 0; i < g.rank(); ++i)
    if (c.left.contains(i) && wmu(i) < 0)
      throw invariant_violation("minimal representative is not W_lambda-dominant");
  return c.min_rep;
}

std::vector<WIndex> double_cosets(const WeylGroup& g, ParabolicSubset jl,
                                  ParabolicSubset jr) {
  std::vector<char> seen(g.size(), 0);
  std::vector<WIndex> out;
  for (WIndex w = 0; w < g.size(); ++w) {
    WIndex m = g.double_coset_min(w, jl, jr);
    if (!seen[m]) {
      seen[m] = 1;
      out.push_back(m);
    }
  }
  return out;
}

Int prv_lower_bound(const WeylGroup& g, const IntVec& lambda, const IntVec& mu,
                    WIndex w, const IntVec& nu) {
  if (!is_dominant(nu)) throw invalid_input("nu must be dominant");
  ParabolicSubset jl = WeylGroup::stabilizer(lambda);
  ParabolicSubset jr = WeylGroup::stabilizer(mu);
  WIndex wmin = g.double_coset_min(w, jl, jr);
  Int count = 0;
  for (WIndex tau : double_cosets(g, jl, jr)) {
    if (!g.bruhat_leq(tau, wmin)) continue;
    if (g.dominant_conjugate(lambda + g.act(tau, mu)).first == nu) ++count;
  }
  return count;
}

bool generalized_prv_check(const WeylGroup& g, const IntVec& lambda,
                           const IntVec& mu, const GPRVInput& in) {
  KKContext ctx(g, lambda, mu);
  return generalized_prv_check(ctx, in);
}

bool generalized_prv_check(const KKContext& ctx, const GPRVInput& in) {
  const WeylGroup& g = ctx.group();
  const IntVec& lambda = ctx.lambda();
  const IntVec& mu = ctx.mu();
  const auto& roots = g.positive_roots();
  if (in.beta < 0 || in.beta >= static_cast<int>(roots.size()))
    throw invalid_input("beta is not a positive root index");
  const Root& beta = roots[in.beta];

  auto simple_index = [&](const IntVec& root_fund) -> int {
    for (int i = 0; i < g.rank(); ++i)
      if (root_fund == g.cartan().simple_root(i)) return i;
    return -1;
  };
  int iv = simple_index(g.act(g.inverse(in.v), beta.fundamental));
  int iu = simple_index(g.act(g.inverse(in.u), beta.fundamental));
  if (iv < 0 && iu < 0)
    throw invalid_input("neither v^-1 beta nor u^-1 beta is simple");

  auto pair_coroot = [&](const IntVec& weight) {
    Int p = 0;
    for (int i = 0; i < g.rank(); ++i) p += weight(i) * beta.coroot_coords(i);
    return p;
  };
  Int bound = std::min(pair_coroot(g.act(in.v, lambda)),
                       pair_coroot(g.act(in.u, mu)));
  if (in.k < 0 || in.k > bound)
    throw invalid_input("k outside [0, min(<v lambda, beta^vee>, <u mu, beta^vee>)]");

  IntVec nu =
      g.act(in.v, lambda) + g.act(in.u, mu) - in.k * beta.fundamental;
  if (!is_dominant(nu)) throw invalid_input("nu is not dominant");

  // s_beta = v s_{iv} v^{-1} (or u s_{iu} u^{-1}); w = v^-1 s_beta u.
  WIndex w;
  if (iv >= 0) {
    w = g.mul(g.from_word({iv}), g.mul(g.inverse(in.v), in.u));
  } else {
    w = g.mul(g.inverse(in.v), g.mul(in.u, g.from_word({iu})));
  }
  return ctx.kk_decompose(w).multiplicity(nu) >= 1;
}

bool is_extremal(const WeylGroup& g, const LSPath& p1, const LSPath& p2) {
  PLPath theta = concat(p1.path(), p2.path());
  IntVec end = theta.endpoint_weight();
  IntVec conj = g.dominant_conjugate(end).first;
  auto [eta, log] = raise_to_dominant(g.cartan(), theta);
  return conj == eta.endpoint_weight();
}

}  // namespace kkpath
