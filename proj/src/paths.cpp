#include "kkpath/paths.hpp"

#include <algorithm>
#include <deque>

namespace kkpath {

namespace {

bool positively_parallel(const RatVec& a, const RatVec& b) {
  // b == t*a with t > 0.
  int k = -1;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero()) {
      k = static_cast<int>(i);
      break;
    }
  if (k < 0) return false;
  if (b(k).is_zero()) return false;
  Rational t = b(k) / a(k);
  if (t.sign() <= 0) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (b(i) != t * a(i)) return false;
  return true;
}

bool is_zero_vec(const RatVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

}  // namespace

PLPath::PLPath(std::vector<RatVec> vertices) {
  if (vertices.empty()) throw invalid_input("path needs at least one vertex");
  if (!is_zero_vec(vertices.front()))
    throw invalid_input("paths start at the origin");
  vertices_.push_back(vertices.front());
  for (std::size_t j = 1; j < vertices.size(); ++j) {
    RatVec seg = vertices[j] - vertices_.back();
    if (is_zero_vec(seg)) continue;
    if (vertices_.size() >= 2) {
      RatVec prev = vertices_.back() - vertices_[vertices_.size() - 2];
      if (positively_parallel(prev, seg)) {
        vertices_.back() = vertices[j];
        continue;
      }
    }
    vertices_.push_back(vertices[j]);
  }
}

PLPath PLPath::constant(int rank) {
  std::vector<RatVec> v{RatVec::Constant(rank, Rational(0))};
  return PLPath(std::move(v));
}

PLPath PLPath::straight(const IntVec& endpoint) {
  return straight(to_rat(endpoint));
}

PLPath PLPath::straight(const RatVec& endpoint) {
  std::vector<RatVec> v;
  v.push_back(RatVec::Constant(endpoint.size(), Rational(0)));
  v.push_back(endpoint);
  return PLPath(std::move(v));
}

IntVec PLPath::endpoint_weight() const {
  const RatVec& e = endpoint();
  IntVec out(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    if (!e(i).is_integer())
      throw invariant_violation("path endpoint is not an integral weight");
    out(i) = e(i).num();
  }
  return out;
}

bool PLPath::operator<(const PLPath& b) const {
  const auto& av = vertices_;
  const auto& bv = b.vertices_;
  for (std::size_t j = 0; j < std::min(av.size(), bv.size()); ++j) {
    for (Eigen::Index i = 0; i < av[j].size(); ++i) {
      if (av[j](i) != bv[j](i)) return av[j](i) < bv[j](i);
    }
  }
  return av.size() < bv.size();
}

std::size_t PLPath::hash() const {
  std::size_t h = 14695981039346656037ull;
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const RatVec& v : vertices_)
    for (Eigen::Index i = 0; i < v.size(); ++i) mix(v(i).hash());
  return h;
}

PLPath PLPath::reversed() const {
  std::vector<RatVec> out;
  const RatVec& end = endpoint();
  for (auto it = vertices_.rbegin(); it != vertices_.rend(); ++it)
    out.push_back(*it - end);
  return PLPath(std::move(out));
}

PLPath concat(const PLPath& a, const PLPath& b) {
  std::vector<RatVec> out = a.vertices();
  const RatVec& shift = a.endpoint();
  const auto& bv = b.vertices();
  for (std::size_t j = 1; j < bv.size(); ++j) out.push_back(bv[j] + shift);
  return PLPath(std::move(out));
}

namespace {

// h-values of the pairing with alpha_i^vee at the vertices.
std::vector<Rational> h_values(const PLPath& p, int i) {
  std::vector<Rational> h;
  h.reserve(p.vertices().size());
  for (const RatVec& v : p.vertices()) h.push_back(v(i));
  return h;
}

Rational min_h(const std::vector<Rational>& h) {
  Rational m = h[0];
  for (const Rational& x : h)
    if (x < m) m = x;
  return m;
}

// A point on the path: vertex index, plus an optional interior point between
// vertex j and j+1 given explicitly.
struct Cut {
  std::size_t vertex;      // point is at or after this vertex
  bool interior = false;
  RatVec point;            // the actual point (valid always)
};

Cut cut_at_vertex(const PLPath& p, std::size_t j) {
  return Cut{j, false, p.vertices()[j]};
}

RatVec interpolate(const RatVec& a, const RatVec& b, const Rational& s) {
  RatVec out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out(i) = a(i) + s * (b(i) - a(i));
  return out;
}

// Rebuild p as prefix [0, t0], reflected middle [t0, t1], suffix [t1, 1]
// shifted by delta (which equals the reflection mismatch at t1).
PLPath surgery(const CartanMatrix& cartan, const PLPath& p, int i,
               const Cut& c0, const Cut& c1) {
  const auto& v = p.vertices();
  std::vector<RatVec> out;
  for (std::size_t j = 0; j <= c0.vertex; ++j) out.push_back(v[j]);
  if (c0.interior) out.push_back(c0.point);
  const RatVec& base = c0.point;
  auto reflect_about_base = [&](const RatVec& x) {
    RatVec d = x - base;
    return RatVec(base + cartan.reflect(i, d));
  };
  for (std::size_t j = c0.vertex + 1; j <= c1.vertex; ++j)
    out.push_back(reflect_about_base(v[j]));
  if (c1.interior) out.push_back(reflect_about_base(c1.point));
  RatVec delta = reflect_about_base(c1.point) - c1.point;
  for (std::size_t j = c1.vertex + 1; j < v.size(); ++j)
    out.push_back(v[j] + delta);
  return PLPath(std::move(out));
}

}  // namespace

std::optional<PLPath> root_e(const CartanMatrix& cartan, const PLPath& p,
                             int i) {
  std::vector<Rational> h = h_values(p, i);
  Rational m = min_h(h);
  if (!m.is_integer())
    throw invariant_violation(
        "root operator applied to a path with non-integral minimum");
  if (m >= Rational(0)) return std::nullopt;
  // t1: first vertex attaining the minimum.
  std::size_t j1 = 0;
  while (h[j1] != m) ++j1;
  // t0: last point at or before t1 with h = m+1 (h[0] = 0 >= m+1, so the
  // level is crossed).
  Rational level = m + Rational(1);
  Cut c0 = cut_at_vertex(p, 0);
  for (std::size_t j = j1;; --j) {
    if (h[j] == level) {
      c0 = cut_at_vertex(p, j);
      break;
    }
    if (j == 0) throw invariant_violation("root_e lost the m+1 level");
    if ((h[j - 1] > level) != (h[j] > level) && h[j - 1] != level) {
      Rational s = (level - h[j - 1]) / (h[j] - h[j - 1]);
      Cut c;
      c.vertex = j - 1;
      c.interior = true;
      c.point = interpolate(p.vertices()[j - 1], p.vertices()[j], s);
      c0 = c;
      break;
    }
  }
  return surgery(cartan, p, i, c0, cut_at_vertex(p, j1));
}

std::optional<PLPath> root_f(const CartanMatrix& cartan, const PLPath& p,
                             int i) {
  std::vector<Rational> h = h_values(p, i);
  Rational m = min_h(h);
  if (!m.is_integer())
    throw invariant_violation(
        "root operator applied to a path with non-integral minimum");
  if (h.back() - m < Rational(1)) return std::nullopt;
  // t0: last vertex attaining the minimum.
  std::size_t j0 = h.size() - 1;
  while (h[j0] != m) --j0;
  // t1: first point at or after t0 with h = m+1.
  Rational level = m + Rational(1);
  Cut c1 = cut_at_vertex(p, h.size() - 1);
  for (std::size_t j = j0 + 1; j < h.size(); ++j) {
    if (h[j] == level) {
      c1 = cut_at_vertex(p, j);
      break;
    }
    if (h[j] > level) {
      Rational s = (level - h[j - 1]) / (h[j] - h[j - 1]);
      Cut c;
      c.vertex = j - 1;
      c.interior = true;
      c.point = interpolate(p.vertices()[j - 1], p.vertices()[j], s);
      c1 = c;
      break;
    }
  }
  return surgery(cartan, p, i, cut_at_vertex(p, j0), c1);
}

int eps_i(const PLPath& p, int i) {
  Rational m = min_h(h_values(p, i));
  if (!m.is_integer()) throw invariant_violation("non-integral minimum");
  return static_cast<int>(-m.num());
}

int phi_i(const PLPath& p, int i) {
  std::vector<Rational> h = h_values(p, i);
  Rational m = min_h(h);
  Rational r = h.back() - m;
  if (!r.is_integer()) throw invariant_violation("non-integral string length");
  return static_cast<int>(r.num());
}

bool is_lambda_dominant(const PLPath& p, const IntVec& lambda) {
  for (const RatVec& v : p.vertices())
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (Rational(lambda(i)) + v(i) < Rational(0)) return false;
  return true;
}

std::pair<PLPath, RaiseLog> raise_to_dominant(const CartanMatrix& cartan,
                                              const PLPath& p) {
  PLPath cur = p;
  RaiseLog log;
  for (;;) {
    bool moved = false;
    for (int i = 0; i < cartan.rank(); ++i) {
      if (auto up = root_e(cartan, cur, i)) {
        cur = std::move(*up);
        log.indices.push_back(i);
        moved = true;
        break;
      }
    }
    if (!moved) return {cur, log};
  }
}

WIndex direction_coset(const WeylGroup& g, const IntVec& shape,
                       const RatVec& direction) {
  RatVec d = direction;
  std::vector<int> applied;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < g.rank(); ++i)
      if (d(i) < Rational(0)) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    d = g.cartan().reflect(neg, d);
    applied.push_back(neg);
  }
  if (!positively_parallel(to_rat(shape), d))
    throw invariant_violation(
        "segment direction does not lie on the orbit cone of the shape");
  // d = u^{-1}(direction) for u = s_{a1} s_{a2} ... in application order.
  WIndex u = 0;
  for (int s : applied) u = g.rmul(u, s);
  return g.coset_min_left_quotient(u, WeylGroup::stabilizer(shape));
}

LSPath::LSPath(const WeylGroup& g, PLPath path, IntVec shape)
    : path_(std::move(path)), shape_(std::move(shape)) {
  const auto& v = path_.vertices();
  if (v.size() < 2) {
    if (!shape_.isZero())
      throw invalid_input("constant path must have zero shape");
    initial_dir_ = final_dir_ = g.identity();
    return;
  }
  initial_dir_ = direction_coset(g, shape_, RatVec(v[1] - v[0]));
  final_dir_ = direction_coset(g, shape_, RatVec(v[v.size() - 1] - v[v.size() - 2]));
}

Crystal::Crystal(const WeylGroup& g, IntVec shape) : g_(&g), shape_(std::move(shape)) {
  if (!is_dominant(shape_)) throw invalid_input("crystal shape must be dominant");
  rank_ = g.rank();
  const CartanMatrix& cartan = g.cartan();

  std::vector<PLPath> order;
  PLPath top = shape_.isZero() ? PLPath::constant(rank_) : PLPath::straight(shape_);
  std::unordered_map<PLPath, std::size_t, PLPathHash> seen;
  seen.emplace(top, 0);
  order.push_back(top);
  for (std::size_t head = 0; head < order.size(); ++head) {
    PLPath cur = order[head];  // copy: order may reallocate
    for (int i = 0; i < rank_; ++i) {
      if (auto down = root_f(cartan, cur, i)) {
        if (seen.emplace(*down, order.size()).second) order.push_back(*down);
      }
    }
  }

  // Canonical order, then tables.
  std::sort(order.begin(), order.end());
  index_.reserve(order.size());
  paths_.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    index_.emplace(order[k], k);
    paths_.emplace_back(g, order[k], shape_);
    endpoints_.push_back(paths_.back().path().endpoint_weight());
  }
  f_next_.assign(order.size() * rank_, -1);
  e_next_.assign(order.size() * rank_, -1);
  eps_.assign(order.size() * rank_, 0);
  phi_.assign(order.size() * rank_, 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      eps_[k * rank_ + i] = eps_i(order[k], i);
      phi_[k * rank_ + i] = phi_i(order[k], i);
      if (auto down = root_f(cartan, order[k], i))
        f_next_[k * rank_ + i] = static_cast<int>(index_.at(*down));
      if (auto up = root_e(cartan, order[k], i))
        e_next_[k * rank_ + i] = static_cast<int>(index_.at(*up));
    }
  }
}

std::size_t Crystal::index_of(const PLPath& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw invalid_input("path does not belong to this crystal");
  return it->second;
}

FormalCharacter Crystal::character() const {
  FormalCharacter ch(rank_);
  for (const IntVec& e : endpoints_) ch.add(e, 1);
  return ch;
}

std::vector<PLPath> demazure_crystal(const WeylGroup& g, const PLPath& p,
                                     const std::vector<int>& word) {
  if (!is_lambda_dominant(p, IntVec::Zero(g.rank())))
    throw invalid_input("demazure_crystal needs a dominant path");
  if (g.length(g.from_word(word)) != static_cast<int>(word.size()))
    throw invalid_input("word is not reduced");
  std::vector<PLPath> cur{p};
  std::unordered_map<PLPath, bool, PLPathHash> seen;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::vector<PLPath> next;
    seen.clear();
    for (const PLPath& q : cur) {
      PLPath x = q;
      for (;;) {
        if (seen.emplace(x, true).second) next.push_back(x);
        auto down = root_f(g.cartan(), x, *it);
        if (!down) break;
        x = std::move(*down);
      }
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

}  // namespace kkpath
