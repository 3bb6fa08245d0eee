#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "kkpath/rational.hpp"

namespace kkpath {

using Int = std::int64_t;

// Weights live in fundamental-weight coordinates throughout: the pairing
// <v, alpha_i^vee> is simply v[i].
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invariant_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generalized Cartan matrix restricted to finite type.  Column i, read in
// fundamental-weight coordinates, is the simple root alpha_i.
class CartanMatrix {
 public:
  explicit CartanMatrix(IntMat a) : a_(std::move(a)) { validate(); }

  int rank() const { return static_cast<int>(a_.rows()); }
  const IntMat& matrix() const { return a_; }
  Int entry(int i, int j) const { return a_(i, j); }

  IntVec simple_root(int i) const { return a_.col(i); }

  // s_i(v) = v - v[i] * alpha_i, for integer or rational coordinates.
  template <typename Derived>
  auto reflect(int i, const Eigen::MatrixBase<Derived>& v) const {
    using Scalar = typename Derived::Scalar;
    typename Derived::PlainObject out = v;
    Scalar c = v(i);
    for (int j = 0; j < rank(); ++j) out(j) = out(j) - c * Scalar(a_(j, i));
    return out;
  }

  static CartanMatrix named(const std::string& type);

 private:
  void validate() const {
    if (a_.rows() != a_.cols() || a_.rows() == 0)
      throw invalid_input("Cartan matrix must be square and nonempty");
    for (int i = 0; i < a_.rows(); ++i) {
      if (a_(i, i) != 2) throw invalid_input("Cartan diagonal must be 2");
      for (int j = 0; j < a_.cols(); ++j) {
        if (i == j) continue;
        if (a_(i, j) > 0) throw invalid_input("off-diagonal entries must be <= 0");
        if ((a_(i, j) == 0) != (a_(j, i) == 0))
          throw invalid_input("a[i][j] = 0 must imply a[j][i] = 0");
      }
    }
  }

  IntMat a_;
};

template <typename Derived>
bool is_dominant(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < Scalar(0)) return false;
  return true;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

struct IntVecLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return lex_less(a, b);
  }
};

inline std::size_t hash_ints(const Int* data, std::size_t n) {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(data[i]);
    h *= 1099511628211ull;
  }
  return h;
}

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const {
    return hash_ints(v.data(), static_cast<std::size_t>(v.size()));
  }
};
struct IntVecEq {
  bool operator()(const IntVec& a, const IntVec& b) const { return a == b; }
};

inline IntVec parse_int_vec(const std::string& s) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(std::stoll(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  IntVec v(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) v(static_cast<int>(i)) = out[i];
  return v;
}

// Finitely supported Z-linear combination of weights.  Characters of modules
// have nonnegative coefficients; Demazure operators pass through signed
// intermediates, so the coefficient type is signed.
class FormalCharacter {
 public:
  using Map = std::map<IntVec, Int, IntVecLess>;

  FormalCharacter() = default;
  explicit FormalCharacter(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  bool empty() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  void add(const IntVec& w, Int c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int coeff(const IntVec& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  FormalCharacter& operator+=(const FormalCharacter& o) {
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  FormalCharacter& operator-=(const FormalCharacter& o) {
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }

  friend FormalCharacter operator*(const FormalCharacter& a,
                                   const FormalCharacter& b) {
    FormalCharacter out(a.rank_);
    for (auto& [wa, ca] : a.terms_)
      for (auto& [wb, cb] : b.terms_) out.add(wa + wb, ca * cb);
    return out;
  }

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.terms_ == b.terms_;
  }

  // Shift every exponent by w (multiplication by e^w).
  FormalCharacter shifted(const IntVec& w) const {
    FormalCharacter out(rank_);
    for (auto& [v, c] : terms_) out.terms_.emplace(v + w, c);
    return out;
  }

  Int total() const {
    Int t = 0;
    for (auto& [w, c] : terms_) t += c;
    return t;
  }

  const Map& terms() const { return terms_; }

 private:
  int rank_ = 0;
  Map terms_;
};

// Multiset of dominant weights with multiplicities, ordered lexicographically
// for reproducible output.
struct Decomposition {
  std::map<IntVec, Int, IntVecLess> parts;

  void add(const IntVec& w, Int mult = 1) {
    auto it = parts.find(w);
    if (it == parts.end())
      parts.emplace(w, mult);
    else
      it->second += mult;
  }
  Int multiplicity(const IntVec& w) const {
    auto it = parts.find(w);
    return it == parts.end() ? 0 : it->second;
  }
  Int total() const {
    Int t = 0;
    for (auto& [w, m] : parts) t += m;
    return t;
  }
  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.parts == b.parts;
  }
  // True when every summand of *this occurs in o with at least the same
  // multiplicity.
  bool sub_multiset_of(const Decomposition& o) const {
    for (auto& [w, m] : parts)
      if (o.multiplicity(w) < m) return false;
    return true;
  }
};

}  // namespace kkpath
