#include <doctest.h>

#include <map>
#include <set>

#include "kkpath/kk.hpp"
#include "kkpath/tableaux.hpp"
#include "oracles.hpp"

using namespace kkpath;

namespace {

SkewTableau left_sample() {
  // shape 7+5+4+3+1 over 4+4+1+1
  SkewTableau t;
  t.inner = {4, 4, 1, 1};
  t.rows = {{2, 2, 3}, {7}, {3, 3, 5}, {4, 6}, {1}};
  return t;
}

SkewTableau right_sample() {
  SkewTableau t;
  t.inner = {4, 4, 1, 1};
  t.rows = {{1, 1, 1}, {2}, {1, 2, 3}, {3, 4}, {1}};
  return t;
}

SSYT sample_ssyt() {  // the tableau attached to the right sample
  return SSYT{{{1, 1, 1, 3, 5}, {2, 3}, {3, 4}, {4}}};
}

std::vector<Partition> partitions_in_box(Int rows, Int cols) {
  std::vector<Partition> out{{}};
  std::vector<Int> cur;
  std::function<void(Int)> rec = [&](Int maxpart) {
    if (static_cast<Int>(cur.size()) == rows) return;
    for (Int p = 1; p <= maxpart; ++p) {
      cur.push_back(p);
      out.push_back(cur);
      rec(p);
      cur.pop_back();
    }
  };
  rec(cols);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All semistandard skew fillings of outer/inner with entries <= d.
void skew_fill_rec(const Partition& outer, const Partition& inner, int d,
                   std::vector<std::vector<int>>& rows, std::size_t r, Int c,
                   std::vector<SkewTableau>& out) {
  if (r == outer.size()) {
    SkewTableau t;
    t.inner = inner;
    t.rows = rows;
    out.push_back(t);
    return;
  }
  Int lo_col = r < inner.size() ? inner[r] : 0;
  if (c == outer[r]) {
    skew_fill_rec(outer, inner, d, rows, r + 1,
                  r + 1 < outer.size()
                      ? (r + 1 < inner.size() ? inner[r + 1] : 0)
                      : 0,
                  out);
    return;
  }
  int lo = 1;
  if (c > lo_col) lo = std::max(lo, rows[r][c - lo_col - 1]);
  if (r > 0) {
    Int above_inner = (r - 1) < inner.size() ? inner[r - 1] : 0;
    if (c >= above_inner &&
        c - above_inner < static_cast<Int>(rows[r - 1].size()))
      lo = std::max(lo, rows[r - 1][c - above_inner] + 1);
  }
  for (int e = lo; e <= d; ++e) {
    rows[r].push_back(e);
    skew_fill_rec(outer, inner, d, rows, r, c + 1, out);
    rows[r].pop_back();
  }
}

std::vector<SkewTableau> enumerate_skew(const Partition& outer,
                                        const Partition& inner, int d) {
  std::vector<std::vector<int>> rows(outer.size());
  std::vector<SkewTableau> out;
  skew_fill_rec(outer, inner, d, rows, 0, inner.empty() ? 0 : inner[0], out);
  return out;
}

}  // namespace

TEST_CASE("reading words of the sample tableaux") {
  CHECK(reverse_reading_word(left_sample()) ==
        Word{3, 2, 2, 7, 5, 3, 3, 6, 4, 1});
  CHECK(reverse_reading_word(right_sample()) ==
        Word{1, 1, 1, 2, 3, 2, 1, 4, 3, 1});
  CHECK(column_word(left_sample()) == Word{3, 2, 2, 7, 5, 3, 6, 3, 4, 1});
  CHECK(column_word(right_sample()) == Word{1, 1, 1, 2, 3, 2, 4, 1, 3, 1});
  CHECK(left_sample().valid());
  CHECK(right_sample().valid());
}

TEST_CASE("ballot sequences") {
  CHECK(is_ballot({1, 1, 1, 2, 3, 2, 1, 4, 3, 1}));
  CHECK_FALSE(is_ballot({3, 2, 2, 7, 5, 3, 3, 6, 4, 1}));
  CHECK(is_ballot({}));
  std::vector<Int> type = word_type(Word{1, 1, 1, 2, 3, 2, 1, 4, 3, 1});
  CHECK(type == std::vector<Int>{5, 2, 2, 1});
}

TEST_CASE("smallest dominating partition") {
  CHECK(smallest_dominating_partition({1, 1, 2, 1}) == Partition{});
  CHECK(smallest_dominating_partition(reverse_reading_word(left_sample())) ==
        Partition{5, 3, 2, 2, 1, 1});
  CHECK(smallest_dominating_partition(column_word(left_sample())) ==
        Partition{5, 3, 2, 2, 1, 1});

  // brute-force minimality: p-dominant iff p contains p_w
  std::vector<Word> words = {reverse_reading_word(left_sample()),
                             {2, 1, 3, 3},
                             {3, 1, 2},
                             {1, 2, 2, 3, 1},
                             {4, 4, 1}};
  for (const Word& w : words) {
    Partition pw = smallest_dominating_partition(w);
    CHECK(p_dominant(w, pw));
    // minimality: every dominating partition contains p_w, and nothing
    // strictly inside p_w dominates
    for (const Partition& p : partitions_in_box(6, 8)) {
      if (p_dominant(w, p)) CHECK(partition_contains(p, pw));
      if (partition_contains(pw, p) && !(p == pw))
        CHECK_FALSE(p_dominant(w, p));
    }
  }
}

TEST_CASE("p-dominance of row and column words agree on skew tableaux") {
  std::vector<std::pair<Partition, Partition>> shapes = {
      {{3, 2, 1}, {1}},   {{3, 3}, {2}},   {{4, 2}, {2, 1}},
      {{2, 2, 2}, {1, 1}}, {{3, 2, 1}, {}},
  };
  auto box = partitions_in_box(3, 3);
  for (auto& [outer, inner] : shapes) {
    for (const SkewTableau& t : enumerate_skew(outer, inner, 4)) {
      if (!t.valid()) continue;
      for (const Partition& p : box)
        CHECK(p_dominant(reverse_reading_word(t), p) ==
              p_dominant(column_word(t), p));
    }
  }
  // the superstandard word is p-dominant for every p
  for (const Partition& p : box)
    CHECK(p_dominant(superstandard_word({3, 1}), p));
}

TEST_CASE("LR tableau enumeration") {
  auto ts = lr_tableaux({2, 1}, {3, 1}, 3);
  CHECK(ts.size() == 7);
  for (const SkewTableau& t : ts) {
    CHECK(t.valid());
    CHECK(is_ballot(reverse_reading_word(t)));
    CHECK(word_type(reverse_reading_word(t)) == std::vector<Int>{3, 1});
    CHECK(t.outer().size() <= 3);
  }
  CHECK(lr_tableaux({2, 1}, {}, 3).size() == 1);

  // classical counts via the character product in sl_d
  for (int d : {3, 4}) {
    WeylGroup g(CartanMatrix::named("A" + std::to_string(d - 1)));
    for (const Partition& lam : partitions_in_box(2, 2))
      for (const Partition& mu : partitions_in_box(2, 2)) {
        FormalCharacter prod =
            irreducible_character(g, partition_to_weight(lam, d)) *
            irreducible_character(g, partition_to_weight(mu, d));
        Int total = 0;
        for (auto& [w, m] : decompose_character(g, prod).parts) total += m;
        CHECK(static_cast<Int>(lr_tableaux(lam, mu, d).size()) == total);
      }
  }
}

TEST_CASE("LR <-> SSYT bijection") {
  SSYT s = lr_to_ssyt(right_sample());
  CHECK(s == sample_ssyt());
  CHECK(lr_to_ssyt(SkewTableau{{2, 1}, {}}).rows.empty());

  for (int d : {3, 4}) {
    for (const Partition& lam : partitions_in_box(2, 2))
      for (const Partition& mu : partitions_in_box(2, 2)) {
        std::set<std::vector<std::vector<int>>> images;
        for (const SkewTableau& t : lr_tableaux(lam, mu, d)) {
          SSYT img = lr_to_ssyt(t);
          CHECK(img.shape() == mu);
          CHECK(img.max_entry() <= d);
          CHECK(p_dominant(column_word(img), lam));
          // weight identity nu(T) = lambda + weight(S)
          if (!mu.empty()) {
            IntVec wt = word_weight(reverse_reading_word(img), d);
            IntVec nu_wt = partition_to_weight(t.outer().size() < static_cast<std::size_t>(d)
                                                   ? t.outer()
                                                   : Partition{},
                                               d);
            if (t.outer().size() < static_cast<std::size_t>(d))
              CHECK(nu_wt ==
                    partition_to_weight(lam, d) + wt);
          }
          // round trip
          CHECK(ssyt_to_lr(img, lam) == t);
          images.insert(img.rows);
        }
        // bijection onto lambda-dominant SSYT of shape mu, entries <= d
        std::size_t expect = 0;
        for (const SSYT& s2 : enumerate_ssyt(mu, d))
          if (p_dominant(column_word(s2), lam)) ++expect;
        CHECK(images.size() == expect);
      }
  }
}

TEST_CASE("key permutation goldens") {
  CHECK(ssyt_key_permutation(SSYT{{{1, 3, 6, 8}, {2, 4}, {7}}}) ==
        Permutation{8, 3, 6, 1, 2, 4, 5, 7});
  CHECK(ssyt_key_permutation(sample_ssyt()) == Permutation{5, 1, 3, 2, 4});
  // single row: largest entry then ascending tail
  CHECK(ssyt_key_permutation(SSYT{{{1, 2, 5}}}) == Permutation{5, 1, 2, 3, 4});
}

TEST_CASE("depth sequences of the worked example") {
  SSYT s{{{1, 3, 6, 8}, {2, 4}, {7}}};
  CHECK(depth_sequence(s, 2) == std::vector<int>{3, 4});
  CHECK(depth_sequence(s, 3) == std::vector<int>{3, 6, 7});
}

TEST_CASE("last-column deletion leaves the selection step unchanged") {
  std::vector<SSYT> samples = {
      sample_ssyt(),
      SSYT{{{1, 3, 6, 8}, {2, 4}, {7}}},
      SSYT{{{1, 1, 2, 4}, {2, 3, 5}, {4, 5}}},
  };
  for (const SSYT& s : samples) {
    int q = 0;  // boxes in the rightmost column
    std::size_t width = s.rows[0].size();
    for (auto& r : s.rows)
      if (r.size() == width) ++q;
    SSYT trimmed = s;
    for (auto& r : trimmed.rows)
      if (r.size() == width) r.pop_back();
    while (!trimmed.rows.empty() && trimmed.rows.back().empty())
      trimmed.rows.pop_back();
    Permutation key = ssyt_key_permutation(s);
    for (int p = q + 1; p <= static_cast<int>(s.rows.size()); ++p) {
      auto y = depth_sequence(s, p);
      auto y2 = depth_sequence(trimmed, p);
      // the chosen value agrees
      std::vector<int> a(key.begin(), key.begin() + (p - 1));
      std::sort(a.begin(), a.end());
      auto select = [&](const std::vector<int>& ys) {
        for (int k = p; k >= 1; --k) {
          if (ys[k - 1] == 0) continue;
          if (k == 1 || a[k - 2] < ys[k - 1]) return ys[k - 1];
        }
        return -1;
      };
      CHECK(select(y) == select(y2));
      CHECK(select(y) == key[p - 1]);
    }
  }
}

TEST_CASE("staircase tableaux S(r, x)") {
  SSYT s = ssyt_from_permutation(3, {4, 5, 3, 1, 2});
  CHECK(s == SSYT{{{1, 1, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5}, {5}}});
  // r = 1 recovers x itself
  Permutation x = {4, 5, 3, 1, 2};
  CHECK(ssyt_key_permutation(ssyt_from_permutation(1, x)) == x);
  // key of S(r, x) sorts the first r entries
  for (int r = 1; r <= 5; ++r)
    CHECK(ssyt_key_permutation(ssyt_from_permutation(r, x)) ==
          sort_prefix(x, r));
  // and floor |x|_s <= floor |x|_r <= x in Bruhat order
  for (int r = 1; r <= 5; ++r)
    for (int ss = r; ss <= 5; ++ss)
      CHECK(perm_bruhat_leq(sort_prefix(x, ss), sort_prefix(x, r)));
}

TEST_CASE("tableau Bruhat criterion matches the lifting recursion") {
  for (int n : {3, 4, 6}) {
    WeylGroup g(CartanMatrix::named("A" + std::to_string(n - 1)));
    std::vector<Permutation> perms;
    for (WIndex w = 0; w < g.size(); ++w)
      perms.push_back(weyl_to_permutation(g, w));
    for (WIndex u = 0; u < g.size(); ++u)
      for (WIndex v = 0; v < g.size(); ++v) {
        bool got = perm_bruhat_leq(perms[u], perms[v]);
        CHECK(got == g.bruhat_leq(u, v));
        // restricted variants: descent set of x, or complement of z's
        if (got) continue;
        // find a witness s in the descent set of x
        bool witness = false;
        const Permutation& a = perms[u];
        const Permutation& b = perms[v];
        for (int s = 1; s < n; ++s) {
          if (a[s - 1] <= a[s]) continue;  // s not a descent of x
          std::vector<int> pa(a.begin(), a.begin() + s);
          std::vector<int> pb(b.begin(), b.begin() + s);
          std::sort(pa.begin(), pa.end());
          std::sort(pb.begin(), pb.end());
          for (int i = 0; i < s; ++i)
            if (pa[i] > pb[i]) witness = true;
        }
        for (int s = 1; s < n; ++s) {
          if (s < n && b[s - 1] > b[s]) continue;  // s in descent set of z
          std::vector<int> pa(a.begin(), a.begin() + s);
          std::vector<int> pb(b.begin(), b.begin() + s);
          std::sort(pa.begin(), pa.end());
          std::sort(pb.begin(), pb.end());
          for (int i = 0; i < s; ++i)
            if (pa[i] > pb[i]) witness = true;
        }
        CHECK(witness);
      }
  }
}

TEST_CASE("embedding: permutations of different sizes") {
  CHECK(perm_bruhat_leq({2, 1}, {3, 1, 2}));
  CHECK(perm_bruhat_leq({1, 2, 3}, {2, 1}));
  CHECK_FALSE(perm_bruhat_leq({3, 1, 2}, {2, 1}));
}

TEST_CASE("S_n recipe golden value and oracle agreement") {
  // recipe, Deodhar and brute force all agree on 246351
  CHECK(sn_deodhar_recipe({2, 4, 6, 1, 3, 5}, 3, {1, 4, 5, 3, 6, 2}) ==
        Permutation{2, 4, 6, 3, 5, 1});

  for (int n : {3, 4, 5, 6}) {
    WeylGroup g(CartanMatrix::named("A" + std::to_string(n - 1)));
    for (int r = 1; r < n; ++r) {
      ParabolicSubset j(((1u << (n - 1)) - 1u) & ~(1u << (r - 1)));
      for (WIndex si = 0; si < g.size(); ++si) {
        Permutation sigma = weyl_to_permutation(g, si);
        bool sigma_min = true;
        for (int i = 1; i < n; ++i)
          if (i != r && sigma[i - 1] > sigma[i]) sigma_min = false;
        if (!sigma_min) continue;
        for (WIndex wi = 0; wi < g.size(); ++wi) {
          Permutation w = weyl_to_permutation(g, wi);
          bool w_ok = true;
          for (int i = 1; i < r; ++i)
            if (w[i - 1] > w[i]) w_ok = false;
          if (!w_ok) continue;
          auto deod = g.deodhar_min(si, j, wi);
          bool nonempty = true;
          {
            std::vector<int> wr(w.begin(), w.begin() + r);
            std::sort(wr.begin(), wr.end());
            for (int i = 0; i < r; ++i)
              if (wr[i] > sigma[i]) nonempty = false;
          }
          CHECK(nonempty == deod.has_value());
          if (!nonempty) {
            CHECK_THROWS_AS(sn_deodhar_recipe(sigma, r, w), invalid_input);
            continue;
          }
          CHECK(sn_deodhar_recipe(sigma, r, w) ==
                weyl_to_permutation(g, *deod));
        }
      }
    }
  }
  // minimal case: w = sigma gives sigma back
  CHECK(sn_deodhar_recipe({2, 4, 6, 1, 3, 5}, 3, {2, 4, 6, 1, 3, 5}) ==
        Permutation{2, 4, 6, 1, 3, 5});
  CHECK_THROWS_AS(sn_deodhar_recipe({2, 1, 3}, 2, {1, 2, 3}), invalid_input);
}

TEST_CASE("refined LR coefficients") {
  Partition lam = {2, 1}, mu = {3, 1};
  // w = identity: 1 exactly at nu = lambda + mu
  for (const Partition& nu : partitions_in_box(3, 6)) {
    Int c = refined_lr_coefficient(lam, mu, nu, {1, 2, 3}, 3);
    Partition sum = {5, 2};
    CHECK(c == (nu == sum ? 1 : 0));
  }
  // w = 231: nonzero exactly for four shapes
  std::map<Partition, Int> expect231 = {
      {{3, 1}, 1}, {{4}, 1}, {{4, 3}, 1}, {{5, 2}, 1}};
  auto reduce = [](Partition nu, int d) {
    Int floor = nu.size() == static_cast<std::size_t>(d) ? nu[d - 1] : 0;
    std::vector<Int> r;
    for (Int p : nu) r.push_back(p - floor);
    return normalize_partition(r);
  };
  for (const Partition& nu : partitions_in_box(3, 7)) {
    Int c = refined_lr_coefficient(lam, mu, nu, {2, 3, 1}, 3);
    Partition red = reduce(nu, 3);
    auto it = expect231.find(red);
    Int want = 0;
    if (it != expect231.end() && c > 0) want = it->second;
    if (c != 0) CHECK(c == want);
  }
  Int total231 = 0;
  for (const SkewTableau& t : lr_tableaux(lam, mu, 3))
    if (perm_bruhat_leq(ssyt_key_permutation(lr_to_ssyt(t)), {2, 3, 1}))
      ++total231;
  CHECK(total231 == 4);

  // w = w0 recovers the classical coefficients
  for (int d : {3, 4}) {
    Permutation w0;
    for (int i = d; i >= 1; --i) w0.push_back(i);
    WeylGroup g(CartanMatrix::named("A" + std::to_string(d - 1)));
    for (const Partition& l2 : partitions_in_box(2, 2))
      for (const Partition& m2 : partitions_in_box(2, 2)) {
        FormalCharacter prod =
            irreducible_character(g, partition_to_weight(l2, d)) *
            irreducible_character(g, partition_to_weight(m2, d));
        Decomposition dec = decompose_character(g, prod);
        for (auto& [wt, mult] : dec.parts) {
          // count tableaux with that reduced shape
          Int count = 0;
          for (const SkewTableau& t : lr_tableaux(l2, m2, d))
            if (partition_to_weight(reduce(t.outer(), d), d) == wt &&
                perm_bruhat_leq(ssyt_key_permutation(lr_to_ssyt(t)), w0))
              ++count;
          CHECK(count == mult);
        }
      }
  }
}

TEST_CASE("monotone refinement in w") {
  Partition lam = {2, 1}, mu = {3, 1};
  WeylGroup g(CartanMatrix::named("A2"));
  for (const Partition& nu : partitions_in_box(3, 7)) {
    for (WIndex a = 0; a < g.size(); ++a)
      for (WIndex b = 0; b < g.size(); ++b) {
        if (!g.bruhat_leq(a, b)) continue;
        CHECK(refined_lr_coefficient(lam, mu, nu, weyl_to_permutation(g, a),
                                     3) <=
              refined_lr_coefficient(lam, mu, nu, weyl_to_permutation(g, b),
                                     3));
      }
  }
}

TEST_CASE("tableau decomposition rule: the six reference lines") {
  Partition lam = {2, 1}, mu = {3, 1};
  using D = std::vector<std::pair<Partition, Int>>;
  auto decomp = [&](Permutation w) {
    return kk_decompose_tableaux(lam, mu, w, 3, TableauxMode::sl);
  };
  CHECK(decomp({1, 2, 3}) == D{{{5, 2}, 1}});
  CHECK(decomp({2, 1, 3}) == D{{{4, 3}, 1}, {{5, 2}, 1}});
  CHECK(decomp({1, 3, 2}) == D{{{4}, 1}, {{5, 2}, 1}});
  CHECK(decomp({2, 3, 1}) ==
        D{{{3, 1}, 1}, {{4}, 1}, {{4, 3}, 1}, {{5, 2}, 1}});
  CHECK(decomp({3, 1, 2}) ==
        D{{{2, 2}, 1}, {{3, 1}, 1}, {{4}, 1}, {{4, 3}, 1}, {{5, 2}, 1}});
  CHECK(decomp({3, 2, 1}) == D{{{1}, 1},
                               {{2, 2}, 1},
                               {{3, 1}, 2},
                               {{4}, 1},
                               {{4, 3}, 1},
                               {{5, 2}, 1}});

  // the seven key permutations, embedded into S_3
  std::multiset<Permutation> keys;
  for (const SkewTableau& t : lr_tableaux(lam, mu, 3))
    keys.insert(pad_permutation(ssyt_key_permutation(lr_to_ssyt(t)), 3));
  std::multiset<Permutation> expect = {{1, 2, 3}, {2, 1, 3}, {1, 3, 2},
                                       {2, 3, 1}, {3, 1, 2}, {3, 1, 2},
                                       {3, 2, 1}};
  CHECK(keys == expect);

  // gl mode keeps the raw shapes
  auto gl = kk_decompose_tableaux(lam, mu, {3, 2, 1}, 3, TableauxMode::gl);
  D expect_gl = {{{3, 2, 2}, 1}, {{3, 3, 1}, 1}, {{4, 2, 1}, 2},
                 {{4, 3}, 1},    {{5, 1, 1}, 1}, {{5, 2}, 1}};
  CHECK(gl == expect_gl);
}

TEST_CASE("tableau pipeline agrees with the path pipeline (sl_3)") {
  Partition lam = {2, 1}, mu = {3, 1};
  WeylGroup g(CartanMatrix::named("A2"));
  IntVec lw = partition_to_weight(lam, 3), mw = partition_to_weight(mu, 3);
  KKContext ctx(g, lw, mw);
  for (WIndex w = 0; w < g.size(); ++w) {
    Decomposition via_paths = ctx.kk_decompose(w);
    Decomposition via_tableaux;
    for (auto& [nu, m] :
         kk_decompose_tableaux(lam, mu, weyl_to_permutation(g, w), 3))
      via_tableaux.add(partition_to_weight(nu, 3), m);
    CHECK(via_paths == via_tableaux);
  }
}

TEST_CASE("truncations") {
  Permutation x = {4, 5, 3, 1, 2};
  CHECK(truncate_permutation(x, 5) == x);
  CHECK(truncate_permutation(x, 7) == x);
  CHECK(truncate_permutation(x, 2) == Permutation{4, 5, 1, 2, 3});

  // key-of-truncation = truncation-of-key over all SSYT of small shapes
  for (const Partition& mu : partitions_in_box(3, 3)) {
    if (mu.empty()) continue;
    for (const SSYT& s : enumerate_ssyt(mu, 5)) {
      Permutation key = ssyt_key_permutation(s);
      for (int r = 1; r <= static_cast<int>(mu.size()); ++r) {
        SSYT st = truncate_ssyt(s, r);
        Permutation a = ssyt_key_permutation(st);
        Permutation b = truncate_permutation(key, r);
        // compare as permutations of the larger ambient size
        std::size_t n = std::max(a.size(), b.size());
        CHECK(perm_bruhat_leq(a, b));
        CHECK(perm_bruhat_leq(b, a));
        (void)n;
      }
    }
  }
}

TEST_CASE("key equals the initial element of the minimal standard lift") {
  WeylGroup a4(CartanMatrix::named("A4"));
  for (const Partition& mu : partitions_in_box(4, 4)) {
    if (mu.empty() || mu.size() >= 5) continue;
    for (const SSYT& s : enumerate_ssyt(mu, 5)) {
      ConcatPath theta = ssyt_to_concat(a4, s, 5);
      CHECK(is_standard(theta));
      WIndex lift_head = concat_weyl(theta);
      Permutation key = ssyt_key_permutation(s);
      Permutation lift_perm = weyl_to_permutation(a4, lift_head);
      CHECK(perm_bruhat_leq(key, lift_perm));
      CHECK(perm_bruhat_leq(lift_perm, key));
      // weight(S) = endpoint of the concatenation
      CHECK(theta.endpoint() == word_weight(reverse_reading_word(s), 5));
      // column word lambda-dominance = path lambda-dominance
      for (const Partition& lam : partitions_in_box(2, 2)) {
        IntVec lw = partition_to_weight(lam, 5);
        CHECK(p_dominant(column_word(s), lam) ==
              is_lambda_dominant(theta.assembled(), lw));
      }
    }
  }
}

TEST_CASE("partition and weight conversions") {
  CHECK(partition_to_weight({3, 1}, 3) == parse_int_vec("2,1"));
  CHECK(weight_to_partition(parse_int_vec("2,1")) == Partition{3, 1});
  CHECK(partition_to_weight({}, 3) == parse_int_vec("0,0"));
  CHECK_THROWS_AS(partition_to_weight({1, 1, 1}, 3), invalid_input);
  CHECK(parse_permutation("246135") == Permutation{2, 4, 6, 1, 3, 5});
  CHECK(permutation_to_string({2, 4, 6, 1, 3, 5}) == "246135");
  CHECK_THROWS_AS(parse_permutation("221"), invalid_input);
}
