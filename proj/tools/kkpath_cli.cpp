// Command-line front end: batch computation and verification over the
// library.  Exit codes: 0 success, 2 invalid input, 3 internal invariant
// violation.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "kkpath/json_io.hpp"

using namespace kkpath;

namespace {

enum class Format { pretty, json, tsv };

struct GlobalOpts {
  std::string type;
  std::string cartan_file;
  Format format = Format::pretty;
  int threads = 1;
};

std::size_t orbit_cap() {
  if (const char* env = std::getenv("KKPATH_MAX_GROUP"))
    return static_cast<std::size_t>(std::stoull(env));
  return WeylGroup::kDefaultOrbitCap;
}

std::shared_ptr<WeylGroup> load_group(const GlobalOpts& g) {
  if (!g.cartan_file.empty()) {
    std::ifstream in(g.cartan_file);
    if (!in) throw invalid_input("cannot open " + g.cartan_file);
    json j;
    in >> j;
    return std::make_shared<WeylGroup>(cartan_from_json(j), orbit_cap());
  }
  if (g.type.empty())
    throw invalid_input("choose a root system with --type or --cartan");
  return std::make_shared<WeylGroup>(CartanMatrix::named(g.type), orbit_cap());
}

bool is_type_a(const CartanMatrix& c) {
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) {
      Int want = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      if (c.entry(i, j) != want) return false;
    }
  return true;
}

// Reduced words are comma-separated ("1,2,1"); plain digit strings are
// one-line permutations (type A only); "e" is the identity.
WIndex parse_element(const WeylGroup& g, const std::string& s) {
  if (s == "e" || s.empty()) return g.identity();
  if (s.find(',') != std::string::npos || s.size() == 1)
    return g.from_word(parse_word(s));
  if (is_type_a(g.cartan()) &&
      static_cast<int>(s.size()) == g.rank() + 1)
    return permutation_to_weyl(g, parse_permutation(s));
  throw invalid_input(
      "element '" + s +
      "' is neither a comma-separated reduced word nor a one-line "
      "permutation of the right size");
}

IntVec parse_weight_arg(const WeylGroup& g, const std::string& s,
                        bool as_partition) {
  if (as_partition) {
    if (!is_type_a(g.cartan()))
      throw invalid_input("--partitions needs a type A root system");
    std::vector<Int> parts;
    for (Int x : parse_int_vec(s)) parts.push_back(x);
    return partition_to_weight(normalize_partition(parts), g.rank() + 1);
  }
  IntVec w = parse_int_vec(s);
  if (w.size() != g.rank())
    throw invalid_input("weight has wrong rank");
  return w;
}

void print_decomposition(const WeylGroup& g, const Decomposition& d,
                         Format f) {
  switch (f) {
    case Format::json:
      std::cout << decomposition_to_json(d).dump() << "\n";
      break;
    case Format::tsv:
      for (auto& [w, m] : d.parts) {
        for (Eigen::Index i = 0; i < w.size(); ++i)
          std::cout << (i ? "," : "") << w(i);
        std::cout << "\t" << m << "\n";
      }
      break;
    case Format::pretty:
      for (auto& [w, m] : d.parts) {
        std::cout << "V(";
        for (Eigen::Index i = 0; i < w.size(); ++i)
          std::cout << (i ? "," : "") << w(i);
        std::cout << ")";
        if (m > 1) std::cout << " x " << m;
        std::cout << "\n";
      }
      break;
  }
  (void)g;
}

// Deterministic split of [0, n) into contiguous chunks, one per worker.
template <typename Fn>
void parallel_chunks(std::size_t n, int threads, Fn&& fn) {
  threads = std::max(1, threads);
  if (threads == 1 || n < 2) {
    fn(0, std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::size_t lo = std::min(n, t * chunk), hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
  }
  for (auto& th : pool) th.join();
}

int cmd_decompose(const GlobalOpts& opts, const std::string& lambda,
                  const std::string& w, const std::string& mu,
                  bool partitions) {
  auto g = load_group(opts);
  KKContext ctx(*g, parse_weight_arg(*g, lambda, partitions),
                parse_weight_arg(*g, mu, partitions));
  print_decomposition(*g, ctx.kk_decompose(parse_element(*g, w)),
                      opts.format);
  return 0;
}

int cmd_character(const GlobalOpts& opts, const std::string& lambda,
                  const std::string& w, const std::string& mu,
                  bool partitions) {
  auto g = load_group(opts);
  KKContext ctx(*g, parse_weight_arg(*g, lambda, partitions),
                parse_weight_arg(*g, mu, partitions));
  WIndex wi = parse_element(*g, w);

  const Crystal& cl = ctx.crystal_lambda();
  const Crystal& cm = ctx.crystal_mu();
  std::vector<FormalCharacter> partial(std::max(1, opts.threads),
                                       FormalCharacter(g->rank()));
  parallel_chunks(cl.size(), opts.threads,
                  [&](int t, std::size_t lo, std::size_t hi) {
                    for (std::size_t a = lo; a < hi; ++a) {
                      WIndex fin = cl.path(a).final_direction();
                      for (std::size_t b = 0; b < cm.size(); ++b) {
                        WIndex v = ctx.kk_weyl_dirs(
                            fin, cm.path(b).initial_direction());
                        if (g->bruhat_leq(v, wi))
                          partial[t].add(cl.endpoint(a) + cm.endpoint(b), 1);
                      }
                    }
                  });
  FormalCharacter ch(g->rank());
  for (auto& p : partial) ch += p;

  switch (opts.format) {
    case Format::json:
      std::cout << character_to_json(ch).dump() << "\n";
      break;
    default:
      for (auto& [wt, c] : ch.terms()) {
        for (Eigen::Index i = 0; i < wt.size(); ++i)
          std::cout << (i ? "," : "") << wt(i);
        std::cout << "\t" << c << "\n";
      }
      break;
  }
  return 0;
}

int cmd_kk_set(const GlobalOpts& opts, const std::string& lambda,
               const std::string& w, const std::string& mu, bool partitions) {
  auto g = load_group(opts);
  KKContext ctx(*g, parse_weight_arg(*g, lambda, partitions),
                parse_weight_arg(*g, mu, partitions));
  WIndex wi = parse_element(*g, w);
  auto pairs = ctx.kk_path_set(wi);
  if (opts.format == Format::json) {
    json out = json::array();
    for (auto [a, b] : pairs)
      out.push_back(
          json{{"first", path_to_json(ctx.crystal_lambda().path(a).path())},
               {"second", path_to_json(ctx.crystal_mu().path(b).path())}});
    std::cout << out.dump() << "\n";
  } else {
    std::cout << pairs.size() << " concatenations\n";
    for (auto [a, b] : pairs)
      std::cout << path_to_json(ctx.crystal_lambda().path(a).path()).dump()
                << " * "
                << path_to_json(ctx.crystal_mu().path(b).path()).dump()
                << "\n";
  }
  return 0;
}

int cmd_refined_lr(const GlobalOpts& opts, int d, const std::string& lambda,
                   const std::string& mu, const std::string& w,
                   const std::string& nu, bool gl) {
  auto to_partition = [](const std::string& s) {
    std::vector<Int> parts;
    if (!s.empty())
      for (Int x : parse_int_vec(s)) parts.push_back(x);
    return normalize_partition(parts);
  };
  Partition lp = to_partition(lambda), mp = to_partition(mu);
  Permutation wp = parse_permutation(w);
  if (static_cast<int>(wp.size()) != d)
    throw invalid_input("w must be a permutation of [d]");
  if (!nu.empty()) {
    Int c = refined_lr_coefficient(lp, mp, to_partition(nu), wp, d);
    std::cout << c << "\n";
    return 0;
  }
  auto dec = kk_decompose_tableaux(lp, mp, wp, d,
                                   gl ? TableauxMode::gl : TableauxMode::sl);
  if (opts.format == Format::json) {
    json out = json::array();
    for (auto& [part, m] : dec)
      out.push_back(json{{"partition", part}, {"mult", m}});
    std::cout << out.dump() << "\n";
  } else {
    for (auto& [part, m] : dec) {
      std::cout << "V(";
      for (std::size_t i = 0; i < part.size(); ++i)
        std::cout << (i ? "+" : "") << part[i];
      std::cout << ")";
      if (m > 1) std::cout << " x " << m;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_key(const GlobalOpts& opts, const std::string& ssyt_text) {
  SSYT s = ssyt_from_json(json::parse(ssyt_text));
  Permutation key = ssyt_key_permutation(s);
  if (opts.format == Format::json)
    std::cout << json(key).dump() << "\n";
  else
    std::cout << permutation_to_string(key) << "\n";
  return 0;
}

int cmd_deodhar_min(const GlobalOpts& opts, int n, int r,
                    const std::string& sigma, const std::string& w) {
  Permutation sp = parse_permutation(sigma), wp = parse_permutation(w);
  if (static_cast<int>(sp.size()) != n || static_cast<int>(wp.size()) != n)
    throw invalid_input("sigma and w must be permutations of [n]");
  Permutation tau = sn_deodhar_recipe(sp, r, wp);
  if (opts.format == Format::json)
    std::cout << json(tau).dump() << "\n";
  else
    std::cout << permutation_to_string(tau) << "\n";
  return 0;
}

// --- verification suites -------------------------------------------------

std::vector<std::string> types_up_to_rank(int max_rank) {
  std::vector<std::string> out;
  if (max_rank >= 1) out.push_back("A1");
  if (max_rank >= 2) {
    out.push_back("A2");
    out.push_back("B2");
    out.push_back("G2");
  }
  if (max_rank >= 3) {
    out.push_back("A3");
    out.push_back("B3");
    out.push_back("C3");
  }
  if (max_rank >= 4) out.push_back("A4");
  if (max_rank >= 5) out.push_back("A5");
  return out;
}

std::vector<IntVec> dominant_box(int rank, Int max_coord) {
  std::vector<IntVec> out;
  std::vector<Int> cur(rank, 0);
  for (;;) {
    IntVec v(rank);
    for (int i = 0; i < rank; ++i) v(i) = cur[i];
    out.push_back(v);
    int i = 0;
    while (i < rank && cur[i] == max_coord) cur[i++] = 0;
    if (i == rank) break;
    ++cur[i];
  }
  return out;
}

bool subword_leq(const WeylGroup& g, WIndex u, WIndex v) {
  std::vector<int> word = g.word(v);
  std::set<WIndex> reach{g.identity()};
  for (int s : word) {
    std::set<WIndex> next = reach;
    for (WIndex x : reach) {
      WIndex xs = g.rmul(x, s);
      if (g.length(xs) > g.length(x)) next.insert(xs);
    }
    reach = std::move(next);
  }
  return reach.count(u) > 0;
}

int verify_coxeter(const WeylGroup& g) {
  int fails = 0;
  for (WIndex u = 0; u < g.size(); ++u)
    for (WIndex v = 0; v < g.size(); ++v)
      if (g.bruhat_leq(u, v) != subword_leq(g, u, v)) ++fails;
  for (WIndex a = 0; a < g.size(); ++a)
    for (WIndex b = 0; b < g.size(); ++b)
      for (WIndex c = 0; c < g.size(); ++c)
        if (g.star(g.star(a, b), c) != g.star(a, g.star(b, c))) ++fails;
  // Deodhar minimum against scanning the coset
  for (std::uint32_t jm = 0; jm < (1u << g.rank()); ++jm) {
    ParabolicSubset j(jm);
    for (WIndex sigma = 0; sigma < g.size(); ++sigma) {
      if (g.coset_min_left_quotient(sigma, j) != sigma) continue;
      std::vector<WIndex> coset;
      for (WIndex u : g.parabolic_elements(j)) coset.push_back(g.mul(sigma, u));
      for (WIndex w = 0; w < g.size(); ++w) {
        std::optional<WIndex> best;
        bool unique = true;
        for (WIndex v : coset) {
          if (!g.bruhat_leq(w, v)) continue;
          if (!best || g.bruhat_leq(v, *best))
            best = v;
        }
        if (best)
          for (WIndex v : coset)
            if (g.bruhat_leq(w, v) && !g.bruhat_leq(*best, v)) unique = false;
        auto got = g.deodhar_min(sigma, j, w);
        if (got != best || !unique) ++fails;
      }
    }
  }
  return fails;
}

int verify_paths(const WeylGroup& g, Int max_coord) {
  int fails = 0;
  for (const IntVec& lam : dominant_box(g.rank(), max_coord)) {
    Crystal c(g, lam);
    if (c.size() != static_cast<std::size_t>(g.dimension(lam))) ++fails;
    for (std::size_t k = 0; k < c.size(); ++k)
      for (int i = 0; i < g.rank(); ++i) {
        int down = c.f_next(k, i);
        if (down >= 0 && c.e_next(down, i) != static_cast<int>(k)) ++fails;
      }
  }
  return fails;
}

int verify_kk(const WeylGroup& g, Int max_coord) {
  int fails = 0;
  std::map<std::vector<Int>, FormalCharacter> cache;
  auto irr = [&](const IntVec& hw) -> const FormalCharacter& {
    std::vector<Int> key(hw.data(), hw.data() + hw.size());
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, irreducible_character(g, hw)).first;
    return it->second;
  };
  for (const IntVec& lam : dominant_box(g.rank(), max_coord))
    for (const IntVec& mu : dominant_box(g.rank(), max_coord)) {
      KKContext ctx(g, lam, mu);
      for (WIndex w = 0; w < g.size(); ++w) {
        FormalCharacter via_paths = ctx.kk_character_paths(w);
        if (!(via_paths == ctx.kk_character_demazure(w))) ++fails;
        FormalCharacter via_sum(g.rank());
        for (std::size_t b : ctx.lambda_dominant_paths(w))
          via_sum += irr(lam + ctx.crystal_mu().endpoint(b));
        if (!(via_paths == via_sum)) ++fails;
      }
    }
  return fails;
}

int cmd_verify(const GlobalOpts&, const std::string& suite, int max_rank,
               Int max_coord) {
  int fails = 0;
  for (const std::string& t : types_up_to_rank(max_rank)) {
    WeylGroup g(CartanMatrix::named(t), orbit_cap());
    if (suite == "all" || suite == "coxeter") {
      int f = verify_coxeter(g);
      std::cout << t << " coxeter: " << (f ? "FAIL" : "ok") << "\n";
      fails += f;
    }
    if (suite == "all" || suite == "paths") {
      int f = verify_paths(g, max_coord);
      std::cout << t << " paths: " << (f ? "FAIL" : "ok") << "\n";
      fails += f;
    }
    if ((suite == "all" || suite == "kk") && g.rank() <= 2) {
      int f = verify_kk(g, max_coord);
      std::cout << t << " kk: " << (f ? "FAIL" : "ok") << "\n";
      fails += f;
    }
  }
  std::cout << (fails ? "verification FAILED" : "verification passed")
            << "\n";
  return fails ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kostant-Kumar modules via Littelmann paths"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand

  GlobalOpts opts;
  app.add_option("--type", opts.type,
                 "named root system (A1..A5, B2, B3, C3, G2)");
  app.add_option("--cartan", opts.cartan_file,
                 "JSON file with a Cartan matrix (array of arrays)");
  std::map<std::string, Format> fmt_map{{"pretty", Format::pretty},
                                        {"json", Format::json},
                                        {"tsv", Format::tsv}};
  app.add_option("--format", opts.format, "output format")
      ->transform(CLI::CheckedTransformer(fmt_map, CLI::ignore_case));
  app.add_option("--threads", opts.threads, "worker threads for bulk scans")
      ->check(CLI::Range(1, 64));

  std::string lambda, mu, w, nu, ssyt_text, sigma;
  bool partitions = false, gl = false;
  int d = 0, n = 0, r = 0;

  auto* dec = app.add_subcommand("decompose", "KK module decomposition");
  dec->add_option("--lambda", lambda)->required();
  dec->add_option("--w", w)->required();
  dec->add_option("--mu", mu)->required();
  dec->add_flag("--partitions", partitions,
                "read lambda/mu as partitions (type A)");

  auto* chr = app.add_subcommand("character", "KK module character");
  chr->add_option("--lambda", lambda)->required();
  chr->add_option("--w", w)->required();
  chr->add_option("--mu", mu)->required();
  chr->add_flag("--partitions", partitions);

  auto* kks = app.add_subcommand("kk-set", "KK set of concatenated LS paths");
  kks->add_option("--lambda", lambda)->required();
  kks->add_option("--w", w)->required();
  kks->add_option("--mu", mu)->required();
  kks->add_flag("--partitions", partitions);

  auto* rlr = app.add_subcommand("refined-lr",
                                 "refined Littlewood-Richardson data");
  rlr->add_option("--d", d)->required()->check(CLI::Range(2, 9));
  rlr->add_option("--lambda", lambda)->required();
  rlr->add_option("--mu", mu)->required();
  rlr->add_option("--w", w)->required();
  rlr->add_option("--nu", nu, "report a single coefficient");
  rlr->add_flag("--gl", gl, "polynomial GL_d convention");

  auto* key = app.add_subcommand("key", "key permutation of an SSYT");
  key->add_option("--ssyt", ssyt_text, "JSON rows, e.g. [[1,3],[2]]")
      ->required();

  auto* dm = app.add_subcommand("deodhar-min",
                                "minimum of {v in sigma W_r : v >= w}");
  dm->add_option("--n", n)->required()->check(CLI::Range(2, 20));
  dm->add_option("--r", r)->required();
  dm->add_option("--sigma", sigma)->required();
  dm->add_option("--w", w)->required();

  std::string suite = "all";
  int max_rank = 3;
  Int max_coord = 2;
  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  ver->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "coxeter", "paths", "kk"}));
  ver->add_option("--max-rank", max_rank)->check(CLI::Range(1, 5));
  ver->add_option("--max-coord", max_coord)->check(CLI::Range(0, 4));

  CLI11_PARSE(app, argc, argv);

  try {
    if (dec->parsed()) return cmd_decompose(opts, lambda, w, mu, partitions);
    if (chr->parsed()) return cmd_character(opts, lambda, w, mu, partitions);
    if (kks->parsed()) return cmd_kk_set(opts, lambda, w, mu, partitions);
    if (rlr->parsed()) return cmd_refined_lr(opts, d, lambda, mu, w, nu, gl);
    if (key->parsed()) return cmd_key(opts, ssyt_text);
    if (dm->parsed()) return cmd_deodhar_min(opts, n, r, sigma, w);
    if (ver->parsed()) return cmd_verify(opts, suite, max_rank, max_coord);
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_violation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
