#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "fgdyn/autofile.hpp"
#include "fgdyn/errors.hpp"
#include "fgdyn/families.hpp"
#include "fgdyn/graph.hpp"
#include "fgdyn/repro.hpp"
#include "fgdyn/report.hpp"

namespace fgdyn {

namespace {

struct ConfigFlags {
  std::optional<int> max_iter;
  std::optional<std::size_t> prefix;
  std::optional<int> window;
  std::optional<std::size_t> max_len;
};

// Defaults, then the file named by FGDYN_CONFIG, then flags.
IterationConfig load_config(const ConfigFlags& flags) {
  IterationConfig cfg;
  if (const char* path = std::getenv("FGDYN_CONFIG"); path && *path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(std::string("cannot read FGDYN_CONFIG file ") + path);
    const auto j = nlohmann::json::parse(in);
    cfg.max_iterations = j.value("max_iterations", cfg.max_iterations);
    cfg.target_prefix = j.value("target_prefix", cfg.target_prefix);
    cfg.stability_window = j.value("stability_window", cfg.stability_window);
    cfg.max_word_length = j.value("max_word_length", cfg.max_word_length);
    cfg.min_repeats = j.value("min_repeats", cfg.min_repeats);
    cfg.period_bound = j.value("period_bound", cfg.period_bound);
  }
  if (flags.max_iter) cfg.max_iterations = *flags.max_iter;
  if (flags.prefix) cfg.target_prefix = *flags.prefix;
  if (flags.window) cfg.stability_window = *flags.window;
  if (flags.max_len) cfg.max_word_length = *flags.max_len;
  cfg.validate();
  return cfg;
}

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("--max-iter", flags.max_iter, "Iteration budget (default 300)");
  cmd->add_option("--prefix", flags.prefix, "Target certified prefix length (default 200)");
  cmd->add_option("--window", flags.window, "Prefix stability window (default 5)");
  cmd->add_option("--max-len", flags.max_len, "Word length budget (default 1000000)");
}

std::vector<Word> parse_seed_list(const std::string& text, const Alphabet& alpha) {
  std::vector<Word> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_word(item, alpha));
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

// Product of random Nielsen moves x_i -> x_i x_j^(+-1) or x_j^(+-1) x_i.
AutoPair random_automorphism(int rank, int moves, std::mt19937_64& rng) {
  const Alphabet alpha = Alphabet::standard(rank);
  AutoPair phi = AutoPair::identity(alpha);
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int m = 0; m < moves; ++m) {
    const int i = gen(rng);
    int j = gen(rng);
    while (j == i) j = gen(rng);
    const Word xi = Word::letter(Letter{i});
    const Word xj = Word::letter(Letter{coin(rng) ? j : -j});
    const bool right = coin(rng);
    std::vector<Word> f;
    std::vector<Word> b;
    for (int g = 1; g <= rank; ++g) {
      const Word x = Word::letter(Letter{g});
      if (g != i) {
        f.push_back(x);
        b.push_back(x);
      } else {
        f.push_back(right ? concat(xi, xj) : concat(xj, xi));
        b.push_back(right ? concat(xi, invert(xj)) : concat(invert(xj), xi));
      }
    }
    phi = compose(verify_pair(Endomorphism(alpha, f), Endomorphism(alpha, b)), phi);
  }
  return phi;
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Parabolic:
      return kSuccess;
    case Verdict::NotParabolic:
      return kNegative;
    case Verdict::Inconclusive:
      return kInconclusive;
  }
  return kInconclusive;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic dynamics of free group automorphisms on words and boundary points", "fgdyn"};
  app.require_subcommand(1);
  ConfigFlags flags;
  std::string source, word_text, seeds_text, dot_path, json_path, id, golden_dir = FGDYN_GOLDEN_DIR;
  long p = 1, n = 1, k = 0;
  int bound = 8, power_p = 1, p_max = 40, samples = 20, moves = 6, rank = 3;
  std::uint64_t rng_seed = 1;
  bool backward = false, compact = false, update = false;

  auto* iterate_cmd = app.add_subcommand("iterate", "Print [phi^p(g)]");
  iterate_cmd->add_option("automorphism", source, "AutoFile path or family descriptor (e.g. phi_k:k=1)")->required();
  iterate_cmd->add_option("word", word_text, "Word, e.g. \"b d^-1\"")->required();
  iterate_cmd->add_option("p", p, "Exponent (negative uses the inverse)")->required();
  iterate_cmd->add_option("--max-len", flags.max_len, "Word length budget (default 1000000)");
  iterate_cmd->add_flag("--compact", compact, "Collapse runs into powers");

  auto* omega_cmd = app.add_subcommand("omega", "omega-limit of a word, as JSON");
  omega_cmd->add_option("automorphism", source)->required();
  omega_cmd->add_option("word", word_text)->required();
  omega_cmd->add_flag("--backward", backward, "Use the inverse automorphism");
  add_config_flags(omega_cmd, flags);

  auto* parabolic_cmd = app.add_subcommand("parabolic", "Parabolic orbit test; exit 0 iff parabolic");
  parabolic_cmd->add_option("automorphism", source)->required();
  parabolic_cmd->add_option("seed", word_text)->required();
  add_config_flags(parabolic_cmd, flags);

  auto* graph_cmd = app.add_subcommand("graph", "Dynamics graph: DOT on stdout, or JSON when --dot is given");
  graph_cmd->add_option("automorphism", source)->required();
  graph_cmd->add_option("--seeds", seeds_text, "Extra seeds, ';'-separated");
  graph_cmd->add_option("--dot", dot_path, "Write DOT here");
  graph_cmd->add_option("--json", json_path, "Write JSON here");
  graph_cmd->add_option("--bound", bound, "Isoglossy search bound (default 8)");
  add_config_flags(graph_cmd, flags);

  auto* abel_cmd = app.add_subcommand("abelianize", "Abelianization matrix as JSON");
  abel_cmd->add_option("automorphism", source)->required();
  abel_cmd->add_option("--power", power_p, "Matrix power (default 1)");

  auto* growth_cmd = app.add_subcommand("growth", "Growth class of |phi^p(g)|");
  growth_cmd->add_option("automorphism", source)->required();
  growth_cmd->add_option("word", word_text)->required();
  growth_cmd->add_option("--pmax", p_max, "Number of iterates (default 40)");
  growth_cmd->add_option("--max-len", flags.max_len);

  auto* period_cmd = app.add_subcommand("period", "Boundary-period probe (rotationlessness heuristic)");
  period_cmd->add_option("automorphism", source)->required();
  period_cmd->add_option("seed", word_text)->required();
  period_cmd->add_option("--bound", bound, "Largest period tried (default 8)");
  add_config_flags(period_cmd, flags);

  auto* classify_cmd = app.add_subcommand("twist-classify", "Dynamics type of i_{a^k} o delta^n");
  classify_cmd->add_option("n", n)->required();
  classify_cmd->add_option("k", k)->required();

  auto* reduce_cmd = app.add_subcommand("twist-reduce", "Find w, k with u delta^n(w) = w a^k");
  reduce_cmd->add_option("u", word_text)->required();
  reduce_cmd->add_option("n", n)->required();
  reduce_cmd->add_option("--bound", bound, "Largest |w| searched (default 8)");

  auto* repro_cmd = app.add_subcommand("repro", "Rerun a canned reproduction and diff it against its golden file");
  repro_cmd->add_option("id", id, "sec2, omega, matrix, fig1 ... fig5, or all")->required();
  repro_cmd->add_option("--golden-dir", golden_dir);
  repro_cmd->add_flag("--update", update, "Rewrite golden files");

  auto* explore_cmd = app.add_subcommand("explore", "Search random automorphisms for parabolic orbits");
  explore_cmd->add_option("--rank", rank, "Rank (default 3)");
  explore_cmd->add_option("--samples", samples, "Automorphisms tried (default 20)");
  explore_cmd->add_option("--moves", moves, "Nielsen moves per automorphism (default 6)");
  explore_cmd->add_option("--seed", rng_seed, "RNG seed (default 1)");
  add_config_flags(explore_cmd, flags);

  app.add_subcommand("families", "List catalog families");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (iterate_cmd->parsed()) {
      const AutoFile f = load_automorphism(source);
      const Word g = parse_word(word_text, f.pair.alphabet());
      const Word r = iterate(f.pair, g, p, flags.max_len.value_or(IterationConfig{}.max_word_length));
      out << (compact ? format_word_compact(r, f.pair.alphabet()) : format_word(r, f.pair.alphabet())) << '\n';
      return kSuccess;
    }
    if (omega_cmd->parsed()) {
      const AutoFile f = load_automorphism(source);
      const Word g = parse_word(word_text, f.pair.alphabet());
      const auto r = omega_limit(backward ? f.pair.inverse() : f.pair, g, load_config(flags));
      out << dump(to_json(r, f.pair.alphabet()));
      return r.converged() ? kSuccess : kInconclusive;
    }
    if (parabolic_cmd->parsed()) {
      const AutoFile f = load_automorphism(source);
      const auto r = detect_parabolic(f.pair, parse_word(word_text, f.pair.alphabet()), load_config(flags));
      out << dump(to_json(r, f.pair.alphabet()));
      return verdict_code(r.verdict);
    }
    if (graph_cmd->parsed()) {
      const AutoFile f = load_automorphism(source);
      std::vector<Word> seeds = default_seeds(f.pair.rank());
      for (const Word& s : f.seeds)
        if (std::find(seeds.begin(), seeds.end(), s) == seeds.end()) seeds.push_back(s);
      for (const Word& s : parse_seed_list(seeds_text, f.pair.alphabet()))
        if (std::find(seeds.begin(), seeds.end(), s) == seeds.end()) seeds.push_back(s);
      const auto g = build_graph(f.pair, f.fixed, seeds, load_config(flags), static_cast<std::size_t>(bound));
      const std::string dot = emit_dot(g);
      const std::string json = dump(to_json(g));
      if (!json_path.empty()) write_file(json_path, json);
      if (dot_path.empty()) {
        out << dot;
      } else {
        write_file(dot_path, dot);
        out << json;
      }
      return kSuccess;
    }
    if (abel_cmd->parsed()) {
      const AutoFile f = load_automorphism(source);
      if (power_p < 0) throw std::invalid_argument("--power must be >= 0");
      const Json j{{"power", power_p},
                   {"matrix", to_json(matrix_power(abelianize(f.pair.forward()), static_cast<unsigned long>(power_p)))}};
      out << j.dump() << '\n';
      return kSuccess;
    }
    if (growth_cmd->parsed()) {
      const AutoFile f = load_automorphism(source);
      const auto gc = growth_classify(f.pair, parse_word(word_text, f.pair.alphabet()), p_max,
                                      flags.max_len.value_or(IterationConfig{}.max_word_length));
      out << dump(to_json(gc));
      return kSuccess;
    }
    if (period_cmd->parsed()) {
      const AutoFile f = load_automorphism(source);
      const auto q = detect_boundary_period(f.pair, parse_word(word_text, f.pair.alphabet()), bound,
                                            load_config(flags));
      Json j;
      j["bound"] = bound;
      j["period"] = q ? Json(*q) : Json(nullptr);
      j["note"] = q ? "boundary-periodic point found: not rotationless"
                    : "no period in (1, bound] detected from this seed";
      out << dump(j);
      return q ? kNegative : kSuccess;
    }
    if (classify_cmd->parsed()) {
      out << to_string(classify_twist(n, k)) << '\n';
      return kSuccess;
    }
    if (reduce_cmd->parsed()) {
      const Alphabet alpha = Alphabet::standard(2);
      const auto r = twist_reduce(parse_word(word_text, alpha), n, static_cast<std::size_t>(bound));
      if (!r) {
        out << "unresolved: no witness with |w| <= " << bound << '\n';
        return kInconclusive;
      }
      out << "w = " << (r->first.empty() ? "1" : format_word(r->first, alpha)) << ", k = " << r->second << '\n';
      return kSuccess;
    }
    if (repro_cmd->parsed()) {
      std::vector<std::string> ids = id == "all" ? repro_ids() : std::vector<std::string>{id};
      bool all_ok = true;
      for (const auto& one : ids) {
        const auto check = repro_check(one, golden_dir, update);
        out << check.actual;
        out << "== " << one << ": " << (update ? "golden updated" : check.matches ? "matches golden" : "DIFFERS")
            << '\n';
        if (!check.matches) err << one << ": " << check.difference << '\n';
        all_ok = all_ok && check.matches;
      }
      return all_ok ? kSuccess : kNegative;
    }
    if (explore_cmd->parsed()) {
      const IterationConfig cfg = load_config(flags);
      std::mt19937_64 rng(rng_seed);
      int hits = 0;
      for (int s = 0; s < samples; ++s) {
        const AutoPair phi = random_automorphism(rank, moves, rng);
        for (const Word& seed : default_seeds(rank)) {
          const auto r = detect_parabolic(phi, seed, cfg);
          if (r.verdict != Verdict::Parabolic) continue;
          ++hits;
          out << "sample " << s << " seed " << format_word(seed, phi.alphabet()) << ": parabolic\n";
          for (int g = 1; g <= rank; ++g)
            out << "  map " << phi.alphabet().name(g) << " -> " << format_word(phi.forward().image(g), phi.alphabet())
                << '\n';
        }
      }
      out << hits << " parabolic seeds among " << samples << " samples\n";
      return hits ? kSuccess : kNegative;
    }
    for (const char* line : {"phi_k:k=K        F_4, a b c d -> a, ba, ca^(K+1), dc",
                             "alpha_k:k=K      phi_k extended by e -> e",
                             "beta:N=N,theta=I phi_1 * stock theta I * id, N >= 6",
                             "delta_n:n=N      F_2, b -> b a^N",
                             "twist:n=N,k=K    F_2, b -> a^K b a^(N-K)",
                             "sigma            F_2, a -> a^-1, b -> b^-1",
                             "inner:u=W,N=R    conjugation by W on F_R",
                             "theta:i=I        stock hyperbolic automorphism of F_2 (I = 1, 2)",
                             "identity:N=R     identity of F_R"})
      out << line << '\n';
    return kSuccess;
  } catch (const GrowthOverflow& e) {
    err << "error: " << e.what() << " (iteration " << e.iteration() << ", length " << e.length() << ")\n";
    return kInconclusive;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad config file: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace fgdyn
