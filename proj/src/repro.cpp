#include "fgdyn/repro.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fgdyn/families.hpp"
#include "fgdyn/graph.hpp"

namespace fgdyn {

namespace {

std::string limit_text(const LimitResult& r, const Alphabet& alpha) {
  if (r.is_fixed()) return "fixed element " + format_word_compact(r.fixed().element, alpha);
  if (r.is_boundary()) return point_name(r.boundary().point, alpha);
  return "not converged (" + r.not_converged().diagnostics + ")";
}

std::string sec2() {
  const AutoPair phi = make_phi_k(1);
  const Alphabet& alpha = phi.alphabet();
  const Word seed = parse_word("b d^-1", alpha);
  std::ostringstream os;
  os << "phi_1 iterates of b d^-1\n";
  for (long p : {1L, 2L, 3L, 4L, -1L, -2L, -3L})
    os << "p=" << p << ": " << format_word_compact(iterate(phi, seed, p), alpha) << '\n';
  return os.str();
}

std::string omega_table() {
  std::ostringstream os;
  for (long k : {1L, 2L}) {
    const AutoPair phi = make_phi_k(k);
    const AutoPair inv = phi.inverse();
    const Alphabet& alpha = phi.alphabet();
    os << "k=" << k << '\n';
    for (const char* s : {"b^-1", "c^-1", "d^-1", "c", "b", "b c^-1"})
      os << "  w(" << s << ") = " << limit_text(omega_limit(phi, parse_word(s, alpha)), alpha) << '\n';
    for (const char* s : {"b^-1", "c^-1", "c", "d^-1", "b", "b c^-1"})
      os << "  w-(" << s << ") = " << limit_text(omega_limit(inv, parse_word(s, alpha)), alpha) << '\n';
    for (bool attracting : {true, false}) {
      const auto r = omega_limit(attracting ? phi : inv, parse_word("d", alpha));
      const Word expected = x_k_prefix(k, attracting, 50);
      const bool ok = r.is_boundary() && r.boundary().point.certified_length() >= 50 &&
                      r.boundary().point.prefix(50) == expected;
      os << "  " << (attracting ? "w(d) = X+" : "w-(d) = X-") << ": "
         << format_word_compact(expected.prefix(20), alpha) << " ... 50-letter closed form "
         << (ok ? "matches" : "DIFFERS") << '\n';
    }
  }
  return os.str();
}

std::string matrix_table() {
  std::ostringstream os;
  for (long k : {1L, 2L}) {
    const IntMatrix m = abelianize(make_phi_k(k).forward());
    for (long p : {1L, 2L, 5L}) {
      os << "Ab(phi_" << k << ")^" << p << " =\n" << to_string(matrix_power(m, p));
      os << "closed form " << (matrix_power(m, p) == phi_k_matrix_power(k, p) ? "matches" : "DIFFERS") << '\n';
    }
  }
  return os.str();
}

std::string figure(const std::vector<std::string>& specs) {
  std::ostringstream os;
  for (const auto& spec : specs) {
    const Family f = make_family(spec);
    const DynamicsGraph g = build_graph(f.pair, f.fixed_generators, f.seeds);
    const GraphTemplate t = expected_graph(f);
    const TemplateMatch m = match_template(g, t, build_core_graph(f.fixed_generators));
    os << "# " << spec << ": " << g.vertices.size() << " vertices, " << g.edges.size() << " edges, "
       << g.weakly_connected_components() << " components, " << g.loop_count() << " loops\n";
    os << emit_dot(g);
    os << "template " << t.title << ": " << (m.matches ? "match" : "MISMATCH") << '\n';
    for (const auto& p : m.problems) os << "  " << p << '\n';
  }
  return os.str();
}

}  // namespace

const std::vector<std::string>& repro_ids() {
  static const std::vector<std::string> ids{"sec2", "omega", "matrix", "fig1", "fig2", "fig3", "fig4", "fig5"};
  return ids;
}

std::string repro_output(std::string_view id) {
  if (id == "sec2") return sec2();
  if (id == "omega") return omega_table();
  if (id == "matrix") return matrix_table();
  if (id == "fig1") return figure({"inner:u=a", "inner:u=a b"});
  if (id == "fig2") return figure({"phi_k:k=1", "phi_k:k=2"});
  if (id == "fig3") return figure({"delta_n:n=3", "twist:n=3,k=3"});
  if (id == "fig4") return figure({"twist:n=2,k=5", "twist:n=2,k=-1"});
  if (id == "fig5") return figure({"twist:n=3,k=1"});
  throw std::invalid_argument("unknown repro id '" + std::string(id) + "'");
}

ReproCheck repro_check(std::string_view id, const std::string& golden_dir, bool update) {
  ReproCheck check;
  check.actual = repro_output(id);
  const auto path = std::filesystem::path(golden_dir) / (std::string(id) + ".txt");
  if (update) {
    std::ofstream(path, std::ios::binary) << check.actual;
    check.matches = true;
    return check;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    check.golden_missing = true;
    check.difference = "missing golden file " + path.string();
    return check;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string expected = buf.str();
  check.matches = expected == check.actual;
  if (!check.matches) {
    std::istringstream e(expected), a(check.actual);
    std::string le, la;
    for (int line = 1;; ++line) {
      const bool he = static_cast<bool>(std::getline(e, le));
      const bool ha = static_cast<bool>(std::getline(a, la));
      if (!he && !ha) break;
      if (!he || !ha || le != la) {
        check.difference = "line " + std::to_string(line) + ": expected '" + (he ? le : "<eof>") + "' got '" +
                           (ha ? la : "<eof>") + "'";
        break;
      }
    }
  }
  return check;
}

}  // namespace fgdyn
