#include "fgdyn/autofile.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "fgdyn/errors.hpp"
#include "fgdyn/families.hpp"
#include "fgdyn/graph.hpp"

namespace fgdyn {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Word parse_image(std::string_view text, const Alphabet& alpha) {
  text = trim(text);
  if (text == "1") return {};
  return parse_word(text, alpha);
}

std::vector<Word> parse_list(std::string_view text, const Alphabet& alpha) {
  std::vector<Word> out;
  while (!text.empty()) {
    const auto semi = text.find(';');
    const auto item = trim(text.substr(0, semi));
    if (!item.empty()) out.push_back(parse_image(item, alpha));
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
  }
  return out;
}

std::string format_image(const Word& w, const Alphabet& alpha) { return w.empty() ? "1" : format_word(w, alpha); }

}  // namespace

AutoFile parse_autofile(std::string_view text) {
  std::optional<Alphabet> alpha;
  std::map<int, Word> fwd;
  std::map<int, Word> bwd;
  std::vector<Word> fixed;
  std::vector<Word> seeds;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& what) { throw ParseError("line " + std::to_string(lineno) + ": " + what); };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (line.starts_with("alphabet:")) {
        if (alpha) fail("duplicate alphabet line");
        std::vector<std::string> names;
        std::istringstream ns{std::string(line.substr(9))};
        for (std::string n; ns >> n;) names.push_back(n);
        alpha.emplace(std::move(names));
        continue;
      }
      if (!alpha) fail("expected 'alphabet:' before other lines");
      if (line.starts_with("map ") || line.starts_with("inv ")) {
        const bool forward = line.starts_with("map ");
        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos) fail("expected '<gen> -> <word>'");
        const auto gen_name = trim(line.substr(4, arrow - 4));
        auto g = alpha->find(gen_name);
        if (!g) fail("unknown generator '" + std::string(gen_name) + "'");
        auto& table = forward ? fwd : bwd;
        if (table.count(*g)) fail("duplicate image for '" + std::string(gen_name) + "'");
        table[*g] = parse_image(line.substr(arrow + 2), *alpha);
      } else if (line.starts_with("fix:")) {
        auto more = parse_list(line.substr(4), *alpha);
        fixed.insert(fixed.end(), more.begin(), more.end());
      } else if (line.starts_with("seeds:")) {
        auto more = parse_list(line.substr(6), *alpha);
        seeds.insert(seeds.end(), more.begin(), more.end());
      } else {
        fail("unrecognized line '" + std::string(line) + "'");
      }
    } catch (const ParseError& e) {
      const std::string msg = e.what();
      if (msg.starts_with("line ")) throw;
      fail(msg);
    } catch (const AlphabetError& e) {
      fail(e.what());
    }
  }
  if (!alpha) throw ParseError("missing 'alphabet:' line");
  std::vector<Word> f;
  std::vector<Word> b;
  for (int g = 1; g <= alpha->rank(); ++g) {
    if (!fwd.count(g)) throw ParseError("missing 'map " + alpha->name(g) + " -> ...'");
    if (!bwd.count(g)) throw ParseError("missing 'inv " + alpha->name(g) + " -> ...'");
    f.push_back(fwd[g]);
    b.push_back(bwd[g]);
  }
  AutoFile file{verify_pair(Endomorphism(*alpha, std::move(f)), Endomorphism(*alpha, std::move(b))),
                std::move(fixed), std::move(seeds)};
  if (auto check = verify_fixed_generators(file.pair, file.fixed); !check.ok)
    throw std::invalid_argument("listed fixed generator '" +
                                format_word(file.fixed[*check.first_failure], *alpha) + "' is not fixed");
  return file;
}

std::string write_autofile(const AutoFile& file) {
  const Alphabet& alpha = file.pair.alphabet();
  std::ostringstream os;
  os << "alphabet:";
  for (const auto& n : alpha.names()) os << ' ' << n;
  os << '\n';
  for (int g = 1; g <= alpha.rank(); ++g)
    os << "map " << alpha.name(g) << " -> " << format_image(file.pair.forward().image(g), alpha) << '\n';
  for (int g = 1; g <= alpha.rank(); ++g)
    os << "inv " << alpha.name(g) << " -> " << format_image(file.pair.backward().image(g), alpha) << '\n';
  auto list = [&](const char* key, const std::vector<Word>& ws) {
    if (ws.empty()) return;
    os << key;
    for (std::size_t i = 0; i < ws.size(); ++i) os << (i ? "; " : " ") << format_image(ws[i], alpha);
    os << '\n';
  };
  list("fix:", file.fixed);
  list("seeds:", file.seeds);
  return os.str();
}

AutoFile load_automorphism(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_autofile(buf.str());
  }
  Family f = make_family(source);
  return AutoFile{f.pair, f.fixed_generators, f.seeds};
}

}  // namespace fgdyn
