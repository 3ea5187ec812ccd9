// Python bindings. Structured results cross the boundary as JSON text and are
// decoded on the Python side (fgdyn/__init__.py).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fgdyn/autofile.hpp"
#include "fgdyn/errors.hpp"
#include "fgdyn/families.hpp"
#include "fgdyn/graph.hpp"
#include "fgdyn/report.hpp"

namespace py = pybind11;
using namespace fgdyn;

namespace {

IterationConfig make_config(int max_iter, std::size_t prefix, int window, std::size_t max_len) {
  IterationConfig cfg;
  cfg.max_iterations = max_iter;
  cfg.target_prefix = prefix;
  cfg.stability_window = window;
  cfg.max_word_length = max_len;
  cfg.validate();
  return cfg;
}

AutoFile from_images(const std::vector<std::string>& names, const std::vector<std::string>& forward,
                     const std::vector<std::string>& backward) {
  const Alphabet alpha(names);
  auto words = [&](const std::vector<std::string>& texts) {
    std::vector<Word> out;
    for (const auto& t : texts) out.push_back(parse_word(t, alpha));
    return out;
  };
  return AutoFile{verify_pair(Endomorphism(alpha, words(forward)), Endomorphism(alpha, words(backward))), {}, {}};
}

std::vector<Word> words_of(const AutoFile& f, const std::vector<std::string>& texts) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(parse_word(t, f.pair.alphabet()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Boundary dynamics of free-group automorphisms";

  py::register_exception<GrowthOverflow>(m, "GrowthOverflow", PyExc_RuntimeError);

  py::class_<AutoFile>(m, "Automorphism")
      .def_static("load", &load_automorphism, py::arg("source"),
                  "From an automorphism file path or a family descriptor such as 'phi_k:k=1'.")
      .def_static("parse", [](const std::string& text) { return parse_autofile(text); }, py::arg("text"))
      .def_static("from_images", &from_images, py::arg("alphabet"), py::arg("forward"), py::arg("backward"))
      .def_property_readonly("rank", [](const AutoFile& f) { return f.pair.rank(); })
      .def_property_readonly("alphabet", [](const AutoFile& f) { return f.pair.alphabet().names(); })
      .def_property_readonly("fixed",
                             [](const AutoFile& f) {
                               std::vector<std::string> out;
                               for (const auto& w : f.fixed) out.push_back(format_word(w, f.pair.alphabet()));
                               return out;
                             })
      .def("inverse", [](const AutoFile& f) { return AutoFile{f.pair.inverse(), {}, {}}; })
      .def("apply",
           [](const AutoFile& f, const std::string& w) {
             const auto& a = f.pair.alphabet();
             return format_word(f.pair.forward().apply(parse_word(w, a)), a);
           })
      .def(
          "iterate",
          [](const AutoFile& f, const std::string& w, long p, bool compact, std::size_t max_len) {
            const auto& a = f.pair.alphabet();
            const Word r = iterate(f.pair, parse_word(w, a), p, max_len);
            return compact ? format_word_compact(r, a) : format_word(r, a);
          },
          py::arg("word"), py::arg("p"), py::arg("compact") = false, py::arg("max_len") = 1'000'000)
      .def(
          "abelianize",
          [](const AutoFile& f, unsigned long p) {
            const IntMatrix m = matrix_power(abelianize(f.pair.forward()), p);
            std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(m.dimension()));
            for (int i = 1; i <= m.dimension(); ++i)
              for (int j = 1; j <= m.dimension(); ++j) out[static_cast<std::size_t>(i - 1)].push_back(m.at(i, j));
            return out;
          },
          py::arg("power") = 1)
      .def("to_text", [](const AutoFile& f) { return write_autofile(f); })
      .def("__eq__", [](const AutoFile& a, const AutoFile& b) { return a.pair == b.pair; });

  m.def(
      "omega_json",
      [](const AutoFile& f, const std::string& w, bool backward, int max_iter, std::size_t prefix, int window,
         std::size_t max_len) {
        const auto cfg = make_config(max_iter, prefix, window, max_len);
        const auto phi = backward ? f.pair.inverse() : f.pair;
        return dump(to_json(omega_limit(phi, parse_word(w, f.pair.alphabet()), cfg), f.pair.alphabet()));
      },
      py::arg("aut"), py::arg("word"), py::arg("backward") = false, py::arg("max_iter") = 300,
      py::arg("prefix") = 200, py::arg("window") = 5, py::arg("max_len") = 1'000'000);

  m.def(
      "parabolic_json",
      [](const AutoFile& f, const std::string& seed) {
        return dump(to_json(detect_parabolic(f.pair, parse_word(seed, f.pair.alphabet())), f.pair.alphabet()));
      },
      py::arg("aut"), py::arg("seed"));

  m.def(
      "graph",
      [](const AutoFile& f, std::optional<std::vector<std::string>> seeds) {
        const auto g = build_graph(f.pair, f.fixed,
                                   seeds ? words_of(f, *seeds) : (f.seeds.empty() ? default_seeds(f.pair.rank()) : f.seeds));
        return py::make_tuple(dump(to_json(g)), emit_dot(g));
      },
      py::arg("aut"), py::arg("seeds") = py::none(), "Returns (json text, dot text).");

  m.def(
      "growth_json",
      [](const AutoFile& f, const std::string& w, int p_max) {
        return dump(to_json(growth_classify(f.pair, parse_word(w, f.pair.alphabet()), p_max)));
      },
      py::arg("aut"), py::arg("word"), py::arg("p_max") = 40);

  m.def("classify_twist", [](long n, long k) { return to_string(classify_twist(n, k)); }, py::arg("n"), py::arg("k"));

  m.def(
      "reduce_word",
      [](const std::string& text, int rank) {
        const Alphabet a = Alphabet::standard(rank);
        return format_word(parse_word(text, a), a);
      },
      py::arg("text"), py::arg("rank") = 4);
}
