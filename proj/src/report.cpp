#include "fgdyn/report.hpp"

namespace fgdyn {

Json to_json(const LimitPoint& p, const Alphabet& alphabet) {
  Json j;
  j["name"] = point_name(p, alphabet);
  if (p.is_rational()) {
    j["type"] = "rational";
    j["head"] = format_word(p.rational().head(), alphabet);
    j["period"] = format_word(p.rational().period(), alphabet);
  } else {
    j["type"] = "prefix";
    j["prefix"] = format_word(p.approx().prefix, alphabet);
    j["certified_length"] = p.approx().certified_length;
  }
  return j;
}

Json to_json(const LimitResult& r, const Alphabet& alphabet) {
  Json j;
  if (r.is_fixed()) {
    j["kind"] = "fixed-element";
    j["element"] = format_word(r.fixed().element, alphabet);
  } else if (r.is_boundary()) {
    j["kind"] = "boundary";
    j["iterations"] = r.boundary().iterations_used;
    j["point"] = to_json(r.boundary().point, alphabet);
  } else {
    const auto& nc = r.not_converged();
    j["kind"] = "not-converged";
    j["iterations"] = nc.iterations_used;
    j["best_prefix"] = format_word(nc.best_prefix, alphabet);
    j["diagnostics"] = nc.diagnostics;
  }
  return j;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Parabolic:
      return "parabolic";
    case Verdict::NotParabolic:
      return "not-parabolic";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(Certification c) {
  switch (c) {
    case Certification::Exact:
      return "exact";
    case Certification::PrefixCertified:
      return "prefix-certified";
    case Certification::None:
      return "none";
  }
  return "?";
}

std::string to_string(GrowthClass::Kind k) {
  switch (k) {
    case GrowthClass::Kind::Bounded:
      return "bounded";
    case GrowthClass::Kind::Polynomial:
      return "polynomial";
    case GrowthClass::Kind::Exponential:
      return "exponential";
  }
  return "?";
}

Json to_json(const ParabolicReport& r, const Alphabet& alphabet) {
  Json j;
  j["seed"] = format_word(r.seed, alphabet);
  j["verdict"] = to_string(r.verdict);
  j["certification"] = to_string(r.certification);
  if (r.point) j["point"] = to_json(LimitPoint(*r.point), alphabet);
  j["reason"] = r.reason;
  j["forward"] = to_json(r.forward, alphabet);
  j["backward"] = to_json(r.backward, alphabet);
  return j;
}

Json to_json(const DynamicsGraph& g) {
  Json j;
  j["alphabet"] = g.alphabet.names();
  j["under_approximation"] = g.under_approximation;
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    Json vj = to_json(g.vertices[v].representative, g.alphabet);
    vj["id"] = "v" + std::to_string(v);
    vj["members"] = g.vertices[v].members.size();
    vj["approximate"] = g.vertices[v].approximate;
    vertices.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json labels = Json::array();
    for (const Word& w : e.labels) labels.push_back(format_word(w, g.alphabet));
    edges.push_back({{"source", "v" + std::to_string(e.source)},
                     {"target", "v" + std::to_string(e.target)},
                     {"labels", std::move(labels)}});
  }
  j["edges"] = std::move(edges);
  j["components"] = g.weakly_connected_components();
  j["loops"] = g.loop_count();
  j["diagnostics"] = g.diagnostics;
  return j;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int r = 1; r <= m.dimension(); ++r) {
    Json row = Json::array();
    for (int c = 1; c <= m.dimension(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const GrowthClass& g) {
  return {{"kind", to_string(g.kind)},
          {"degree", g.degree},
          {"rate", g.rate},
          {"polynomial_residual", g.polynomial_residual},
          {"exponential_residual", g.exponential_residual},
          {"lengths", g.lengths}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace fgdyn
