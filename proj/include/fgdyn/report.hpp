#pragma once

#include <json.hpp>
#include <string>

#include "fgdyn/dynamics.hpp"
#include "fgdyn/graph.hpp"
#include "fgdyn/matrix.hpp"

namespace fgdyn {

// Keys keep insertion order so reports read top-down and diff cleanly.
using Json = nlohmann::ordered_json;

Json to_json(const LimitPoint& p, const Alphabet& alphabet);
Json to_json(const LimitResult& r, const Alphabet& alphabet);
Json to_json(const ParabolicReport& r, const Alphabet& alphabet);
Json to_json(const DynamicsGraph& g);
Json to_json(const IntMatrix& m);
Json to_json(const GrowthClass& g);

std::string to_string(Verdict v);
std::string to_string(Certification c);
std::string to_string(GrowthClass::Kind k);

/// Two-space indented, trailing newline.
std::string dump(const Json& j);

}  // namespace fgdyn
