#pragma once

// JSON serialization (stable field order, hence byte-identical output for
// identical inputs) and DOT export for the dual graphs.

#include <json.hpp>

#include <string>

#include "planebranch/curve.hpp"
#include "planebranch/moduli.hpp"
#include "planebranch/resolution.hpp"
#include "planebranch/saito.hpp"

namespace planebranch {

using Json = nlohmann::ordered_json;

Json to_json(const CharExponents& c);
Json to_json(const PuiseuxPairs& pp);
Json to_json(const Semigroup& s);
Json to_json(const BlowupStep& s);
Json to_json(const ResolutionData& r);
Json to_json(const DimensionReport& d);
Json to_json(const DeltaPData& dp);
Json to_json(const PropertyReport& pr);
Json to_json(const NumberedDualTree& t);
Json to_json(const FoliationIdentity& id);
Json to_json(const OneForm& w);
Json to_json(const SaitoResult& r);
Json to_json(const CriterionReport& r);
Json to_json(const GenericReport& r);
Json to_json(const RigidityEntry& e);

// Graphviz exports. Vertices are labeled with the divisor index and
// self-intersection (resolution) or the tree numbering (numbered tree, with
// the curve and direction attachments as decorated leaves).
std::string dot_dual_graph(const ResolutionData& r);
std::string dot_numbered_tree(const NumberedDualTree& t);

}  // namespace planebranch
