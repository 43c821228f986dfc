#pragma once

#include <string>

#include "omcg/graphs.hpp"
#include "omcg/lattice.hpp"
#include "omcg/verify.hpp"

namespace omcg {

// Canonical, byte-stable exports. Vertices and covectors appear in canonical
// order, edges sorted ascending, JSON keys in fixed order.

std::string to_dot(const SignedGraph& g);
std::string graph_json(const SignedGraph& g);

/// Covectors, height map, Hasse edges, graded flag and the coatoms covered
/// by the implicit top element.
std::string lattice_json(const FaceLattice& lattice);

std::string verdict_json(const Verdict& v, const GroundSet& ground);
std::string equivalence_report_json(const EquivalenceReport& r, const GroundSet& ground);
std::string cost_report_json(const CostReport& r, bool include_times);

} // namespace omcg
