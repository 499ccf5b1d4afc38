#pragma once

#include <iosfwd>
#include <string>

#include "iwagraph/char_series.hpp"
#include "iwagraph/invariants.hpp"
#include "iwagraph/multigraph.hpp"
#include "iwagraph/tower.hpp"

namespace iwagraph {

// {"vertices": u, "edges": [{"from": i, "to": j}, ...]} with 1-based vertex
// indices; each entry is one undirected edge (loop when from == to): list
// order fixes the section S and the voltage coordinate order.
Multigraph parse_graph_json(std::istream& in);

// {"ell": L, "values": ["v1", ...], "precision": P | "exact"} with decimal
// string values aligned with the graph's edge order.
VoltageAssignment parse_voltage_json(std::istream& in);

std::string graph_to_json(const Multigraph& g);

std::string invariants_to_json(const IwasawaInvariants& inv,
                               const std::vector<Int>& series_prefix);

std::string kappa_levels_to_json(const std::vector<KappaLevel>& levels);

}  // namespace iwagraph
