#include "iwagraph/io.hpp"

#include <istream>
#include <sstream>

#include "iwagraph/errors.hpp"
#include "json.hpp"

namespace iwagraph {

namespace {
using nlohmann::json;

json parse_stream(std::istream& in) {
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    fail(Errc::validation, std::string("JSON parse error: ") + e.what());
  }
}
}  // namespace

Multigraph parse_graph_json(std::istream& in) {
  json j = parse_stream(in);
  if (!j.contains("vertices") || !j["vertices"].is_number_integer())
    fail(Errc::validation, "graph JSON needs an integer \"vertices\" field");
  int u = j["vertices"].get<int>();
  if (u < 1) fail(Errc::validation, "graph needs at least one vertex");
  if (!j.contains("edges") || !j["edges"].is_array())
    fail(Errc::validation, "graph JSON needs an \"edges\" array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.contains("from") || !e.contains("to"))
      fail(Errc::validation, "each edge needs \"from\" and \"to\"");
    int from = e["from"].get<int>();
    int to = e["to"].get<int>();
    if (from < 1 || from > u || to < 1 || to > u)
      fail(Errc::validation, "edge endpoints must be 1-based vertex indices");
    edges.emplace_back(from - 1, to - 1);
  }
  return Multigraph(u, std::move(edges));
}

VoltageAssignment parse_voltage_json(std::istream& in) {
  json j = parse_stream(in);
  if (!j.contains("ell")) fail(Errc::validation, "voltage JSON needs \"ell\"");
  Int ell;
  if (j["ell"].is_number_integer())
    ell = Int(j["ell"].get<long>());
  else if (j["ell"].is_string())
    ell = Int(j["ell"].get<std::string>(), 10);
  else
    fail(Errc::validation, "\"ell\" must be an integer or decimal string");
  if (!is_odd_prime(ell)) fail(Errc::validation, "ell must be an odd prime >= 3");

  std::optional<long> precision;
  if (j.contains("precision") && !(j["precision"].is_string() && j["precision"] == "exact")) {
    if (!j["precision"].is_number_integer())
      fail(Errc::validation, "\"precision\" must be a positive integer or \"exact\"");
    long p = j["precision"].get<long>();
    if (p < 1) fail(Errc::validation, "\"precision\" must be >= 1");
    precision = p;
  }

  if (!j.contains("values") || !j["values"].is_array())
    fail(Errc::validation, "voltage JSON needs a \"values\" array");
  VoltageAssignment v;
  v.ell = ell;
  for (const auto& entry : j["values"]) {
    Int rep;
    if (entry.is_number_integer())
      rep = Int(entry.get<long>());
    else if (entry.is_string()) {
      try {
        rep = Int(entry.get<std::string>(), 10);
      } catch (const std::invalid_argument&) {
        fail(Errc::validation, "voltage values must be decimal integers");
      }
    } else
      fail(Errc::validation, "voltage values must be decimal strings or integers");
    PadicInt p(rep);
    p.precision = precision;
    v.values.push_back(std::move(p));
  }
  return v;
}

std::string graph_to_json(const Multigraph& g) {
  json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = json::array();
  for (int k = 0; k < g.undirected_edge_count(); ++k) {
    auto [a, b] = g.endpoints(k);
    j["edges"].push_back({{"from", a + 1}, {"to", b + 1}});
  }
  return j.dump();
}

std::string invariants_to_json(const IwasawaInvariants& inv,
                               const std::vector<Int>& series_prefix) {
  json j;
  j["mu"] = inv.mu;
  j["lambda"] = inv.lambda;
  if (inv.nu)
    j["nu"] = *inv.nu;
  else
    j["nu"] = nullptr;
  if (inv.n0)
    j["n0"] = *inv.n0;
  else
    j["n0"] = nullptr;
  j["certificate"] = inv.certificate_string();
  j["series_prefix"] = json::array();
  for (const auto& c : series_prefix) j["series_prefix"].push_back(c.get_str());
  return j.dump(2);
}

std::string kappa_levels_to_json(const std::vector<KappaLevel>& levels) {
  json j = json::array();
  for (const auto& lvl : levels)
    j.push_back({{"n", lvl.level}, {"kappa", lvl.kappa.get_str()}, {"ord_ell", lvl.ord_ell}});
  return j.dump(2);
}

}  // namespace iwagraph
