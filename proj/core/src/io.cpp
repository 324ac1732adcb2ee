#include "hsd/io.hpp"

#include <json.hpp>
#include <limits>
#include <set>

namespace hsd {

using nlohmann::json;

namespace {

json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

json hypergraph_json(const Hypergraph& h) {
  json edges = json::array();
  for (int d = 0; d <= h.max_dim(); ++d)
    for (const Simplex& e : h.edges(d))
      edges.push_back(std::vector<VertexId>(e.vertices().begin(), e.vertices().end()));
  return json{{"vertices", h.vertices().labels()}, {"edges", std::move(edges)}};
}

json groups_json(const std::vector<HomologyGroup>& groups) {
  json out = json::array();
  for (const HomologyGroup& g : groups) {
    json torsion = json::array();
    for (const Integer& t : g.torsion) torsion.push_back(integer_json(t));
    out.push_back({{"dim", g.dim}, {"rank", g.rank}, {"torsion", std::move(torsion)}});
  }
  return out;
}

json provenance_json(const std::vector<Simplex>& provenance) {
  json out = json::array();
  for (const Simplex& s : provenance)
    out.push_back(std::vector<VertexId>(s.vertices().begin(), s.vertices().end()));
  return out;
}

std::string finish(const json& j) { return j.dump() + "\n"; }

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object with \"vertices\" and \"edges\"");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("missing \"vertices\" array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("missing \"edges\" array");

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const json& v = doc["vertices"][i];
    if (v.is_string())
      labels.push_back(v.get<std::string>());
    else if (v.is_number_integer())
      labels.push_back(std::to_string(v.get<std::int64_t>()));
    else
      throw ParseError("vertex " + std::to_string(i) + ": label must be a string or an integer");
  }
  VertexTable table;
  try {
    table = VertexTable(std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  std::vector<Simplex> edges;
  std::set<Simplex> seen;
  const json& raw = doc["edges"];
  if (raw.empty()) throw ParseError("a hypergraph needs at least one edge");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string where = "edge " + std::to_string(i);
    if (!raw[i].is_array()) throw ParseError(where + ": expected an array of vertex indices");
    if (raw[i].empty()) throw ParseError(where + ": empty edge");
    std::vector<VertexId> ids;
    for (const json& x : raw[i]) {
      if (!x.is_number_integer()) throw ParseError(where + ": vertex indices must be integers");
      const auto v = x.get<std::int64_t>();
      if (v < 0 || static_cast<std::uint64_t>(v) >= table.size())
        throw ParseError(where + ": vertex index " + std::to_string(v) + " out of range");
      ids.push_back(static_cast<VertexId>(v));
    }
    Simplex s(std::move(ids));
    if (!seen.insert(s).second) throw ParseError(where + ": duplicate edge " + to_string(s));
    edges.push_back(std::move(s));
  }
  return Hypergraph(std::move(table), std::move(edges));
}

std::string hypergraph_to_json(const Hypergraph& h) { return finish(hypergraph_json(h)); }

std::string subdivision_to_json(const Hypergraph& h, const std::vector<Simplex>& provenance) {
  json j = hypergraph_json(h);
  j["provenance"] = provenance_json(provenance);
  return finish(j);
}

std::string subdivision_to_json(const IteratedSubdivision& s) {
  json j = hypergraph_json(s.hypergraph);
  json rounds = json::array();
  for (const auto& round : s.provenance) rounds.push_back(provenance_json(round));
  j["provenance"] = std::move(rounds);
  return finish(j);
}

std::string homology_to_json(const CoefficientRing& ring, const std::vector<HomologyGroup>& groups) {
  return finish(json{{"ring", ring.name()}, {"groups", groups_json(groups)}});
}

std::string report_to_json(const InvarianceReport& report) {
  json checks = json::array();
  for (const NamedCheck& c : report.checks) {
    json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  json induced = json::array();
  for (const HomologyMatrix& m : report.induced) {
    json rows = json::array();
    for (const auto& row : m.entries) {
      json r = json::array();
      for (const Rational& x : row) r.push_back(x.str());
      rows.push_back(std::move(r));
    }
    induced.push_back({{"dim", m.dim}, {"matrix", std::move(rows)}});
  }
  return finish(json{{"ring", report.ring.name()},
                     {"pass", report.all_pass()},
                     {"checks", std::move(checks)},
                     {"homology",
                      {{"source", groups_json(report.source_homology)},
                       {"subdivided", groups_json(report.subdivided_homology)}}},
                     {"induced", std::move(induced)}});
}

}  // namespace hsd
