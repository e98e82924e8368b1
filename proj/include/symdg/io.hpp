#ifndef SYMDG_IO_HPP
#define SYMDG_IO_HPP

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symdg/cyclotomic.hpp"
#include "symdg/digraph.hpp"
#include "symdg/errors.hpp"
#include "symdg/group.hpp"
#include "symdg/involutions.hpp"
#include "symdg/permutation.hpp"
#include "symdg/sigma_rep.hpp"
#include "symdg/tables.hpp"

namespace symdg {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kDefaultDotVertexCap = 2000;

/// {"n": n, "arcs": [[u, v], ...], "labels": [...]}; arcs sorted.
inline Json digraph_to_json(Digraph const &graph)
{
  Json arcs = Json::array();
  for (std::size_t u = 0; u < graph.order(); ++u) {
    for (Vertex v : graph.out(u))
      arcs.push_back({u, v});
  }
  Json out{{"n", graph.order()}, {"arcs", std::move(arcs)}};
  if (!graph.labels().empty())
    out["labels"] = graph.labels();
  return out;
}

inline Digraph digraph_from_json(Json const &j)
{
  try {
    auto const n = j.at("n").get<std::size_t>();
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (auto const &arc : j.at("arcs")) {
      if (!arc.is_array() || arc.size() != 2)
        throw ParseError("digraph JSON: arcs must be [u, v] pairs");
      arcs.emplace_back(arc[0].get<Vertex>(), arc[1].get<Vertex>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
      labels = j.at("labels").get<std::vector<std::string>>();
    return Digraph::from_arcs(n, arcs, std::move(labels));
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("digraph JSON: ") + e.what());
  }
}

/// Graphviz export; refuses digraphs above `vertex_cap` vertices.
inline std::string digraph_to_dot(Digraph const &graph, std::size_t vertex_cap = kDefaultDotVertexCap)
{
  if (graph.order() > vertex_cap)
    throw ResourceBoundExceeded("DOT export of " + std::to_string(graph.order()) +
                                " vertices exceeds the cap " + std::to_string(vertex_cap));
  std::ostringstream out;
  out << "digraph G {\n";
  if (!graph.labels().empty()) {
    for (std::size_t v = 0; v < graph.order(); ++v)
      out << "  " << v << " [label=" << Json(graph.labels()[v]).dump() << "];\n";
  }
  for (std::size_t u = 0; u < graph.order(); ++u) {
    for (Vertex v : graph.out(u))
      out << "  " << u << " -> " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

/// Group spec {"degree": n, "generators": ["(1,2)(3,4)", ...]}, 1-based cycles.
inline Json group_to_json(PermutationGroup const &group)
{
  Json gens = Json::array();
  for (auto const &g : group.generators())
    gens.push_back(g.to_cycle_string());
  return Json{{"degree", group.degree()}, {"generators", std::move(gens)}};
}

inline PermutationGroup group_from_json(Json const &j)
{
  try {
    auto const degree = j.at("degree").get<std::size_t>();
    if (degree == 0)
      throw ParseError("group spec: degree must be positive");
    std::vector<Permutation> gens;
    for (auto const &text : j.at("generators"))
      gens.push_back(parse_cycles(text.get<std::string>(), degree));
    return PermutationGroup(degree, std::move(gens));
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("group spec: ") + e.what());
  }
}

inline Json cyclo_to_json(CyclotomicElement const &x)
{
  Json coeffs = Json::array();
  for (auto const &c : x.coefficients())
    coeffs.push_back(to_string(c));
  return coeffs;
}

inline CyclotomicElement cyclo_from_json(Json const &j)
{
  if (!j.is_array() || j.size() != CyclotomicElement::kDegree)
    throw ParseError("cyclotomic element: expected six coefficients");
  std::array<Rational, CyclotomicElement::kDegree> c;
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = parse_rational(j[k].get<std::string>());
  return CyclotomicElement(c);
}

/// Fixture data for the word tables, involution lists and change of basis.
inline Json fixtures_to_json()
{
  Json tables = Json::array();
  for (auto const &row : tables_fixture())
    tables.push_back({{"table", row.table}, {"x", row.x}, {"h", row.h}, {"j", row.j}, {"k", row.k}});

  Json involutions = Json::array();
  for (auto const &set : conjugated_involution_fixture())
    involutions.push_back({{"set", describe(set)}, {"conjugator", set.conjugator}, {"words", set.words}});

  auto const &f = change_of_basis_fixture();
  Json constants = Json::object();
  for (auto const &[name, text] : f.constants)
    constants[name] = text;
  auto const &phi = printed_phi_fixture();
  auto entries = [](PrintedPhiFixture::Entries const &e) {
    Json rows = Json::array();
    for (auto const &row : e)
      rows.push_back(Json::array({row[0], row[1], row[2]}));
    return rows;
  };
  return Json{
    {"schema", "symdg-fixtures/1"},
    {"word_convention", "products compose left to right; \\alpha and \\beta name the coordinate maps"},
    {"double_coset_tables", std::move(tables)},
    {"conjugated_involution_sets", std::move(involutions)},
    {"phi_matrices",
     {{"S1", entries(phi.S1)},
      {"S1^-1", entries(phi.S1_inv)},
      {"S3", entries(phi.S3)},
      {"S3^-1", entries(phi.S3_inv)},
      {"S2", entries(phi.S2)},
      {"S4", entries(phi.S4)}}},
    {"change_of_basis",
     {{"constants", std::move(constants)},
      {"T1_scale", f.T1_scale},
      {"T1", f.T1},
      {"T2_scale", f.T2_scale},
      {"T2", f.T2},
      {"T1_inverse", f.T1_inv},
      {"T2_inverse", f.T2_inv},
      {"T3", f.T3},
      {"A", f.A},
      {"B", f.B},
      {"C", f.C},
      {"D", f.D}}},
  };
}

/// Writes through a sibling temporary file and renames it into place.
inline void write_file_atomic(std::filesystem::path const &path, std::string const &content)
{
  namespace fs = std::filesystem;
  if (path.has_parent_path())
    fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out)
      throw Error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, path);
}

inline std::string read_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline Json parse_json(std::string const &text, std::string const &what)
{
  try {
    return Json::parse(text);
  } catch (nlohmann::json::parse_error const &e) {
    throw ParseError(what + ": " + e.what());
  }
}

} // namespace symdg

#endif // SYMDG_IO_HPP
