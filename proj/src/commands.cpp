#include "commands.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "symdg/symdg.hpp"

namespace symdg::cli {

void emit(std::string const &out, std::string const &content)
{
  if (out.empty() || out == "-")
    std::cout << content;
  else
    write_file_atomic(out, content);
}

namespace {

/// (order · valency)^power arcs must stay within max_arcs.
void check_power_size(Digraph const &base, std::size_t power, std::uint64_t max_arcs)
{
  mpz_class arcs = static_cast<unsigned long>(base.arc_count());
  mpz_pow_ui(arcs.get_mpz_t(), arcs.get_mpz_t(), power);
  if (arcs > mpz_class(std::to_string(max_arcs)))
    throw ResourceBoundExceeded("tensor power " + std::to_string(power) + " has " + arcs.get_str() +
                                " arcs, above --max-arcs " + std::to_string(max_arcs));
}

Json group_summary(PermutationGroup const &g)
{
  Json j = group_to_json(g);
  j["order"] = g.order().get_str();
  return j;
}

std::string render(Digraph const &graph, ConstructOptions const &opt)
{
  if (opt.format == "json")
    return digraph_to_json(graph).dump() + "\n";
  if (opt.format == "dot")
    return digraph_to_dot(graph, opt.dot_cap);
  if (opt.format == "matrix")
    return format_matrix(adjacency_matrix(graph));
  std::ostringstream out;
  auto const val = graph.valency();
  out << "vertices: " << graph.order() << "\narcs: " << graph.arc_count() << "\nvalency: "
      << (val ? std::to_string(*val) : std::string("irregular")) << "\nstrongly connected: "
      << (strongly_connected(graph) ? "yes" : "no") << '\n';
  return out.str();
}

} // namespace

int run_construct(ConstructOptions const &opt, GlobalOptions const &global)
{
  Json manifest{{"schema", "symdg-manifest/1"}, {"family", opt.family}, {"power", opt.power}};
  std::optional<Digraph> base;
  if (opt.family == "gamma") {
    auto const gi = build_gamma(opt.s, global.enumeration_bound);
    manifest["s"] = opt.s;
    manifest["groups"] = {{"R", group_summary(gi.R)}, {"G", group_summary(gi.G)}, {"H", group_summary(gi.H)}};
    manifest["connection_set"] = {gi.connection_set[0].to_cycle_string(), gi.connection_set[1].to_cycle_string()};
    base = gi.digraph;
  } else {
    auto const si = build_sigma(global.enumeration_bound);
    manifest["groups"] = {{"R", group_summary(si.R)}, {"G", group_summary(si.G)}, {"H", group_summary(si.H)}};
    manifest["connection_set_size"] = si.S.size();
    Json blocks = Json::array();
    for (auto const &b : si.blocks)
      blocks.push_back({{"name", b.name}, {"size", b.elements.size()}});
    manifest["connection_blocks"] = std::move(blocks);
    base = si.digraph;
  }
  Digraph graph = *base;
  if (opt.power > 1) {
    check_power_size(*base, opt.power, global.max_arcs);
    graph = tensor_power(*base, opt.power);
  }
  auto const val = graph.valency();
  manifest["vertices"] = graph.order();
  manifest["arcs"] = graph.arc_count();
  manifest["valency"] = val ? Json(*val) : Json(nullptr);
  manifest["format"] = opt.format;

  emit(opt.out, render(graph, opt));
  if (!opt.out.empty() && opt.out != "-") {
    manifest["digraph_file"] = std::filesystem::path(opt.out).filename().string();
    write_file_atomic(opt.out + ".manifest.json", manifest.dump(2) + "\n");
    std::cerr << "wrote " << opt.out << " (" << graph.order() << " vertices) and " << opt.out << ".manifest.json\n";
  }
  return kExitPass;
}

int run_verify(VerifyCli const &opt, GlobalOptions const &global)
{
  VerifyOptions options;
  options.s_values = opt.s_values;
  options.power = opt.power;
  options.enumeration_bound = global.enumeration_bound;
  options.max_arcs = global.max_arcs;
  options.jobs = global.jobs;
  options.inject_fault = opt.inject_fault;
  auto const report = run_verification(options, opt.scope);

  if (!opt.report.empty()) {
    bool const json = opt.report.size() >= 5 && opt.report.substr(opt.report.size() - 5) == ".json";
    write_file_atomic(opt.report, json ? report.to_json().dump(2) + "\n" : report.to_text());
  }
  if (!opt.quiet)
    std::cout << (opt.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text());
  if (!report.passed()) {
    std::cerr << "failing claims:";
    for (auto const &id : report.failing_ids())
      std::cerr << ' ' << id;
    std::cerr << '\n';
    return kExitClaimFailure;
  }
  return kExitPass;
}

int run_minpoly(std::string const &path)
{
  auto const m = parse_matrix(read_file(path));
  if (!m.is_square())
    throw DimensionMismatch("minimal polynomial of a " + std::to_string(m.rows()) + "x" +
                                   std::to_string(m.cols()) + " matrix");
  auto const p = minimal_polynomial(m);
  std::cout << "minimal polynomial: " << p.to_string("x") << '\n'
            << "coefficients (ascending): " << coefficient_list(p) << '\n'
            << (is_squarefree(p) ? "DIAGONALIZABLE" : "NOT DIAGONALIZABLE") << '\n';
  return kExitPass;
}

/// Order, transitivity and primitivity of a group spec file.
int run_group(std::string const &path)
{
  auto const group = group_from_json(parse_json(read_file(path), path));
  auto const &gens = group.generators();
  std::span<Permutation const> span(gens);
  bool const transitive = is_transitive(span, group.degree());
  std::cout << "degree: " << group.degree() << "\norder: " << group.order().get_str()
            << "\ntransitive: " << (transitive ? "yes" : "no");
  if (transitive)
    std::cout << "\nprimitive: " << (is_primitive(span, group.degree()) ? "yes" : "no");
  std::cout << '\n';
  return kExitPass;
}

/// Re-checks an exported digraph: the verdicts must match the in-memory pipeline.
int run_inspect(std::string const &path)
{
  auto const graph = digraph_from_json(parse_json(read_file(path), path));
  auto const val = graph.valency();
  auto const p = minimal_polynomial(adjacency_matrix(graph));
  std::cout << "vertices: " << graph.order() << "\narcs: " << graph.arc_count()
            << "\nvalency: " << (val ? std::to_string(*val) : std::string("irregular"))
            << "\nstrongly connected: " << (strongly_connected(graph) ? "yes" : "no")
            << "\nminimal polynomial: " << p.to_string("x") << '\n'
            << (is_squarefree(p) ? "DIAGONALIZABLE" : "NOT DIAGONALIZABLE") << '\n';
  return kExitPass;
}

int run_fixtures(std::string const &out)
{
  emit(out, fixtures_to_json().dump(2) + "\n");
  return kExitPass;
}

} // namespace symdg::cli
