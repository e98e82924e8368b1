#include <filesystem>

#include <gtest/gtest.h>

#include "symdg/gamma.hpp"
#include "symdg/io.hpp"

using namespace symdg;
namespace fs = std::filesystem;

TEST(Io, DigraphJsonRoundTrip)
{
  auto const gi = build_gamma(2);
  Json const j = digraph_to_json(gi.digraph);
  EXPECT_EQ(j.at("n"), 16);
  EXPECT_EQ(j.at("arcs").size(), 32u);
  Digraph const back = digraph_from_json(parse_json(j.dump(), "test"));
  EXPECT_EQ(back.order(), 16u);
  EXPECT_EQ(digraph_to_json(back), j);
  EXPECT_EQ(adjacency_matrix(back), adjacency_matrix(gi.digraph));
}

TEST(Io, DigraphJsonRejectsMalformed)
{
  EXPECT_THROW(digraph_from_json(Json{{"arcs", Json::array()}}), ParseError);
  EXPECT_THROW(digraph_from_json(Json{{"n", 2}, {"arcs", {{0}}}}), ParseError);
  EXPECT_THROW(digraph_from_json(Json{{"n", 2}, {"arcs", {{0, 5}}}}), InvalidDigraph);
  EXPECT_THROW(digraph_from_json(Json{{"n", 2}, {"arcs", {{0, 1}, {0, 1}}}}), InvalidDigraph);
  EXPECT_THROW(parse_json("{\"n\": ", "broken"), ParseError);
}

TEST(Io, DotExport)
{
  auto const gi = build_gamma(2);
  std::string const dot = digraph_to_dot(gi.digraph);
  EXPECT_EQ(dot.rfind("digraph G {", 0), 0u);
  std::size_t arrows = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1))
    ++arrows;
  EXPECT_EQ(arrows, 32u);
  EXPECT_THROW(digraph_to_dot(gi.digraph, 10), ResourceBoundExceeded);
}

TEST(Io, GroupJsonRoundTrip)
{
  auto const gi = build_gamma(3);
  PermutationGroup const back = group_from_json(group_to_json(gi.G));
  EXPECT_EQ(back.order(), gi.G.order());
  EXPECT_TRUE(back.is_subgroup_of(gi.G) && gi.G.is_subgroup_of(back));
  EXPECT_THROW(group_from_json(Json{{"degree", 0}, {"generators", Json::array()}}), ParseError);
  EXPECT_THROW(group_from_json(Json{{"degree", 3}, {"generators", {"(1,4)"}}}), InvalidCycles);
}

TEST(Io, CyclotomicJsonRoundTrip)
{
  auto const x = parse_cyclotomic("z^3 - 2/3z + 5");
  EXPECT_EQ(cyclo_from_json(cyclo_to_json(x)), x);
  EXPECT_THROW(cyclo_from_json(Json::array({"1", "2"})), ParseError);
}

TEST(Io, FixturesCarryDataOnly)
{
  Json const j = fixtures_to_json();
  EXPECT_EQ(j.at("schema"), "symdg-fixtures/1");
  EXPECT_EQ(j.at("double_coset_tables").size(), 48u);
  EXPECT_EQ(j.at("conjugated_involution_sets").size(), 10u);
  std::string const text = j.dump();
  for (char const *forbidden : {"arXiv", "Lemma", "Table ", "Eq", "Section"})
    EXPECT_EQ(text.find(forbidden), std::string::npos) << forbidden;
}

TEST(Io, AtomicWrite)
{
  fs::path const dir = fs::temp_directory_path() / "symdg_io_test";
  fs::remove_all(dir);
  fs::path const file = dir / "nested" / "out.txt";
  write_file_atomic(file, "first");
  write_file_atomic(file, "second");
  EXPECT_EQ(read_file(file), "second");
  EXPECT_FALSE(fs::exists(fs::path(file) += ".tmp"));
  EXPECT_THROW(read_file(dir / "missing"), Error);
  fs::remove_all(dir);
}
