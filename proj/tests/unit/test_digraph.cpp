#include <random>

#include <gtest/gtest.h>

#include "symdg/digraph.hpp"
#include "symdg/gamma.hpp"
#include "symdg/sigma.hpp"

using namespace symdg;

namespace {

Digraph cycle(std::size_t n)
{
  std::vector<std::vector<Vertex>> out(n);
  for (std::size_t v = 0; v < n; ++v)
    out[v] = {static_cast<Vertex>((v + 1) % n)};
  return Digraph(n, std::move(out));
}

Permutation rotation(std::size_t n)
{
  std::vector<Point> images(n);
  for (std::size_t v = 0; v < n; ++v)
    images[v] = static_cast<Point>((v + 1) % n);
  return Permutation(std::move(images));
}

SigmaInstance const &sigma()
{
  static SigmaInstance const si = build_sigma();
  return si;
}

} // namespace

TEST(Digraph, RejectsInvalidAdjacency)
{
  EXPECT_THROW(Digraph(2, {{0}, {}}), InvalidDigraph);     // self-loop
  EXPECT_THROW(Digraph(2, {{1, 1}, {}}), InvalidDigraph);  // duplicate
  EXPECT_THROW(Digraph(2, {{2}, {}}), InvalidDigraph);     // out of range
  EXPECT_THROW(Digraph(3, {{1}, {}}), InvalidDigraph);     // list count
  EXPECT_THROW(Digraph::from_arcs(2, {{0, 1}, {0, 1}}), InvalidDigraph);
}

TEST(Digraph, CayleyGammaTwo)
{
  auto const gi = build_gamma(2);
  EXPECT_EQ(gi.digraph.order(), 16u);
  EXPECT_EQ(gi.digraph.valency(), 2u);
}

TEST(Digraph, CayleyCyclicIsDirectedTriangle)
{
  auto const g = parse_cycles("(1,2,3)", 3);
  std::vector<Permutation> elements{Permutation(3), g, g * g};
  std::vector<Permutation> conn{g};
  auto const d = cayley_digraph(elements, conn);
  EXPECT_EQ(d.adjacency(), cycle(3).adjacency());
  std::vector<Permutation> bad{Permutation(3)};
  EXPECT_THROW(cayley_digraph(elements, bad), InvalidConnectionSet);
}

TEST(Digraph, CayleySigma)
{
  auto const &si = sigma();
  EXPECT_EQ(si.digraph.order(), 441u);
  EXPECT_EQ(si.digraph.valency(), 160u);
  EXPECT_TRUE(strongly_connected(si.digraph));
}

TEST(Digraph, CayleyRightMultiplicationIsAutomorphism)
{
  auto const gi = build_gamma(3);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < gi.elements.size(); ++i)
    index[gi.elements[i]] = i;
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, gi.elements.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    auto const &r = gi.elements[pick(rng)];
    std::vector<Point> images;
    for (auto const &x : gi.elements)
      images.push_back(static_cast<Point>(index.at(x * r)));
    EXPECT_NO_THROW(check_automorphism(gi.digraph, Permutation(std::move(images))));
  }
}

TEST(Digraph, CosetDigraphs)
{
  auto const gi = build_gamma(2);
  std::vector<Permutation> reps{gi.g};
  auto const cos = coset_digraph(*gi.coset_action, reps);
  EXPECT_EQ(cos.order(), 16u);
  EXPECT_EQ(cos.valency(), 2u);
  auto const empty = coset_digraph(*gi.coset_action, std::span<Permutation const>());
  EXPECT_EQ(empty.arc_count(), 0u);
  std::vector<Permutation> in_h{gi.h};
  EXPECT_THROW(coset_digraph(*gi.coset_action, in_h), InvalidConnectionSet);

  auto const &si = sigma();
  std::vector<Permutation> sreps{si.g1, si.g2};
  auto const scos = coset_digraph(*si.coset_action, sreps);
  EXPECT_EQ(scos.order(), 441u);
  EXPECT_EQ(scos.valency(), 160u);
}

TEST(Digraph, GammaDoubleCosetIsHabAndHb)
{
  for (std::size_t s = 2; s <= 5; ++s) {
    auto const gi = build_gamma(s);
    auto const &action = *gi.coset_action;
    std::vector<std::size_t> expected{action.label_of(gi.a * gi.b), action.label_of(gi.b)};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(double_coset_cosets(action, gi.g), expected) << s;
  }
}

TEST(Digraph, TensorProducts)
{
  auto const six = tensor_product(cycle(2), cycle(3));
  EXPECT_EQ(six.order(), 6u);
  EXPECT_EQ(six.valency(), 1u);
  EXPECT_TRUE(strongly_connected(six)); // coprime lengths give one 6-cycle

  auto const gi = build_gamma(2);
  auto const sq = tensor_power(gi.digraph, 2);
  EXPECT_EQ(sq.order(), 256u);
  EXPECT_EQ(sq.valency(), 4u);
  EXPECT_EQ(adjacency_matrix(sq), kronecker(adjacency_matrix(gi.digraph), adjacency_matrix(gi.digraph)));
  EXPECT_EQ(tensor_power(gi.digraph, 1).adjacency(), gi.digraph.adjacency());

  Digraph const arcless(3, std::vector<std::vector<Vertex>>(3));
  EXPECT_EQ(tensor_product(gi.digraph, arcless).arc_count(), 0u);
  EXPECT_THROW(tensor_power(gi.digraph, 0), DomainError);
}

TEST(Digraph, StrongConnectivity)
{
  for (std::size_t s = 2; s <= 4; ++s)
    EXPECT_TRUE(strongly_connected(build_gamma(s).digraph));
  auto const two_triangles = Digraph::from_arcs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(strongly_connected(two_triangles));
  auto const path = Digraph::from_arcs(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(strongly_connected(path));
}

TEST(Digraph, CountsSArcs)
{
  auto const gi = build_gamma(2);
  EXPECT_EQ(count_s_arcs(gi.digraph, 0), 16);
  EXPECT_EQ(count_s_arcs(gi.digraph, 2), 64);
  for (std::size_t s = 0; s <= 6; ++s) {
    mpz_class expected = 441;
    for (std::size_t k = 0; k < s && k < 3; ++k)
      expected *= 160;
    if (s <= 3)
      EXPECT_EQ(count_s_arcs(sigma().digraph, s), expected);
  }
}

TEST(Digraph, ArcTransitivity)
{
  auto const gi = build_gamma(2);
  auto const witness = gamma_witness(gi);
  auto const w = is_s_arc_transitive_under(gi.digraph, witness, 2);
  EXPECT_TRUE(w.transitive);
  EXPECT_EQ(w.total_arcs, 64u);

  for (std::size_t n : {4u, 7u}) {
    std::vector<Permutation> rot{rotation(n)};
    for (std::size_t s = 0; s <= 4; ++s) {
      auto const r = is_s_arc_transitive_under(cycle(n), rot, s);
      EXPECT_TRUE(r.transitive);
      EXPECT_EQ(r.orbit_size, n);
    }
  }
}

TEST(Digraph, TransitivityIsMonotone)
{
  for (std::size_t s = 2; s <= 4; ++s) {
    auto const gi = build_gamma(s);
    auto const witness = gamma_witness(gi);
    for (std::size_t k = 0; k <= s; ++k)
      EXPECT_TRUE(is_s_arc_transitive_under(gi.digraph, witness, k).transitive) << s << " " << k;
  }
}

TEST(Digraph, SigmaHasTwoArcOrbits)
{
  auto const &si = sigma();
  std::vector<std::size_t> labels;
  for (auto const &r : si.elements)
    labels.push_back(si.coset_action->label_of(r));
  auto const witness = transport_action(*si.coset_action, labels);
  EXPECT_FALSE(is_s_arc_transitive_under(si.digraph, witness, 1).transitive);
  EXPECT_EQ(s_arc_orbit_sizes(si.digraph, witness, 1), (std::vector<std::uint64_t>{441 * 128, 441 * 32}));
  EXPECT_TRUE(is_s_arc_transitive_under(si.digraph, witness, 0).transitive);
}

TEST(Digraph, CorruptedWitnessIsRejected)
{
  auto const gi = build_gamma(2);
  auto witness = gamma_witness(gi);
  std::vector<Point> images(witness[0].images().begin(), witness[0].images().end());
  std::swap(images[0], images[1]);
  witness[0] = Permutation(std::move(images));
  EXPECT_THROW(is_s_arc_transitive_under(gi.digraph, witness, 2), NotAnAutomorphism);
}

TEST(Digraph, ArcBound)
{
  auto const gi = build_gamma(3);
  auto const witness = gamma_witness(gi);
  EXPECT_THROW(is_s_arc_transitive_under(gi.digraph, witness, 3, 100), ResourceBoundExceeded);
}

TEST(Digraph, CosetModels)
{
  auto const gi = build_gamma(2);
  std::vector<Permutation> reps{gi.g};
  EXPECT_TRUE(verify_coset_model(gi.digraph, gi.elements, *gi.coset_action, reps).isomorphic);
  // ab and b represent the two cosets of HgH, so they generate the same digraph
  EXPECT_TRUE(verify_coset_model(gi.digraph, gi.elements, *gi.coset_action, gi.connection_set).isomorphic);

  auto const &si = sigma();
  std::vector<Permutation> sreps{si.g1, si.g2};
  EXPECT_TRUE(verify_coset_model(si.digraph, si.elements, *si.coset_action, sreps).isomorphic);
  std::vector<Permutation> only_g1{si.g1};
  auto const partial = verify_coset_model(si.digraph, si.elements, *si.coset_action, only_g1);
  EXPECT_FALSE(partial.isomorphic);
  EXPECT_NE(partial.reason.find("arc mismatch"), std::string::npos);

  std::vector<Permutation> short_list(gi.elements.begin(), gi.elements.begin() + 3);
  auto const mismatch = verify_coset_model(gi.digraph, short_list, *gi.coset_action, reps);
  EXPECT_FALSE(mismatch.isomorphic);
}
