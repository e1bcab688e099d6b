#include <random>
#include <set>

#include <gtest/gtest.h>

#include "domcycle/families.hpp"
#include "domcycle/segments.hpp"

using namespace domcycle;

namespace {

Branch k_branch(int order) { return Branch{named::complete(order), 0, 1, std::nullopt}; }

FamilySpec minimal_r1() { return {FamilyClass::R1, {k_branch(4), k_branch(4), k_branch(4)}, 3, {}}; }
FamilySpec base_r2() { return {FamilyClass::R2, {k_branch(4), k_branch(4), k_branch(4)}, 3, {}}; }
FamilySpec base_r3() { return {FamilyClass::R3, {k_branch(5), k_branch(5), k_branch(5)}, 4, {}}; }
FamilySpec base_r4() {
  Branch b{named::complete(5), 0, 1, 2};
  return {FamilyClass::R4, {b, b, b, b}, 4, {}};
}

bool has_class(const MembershipVerdict& v, FamilyClass c) {
  return std::find(v.classes.begin(), v.classes.end(), c) != v.classes.end();
}

}  // namespace

TEST(BuildFamily, MinimalR1) {
  auto inst = build_family(minimal_r1());
  EXPECT_EQ(inst.graph.order(), 10);
  EXPECT_EQ(min_degree(inst.graph), 3);
  EXPECT_EQ(inst.graph.degree(0), 9);
  ASSERT_EQ(inst.vertex_map.size(), 3u);
  // The three y vertices form a triangle.
  const Vertex y1 = inst.vertex_map[0][1], y2 = inst.vertex_map[1][1], y3 = inst.vertex_map[2][1];
  EXPECT_TRUE(inst.graph.adjacent(y1, y2) && inst.graph.adjacent(y2, y3) && inst.graph.adjacent(y1, y3));
}

TEST(BuildFamily, MinimalR2R3R4Orders) {
  auto r2 = build_family(base_r2());
  EXPECT_EQ(r2.graph.order(), 11);
  EXPECT_EQ(min_degree(r2.graph), 3);
  ASSERT_TRUE(r2.z);
  EXPECT_EQ(r2.graph.degree(*r2.z), 3);
  auto r3 = build_family(base_r3());
  EXPECT_EQ(r3.graph.order(), 14);
  EXPECT_TRUE(r3.graph.adjacent(*r3.z, 0));
  auto r4 = build_family(base_r4());
  EXPECT_EQ(r4.graph.order(), 14);
  EXPECT_EQ(min_degree(r4.graph), 4);
}

TEST(BuildFamily, Errors) {
  FamilySpec s = minimal_r1();
  s.branches[0] = k_branch(5);
  EXPECT_THROW(build_family(s), FamilyError);  // H1 must have d + 1 vertices

  s = minimal_r1();
  s.branches[2] = k_branch(6);
  EXPECT_THROW(build_family(s), FamilyError);  // H3 at most d + 2

  s = minimal_r1();
  s.branches[1].y = 0;
  EXPECT_THROW(build_family(s), FamilyError);  // marks coincide

  s = minimal_r1();
  s.branches[1].graph = from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_THROW(build_family(s), FamilyError);  // disconnected branch

  s = minimal_r1();
  s.branches[0].graph = from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}});
  EXPECT_THROW(build_family(s), FamilyError);  // vertex 3 has degree 2

  s = minimal_r1();
  s.d = 4;
  EXPECT_THROW(build_family(s), FamilyError);

  s = base_r3();
  s.optional.zx1 = true;
  EXPECT_THROW(build_family(s), FamilyError);

  s = base_r4();
  s.branches[3].z.reset();
  EXPECT_THROW(build_family(s), FamilyError);

  s = base_r2();
  s.branches.pop_back();
  EXPECT_THROW(build_family(s), FamilyError);
}

TEST(EnumerateFamily, EmptyBelowMinimumOrder) {
  EXPECT_TRUE(enumerate_family(FamilyClass::R1, 9).empty());
  EXPECT_TRUE(enumerate_family(FamilyClass::R2, 10).empty());
  EXPECT_TRUE(enumerate_family(FamilyClass::R3, 13).empty());
  EXPECT_TRUE(enumerate_family(FamilyClass::R4, 13).empty());
  EXPECT_THROW(enumerate_family(FamilyClass::R1, 21), PreconditionError);
}

TEST(EnumerateFamily, R1AtTen) {
  auto members = enumerate_family(FamilyClass::R1, 10, 3);
  // K4 branches with or without the x-y edge: 0..3 branches lack it.
  ASSERT_EQ(members.size(), 4u);
  for (const auto& m : members) {
    EXPECT_EQ(m.graph.order(), 10);
    EXPECT_EQ(min_degree(m.graph), 3);
  }
  EXPECT_TRUE(enumerate_family(FamilyClass::R1, 12, 4).empty());
}

TEST(EnumerateFamily, NoIsomorphicDuplicatesAndMembership) {
  for (FamilyClass cls : kAllFamilies) {
    std::set<CanonicalForm> forms;
    for (const auto& m : enumerate_family(cls, 14)) {
      EXPECT_TRUE(forms.insert(canonical_form(m.graph)).second);
      EXPECT_EQ(build_family(m.spec).graph, m.graph);
      const int n = m.graph.order();
      EXPECT_GE(3 * min_degree(m.graph), n - 2);
      auto v = is_member(m.graph);
      ASSERT_TRUE(has_class(v, cls)) << to_string(cls) << " " << to_graph6(m.graph);
      for (const auto& w : v.witnesses) EXPECT_TRUE(isomorphic(build_family(w).graph, m.graph));
    }
  }
}

TEST(IsMember, NonMembers) {
  EXPECT_FALSE(is_member(named::petersen()).member);
  EXPECT_FALSE(is_member(named::complete(4)).member);
  EXPECT_FALSE(is_member(named::cycle(12)).member);
  EXPECT_THROW(is_member(named::cycle(21)), PreconditionError);
}

TEST(IsMember, AgreesWithEnumerationOnPerturbedMembers) {
  std::set<CanonicalForm> index;
  std::vector<Graph> members;
  for (FamilyClass cls : kAllFamilies)
    for (const auto& m : enumerate_family(cls, 14)) {
      index.insert(canonical_form(m.graph));
      members.push_back(m.graph);
    }
  std::mt19937_64 rng(4);
  int positives = 0;
  for (int i = 0; i < 400; ++i) {
    const Graph& base = members[rng() % members.size()];
    const int n = base.order();
    GraphBuilder b(n);
    for (const auto& [u, v] : base.edges()) b.add_edge(u, v);
    const auto u = static_cast<Vertex>(rng() % n), w = static_cast<Vertex>(rng() % n);
    if (u != w) {
      if (base.adjacent(u, w)) b.remove_edge(u, w);
      else b.add_edge(u, w);
    }
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph g = b.build().relabeled(perm);
    const bool indexed = index.count(canonical_form(g)) > 0;
    positives += indexed;
    EXPECT_EQ(is_member(g).member, indexed) << to_graph6(g);
  }
  EXPECT_GT(positives, 0);
}

TEST(IsMember, OverlapsAreReported) {
  int overlaps = 0;
  for (const auto& m : enumerate_family(FamilyClass::R2, 11)) overlaps += has_class(is_member(m.graph), FamilyClass::R1);
  EXPECT_GT(overlaps, 0);
}

TEST(CertifyMember, MinimalR1Anchor) {
  auto inst = build_family(minimal_r1());
  auto c = certify_member(inst);
  EXPECT_TRUE(c.certified) << c.diagnosis;
  EXPECT_EQ(c.connectivity, 2);
  EXPECT_EQ(c.toughness, Rational(1));
  EXPECT_EQ(c.circumference, 8);
  // Every longest cycle leaves an adjacent pair behind.
  for (const Cycle& cyc : all_longest_cycles(inst.graph)) {
    const VertexSet rest = inst.graph.vertices() - cyc.vertex_set();
    ASSERT_EQ(rest.size(), 2);
    EXPECT_TRUE(inst.graph.adjacent(rest.first(), rest.without(rest.first()).first()));
  }
}

TEST(CertifyMember, R2AndR4Anchors) {
  auto r2 = certify_member(build_family(base_r2()));
  EXPECT_TRUE(r2.certified) << r2.diagnosis;
  EXPECT_EQ(r2.order, 11);
  EXPECT_EQ(r2.circumference, 9);
  auto r4 = certify_member(build_family(base_r4()));
  EXPECT_TRUE(r4.certified) << r4.diagnosis;
  EXPECT_EQ(r4.order, 14);
  EXPECT_EQ(r4.circumference, 12);
}

TEST(CertifyMember, CutVertexR1MemberFailsCertification) {
  // H3 is x joined to y3 and to a triangle: x becomes a cut vertex.
  Graph h3 = from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 3}, {2, 4}, {3, 4}});
  FamilySpec s = minimal_r1();
  s.branches[2] = Branch{h3, 0, 1, std::nullopt};
  auto inst = build_family(s);
  auto c = certify_member(inst);
  EXPECT_FALSE(c.certified);
  EXPECT_EQ(c.connectivity, 1);
  EXPECT_EQ(c.toughness, Rational(1, 2));
  EXPECT_TRUE(c.all_longest_nondominating);
  EXPECT_TRUE(has_class(is_member(inst.graph), FamilyClass::R1));
}

namespace {

// Applicable Lemma 2 configurations of g and how many have some part tight.
std::pair<int, int> lemma2_profile(const Graph& g) {
  const int circ = circumference(g)->length;
  int applicable = 0, tight = 0;
  for (const Cycle& c : all_longest_cycles(g))
    for (const Path& p : all_longest_paths_in(g, g.vertices() - c.vertex_set())) {
      EXPECT_EQ(p.length(), 1);
      auto v = check_lemma2(g, c, p, circ);
      EXPECT_TRUE(v.holds());
      if (!v.applicable) continue;
      ++applicable;
      bool any = false;
      for (const LemmaVerdict* part : {&v.a1, &v.a2, &v.a3})
        any = any || (part->applicable && part->bound_observed == part->bound_required);
      tight += any;
    }
  return {applicable, tight};
}

}  // namespace

TEST(Families, R2Lemma2Instances) {
  auto [applicable, tight] = lemma2_profile(build_family(base_r2()).graph);
  EXPECT_EQ(applicable, 8);
  EXPECT_EQ(tight, 0);
  FamilySpec s = base_r2();
  s.optional.y1y3 = true;
  auto [applicable2, tight2] = lemma2_profile(build_family(s).graph);
  EXPECT_GT(applicable2, 0);
  EXPECT_GT(tight2, 0);
}

TEST(FamilySpecJson, RoundTrip) {
  for (FamilySpec s : {minimal_r1(), base_r2(), base_r4()}) {
    s.optional.y1y3 = s.cls == FamilyClass::R2;
    nlohmann::json j = s;
    EXPECT_EQ(j.at("class"), to_string(s.cls));
    EXPECT_EQ(j.get<FamilySpec>(), s);
  }
  EXPECT_THROW(parse_family_class("R5"), PreconditionError);
}
