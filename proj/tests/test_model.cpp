#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace {

using namespace dualfilter;
using fixtures::edge_set;

std::string data_file(const std::string& name) { return std::string(DUALFILTER_DATA_DIR) + "/" + name; }

TEST(Model, EdgesOfVariable) {
  const auto inst = fixtures::filtering_alldiff();
  EXPECT_EQ(edges_of_variable(inst, 1), edge_set({{1, 0}, {1, 1}, {1, 2}}));
  EXPECT_THROW(edges_of_variable(inst, 3), std::invalid_argument);
}

TEST(Model, PathVariablesExcludeSink) {
  const auto inst = fixtures::filtering_path();
  EXPECT_EQ(inst.variables(), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(edges_of_variable(inst, 0), edge_set({{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_THROW(edges_of_variable(inst, 5), std::invalid_argument);
}

TEST(Model, EdgeLookup) {
  const auto inst = fixtures::filtering_alldiff();
  EXPECT_EQ(inst.edge_index({1, 2}), 4u);
  EXPECT_EQ(inst.cost({2, 1}), 2);
  EXPECT_FALSE(inst.find_edge({2, 0}));
  EXPECT_THROW(inst.edge_index({2, 0}), std::invalid_argument);
}

TEST(Validate, WorkedInstancesAreValid) {
  EXPECT_TRUE(validate(fixtures::filtering_alldiff()).empty());
  EXPECT_TRUE(validate(fixtures::filtering_path()).empty());
  EXPECT_TRUE(validate(fixtures::certificate_alldiff()).empty());
  EXPECT_TRUE(validate(fixtures::certificate_path()).empty());
}

TEST(Validate, NoSupportIsOneViolation) {
  const auto inst = fixtures::alldiff(2, {0, 1}, {{0, 0, 0}, {1, 0, 0}}, 0);
  const auto v = validate(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v.front().find("no support"), std::string::npos);
  EXPECT_THROW(require_valid(inst), InvalidInstance);
}

TEST(Validate, EdgeOnNoSupport) {
  // X0 = 0 forces X1 = 1 and X2 = 2.
  const auto inst = fixtures::alldiff(3, {0, 1, 2},
                                      {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {2, 0, 0}, {2, 1, 0}, {2, 2, 0}}, 0);
  const auto v = validate(inst);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_NE(v[0].find("(1,0)"), std::string::npos);
  EXPECT_NE(v[1].find("(2,0)"), std::string::npos);
  EXPECT_NE(v[2].find("(2,1)"), std::string::npos);
}

TEST(Validate, StructuralErrors) {
  auto inst = fixtures::filtering_alldiff();
  inst.costs[0] = -1;
  EXPECT_FALSE(validate(inst).empty());

  inst = fixtures::filtering_alldiff();
  inst.edges.push_back({0, 0});
  inst.costs.push_back(0);
  EXPECT_FALSE(validate(inst).empty());

  inst = fixtures::filtering_alldiff();
  inst.costs.pop_back();
  EXPECT_FALSE(validate(inst).empty());

  inst = fixtures::filtering_alldiff();
  inst.edges[0] = {0, 9};
  EXPECT_FALSE(validate(inst).empty());

  inst = fixtures::filtering_alldiff();
  inst.z_max = -1;
  EXPECT_FALSE(validate(inst).empty());
}

TEST(Validate, PathErrors) {
  auto cyc = fixtures::dag(3, {{0, 1, 0}, {1, 2, 0}, {1, 1, 0}}, 0);
  EXPECT_FALSE(validate(cyc).empty());
  auto loop = fixtures::dag(4, {{0, 1, 0}, {1, 2, 0}, {2, 1, 0}, {2, 3, 0}}, 0);
  EXPECT_FALSE(validate(loop).empty());
  auto meta = fixtures::filtering_path();
  meta.path.reset();
  EXPECT_FALSE(validate(meta).empty());
  auto dead = fixtures::dag(4, {{0, 1, 0}, {1, 3, 0}, {0, 2, 0}}, 0);  // (0,2) reaches no sink
  EXPECT_EQ(validate(dead).size(), 1u);
}

TEST(Support, MatchingRespectsForcedEdge) {
  const auto inst = fixtures::certificate_alldiff();
  const auto s = find_support(inst, inst.edges, EdgeId{1, 0});
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->contains({1, 0}));
  EXPECT_EQ(s->edges.size(), 3u);
  EXPECT_EQ(s->cost, support_cost(inst, s->edges));
}

TEST(Support, PathSearch) {
  const auto inst = fixtures::filtering_path();
  const auto s = find_support(inst, inst.edges, EdgeId{3, 4});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->edges, edge_set({{0, 3}, {3, 4}, {4, 5}}));
  EXPECT_EQ(s->cost, 2);
  const auto none = find_support(inst, edge_set({{0, 1}, {3, 4}, {4, 5}}));
  EXPECT_FALSE(none);
}

TEST(Support, RequiredValues) {
  // Two variables, three values: requiring value 2 forces a variable onto it.
  const auto inst = fixtures::alldiff(2, {0, 1, 2}, {{0, 0, 0}, {0, 2, 1}, {1, 1, 0}, {1, 2, 1}}, 1);
  const std::vector<int> required{2};
  const auto s = find_support(inst, inst.edges, std::nullopt, required);
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->contains({0, 2}) || s->contains({1, 2}));
}

TEST(Support, ForcedEdgeMustBeAllowed) {
  const auto inst = fixtures::certificate_alldiff();
  EXPECT_THROW(find_support(inst, edge_set({{0, 0}}), EdgeId{1, 0}), std::invalid_argument);
}

TEST(Io, RoundTrip) {
  for (const auto& inst : {fixtures::filtering_alldiff(), fixtures::filtering_path()}) {
    const auto text = io::write_instance(inst);
    EXPECT_EQ(io::read_instance(text), inst);
    EXPECT_EQ(io::write_instance(io::read_instance(text)), text);
  }
}

TEST(Io, DataFilesMatchFixtures) {
  EXPECT_EQ(io::load_instance(data_file("filtering_alldiff.json")), fixtures::filtering_alldiff());
  EXPECT_EQ(io::load_instance(data_file("filtering_path.json")), fixtures::filtering_path());
  EXPECT_EQ(io::load_instance(data_file("certificate_alldiff.json")), fixtures::certificate_alldiff());
  EXPECT_EQ(io::load_instance(data_file("certificate_path.json")), fixtures::certificate_path());
  EXPECT_EQ(io::load_instance(data_file("layers_path.json")), fixtures::layers_path());
  EXPECT_EQ(io::load_instance(data_file("worst_case_4.json")), worst_case_alldiff(4).instance);
}

TEST(Io, DataFilesAreCanonical) {
  for (const char* name : {"filtering_alldiff.json", "filtering_path.json", "certificate_alldiff.json",
                           "certificate_path.json", "layers_path.json", "worst_case_4.json"}) {
    std::ifstream in(data_file(name));
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(io::write_instance(io::read_instance(buf.str())), buf.str()) << name;
  }
}

TEST(Io, ParseErrors) {
  EXPECT_THROW(io::read_instance("{"), ParseError);
  EXPECT_THROW(io::read_instance(R"({"kind":"tree","n_vars":1,"values":[0],"edges":[],"z_max":0})"),
               ParseError);
  EXPECT_THROW(io::read_instance(R"({"kind":"alldiff","n_vars":1,"values":[0],"edges":[[0,0]],"z_max":0})"),
               ParseError);
  EXPECT_THROW(io::load_instance("/nonexistent/instance.json"), ParseError);
}

}  // namespace
