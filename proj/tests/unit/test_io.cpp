#include <algorithm>

#include "doctest.h"
#include "ksforge/errors.hpp"
#include "ksforge/io.hpp"
#include "ksforge/properties.hpp"

using namespace ksf;
using nlohmann::json;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("cyclotomic JSON") {
    Rng rng(81);
    for (int t = 0; t < 100; ++t) {
      const CycloNum z = random_cyclo(rng);
      CHECK(io::cyclo_from_json(io::to_json(z)) == z);
      CHECK(io::cyclo_from_json(json::parse(io::to_json(z).dump())) == z);
    }
    CycloNum big(1);
    for (int k = 0; k < 10; ++k) big *= CycloNum(1000000007);
    const json j = io::to_json(big);
    CHECK(j["c"][0].is_string());
    CHECK(io::cyclo_from_json(j) == big);
    CHECK(io::cyclo_from_json(json(3)) == CycloNum(3));
    CHECK(io::cyclo_from_json(json("1 + w")) == parse_cyclo("1+w"));
    CHECK_THROWS_AS(io::cyclo_from_json(json::array()), InvalidInput);
    CHECK_THROWS_AS(io::cyclo_from_json(json{{"c", {1, 2}}, {"d", 1}}), InvalidInput);
  }

  TEST_CASE("atlas round-trip") {
    const std::vector<int> one = {1, 4};
    const RayAtlas a = generate_atlas(one);
    const RayAtlas b = io::atlas_from_json(json::parse(io::to_json(a).dump()));
    REQUIRE(b.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(b.rays[i].canon == a.rays[i].canon);
      CHECK(b.rays[i].label == a.rays[i].label);
    }
    CHECK(b.origin == a.origin);
    CHECK(b.log == a.log);
    CHECK(b.seeds == a.seeds);
  }

  TEST_CASE("hypergraph round-trip") {
    const std::vector<int> one = {1};
    const auto h = atlas_hypergraph(generate_atlas(one));
    const auto back = io::hypergraph_from_json(json::parse(io::to_json(h).dump()));
    CHECK(back == h);
    CHECK(back.vectors == h.vectors);
    CHECK(back.labels == h.labels);
    const auto b10 = fixture_b10();
    CHECK(io::hypergraph_from_json(io::to_json(b10)) == b10);
  }

  TEST_CASE("states round-trip") {
    const StateSet s = enumerate_states(fixture_b10());
    const json j = io::to_json(s);
    CHECK(j["count"] == 36);
    CHECK(j["separating"] == true);
    const StateSet back = io::states_from_json(json::parse(j.dump()));
    CHECK(back.states == s.states);
    CHECK(back.vertices == s.vertices);
    CHECK_FALSE(io::to_json(s, false).contains("states"));
  }

  TEST_CASE("bad hypergraph input") {
    CHECK_THROWS_AS(io::hypergraph_from_json(json::parse(R"({"dimension":3,"vertices":[1,2],"edges":[[1,2]]})")),
                    InvalidInput);
    CHECK_THROWS_AS(io::hypergraph_from_json(json::parse(R"({"vertices":[1,2,3]})")), InvalidInput);
    CHECK_THROWS_AS(io::hypergraph_from_json(json::parse(R"({"dimension":3,"vertices":[1,2,3],"edges":[[1,2,4]]})")),
                    InvalidInput);
    CHECK_THROWS_AS(io::hypergraph_from_json(json::parse(
                        R"({"dimension":3,"vertices":[1,2,3],"edges":[[1,2,3]],
                            "vectors":{"1":["1","0","0"],"2":["1","1","0"],"3":["0","0","1"]}})")),
                    InvalidInput);
  }

  TEST_CASE("DOT export") {
    const auto h = ContextHypergraph::make(3, {1, 2, 3}, {{1, 2, 3}});
    const std::string dot = io::to_dot(h, io::DotStyle::Clique);
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(count_of(dot, " -- ") == 3);
    CHECK(count_of(dot, "label=") == 3);
    CHECK(count_of(io::to_dot(h, io::DotStyle::Chain), " -- ") == 2);

    const std::vector<int> one = {1};
    const auto yo = atlas_hypergraph(generate_atlas(one));
    const std::string ydot = io::to_dot(yo, io::DotStyle::Clique);
    CHECK(count_of(ydot, "label=") == 25);
    CHECK(count_of(ydot, " -- ") == 48);
  }

  TEST_CASE("vector JSON") {
    const CycloVector v = parse_vector("(1,w,-i/2)");
    CHECK(io::vector_from_json(io::to_json(v)) == v);
    CHECK(io::vector_from_json(json("(1,w,-i/2)")) == v);
  }
}
