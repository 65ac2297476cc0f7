#include "doctest.h"

#include "divl1/io.hpp"
#include "divl1/random.hpp"

using namespace divl1;

TEST_CASE("instance round-trip with a metric-backed diversity") {
  Instance inst = gen_instance("euclidean-points", {.n = 5, .dim = 3}, 7);
  const Json j = instance_to_json(inst);
  const Instance back = instance_from_json(j);
  CHECK(back.n == 5);
  REQUIRE(back.metric.has_value());
  CHECK(back.metric->isApprox(*inst.metric));
  const auto delta = instance_oracle(back);
  CHECK(delta.kind() == "diameter");
}

TEST_CASE("generation is deterministic under the seed") {
  const Instance a = gen_instance("euclidean-points", {.n = 16, .dim = 3}, 7);
  const Instance b = gen_instance("euclidean-points", {.n = 16, .dim = 3}, 7);
  CHECK(a.points.value() == b.points.value());
  const Instance c = gen_instance("euclidean-points", {.n = 16, .dim = 3}, 8);
  CHECK(a.points.value() != c.points.value());
}

TEST_CASE("discrete generator yields the discrete diversity") {
  const Instance inst = gen_instance("discrete", {.n = 8}, 0);
  const auto delta = instance_oracle(inst);
  CHECK(delta.kind() == "discrete");
  CHECK(delta(full_mask(8)) == 1.0);
}

TEST_CASE("random hypergraph generator respects its parameters") {
  const Instance inst = gen_instance("hypergraph-random", {.n = 6, .edges = 8, .max_size = 3}, 3);
  const auto h = instance_hypergraph(inst);
  CHECK(h.n == 6);
  CHECK(h.edges.size() == 8);
  CHECK(h.max_edge_size() <= 3);
  CHECK_NOTHROW(validate_hypergraph(h));
}

TEST_CASE("embedding JSON round-trip") {
  const auto d = points_metric(random_points(6, 2, 4), 2);
  const auto emb = frt_embed(d, 4, 99);
  const auto back = embedding_from_json(embedding_to_json(emb));
  CHECK(back.coords == emb.coords);
  CHECK(back.method == "frt");
  CHECK(back.seed == emb.seed);
}

TEST_CASE("tree JSON round-trip preserves diversity values") {
  const auto t = random_tree(8, 6, 12);
  const auto back = tree_from_json(tree_to_json(t));
  for (Mask a = 0; a <= full_mask(6); ++a) {
    CHECK(tree_diversity(back, a) == tree_diversity(t, a));
  }
}

TEST_CASE("diversity table JSON keys singletons as implied zeros") {
  const auto rho = make_discrete_oracle(3);
  std::vector<double> values(8, 0.0);
  for (Mask a = 0; a < 8; ++a) values[a] = rho(a);
  const Json j = table_to_json(3, values);
  CHECK(j["values"].size() == 4);  // three pairs and the full set
  CHECK(j["values"].contains("0,1"));
  CHECK(j["values"].contains("0,1,2"));
  int n = 0;
  const auto back = table_from_json(j, n);
  CHECK(n == 3);
  CHECK(back == values);
}

TEST_CASE("table-backed instance oracle") {
  Json j;
  j["n"] = 3;
  j["diversity"] = {{"kind", "table"},
                    {"values", {{"0,1", 1.0}, {"0,2", 1.0}, {"1,2", 1.0}, {"0,1,2", 1.5}}}};
  const auto delta = instance_oracle(instance_from_json(j));
  CHECK(delta(0b011) == 1.0);
  CHECK(delta(0b111) == 1.5);
  CHECK(delta(0b001) == 0.0);
}

TEST_CASE("combination instance oracle") {
  Json j;
  j["n"] = 4;
  j["diversity"] = {
      {"kind", "combination"},
      {"weights", {0.5, 0.5}},
      {"parts",
       {{{"kind", "partition"}, {"blocks", {{0, 1}, {2, 3}}}},
        {{"kind", "discrete"}}}}};
  const auto delta = instance_oracle(instance_from_json(j));
  CHECK(delta(0b0011) == doctest::Approx(0.5));  // inside one block
  CHECK(delta(0b0101) == doctest::Approx(1.0));
}

TEST_CASE("distortion report JSON uses an unbounded sentinel, not infinity") {
  DistortionReport r;
  r.unbounded = true;
  r.mode = "exact";
  const Json j = report_to_json(r);
  CHECK(j["c"] == "unbounded");
  DistortionReport ok;
  ok.c1 = 0.5;
  ok.c2 = 3.0;
  ok.c = 1.5;
  ok.mode = "exact";
  const Json j2 = report_to_json(ok);
  CHECK(j2["c"].get<double>() == 1.5);
}

TEST_CASE("file round-trip") {
  const auto path = std::filesystem::temp_directory_path() / "divl1_io_test.json";
  const Instance inst = gen_instance("path", {.n = 5}, 0);
  save_json(path, instance_to_json(inst));
  const auto back = instance_from_json(load_json(path));
  CHECK(back.n == 5);
  std::filesystem::remove(path);
  CHECK_THROWS(load_json(path));
}
