#pragma once

#include "divl1/distortion.hpp"
#include "divl1/embed.hpp"
#include "divl1/families.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

namespace divl1 {

using Json = nlohmann::json;

/// On-disk problem instance: { "n", "labels"?, "metric"?, "points"?,
/// "diversity": { "kind", ... } }.
struct Instance {
  int n = 0;
  std::vector<std::string> labels;
  std::optional<Matrix> metric;
  std::optional<Matrix> points;
  Json diversity;  // { "kind": str, ...kind-specific params }
};

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

/// Builds the oracle described by the instance's diversity object.
DiversityOracle instance_oracle(const Instance& inst);

/// The metric an embedding method should run on: the explicit "metric"
/// field when present, otherwise the oracle's induced metric.
FiniteMetric instance_metric(const Instance& inst);

WeightedHypergraph instance_hypergraph(const Instance& inst);
WeightedTree instance_tree(const Instance& inst);

Json embedding_to_json(const PointEmbedding& emb);
PointEmbedding embedding_from_json(const Json& j);

Json tree_to_json(const WeightedTree& t);
WeightedTree tree_from_json(const Json& j);

Json hypergraph_to_json(const WeightedHypergraph& h);
WeightedHypergraph hypergraph_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j, int n);

Json report_to_json(const DistortionReport& r);

Json axiom_report_to_json(const AxiomReport& r);

/// Diversity-table JSON { "n", "values": { "<sorted indices>": v } };
/// the empty set and singletons are implied zero.
Json table_to_json(int n, const std::vector<double>& values);
std::vector<double> table_from_json(const Json& j, int& n_out);

Json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& j);

/// Deterministic instance generation for the CLI and the bench harness.
struct GenParams {
  int n = 8;
  int dim = 2;
  int edges = 8;
  int max_size = 3;
};

Instance gen_instance(const std::string& kind, const GenParams& params, std::uint64_t seed);

}  // namespace divl1
