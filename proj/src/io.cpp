#include "divl1/io.hpp"

#include "divl1/random.hpp"

#include <fstream>
#include <sstream>

namespace divl1 {

namespace {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("expected a nonempty matrix");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.front().size());
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw ValidationError("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(i, c) = j[i][c].get<double>();
  }
  return m;
}

std::string mask_key(Mask a) {
  std::ostringstream out;
  bool first = true;
  for (int i : mask_to_indices(a)) {
    if (!first) out << ",";
    out << i;
    first = false;
  }
  return out.str();
}

Mask key_mask(const std::string& key, int n) {
  std::vector<int> idx;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) idx.push_back(std::stoi(part));
  return indices_to_mask(idx, n);
}

}  // namespace

Json instance_to_json(const Instance& inst) {
  Json j;
  j["n"] = inst.n;
  if (!inst.labels.empty()) j["labels"] = inst.labels;
  if (inst.metric) j["metric"] = matrix_to_json(*inst.metric);
  if (inst.points) j["points"] = matrix_to_json(*inst.points);
  j["diversity"] = inst.diversity;
  return j;
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.n = j.at("n").get<int>();
  if (j.contains("labels")) inst.labels = j["labels"].get<std::vector<std::string>>();
  if (j.contains("metric")) inst.metric = matrix_from_json(j["metric"]);
  if (j.contains("points")) inst.points = matrix_from_json(j["points"]);
  inst.diversity = j.at("diversity");
  if (!inst.diversity.contains("kind")) throw ValidationError("diversity object needs a kind");
  return inst;
}

FiniteMetric instance_metric(const Instance& inst) {
  if (inst.metric) return validate_metric(*inst.metric);
  if (inst.points) return points_metric(*inst.points, 2);
  return induced_metric(instance_oracle(inst));
}

WeightedHypergraph instance_hypergraph(const Instance& inst) {
  if (inst.diversity.at("kind").get<std::string>() != "hypergraph") {
    throw ValidationError("instance diversity is not hypergraph-backed");
  }
  Json h;
  h["n"] = inst.n;
  h["edges"] = inst.diversity.at("edges");
  return hypergraph_from_json(h);
}

WeightedTree instance_tree(const Instance& inst) {
  if (inst.diversity.at("kind").get<std::string>() != "tree") {
    throw ValidationError("instance diversity is not tree-backed");
  }
  return tree_from_json(inst.diversity.at("tree"));
}

DiversityOracle instance_oracle(const Instance& inst) {
  const auto kind = inst.diversity.at("kind").get<std::string>();
  if (kind == "discrete") return make_discrete_oracle(inst.n);
  if (kind == "cardinality") return make_cardinality_oracle(inst.n);
  if (kind == "diameter") return make_diameter_oracle(instance_metric(inst));
  if (kind == "steiner") return make_steiner_oracle(instance_metric(inst));
  if (kind == "ball") return make_ball_oracle(instance_metric(inst));
  if (kind == "tsp") return make_tsp_oracle(instance_metric(inst));
  if (kind == "hypergraph") return make_hypergraph_oracle(instance_hypergraph(inst));
  if (kind == "tree") return make_tree_oracle(instance_tree(inst), inst.n);
  if (kind == "partition") {
    return make_partition_oracle(partition_from_json(inst.diversity, inst.n));
  }
  if (kind == "symmetric") {
    return make_symmetric_oracle(
        make_symmetric_profile(inst.diversity.at("f").get<std::vector<double>>()));
  }
  if (kind == "l1") {
    if (!inst.points) throw ValidationError("l1 diversity needs a points field");
    return make_l1_oracle(*inst.points);
  }
  if (kind == "table") {
    int n = inst.n;
    Json t;
    t["n"] = inst.n;
    t["values"] = inst.diversity.at("values");
    return make_table_oracle(inst.n, table_from_json(t, n));
  }
  if (kind == "combination") {
    std::vector<double> weights = inst.diversity.at("weights").get<std::vector<double>>();
    std::vector<DiversityOracle> parts;
    for (const auto& part : inst.diversity.at("parts")) {
      Instance sub = inst;
      sub.diversity = part;
      parts.push_back(instance_oracle(sub));
    }
    return combine(weights, parts);
  }
  throw ValidationError("unknown diversity kind: " + kind);
}

Json embedding_to_json(const PointEmbedding& emb) {
  Json j;
  j["n"] = emb.n;
  j["k"] = emb.k;
  j["coords"] = matrix_to_json(emb.coords);
  j["method"] = emb.method;
  if (emb.seed) j["seed"] = *emb.seed;
  return j;
}

PointEmbedding embedding_from_json(const Json& j) {
  PointEmbedding emb;
  emb.n = j.at("n").get<int>();
  emb.k = j.at("k").get<int>();
  emb.coords = matrix_from_json(j.at("coords"));
  emb.method = j.value("method", "unknown");
  if (j.contains("seed")) emb.seed = j["seed"].get<std::uint64_t>();
  if (emb.coords.rows() != emb.n || emb.coords.cols() != emb.k) {
    throw ValidationError("embedding coords shape disagrees with n, k");
  }
  if (!emb.coords.allFinite()) throw ValidationError("embedding has non-finite coordinates");
  return emb;
}

Json tree_to_json(const WeightedTree& t) {
  Json j;
  j["vertices"] = t.vertex_count;
  Json edges = Json::array();
  for (const auto& e : t.edges) edges.push_back(Json::array({e.u, e.v, e.weight}));
  j["edges"] = std::move(edges);
  j["placement"] = t.placement;
  return j;
}

WeightedTree tree_from_json(const Json& j) {
  WeightedTree t;
  t.vertex_count = j.at("vertices").get<int>();
  for (const auto& e : j.at("edges")) {
    t.edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
  }
  t.placement = j.at("placement").get<std::vector<int>>();
  validate_tree(t);
  return t;
}

Json hypergraph_to_json(const WeightedHypergraph& h) {
  Json j;
  j["n"] = h.n;
  Json edges = Json::array();
  for (const auto& e : h.edges) {
    Json edge;
    edge["vertices"] = e.vertices;
    edge["weight"] = e.weight;
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  return j;
}

WeightedHypergraph hypergraph_from_json(const Json& j) {
  WeightedHypergraph h;
  h.n = j.at("n").get<int>();
  for (const auto& e : j.at("edges")) {
    h.edges.push_back({e.at("vertices").get<std::vector<int>>(), e.at("weight").get<double>()});
  }
  validate_hypergraph(h);
  return h;
}

Json partition_to_json(const Partition& p) {
  Json j;
  j["blocks"] = p.blocks;
  return j;
}

Partition partition_from_json(const Json& j, int n) {
  return make_partition(j.at("blocks").get<std::vector<std::vector<int>>>(), n);
}

Json report_to_json(const DistortionReport& r) {
  Json j;
  if (r.unbounded) {
    j["c"] = "unbounded";
  } else {
    j["c1"] = r.c1;
    j["c2"] = r.c2;
    j["c"] = r.c;
  }
  j["witness_min"] = mask_to_indices(r.witness_min);
  j["witness_max"] = mask_to_indices(r.witness_max);
  j["mode"] = r.mode;
  j["subsets_scanned"] = r.subsets_scanned;
  if (r.seed) j["seed"] = *r.seed;
  if (r.sample_count) j["samples"] = *r.sample_count;
  return j;
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json j;
  j["passed"] = r.passed;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json item;
    item["axiom"] = v.axiom;
    item["A"] = mask_to_indices(v.a);
    item["B"] = mask_to_indices(v.b);
    item["C"] = mask_to_indices(v.c);
    item["lhs"] = v.lhs;
    item["rhs"] = v.rhs;
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  j["monotone"] = r.monotone;
  if (!r.monotone) {
    j["monotone_witness"] = {{"A", mask_to_indices(r.monotone_witness_a)},
                             {"B", mask_to_indices(r.monotone_witness_b)}};
  }
  return j;
}

Json table_to_json(int n, const std::vector<double>& values) {
  Json j;
  j["n"] = n;
  Json table = Json::object();
  const Mask full = full_mask(n);
  for (Mask a = 0; a <= full; ++a) {
    if (mask_cardinality(a) < 2) continue;
    table[mask_key(a)] = values[a];
  }
  j["values"] = std::move(table);
  return j;
}

std::vector<double> table_from_json(const Json& j, int& n_out) {
  n_out = j.at("n").get<int>();
  if (n_out > 24) throw CapError("diversity tables capped at n <= 24");
  std::vector<double> values(static_cast<std::size_t>(full_mask(n_out)) + 1, 0.0);
  for (const auto& [key, value] : j.at("values").items()) {
    values[key_mask(key, n_out)] = value.get<double>();
  }
  return values;
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  Json j;
  in >> j;
  return j;
}

void save_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open " + path.string());
  out << j.dump(2) << "\n";
  if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

Instance gen_instance(const std::string& kind, const GenParams& params, std::uint64_t seed) {
  Instance inst;
  inst.n = params.n;
  if (kind == "euclidean-points" || kind == "l1-points") {
    const Matrix pts = random_points(params.n, params.dim, seed);
    inst.points = pts;
    inst.metric = points_metric(pts, kind == "l1-points" ? 1 : 2).dist;
    inst.diversity = {{"kind", kind == "l1-points" ? "l1" : "diameter"}};
  } else if (kind == "random-graph-shortest-path") {
    inst.metric = random_graph_metric(params.n, 0.3, seed).dist;
    inst.diversity = {{"kind", "steiner"}};
  } else if (kind == "discrete") {
    inst.metric = discrete_metric(params.n).dist;
    inst.diversity = {{"kind", "discrete"}};
  } else if (kind == "path") {
    inst.metric = path_metric(params.n).dist;
    inst.diversity = {{"kind", "diameter"}};
  } else if (kind == "star") {
    inst.metric = star_metric(params.n).dist;
    inst.diversity = {{"kind", "diameter"}};
  } else if (kind == "hypergraph-random") {
    const auto h = random_hypergraph(params.n, params.edges, params.max_size, seed);
    inst.diversity = {{"kind", "hypergraph"}, {"edges", hypergraph_to_json(h)["edges"]}};
  } else if (kind == "partition-random") {
    const auto p = random_partition(params.n, seed);
    inst.diversity = {{"kind", "partition"}, {"blocks", p.blocks}};
  } else {
    throw ValidationError("unknown generator kind: " + kind);
  }
  return inst;
}

}  // namespace divl1
