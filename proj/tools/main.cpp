#include "CLI11.hpp"

#include "divl1/io.hpp"
#include "divl1/random.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace divl1;

void emit_json(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    save_json(out, j);
  }
}

void emit_text(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::ios_base::failure("cannot open " + out);
  f << text;
  if (!f) throw std::ios_base::failure("write failed for " + out);
}

DiversityOracle target_oracle(const Instance& inst, const std::string& target) {
  if (target.empty()) return instance_oracle(inst);
  if (target == "discrete") return make_discrete_oracle(inst.n);
  if (target == "cardinality") return make_cardinality_oracle(inst.n);
  const FiniteMetric d = instance_metric(inst);
  if (target == "diameter") return make_diameter_oracle(d);
  if (target == "steiner") return make_steiner_oracle(d);
  if (target == "ball") return make_ball_oracle(d);
  if (target == "tsp") return make_tsp_oracle(d);
  throw ValidationError("unknown target diversity: " + target);
}

PointEmbedding build_embedding(const Instance& inst, const std::string& method, int m,
                               int scales, int q, std::uint64_t seed) {
  if (method == "coordinate") return coordinate_embed(instance_oracle(inst));
  if (method == "frt") return frt_embed(instance_metric(inst), m, seed);
  if (method == "bourgain") {
    return bourgain_embed_metric(instance_metric(inst),
                                 {.scales = scales, .samples_per_scale = q, .seed = seed});
  }
  if (method == "tree") return tree_to_l1(instance_tree(inst));
  if (method == "hypergraph-reduce-then-frt") {
    const auto red = hypergraph_to_graph(instance_hypergraph(inst));
    auto emb = frt_embed(red.metric, m, seed);
    emb.method = "hypergraph-reduce-then-frt";
    return emb;
  }
  throw ValidationError("unknown embedding method: " + method);
}

struct BenchRow {
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::optional<DistortionReport> report;  // empty: cap exceeded
  std::string error;
  double runtime_ms = 0.0;
};

struct BenchPlan {
  std::string family;
  std::string method;
  std::vector<int> sizes;
  int trials = 20;
  int m = 64;
  int scales = 0;
  int q = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
};

BenchRow bench_trial(const BenchPlan& plan, int n, int trial) {
  BenchRow row;
  row.n = n;
  row.trial = trial;
  row.seed = derive_seed(plan.seed, static_cast<std::uint64_t>(n) * 100000 + trial);
  const auto start = std::chrono::steady_clock::now();
  try {
    const FiniteMetric d = plan.family == "discrete"
                               ? discrete_metric(n)
                               : points_metric(random_points(n, 3, derive_seed(row.seed, 1)), 2);
    DiversityOracle delta = [&] {
      if (plan.family == "discrete") return make_discrete_oracle(n);
      if (plan.family == "diameter") return make_diameter_oracle(d);
      if (plan.family == "steiner") return make_steiner_oracle(d);
      if (plan.family == "ball") return make_ball_oracle(d);
      if (plan.family == "tsp") return make_tsp_oracle(d);
      throw ValidationError("unknown bench family: " + plan.family);
    }();
    PointEmbedding emb;
    if (plan.method == "coordinate") {
      emb = coordinate_embed(delta);
    } else if (plan.method == "frt") {
      emb = frt_embed(d, plan.m, derive_seed(row.seed, 2));
    } else if (plan.method == "bourgain") {
      emb = bourgain_embed_metric(
          d, {.scales = plan.scales, .samples_per_scale = plan.q, .seed = derive_seed(row.seed, 2)});
    } else {
      throw ValidationError("unknown bench method: " + plan.method);
    }
    row.report = n <= 16 ? exact_distortion(delta, emb)
                         : sampled_distortion(delta, emb, 20000, derive_seed(row.seed, 3));
  } catch (const CapError& e) {
    row.error = e.what();
  }
  row.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string bench_csv(const BenchPlan& plan, const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "family,method,n,trial,seed,c1,c2,c,runtime_ms\n";
  auto c_cell = [](const DistortionReport& r) {
    return r.unbounded ? std::string("unbounded") : std::to_string(r.c);
  };
  std::size_t i = 0;
  for (int n : plan.sizes) {
    double sum_c = 0.0, max_c = 0.0, total_ms = 0.0;
    int finite = 0;
    bool any_unbounded = false;
    for (int t = 0; t < plan.trials; ++t, ++i) {
      const BenchRow& row = rows[i];
      out << plan.family << "," << plan.method << "," << n << "," << t << "," << row.seed << ",";
      if (row.report) {
        if (row.report->unbounded) {
          any_unbounded = true;
          out << ",," << "unbounded";
        } else {
          sum_c += row.report->c;
          max_c = std::max(max_c, row.report->c);
          ++finite;
          out << row.report->c1 << "," << row.report->c2 << "," << c_cell(*row.report);
        }
      } else {
        out << ",,cap-exceeded";
      }
      out << "," << row.runtime_ms << "\n";
      total_ms += row.runtime_ms;
    }
    const std::string max_cell =
        any_unbounded ? "unbounded" : (finite > 0 ? std::to_string(max_c) : "");
    out << plan.family << "," << plan.method << "," << n << ",mean,,,,"
        << (finite > 0 ? std::to_string(sum_c / finite) : "") << "," << total_ms << "\n";
    out << plan.family << "," << plan.method << "," << n << ",max,,,," << max_cell << ","
        << total_ms << "\n";
  }
  return out.str();
}

Json bench_json(const BenchPlan& plan, const std::vector<BenchRow>& rows) {
  Json arr = Json::array();
  std::size_t i = 0;
  for (int n : plan.sizes) {
    for (int t = 0; t < plan.trials; ++t, ++i) {
      const BenchRow& row = rows[i];
      Json j;
      j["family"] = plan.family;
      j["method"] = plan.method;
      j["n"] = n;
      j["trial"] = t;
      j["seed"] = row.seed;
      j["runtime_ms"] = row.runtime_ms;
      if (row.report) {
        j["report"] = report_to_json(*row.report);
      } else {
        j["error"] = row.error;
      }
      arr.push_back(std::move(j));
    }
  }
  return arr;
}

int run(int argc, char** argv) {
  CLI::App app{"finite diversities, l1 embeddings, and exact distortion"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string gen_kind, gen_out;
  GenParams params;
  std::uint64_t gen_seed = 0;
  gen->add_option("kind", gen_kind,
                  "euclidean-points | l1-points | random-graph-shortest-path | discrete | "
                  "path | star | hypergraph-random | partition-random")
      ->required();
  gen->add_option("--n", params.n, "ground set size");
  gen->add_option("--dim", params.dim, "point dimension");
  gen->add_option("--edges", params.edges, "hyperedge count");
  gen->add_option("--max-size", params.max_size, "largest hyperedge size");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "check the diversity axioms of an instance");
  std::string check_path, check_out;
  check->add_option("instance", check_path, "instance JSON file")->required();
  check->add_option("--out", check_out, "output path (default stdout)");

  // embed
  auto* embed = app.add_subcommand("embed", "embed an instance into l1 coordinates");
  std::string embed_path, embed_method = "coordinate", embed_out;
  int embed_m = 64, embed_scales = 0, embed_q = 0;
  std::uint64_t embed_seed = 0;
  embed->add_option("instance", embed_path, "instance JSON file")->required();
  embed->add_option("--method", embed_method,
                    "coordinate | frt | bourgain | tree | hypergraph-reduce-then-frt");
  embed->add_option("--m", embed_m, "tree-ensemble size");
  embed->add_option("--scales", embed_scales, "set-size scales (0: default)");
  embed->add_option("--q", embed_q, "sets per scale (0: default)");
  embed->add_option("--seed", embed_seed, "random seed");
  embed->add_option("--out", embed_out, "output path (default stdout)");

  // distortion
  auto* dist = app.add_subcommand("distortion", "measure distortion of an embedding");
  std::string dist_instance, dist_embedding, dist_target, dist_out;
  std::uint64_t dist_samples = 0, dist_seed = 0;
  dist->add_option("instance", dist_instance, "instance JSON file")->required();
  dist->add_option("embedding", dist_embedding, "embedding JSON file")->required();
  dist->add_option("--samples", dist_samples, "sample count (0: exact scan)");
  dist->add_option("--seed", dist_seed, "sampling seed");
  dist->add_option("--target", dist_target,
                   "measure against this family on the instance metric instead of the "
                   "instance's own diversity");
  dist->add_option("--out", dist_out, "output path (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "distortion scaling benchmark");
  BenchPlan plan;
  std::string bench_out, bench_format = "csv";
  bench->add_option("--family", plan.family, "diameter | steiner | ball | tsp | discrete")
      ->required();
  bench->add_option("--method", plan.method, "coordinate | frt | bourgain")->required();
  bench->add_option("--n", plan.sizes, "ground set sizes")->required();
  bench->add_option("--trials", plan.trials, "trials per size")->check(CLI::PositiveNumber);
  bench->add_option("--m", plan.m, "tree-ensemble size");
  bench->add_option("--scales", plan.scales, "set-size scales (0: default)");
  bench->add_option("--q", plan.q, "sets per scale (0: default)");
  bench->add_option("--seed", plan.seed, "random seed");
  bench->add_option("--jobs", plan.jobs, "parallel trial workers")->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_out, "output path (default stdout)");
  bench->add_option("--format", bench_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    emit_json(instance_to_json(gen_instance(gen_kind, params, gen_seed)), gen_out);
    return 0;
  }
  if (check->parsed()) {
    const Instance inst = instance_from_json(load_json(check_path));
    const AxiomReport report = check_diversity_axioms(instance_oracle(inst));
    emit_json(axiom_report_to_json(report), check_out);
    return report.passed ? 0 : 1;
  }
  if (embed->parsed()) {
    const Instance inst = instance_from_json(load_json(embed_path));
    emit_json(embedding_to_json(
                  build_embedding(inst, embed_method, embed_m, embed_scales, embed_q, embed_seed)),
              embed_out);
    return 0;
  }
  if (dist->parsed()) {
    const Instance inst = instance_from_json(load_json(dist_instance));
    const PointEmbedding emb = embedding_from_json(load_json(dist_embedding));
    const DiversityOracle delta = target_oracle(inst, dist_target);
    const DistortionReport report = dist_samples == 0
                                        ? exact_distortion(delta, emb)
                                        : sampled_distortion(delta, emb, dist_samples, dist_seed);
    emit_json(report_to_json(report), dist_out);
    return 0;
  }

  // bench
  std::vector<BenchRow> rows(plan.sizes.size() * static_cast<std::size_t>(plan.trials));
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= rows.size()) return;
      const int n = plan.sizes[i / plan.trials];
      rows[i] = bench_trial(plan, n, static_cast<int>(i % plan.trials));
    }
  };
  if (plan.jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < plan.jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (bench_format == "json") {
    emit_json(bench_json(plan, rows), bench_out);
  } else {
    emit_text(bench_csv(plan, rows), bench_out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const divl1::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
