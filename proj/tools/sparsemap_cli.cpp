#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sparsemap/bench.hpp"
#include "sparsemap/export.hpp"
#include "sparsemap/io.hpp"

using namespace sparsemap;

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << text;
}

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> sizes;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      sizes.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, "bad size list " + csv);
    }
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse lattice embeddings of simplicial complexes"};
  app.require_subcommand(1);

  std::string input, output, heights_path, height_kind = "natural", format, family = "random-regular", sizes_csv,
                                         pipeline = "sparse";
  int m = 1, n = 3, degree = 4, retry_budget = 8;
  double trial_constant = 1.0, chunk_factor = 1.0;
  std::uint64_t seed = 1;
  bool brute = false, with_timing = false;

  auto* embed_cmd = app.add_subcommand("embed", "sparse embedding of a complex");
  embed_cmd->add_option("--input", input, "complex JSON")->required();
  embed_cmd->add_option("--m", m)->required();
  embed_cmd->add_option("--n", n)->required();
  embed_cmd->add_option("--out", output, "embedding JSON (stdout when omitted)");
  embed_cmd->add_option("--trial-constant", trial_constant);
  embed_cmd->add_option("--retry-budget", retry_budget);
  embed_cmd->add_option("--seed", seed, "randomize the vertex order");

  auto* verify_cmd = app.add_subcommand("verify", "certify an embedding");
  verify_cmd->add_option("--input", input, "embedding JSON")->required();
  verify_cmd->add_flag("--brute-force", brute, "exhaustive plane enumeration (small boxes only)");

  auto* width_cmd = app.add_subcommand("width-embed", "width-based embedding of a graph");
  width_cmd->add_option("--input", input, "complex JSON")->required();
  width_cmd->add_option("--heights", heights_path, "height JSON");
  width_cmd->add_option("--height-kind", height_kind, "natural or bfs, used without --heights")
      ->check(CLI::IsMember({"natural", "bfs"}));
  width_cmd->add_option("--n", n)->required();
  width_cmd->add_option("--out", output);
  width_cmd->add_option("--chunk-factor", chunk_factor);

  auto* bench_cmd = app.add_subcommand("bench", "scaling sweep with exponent fit");
  bench_cmd->add_option("--family", family)->check(CLI::IsMember({"random-regular", "path", "cycle", "random-2complex"}));
  bench_cmd->add_option("--degree", degree);
  bench_cmd->add_option("--sizes", sizes_csv, "comma separated")->required();
  bench_cmd->add_option("--m", m);
  bench_cmd->add_option("--n", n);
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--report", output);
  bench_cmd->add_option("--pipeline", pipeline)->check(CLI::IsMember({"sparse", "width"}));
  bench_cmd->add_option("--heights", height_kind, "natural or bfs (width pipeline)");
  bench_cmd->add_flag("--with-timing", with_timing, "record runtimes (report no longer reproducible)");

  auto* export_cmd = app.add_subcommand("export", "export an embedding");
  export_cmd->add_option("--input", input, "embedding JSON")->required();
  export_cmd->add_option("--format", format)->required()->check(CLI::IsMember({"svg", "obj", "json"}));
  export_cmd->add_option("--out", output);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*embed_cmd) {
      const auto Y = complex_from_json(read_json_file(input));
      EmbedOptions opts;
      opts.trial_constant = trial_constant;
      opts.retry_budget = retry_budget;
      if (embed_cmd->count("--seed")) opts.order_seed = seed;
      const auto map = embed(Y, m, n, opts);
      const auto cert = verify(map);
      write_text(output, map_to_json(map, &cert).dump(2) + "\n");
      return cert.skeletal_ok ? 0 : 1;
    }
    if (*verify_cmd) {
      const auto map = map_from_json(read_json_file(input));
      const auto cert = brute ? brute_force_census(map) : verify(map);
      json out = certificate_to_json(cert);
      out["unit_ball_census"] = unit_ball_census(map);
      std::cout << out.dump(2) << "\n";
      return cert.skeletal_ok ? 0 : 1;
    }
    if (*width_cmd) {
      const auto Y = complex_from_json(read_json_file(input));
      HeightFunction h;
      if (!heights_path.empty()) h = heights_from_json(read_json_file(heights_path), Y.vertex_count());
      else h = height_kind == "bfs" ? bfs_heights(Y) : natural_heights(Y.vertex_count());
      WidthOptions opts;
      opts.chunk_factor = chunk_factor;
      const auto result = width_embed(Y, h, n, opts);
      json out = map_to_json(result.map, &result.report.certificate);
      out["width_report"] = width_report_to_json(result.report);
      write_text(output, out.dump(2) + "\n");
      return result.report.certificate.skeletal_ok ? 0 : 1;
    }
    if (*bench_cmd) {
      BenchConfig config;
      config.family = family;
      config.degree = degree;
      config.sizes = parse_sizes(sizes_csv);
      config.m = m;
      config.n = n;
      config.seed = seed;
      config.pipeline = pipeline == "width" ? Pipeline::width : Pipeline::sparse;
      if (bench_cmd->count("--heights")) config.heights = height_kind;
      config.with_timing = with_timing;
      const auto report = run_bench(config);
      write_text(output, bench_report_to_json(report).dump(2) + "\n");
      return 0;
    }
    if (*export_cmd) {
      const auto map = map_from_json(read_json_file(input));
      write_text(output, export_map(map, parse_export_format(format)));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::UnsatisfiableParameters:
      case Errc::InvalidSimplex:
      case Errc::EmptyInput:
      case Errc::VertexOutOfRange:
      case Errc::NotAGraph:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
