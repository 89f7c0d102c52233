#include "gkmkit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "gkmkit/sampling.hpp"
#include "gkmkit/serialize.hpp"

namespace gkmkit::cli {

namespace fs = std::filesystem;

namespace {

enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

struct Context {
  Context(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  std::ostream& out;
  std::ostream& err;
  std::optional<fs::path> workdir;
  LogLevel level = LogLevel::warn;
  bool pretty = false;
  std::string out_path;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  void log(LogLevel at, const std::string& msg) const {
    static const char* names[] = {"error", "warn", "info", "debug"};
    if (at <= level) err << "[" << names[static_cast<int>(at)] << "] " << msg << "\n";
  }

  fs::path resolve(const std::string& p) const {
    fs::path path(p);
    if (workdir && path.is_relative()) return *workdir / path;
    return path;
  }

  Json read(const std::string& p) {
    inputs.push_back(p);
    log(LogLevel::debug, "reading " + resolve(p).string());
    return read_json_file(resolve(p));
  }

  void write(const std::string& p, const Json& j) {
    outputs.push_back(p);
    log(LogLevel::info, "writing " + resolve(p).string());
    write_json_file(resolve(p), j);
  }
};

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || k < 1) throw SchemaError("--word: '" + item + "' is not a positive integer");
    w.push_back(k);
  }
  return w;
}

std::int64_t parse_int64(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw SchemaError(what + ": '" + s + "' is not an integer");
  return v;
}

// "lo:hi" for every coordinate, or "lo:hi,lo:hi,..." per coordinate.
Box parse_box(const std::string& s, std::size_t rank) {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':', 1);
    if (colon == std::string::npos) throw SchemaError("--box: expected lo:hi, got '" + item + "'");
    ranges.emplace_back(parse_int64(item.substr(0, colon), "--box"), parse_int64(item.substr(colon + 1), "--box"));
  }
  if (ranges.size() == 1) return Box::uniform(rank, ranges[0].first, ranges[0].second);
  if (ranges.size() != rank)
    throw SchemaError("--box: " + std::to_string(ranges.size()) + " ranges for a lattice of rank " +
                      std::to_string(rank));
  return Box{ranges};
}

std::string weight_string(const Edge& e) { return e.weight ? e.weight->sign_normalized().to_string() : "-"; }

void print_graph_table(std::ostream& os, const GkmGraph& g) {
  os << "lattice rank: " << g.rank() << "\n";
  os << "vertices (" << g.vertex_count() << "):\n";
  for (const auto& v : g.vertices()) os << "  " << v.id << "\n";
  os << "edges (" << g.edge_count() << "):\n";
  os << "  " << std::left << std::setw(6) << "#" << std::setw(14) << "u" << std::setw(14) << "v" << "weight\n";
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    os << "  " << std::left << std::setw(6) << k << std::setw(14) << g.id(e.u) << std::setw(14) << g.id(e.v)
       << weight_string(e) << "\n";
  }
}

void print_tuple(std::ostream& os, const PeTuple& t, const std::string& indent) {
  for (std::size_t i = 0; i < t.values().size(); ++i)
    os << indent << t.graph().id(i) << ": " << t[i].to_string() << "\n";
}

void print_basis(std::ostream& os, const std::vector<PeTuple>& basis, bool pretty) {
  os << "rank: " << basis.size() << "\n";
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (pretty) {
      os << "basis[" << k << "]\n";
      print_tuple(os, basis[k], "  ");
      continue;
    }
    os << "[" << k << "]";
    for (std::size_t i = 0; i < basis[k].values().size(); ++i)
      os << (i ? "; " : " ") << basis[k].graph().id(i) << ": " << basis[k][i].to_string();
    os << "\n";
  }
}

// Built graphs go to --out when given, otherwise to stdout.
void emit_graph(Context& ctx, const GkmGraph& g) {
  if (!ctx.out_path.empty()) {
    ctx.write(ctx.out_path, graph_to_json(g));
    ctx.out << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count() << "\n";
  } else if (ctx.pretty) {
    print_graph_table(ctx.out, g);
  } else {
    ctx.out << dump_canonical(graph_to_json(g));
  }
}

void emit_json(Context& ctx, const Json& j) {
  if (!ctx.out_path.empty()) ctx.write(ctx.out_path, j);
}

GraphPtr load_graph(Context& ctx, const std::string& path) {
  return std::make_shared<const GkmGraph>(graph_from_json(ctx.read(path)));
}

// Randomized property checks; returns the number of failures.
int self_test(Context& ctx, std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  auto report = [&](const std::string& name, std::size_t bad) {
    ctx.out << (bad == 0 ? "ok   " : "FAIL ") << name << " (" << trials << " trials, " << bad << " failures)\n";
    if (bad) ++failures;
  };

  {
    std::size_t bad = 0;
    for (std::size_t k = 0; k < trials; ++k) {
      auto f = random_laurent(rng, 2);
      auto g = random_laurent(rng, 2);
      const Character chi{static_cast<std::int64_t>(k % 5) - 2, static_cast<std::int64_t>(k % 3) + 1};
      if (congruent_mod(f, g, chi) != congruent_mod(f, g, -chi)) ++bad;
    }
    report("sign invariance of congruences", bad);
  }
  {
    std::size_t bad = 0;
    for (std::size_t k = 0; k < trials; ++k) {
      auto a = random_laurent(rng, 2);
      auto b = random_laurent(rng, 2);
      auto c = random_laurent(rng, 2);
      const auto one = LaurentElement::constant(2, 1);
      if (!((a * b) * c == a * (b * c)) || !(a * b == b * a) || !(a * (b + c) == a * b + a * c) || !(a * one == a))
        ++bad;
    }
    report("ring axioms in Z[M]", bad);
  }
  {
    auto g = std::make_shared<const GkmGraph>(build_rook_embedding(2));
    LaurentSampler s{-1, 1, 2, 2};
    std::size_t bad = 0;
    for (std::size_t k = 0; k < trials; ++k) {
      auto x = random_member(rng, g, s);
      auto y = random_member(rng, g, s);
      if (!member(x + y) || !member(x * y)) ++bad;
    }
    report("PE is a subring (rook n=2)", bad);
  }
  {
    auto g = std::make_shared<const GkmGraph>(build_toric(Fan{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}}));
    std::size_t bad = 0;
    for (std::size_t x = 0; x < g->vertex_count(); ++x)
      if (!member(clear_denominators(PeTuple::delta(g, g->id(x))).scaled)) ++bad;
    ctx.out << (bad == 0 ? "ok   " : "FAIL ") << "localization certificates on P^2 (" << bad << " failures)\n";
    if (bad) ++failures;
  }
  return failures;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx(out, err);
  if (const char* w = std::getenv("GKMKIT_WORKDIR"); w && *w) ctx.workdir = fs::path(w);

  CLI::App app{"gkmkit: GKM graphs and piecewise exponential functions"};
  app.require_subcommand(1);
  std::string log_level = "warn";
  std::uint64_t seed = 1;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", ctx.out_path, "Write the JSON result to this file");
    sub->add_flag("--pretty", ctx.pretty, "Human-readable tables");
    sub->add_option("--log-level", log_level, "error | warn | info | debug")
        ->check(CLI::IsMember({"error", "warn", "info", "debug"}));
    return sub;
  };

  std::string fan_path, type_name, cartan_path, word_text, action_out, datum_path, graph_path, tuple_path;
  std::string action_path, box_text, left_path, right_path;
  std::size_t rook_n = 0;
  std::size_t trials = 200;
  std::vector<std::string> keep;

  auto* build_toric_cmd = common(app.add_subcommand("build-toric", "GKM graph of a smooth complete fan"));
  build_toric_cmd->add_option("--fan", fan_path, "Fan JSON")->required();

  auto* build_schubert_cmd = common(app.add_subcommand("build-schubert", "Bruhat graph of a Schubert variety"));
  auto* type_opt = build_schubert_cmd->add_option("--type", type_name, "Cartan type, e.g. A2");
  auto* cartan_opt = build_schubert_cmd->add_option("--cartan", cartan_path, "Root datum JSON {cartan: [[..]]}");
  type_opt->excludes(cartan_opt);
  build_schubert_cmd->add_option("--word", word_text, "Reduced word, e.g. 1,2,1 (default: longest element)");
  build_schubert_cmd->add_option("--action-out", action_out, "Also write the left Weyl group action (longest element only)");

  auto* build_rook_cmd = common(app.add_subcommand("build-rook", "Rook monoid embedding P^{n^2-1} of PGL_n"));
  build_rook_cmd->add_option("--n", rook_n, "Matrix size")->required();

  auto* build_embedding_cmd = common(app.add_subcommand("build-embedding", "Projective group embedding from a datum"));
  build_embedding_cmd->add_option("--datum", datum_path, "Embedding datum JSON")->required();

  auto* validate_cmd = common(app.add_subcommand("validate", "Check a graph and report its shape"));
  validate_cmd->add_option("graph", graph_path, "Graph JSON")->required();

  auto* member_cmd = common(app.add_subcommand("member", "Membership of a tuple in PE"));
  auto* failing_cmd = common(app.add_subcommand("failing-edges", "Edges whose congruence fails"));
  auto* clear_cmd = common(app.add_subcommand("clear-denominators", "Scale a tuple into PE by the edge factors"));
  auto* restrict_cmd = common(app.add_subcommand("restrict", "Restrict a tuple to a vertex subset"));
  for (auto* sub : {member_cmd, failing_cmd, clear_cmd, restrict_cmd}) {
    sub->add_option("--graph", graph_path, "Graph JSON")->required();
    sub->add_option("--tuple", tuple_path, "Tuple JSON")->required();
  }
  restrict_cmd->add_option("--vertices", keep, "Vertex ids to keep")->required();

  auto* basis_cmd = common(app.add_subcommand("basis", "Z-basis of the members supported in a box"));
  auto* invariants_cmd = common(app.add_subcommand("invariants", "Z-basis of the invariant members in a box"));
  for (auto* sub : {basis_cmd, invariants_cmd}) {
    sub->add_option("--graph", graph_path, "Graph JSON")->required();
    sub->add_option("--box", box_text, "lo:hi or lo:hi,lo:hi,...")->required();
  }
  invariants_cmd->add_option("--action", action_path, "Action JSON")->required();

  auto* partition_cmd = common(app.add_subcommand("cs-partition", "Edges grouped by primitive direction"));
  partition_cmd->add_option("--graph", graph_path, "Graph JSON")->required();

  auto* product_cmd = common(app.add_subcommand("product", "Product of two graphs"));
  product_cmd->add_option("--left", left_path, "Graph JSON")->required();
  product_cmd->add_option("--right", right_path, "Graph JSON")->required();

  auto* self_test_cmd = common(app.add_subcommand("self-test", "Randomized property checks"));
  self_test_cmd->add_option("--seed", seed, "Random seed");
  self_test_cmd->add_option("--trials", trials, "Trials per property");

  std::vector<std::string> argv_storage{"gkmkit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  ctx.level = log_level == "error" ? LogLevel::error
              : log_level == "info" ? LogLevel::info
              : log_level == "debug" ? LogLevel::debug
                                     : LogLevel::warn;

  const auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (app.got_subcommand(build_toric_cmd)) {
      emit_graph(ctx, build_toric(fan_from_json(ctx.read(fan_path))));
    } else if (app.got_subcommand(build_schubert_cmd)) {
      if (type_name.empty() && cartan_path.empty()) throw SchemaError("build-schubert needs --type or --cartan");
      const RootDatum rd = cartan_path.empty() ? RootDatum::of_type(type_name) : root_datum_from_json(ctx.read(cartan_path));
      const std::vector<int> word = word_text.empty() ? longest_word(rd) : parse_word(word_text);
      const GkmGraph g = build_schubert(rd, word);
      if (!action_out.empty()) {
        if (g.vertex_count() != weyl_group(rd).size())
          throw DomainError("--action-out needs the longest element (the full flag variety)");
        const GraphAction a = weyl_left_action(rd);
        register_action(g, a);
        ctx.write(action_out, action_to_json(a));
      }
      emit_graph(ctx, g);
    } else if (app.got_subcommand(build_rook_cmd)) {
      emit_graph(ctx, build_rook_embedding(rook_n));
    } else if (app.got_subcommand(build_embedding_cmd)) {
      emit_graph(ctx, build_group_embedding(datum_from_json(ctx.read(datum_path))));
    } else if (app.got_subcommand(validate_cmd)) {
      const auto g = load_graph(ctx, graph_path);
      const ValidationReport r = validate(*g);
      out << "valid: true\nvertices: " << r.vertex_count << "\nedges: " << r.edge_count << "\nloops: " << r.loop_count
          << "\nrelations: " << r.relation_count << "\n";
      out << "directions:\n";
      for (const auto& [d, count] : r.directions) out << "  " << d.to_string() << " x" << count << "\n";
      if (ctx.pretty) print_graph_table(out, *g);
      emit_json(ctx, report_to_json(r));
    } else if (app.got_subcommand(member_cmd)) {
      const auto g = load_graph(ctx, graph_path);
      const bool is_member = member(tuple_from_json(ctx.read(tuple_path), g));
      out << "member: " << (is_member ? "true" : "false") << "\n";
      emit_json(ctx, Json{{"member", is_member}});
    } else if (app.got_subcommand(failing_cmd)) {
      const auto g = load_graph(ctx, graph_path);
      const auto bad = failing_edges(tuple_from_json(ctx.read(tuple_path), g));
      out << "failing edges: " << bad.size() << "\n";
      Json list = Json::array();
      for (std::size_t k : bad) {
        const Edge& e = g->edges()[k];
        out << "  #" << k << " " << g->describe_edge(k) << "\n";
        const Character w = e.weight->sign_normalized();
        const auto coords = w.vector().coords();
        list.push_back(Json{{"index", k}, {"u", g->id(e.u)}, {"v", g->id(e.v)},
                            {"weight", std::vector<std::int64_t>(coords.begin(), coords.end())}});
      }
      emit_json(ctx, Json{{"failing_edges", std::move(list)}});
    } else if (app.got_subcommand(clear_cmd)) {
      const auto g = load_graph(ctx, graph_path);
      const ClearedTuple c = clear_denominators(tuple_from_json(ctx.read(tuple_path), g));
      const bool is_member = member(c.scaled);
      out << "denominator: " << c.denominator.to_string() << "\nmember: " << (is_member ? "true" : "false") << "\n";
      if (ctx.pretty) print_tuple(out, c.scaled, "  ");
      emit_json(ctx, Json{{"denominator", laurent_to_json(c.denominator)},
                          {"member", is_member},
                          {"tuple", tuple_to_json(c.scaled, graph_path)}});
    } else if (app.got_subcommand(restrict_cmd)) {
      const auto g = load_graph(ctx, graph_path);
      const PeTuple r = restrict_tuple(tuple_from_json(ctx.read(tuple_path), g), keep);
      out << "vertices: " << r.graph().vertex_count() << "\nedges: " << r.graph().edge_count()
          << "\nmember: " << (member(r) ? "true" : "false") << "\n";
      if (ctx.pretty) print_tuple(out, r, "  ");
      emit_json(ctx, Json{{"graph", graph_to_json(r.graph())}, {"tuple", tuple_to_json(r, graph_path)}});
    } else if (app.got_subcommand(basis_cmd)) {
      const auto g = load_graph(ctx, graph_path);
      const auto basis = truncated_basis(g, parse_box(box_text, g->rank()));
      print_basis(out, basis, ctx.pretty);
      emit_json(ctx, basis_to_json(basis, graph_path));
    } else if (app.got_subcommand(invariants_cmd)) {
      const auto g = load_graph(ctx, graph_path);
      const CheckedAction a = register_action(*g, action_from_json(ctx.read(action_path)));
      const auto basis = invariant_basis(g, a, parse_box(box_text, g->rank()));
      print_basis(out, basis, ctx.pretty);
      emit_json(ctx, basis_to_json(basis, graph_path));
    } else if (app.got_subcommand(partition_cmd)) {
      const auto g = load_graph(ctx, graph_path);
      const auto classes = cs_partition(*g);
      out << "classes: " << classes.size() << "\n";
      Json list = Json::array();
      for (const auto& [dir, sub] : classes) {
        out << "  " << dir.to_string() << ": " << sub.edge_count() << " edges\n";
        if (ctx.pretty)
          for (std::size_t k = 0; k < sub.edge_count(); ++k) out << "    " << sub.describe_edge(k) << "\n";
        list.push_back(Json{{"direction", std::vector<std::int64_t>(dir.vector().coords().begin(), dir.vector().coords().end())},
                            {"graph", graph_to_json(sub)}});
      }
      emit_json(ctx, Json{{"classes", std::move(list)}});
    } else if (app.got_subcommand(product_cmd)) {
      const auto g1 = load_graph(ctx, left_path);
      const auto g2 = load_graph(ctx, right_path);
      emit_graph(ctx, product(*g1, *g2));
    } else if (app.got_subcommand(self_test_cmd)) {
      code = self_test(ctx, seed, trials) == 0 ? 0 : 2;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    code = 2;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    code = 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = 1;
  }

  if (ctx.workdir) {
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    Json entry{{"command", args}, {"inputs", ctx.inputs}, {"outputs", ctx.outputs}, {"exit_code", code},
               {"elapsed_ms", elapsed}};
    std::ofstream manifest(*ctx.workdir / "manifest.jsonl", std::ios::app);
    if (manifest) manifest << entry.dump() << "\n";
  }
  return code;
}

}  // namespace gkmkit::cli
