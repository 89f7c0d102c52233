#include "gkmkit/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace gkmkit {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + ": missing field '" + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
  const Json& a = field(j, key, where);
  if (!a.is_array()) throw SchemaError(where + ": field '" + key + "' must be an array");
  return a;
}

std::string string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + ": expected a string");
  return j.get<std::string>();
}

std::int64_t int_of(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw SchemaError(where + ": integer out of range");
    return j.get<std::int64_t>();
  }
  throw SchemaError(where + ": expected an integer");
}

std::size_t count_of(const Json& j, const std::string& where) {
  const std::int64_t v = int_of(j, where);
  if (v < 0) throw SchemaError(where + ": expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

ExponentVector vector_of(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an integer array");
  std::vector<std::int64_t> c;
  c.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(int_of(j[i], where + "[" + std::to_string(i) + "]"));
  return ExponentVector(std::move(c));
}

Json vector_to_json(const ExponentVector& v) { return Json(std::vector<std::int64_t>(v.coords().begin(), v.coords().end())); }

std::vector<int> word_of(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an integer array");
  std::vector<int> w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::int64_t k = int_of(j[i], where);
    if (k < 1 || k > std::numeric_limits<int>::max()) throw SchemaError(where + ": generator indices are 1-based");
    w.push_back(static_cast<int>(k));
  }
  return w;
}

std::map<std::string, std::string> string_map_of(const Json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object of strings");
  std::map<std::string, std::string> m;
  for (const auto& [k, v] : j.items()) m.emplace(k, string_of(v, where + "." + k));
  return m;
}

}  // namespace

Json integer_to_json(const Integer& x) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw SchemaError("coefficient string '" + s + "' is not an integer");
    return Integer(s);
  }
  throw SchemaError("coefficient must be an integer or a decimal string");
}

Json laurent_to_json(const LaurentElement& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json{{"coefficient", integer_to_json(c)}, {"exponent", vector_to_json(e)}});
  return out;
}

LaurentElement laurent_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw SchemaError("Laurent element: expected a list of terms");
  std::vector<std::pair<ExponentVector, Integer>> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "term #" + std::to_string(i);
    ExponentVector e = vector_of(field(j[i], "exponent", where), where + ".exponent");
    if (e.rank() != rank)
      throw SchemaError(where + ": exponent of length " + std::to_string(e.rank()) + " in a lattice of rank " +
                        std::to_string(rank));
    terms.emplace_back(std::move(e), integer_from_json(field(j[i], "coefficient", where)));
  }
  return LaurentElement::from_terms(rank, terms);
}

// ---------------------------------------------------------------------------

Json graph_to_json(const GkmGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) {
    Json jv{{"id", v.id}};
    if (!v.meta.empty()) jv["meta"] = v.meta;
    vertices.push_back(std::move(jv));
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json je{{"u", g.id(e.u)}, {"v", g.id(e.v)}, {"weight", nullptr}};
    if (e.weight) je["weight"] = vector_to_json(e.weight->sign_normalized().vector());
    edges.push_back(std::move(je));
  }
  return Json{{"lattice_rank", g.rank()}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

GkmGraph graph_from_json(const Json& j) {
  const std::size_t rank = count_of(field(j, "lattice_rank", "graph"), "graph.lattice_rank");
  std::vector<Vertex> vertices;
  const Json& jv = array_field(j, "vertices", "graph");
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const std::string where = "graph.vertices[" + std::to_string(i) + "]";
    Vertex v{string_of(field(jv[i], "id", where), where + ".id"), {}};
    if (jv[i].contains("meta")) v.meta = string_map_of(jv[i]["meta"], where + ".meta");
    vertices.push_back(std::move(v));
  }
  std::vector<EdgeSpec> edges;
  const Json& je = array_field(j, "edges", "graph");
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string where = "graph.edges[" + std::to_string(i) + "]";
    EdgeSpec e{string_of(field(je[i], "u", where), where + ".u"), string_of(field(je[i], "v", where), where + ".v"),
               std::nullopt};
    if (je[i].contains("weight") && !je[i]["weight"].is_null())
      e.weight = Character(vector_of(je[i]["weight"], where + ".weight"));
    edges.push_back(std::move(e));
  }
  return GkmGraph(Lattice{rank}, std::move(vertices), edges);
}

Json tuple_to_json(const PeTuple& t, const std::string& graph_ref) {
  Json values = Json::object();
  for (std::size_t i = 0; i < t.values().size(); ++i) values[t.graph().id(i)] = laurent_to_json(t[i]);
  return Json{{"graph_ref", graph_ref}, {"values", std::move(values)}};
}

PeTuple tuple_from_json(const Json& j, GraphPtr graph) {
  const Json& jv = field(j, "values", "tuple");
  if (!jv.is_object()) throw SchemaError("tuple.values: expected an object keyed by vertex id");
  std::map<std::string, LaurentElement> values;
  for (const auto& [id, terms] : jv.items()) {
    try {
      values.emplace(id, laurent_from_json(terms, graph->rank()));
    } catch (const SchemaError& e) {
      throw SchemaError("tuple.values." + id + ": " + e.what());
    }
  }
  return PeTuple::from_map(std::move(graph), values);
}

Json basis_to_json(const std::vector<PeTuple>& basis, const std::string& graph_ref) {
  Json list = Json::array();
  for (const auto& t : basis) list.push_back(tuple_to_json(t, graph_ref));
  return Json{{"rank", basis.size()}, {"basis", std::move(list)}};
}

Json report_to_json(const ValidationReport& r) {
  Json dirs = Json::array();
  for (const auto& [d, count] : r.directions) dirs.push_back(Json{{"direction", vector_to_json(d.vector())}, {"count", count}});
  return Json{{"valid", true},
              {"vertices", r.vertex_count},
              {"edges", r.edge_count},
              {"loops", r.loop_count},
              {"relations", r.relation_count},
              {"directions", std::move(dirs)}};
}

// ---------------------------------------------------------------------------

Json matrix_to_json(const SmallMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(std::vector<std::int64_t>(m.row(i).begin(), m.row(i).end()));
  return out;
}

SmallMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("matrix: expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  SmallMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const ExponentVector row = vector_of(j[i], "matrix row " + std::to_string(i));
    if (row.rank() != cols) throw SchemaError("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
  }
  return m;
}

Json fan_to_json(const Fan& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays) rays.push_back(vector_to_json(r));
  return Json{{"rank", f.rank}, {"rays", std::move(rays)}, {"cones", f.cones}};
}

Fan fan_from_json(const Json& j) {
  Fan f;
  f.rank = count_of(field(j, "rank", "fan"), "fan.rank");
  const Json& rays = array_field(j, "rays", "fan");
  for (std::size_t i = 0; i < rays.size(); ++i) f.rays.push_back(vector_of(rays[i], "fan.rays[" + std::to_string(i) + "]"));
  const Json& cones = array_field(j, "cones", "fan");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string where = "fan.cones[" + std::to_string(i) + "]";
    if (!cones[i].is_array()) throw SchemaError(where + ": expected an array of ray indices");
    std::vector<std::size_t> cone;
    for (const auto& x : cones[i]) cone.push_back(count_of(x, where));
    f.cones.push_back(std::move(cone));
  }
  return f;
}

RootDatum root_datum_from_json(const Json& j) {
  return RootDatum::from_cartan(matrix_from_json(field(j, "cartan", "root datum")));
}

Json action_to_json(const GraphAction& a) {
  Json gens = Json::array();
  for (const auto& g : a.generators) gens.push_back(Json{{"vertices", g.vertex_map}, {"matrix", matrix_to_json(g.lattice_map)}});
  return Json{{"generators", std::move(gens)}};
}

GraphAction action_from_json(const Json& j) {
  GraphAction a;
  const Json& gens = array_field(j, "generators", "action");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "action.generators[" + std::to_string(i) + "]";
    a.generators.push_back(ActionGenerator{string_map_of(field(gens[i], "vertices", where), where + ".vertices"),
                                           matrix_from_json(field(gens[i], "matrix", where))});
  }
  return a;
}

// ---------------------------------------------------------------------------

Json datum_to_json(const EmbeddingDatum& d) {
  Json gens = Json::array();
  for (const auto& g : d.weyl_generators) gens.push_back(matrix_to_json(g));
  Json e2 = Json::array();
  for (const auto& f : d.e2) {
    Json jf{{"name", f.name}, {"lower", Json::array({f.lower_first, f.lower_second})}};
    if (const auto* a = std::get_if<ReflectionBranch>(&f.branch)) {
      jf["branch"] = "a";
      jf["reflection"] = matrix_to_json(a->reflection);
      jf["root"] = vector_to_json(a->root);
    } else {
      jf["branch"] = "b";
      jf["character"] = vector_to_json(std::get<CharacterBranch>(f.branch).character);
    }
    e2.push_back(std::move(jf));
  }
  Json orbits = Json::array();
  for (const auto& o : d.closed_orbits) {
    Json labels = Json::array();
    for (const auto& l : o.labels) labels.push_back(Json{{"vertex", l.vertex}, {"idempotent", l.idempotent}, {"word", l.word}});
    orbits.push_back(Json{{"idempotent", o.idempotent}, {"graph", graph_to_json(o.graph)}, {"labels", std::move(labels)}});
  }
  return Json{{"lattice_rank", d.lattice_rank}, {"weyl_generators", std::move(gens)},
              {"e1", d.e1},                     {"e1_action", d.e1_action},
              {"lambda1", d.lambda1},           {"e2", std::move(e2)},
              {"closed_orbits", std::move(orbits)}};
}

EmbeddingDatum datum_from_json(const Json& j) {
  const std::string w = "datum";
  EmbeddingDatum d;
  d.lattice_rank = count_of(field(j, "lattice_rank", w), w + ".lattice_rank");
  for (const auto& g : array_field(j, "weyl_generators", w)) d.weyl_generators.push_back(matrix_from_json(g));
  for (const auto& s : array_field(j, "e1", w)) d.e1.push_back(string_of(s, w + ".e1"));
  for (const auto& a : array_field(j, "e1_action", w)) d.e1_action.push_back(string_map_of(a, w + ".e1_action"));
  for (const auto& s : array_field(j, "lambda1", w)) d.lambda1.push_back(string_of(s, w + ".lambda1"));

  const Json& e2 = array_field(j, "e2", w);
  for (std::size_t i = 0; i < e2.size(); ++i) {
    const std::string where = w + ".e2[" + std::to_string(i) + "]";
    const Json& jf = e2[i];
    const Json& lower = array_field(jf, "lower", where);
    if (lower.size() != 2) throw SchemaError(where + ".lower: expected two idempotents");
    RankTwoIdempotent f{string_of(field(jf, "name", where), where + ".name"), string_of(lower[0], where + ".lower"),
                        string_of(lower[1], where + ".lower"), CharacterBranch{}};
    const std::string branch = jf.contains("branch") ? string_of(jf["branch"], where + ".branch") : "";
    if (branch == "a") {
      if (!jf.contains("reflection") || !jf.contains("root"))
        throw DomainError(where + ": branch data missing (branch (a) needs 'reflection' and 'root')");
      f.branch = ReflectionBranch{matrix_from_json(jf["reflection"]), vector_of(jf["root"], where + ".root")};
    } else if (branch == "b") {
      if (!jf.contains("character")) throw DomainError(where + ": branch data missing (branch (b) needs 'character')");
      f.branch = CharacterBranch{vector_of(jf["character"], where + ".character")};
    } else {
      throw DomainError(where + ": branch data missing ('branch' must be \"a\" or \"b\")");
    }
    d.e2.push_back(std::move(f));
  }

  const Json& orbits = array_field(j, "closed_orbits", w);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const std::string where = w + ".closed_orbits[" + std::to_string(i) + "]";
    ClosedOrbit o{string_of(field(orbits[i], "idempotent", where), where + ".idempotent"),
                  graph_from_json(field(orbits[i], "graph", where)), {}};
    const Json& labels = array_field(orbits[i], "labels", where);
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const std::string lw = where + ".labels[" + std::to_string(k) + "]";
      o.labels.push_back(OrbitLabel{string_of(field(labels[k], "vertex", lw), lw + ".vertex"),
                                    string_of(field(labels[k], "idempotent", lw), lw + ".idempotent"),
                                    word_of(field(labels[k], "word", lw), lw + ".word")});
    }
    d.closed_orbits.push_back(std::move(o));
  }
  return d;
}

// ---------------------------------------------------------------------------

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw SchemaError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write '" + path.string() + "'");
  out << dump_canonical(j);
  if (!out) throw SchemaError("failed writing '" + path.string() + "'");
}

}  // namespace gkmkit
