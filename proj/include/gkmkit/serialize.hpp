#pragma once

// Canonical JSON documents for every file the CLI reads or writes. Objects are
// emitted with sorted keys and term lists in lexicographic exponent order, so
// equal values always serialize to identical bytes.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkmkit/builders.hpp"
#include "gkmkit/pe_ring.hpp"

namespace gkmkit {

using Json = nlohmann::json;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

// [{"coefficient": c, "exponent": [..]}, ...]
Json laurent_to_json(const LaurentElement& f);
LaurentElement laurent_from_json(const Json& j, std::size_t rank);

// {"edges": [{"u", "v", "weight": [..] | null}], "lattice_rank", "vertices": [{"id"}]}
// Weights are written sign-normalized.
Json graph_to_json(const GkmGraph& g);
GkmGraph graph_from_json(const Json& j);

// {"graph_ref", "values": {vertex_id: terms}}
Json tuple_to_json(const PeTuple& t, const std::string& graph_ref);
PeTuple tuple_from_json(const Json& j, GraphPtr graph);

// {"basis": [tuples], "rank": n}
Json basis_to_json(const std::vector<PeTuple>& basis, const std::string& graph_ref);

Json report_to_json(const ValidationReport& r);

Json matrix_to_json(const SmallMatrix& m);
SmallMatrix matrix_from_json(const Json& j);

// {"rank", "rays": [[..]], "cones": [[ray indices]]}
Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j);

// {"cartan": [[..]]}
RootDatum root_datum_from_json(const Json& j);

// {"generators": [{"vertices": {id: id}, "matrix": [[..]]}]}
Json action_to_json(const GraphAction& a);
GraphAction action_from_json(const Json& j);

Json datum_to_json(const EmbeddingDatum& d);
EmbeddingDatum datum_from_json(const Json& j);

std::string dump_canonical(const Json& j);
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace gkmkit
