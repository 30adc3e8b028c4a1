#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/polynomial.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/switching.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

using json = nlohmann::ordered_json;

// Hypergraph text format:
//   # comment
//   n k
//   v1 v2 ... vk      (one edge per line, ascending 1-based ids)
// Parse errors throw Error(Errc::Parse) with the offending line number.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph_file(const std::string& path);
std::string format_hypergraph(const Hypergraph& h);
void write_hypergraph_file(const std::string& path, const Hypergraph& h);

json to_json(const Rational& r);
json to_json(const UniPoly& p);
json to_json(const Tensor& t);
json to_json(const Hypergraph& h);
json to_json(const VertexSet& s);
json to_json(const SwitchReport& r);
json to_json(const SwitchingPartition& p);
json to_json(const SpectralReport& r);
json to_json(const DsVerdict& v);
json to_json(const Lemma4Report& r);
json to_json(const SimplexBoundResult& r);

UniPoly poly_from_json(const json& j);
Tensor tensor_from_json(const json& j);
/// {"n": N, "v1": [...]} as written by paper-example.
SwitchingPartition partition_from_json(const json& j);

}  // namespace hyperspec
