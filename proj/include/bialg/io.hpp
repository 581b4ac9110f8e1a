#pragma once

#include <string>

#include "json.hpp"

#include "bialg/realization.hpp"
#include "bialg/tensor.hpp"

namespace bialg::io {

using json = nlohmann::json;

/// Raw instance data, parsed but not yet validated against the axioms.
struct InstanceData {
  Coalgebra l;
  Coalgebra f;
  Matrix xt;
};

Coalgebra coalgebra_from_json(const json& j);
json coalgebra_to_json(const Coalgebra& c);

InstanceData instance_from_json(const json& j);
json instance_to_json(const RealizationMap& r);

/// Parsed element document: the "space" tag plus the element itself.
struct ElementDoc {
  std::string space;  // "T(L)" | "T(F)" | "T(K)" | "T(E)"
  TensorElement elem;
};

/// dim: alphabet size to validate letters against; max_degree -1 derives the
/// cap from the longest word.
ElementDoc element_from_json(const json& j, int dim, int max_degree = -1);
json element_to_json(const TensorElement& e, const std::string& space);

/// Serializes a subspace of a truncated tensor space as a list of elements.
json subspace_to_json(const TensorShape& shape, const Subspace& s, const std::string& space);

json load_json_file(const std::string& path);
InstanceData load_instance(const std::string& path);

}  // namespace bialg::io
