#pragma once

#include <functional>

#include <json.hpp>

#include "quiverrep/classify.hpp"
#include "quiverrep/radical.hpp"
#include "quiverrep/wild.hpp"

namespace quiverrep {

using Json = nlohmann::ordered_json;

/// Resolves "quiver": "<path>" references inside representation files.
using JsonResolver = std::function<Json(const std::string&)>;

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const Json& j);

Json rep_to_json(const Representation& x);
Representation rep_from_json(const Json& j, const JsonResolver& resolver = {});

Json morphism_to_json(const Morphism& phi);

Json group_rep_to_json(const GroupRep& x);
GroupRep group_rep_from_json(const Json& j);

Json graph_type_to_json(const GraphType& t);
Json root_set_to_json(const RootSet& roots, bool positive_only);

Json dim_vector_to_json(const DimVector& d);
Json word_to_json(const ReflectionWord& w);
ReflectionWord word_from_json(const Json& j);

Json record_to_json(const ClassificationRecord& r);
Json decomposition_to_json(const Decomposition& d);
Json kronecker_list_to_json(const std::vector<std::pair<KroneckerIndec, long long>>& list);
Json kronecker_indec_to_json(const KroneckerIndec& k);
Json klein_list_to_json(const std::vector<std::pair<KleinSummand, long long>>& list);

/// Re-reads a representation under a different field; throws on lossy
/// conversions (only Q -> GF(p) with p-regular denominators is allowed).
Representation convert_field(const Representation& x, const Field& target);

} // namespace quiverrep
