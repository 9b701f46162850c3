#pragma once
// JSON views of the library types for the command line: rationals appear as
// plain integers when possible and as "p/q" strings otherwise, labels rather
// than positions address mutation directions, and every emitted document
// uses insertion-ordered keys so output is byte-deterministic.

#include <json.hpp>

#include "qpcluster/catalog.hpp"
#include "qpcluster/fano.hpp"
#include "qpcluster/seed.hpp"
#include "qpcluster/toric.hpp"

namespace qpc {

using Json = nlohmann::ordered_json;

// numbers: integers when they fit a JSON integer, decimal strings otherwise
Json int_json(const Int& v);
Json rat_json(const Rat& r);
Json zvec_json(const ZVec& v);
Json zmat_json(const ZMat& m);
Json qmat_json(const QMat& m);

// accepted forms: integer, "123", "p/q"; BadInput otherwise
Rat rat_from_json(const Json& j);
Int int_from_json(const Json& j);

// {"labels":optional, "lambda":[[...]], "n_basis":optional, "basis":optional}
Seed seed_from_json(const Json& j);
// labels, lambda, n_basis when finer, basis, exchange
Json seed_json(const Seed& s);

// list of {"mut":{"k":label,"sign":"+"|"-"}} or
// {"iso":{"perm":[labels...],"sign":"+"|"-","matrix":optional [[int]]}}
ClusterWord word_from_json(const Seed& source, const Json& j);

// {"vectors":[[a,b],...],"orientation":optional 1}
ToricData toric_from_json(const Json& j);
Json toric_json(const ToricData& d);

// {"vertices":[[x,y],...]} or {"facets":[{"w":[a,b],"c":k},...]}
FanoPolygon polygon_from_json(const Json& j);
Json polygon_json(const FanoPolygon& p);

// [{"check":...,"status":"pass"|"fail","witness":...on failure}]
Json checks_json(const std::vector<CheckResult>& rows);

Json load_json_file(const std::string& path);  // BadInput

} // namespace qpc
