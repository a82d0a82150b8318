#pragma once

#include "filiform/identities.hpp"
#include "filiform/leibniz.hpp"
#include "filiform/registry.hpp"
#include "filiform/repr.hpp"
#include "filiform/structure_table.hpp"

#include <string>
#include <string_view>

namespace filiform {

// JSON interchange. Rationals always serialize as canonical strings "p/q" (or
// "p" when q = 1), never as floats, so output is exact and diff-stable. Object
// keys are emitted in sorted order and all producers are pure, so a fixed
// input yields byte-identical text on every run.

/// {"basis": ["e1",...], "brackets": [{"i":1,"j":2,"value":[[3,"1"],...]},...],
///  "dim": n, "name": "..."} — brackets ordered by (i,j), values sparse and
/// index-ascending.
std::string to_json(const StructureTable& table);

/// Parses the StructureTable interchange format. Throws std::invalid_argument
/// on malformed documents (bad indices, wrong label count, unparsable
/// rationals). A missing "name" is tolerated.
StructureTable table_from_json(std::string_view text);

/// {"entries": [{"col":2,"row":1,"value":"1"},...], "size": n} — sparse,
/// row-major order.
std::string to_json(const Matrix& matrix);

/// {"dim": n, "family": "W", "images": [<matrix>, ...]}
std::string to_json(const MatrixRep& rep);

/// {"checked": n, "law": "leibniz", "violations": [{"i":..,"j":..,"k":..,
///  "residual": [[7,"1/2"],...]}, ...]}
std::string to_json(const IdentityReport& report);

std::string to_json(const Fingerprint& fp);

/// One JSON line of an appendix verification report:
/// {"action_ok":true,"fingerprint":{...},"leibniz_violations":0,
///  "params":["0","1",...],"quotient_ok":true,"row":k,"sample":s,...}
std::string to_json_line(const RowCheckResult& result);

}  // namespace filiform
