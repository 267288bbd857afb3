#ifndef PERMGRAPH_IO_HPP
#define PERMGRAPH_IO_HPP

#include <json.hpp>

#include "permgraph/construct.hpp"
#include "permgraph/join.hpp"
#include "permgraph/order.hpp"
#include "permgraph/search.hpp"
#include "permgraph/sequence.hpp"

namespace permgraph {

using Json = nlohmann::json;

// Counts are decimal strings; numbers that are guaranteed to stay machine
// sized (vertex counts of materializable graphs, lengths) are JSON numbers.
Json big_json(const Big& x);

// {"kind": "...", "length": L, "values": ["...", ...]}
Json sequence_json(const CountSequence& s);

// {"atoms": [{"parts": [[c, s], ...], "copies": "N"}, ...]}. The parser also
// accepts entries without "copies" (meaning 1), so a fully expanded atom
// list round-trips.
Json expr_json(const JoinExpr& e);
JoinExpr expr_from_json(const Json& j);

Json permutation_json(const Permutation& p);
Json weak_order_json(const WeakOrder& w);

// Construction summary: {"vertices","alpha","sequence","verified"}.
Json summary_json(const JoinExpr& e, bool verified);

// Deterministic except for the "meta" object (wall time, worker count).
Json report_json(const CampaignReport& r);

}  // namespace permgraph

#endif
