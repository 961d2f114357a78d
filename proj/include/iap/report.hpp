#pragma once

#include <iap/extremal.hpp>
#include <iap/finder.hpp>

#include <json.hpp>

namespace iap {

using Json = nlohmann::ordered_json;

Json to_json(const Progression & p);
/// {start, diff, length, elements, family, certified, aps_scanned}
Json to_json(const Witness & w);
Json to_json(const FinderConfig & cfg);
Json to_json(const SearchBudget & budget);
Json to_json(const SizeVerdict & v);
Json to_json(const Coloring & c);
Json to_json(const PermutationMap & p);
Json to_json(const SrResult & r);
Json to_json(const N0Report & r);
Json to_json(const TkReport & r);

/// Reads start/diff/length from a witness object, or from its "witness"
/// member when given a whole command output. A present "elements" array must
/// agree. Throws std::invalid_argument on anything else.
Progression progression_from_json(const Json & j);

}
