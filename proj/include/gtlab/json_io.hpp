#pragma once

#include "gtlab/expansion.hpp"
#include "gtlab/qseries.hpp"
#include "gtlab/surface_ops.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace gtlab {

using Json = nlohmann::json;

// Rationals are always "num/den" strings. Readers throw ParseError on
// malformed or inconsistent input; unknown keys are ignored.
Json to_json(const TSeries& x);
Json to_json(const FSeries& x);
Json to_json(const CycSeries& x);
Json to_json(const RedCycSeries2& x);
Json to_json(const AssocCoeffs& c);
Json to_json(const Expansion& e);
Json to_json(const GAlgTrunc& x);
Json to_json(const ClassSum& x);
Json to_json(const IndependenceReport& r);

TSeries tseries_from_json(const Json& j);
FSeries fseries_from_json(const Json& j);
AssocCoeffs assoc_from_json(const Json& j);
Expansion expansion_from_json(const Json& j);
GAlgTrunc galg_trunc_from_json(const Json& j);

// A series file holds a TSeries when no term carries "cpow".
bool is_framed_series(const Json& j);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
// Two-space indentation and a trailing newline.
std::string dump_json(const Json& j);
void write_text_file(const std::string& path, const std::string& text);

// Metadata attached to results computed through an expansion.
Json expansion_metadata(const Expansion& e);

}  // namespace gtlab
