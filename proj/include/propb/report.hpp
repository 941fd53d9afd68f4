#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "propb/analysis.hpp"
#include "propb/coloring.hpp"
#include "propb/exact.hpp"
#include "propb/hypergraph.hpp"
#include "propb/search.hpp"
#include "propb/separation.hpp"
#include "propb/setpairs.hpp"

namespace propb {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "propb";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Exact integers are JSON integers while they fit in 64 bits and decimal
// strings beyond that. Rationals are {"numerator", "denominator"} in lowest
// terms; floating-point values only ever appear under an "estimates" key.
Json exact_json(const BigInt& v);
Json rational_json(const Rational& r);

Json hypergraph_json(const Hypergraph& h);
Json edge_json(const Hypergraph& h, EdgeIndex i);
Json colors_json(const std::vector<Color>& colors);
Json analysis_json(const Hypergraph& h, const AnalysisReport& r);
Json bollobas_json(const BollobasVerdict& v, std::size_t selection_size);
Json outcome_json(const Hypergraph& h, const Ordering& order, const ColoringOutcome& outcome);
Json monte_carlo_json(const SeparationStats& s, std::uint64_t seed);
Json record_json(const SearchRecord& r);
Json summary_json(const SearchSummary& s);
SearchSummary summary_from_json(const Json& j);
Json fixtures_json(const FixtureReport& r);

/// Document skeleton: every section present and null until filled in.
Json make_document(std::string_view command, bool deterministic);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

/// Human-readable "path  value" listing of a document.
std::string render_text(const Json& doc);

} // namespace propb
