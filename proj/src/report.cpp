#include "propb/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <limits>

#include <openssl/evp.h>

namespace propb {

Json exact_json(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json rational_json(const Rational& r)
{
    return Json{{"numerator", exact_json(numerator(r))}, {"denominator", exact_json(denominator(r))}};
}

Json hypergraph_json(const Hypergraph& h)
{
    return Json{{"n", h.uniformity()},
                {"p", h.vertex_count()},
                {"edges", h.edge_count()},
                {"covered_vertices", h.covered_vertices().size()}};
}

Json edge_json(const Hypergraph& h, EdgeIndex i)
{
    return Json{{"index", i}, {"vertices", h.edges()[i]}};
}

Json colors_json(const std::vector<Color>& colors)
{
    Json out = Json::array();
    for (Color c : colors)
        out.push_back(c == Color::Blue ? "blue" : "red");
    return out;
}

namespace {

const char* verdict_name(Colorability c)
{
    switch (c) {
    case Colorability::Yes: return "yes";
    case Colorability::No: return "no";
    case Colorability::Undetermined: return "undetermined";
    }
    return "undetermined";
}

const char* violation_name(ViolationKind k)
{
    return k == ViolationKind::Disjointness ? "disjointness" : "containment";
}

Json optional_vertices(const std::optional<std::vector<Vertex>>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json bollobas_json(const BollobasVerdict& v, std::size_t selection_size)
{
    Json violations = Json::array();
    for (const auto& x : v.violations)
        violations.push_back(Json{{"kind", violation_name(x.kind)}, {"i", x.first}, {"j", x.second}});
    return Json{{"family_size", selection_size},
                {"conditions_ok", v.conditions_ok},
                {"violations", std::move(violations)},
                {"sum", rational_json(v.sum)},
                {"equality", v.equality},
                {"common_b", optional_vertices(v.common_b)},
                {"ground_u", optional_vertices(v.ground_u)}};
}

Json analysis_json(const Hypergraph& h, const AnalysisReport& r)
{
    (void)h;
    return Json{{"m2", r.m2},
                {"bound", exact_json(r.bound)},
                {"meets_bound_exactly", r.meets_bound_exactly},
                {"seymour_ok", r.seymour_ok},
                {"critical_seymour_ok", r.critical_seymour_ok ? Json(*r.critical_seymour_ok) : Json(nullptr)},
                {"colorable", verdict_name(r.colorable)},
                {"proper_coloring", r.proper_coloring ? colors_json(*r.proper_coloring) : Json(nullptr)},
                {"clique_witness", optional_vertices(r.clique_witness)}};
}

Json outcome_json(const Hypergraph& h, const Ordering& order, const ColoringOutcome& outcome)
{
    const auto& c = outcome.coloring;
    Json witness = nullptr;
    if (outcome.separated_witness) {
        const auto& s = *outcome.separated_witness;
        witness = Json{{"first", edge_json(h, s.first)}, {"second", edge_json(h, s.second)}, {"meet", s.meet}};
    }
    return Json{{"ordering", std::vector<Vertex>(order.sequence().begin(), order.sequence().end())},
                {"colors", colors_json(c.colors)},
                {"proper", c.proper},
                {"violating_edge", c.violating_edge ? edge_json(h, *c.violating_edge) : Json(nullptr)},
                {"separated_witness", std::move(witness)}};
}

Json monte_carlo_json(const SeparationStats& s, std::uint64_t seed)
{
    Json hist = Json::array();
    for (auto [k, f] : s.histogram)
        hist.push_back(Json{{"separated", k}, {"frequency", f}});
    return Json{{"mode", "monte_carlo"},
                {"trials", s.trials},
                {"seed", seed},
                {"histogram", std::move(hist)},
                {"mean_separated", rational_json(s.mean_separated)},
                {"estimates",
                 Json{{"mean", s.mean},
                      {"variance", s.variance},
                      {"standard_error", s.standard_error},
                      {"success_rate", s.success_rate}}}};
}

Json record_json(const SearchRecord& r)
{
    return Json{{"n", r.n},
                {"p", r.p},
                {"edge_count", r.edge_count},
                {"m2", r.m2},
                {"meets_bound", r.meets_bound},
                {"has_clique", r.has_clique},
                {"seymour_ok", r.seymour_ok},
                {"canonical_form", r.canonical_form}};
}

Json summary_json(const SearchSummary& s)
{
    Json cx = Json::array();
    for (const auto& c : s.counterexamples)
        cx.push_back(Json{{"reason", c.reason}, {"record", record_json(c.record)}});
    return Json{{"n", s.n},
                {"instances_tested", s.instances_tested},
                {"non_colorable", s.non_colorable},
                {"min_m2", s.min_m2 ? Json(*s.min_m2) : Json(nullptr)},
                {"equality_cases", s.equality_cases},
                {"equality_with_clique", s.equality_with_clique},
                {"seymour_violations", s.seymour_violations},
                {"counterexample_count", s.counterexamples.size()},
                {"counterexamples", std::move(cx)}};
}

SearchSummary summary_from_json(const Json& j)
{
    SearchSummary s;
    s.n = j.at("n").get<std::size_t>();
    s.instances_tested = j.at("instances_tested").get<std::uint64_t>();
    s.non_colorable = j.at("non_colorable").get<std::uint64_t>();
    if (!j.at("min_m2").is_null())
        s.min_m2 = j.at("min_m2").get<std::uint64_t>();
    s.equality_cases = j.at("equality_cases").get<std::uint64_t>();
    s.equality_with_clique = j.at("equality_with_clique").get<std::uint64_t>();
    s.seymour_violations = j.at("seymour_violations").get<std::uint64_t>();
    for (const auto& c : j.at("counterexamples")) {
        const auto& r = c.at("record");
        s.counterexamples.push_back({SearchRecord{r.at("n").get<std::size_t>(), r.at("p").get<std::size_t>(),
                                                  r.at("edge_count").get<std::size_t>(),
                                                  r.at("m2").get<std::uint64_t>(), r.at("meets_bound").get<bool>(),
                                                  r.at("has_clique").get<bool>(), r.at("seymour_ok").get<bool>(),
                                                  r.at("canonical_form").get<std::string>()},
                                     c.at("reason").get<std::string>()});
    }
    return s;
}

Json fixtures_json(const FixtureReport& r)
{
    Json list = Json::array();
    for (const auto& f : r.fixtures)
        list.push_back(Json{{"name", f.name},
                            {"p", f.p},
                            {"edges", f.edge_count},
                            {"non_colorable", f.non_colorable},
                            {"m2", f.m2},
                            {"meets_bound", f.meets_bound},
                            {"seymour_ok", f.seymour_ok},
                            {"critical_seymour_ok", f.critical_seymour_ok},
                            {"clique", optional_vertices(f.clique)},
                            {"conditions_ok", f.meets_bound ? Json(f.conditions_ok) : Json(nullptr)},
                            {"sum_is_one", f.meets_bound ? Json(f.sum_is_one) : Json(nullptr)},
                            {"equality_structure", f.meets_bound ? Json(f.equality_structure) : Json(nullptr)}});
    return Json{{"n", r.n}, {"bound", exact_json(bound(r.n))}, {"fixtures", std::move(list)}};
}

Json make_document(std::string_view command, bool deterministic)
{
    Json timestamp = nullptr;
    if (!deterministic) {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        timestamp = buf;
    }
    return Json{{"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
                {"command", command},
                {"timestamp", std::move(timestamp)},
                {"input", nullptr},
                {"hypergraph", nullptr},
                {"analysis", nullptr},
                {"bollobas", nullptr},
                {"coloring", nullptr},
                {"separation", nullptr},
                {"search", nullptr},
                {"fixtures", nullptr}};
}

std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

namespace {

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), rows);
        return;
    }
    if (j.is_array()) {
        const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
        if (scalars) {
            std::string line;
            for (const auto& x : j) {
                if (!line.empty())
                    line += ' ';
                line += x.is_string() ? x.get<std::string>() : x.dump();
            }
            rows.emplace_back(path, line.empty() ? "(none)" : line);
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
        return;
    }
    if (j.is_null())
        return;
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
}

} // namespace

std::string render_text(const Json& doc)
{
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::size_t width = 0;
    for (const auto& [k, v] : rows)
        width = std::max(width, k.size());
    std::string out;
    for (const auto& [k, v] : rows) {
        out += k;
        out.append(width - k.size() + 2, ' ');
        out += v;
        out += '\n';
    }
    return out;
}

} // namespace propb
