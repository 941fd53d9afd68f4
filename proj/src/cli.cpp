#include "propb/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "propb/analysis.hpp"
#include "propb/hypergraph_file.hpp"
#include "propb/report.hpp"
#include "propb/search.hpp"
#include "propb/separation.hpp"

namespace propb {

namespace {

struct Common {
    bool json = false;
    bool deterministic = false;
    std::string out;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_out = true)
{
    cmd->add_flag("--json", c.json, "Emit the report as JSON");
    cmd->add_flag("--deterministic", c.deterministic, "Omit the timestamp so reruns are byte-identical");
    if (with_out)
        cmd->add_option("--out", c.out, "Write the report to this path instead of stdout");
    cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

struct LoadedInput {
    Hypergraph h;
    Json meta;
};

LoadedInput load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto text = buf.str();
    return {parse_hypergraph(text), Json{{"path", path}, {"sha256", sha256_hex(text)}}};
}

void emit(const Json& doc, const Common& c, std::ostream& out)
{
    const std::string body = c.json ? doc.dump(2) + "\n" : render_text(doc);
    if (c.out.empty()) {
        out << body;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::InvalidArgument, "cannot write " + c.out);
    f << body;
}

std::vector<Vertex> parse_order(const std::string& text)
{
    std::vector<Vertex> seq;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            const auto v = std::stoul(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            seq.push_back(static_cast<Vertex>(v));
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::InvalidOrdering, "'" + tok + "' is not a vertex id");
        }
    }
    return seq;
}

// Streaming file for `verify`: one JSON object per line, a pass's records
// followed by a "pass_complete" line carrying its summary.
struct RecordStream {
    std::filesystem::path path;
    std::set<std::size_t> completed;
    std::vector<SearchSummary> resumed;

    void open(bool resume)
    {
        if (!resume || !std::filesystem::exists(path)) {
            std::ofstream(path, std::ios::binary | std::ios::trunc);
            return;
        }
        std::ifstream in(path, std::ios::binary);
        std::vector<std::string> lines, kept;
        for (std::string line; std::getline(in, line);)
            if (!line.empty())
                lines.push_back(line);
        std::size_t keep = 0;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const auto j = Json::parse(lines[i]);
            if (j.at("type") == "pass_complete") {
                completed.insert(j.at("p").get<std::size_t>());
                resumed.push_back(summary_from_json(j.at("summary")));
                keep = i + 1;
            }
        }
        // Drop anything after the last completed pass.
        std::ofstream outf(path, std::ios::binary | std::ios::trunc);
        for (std::size_t i = 0; i < keep; ++i)
            outf << lines[i] << '\n';
    }

    void write(const SearchPass& pass) const
    {
        std::ofstream f(path, std::ios::binary | std::ios::app);
        for (const auto& r : pass.records) {
            Json line{{"type", "record"}};
            line.update(record_json(r));
            f << line.dump() << '\n';
        }
        f << Json{{"type", "pass_complete"}, {"p", pass.p}, {"summary", summary_json(pass.summary)}}.dump()
          << '\n';
    }
};

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Property B analysis for n-uniform hypergraphs"};
    app.require_subcommand(1);

    Common common;

    // analyze
    std::string analyze_input;
    std::size_t budget = kDefaultVertexBudget;
    bool strict = false;
    auto* analyze = app.add_subcommand("analyze", "Simple pairs, bound, colorability, set pairs, clique");
    analyze->add_option("input", analyze_input, "Hypergraph file")->required();
    analyze->add_option("--budget", budget, "Largest covered-vertex count for the exhaustive decider");
    analyze->add_flag("--strict", strict, "Exit 3 when colorability is undetermined");
    add_common(analyze, common);

    // color
    std::string color_input, order_text;
    std::uint64_t seed = 1;
    std::uint64_t trials = 0;
    auto* color = app.add_subcommand("color", "Run the greedy ordering-driven coloring");
    color->add_option("input", color_input, "Hypergraph file")->required();
    color->add_option("--order", order_text, "Comma-separated vertex processing order");
    color->add_option("--trials", trials, "Random orderings to try until one colors properly");
    color->add_option("--seed", seed, "Random seed");
    add_common(color, common);

    // mc
    std::string mc_input;
    std::uint64_t mc_trials = 10000;
    auto* mc = app.add_subcommand("mc", "Monte Carlo count of separated simple pairs");
    mc->add_option("input", mc_input, "Hypergraph file")->required();
    mc->add_option("--trials", mc_trials, "Number of random orderings");
    mc->add_option("--seed", seed, "Random seed");
    add_common(mc, common);

    // enum
    std::string enum_input;
    std::size_t enum_budget = kEnumerationVertexBudget;
    auto* en = app.add_subcommand("enum", "Exact mean of separated simple pairs over all orderings");
    en->add_option("input", enum_input, "Hypergraph file")->required();
    en->add_option("--max-p", enum_budget, "Largest vertex count to enumerate");
    add_common(en, common);

    // verify
    std::size_t verify_n = 2, max_p = 6;
    std::string stream_path;
    bool resume = false;
    SearchOptions sopts;
    auto* verify = app.add_subcommand("verify", "Search small hypergraphs for counterexamples");
    verify->add_option("--n", verify_n, "Uniformity");
    verify->add_option("--max-p", max_p, "Largest vertex count");
    verify->add_option("--out", stream_path, "Append-only JSON-lines record stream");
    verify->add_flag("--resume", resume, "Skip vertex counts already completed in --out");
    verify->add_flag("--iso", sopts.isomorph_rejection, "Test one labeled graph per isomorphism class");
    verify->add_flag("--cross-check", sopts.cross_check, "Recheck each record with the general routines");
    verify->add_option("--budget", sopts.budget, "Maximum labeled graphs (n = 2)");
    verify->add_option("--samples", sopts.samples, "Random hypergraphs per vertex count (n >= 3)");
    verify->add_option("--seed", sopts.seed, "Random seed (n >= 3)");
    add_common(verify, common, false);

    // fixtures
    std::size_t fixture_n = 3;
    auto* fixtures = app.add_subcommand("fixtures", "Run the full pipeline on the built-in fixtures");
    fixtures->add_option("--n", fixture_n, "Uniformity (2, 3 or 4)");
    fixtures->add_option("--seed", seed, "Seed for the random fixtures");
    add_common(fixtures, common);

    // gen
    std::string kind = "clique";
    std::size_t gen_n = 3, gen_p = 0, gen_m = 0, extra_vertices = 0, extra_edges = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Write a hypergraph file");
    gen->add_option("--kind", kind, "clique | padded | fano | random")
        ->check(CLI::IsMember({"clique", "padded", "fano", "random"}));
    gen->add_option("--n", gen_n, "Uniformity");
    gen->add_option("--p", gen_p, "Vertex count (random)");
    gen->add_option("--m", gen_m, "Edge count (random)");
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--extra-vertices", extra_vertices, "Fresh vertices (padded)");
    gen->add_option("--extra-edges", extra_edges, "Disjoint edges on fresh vertices (padded)");
    gen->add_option("--out", gen_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitFailure;
    }

    try {
        if (*analyze) {
            auto in = load(analyze_input);
            auto doc = make_document("analyze", common.deterministic);
            doc["input"] = in.meta;
            doc["hypergraph"] = hypergraph_json(in.h);
            const auto report = propb::analyze(in.h, budget);
            doc["analysis"] = analysis_json(in.h, report);
            doc["bollobas"] = bollobas_json(report.bollobas, report.selection_size);
            emit(doc, common, out);
            if (strict && report.colorable == Colorability::Undetermined)
                return kExitBudget;
            return kExitOk;
        }

        if (*color) {
            auto in = load(color_input);
            auto doc = make_document("color", common.deterministic);
            doc["input"] = in.meta;
            doc["hypergraph"] = hypergraph_json(in.h);
            if (trials > 0) {
                const auto result = random_restart_color(in.h, trials, seed, common.threads);
                Json c{{"mode", "random_restart"}, {"seed", seed}, {"max_trials", trials}};
                if (result) {
                    c["exhausted"] = false;
                    c["successful_trial"] = result->trial;
                    c.update(outcome_json(in.h, result->ordering, ColoringOutcome{result->coloring, std::nullopt}));
                } else {
                    c["exhausted"] = true;
                    c["successful_trial"] = nullptr;
                }
                doc["coloring"] = std::move(c);
            } else {
                const auto order = order_text.empty()
                                       ? Ordering::identity(in.h.vertex_count())
                                       : Ordering::from_sequence(parse_order(order_text), in.h.vertex_count());
                Json c{{"mode", "order"}};
                c.update(outcome_json(in.h, order, pluhar_color(in.h, order)));
                doc["coloring"] = std::move(c);
            }
            emit(doc, common, out);
            return kExitOk;
        }

        if (*mc) {
            auto in = load(mc_input);
            auto doc = make_document("mc", common.deterministic);
            doc["input"] = in.meta;
            doc["hypergraph"] = hypergraph_json(in.h);
            const auto stats = monte_carlo_separation(in.h, mc_trials, seed, common.threads);
            auto sep = monte_carlo_json(stats, seed);
            sep["m2"] = m2(in.h);
            sep["expected_mean"] = rational_json(Rational(BigInt(m2(in.h)), bound(in.h.uniformity())));
            doc["separation"] = std::move(sep);
            emit(doc, common, out);
            return kExitOk;
        }

        if (*en) {
            auto in = load(enum_input);
            auto doc = make_document("enum", common.deterministic);
            doc["input"] = in.meta;
            doc["hypergraph"] = hypergraph_json(in.h);
            const auto mean = exact_mean_separated(in.h, enum_budget, common.threads);
            const Rational expected(BigInt(m2(in.h)), bound(in.h.uniformity()));
            doc["separation"] = Json{{"mode", "enumeration"},
                                     {"orderings", exact_json(factorial(in.h.vertex_count()))},
                                     {"m2", m2(in.h)},
                                     {"mean_separated", rational_json(mean)},
                                     {"expected_mean", rational_json(expected)},
                                     {"matches_expected", mean == expected}};
            emit(doc, common, out);
            return kExitOk;
        }

        if (*verify) {
            sopts.threads = common.threads;
            auto doc = make_document("verify", common.deterministic);
            RecordStream stream;
            if (!stream_path.empty()) {
                stream.path = stream_path;
                stream.open(resume);
            }
            const auto run = verify_bound_exhaustive(
                verify_n, max_p, sopts, [&](std::size_t p) { return stream.completed.count(p) > 0; },
                [&](const SearchPass& pass) {
                    if (!stream_path.empty())
                        stream.write(pass);
                });

            SearchSummary total = run.total;
            for (const auto& s : stream.resumed)
                total.merge(s);
            Json passes = Json::array();
            Json records = stream_path.empty() ? Json::array() : Json(nullptr);
            for (const auto& pass : run.passes) {
                passes.push_back(Json{{"p", pass.p}, {"summary", summary_json(pass.summary)}});
                if (stream_path.empty())
                    for (const auto& r : pass.records)
                        records.push_back(record_json(r));
            }
            doc["search"] = Json{{"n", verify_n},
                                 {"max_p", max_p},
                                 {"bound", exact_json(bound(verify_n))},
                                 {"mode", verify_n == 2 ? (sopts.isomorph_rejection ? "isomorph_rejection" : "labeled")
                                                        : "sampled"},
                                 {"resumed_passes", std::vector<std::size_t>(stream.completed.begin(), stream.completed.end())},
                                 {"passes", std::move(passes)},
                                 {"summary", summary_json(total)},
                                 {"records", std::move(records)}};
            emit(doc, common, out);
            return total.counterexamples.empty() ? kExitOk : kExitCounterexample;
        }

        if (*fixtures) {
            auto doc = make_document("fixtures", common.deterministic);
            doc["fixtures"] = fixtures_json(verify_fixture_suite(fixture_n, seed));
            emit(doc, common, out);
            return kExitOk;
        }

        if (*gen) {
            Hypergraph h;
            if (kind == "clique")
                h = complete_hypergraph(gen_n);
            else if (kind == "padded")
                h = pad(complete_hypergraph(gen_n), extra_vertices, extra_edges);
            else if (kind == "fano")
                h = fano_plane();
            else
                h = random_hypergraph(gen_n, gen_p, gen_m, seed);
            const auto text = render_hypergraph(h);
            if (gen_out.empty()) {
                out << text;
            } else {
                std::ofstream f(gen_out, std::ios::binary);
                if (!f)
                    throw Error(ErrorKind::InvalidArgument, "cannot write " + gen_out);
                f << text;
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.kind()) {
        case ErrorKind::ParseError: return kExitParseError;
        case ErrorKind::BudgetExceeded: return kExitBudget;
        case ErrorKind::FixtureFailure: return kExitCounterexample;
        default: return kExitFailure;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

} // namespace propb
