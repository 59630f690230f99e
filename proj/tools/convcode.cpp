// convcode: distance bounds, exact distance measurement, catalog
// verification and sigma-cyclic construction for convolutional codes over
// small fields.  All subcommands print a single JSON report to stdout
// (stable key order) and a one-line human summary to stderr.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "convcode/convcode.hpp"

using json = nlohmann::ordered_json;
using namespace convcode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

json profile_json(const CodeProfile& p) {
    return {{"id", p.id()},     {"n", p.n},           {"k", p.k},
            {"delta", p.delta}, {"memory", p.memory}, {"q", p.q},
            {"forney", p.forney}, {"basic", p.basic},   {"minimal", p.minimal}};
}

json bounds_json(const BoundsReport& r) {
    json out{{"singleton_gen", r.singleton_gen},
             {"heller", r.heller},
             {"griesmer", r.griesmer},
             {"i0", r.i0},
             {"mds_min_q", r.mds_field.q_min},
             {"mds_q_bound", std::to_string(r.mds_field.bound_num) + "/" +
                                 std::to_string(r.mds_field.bound_den)}};
    if (r.block) {
        out["block"] = {{"singleton", r.block->singleton},
                        {"plotkin", r.block->plotkin},
                        {"griesmer", r.block->griesmer}};
    }
    return out;
}

int emit(const json& report, int code, const std::string& summary) {
    std::cout << report.dump(2) << "\n";
    std::cerr << summary << "\n";
    return code;
}

int emit_input_error(const std::string& command, const std::string& message) {
    json report{{"command", command}, {"error", message}, {"status", "input_error"}};
    return emit(report, kExitInputError, "error: " + message);
}

std::optional<double> default_budget_seconds() {
    if (const char* env = std::getenv("CONVCODE_BUDGET_SECONDS")) {
        try {
            return std::stod(env);
        } catch (...) {
        }
    }
    return std::nullopt;
}

SearchBudget make_budget(const std::optional<double>& seconds) {
    if (seconds) return SearchBudget::seconds(*seconds);
    if (auto env = default_budget_seconds()) return SearchBudget::seconds(*env);
    return {};
}

struct AnalyzeOptions {
    std::optional<int> coldist_len;
    std::optional<int> spectrum_wmax;
    std::optional<double> budget_seconds;
};

/// Shared analysis block: profile, bounds for the profile, distances,
/// evenness and MDS flags.  Distances are only computed for basic minimal
/// matrices (the searches require them).
json analyze_matrix(const PolyMatrix& G, const AnalyzeOptions& opt, bool& spectrum_incomplete,
                    std::int64_t* d_free_out = nullptr) {
    json results;
    const CodeProfile p = profile(G);
    results["profile"] = profile_json(p);

    if (p.k < p.n) results["bounds"] = bounds_json(bounds_report(p.n, p.k, p.delta, p.memory, p.q));

    if (p.basic && p.minimal) {
        const int L = opt.coldist_len.value_or(2 * (p.delta + 5));
        const DistanceReport rep = distance_report(G, L);
        if (d_free_out) *d_free_out = rep.d_free;
        json dist{{"d_free", rep.d_free}, {"coldist", rep.coldist}};
        if (rep.stabilization_index)
            dist["stabilization_index"] = *rep.stabilization_index;
        else
            dist["stabilization_index"] = nullptr;
        results["distance"] = dist;
        results["mds"] = json{{"is_mds", false}};
        const MdsFlags flags = mds_flags(p, rep.d_free, rep.coldist);
        results["mds"] = {{"is_mds", flags.is_mds},
                          {"M", flags.M},
                          {"is_strongly_mds", flags.is_strongly_mds},
                          {"is_compact", flags.is_compact}};
        if (p.q == 2) results["evenness"] = is_even(G) ? "even" : "not even";
        if (opt.spectrum_wmax) {
            const auto spec = weight_spectrum(G, *opt.spectrum_wmax, make_budget(opt.budget_seconds));
            json counts;
            for (const auto& [w, c] : spec.counts) counts[std::to_string(w)] = c;
            results["spectrum"] = counts;
            results["spectrum_complete"] = spec.complete;
            spectrum_incomplete = !spec.complete;
        }
    }
    return results;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance bounds and exact distances for convolutional codes over small fields"};
    app.require_subcommand(1);

    // ----- bounds -----
    auto* cmd_bounds = app.add_subcommand("bounds", "distance bounds for given parameters");
    long long bn = 0, bk = 0, bdelta = 0, bm = 0, bq = 0;
    cmd_bounds->add_option("--n", bn, "code length")->required();
    cmd_bounds->add_option("--k", bk, "code dimension")->required();
    cmd_bounds->add_option("--delta", bdelta, "complexity")->required();
    cmd_bounds->add_option("--m", bm, "memory")->required();
    cmd_bounds->add_option("--q", bq, "field size (prime power)")->required();

    // ----- analyze -----
    auto* cmd_analyze = app.add_subcommand("analyze", "analyze a generator matrix file");
    std::string matrix_path;
    std::string cols_spec;
    AnalyzeOptions aopt;
    std::optional<std::int64_t> expect_dfree;
    int opt_coldist = -1, opt_spectrum = -1;
    double opt_budget = -1;
    std::int64_t opt_expect = -1;
    cmd_analyze->add_option("--matrix", matrix_path, "matrix file")->required();
    cmd_analyze->add_option("--cols", cols_spec, "keep these 1-based columns (e.g. 1,2,6,9,12-15)");
    cmd_analyze->add_option("--coldist", opt_coldist, "column distances up to this index");
    cmd_analyze->add_option("--spectrum", opt_spectrum, "weight spectrum up to this weight");
    cmd_analyze->add_option("--budget-seconds", opt_budget, "wall-clock budget for searches");
    cmd_analyze->add_option("--expect-dfree", opt_expect, "fail (exit 1) unless d_free matches");

    // ----- cyclic -----
    auto* cmd_cyclic = app.add_subcommand("cyclic", "sigma-cyclic construction and checks");
    cmd_cyclic->require_subcommand(1);
    int cn = 0;
    long long cq = 0;
    std::string sigma_text, g_text, cyc_matrix_path;
    auto* cyc_autos = cmd_cyclic->add_subcommand("autos", "enumerate the algebra automorphisms");
    cyc_autos->add_option("--n", cn, "code length")->required();
    cyc_autos->add_option("--q", cq, "field size")->required();
    auto* cyc_build = cmd_cyclic->add_subcommand("build", "build a code from a generator polynomial");
    cyc_build->add_option("--n", cn, "code length")->required();
    cyc_build->add_option("--q", cq, "field size")->required();
    cyc_build->add_option("--sigma", sigma_text, "automorphism image of x, e.g. \"x^5\"")->required();
    cyc_build->add_option("--g", g_text, "generator polynomial in the skew grammar")->required();
    auto* cyc_check = cmd_cyclic->add_subcommand("check", "check sigma-cyclicity of a matrix");
    cyc_check->add_option("--matrix", cyc_matrix_path, "matrix file")->required();
    cyc_check->add_option("--sigma", sigma_text, "automorphism image of x")->required();

    // ----- catalog -----
    auto* cmd_catalog = app.add_subcommand("catalog", "the bundled reference catalog");
    cmd_catalog->require_subcommand(1);
    auto* cat_list = cmd_catalog->add_subcommand("list", "list catalog entries");
    auto* cat_verify = cmd_catalog->add_subcommand("verify", "recompute and compare table annotations");
    std::string verify_id;
    bool verify_all = false, verify_deep = false;
    cat_verify->add_option("id", verify_id, "catalog id, e.g. \"(7,3,3;1)_2\"");
    cat_verify->add_flag("--all", verify_all, "verify every entry");
    cat_verify->add_flag("--deep", verify_deep, "run the exhaustive low-degree evenness check");
    auto* cat_export = cmd_catalog->add_subcommand("export", "write an entry as a matrix file");
    std::string export_id, export_out;
    cat_export->add_option("--id", export_id, "catalog id")->required();
    cat_export->add_option("--out", export_out, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (cmd_bounds->parsed()) {
            json report{{"command", "bounds"},
                        {"inputs", {{"n", bn}, {"k", bk}, {"delta", bdelta}, {"m", bm}, {"q", bq}}}};
            try {
                report["results"] = bounds_json(bounds_report(bn, bk, bdelta, bm, bq));
            } catch (const std::invalid_argument& ex) {
                return emit_input_error("bounds", ex.what());
            }
            report["status"] = "ok";
            return emit(report, kExitOk,
                        "griesmer " + report["results"]["griesmer"].dump() + ", heller " +
                            report["results"]["heller"].dump() + ", singleton " +
                            report["results"]["singleton_gen"].dump());
        }

        if (cmd_analyze->parsed()) {
            if (opt_coldist >= 0) aopt.coldist_len = opt_coldist;
            if (opt_spectrum >= 0) aopt.spectrum_wmax = opt_spectrum;
            if (opt_budget >= 0) aopt.budget_seconds = opt_budget;
            if (opt_expect >= 0) expect_dfree = opt_expect;
            json report{{"command", "analyze"}};
            json inputs{{"matrix", matrix_path}};
            std::ifstream in(matrix_path);
            if (!in) return emit_input_error("analyze", "cannot open " + matrix_path);
            std::stringstream buf;
            buf << in.rdbuf();
            PolyMatrix* gp = nullptr;
            std::optional<MatrixFile> file;
            std::optional<PolyMatrix> cut;
            try {
                file = parse_matrix_file(buf.str());
                gp = &file->matrix;
                if (!cols_spec.empty()) {
                    const auto cols = parse_column_list(cols_spec);
                    inputs["cols"] = cols;
                    cut = puncture(file->matrix, cols);
                    gp = &*cut;
                }
            } catch (const std::invalid_argument& ex) {
                return emit_input_error("analyze", ex.what());
            }
            if (aopt.coldist_len) inputs["coldist"] = *aopt.coldist_len;
            if (aopt.spectrum_wmax) inputs["spectrum"] = *aopt.spectrum_wmax;
            if (expect_dfree) inputs["expect_dfree"] = *expect_dfree;
            report["inputs"] = inputs;

            bool partial = false;
            std::int64_t d_free = -1;
            report["results"] = analyze_matrix(*gp, aopt, partial, &d_free);
            if (partial) {
                report["status"] = "input_error";
                return emit(report, kExitInputError, "search budget exceeded, partial results");
            }
            if (expect_dfree && d_free != *expect_dfree) {
                report["status"] = "mismatch";
                return emit(report, kExitMismatch,
                            "d_free " + std::to_string(d_free) + " does not match expected " +
                                std::to_string(*expect_dfree));
            }
            report["status"] = "ok";
            return emit(report, kExitOk, "profile " + report["results"]["profile"]["id"].get<std::string>());
        }

        if (cyc_autos->parsed() || cyc_build->parsed() || cyc_check->parsed()) {
            long long p;
            int m;
            if (cyc_autos->parsed() || cyc_build->parsed()) {
                if (!is_prime_power(cq, &p, &m) || cq > 256)
                    return emit_input_error("cyclic", "q must be a prime power <= 256");
            }

            if (cyc_autos->parsed()) {
                json report{{"command", "cyclic autos"}, {"inputs", {{"n", cn}, {"q", cq}}}};
                AlgebraPtr alg;
                try {
                    alg = Algebra::get(Field::get(static_cast<int>(p), m), cn);
                    const auto autos = enumerate_automorphisms(*alg);
                    json list = json::array();
                    for (const auto& a : autos) list.push_back(a.str());
                    report["results"] = {{"count", autos.size()}, {"images", list}};
                } catch (const std::invalid_argument& ex) {
                    return emit_input_error("cyclic autos", ex.what());
                }
                report["status"] = "ok";
                return emit(report, kExitOk,
                            std::to_string(report["results"]["count"].get<size_t>()) + " automorphisms");
            }

            if (cyc_build->parsed()) {
                json report{{"command", "cyclic build"},
                            {"inputs", {{"n", cn}, {"q", cq}, {"sigma", sigma_text}, {"g", g_text}}}};
                std::optional<PolyMatrix> G;
                try {
                    auto alg = Algebra::get(Field::get(static_cast<int>(p), m), cn);
                    auto sigma = std::make_shared<const Automorphism>(
                        Automorphism(parse_algebra_element(*alg, sigma_text)));
                    const auto g = parse_skew_poly(sigma, g_text);
                    G = ideal_generator_matrix(g);
                } catch (const std::invalid_argument& ex) {
                    return emit_input_error("cyclic build", ex.what());
                }
                if (!G) {
                    report["results"] = {{"direct_summand", false}};
                    report["status"] = "mismatch";
                    return emit(report, kExitMismatch,
                                "the ideal is not the polynomial part of a code (no direct summand)");
                }
                bool partial = false;
                report["results"] = json{{"direct_summand", true},
                                         {"matrix", write_matrix_file(*G)}};
                const json analysis = analyze_matrix(*G, aopt, partial);
                for (const auto& [key, val] : analysis.items()) report["results"][key] = val;
                report["status"] = "ok";
                return emit(report, kExitOk,
                            "built " + report["results"]["profile"]["id"].get<std::string>());
            }

            // cyclic check
            json report{{"command", "cyclic check"},
                        {"inputs", {{"matrix", cyc_matrix_path}, {"sigma", sigma_text}}}};
            std::ifstream in(cyc_matrix_path);
            if (!in) return emit_input_error("cyclic check", "cannot open " + cyc_matrix_path);
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                const auto file = parse_matrix_file(buf.str());
                auto alg = Algebra::get(file.field, file.matrix.cols());
                auto sigma = std::make_shared<const Automorphism>(
                    Automorphism(parse_algebra_element(*alg, sigma_text)));
                const bool cyc = is_sigma_cyclic(file.matrix, sigma);
                report["results"] = {{"sigma_cyclic", cyc}};
                report["status"] = "ok";
                return emit(report, kExitOk, cyc ? "sigma-cyclic" : "not sigma-cyclic");
            } catch (const std::invalid_argument& ex) {
                return emit_input_error("cyclic check", ex.what());
            }
        }

        if (cat_list->parsed()) {
            json report{{"command", "catalog list"}};
            json list = json::array();
            for (const auto& e : catalog())
                list.push_back({{"id", e.id},
                                {"table", e.table},
                                {"g", e.expected_g},
                                {"cyclic", e.cyclic},
                                {"evenness", to_string(e.evenness)}});
            report["results"] = {{"count", catalog().size()}, {"entries", list}};
            report["status"] = "ok";
            return emit(report, kExitOk, std::to_string(catalog().size()) + " entries");
        }

        if (cat_verify->parsed()) {
            if (verify_id.empty() && !verify_all)
                return emit_input_error("catalog verify", "give a catalog id or --all");
            std::vector<const CatalogEntry*> selected;
            if (verify_all) {
                for (const auto& e : catalog()) selected.push_back(&e);
            } else {
                try {
                    selected.push_back(&catalog_get(verify_id));
                } catch (const std::invalid_argument& ex) {
                    return emit_input_error("catalog verify", ex.what());
                }
            }
            json report{{"command", "catalog verify"},
                        {"inputs", {{"all", verify_all}, {"deep", verify_deep}}}};
            if (!verify_id.empty()) report["inputs"]["id"] = verify_id;
            json list = json::array();
            bool all_pass = true;
            VerifyOptions opt;
            opt.deep_evenness = verify_deep;
            for (const auto* e : selected) {
                const auto rep = verify(*e, opt);
                all_pass = all_pass && rep.all_pass;
                json checks = json::array();
                for (const auto& c : rep.checks)
                    checks.push_back({{"name", c.name},
                                      {"expected", c.expected},
                                      {"computed", c.computed},
                                      {"pass", c.pass}});
                json entry{{"id", rep.id},
                           {"pass", rep.all_pass},
                           {"d_free", rep.d_free},
                           {"griesmer", rep.griesmer},
                           {"mds", {{"is_mds", rep.mds.is_mds},
                                    {"M", rep.mds.M},
                                    {"is_strongly_mds", rep.mds.is_strongly_mds},
                                    {"is_compact", rep.mds.is_compact}}},
                           {"checks", checks}};
                if (rep.stabilization_index) entry["stabilization_index"] = *rep.stabilization_index;
                if (!rep.evenness_verdict.empty()) entry["evenness"] = rep.evenness_verdict;
                list.push_back(entry);
            }
            report["results"] = {{"entries", list}, {"all_pass", all_pass}};
            report["status"] = all_pass ? "ok" : "mismatch";
            return emit(report, all_pass ? kExitOk : kExitMismatch,
                        all_pass ? std::to_string(selected.size()) + " entries pass"
                                 : "verification mismatch");
        }

        if (cat_export->parsed()) {
            json report{{"command", "catalog export"}, {"inputs", {{"id", export_id}}}};
            try {
                const auto& e = catalog_get(export_id);
                const std::string text = write_matrix_file(e.matrix);
                if (!export_out.empty()) {
                    std::ofstream out(export_out);
                    if (!out) return emit_input_error("catalog export", "cannot write " + export_out);
                    out << text;
                    report["results"] = {{"written", export_out}};
                } else {
                    report["results"] = {{"matrix", text}};
                }
            } catch (const std::invalid_argument& ex) {
                return emit_input_error("catalog export", ex.what());
            }
            report["status"] = "ok";
            return emit(report, kExitOk, "exported " + export_id);
        }
    } catch (const std::exception& ex) {
        return emit_input_error("convcode", ex.what());
    }
    return kExitInputError;
}
