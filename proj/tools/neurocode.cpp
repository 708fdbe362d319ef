// Command-line front end: code files in, JSON/SVG artifacts out.
// Exit codes: 0 success, 1 the tool ran but the property is false
// (verification failure, no realization found, --strict inequality),
// 2 bad input or usage.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "neurocode/code.hpp"
#include "neurocode/dim1_search.hpp"
#include "neurocode/dimension_bounds.hpp"
#include "neurocode/errors.hpp"
#include "neurocode/interval.hpp"
#include "neurocode/json_io.hpp"
#include "neurocode/simplex_realization.hpp"
#include "neurocode/svg.hpp"

namespace nc = neurocode;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        spill(out_path, content);
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{' || c == '[';
    }
    return false;
}

nc::NeuralCode load_code(const std::string& path, bool lenient) {
    const std::string text = slurp(path);
    if (looks_like_json(text)) return nc::code_from_json(nc::parse_json(text));
    return nc::parse_code(text, lenient ? nc::ParseMode::lenient : nc::ParseMode::strict);
}

nc::Realization1D load_realization1d(const std::string& path) {
    return nc::realization1d_from_json(nc::parse_json(slurp(path)));
}

std::string format_code_as(const nc::NeuralCode& code, const std::string& format) {
    if (format == "json") return nc::dump_json(nc::code_to_json(code));
    return nc::format_code(code);
}

void persist_counterexample(const std::string& results_dir, const std::string& name,
                            const nc::json& instance_fields, const nc::Realization1D& before,
                            const nc::OpenifyReport& report) {
    fs::create_directories(results_dir);
    nc::json cx = instance_fields;
    cx["realization_before"] = nc::realization1d_to_json(before);
    cx["report"] = nc::openify_report_to_json(report);
    spill(results_dir + "/" + name, nc::dump_json(cx));
}

// Batch driver shared by `openify` and `conjecture1`: one seeded instance per
// index; counterexamples are written out with the pre-opening realization so
// they can be re-verified from the file alone.
int run_batch(int count, int neurons, std::uint64_t seed, const std::string& results_dir,
              bool persist, bool strict, const std::string& out_path) {
    int unequal = 0;
    int fallbacks = 0;
    std::vector<int> counterexamples;
    for (int idx = 0; idx < count; ++idx) {
        const std::uint64_t instance_seed = seed + static_cast<std::uint64_t>(idx);
        const nc::Realization1D r = nc::random_realization_1d(neurons, instance_seed);
        const nc::OpenifyReport report = nc::conjecture1_check(r);
        if (report.epsilon_fallback) ++fallbacks;
        if (report.equal) continue;
        ++unequal;
        counterexamples.push_back(idx);
        if (persist) {
            nc::json fields;
            fields["index"] = idx;
            fields["seed"] = instance_seed;
            fields["neurons"] = neurons;
            persist_counterexample(results_dir, "counterexample-" + std::to_string(idx) + ".json",
                                   fields, r, report);
        }
    }
    nc::json summary;
    summary["instances"] = count;
    summary["neurons"] = neurons;
    summary["seed"] = seed;
    summary["unequal"] = unequal;
    summary["epsilon_fallbacks"] = fallbacks;
    summary["counterexamples"] = counterexamples;
    if (persist) summary["results_dir"] = results_dir;
    emit(out_path, nc::dump_json(summary));
    return strict && unequal > 0 ? 1 : 0;
}

int run_single_report(const std::string& file, const std::string& results_dir, bool persist,
                      bool strict, const std::string& out_path) {
    const nc::Realization1D r = load_realization1d(file);
    const nc::OpenifyReport report = nc::conjecture1_check(r);
    emit(out_path, nc::dump_json(nc::openify_report_to_json(report)));
    if (!report.equal && persist) {
        nc::json fields;
        fields["source"] = file;
        persist_counterexample(results_dir, "counterexample-0.json", fields, r, report);
    }
    return strict && !report.equal ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convex realizations of binary neural codes"};
    app.require_subcommand(1);
    int rc = 0;

    // One subcommand runs per invocation, so option storage is shared.
    std::string file;
    std::string out_path;
    std::string format = "text";
    bool lenient = false;
    bool input_order = false;
    std::string svg_path;
    nc::VerifyOptions verify_opts;
    bool refine = false;
    int max_points = -1;
    bool no_prune = false;
    std::string results_dir = "conjecture1-results";
    int random_count = 0;
    int random_neurons = 0;
    std::uint64_t random_seed = 0;
    bool strict = false;
    int cn_n = 0;
    nc::RenderSpec spec;

    const auto add_io = [&](CLI::App* sub, bool with_format) {
        sub->add_option("file", file, "input file")->required();
        sub->add_option("-o,--output", out_path, "write to this file instead of stdout");
        if (with_format)
            sub->add_option("--format", format, "code output format")
                ->check(CLI::IsMember({"text", "json"}));
    };
    const auto add_lenient = [&](CLI::App* sub) {
        sub->add_flag("--lenient", lenient, "drop duplicate codewords instead of failing");
    };
    const auto add_batch = [&](CLI::App* sub) {
        sub->add_option("file", file, "line-realization JSON file");
        sub->add_option("-o,--output", out_path, "write to this file instead of stdout");
        sub->add_option("--random", random_count, "run this many seeded random instances");
        sub->add_option("--neurons", random_neurons, "neurons per random instance");
        sub->add_option("--seed", random_seed, "base seed; instance i uses seed+i");
        sub->add_flag("--strict", strict, "exit 1 when any opened code differs");
    };
    const auto check_batch_args = [&] {
        if (file.empty() == (random_count == 0))
            throw CLI::ValidationError("give a realization file or --random N, not both");
        if (random_count > 0 && random_neurons < 1)
            throw CLI::ValidationError("--random needs --neurons");
    };

    auto* validate =
        app.add_subcommand("validate", "parse a code file and emit its canonical form");
    add_io(validate, true);
    add_lenient(validate);
    validate->callback([&] {
        emit(out_path, format_code_as(nc::canonicalize(load_code(file, lenient)), format));
    });

    auto* construct =
        app.add_subcommand("construct", "build the simplex-atom realization of a code");
    add_io(construct, false);
    add_lenient(construct);
    construct->add_flag("--input-order", input_order, "keep codewords in input order");
    construct->add_option("--svg", svg_path, "also render the realization to this SVG file");
    construct->callback([&] {
        const nc::ConstructedRealization r = nc::construct(
            load_code(file, lenient),
            input_order ? nc::OrderPolicy::input : nc::OrderPolicy::canonical);
        emit(out_path, nc::dump_json(nc::realization_to_json(r)));
        if (!svg_path.empty()) spill(svg_path, nc::render_svg_2d(r));
    });

    auto* verify = app.add_subcommand("verify", "check the construction end to end on a code");
    add_io(verify, false);
    add_lenient(verify);
    verify->add_option("--seed", verify_opts.seed, "sampling seed");
    verify->add_option("--partition-samples", verify_opts.partition_samples,
                       "points per partition check");
    verify->add_option("--convexity-samples", verify_opts.convexity_samples,
                       "pairs per convexity check");
    verify->callback([&] {
        const nc::VerificationReport report =
            nc::verify_construction(load_code(file, lenient), verify_opts);
        emit(out_path, nc::dump_json(nc::verification_report_to_json(report)));
        if (!report.pass()) rc = 1;
    });

    auto* bounds = app.add_subcommand("bounds", "embedding-dimension bounds for a code");
    add_io(bounds, false);
    add_lenient(bounds);
    bounds->add_flag("--refine", refine, "settle dimension <= 1 by exhaustive search");
    bounds->callback([&] {
        const nc::DimensionBounds b =
            nc::embedding_dimension_bounds(nc::canonicalize(load_code(file, lenient)), refine);
        emit(out_path, nc::dump_json(nc::bounds_to_json(b)));
    });

    auto* search1d = app.add_subcommand("search1d", "search for a realization on the line");
    add_io(search1d, false);
    add_lenient(search1d);
    search1d->add_option("--max-points", max_points, "cap on arrangement points (default 2n)");
    search1d->add_flag("--no-prune", no_prune, "disable symmetry and prefix pruning");
    search1d->callback([&] {
        nc::SearchOptions opts;
        if (max_points >= 0) opts.max_points = max_points;
        opts.prune = !no_prune;
        const auto found = nc::search_dim1(nc::canonicalize(load_code(file, lenient)), opts);
        if (!found) {
            std::cerr << "no convex realization on the line"
                      << (max_points >= 0 ? " within the point cap" : "") << "\n";
            rc = 1;
            return;
        }
        emit(out_path,
             nc::dump_json(nc::realization1d_to_json(nc::assignment_to_realization(*found))));
    });

    auto* realize1d =
        app.add_subcommand("realize1d", "sweep a line realization and emit its code");
    add_io(realize1d, true);
    realize1d->callback([&] {
        emit(out_path, format_code_as(nc::realized_code_1d(load_realization1d(file)), format));
    });

    auto* openify = app.add_subcommand(
        "openify", "apply the epsilon/3 opening procedure and report the code change");
    add_batch(openify);
    openify->callback([&] {
        check_batch_args();
        rc = file.empty() ? run_batch(random_count, random_neurons, random_seed, results_dir,
                                      /*persist=*/false, strict, out_path)
                          : run_single_report(file, results_dir, /*persist=*/false, strict,
                                              out_path);
    });

    auto* conjecture1 = app.add_subcommand(
        "conjecture1", "opening experiment; records instances whose code changes");
    add_batch(conjecture1);
    conjecture1->add_option("--results-dir", results_dir, "where counterexamples are written");
    conjecture1->callback([&] {
        check_batch_args();
        rc = file.empty() ? run_batch(random_count, random_neurons, random_seed, results_dir,
                                      /*persist=*/true, strict, out_path)
                          : run_single_report(file, results_dir, /*persist=*/true, strict,
                                              out_path);
    });

    auto* cn = app.add_subcommand("cn", "emit the code of all (n-1)-subsets of [n]");
    cn->add_option("n", cn_n, "neuron count")->required();
    cn->add_option("-o,--output", out_path, "write to this file instead of stdout");
    cn->add_option("--format", format, "code output format")
        ->check(CLI::IsMember({"text", "json"}));
    cn->callback([&] { emit(out_path, format_code_as(nc::generate_cn(cn_n), format)); });

    auto* render = app.add_subcommand("render", "draw a realization JSON file as SVG");
    add_io(render, false);
    render->add_option("--width", spec.width, "canvas width in pixels");
    render->add_option("--height", spec.height, "canvas height in pixels (0 = auto)");
    render->add_option("--margin", spec.margin, "canvas margin in pixels");
    render->callback([&] {
        const nc::json j = nc::parse_json(slurp(file));
        if (j.contains("intervals"))
            emit(out_path, nc::render_svg_1d(nc::realization1d_from_json(j), spec));
        else
            emit(out_path, nc::render_svg_2d(nc::realization_from_json(j), spec));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const nc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
