// chromakit: exact chromatic-polynomial toolkit for cycles and small
// multigraphs. Subcommands: chromatic, verify, encode, decode.
//
// Exit codes: 0 success, 1 verification disagreement, 2 usage/input error,
// 3 work budget exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chromakit/bijection.hpp"
#include "chromakit/engine_dc.hpp"
#include "chromakit/engine_ie.hpp"
#include "chromakit/engine_walk.hpp"
#include "chromakit/errors.hpp"
#include "chromakit/formulas.hpp"
#include "chromakit/multigraph.hpp"
#include "chromakit/oracle.hpp"
#include "chromakit/verify.hpp"

namespace {

using namespace chromakit;

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::uint64_t oracle_budget_from_env() {
    const char* raw = std::getenv("CHROMAKIT_BUDGET");
    if (raw == nullptr || *raw == '\0') return budget::kMaxAssignments;
    std::istringstream in(raw);
    std::uint64_t value = 0;
    if (!(in >> value) || !in.eof()) {
        throw std::invalid_argument("CHROMAKIT_BUDGET is not a non-negative integer: " +
                                    std::string(raw));
    }
    return value;
}

std::vector<int> parse_tuple(const std::string& text) {
    std::string body = text;
    auto strip = [](std::string& s) {
        const auto begin = s.find_first_not_of(" \t");
        const auto end = s.find_last_not_of(" \t");
        s = (begin == std::string::npos) ? "" : s.substr(begin, end - begin + 1);
    };
    strip(body);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
        throw std::invalid_argument("tuple must be parenthesized, e.g. (1,2,1): " + text);
    }
    body = body.substr(1, body.size() - 2);
    std::vector<int> values;
    std::istringstream in(body);
    std::string field;
    while (std::getline(in, field, ',')) {
        strip(field);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(field, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("tuple entry is not an integer: \"" + field + "\"");
        }
        if (used != field.size()) {
            throw std::invalid_argument("tuple entry is not an integer: \"" + field + "\"");
        }
        values.push_back(value);
    }
    if (values.empty()) throw std::invalid_argument("tuple has no entries: " + text);
    return values;
}

std::string format_tuple(const std::vector<int>& values) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ',';
        out << values[i];
    }
    out << ')';
    return out.str();
}

struct GraphSource {
    std::optional<std::size_t> cycle_n;
    std::optional<std::size_t> path_n;
    std::optional<std::size_t> complete_k;
    std::string file;

    bool is_cycle() const { return cycle_n.has_value(); }

    Multigraph build() const {
        if (cycle_n) return cycle_graph(*cycle_n);
        if (path_n) return path_graph(*path_n);
        if (complete_k) return complete_graph(*complete_k);
        return read_edge_list_file(file);
    }
};

struct ChromaticArgs {
    GraphSource source;
    std::string method;
    std::optional<std::int64_t> lambda;
    std::string format = "json";
};

int run_chromatic(const ChromaticArgs& args) {
    const bool cycle_only = args.method == "walk" || args.method == "ie-cycle" ||
                            args.method == "bijection" || args.method == "closed-form";
    if (cycle_only && !args.source.is_cycle()) {
        std::cerr << "error: method '" << args.method << "' applies only to --cycle inputs\n";
        return kExitUsage;
    }
    const bool count_only = args.method == "walk" || args.method == "bijection" ||
                            args.method == "oracle";
    if (count_only && !args.lambda) {
        std::cerr << "error: method '" << args.method << "' needs --lambda\n";
        return kExitUsage;
    }

    std::optional<Polynomial> poly;
    std::optional<BigInt> count;
    if (args.method == "dc") {
        poly = chromatic_polynomial_dc(args.source.build()).polynomial;
    } else if (args.method == "ie") {
        poly = chromatic_by_subsets(args.source.build());
    } else if (args.method == "ie-cycle") {
        poly = cycle_inclusion_exclusion(*args.source.cycle_n);
    } else if (args.method == "closed-form") {
        poly = cycle_closed_form(*args.source.cycle_n);
    } else if (args.method == "walk") {
        count = chromatic_count_via_walks(*args.source.cycle_n, *args.lambda);
    } else if (args.method == "bijection") {
        count = count_via_bijection(*args.source.cycle_n, *args.lambda).total;
    } else if (args.method == "oracle") {
        count = count_proper_colorings(args.source.build(), *args.lambda,
                                       oracle_budget_from_env());
    } else {
        std::cerr << "error: unknown method '" << args.method << "'\n";
        return kExitUsage;
    }

    if (poly && args.lambda) {
        count = poly->evaluate(BigInt(*args.lambda));
        poly.reset();
    }
    if (count) {
        std::cout << count->str() << '\n';
    } else {
        std::cout << (args.format == "pretty" ? poly->to_pretty() : poly->to_json()) << '\n';
    }
    return kExitOk;
}

int run_verify(std::size_t n_max, std::int64_t lambda_max, bool with_timings) {
    const std::uint64_t oracle_budget = oracle_budget_from_env();
    // The oracle runs at every (n, lambda) here, so the largest instance
    // must fit the budget up front.
    if (power_exceeds_budget(BigInt(lambda_max), n_max, oracle_budget)) {
        throw BudgetExceeded("verify: oracle instance " + std::to_string(lambda_max) + "^" +
                             std::to_string(n_max) + " exceeds the work budget of " +
                             std::to_string(oracle_budget));
    }
    VerifyOptions options;
    options.n_max = n_max;
    options.lambda_max = lambda_max;
    options.oracle_budget = oracle_budget;
    const VerifyReport report = verify_cycle_methods(options);
    std::cout << render_verify_report(report, with_timings);
    return report.agreed ? kExitOk : kExitDisagree;
}

int run_encode(const std::string& word, std::int64_t lambda) {
    const CodeWord sigma = encode_phi(parse_tuple(word), lambda);
    std::cout << format_tuple(sigma) << '\n';
    return kExitOk;
}

int run_decode(const std::string& word, std::int64_t lambda, bool debug) {
    const DecodeTrace trace = decode_psi_trace(parse_tuple(word), lambda);
    if (debug) std::cout << "sigma_bar " << format_tuple(trace.sigma_bar) << '\n';
    std::cout << format_tuple(trace.omega) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic polynomials of cycles, four ways, plus the coloring codec"};
    app.require_subcommand(1);

    ChromaticArgs chromatic;
    auto* cmd_chromatic =
        app.add_subcommand("chromatic", "compute a chromatic polynomial or coloring count");
    auto* source = cmd_chromatic->add_option_group("graph source");
    source->add_option("--cycle", chromatic.source.cycle_n, "cycle graph C_n");
    source->add_option("--path", chromatic.source.path_n, "path graph P_n");
    source->add_option("--complete", chromatic.source.complete_k, "complete graph K_k");
    source->add_option("--file", chromatic.source.file, "edge-list file (\"v e\" header)");
    source->require_option(1);
    cmd_chromatic->add_option("--method", chromatic.method, "dc|ie|ie-cycle|walk|bijection|closed-form|oracle")
        ->required();
    cmd_chromatic->add_option("--lambda", chromatic.lambda, "number of colors (evaluates polynomial methods)");
    cmd_chromatic->add_option("--format", chromatic.format, "json|pretty (default json)")
        ->check(CLI::IsMember({"json", "pretty"}));

    std::size_t n_max = 0;
    std::int64_t lambda_max = 0;
    bool with_timings = false;
    auto* cmd_verify = app.add_subcommand("verify", "cross-check all methods over C_1..C_n");
    cmd_verify->add_option("--n-max", n_max, "largest cycle length")->required();
    cmd_verify->add_option("--lambda-max", lambda_max, "largest color count")->required();
    cmd_verify->add_flag("--timings", with_timings, "append per-method wall times");

    std::string word;
    std::int64_t lambda = 0;
    bool debug = false;
    auto* cmd_encode = app.add_subcommand("encode", "encode a proper cycle coloring to a code word");
    cmd_encode->add_option("word", word, "coloring tuple, e.g. (1,2,1,3,2,3,1,4,2)")->required();
    cmd_encode->add_option("--lambda", lambda, "number of colors")->required();

    auto* cmd_decode = app.add_subcommand("decode", "decode a non-constant code word to a coloring");
    cmd_decode->add_option("word", word, "code word tuple, e.g. (1,1,1,2,2,2,1,3,1)")->required();
    cmd_decode->add_option("--lambda", lambda, "number of colors")->required();
    cmd_decode->add_flag("--debug", debug, "also print the intermediate sigma_bar word");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_chromatic->parsed()) return run_chromatic(chromatic);
        if (cmd_verify->parsed()) return run_verify(n_max, lambda_max, with_timings);
        if (cmd_encode->parsed()) return run_encode(word, lambda);
        if (cmd_decode->parsed()) return run_decode(word, lambda, debug);
    } catch (const chromakit::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
