#include "chromakit/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "chromakit/bijection.hpp"
#include "chromakit/engine_dc.hpp"
#include "chromakit/engine_ie.hpp"
#include "chromakit/engine_walk.hpp"
#include "chromakit/formulas.hpp"
#include "chromakit/oracle.hpp"

namespace chromakit {

namespace {

constexpr const char* kMethods[] = {"closed-form", "dc", "ie-cycle", "ie",
                                    "walk",        "bijection", "oracle"};
constexpr std::size_t kMethodCount = 7;

enum Method : std::size_t {
    kClosedForm = 0,
    kDc,
    kIeCycle,
    kIe,
    kWalk,
    kBijection,
    kOracle,
};

class MethodTimer {
public:
    explicit MethodTimer(double& sink) : sink_(sink), start_(std::chrono::steady_clock::now()) {}
    ~MethodTimer() {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        sink_ += std::chrono::duration<double, std::milli>(elapsed).count();
    }

private:
    double& sink_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

VerifyReport verify_cycle_methods(const VerifyOptions& options) {
    if (options.n_max == 0) throw std::invalid_argument("verify: n_max must be positive");
    if (options.lambda_max < 0) throw std::invalid_argument("verify: lambda_max must be >= 0");

    VerifyReport report;
    report.options = options;
    report.methods.assign(std::begin(kMethods), std::end(kMethods));
    report.table.assign(kMethodCount, std::vector<std::string>(options.n_max, "-"));
    report.timings_ms.assign(kMethodCount, 0.0);

    auto record = [&](std::size_t n, std::int64_t lambda, Method method, const BigInt& got,
                      const BigInt& expected) {
        if (lambda == options.lambda_max) {
            report.table[method][n - 1] = got.str();
        }
        if (got != expected) {
            report.failures.push_back(VerifyFailure{n, lambda, kMethods[method], got, expected});
        }
    };

    for (std::size_t n = 1; n <= options.n_max; ++n) {
        Polynomial closed, dc, ie_cycle, ie_general;
        {
            MethodTimer t(report.timings_ms[kClosedForm]);
            closed = cycle_closed_form(n);
        }
        {
            MethodTimer t(report.timings_ms[kDc]);
            dc = chromatic_polynomial_dc(cycle_graph(n)).polynomial;
        }
        {
            MethodTimer t(report.timings_ms[kIeCycle]);
            ie_cycle = cycle_inclusion_exclusion(n);
        }
        {
            MethodTimer t(report.timings_ms[kIe]);
            ie_general = chromatic_by_subsets(cycle_graph(n));
        }

        for (std::int64_t lambda = 0; lambda <= options.lambda_max; ++lambda) {
            const BigInt lambda_big(lambda);
            BigInt expected;
            {
                MethodTimer t(report.timings_ms[kClosedForm]);
                expected = closed.evaluate(lambda_big);
            }
            record(n, lambda, kClosedForm, expected, expected);
            {
                MethodTimer t(report.timings_ms[kDc]);
                record(n, lambda, kDc, dc.evaluate(lambda_big), expected);
            }
            {
                MethodTimer t(report.timings_ms[kIeCycle]);
                record(n, lambda, kIeCycle, ie_cycle.evaluate(lambda_big), expected);
            }
            {
                MethodTimer t(report.timings_ms[kIe]);
                record(n, lambda, kIe, ie_general.evaluate(lambda_big), expected);
            }
            if (lambda >= 1) {
                MethodTimer t(report.timings_ms[kWalk]);
                record(n, lambda, kWalk, chromatic_count_via_walks(n, lambda), expected);
            }
            {
                MethodTimer t(report.timings_ms[kBijection]);
                record(n, lambda, kBijection, count_via_bijection(n, lambda).total, expected);
            }
            if (options.include_oracle && n <= options.oracle_n_max &&
                lambda <= options.oracle_lambda_max) {
                MethodTimer t(report.timings_ms[kOracle]);
                record(n, lambda, kOracle,
                       count_proper_colorings(cycle_graph(n), lambda, options.oracle_budget),
                       expected);
            }
        }
    }

    report.agreed = report.failures.empty();
    return report;
}

std::string render_verify_report(const VerifyReport& report, bool with_timings) {
    const std::size_t n_max = report.options.n_max;
    std::size_t method_width = 0;
    for (const auto& m : report.methods) method_width = std::max(method_width, m.size());

    std::vector<std::size_t> col_width(n_max);
    for (std::size_t c = 0; c < n_max; ++c) {
        col_width[c] = std::to_string(c + 1).size() + 2;  // "n=" prefix
        for (const auto& row : report.table) col_width[c] = std::max(col_width[c], row[c].size());
    }

    std::ostringstream out;
    out << "values at lambda=" << report.options.lambda_max << "\n";
    out << std::string(method_width, ' ');
    for (std::size_t c = 0; c < n_max; ++c) {
        out << "  ";
        const std::string header = "n=" + std::to_string(c + 1);
        out << std::string(col_width[c] - header.size(), ' ') << header;
    }
    out << '\n';
    for (std::size_t m = 0; m < report.methods.size(); ++m) {
        out << report.methods[m] << std::string(method_width - report.methods[m].size(), ' ');
        for (std::size_t c = 0; c < n_max; ++c) {
            out << "  " << std::string(col_width[c] - report.table[m][c].size(), ' ')
                << report.table[m][c];
        }
        out << '\n';
    }

    for (const auto& f : report.failures) {
        out << "disagree: n=" << f.n << " lambda=" << f.lambda << " method=" << f.method
            << " got=" << f.got.str() << " expected=" << f.expected.str() << '\n';
    }
    out << "verdict: " << (report.agreed ? "AGREE" : "DISAGREE") << " (methods="
        << report.methods.size() << ", n<=" << n_max << ", lambda<=" << report.options.lambda_max
        << ")\n";

    if (with_timings) {
        for (std::size_t m = 0; m < report.methods.size(); ++m) {
            out << "timing: " << report.methods[m] << " " << report.timings_ms[m] << " ms\n";
        }
    }
    return out.str();
}

}  // namespace chromakit
