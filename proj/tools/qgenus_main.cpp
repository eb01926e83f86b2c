#include <CLI11.hpp>
#include <json.hpp>

#include "qgenus/bounds.hpp"
#include "qgenus/extremal.hpp"
#include "qgenus/oracle.hpp"

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

// Exit codes: 0 success, 1 invalid input, 2 verification mismatch.

namespace {

using qgenus::i64;

i64 resolve_node_budget(i64 flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* raw = std::getenv("QGENUS_NODE_BUDGET")) {
        char* end = nullptr;
        const long long parsed = std::strtoll(raw, &end, 10);
        if (end == raw || *end != '\0' || parsed <= 0)
            throw std::invalid_argument("QGENUS_NODE_BUDGET must be a positive integer");
        return parsed;
    }
    return qgenus::kDefaultNodeBudget;
}

int run_compute(i64 d, i64 k, const std::string& format) {
    const qgenus::BoundReport report = qgenus::genus_bound(d, k);
    if (format == "json") {
        std::cout << qgenus::json_report(d, k, report).dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << qgenus::csv_header() << '\n' << qgenus::csv_row(d, k, report) << '\n';
    } else {
        std::cout << qgenus::text_report(d, k, report);
    }
    return 0;
}

int run_sweep(i64 k, i64 d_from, i64 d_to, const std::string& format) {
    if (d_from > d_to) throw std::invalid_argument("sweep requires --d-from <= --d-to");
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (i64 d = d_from; d <= d_to; ++d)
            rows.push_back(qgenus::json_report(d, k, qgenus::genus_bound(d, k)));
        std::cout << rows.dump(2) << '\n';
        return 0;
    }
    if (format == "csv") {
        std::cout << qgenus::csv_header(true) << '\n';
        for (i64 d = d_from; d <= d_to; ++d)
            std::cout << qgenus::csv_row(d, k, qgenus::genus_bound(d, k), true) << '\n';
        return 0;
    }
    // text: the same columns, space-aligned
    const int widths[] = {5, 3, 6, 4, 4, 6, 9, 8, 3, 8, 10, 24, 5, 5, 16, 21};
    std::istringstream header(qgenus::csv_header(true));
    std::string cell;
    int column = 0;
    while (std::getline(header, cell, ','))
        std::cout << std::setw(widths[column++]) << cell << ' ';
    std::cout << '\n';
    for (i64 d = d_from; d <= d_to; ++d) {
        std::istringstream row(qgenus::csv_row(d, k, qgenus::genus_bound(d, k), true));
        column = 0;
        while (std::getline(row, cell, ','))
            std::cout << std::setw(widths[column++]) << cell << ' ';
        std::cout << '\n';
    }
    return 0;
}

nlohmann::json template_json(const qgenus::TemplateReport& report) {
    return nlohmann::json{
        {"sequence", report.sequence.values()},
        {"functional", qgenus::genus_functional(report.sequence)},
        {"repaired", report.repaired},
        {"raw_template", report.raw_template},
        {"notes", report.notes},
    };
}

void print_template_text(const std::string& label, const qgenus::TemplateReport& report) {
    std::cout << label << ": " << report.sequence.render();
    if (report.repaired) {
        std::cout << "   [repaired; raw template:";
        for (i64 v : report.raw_template) std::cout << ' ' << v;
        std::cout << ']';
    }
    std::cout << '\n'
              << label << " functional: " << qgenus::genus_functional(report.sequence)
              << '\n';
}

int run_extremal(i64 d, i64 k, const std::string& format) {
    if (format == "csv")
        throw std::invalid_argument("extremal output supports text and json only");
    const qgenus::Regime reg = qgenus::regime({d, k});
    const bool large = reg == qgenus::Regime::LargeDegree;
    const i64 theta0 = qgenus::theta0_and_eps_prime({d, k}).theta0;
    const qgenus::TemplateReport tilde =
        large ? qgenus::build_tilde_gamma_large(d, k) : qgenus::build_tilde_gamma_small(d, k);
    const qgenus::TemplateReport hat = qgenus::build_hat_gamma(d, large ? k : theta0);
    const bool coincide = tilde.sequence == hat.sequence;

    if (format == "json") {
        nlohmann::json out{
            {"d", d},
            {"k", k},
            {"regime", qgenus::regime_label(reg)},
            {"gamma_tilde", template_json(tilde)},
            {"gamma_hat", template_json(hat)},
            {"coincide", coincide},
        };
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "d = " << d << ", k = " << k << "  [regime: " << qgenus::regime_label(reg)
              << "]\n";
    if (!large)
        std::cout << "templates evaluated at substituted parameters (d, theta0 = " << theta0
                  << ")\n";
    print_template_text("gamma_tilde", tilde);
    print_template_text("gamma_hat", hat);
    std::cout << "coincide: " << (coincide ? "yes" : "no") << '\n';
    return 0;
}

int run_verify(i64 k_max, i64 d_max, i64 node_budget, i64 expect_offset,
               const std::string& format) {
    i64 cells = 0;
    i64 comparisons = 0;
    for (i64 k = 1; k <= k_max; ++k) {
        for (i64 d = 1; d <= d_max; ++d) {
            const qgenus::VerificationReport report =
                qgenus::verify_pair(d, k, node_budget, expect_offset);
            ++cells;
            comparisons += static_cast<i64>(report.checks.size());
            for (const auto& check : report.checks) {
                if (check.pass) continue;
                if (format == "json") {
                    nlohmann::json out{
                        {"pass", false},
                        {"cells", cells},
                        {"comparisons", comparisons},
                        {"counterexample",
                         {{"d", d},
                          {"k", k},
                          {"check", check.name},
                          {"expected", check.expected},
                          {"actual", check.actual},
                          {"witness", check.witness}}},
                    };
                    std::cout << out.dump(2) << '\n';
                } else {
                    std::cout << "verification mismatch at d = " << d << ", k = " << k
                              << '\n'
                              << "  check:    " << check.name << '\n'
                              << "  expected: " << check.expected << '\n'
                              << "  actual:   " << check.actual << '\n';
                    if (!check.witness.empty())
                        std::cout << "  witness:  " << check.witness << '\n';
                }
                return 2;
            }
        }
    }
    if (format == "json") {
        nlohmann::json out{{"pass", true}, {"cells", cells}, {"comparisons", comparisons}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "cells:       " << cells << '\n'
                  << "comparisons: " << comparisons << '\n'
                  << "all comparisons pass\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"genus bounds for curves on a smooth three-dimensional quadric"};
    app.require_subcommand(1);

    i64 d = 0;
    i64 k = 0;
    i64 d_from = 0;
    i64 d_to = 0;
    i64 k_max = 0;
    i64 d_max = 0;
    i64 node_budget = 0;   // 0 = use QGENUS_NODE_BUDGET or the default
    i64 expect_offset = 0;
    std::string format = "text";

    const auto add_format = [&format](CLI::App* cmd, bool with_csv) {
        const std::vector<std::string> choices =
            with_csv ? std::vector<std::string>{"text", "json", "csv"}
                     : std::vector<std::string>{"text", "json"};
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(choices));
    };

    // CLI11's PositiveNumber is double-typed and reports a DBL_MIN..DBL_MAX range on failure.
    const CLI::Validator positive_int{
        [](std::string& input) -> std::string {
            i64 value = 0;
            const char* last = input.data() + input.size();
            const auto [ptr, ec] = std::from_chars(input.data(), last, value);
            if (ec != std::errc{} || ptr != last || value < 1)
                return "requires a positive integer, got '" + input + "'";
            return {};
        },
        "POSITIVE"};

    CLI::App* compute = app.add_subcommand("compute", "bound report for one (d, k) pair");
    compute->add_option("--d", d, "curve degree")->required()->check(positive_int);
    compute->add_option("--k", k, "surface class")->required()->check(positive_int);
    add_format(compute, true);

    CLI::App* sweep = app.add_subcommand("sweep", "bound reports over a degree range");
    sweep->add_option("--k", k, "surface class")->required()->check(positive_int);
    sweep->add_option("--d-from", d_from, "first degree")->required()->check(positive_int);
    sweep->add_option("--d-to", d_to, "last degree")->required()->check(positive_int);
    add_format(sweep, true);

    CLI::App* extremal =
        app.add_subcommand("extremal", "candidate-extremal sequences for one (d, k) pair");
    extremal->add_option("--d", d, "curve degree")->required()->check(positive_int);
    extremal->add_option("--k", k, "surface class")->required()->check(positive_int);
    add_format(extremal, false);

    CLI::App* verify = app.add_subcommand(
        "verify", "certify closed forms against exhaustive enumeration over a grid");
    verify->add_option("--k-max", k_max, "largest surface class")
        ->required()
        ->check(positive_int);
    verify->add_option("--d-max", d_max, "largest degree")
        ->required()
        ->check(positive_int);
    verify->add_option("--node-budget", node_budget, "enumeration node budget")
        ->check(positive_int);
    verify->add_option("--expect-offset", expect_offset,
                       "offset added to every expected value; nonzero forces mismatches");
    add_format(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (compute->parsed()) return run_compute(d, k, format);
        if (sweep->parsed()) return run_sweep(k, d_from, d_to, format);
        if (extremal->parsed()) return run_extremal(d, k, format);
        return run_verify(k_max, d_max, resolve_node_budget(node_budget), expect_offset,
                          format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
