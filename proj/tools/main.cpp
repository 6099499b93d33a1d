#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galecount/report.hpp"

namespace {

int float_digits_from_env() {
    if (const char* v = std::getenv("GALECOUNT_FLOAT_DIGITS")) {
        const int d = std::atoi(v);
        if (d >= 1 && d <= 17) return d;
    }
    return 12;
}

std::ostream* open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return &std::cout;
    file.open(path);
    if (!file) {
        std::cerr << "cannot open output file: " << path << '\n';
        return nullptr;
    }
    return &file;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counts of d-polytopes with d+3 vertices"};
    app.require_subcommand(1);

    std::string output;
    app.add_option("-o,--output", output, "write the report to a file instead of stdout");

    auto* table = app.add_subcommand("table", "emit the count table for d = 2..max_d");
    int max_d = 20;
    std::string format = "text";
    table->add_option("--max-d", max_d, "largest dimension")->check(CLI::PositiveNumber);
    table->add_option("--format", format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* verify = app.add_subcommand("verify", "cross-check every stage against the oracle");
    int max_size = 8;
    int order = 50;
    int jobs = 1;
    verify->add_option("--max-size", max_size, "largest diagram size for brute-force checks")
        ->check(CLI::Range(1, 14));
    verify->add_option("--order", order, "truncation order for series cross-checks")
        ->check(CLI::Range(10, 2000));
    verify->add_option("--jobs", jobs, "worker threads for the oracle")->check(CLI::Range(1, 64));

    auto* asym = app.add_subcommand("asymptotics", "growth constants and convergence table");
    int asym_max_d = 60;
    asym->add_option("--max-d", asym_max_d, "largest dimension in the convergence table")
        ->check(CLI::Range(10, 100000));

    auto* bench = app.add_subcommand("bench", "doubling-ladder benchmark of the extraction path");
    int bench_max_order = 5000;
    bench->add_option("--max-order", bench_max_order, "largest truncation order")
        ->check(CLI::Range(100, 1000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    std::ofstream file;
    std::ostream* out = open_output(output, file);
    if (!out) return 2;

    try {
        if (table->parsed()) {
            if (max_d < 2) {
                std::cerr << "table requires --max-d >= 2\n";
                return 2;
            }
            const auto rows = galecount::coefficient_table(max_d);
            const auto fmt = format == "csv"    ? galecount::TableFormat::Csv
                             : format == "json" ? galecount::TableFormat::Json
                                                : galecount::TableFormat::Text;
            *out << galecount::format_table(rows, fmt);
            return 0;
        }
        if (verify->parsed()) {
            return galecount::run_verify(max_size, order, jobs, *out) == 0 ? 0 : 1;
        }
        if (asym->parsed()) {
            galecount::write_asymptotics_report(asym_max_d, float_digits_from_env(), *out);
            return 0;
        }
        if (bench->parsed()) {
            std::vector<int> ladder;
            for (int n = bench_max_order; n >= 100; n /= 2) ladder.insert(ladder.begin(), n);
            return galecount::run_bench(ladder, *out) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
