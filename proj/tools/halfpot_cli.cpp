// halfpot command line tool.  Talks to the library exclusively through the
// C API in halfpot.h.

#include <halfpot.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct ChainDeleter {
    void operator()(hp_chain* c) const { hp_chain_free(c); }
};
using ChainHandle = std::unique_ptr<hp_chain, ChainDeleter>;

struct StringDeleter {
    void operator()(char* s) const { hp_string_free(s); }
};
using StringHandle = std::unique_ptr<char, StringDeleter>;

ChainHandle build_or_die(int dim, int from, int to) {
    hp_chain* raw = nullptr;
    hp_status st = hp_chain_build(dim, from, to, &raw);
    if (st != HP_OK) {
        std::cerr << "error: " << hp_last_error() << "\n";
        std::exit(2);
    }
    return ChainHandle(raw);
}

void write_output(const std::string& content, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(2);
    }
    out << content;
}

int run_render(int dim, int from, int to, const std::string& format,
               const std::string& output,
               hp_status (*render)(const hp_chain*, const char*, char**)) {
    ChainHandle chain = build_or_die(dim, from, to);
    char* raw = nullptr;
    if (render(chain.get(), format.c_str(), &raw) != HP_OK) {
        std::cerr << "error: " << hp_last_error() << "\n";
        return 2;
    }
    StringHandle text(raw);
    write_output(text.get(), output);
    return 0;
}

int run_verify(int dim, int from, int to, bool numeric, const std::string& output) {
    ChainHandle chain = build_or_die(dim, from, to);
    int all_pass = 0;
    char* raw = nullptr;
    if (hp_chain_verify(chain.get(), numeric ? 1 : 0, &all_pass, &raw) != HP_OK) {
        std::cerr << "error: " << hp_last_error() << "\n";
        return 2;
    }
    StringHandle report(raw);

    std::string report_path = output;
    if (report_path.empty()) {
        if (const char* dir = std::getenv("HALFPOT_REPORT_DIR")) {
            report_path = std::string(dir) + "/halfpot_verify_dim" +
                          std::to_string(dim) + ".json";
        }
    }
    if (!report_path.empty()) write_output(report.get(), report_path);

    auto parsed = nlohmann::json::parse(report.get());
    int total = 0, failed = 0;
    for (const auto& item : parsed["items"]) {
        ++total;
        if (!item["pass"].get<bool>()) {
            ++failed;
            std::cout << "FAIL  level " << item["level"].get<int>() << "  "
                      << item["identity"].get<std::string>() << " ["
                      << item["kind"].get<std::string>() << "]\n";
        }
    }
    std::cout << (all_pass ? "PASS" : "FAIL") << ": " << total - failed << "/"
              << total << " identities verified (dim " << dim << ", levels "
              << from << ".." << to << ")\n";
    return all_pass ? 0 : 1;
}

int run_bench(int dim, int depth) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    ChainHandle chain = build_or_die(dim, -depth, depth);
    auto t1 = clock::now();
    int all_pass = 0;
    if (hp_chain_verify(chain.get(), 0, &all_pass, nullptr) != HP_OK) {
        std::cerr << "error: " << hp_last_error() << "\n";
        return 2;
    }
    auto t2 = clock::now();
    auto ms = [](auto a, auto b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    std::cout << "build  dim=" << dim << " levels -" << depth << ".." << depth
              << ": " << ms(t0, t1) << " ms\n";
    std::cout << "verify (symbolic): " << ms(t1, t2) << " ms, "
              << (all_pass ? "all pass" : "FAILURES") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"halfpot: conjugate harmonic and monogenic potential chains in "
                 "R^3_+ and R^4_+, exact construction and verification"};
    app.require_subcommand(1);

    int dim = 3, from = -4, to = 6, depth = 6;
    std::string format, output;
    bool no_numeric = false;

    auto add_common = [&](CLI::App* cmd, std::vector<std::string> formats) {
        cmd->add_option("--dim", dim, "ambient dimension of the half-space")
            ->check(CLI::IsMember({3, 4}))
            ->required();
        cmd->add_option("--from", from, "lowest chain level")->capture_default_str();
        cmd->add_option("--to", to, "highest chain level")->capture_default_str();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats));
        cmd->add_option("--output,-o", output, "output path (default stdout)");
    };

    CLI::App* gen = app.add_subcommand("gen", "generate the chain and dump it");
    add_common(gen, {"json", "latex", "text"});

    CLI::App* verify =
        app.add_subcommand("verify", "run the symbolic and numeric suites");
    verify->add_option("--dim", dim, "ambient dimension of the half-space")
        ->check(CLI::IsMember({3, 4}))
        ->required();
    verify->add_option("--from", from, "lowest chain level")->capture_default_str();
    verify->add_option("--to", to, "highest chain level")->capture_default_str();
    verify->add_flag("--no-numeric", no_numeric, "skip the numeric suite");
    verify->add_option("--output,-o", output,
                       "report path (default $HALFPOT_REPORT_DIR or stdout "
                       "summary only)");

    CLI::App* boundary =
        app.add_subcommand("boundary", "print the boundary value catalogue");
    add_common(boundary, {"json", "text"});

    CLI::App* exp =
        app.add_subcommand("export", "emit the formula tables");
    add_common(exp, {"json", "latex", "text"});

    CLI::App* bench = app.add_subcommand("bench", "time construction and verification");
    bench->add_option("--dim", dim, "ambient dimension of the half-space")
        ->check(CLI::IsMember({3, 4}))
        ->required();
    bench->add_option("--depth", depth, "chain depth")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (from > to) {
        std::cerr << "error: --from must be <= --to\n";
        return 2;
    }

    if (gen->parsed())
        return run_render(dim, from, to, format.empty() ? "json" : format, output,
                          hp_chain_render);
    if (verify->parsed()) return run_verify(dim, from, to, !no_numeric, output);
    if (boundary->parsed())
        return run_render(dim, from, to, format.empty() ? "text" : format, output,
                          hp_chain_boundary);
    if (exp->parsed())
        return run_render(dim, from, to, format.empty() ? "latex" : format, output,
                          hp_chain_formulas);
    if (bench->parsed()) return run_bench(dim, depth);
    return 2;
}
