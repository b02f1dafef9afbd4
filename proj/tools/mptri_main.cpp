#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mptri/bench.hpp"
#include "mptri/document.hpp"
#include "mptri/parse.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.erase(item.begin());
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.pop_back();
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct SystemInput {
    mptri::VarOrderPtr order;
    mptri::Poly f1, f2;
};

SystemInput read_system(const std::string& vars, const std::vector<std::string>& exprs,
                        const std::string& file) {
    auto names = split_csv(vars);
    if (names.empty()) throw mptri::ParseError("--vars requires a comma-separated list", 0);
    auto order = mptri::VarOrder::make(names);

    std::vector<std::string> texts = exprs;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw mptri::Error("cannot open input file: " + file);
        std::string line;
        while (std::getline(in, line) && texts.size() < 2) {
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            texts.push_back(line);
        }
    }
    if (texts.size() != 2)
        throw mptri::ParseError("exactly two polynomials are required", 0);
    SystemInput sys;
    sys.order = order;
    sys.f1 = mptri::parse_poly(texts[0], order);
    sys.f2 = mptri::parse_poly(texts[1], order);
    return sys;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiplicity preserving triangular decomposition of two-polynomial systems"};
    app.require_subcommand(1);

    std::string vars = "x,y";
    std::vector<std::string> exprs;
    std::string file;
    std::string format = "text";
    bool trace = false;
    bool verify = false;

    auto add_system_flags = [&](CLI::App* cmd) {
        cmd->add_option("--vars", vars, "comma-separated variable order, lowest first");
        cmd->add_option("--expr", exprs, "polynomial expression (give twice)");
        cmd->add_option("file", file, "file with the two polynomials, one per line");
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* dec = app.add_subcommand("decompose", "triangular decomposition");
    add_system_flags(dec);
    dec->add_flag("--trace", trace, "include the remainder-sequence audit trail");
    dec->add_flag("--verify", verify, "cross-check multiplicities against the oracle");

    CLI::App* ver = app.add_subcommand("verify", "decompose and verify against the oracle");
    add_system_flags(ver);

    CLI::App* bench = app.add_subcommand("bench", "timing harness on random dense systems");
    std::vector<std::string> degree_opts;
    int count = 100;
    unsigned long seed = 1;
    double verify_fraction = 0.1;
    bench->add_option("--degrees", degree_opts,
                      "degree pair as 'd1,d2' (repeatable; default 5,4 7,5 9,7 13,11)");
    bench->add_option("--count", count, "cases per degree pair");
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--verify-fraction", verify_fraction,
                      "fraction of cases cross-checked by the oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed() || ver->parsed()) {
            SystemInput sys = read_system(vars, exprs, file);
            mptri::RunOptions opts;
            opts.with_trace = trace;
            opts.with_verify = verify || ver->parsed();
            mptri::OutputDocument doc = mptri::run_decompose(sys.f1, sys.f2, opts);
            if (format == "json")
                std::cout << doc.to_json().dump(2) << "\n";
            else
                std::cout << doc.to_text();
            if (ver->parsed() && doc.verification && !doc.verification->match) return 1;
            return 0;
        }
        if (bench->parsed()) {
            mptri::BenchConfig cfg;
            cfg.count = count;
            cfg.seed = seed;
            cfg.verify_fraction = verify_fraction;
            if (degree_opts.empty()) {
                cfg.degree_pairs = {{5, 4}, {7, 5}, {9, 7}, {13, 11}};
            } else {
                for (const auto& d : degree_opts) {
                    auto parts = split_csv(d);
                    if (parts.size() != 2)
                        throw mptri::ParseError("--degrees expects 'd1,d2'", 0);
                    cfg.degree_pairs.emplace_back(std::stoi(parts[0]), std::stoi(parts[1]));
                }
            }
            for (const auto& p : cfg.degree_pairs) {
                if (p.first >= 20)
                    std::cerr << "note: degree pair " << p.first << "," << p.second
                              << " is long-running\n";
            }
            mptri::run_bench(cfg, std::cout);
            return 0;
        }
    } catch (const mptri::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const mptri::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
