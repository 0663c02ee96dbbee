// Command line front end: one subcommand per measurement suite.  Exit code
// is 0 only when every check in the suite passes.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kgc/harness.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string out_path;
    std::string svg_path;
    std::string format = "csv";
    int l_min = -1;
    int l_max = -1;
};

int run(const std::string& suite, const Options& opt) {
    std::string text;
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) {
            std::cerr << "cannot open config: " << opt.config_path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    if (opt.l_min >= 0) text += "\nl_min = " + std::to_string(opt.l_min);
    if (opt.l_max >= 0) text += "\nl_max = " + std::to_string(opt.l_max);
    try {
        const kgc::Config cfg = kgc::Config::from_string(text);
        const kgc::SuiteResult res = kgc::run_suite(suite, cfg);
        cfg.finish();

        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!opt.out_path.empty()) {
            file.open(opt.out_path);
            if (!file) {
                std::cerr << "cannot write: " << opt.out_path << "\n";
                return 2;
            }
            out = &file;
        }
        if (opt.format == "json")
            kgc::write_json(res, *out);
        else
            kgc::write_csv(res, *out);
        if (!opt.svg_path.empty() && !res.tables.empty() &&
            res.tables.front().columns.size() >= 2) {
            std::ofstream svg(opt.svg_path);
            kgc::write_svg_plot(res.tables.front(), 0, 1, svg);
        }
        for (const auto& c : res.checks)
            std::cerr << (c.pass ? "pass" : "FAIL") << " " << c.name
                      << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
        return res.pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dyadic profile cascade laboratory"};
    app.require_subcommand(1);
    Options opt;
    std::string chosen;
    for (const auto& name : kgc::suite_names()) {
        auto* sub = app.add_subcommand(name, "run the " + name + " suite");
        sub->add_option("--config", opt.config_path, "key=value config file");
        sub->add_option("--out", opt.out_path, "write the report here (default stdout)");
        sub->add_option("--svg", opt.svg_path, "also write an SVG plot of the first table");
        sub->add_option("--format", opt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--l-min", opt.l_min, "override the smallest dyadic depth");
        sub->add_option("--l-max", opt.l_max, "override the largest dyadic depth");
        sub->callback([&chosen, name] { chosen = name; });
    }
    CLI11_PARSE(app, argc, argv);
    return run(chosen, opt);
}
