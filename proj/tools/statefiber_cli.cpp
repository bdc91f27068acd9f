// statefiber: state-surface fiber detection for link diagrams in PD notation.

#include "statefiber/corpus.hpp"
#include "statefiber/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitUsage = 64;

struct CommonOpts {
    std::string pd;        // inline PD (or JSON) text; "-" reads stdin
    std::string file;
    int cap = 20;
};

int default_cap() {
    if (const char* env = std::getenv("STATEFIBER_CAP")) {
        try {
            return std::stoi(env);
        } catch (...) {
            // fall through to default
        }
    }
    return 20;
}

void add_input_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("pd", opts.pd, "PD text such as \"X(1,5,2,4) ...\", a JSON diagram, or - for stdin");
    cmd->add_option("--file", opts.file, "read the diagram from a file");
    cmd->add_option("--cap", opts.cap, "state-enumeration cap (env STATEFIBER_CAP)")
        ->capture_default_str();
}

statefiber::LinkDiagram read_diagram(const CommonOpts& opts) {
    std::string text;
    if (!opts.file.empty()) {
        std::ifstream in(opts.file);
        if (!in)
            throw statefiber::ParseError("cannot open " + opts.file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else if (opts.pd == "-" || opts.pd.empty()) {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        text = opts.pd;
    }
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return statefiber::diagram_from_json(statefiber::OrderedJson::parse(text));
    return statefiber::parse_pd(text);
}

void print_report(const statefiber::OrderedJson& j, bool pretty) {
    if (!pretty) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // flat human-readable table
    std::function<void(const statefiber::OrderedJson&, const std::string&)> walk =
        [&](const statefiber::OrderedJson& node, const std::string& prefix) {
            if (node.is_object()) {
                for (auto it = node.begin(); it != node.end(); ++it)
                    walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            } else {
                std::cout << prefix << " = " << node.dump() << "\n";
            }
        };
    walk(j, "");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kauffman state surface fiber detection"};
    app.require_subcommand(1);

    CommonOpts opts;
    opts.cap = default_cap();
    std::string state_selector = "all-a";
    std::string format = "json";
    bool pretty = false;
    bool with_jones = false;
    bool check_corollary_flag = false;
    std::string filter;
    bool corpus_print = false;

    auto* analyze = app.add_subcommand("analyze", "run the tree-test pipeline on one state");
    add_input_options(analyze, opts);
    analyze->add_option("--state", state_selector,
                        "all-a | all-b | seifert | literal like AAB")
        ->capture_default_str();
    analyze->add_flag("--jones", with_jones, "include the Jones section in the report");
    analyze->add_flag("--pretty", pretty, "human-readable output");

    auto* jones = app.add_subcommand("jones", "Jones polynomial and coefficient report");
    add_input_options(jones, opts);
    jones->add_flag("--check-corollary", check_corollary_flag,
                    "also verify the beta'/tree/fiber consistency checks");
    jones->add_flag("--pretty", pretty, "human-readable output");

    auto* graph = app.add_subcommand("graph", "emit the state graph and its reduction");
    add_input_options(graph, opts);
    graph->add_option("--state", state_selector,
                      "all-a | all-b | seifert | literal like AAB")
        ->capture_default_str();
    graph->add_option("--format", format, "dot | json")->capture_default_str();

    auto* corpus = app.add_subcommand("corpus", "sweep the bundled fixture corpus");
    corpus->add_option("--filter", filter, "only run fixtures whose name contains this");
    corpus->add_option("--cap", opts.cap, "state-enumeration cap")->capture_default_str();
    corpus->add_flag("--print", corpus_print, "print freshly computed corpus lines and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (analyze->parsed()) {
            auto d = read_diagram(opts);
            auto sigma = statefiber::parse_state(d, state_selector);
            print_report(statefiber::analysis_report(d, sigma, state_selector, with_jones,
                                                     opts.cap),
                         pretty);
            return kExitOk;
        }
        if (jones->parsed()) {
            auto d = read_diagram(opts);
            statefiber::OrderedJson j;
            j["jones"] = statefiber::jones_report_to_json(statefiber::jones_report(d, opts.cap));
            if (check_corollary_flag) {
                auto report = statefiber::check_corollary(d, opts.cap);
                j["corollary"] = statefiber::corollary_report_to_json(report);
                print_report(j, pretty);
                return report.holds() ? kExitOk : kExitMismatch;
            }
            print_report(j, pretty);
            return kExitOk;
        }
        if (graph->parsed()) {
            auto d = read_diagram(opts);
            auto sigma = statefiber::parse_state(d, state_selector);
            auto g = statefiber::state_graph(d, sigma);
            auto reduced = statefiber::reduce(g);
            if (format == "dot") {
                std::cout << statefiber::graph_to_dot(g)
                          << statefiber::reduced_graph_to_dot(reduced);
            } else if (format == "json") {
                statefiber::OrderedJson j;
                j["state_graph"] = statefiber::graph_to_json(g);
                j["reduced_graph"] = statefiber::reduced_graph_to_json(reduced);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cerr << "unknown --format '" << format << "'\n";
                return kExitUsage;
            }
            return kExitOk;
        }
        if (corpus->parsed()) {
            auto fixtures = statefiber::load_corpus();
            if (!filter.empty()) {
                std::erase_if(fixtures, [&](const statefiber::Fixture& f) {
                    return f.name.find(filter) == std::string::npos;
                });
            }
            if (corpus_print) {
                for (const auto& f : fixtures)
                    std::cout << statefiber::fixture_line(f.name, f.pd, opts.cap) << "\n";
                return kExitOk;
            }
            auto report = statefiber::run_sweep(fixtures, opts.cap);
            std::cout << "fixtures: " << report.fixtures_run << ", checks: " << report.checks
                      << ", mismatches: " << report.mismatches.size() << "\n";
            for (const auto& m : report.mismatches)
                std::cout << "MISMATCH " << m.fixture << "." << m.key << ": expected "
                          << m.expected << ", computed " << m.computed << "\n";
            return report.all_passed() ? kExitOk : kExitMismatch;
        }
    } catch (const statefiber::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const statefiber::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const statefiber::OrientationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const statefiber::OrderedJson::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}
