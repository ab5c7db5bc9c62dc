#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lot/report.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw lot::DomainError("cannot open input: " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct Options {
    std::string command;
    std::string input;
    std::string format = "human";
    std::string seed = "I";
    int steps = -1;
    int max_vertices = 5;
    std::string filter;
    bool dedupe = false;
    int max_iterations = 8;
};

void print(const lot::Json& doc, const std::string& format) {
    std::cout << (format == "structured" ? lot::render_structured(doc)
                                         : lot::render_human(doc));
}

int dispatch(const Options& opt) {
    using namespace lot;
    if (opt.command == "enum") {
        EnumerationSpec spec{opt.max_vertices, split_list(opt.filter), opt.dedupe};
        SuiteSummary summary = run_property_suite(spec, {});
        print(envelope("enum", enum_report(spec, summary)), opt.format);
        return 0;
    }
    Lot l = parse(read_input(opt.input));
    Json payload;
    if (opt.command == "validate") {
        payload = validate_report(l);
    } else if (opt.command == "info") {
        payload = info_report(l);
    } else if (opt.command == "present") {
        payload = present_report(l);
    } else if (opt.command == "hnn") {
        payload = hnn_report_json(l, assemble(l));
    } else if (opt.command == "derive") {
        std::vector<std::string> missing = check_core_hypotheses(l);
        if (!missing.empty()) {
            std::string msg = "derive needs the pipeline hypotheses: ";
            for (size_t i = 0; i < missing.size(); ++i)
                msg += (i ? ", " : "") + missing[i];
            throw DomainError(msg);
        }
        Spine sp = extract_spine(l);
        DeriveContext ctx = make_derive_context(l, sp.e[0], sp.f[0]);
        GraphKind kind = opt.seed == "I" ? GraphKind::Initial : GraphKind::Terminal;
        payload = derive_report(l, generate_sequence(ctx, kind, opt.steps));
    } else if (opt.command == "decompose") {
        payload = decompose_report(l, classify(l));
    } else if (opt.command == "conjecture") {
        payload = conjecture_report(l, explore(l, opt.max_iterations));
    } else {
        throw InternalError("unhandled command " + opt.command);
    }
    print(envelope(opt.command, payload), opt.format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"labelled oriented tree toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"human", "structured"}))
            ->capture_default_str();
    };
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "LOT file, or - for stdin")->required();
    };

    for (const char* name : {"validate", "info", "present", "hnn", "decompose"}) {
        CLI::App* cmd = app.add_subcommand(name, "");
        add_input(cmd);
        add_format(cmd);
    }
    app.get_subcommand("validate")->description("parse a LOT file and check its invariants");
    app.get_subcommand("info")->description("structural facts: diameter, reducedness, "
                                            "minimality, derived graphs");
    app.get_subcommand("present")->description("the group presentation of the input");
    app.get_subcommand("hnn")->description("full base-group pipeline report");
    app.get_subcommand("decompose")->description("decomposition chain and classification");

    CLI::App* derive = app.add_subcommand("derive", "derivative trace with certificates");
    add_input(derive);
    add_format(derive);
    derive->add_option("--seed", opt.seed, "seed cycle graph")
        ->check(CLI::IsMember({"I", "T"}))
        ->capture_default_str();
    derive->add_option("--steps", opt.steps, "stop after this many derivatives")
        ->check(CLI::NonNegativeNumber);

    CLI::App* en = app.add_subcommand("enum", "enumeration property suite");
    add_format(en);
    en->add_option("--max-vertices", opt.max_vertices, "largest vertex count")
        ->capture_default_str();
    en->add_option("--filter", opt.filter, "comma-separated filters");
    en->add_flag("--dedupe", opt.dedupe, "one representative per isomorphism class");

    CLI::App* conj = app.add_subcommand("conjecture", "derivative families of all cycles");
    add_input(conj);
    add_format(conj);
    conj->add_option("--max-iterations", opt.max_iterations, "derivative cap per cycle")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    opt.command = app.get_subcommands().front()->get_name();

    try {
        return dispatch(opt);
    } catch (const lot::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
