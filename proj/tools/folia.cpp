#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "folia/cli.hpp"
#include "folia/errors.hpp"

namespace {

int emit(const folia::cli::Result& r) {
    std::cout << r.output;
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    using namespace folia::cli;
    CLI::App app{"Singular, persistent and Kupka ideals of polynomial foliations"};
    app.require_subcommand(1);

    Options options;
    std::optional<std::size_t> max_spairs;
    std::optional<std::uint32_t> max_degree;
    std::string order;
    std::string form;
    bool no_timing = false;
    bool json = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max-spairs", max_spairs, "S-pair budget per Groebner computation");
        sub->add_option("--max-degree", max_degree, "degree bound for the graded comparison (default deg + 3)");
        sub->add_option("--order", order, "monomial order: degrevlex or lex");
        sub->add_flag("--json", json, "emit JSON");
        sub->add_flag("--no-timing", no_timing, "report timing_ms as null");
    };

    std::string path;
    std::string selected;
    for (const char* name : {"check", "ideals", "compare", "decompose", "unfold"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("file", path, "input .fol file ('-' for standard input)")->required();
        sub->add_option("--form", form, "analyze only this form");
        add_common(sub);
        sub->callback([&selected, name] { selected = name; });
    }
    auto* corpus = app.add_subcommand("corpus", "run the built-in corpus");
    add_common(corpus);
    corpus->callback([&selected] { selected = "corpus"; });
    auto* print = app.add_subcommand("print", "parse a document and print it canonically");
    print->add_option("file", path, "input .fol file")->required();
    print->callback([&selected] { selected = "print"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (const char* env = std::getenv("FOLIA_LIMITS")) apply_limits_spec(options, env);
        if (max_spairs) options.limits.max_spairs = *max_spairs;
        if (max_degree) options.max_degree = *max_degree;
        if (!order.empty()) apply_limits_spec(options, "order=" + order);
    } catch (const folia::Error& e) {
        std::cerr << "folia: " << e.what() << '\n';
        return exit_input_error;
    }
    options.json = json;
    options.timing = !no_timing;
    if (!form.empty()) options.form = form;

    if (selected == "corpus") return emit(run_corpus(options));

    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "folia: cannot read " << path << '\n';
            return exit_input_error;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    if (selected == "print") {
        try {
            std::cout << folia::print_document(folia::parse_document(text, options.order));
            return exit_ok;
        } catch (const folia::Error& e) {
            std::cerr << "folia: " << path << ":" << e.what() << '\n';
            return exit_input_error;
        }
    }
    return emit(run_text(text, path, *parse_command(selected), options));
}
