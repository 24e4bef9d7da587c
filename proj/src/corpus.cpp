#include <stdexcept>

#include "corpus_texts.hpp"
#include "folia/cli.hpp"

namespace folia::cli {

namespace {

std::string text_of(std::string_view name) {
    for (const auto& [n, text] : detail::corpus_texts)
        if (n == name) return std::string(text);
    throw std::logic_error("corpus file missing: " + std::string(name));
}

std::vector<CorpusCase> make_corpus() {
    const std::vector<std::string> x123{"x1", "x2", "x3"};
    std::vector<CorpusCase> out;
    auto add = [&](std::string name, CorpusExpectation e) {
        std::string text = text_of(name);
        out.push_back(CorpusCase{std::move(name), std::move(text), std::move(e)});
    };
    add("p3_example", {.descent = true,
                       .singular = x123,
                       .kupka = x123,
                       .persistent_radical = x123,
                       .consistent_inclusions = true,
                       .oracle = true});
    add("a3_generic", {.singular = x123,
                       .kupka = x123,
                       .defect = x123,
                       .frame_matches = true,
                       .consistent_inclusions = true});
    add("a3_special", {.singular = {"x2", "x1 + x3", "x1"},
                       .kupka_unit = true,
                       .closed = true,
                       .one_not_in_persistent = true,
                       .consistent_inclusions = true});
    add("nondecomposable", {.plucker = false, .frobenius = false});
    add("nonintegrable", {.frobenius = false});
    add("p1_radial", {.descent = true,
                      .singular = {"x0", "x1"},
                      .consistent_inclusions = true,
                      .radical_persistent_equals_kupka = true,
                      .oracle = true});
    add("p2_lines", {.descent = true,
                     .singular = {"x0", "x1"},
                     .consistent_inclusions = true,
                     .radical_persistent_equals_kupka = true,
                     .oracle = true});
    add("p2_pencil_line_conic", {.descent = true, .consistent_inclusions = true, .oracle = true});
    add("p2_pencil_conic_line", {.descent = true, .consistent_inclusions = true, .oracle = true});
    add("p3_planes", {.descent = true,
                      .singular = {"x0", "x1"},
                      .consistent_inclusions = true,
                      .radical_persistent_equals_kupka = true,
                      .oracle = true});
    add("p3_pencil_quadrics", {.descent = true, .consistent_inclusions = true, .oracle = true});
    add("exact_unfolding", {.consistent_inclusions = true, .unfolds = true});
    add("flat_frame", {.closed = true, .unfolds = true});
    add("twisted_frame", {.unfolds = true});
    return out;
}

} // namespace

const std::vector<CorpusCase>& builtin_corpus() {
    static const std::vector<CorpusCase> corpus = make_corpus();
    return corpus;
}

const CorpusCase* find_corpus_case(std::string_view name) {
    for (const auto& c : builtin_corpus())
        if (c.name == name) return &c;
    return nullptr;
}

} // namespace folia::cli
