#include "folia/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "folia/errors.hpp"
#include "folia/unfolding.hpp"

#ifndef FOLIA_VERSION
#define FOLIA_VERSION "0.0.0"
#endif

namespace folia::cli {

using json = nlohmann::ordered_json;

std::optional<Command> parse_command(std::string_view name) {
    if (name == "check") return Command::check;
    if (name == "ideals") return Command::ideals;
    if (name == "compare") return Command::compare;
    if (name == "decompose") return Command::decompose;
    if (name == "unfold") return Command::unfold;
    return std::nullopt;
}

std::string to_string(Command command) {
    switch (command) {
    case Command::check: return "check";
    case Command::ideals: return "ideals";
    case Command::compare: return "compare";
    case Command::decompose: return "decompose";
    case Command::unfold: return "unfold";
    }
    return "";
}

namespace {

std::uint64_t parse_count(std::string_view key, std::string_view value) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw SemanticError("limit " + std::string(key) + " needs a non-negative integer, got '" + std::string(value) + "'");
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

void apply_limits_spec(Options& options, std::string_view spec) {
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        const std::string_view item = trim(spec.substr(0, comma));
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw SemanticError("limit setting '" + std::string(item) + "' lacks '='");
        const auto key = trim(item.substr(0, eq));
        const auto value = trim(item.substr(eq + 1));
        if (key == "max_spairs") {
            options.limits.max_spairs = parse_count(key, value);
        } else if (key == "max_degree") {
            options.max_degree = static_cast<std::uint32_t>(parse_count(key, value));
        } else if (key == "order") {
            const auto order = parse_monomial_order(value);
            if (!order) throw SemanticError("unknown monomial order '" + std::string(value) + "'");
            options.order = *order;
        } else {
            throw SemanticError("unknown limit '" + std::string(key) + "'");
        }
    }
}

namespace {

json ideal_json(const Ideal& ideal, const Limits& limits) {
    json out = json::array();
    for (const auto& g : ideal.groebner_basis(limits)) out.push_back(g.to_string());
    return out;
}

json forms_json(const std::vector<DiffForm>& forms) {
    json out = json::array();
    for (const auto& f : forms) out.push_back(f.to_string());
    return out;
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

DiffForm wedge_all(const std::vector<DiffForm>& forms) {
    DiffForm out = forms.front();
    for (std::size_t i = 1; i < forms.size(); ++i) out = wedge(out, forms[i]);
    return out;
}

bool same_module(const std::vector<DiffForm>& a, const std::vector<DiffForm>& b, const Limits& limits) {
    if (a.empty() || b.empty()) return a.empty() == b.empty();
    const auto& ring = a.front().ring();
    const std::size_t rank = basis_masks(ring->nvars(), a.front().degree()).size();
    std::vector<FreeModuleElement> va, vb;
    for (const auto& f : a) va.push_back(to_vector(f));
    for (const auto& f : b) vb.push_back(to_vector(f));
    const Submodule ma(ring, rank, va), mb(ring, rank, vb);
    return submodule_contains(ma, mb, limits) && submodule_contains(mb, ma, limits);
}

/// c with product == c·ω for a nonzero constant c.
bool is_constant_multiple(const DiffForm& product, const DiffForm& omega) {
    if (product.is_zero() || product.degree() != omega.degree()) return false;
    const auto& [mask, coeff] = *omega.components().begin();
    const Polynomial other = product.coefficient(mask);
    if (other.is_zero()) return false;
    const auto ratio = exact_divide(other, coeff);
    if (!ratio || ratio->total_degree() != 0) return false;
    return omega.times(*ratio) == product;
}

struct OracleOutcome {
    bool agree = true;
    std::uint32_t max_degree = 0;
};

OracleOutcome compare_with_oracle(const FoliationForm& w, const TangentFrame& frame, const Ideal& persistent,
                                  std::uint32_t max_degree, const Limits& limits) {
    OracleOutcome out{true, max_degree};
    for (const auto& piece : persistent_truncation_oracle(w, frame, max_degree)) {
        if (piece.basis.size() != graded_piece_dimension(persistent, piece.degree, limits)) out.agree = false;
        for (const auto& h : piece.basis)
            if (!ideal_member(h, persistent, limits)) out.agree = false;
    }
    return out;
}

std::uint32_t oracle_degree(const FoliationForm& w, const Options& options) {
    if (options.max_degree) return *options.max_degree;
    return w.coefficient_degree().value_or(0) + 3;
}

json unfolding_json(const InputDocument& doc, const FoliationForm& w, const Options& options, bool& ok) {
    json out;
    const auto& limits = options.limits;
    std::optional<TangentFrame> frame;
    std::optional<UnfoldingDatum> datum;
    std::optional<DualForm> unfolded;
    if (w.codimension() == 1) {
        frame = TangentFrame::from_generators({w.form()}, limits);
        out["method"] = "codimension one";
        if (auto eta = find_codim1_eta(w, limits)) {
            datum = UnfoldingDatum{{Polynomial::constant(w.ring(), 1)}, {*eta}};
            unfolded = build_unfolding_codim1(w, *eta);
        }
    } else {
        out["method"] = "flat frame";
        std::vector<DiffForm> gens;
        if (!doc.frames.empty()) {
            gens = doc.frames.front().generators;
            out["frame_source"] = doc.frames.front().name;
        } else {
            gens = tangent_frame(w, limits).generators;
            out["frame_source"] = "tangent_frame";
        }
        out["frame"] = forms_json(gens);
        const bool spans = gens.size() == w.codimension() && is_constant_multiple(wedge_all(gens), w.form());
        out["frame_spans_form"] = spans;
        if (spans) {
            frame = TangentFrame::from_generators(gens, limits);
            if (auto alpha = solve_flatness(*frame, limits)) {
                std::vector<Polynomial> h(gens.size(), Polynomial(w.ring()));
                h.front() = Polynomial::constant(w.ring(), 1);
                datum = make_datum(*frame, h, *alpha);
                unfolded = build_unfolding_codimq(*frame, *datum);
                json a = json::array();
                for (const auto& row : *alpha) a.push_back(forms_json(row));
                out["alpha"] = a;
            }
        }
    }
    out["found"] = unfolded.has_value();
    if (!unfolded) {
        ok = false;
        return out;
    }
    json h = json::array();
    for (const auto& p : datum->h) h.push_back(p.to_string());
    out["h"] = h;
    out["eta"] = forms_json(datum->eta);
    out["form"] = {{"base", unfolded->base().to_string()},
                   {"eps", unfolded->eps().to_string()},
                   {"deps", unfolded->deps().to_string()},
                   {"eps_deps", unfolded->eps_deps().to_string()}};
    const bool verified = verify_unfolding(*unfolded, *frame, *datum);
    const bool restricts = unfolded->base() == w.form() || is_constant_multiple(unfolded->base(), w.form());
    out["verified"] = verified;
    out["restricts_to_form"] = restricts;
    json points = json::object();
    for (const auto& p : doc.points) points[p.name] = unfolding_nonvanishing(*unfolded, p.coords);
    out["nonvanishing"] = points;
    ok = verified && restricts;
    return out;
}

struct FormOutcome {
    json report;
    int exit_code = exit_ok;
};

FormOutcome analyze_form(const InputDocument& doc, const FormDecl& decl, std::string_view source, Command command,
                         const Options& options) {
    const auto start = std::chrono::steady_clock::now();
    const auto& limits = options.limits;
    FormOutcome out;
    json& r = out.report;
    r["version"] = FOLIA_VERSION;
    json names = json::array();
    for (const auto& n : doc.ring->names()) names.push_back(n);
    r["input"] = {{"source", std::string(source)},
                  {"command", to_string(command)},
                  {"form", decl.name},
                  {"ambient", to_string(doc.ambient)},
                  {"ring", names},
                  {"order", to_string(options.order)},
                  {"text", decl.form.to_string()}};

    const FoliationForm w(decl.form, doc.ambient);
    const Checks checks = run_checks(w, limits);
    const bool integrable = checks.plucker && checks.frobenius;
    r["checks"] = {{"plucker", checks.plucker},
                   {"frobenius", checks.frobenius},
                   {"descent", optional_bool(checks.descent)},
                   {"torsion_free_codim", checks.torsion_free_codim}};
    r["ideals"] = nullptr;
    r["inclusions"] = nullptr;
    r["dimensions"] = nullptr;
    bool ok = integrable && checks.descent.value_or(true);

    auto dimensions = [&](const Ideal& j, const std::optional<Ideal>& i, const Ideal& k) {
        const bool projective = doc.ambient == Ambient::projective;
        auto dim = [&](const Ideal& ideal) {
            const int d = ideal_dimension(ideal, limits);
            return projective && d >= 0 ? d - 1 : d;
        };
        r["dimensions"] = {{"space", projective ? "projective" : "affine"},
                           {"J", dim(j)},
                           {"I", i ? json(dim(*i)) : json(nullptr)},
                           {"K", dim(k)}};
    };

    switch (command) {
    case Command::check: break;
    case Command::ideals: {
        const Ideal j = singular_ideal(w);
        const Ideal k = kupka_ideal(w, limits);
        json ideals = {{"J", ideal_json(j, limits)}, {"I", nullptr}, {"K", ideal_json(k, limits)}, {"defect", nullptr}};
        std::optional<Ideal> i;
        if (integrable) {
            const auto frame = tangent_frame(w, limits);
            i = persistent_ideal(w, frame, limits);
            ideals["I"] = ideal_json(*i, limits);
            ideals["defect"] = ideal_json(decomposability_defect(w, frame), limits);
        }
        r["ideals"] = ideals;
        dimensions(j, i, k);
        break;
    }
    case Command::compare: {
        if (!integrable) break;
        const AnalysisReport rep = inclusion_report(w, limits);
        r["ideals"] = {{"J", ideal_json(rep.j, limits)},
                       {"I", ideal_json(rep.i, limits)},
                       {"K", ideal_json(rep.k, limits)},
                       {"defect", ideal_json(rep.defect, limits)}};
        r["inclusions"] = {{"J_in_I", rep.inclusions.j_in_i},
                           {"I_in_K", rep.inclusions.i_in_k},
                           {"J_in_K", rep.inclusions.j_in_k},
                           {"I_in_K_asserted", rep.inclusions.i_in_k_asserted},
                           {"K_is_unit", rep.k_is_unit},
                           {"I_is_unit", rep.i_is_unit},
                           {"radical_I_equals_K", rep.radical_i_equals_k},
                           {"oracle_max_degree", nullptr},
                           {"oracle_agrees", nullptr}};
        ok = ok && rep.consistent();
        if (w.coefficient_degree()) {
            const auto oracle = compare_with_oracle(w, tangent_frame(w, limits), rep.i, oracle_degree(w, options), limits);
            r["inclusions"]["oracle_max_degree"] = oracle.max_degree;
            r["inclusions"]["oracle_agrees"] = oracle.agree;
            ok = ok && oracle.agree;
        }
        dimensions(rep.j, rep.i, rep.k);
        break;
    }
    case Command::decompose: {
        if (!checks.plucker) break;
        const auto frame = tangent_frame(w, limits);
        const Ideal defect = decomposability_defect(w, frame);
        r["ideals"] = {{"J", nullptr}, {"I", nullptr}, {"K", nullptr}, {"defect", ideal_json(defect, limits)}};
        json relations = json::array();
        for (const auto& rel : frame.relations.generators()) {
            json row = json::array();
            for (const auto& e : rel.entries()) row.push_back(e.to_string());
            relations.push_back(row);
        }
        r["frame"] = {{"generators", forms_json(frame.generators)},
                      {"relations", relations},
                      {"locally_decomposable", defect.is_unit(limits)}};
        ok = checks.plucker;
        break;
    }
    case Command::unfold: {
        if (!integrable) break;
        bool unfold_ok = true;
        r["unfolding"] = unfolding_json(doc, w, options, unfold_ok);
        ok = ok && unfold_ok;
        break;
    }
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    r["timing_ms"] = options.timing ? json(elapsed.count()) : json(nullptr);
    out.exit_code = ok ? exit_ok : exit_check_failed;
    return out;
}

void render_human(std::ostream& os, const json& value, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& [key, item] : value.items()) {
        if (item.is_object()) {
            os << pad << key << ":\n";
            render_human(os, item, indent + 1);
        } else if (item.is_array()) {
            os << pad << key << ":";
            if (item.empty()) os << " (none)";
            os << '\n';
            for (const auto& e : item) {
                if (e.is_array()) {
                    os << pad << "  - [";
                    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? ", " : "") << (e[i].is_string() ? e[i].get<std::string>() : e[i].dump());
                    os << "]\n";
                } else {
                    os << pad << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << '\n';
                }
            }
        } else if (item.is_null()) {
            os << pad << key << ": -\n";
        } else {
            os << pad << key << ": " << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
        }
    }
}

std::string render(const json& reports, const Options& options) {
    if (options.json) return reports.dump(2) + "\n";
    std::ostringstream os;
    const auto list = reports.is_array() ? reports : json::array({reports});
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) os << '\n';
        render_human(os, list[i], 0);
    }
    return os.str();
}

json error_report(std::string_view source, std::string_view kind, std::string_view message) {
    return {{"version", FOLIA_VERSION},
            {"input", {{"source", std::string(source)}}},
            {"error", {{"kind", std::string(kind)}, {"message", std::string(message)}}}};
}

} // namespace

Result run_analysis(const InputDocument& doc, std::string_view source, Command command, const Options& options) {
    std::vector<const FormDecl*> targets;
    if (options.form) {
        const auto* f = doc.find_form(*options.form);
        if (!f) {
            Result r{exit_input_error, ""};
            r.output = render(error_report(source, "semantic", "no form named '" + *options.form + "'"), options);
            return r;
        }
        targets.push_back(f);
    } else {
        for (const auto& f : doc.forms) targets.push_back(&f);
    }
    if (targets.empty())
        return Result{exit_input_error, render(error_report(source, "semantic", "document declares no form"), options)};

    json reports = json::array();
    int code = exit_ok;
    for (const auto* f : targets) {
        try {
            auto outcome = analyze_form(doc, *f, source, command, options);
            reports.push_back(std::move(outcome.report));
            code = std::max(code, outcome.exit_code);
        } catch (const ResourceLimit& e) {
            reports.push_back(error_report(source, "resource_limit", f->name + ": " + e.what()));
            code = std::max(code, exit_resource_limit);
        } catch (const SemanticError& e) {
            reports.push_back(error_report(source, "semantic", f->name + ": " + e.what()));
            code = std::max(code, exit_input_error);
        }
    }
    return Result{code, render(reports.size() == 1 ? reports.front() : reports, options)};
}

Result run_text(std::string_view text, std::string_view source, Command command, const Options& options) {
    try {
        return run_analysis(parse_document(text, options.order), source, command, options);
    } catch (const ParseError& e) {
        return Result{exit_input_error, render(error_report(source, "parse", e.what()), options)};
    } catch (const SemanticError& e) {
        return Result{exit_input_error, render(error_report(source, "semantic", e.what()), options)};
    }
}

// ------------------------------------------------------------------ corpus

std::vector<std::string> check_corpus_case(const CorpusCase& c, const Options& options) {
    std::vector<std::string> failures;
    const auto& limits = options.limits;
    const auto& e = c.expect;
    auto expect = [&](bool condition, std::string what) {
        if (!condition) failures.push_back(std::move(what));
    };
    try {
        const InputDocument doc = parse_document(c.text, options.order);
        const InputDocument again = parse_document(print_document(doc), options.order);
        expect(print_document(again) == print_document(doc), "print/parse round trip");
        const auto& decl = doc.forms.at(0);
        const FoliationForm w(decl.form, doc.ambient);
        const auto& ring = w.ring();
        auto ideal = [&](const std::vector<std::string>& gens) {
            std::vector<Polynomial> ps;
            for (const auto& g : gens) ps.push_back(parse_polynomial(ring, g));
            return Ideal(ring, ps);
        };
        expect(exterior_derivative(exterior_derivative(w.form())).is_zero(), "d(dω) = 0");

        const Checks checks = run_checks(w, limits);
        expect(checks.plucker == e.plucker, "plucker");
        expect(checks.frobenius == e.frobenius, "frobenius");
        if (e.descent) expect(checks.descent == e.descent, "descent");
        if (e.closed) expect(exterior_derivative(w.form()).is_zero(), "closed");
        if (!e.singular.empty()) expect(ideals_equal(singular_ideal(w), ideal(e.singular), limits), "J");
        if (!e.kupka.empty()) expect(ideals_equal(kupka_ideal(w, limits), ideal(e.kupka), limits), "K");
        if (e.kupka_unit) expect(kupka_ideal(w, limits).is_unit(limits), "K = (1)");
        if (!checks.plucker || !checks.frobenius) return failures;

        const auto frame = tangent_frame(w, limits);
        if (e.frame_matches)
            expect(!doc.frames.empty() && same_module(frame.generators, doc.frames.front().generators, limits),
                   "tangent frame");
        if (!e.defect.empty())
            expect(ideals_equal(decomposability_defect(w, frame), ideal(e.defect), limits), "defect");
        const bool needs_i = !e.persistent_radical.empty() || e.one_not_in_persistent || e.consistent_inclusions ||
                             e.radical_persistent_equals_kupka || e.oracle;
        if (needs_i) {
            const Ideal i = persistent_ideal(w, frame, limits);
            if (!e.persistent_radical.empty())
                expect(radical_equal(i, ideal(e.persistent_radical), limits), "rad(I)");
            if (e.one_not_in_persistent) expect(!i.is_unit(limits), "1 not in I");
            if (e.oracle) expect(compare_with_oracle(w, frame, i, oracle_degree(w, options), limits).agree, "oracle");
        }
        if (e.consistent_inclusions || e.radical_persistent_equals_kupka) {
            const auto rep = inclusion_report(w, limits);
            if (e.consistent_inclusions) expect(rep.consistent(), "inclusions");
            if (e.radical_persistent_equals_kupka) expect(rep.radical_i_equals_k, "rad(I) = rad(K)");
        }
        if (e.unfolds) {
            Options quiet = options;
            quiet.timing = false;
            bool ok = true;
            const json u = unfolding_json(doc, w, quiet, ok);
            expect(ok, "unfolding");
            const json points = u.value("nonvanishing", json::object());
            for (const auto& [name, value] : points.items())
                expect(value.get<bool>(), "unfolding nonvanishing at " + name);
        }
    } catch (const Error& err) {
        failures.push_back(std::string("error: ") + err.what());
    }
    return failures;
}

Result run_corpus(const Options& options) {
    const auto start = std::chrono::steady_clock::now();
    json cases = json::array();
    std::optional<std::string> first_failure;
    for (const auto& c : builtin_corpus()) {
        const auto case_start = std::chrono::steady_clock::now();
        const auto failures = check_corpus_case(c, options);
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - case_start).count();
        if (!failures.empty() && !first_failure) first_failure = c.name;
        cases.push_back({{"name", c.name},
                         {"status", failures.empty() ? "pass" : "fail"},
                         {"failures", failures},
                         {"timing_ms", options.timing ? json(ms) : json(nullptr)}});
    }
    const auto total =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    json report = {{"version", FOLIA_VERSION},
                   {"cases", cases},
                   {"first_failure", first_failure ? json(*first_failure) : json(nullptr)},
                   {"timing_ms", options.timing ? json(total) : json(nullptr)}};
    Result out{first_failure ? exit_check_failed : exit_ok, ""};
    if (options.json) {
        out.output = report.dump(2) + "\n";
        return out;
    }
    std::ostringstream os;
    for (const auto& c : cases) {
        os << (c["status"] == "pass" ? "PASS " : "FAIL ") << c["name"].get<std::string>();
        for (const auto& f : c["failures"]) os << " [" << f.get<std::string>() << "]";
        if (options.timing) os << " (" << c["timing_ms"].get<long long>() << " ms)";
        os << '\n';
    }
    if (first_failure) os << "first failing case: " << *first_failure << '\n';
    out.output = os.str();
    return out;
}

} // namespace folia::cli
