// Acceptance run: one PASS/FAIL line per criterion.
//
// Usage: acceptance [property-suite-binary ...]
// The listed binaries are executed for criterion 8.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "folia/cli.hpp"
#include "folia/errors.hpp"
#include "folia/unfolding.hpp"
#include "test_support.hpp"

using namespace folia;
using namespace folia::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Criterion {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

Ideal ideal_of(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> out;
    for (auto g : gens) out.push_back(P(r, g));
    return Ideal(r, out);
}

bool module_equal(const std::vector<DiffForm>& a, const std::vector<DiffForm>& b) {
    const auto& r = a.front().ring();
    const std::size_t rank = basis_masks(r->nvars(), 1).size();
    std::vector<FreeModuleElement> va, vb;
    for (const auto& f : a) va.push_back(to_vector(f));
    for (const auto& f : b) vb.push_back(to_vector(f));
    const Submodule ma(r, rank, va), mb(r, rank, vb);
    return submodule_contains(ma, mb) && submodule_contains(mb, ma);
}

struct CorpusForm {
    std::string name;
    InputDocument doc;
    FoliationForm form;
};

std::vector<CorpusForm> corpus_forms() {
    std::vector<CorpusForm> out;
    for (const auto& c : cli::builtin_corpus()) {
        auto doc = parse_document(c.text);
        FoliationForm w(doc.forms.at(0).form, doc.ambient);
        out.push_back(CorpusForm{c.name, std::move(doc), std::move(w)});
    }
    return out;
}

bool integrable_homogeneous_codim1(const FoliationForm& w) {
    return w.codimension() == 1 && w.coefficient_degree() && check_integrability(w);
}

bool generated_by_distinct_variables(const Ideal& ideal) {
    std::vector<std::size_t> seen;
    for (const auto& g : ideal.groebner_basis()) {
        if (g.terms().size() != 1 || g.total_degree() != 1) return false;
        const auto& e = g.leading_term().monomial.exponents();
        seen.push_back(static_cast<std::size_t>(std::find(e.begin(), e.end(), 1u) - e.begin()));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end() && !seen.empty();
}

Criterion p3_example() {
    Criterion c;
    const auto start = Clock::now();
    auto r = ring_of({"x0", "x1", "x2", "x3"});
    const FoliationForm w(F(r, "-x3*dx1^dx2 + x2*dx1^dx3 - x1*dx2^dx3"), Ambient::projective);
    c.require(check_descent(w), "descent");
    c.require(check_plucker(w), "plucker");
    c.require(check_integrability(w), "integrability");
    const auto x123 = ideal_of(r, {"x1", "x2", "x3"});
    const auto j = singular_ideal(w);
    c.require(j.groebner_basis() == x123.groebner_basis(), "J reduced basis");
    c.require(ideals_equal(kupka_ideal(w), x123), "K");
    c.require(radical_equal(persistent_ideal(w), j), "rad I = J");
    // Krull dimension 1 of the cone is a point of P3: codimension 3.
    c.require(ideal_dimension(j) == 1 && static_cast<int>(r->nvars()) - ideal_dimension(j) == 3, "codimension 3");
    c.require(seconds_since(start) < 10, "runtime");
    return c;
}

Criterion a3_generic() {
    Criterion c;
    const auto start = Clock::now();
    auto r = ring_n(3);
    const auto f1 = P(r, "x1"), f2 = P(r, "x2"), f3 = P(r, "x3");
    DiffForm omega(r, 2);
    omega.add_component(0b011, f3);
    omega.add_component(0b101, f2);
    omega.add_component(0b110, f1);
    const FoliationForm w(omega, Ambient::affine);
    const auto dx = [&](std::size_t i) { return differential(r, i); };
    const std::vector<DiffForm> expected{dx(1).times(f3) + dx(2).times(f2), dx(0).times(f3) - dx(2).times(f1),
                                      dx(0).times(f2) + dx(1).times(f1)};
    c.require(expected[0].times(f1) + expected[1].times(f2) == expected[2].times(f3), "f1 w1 + f2 w2 = f3 w3");
    const auto frame = tangent_frame(w);
    c.require(module_equal(frame.generators, expected), "tangent frame");
    const auto rel = TangentFrame::from_generators(expected).relations;
    c.require(submodule_member(FreeModuleElement(r, {f1, f2, -f3}), rel).has_value(), "syzygy (f1, f2, -f3)");
    c.require(ideals_equal(decomposability_defect(w, frame), Ideal(r, {f1, f2, f3})), "defect");
    c.require(ideals_equal(kupka_ideal(w), singular_ideal(w)), "K = J");
    c.require(seconds_since(start) < 10, "runtime");
    return c;
}

Criterion a3_special() {
    Criterion c;
    const auto start = Clock::now();
    auto r = ring_n(3);
    const FoliationForm w(F(r, "x1*dx1^dx2 + (x1 + x3)*dx1^dx3 + x2*dx2^dx3"), Ambient::affine);
    c.require(exterior_derivative(w.form()).is_zero(), "closed");
    c.require(kupka_ideal(w).is_unit(), "K = (1)");
    c.require(!ideal_member(P(r, "1"), persistent_ideal(w)), "1 not in I");
    const auto report = inclusion_report(w);
    c.require(!report.inclusions.i_in_k_asserted, "I in K not asserted");
    c.require(seconds_since(start) < 10, "runtime");
    return c;
}

Criterion inclusion_chain(const std::vector<CorpusForm>& forms) {
    Criterion c;
    int count = 0;
    bool radial = false, pencil = false;
    for (const auto& f : forms) {
        if (!integrable_homogeneous_codim1(f.form)) continue;
        const auto j = singular_ideal(f.form), i = persistent_ideal(f.form), k = kupka_ideal(f.form);
        const bool chain = ideal_contains(i, j) && ideal_contains(k, i);
        c.require(chain, f.name);
        count += chain;
        radial |= f.form.form() == F(f.form.ring(), "x0*dx1 - x1*dx0");
        pencil |= f.name.find("pencil") != std::string::npos;
    }
    c.require(count >= 5, "fewer than 5 forms (" + std::to_string(count) + ")");
    c.require(radial && pencil, "corpus coverage");
    c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(count) + " forms";
    return c;
}

Criterion radical_coincidence(const std::vector<CorpusForm>& forms) {
    Criterion c;
    int count = 0;
    for (const auto& f : forms) {
        if (f.form.codimension() != 1 || !check_integrability(f.form)) continue;
        if (!generated_by_distinct_variables(singular_ideal(f.form))) continue;
        c.require(radical_equal(persistent_ideal(f.form), kupka_ideal(f.form)), f.name);
        ++count;
    }
    c.require(count > 0, "no qualifying forms");
    c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(count) + " forms";
    return c;
}

Criterion oracle_agreement(const std::vector<CorpusForm>& forms) {
    Criterion c;
    int count = 0;
    for (const auto& f : forms) {
        const auto& w = f.form;
        if (!w.coefficient_degree() || !check_integrability(w)) continue;
        const auto frame = tangent_frame(w);
        const auto i = persistent_ideal(w, frame);
        for (const auto& piece : persistent_truncation_oracle(w, frame, *w.coefficient_degree() + 3)) {
            c.require(piece.basis.size() == graded_piece_dimension(i, piece.degree),
                      f.name + " degree " + std::to_string(piece.degree));
            for (const auto& h : piece.basis) c.require(ideal_member(h, i), f.name + " membership");
        }
        ++count;
    }
    c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(count) + " forms";
    return c;
}

Criterion unfoldings() {
    Criterion c;
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + trial % 2, q = 1 + trial % 3;
        auto r = ring_n(n);
        const auto flat = random_flat_frame(r, std::min(q, n - 1), rng);
        const auto frame = TangentFrame::from_generators(flat.generators);
        std::vector<Polynomial> h;
        for (std::size_t i = 0; i < flat.generators.size(); ++i) h.push_back(random_poly(r, 2, 2, rng));
        const auto datum = make_datum(frame, h, flat.alpha);
        const auto u = build_unfolding_codimq(frame, datum);
        DiffForm omega = flat.generators.front();
        for (std::size_t i = 1; i < flat.generators.size(); ++i) omega = wedge(omega, flat.generators[i]);
        c.require(verify_unfolding(u, frame, datum), "datum " + std::to_string(trial));
        c.require(u.base() == omega, "restriction " + std::to_string(trial));
    }
    // ω = dF + F dG with F vanishing to order two at the origin.
    auto r = ring_n(3);
    const std::vector<Rational> origin(3, 0);
    int singular = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_homogeneous(r, 2, 2, rng) + random_homogeneous(r, 3, 2, rng);
        const auto g = random_poly(r, 2, 3, rng);
        const auto dF = exterior_derivative(DiffForm::scalar(f)), dG = exterior_derivative(DiffForm::scalar(g));
        const DiffForm omega = dF + dG.times(f);
        if (omega.is_zero()) continue;
        const FoliationForm w(omega, Ambient::affine);
        c.require(evaluate_form(omega, origin).is_zero(), "origin is singular");
        const auto u = build_unfolding_codim1(w, dG);
        c.require(unfolding_nonvanishing(u, origin), "nonvanishing " + std::to_string(trial));
        ++singular;
    }
    c.require(singular > 0, "no singular instances");
    return c;
}

Criterion property_suites(int argc, char** argv, Clock::time_point start) {
    Criterion c;
    for (int i = 1; i < argc; ++i) {
        const std::string cmd = std::string("\"") + argv[i] + "\" > /dev/null 2>&1";
        c.require(std::system(cmd.c_str()) == 0, argv[i]);
    }
    c.require(argc > 1, "no property suites given");
    const double total = seconds_since(start);
    c.require(total < 300, "runtime");
    c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(argc - 1) + " suites";
    return c;
}

} // namespace

int main(int argc, char** argv) {
    const auto start = Clock::now();
    bool all = true;
    auto run = [&](int number, const std::function<Criterion()>& body) {
        const auto t0 = Clock::now();
        Criterion c;
        try {
            c = body();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        all = all && c.ok;
        std::cout << "criterion " << number << ": " << (c.ok ? "PASS" : "FAIL") << " ("
                  << static_cast<long long>(seconds_since(t0) * 1000) << " ms)";
        if (!c.detail.empty()) std::cout << " " << c.detail;
        std::cout << std::endl;
    };
    std::vector<CorpusForm> forms;
    try {
        forms = corpus_forms();
    } catch (const std::exception& e) {
        std::cout << "corpus: " << e.what() << std::endl;
        return 1;
    }
    run(1, p3_example);
    run(2, a3_generic);
    run(3, a3_special);
    run(4, [&] { return inclusion_chain(forms); });
    run(5, [&] { return radical_coincidence(forms); });
    run(6, [&] { return oracle_agreement(forms); });
    run(7, unfoldings);
    run(8, [&] { return property_suites(argc, argv, start); });
    return all ? 0 : 1;
}
