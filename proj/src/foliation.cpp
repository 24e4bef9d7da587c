#include "folia/foliation.hpp"

#include <algorithm>
#include <map>

#include "folia/linalg.hpp"

namespace folia {

std::string to_string(Ambient a) { return a == Ambient::affine ? "affine" : "projective"; }

namespace {

// Common homogeneous degree of all coefficients of a nonzero form.
std::optional<std::uint32_t> common_degree(const DiffForm& a) {
    std::optional<std::uint32_t> deg;
    for (const auto& [m, c] : a.components()) {
        auto d = homogeneous_degree(c);
        if (!d || (deg && *deg != *d)) return std::nullopt;
        deg = d;
    }
    return deg;
}

std::vector<FreeModuleElement> as_vectors(std::span<const DiffForm> forms) {
    std::vector<FreeModuleElement> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(to_vector(f));
    return out;
}

void require_integrable(const FoliationForm& w) {
    if (!check_integrability(w)) throw DomainError("form is not integrable");
}

} // namespace

FoliationForm::FoliationForm(DiffForm form, Ambient ambient) : form_(std::move(form)), ambient_(ambient) {
    if (form_.degree() == 0) throw SemanticError("a foliation needs a form of degree at least 1");
    if (form_.is_zero()) throw SemanticError("the zero form does not define a foliation");
    coeff_degree_ = common_degree(form_);
    if (ambient_ == Ambient::projective && coeff_degree_)
        twist_ = static_cast<int>(*coeff_degree_) + static_cast<int>(form_.degree());
}

TangentFrame TangentFrame::from_generators(std::vector<DiffForm> generators, const Limits& limits) {
    if (generators.empty()) throw DomainError("tangent frame needs at least one generator");
    for (const auto& g : generators)
        if (g.degree() != 1) throw DomainError("tangent frame generators must be 1-forms");
    const auto vecs = as_vectors(generators);
    Submodule rel = syzygies(vecs, limits);
    return TangentFrame{std::move(generators), std::move(rel)};
}

// ------------------------------------------------------------------ checks

bool check_plucker(const FoliationForm& w) {
    const auto& ring = w.ring();
    const auto& omega = w.form();
    if (w.codimension() == 1) return true;
    for (auto mask : basis_masks(ring->nvars(), w.codimension() - 1))
        if (!wedge(contract(coordinate_multivector(ring, mask), omega), omega).is_zero()) return false;
    return true;
}

bool check_integrability(const FoliationForm& w) {
    const auto& ring = w.ring();
    const auto& omega = w.form();
    if (!check_plucker(w)) return false;
    for (auto mask : basis_masks(ring->nvars(), w.codimension() - 1))
        if (!wedge(exterior_derivative(contract(coordinate_multivector(ring, mask), omega)), omega).is_zero())
            return false;
    return true;
}

bool check_descent(const FoliationForm& w) {
    if (w.ambient() != Ambient::projective) throw DomainError("descent is only defined for projective forms");
    return w.coefficient_degree().has_value() && radial_contraction(w.form()).is_zero();
}

Checks run_checks(const FoliationForm& w, const Limits& limits) {
    Checks c;
    c.plucker = check_plucker(w);
    c.frobenius = check_integrability(w);
    if (w.ambient() == Ambient::projective) c.descent = check_descent(w);
    c.torsion_free_codim =
        ideal_dimension(singular_ideal(w), limits) <= static_cast<int>(w.ring()->nvars()) - 2;
    return c;
}

// ------------------------------------------------------------------ ideals

Ideal singular_ideal(const FoliationForm& w) { return coefficient_ideal(w.form()); }

Ideal kupka_ideal(const FoliationForm& w, const Limits& limits) {
    const DiffForm d = exterior_derivative(w.form());
    if (d.is_zero()) return Ideal::unit(w.ring());
    return ideal_quotient_ideal(singular_ideal(w), coefficient_ideal(d), limits);
}

TangentFrame tangent_frame(const FoliationForm& w, const Limits& limits) {
    const auto& ring = w.ring();
    if (w.codimension() == 1) return TangentFrame::from_generators({w.form()}, limits);
    std::vector<FreeModuleElement> columns;
    for (std::size_t i = 0; i < ring->nvars(); ++i) columns.push_back(to_vector(wedge(w.form(), differential(ring, i))));
    const Submodule kernel = minimize_generators(module_kernel(columns, limits), limits);
    std::vector<DiffForm> gens;
    for (const auto& v : kernel.generators()) gens.push_back(from_vector(v, 1));
    if (gens.empty()) throw DomainError("form has no nonzero tangent 1-forms");
    return TangentFrame::from_generators(std::move(gens), limits);
}

Ideal decomposability_defect(const FoliationForm& w, const TangentFrame& frame) {
    const auto& ring = w.ring();
    const auto& omega = w.form();
    const std::size_t q = w.codimension();
    const std::size_t m = frame.generators.size();
    const auto& [lead_mask, lead_coeff] = *omega.components().begin();
    std::vector<Polynomial> quotients;
    if (q > m) return Ideal::zero(ring);
    // Enumerate q-subsets of the generators in lexicographic order.
    std::vector<std::size_t> pick(q);
    for (std::size_t i = 0; i < q; ++i) pick[i] = i;
    while (true) {
        DiffForm prod = frame.generators[pick[0]];
        for (std::size_t i = 1; i < q; ++i) prod = wedge(prod, frame.generators[pick[i]]);
        if (!prod.is_zero()) {
            auto f = exact_divide(prod.coefficient(lead_mask), lead_coeff);
            if (!f || !(omega.times(*f) == prod))
                throw Error("a wedge of tangent generators is not a multiple of the form");
            quotients.push_back(*f);
        }
        std::size_t i = q;
        while (i > 0 && pick[i - 1] == m - q + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < q; ++j) pick[j] = pick[j - 1] + 1;
    }
    return Ideal(ring, std::move(quotients));
}

Submodule first_filtration(const TangentFrame& frame) {
    const auto& ring = frame.generators.front().ring();
    const std::size_t n = ring->nvars();
    std::vector<FreeModuleElement> gens;
    for (const auto& g : frame.generators)
        for (std::size_t k = 0; k < n; ++k) gens.push_back(to_vector(wedge(differential(ring, k), g)));
    const std::size_t rank = basis_masks(n, 2).size();
    return Submodule(ring, rank, std::move(gens));
}

Ideal persistent_ideal(const FoliationForm& w, const Limits& limits) {
    require_integrable(w);
    return persistent_ideal(w, tangent_frame(w, limits), limits);
}

Ideal persistent_ideal(const FoliationForm& w, const TangentFrame& frame, const Limits& limits) {
    require_integrable(w);
    const Submodule f1 = first_filtration(frame);
    std::optional<Ideal> result;
    for (const auto& g : frame.generators) {
        const DiffForm d = exterior_derivative(g);
        if (d.is_zero()) continue;
        Ideal q = module_quotient(f1, to_vector(d), limits);
        result = result ? intersect(*result, q, limits) : std::move(q);
    }
    return result ? *result : Ideal::unit(w.ring());
}

// ------------------------------------------------------------------ truncation oracle

std::vector<GradedPiece> persistent_truncation_oracle(const FoliationForm& w, std::uint32_t max_degree,
                                                      const Limits& limits) {
    require_integrable(w);
    return persistent_truncation_oracle(w, tangent_frame(w, limits), max_degree);
}

std::vector<GradedPiece> persistent_truncation_oracle(const FoliationForm& w, const TangentFrame& frame,
                                                      std::uint32_t max_degree) {
    const auto& ring = w.ring();
    const std::size_t n = ring->nvars();
    if (!w.coefficient_degree()) throw DomainError("truncation oracle needs homogeneous coefficients");
    std::vector<std::uint32_t> frame_deg;
    for (const auto& g : frame.generators) {
        auto d = common_degree(g);
        if (!d) throw DomainError("truncation oracle needs homogeneous tangent generators");
        frame_deg.push_back(*d);
    }
    const auto masks2 = basis_masks(n, 2);

    std::vector<GradedPiece> out;
    for (std::uint32_t d = 0; d <= max_degree; ++d) {
        const auto hmons = monomials_of_degree(n, d);
        linalg::Matrix constraints(0, hmons.size());
        for (std::size_t k = 0; k < frame.generators.size(); ++k) {
            const DiffForm dk = exterior_derivative(frame.generators[k]);
            if (dk.is_zero()) continue;
            // Coefficients of h*dϖ_k live in degree d + e_k - 1.
            const std::uint32_t big = d + frame_deg[k] - 1;
            const auto rows_mon = monomials_of_degree(n, big);
            std::map<std::vector<std::uint32_t>, std::size_t> row_of;
            for (std::size_t i = 0; i < rows_mon.size(); ++i) row_of.emplace(rows_mon[i].exponents(), i);
            auto row_index = [&](std::size_t mask_pos, const Monomial& m) {
                return mask_pos * rows_mon.size() + row_of.at(m.exponents());
            };
            std::map<IndexMask, std::size_t> mask_pos;
            for (std::size_t i = 0; i < masks2.size(); ++i) mask_pos.emplace(masks2[i], i);

            // Spanning set of F¹ in this degree: monomial * dx_i ^ ϖ_j.
            std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
            for (std::size_t j = 0; j < frame.generators.size(); ++j) {
                if (frame_deg[j] > big) continue;
                for (const auto& mu : monomials_of_degree(n, big - frame_deg[j]))
                    for (std::size_t i = 0; i < n; ++i) {
                        const DiffForm gen = wedge(differential(ring, i), frame.generators[j]);
                        std::vector<std::pair<std::size_t, Rational>> col;
                        for (const auto& [mask, c] : gen.components())
                            for (const auto& t : c.terms())
                                col.emplace_back(row_index(mask_pos.at(mask), t.monomial * mu), t.coeff);
                        if (!col.empty()) cols.push_back(std::move(col));
                    }
            }
            const std::size_t nb = cols.size();
            for (const auto& mu : hmons) {
                std::vector<std::pair<std::size_t, Rational>> col;
                for (const auto& [mask, c] : dk.components())
                    for (const auto& t : c.terms())
                        col.emplace_back(row_index(mask_pos.at(mask), t.monomial * mu), t.coeff);
                cols.push_back(std::move(col));
            }
            linalg::Matrix sys(masks2.size() * rows_mon.size(), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (const auto& [r, v] : cols[c]) sys(r, c) += v;
            const auto pivots = linalg::rref(sys);
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                if (pivots[r] < nb) continue;
                const std::size_t at = constraints.rows();
                constraints.add_rows(1);
                for (std::size_t c = 0; c < hmons.size(); ++c) constraints(at, c) = sys(r, nb + c);
            }
        }
        const auto ker = linalg::kernel(constraints);
        linalg::Matrix basis(ker.size(), hmons.size());
        for (std::size_t r = 0; r < ker.size(); ++r)
            for (std::size_t c = 0; c < hmons.size(); ++c) basis(r, c) = ker[r][c];
        const auto piv = linalg::rref(basis);
        GradedPiece piece{d, {}};
        for (std::size_t r = 0; r < piv.size(); ++r) {
            std::vector<Term> terms;
            for (std::size_t c = 0; c < hmons.size(); ++c)
                if (basis(r, c) != 0) terms.push_back(Term{hmons[c], basis(r, c)});
            piece.basis.push_back(Polynomial::from_terms(ring, std::move(terms)));
        }
        out.push_back(std::move(piece));
    }
    return out;
}

// ------------------------------------------------------------------ report

AnalysisReport inclusion_report(const FoliationForm& w, const Limits& limits) {
    if (!check_plucker(w)) throw DomainError("form is not locally decomposable");
    require_integrable(w);
    const Checks checks = run_checks(w, limits);
    const TangentFrame frame = tangent_frame(w, limits);
    Ideal j = singular_ideal(w);
    Ideal k = kupka_ideal(w, limits);
    Ideal i = persistent_ideal(w, frame, limits);
    Ideal defect = decomposability_defect(w, frame);

    Inclusions inc;
    inc.j_in_i = ideal_contains(i, j, limits);
    inc.i_in_k = ideal_contains(k, i, limits);
    inc.j_in_k = ideal_contains(k, j, limits);
    inc.i_in_k_asserted = w.codimension() == 1 || defect.is_unit(limits);

    Dimensions dims{ideal_dimension(j, limits), ideal_dimension(i, limits), ideal_dimension(k, limits)};
    const bool k_unit = k.is_unit(limits);
    const bool i_unit = i.is_unit(limits);
    const bool rad = radical_equal(i, k, limits);
    return AnalysisReport{checks, std::move(j), std::move(i), std::move(k), std::move(defect),
                          inc, dims, k_unit, i_unit, rad};
}

bool is_kupka_point(const FoliationForm& w, std::span<const Rational> point) {
    if (!evaluate_form(w.form(), point).is_zero()) return false;
    return !evaluate_form(exterior_derivative(w.form()), point).is_zero();
}

bool is_persistent_point(const FoliationForm& w, std::span<const Rational> point, const Limits& limits) {
    if (!evaluate_form(w.form(), point).is_zero()) throw DomainError("point is not a singular point of the form");
    return is_persistent_point(w, persistent_ideal(w, limits), point);
}

bool is_persistent_point(const FoliationForm& w, const Ideal& persistent, std::span<const Rational> point) {
    if (!evaluate_form(w.form(), point).is_zero()) throw DomainError("point is not a singular point of the form");
    for (const auto& g : persistent.generators())
        if (evaluate(g, point) != 0) return false;
    return true;
}

} // namespace folia
