#pragma once

// Singular foliations given by a polynomial q-form: integrability and
// Pluecker checks, projective descent, and the singular (J), Kupka (K) and
// persistent-singularity (I) ideals.
//
// Sheaves on affine or projective space are represented by their (graded)
// modules over the coordinate ring S, so every ideal here is an ideal of S.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "folia/extalg.hpp"
#include "folia/groebner.hpp"

namespace folia {

enum class Ambient { affine, projective };

std::string to_string(Ambient a);

class FoliationForm {
public:
    /// Throws SemanticError for the zero form or a form of degree 0.
    FoliationForm(DiffForm form, Ambient ambient);

    const DiffForm& form() const noexcept { return form_; }
    const RingPtr& ring() const noexcept { return form_.ring(); }
    std::size_t codimension() const noexcept { return form_.degree(); }
    Ambient ambient() const noexcept { return ambient_; }
    /// e such that every coefficient is homogeneous of degree e - q; absent
    /// for affine forms and for inhomogeneous coefficients.
    std::optional<int> twist_degree() const noexcept { return twist_; }
    /// Common degree of all coefficients, if any.
    std::optional<std::uint32_t> coefficient_degree() const noexcept { return coeff_degree_; }

private:
    DiffForm form_;
    Ambient ambient_;
    std::optional<std::uint32_t> coeff_degree_;
    std::optional<int> twist_;
};

/// Generators of E(ω) = ker(ω ∧ -) on 1-forms, with their relations.
struct TangentFrame {
    std::vector<DiffForm> generators;
    /// Syzygies among `generators`, as a submodule of S^{generators.size()}.
    Submodule relations;

    static TangentFrame from_generators(std::vector<DiffForm> generators, const Limits& limits = {});
};

struct Checks {
    bool plucker = false;
    bool frobenius = false;
    /// Only meaningful for projective forms.
    std::optional<bool> descent;
    /// Singular locus has codimension ≥ 2.
    bool torsion_free_codim = false;
};

struct Inclusions {
    bool j_in_i = false;
    bool i_in_k = false;
    bool j_in_k = false;
    /// Whether I ⊆ K is a claim the report stands behind: codimension 1, or
    /// codimension q with unit decomposability defect.
    bool i_in_k_asserted = false;
};

struct Dimensions {
    int j = 0;
    int i = 0;
    int k = 0;
};

struct AnalysisReport {
    Checks checks;
    Ideal j;
    Ideal i;
    Ideal k;
    Ideal defect;
    Inclusions inclusions;
    Dimensions dimensions;
    bool k_is_unit = false;
    bool i_is_unit = false;
    bool radical_i_equals_k = false;

    /// Every asserted inclusion holds.
    bool consistent() const noexcept {
        return inclusions.j_in_i && inclusions.j_in_k && (!inclusions.i_in_k_asserted || inclusions.i_in_k);
    }
};

bool check_plucker(const FoliationForm& w);
bool check_integrability(const FoliationForm& w);
/// Throws DomainError for affine forms.
bool check_descent(const FoliationForm& w);
Checks run_checks(const FoliationForm& w, const Limits& limits = {});

Ideal singular_ideal(const FoliationForm& w);
Ideal kupka_ideal(const FoliationForm& w, const Limits& limits = {});

TangentFrame tangent_frame(const FoliationForm& w, const Limits& limits = {});
/// D with ∧^q E = D·ω. Throws Error when some q-fold wedge of generators is
/// not a polynomial multiple of ω.
Ideal decomposability_defect(const FoliationForm& w, const TangentFrame& frame);

/// The submodule F¹ ⊂ Ω² generated by dx_i ∧ ϖ_j for the frame generators.
Submodule first_filtration(const TangentFrame& frame);

/// I(ω): the h with h·dϖ ∈ F¹ for every frame generator ϖ. Throws
/// DomainError for non-integrable input.
Ideal persistent_ideal(const FoliationForm& w, const Limits& limits = {});
Ideal persistent_ideal(const FoliationForm& w, const TangentFrame& frame, const Limits& limits = {});

struct GradedPiece {
    std::uint32_t degree = 0;
    /// Basis of the degree-d part, in reduced echelon form.
    std::vector<Polynomial> basis;
};

/// Degree-by-degree computation of I(ω) by dense linear algebra on graded
/// components, for d = 0..max_degree. Independent of Groebner bases except
/// for computing the frame. Requires homogeneous coefficients.
std::vector<GradedPiece> persistent_truncation_oracle(const FoliationForm& w, std::uint32_t max_degree,
                                                      const Limits& limits = {});
std::vector<GradedPiece> persistent_truncation_oracle(const FoliationForm& w, const TangentFrame& frame,
                                                      std::uint32_t max_degree);

AnalysisReport inclusion_report(const FoliationForm& w, const Limits& limits = {});

bool is_kupka_point(const FoliationForm& w, std::span<const Rational> point);
/// Throws DomainError if `point` is not a singular point of ω.
bool is_persistent_point(const FoliationForm& w, std::span<const Rational> point, const Limits& limits = {});
bool is_persistent_point(const FoliationForm& w, const Ideal& persistent, std::span<const Rational> point);

} // namespace folia
