#pragma once

// First-order unfoldings over the dual numbers Q[ε]/(ε²).
//
// A form on X × Spec Q[ε] is written base + ε·eps + deps∧dε + ε·eps_deps∧dε
// with base, eps of degree p and deps, eps_deps of degree p-1, all forms on X.

#include <optional>
#include <span>
#include <vector>

#include "folia/foliation.hpp"

namespace folia {

class DualForm {
public:
    /// Throws DomainError unless deg(eps) == deg(base) and
    /// deg(deps) == deg(eps_deps) == deg(base) - 1 (components may be zero).
    DualForm(DiffForm base, DiffForm eps, DiffForm deps, DiffForm eps_deps);
    /// A form pulled back from X.
    static DualForm from_base(const DiffForm& base);
    /// The 0-form ε.
    static DualForm epsilon(const RingPtr& ring);
    /// The 1-form dε.
    static DualForm d_epsilon(const RingPtr& ring);

    const RingPtr& ring() const noexcept { return base_.ring(); }
    std::size_t degree() const noexcept { return base_.degree(); }
    const DiffForm& base() const noexcept { return base_; }
    const DiffForm& eps() const noexcept { return eps_; }
    const DiffForm& deps() const noexcept { return deps_; }
    const DiffForm& eps_deps() const noexcept { return eps_deps_; }
    bool is_zero() const noexcept;

    DualForm& operator+=(const DualForm& other);
    friend DualForm operator+(DualForm a, const DualForm& b) { return a += b; }
    DualForm operator-() const;
    friend DualForm operator-(const DualForm& a, const DualForm& b) { return a + (-b); }

    std::string to_string() const;

    friend bool operator==(const DualForm& a, const DualForm& b) = default;

private:
    DiffForm base_;
    DiffForm eps_;
    DiffForm deps_;
    DiffForm eps_deps_;
};

DualForm dual_wedge(const DualForm& a, const DualForm& b);
DualForm dual_derivative(const DualForm& a);

/// Data of a first-order unfolding ϖ_i + ε η_i + h_i dε of a frame.
struct UnfoldingDatum {
    std::vector<Polynomial> h;
    std::vector<DiffForm> eta;
};

/// ω + ε η + dε. Throws DomainError unless dω = ω ∧ η.
DualForm build_unfolding_codim1(const FoliationForm& w, const DiffForm& eta);
/// ω + ε (dh + η) + h dε. Throws DomainError unless h·dω = ω ∧ η.
DualForm build_unfolding_codim1(const FoliationForm& w, const Polynomial& h, const DiffForm& eta);
/// The datum (h, dh + η) behind the previous overload.
UnfoldingDatum codim1_datum(const FoliationForm& w, const Polynomial& h, const DiffForm& eta);

/// An η with dω = ω ∧ η, when 1 ∈ I(ω).
std::optional<DiffForm> find_codim1_eta(const FoliationForm& w, const Limits& limits = {});

/// 1-forms α with dϖ_i = Σ_j α_ij ∧ ϖ_j for every generator, or nullopt.
std::optional<std::vector<std::vector<DiffForm>>> solve_flatness(const TangentFrame& frame, const Limits& limits = {});

/// η_i = dh_i - Σ_j h_j α_ij, which satisfies the unfolding equations for
/// the frame. Throws DomainError unless α solves the flatness equations.
UnfoldingDatum make_datum(const TangentFrame& frame, std::span<const Polynomial> h,
                          const std::vector<std::vector<DiffForm>>& alpha);

/// ∧_i (ϖ_i + ε η_i + h_i dε). Requires as many datum entries as generators.
DualForm build_unfolding_codimq(const TangentFrame& frame, const UnfoldingDatum& datum);
DualForm build_unfolding_codimq(const TangentFrame& frame, std::span<const Polynomial> h,
                               const std::vector<std::vector<DiffForm>>& alpha);

/// Checks that `unfolded` is the product built from `datum`, that each pair
/// (h_i, η_i) satisfies (dh_i - η_i) ∧ ϖ + dϖ_i ∧ (Σ_j (-1)^j h_j ϖ_ĵ) = 0,
/// and, for one generator, that the unfolded form is integrable (ε·dε = 0 on
/// X × Spec Q[ε], so the ε·dε slot of ω̃ ∧ dω̃ is not tested).
bool verify_unfolding(const DualForm& unfolded, const TangentFrame& frame, const UnfoldingDatum& datum);

/// The unfolded form does not vanish at the closed point ε = 0 over `point`.
bool unfolding_nonvanishing(const DualForm& unfolded, std::span<const Rational> point);

} // namespace folia
