#pragma once

// Differential forms and polynomial multivectors on Q[x_0..x_{n-1}].
//
// A basis element dx_{i1}^...^dx_{iq} (resp. d/dx_{i1}^...^d/dx_{iq}) with
// i1 < ... < iq is identified with the bit set {i1..iq}. Components are
// stored only on such sets, keyed in lexicographic order of the index tuple.
// Degrees above the variable count give the zero form.

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "folia/groebner.hpp"
#include "folia/polycore.hpp"

namespace folia {

using IndexMask = std::uint32_t;

/// Compares index sets as increasing tuples, lexicographically.
struct IndexLess {
    bool operator()(IndexMask a, IndexMask b) const noexcept;
};

std::vector<std::size_t> indices_of(IndexMask mask);
/// Sign of dx_A ^ dx_B rewritten on A ∪ B; 0 when A and B intersect.
int wedge_sign(IndexMask a, IndexMask b) noexcept;
/// All k-subsets of {0..n-1} in IndexLess order; the coordinate basis of the
/// rank-C(n,k) free module of k-forms.
std::vector<IndexMask> basis_masks(std::size_t n, std::size_t k);

namespace detail {
struct FormKind {};
struct VectorKind {};
} // namespace detail

template <class Kind>
class Alternating {
public:
    using Components = std::map<IndexMask, Polynomial, IndexLess>;

    Alternating(RingPtr ring, std::size_t degree) : ring_(std::move(ring)), degree_(degree) {}

    /// coeff * e_{indices[0]} ^ e_{indices[1]} ^ ..., sorted with sign;
    /// repeated indices give zero.
    static Alternating monomial(RingPtr ring, std::span<const std::size_t> indices, const Polynomial& coeff);
    static Alternating scalar(const Polynomial& f);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t degree() const noexcept { return degree_; }
    const Components& components() const noexcept { return comps_; }
    bool is_zero() const noexcept { return comps_.empty(); }
    /// Zero polynomial for absent components.
    Polynomial coefficient(IndexMask mask) const;

    /// Adds coeff * e_mask (mask must have `degree()` bits).
    void add_component(IndexMask mask, const Polynomial& coeff);

    Alternating& operator+=(const Alternating& other);
    Alternating& operator-=(const Alternating& other);
    friend Alternating operator+(Alternating a, const Alternating& b) { return a += b; }
    friend Alternating operator-(Alternating a, const Alternating& b) { return a -= b; }
    Alternating operator-() const;
    friend Alternating operator*(const Polynomial& f, const Alternating& a) { return a.times(f); }
    Alternating times(const Polynomial& f) const;

    std::string to_string() const;

    friend bool operator==(const Alternating& a, const Alternating& b) {
        return a.degree_ == b.degree_ && same_ring(a.ring_, b.ring_) && a.comps_ == b.comps_;
    }

private:
    RingPtr ring_;
    std::size_t degree_;
    Components comps_;
};

using DiffForm = Alternating<detail::FormKind>;
using MultiVector = Alternating<detail::VectorKind>;

extern template class Alternating<detail::FormKind>;
extern template class Alternating<detail::VectorKind>;

/// dx_i as a 1-form.
DiffForm differential(const RingPtr& ring, std::size_t i);
/// d/dx_i as a 1-vector.
MultiVector coordinate_vector(const RingPtr& ring, std::size_t i);
/// The coordinate multivector d/dx_{i1} ^ ... for the index set `mask`.
MultiVector coordinate_multivector(const RingPtr& ring, IndexMask mask);
/// Euler field R = sum x_i d/dx_i.
MultiVector radial_field(const RingPtr& ring);

DiffForm wedge(const DiffForm& a, const DiffForm& b);
MultiVector wedge(const MultiVector& a, const MultiVector& b);
DiffForm exterior_derivative(const DiffForm& a);
/// Interior product with i_{u^v} = i_u o i_v. Throws DomainError when
/// deg(xi) > deg(a).
DiffForm contract(const MultiVector& xi, const DiffForm& a);
DiffForm radial_contraction(const DiffForm& a);
std::vector<Polynomial> coefficients(const DiffForm& a);
Ideal coefficient_ideal(const DiffForm& a);
/// Components evaluated at `point`, as a form with constant coefficients.
DiffForm evaluate_form(const DiffForm& a, std::span<const Rational> point);

/// Coordinates in basis_masks(n, deg(a)).
FreeModuleElement to_vector(const DiffForm& a);
DiffForm from_vector(const FreeModuleElement& v, std::size_t degree);

} // namespace folia
