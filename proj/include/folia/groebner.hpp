#pragma once

// Ideals and submodules of free modules over Q[x], backed by reduced Groebner
// bases (Buchberger with Gebauer-Moeller pair elimination).
//
// Module terms are ordered term-over-position: first by the ring's monomial
// order, ties broken by position with the lower index larger. Syzygies,
// cofactor lifts and module quotients append "tag" positions that rank below
// every original position, which turns the same engine into an elimination
// procedure.

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folia/polycore.hpp"

namespace folia {

struct Limits {
    /// Maximum number of S-pairs reduced by a single Groebner computation.
    std::size_t max_spairs = 200000;
};

class FreeModuleElement {
public:
    FreeModuleElement(RingPtr ring, std::size_t rank);
    explicit FreeModuleElement(std::vector<Polynomial> entries);
    FreeModuleElement(RingPtr ring, std::vector<Polynomial> entries);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t rank() const noexcept { return entries_.size(); }
    const std::vector<Polynomial>& entries() const noexcept { return entries_; }
    const Polynomial& operator[](std::size_t i) const { return entries_.at(i); }
    Polynomial& operator[](std::size_t i) { return entries_.at(i); }
    bool is_zero() const;

    FreeModuleElement& operator+=(const FreeModuleElement& other);
    FreeModuleElement& operator-=(const FreeModuleElement& other);
    friend FreeModuleElement operator+(FreeModuleElement a, const FreeModuleElement& b) { return a += b; }
    friend FreeModuleElement operator-(FreeModuleElement a, const FreeModuleElement& b) { return a -= b; }
    friend FreeModuleElement operator*(const Polynomial& f, const FreeModuleElement& v);

    std::string to_string() const;

    friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b);

private:
    RingPtr ring_;
    std::vector<Polynomial> entries_;
};

namespace detail {
template <class T>
struct GbCache {
    std::mutex mutex;
    std::optional<std::vector<T>> basis;
};
} // namespace detail

class Ideal {
public:
    /// Zero generators are dropped.
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }

    /// Reduced Groebner basis in the ring's order, monic, sorted increasing by
    /// leading monomial. Computed once and shared by copies of this Ideal.
    const std::vector<Polynomial>& groebner_basis(const Limits& limits = {}) const;
    bool is_unit(const Limits& limits = {}) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<detail::GbCache<Polynomial>> cache_;
};

class Submodule {
public:
    Submodule(RingPtr ring, std::size_t rank, std::vector<FreeModuleElement> generators);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t rank() const noexcept { return rank_; }
    const std::vector<FreeModuleElement>& generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }

    /// Reduced module Groebner basis (term-over-position).
    const std::vector<FreeModuleElement>& groebner_basis(const Limits& limits = {}) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::size_t rank_;
    std::vector<FreeModuleElement> gens_;
    std::shared_ptr<detail::GbCache<FreeModuleElement>> cache_;
};

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const Limits& limits = {});

/// Remainder of full reduction by a Groebner basis.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis);

bool ideal_member(const Polynomial& p, const Ideal& ideal, const Limits& limits = {});

/// sub ⊆ ideal, decided generator-wise.
bool ideal_contains(const Ideal& ideal, const Ideal& sub, const Limits& limits = {});
bool ideals_equal(const Ideal& a, const Ideal& b, const Limits& limits = {});

/// First syzygy module of `gens` (all of equal rank), as a submodule of
/// S^{gens.size()}.
Submodule syzygies(std::span<const FreeModuleElement> gens, const Limits& limits = {});

/// Kernel of the map S^a -> S^b whose i-th column is columns[i].
Submodule module_kernel(std::span<const FreeModuleElement> columns, const Limits& limits = {});

/// Cofactors c with v == sum c_i * M.generators()[i], or nullopt if v ∉ M.
std::optional<std::vector<Polynomial>> submodule_member(const FreeModuleElement& v, const Submodule& module,
                                                        const Limits& limits = {});

/// sub ⊆ module, generator-wise.
bool submodule_contains(const Submodule& module, const Submodule& sub, const Limits& limits = {});

/// Drops generators that lie in the span of the remaining ones, scanning from
/// the highest-degree generator down. The result generates the same module.
Submodule minimize_generators(const Submodule& module, const Limits& limits = {});

Ideal intersect(const Ideal& a, const Ideal& b, const Limits& limits = {});

/// (I : g) = {h : h*g ∈ I}. Throws DomainError when g is zero.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& g, const Limits& limits = {});

/// (I : G) as the intersection of (I : g) over the generators g of G.
/// Throws DomainError when G is the zero ideal.
Ideal ideal_quotient_ideal(const Ideal& ideal, const Ideal& divisor, const Limits& limits = {});

/// (M : v) = {h : h*v ∈ M}. Throws DomainError when v is zero.
Ideal module_quotient(const Submodule& module, const FreeModuleElement& v, const Limits& limits = {});

/// g ∈ sqrt(I), decided by the Rabinowitsch trick.
bool radical_member(const Polynomial& g, const Ideal& ideal, const Limits& limits = {});
bool radical_equal(const Ideal& a, const Ideal& b, const Limits& limits = {});

/// Krull dimension of S/I; -1 for the unit ideal.
int ideal_dimension(const Ideal& ideal, const Limits& limits = {});

/// dim_Q of the degree-d part of a homogeneous ideal (requires a
/// degree-compatible ring order).
std::size_t graded_piece_dimension(const Ideal& ideal, std::uint32_t degree, const Limits& limits = {});

/// All monomials of total degree d in n variables, in decreasing degrevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree);

/// The ring with one extra variable placed first (elimination order with a
/// one-variable block) or last (same order kind as `base`).
RingPtr extend_ring(const RingPtr& base, bool prepend);

} // namespace folia
