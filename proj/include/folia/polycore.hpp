#pragma once

// Exact sparse multivariate polynomials over Q.
//
// A Polynomial stores its nonzero terms sorted strictly decreasing in the
// monomial order of its ring, so the first term is the leading term and two
// polynomials are equal iff their term vectors are equal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "folia/errors.hpp"

namespace folia {

using Rational = mpq_class;

enum class MonomialOrder {
    degrevlex,
    lex,
    /// Leading `block_size` variables compared first (degrevlex within the
    /// block), ties broken by degrevlex on the remaining variables. Any
    /// monomial involving the block is larger than every monomial free of it.
    elimination,
};

std::string to_string(MonomialOrder order);
std::optional<MonomialOrder> parse_monomial_order(std::string_view name);

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t degree() const noexcept { return degree_; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    bool is_one() const noexcept { return degree_ == 0; }

    Monomial operator*(const Monomial& other) const;
    /// Requires `other.divides(*this)`.
    Monomial operator/(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    /// Multiply by x_var (degree shift used by the exterior derivative).
    Monomial with_exponent(std::size_t var, std::uint32_t e) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

/// Ring descriptor Q[x_0, ..., x_{n-1}] together with its monomial order.
class PolyRing {
public:
    PolyRing(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex,
             std::size_t block_size = 0);

    static std::shared_ptr<const PolyRing> make(std::vector<std::string> names,
                                                MonomialOrder order = MonomialOrder::degrevlex,
                                                std::size_t block_size = 0);

    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    MonomialOrder order() const noexcept { return order_; }
    std::size_t block_size() const noexcept { return block_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Three-way comparison of monomials in this ring's order.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.names_ == b.names_ && a.order_ == b.order_ && a.block_ == b.block_;
    }

private:
    std::vector<std::string> names_;
    MonomialOrder order_;
    std::size_t block_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

std::strong_ordering compare_degrevlex(const Monomial& a, const Monomial& b);

struct Term {
    Monomial monomial;
    Rational coeff;

    friend bool operator==(const Term& a, const Term& b) {
        return a.monomial == b.monomial && a.coeff == b.coeff;
    }
};

class Polynomial {
public:
    /// The zero polynomial of `ring`.
    explicit Polynomial(RingPtr ring);

    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c = 1);
    /// Sorts, combines duplicate monomials and drops zero coefficients.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term value; only meaningful when is_constant().
    Rational constant_value() const;
    /// Requires !is_zero().
    const Term& leading_term() const { return terms_.front(); }
    /// Highest total degree of any term; 0 for the zero polynomial.
    std::uint32_t total_degree() const noexcept;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

    Polynomial scaled(const Rational& c) const;
    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    /// this - c*m*other, the elementary reduction step.
    void sub_mul_term(const Monomial& m, const Rational& c, const Polynomial& other);
    Polynomial pow(unsigned exponent) const;
    /// Divides by the leading coefficient; zero stays zero.
    Polynomial monic() const;

    /// Re-expresses the polynomial in `target`, sending variable i to
    /// variable var_map[i]. Terms are re-sorted in the target order.
    Polynomial mapped(RingPtr target, std::span<const std::size_t> var_map) const;

    /// Canonical text: terms in degrevlex order regardless of the ring order,
    /// e.g. "x1^2 - 3/2*x1*x2 + 1". Parseable by the form DSL.
    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
        : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);
Rational evaluate(const Polynomial& p, std::span<const Rational> point);
/// Common total degree of all terms; nullopt if inhomogeneous. The zero
/// polynomial is homogeneous of degree 0 so graded maps accept it.
std::optional<std::uint32_t> homogeneous_degree(const Polynomial& p);
/// r with p == q*r, or nullopt when q does not divide p. Throws DomainError
/// if q is zero.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q);

/// Sort key used wherever generator lists must be deterministic: degrevlex
/// comparison of the term sequences.
bool canonical_less(const Polynomial& a, const Polynomial& b);

std::string to_string(const Rational& q);

} // namespace folia
