#include "folia/extalg.hpp"

#include <algorithm>
#include <sstream>

namespace folia {

bool IndexLess::operator()(IndexMask a, IndexMask b) const noexcept {
    while (a != 0 && b != 0) {
        const int ia = std::countr_zero(a), ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<std::size_t> indices_of(IndexMask mask) {
    std::vector<std::size_t> out;
    for (; mask; mask &= mask - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    return out;
}

int wedge_sign(IndexMask a, IndexMask b) noexcept {
    if (a & b) return 0;
    int inversions = 0;
    for (IndexMask rest = b; rest; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        // elements of a greater than j
        inversions += std::popcount(a & ~((IndexMask{2} << j) - 1));
    }
    return (inversions & 1) ? -1 : 1;
}

std::vector<IndexMask> basis_masks(std::size_t n, std::size_t k) {
    std::vector<IndexMask> out;
    if (k > n) return out;
    for (IndexMask m = 0; m < (IndexMask{1} << n); ++m)
        if (static_cast<std::size_t>(std::popcount(m)) == k) out.push_back(m);
    std::sort(out.begin(), out.end(), IndexLess{});
    return out;
}

// ------------------------------------------------------------------ Alternating

template <class Kind>
Alternating<Kind> Alternating<Kind>::monomial(RingPtr ring, std::span<const std::size_t> indices,
                                              const Polynomial& coeff) {
    require_same_ring(ring, coeff.ring());
    Alternating out(ring, indices.size());
    IndexMask mask = 0;
    int sign = 1;
    for (auto i : indices) {
        if (i >= ring->nvars()) throw DomainError("form index out of range");
        const IndexMask bit = IndexMask{1} << i;
        const int s = wedge_sign(mask, bit);
        if (s == 0) return out;
        sign *= s;
        mask |= bit;
    }
    out.add_component(mask, sign > 0 ? coeff : -coeff);
    return out;
}

template <class Kind>
Alternating<Kind> Alternating<Kind>::scalar(const Polynomial& f) {
    Alternating out(f.ring(), 0);
    out.add_component(0, f);
    return out;
}

template <class Kind>
Polynomial Alternating<Kind>::coefficient(IndexMask mask) const {
    auto it = comps_.find(mask);
    return it == comps_.end() ? Polynomial(ring_) : it->second;
}

template <class Kind>
void Alternating<Kind>::add_component(IndexMask mask, const Polynomial& coeff) {
    require_same_ring(ring_, coeff.ring());
    if (static_cast<std::size_t>(std::popcount(mask)) != degree_)
        throw DomainError("component index set does not match form degree");
    if (coeff.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(mask, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

template <class Kind>
Alternating<Kind>& Alternating<Kind>::operator+=(const Alternating& other) {
    require_same_ring(ring_, other.ring_);
    if (other.degree_ != degree_ && !other.is_zero() && !is_zero())
        throw DomainError("adding forms of different degrees");
    if (is_zero()) degree_ = other.degree_;
    for (const auto& [m, c] : other.comps_) add_component(m, c);
    return *this;
}

template <class Kind>
Alternating<Kind>& Alternating<Kind>::operator-=(const Alternating& other) {
    return *this += -other;
}

template <class Kind>
Alternating<Kind> Alternating<Kind>::operator-() const {
    Alternating r = *this;
    for (auto& [m, c] : r.comps_) c = -c;
    return r;
}

template <class Kind>
Alternating<Kind> Alternating<Kind>::times(const Polynomial& f) const {
    require_same_ring(ring_, f.ring());
    Alternating r(ring_, degree_);
    for (const auto& [m, c] : comps_) r.add_component(m, f * c);
    return r;
}

template <class Kind>
std::string Alternating<Kind>::to_string() const {
    constexpr bool is_form = std::is_same_v<Kind, detail::FormKind>;
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : comps_) {
        std::string basis;
        for (auto i : indices_of(mask)) {
            if (!basis.empty()) basis += '^';
            basis += (is_form ? "d" : "d/d") + ring_->name(i);
        }
        std::string coeff = c.to_string();
        bool negative = false;
        if (c.size() == 1 && c.leading_term().coeff < 0) {
            negative = true;
            coeff = (-c).to_string();
        }
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (basis.empty()) {
            os << coeff;
        } else if (coeff == "1") {
            os << basis;
        } else if (c.size() > 1) {
            os << '(' << coeff << ")*" << basis;
        } else {
            os << coeff << '*' << basis;
        }
    }
    return os.str();
}

template class Alternating<detail::FormKind>;
template class Alternating<detail::VectorKind>;

// ------------------------------------------------------------------ constructors

DiffForm differential(const RingPtr& ring, std::size_t i) {
    const std::size_t idx[] = {i};
    return DiffForm::monomial(ring, idx, Polynomial::constant(ring, 1));
}

MultiVector coordinate_vector(const RingPtr& ring, std::size_t i) {
    const std::size_t idx[] = {i};
    return MultiVector::monomial(ring, idx, Polynomial::constant(ring, 1));
}

MultiVector coordinate_multivector(const RingPtr& ring, IndexMask mask) {
    MultiVector out(ring, static_cast<std::size_t>(std::popcount(mask)));
    out.add_component(mask, Polynomial::constant(ring, 1));
    return out;
}

MultiVector radial_field(const RingPtr& ring) {
    MultiVector out(ring, 1);
    for (std::size_t i = 0; i < ring->nvars(); ++i) out.add_component(IndexMask{1} << i, Polynomial::variable(ring, i));
    return out;
}

// ------------------------------------------------------------------ operations

namespace {

template <class Kind>
Alternating<Kind> wedge_impl(const Alternating<Kind>& a, const Alternating<Kind>& b) {
    require_same_ring(a.ring(), b.ring());
    Alternating<Kind> out(a.ring(), a.degree() + b.degree());
    if (out.degree() > a.ring()->nvars()) return out;
    for (const auto& [ma, ca] : a.components())
        for (const auto& [mb, cb] : b.components()) {
            const int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            const Polynomial prod = ca * cb;
            out.add_component(ma | mb, s > 0 ? prod : -prod);
        }
    return out;
}

// Sign of removing index i from the set `mask` by contraction: (-1)^{#elements < i}.
int removal_sign(IndexMask mask, std::size_t i) {
    return (std::popcount(mask & ((IndexMask{1} << i) - 1)) & 1) ? -1 : 1;
}

} // namespace

DiffForm wedge(const DiffForm& a, const DiffForm& b) { return wedge_impl(a, b); }

MultiVector wedge(const MultiVector& a, const MultiVector& b) { return wedge_impl(a, b); }

DiffForm exterior_derivative(const DiffForm& a) {
    const auto& ring = a.ring();
    DiffForm out(ring, a.degree() + 1);
    if (out.degree() > ring->nvars()) return out;
    for (const auto& [mask, c] : a.components())
        for (std::size_t i = 0; i < ring->nvars(); ++i) {
            if (mask & (IndexMask{1} << i)) continue;
            Polynomial di = partial_derivative(c, i);
            if (di.is_zero()) continue;
            out.add_component(mask | (IndexMask{1} << i), removal_sign(mask, i) > 0 ? di : -di);
        }
    return out;
}

DiffForm contract(const MultiVector& xi, const DiffForm& a) {
    require_same_ring(xi.ring(), a.ring());
    if (xi.degree() > a.degree()) throw DomainError("contract: multivector degree exceeds form degree");
    DiffForm out(a.ring(), a.degree() - xi.degree());
    for (const auto& [vmask, vc] : xi.components()) {
        const auto idx = indices_of(vmask);
        for (const auto& [fmask, fc] : a.components()) {
            if ((fmask & vmask) != vmask) continue;
            // i_{v1^...^vp} = i_{v1} o ... o i_{vp}: remove vp first.
            IndexMask m = fmask;
            int sign = 1;
            for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
                sign *= removal_sign(m, *it);
                m &= ~(IndexMask{1} << *it);
            }
            const Polynomial prod = vc * fc;
            out.add_component(m, sign > 0 ? prod : -prod);
        }
    }
    return out;
}

DiffForm radial_contraction(const DiffForm& a) {
    if (a.degree() == 0) return DiffForm(a.ring(), 0);
    return contract(radial_field(a.ring()), a);
}

std::vector<Polynomial> coefficients(const DiffForm& a) {
    std::vector<Polynomial> out;
    for (const auto& [m, c] : a.components()) out.push_back(c);
    return out;
}

Ideal coefficient_ideal(const DiffForm& a) { return Ideal(a.ring(), coefficients(a)); }

DiffForm evaluate_form(const DiffForm& a, std::span<const Rational> point) {
    if (point.size() != a.ring()->nvars()) throw DomainError("evaluate_form: point has wrong length");
    DiffForm out(a.ring(), a.degree());
    for (const auto& [m, c] : a.components()) out.add_component(m, Polynomial::constant(a.ring(), evaluate(c, point)));
    return out;
}

FreeModuleElement to_vector(const DiffForm& a) {
    const auto basis = basis_masks(a.ring()->nvars(), a.degree());
    std::vector<Polynomial> entries;
    entries.reserve(basis.size());
    for (auto m : basis) entries.push_back(a.coefficient(m));
    return FreeModuleElement(a.ring(), std::move(entries));
}

DiffForm from_vector(const FreeModuleElement& v, std::size_t degree) {
    const auto basis = basis_masks(v.ring()->nvars(), degree);
    if (basis.size() != v.rank()) throw DomainError("from_vector: rank does not match form degree");
    DiffForm out(v.ring(), degree);
    for (std::size_t i = 0; i < basis.size(); ++i) out.add_component(basis[i], v[i]);
    return out;
}

} // namespace folia
