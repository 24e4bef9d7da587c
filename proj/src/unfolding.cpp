#include "folia/unfolding.hpp"

namespace folia {

namespace {

DiffForm with_degree(const DiffForm& f, std::size_t degree) {
    if (f.is_zero()) return DiffForm(f.ring(), degree);
    if (f.degree() != degree) throw DomainError("dual form component has the wrong degree");
    return f;
}

DiffForm signed_form(const DiffForm& f, std::size_t exponent) { return (exponent % 2) ? -f : f; }

DiffForm wedge_all(std::span<const DiffForm> forms, std::size_t skip) {
    const auto& ring = forms.front().ring();
    DiffForm out = DiffForm::scalar(Polynomial::constant(ring, 1));
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (i != skip) out = wedge(out, forms[i]);
    return out;
}

} // namespace

DualForm::DualForm(DiffForm base, DiffForm eps, DiffForm deps, DiffForm eps_deps)
    : base_(std::move(base)), eps_(std::move(eps)), deps_(std::move(deps)), eps_deps_(std::move(eps_deps)) {
    require_same_ring(base_.ring(), eps_.ring());
    require_same_ring(base_.ring(), deps_.ring());
    require_same_ring(base_.ring(), eps_deps_.ring());
    // A zero base carries no degree information; take it from the others.
    std::size_t p = base_.degree();
    if (base_.is_zero()) {
        if (!eps_.is_zero()) p = eps_.degree();
        else if (!deps_.is_zero()) p = deps_.degree() + 1;
        else if (!eps_deps_.is_zero()) p = eps_deps_.degree() + 1;
    }
    base_ = with_degree(base_, p);
    eps_ = with_degree(eps_, p);
    if (p == 0) {
        if (!deps_.is_zero() || !eps_deps_.is_zero()) throw DomainError("a 0-form has no dε component");
        deps_ = DiffForm(base_.ring(), 0);
        eps_deps_ = DiffForm(base_.ring(), 0);
    } else {
        deps_ = with_degree(deps_, p - 1);
        eps_deps_ = with_degree(eps_deps_, p - 1);
    }
}

DualForm DualForm::from_base(const DiffForm& base) {
    const auto& r = base.ring();
    const std::size_t p = base.degree();
    return DualForm(base, DiffForm(r, p), DiffForm(r, p == 0 ? 0 : p - 1), DiffForm(r, p == 0 ? 0 : p - 1));
}

DualForm DualForm::epsilon(const RingPtr& ring) {
    return DualForm(DiffForm(ring, 0), DiffForm::scalar(Polynomial::constant(ring, 1)), DiffForm(ring, 0),
                    DiffForm(ring, 0));
}

DualForm DualForm::d_epsilon(const RingPtr& ring) {
    return DualForm(DiffForm(ring, 1), DiffForm(ring, 1), DiffForm::scalar(Polynomial::constant(ring, 1)),
                    DiffForm(ring, 0));
}

bool DualForm::is_zero() const noexcept {
    return base_.is_zero() && eps_.is_zero() && deps_.is_zero() && eps_deps_.is_zero();
}

DualForm& DualForm::operator+=(const DualForm& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    if (other.degree() != degree()) throw DomainError("adding dual forms of different degrees");
    base_ += other.base_;
    eps_ += other.eps_;
    deps_ += other.deps_;
    eps_deps_ += other.eps_deps_;
    return *this;
}

DualForm DualForm::operator-() const { return DualForm(-base_, -eps_, -deps_, -eps_deps_); }

std::string DualForm::to_string() const {
    std::string out;
    auto append = [&](const DiffForm& f, const char* prefix, const char* suffix) {
        if (f.is_zero()) return;
        if (!out.empty()) out += " + ";
        out += prefix;
        out += '(' + f.to_string() + ')';
        out += suffix;
    };
    append(base_, "", "");
    append(eps_, "eps*", "");
    append(deps_, "", "^deps");
    append(eps_deps_, "eps*", "^deps");
    return out.empty() ? "0" : out;
}

DualForm dual_wedge(const DualForm& a, const DualForm& b) {
    const std::size_t qb = b.degree();
    DiffForm base = wedge(a.base(), b.base());
    DiffForm eps = wedge(a.base(), b.eps()) + wedge(a.eps(), b.base());
    DiffForm deps = wedge(a.base(), b.deps()) + signed_form(wedge(a.deps(), b.base()), qb);
    DiffForm eps_deps = wedge(a.base(), b.eps_deps()) + wedge(a.eps(), b.deps()) +
                        signed_form(wedge(a.eps_deps(), b.base()) + wedge(a.deps(), b.eps()), qb);
    const std::size_t p = a.degree() + b.degree();
    const auto& r = a.ring();
    auto fit = [&](DiffForm f, std::size_t deg) { return f.is_zero() ? DiffForm(r, deg) : f; };
    const std::size_t pd = p == 0 ? 0 : p - 1;
    return DualForm(fit(base, p), fit(eps, p), fit(deps, pd), fit(eps_deps, pd));
}

DualForm dual_derivative(const DualForm& a) {
    const auto& r = a.ring();
    const std::size_t p = a.degree() + 1;
    DiffForm base = exterior_derivative(a.base());
    DiffForm eps = exterior_derivative(a.eps());
    DiffForm deps = signed_form(a.eps(), a.degree());
    if (a.degree() > 0) deps += exterior_derivative(a.deps());
    DiffForm eps_deps = a.degree() > 0 ? exterior_derivative(a.eps_deps()) : DiffForm(r, 0);
    auto fit = [&](DiffForm f, std::size_t deg) { return f.is_zero() ? DiffForm(r, deg) : f; };
    return DualForm(fit(base, p), fit(eps, p), fit(deps, p - 1), fit(eps_deps, p - 1));
}

// ------------------------------------------------------------------ codimension 1

DualForm build_unfolding_codim1(const FoliationForm& w, const DiffForm& eta) {
    return build_unfolding_codim1(w, Polynomial::constant(w.ring(), 1), eta);
}

UnfoldingDatum codim1_datum(const FoliationForm& w, const Polynomial& h, const DiffForm& eta) {
    if (w.codimension() != 1) throw DomainError("codimension-one unfolding needs a 1-form");
    if (eta.degree() != 1 && !eta.is_zero()) throw DomainError("eta must be a 1-form");
    const DiffForm& omega = w.form();
    const DiffForm eta1 = with_degree(eta, 1);
    if (!(exterior_derivative(omega).times(h) == wedge(omega, eta1)))
        throw DomainError("eta does not satisfy h*d(omega) = omega ^ eta");
    DiffForm e = exterior_derivative(DiffForm::scalar(h)) + eta1;
    return UnfoldingDatum{{h}, {with_degree(e, 1)}};
}

DualForm build_unfolding_codim1(const FoliationForm& w, const Polynomial& h, const DiffForm& eta) {
    const UnfoldingDatum datum = codim1_datum(w, h, eta);
    return DualForm(w.form(), datum.eta[0], DiffForm::scalar(h), DiffForm(w.ring(), 0));
}

std::optional<DiffForm> find_codim1_eta(const FoliationForm& w, const Limits& limits) {
    if (w.codimension() != 1) throw DomainError("codimension-one unfolding needs a 1-form");
    const auto& ring = w.ring();
    const std::size_t n = ring->nvars();
    const DiffForm d = exterior_derivative(w.form());
    if (d.is_zero()) return DiffForm(ring, 1);
    std::vector<FreeModuleElement> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(to_vector(wedge(w.form(), differential(ring, i))));
    const Submodule m(ring, basis_masks(n, 2).size(), std::move(gens));
    auto c = submodule_member(to_vector(d), m, limits);
    if (!c) return std::nullopt;
    DiffForm eta(ring, 1);
    for (std::size_t i = 0; i < n; ++i) eta += differential(ring, i).times((*c)[i]);
    return eta;
}

// ------------------------------------------------------------------ codimension q

std::optional<std::vector<std::vector<DiffForm>>> solve_flatness(const TangentFrame& frame, const Limits& limits) {
    const auto& ring = frame.generators.front().ring();
    const std::size_t n = ring->nvars();
    const std::size_t m = frame.generators.size();
    std::vector<FreeModuleElement> products;
    std::vector<std::pair<std::size_t, std::size_t>> index;
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const DiffForm p = wedge(differential(ring, k), frame.generators[j]);
            if (p.is_zero()) continue;
            products.push_back(to_vector(p));
            index.emplace_back(j, k);
        }
    const Submodule f1(ring, basis_masks(n, 2).size(), std::move(products));
    std::vector<std::vector<DiffForm>> alpha(m, std::vector<DiffForm>(m, DiffForm(ring, 1)));
    for (std::size_t i = 0; i < m; ++i) {
        const DiffForm d = exterior_derivative(frame.generators[i]);
        if (d.is_zero()) continue;
        auto c = submodule_member(to_vector(d), f1, limits);
        if (!c) return std::nullopt;
        for (std::size_t g = 0; g < index.size(); ++g) {
            const auto [j, k] = index[g];
            alpha[i][j] += differential(ring, k).times((*c)[g]);
        }
    }
    return alpha;
}

UnfoldingDatum make_datum(const TangentFrame& frame, std::span<const Polynomial> h,
                          const std::vector<std::vector<DiffForm>>& alpha) {
    const std::size_t m = frame.generators.size();
    if (h.size() != m || alpha.size() != m) throw DomainError("unfolding datum size does not match the frame");
    const auto& ring = frame.generators.front().ring();
    UnfoldingDatum out;
    for (std::size_t i = 0; i < m; ++i) {
        if (alpha[i].size() != m) throw DomainError("flatness matrix is not square");
        DiffForm rhs(ring, 2);
        for (std::size_t j = 0; j < m; ++j) rhs += wedge(alpha[i][j], frame.generators[j]);
        if (!(rhs == exterior_derivative(frame.generators[i])))
            throw DomainError("alpha does not satisfy the flatness equations");
    }
    for (std::size_t i = 0; i < m; ++i) {
        DiffForm e = exterior_derivative(DiffForm::scalar(h[i]));
        for (std::size_t j = 0; j < m; ++j) e -= alpha[i][j].times(h[j]);
        out.h.push_back(h[i]);
        out.eta.push_back(e.is_zero() ? DiffForm(ring, 1) : e);
    }
    return out;
}

DualForm build_unfolding_codimq(const TangentFrame& frame, const UnfoldingDatum& datum) {
    const std::size_t m = frame.generators.size();
    if (datum.h.size() != m || datum.eta.size() != m) throw DomainError("unfolding datum size does not match the frame");
    const auto& ring = frame.generators.front().ring();
    std::optional<DualForm> out;
    for (std::size_t i = 0; i < m; ++i) {
        DualForm factor(frame.generators[i], with_degree(datum.eta[i], 1), DiffForm::scalar(datum.h[i]),
                        DiffForm(ring, 0));
        out = out ? dual_wedge(*out, factor) : factor;
    }
    return *out;
}

DualForm build_unfolding_codimq(const TangentFrame& frame, std::span<const Polynomial> h,
                               const std::vector<std::vector<DiffForm>>& alpha) {
    return build_unfolding_codimq(frame, make_datum(frame, h, alpha));
}

bool verify_unfolding(const DualForm& unfolded, const TangentFrame& frame, const UnfoldingDatum& datum) {
    const auto& gens = frame.generators;
    const std::size_t m = gens.size();
    if (datum.h.size() != m || datum.eta.size() != m) return false;
    if (!(build_unfolding_codimq(frame, datum) == unfolded)) return false;
    const DiffForm all = wedge_all(gens, m);
    const auto& ring = gens.front().ring();
    DiffForm sum(ring, m - 1);
    for (std::size_t j = 0; j < m; ++j) {
        // (-1)^j with 1-based j
        DiffForm term = wedge_all(gens, j).times(datum.h[j]);
        sum += (j % 2 == 0) ? -term : term;
    }
    for (std::size_t i = 0; i < m; ++i) {
        DiffForm lhs = wedge(exterior_derivative(DiffForm::scalar(datum.h[i])) - with_degree(datum.eta[i], 1), all) +
                       wedge(exterior_derivative(gens[i]), sum);
        if (!lhs.is_zero()) return false;
    }
    if (m == 1) {
        const auto integrability = dual_wedge(unfolded, dual_derivative(unfolded));
        if (!integrability.base().is_zero() || !integrability.eps().is_zero() || !integrability.deps().is_zero())
            return false;
    }
    return true;
}

bool unfolding_nonvanishing(const DualForm& unfolded, std::span<const Rational> point) {
    return !evaluate_form(unfolded.base(), point).is_zero() || !evaluate_form(unfolded.deps(), point).is_zero();
}

} // namespace folia
