#include "folia/groebner.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace folia {

namespace {

// ------------------------------------------------------------------ engine

struct ModTerm {
    Monomial mono;
    std::uint32_t pos;
    Rational coeff;
};

using ModPoly = std::vector<ModTerm>;

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint32_t pos;
};

class Engine {
public:
    Engine(const PolyRing& ring, std::size_t tag_start, bool ideal_mode, const Limits& limits)
        : ring_(ring), tag_start_(tag_start), ideal_mode_(ideal_mode), limits_(limits) {}

    std::strong_ordering cmp(const Monomial& a, std::uint32_t pa, const Monomial& b, std::uint32_t pb) const {
        const bool ta = pa >= tag_start_, tb = pb >= tag_start_;
        if (ta != tb) return ta ? std::strong_ordering::less : std::strong_ordering::greater;
        if (auto c = ring_.compare(a, b); c != 0) return c;
        return pb <=> pa;
    }

    bool is_tag(std::uint32_t pos) const { return pos >= tag_start_; }

    ModPoly normalize(std::vector<ModTerm> terms) const {
        std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
            return cmp(a.mono, a.pos, b.mono, b.pos) > 0;
        });
        ModPoly out;
        for (auto& t : terms) {
            if (!out.empty() && out.back().pos == t.pos && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
            } else {
                if (!out.empty() && out.back().coeff == 0) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        return out;
    }

    // f[from..] - c*m*g; the caller guarantees the leading terms cancel or
    // that `from` already skipped processed terms.
    ModPoly sub_mul(const ModPoly& f, std::size_t from, const Monomial& m, const Rational& c,
                    const ModPoly& g) const {
        ModPoly out;
        out.reserve(f.size() - from + g.size());
        std::size_t i = from, j = 0;
        while (i < f.size() || j < g.size()) {
            if (j == g.size()) {
                out.push_back(f[i++]);
                continue;
            }
            Monomial gm = g[j].mono * m;
            if (i == f.size()) {
                out.push_back({std::move(gm), g[j].pos, -c * g[j].coeff});
                ++j;
                continue;
            }
            auto o = cmp(f[i].mono, f[i].pos, gm, g[j].pos);
            if (o > 0) {
                out.push_back(f[i++]);
            } else if (o < 0) {
                out.push_back({std::move(gm), g[j].pos, -c * g[j].coeff});
                ++j;
            } else {
                Rational s = f[i].coeff - c * g[j].coeff;
                if (s != 0) out.push_back({std::move(gm), g[j].pos, std::move(s)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    static void make_monic(ModPoly& f) {
        if (f.empty() || f.front().coeff == 1) return;
        const Rational lc = f.front().coeff;
        for (auto& t : f) t.coeff /= lc;
    }

    const ModPoly* find_reducer(const ModTerm& t, const std::vector<const ModPoly*>& basis) const {
        for (const ModPoly* g : basis) {
            const ModTerm& lead = g->front();
            if (lead.pos == t.pos && lead.mono.divides(t.mono)) return g;
        }
        return nullptr;
    }

    enum class Mode {
        full,           // reduce every term
        until_tag,      // stop once the leading term lies in the tag block
    };

    ModPoly reduce(ModPoly f, const std::vector<const ModPoly*>& basis, Mode mode = Mode::full) const {
        ModPoly done;
        std::size_t idx = 0;
        while (idx < f.size()) {
            const ModTerm& lead = f[idx];
            if (mode == Mode::until_tag && is_tag(lead.pos)) break;
            const ModPoly* g = find_reducer(lead, basis);
            if (g == nullptr) {
                if (mode == Mode::until_tag) return f;  // irreducible non-tag lead
                done.push_back(lead);
                ++idx;
                continue;
            }
            const ModTerm& gl = g->front();
            const Monomial m = lead.mono / gl.mono;
            const Rational c = lead.coeff / gl.coeff;
            f = sub_mul(f, idx, m, c, *g);
            idx = 0;
        }
        if (mode == Mode::until_tag) {
            ModPoly rest(f.begin() + static_cast<std::ptrdiff_t>(idx), f.end());
            return rest;
        }
        return done;
    }

    ModPoly spoly(const ModPoly& f, const ModPoly& g, const Monomial& lcm) const {
        ModPoly a;
        a.reserve(f.size());
        const Monomial mf = lcm / f.front().mono;
        for (const auto& t : f) a.push_back({t.mono * mf, t.pos, t.coeff / f.front().coeff});
        const Monomial mg = lcm / g.front().mono;
        return sub_mul(a, 0, mg, 1 / g.front().coeff, g);
    }

    std::vector<ModPoly> compute(std::vector<ModPoly> input) {
        all_.clear();
        active_.clear();
        pairs_.clear();
        for (auto& f : input) {
            if (f.empty()) continue;
            ModPoly h = reduce(std::move(f), active_polys());
            if (h.empty()) continue;
            make_monic(h);
            insert(std::move(h));
        }
        std::size_t processed = 0;
        while (!pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
                if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
                if (auto c = cmp(a.lcm, a.pos, b.lcm, b.pos); c != 0) return c < 0;
                if (a.i != b.i) return a.i < b.i;
                return a.j < b.j;
            });
            Pair p = std::move(*best);
            pairs_.erase(best);
            if (++processed > limits_.max_spairs)
                throw ResourceLimit("Groebner basis: S-pair budget of " + std::to_string(limits_.max_spairs) +
                                    " exhausted");
            ModPoly h = reduce(spoly(all_[p.i], all_[p.j], p.lcm), active_polys());
            if (h.empty()) continue;
            make_monic(h);
            insert(std::move(h));
        }
        return reduced_basis();
    }

private:
    std::vector<const ModPoly*> active_polys() const {
        std::vector<const ModPoly*> v;
        v.reserve(active_.size());
        for (auto k : active_) v.push_back(&all_[k]);
        return v;
    }

    bool coprime_leads(std::size_t a, std::size_t b) const {
        return ideal_mode_ && all_[a].front().mono.coprime(all_[b].front().mono);
    }

    // Gebauer-Moeller update (Becker-Weispfenning, UPDATE).
    void insert(ModPoly h) {
        const std::size_t hi = all_.size();
        all_.push_back(std::move(h));
        const ModTerm& hl = all_[hi].front();

        std::vector<Pair> c;
        for (auto g : active_) {
            const ModTerm& gl = all_[g].front();
            if (gl.pos != hl.pos) continue;
            c.push_back({g, hi, Monomial::lcm(gl.mono, hl.mono), hl.pos});
        }
        std::vector<Pair> d;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Pair& p = c[k];
            bool keep = coprime_leads(p.i, hi);
            if (!keep) {
                keep = true;
                for (std::size_t l = k + 1; l < c.size() && keep; ++l)
                    if (c[l].lcm.divides(p.lcm)) keep = false;
                for (std::size_t l = 0; l < d.size() && keep; ++l)
                    if (d[l].lcm.divides(p.lcm)) keep = false;
            }
            if (keep) d.push_back(p);
        }
        std::vector<Pair> next;
        for (auto& p : pairs_) {
            bool drop = false;
            if (p.pos == hl.pos && hl.mono.divides(p.lcm)) {
                const Monomial li = Monomial::lcm(all_[p.i].front().mono, hl.mono);
                const Monomial lj = Monomial::lcm(all_[p.j].front().mono, hl.mono);
                drop = !(li == p.lcm) && !(lj == p.lcm);
            }
            if (!drop) next.push_back(std::move(p));
        }
        for (auto& p : d)
            if (!coprime_leads(p.i, hi)) next.push_back(std::move(p));
        pairs_ = std::move(next);

        std::vector<std::size_t> kept;
        for (auto g : active_) {
            const ModTerm& gl = all_[g].front();
            if (gl.pos == hl.pos && hl.mono.divides(gl.mono)) continue;
            kept.push_back(g);
        }
        kept.push_back(hi);
        active_ = std::move(kept);
    }

    std::vector<ModPoly> reduced_basis() const {
        std::vector<std::size_t> minimal;
        for (auto a : active_) {
            bool redundant = false;
            for (auto b : active_) {
                if (a == b) continue;
                const ModTerm& la = all_[a].front();
                const ModTerm& lb = all_[b].front();
                if (la.pos != lb.pos || !lb.mono.divides(la.mono)) continue;
                if (!(la.mono == lb.mono) || b < a) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) minimal.push_back(a);
        }
        std::vector<ModPoly> out;
        for (auto a : minimal) {
            std::vector<const ModPoly*> others;
            for (auto b : minimal)
                if (b != a) others.push_back(&all_[b]);
            ModPoly g = reduce(all_[a], others);
            make_monic(g);
            out.push_back(std::move(g));
        }
        std::sort(out.begin(), out.end(), [&](const ModPoly& a, const ModPoly& b) {
            return cmp(a.front().mono, a.front().pos, b.front().mono, b.front().pos) < 0;
        });
        return out;
    }

    const PolyRing& ring_;
    std::size_t tag_start_;
    bool ideal_mode_;
    Limits limits_;
    std::vector<ModPoly> all_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
};

ModPoly to_modpoly(const Engine& e, const Polynomial& p, std::uint32_t pos = 0) {
    std::vector<ModTerm> t;
    t.reserve(p.size());
    for (const auto& term : p.terms()) t.push_back({term.monomial, pos, term.coeff});
    return e.normalize(std::move(t));
}

// Entries of v at positions offset..offset+rank, plus optional tag unit.
ModPoly to_modpoly(const Engine& e, const FreeModuleElement& v, std::uint32_t offset = 0) {
    std::vector<ModTerm> t;
    for (std::size_t i = 0; i < v.rank(); ++i)
        for (const auto& term : v[i].terms())
            t.push_back({term.monomial, static_cast<std::uint32_t>(offset + i), term.coeff});
    return e.normalize(std::move(t));
}

Polynomial to_polynomial(const RingPtr& ring, const ModPoly& f) {
    std::vector<Term> t;
    t.reserve(f.size());
    for (const auto& m : f) t.push_back({m.mono, m.coeff});
    return Polynomial::from_terms(ring, std::move(t));
}

// Positions [lo, lo+rank) of f as a FreeModuleElement of the given rank.
FreeModuleElement project(const RingPtr& ring, const ModPoly& f, std::size_t lo, std::size_t rank) {
    std::vector<std::vector<Term>> parts(rank);
    for (const auto& m : f)
        if (m.pos >= lo && m.pos < lo + rank) parts[m.pos - lo].push_back({m.mono, m.coeff});
    std::vector<Polynomial> entries;
    entries.reserve(rank);
    for (auto& p : parts) entries.push_back(Polynomial::from_terms(ring, std::move(p)));
    return FreeModuleElement(ring, std::move(entries));
}

std::vector<const ModPoly*> pointers(const std::vector<ModPoly>& v) {
    std::vector<const ModPoly*> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(&p);
    return out;
}

void require_rank(const FreeModuleElement& v, std::size_t rank) {
    if (v.rank() != rank) throw DomainError("free module elements of different ranks");
}

// Tagged basis: generators (g_i, e_{r+i}) with the original block eliminated.
std::vector<ModPoly> lift_basis(Engine& engine, std::span<const FreeModuleElement> gens, std::size_t rank) {
    std::vector<ModPoly> input;
    input.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        ModPoly f = to_modpoly(engine, gens[i]);
        f.push_back({Monomial(gens[i].ring()->nvars()), static_cast<std::uint32_t>(rank + i), Rational(1)});
        input.push_back(engine.normalize(std::move(f)));
    }
    return engine.compute(std::move(input));
}

std::string fresh_name(const PolyRing& ring) {
    std::string name = "_t";
    for (int k = 1; ring.index_of(name); ++k) name = "_t" + std::to_string(k);
    return name;
}

} // namespace

// ------------------------------------------------------------------ FreeModuleElement

FreeModuleElement::FreeModuleElement(RingPtr ring, std::size_t rank) : ring_(std::move(ring)) {
    entries_.assign(rank, Polynomial(ring_));
}

FreeModuleElement::FreeModuleElement(std::vector<Polynomial> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("FreeModuleElement: cannot infer ring of a rank-0 element");
    ring_ = entries_.front().ring();
    for (const auto& e : entries_) require_same_ring(ring_, e.ring());
}

FreeModuleElement::FreeModuleElement(RingPtr ring, std::vector<Polynomial> entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {
    for (const auto& e : entries_) require_same_ring(ring_, e.ring());
}

bool FreeModuleElement::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

FreeModuleElement& FreeModuleElement::operator+=(const FreeModuleElement& other) {
    require_rank(other, rank());
    for (std::size_t i = 0; i < rank(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

FreeModuleElement& FreeModuleElement::operator-=(const FreeModuleElement& other) {
    require_rank(other, rank());
    for (std::size_t i = 0; i < rank(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

FreeModuleElement operator*(const Polynomial& f, const FreeModuleElement& v) {
    FreeModuleElement r = v;
    for (auto& e : r.entries_) e = f * e;
    return r;
}

std::string FreeModuleElement::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? ", " : "") << entries_[i].to_string();
    os << ')';
    return os.str();
}

bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) { return a.entries_ == b.entries_; }

// ------------------------------------------------------------------ Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<detail::GbCache<Polynomial>>()) {
    for (auto& g : generators) {
        require_same_ring(ring_, g.ring());
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {std::move(one)});
}

const std::vector<Polynomial>& Ideal::groebner_basis(const Limits& limits) const {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->basis) {
        Engine engine(*ring_, 1, true, limits);
        std::vector<ModPoly> input;
        for (const auto& g : gens_) input.push_back(to_modpoly(engine, g));
        std::vector<Polynomial> out;
        for (const auto& f : engine.compute(std::move(input))) out.push_back(to_polynomial(ring_, f));
        cache_->basis = std::move(out);
    }
    return *cache_->basis;
}

bool Ideal::is_unit(const Limits& limits) const {
    const auto& gb = groebner_basis(limits);
    return gb.size() == 1 && gb.front().is_constant();
}

std::string Ideal::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
    os << ')';
    return os.str();
}

// ------------------------------------------------------------------ Submodule

Submodule::Submodule(RingPtr ring, std::size_t rank, std::vector<FreeModuleElement> generators)
    : ring_(std::move(ring)), rank_(rank), cache_(std::make_shared<detail::GbCache<FreeModuleElement>>()) {
    for (auto& g : generators) {
        require_rank(g, rank_);
        require_same_ring(ring_, g.ring());
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

const std::vector<FreeModuleElement>& Submodule::groebner_basis(const Limits& limits) const {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->basis) {
        Engine engine(*ring_, rank_, rank_ == 1, limits);
        std::vector<ModPoly> input;
        for (const auto& g : gens_) input.push_back(to_modpoly(engine, g));
        std::vector<FreeModuleElement> out;
        for (const auto& f : engine.compute(std::move(input))) out.push_back(project(ring_, f, 0, rank_));
        cache_->basis = std::move(out);
    }
    return *cache_->basis;
}

std::string Submodule::to_string() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
    os << '>';
    return os.str();
}

// ------------------------------------------------------------------ operations

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const Limits& limits) {
    return ideal.groebner_basis(limits);
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis) {
    Engine engine(*p.ring(), 1, true, Limits{});
    std::vector<ModPoly> g;
    for (const auto& b : basis) {
        require_same_ring(p.ring(), b.ring());
        if (!b.is_zero()) g.push_back(to_modpoly(engine, b));
    }
    return to_polynomial(p.ring(), engine.reduce(to_modpoly(engine, p), pointers(g)));
}

bool ideal_member(const Polynomial& p, const Ideal& ideal, const Limits& limits) {
    require_same_ring(p.ring(), ideal.ring());
    if (p.is_zero()) return true;
    return normal_form(p, ideal.groebner_basis(limits)).is_zero();
}

bool ideal_contains(const Ideal& ideal, const Ideal& sub, const Limits& limits) {
    return std::all_of(sub.generators().begin(), sub.generators().end(),
                       [&](const Polynomial& g) { return ideal_member(g, ideal, limits); });
}

bool ideals_equal(const Ideal& a, const Ideal& b, const Limits& limits) {
    return ideal_contains(a, b, limits) && ideal_contains(b, a, limits);
}

Submodule syzygies(std::span<const FreeModuleElement> gens, const Limits& limits) {
    if (gens.empty()) throw DomainError("syzygies: empty generator list has no ring");
    const RingPtr ring = gens.front().ring();
    const std::size_t rank = gens.front().rank();
    for (const auto& g : gens) {
        require_rank(g, rank);
        require_same_ring(ring, g.ring());
    }
    Engine engine(*ring, rank, false, limits);
    const auto basis = lift_basis(engine, gens, rank);
    std::vector<FreeModuleElement> out;
    for (const auto& f : basis)
        if (engine.is_tag(f.front().pos)) out.push_back(project(ring, f, rank, gens.size()));
    return Submodule(ring, gens.size(), std::move(out));
}

Submodule module_kernel(std::span<const FreeModuleElement> columns, const Limits& limits) {
    return syzygies(columns, limits);
}

std::optional<std::vector<Polynomial>> submodule_member(const FreeModuleElement& v, const Submodule& module,
                                                        const Limits& limits) {
    require_rank(v, module.rank());
    require_same_ring(v.ring(), module.ring());
    const auto& gens = module.generators();
    const RingPtr& ring = module.ring();
    if (v.is_zero()) return std::vector<Polynomial>(gens.size(), Polynomial(ring));
    if (gens.empty()) return std::nullopt;
    const std::size_t rank = module.rank();
    Engine engine(*ring, rank, false, limits);
    const auto basis = lift_basis(engine, gens, rank);
    ModPoly rest = engine.reduce(to_modpoly(engine, v), pointers(basis), Engine::Mode::until_tag);
    if (!rest.empty() && !engine.is_tag(rest.front().pos)) return std::nullopt;
    FreeModuleElement tags = project(ring, rest, rank, gens.size());
    std::vector<Polynomial> cofactors;
    for (const auto& t : tags.entries()) cofactors.push_back(-t);
    return cofactors;
}

namespace {

bool module_member_plain(const FreeModuleElement& v, const Submodule& module, const Limits& limits) {
    if (v.is_zero()) return true;
    if (module.is_zero()) return false;
    Engine engine(*module.ring(), module.rank(), module.rank() == 1, limits);
    std::vector<ModPoly> basis;
    for (const auto& g : module.groebner_basis(limits)) basis.push_back(to_modpoly(engine, g));
    return engine.reduce(to_modpoly(engine, v), pointers(basis)).empty();
}

} // namespace

bool submodule_contains(const Submodule& module, const Submodule& sub, const Limits& limits) {
    if (sub.rank() != module.rank()) throw DomainError("submodule_contains: rank mismatch");
    return std::all_of(sub.generators().begin(), sub.generators().end(),
                       [&](const FreeModuleElement& g) { return module_member_plain(g, module, limits); });
}

Submodule minimize_generators(const Submodule& module, const Limits& limits) {
    auto degree = [](const FreeModuleElement& v) {
        std::uint32_t d = 0;
        for (const auto& e : v.entries()) d = std::max(d, e.total_degree());
        return d;
    };
    std::vector<FreeModuleElement> kept = module.generators();
    std::vector<std::size_t> order(kept.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return degree(kept[a]) > degree(kept[b]); });
    std::vector<bool> alive(kept.size(), true);
    for (auto idx : order) {
        std::vector<FreeModuleElement> others;
        for (std::size_t k = 0; k < kept.size(); ++k)
            if (alive[k] && k != idx) others.push_back(kept[k]);
        Submodule rest(module.ring(), module.rank(), std::move(others));
        if (module_member_plain(kept[idx], rest, limits)) alive[idx] = false;
    }
    std::vector<FreeModuleElement> out;
    for (std::size_t k = 0; k < kept.size(); ++k)
        if (alive[k]) out.push_back(kept[k]);
    return Submodule(module.ring(), module.rank(), std::move(out));
}

RingPtr extend_ring(const RingPtr& base, bool prepend) {
    auto names = base->names();
    const std::string t = fresh_name(*base);
    if (prepend) {
        names.insert(names.begin(), t);
        return PolyRing::make(std::move(names), MonomialOrder::elimination, 1);
    }
    names.push_back(t);
    return PolyRing::make(std::move(names), base->order(), base->block_size());
}

namespace {

std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), by);
    return m;
}

// Drops the first variable of a polynomial known not to involve it.
Polynomial drop_first_variable(const Polynomial& p, const RingPtr& target) {
    std::vector<Term> t;
    for (const auto& term : p.terms()) {
        const auto& e = term.monomial.exponents();
        t.push_back({Monomial(std::vector<std::uint32_t>(e.begin() + 1, e.end())), term.coeff});
    }
    return Polynomial::from_terms(target, std::move(t));
}

} // namespace

Ideal intersect(const Ideal& a, const Ideal& b, const Limits& limits) {
    require_same_ring(a.ring(), b.ring());
    const RingPtr& ring = a.ring();
    if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
    const RingPtr ext = extend_ring(ring, true);
    const auto map = shift_map(ring->nvars(), 1);
    const Polynomial t = Polynomial::variable(ext, 0);
    const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(t * f.mapped(ext, map));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.mapped(ext, map));
    Ideal big(ext, std::move(gens));
    std::vector<Polynomial> out;
    for (const auto& g : big.groebner_basis(limits)) {
        const bool has_t = std::any_of(g.terms().begin(), g.terms().end(),
                                       [](const Term& term) { return term.monomial[0] != 0; });
        if (!has_t) out.push_back(drop_first_variable(g, ring));
    }
    return Ideal(ring, std::move(out));
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& g, const Limits& limits) {
    require_same_ring(ideal.ring(), g.ring());
    if (g.is_zero()) throw DomainError("ideal_quotient: quotient by the zero polynomial");
    if (g.is_constant()) return ideal;
    const Ideal meet = intersect(ideal, Ideal(ideal.ring(), {g}), limits);
    std::vector<Polynomial> out;
    for (const auto& h : meet.generators()) {
        auto q = exact_divide(h, g);
        if (!q) throw Error("ideal_quotient: intersection generator not divisible by g");
        out.push_back(std::move(*q));
    }
    return Ideal(ideal.ring(), std::move(out));
}

Ideal ideal_quotient_ideal(const Ideal& ideal, const Ideal& divisor, const Limits& limits) {
    require_same_ring(ideal.ring(), divisor.ring());
    if (divisor.is_zero()) throw DomainError("ideal_quotient_ideal: quotient by the zero ideal");
    std::optional<Ideal> acc;
    for (const auto& g : divisor.generators()) {
        Ideal q = ideal_quotient(ideal, g, limits);
        acc = acc ? intersect(*acc, q, limits) : q;
    }
    return *acc;
}

Ideal module_quotient(const Submodule& module, const FreeModuleElement& v, const Limits& limits) {
    require_rank(v, module.rank());
    require_same_ring(v.ring(), module.ring());
    if (v.is_zero()) throw DomainError("module_quotient: quotient by the zero element");
    const RingPtr& ring = module.ring();
    const std::size_t rank = module.rank();
    Engine engine(*ring, rank, false, limits);
    std::vector<ModPoly> input;
    for (const auto& g : module.generators()) input.push_back(to_modpoly(engine, g));
    ModPoly tagged = to_modpoly(engine, v);
    tagged.push_back({Monomial(ring->nvars()), static_cast<std::uint32_t>(rank), Rational(1)});
    input.push_back(engine.normalize(std::move(tagged)));
    std::vector<Polynomial> out;
    for (const auto& f : engine.compute(std::move(input)))
        if (engine.is_tag(f.front().pos)) out.push_back(project(ring, f, rank, 1)[0]);
    return Ideal(ring, std::move(out));
}

bool radical_member(const Polynomial& g, const Ideal& ideal, const Limits& limits) {
    require_same_ring(g.ring(), ideal.ring());
    if (g.is_zero() || ideal_member(g, ideal, limits)) return true;
    const RingPtr& ring = ideal.ring();
    const RingPtr ext = extend_ring(ring, false);
    const auto map = shift_map(ring->nvars(), 0);
    std::vector<Polynomial> gens;
    for (const auto& f : ideal.generators()) gens.push_back(f.mapped(ext, map));
    const Polynomial t = Polynomial::variable(ext, ring->nvars());
    gens.push_back(Polynomial::constant(ext, 1) - t * g.mapped(ext, map));
    return Ideal(ext, std::move(gens)).is_unit(limits);
}

bool radical_equal(const Ideal& a, const Ideal& b, const Limits& limits) {
    require_same_ring(a.ring(), b.ring());
    for (const auto& g : a.generators())
        if (!radical_member(g, b, limits)) return false;
    for (const auto& g : b.generators())
        if (!radical_member(g, a, limits)) return false;
    return true;
}

int ideal_dimension(const Ideal& ideal, const Limits& limits) {
    const std::size_t n = ideal.ring()->nvars();
    if (ideal.is_zero()) return static_cast<int>(n);
    if (ideal.is_unit(limits)) return -1;
    if (n > 24) throw ResourceLimit("ideal_dimension: too many variables for subset enumeration");
    std::vector<std::uint32_t> supports;
    for (const auto& g : ideal.groebner_basis(limits)) {
        std::uint32_t s = 0;
        const auto& m = g.leading_term().monomial;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i]) s |= 1u << i;
        supports.push_back(s);
    }
    int best = 0;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        const int size = std::popcount(subset);
        if (size <= best) continue;
        const bool independent = std::none_of(supports.begin(), supports.end(),
                                              [&](std::uint32_t s) { return (s & ~subset) == 0; });
        if (independent) best = size;
    }
    return best;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(0);
        return out;
    }
    std::vector<std::uint32_t> e(nvars, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (i + 1 == nvars) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (std::uint32_t k = left + 1; k-- > 0;) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, degree);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) > 0; });
    return out;
}

std::size_t graded_piece_dimension(const Ideal& ideal, std::uint32_t degree, const Limits& limits) {
    const RingPtr& ring = ideal.ring();
    const Ideal* target = &ideal;
    std::optional<Ideal> converted;
    if (ring->order() != MonomialOrder::degrevlex) {
        auto dr = PolyRing::make(ring->names());
        std::vector<std::size_t> id(ring->nvars());
        std::iota(id.begin(), id.end(), 0);
        std::vector<Polynomial> gens;
        for (const auto& g : ideal.generators()) gens.push_back(g.mapped(dr, id));
        converted.emplace(dr, std::move(gens));
        target = &*converted;
    }
    const auto& gb = target->groebner_basis(limits);
    for (const auto& g : gb)
        if (!homogeneous_degree(g)) throw DomainError("graded_piece_dimension: ideal is not homogeneous");
    std::size_t in_ideal = 0;
    for (const auto& m : monomials_of_degree(ring->nvars(), degree)) {
        if (std::any_of(gb.begin(), gb.end(),
                        [&](const Polynomial& g) { return g.leading_term().monomial.divides(m); }))
            ++in_ideal;
    }
    return in_ideal;
}

} // namespace folia
