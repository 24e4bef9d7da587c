#include "folia/polycore.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace folia {

std::string to_string(MonomialOrder order) {
    switch (order) {
    case MonomialOrder::degrevlex: return "degrevlex";
    case MonomialOrder::lex: return "lex";
    case MonomialOrder::elimination: return "elimination";
    }
    return "?";
}

std::optional<MonomialOrder> parse_monomial_order(std::string_view name) {
    if (name == "degrevlex") return MonomialOrder::degrevlex;
    if (name == "lex") return MonomialOrder::lex;
    if (name == "elimination") return MonomialOrder::elimination;
    return std::nullopt;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    r.degree_ += other.degree_;
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
    r.degree_ -= other.degree_;
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::with_exponent(std::size_t var, std::uint32_t e) const {
    Monomial r = *this;
    r.degree_ = r.degree_ - r.exps_[var] + e;
    r.exps_[var] = e;
    return r;
}

// ---------------------------------------------------------------- orders

namespace {

// Reverse-lex tiebreak on [lo, hi): the monomial with the smaller exponent in
// the last differing variable is the larger one.
std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, std::size_t lo,
                                 std::size_t hi) {
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

std::uint32_t partial_degree(const Monomial& m, std::size_t lo, std::size_t hi) {
    std::uint32_t d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += m[i];
    return d;
}

} // namespace

std::strong_ordering compare_degrevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return revlex_tail(a, b, 0, a.size());
}

PolyRing::PolyRing(std::vector<std::string> names, MonomialOrder order, std::size_t block_size)
    : names_(std::move(names)), order_(order), block_(block_size) {
    if (names_.empty()) throw DomainError("a ring needs at least one variable");
    if (names_.size() > 30) throw DomainError("at most 30 variables are supported");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        const bool ident = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_') &&
                           std::all_of(n.begin(), n.end(), [](char c) {
                               return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                           });
        if (!ident) throw DomainError("invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
    }
    if (order_ != MonomialOrder::elimination) block_ = 0;
    if (block_ > names_.size()) throw DomainError("elimination block larger than variable count");
}

RingPtr PolyRing::make(std::vector<std::string> names, MonomialOrder order, std::size_t block_size) {
    return std::make_shared<const PolyRing>(std::move(names), order, block_size);
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::strong_ordering PolyRing::compare(const Monomial& a, const Monomial& b) const {
    switch (order_) {
    case MonomialOrder::degrevlex:
        return compare_degrevlex(a, b);
    case MonomialOrder::lex:
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    case MonomialOrder::elimination: {
        const auto n = a.size();
        auto da = partial_degree(a, 0, block_), db = partial_degree(b, 0, block_);
        if (da != db) return da <=> db;
        if (auto c = revlex_tail(a, b, 0, block_); c != 0) return c;
        da = partial_degree(a, block_, n);
        db = partial_degree(b, block_, n);
        if (da != db) return da <=> db;
        return revlex_tail(a, b, block_, n);
    }
    }
    return std::strong_ordering::equal;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw RingMismatch();
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    const auto n = ring->nvars();
    return monomial(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) throw DomainError("variable index out of range");
    Monomial m = Monomial(ring->nvars()).with_exponent(index, 1);
    return monomial(std::move(ring), std::move(m));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
    if (m.size() != ring->nvars()) throw DomainError("monomial length does not match ring");
    std::vector<Term> t;
    if (c != 0) {
        t.push_back({std::move(m), c});
        t.back().coeff.canonicalize();
    }
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const auto& r = *ring;
    for (const auto& t : terms)
        if (t.monomial.size() != r.nvars()) throw DomainError("monomial length does not match ring");
    for (auto& t : terms) t.coeff.canonicalize();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return r.compare(a.monomial, b.monomial) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Polynomial::constant_value() const {
    for (const auto& t : terms_)
        if (t.monomial.is_one()) return t.coeff;
    return 0;
}

std::uint32_t Polynomial::total_degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

// Merge a (sorted) with sign*b (sorted) in ring order.
std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        if (i == a.size()) {
            out.push_back(b[j++]);
            if (negate_b) out.back().coeff = -out.back().coeff;
            continue;
        }
        auto c = ring.compare(a[i].monomial, b[j].monomial);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
            if (negate_b) out.back().coeff = -out.back().coeff;
        } else {
            Rational s = negate_b ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (s != 0) out.push_back({a[i].monomial, s});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ring(ring_, other.ring_);
    terms_ = merge_terms(*ring_, terms_, other.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_ring(ring_, other.ring_);
    terms_ = merge_terms(*ring_, terms_, other.terms_, true);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (b.size() == 1) return a.mul_term(b.terms_[0].monomial, b.terms_[0].coeff);
    if (a.size() == 1) return b.mul_term(a.terms_[0].monomial, a.terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    // Multiplication by a monomial preserves any monomial order.
    for (const auto& t : terms_) out.push_back({t.monomial * m, t.coeff * c});
    return Polynomial(ring_, std::move(out));
}

void Polynomial::sub_mul_term(const Monomial& m, const Rational& c, const Polynomial& other) {
    require_same_ring(ring_, other.ring_);
    const Polynomial scaled_other = other.mul_term(m, c);
    terms_ = merge_terms(*ring_, terms_, scaled_other.terms_, true);
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const Rational lc = terms_.front().coeff;
    if (lc == 1) return *this;
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff /= lc;
    return r;
}

Polynomial Polynomial::mapped(RingPtr target, std::span<const std::size_t> var_map) const {
    if (var_map.size() != ring_->nvars()) throw DomainError("variable map has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(target->nvars(), 0);
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            if (var_map[i] >= e.size()) throw DomainError("variable map target out of range");
            e[var_map[i]] += t.monomial[i];
        }
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(std::move(target), std::move(out));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        return compare_degrevlex(a->monomial, b->monomial) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : order) {
        Rational c = t->coeff;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (c != 1 || t->monomial.is_one()) {
            os << c.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < t->monomial.size(); ++i) {
            const auto e = t->monomial[i];
            if (e == 0) continue;
            if (need_star) os << '*';
            os << ring_->name(i);
            if (e > 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------- free functions

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
    if (var_index >= p.ring()->nvars()) throw DomainError("partial derivative: variable index out of range");
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        const auto e = t.monomial[var_index];
        if (e == 0) continue;
        out.push_back({t.monomial.with_exponent(var_index, e - 1), t.coeff * e});
    }
    return Polynomial::from_terms(p.ring(), std::move(out));
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
    if (point.size() != p.ring()->nvars()) throw DomainError("evaluate: point has wrong length");
    Rational sum = 0;
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
            for (std::uint32_t k = 0; k < t.monomial[i]; ++k) v *= point[i];
        }
        sum += v;
    }
    return sum;
}

std::optional<std::uint32_t> homogeneous_degree(const Polynomial& p) {
    if (p.is_zero()) return 0u;
    const auto d = p.terms().front().monomial.degree();
    for (const auto& t : p.terms())
        if (t.monomial.degree() != d) return std::nullopt;
    return d;
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p.ring(), q.ring());
    if (q.is_zero()) throw DomainError("exact_divide: division by zero");
    const Term& lt = q.leading_term();
    Polynomial rest = p;
    std::vector<Term> quotient;
    while (!rest.is_zero()) {
        const Term& head = rest.leading_term();
        if (!lt.monomial.divides(head.monomial)) return std::nullopt;
        Monomial m = head.monomial / lt.monomial;
        Rational c = head.coeff / lt.coeff;
        rest.sub_mul_term(m, c, q);
        quotient.push_back({std::move(m), std::move(c)});
    }
    return Polynomial::from_terms(p.ring(), std::move(quotient));
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
    auto sorted = [](const Polynomial& p) {
        std::vector<const Term*> v;
        for (const auto& t : p.terms()) v.push_back(&t);
        std::sort(v.begin(), v.end(), [](const Term* x, const Term* y) {
            return compare_degrevlex(x->monomial, y->monomial) > 0;
        });
        return v;
    };
    const auto sa = sorted(a), sb = sorted(b);
    for (std::size_t i = 0; i < std::min(sa.size(), sb.size()); ++i) {
        if (auto c = compare_degrevlex(sa[i]->monomial, sb[i]->monomial); c != 0) return c < 0;
        if (sa[i]->coeff != sb[i]->coeff) return sa[i]->coeff < sb[i]->coeff;
    }
    return sa.size() < sb.size();
}

} // namespace folia
