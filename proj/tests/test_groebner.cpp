#include "doctest.h"

#include <algorithm>
#include <map>

#include "folia/errors.hpp"
#include "folia/groebner.hpp"
#include "folia/linalg.hpp"
#include "test_support.hpp"

using namespace folia;
using namespace folia::testing;

namespace {

// Graded pieces of homogeneous ideals by dense linear algebra; no Groebner
// bases involved.
struct GradedOracle {
    RingPtr ring;
    std::vector<Polynomial> gens;

    std::vector<Polynomial> spanning_set(std::uint32_t d) const {
        std::vector<Polynomial> out;
        for (const auto& g : gens) {
            const auto e = *homogeneous_degree(g);
            if (e > d) continue;
            for (const auto& m : monomials_of_degree(ring->nvars(), d - e))
                out.push_back(g * Polynomial::monomial(ring, m));
        }
        return out;
    }

    static linalg::Matrix columns(const std::vector<Polynomial>& polys, const std::vector<Monomial>& basis) {
        std::map<std::vector<std::uint32_t>, std::size_t> row;
        for (std::size_t i = 0; i < basis.size(); ++i) row.emplace(basis[i].exponents(), i);
        linalg::Matrix m(basis.size(), polys.size());
        for (std::size_t c = 0; c < polys.size(); ++c)
            for (const auto& t : polys[c].terms()) m(row.at(t.monomial.exponents()), c) = t.coeff;
        return m;
    }

    std::size_t dimension(std::uint32_t d) const {
        return linalg::rank(columns(spanning_set(d), monomials_of_degree(ring->nvars(), d)));
    }

    bool member(const Polynomial& p) const {
        if (p.is_zero()) return true;
        const auto d = *homogeneous_degree(p);
        auto span = spanning_set(d);
        const auto basis = monomials_of_degree(ring->nvars(), d);
        const std::size_t before = linalg::rank(columns(span, basis));
        span.push_back(p);
        return linalg::rank(columns(span, basis)) == before;
    }
};

Ideal random_homogeneous_ideal(const RingPtr& r, Rng& rng) {
    std::uniform_int_distribution<int> count(1, 3), deg(1, 3), terms(1, 3);
    std::vector<Polynomial> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        auto g = random_homogeneous(r, deg(rng), terms(rng), rng);
        if (!g.is_zero()) gens.push_back(g);
    }
    return Ideal(r, gens);
}

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> out;
    for (auto g : gens) out.push_back(P(r, g));
    return Ideal(r, out);
}

FreeModuleElement V(const RingPtr& r, std::initializer_list<const char*> entries) {
    std::vector<Polynomial> out;
    for (auto e : entries) out.push_back(P(r, e));
    return FreeModuleElement(r, out);
}

} // namespace

TEST_CASE("groebner basis examples") {
    auto r = ring_n(3);
    auto gb = groebner_basis(I(r, {"x1", "x2"}));
    CHECK(gb.size() == 2);
    CHECK(ideals_equal(Ideal(r, gb), I(r, {"x1", "x2"})));
    CHECK(groebner_basis(I(r, {"1 + x1", "x1"})) == std::vector<Polynomial>{P(r, "1")});
    const auto a = I(r, {"x1^2", "x1*x2 - x1"});
    const auto g = groebner_basis(a);
    for (const auto& p : g) CHECK(ideal_member(p, a));
    CHECK(ideal_member(P(r, "x1^2"), Ideal(r, g)));
    CHECK(ideal_member(P(r, "x1*x2 - x1"), Ideal(r, g)));
    // x1*(x1*x2 - x1) - x2*x1^2 = -x1^2, already in the ideal; x1 itself is not
    CHECK(!ideal_member(P(r, "x1"), a));
}

TEST_CASE("membership examples") {
    auto r = ring_n(3);
    CHECK(ideal_member(P(r, "x1*x2"), I(r, {"x1"})));
    CHECK(!ideal_member(P(r, "x2"), I(r, {"x1"})));
    CHECK(!ideal_member(P(r, "3"), I(r, {"x1", "x2", "x3"})));
    CHECK(ideal_member(Polynomial(r), Ideal::zero(r)));
    CHECK(!ideal_member(P(r, "1"), Ideal::zero(r)));
    CHECK(Ideal::unit(r).is_unit());
}

TEST_CASE("syzygies and kernels") {
    auto r = ring_n(3);
    const std::vector<FreeModuleElement> k{V(r, {"x1"}), V(r, {"x2"})};
    const auto syz = syzygies(k);
    REQUIRE(syz.generators().size() == 1);
    CHECK(submodule_member(V(r, {"x2", "-x1"}), syz).has_value());
    CHECK(submodule_contains(Submodule(r, 2, {V(r, {"x2", "-x1"})}), syz));

    CHECK(syzygies(std::vector<FreeModuleElement>{V(r, {"x1 + x2^2", "x3"})}).is_zero());
    CHECK(module_kernel(std::vector<FreeModuleElement>{V(r, {"x1"})}).is_zero());
    const auto ker = module_kernel(k);
    CHECK(submodule_contains(ker, Submodule(r, 2, {V(r, {"x2", "-x1"})})));
    CHECK(submodule_contains(Submodule(r, 2, {V(r, {"x2", "-x1"})}), ker));
}

TEST_CASE("A3 tangent generators satisfy f1 w1 + f2 w2 = f3 w3") {
    auto r = ring_n(3);
    const auto f1 = P(r, "x1 + x2*x3"), f2 = P(r, "x2 - x3^2"), f3 = P(r, "x3 + x1^2");
    const FreeModuleElement w1(r, {Polynomial(r), f3, f2}), w2(r, {f3, Polynomial(r), -f1}),
        w3(r, {f2, f1, Polynomial(r)});
    const auto syz = syzygies(std::vector<FreeModuleElement>{w1, w2, w3});
    CHECK(submodule_member(FreeModuleElement(r, {f1, f2, -f3}), syz).has_value());
    for (const auto& s : syz.generators()) CHECK((s[0] * w1 + s[1] * w2 + s[2] * w3).is_zero());
}

TEST_CASE("submodule membership with cofactors") {
    auto r = ring_n(3);
    const Submodule m(r, 2, {V(r, {"x2", "0"})});
    auto c = submodule_member(V(r, {"x1*x2", "0"}), m);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == P(r, "x1"));
    CHECK(!submodule_member(V(r, {"0", "1"}), Submodule(r, 2, {V(r, {"x1", "0"})})));

    const Submodule n(r, 2, {V(r, {"x1", "x2"}), V(r, {"x3", "0"}), V(r, {"x2^2", "x1*x3"})});
    const auto target = V(r, {"x1*x3 + x3^2 - x2^3", "x2*x3 - x1*x2*x3"});
    auto cc = submodule_member(target, n);
    REQUIRE(cc.has_value());
    FreeModuleElement back(r, 2);
    for (std::size_t i = 0; i < n.generators().size(); ++i) back += (*cc)[i] * n.generators()[i];
    CHECK(back == target);
}

TEST_CASE("ideal quotients") {
    auto r = ring_n(3);
    CHECK(ideals_equal(ideal_quotient(I(r, {"x1^2"}), P(r, "x1")), I(r, {"x1"})));
    CHECK(ideals_equal(ideal_quotient(I(r, {"x1", "x2", "x3"}), P(r, "1")), I(r, {"x1", "x2", "x3"})));
    CHECK(ideals_equal(ideal_quotient(I(r, {"x1*x2", "x1*x3"}), P(r, "x1")), I(r, {"x2", "x3"})));
    CHECK_THROWS_AS(ideal_quotient(I(r, {"x1"}), Polynomial(r)), DomainError);

    CHECK(ideals_equal(ideal_quotient_ideal(I(r, {"x1^2", "x2"}), Ideal::unit(r)), I(r, {"x1^2", "x2"})));
    CHECK(ideals_equal(ideal_quotient_ideal(I(r, {"x1"}), I(r, {"x1", "x2"})), I(r, {"x1"})));
    CHECK(ideals_equal(ideal_quotient_ideal(I(r, {"x1", "x2", "x3"}), I(r, {"1"})), I(r, {"x1", "x2", "x3"})));
    CHECK_THROWS_AS(ideal_quotient_ideal(I(r, {"x1"}), Ideal::zero(r)), DomainError);
}

TEST_CASE("module quotients") {
    auto r = ring_n(3);
    const Submodule m(r, 2, {V(r, {"x1", "0"}), V(r, {"0", "x1"})});
    CHECK(ideals_equal(module_quotient(m, V(r, {"1", "1"})), I(r, {"x1"})));
    CHECK(module_quotient(m, V(r, {"x1*x2", "x1"})).is_unit());
    CHECK_THROWS_AS(module_quotient(m, V(r, {"0", "0"})), DomainError);

    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<FreeModuleElement> gens;
        for (int i = 0; i < 2; ++i)
            gens.push_back(FreeModuleElement(r, {random_poly(r, 2, 2, rng), random_poly(r, 2, 2, rng)}));
        const Submodule mm(r, 2, gens);
        FreeModuleElement v(r, {random_poly(r, 1, 2, rng), random_poly(r, 1, 2, rng)});
        if (trial % 2 == 0) v = random_poly(r, 1, 2, rng) * gens[0] + random_poly(r, 1, 1, rng) * gens[1];
        if (v.is_zero()) continue;
        const Ideal q = module_quotient(mm, v);
        CHECK(q.is_unit() == submodule_member(v, mm).has_value());
        for (const auto& h : q.generators()) CHECK(submodule_member(h * v, mm).has_value());
    }
}

TEST_CASE("intersections") {
    auto r = ring_n(3);
    CHECK(ideals_equal(intersect(I(r, {"x1"}), I(r, {"x2"})), I(r, {"x1*x2"})));
    CHECK(ideals_equal(intersect(I(r, {"x1^2", "x2"}), Ideal::unit(r)), I(r, {"x1^2", "x2"})));
    CHECK(ideals_equal(intersect(I(r, {"x1", "x2"}), I(r, {"x1", "x3"})), I(r, {"x1", "x2*x3"})));
    CHECK(intersect(I(r, {"x1"}), Ideal::zero(r)).is_zero());
}

TEST_CASE("radical membership") {
    auto r = ring_n(3);
    CHECK(radical_member(P(r, "x1"), I(r, {"x1^2"})));
    CHECK(!radical_member(P(r, "x2"), I(r, {"x1^2"})));
    CHECK(radical_member(P(r, "x1 + x2"), I(r, {"x1^2", "x2^2"})));
    CHECK(ideal_member(P(r, "(x1 + x2)^3"), I(r, {"x1^2", "x2^2"})));
    CHECK(radical_equal(I(r, {"x1^2"}), I(r, {"x1"})));
    CHECK(!radical_equal(I(r, {"x1"}), I(r, {"x2"})));
    CHECK(radical_member(P(r, "x3"), Ideal::unit(r)));

    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_homogeneous_ideal(r, rng);
        const auto g = random_homogeneous(r, 1, 2, rng);
        for (unsigned k = 1; k <= 6; ++k)
            if (ideal_member(g.pow(k), a)) {
                CHECK(radical_member(g, a));
                break;
            }
    }
}

TEST_CASE("Krull dimension") {
    auto r4 = ring_of({"x0", "x1", "x2", "x3"});
    CHECK(ideal_dimension(I(r4, {"x1", "x2", "x3"})) == 1);
    CHECK(ideal_dimension(Ideal::zero(r4)) == 4);
    CHECK(ideal_dimension(Ideal::unit(r4)) == -1);
    auto r3 = ring_n(3);
    CHECK(ideal_dimension(I(r3, {"x1*x2"})) == 2);
    CHECK(ideal_dimension(I(r3, {"x1*x2", "x1*x3"})) == 2);
    CHECK(ideal_dimension(I(r3, {"x1^2 + x2^2 - 1", "x3"})) == 1);
}

TEST_CASE("membership agrees with the graded linear-algebra oracle") {
    Rng rng(2024);
    int ideals = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto r = ring_n(2 + trial % 2);
        const auto a = random_homogeneous_ideal(r, rng);
        const GradedOracle oracle{r, a.generators()};
        ++ideals;
        for (std::uint32_t d = 0; d <= 6; ++d) {
            CHECK(graded_piece_dimension(a, d) == oracle.dimension(d));
            // random elements and random combinations of generators
            for (int k = 0; k < 2; ++k) {
                const auto p = random_homogeneous(r, d, 3, rng);
                CHECK(ideal_member(p, a) == oracle.member(p));
            }
            Polynomial comb(r);
            for (const auto& g : a.generators()) {
                const auto e = *homogeneous_degree(g);
                if (e <= d) comb += g * random_homogeneous(r, d - e, 2, rng);
            }
            CHECK(ideal_member(comb, a));
            CHECK(oracle.member(comb));
        }
    }
    CHECK(ideals >= 50);
}

TEST_CASE("quotient soundness and completeness") {
    Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        auto r = ring_n(3);
        const auto a = random_homogeneous_ideal(r, rng);
        const auto f = random_homogeneous(r, 1 + trial % 2, 2, rng);
        if (f.is_zero()) continue;
        const auto q = ideal_quotient(a, f);
        for (const auto& g : q.generators()) CHECK(ideal_member(g * f, a));
        // (I : f)_d = {h in S_d : h f in I}, by brute force over monomials of degree <= 4
        const GradedOracle oracle{r, a.generators()};
        const auto e = *homogeneous_degree(f);
        for (std::uint32_t d = 0; d <= 4; ++d) {
            const auto mons = monomials_of_degree(3, d);
            // columns: m*f for each monomial, then a spanning set of I_{d+e}
            auto span = oracle.spanning_set(d + e);
            std::vector<Polynomial> cols = span;
            for (const auto& m : mons) cols.push_back(Polynomial::monomial(r, m) * f);
            const auto basis = monomials_of_degree(3, d + e);
            const auto ker = linalg::kernel(GradedOracle::columns(cols, basis));
            // project the kernel onto the monomial coordinates
            linalg::Matrix proj(ker.size(), mons.size());
            for (std::size_t i = 0; i < ker.size(); ++i)
                for (std::size_t j = 0; j < mons.size(); ++j) proj(i, j) = ker[i][span.size() + j];
            CHECK(linalg::rank(proj) == graded_piece_dimension(q, d));
            for (const auto& m : mons) {
                const auto h = Polynomial::monomial(r, m);
                CHECK(ideal_member(h, q) == oracle.member(h * f));
            }
        }
    }
}

TEST_CASE("determinism") {
    auto r = ring_n(3);
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, 3, 3, rng));
        const auto first = groebner_basis(Ideal(r, gens));
        std::reverse(gens.begin(), gens.end());
        const auto second = groebner_basis(Ideal(r, gens));
        CHECK(first == second);
        CHECK(groebner_basis(Ideal(r, gens)) == second);
    }
}

TEST_CASE("resource limits are reported") {
    auto r = ring_n(3);
    const auto a = I(r, {"x1^2*x2 - x3^2 + x1", "x1*x2^2 - x1*x3 + 1", "x2*x3^2 - x1^3"});
    CHECK_THROWS_AS(groebner_basis(a, Limits{2}), ResourceLimit);
    CHECK_NOTHROW(groebner_basis(a));
}

TEST_CASE("lex and degrevlex give the same ideal") {
    auto dr = ring_n(3);
    auto lx = ring_of({"x1", "x2", "x3"}, MonomialOrder::lex);
    const char* gens[] = {"x1^2 + x2*x3", "x1*x2 - x3^2", "x2^3 - x1"};
    std::vector<Polynomial> a, b;
    for (auto g : gens) {
        a.push_back(P(dr, g));
        b.push_back(P(lx, g));
    }
    const auto ga = groebner_basis(Ideal(dr, a)), gb = groebner_basis(Ideal(lx, b));
    for (const auto& p : gb) {
        const std::vector<std::size_t> id{0, 1, 2};
        CHECK(ideal_member(p.mapped(dr, id), Ideal(dr, a)));
    }
    for (const auto& p : ga) {
        const std::vector<std::size_t> id{0, 1, 2};
        CHECK(ideal_member(p.mapped(lx, id), Ideal(lx, b)));
    }
}
