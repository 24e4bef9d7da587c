#include "doctest.h"

#include "folia/dsl.hpp"
#include "folia/errors.hpp"
#include "test_support.hpp"

using namespace folia;
using namespace folia::testing;

namespace {

std::pair<std::size_t, std::size_t> parse_error_at(std::string_view text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

std::string semantic_error(std::string_view text) {
    try {
        parse_document(text);
    } catch (const SemanticError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("P3 example document") {
    const auto doc = parse_document("ring projective x0 x1 x2 x3; form w = -x3*dx1^dx2 + x2*dx1^dx3 - x1*dx2^dx3;");
    CHECK(doc.ambient == Ambient::projective);
    CHECK(doc.ring->nvars() == 4);
    REQUIRE(doc.forms.size() == 1);
    CHECK(doc.forms[0].name == "w");
    const auto& w = doc.forms[0].form;
    CHECK(w.degree() == 2);
    CHECK(w.coefficient(0b0110) == -Polynomial::variable(doc.ring, 3));
    CHECK(w.coefficient(0b1010) == Polynomial::variable(doc.ring, 2));
    CHECK(w.coefficient(0b1100) == -Polynomial::variable(doc.ring, 1));
    CHECK(doc.find_form("w") == &doc.forms[0]);
    CHECK(doc.find_form("v") == nullptr);
}

TEST_CASE("specialized A3 document") {
    const auto doc = parse_document("ring affine x1 x2 x3; form w = x1*dx1^dx2 + (x1+x3)*dx1^dx3 + x2*dx2^dx3;");
    CHECK(doc.ambient == Ambient::affine);
    const auto& w = doc.forms.at(0).form;
    CHECK(exterior_derivative(w).is_zero());
    CHECK(w.coefficient(0b101) == P(doc.ring, "x1 + x3"));
}

TEST_CASE("zero form parses but is not a foliation") {
    const auto doc = parse_document("ring affine x1 x2; form w = dx1 ^ dx1;");
    CHECK(doc.forms.at(0).form.is_zero());
    CHECK(doc.forms.at(0).form.degree() == 2);
    CHECK_THROWS_AS(FoliationForm(doc.forms[0].form, doc.ambient), SemanticError);
}

TEST_CASE("expressions") {
    auto r = ring_n(3);
    CHECK(F(r, "(x1 + x2)^2*dx3") == F(r, "x1^2*dx3 + 2*x1*x2*dx3 + x2^2*dx3"));
    CHECK(F(r, "dx1*dx2") == F(r, "dx1^dx2"));
    CHECK(F(r, "(dx1 + x2*dx3)^dx2") == F(r, "dx1^dx2 - x2*dx2^dx3"));
    CHECK(F(r, "x1*dx1/2") == F(r, "1/2*x1*dx1"));
    CHECK(F(r, "-(dx1 - dx2)") == F(r, "dx2 - dx1"));
    CHECK(F(r, "x1 * x2") == DiffForm::scalar(P(r, "x1*x2")));
    CHECK(P(r, "3/6") == Polynomial::constant(r, Rational(1, 2)));
    CHECK(F(r, "0*dx1").is_zero());
    CHECK(F(r, "0*dx1").degree() == 1);
    CHECK_THROWS_AS(F(r, "dx1/x2"), SemanticError);
    CHECK_THROWS_AS(F(r, "dx1/0"), SemanticError);
    CHECK_THROWS_AS(F(r, "x1^dx2 + dx2^dx3"), SemanticError);
}

TEST_CASE("frames, points and comments") {
    const auto doc = parse_document(
        "# tangent forms\n"
        "ring affine x y z;\n"
        "form w = z*dx^dy + y*dx^dz + x*dy^dz; # generic\n"
        "frame E = [z*dy + y*dz, z*dx - x*dz, y*dx + x*dy];\n"
        "point p = (0, 1/2, -3);\n");
    REQUIRE(doc.frames.size() == 1);
    CHECK(doc.frames[0].generators.size() == 3);
    REQUIRE(doc.points.size() == 1);
    CHECK(doc.points[0].coords == std::vector<Rational>{0, Rational(1, 2), -3});
    CHECK(doc.find_frame("E") != nullptr);
    CHECK(doc.find_point("p") != nullptr);
}

TEST_CASE("parse error positions") {
    CHECK(parse_error_at("ring affine x1 x2; form w = x1*dx2 +;") == std::pair<std::size_t, std::size_t>{1, 37});
    CHECK(parse_error_at("ring affine x1 x2;\nform w = (x1 + x2;") == std::pair<std::size_t, std::size_t>{2, 18});
    CHECK(parse_error_at("ring affine x1 x2;\nform w = x1*dx2") == std::pair<std::size_t, std::size_t>{2, 16});
    CHECK(parse_error_at("ring torus x1;") == std::pair<std::size_t, std::size_t>{1, 6});
    CHECK(parse_error_at("form w = dx1;") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(parse_error_at("ring affine x1; form w = x1 $ dx1;") == std::pair<std::size_t, std::size_t>{1, 29});
    CHECK(parse_error_at("ring affine;") == std::pair<std::size_t, std::size_t>{1, 12});
}

TEST_CASE("semantic errors") {
    CHECK(semantic_error("ring affine x1 x2; form w = x3*dx1;").starts_with("1:29:"));
    CHECK(semantic_error("ring affine x1 x2; form w = dx1 + dx1^dx2;") != "");
    CHECK(semantic_error("ring affine x1 x1;") != "");
    CHECK(semantic_error("ring affine x1 x2; form w = dx1; form w = dx2;") != "");
    CHECK(semantic_error("ring affine x1 x2; point p = (1, 2, 3);") != "");
    CHECK(semantic_error("ring affine x1 x2; point p = (x1, 2);") != "");
    CHECK(semantic_error("ring affine x1 x2; frame E = [dx1^dx2];") != "");
    CHECK(semantic_error("ring affine form x2;") != "");
}

TEST_CASE("print and parse round trip") {
    for (const char* text : {
             "ring projective x0 x1 x2 x3; form w = -x3*dx1^dx2 + x2*dx1^dx3 - x1*dx2^dx3;",
             "ring affine x1 x2 x3; form w = x1*dx1^dx2 + (x1+x3)*dx1^dx3 + x2*dx2^dx3; point o = (0, 0, 0);",
             "ring affine x y; form a = (x^2 - 1/3*y)*dx; form b = dx^dy; frame E = [dx, x*dy];",
             "ring affine x1 x2; form z = 0*dx1; form y = dx2^dx2;",
         }) {
        const auto doc = parse_document(text);
        const auto printed = print_document(doc);
        const auto again = parse_document(printed);
        CHECK(print_document(again) == printed);
        CHECK(again.ambient == doc.ambient);
        CHECK(again.ring->names() == doc.ring->names());
        REQUIRE(again.forms.size() == doc.forms.size());
        for (std::size_t i = 0; i < doc.forms.size(); ++i) {
            CHECK(again.forms[i].name == doc.forms[i].name);
            CHECK(again.forms[i].form == doc.forms[i].form);
        }
        CHECK(again.frames.size() == doc.frames.size());
        CHECK(again.points.size() == doc.points.size());
    }
}

TEST_CASE("random forms round trip through text") {
    Rng rng(43);
    auto r = ring_n(4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_form(r, trial % 5, 3, rng);
        CHECK(F(r, f.to_string()) == f);
    }
}
