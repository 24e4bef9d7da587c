#pragma once

// The input language for forms.
//
//   ring projective x0 x1 x2;            # or: ring affine x y z;
//   form w = x0*dx1 - x1*dx0;
//   form v = -x3*dx1^dx2 + (x1 + x3)*dx1^dx3;
//   frame E = [dx1, x1*dx2 + dx3];
//   point p = (0, 0, 1);
//
// `*` multiplies (wedge product for forms), `^` is the wedge product, or a
// power when both sides are a polynomial and an integer. `/` divides by a
// nonzero rational constant. Comments run from `#` to the end of the line.

#include <string>
#include <string_view>
#include <vector>

#include "folia/foliation.hpp"

namespace folia {

struct FormDecl {
    std::string name;
    DiffForm form;
};

struct FrameDecl {
    std::string name;
    std::vector<DiffForm> generators;
};

struct PointDecl {
    std::string name;
    std::vector<Rational> coords;
};

struct InputDocument {
    Ambient ambient = Ambient::affine;
    RingPtr ring;
    std::vector<FormDecl> forms;
    std::vector<FrameDecl> frames;
    std::vector<PointDecl> points;

    const FormDecl* find_form(std::string_view name) const;
    const FrameDecl* find_frame(std::string_view name) const;
    const PointDecl* find_point(std::string_view name) const;
};

/// Throws ParseError (with line and column) on malformed text and
/// SemanticError on well-formed but meaningless input.
InputDocument parse_document(std::string_view text, MonomialOrder order = MonomialOrder::degrevlex);

/// Parses an expression over an existing ring.
DiffForm parse_form(const RingPtr& ring, std::string_view text);
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Canonical text; parse_document(print_document(d)) reproduces d.
std::string print_document(const InputDocument& doc);

} // namespace folia
