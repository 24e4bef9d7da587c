#include "folia/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace folia {

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
        } else if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::ident, std::string(src.substr(i, j - i)), line, col});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::number, std::string(src.substr(i, j - i)), line, col});
            advance(j - i);
        } else if (std::string_view("+-*/^()[],;=").find(c) != std::string_view::npos) {
            out.push_back({Tok::punct, std::string(1, c), line, col});
            advance(1);
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

const std::set<std::string, std::less<>> keywords = {"ring", "affine", "projective", "form", "frame", "point"};

std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::end: return "end of input";
    case Tok::ident: return "'" + t.text + "'";
    case Tok::number: return "number " + t.text;
    case Tok::punct: return "'" + t.text + "'";
    }
    return "token";
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    RingPtr ring;

    const Token& peek() const { return toks_[pos_]; }
    bool at_end() const { return peek().kind == Tok::end; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.column, msg); }
    [[noreturn]] void semantic(const Token& t, const std::string& msg) const {
        throw SemanticError(std::to_string(t.line) + ":" + std::to_string(t.column) + ": " + msg);
    }

    bool accept(std::string_view punct) {
        if (peek().kind == Tok::punct && peek().text == punct) {
            ++pos_;
            return true;
        }
        return false;
    }
    const Token& expect(std::string_view punct) {
        if (peek().kind != Tok::punct || peek().text != punct)
            fail(peek(), "expected '" + std::string(punct) + "' but found " + describe(peek()));
        return toks_[pos_++];
    }
    const Token& expect_ident(const char* what) {
        if (peek().kind != Tok::ident) fail(peek(), std::string("expected ") + what + " but found " + describe(peek()));
        return toks_[pos_++];
    }
    void expect_keyword(std::string_view kw) {
        if (peek().kind != Tok::ident || peek().text != kw)
            fail(peek(), "expected '" + std::string(kw) + "' but found " + describe(peek()));
        ++pos_;
    }
    void expect_end() {
        if (!at_end()) fail(peek(), "unexpected " + describe(peek()));
    }

    // expr := term (('+'|'-') term)*
    DiffForm expr() {
        DiffForm acc = term();
        while (true) {
            const Token& op = peek();
            if (accept("+")) {
                add(acc, term(), op, false);
            } else if (accept("-")) {
                add(acc, term(), op, true);
            } else {
                return acc;
            }
        }
    }

private:
    void add(DiffForm& acc, const DiffForm& rhs, const Token& op, bool negate) {
        if (acc.degree() != rhs.degree())
            semantic(op, "cannot add forms of degree " + std::to_string(acc.degree()) + " and " +
                             std::to_string(rhs.degree()));
        if (negate) acc -= rhs;
        else acc += rhs;
    }

    // term := unary (('*'|'/') unary)*
    DiffForm term() {
        DiffForm acc = unary();
        while (true) {
            const Token& op = peek();
            if (accept("*")) {
                acc = wedge(acc, unary());
            } else if (accept("/")) {
                const DiffForm rhs = unary();
                if (rhs.degree() != 0 || !rhs.coefficient(0).is_constant() || rhs.is_zero())
                    semantic(op, "can only divide by a nonzero rational constant");
                acc = acc.times(Polynomial::constant(ring, 1 / rhs.coefficient(0).constant_value()));
            } else {
                return acc;
            }
        }
    }

    DiffForm unary() {
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        return power();
    }

    // power := atom ('^' (number | atom))*
    DiffForm power() {
        DiffForm acc = atom();
        while (true) {
            const Token& op = peek();
            if (!accept("^")) return acc;
            if (peek().kind == Tok::number && acc.degree() == 0) {
                const Token& num = toks_[pos_++];
                unsigned long e = 0;
                try {
                    e = std::stoul(num.text);
                } catch (const std::exception&) {
                    semantic(num, "exponent too large");
                }
                if (e > 10000) semantic(num, "exponent too large");
                acc = DiffForm::scalar(acc.coefficient(0).pow(static_cast<unsigned>(e)));
            } else {
                const DiffForm rhs = atom();
                if (acc.degree() == 0 && rhs.degree() == 0) semantic(op, "exponent must be a nonnegative integer");
                acc = wedge(acc, rhs);
            }
        }
    }

    DiffForm atom() {
        const Token& t = peek();
        if (t.kind == Tok::number) {
            ++pos_;
            return DiffForm::scalar(Polynomial::constant(ring, Rational(t.text)));
        }
        if (t.kind == Tok::ident) {
            ++pos_;
            if (auto v = ring->index_of(t.text)) return DiffForm::scalar(Polynomial::variable(ring, *v));
            if (t.text.size() > 1 && t.text[0] == 'd')
                if (auto v = ring->index_of(std::string_view(t.text).substr(1))) return differential(ring, *v);
            semantic(t, "unknown identifier '" + t.text + "'");
        }
        if (accept("(")) {
            DiffForm inner = expr();
            expect(")");
            return inner;
        }
        fail(t, "expected an expression but found " + describe(t));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;

public:
    InputDocument document(MonomialOrder order) {
        InputDocument doc;
        expect_keyword("ring");
        const Token& amb = expect_ident("'affine' or 'projective'");
        if (amb.text == "affine") doc.ambient = Ambient::affine;
        else if (amb.text == "projective") doc.ambient = Ambient::projective;
        else fail(amb, "expected 'affine' or 'projective' but found " + describe(amb));
        std::vector<std::string> names;
        std::set<std::string> seen;
        do {
            const Token& v = expect_ident("a variable name");
            if (keywords.contains(v.text)) semantic(v, "'" + v.text + "' is a keyword");
            if (!seen.insert(v.text).second) semantic(v, "duplicate variable '" + v.text + "'");
            names.push_back(v.text);
        } while (peek().kind == Tok::ident);
        expect(";");
        try {
            ring = PolyRing::make(names, order);
        } catch (const Error& e) {
            semantic(amb, e.what());
        }
        doc.ring = ring;

        std::set<std::string> decl_names;
        while (!at_end()) {
            const Token& kw = expect_ident("'form', 'frame' or 'point'");
            const Token& name = expect_ident("a name");
            if (keywords.contains(name.text)) semantic(name, "'" + name.text + "' is a keyword");
            if (!decl_names.insert(name.text).second) semantic(name, "duplicate declaration '" + name.text + "'");
            expect("=");
            if (kw.text == "form") {
                doc.forms.push_back({name.text, expr()});
            } else if (kw.text == "frame") {
                expect("[");
                FrameDecl frame{name.text, {}};
                do {
                    const Token& at = peek();
                    DiffForm g = expr();
                    if (g.degree() != 1) semantic(at, "frame generators must be 1-forms");
                    frame.generators.push_back(std::move(g));
                } while (accept(","));
                expect("]");
                doc.frames.push_back(std::move(frame));
            } else if (kw.text == "point") {
                expect("(");
                PointDecl point{name.text, {}};
                do {
                    const Token& at = peek();
                    DiffForm c = expr();
                    if (c.degree() != 0 || !c.coefficient(0).is_constant())
                        semantic(at, "point coordinates must be rational constants");
                    point.coords.push_back(c.coefficient(0).constant_value());
                } while (accept(","));
                expect(")");
                if (point.coords.size() != ring->nvars())
                    semantic(name, "point '" + name.text + "' has " + std::to_string(point.coords.size()) +
                                       " coordinates, expected " + std::to_string(ring->nvars()));
                doc.points.push_back(std::move(point));
            } else {
                fail(kw, "expected 'form', 'frame' or 'point' but found " + describe(kw));
            }
            expect(";");
        }
        return doc;
    }
};

template <class T>
const T* find_named(const std::vector<T>& items, std::string_view name) {
    auto it = std::find_if(items.begin(), items.end(), [&](const T& d) { return d.name == name; });
    return it == items.end() ? nullptr : &*it;
}

} // namespace

const FormDecl* InputDocument::find_form(std::string_view name) const { return find_named(forms, name); }
const FrameDecl* InputDocument::find_frame(std::string_view name) const { return find_named(frames, name); }
const PointDecl* InputDocument::find_point(std::string_view name) const { return find_named(points, name); }

InputDocument parse_document(std::string_view text, MonomialOrder order) {
    Parser p(text);
    return p.document(order);
}

DiffForm parse_form(const RingPtr& ring, std::string_view text) {
    Parser p(text);
    p.ring = ring;
    DiffForm f = p.expr();
    p.expect_end();
    return f;
}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
    const DiffForm f = parse_form(ring, text);
    if (f.degree() != 0) throw SemanticError("expected a polynomial, got a form of degree " + std::to_string(f.degree()));
    return f.coefficient(0);
}

namespace {

// The zero form keeps its degree: 0*dx1^dx1 for a zero 2-form.
std::string form_text(const RingPtr& ring, const DiffForm& f) {
    if (!f.is_zero() || f.degree() == 0) return f.to_string();
    std::string out = "0";
    for (std::size_t i = 0; i < f.degree(); ++i) out += (i ? "^d" : "*d") + ring->names().front();
    return out;
}

} // namespace

std::string print_document(const InputDocument& doc) {
    std::ostringstream os;
    os << "ring " << to_string(doc.ambient);
    for (const auto& n : doc.ring->names()) os << ' ' << n;
    os << ";\n";
    for (const auto& f : doc.forms) os << "form " << f.name << " = " << form_text(doc.ring, f.form) << ";\n";
    for (const auto& f : doc.frames) {
        os << "frame " << f.name << " = [";
        for (std::size_t i = 0; i < f.generators.size(); ++i) os << (i ? ", " : "") << f.generators[i].to_string();
        os << "];\n";
    }
    for (const auto& p : doc.points) {
        os << "point " << p.name << " = (";
        for (std::size_t i = 0; i < p.coords.size(); ++i) os << (i ? ", " : "") << to_string(p.coords[i]);
        os << ");\n";
    }
    return os.str();
}

} // namespace folia
