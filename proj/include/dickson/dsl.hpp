#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dickson/doubling.hpp"

namespace dickson {

struct DslStatement {
    enum class Kind { Quaternion, Quaternion2, Etale, Octonion, Element, Algebra, Opposite };
    Kind kind;
    std::string name;
    std::vector<FieldValue> scalars;  // quaternion/octonion parameters, etale parameter
    EtaleKind etale_kind = EtaleKind::Split;
    std::string ref;   // element: owning algebra; algebra: base; opposite: source
    Vec coeffs;        // element coefficient list
    Placement placement = Placement::Left;
    std::string expr;  // algebra statement: doubling scalar, canonical text
};

/// Parsed and evaluated program: the statement list (for render) plus the
/// named algebras and elements it constructs.
struct SpecProgram {
    FieldSpec field = FieldSpec::rationals();
    std::vector<DslStatement> statements;
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, AlgElement> elements;

    const AlgebraPtr& algebra(const std::string& name) const {
        auto it = algebras.find(name);
        if (it == algebras.end()) throw UnknownName(name);
        return it->second;
    }
    const AlgElement& element(const std::string& name) const {
        auto it = elements.find(name);
        if (it == elements.end()) throw UnknownName(name);
        return it->second;
    }
};

namespace detail {

inline AlgElement elem_expr_term(const FieldSpec& field, const AlgebraPtr& owner,
                                 const std::string& term, bool neg) {
    int depth = 0;
    std::size_t star = std::string::npos;
    for (std::size_t k = 0; k < term.size(); ++k) {
        if (term[k] == '(') ++depth;
        if (term[k] == ')') --depth;
        if (term[k] == '*' && depth == 0) {
            star = k;
            break;
        }
    }
    auto trim = [](std::string t) {
        std::size_t a = t.find_first_not_of(" \t");
        std::size_t b = t.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
    };
    FieldValue coef = FieldValue::integer(field, 1);
    std::string label;
    if (star != std::string::npos) {
        std::string ct = trim(term.substr(0, star));
        label = trim(term.substr(star + 1));
        coef = parse_field_value(field, ct);
    } else {
        label = trim(term);
    }
    std::size_t idx = owner->dim();
    for (std::size_t k = 0; k < owner->dim(); ++k)
        if (owner->labels()[k] == label) idx = k;
    AlgElement out;
    if (idx < owner->dim()) {
        out = coef * AlgElement::basis(owner, idx);
    } else if (star == std::string::npos) {
        try {
            out = parse_field_value(field, label) * AlgElement::unit(owner);
        } catch (const Error&) {
            throw Error("unknown basis label or scalar '" + label + "'");
        }
    } else {
        throw Error("unknown basis label '" + label + "'");
    }
    return neg ? -out : out;
}

}  // namespace detail

/// Basis-label linear combination over the algebra's labels, e.g. "1 + 2*i - j".
/// Labels win by exact (hence longest) token match; a bare scalar means
/// scalar * unit.
inline AlgElement parse_element_expr(const AlgebraPtr& owner, const std::string& expr) {
    const FieldSpec& field = owner->field();
    AlgElement acc = AlgElement::zero(owner);
    std::size_t i = 0;
    auto ws = [&] { while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i; };
    bool first = true;
    while (ws(), i < expr.size()) {
        bool neg = false;
        if (expr[i] == '+' || expr[i] == '-') {
            neg = expr[i] == '-';
            ++i;
        } else if (!first) {
            throw Error("expected + or - in element expression: " + expr);
        }
        first = false;
        ws();
        std::string term;
        int depth = 0;
        while (i < expr.size()) {
            char c = expr[i];
            if (depth == 0 && (c == '+' || c == '-')) break;
            if (c == '(') ++depth;
            if (c == ')') --depth;
            term += c;
            ++i;
        }
        while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back())))
            term.pop_back();
        if (term.empty()) throw Error("empty term in element expression: " + expr);
        acc = acc + detail::elem_expr_term(field, owner, term, neg);
    }
    if (first) throw Error("empty element expression");
    return acc;
}

namespace detail {

class DslParser {
  public:
    explicit DslParser(std::string text) : s_(std::move(text)) {}

    SpecProgram run() {
        parse_field();
        while (skip_ws(), !eof()) parse_statement();
        return std::move(prog_);
    }

  private:
    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, line_, col_); }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    char advance() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (!eof()) {
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        skip_ws();
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    bool accept(char c) {
        skip_ws();
        if (!eof() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        if (eof() || (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_'))
            fail("expected identifier");
        std::string out;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            out += advance();
        return out;
    }

    std::int64_t integer() {
        skip_ws();
        bool neg = accept('-');
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        std::int64_t v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (advance() - '0');
        return neg ? -v : v;
    }

    /// Raw text up to a top-level occurrence of one of `stops`; parens tracked.
    std::string raw_until(const std::string& stops) {
        skip_ws();
        std::string out;
        int depth = 0;
        while (!eof()) {
            char c = peek();
            if (depth == 0 && stops.find(c) != std::string::npos) break;
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (c == '\n' && depth == 0) break;
            out += advance();
        }
        while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
        if (out.empty()) fail("expected expression");
        return out;
    }

    FieldValue scalar(const std::string& stops) {
        std::string text = raw_until(stops);
        try {
            return parse_field_value(prog_.field, text);
        } catch (const Error& e) {
            fail(std::string("bad field element '") + text + "': " + e.what());
        }
    }

    void parse_field() {
        skip_ws();
        if (ident() != "field") fail("program must start with a field declaration");
        skip_ws();
        std::string head = ident();
        if (head == "Q") {
            prog_.field = FieldSpec::rationals();
            return;
        }
        if (head != "GF") fail("expected Q or GF(p)");
        expect('(');
        std::int64_t p = integer();
        expect(')');
        if (p < 2 || !is_prime(p)) fail(std::to_string(p) + " is not prime; GF(p) only");
        if (accept('(')) {
            std::string var = ident();
            expect(')');
            prog_.field = FieldSpec::rational_function_field(p, var);
        } else {
            prog_.field = FieldSpec::prime_field(p);
        }
    }

    std::string fresh_name() {
        std::string n = ident();
        if (prog_.algebras.count(n) || prog_.elements.count(n)) fail("name already defined: " + n);
        return n;
    }

    void parse_statement() {
        std::string kw = ident();
        if (kw == "quaternion") return parse_quaternion(false);
        if (kw == "quaternion2") return parse_quaternion(true);
        if (kw == "etale") return parse_etale();
        if (kw == "octonion") return parse_octonion();
        if (kw == "element") return parse_element();
        if (kw == "algebra") return parse_algebra();
        if (kw == "opposite") return parse_opposite();
        fail("unknown statement: " + kw);
    }

    void parse_quaternion(bool char2) {
        DslStatement st;
        st.kind = char2 ? DslStatement::Kind::Quaternion2 : DslStatement::Kind::Quaternion;
        st.name = fresh_name();
        expect('=');
        expect(char2 ? '[' : '(');
        st.scalars.push_back(scalar(","));
        expect(',');
        st.scalars.push_back(scalar(")"));
        expect(')');
        prog_.algebras[st.name] = char2
            ? make_quaternion_char2(prog_.field, st.scalars[0], st.scalars[1])
            : make_quaternion(prog_.field, st.scalars[0], st.scalars[1]);
        prog_.statements.push_back(std::move(st));
    }

    void parse_etale() {
        DslStatement st;
        st.kind = DslStatement::Kind::Etale;
        st.name = fresh_name();
        expect('=');
        std::string form = ident();
        if (form == "split") {
            st.etale_kind = EtaleKind::Split;
            prog_.algebras[st.name] = make_etale(prog_.field, st.etale_kind);
        } else if (form == "sqrt" || form == "artinschreier") {
            st.etale_kind = form == "sqrt" ? EtaleKind::AdjoinSqrt : EtaleKind::AdjoinArtinSchreier;
            expect('(');
            st.scalars.push_back(scalar(")"));
            expect(')');
            prog_.algebras[st.name] = make_etale(prog_.field, st.etale_kind, st.scalars[0]);
        } else {
            fail("expected split, sqrt(a), or artinschreier(a)");
        }
        prog_.statements.push_back(std::move(st));
    }

    void parse_octonion() {
        DslStatement st;
        st.kind = DslStatement::Kind::Octonion;
        st.name = fresh_name();
        expect('=');
        expect('(');
        st.scalars.push_back(scalar(","));
        expect(',');
        st.scalars.push_back(scalar(","));
        expect(',');
        st.scalars.push_back(scalar(")"));
        expect(')');
        prog_.algebras[st.name] =
            make_octonion(prog_.field, st.scalars[0], st.scalars[1], st.scalars[2]);
        prog_.statements.push_back(std::move(st));
    }

    void parse_element() {
        DslStatement st;
        st.kind = DslStatement::Kind::Element;
        st.name = fresh_name();
        if (ident() != "in") fail("expected 'in'");
        st.ref = ident();
        AlgebraPtr owner = lookup_algebra(st.ref);
        expect('=');
        st.coeffs.push_back(scalar(",\n"));
        while (accept(',')) st.coeffs.push_back(scalar(",\n"));
        if (st.coeffs.size() != owner->dim())
            fail("expected " + std::to_string(owner->dim()) + " coefficients, got " +
                 std::to_string(st.coeffs.size()));
        prog_.elements.emplace(st.name, AlgElement(owner, st.coeffs));
        prog_.statements.push_back(std::move(st));
    }

    void parse_algebra() {
        DslStatement st;
        st.kind = DslStatement::Kind::Algebra;
        st.name = fresh_name();
        expect('=');
        std::string pname = ident();
        st.placement = placement_from_name(pname);
        expect('(');
        st.ref = ident();
        AlgebraPtr base = lookup_algebra(st.ref);
        expect(',');
        st.expr = raw_until(")");
        expect(')');
        AlgElement c = eval_elem_expr(base, st.expr);
        prog_.algebras[st.name] = dickson_double({base, c, st.placement, false});
        prog_.statements.push_back(std::move(st));
    }

    void parse_opposite() {
        DslStatement st;
        st.kind = DslStatement::Kind::Opposite;
        st.name = fresh_name();
        expect('=');
        if (ident() != "op") fail("expected op(name)");
        expect('(');
        st.ref = ident();
        AlgebraPtr src = lookup_algebra(st.ref);
        expect(')');
        prog_.algebras[st.name] = opposite(src);
        prog_.statements.push_back(std::move(st));
    }

    Placement placement_from_name(const std::string& n) {
        for (Placement p : {Placement::Left, Placement::Middle, Placement::Right,
                            Placement::LeftStar, Placement::MiddleStar, Placement::RightStar})
            if (placement_name(p) == n) return p;
        fail("unknown placement: " + n);
    }

    AlgebraPtr lookup_algebra(const std::string& n) {
        auto it = prog_.algebras.find(n);
        if (it == prog_.algebras.end()) fail("unknown algebra: " + n);
        return it->second;
    }

    /// elem_expr: a defined element name, or a basis-label linear combination.
    AlgElement eval_elem_expr(const AlgebraPtr& owner, const std::string& expr) {
        auto named = prog_.elements.find(expr);
        if (named != prog_.elements.end()) {
            if (!named->second.alg->same_tensor_as(*owner))
                fail("element " + expr + " does not live in the base algebra");
            return AlgElement(owner, named->second.coeff);
        }
        try {
            return parse_element_expr(owner, expr);
        } catch (const Error& e) {
            fail(e.what());
        }
    }

    std::string s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    SpecProgram prog_;
};

}  // namespace detail

inline SpecProgram parse_spec(const std::string& text) { return detail::DslParser(text).run(); }

/// Canonical text form; parse_spec(render(p)) reconstructs p.
inline std::string render(const SpecProgram& prog) {
    std::ostringstream out;
    out << "field " << prog.field.str() << "\n";
    for (const DslStatement& st : prog.statements) {
        switch (st.kind) {
            case DslStatement::Kind::Quaternion:
                out << "quaternion " << st.name << " = (" << st.scalars[0].str() << ","
                    << st.scalars[1].str() << ")\n";
                break;
            case DslStatement::Kind::Quaternion2:
                out << "quaternion2 " << st.name << " = [" << st.scalars[0].str() << ","
                    << st.scalars[1].str() << ")\n";
                break;
            case DslStatement::Kind::Etale:
                out << "etale " << st.name << " = ";
                if (st.etale_kind == EtaleKind::Split)
                    out << "split";
                else
                    out << (st.etale_kind == EtaleKind::AdjoinSqrt ? "sqrt" : "artinschreier")
                        << "(" << st.scalars[0].str() << ")";
                out << "\n";
                break;
            case DslStatement::Kind::Octonion:
                out << "octonion " << st.name << " = (" << st.scalars[0].str() << ","
                    << st.scalars[1].str() << "," << st.scalars[2].str() << ")\n";
                break;
            case DslStatement::Kind::Element: {
                out << "element " << st.name << " in " << st.ref << " = ";
                for (std::size_t i = 0; i < st.coeffs.size(); ++i)
                    out << (i ? "," : "") << st.coeffs[i].str();
                out << "\n";
                break;
            }
            case DslStatement::Kind::Algebra:
                out << "algebra " << st.name << " = " << placement_name(st.placement) << "("
                    << st.ref << ", " << st.expr << ")\n";
                break;
            case DslStatement::Kind::Opposite:
                out << "opposite " << st.name << " = op(" << st.ref << ")\n";
                break;
        }
    }
    return out.str();
}

}  // namespace dickson
