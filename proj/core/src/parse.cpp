#include "folcalc/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace folcalc {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= src_.size()) {
            cur_ = Token{Tok::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        auto single = [&](Tok k) {
            cur_ = Token{k, std::string(1, c), line_, col_};
            ++pos_;
            ++col_;
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            cur_ = Token{Tok::Number, src_.substr(start, pos_ - start), line_, col_};
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
            src_.compare(pos_, 3, "∂") == 0) {
            std::size_t start = pos_;
            if (src_.compare(pos_, 3, "∂") == 0) pos_ += 3;  // '∂' as a dd-prefix
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string text = src_.substr(start, pos_ - start);
            if (text.rfind("∂", 0) == 0) text = "dd" + text.substr(3);
            cur_ = Token{Tok::Ident, std::move(text), line_, col_};
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        switch (c) {
            case '+': single(Tok::Plus); return;
            case '-': single(Tok::Minus); return;
            case '*': single(Tok::Star); return;
            case '^': single(Tok::Caret); return;
            case '/': single(Tok::Slash); return;
            case '(': single(Tok::LParen); return;
            case ')': single(Tok::RParen); return;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "'", line_, col_);
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token cur_{Tok::End, "", 1, 1};
};

bool looks_like_indexed(const std::string& s) {
    if (s.size() < 2 || s[0] != 'x') return false;
    return std::all_of(s.begin() + 1, s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_xyz_letter(const std::string& s) { return s == "x" || s == "y" || s == "z"; }

class Parser {
  public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : lex_(text), vars_(vars) {
        xyz_ring_ = vars.size() <= 3 && !vars.empty();
        if (xyz_ring_) {
            static const std::vector<std::string> xyz = {"x", "y", "z"};
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] != xyz[i]) xyz_ring_ = false;
        }
        indexed_ring_ =
            std::all_of(vars.begin(), vars.end(), [](const std::string& v) { return looks_like_indexed(v); });
    }

    ParsedValue parse() {
        ParsedValue v = expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) throw ParseError("unexpected trailing input", t.line, t.col);
        return v;
    }

  private:
    int nv() const { return static_cast<int>(vars_.size()); }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const {
        throw ParseError(msg, t.line, t.col);
    }

    // ---- value algebra with kind checking ----

    ParsedValue add(ParsedValue a, ParsedValue b, const Token& at, bool subtract) {
        if (a.index() != b.index()) fail(at, "cannot add values of different kinds");
        if (auto* p = std::get_if<Polynomial>(&a)) {
            const auto& q = std::get<Polynomial>(b);
            return subtract ? *p - q : *p + q;
        }
        if (auto* f = std::get_if<DiffForm>(&a)) {
            auto& g = std::get<DiffForm>(b);
            // promote a 0-form + scalar mismatch is impossible here; degrees must agree
            if (f->form_degree() != g.form_degree())
                fail(at, "cannot add forms of different degrees");
            return subtract ? *f - g : *f + g;
        }
        const auto& x = std::get<VectorField>(a);
        const auto& y = std::get<VectorField>(b);
        return subtract ? x - y : x + y;
    }

    ParsedValue mul(ParsedValue a, ParsedValue b, const Token& at) {
        // scalar * anything (either side)
        if (std::holds_alternative<Polynomial>(a) && std::holds_alternative<Polynomial>(b))
            return std::get<Polynomial>(a) * std::get<Polynomial>(b);
        if (std::holds_alternative<Polynomial>(a)) {
            if (auto* g = std::get_if<DiffForm>(&b)) return std::get<Polynomial>(a) * *g;
            return std::get<Polynomial>(a) * std::get<VectorField>(b);
        }
        if (std::holds_alternative<Polynomial>(b)) {
            if (auto* f = std::get_if<DiffForm>(&a)) return std::get<Polynomial>(b) * *f;
            return std::get<Polynomial>(b) * std::get<VectorField>(a);
        }
        fail(at, "'*' needs at least one scalar operand (use '^' to wedge forms)");
    }

    ParsedValue caret(ParsedValue a, ParsedValue b, const Token& at) {
        const bool a_form = std::holds_alternative<DiffForm>(a);
        const bool b_form = std::holds_alternative<DiffForm>(b);
        if (a_form && b_form) {
            const auto& f = std::get<DiffForm>(a);
            const auto& g = std::get<DiffForm>(b);
            if (f.form_degree() == 0 || g.form_degree() == 0)
                fail(at, "cannot wedge a 0-form (use '*')");
            return wedge(f, g);
        }
        if (std::holds_alternative<Polynomial>(a) && std::holds_alternative<Polynomial>(b)) {
            const auto& base = std::get<Polynomial>(a);
            const auto& e = std::get<Polynomial>(b);
            if (!e.is_constant()) fail(at, "exponent must be a constant integer");
            Rational c = e.is_zero() ? Rational(0) : e.terms()[0].coeff;
            if (!is_integer(c) || c < 0) fail(at, "exponent must be a nonnegative integer");
            if (c > 64) fail(at, "exponent too large");
            return base.pow(static_cast<unsigned>(c.get_num().get_ui()));
        }
        fail(at, "'^' is wedge between forms or a scalar power; operand kinds do not match");
    }

    // ---- grammar ----

    ParsedValue expr() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        }
        ParsedValue acc = term();
        if (neg) acc = negate(std::move(acc));
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Token op = lex_.take();
            ParsedValue rhs = term();
            acc = add(std::move(acc), std::move(rhs), op, op.kind == Tok::Minus);
        }
        return acc;
    }

    ParsedValue negate(ParsedValue v) {
        if (auto* p = std::get_if<Polynomial>(&v)) return -*p;
        if (auto* f = std::get_if<DiffForm>(&v)) return -*f;
        return -std::get<VectorField>(v);
    }

    ParsedValue term() {
        ParsedValue acc = factor();
        while (lex_.peek().kind == Tok::Star) {
            Token op = lex_.take();
            ParsedValue rhs = factor();
            acc = mul(std::move(acc), std::move(rhs), op);
        }
        return acc;
    }

    ParsedValue factor() {
        ParsedValue acc = primary();
        while (lex_.peek().kind == Tok::Caret) {
            Token op = lex_.take();
            ParsedValue rhs = primary();
            acc = caret(std::move(acc), std::move(rhs), op);
        }
        return acc;
    }

    ParsedValue primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number: {
                BigInt num(t.text);
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.take();
                    Token d = lex_.take();
                    if (d.kind != Tok::Number)
                        fail(d, "expected integer denominator after '/'");
                    BigInt den(d.text);
                    if (den == 0) fail(d, "zero denominator");
                    Rational q(num, den);
                    q.canonicalize();
                    return Polynomial::constant(nv(), q);
                }
                return Polynomial::constant(nv(), Rational(num));
            }
            case Tok::Ident:
                return ident(t);
            case Tok::Minus:
                return negate(primary());
            case Tok::LParen: {
                ParsedValue v = expr();
                Token close = lex_.take();
                if (close.kind != Tok::RParen) fail(close, "expected ')'");
                return v;
            }
            case Tok::End:
                fail(t, "unexpected end of input");
            case Tok::Slash:
                fail(t, "'/' is only allowed in rational literals a/b");
            default:
                fail(t, "unexpected token '" + t.text + "'");
        }
    }

    std::optional<int> var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) return std::nullopt;
        return static_cast<int>(it - vars_.begin());
    }

    ParsedValue ident(const Token& t) {
        const std::string& s = t.text;
        if (auto i = var_index(s)) return Polynomial::variable(nv(), *i);
        if (s.size() > 1 && s[0] == 'd' && s.compare(0, 2, "dd") != 0) {
            if (auto i = var_index(s.substr(1))) return DiffForm::dx(nv(), *i);
        }
        if (s.size() > 2 && s.compare(0, 2, "dd") == 0) {
            if (auto i = var_index(s.substr(2))) {
                VectorField f = VectorField::zero(nv());
                f.comp[static_cast<std::size_t>(*i)] = Polynomial::constant(nv(), 1);
                return f;
            }
        }
        // alias mixing diagnostics: x,y,z vs x0,x1,x2
        auto base = s;
        if (base.size() > 2 && base.compare(0, 2, "dd") == 0)
            base = base.substr(2);
        else if (base.size() > 1 && base[0] == 'd')
            base = base.substr(1);
        if (xyz_ring_ && looks_like_indexed(base))
            fail(t, "mixed variable aliases: ring declared as x y z, got '" + s + "'");
        if (indexed_ring_ && is_xyz_letter(base))
            fail(t, "mixed variable aliases: ring declared with indexed names, got '" + s + "'");
        fail(t, "unknown variable '" + s + "'");
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
    bool xyz_ring_ = false;
    bool indexed_ring_ = false;
};

}  // namespace

ParsedValue parse_expression(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).parse();
}

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    ParsedValue v = parse_expression(text, vars);
    if (auto* p = std::get_if<Polynomial>(&v)) return std::move(*p);
    throw ParseError("expected a scalar polynomial expression", 1, 1);
}

DiffForm parse_form(const std::string& text, const std::vector<std::string>& vars) {
    ParsedValue v = parse_expression(text, vars);
    if (auto* f = std::get_if<DiffForm>(&v)) return std::move(*f);
    if (auto* p = std::get_if<Polynomial>(&v)) return DiffForm::scalar(std::move(*p));
    throw ParseError("expected a differential form, got a vector field", 1, 1);
}

VectorField parse_vector_field(const std::string& text, const std::vector<std::string>& vars) {
    ParsedValue v = parse_expression(text, vars);
    if (auto* x = std::get_if<VectorField>(&v)) return std::move(*x);
    if (auto* p = std::get_if<Polynomial>(&v)) {
        if (p->is_zero()) return VectorField::zero(static_cast<int>(vars.size()));
    }
    throw ParseError("expected a vector field expression", 1, 1);
}

}  // namespace folcalc
