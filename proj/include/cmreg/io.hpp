#pragma once
// Text form of polynomials ("coef*mon +/- ...") and the ideal file format:
//
//   # comment
//   field: Q          (or: field: Fp 101)
//   vars: x y z t
//   order: grevlex    (optional; grevlex is the default, lex accepted)
//   I = y^2*z - x^2*t, z^4 - x*t^3
//
// Parsing and printing round-trip exactly on canonical forms.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmreg/polynomial.hpp"

namespace cmreg {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + msg),
          line(line_),
          col(col_) {}
};

// ---------- printing ----------

inline std::string monomial_to_string(const RingContext& R, const Monomial& m) {
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += R.var_name(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

namespace detail {

template <class K>
struct coeff_io {
    static bool is_negative(const K&) { return false; }
    static std::string abs_string(const RingContext&, const K& c) { return field_ops<K>::to_string(c); }
    static bool abs_is_one(const RingContext&, const K& c) { return field_ops<K>::is_one(c); }
};

template <>
struct coeff_io<QQ> {
    static bool is_negative(const QQ& c) { return sgn(c) < 0; }
    static std::string abs_string(const RingContext&, const QQ& c) { return QQ(abs(c)).get_str(); }
    static bool abs_is_one(const RingContext&, const QQ& c) { return abs(c) == 1; }
};

}  // namespace detail

template <class K>
std::string poly_to_string(const Polynomial<K>& p) {
    if (p.is_zero()) return "0";
    const RingContext& R = *p.ctx();
    std::string s;
    bool first = true;
    for (const auto& tm : p.terms()) {
        bool neg = detail::coeff_io<K>::is_negative(tm.c);
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        std::string mono = monomial_to_string(R, tm.m);
        if (mono.empty()) {
            s += detail::coeff_io<K>::abs_string(R, tm.c);
        } else if (detail::coeff_io<K>::abs_is_one(R, tm.c)) {
            s += mono;
        } else {
            s += detail::coeff_io<K>::abs_string(R, tm.c) + "*" + mono;
        }
    }
    return s;
}

// ---------- parsing ----------

namespace detail {

struct Token {
    enum class Type { Number, Ident, Op, End };
    Type type;
    std::string text;
    int col;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size()) return {Token::Type::End, "", col};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Token::Type::Number, s_.substr(start, pos_ - start), col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Token::Type::Ident, s_.substr(start, pos_ - start), col};
        }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
            ++pos_;
            return {Token::Type::Op, std::string(1, c), col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
};

template <class K>
K coeff_from_decimal(const RingContext& R, const std::string& num, const std::string& den,
                     int line, int col);

template <>
inline QQ coeff_from_decimal<QQ>(const RingContext&, const std::string& num, const std::string& den,
                                 int line, int col) {
    mpz_class n(num), d(den.empty() ? "1" : den);
    if (d == 0) throw ParseError("zero denominator", line, col);
    QQ q(n, d);
    q.canonicalize();
    return q;
}

template <>
inline Zp coeff_from_decimal<Zp>(const RingContext& R, const std::string& num, const std::string& den,
                                 int line, int col) {
    mpz_class p(R.characteristic());
    mpz_class n(num);
    mpz_class nm = n % p;
    Zp a{nm.get_si()};
    if (den.empty()) return a;
    mpz_class d(den);
    mpz_class dm = d % p;
    if (dm == 0) throw ParseError("denominator vanishes in the coefficient field", line, col);
    return field_ops<Zp>::div(R, a, Zp{dm.get_si()});
}

}  // namespace detail

template <class K>
Polynomial<K> parse_polynomial(const RingPtr& ctx, const MonomialOrder& ord, const std::string& text,
                               int line = 1) {
    using F = field_ops<K>;
    detail::Lexer lex(text, line);
    detail::Token tok = lex.next();
    std::vector<Term<K>> terms;

    bool expect_term = true;
    bool negate = false;
    while (true) {
        if (tok.type == detail::Token::Type::End) {
            if (expect_term) throw ParseError("expected a term", line, tok.col);
            break;
        }
        if (!expect_term) {
            if (tok.type != detail::Token::Type::Op || (tok.text != "+" && tok.text != "-"))
                throw ParseError("expected '+' or '-' between terms", line, tok.col);
            negate = (tok.text == "-");
            expect_term = true;
            tok = lex.next();
            continue;
        }
        // Leading sign(s) on a term.
        while (tok.type == detail::Token::Type::Op && (tok.text == "+" || tok.text == "-")) {
            if (tok.text == "-") negate = !negate;
            tok = lex.next();
        }
        // One term: factors joined by '*'.
        K coeff = F::one(*ctx);
        Monomial mono = Monomial::one(ctx->nvars());
        bool saw_factor = false;
        while (true) {
            if (tok.type == detail::Token::Type::Number) {
                std::string num = tok.text, den;
                int ncol = tok.col;
                tok = lex.next();
                if (tok.type == detail::Token::Type::Op && tok.text == "/") {
                    tok = lex.next();
                    if (tok.type != detail::Token::Type::Number)
                        throw ParseError("expected denominator digits", line, tok.col);
                    den = tok.text;
                    tok = lex.next();
                }
                coeff = F::mul(*ctx, coeff, detail::coeff_from_decimal<K>(*ctx, num, den, line, ncol));
                saw_factor = true;
            } else if (tok.type == detail::Token::Type::Ident) {
                int vi = ctx->index_of(tok.text);
                if (vi < 0) throw ParseError("unknown variable '" + tok.text + "'", line, tok.col);
                unsigned e = 1;
                tok = lex.next();
                if (tok.type == detail::Token::Type::Op && tok.text == "^") {
                    tok = lex.next();
                    if (tok.type != detail::Token::Type::Number)
                        throw ParseError("expected exponent digits", line, tok.col);
                    unsigned long ee = std::stoul(tok.text);
                    if (ee > 0xffffu) throw ParseError("exponent too large", line, tok.col);
                    e = static_cast<unsigned>(ee);
                    tok = lex.next();
                }
                mono.set(vi, mono[vi] + e);
                saw_factor = true;
            } else {
                throw ParseError("expected a coefficient or variable", line, tok.col);
            }
            if (tok.type == detail::Token::Type::Op && tok.text == "*") {
                tok = lex.next();
                continue;
            }
            break;
        }
        if (!saw_factor) throw ParseError("empty term", line, tok.col);
        if (negate) coeff = F::neg(*ctx, coeff);
        terms.push_back({mono, coeff});
        negate = false;
        expect_term = false;
    }
    return Polynomial<K>::from_terms(ctx, ord, std::move(terms));
}

// ---------- ideal files ----------

struct IdealFileEntry {
    std::string name;
    std::vector<std::string> polys;  // untyped text, parsed once the field is known
    int line = 0;
};

struct IdealFileText {
    long characteristic = 0;
    std::vector<std::string> vars;
    std::string order_name = "grevlex";
    std::vector<IdealFileEntry> entries;

    const IdealFileEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

inline MonomialOrder order_from_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "lex") return MonomialOrder::lex();
    throw std::invalid_argument("unknown order '" + name + "' (expected grevlex or lex)");
}

inline IdealFileText read_ideal_file_text(const std::string& content) {
    IdealFileText out;
    bool saw_field = false, saw_vars = false;
    std::istringstream in(content);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string lineText = raw;
        auto hash = lineText.find('#');
        if (hash != std::string::npos) lineText.erase(hash);
        // trim
        auto b = lineText.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = lineText.find_last_not_of(" \t\r");
        lineText = lineText.substr(b, e - b + 1);

        auto starts_with = [&](const char* kw) {
            return lineText.rfind(kw, 0) == 0;
        };
        if (starts_with("field:")) {
            std::istringstream ls(lineText.substr(6));
            std::string f;
            ls >> f;
            if (f == "Q") {
                out.characteristic = 0;
            } else if (f == "Fp") {
                long p = 0;
                if (!(ls >> p)) throw ParseError("expected a prime after 'Fp'", lineno, 7);
                out.characteristic = p;
            } else {
                throw ParseError("field must be 'Q' or 'Fp <prime>'", lineno, 8);
            }
            std::string rest;
            if (ls >> rest) throw ParseError("trailing text after field", lineno, 1);
            saw_field = true;
        } else if (starts_with("vars:")) {
            std::istringstream ls(lineText.substr(5));
            std::string v;
            while (ls >> v) out.vars.push_back(v);
            if (out.vars.empty()) throw ParseError("no variables listed", lineno, 6);
            saw_vars = true;
        } else if (starts_with("order:")) {
            std::istringstream ls(lineText.substr(6));
            std::string o;
            ls >> o;
            if (o != "grevlex" && o != "lex")
                throw ParseError("order must be grevlex or lex", lineno, 8);
            out.order_name = o;
        } else {
            auto eq = lineText.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected 'field:', 'vars:', 'order:' or '<name> = polys'",
                                 lineno, 1);
            std::string name = lineText.substr(0, eq);
            auto nb = name.find_first_not_of(" \t");
            auto ne = name.find_last_not_of(" \t");
            if (nb == std::string::npos) throw ParseError("empty ideal name", lineno, 1);
            name = name.substr(nb, ne - nb + 1);
            for (char c : name)
                if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                    throw ParseError("ideal name must be an identifier", lineno, 1);
            IdealFileEntry entry;
            entry.name = name;
            entry.line = lineno;
            std::string rhs = lineText.substr(eq + 1);
            std::string piece;
            std::istringstream rs(rhs);
            while (std::getline(rs, piece, ',')) {
                auto pb = piece.find_first_not_of(" \t");
                if (pb == std::string::npos)
                    throw ParseError("empty polynomial in list", lineno, static_cast<int>(eq) + 2);
                auto pe = piece.find_last_not_of(" \t");
                entry.polys.push_back(piece.substr(pb, pe - pb + 1));
            }
            if (entry.polys.empty())
                throw ParseError("ideal needs at least one polynomial", lineno, static_cast<int>(eq) + 2);
            out.entries.push_back(std::move(entry));
        }
    }
    if (!saw_field) throw ParseError("missing 'field:' line", lineno ? lineno : 1, 1);
    if (!saw_vars) throw ParseError("missing 'vars:' line", lineno ? lineno : 1, 1);
    return out;
}

inline std::string write_ideal_file_text(const IdealFileText& data) {
    std::string s;
    if (data.characteristic == 0)
        s += "field: Q\n";
    else
        s += "field: Fp " + std::to_string(data.characteristic) + "\n";
    s += "vars:";
    for (const auto& v : data.vars) s += " " + v;
    s += "\n";
    s += "order: " + data.order_name + "\n";
    for (const auto& e : data.entries) {
        s += e.name + " =";
        bool first = true;
        for (const auto& p : e.polys) {
            s += first ? " " : ", ";
            s += p;
            first = false;
        }
        s += "\n";
    }
    return s;
}

// ---------- display scaling ----------

// Rescale a polynomial for display.  Over Q: clear denominators and divide by
// the integer content so the coefficients are coprime integers with a positive
// leading coefficient (e.g. the monic y^2 - 1/2 displays as 2*y^2 - 1).  Over
// a finite field the polynomial is returned unchanged.
template <class K>
Polynomial<K> primitive_rescale(const Polynomial<K>& p) {
    return p;
}

template <>
inline Polynomial<QQ> primitive_rescale<QQ>(const Polynomial<QQ>& p) {
    if (p.is_zero()) return p;
    mpz_class lcm_den = 1, gcd_num = 0;
    for (const auto& tm : p.terms()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), tm.c.get_den().get_mpz_t());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), tm.c.get_num().get_mpz_t());
    }
    QQ scale(lcm_den, gcd_num);
    scale.canonicalize();
    if (sgn(p.leading_coefficient()) < 0) scale = -scale;
    return p.scaled(scale);
}

// "{g1, g2, ...}" with each generator in display scaling, ascending by
// leading monomial (so e.g. the basis of (x^2 + y^2 - 1, x - y) prints as
// "{x - y, 2*y^2 - 1}").
template <class K>
std::string basis_to_string(std::vector<Polynomial<K>> gens) {
    std::stable_sort(gens.begin(), gens.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
        if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
        return a.order().cmp(a.leading_term().m, b.leading_term().m) < 0;
    });
    std::string s = "{";
    bool first = true;
    for (const auto& g : gens) {
        if (!first) s += ", ";
        s += poly_to_string(primitive_rescale(g));
        first = false;
    }
    return s + "}";
}

}  // namespace cmreg
