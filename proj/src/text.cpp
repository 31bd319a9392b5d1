#include "orekit/text.hpp"

#include <algorithm>
#include <cctype>

namespace orekit::text {

SyntaxError::SyntaxError(long line, long column, const std::string& message, std::vector<std::string> expected)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column), expected_(std::move(expected))
{
}

namespace {

struct Token {
    enum class Kind { number, x, d, t, big_o, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind = Kind::end;
    Integer value;
    int index = 0;
    long line = 1;
    long column = 1;
};

std::string describe(const Token& t)
{
    switch (t.kind) {
    case Token::Kind::number: return "number " + t.value.get_str();
    case Token::Kind::x: return "'x'";
    case Token::Kind::d: return "'d'";
    case Token::Kind::t: return "'t'";
    case Token::Kind::big_o: return "'O'";
    case Token::Kind::plus: return "'+'";
    case Token::Kind::minus: return "'-'";
    case Token::Kind::star: return "'*'";
    case Token::Kind::slash: return "'/'";
    case Token::Kind::caret: return "'^'";
    case Token::Kind::lparen: return "'('";
    case Token::Kind::rparen: return "')'";
    case Token::Kind::end: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    long line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        std::size_t len = 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i + len < s.size() && std::isdigit(static_cast<unsigned char>(s[i + len]))) ++len;
            t.kind = Token::Kind::number;
            t.value = Integer(std::string(s.substr(i, len)));
        } else if (c == 'x' || c == 'd' || c == 't' || c == 'O') {
            t.kind = c == 'x' ? Token::Kind::x : c == 'd' ? Token::Kind::d : c == 't' ? Token::Kind::t : Token::Kind::big_o;
            if (c == 'x' || c == 'd') {
                while (i + len < s.size() && std::isdigit(static_cast<unsigned char>(s[i + len]))) ++len;
                if (len > 1) {
                    if (len > 6) throw SyntaxError(line, col, "variable index too large");
                    t.index = std::stoi(std::string(s.substr(i + 1, len - 1)));
                    if (t.index == 0) throw SyntaxError(line, col, "variable indices start at 1");
                }
            }
        } else {
            switch (c) {
            case '+': t.kind = Token::Kind::plus; break;
            case '-': t.kind = Token::Kind::minus; break;
            case '*': t.kind = Token::Kind::star; break;
            case '/': t.kind = Token::Kind::slash; break;
            case '^': t.kind = Token::Kind::caret; break;
            case '(': t.kind = Token::Kind::lparen; break;
            case ')': t.kind = Token::Kind::rparen; break;
            default:
                throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
            }
        }
        out.push_back(t);
        advance(len);
    }
    Token e;
    e.kind = Token::Kind::end;
    e.line = line;
    e.column = col;
    out.push_back(e);
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    Node run()
    {
        Node n = expr();
        if (peek().kind != Token::Kind::end) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
        return n;
    }

private:
    const Token& peek() const { return t_[pos_]; }
    const Token& take() { return t_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        std::string msg = "expected ";
        if (expected.size() > 1) msg += "one of ";
        for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
        msg += ", found " + describe(peek());
        throw SyntaxError(peek().line, peek().column, msg, std::move(expected));
    }

    static Node make(Node::Kind k, const Token& at)
    {
        Node n;
        n.kind = k;
        n.line = at.line;
        n.column = at.column;
        return n;
    }

    Node expr()
    {
        Node left = term();
        while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
            const Token& op = take();
            Node n = make(op.kind == Token::Kind::plus ? Node::Kind::add : Node::Kind::sub, op);
            n.kids.push_back(std::move(left));
            n.kids.push_back(term());
            left = std::move(n);
        }
        return left;
    }

    Node term()
    {
        Node left = unary();
        while (peek().kind == Token::Kind::star || peek().kind == Token::Kind::slash) {
            const Token& op = take();
            Node n = make(op.kind == Token::Kind::star ? Node::Kind::mul : Node::Kind::div, op);
            n.kids.push_back(std::move(left));
            n.kids.push_back(unary());
            left = std::move(n);
        }
        return left;
    }

    Node unary()
    {
        if (peek().kind == Token::Kind::minus) {
            Node n = make(Node::Kind::neg, take());
            n.kids.push_back(unary());
            return n;
        }
        return power();
    }

    Integer signed_int()
    {
        bool negative = false;
        if (peek().kind == Token::Kind::minus) {
            take();
            negative = true;
        }
        if (peek().kind != Token::Kind::number) fail(negative ? std::vector<std::string>{"number"} : std::vector<std::string>{"number", "'-'"});
        Integer v = take().value;
        return negative ? Integer(-v) : v;
    }

    Node power()
    {
        Node b = base();
        if (peek().kind != Token::Kind::caret) return b;
        Node n = make(Node::Kind::pow, take());
        n.value = signed_int();
        n.kids.push_back(std::move(b));
        return n;
    }

    Node base()
    {
        const Token& tok = peek();
        switch (tok.kind) {
        case Token::Kind::number: {
            Node n = make(Node::Kind::number, take());
            n.value = tok.value;
            return n;
        }
        case Token::Kind::x:
        case Token::Kind::d:
        case Token::Kind::t: {
            const Token& v = take();
            Node n = make(v.kind == Token::Kind::x ? Node::Kind::x : v.kind == Token::Kind::d ? Node::Kind::d : Node::Kind::t, v);
            n.index = v.index;
            return n;
        }
        case Token::Kind::lparen: {
            take();
            Node n = expr();
            if (peek().kind != Token::Kind::rparen) fail({"')'", "'+'", "'-'", "'*'", "'/'"});
            take();
            return n;
        }
        case Token::Kind::big_o: {
            Node n = make(Node::Kind::big_o, take());
            if (peek().kind != Token::Kind::lparen) fail({"'('"});
            take();
            if (peek().kind != Token::Kind::x) fail({"'x'"});
            n.index = take().index;
            if (peek().kind != Token::Kind::caret) fail({"'^'"});
            take();
            n.value = signed_int();  // Laurent precision may be negative
            if (peek().kind != Token::Kind::rparen) fail({"')'"});
            take();
            return n;
        }
        default:
            fail({"number", "'x'", "'d'", "'('", "'O'", "'-'"});
        }
    }

    std::vector<Token> t_;
    std::size_t pos_ = 0;
};

[[noreturn]] void semantic(const Node& at, const std::string& msg)
{
    throw SyntaxError(at.line, at.column, msg);
}

long small_int(const Node& at, const Integer& v)
{
    if (!v.fits_slong_p() || abs(v) > 100000) semantic(at, "exponent out of range");
    return v.get_si();
}

// Evaluation is generic over a small ring adaptor.
template <class R>
typename R::E eval(const Node& n, R& ring)
{
    using E = typename R::E;
    switch (n.kind) {
    case Node::Kind::number: return ring.number(n.value);
    case Node::Kind::x: return ring.x(n);
    case Node::Kind::d: return ring.d(n);
    case Node::Kind::t: return ring.t(n);
    case Node::Kind::big_o: return ring.big_o(n, small_int(n, n.value));
    case Node::Kind::neg: return -eval(n.kids[0], ring);
    case Node::Kind::add: return eval(n.kids[0], ring) + eval(n.kids[1], ring);
    case Node::Kind::sub: return eval(n.kids[0], ring) - eval(n.kids[1], ring);
    case Node::Kind::mul: {
        E a = eval(n.kids[0], ring);
        return a * eval(n.kids[1], ring);
    }
    case Node::Kind::div: {
        E a = eval(n.kids[0], ring);
        return ring.divide(n, a, eval(n.kids[1], ring));
    }
    case Node::Kind::pow: {
        const long e = small_int(n, n.value);
        E b = eval(n.kids[0], ring);
        if (e < 0) {
            b = ring.invert(n, b);
        }
        E r = ring.number(Integer(1));
        for (long i = 0; i < std::labs(e); ++i) r = r * b;
        return r;
    }
    }
    semantic(n, "unknown node");
}

template <CoefficientField F>
struct SRing {
    using E = OrePoly<F>;
    using Scalar = LaurentSeries<F>;
    Precision working;

    E number(const Integer& v) { return E::constant(F(Rational(v))); }
    E x(const Node& n)
    {
        if (n.index > 1) semantic(n, "ring S has the single variable x");
        return E::x();
    }
    E d(const Node& n)
    {
        if (n.index > 1) semantic(n, "ring S has the single derivation d");
        return E::d();
    }
    E t(const Node& n)
    {
        if constexpr (std::same_as<F, RationalFunction>) {
            return E::constant(RationalFunction::t());
        } else {
            semantic(n, "'t' needs the coefficient field Q(t)");
        }
    }
    E big_o(const Node& n, long order)
    {
        if (n.index > 1) semantic(n, "ring S has the single variable x");
        return E(Scalar::zero(order));
    }
    static bool constant_of(const E& b, F& out)
    {
        if (b.size() != 1 || !b.is_exact()) return false;
        const Scalar& s = b.coeff(0);
        if (s.is_zero() || !s.is_monomial() || s.valuation() != 0) return false;
        out = s.coefficient(0);
        return true;
    }
    E divide(const Node& n, const E& a, const E& b)
    {
        F c(0L);
        if (!constant_of(b, c)) semantic(n, "division is only by a nonzero constant");
        return a.scaled(F(F(1L) / c));
    }
    E invert(const Node& n, const E& b)
    {
        if (b.size() > 1) semantic(n, "negative power of an operator");
        if (b.is_zero()) semantic(n, "negative power of zero");
        return E(b.coeff(0).inverse(working));
    }
};

// Upper bound on the precision a D_n product can lose: d^a q needs the
// derivatives of q, each of which costs one degree.
struct Loss {
    long order = 0;
    long loss = 0;
    long max_big_o = 0;
    bool has_big_o = false;
};

Loss loss_of(const Node& n)
{
    switch (n.kind) {
    case Node::Kind::d: return {1, 0, 0, false};
    case Node::Kind::big_o: return {0, 0, small_int(n, n.value), true};
    case Node::Kind::number:
    case Node::Kind::x:
    case Node::Kind::t: return {};
    case Node::Kind::neg: return loss_of(n.kids[0]);
    default: break;
    }
    if (n.kind == Node::Kind::pow) {
        const Loss b = loss_of(n.kids[0]);
        const long e = std::labs(small_int(n, n.value));
        Loss r{0, 0, b.max_big_o, b.has_big_o};
        for (long i = 0; i < e; ++i) {
            r.loss += b.loss + r.order;
            r.order += b.order;
        }
        r.loss = std::max(r.loss, b.loss);
        return r;
    }
    const Loss a = loss_of(n.kids[0]);
    const Loss b = loss_of(n.kids[1]);
    Loss r;
    r.max_big_o = std::max(a.max_big_o, b.max_big_o);
    r.has_big_o = a.has_big_o || b.has_big_o;
    if (n.kind == Node::Kind::mul) {
        r.order = a.order + b.order;
        r.loss = a.loss + b.loss + a.order;
    } else {
        r.order = std::max(a.order, b.order);
        r.loss = std::max(a.loss, b.loss);
    }
    return r;
}

struct DRing {
    using E = DiffOperator;
    int n;
    long prec;

    void check_index(const Node& at) const
    {
        if (at.index == 0 && n != 1) semantic(at, "write x1..x" + std::to_string(n) + " / d1..d" + std::to_string(n));
        if (at.index > n) semantic(at, "variable index exceeds the ring dimension " + std::to_string(n));
    }
    static int idx(const Node& at) { return std::max(at.index, 1) - 1; }

    E number(const Integer& v) { return E::from_series(PowerSeries::constant(n, Rational(v), prec)); }
    E x(const Node& at)
    {
        check_index(at);
        return E::from_series(PowerSeries::variable(n, idx(at), prec));
    }
    E d(const Node& at)
    {
        check_index(at);
        return E::d(n, idx(at), prec);
    }
    E t(const Node& at) { semantic(at, "'t' is not a symbol of D_n"); }
    E big_o(const Node& at, long order)
    {
        if (at.index > n) semantic(at, "variable index exceeds the ring dimension " + std::to_string(n));
        if (order < 0) semantic(at, "precision must be non-negative");
        return E(n, order);
    }
    static bool scalar_of(const E& b, PowerSeries& out)
    {
        if (b.order() > 0) return false;
        out = b.coefficient(Exponent(static_cast<std::size_t>(b.nvars()), 0));
        return true;
    }
    E divide(const Node& at, const E& a, const E& b)
    {
        PowerSeries s;
        if (!scalar_of(b, s) || s.terms().size() != 1 || total_degree(s.terms().begin()->first) != 0)
            semantic(at, "division is only by a nonzero constant");
        return a * E::from_series(PowerSeries::constant(n, 1 / s.terms().begin()->second, prec));
    }
    E invert(const Node& at, const E& b)
    {
        PowerSeries s;
        if (!scalar_of(b, s)) semantic(at, "negative power of an operator");
        if (sgn(s.coefficient(Exponent(static_cast<std::size_t>(n), 0))) == 0)
            semantic(at, "negative power of a non-unit power series");
        return E::from_series(s.inverse());
    }
};

// Coefficient, sign-split, as printed before a monomial.
struct Coefficient {
    bool negative = false;
    std::string magnitude;  // empty for 1
};

Coefficient split(const Rational& c)
{
    Coefficient out;
    out.negative = sgn(c) < 0;
    const Rational m = abs(c);
    if (m != 1) out.magnitude = to_string(m);
    return out;
}

Coefficient split(const RationalFunction& c)
{
    if (c.denominator().degree() == 0 && c.numerator().degree() <= 0) {
        const Rational q = c.numerator().is_zero() ? Rational(0) : c.numerator().coeffs()[0];
        return split(q);
    }
    Coefficient out;
    std::string s = c.to_string();
    if (s.find_first_of(" /") == std::string::npos) {
        out.negative = s.front() == '-';
        out.magnitude = out.negative ? s.substr(1) : s;
    } else {
        out.magnitude = "(" + s + ")";
    }
    return out;
}

// Appends a signed term "c*m" to `out`; `monomial` may be empty.
void append_term(std::string& out, const Coefficient& c, const std::string& monomial)
{
    if (out.empty())
        out += c.negative ? "-" : "";
    else
        out += c.negative ? " - " : " + ";
    if (c.magnitude.empty())
        out += monomial.empty() ? "1" : monomial;
    else
        out += monomial.empty() ? c.magnitude : c.magnitude + "*" + monomial;
}

std::string power_of(const std::string& sym, long e)
{
    if (e == 0) return "";
    if (e == 1) return sym;
    return sym + "^" + std::to_string(e);
}

std::string join_factors(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "*";
        out += p;
    }
    return out;
}

template <CoefficientField F>
void append_series(std::string& out, const LaurentSeries<F>& s, const std::string& suffix)
{
    if (s.is_zero()) return;
    for (long e = s.valuation(); e < s.stored_end(); ++e) {
        const F c = s.coefficient(e);
        if (orekit_scalar_zero(c)) continue;
        append_term(out, split(c), join_factors({power_of("x", e), suffix}));
    }
}

} // namespace

Node parse_tree(std::string_view text)
{
    return Parser(tokenize(text)).run();
}

template <CoefficientField F>
OrePoly<F> parse_ore(std::string_view text, Precision working)
{
    const Node n = parse_tree(text);
    SRing<F> ring{working};
    return eval(n, ring);
}

DiffOperator parse_operator(std::string_view text, int nvars, long precision)
{
    if (nvars < 1) throw DomainError("D_n needs n >= 1");
    const Node n = parse_tree(text);
    const Loss l = loss_of(n);
    DRing ring{nvars, std::max(precision, l.max_big_o) + l.loss};
    DiffOperator out = eval(n, ring);
    return l.has_big_o ? out : out.truncated(precision);
}

PowerSeries parse_series(std::string_view text, int nvars, long precision)
{
    const DiffOperator a = parse_operator(text, nvars, precision);
    if (a.order() > 0) throw DomainError("expected a power series, found an operator of order " + std::to_string(a.order()));
    PowerSeries s = a.coefficient(Exponent(static_cast<std::size_t>(nvars), 0));
    return s.truncated(a.precision());
}

IntegerOrePoly parse_integer_ore(std::string_view text)
{
    const OrePoly<Rational> a = parse_ore<Rational>(text);
    if (!a.is_exact()) throw DomainError("f must be exact (no O-terms)");
    IntegerOrePoly out;
    for (long b = 0; b < a.size(); ++b) {
        const LaurentSeries<Rational>& s = a.coeffs()[static_cast<std::size_t>(b)];
        if (s.is_zero()) continue;
        for (long e = s.valuation(); e < s.stored_end(); ++e) {
            const Rational c = s.coefficient(e);
            if (sgn(c) == 0) continue;
            if (e < 0) throw DomainError("f must have non-negative powers of x");
            if (c.get_den() != 1) throw DomainError("f must have integer coefficients");
            out.add_term(c.get_num(), e, b);
        }
    }
    return out;
}

template <CoefficientField F>
std::string print(const LaurentSeries<F>& s)
{
    std::string out;
    append_series(out, s, "");
    if (!s.is_exact()) out += (out.empty() ? "" : " + ") + std::string("O(x^") + std::to_string(s.abs_precision()) + ")";
    return out.empty() ? "0" : out;
}

template <CoefficientField F>
std::string print(const OrePoly<F>& a)
{
    std::string out;
    for (long b = a.size() - 1; b >= 0; --b) {
        const LaurentSeries<F>& s = a.coeffs()[static_cast<std::size_t>(b)];
        if (s.is_exact_zero()) continue;
        const std::string dpart = power_of("d", b);
        if (b == 0 || s.is_exact()) {
            append_series(out, s, dpart);
            if (!s.is_exact()) {
                const std::string o = "O(x^" + std::to_string(s.abs_precision()) + ")";
                out += (out.empty() ? "" : " + ") + o;
            }
        } else {
            const std::string group = s.is_zero() ? "O(x^" + std::to_string(s.abs_precision()) + ")" : "(" + print(s) + ")";
            out += (out.empty() ? "" : " + ") + group + "*" + dpart;
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

// Ascending total degree, then x1 before x2 before ...
std::vector<std::pair<Exponent, Rational>> ordered_terms(const PowerSeries& p)
{
    std::vector<std::pair<Exponent, Rational>> v(p.terms().begin(), p.terms().end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        const int da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da < db;
        return a.first > b.first;
    });
    return v;
}

std::string monomial(const std::string& sym, const Exponent& e)
{
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < e.size(); ++i) parts.push_back(power_of(sym + std::to_string(i + 1), e[i]));
    return join_factors(parts);
}

} // namespace

std::string print(const DiffOperator& a, long default_precision)
{
    std::string out;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const std::string dpart = monomial("d", it->first);
        for (const auto& [e, c] : ordered_terms(it->second)) append_term(out, split(c), join_factors({monomial("x", e), dpart}));
    }
    if (a.precision() != default_precision)
        out += (out.empty() ? "" : " + ") + std::string("O(x^") + std::to_string(a.precision()) + ")";
    return out.empty() ? "0" : out;
}

std::string print(const PowerSeries& p, long default_precision)
{
    return print(DiffOperator::from_series(p), default_precision);
}

std::string print(const IntegerOrePoly& f)
{
    return print(f.to_ore<Rational>());
}

template OrePoly<Rational> parse_ore<Rational>(std::string_view, Precision);
template OrePoly<RationalFunction> parse_ore<RationalFunction>(std::string_view, Precision);
template std::string print<Rational>(const OrePoly<Rational>&);
template std::string print<RationalFunction>(const OrePoly<RationalFunction>&);
template std::string print<Rational>(const LaurentSeries<Rational>&);
template std::string print<RationalFunction>(const LaurentSeries<RationalFunction>&);

} // namespace orekit::text
