#include "powerlog/parser.hpp"

#include <cctype>
#include <map>
#include <memory>

namespace powerlog {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string &s) : s_(s) { advance(); }
    const Token &peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            if (s_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_ = {Tok::End, "", line_, col_};
            return;
        }
        char c = s_[pos_];
        auto single = [&](Tok k) {
            tok_ = {k, std::string(1, c), line_, col_};
            ++pos_;
            ++col_;
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
                ++col_;
            }
            tok_ = {Tok::Int, s_.substr(start, pos_ - start), tok_.line, tok_.col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])))) {
                ++pos_;
                ++col_;
            }
            tok_ = {Tok::Ident, s_.substr(start, pos_ - start), tok_.line, tok_.col};
            return;
        }
        switch (c) {
        case '+': single(Tok::Plus); return;
        case '-': single(Tok::Minus); return;
        case '*': single(Tok::Star); return;
        case '/': single(Tok::Slash); return;
        case '^': single(Tok::Caret); return;
        case '(': single(Tok::LParen); return;
        case ')': single(Tok::RParen); return;
        default:
            throw parse_error(std::string("unexpected character '") + c + "'", line_, col_);
        }
    }

    const std::string &s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Tok::End, "", 1, 1};
};

/* Small AST; both evaluators walk it. */
struct Node {
    enum class Kind { Int, Var, Add, Sub, Mul, Div, Pow, Neg } kind;
    Integer value;           // Int
    std::string var;         // Var
    unsigned exponent = 0;   // Pow
    std::unique_ptr<Node> a, b;
    int line = 0, col = 0;
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
  public:
    explicit Parser(const std::string &s) : lex_(s) {}

    NodePtr parse() {
        NodePtr e = expr();
        const Token &t = lex_.peek();
        if (t.kind != Tok::End)
            throw parse_error("unexpected token '" + t.text + "'", t.line, t.col);
        return e;
    }

  private:
    NodePtr make(Node::Kind k, const Token &at) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->line = at.line;
        n->col = at.col;
        return n;
    }

    NodePtr expr() {
        NodePtr left = term();
        for (;;) {
            const Token &t = lex_.peek();
            if (t.kind != Tok::Plus && t.kind != Tok::Minus)
                return left;
            Token op = lex_.next();
            NodePtr right = term();
            NodePtr n = make(op.kind == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub, op);
            n->a = std::move(left);
            n->b = std::move(right);
            left = std::move(n);
        }
    }

    NodePtr term() {
        NodePtr left = unary();
        for (;;) {
            const Token &t = lex_.peek();
            if (t.kind != Tok::Star && t.kind != Tok::Slash)
                return left;
            Token op = lex_.next();
            NodePtr right = unary();
            NodePtr n = make(op.kind == Tok::Star ? Node::Kind::Mul : Node::Kind::Div, op);
            n->a = std::move(left);
            n->b = std::move(right);
            left = std::move(n);
        }
    }

    NodePtr unary() {
        const Token &t = lex_.peek();
        if (t.kind == Tok::Minus) {
            Token op = lex_.next();
            NodePtr n = make(Node::Kind::Neg, op);
            n->a = unary();
            return n;
        }
        if (t.kind == Tok::Plus) {
            lex_.next();
            return unary();
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        while (lex_.peek().kind == Tok::Caret) {
            Token op = lex_.next();
            const Token &e = lex_.peek();
            if (e.kind != Tok::Int)
                throw parse_error("exponent must be a nonnegative integer", e.line, e.col);
            Token et = lex_.next();
            unsigned long exp = std::stoul(et.text);
            NodePtr n = make(Node::Kind::Pow, op);
            n->a = std::move(base);
            n->exponent = static_cast<unsigned>(exp);
            base = std::move(n);
        }
        return base;
    }

    NodePtr atom() {
        const Token &t = lex_.peek();
        if (t.kind == Tok::Int) {
            Token it = lex_.next();
            NodePtr n = make(Node::Kind::Int, it);
            n->value = Integer(it.text);
            return n;
        }
        if (t.kind == Tok::Ident) {
            Token id = lex_.next();
            NodePtr n = make(Node::Kind::Var, id);
            n->var = id.text;
            return n;
        }
        if (t.kind == Tok::LParen) {
            lex_.next();
            NodePtr inner = expr();
            const Token &close = lex_.peek();
            if (close.kind != Tok::RParen)
                throw parse_error("expected ')'", close.line, close.col);
            lex_.next();
            return inner;
        }
        throw parse_error(t.kind == Tok::End ? "unexpected end of input"
                                             : "unexpected token '" + t.text + "'",
                          t.line, t.col);
    }

    Lexer lex_;
};

// ---- RatFunc evaluation (variables: t, i) ----

RatFunc eval_rat(const Node *n) {
    switch (n->kind) {
    case Node::Kind::Int:
        return RatFunc(GaussianRational(Rational(n->value)));
    case Node::Kind::Var:
        if (n->var == "t")
            return RatFunc(Poly::variable());
        if (n->var == "i")
            return RatFunc(GaussianRational::unit_i());
        throw parse_error("unknown variable '" + n->var + "' in coefficient expression",
                          n->line, n->col);
    case Node::Kind::Add:
        return eval_rat(n->a.get()) + eval_rat(n->b.get());
    case Node::Kind::Sub:
        return eval_rat(n->a.get()) - eval_rat(n->b.get());
    case Node::Kind::Mul:
        return eval_rat(n->a.get()) * eval_rat(n->b.get());
    case Node::Kind::Div: {
        RatFunc d = eval_rat(n->b.get());
        if (d.is_zero())
            throw parse_error("division by zero", n->line, n->col);
        return eval_rat(n->a.get()) / d;
    }
    case Node::Kind::Pow:
        return eval_rat(n->a.get()).pow(n->exponent);
    case Node::Kind::Neg:
        return -eval_rat(n->a.get());
    }
    throw error("unreachable");
}

// ---- ODE-polynomial evaluation (variables: x, y0..y99, i) ----

struct XYPoly {
    // key: (mu, y-exponents); the exponent vector is kept at a shared
    // length and trimmed when building the final ODE
    std::map<std::pair<int, std::vector<int>>, GaussianRational> terms;

    static XYPoly constant(const GaussianRational &c) {
        XYPoly p;
        if (!c.is_zero())
            p.terms[{0, {}}] = c;
        return p;
    }
    bool is_constant(GaussianRational *out = nullptr) const {
        if (terms.empty()) {
            if (out)
                *out = GaussianRational();
            return true;
        }
        if (terms.size() == 1) {
            const auto &[key, c] = *terms.begin();
            bool pure = key.first == 0;
            for (int e : key.second)
                pure = pure && e == 0;
            if (pure && out)
                *out = c;
            return pure;
        }
        return false;
    }
};

std::vector<int> merge_q(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> q(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        q[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        q[i] += b[i];
    while (!q.empty() && q.back() == 0)
        q.pop_back();
    return q;
}

XYPoly xy_add(const XYPoly &a, const XYPoly &b, int sign) {
    XYPoly out = a;
    for (const auto &[key, c] : b.terms) {
        std::vector<int> q = key.second;
        while (!q.empty() && q.back() == 0)
            q.pop_back();
        auto k = std::make_pair(key.first, q);
        auto [it, fresh] = out.terms.emplace(k, sign > 0 ? c : -c);
        if (!fresh) {
            it->second += (sign > 0 ? c : -c);
            if (it->second.is_zero())
                out.terms.erase(it);
        }
    }
    return out;
}

XYPoly xy_mul(const XYPoly &a, const XYPoly &b) {
    XYPoly out;
    for (const auto &[ka, ca] : a.terms)
        for (const auto &[kb, cb] : b.terms) {
            auto key = std::make_pair(ka.first + kb.first, merge_q(ka.second, kb.second));
            auto [it, fresh] = out.terms.emplace(key, ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second.is_zero())
                    out.terms.erase(it);
            }
        }
    return out;
}

XYPoly eval_xy(const Node *n) {
    switch (n->kind) {
    case Node::Kind::Int:
        return XYPoly::constant(GaussianRational(Rational(n->value)));
    case Node::Kind::Var: {
        if (n->var == "i")
            return XYPoly::constant(GaussianRational::unit_i());
        if (n->var == "x") {
            XYPoly p;
            p.terms[{1, {}}] = GaussianRational(1);
            return p;
        }
        if (n->var.size() >= 2 && n->var[0] == 'y') {
            const std::string idx = n->var.substr(1);
            if (!idx.empty() && idx.size() <= 2 &&
                idx.find_first_not_of("0123456789") == std::string::npos) {
                int j = std::stoi(idx);
                XYPoly p;
                std::vector<int> q(static_cast<size_t>(j) + 1, 0);
                q[static_cast<size_t>(j)] = 1;
                p.terms[{0, q}] = GaussianRational(1);
                return p;
            }
        }
        throw parse_error("unknown variable '" + n->var + "' in equation", n->line, n->col);
    }
    case Node::Kind::Add:
        return xy_add(eval_xy(n->a.get()), eval_xy(n->b.get()), +1);
    case Node::Kind::Sub:
        return xy_add(eval_xy(n->a.get()), eval_xy(n->b.get()), -1);
    case Node::Kind::Mul:
        return xy_mul(eval_xy(n->a.get()), eval_xy(n->b.get()));
    case Node::Kind::Div: {
        XYPoly d = eval_xy(n->b.get());
        GaussianRational c;
        if (!d.is_constant(&c))
            throw parse_error("division by a non-constant in an equation", n->line, n->col);
        if (c.is_zero())
            throw parse_error("division by zero", n->line, n->col);
        XYPoly a = eval_xy(n->a.get());
        XYPoly out;
        GaussianRational inv = c.inverse();
        for (const auto &[key, cc] : a.terms)
            out.terms[key] = cc * inv;
        return out;
    }
    case Node::Kind::Pow: {
        XYPoly base = eval_xy(n->a.get());
        XYPoly out = XYPoly::constant(GaussianRational(1));
        for (unsigned k = 0; k < n->exponent; ++k)
            out = xy_mul(out, base);
        return out;
    }
    case Node::Kind::Neg:
        return xy_add(XYPoly(), eval_xy(n->a.get()), -1);
    }
    throw error("unreachable");
}

} // namespace

RatFunc parse_ratfunc(const std::string &text) {
    Parser p(text);
    NodePtr ast = p.parse();
    return eval_rat(ast.get());
}

AlgebraicODE parse_ode(const std::string &text, int declared_order) {
    Parser p(text);
    NodePtr ast = p.parse();
    XYPoly poly = eval_xy(ast.get());

    int n = 0;
    for (const auto &[key, c] : poly.terms)
        n = std::max(n, static_cast<int>(key.second.size()) - 1);
    if (declared_order >= 0) {
        if (n > declared_order)
            throw parse_error("equation mentions y" + std::to_string(n) +
                                  " above the declared order " + std::to_string(declared_order),
                              1, 1);
        n = declared_order;
    }
    std::vector<OdeMonomial> monos;
    for (const auto &[key, c] : poly.terms)
        monos.push_back({c, key.first, key.second});
    return AlgebraicODE::from_monomials(n, std::move(monos), /*require_unknown=*/true);
}

} // namespace powerlog
