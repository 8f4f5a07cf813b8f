#include "qbraid/parse.hpp"

#include <cctype>
#include <memory>
#include <numeric>

namespace qbraid {

namespace {

struct Node {
    enum Kind { Num, Q, Zeta, Add, Sub, Mul, Div, Neg, Pow } kind;
    Rational value;
    int order = 1;
    long exponent = 0;
    std::unique_ptr<Node> a, b;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    long small_int() {
        std::string d = digits();
        if (d.size() > 9) fail("integer too large");
        return std::stol(d);
    }

    NodePtr expr() {
        NodePtr n = term();
        for (;;) {
            if (eat('+'))
                n = make(Node::Add, std::move(n), term());
            else if (eat('-'))
                n = make(Node::Sub, std::move(n), term());
            else
                return n;
        }
    }

    NodePtr term() {
        NodePtr n = unary();
        for (;;) {
            if (eat('*'))
                n = make(Node::Mul, std::move(n), unary());
            else if (eat('/'))
                n = make(Node::Div, std::move(n), unary());
            else
                return n;
        }
    }

    NodePtr unary() {
        if (eat('-')) return make(Node::Neg, unary());
        if (eat('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr n = primary();
        if (!eat('^')) return n;
        bool paren = eat('(');
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        long e = small_int();
        if (paren && !eat(')')) fail("expected ')'");
        NodePtr p = make(Node::Pow, std::move(n));
        p->exponent = neg ? -e : e;
        return p;
    }

    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (eat('(')) {
            NodePtr n = expr();
            if (!eat(')')) fail("expected ')'");
            return n;
        }
        if (peek_digit()) {
            NodePtr n = make(Node::Num);
            n->value = Rational(mpq_class(mpz_class(digits())));
            return n;
        }
        if (s_.compare(pos_, 4, "zeta") == 0) {
            pos_ += 4;
            bool paren = eat('(');
            long m = small_int();
            if (paren && !eat(')')) fail("expected ')'");
            if (m < 1) fail("zeta order must be positive");
            NodePtr n = make(Node::Zeta);
            n->order = static_cast<int>(m);
            return n;
        }
        if (s_[pos_] == 'q') {
            ++pos_;
            return make(Node::Q);
        }
        if (s_[pos_] == 'i') {
            ++pos_;
            NodePtr n = make(Node::Zeta);
            n->order = 4;
            return n;
        }
        fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

void scan(const Node& n, int& order, bool& symbolic) {
    if (n.kind == Node::Zeta) order = std::lcm(order, n.order);
    if (n.kind == Node::Q) symbolic = true;
    if (n.a) scan(*n.a, order, symbolic);
    if (n.b) scan(*n.b, order, symbolic);
}

Scalar eval(const Node& n, const FieldContext& ctx) {
    switch (n.kind) {
        case Node::Num: return Scalar::from_rational(n.value, ctx);
        case Node::Q: return Scalar::q(ctx);
        case Node::Zeta: return Scalar::zeta(n.order, ctx);
        case Node::Add: return eval(*n.a, ctx) + eval(*n.b, ctx);
        case Node::Sub: return eval(*n.a, ctx) - eval(*n.b, ctx);
        case Node::Mul: return eval(*n.a, ctx) * eval(*n.b, ctx);
        case Node::Div: return eval(*n.a, ctx) / eval(*n.b, ctx);
        case Node::Neg: return -eval(*n.a, ctx);
        case Node::Pow: return eval(*n.a, ctx).pow(n.exponent);
    }
    throw Error("unreachable parse node");
}

}  // namespace

Scalar parse_scalar(const std::string& text, const FieldContext& at_least) {
    NodePtr root = Parser(text).parse();
    int order = at_least.order();
    bool symbolic = at_least.symbolic();
    scan(*root, order, symbolic);
    FieldContext ctx = order == at_least.order() ? FieldContext(at_least.base(), symbolic)
                                                 : FieldContext::make(order, symbolic);
    return eval(*root, ctx);
}

std::vector<Scalar> parse_scalar_list(const std::string& csv, const FieldContext& at_least) {
    std::vector<Scalar> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= csv.size(); ++i) {
        if (i < csv.size() && csv[i] == '(') ++depth;
        if (i < csv.size() && csv[i] == ')') --depth;
        if (i == csv.size() || (csv[i] == ',' && depth == 0)) {
            std::string item = csv.substr(start, i - start);
            try {
                out.push_back(parse_scalar(item, at_least));
            } catch (const ParseError& e) {
                throw ParseError("in list item '" + item + "': " + e.what(), start + e.position());
            }
            start = i + 1;
        }
    }
    return unify(out, at_least);
}

}  // namespace qbraid
