#include "genera/dsl.hpp"

#include "genera/errors.hpp"

#include <cctype>

namespace genera {

ExprPtr VarietyExpr::projective(int n) {
    auto e = std::make_shared<VarietyExpr>();
    e->kind = Kind::Projective;
    e->arg = n;
    return e;
}

ExprPtr VarietyExpr::abelian(int g) {
    auto e = std::make_shared<VarietyExpr>();
    e->kind = Kind::Abelian;
    e->arg = g;
    return e;
}

ExprPtr VarietyExpr::prod(ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<VarietyExpr>();
    e->kind = Kind::Product;
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

ExprPtr VarietyExpr::blowup(ExprPtr inner) {
    auto e = std::make_shared<VarietyExpr>();
    e->kind = Kind::Blowup;
    e->left = std::move(inner);
    return e;
}

bool expr_equal(const VarietyExpr& a, const VarietyExpr& b) {
    if (a.kind != b.kind || a.arg != b.arg) return false;
    if ((a.left == nullptr) != (b.left == nullptr)) return false;
    if (a.left && !expr_equal(*a.left, *b.left)) return false;
    if ((a.right == nullptr) != (b.right == nullptr)) return false;
    if (a.right && !expr_equal(*a.right, *b.right)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        skip_space();
        if (pos_ < src_.size()) {
            error("unexpected trailing input");
        }
        return e;
    }

private:
    [[noreturn]] void error(const std::string& message) const {
        int line = 1;
        int col = 1;
        for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SyntaxError(message, line, col);
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    bool consume(char c) {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) {
            error(std::string("expected '") + c + "'");
        }
    }

    // No term starts with 'x', so any 'x' after a complete term separates a
    // product (whitespace optional).
    bool at_product_separator() {
        skip_space();
        return pos_ < src_.size() && src_[pos_] == 'x';
    }

    int parse_int() {
        skip_space();
        bool negative = false;
        if (pos_ < src_.size() && src_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            error("expected an integer");
        }
        long value = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            value = value * 10 + (src_[pos_] - '0');
            if (value > 1000000) {
                error("integer too large");
            }
            ++pos_;
        }
        return static_cast<int>(negative ? -value : value);
    }

    // 'x' is a valid boundary: it can only be a product separator here.
    bool consume_word(const std::string& word) {
        skip_space();
        if (src_.compare(pos_, word.size(), word) != 0) return false;
        std::size_t end = pos_ + word.size();
        if (end < src_.size() && src_[end] != 'x' &&
            (std::isalnum(static_cast<unsigned char>(src_[end])) ||
             src_[end] == '_')) {
            return false;
        }
        pos_ = end;
        return true;
    }

    ExprPtr parse_expr() {
        ExprPtr acc = parse_term();
        while (at_product_separator()) {
            ++pos_;  // consume 'x'
            acc = VarietyExpr::prod(acc, parse_term());
        }
        return acc;
    }

    ExprPtr parse_term() {
        skip_space();
        if (pos_ >= src_.size()) {
            error("expected a variety term");
        }
        if (consume_word("blowup")) {
            expect('(');
            ExprPtr inner = parse_expr();
            expect(')');
            return VarietyExpr::blowup(inner);
        }
        if (consume_word("P")) {
            expect('(');
            int n = parse_int();
            expect(')');
            return VarietyExpr::projective(n);
        }
        if (consume_word("A")) {
            expect('(');
            int g = parse_int();
            expect(')');
            return VarietyExpr::abelian(g);
        }
        if (consume_word("E")) {
            return VarietyExpr::abelian(1);
        }
        if (consume('(')) {
            ExprPtr inner = parse_expr();
            expect(')');
            return inner;
        }
        error("expected P(n), A(g), E, blowup(...), or a parenthesized expression");
    }

    const std::string& src_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_variety(const std::string& source) { return Parser(source).parse(); }

std::string print_variety(const VarietyExpr& expr) {
    switch (expr.kind) {
        case VarietyExpr::Kind::Projective:
            return "P(" + std::to_string(expr.arg) + ")";
        case VarietyExpr::Kind::Abelian:
            return "A(" + std::to_string(expr.arg) + ")";
        case VarietyExpr::Kind::Blowup:
            return "blowup(" + print_variety(*expr.left) + ")";
        case VarietyExpr::Kind::Product: {
            std::string left = print_variety(*expr.left);
            std::string right = print_variety(*expr.right);
            // products chain left-associatively; a product on the right needs parens
            if (expr.right->kind == VarietyExpr::Kind::Product) {
                right = "(" + right + ")";
            }
            return left + " x " + right;
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// Elaboration

namespace {

struct NamingState {
    int next_x = 1;
    int p_count = 0;
    int line_count = 0;
    int blow_count = 0;

    std::string next_h() {
        ++p_count;
        return p_count == 1 ? "h" : "h" + std::to_string(p_count);
    }
    std::string next_y() {
        ++line_count;
        return line_count == 1 ? "y" : "y" + std::to_string(line_count);
    }
    std::string next_z() {
        ++blow_count;
        return blow_count == 1 ? "z" : "z" + std::to_string(blow_count);
    }
};

VarietyModel elaborate_node(const VarietyExpr& expr, NamingState& names, bool in_product) {
    switch (expr.kind) {
        case VarietyExpr::Kind::Projective: {
            if (expr.arg < 0) {
                fail(ErrorKind::UnsupportedDimension, "P(n) needs n >= 0");
            }
            std::string name = (expr.arg == 1 && in_product) ? names.next_y() : names.next_h();
            return projective_space(expr.arg, name);
        }
        case VarietyExpr::Kind::Abelian: {
            if (expr.arg < 0) {
                fail(ErrorKind::UnsupportedDimension, "A(g) needs g >= 0");
            }
            VarietyModel v = abelian_variety(expr.arg, names.next_x);
            names.next_x += 2 * expr.arg;
            return v;
        }
        case VarietyExpr::Kind::Product: {
            VarietyModel left = elaborate_node(*expr.left, names, true);
            VarietyModel right = elaborate_node(*expr.right, names, true);
            return product(left, right);
        }
        case VarietyExpr::Kind::Blowup: {
            VarietyModel inner = elaborate_node(*expr.left, names, false);
            return blow_up_point(inner, names.next_z()).blown;
        }
    }
    fail(ErrorKind::InvalidPresentation, "unknown expression node");
}

} // namespace

VarietyModel elaborate(const VarietyExpr& expr) {
    NamingState names;
    VarietyModel v = elaborate_node(expr, names, false);
    v.name = print_variety(expr);
    return v;
}

BlowupPair elaborate_blowup(const VarietyExpr& expr) {
    if (expr.kind != VarietyExpr::Kind::Blowup) {
        fail(ErrorKind::UsageError, "the expression must be a blowup(...) node");
    }
    NamingState names;
    VarietyModel base = elaborate_node(*expr.left, names, false);
    base.name = print_variety(*expr.left);
    BlowupPair pair = blow_up_point(base, names.next_z());
    pair.blown.name = print_variety(expr);
    return pair;
}

} // namespace genera
