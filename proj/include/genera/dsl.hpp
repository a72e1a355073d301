#pragma once

#include "genera/varieties.hpp"

#include <memory>
#include <string>

namespace genera {

/// AST of the variety description language.
///   expr := term { "x" term }
///   term := "P(" int ")" | "A(" int ")" | "E" | "blowup(" expr ")" | "(" expr ")"
/// "E" is sugar for A(1), resolved at parse time.
struct VarietyExpr {
    enum class Kind { Projective, Abelian, Product, Blowup };

    Kind kind = Kind::Projective;
    int arg = 0;  // P(n) or A(g)
    std::shared_ptr<const VarietyExpr> left;
    std::shared_ptr<const VarietyExpr> right;  // Product only

    static std::shared_ptr<const VarietyExpr> projective(int n);
    static std::shared_ptr<const VarietyExpr> abelian(int g);
    static std::shared_ptr<const VarietyExpr> prod(std::shared_ptr<const VarietyExpr> l,
                                                   std::shared_ptr<const VarietyExpr> r);
    static std::shared_ptr<const VarietyExpr> blowup(std::shared_ptr<const VarietyExpr> inner);
};

using ExprPtr = std::shared_ptr<const VarietyExpr>;

bool expr_equal(const VarietyExpr& a, const VarietyExpr& b);

/// Throws SyntaxError (with line/column) on malformed input.
ExprPtr parse_variety(const std::string& source);

/// Canonical rendering; parse(print(e)) is structurally equal to e.
std::string print_variety(const VarietyExpr& expr);

/// Builds the model by delegating to the variety builders, with
/// deterministic generator naming: x1..x_{2g} across A-factors in order, y
/// (y2, ...) for P(1) inside products, h (h2, ...) for other projective
/// factors, z (z2, ...) per blow-up.
VarietyModel elaborate(const VarietyExpr& expr);

/// elaborate + blow-up pairing: the expression must be a blowup node; the
/// pair holds its base and the blown-up model. Throws UsageError otherwise.
BlowupPair elaborate_blowup(const VarietyExpr& expr);

} // namespace genera
