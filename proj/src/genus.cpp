#include "genera/genus.hpp"

#include "genera/errors.hpp"
#include "genera/varieties.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace genera {

// ---------------------------------------------------------------------------
// GenusSpec

GenusSpec GenusSpec::todd(int order) {
    return GenusSpec{"todd", VariableKind::Chern, todd_series(order)};
}

GenusSpec GenusSpec::l(int order) {
    return GenusSpec{"l", VariableKind::Pontrjagin, l_series(order)};
}

GenusSpec GenusSpec::ahat(int order) {
    return GenusSpec{"ahat", VariableKind::Pontrjagin, ahat_series(order)};
}

GenusSpec GenusSpec::by_name(const std::string& name, int order) {
    if (name == "todd") return todd(order);
    if (name == "l") return l(order);
    if (name == "ahat") return ahat(order);
    fail(ErrorKind::UsageError, "unknown genus '" + name + "' (expected todd, l, or ahat)");
}

PowerSeries1 GenusSpec::at_order(int order) const {
    if (series.order() >= order) return series.to_order(order);
    if (name == "todd") return todd_series(order);
    if (name == "l") return l_series(order);
    if (name == "ahat") return ahat_series(order);
    fail(ErrorKind::DegreeOutOfRange,
         "genus '" + name + "' carries a series of order " + std::to_string(series.order()) +
             " but order " + std::to_string(order) + " is required");
}

// ---------------------------------------------------------------------------
// Universal polynomials

AlgebraPtr universal_class_ring(VariableKind kind, int n) {
    if (n < 0) fail(ErrorKind::DegreeOutOfRange, "weight bound must be nonnegative");
    int step = kind == VariableKind::Chern ? 2 : 4;
    const char* stem = kind == VariableKind::Chern ? "c" : "p";
    AlgebraSpec spec;
    for (int i = 1; i <= n; ++i) {
        Generator g;
        g.name = stem + std::to_string(i);
        g.degree = step * i;
        g.kind = Generator::Kind::Truncated;
        g.truncation = n / i + 1;
        spec.generators.push_back(g);
    }
    spec.top_degree = step * n;
    return build_algebra(spec);
}

namespace {

// s_m = (-1)^{m-1} m k_m + sum_{i=1}^{m-1} (-1)^{i-1} k_i s_{m-i}
std::vector<Element> newton_from(const std::vector<Element>& k, int n) {
    std::vector<Element> s;
    s.reserve(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) {
        Element acc = k[static_cast<std::size_t>(m)] * Rational((m % 2 != 0) ? m : -m);
        for (int i = 1; i < m; ++i) {
            Element term = k[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(m - i - 1)];
            acc += (i % 2 != 0) ? term : -term;
        }
        s.push_back(acc);
    }
    return s;
}

} // namespace

std::vector<Element> newton_power_sums(int n) {
    AlgebraPtr ring = universal_class_ring(VariableKind::Chern, n);
    std::vector<Element> k;
    k.push_back(ring->unit());
    for (int i = 1; i <= n; ++i) {
        k.push_back(ring->generator_element("c" + std::to_string(i)));
    }
    return newton_from(k, n);
}

// ---------------------------------------------------------------------------
// Multiplicative classes

Element multiplicative_class(const GenusSpec& genus, const Element& total, int weight_bound) {
    if (!total.attached()) fail(ErrorKind::AlgebraMismatch, "total class has no algebra");
    const AlgebraPtr& alg = total.algebra();
    int step = genus.kind == VariableKind::Chern ? 2 : 4;

    if (total.component(0) != alg->unit()) {
        fail(ErrorKind::NotATotalClass, "total class must have constant term 1");
    }
    int full = alg->top_degree() / step;
    int wb = std::min(weight_bound, full);
    if (wb < 0) fail(ErrorKind::DegreeOutOfRange, "negative weight bound");

    // gradedness is a property of the class, not of the requested bound
    std::vector<Element> k;
    k.push_back(alg->unit());
    Element graded_sum = total.component(0);
    for (int i = 1; i <= full; ++i) {
        Element ci = total.component(step * i);
        graded_sum += ci;
        if (i <= wb) k.push_back(ci);
    }
    if (graded_sum != total) {
        fail(ErrorKind::NotATotalClass,
             "total class has components outside degrees 0, " + std::to_string(step) + ", " +
                 std::to_string(2 * step) + ", ...");
    }

    PowerSeries1 q = genus.at_order(genus.kind == VariableKind::Chern ? wb : 2 * wb);
    if (genus.kind == VariableKind::Pontrjagin && !q.is_even()) {
        throw std::invalid_argument("a genus of Pontrjagin type needs an even series");
    }
    PowerSeries1 lq = series_log(q);

    std::vector<Element> s = newton_from(k, wb);
    Element u = alg->zero();
    for (int m = 1; m <= wb; ++m) {
        Rational a = genus.kind == VariableKind::Chern ? lq[m] : lq[2 * m];
        if (a == 0) continue;
        u += s[static_cast<std::size_t>(m - 1)] * a;
    }

    // exp(u): u is nilpotent, so the sum is finite
    Element result = alg->unit();
    Element power = alg->unit();
    Rational inv_factorial = 1;
    for (int t = 1; t <= wb; ++t) {
        power = power * u;
        if (power.is_zero()) break;
        inv_factorial /= t;
        result += power * inv_factorial;
    }
    if (wb == full) return result;
    // cross terms of exp land above the bound; drop them so the cap is exact
    Element bounded = alg->zero();
    for (int i = 0; i <= wb; ++i) bounded += result.component(step * i);
    return bounded;
}

Element chern_to_pontrjagin(const Element& total_chern, int weight_bound) {
    if (!total_chern.attached()) fail(ErrorKind::AlgebraMismatch, "total class has no algebra");
    const AlgebraPtr& alg = total_chern.algebra();
    if (total_chern.component(0) != alg->unit()) {
        fail(ErrorKind::NotATotalClass, "total Chern class must have constant term 1");
    }
    int top = alg->top_degree();
    Element conjugate = alg->zero();
    Element graded_sum = alg->zero();
    for (int d = 0; 2 * d <= top; ++d) {
        Element ci = total_chern.component(2 * d);
        graded_sum += ci;
        conjugate += (d % 2 == 0) ? ci : -ci;
    }
    if (graded_sum != total_chern) {
        fail(ErrorKind::NotATotalClass, "total Chern class has odd-degree components");
    }

    Element q = conjugate * total_chern;
    // q = prod (1 - x_i^2) identically has no components in degrees 2 mod 4
    for (int d = 2; d <= top; d += 4) {
        if (!q.component(d).is_zero()) {
            throw std::logic_error("c * conj(c) has a degree 2 mod 4 component");
        }
    }
    int p_top = weight_bound >= 0 ? std::min(top, 4 * weight_bound) : top;
    Element result = alg->zero();
    for (int k = 0; 4 * k <= p_top; ++k) {
        Element pk = q.component(4 * k);
        result += (k % 2 == 0) ? pk : -pk;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Genus numbers

Element genus_class_of(const VarietyModel& variety, const GenusSpec& genus, int weight_bound) {
    int step = genus.kind == VariableKind::Chern ? 2 : 4;
    int wb = (2 * variety.dim) / step;
    if (weight_bound >= 0) wb = std::min(wb, weight_bound);
    Element total = genus.kind == VariableKind::Chern
                        ? variety.total_chern
                        : chern_to_pontrjagin(variety.total_chern);
    return multiplicative_class(genus, total, wb);
}

Rational genus_number(const VarietyModel& variety, const GenusSpec& genus) {
    return pair_top(genus_class_of(variety, genus));
}

Rational higher_genus(const VarietyModel& variety, const GenusSpec& genus,
                      const std::string& x_label) {
    std::string label = normalize_label(variety, x_label);
    const Element* x = variety.find_pi(label);
    if (!x) {
        fail(ErrorKind::UnknownPiClass,
             "'" + x_label + "' is not a designated class of " + variety.name);
    }
    return pair_top(genus_class_of(variety, genus) * *x);
}

// ---------------------------------------------------------------------------
// Class expressions

namespace {

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Type type;
    std::string text;
    int pos;  // 1-based column
};

std::vector<Token> lex_expression(const std::string& src) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int pos = static_cast<int>(i) + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            tokens.push_back({Token::Type::Number, src.substr(i, j - i), pos});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                      src[j] == '_')) {
                ++j;
            }
            tokens.push_back({Token::Type::Ident, src.substr(i, j - i), pos});
            i = j;
            continue;
        }
        Token::Type type;
        switch (c) {
            case '+': type = Token::Type::Plus; break;
            case '-': type = Token::Type::Minus; break;
            case '*': type = Token::Type::Star; break;
            case '^': type = Token::Type::Caret; break;
            case '/': type = Token::Type::Slash; break;
            case '(': type = Token::Type::LParen; break;
            case ')': type = Token::Type::RParen; break;
            default:
                fail(ErrorKind::ExprError, "unexpected character '" + std::string(1, c) +
                                               "' at position " + std::to_string(pos));
        }
        tokens.push_back({type, std::string(1, c), pos});
        ++i;
    }
    tokens.push_back({Token::Type::End, "", static_cast<int>(src.size()) + 1});
    return tokens;
}

class ExpressionParser {
public:
    ExpressionParser(const VarietyModel& v, std::vector<Token> tokens)
        : v_(v), tokens_(std::move(tokens)) {}

    Element parse() {
        Element e = parse_sum();
        expect(Token::Type::End, "end of expression");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    void expect(Token::Type type, const std::string& what) {
        if (peek().type != type) {
            fail(ErrorKind::ExprError, "expected " + what + " at position " +
                                           std::to_string(peek().pos));
        }
        ++pos_;
    }

    Element parse_sum() {
        Element acc = parse_term();
        while (peek().type == Token::Type::Plus || peek().type == Token::Type::Minus) {
            bool minus = take().type == Token::Type::Minus;
            Element rhs = parse_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Element parse_term() {
        int sign = 1;
        while (peek().type == Token::Type::Minus) {
            take();
            sign = -sign;
        }
        Element acc = parse_factor();
        while (peek().type == Token::Type::Star) {
            take();
            acc = acc * parse_factor();
        }
        return sign == 1 ? acc : -acc;
    }

    Element parse_factor() {
        Element base = parse_primary();
        if (peek().type == Token::Type::Caret) {
            take();
            if (peek().type != Token::Type::Number || peek().text.size() > 4) {
                fail(ErrorKind::ExprError,
                     "expected a small exponent at position " + std::to_string(peek().pos));
            }
            long e = std::stol(take().text);
            Element acc = v_.algebra->unit();
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Element parse_primary() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::Number: {
                std::string num = take().text;
                if (peek().type == Token::Type::Slash) {
                    take();
                    if (peek().type != Token::Type::Number) {
                        fail(ErrorKind::ExprError,
                             "expected denominator at position " + std::to_string(peek().pos));
                    }
                    num += "/" + take().text;
                }
                return v_.algebra->unit() * rat_from_string(num);
            }
            case Token::Type::Ident: {
                Token id = take();
                if (id.text.size() >= 2 && id.text.size() <= 5 && id.text[0] == 'c' &&
                    std::all_of(id.text.begin() + 1, id.text.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                    int i = std::stoi(id.text.substr(1));
                    if (2 * i > v_.algebra->top_degree()) return v_.algebra->zero();
                    return v_.chern(i);
                }
                if (const Element* x = v_.find_pi(id.text)) return *x;
                fail(ErrorKind::UnknownPiClass,
                     "'" + id.text + "' is neither c<i> nor a designated class of " + v_.name);
            }
            case Token::Type::LParen: {
                take();
                Element e = parse_sum();
                expect(Token::Type::RParen, "')'");
                return e;
            }
            default:
                fail(ErrorKind::ExprError,
                     "expected a value at position " + std::to_string(t.pos));
        }
    }

    const VarietyModel& v_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

Element evaluate_class_expression(const VarietyModel& variety, const std::string& expression) {
    return ExpressionParser(variety, lex_expression(expression)).parse();
}

Rational char_number(const VarietyModel& variety, const std::string& expression) {
    return pair_top(evaluate_class_expression(variety, expression));
}

} // namespace genera
