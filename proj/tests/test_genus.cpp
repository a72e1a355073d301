#include "doctest.h"

#include "genera/errors.hpp"
#include "genera/genus.hpp"
#include "genera/varieties.hpp"

#include <string>
#include <vector>

using namespace genera;

namespace {

// Formal-root ring Q[r1..rn] with deg r_i = step, truncated above the weight.
AlgebraPtr root_ring(int roots, int step, int weight) {
    AlgebraSpec spec;
    for (int i = 1; i <= roots; ++i) {
        Generator g;
        g.name = "r" + std::to_string(i);
        g.degree = step;
        g.kind = Generator::Kind::Truncated;
        g.truncation = weight + 1;
        spec.generators.push_back(g);
    }
    spec.top_degree = step * weight;
    return build_algebra(spec);
}

std::vector<Element> roots_of(const AlgebraPtr& ring) {
    std::vector<Element> out;
    for (const Generator& g : ring->generators()) out.push_back(ring->generator_element(g.name));
    return out;
}

// e_k as the degree-(step*k) component of prod (1 + r_i).
std::vector<Element> elementary_symmetric(const AlgebraPtr& ring, int step, int weight) {
    Element total = ring->unit();
    for (const Element& r : roots_of(ring)) total = total * (ring->unit() + r);
    std::vector<Element> e;
    for (int k = 0; k <= weight; ++k) e.push_back(total.component(step * k));
    return e;
}

// Substitutes generator i -> images[i], monomial by monomial.
Element substitute(const Element& u, const AlgebraPtr& target, const std::vector<Element>& images) {
    Element acc = target->zero();
    for (const auto& [index, coeff] : u.coefficients()) {
        Element prod = target->unit();
        for (uint32_t letter : u.algebra()->basis_monomial(index)) {
            prod = prod * images[letter];
        }
        acc += prod * coeff;
    }
    return acc;
}

// The product-of-roots side: prod_i Q(r_i) with Q given by coefficients in
// the root variable (index m is the weight-m coefficient).
Element product_over_roots(const AlgebraPtr& ring, const std::vector<Rational>& q,
                           int weight) {
    Element acc = ring->unit();
    for (const Element& r : roots_of(ring)) {
        Element factor = ring->zero();
        Element power = ring->unit();
        for (int m = 0; m <= weight; ++m) {
            if (q[static_cast<std::size_t>(m)] != 0) {
                factor += power * q[static_cast<std::size_t>(m)];
            }
            power = power * r;
        }
        acc = acc * factor;
    }
    return acc;
}

Element total_class(const AlgebraPtr& ring) {
    Element total = ring->unit();
    for (const Generator& g : ring->generators()) total += ring->generator_element(g.name);
    return total;
}

std::vector<Rational> chern_root_coefficients(const GenusSpec& spec, int weight) {
    PowerSeries1 s = spec.at_order(weight);
    std::vector<Rational> q;
    for (int m = 0; m <= weight; ++m) q.push_back(s[m]);
    return q;
}

// Pontrjagin-kind series live in y = x^2: weight-m coefficient is [x^{2m}].
std::vector<Rational> pontrjagin_root_coefficients(const GenusSpec& spec, int weight) {
    PowerSeries1 s = spec.at_order(2 * weight);
    std::vector<Rational> q;
    for (int m = 0; m <= weight; ++m) q.push_back(s[2 * m]);
    return q;
}

} // namespace

TEST_CASE("universal Todd class matches the product over formal roots") {
    const int weight = 4;
    AlgebraPtr ring = root_ring(4, 2, weight);
    std::vector<Element> e = elementary_symmetric(ring, 2, weight);

    GenusSpec todd = GenusSpec::todd(weight);
    Element oracle = product_over_roots(ring, chern_root_coefficients(todd, weight), weight);

    AlgebraPtr universal = universal_class_ring(VariableKind::Chern, weight);
    Element tclass = multiplicative_class(todd, total_class(universal), weight);
    Element evaluated = substitute(tclass, ring, {e[1], e[2], e[3], e[4]});

    CHECK(evaluated == oracle);
}

TEST_CASE("Todd polynomial closed forms through weight 4") {
    AlgebraPtr u = universal_class_ring(VariableKind::Chern, 4);
    Element c1 = u->generator_element("c1");
    Element c2 = u->generator_element("c2");
    Element c3 = u->generator_element("c3");
    Element c4 = u->generator_element("c4");
    Element tclass = multiplicative_class(GenusSpec::todd(4), total_class(u), 4);

    CHECK(tclass.component(0) == u->unit());
    CHECK(tclass.component(2) == c1 * Rational(1, 2));
    CHECK(tclass.component(4) == (c1 * c1 + c2) * Rational(1, 12));
    CHECK(tclass.component(6) == c1 * c2 * Rational(1, 24));
    CHECK(tclass.component(8) ==
          (-(c1 * c1 * c1 * c1) + c1 * c1 * c2 * Rational(4) + c2 * c2 * Rational(3) + c1 * c3 -
           c4) *
              Rational(1, 720));
}

TEST_CASE("Newton power sums match the power sums of formal roots") {
    const int weight = 4;
    AlgebraPtr ring = root_ring(4, 2, weight);
    std::vector<Element> e = elementary_symmetric(ring, 2, weight);
    std::vector<Element> images = {e[1], e[2], e[3], e[4]};

    std::vector<Element> s = newton_power_sums(weight);
    REQUIRE(s.size() == 4);
    for (int m = 1; m <= weight; ++m) {
        Element direct = ring->zero();
        for (const Element& r : roots_of(ring)) {
            Element power = ring->unit();
            for (int i = 0; i < m; ++i) power = power * r;
            direct += power;
        }
        CHECK(substitute(s[static_cast<std::size_t>(m - 1)], ring, images) == direct);
    }
}

TEST_CASE("Newton power sum closed forms") {
    std::vector<Element> s = newton_power_sums(3);
    REQUIRE(s.size() == 3);
    AlgebraPtr u = s[0].algebra();
    Element c1 = u->generator_element("c1");
    Element c2 = u->generator_element("c2");
    Element c3 = u->generator_element("c3");

    CHECK(s[0] == c1);
    CHECK(s[1] == c1 * c1 - c2 * Rational(2));
    CHECK(s[2] == c1 * c1 * c1 - c1 * c2 * Rational(3) + c3 * Rational(3));
}

TEST_CASE("universal L class matches the product over formal roots") {
    const int weight = 2;
    AlgebraPtr ring = root_ring(2, 4, weight);
    std::vector<Element> e = elementary_symmetric(ring, 4, weight);

    GenusSpec l = GenusSpec::l(2 * weight);
    Element oracle = product_over_roots(ring, pontrjagin_root_coefficients(l, weight), weight);

    AlgebraPtr universal = universal_class_ring(VariableKind::Pontrjagin, weight);
    Element lclass = multiplicative_class(l, total_class(universal), weight);
    CHECK(substitute(lclass, ring, {e[1], e[2]}) == oracle);

    Element p1 = universal->generator_element("p1");
    Element p2 = universal->generator_element("p2");
    CHECK(lclass.component(4) == p1 * Rational(1, 3));
    CHECK(lclass.component(8) == (p2 * Rational(7) - p1 * p1) * Rational(1, 45));
}

TEST_CASE("universal A-hat class matches the product over formal roots") {
    const int weight = 2;
    AlgebraPtr ring = root_ring(2, 4, weight);
    std::vector<Element> e = elementary_symmetric(ring, 4, weight);

    GenusSpec ahat = GenusSpec::ahat(2 * weight);
    Element oracle =
        product_over_roots(ring, pontrjagin_root_coefficients(ahat, weight), weight);

    AlgebraPtr universal = universal_class_ring(VariableKind::Pontrjagin, weight);
    Element aclass = multiplicative_class(ahat, total_class(universal), weight);
    CHECK(substitute(aclass, ring, {e[1], e[2]}) == oracle);

    Element p1 = universal->generator_element("p1");
    Element p2 = universal->generator_element("p2");
    CHECK(aclass.component(4) == p1 * Rational(-1, 24));
    CHECK(aclass.component(8) == (p1 * p1 * Rational(7) - p2 * Rational(4)) * Rational(1, 5760));
}

TEST_CASE("multiplicative class handles a short total class") {
    AlgebraPtr u = universal_class_ring(VariableKind::Pontrjagin, 1);
    Element p1 = u->generator_element("p1");
    Element lclass = multiplicative_class(GenusSpec::l(2), u->unit() + p1, 1);
    CHECK(lclass == u->unit() + p1 * Rational(1, 3));
}

TEST_CASE("multiplicative class rejects non-total inputs") {
    AlgebraPtr u = universal_class_ring(VariableKind::Chern, 2);
    Element c1 = u->generator_element("c1");
    try {
        multiplicative_class(GenusSpec::todd(2), c1, 2);
        FAIL("expected NotATotalClass");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::NotATotalClass);
    }

    VarietyModel ep1 = product(abelian_variety(1), projective_space(1, "y"));
    Element bad = ep1.algebra->unit() + ep1.algebra->generator_element("x1");
    CHECK_THROWS_AS(multiplicative_class(GenusSpec::todd(2), bad, 2), DomainError);
}

TEST_CASE("Pontrjagin-kind genus requires an even series") {
    AlgebraPtr u = universal_class_ring(VariableKind::Pontrjagin, 1);
    GenusSpec odd{"custom", VariableKind::Pontrjagin, todd_series(2)};
    CHECK_THROWS_AS(multiplicative_class(odd, total_class(u), 1), std::invalid_argument);
}

TEST_CASE("custom genus series cannot be extended") {
    GenusSpec custom{"custom", VariableKind::Chern, todd_series(2)};
    CHECK(custom.at_order(1).order() == 1);
    CHECK_THROWS_AS(custom.at_order(3), DomainError);
}

TEST_CASE("chern_to_pontrjagin in the universal ring") {
    AlgebraPtr u = universal_class_ring(VariableKind::Chern, 4);
    Element c1 = u->generator_element("c1");
    Element c2 = u->generator_element("c2");
    Element c3 = u->generator_element("c3");
    Element c4 = u->generator_element("c4");

    Element p = chern_to_pontrjagin(total_class(u));
    CHECK(p.component(0) == u->unit());
    CHECK(p.component(4) == c1 * c1 - c2 * Rational(2));
    CHECK(p.component(8) == c2 * c2 - c1 * c3 * Rational(2) + c4 * Rational(2));

    // 2 c2 = c1^2 - p1
    Element p1 = p.component(4);
    CHECK(c2 * Rational(2) == c1 * c1 - p1);
}

TEST_CASE("chern_to_pontrjagin weight bound truncates the output only") {
    AlgebraPtr u = universal_class_ring(VariableKind::Chern, 4);
    Element p_full = chern_to_pontrjagin(total_class(u));
    Element p_cut = chern_to_pontrjagin(total_class(u), 1);
    CHECK(p_cut == p_full.component(0) + p_full.component(4));
}

TEST_CASE("genus numbers of projective spaces") {
    for (int n = 1; n <= 4; ++n) {
        VarietyModel pn = projective_space(n);
        CHECK(genus_number(pn, GenusSpec::todd(n)) == 1);
        CHECK(pn.euler_number() == n + 1);
    }
    CHECK(genus_number(projective_space(2), GenusSpec::l(2)) == 1);
    CHECK(genus_number(projective_space(2), GenusSpec::ahat(2)) == Rational(-1, 8));
    // odd complex dimension: the top degree misses the 4Z grading
    CHECK(genus_number(projective_space(3), GenusSpec::l(4)) == 0);
}

TEST_CASE("genus numbers of products and abelian varieties") {
    VarietyModel p1p1 = product(projective_space(1, "y"), projective_space(1, "w"));
    CHECK(genus_number(p1p1, GenusSpec::l(2)) == 0);
    CHECK(genus_number(p1p1, GenusSpec::todd(2)) == 1);

    VarietyModel e = abelian_variety(1);
    CHECK(genus_number(e, GenusSpec::todd(1)) == 0);
    VarietyModel a2 = abelian_variety(2);
    CHECK(genus_number(a2, GenusSpec::todd(2)) == 0);
    CHECK(genus_number(a2, GenusSpec::l(2)) == 0);
}

TEST_CASE("genus_class_of respects the weight bound") {
    VarietyModel p3 = projective_space(3);
    Element t1 = genus_class_of(p3, GenusSpec::todd(3), 1);
    Element h = p3.algebra->generator_element("h");
    CHECK(t1 == p3.algebra->unit() + h * Rational(2));
}

TEST_CASE("higher genus values on the model surfaces") {
    VarietyModel ep1 = product(abelian_variety(1), projective_space(1, "y"));
    GenusSpec todd = GenusSpec::todd(2);
    CHECK(higher_genus(ep1, todd, "x1*x2") == 1);
    CHECK(higher_genus(ep1, todd, "x2 * x1") == 1);
    CHECK(higher_genus(ep1, todd, "1") == genus_number(ep1, todd));
    CHECK(higher_genus(ep1, todd, "x1") == 0);
    CHECK_THROWS_AS(higher_genus(ep1, todd, "x7"), DomainError);

    // top-degree class: only the constant term of the Todd class contributes
    VarietyModel e = abelian_variety(1);
    CHECK(higher_genus(e, GenusSpec::todd(1), "x1*x2") == 1);
}

TEST_CASE("class expressions evaluate Chern words and designated classes") {
    VarietyModel p2 = projective_space(2);
    CHECK(char_number(p2, "c1^2") == 9);
    CHECK(char_number(p2, "c2") == 3);
    CHECK(char_number(p2, "c1^2 - 2*c2") == 3);
    CHECK(char_number(p2, "1/3*c1^2") == 3);
    CHECK(char_number(p2, "(c1 - c1)^2") == 0);
    CHECK(char_number(p2, "-c2") == -3);
    // weight mismatch pairs to zero instead of failing
    CHECK(char_number(p2, "c1") == 0);
    CHECK(char_number(p2, "c9") == 0);
    CHECK(char_number(p2, "7/2") == 0);
}

TEST_CASE("class expressions on a surface with designated classes") {
    BlowupPair pair = blow_up_point(product(abelian_variety(1), projective_space(1, "y")));
    CHECK(char_number(pair.blown, "c1*x1*x2") == 2);
    CHECK(char_number(pair.blown, "c1^2") == -1);
    CHECK(char_number(pair.blown, "c2") == 1);
    CHECK(char_number(pair.base, "c1*x1*x2") == 2);
}

TEST_CASE("class expression errors") {
    VarietyModel p2 = projective_space(2);
    CHECK_THROWS_AS(evaluate_class_expression(p2, "c1*"), DomainError);
    CHECK_THROWS_AS(evaluate_class_expression(p2, "(c1"), DomainError);
    CHECK_THROWS_AS(evaluate_class_expression(p2, "c1 + &"), DomainError);
    CHECK_THROWS_AS(evaluate_class_expression(p2, "h"), DomainError);
    CHECK_THROWS_AS(evaluate_class_expression(p2, "c1^99999"), DomainError);
    CHECK_THROWS_AS(evaluate_class_expression(p2, ""), DomainError);

    try {
        evaluate_class_expression(p2, "c1 + &");
        FAIL("expected ExprError");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::ExprError);
    }
    try {
        evaluate_class_expression(p2, "x1");
        FAIL("expected UnknownPiClass");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::UnknownPiClass);
    }
}

TEST_CASE("by_name rejects unknown genus names") {
    CHECK_THROWS_AS(GenusSpec::by_name("elliptic", 2), DomainError);
    CHECK(GenusSpec::by_name("ahat", 2).kind == VariableKind::Pontrjagin);
}
