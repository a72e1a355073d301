#include "genera/varieties.hpp"

#include "genera/errors.hpp"
#include "genera/genus.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace genera {

namespace {

Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

std::string merge_labels(const std::string& a, const std::string& b) {
    if (a == "1") return b;
    if (b == "1") return a;
    return a + "*" + b;
}

} // namespace

// ---------------------------------------------------------------------------
// VarietyModel

const Element* VarietyModel::find_pi(const std::string& label) const {
    for (const auto& [l, e] : pi_classes) {
        if (l == label) return &e;
    }
    return nullptr;
}

Element VarietyModel::chern(int i) const {
    if (i < 0 || 2 * i > algebra->top_degree()) {
        fail(ErrorKind::DegreeOutOfRange, "no Chern component c" + std::to_string(i));
    }
    return total_chern.component(2 * i);
}

Rational VarietyModel::euler_alternating() const {
    Rational acc = 0;
    for (uint32_t i = 0; i < algebra->basis_size(); ++i) {
        acc += (algebra->degree_of(i) % 2 == 0) ? 1 : -1;
    }
    return acc;
}

Rational VarietyModel::euler_number() const {
    return pair_top(total_chern.component(2 * dim));
}

void VarietyModel::validate() const {
    if (!algebra) fail(ErrorKind::InvalidPresentation, "variety without algebra");
    if (dim < 0 || algebra->top_degree() != 2 * dim) {
        fail(ErrorKind::InvalidPresentation, "top degree must be twice the dimension");
    }
    if (!algebra->fundamental_index()) {
        fail(ErrorKind::NoFundamentalClass, "variety ring has no fundamental class");
    }
    if (total_chern.algebra() != algebra) {
        fail(ErrorKind::AlgebraMismatch, "total Chern class lives in the wrong ring");
    }
    if (total_chern.component(0) != algebra->unit()) {
        fail(ErrorKind::NotATotalClass, "total Chern class must start with 1");
    }
    for (int d = 1; d <= algebra->top_degree(); d += 2) {
        if (!total_chern.component(d).is_zero()) {
            fail(ErrorKind::NotATotalClass, "total Chern class has an odd-degree component");
        }
    }

    std::set<std::string> seen;
    for (const auto& [label, elem] : pi_classes) {
        if (label.empty() || !seen.insert(label).second) {
            fail(ErrorKind::InvalidPresentation, "designated class labels must be unique");
        }
        if (elem.algebra() != algebra) {
            fail(ErrorKind::AlgebraMismatch, "designated class lives in the wrong ring");
        }
        if (label == "1" && elem != algebra->unit()) {
            fail(ErrorKind::InvalidPresentation, "label '1' must name the unit");
        }
    }
    // closure up to sign: products of designated classes stay designated
    for (const auto& [la, ea] : pi_classes) {
        for (const auto& [lb, eb] : pi_classes) {
            Element prod = ea * eb;
            if (prod.is_zero()) continue;
            bool found = false;
            for (const auto& [lc, ec] : pi_classes) {
                if (prod == ec || prod == -ec) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                fail(ErrorKind::InvalidPresentation,
                     "designated classes are not closed under products (" + la + " * " + lb + ")");
            }
        }
    }

    if (euler_number() != euler_alternating()) {
        fail(ErrorKind::InvalidPresentation,
             "top Chern number disagrees with the alternating basis count");
    }
}

// ---------------------------------------------------------------------------
// Builders

VarietyModel projective_space(int n, const std::string& gen_name) {
    if (n < 0) fail(ErrorKind::UnsupportedDimension, "projective space needs n >= 0");
    AlgebraSpec spec;
    std::vector<std::string> fundamental;
    if (n >= 1) {
        Generator h;
        h.name = gen_name;
        h.degree = 2;
        h.kind = Generator::Kind::Truncated;
        h.truncation = n + 1;
        spec.generators.push_back(h);
        fundamental.assign(static_cast<std::size_t>(n), gen_name);
    }
    spec.top_degree = 2 * n;
    spec.fundamental = fundamental;

    VarietyModel v;
    v.name = "P(" + std::to_string(n) + ")";
    v.dim = n;
    v.algebra = build_algebra(spec);

    // c(P^n) = (1 + h)^{n+1}, truncated
    Element total = v.algebra->zero();
    Element h_power = v.algebra->unit();
    Element h = n >= 1 ? v.algebra->generator_element(gen_name) : v.algebra->zero();
    for (int k = 0; k <= n; ++k) {
        total += h_power * binomial(static_cast<unsigned long>(n) + 1,
                                    static_cast<unsigned long>(k));
        if (k < n) h_power = h_power * h;
    }
    v.total_chern = total;
    v.validate();
    return v;
}

VarietyModel abelian_variety_named(const std::vector<std::string>& gen_names) {
    if (gen_names.size() % 2 != 0) {
        fail(ErrorKind::UnsupportedDimension,
             "an abelian variety needs an even number of degree-1 classes");
    }
    AlgebraSpec spec;
    for (const std::string& name : gen_names) {
        Generator x;
        x.name = name;
        x.degree = 1;
        x.kind = Generator::Kind::Exterior;
        spec.generators.push_back(x);
    }
    spec.top_degree = static_cast<int>(gen_names.size());
    spec.fundamental = gen_names;

    VarietyModel v;
    v.name = "A(" + std::to_string(gen_names.size() / 2) + ")";
    v.dim = static_cast<int>(gen_names.size()) / 2;
    v.algebra = build_algebra(spec);
    v.total_chern = v.algebra->unit();
    for (uint32_t i = 0; i < v.algebra->basis_size(); ++i) {
        v.pi_classes.emplace_back(v.algebra->monomial_name(i), v.algebra->basis_element(i));
    }
    v.validate();
    return v;
}

VarietyModel abelian_variety(int g, int first_index) {
    if (g < 0) fail(ErrorKind::UnsupportedDimension, "abelian variety needs g >= 0");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(2 * g));
    for (int i = 0; i < 2 * g; ++i) {
        names.push_back("x" + std::to_string(first_index + i));
    }
    return abelian_variety_named(names);
}

VarietyModel product(const VarietyModel& a, const VarietyModel& b) {
    VarietyModel v;
    v.name = a.name + " x " + b.name;
    v.dim = a.dim + b.dim;
    v.algebra = GradedAlgebra::tensor(a.algebra, b.algebra);
    v.total_chern = transport(a.total_chern, v.algebra) * transport(b.total_chern, v.algebra);

    if (!a.pi_classes.empty() || !b.pi_classes.empty()) {
        auto la = a.pi_classes;
        if (la.empty()) la = {{"1", a.algebra->unit()}};
        auto lb = b.pi_classes;
        if (lb.empty()) lb = {{"1", b.algebra->unit()}};
        for (const auto& [label_a, elem_a] : la) {
            for (const auto& [label_b, elem_b] : lb) {
                v.pi_classes.emplace_back(
                    merge_labels(label_a, label_b),
                    transport(elem_a, v.algebra) * transport(elem_b, v.algebra));
            }
        }
        std::sort(v.pi_classes.begin(), v.pi_classes.end(),
                  [](const auto& x, const auto& y) {
                      uint32_t ix = x.second.coefficients().begin()->first;
                      uint32_t iy = y.second.coefficients().begin()->first;
                      return ix < iy;
                  });
    }
    v.validate();
    return v;
}

BlowupPair blow_up_point(const VarietyModel& v, const std::string& class_name) {
    if (v.dim != 2) {
        fail(ErrorKind::UnsupportedDimension,
             "blow-up at a point is only modeled for surfaces (dim 2), got dim " +
                 std::to_string(v.dim));
    }
    AlgebraSpec spec = v.algebra->presentation();
    if (!spec.fundamental) {
        fail(ErrorKind::NoFundamentalClass, "blow-up needs a fundamental class");
    }

    std::string zname = class_name;
    if (zname.empty() || v.algebra->find_generator(zname).has_value()) {
        zname = "z";
        for (int i = 2; v.algebra->find_generator(zname).has_value(); ++i) {
            zname = "z" + std::to_string(i);
        }
    }

    Generator z;
    z.name = zname;
    z.degree = 2;
    z.kind = Generator::Kind::Table;
    for (const Generator& g : v.algebra->generators()) {
        spec.table.push_back(TableRelation{zname, g.name, {}});
    }
    spec.table.push_back(TableRelation{zname, zname, {TableTerm{Rational(-1), *spec.fundamental}}});
    spec.generators.push_back(z);

    VarietyModel blown;
    blown.name = "blowup(" + v.name + ")";
    blown.dim = 2;
    blown.algebra = build_algebra(spec);
    assert(blown.algebra->basis_size() == v.algebra->basis_size() + 1);

    Element zel = blown.algebra->generator_element(zname);
    Element base_chern = transport(v.total_chern, blown.algebra);
    blown.total_chern = blown.algebra->unit() + (base_chern.component(2) + zel) +
                        (base_chern.component(4) - zel * zel);

    BlowupPair pair;
    for (const auto& [label, elem] : v.pi_classes) {
        blown.pi_classes.emplace_back(label, transport(elem, blown.algebra));
        pair.label_map[label] = label;
    }
    blown.validate();
    pair.base = v;
    pair.blown = std::move(blown);
    return pair;
}

// ---------------------------------------------------------------------------
// Invariance verification

InvarianceReport verify_blowup_invariance(const BlowupPair& pair, const GenusSpec& genus) {
    const VarietyModel& base = pair.base;
    const VarietyModel& blown = pair.blown;

    std::set<std::string> covered;
    for (const auto& [label, elem] : base.pi_classes) {
        auto it = pair.label_map.find(label);
        if (it == pair.label_map.end()) {
            fail(ErrorKind::TransportError, "label '" + label + "' has no transport");
        }
        if (!blown.find_pi(it->second)) {
            fail(ErrorKind::TransportError,
                 "label '" + label + "' transports to unknown '" + it->second + "'");
        }
        if (!covered.insert(it->second).second) {
            fail(ErrorKind::TransportError, "label transport is not injective");
        }
    }
    for (const auto& [label, elem] : blown.pi_classes) {
        if (!covered.count(label)) {
            fail(ErrorKind::TransportError,
                 "blown-up label '" + label + "' is not hit by the transport");
        }
    }

    InvarianceReport report;
    auto add_row = [&](const std::string& label, const std::string& image) {
        InvarianceRow row;
        row.label = label;
        row.base_value = base.find_pi(label) ? higher_genus(base, genus, label)
                                             : genus_number(base, genus);
        row.blown_value = blown.find_pi(image) ? higher_genus(blown, genus, image)
                                               : genus_number(blown, genus);
        row.equal = row.base_value == row.blown_value;
        report.rows.push_back(std::move(row));
    };

    if (!base.find_pi("1")) add_row("1", "1");
    for (const auto& [label, elem] : base.pi_classes) {
        add_row(label, pair.label_map.at(label));
    }
    report.pass = std::all_of(report.rows.begin(), report.rows.end(),
                              [](const InvarianceRow& r) { return r.equal; });
    return report;
}

// ---------------------------------------------------------------------------
// Chern comparison

ChernComparison compare_chern_reports(const VarietyModel& a, const VarietyModel& b,
                                      const std::map<std::string, std::string>& correspondence) {
    if (a.dim != b.dim) {
        fail(ErrorKind::CorrespondenceError, "varieties have different dimensions");
    }
    if (a.algebra->basis_size() != b.algebra->basis_size()) {
        fail(ErrorKind::CorrespondenceError, "rings have different dimensions");
    }

    // complete the correspondence with identity entries and check bijectivity
    std::map<std::string, std::string> gen_map = correspondence;
    std::set<std::string> targets;
    for (const Generator& g : a.algebra->generators()) {
        auto it = gen_map.find(g.name);
        const std::string& target = it == gen_map.end() ? (gen_map[g.name] = g.name) : it->second;
        auto ti = b.algebra->find_generator(target);
        if (!ti) {
            fail(ErrorKind::CorrespondenceError,
                 "generator '" + g.name + "' corresponds to unknown '" + target + "'");
        }
        if (b.algebra->generators()[*ti].degree != g.degree) {
            fail(ErrorKind::CorrespondenceError,
                 "correspondence changes the degree of '" + g.name + "'");
        }
        if (!targets.insert(target).second) {
            fail(ErrorKind::CorrespondenceError, "correspondence is not injective");
        }
    }
    if (targets.size() != b.algebra->generators().size()) {
        fail(ErrorKind::CorrespondenceError, "correspondence does not cover the target ring");
    }

    auto carry = [&](const Element& e) {
        try {
            return transport(e, b.algebra, gen_map);
        } catch (const DomainError& err) {
            fail(ErrorKind::CorrespondenceError, err.what());
        }
    };

    // ring-map check on all basis products
    std::size_t n = a.algebra->basis_size();
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i; j < n; ++j) {
            Element lhs = carry(a.algebra->basis_product(i, j));
            Element rhs = carry(a.algebra->basis_element(i)) * carry(a.algebra->basis_element(j));
            if (lhs != rhs) {
                fail(ErrorKind::CorrespondenceError,
                     "correspondence is not a ring map on " + a.algebra->monomial_name(i) +
                         " * " + a.algebra->monomial_name(j));
            }
        }
    }

    // designated classes shared by label must match
    for (const auto& [label, elem] : a.pi_classes) {
        if (const Element* other = b.find_pi(label)) {
            if (carry(elem) != *other) {
                fail(ErrorKind::CorrespondenceError,
                     "designated class '" + label + "' does not match under the correspondence");
            }
        }
    }

    ChernComparison cmp;
    for (int i = 0; i <= a.dim; ++i) {
        cmp.chern_equal.emplace_back(i, carry(a.chern(i)) == b.chern(i));
    }
    GenusSpec todd = GenusSpec::todd(a.dim);
    Element ta = multiplicative_class(todd, a.total_chern, a.dim);
    Element tb = multiplicative_class(todd, b.total_chern, b.dim);
    for (int i = 0; i <= a.dim; ++i) {
        cmp.todd_equal.emplace_back(i, carry(ta.component(2 * i)) == tb.component(2 * i));
    }
    cmp.euler_equal = a.euler_number() == b.euler_number();
    Element pa = chern_to_pontrjagin(a.total_chern);
    Element pb = chern_to_pontrjagin(b.total_chern);
    cmp.p1_equal = a.dim < 2 || carry(pa.component(4)) == pb.component(4);

    for (const auto& [label, elem] : a.pi_classes) {
        if (b.find_pi(label)) {
            cmp.higher_todd_equal.emplace_back(
                label, higher_genus(a, todd, label) == higher_genus(b, todd, label));
        }
    }

    bool todd_all = std::all_of(cmp.todd_equal.begin(), cmp.todd_equal.end(),
                                [](const auto& p) { return p.second; });
    if (a.dim <= 3 && todd_all) {
        cmp.notes.push_back("c1 agreement follows from the degree-2 term: T1 = c1/2");
        if (cmp.p1_equal && a.dim >= 2) {
            cmp.notes.push_back("c2 agreement follows from 2*c2 = c1^2 - p1");
        }
        if (a.dim == 3 && cmp.euler_equal &&
            a.algebra->basis_of_degree(2 * a.dim).size() == 1) {
            cmp.notes.push_back("c3 agreement follows from the Euler number");
        }
    }

    cmp.all_equal = todd_all && cmp.euler_equal && cmp.p1_equal &&
                    std::all_of(cmp.chern_equal.begin(), cmp.chern_equal.end(),
                                [](const auto& p) { return p.second; }) &&
                    std::all_of(cmp.higher_todd_equal.begin(), cmp.higher_todd_equal.end(),
                                [](const auto& p) { return p.second; });
    return cmp;
}

std::string normalize_label(const VarietyModel& v, const std::string& label) {
    std::string trimmed;
    for (char c : label) {
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    }
    if (trimmed.empty() || trimmed == "1") return "1";

    std::vector<uint32_t> indices;
    std::size_t start = 0;
    while (start <= trimmed.size()) {
        std::size_t star = trimmed.find('*', start);
        std::string part = trimmed.substr(start, star == std::string::npos ? std::string::npos
                                                                           : star - start);
        auto gi = v.algebra->find_generator(part);
        if (!gi) {
            fail(ErrorKind::UnknownPiClass,
                 "'" + part + "' is not a generator of " + v.name);
        }
        indices.push_back(*gi);
        if (star == std::string::npos) break;
        start = star + 1;
    }
    std::sort(indices.begin(), indices.end());
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i > 0) out += "*";
        out += v.algebra->generators()[indices[i]].name;
    }
    return out;
}

} // namespace genera
