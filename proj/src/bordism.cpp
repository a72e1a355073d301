#include "genera/bordism.hpp"

#include "genera/errors.hpp"
#include "genera/genus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace genera {

// ---------------------------------------------------------------------------
// Partitions

std::vector<Partition> unitary_basis(int k) {
    if (k < 0) fail(ErrorKind::DegreeOutOfRange, "partition weight must be nonnegative");
    std::vector<Partition> out;
    Partition current;
    std::function<void(int, int)> descend = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            descend(remaining - part, part);
            current.pop_back();
        }
    };
    descend(k, k);
    return out;
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

Partition concat_partitions(const Partition& a, const Partition& b) {
    Partition out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

VarietyModel partition_variety(const Partition& p) {
    VarietyModel v = projective_space(p.empty() ? 0 : p[0], "f1");
    for (std::size_t i = 1; i < p.size(); ++i) {
        v = product(v, projective_space(p[i], "f" + std::to_string(i + 1)));
    }
    return v;
}

Rational todd_functional(const Partition& p) {
    VarietyModel v = partition_variety(p);
    return genus_number(v, GenusSpec::todd(v.dim));
}

Rational todd_functional(const std::vector<std::pair<Rational, Partition>>& combo) {
    Rational acc = 0;
    for (const auto& [coeff, p] : combo) acc += coeff * todd_functional(p);
    return acc;
}

// ---------------------------------------------------------------------------
// Exact elimination helpers

namespace {

// Row-reduces the matrix in place; returns the pivot column per row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        Rational lead = m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] /= lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(pivots.size());
    return pivots;
}

} // namespace

IdealSpan birational_ideal_span(int k) {
    if (k < 1) fail(ErrorKind::DegreeOutOfRange, "the ideal span needs k >= 1");
    std::vector<Partition> basis = unitary_basis(k);
    IdealSpan span;
    span.k = k;
    span.ambient = basis.size();
    for (std::size_t i = 1; i < basis.size(); ++i) {
        std::vector<Rational> vec(basis.size(), Rational(0));
        vec[i] = 1;
        vec[0] = -1;
        span.basis.push_back(std::move(vec));
    }
    std::vector<std::vector<Rational>> m = span.basis;
    span.dimension = row_reduce(m).size();
    return span;
}

bool ideal_contains(const IdealSpan& span, const std::vector<Rational>& vec) {
    if (vec.size() != span.ambient) {
        throw std::invalid_argument("vector length does not match the partition basis");
    }
    std::vector<std::vector<Rational>> m = span.basis;
    std::size_t base_rank = row_reduce(m).size();
    std::vector<std::vector<Rational>> extended = span.basis;
    extended.push_back(vec);
    std::size_t extended_rank = row_reduce(extended).size();
    return extended_rank == base_rank;
}

// ---------------------------------------------------------------------------
// BordismModel

BordismModel::BordismModel(PiModel pi, int k, BordismVariant variant)
    : pi_(pi), k_(k), variant_(variant) {
    if (pi.g < 0) fail(ErrorKind::DegreeOutOfRange, "pi rank must be nonnegative");
    if (k < 0) fail(ErrorKind::DegreeOutOfRange, "bordism degree must be nonnegative");
    if (variant_ == BordismVariant::Oriented && k % 2 != 0) {
        fail(ErrorKind::UnsupportedDimension,
             "the oriented model needs an even degree (torus factors are even-dimensional)");
    }
    torus_ = abelian_variety(pi.g);

    int label_step = variant_ == BordismVariant::Unitary ? 2 : 4;
    int degree_budget = variant_ == BordismVariant::Unitary ? 2 * k_ : k_;
    for (uint32_t i = 0; i < torus_.algebra->basis_size(); ++i) {
        int d = torus_.algebra->degree_of(i);
        if (d % 2 != 0 || d > degree_budget) continue;
        if ((degree_budget - d) % label_step != 0) continue;
        labels_.push_back(torus_.algebra->monomial_name(i));
        int fiber_weight = (degree_budget - d) / label_step;
        for (const Partition& p : unitary_basis(fiber_weight)) {
            generators_.push_back(BordismGenerator{labels_.back(), p});
        }
    }
}

VarietyModel BordismModel::representative(std::size_t gen_index) const {
    if (gen_index >= generators_.size()) {
        throw std::out_of_range("generator index out of range");
    }
    const BordismGenerator& gen = generators_[gen_index];

    // coordinate subtorus carrying the label, with the global generator names
    std::vector<std::string> letters;
    if (gen.label != "1") {
        std::size_t start = 0;
        while (start <= gen.label.size()) {
            std::size_t star = gen.label.find('*', start);
            letters.push_back(gen.label.substr(
                start, star == std::string::npos ? std::string::npos : star - start));
            if (star == std::string::npos) break;
            start = star + 1;
        }
    }
    VarietyModel torus_part = abelian_variety_named(letters);

    Partition fiber = gen.fiber;
    if (variant_ == BordismVariant::Oriented) {
        for (int& part : fiber) part *= 2;
    }
    return product(torus_part, partition_variety(fiber));
}

GenusSpec BordismModel::genus() const {
    int order = variant_ == BordismVariant::Unitary ? std::max(k_, 1) : std::max(k_, 2);
    return variant_ == BordismVariant::Unitary ? GenusSpec::todd(order) : GenusSpec::l(order);
}

Rational BordismModel::pairing(std::size_t gen_index, const std::string& x_label) const {
    VarietyModel rep = representative(gen_index);
    std::string label = x_label.empty() ? "1" : x_label;
    if (!rep.find_pi(label)) return 0;  // u* kills classes off the subtorus
    return higher_genus(rep, genus(), label);
}

GenusFunctional BordismModel::functional_from_class(const CohomologyClass& x) const {
    for (const auto& [label, coeff] : x.terms) {
        if (std::find(labels_.begin(), labels_.end(), label) == labels_.end()) {
            fail(ErrorKind::UnknownPiClass,
                 "'" + label + "' is not a label of the bordism model");
        }
    }
    GenusFunctional xi;
    xi.values.reserve(generators_.size());
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        Rational acc = 0;
        for (const auto& [label, coeff] : x.terms) acc += coeff * pairing(i, label);
        xi.values.push_back(acc);
    }
    return xi;
}

GenusFunctional BordismModel::todd_functional_values() const {
    GenusFunctional xi;
    xi.values.reserve(generators_.size());
    for (const BordismGenerator& gen : generators_) {
        xi.values.push_back(todd_functional(gen.fiber));
    }
    return xi;
}

Rational apply(const GenusFunctional& xi, const BordismElement& e) {
    Rational acc = 0;
    for (const auto& [coeff, index] : e.terms) acc += coeff * xi.values.at(index);
    return acc;
}

std::optional<InvarianceWitness> invariance_witness(const BordismModel& model,
                                                    const GenusFunctional& xi) {
    const auto& gens = model.generators();
    if (xi.values.size() != gens.size()) {
        throw std::invalid_argument("functional has the wrong number of values");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size() && gens[j].label == gens[i].label; ++j) {
            if (xi.values[i] != xi.values[j]) {
                return InvarianceWitness{gens[i].label, gens[i].fiber, gens[j].fiber};
            }
        }
    }
    return std::nullopt;
}

bool is_invariant(const BordismModel& model, const GenusFunctional& xi) {
    return !invariance_witness(model, xi).has_value();
}

CohomologyClass decompose_functional(const BordismModel& model, const GenusFunctional& xi) {
    if (auto witness = invariance_witness(model, xi)) {
        fail(ErrorKind::NotInvariant,
             "functional is not a birational invariant: label " + witness->label +
                 " separates fibers " + partition_to_string(witness->fiber_a) + " and " +
                 partition_to_string(witness->fiber_b));
    }

    const auto& labels = model.labels();
    const auto& gens = model.generators();
    std::size_t rows = gens.size();
    std::size_t cols = labels.size();

    // augmented matrix of <Q(rep) * u*(label), [rep]> = xi(rep)
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = model.pairing(r, labels[c]);
        m[r][cols] = xi.values[r];
    }
    std::vector<std::size_t> pivots = row_reduce(m);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) {
            // invariance makes the system consistent; anything else is a bug
            throw std::logic_error("invariant functional produced an inconsistent system");
        }
    }

    // minimal support: free columns stay zero, pivot columns read off the rhs
    std::vector<Rational> solution(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) solution[pivots[r]] = m[r][cols];

    CohomologyClass x;
    for (std::size_t c = 0; c < cols; ++c) {
        if (solution[c] != 0) x.terms.emplace_back(labels[c], solution[c]);
    }

    GenusFunctional check = model.functional_from_class(x);
    if (check.values != xi.values) {
        throw std::logic_error("decomposition does not reproduce the functional");
    }
    return x;
}

} // namespace genera
