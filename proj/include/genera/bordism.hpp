#pragma once

#include "genera/rational.hpp"
#include "genera/varieties.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace genera {

struct GenusSpec;

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// All partitions of k in reverse-lexicographic order: (k) first, (1,...,1)
/// last. k = 0 gives the empty partition.
std::vector<Partition> unitary_basis(int k);

std::string partition_to_string(const Partition& p);

/// Concatenation of partitions, re-sorted to canonical form.
Partition concat_partitions(const Partition& a, const Partition& b);

/// Product of projective spaces P(j_1) x ... x P(j_r) for the partition.
VarietyModel partition_variety(const Partition& p);

/// Todd genus of partition_variety(p), computed through the genus machinery
/// (it always comes out 1).
Rational todd_functional(const Partition& p);

/// Linear extension over a weighted combination of partitions.
Rational todd_functional(const std::vector<std::pair<Rational, Partition>>& combo);

/// The span of all differences of partitions of weight k inside the
/// partition basis.
struct IdealSpan {
    int k = 0;
    /// Coefficient vectors over unitary_basis(k), one basis difference each.
    std::vector<std::vector<Rational>> basis;
    std::size_t dimension = 0;  // exact rank of the span
    std::size_t ambient = 0;    // p(k)
};

/// Differences of partitions of k (all mutually birational in the model);
/// dimension is computed by exact elimination. Requires k >= 1.
IdealSpan birational_ideal_span(int k);

/// Exact membership test against the span.
bool ideal_contains(const IdealSpan& span, const std::vector<Rational>& vec);

/// pi = Z^{2g}; Unitary pairs even homology of the torus with products of
/// P(j_i), Oriented with products of P(2j_i) and the signature.
struct PiModel {
    int g = 0;
};

enum class BordismVariant { Unitary, Oriented };

struct BordismGenerator {
    std::string label;  // even-degree exterior monomial of H*(T^{2g}), "1" for the unit
    Partition fiber;
};

/// Weighted combination of generators of one BordismModel, by index.
struct BordismElement {
    std::vector<std::pair<Rational, std::size_t>> terms;
};

/// Values of a linear functional on the generator basis, aligned with
/// BordismModel::generators().
struct GenusFunctional {
    std::vector<Rational> values;
};

struct CohomologyClass {
    /// label -> coefficient, ordered by the model's label list; zero entries
    /// dropped.
    std::vector<std::pair<std::string, Rational>> terms;
};

struct InvarianceWitness {
    std::string label;
    Partition fiber_a;
    Partition fiber_b;
};

/// Desk model of the degree-2k rational bordism of B Z^{2g} (Unitary), or of
/// the degree-k oriented variant (k even). Generators pair an even torus
/// homology class with a fiber partition; representatives are abelian
/// varieties times products of projective spaces.
class BordismModel {
public:
    BordismModel(PiModel pi, int k, BordismVariant variant = BordismVariant::Unitary);

    int g() const { return pi_.g; }
    int k() const { return k_; }
    BordismVariant variant() const { return variant_; }

    const std::vector<BordismGenerator>& generators() const { return generators_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Model variety representing a generator: the coordinate subtorus of
    /// the label times the fiber's projective spaces.
    VarietyModel representative(std::size_t gen_index) const;

    /// <Q(rep) * u*(label), [rep]> via the genus machinery; Q is Todd for
    /// the unitary model, L for the oriented one.
    Rational pairing(std::size_t gen_index, const std::string& x_label) const;

    /// xi induced by a cohomology class: xi(gen) = sum of pairings.
    GenusFunctional functional_from_class(const CohomologyClass& x) const;

    /// The label-independent Todd functional (fiber Todd genus per generator).
    GenusFunctional todd_functional_values() const;

    GenusSpec genus() const;

private:
    PiModel pi_;
    int k_ = 0;
    BordismVariant variant_ = BordismVariant::Unitary;
    VarietyModel torus_;  // A(g), the label universe
    std::vector<std::string> labels_;
    std::vector<BordismGenerator> generators_;
};

Rational apply(const GenusFunctional& xi, const BordismElement& e);

/// Witness of non-invariance: two generators with the same label where xi
/// differs; nullopt when invariant.
std::optional<InvarianceWitness> invariance_witness(const BordismModel& model,
                                                    const GenusFunctional& xi);

bool is_invariant(const BordismModel& model, const GenusFunctional& xi);

/// Solves for x with functional_from_class(x) = xi by exact elimination;
/// minimal support under the label order. Throws NotInvariant (with the
/// witness in the message) when is_invariant fails.
CohomologyClass decompose_functional(const BordismModel& model, const GenusFunctional& xi);

} // namespace genera
