#pragma once

#include "genera/algebra.hpp"
#include "genera/series.hpp"

#include <string>
#include <vector>

namespace genera {

struct VarietyModel;

/// Which characteristic classes the genus consumes.
enum class VariableKind { Chern, Pontrjagin };

/// A multiplicative genus: a characteristic power series Q with Q(0) = 1,
/// applied to Chern or Pontrjagin classes.
struct GenusSpec {
    std::string name;
    VariableKind kind = VariableKind::Chern;
    PowerSeries1 series;

    static GenusSpec todd(int order);
    static GenusSpec l(int order);
    static GenusSpec ahat(int order);
    /// "todd" | "l" | "ahat"; throws UsageError for other names.
    static GenusSpec by_name(const std::string& name, int order);

    /// Series at exactly the given order. Built-in names regenerate; a custom
    /// series is truncated, and raising its order throws DegreeOutOfRange.
    PowerSeries1 at_order(int order) const;
};

/// Ring of universal characteristic-class polynomials of weight <= n:
/// Q[c_1..c_n] with deg c_i = 2i (Chern) or Q[p_1..p_n] with deg p_i = 4i
/// (Pontrjagin), truncated above weight n.
AlgebraPtr universal_class_ring(VariableKind kind, int n);

/// Newton power sums s_1..s_n in universal_class_ring(Chern, n): the
/// polynomials expressing sum x_i^m through elementary symmetric functions.
std::vector<Element> newton_power_sums(int n);

/// Total characteristic class of the genus, evaluated on a total class
/// 1 + k_1 + k_2 + ... (k_i in degree 2i for Chern, 4i for Pontrjagin).
/// weight_bound caps the number of contributing weights; it is clamped to
/// the ring truncation. Throws NotATotalClass when the input has no unit
/// constant term or strays off the expected grading.
Element multiplicative_class(const GenusSpec& genus, const Element& total, int weight_bound);

/// Total Pontrjagin class of the stable tangent bundle from the total Chern
/// class, via p = c * c-bar with the signs of c-bar alternating.
/// weight_bound = -1 keeps every weight the ring supports.
Element chern_to_pontrjagin(const Element& total_chern, int weight_bound = -1);

/// The genus's characteristic class of the variety (Pontrjagin-kind genera
/// derive p from c first). weight_bound = -1 means the complex dimension.
Element genus_class_of(const VarietyModel& variety, const GenusSpec& genus,
                       int weight_bound = -1);

/// Genus of the variety: the characteristic class paired with the
/// fundamental class.
Rational genus_number(const VarietyModel& variety, const GenusSpec& genus);

/// Genus twisted by a designated class: <Q-class * x, [V]>. The label must
/// name a designated class of the variety; throws UnknownPiClass.
Rational higher_genus(const VarietyModel& variety, const GenusSpec& genus,
                      const std::string& x_label);

/// Evaluates a polynomial expression in Chern components (c0, c1, ...),
/// designated class labels, and rational literals, with operators + - * ^
/// and parentheses.
Element evaluate_class_expression(const VarietyModel& variety, const std::string& expression);

/// pair_top of the evaluated expression.
Rational char_number(const VarietyModel& variety, const std::string& expression);

} // namespace genera
