#pragma once

#include "genera/algebra.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace genera {

struct GenusSpec;

/// A model variety: a graded ring with fundamental class, a total Chern
/// class, and an ordered list of designated (group-cohomology) classes keyed
/// by canonical labels ("1", "x1", "x1*x2", ...).
struct VarietyModel {
    std::string name;
    int dim = 0;  // complex dimension; top degree is 2*dim
    AlgebraPtr algebra;
    Element total_chern;
    std::vector<std::pair<std::string, Element>> pi_classes;

    const Element* find_pi(const std::string& label) const;
    /// Chern component c_i.
    Element chern(int i) const;
    /// Alternating sum of basis dimensions.
    Rational euler_alternating() const;
    /// <c_dim, [V]>.
    Rational euler_number() const;

    /// Checks the structural invariants; throws InvalidPresentation on
    /// violation. Builders call this on everything they return.
    void validate() const;
};

/// P^n with H* = Q[h]/(h^{n+1}); no designated classes.
VarietyModel projective_space(int n, const std::string& gen_name = "h");

/// Abelian variety of complex dimension g: exterior algebra on 2g degree-1
/// classes x<first>, ..., x<first+2g-1>; every basis monomial is designated.
/// Total Chern class is 1 (trivial tangent bundle).
VarietyModel abelian_variety(int g, int first_index = 1);

/// Same, with explicit degree-1 generator names (even count required).
VarietyModel abelian_variety_named(const std::vector<std::string>& gen_names);

/// Product: graded tensor of the rings, product Chern class, designated
/// classes multiplied labelwise.
VarietyModel product(const VarietyModel& a, const VarietyModel& b);

/// A blow-up paired with its base; the label map is the transport of
/// designated classes (identity on labels here).
struct BlowupPair {
    VarietyModel base;
    VarietyModel blown;
    std::map<std::string, std::string> label_map;
};

/// Blow-up of a surface at a point: adds a degree-2 class z with
/// z^2 = -[pt]^dual, z * (other generators) = 0; c1 += z, c2 -= z^2.
/// Throws UnsupportedDimension unless dim == 2. A nonempty class_name
/// names the exceptional class; by default the first free z, z2, ...
BlowupPair blow_up_point(const VarietyModel& v, const std::string& class_name = "");

struct InvarianceRow {
    std::string label;
    Rational base_value;
    Rational blown_value;
    bool equal = false;
};

struct InvarianceReport {
    std::vector<InvarianceRow> rows;
    bool pass = false;
};

/// Compares the higher genus over every designated class (plus the unit)
/// between base and blow-up. Throws TransportError when the label map is
/// not a bijection onto the blown-up variety's designated classes.
InvarianceReport verify_blowup_invariance(const BlowupPair& pair, const GenusSpec& genus);

struct ChernComparison {
    std::vector<std::pair<int, bool>> chern_equal;       // weight -> equality
    std::vector<std::pair<int, bool>> todd_equal;        // weight -> equality
    bool euler_equal = false;
    bool p1_equal = false;
    std::vector<std::pair<std::string, bool>> higher_todd_equal;
    std::vector<std::string> notes;  // low-dimension deductions
    bool all_equal = false;
};

/// Compares Chern data of two models of equal dimension under a generator
/// correspondence (source name -> target name), which must induce a graded
/// ring isomorphism matching the designated classes shared by name. Throws
/// CorrespondenceError otherwise.
ChernComparison compare_chern_reports(const VarietyModel& a, const VarietyModel& b,
                                      const std::map<std::string, std::string>& correspondence);

/// Canonicalizes a label: splits on '*', resolves generator names, sorts by
/// generator index. "1" (or "") names the unit. Throws UnknownPiClass for
/// unknown generator names.
std::string normalize_label(const VarietyModel& v, const std::string& label);

} // namespace genera
