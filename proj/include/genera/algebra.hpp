#pragma once

#include "genera/errors.hpp"
#include "genera/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace genera {

/// A normalized monomial: generator indices, weakly ascending, one entry per
/// power. The empty word is the unit.
using Monomial = std::vector<uint32_t>;

struct Generator {
    enum class Kind {
        Exterior,   // odd degree, squares to zero
        Truncated,  // even degree, g^truncation = 0
        Table,      // products against other generators listed explicitly
    };

    std::string name;
    int degree = 0;
    Kind kind = Kind::Exterior;
    int truncation = 0;  // Truncated only: exponent at which the power vanishes
};

/// One rhs term of a table relation, written over generator names.
struct TableTerm {
    Rational coeff;
    std::vector<std::string> word;
};

/// Declares a * b = sum of terms. Unordered in a, b; both orientations are
/// derived with the graded sign.
struct TableRelation {
    std::string a;
    std::string b;
    std::vector<TableTerm> rhs;
};

/// Degree cap on a contiguous block of generators. Tensor factors keep their
/// own top degree this way; words exceeding a cap are zero.
struct SectorCap {
    uint32_t first = 0;  // generator index range [first, last)
    uint32_t last = 0;
    int cap = 0;
};

inline constexpr std::size_t kDefaultBasisLimit = 100000;

/// Presentation accepted by GradedAlgebra::build.
struct AlgebraSpec {
    std::vector<Generator> generators;
    std::vector<TableRelation> table;
    int top_degree = 0;
    /// Distinguished top-degree basis monomial, as a word of generator names.
    std::optional<std::vector<std::string>> fundamental;
    /// Extra per-block truncation; the whole range gets top_degree implicitly.
    std::vector<SectorCap> sectors;
    std::size_t basis_limit = kDefaultBasisLimit;
};

class Element;
class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Finite-dimensional graded-commutative algebra over the rationals with a
/// distinguished monomial basis. Immutable once built; elements keep a
/// shared pointer to their algebra.
class GradedAlgebra : public std::enable_shared_from_this<GradedAlgebra> {
public:
    /// Validates the presentation, enumerates the basis, and checks the
    /// algebra laws (exhaustively for small bases). Throws DomainError with
    /// kind InvalidPresentation or TooLarge.
    static AlgebraPtr build(const AlgebraSpec& spec);

    /// Graded tensor product. Generator names must be disjoint; either both
    /// factors carry a fundamental class or neither does.
    static AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b);

    std::size_t basis_size() const { return basis_.size(); }
    const Monomial& basis_monomial(uint32_t index) const { return basis_[index]; }
    int degree_of(uint32_t index) const { return degrees_[index]; }
    int top_degree() const { return spec_.top_degree; }
    std::optional<uint32_t> fundamental_index() const { return fundamental_; }
    const std::vector<Generator>& generators() const { return spec_.generators; }
    const AlgebraSpec& presentation() const { return spec_; }

    std::optional<uint32_t> find_monomial(const Monomial& word) const;
    std::optional<uint32_t> find_generator(const std::string& name) const;

    /// All basis indices of the given degree, ascending.
    std::vector<uint32_t> basis_of_degree(int degree) const;

    /// Product of two basis monomials, expanded over the basis.
    Element basis_product(uint32_t i, uint32_t j) const;

    /// Adds coeff * (basis[i] * basis[j]) into a sparse accumulator.
    void accumulate_product(uint32_t i, uint32_t j, const Rational& coeff,
                            std::map<uint32_t, Rational>& acc) const;

    std::string monomial_name(uint32_t index) const;

    Element zero() const;
    Element unit() const;
    Element basis_element(uint32_t index) const;
    /// Generator as an element; name must exist.
    Element generator_element(const std::string& name) const;

private:
    GradedAlgebra() = default;

    using SparseCombo = std::map<uint32_t, Rational>;
    using TableKey = std::pair<uint32_t, uint32_t>;  // ascending generator indices
    using TableValue = std::vector<std::pair<Rational, Monomial>>;

    void enumerate_basis();
    void validate_laws() const;
    bool word_in_bounds(const Monomial& word) const;
    bool word_reducible(const Monomial& word) const;
    int word_degree(const Monomial& word) const;

    /// Appends sign * (a * b) to acc, rewriting through the table.
    void mul_words_into(const Monomial& a, const Monomial& b, const Rational& sign,
                        SparseCombo& acc, int depth) const;
    void normalize_into(Monomial word, Rational sign, SparseCombo& acc, int depth) const;

    friend class Element;

    AlgebraSpec spec_;
    std::vector<SectorCap> sectors_;  // spec_.sectors plus the global cap
    std::map<TableKey, TableValue> table_;
    std::vector<Monomial> basis_;            // sorted by (degree, word)
    std::vector<int> degrees_;               // degree per basis index
    std::map<Monomial, uint32_t> index_of_;  // inverse of basis_
    std::optional<uint32_t> fundamental_;
};

/// Element of a GradedAlgebra: sparse rational combination of basis
/// monomials. Value type; arithmetic between different algebras throws
/// AlgebraMismatch.
class Element {
public:
    Element() = default;
    explicit Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

    const AlgebraPtr& algebra() const { return algebra_; }
    bool attached() const { return algebra_ != nullptr; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<uint32_t, Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(uint32_t index) const;

    /// Homogeneous part in the given cohomological degree.
    Element component(int degree) const;
    /// Coefficient of the fundamental monomial. Throws NoFundamentalClass.
    Rational pair_top() const;
    /// True when all terms sit in one degree (the zero element is
    /// homogeneous of every degree).
    bool is_homogeneous(int degree) const;
    int max_degree() const;  // -1 for zero

    Element operator-() const;
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Rational& scalar);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Rational& s) { return a *= s; }
    friend Element operator*(const Rational& s, Element a) { return a *= s; }
    friend Element operator*(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// Deterministic rendering: terms by ascending basis index, e.g.
    /// "2*y + z" or "-1/2*x1*x2". Zero renders as "0".
    std::string to_string() const;

    void add_term(uint32_t index, const Rational& coeff);

private:
    friend class GradedAlgebra;

    AlgebraPtr algebra_;
    std::map<uint32_t, Rational> coeffs_;
};

// Free-function spellings of the element operations.
Element add(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element scale(const Element& a, const Rational& s);
Element component(const Element& a, int degree);
Rational pair_top(const Element& a);

/// Maps an element into another algebra by renaming generators
/// monomial-by-monomial. gen_map sends source generator names to target
/// names; unmapped names carry over unchanged. Throws TransportError when a
/// generator or image monomial is missing.
Element transport(const Element& e, const AlgebraPtr& target,
                  const std::map<std::string, std::string>& gen_map = {});

AlgebraPtr build_algebra(const AlgebraSpec& spec);

} // namespace genera
