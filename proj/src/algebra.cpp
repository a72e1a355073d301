#include "genera/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>
#include <sstream>

namespace genera {

namespace {

constexpr int kMaxRewriteDepth = 64;
constexpr std::size_t kPairCheckLimit = 128;    // exhaustive commutativity up to this basis size
constexpr std::size_t kTripleCheckLimit = 32;   // exhaustive associativity up to this basis size

std::size_t effective_basis_limit(std::size_t requested) {
    if (const char* env = std::getenv("GENERA_BASIS_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return requested;
}

// Merges two ascending words, returning the Koszul sign: each time a letter
// of b passes a strictly larger-indexed letter of a, odd*odd contributes -1.
int merge_words(const std::vector<Generator>& gens, const Monomial& a, const Monomial& b,
                Monomial& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    int parity = 0;
    // odd_suffix[i] = number of odd-degree letters in a[i..)
    std::vector<int> odd_suffix(a.size() + 1, 0);
    for (std::size_t k = a.size(); k-- > 0;) {
        odd_suffix[k] = odd_suffix[k + 1] + (gens[a[k]].degree % 2 != 0 ? 1 : 0);
    }
    for (uint32_t letter : b) {
        while (i < a.size() && a[i] <= letter) {
            out.push_back(a[i]);
            ++i;
        }
        if (gens[letter].degree % 2 != 0) parity ^= (odd_suffix[i] & 1);
        out.push_back(letter);
    }
    while (i < a.size()) {
        out.push_back(a[i]);
        ++i;
    }
    return parity ? -1 : 1;
}

// Sorts a word of generator indices, tracking the Koszul sign; returns 0 for
// an identically zero word (odd letter repeated).
int sort_word(const std::vector<Generator>& gens, Monomial& word) {
    int sign = 1;
    for (std::size_t i = 1; i < word.size(); ++i) {
        for (std::size_t j = i; j > 0 && word[j] < word[j - 1]; --j) {
            bool odd_a = gens[word[j - 1]].degree % 2 != 0;
            bool odd_b = gens[word[j]].degree % 2 != 0;
            if (odd_a && odd_b) sign = -sign;
            std::swap(word[j], word[j - 1]);
        }
    }
    for (std::size_t i = 1; i < word.size(); ++i) {
        if (word[i] == word[i - 1] && gens[word[i]].degree % 2 != 0) return 0;
    }
    return sign;
}

} // namespace

// ---------------------------------------------------------------------------
// GradedAlgebra

AlgebraPtr GradedAlgebra::build(const AlgebraSpec& spec) {
    auto alg = std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
    alg->spec_ = spec;
    alg->spec_.basis_limit = effective_basis_limit(spec.basis_limit);

    const auto& gens = alg->spec_.generators;
    if (alg->spec_.top_degree < 0) {
        fail(ErrorKind::InvalidPresentation, "top degree must be nonnegative");
    }

    std::set<std::string> names;
    for (uint32_t i = 0; i < gens.size(); ++i) {
        const Generator& g = gens[i];
        if (g.name.empty()) {
            fail(ErrorKind::InvalidPresentation, "generator with empty name");
        }
        if (!names.insert(g.name).second) {
            fail(ErrorKind::InvalidPresentation, "duplicate generator name '" + g.name + "'");
        }
        if (g.degree < 1) {
            fail(ErrorKind::InvalidPresentation,
                 "generator '" + g.name + "' must have positive degree");
        }
        switch (g.kind) {
            case Generator::Kind::Exterior:
                if (g.degree % 2 == 0) {
                    fail(ErrorKind::InvalidPresentation,
                         "exterior generator '" + g.name + "' must have odd degree");
                }
                break;
            case Generator::Kind::Truncated:
                if (g.degree % 2 != 0) {
                    fail(ErrorKind::InvalidPresentation,
                         "truncated generator '" + g.name + "' must have even degree");
                }
                if (g.truncation < 1) {
                    fail(ErrorKind::InvalidPresentation,
                         "truncated generator '" + g.name + "' needs truncation >= 1");
                }
                break;
            case Generator::Kind::Table:
                break;
        }
    }

    for (const SectorCap& s : alg->spec_.sectors) {
        if (s.first > s.last || s.last > gens.size() || s.cap < 0) {
            fail(ErrorKind::InvalidPresentation, "malformed sector cap");
        }
    }
    alg->sectors_ = alg->spec_.sectors;
    alg->sectors_.push_back(SectorCap{0, static_cast<uint32_t>(gens.size()), alg->spec_.top_degree});

    // Normalize the table: ascending index keys, sorted and bounds-checked rhs.
    for (const TableRelation& rel : alg->spec_.table) {
        auto ia = alg->find_generator(rel.a);
        auto ib = alg->find_generator(rel.b);
        if (!ia || !ib) {
            fail(ErrorKind::InvalidPresentation,
                 "table relation on unknown generator '" + (ia ? rel.b : rel.a) + "'");
        }
        uint32_t lo = std::min(*ia, *ib);
        uint32_t hi = std::max(*ia, *ib);
        int swap_sign = 1;
        if (*ia > *ib && gens[*ia].degree % 2 != 0 && gens[*ib].degree % 2 != 0) {
            swap_sign = -1;
        }
        int lhs_degree = gens[lo].degree + gens[hi].degree;
        if (lo == hi && gens[lo].degree % 2 != 0) {
            // Odd squares vanish identically; a nonzero declared square is a
            // sign inconsistency.
            bool all_zero = true;
            for (const TableTerm& t : rel.rhs) {
                if (t.coeff != 0) all_zero = false;
            }
            if (!all_zero) {
                fail(ErrorKind::InvalidPresentation,
                     "odd generator '" + rel.a + "' cannot have a nonzero square");
            }
        }

        TableValue value;
        for (const TableTerm& term : rel.rhs) {
            if (term.coeff == 0) continue;
            Monomial word;
            word.reserve(term.word.size());
            int degree = 0;
            for (const std::string& name : term.word) {
                auto idx = alg->find_generator(name);
                if (!idx) {
                    fail(ErrorKind::InvalidPresentation,
                         "table rhs uses unknown generator '" + name + "'");
                }
                word.push_back(*idx);
                degree += gens[*idx].degree;
            }
            if (degree != lhs_degree) {
                fail(ErrorKind::InvalidPresentation,
                     "table relation " + rel.a + "*" + rel.b + " is not degree-homogeneous");
            }
            int sign = sort_word(gens, word);
            if (sign == 0) continue;
            Rational c = term.coeff * sign * swap_sign;
            // fold duplicate monomials
            bool merged = false;
            for (auto& [coeff, existing] : value) {
                if (existing == word) {
                    coeff += c;
                    merged = true;
                    break;
                }
            }
            if (!merged) value.emplace_back(c, word);
        }
        std::erase_if(value, [](const auto& p) { return p.first == 0; });
        std::sort(value.begin(), value.end(),
                  [](const auto& x, const auto& y) { return x.second < y.second; });

        auto [it, inserted] = alg->table_.try_emplace(TableKey{lo, hi}, value);
        if (!inserted && it->second != value) {
            fail(ErrorKind::InvalidPresentation,
                 "contradictory table relations for " + gens[lo].name + "*" + gens[hi].name);
        }
    }

    alg->enumerate_basis();

    // Normalize and re-check the fundamental word against the final basis.
    if (alg->spec_.fundamental) {
        Monomial word;
        for (const std::string& name : *alg->spec_.fundamental) {
            auto idx = alg->find_generator(name);
            if (!idx) {
                fail(ErrorKind::InvalidPresentation,
                     "fundamental word uses unknown generator '" + name + "'");
            }
            word.push_back(*idx);
        }
        if (sort_word(gens, word) == 0) {
            fail(ErrorKind::InvalidPresentation, "fundamental word vanishes");
        }
        auto idx = alg->find_monomial(word);
        if (!idx) {
            fail(ErrorKind::InvalidPresentation, "fundamental word is not a basis monomial");
        }
        if (alg->degrees_[*idx] != alg->spec_.top_degree) {
            fail(ErrorKind::InvalidPresentation, "fundamental monomial is not of top degree");
        }
        alg->fundamental_ = *idx;
    }

    alg->validate_laws();
    return alg;
}

void GradedAlgebra::enumerate_basis() {
    const auto& gens = spec_.generators;
    std::vector<int> caps(gens.size(), 0);
    for (uint32_t i = 0; i < gens.size(); ++i) {
        const Generator& g = gens[i];
        switch (g.kind) {
            case Generator::Kind::Exterior:
                caps[i] = 1;
                break;
            case Generator::Kind::Truncated:
                caps[i] = g.truncation - 1;
                break;
            case Generator::Kind::Table:
                if (g.degree % 2 != 0) {
                    caps[i] = 1;
                } else if (table_.count({i, i})) {
                    caps[i] = 1;
                } else {
                    caps[i] = spec_.top_degree / g.degree;
                }
                break;
        }
        caps[i] = std::min(caps[i], g.degree > 0 ? spec_.top_degree / g.degree : 0);
    }

    Monomial word;
    auto sector_ok = [&]() {
        for (const SectorCap& s : sectors_) {
            int within = 0;
            for (uint32_t letter : word) {
                if (letter >= s.first && letter < s.last) within += gens[letter].degree;
            }
            if (within > s.cap) return false;
        }
        return true;
    };
    auto emit = [&](auto&& self, uint32_t gen, int degree) -> void {
        if (gen == gens.size()) {
            if (!word_reducible(word)) {
                if (basis_.size() >= spec_.basis_limit) {
                    fail(ErrorKind::TooLarge,
                         "basis exceeds limit of " + std::to_string(spec_.basis_limit) +
                             " monomials (override with GENERA_BASIS_LIMIT)");
                }
                basis_.push_back(word);
            }
            return;
        }
        self(self, gen + 1, degree);
        int d = degree;
        for (int e = 1; e <= caps[gen]; ++e) {
            d += gens[gen].degree;
            if (d > spec_.top_degree) break;
            word.push_back(gen);
            if (!sector_ok()) break;
            self(self, gen + 1, d);
        }
        while (!word.empty() && word.back() == gen) word.pop_back();
    };
    emit(emit, 0, 0);

    std::sort(basis_.begin(), basis_.end(), [&](const Monomial& x, const Monomial& y) {
        int dx = word_degree(x);
        int dy = word_degree(y);
        if (dx != dy) return dx < dy;
        return x < y;
    });
    degrees_.reserve(basis_.size());
    for (uint32_t i = 0; i < basis_.size(); ++i) {
        degrees_.push_back(word_degree(basis_[i]));
        index_of_[basis_[i]] = i;
    }
    assert(!basis_.empty() && basis_[0].empty());
}

int GradedAlgebra::word_degree(const Monomial& word) const {
    int d = 0;
    for (uint32_t letter : word) d += spec_.generators[letter].degree;
    return d;
}

bool GradedAlgebra::word_in_bounds(const Monomial& word) const {
    for (const SectorCap& s : sectors_) {
        int within = 0;
        for (uint32_t letter : word) {
            if (letter >= s.first && letter < s.last) within += spec_.generators[letter].degree;
        }
        if (within > s.cap) return false;
    }
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        int exponent = static_cast<int>(j - i);
        const Generator& g = spec_.generators[word[i]];
        if (g.degree % 2 != 0 && exponent >= 2) return false;
        if (g.kind == Generator::Kind::Truncated && exponent >= g.truncation) return false;
        i = j;
    }
    return true;
}

bool GradedAlgebra::word_reducible(const Monomial& word) const {
    for (std::size_t i = 0; i < word.size(); ++i) {
        for (std::size_t j = i + 1; j < word.size(); ++j) {
            if (table_.count({word[i], word[j]})) return true;
        }
    }
    return false;
}

void GradedAlgebra::normalize_into(Monomial word, Rational sign, SparseCombo& acc,
                                   int depth) const {
    if (depth > kMaxRewriteDepth) {
        fail(ErrorKind::InvalidPresentation, "table rewriting does not terminate");
    }
    if (sign == 0) return;
    if (!word_in_bounds(word)) return;

    // leftmost reducible pair
    for (std::size_t p = 0; p < word.size(); ++p) {
        for (std::size_t q = p + 1; q < word.size(); ++q) {
            auto it = table_.find({word[p], word[q]});
            if (it == table_.end()) continue;

            const auto& gens = spec_.generators;
            // Sign for extracting positions p then q to the front.
            int pre_p = 0;
            for (std::size_t i = 0; i < p; ++i) pre_p += gens[word[i]].degree;
            int pre_q = 0;
            for (std::size_t i = 0; i < q; ++i) pre_q += gens[word[i]].degree;
            int exponent = gens[word[p]].degree * pre_p +
                           gens[word[q]].degree * (pre_q - gens[word[p]].degree);
            Rational moved = (exponent % 2 != 0) ? -sign : sign;

            Monomial rest;
            rest.reserve(word.size() - 2);
            for (std::size_t i = 0; i < word.size(); ++i) {
                if (i != p && i != q) rest.push_back(word[i]);
            }
            for (const auto& [coeff, rhs_word] : it->second) {
                Monomial merged;
                int merge_sign = merge_words(gens, rhs_word, rest, merged);
                normalize_into(std::move(merged), moved * coeff * merge_sign, acc, depth + 1);
            }
            return;
        }
    }

    auto idx = find_monomial(word);
    if (!idx) {
        // In-bounds irreducible words are basis monomials by construction.
        fail(ErrorKind::InvalidPresentation, "irreducible word missing from basis");
    }
    auto [it, inserted] = acc.try_emplace(*idx, sign);
    if (!inserted) {
        it->second += sign;
        if (it->second == 0) acc.erase(it);
    }
}

void GradedAlgebra::mul_words_into(const Monomial& a, const Monomial& b, const Rational& sign,
                                   SparseCombo& acc, int depth) const {
    Monomial merged;
    int merge_sign = merge_words(spec_.generators, a, b, merged);
    normalize_into(std::move(merged), sign * merge_sign, acc, depth);
}

Element GradedAlgebra::basis_product(uint32_t i, uint32_t j) const {
    Element result(shared_from_this());
    SparseCombo acc;
    mul_words_into(basis_[i], basis_[j], 1, acc, 0);
    result.coeffs_ = std::move(acc);
    return result;
}

void GradedAlgebra::accumulate_product(uint32_t i, uint32_t j, const Rational& coeff,
                                       std::map<uint32_t, Rational>& acc) const {
    if (coeff == 0) return;
    mul_words_into(basis_[i], basis_[j], coeff, acc, 0);
}

void GradedAlgebra::validate_laws() const {
    std::size_t n = basis_.size();
    if (n > kPairCheckLimit) return;

    // graded commutativity on basis pairs
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i; j < n; ++j) {
            Element ab = basis_product(i, j);
            Element ba = basis_product(j, i);
            int sign = (degrees_[i] % 2 != 0 && degrees_[j] % 2 != 0) ? -1 : 1;
            if (ab != ba * Rational(sign)) {
                fail(ErrorKind::InvalidPresentation,
                     "table is not graded-commutative on " + monomial_name(i) + ", " +
                         monomial_name(j));
            }
        }
    }
    if (n > kTripleCheckLimit) return;
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) {
            Element ij = basis_product(i, j);
            for (uint32_t k = 0; k < n; ++k) {
                Element left = ij * basis_element(k);
                Element right = basis_element(i) * basis_product(j, k);
                if (left != right) {
                    fail(ErrorKind::InvalidPresentation,
                         "table is not associative on " + monomial_name(i) + ", " +
                             monomial_name(j) + ", " + monomial_name(k));
                }
            }
        }
    }
}

AlgebraPtr GradedAlgebra::tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (!a || !b) throw std::invalid_argument("tensor of null algebra");
    const AlgebraSpec& sa = a->presentation();
    const AlgebraSpec& sb = b->presentation();
    if (sa.fundamental.has_value() != sb.fundamental.has_value()) {
        fail(ErrorKind::InvalidPresentation,
             "tensor factors must both have a fundamental class or neither");
    }
    std::set<std::string> names;
    for (const Generator& g : sa.generators) names.insert(g.name);
    for (const Generator& g : sb.generators) {
        if (names.count(g.name)) {
            fail(ErrorKind::InvalidPresentation,
                 "tensor factors share generator name '" + g.name + "'");
        }
    }

    AlgebraSpec spec;
    spec.generators = sa.generators;
    spec.generators.insert(spec.generators.end(), sb.generators.begin(), sb.generators.end());
    spec.table = sa.table;
    spec.table.insert(spec.table.end(), sb.table.begin(), sb.table.end());
    spec.top_degree = sa.top_degree + sb.top_degree;
    spec.basis_limit = std::min(sa.basis_limit, sb.basis_limit);

    uint32_t na = static_cast<uint32_t>(sa.generators.size());
    uint32_t nb = static_cast<uint32_t>(sb.generators.size());
    spec.sectors = sa.sectors;
    spec.sectors.push_back(SectorCap{0, na, sa.top_degree});
    for (const SectorCap& s : sb.sectors) {
        spec.sectors.push_back(SectorCap{s.first + na, s.last + na, s.cap});
    }
    spec.sectors.push_back(SectorCap{na, na + nb, sb.top_degree});

    if (sa.fundamental) {
        std::vector<std::string> word = *sa.fundamental;
        word.insert(word.end(), sb.fundamental->begin(), sb.fundamental->end());
        spec.fundamental = word;
    }
    return build(spec);
}

std::optional<uint32_t> GradedAlgebra::find_monomial(const Monomial& word) const {
    auto it = index_of_.find(word);
    if (it == index_of_.end()) return std::nullopt;
    return it->second;
}

std::optional<uint32_t> GradedAlgebra::find_generator(const std::string& name) const {
    for (uint32_t i = 0; i < spec_.generators.size(); ++i) {
        if (spec_.generators[i].name == name) return i;
    }
    return std::nullopt;
}

std::vector<uint32_t> GradedAlgebra::basis_of_degree(int degree) const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < basis_.size(); ++i) {
        if (degrees_[i] == degree) out.push_back(i);
    }
    return out;
}

std::string GradedAlgebra::monomial_name(uint32_t index) const {
    const Monomial& word = basis_[index];
    if (word.empty()) return "1";
    std::ostringstream os;
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        if (i > 0) os << "*";
        os << spec_.generators[word[i]].name;
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

Element GradedAlgebra::zero() const { return Element(shared_from_this()); }

Element GradedAlgebra::unit() const { return basis_element(0); }

Element GradedAlgebra::basis_element(uint32_t index) const {
    if (index >= basis_.size()) {
        fail(ErrorKind::DegreeOutOfRange, "basis index out of range");
    }
    Element e(shared_from_this());
    e.coeffs_[index] = 1;
    return e;
}

Element GradedAlgebra::generator_element(const std::string& name) const {
    auto gi = find_generator(name);
    if (!gi) {
        fail(ErrorKind::InvalidPresentation, "unknown generator '" + name + "'");
    }
    auto idx = find_monomial(Monomial{*gi});
    assert(idx);
    return basis_element(*idx);
}

// ---------------------------------------------------------------------------
// Element

namespace {

void require_same_algebra(const Element& a, const Element& b) {
    if (a.algebra() != b.algebra()) {
        fail(ErrorKind::AlgebraMismatch, "elements belong to different algebras");
    }
}

void require_attached(const Element& a) {
    if (!a.attached()) {
        fail(ErrorKind::AlgebraMismatch, "element has no algebra");
    }
}

} // namespace

Rational Element::coefficient(uint32_t index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Element Element::component(int degree) const {
    require_attached(*this);
    if (degree < 0 || degree > algebra_->top_degree()) {
        fail(ErrorKind::DegreeOutOfRange,
             "degree " + std::to_string(degree) + " outside [0, " +
                 std::to_string(algebra_->top_degree()) + "]");
    }
    Element out(algebra_);
    for (const auto& [idx, coeff] : coeffs_) {
        if (algebra_->degree_of(idx) == degree) out.coeffs_[idx] = coeff;
    }
    return out;
}

Rational Element::pair_top() const {
    require_attached(*this);
    auto fi = algebra_->fundamental_index();
    if (!fi) {
        fail(ErrorKind::NoFundamentalClass, "algebra has no fundamental class");
    }
    return coefficient(*fi);
}

bool Element::is_homogeneous(int degree) const {
    require_attached(*this);
    for (const auto& [idx, coeff] : coeffs_) {
        (void)coeff;
        if (algebra_->degree_of(idx) != degree) return false;
    }
    return true;
}

int Element::max_degree() const {
    require_attached(*this);
    int d = -1;
    for (const auto& [idx, coeff] : coeffs_) {
        (void)coeff;
        d = std::max(d, algebra_->degree_of(idx));
    }
    return d;
}

Element Element::operator-() const {
    Element out(*this);
    for (auto& [idx, coeff] : out.coeffs_) coeff = -coeff;
    return out;
}

Element& Element::operator+=(const Element& other) {
    require_same_algebra(*this, other);
    for (const auto& [idx, coeff] : other.coeffs_) add_term(idx, coeff);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    require_same_algebra(*this, other);
    for (const auto& [idx, coeff] : other.coeffs_) add_term(idx, -coeff);
    return *this;
}

Element& Element::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [idx, coeff] : coeffs_) coeff *= scalar;
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    require_same_algebra(a, b);
    require_attached(a);
    Element out(a.algebra_);
    for (const auto& [i, ci] : a.coeffs_) {
        for (const auto& [j, cj] : b.coeffs_) {
            a.algebra_->accumulate_product(i, j, ci * cj, out.coeffs_);
        }
    }
    std::erase_if(out.coeffs_, [](const auto& p) { return p.second == 0; });
    return out;
}

bool operator==(const Element& a, const Element& b) {
    if (a.algebra_ != b.algebra_) return false;
    return a.coeffs_ == b.coeffs_;
}

void Element::add_term(uint32_t index, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

std::string Element::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, coeff] : coeffs_) {
        Rational c = coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        std::string name = algebra_->monomial_name(idx);
        if (name == "1") {
            os << c.get_str();
        } else if (c == 1) {
            os << name;
        } else {
            os << c.get_str() << "*" << name;
        }
        first = false;
    }
    return os.str();
}

Element add(const Element& a, const Element& b) { return a + b; }
Element mul(const Element& a, const Element& b) { return a * b; }
Element scale(const Element& a, const Rational& s) { return a * s; }
Element component(const Element& a, int degree) { return a.component(degree); }
Rational pair_top(const Element& a) { return a.pair_top(); }

Element transport(const Element& e, const AlgebraPtr& target,
                  const std::map<std::string, std::string>& gen_map) {
    require_attached(e);
    if (!target) throw std::invalid_argument("transport to null algebra");
    const auto& source = e.algebra();
    if (source == target && gen_map.empty()) return e;

    std::vector<std::optional<uint32_t>> image(source->generators().size());
    for (uint32_t i = 0; i < source->generators().size(); ++i) {
        const std::string& name = source->generators()[i].name;
        auto mapped = gen_map.find(name);
        const std::string& target_name = mapped == gen_map.end() ? name : mapped->second;
        image[i] = target->find_generator(target_name);
        if (!image[i]) {
            fail(ErrorKind::TransportError,
                 "generator '" + name + "' has no image '" + target_name + "' in target algebra");
        }
        if (source->generators()[i].degree != target->generators()[*image[i]].degree) {
            fail(ErrorKind::TransportError,
                 "generator '" + name + "' changes degree under transport");
        }
    }

    Element out(target);
    for (const auto& [idx, coeff] : e.coefficients()) {
        Monomial word;
        word.reserve(source->basis_monomial(idx).size());
        for (uint32_t letter : source->basis_monomial(idx)) word.push_back(*image[letter]);
        int sign = sort_word(target->generators(), word);
        if (sign == 0) {
            fail(ErrorKind::TransportError,
                 "monomial " + source->monomial_name(idx) + " maps to zero");
        }
        auto target_idx = target->find_monomial(word);
        if (!target_idx) {
            fail(ErrorKind::TransportError,
                 "monomial " + source->monomial_name(idx) + " has no image in target basis");
        }
        out.add_term(*target_idx, coeff * sign);
    }
    return out;
}

AlgebraPtr build_algebra(const AlgebraSpec& spec) { return GradedAlgebra::build(spec); }

} // namespace genera
