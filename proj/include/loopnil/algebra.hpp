#pragma once

#include "loopnil/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loopnil {

/// Generator of a free graded-commutative algebra. Parity (degree mod 2)
/// drives the Koszul sign rule; over F_2 parity is ignored.
struct GenSymbol {
    std::string name;
    int degree = 0;

    bool operator==(const GenSymbol&) const = default;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Immutable generator context shared by all polynomials of one algebra.
/// Generator order is declaration order and fixes the canonical monomial
/// normal form.
class Algebra {
public:
    static AlgebraPtr make(Field field, std::vector<GenSymbol> gens);

    const Field& field() const { return field_; }
    const std::vector<GenSymbol>& gens() const { return gens_; }
    int size() const { return static_cast<int>(gens_.size()); }
    const GenSymbol& gen(int i) const { return gens_.at(static_cast<size_t>(i)); }
    /// Index of a generator by name, or -1.
    int index_of(const std::string& name) const;
    bool gen_odd(int i) const { return !sign_free() && gen(i).degree % 2 != 0; }
    /// Over F_2 there are no signs and odd generators square freely.
    bool sign_free() const { return field_.p == 2; }

    static bool same(const Algebra& a, const Algebra& b);

private:
    Algebra(Field field, std::vector<GenSymbol> gens);

    Field field_;
    std::vector<GenSymbol> gens_;
    std::map<std::string, int> by_name_;
};

/// Sparse exponent vector, entries (generator index, exponent>0) sorted by index.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> entries);

    const std::vector<std::pair<int, int>>& entries() const { return entries_; }
    bool is_unit() const { return entries_.empty(); }
    int exponent(int gen_index) const;
    int word_length() const;
    int degree(const Algebra& alg) const;

    /// Lexicographic with earlier generators dominant: at the smallest index
    /// where exponents differ, the larger exponent wins. Returns <0, 0, >0.
    static int lex_compare(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
    std::string str(const Algebra& alg) const;

private:
    std::vector<std::pair<int, int>> entries_;
};

struct MonomialLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::lex_compare(a, b) > 0;
    }
};

class Substitution;

/// Element of a free graded-commutative algebra with exact coefficients.
/// Terms are kept in canonical (descending lex) order with nonzero
/// coefficients; all signs are normalized at construction.
class GradedPoly {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialLexGreater>;

    explicit GradedPoly(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static GradedPoly zero(AlgebraPtr alg) { return GradedPoly(std::move(alg)); }
    static GradedPoly constant(AlgebraPtr alg, Scalar c);
    static GradedPoly constant(AlgebraPtr alg, long c);
    static GradedPoly generator(AlgebraPtr alg, int index);
    static GradedPoly generator(AlgebraPtr alg, const std::string& name);
    /// Single term c * prod gens^exps; signs/parity normalized here.
    static GradedPoly term(AlgebraPtr alg, Scalar c, const Monomial& m);

    const AlgebraPtr& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Monomial& m) const;

    GradedPoly operator-() const;
    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly scaled(const Scalar& c) const;
    GradedPoly pow(int n) const;

    bool operator==(const GradedPoly& o) const;
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    /// Sum of terms with total exponent sum L.
    GradedPoly word_length_component(int L) const;
    int max_word_length() const;

    bool is_homogeneous() const;
    /// Degree of a nonzero homogeneous polynomial; nullopt if zero or mixed.
    std::optional<int> homogeneous_degree() const;

    /// Algebra-map extension of a generator assignment.
    GradedPoly substitute(const Substitution& s) const;

    std::string str() const;

private:
    friend class Substitution;
    void add_term(const Monomial& m, const Scalar& c);

    AlgebraPtr alg_;
    TermMap terms_;
};

GradedPoly operator*(long c, const GradedPoly& p);
GradedPoly operator*(const Rational& c, const GradedPoly& p);

/// Generator assignment for GradedPoly::substitute. Unassigned generators map
/// to the target generator of the same name and degree. Every assigned image
/// must be homogeneous of the generator's degree, or zero.
class Substitution {
public:
    Substitution(AlgebraPtr source, AlgebraPtr target);

    Substitution& set(const std::string& gen_name, GradedPoly image);
    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }

    const GradedPoly& image(int source_index) const;

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<std::optional<GradedPoly>> images_;
    mutable std::vector<std::optional<GradedPoly>> default_cache_;
};

}  // namespace loopnil
