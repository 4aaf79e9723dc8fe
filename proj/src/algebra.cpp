#include "loopnil/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace loopnil {

Algebra::Algebra(Field field, std::vector<GenSymbol> gens) : field_(field), gens_(std::move(gens)) {
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
        const auto& g = gens_[static_cast<size_t>(i)];
        if (g.degree <= 0) throw std::invalid_argument("Algebra: generator " + g.name + " must have positive degree");
        if (!by_name_.emplace(g.name, i).second)
            throw std::invalid_argument("Algebra: duplicate generator name " + g.name);
    }
}

AlgebraPtr Algebra::make(Field field, std::vector<GenSymbol> gens) {
    return AlgebraPtr(new Algebra(field, std::move(gens)));
}

int Algebra::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
}

bool Algebra::same(const Algebra& a, const Algebra& b) {
    if (&a == &b) return true;
    return a.field_ == b.field_ && a.gens_ == b.gens_;
}

Monomial::Monomial(std::vector<std::pair<int, int>> entries) {
    std::sort(entries.begin(), entries.end());
    for (const auto& [idx, exp] : entries) {
        if (idx < 0) throw std::invalid_argument("Monomial: negative generator index");
        if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
        if (exp == 0) continue;
        if (!entries_.empty() && entries_.back().first == idx)
            entries_.back().second += exp;
        else
            entries_.emplace_back(idx, exp);
    }
}

int Monomial::exponent(int gen_index) const {
    for (const auto& [idx, exp] : entries_)
        if (idx == gen_index) return exp;
    return 0;
}

int Monomial::word_length() const {
    int L = 0;
    for (const auto& [idx, exp] : entries_) L += exp;
    return L;
}

int Monomial::degree(const Algebra& alg) const {
    int d = 0;
    for (const auto& [idx, exp] : entries_) d += alg.gen(idx).degree * exp;
    return d;
}

int Monomial::lex_compare(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
        int ia = i < a.entries_.size() ? a.entries_[i].first : INT32_MAX;
        int ib = j < b.entries_.size() ? b.entries_[j].first : INT32_MAX;
        if (ia < ib) return 1;   // a has a positive exponent at an earlier generator
        if (ib < ia) return -1;
        int ea = a.entries_[i].second, eb = b.entries_[j].second;
        if (ea != eb) return ea > eb ? 1 : -1;
        ++i, ++j;
    }
    return 0;
}

std::string Monomial::str(const Algebra& alg) const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, exp] : entries_) {
        if (!first) os << ' ';
        first = false;
        os << alg.gen(idx).name;
        if (exp > 1) os << '^' << exp;
    }
    return os.str();
}

GradedPoly GradedPoly::constant(AlgebraPtr alg, Scalar c) {
    GradedPoly p(std::move(alg));
    if (c.field() != p.alg_->field())
        throw std::invalid_argument("GradedPoly::constant: coefficient field mismatch");
    p.add_term(Monomial{}, c);
    return p;
}

GradedPoly GradedPoly::constant(AlgebraPtr alg, long c) {
    Scalar s = Scalar::of(alg->field(), c);
    return constant(std::move(alg), s);
}

GradedPoly GradedPoly::generator(AlgebraPtr alg, int index) {
    GradedPoly p(alg);
    p.add_term(Monomial({{index, 1}}), Scalar::one(alg->field()));
    return p;
}

GradedPoly GradedPoly::generator(AlgebraPtr alg, const std::string& name) {
    int idx = alg->index_of(name);
    if (idx < 0) throw std::invalid_argument("GradedPoly::generator: unknown generator " + name);
    return generator(std::move(alg), idx);
}

GradedPoly GradedPoly::term(AlgebraPtr alg, Scalar c, const Monomial& m) {
    GradedPoly p(alg);
    if (c.field() != alg->field())
        throw std::invalid_argument("GradedPoly::term: coefficient field mismatch");
    for (const auto& [idx, exp] : m.entries()) {
        if (idx >= alg->size()) throw std::invalid_argument("GradedPoly::term: generator index out of range");
        if (exp > 1 && alg->gen_odd(idx)) return p;   // odd square vanishes
    }
    p.add_term(m, c);
    return p;
}

Scalar GradedPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(alg_->field()) : it->second;
}

void GradedPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly p(alg_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    if (!Algebra::same(*alg_, *o.alg_))
        throw std::invalid_argument("GradedPoly: mismatched ambient algebras");
    GradedPoly p(*this);
    for (const auto& [m, c] : o.terms_) p.add_term(m, c);
    return p;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const { return *this + (-o); }

namespace {

// Product of canonical monomials. Writes the combined exponent vector and the
// Koszul sign from moving b's odd letters past a's higher-indexed odd letters.
// Returns false when an odd generator squares (signed fields only).
bool mul_monomials(const Algebra& alg, const Monomial& a, const Monomial& b, Monomial& out, bool& negate) {
    negate = false;
    std::vector<std::pair<int, int>> merged;
    merged.reserve(a.entries().size() + b.entries().size());
    {
        size_t i = 0, j = 0;
        const auto& ea = a.entries();
        const auto& eb = b.entries();
        while (i < ea.size() || j < eb.size()) {
            if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first))
                merged.push_back(ea[i++]);
            else if (i == ea.size() || eb[j].first < ea[i].first)
                merged.push_back(eb[j++]);
            else {
                merged.emplace_back(ea[i].first, ea[i].second + eb[j].second);
                ++i, ++j;
            }
        }
    }
    if (!alg.sign_free()) {
        for (const auto& [idx, exp] : merged)
            if (exp > 1 && alg.gen_odd(idx)) return false;
        std::vector<int> odd_a;
        for (const auto& [idx, exp] : a.entries())
            if (alg.gen_odd(idx)) odd_a.push_back(idx);
        long crossings = 0;
        for (const auto& [idx, exp] : b.entries())
            if (alg.gen_odd(idx))
                crossings += odd_a.end() - std::upper_bound(odd_a.begin(), odd_a.end(), idx);
        negate = crossings % 2 != 0;
    }
    out = Monomial(std::move(merged));
    return true;
}

}  // namespace

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    if (!Algebra::same(*alg_, *o.alg_))
        throw std::invalid_argument("GradedPoly: mismatched ambient algebras");
    GradedPoly p(alg_);
    Monomial prod;
    bool negate = false;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            if (!mul_monomials(*alg_, ma, mb, prod, negate)) continue;
            Scalar c = ca * cb;
            p.add_term(prod, negate ? -c : c);
        }
    return p;
}

GradedPoly GradedPoly::scaled(const Scalar& c) const {
    GradedPoly p(alg_);
    if (c.is_zero()) return p;
    for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
    return p;
}

GradedPoly GradedPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("GradedPoly::pow: negative exponent");
    GradedPoly acc = constant(alg_, 1);
    for (int i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

bool GradedPoly::operator==(const GradedPoly& o) const {
    return Algebra::same(*alg_, *o.alg_) && terms_ == o.terms_;
}

GradedPoly GradedPoly::word_length_component(int L) const {
    GradedPoly p(alg_);
    for (const auto& [m, c] : terms_)
        if (m.word_length() == L) p.terms_.emplace(m, c);
    return p;
}

int GradedPoly::max_word_length() const {
    int L = 0;
    for (const auto& [m, c] : terms_) L = std::max(L, m.word_length());
    return L;
}

bool GradedPoly::is_homogeneous() const {
    return terms_.size() <= 1 || homogeneous_degree().has_value();
}

std::optional<int> GradedPoly::homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int dm = m.degree(*alg_);
        if (d && *d != dm) return std::nullopt;
        d = dm;
    }
    return d;
}

GradedPoly GradedPoly::substitute(const Substitution& s) const {
    if (!Algebra::same(*alg_, *s.source()))
        throw std::invalid_argument("substitute: polynomial not over the substitution source");
    GradedPoly out(s.target());
    for (const auto& [m, c] : terms_) {
        GradedPoly acc = GradedPoly::constant(s.target(), Scalar::one(alg_->field()));
        for (const auto& [idx, exp] : m.entries())
            acc = acc * s.image(idx).pow(exp);
        out = out + acc.scaled(c);
    }
    return out;
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (m.is_unit())
            os << cs;
        else if (cs == "1")
            os << m.str(*alg_);
        else
            os << cs << ' ' << m.str(*alg_);
    }
    return os.str();
}

GradedPoly operator*(long c, const GradedPoly& p) {
    return p.scaled(Scalar::of(p.algebra()->field(), c));
}

GradedPoly operator*(const Rational& c, const GradedPoly& p) {
    return p.scaled(Scalar::rational(c));
}

Substitution::Substitution(AlgebraPtr source, AlgebraPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (source_->field() != target_->field())
        throw std::invalid_argument("Substitution: source and target fields differ");
    images_.resize(static_cast<size_t>(source_->size()));
    default_cache_.resize(static_cast<size_t>(source_->size()));
}

Substitution& Substitution::set(const std::string& gen_name, GradedPoly image) {
    int idx = source_->index_of(gen_name);
    if (idx < 0) throw std::invalid_argument("Substitution::set: unknown generator " + gen_name);
    if (!Algebra::same(*image.algebra(), *target_))
        throw std::invalid_argument("Substitution::set: image not in target algebra");
    if (!image.is_zero()) {
        auto d = image.homogeneous_degree();
        if (!d || *d != source_->gen(idx).degree)
            throw std::invalid_argument("Substitution::set: image of " + gen_name +
                                        " is not homogeneous of degree " +
                                        std::to_string(source_->gen(idx).degree));
    }
    images_[static_cast<size_t>(idx)] = std::move(image);
    return *this;
}

const GradedPoly& Substitution::image(int source_index) const {
    const auto& assigned = images_.at(static_cast<size_t>(source_index));
    if (assigned) return *assigned;
    auto& cached = default_cache_[static_cast<size_t>(source_index)];
    if (!cached) {
        const GenSymbol& g = source_->gen(source_index);
        int t = target_->index_of(g.name);
        if (t < 0 || target_->gen(t).degree != g.degree)
            throw std::invalid_argument("Substitution: generator " + g.name +
                                        " has no image and no matching target generator");
        cached = GradedPoly::generator(target_, t);
    }
    return *cached;
}

}  // namespace loopnil
