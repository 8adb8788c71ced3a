#include "mspoly/multipoly.hpp"

#include <set>

namespace mspoly {

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial(), c);
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly MultiPoly::variable(int var, int exp) {
    MultiPoly p;
    p.terms_.emplace(Monomial::variable(var, exp), Rational(1));
    return p;
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool MultiPoly::is_invertible_monomial() const {
    if (terms_.size() != 1) return false;
    for (const auto& [var, e] : terms_.begin()->first.exps()) {
        if (var > 1) return false; // inverse would need a negative exponent there
    }
    return true;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rational(-c));
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& q) const {
    MultiPoly out = *this;
    out += q;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& q) const {
    MultiPoly out = *this;
    out -= q;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, Rational(-c));
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& q) const {
    MultiPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : q.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    return p * c;
}

MultiPoly MultiPoly::pow(long k) const {
    if (k == 0) return MultiPoly(1);
    if (k < 0) {
        if (terms_.size() != 1) {
            throw NegativePowerOfNonUnit("negative power of a polynomial with " +
                                         std::to_string(terms_.size()) + " terms");
        }
        const auto& [m, c] = *terms_.begin();
        // Monomial::pow validates that the inverted exponents are legal.
        return term(rational_pow(c, k), m.pow(k));
    }
    MultiPoly base = *this, out(1);
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (e == 0) continue;
        Monomial::Exps exps;
        for (const auto& [v, ev] : m.exps()) {
            if (v == var) {
                if (ev != 1) exps.emplace_back(v, ev - 1);
            } else {
                exps.emplace_back(v, ev);
            }
        }
        out.add_term(Monomial::from_sorted(std::move(exps)), c * Rational(e));
    }
    return out;
}

MultiPoly MultiPoly::substitute(const Assignment& sigma) const {
    // Powers of assigned values recur across terms; cache them per call.
    std::map<std::pair<int, int>, MultiPoly> power_cache;
    auto assigned_power = [&](int var, int e, const MultiPoly& value) -> const MultiPoly& {
        auto key = std::make_pair(var, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        if (e < 0 && !value.is_invertible_monomial()) {
            throw NonInvertibleSubstitution("X_" + std::to_string(var) +
                                            "^" + std::to_string(e) +
                                            " substituted with a non-unit");
        }
        return power_cache.emplace(key, value.pow(e)).first->second;
    };

    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        MultiPoly prod(c);
        for (const auto& [var, e] : m.exps()) {
            auto it = sigma.find(var);
            if (it == sigma.end()) {
                prod = prod * MultiPoly::variable(var, e);
            } else {
                prod = prod * assigned_power(var, e, it->second);
            }
        }
        out += prod;
    }
    return out;
}

Rational MultiPoly::unify(const Rational& value) const {
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational prod = c;
        for (const auto& [var, e] : m.exps()) {
            if (value == 0 && e < 0) throw ZeroDenominator("unify(0) meets a negative exponent");
            prod *= rational_pow(value, e);
        }
        sum += prod;
    }
    return sum;
}

std::pair<std::optional<long long>, std::optional<long long>> MultiPoly::grading() const {
    if (terms_.empty()) return {0, 0};
    std::optional<long long> degree = terms_.begin()->first.degree();
    std::optional<long long> weight = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_) {
        if (degree && m.degree() != *degree) degree.reset();
        if (weight && m.weight() != *weight) weight.reset();
    }
    return {degree, weight};
}

int MultiPoly::max_variable() const {
    int hi = -1;
    for (const auto& [m, c] : terms_) {
        if (!m.exps().empty()) hi = std::max(hi, m.exps().back().first);
    }
    return hi;
}

bool MultiPoly::contains_variable(int var) const {
    for (const auto& [m, c] : terms_) {
        if (m.exponent(var) != 0) return true;
    }
    return false;
}

MultiPoly compose_family(const MultiPoly& p, const std::function<MultiPoly(int)>& family) {
    std::set<int> vars;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [var, e] : m.exps()) vars.insert(var);
    }
    MultiPoly::Assignment sigma;
    for (int var : vars) sigma.emplace(var, family(var));
    return p.substitute(sigma);
}

Rational evaluate(const MultiPoly& p, const std::function<Rational(int)>& value) {
    Rational sum(0);
    for (const auto& [m, c] : p.terms()) {
        Rational prod = c;
        for (const auto& [var, e] : m.exps()) {
            Rational v = value(var);
            if (v == 0 && e < 0) throw ZeroDenominator("zero substituted at a negative exponent");
            prod *= rational_pow(v, e);
        }
        sum += prod;
    }
    return sum;
}

} // namespace mspoly
