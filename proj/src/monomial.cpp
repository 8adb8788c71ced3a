#include "mspoly/monomial.hpp"

#include <algorithm>

namespace mspoly {

void Monomial::validate(const Exps& exps) {
    for (const auto& [var, e] : exps) {
        if (var < 0) throw InvalidMonomial("negative variable index");
        if (e == 0) throw InvalidMonomial("zero exponent stored");
        if (e < 0 && var > 1) throw InvalidMonomial("negative exponent on X_" + std::to_string(var));
    }
}

Monomial::Monomial(std::initializer_list<std::pair<int, int>> exps) {
    exps_.assign(exps.begin(), exps.end());
    std::sort(exps_.begin(), exps_.end());
    for (size_t i = 1; i < exps_.size(); ++i) {
        if (exps_[i].first == exps_[i - 1].first) throw InvalidMonomial("duplicate variable");
    }
    validate(exps_);
}

Monomial Monomial::variable(int var, int exp) {
    Monomial m;
    if (exp != 0) {
        m.exps_.emplace_back(var, exp);
        validate(m.exps_);
    }
    return m;
}

Monomial Monomial::from_sorted(Exps exps) {
    Monomial m;
    m.exps_ = std::move(exps);
    validate(m.exps_);
    return m;
}

int Monomial::exponent(int var) const {
    for (const auto& [v, e] : exps_) {
        if (v == var) return e;
        if (v > var) break;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Exps out;
    out.reserve(exps_.size() + other.exps_.size());
    auto a = exps_.begin(), b = other.exps_.begin();
    while (a != exps_.end() || b != other.exps_.end()) {
        if (b == other.exps_.end() || (a != exps_.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == exps_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) out.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return from_sorted(std::move(out));
}

Monomial Monomial::pow(long k) const {
    if (k == 0) return Monomial();
    Exps out;
    out.reserve(exps_.size());
    for (const auto& [var, e] : exps_) out.emplace_back(var, static_cast<int>(e * k));
    return from_sorted(std::move(out));
}

long long Monomial::degree() const {
    long long d = 0;
    for (const auto& [var, e] : exps_) d += e;
    return d;
}

long long Monomial::weight() const {
    long long w = 0;
    for (const auto& [var, e] : exps_) w += static_cast<long long>(var) * e;
    return w;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    long long wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    auto ia = a.exps().begin(), ib = b.exps().begin();
    while (ia != a.exps().end() && ib != b.exps().end()) {
        if (ia->first != ib->first) {
            // The one whose next variable has the larger index has exponent 0
            // at the smaller index; 0 compares against the other's exponent.
            if (ia->first < ib->first) return ia->second < 0;
            return 0 < ib->second;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    if (ia != a.exps().end()) return ia->second < 0;
    if (ib != b.exps().end()) return 0 < ib->second;
    return false;
}

} // namespace mspoly
