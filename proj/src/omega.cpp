#include "mspoly/omega.hpp"

#include <map>

#include "mspoly/combinat.hpp"
#include "mspoly/errors.hpp"
#include "mspoly/families.hpp"

namespace mspoly {

struct FunctionTerm::Node {
    enum class Kind {
        Placeholder,
        Constant,
        Laurent,
        Sum,
        Product,
        Scale,
        Reciprocal,
        Compose,
        Inverse,
        Derivative,
    };
    Kind kind;
    PowerSeries series;   // Constant
    LaurentPoly1 lpoly;   // Laurent
    Rational factor;      // Scale
    std::shared_ptr<const Node> a, b;
};

namespace {

using Node = FunctionTerm::Node;

std::shared_ptr<const Node> make_node(Node n) {
    return std::make_shared<const Node>(std::move(n));
}

} // namespace

FunctionTerm FunctionTerm::placeholder() {
    Node n;
    n.kind = Node::Kind::Placeholder;
    return FunctionTerm(make_node(std::move(n)));
}

FunctionTerm FunctionTerm::constant(PowerSeries f) {
    Node n;
    n.kind = Node::Kind::Constant;
    n.series = std::move(f);
    return FunctionTerm(make_node(std::move(n)));
}

FunctionTerm FunctionTerm::laurent(LaurentPoly1 f) {
    Node n;
    n.kind = Node::Kind::Laurent;
    n.lpoly = std::move(f);
    return FunctionTerm(make_node(std::move(n)));
}

FunctionTerm FunctionTerm::scalar(Rational c) {
    // A constant function has all higher Taylor coefficients zero at any
    // order; a large fixed order keeps it usable in deep terms.
    return constant(PowerSeries::constant(std::move(c), 64));
}

FunctionTerm FunctionTerm::sum(FunctionTerm a, FunctionTerm b) {
    Node n;
    n.kind = Node::Kind::Sum;
    n.a = a.node_;
    n.b = b.node_;
    return FunctionTerm(make_node(std::move(n)));
}

FunctionTerm FunctionTerm::product(FunctionTerm a, FunctionTerm b) {
    Node n;
    n.kind = Node::Kind::Product;
    n.a = a.node_;
    n.b = b.node_;
    return FunctionTerm(make_node(std::move(n)));
}

FunctionTerm FunctionTerm::scale(Rational c, FunctionTerm a) {
    Node n;
    n.kind = Node::Kind::Scale;
    n.factor = std::move(c);
    n.a = a.node_;
    return FunctionTerm(make_node(std::move(n)));
}

FunctionTerm FunctionTerm::reciprocal(FunctionTerm a) {
    Node n;
    n.kind = Node::Kind::Reciprocal;
    n.a = a.node_;
    return FunctionTerm(make_node(std::move(n)));
}

FunctionTerm FunctionTerm::compose(FunctionTerm f, FunctionTerm g) {
    Node n;
    n.kind = Node::Kind::Compose;
    n.a = f.node_;
    n.b = g.node_;
    return FunctionTerm(make_node(std::move(n)));
}

FunctionTerm FunctionTerm::inverse(FunctionTerm a) {
    Node n;
    n.kind = Node::Kind::Inverse;
    n.a = a.node_;
    return FunctionTerm(make_node(std::move(n)));
}

FunctionTerm FunctionTerm::derivative(FunctionTerm a) {
    Node n;
    n.kind = Node::Kind::Derivative;
    n.a = a.node_;
    return FunctionTerm(make_node(std::move(n)));
}

FunctionTerm FunctionTerm::power(FunctionTerm a, long k) {
    if (k == 0) return scalar(Rational(1));
    if (k < 0) return power(reciprocal(a), -k);
    FunctionTerm out = a;
    for (long i = 1; i < k; ++i) out = product(out, a);
    return out;
}

namespace {

class OmegaEval {
public:
    explicit OmegaEval(PlaceholderCase pc) : pc_(pc) {}

    // Omega_0..Omega_n of the given node.
    const std::vector<MultiPoly>& eval(const std::shared_ptr<const Node>& node, long n) {
        auto key = std::make_pair(node.get(), n);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<MultiPoly> v = compute(*node, n);
        return memo_.emplace(std::move(key), std::move(v)).first->second;
    }

private:
    std::vector<MultiPoly> compute(const Node& node, long n) {
        std::vector<MultiPoly> out(static_cast<size_t>(n) + 1);
        switch (node.kind) {
            case Node::Kind::Placeholder:
                out[0] = pc_ == PlaceholderCase::F0 ? MultiPoly() : MultiPoly::variable(0);
                for (long j = 1; j <= n; ++j) out[j] = MultiPoly::variable(static_cast<int>(j));
                return out;
            case Node::Kind::Constant:
                if (node.series.order() < n) {
                    throw UnsupportedTerm("constant series truncated below requested order");
                }
                for (long j = 0; j <= n; ++j) out[j] = MultiPoly(node.series.taylor(j));
                return out;
            case Node::Kind::Laurent:
                throw UnsupportedTerm("a Laurent polynomial is a function only as the left leg "
                                      "of a 1-case composition");
            case Node::Kind::Sum: {
                const auto& a = eval(node.a, n);
                const auto& b = eval(node.b, n);
                for (long j = 0; j <= n; ++j) out[j] = a[j] + b[j];
                return out;
            }
            case Node::Kind::Scale: {
                const auto& a = eval(node.a, n);
                for (long j = 0; j <= n; ++j) out[j] = a[j] * node.factor;
                return out;
            }
            case Node::Kind::Product: {
                const auto& a = eval(node.a, n);
                const auto& b = eval(node.b, n);
                for (long j = 0; j <= n; ++j) {
                    MultiPoly s;
                    for (long k = 0; k <= j; ++k) s += binom(j, k) * (a[j - k] * b[k]);
                    out[j] = std::move(s);
                }
                return out;
            }
            case Node::Kind::Reciprocal: {
                const auto& a = eval(node.a, n);
                if (a[0].is_zero()) throw CaseViolation("reciprocal of a term with zero value at 0");
                for (long j = 0; j <= n; ++j) out[j] = substitute_into(reciprocal_poly_hat(j), a, 0);
                return out;
            }
            case Node::Kind::Compose: {
                const auto& g = eval(node.b, n);
                if (g[0].is_zero()) {
                    // 0-case: f any term.
                    const auto& f = eval(node.a, n);
                    for (long j = 0; j <= n; ++j) {
                        MultiPoly s;
                        for (long k = 0; k <= j; ++k) {
                            if (f[k].is_zero()) continue;
                            s += f[k] * substitute_into(bell(j, k), g, 1);
                        }
                        out[j] = std::move(s);
                    }
                    return out;
                }
                // 1-case: f must be a Laurent polynomial free of phi.
                if (node.a->kind != Node::Kind::Laurent) {
                    throw CaseViolation("1-case composition needs a Laurent polynomial left leg");
                }
                const LaurentPoly1& f = node.a->lpoly;
                for (long j = 0; j <= n; ++j) {
                    MultiPoly s;
                    for (long k = 0; k <= j; ++k) {
                        MultiPoly dfk = laurent_derivative_at(f, k, g[0]);
                        if (dfk.is_zero()) continue;
                        s += dfk * substitute_into(bell(j, k), g, 1);
                    }
                    out[j] = std::move(s);
                }
                return out;
            }
            case Node::Kind::Inverse: {
                const auto& a = eval(node.a, n);
                if (!a[0].is_zero()) throw CaseViolation("compositional inverse of a term with f(0) != 0");
                out[0] = MultiPoly();
                for (long j = 1; j <= n; ++j) out[j] = substitute_into(stirling_a(j, 1), a, 1);
                return out;
            }
            case Node::Kind::Derivative: {
                const auto& a = eval(node.a, n + 1);
                for (long j = 0; j <= n; ++j) out[j] = a[j + 1];
                return out;
            }
        }
        throw UnsupportedTerm("unknown term node");
    }

    // P(values[base], values[base+1], ...): X_{base+i} -> values[i].
    static MultiPoly substitute_into(const MultiPoly& p, const std::vector<MultiPoly>& values,
                                     int base) {
        return compose_family(p, [&](int var) {
            size_t idx = static_cast<size_t>(var - base);
            if (var < base || idx >= values.size()) {
                throw UnsupportedTerm("substitution index out of range");
            }
            return values[idx];
        });
    }

    // D^k(f) evaluated at the polynomial value g0 (unit monomial required
    // where negative powers occur).
    static MultiPoly laurent_derivative_at(const LaurentPoly1& f, long k, const MultiPoly& g0) {
        MultiPoly out;
        for (const auto& [m, c] : f.coeffs()) {
            Rational factor = c * falling(m, k);
            if (factor == 0) continue;
            long e = m - k;
            if (e < 0 && !g0.is_invertible_monomial()) {
                throw NonInvertibleSubstitution("negative Laurent power at a non-unit value");
            }
            out += g0.pow(e) * factor;
        }
        return out;
    }

    PlaceholderCase pc_;
    std::map<std::pair<const Node*, long>, std::vector<MultiPoly>> memo_;
};

} // namespace

MultiPoly omega(long n, const FunctionTerm& term, PlaceholderCase pc) {
    return omega_all(n, term, pc).back();
}

std::vector<MultiPoly> omega_all(long n, const FunctionTerm& term, PlaceholderCase pc) {
    if (n < 0) throw DomainViolation("omega needs n >= 0");
    OmegaEval ev(pc);
    return ev.eval(term.node_ptr(), n);
}

} // namespace mspoly
