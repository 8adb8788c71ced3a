#include "mspoly/inversion.hpp"

#include "mspoly/combinat.hpp"
#include "mspoly/derived.hpp"
#include "mspoly/errors.hpp"
#include "mspoly/families.hpp"

namespace mspoly {

MultiPoly t_monomial(long k, const Rational& c) {
    if (k == 0) return MultiPoly(c);
    return MultiPoly::term(c, Monomial::variable(kTVar, static_cast<int>(k)));
}

MultiPoly t_from_coeffs(const std::vector<Rational>& coeffs) {
    MultiPoly out;
    for (size_t k = 0; k < coeffs.size(); ++k) out += t_monomial(static_cast<long>(k), coeffs[k]);
    return out;
}

Rational t_coeff(const MultiPoly& p, long k) {
    if (k == 0) return p.coeff(Monomial());
    return p.coeff(Monomial::variable(kTVar, static_cast<int>(k)));
}

long t_degree(const MultiPoly& p) {
    long deg = 0;
    for (const auto& [m, c] : p.terms()) {
        if (m.exps().size() > 1 || (m.exps().size() == 1 && m.exps()[0].first != kTVar)) {
            throw DomainViolation("polynomial is not univariate in t");
        }
        deg = std::max(deg, static_cast<long>(m.exponent(kTVar)));
    }
    return deg;
}

MultiPoly t_scale_arg(const MultiPoly& p, const Rational& c) {
    MultiPoly::Assignment sigma;
    sigma.emplace(kTVar, t_monomial(1, c));
    return p.substitute(sigma);
}

MultiPoly falling_factorial_t(long k) {
    MultiPoly out(1);
    for (long i = 0; i < k; ++i) out = out * (t_monomial(1) - MultiPoly(Rational(i)));
    return out;
}

BinomialSeq::BinomialSeq(PowerSeries phi, long max_n) : phi_(std::move(phi)) {
    if (!phi_.is_invertible()) throw NotInvertible("binomial sequence needs an invertible phi");
    if (phi_.order() < max_n) throw DomainViolation("phi truncated below max_n");
    f_.reserve(static_cast<size_t>(max_n) + 1);
    for (long n = 0; n <= max_n; ++n) {
        MultiPoly fn;
        for (long k = 0; k <= n; ++k) {
            Rational b = at_taylor(bell(n, k), phi_);
            if (b != 0) fn += t_monomial(k, b);
        }
        f_.push_back(std::move(fn));
    }
}

const MultiPoly& BinomialSeq::f(long n) const {
    if (n < 0 || n > max_n()) throw DomainViolation("binomial sequence index out of range");
    return f_[n];
}

bool is_binomial(const std::vector<MultiPoly>& f) {
    if (f.empty() || f[0] != MultiPoly(1)) return false;
    std::vector<Rational> a(f.size());
    for (size_t n = 1; n < f.size(); ++n) {
        a[n] = t_coeff(f[n], 1);
        if (t_degree(f[n]) != static_cast<long>(n)) return false;
    }
    for (size_t n = 1; n < f.size(); ++n) {
        MultiPoly expect = compose_family(complete_bell(static_cast<long>(n)),
                                          [&](int j) { return t_monomial(1, a[j]); });
        if (expect != f[n]) return false;
    }
    return true;
}

std::vector<std::string> binomial_identity_failures(const BinomialSeq& seq, long max_n) {
    std::vector<std::string> failures;
    auto args = [&](int j) { return seq.f(j); };
    // X_1 -> f_0(t), X_{j+1} -> (j+1) f_j(t)
    auto args_idem = [&](int j) { return seq.f(j - 1) * Rational(j); };
    // X_1 -> f_0(t), X_j -> f_{j-1}(jt)
    auto args_forest = [&](int j) { return t_scale_arg(seq.f(j - 1), Rational(j)); };
    auto check = [&](const char* name, long n, const MultiPoly& lhs, const MultiPoly& rhs) {
        if (lhs != rhs) failures.push_back(std::string(name) + " at n=" + std::to_string(n));
    };

    for (long n = 1; n <= max_n; ++n) {
        const MultiPoly& fn = seq.f(n);
        Rational fpn = t_coeff(fn, 1); // f_n'(0)

        check("log_binseq", n, compose_family(logarithmic_poly(n), args), t_monomial(1, fpn));

        for (long k = 0; k <= n; ++k) {
            check("subst_potential", n, compose_family(potential(n, k), args),
                  t_scale_arg(fn, Rational(k)));
        }
        check("subst_reciprocal", n, compose_family(reciprocal_poly(n), args),
              t_scale_arg(fn, Rational(-1)));
        check("subst_treepoly", n, compose_family(tree_poly(n), args),
              t_scale_arg(seq.f(n - 1), Rational(n)));

        for (long k = 0; k <= n; ++k) {
            MultiPoly rhs;
            for (long j = 0; j <= k; ++j) rhs += t_scale_arg(fn, Rational(j)) * stirling1(k, j);
            check("subst_factorial", n, compose_family(factorial_poly(n, k), args), rhs);
        }
        {
            MultiPoly rhs;
            for (long k = 1; k <= n; ++k) {
                Rational c = binom(n, k) / Rational(k);
                rhs += t_scale_arg(fn, Rational(k)) * (k % 2 == 1 ? c : -c);
            }
            check("subst_logarithmic", n, compose_family(logarithmic_poly(n), args), rhs);
        }
        for (long k = 1; k <= n; ++k) {
            MultiPoly rhs;
            for (long j = 0; j <= k; ++j) {
                Rational c = binom(k, j) / Rational(factorial(k));
                rhs += t_scale_arg(fn, Rational(j)) * ((k - j) % 2 == 0 ? c : -c);
            }
            check("bertrand_binseq", n, compose_family(bell(n, k), args), rhs);
        }
        for (long k = 1; k <= n; ++k) {
            check("subst_idempot", n, compose_family(bell(n, k), args_idem),
                  binom(n, k) * t_scale_arg(seq.f(n - k), Rational(k)));
            check("subst_forest_0", n, compose_family(stirling_a(n, k), args_idem),
                  binom(n - 1, k - 1) * t_scale_arg(seq.f(n - k), Rational(-n)));
            check("subst_forest_1", n, compose_family(bell(n, k), args_forest),
                  binom(n - 1, k - 1) * t_scale_arg(seq.f(n - k), Rational(n)));
            check("subst_forest_2", n, compose_family(stirling_a(n, k), args_forest),
                  binom(n, k) * t_scale_arg(seq.f(n - k), Rational(-k)));
        }
    }
    return failures;
}

MultiPoly knuth_pittel(long n) {
    if (n < 0) throw DomainViolation("knuth_pittel needs n >= 0");
    if (n == 0) return MultiPoly(1);
    MultiPoly out;
    for (long k = 1; k <= n; ++k) {
        Rational coeff(0);
        for (long j = k; j <= n; ++j) {
            for (long i = j; i <= n; ++i) {
                Rational term = stirling1(j, k) * rational_pow(Rational(n), n - i) *
                                rat(factorial(i), factorial(j)) * binom(i - 1, j - 1) *
                                binom(n - 1, i - 1);
                coeff += term;
            }
        }
        out += t_monomial(k, coeff);
    }
    return out;
}

MultiPoly knuth_pittel_series_route(long n) {
    if (n < 0) throw DomainViolation("knuth_pittel needs n >= 0");
    long order = std::max(n, 1L);
    // tau: EGF of rooted labeled trees, from the closed coefficients m^{m-1}.
    std::vector<Rational> tau_taylor(static_cast<size_t>(order) + 1, Rational(0));
    for (long m = 1; m <= order; ++m) {
        tau_taylor[m] = rational_pow(Rational(m), m - 1);
    }
    PowerSeries tau = PowerSeries::from_taylor(tau_taylor);
    PowerSeries g = PowerSeries::identity(order) * PowerSeries::geometric(order); // x/(1-x)
    PowerSeries phi = compose_0case(PowerSeries::logm(order), compose_0case(g, tau));
    MultiPoly out;
    for (long k = 0; k <= n; ++k) {
        Rational b = at_taylor(bell(n, k), phi);
        if (b != 0) out += t_monomial(k, b);
    }
    return out;
}

std::vector<std::vector<Rational>> mullin_rota_connect(const BinomialSeq& f, const BinomialSeq& g) {
    long n_max = std::min(f.max_n(), g.max_n());
    PowerSeries link = compose_0case(invert_series(g.phi()), f.phi());
    std::vector<std::vector<Rational>> c(static_cast<size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        c[n].resize(static_cast<size_t>(n) + 1);
        for (long k = 0; k <= n; ++k) c[n][k] = at_taylor(bell(n, k), link);
    }
    return c;
}

std::vector<MultiPoly> both_or_none_forward(const std::vector<MultiPoly>& g,
                                            const std::vector<Rational>& a) {
    if (a.size() < 2 || a[1] == 0) throw DomainViolation("transfer constants need a_1 != 0");
    auto aval = [&](int j) {
        return static_cast<size_t>(j) < a.size() ? a[j] : Rational(0);
    };
    std::vector<MultiPoly> f(g.size());
    for (size_t n = 0; n < g.size(); ++n) {
        MultiPoly s;
        for (size_t k = 0; k <= n; ++k) {
            Rational b = evaluate(bell(static_cast<long>(n), static_cast<long>(k)), aval);
            if (b != 0) s += g[k] * b;
        }
        f[n] = std::move(s);
    }
    return f;
}

std::vector<MultiPoly> both_or_none_backward(const std::vector<MultiPoly>& f,
                                             const std::vector<Rational>& a) {
    if (a.size() < 2 || a[1] == 0) throw DomainViolation("transfer constants need a_1 != 0");
    auto aval = [&](int j) {
        return static_cast<size_t>(j) < a.size() ? a[j] : Rational(0);
    };
    std::vector<MultiPoly> g(f.size());
    for (size_t n = 0; n < f.size(); ++n) {
        MultiPoly s;
        for (size_t k = 0; k <= n; ++k) {
            Rational b = evaluate(stirling_a(static_cast<long>(n), static_cast<long>(k)), aval);
            if (b != 0) s += f[k] * b;
        }
        g[n] = std::move(s);
    }
    return g;
}

bool yang_check(const BinomialSeq& seq, long max_n) {
    std::vector<Rational> f_at_1(static_cast<size_t>(max_n) + 1);
    for (long j = 0; j <= max_n; ++j) f_at_1[j] = seq.f(j).unify(Rational(1));
    for (long n = 0; n <= max_n; ++n) {
        MultiPoly rhs;
        for (long k = 0; k <= n; ++k) {
            Rational b = evaluate(bell(n, k), [&](int j) { return f_at_1[j]; });
            if (b != 0) rhs += falling_factorial_t(k) * b;
        }
        if (rhs != seq.f(n)) return false;
    }
    return true;
}

MultiPoly lambda_classical(long n) {
    if (n < 1) throw DomainViolation("lambda needs n >= 1");
    return stirling_a(n, 1);
}

MultiPoly lambda_classical_comtet(long n) {
    if (n < 1) throw DomainViolation("lambda needs n >= 1");
    MultiPoly out;
    for (long k = 0; k <= n - 1; ++k) {
        MultiPoly part = assoc_bell(n - 1 + k, k);
        if (part.is_zero()) continue;
        part = MultiPoly::variable(1, static_cast<int>(-(n + k))) * part;
        out += k % 2 == 0 ? part : -part;
    }
    return out;
}

MultiPoly lambda_classical_schlaefli(long n) {
    if (n < 1) throw DomainViolation("lambda needs n >= 1");
    MultiPoly out;
    for (long k = 0; k <= n - 1; ++k) {
        Rational c = binom(2 * n - 1, n - 1 - k);
        if (k % 2 == 1) c = -c;
        MultiPoly part = bell(n - 1 + k, k) * c;
        if (part.is_zero()) continue;
        out += MultiPoly::variable(1, static_cast<int>(-(n + k))) * part;
    }
    return out;
}

SeriesForm make_form(PowerSeries a, PowerSeries phi) {
    if (!phi.is_invertible()) throw NotInvertible("form needs an invertible phi");
    if (a.is_F1()) return SeriesForm{std::move(a), std::move(phi), FormCase::Unit};
    if (a.is_invertible()) return SeriesForm{std::move(a), std::move(phi), FormCase::Invertible};
    throw CaseViolation("a must be a unit or an invertible series");
}

MultiPoly gamma_conv(long n, const SeriesForm& form) {
    // Gamma_n(a,phi) = sum_k ( sum_{j=k}^n C(n,j) a_{n-j} B_{j,k}^phi(0) ) X_k,
    // with the X_0 slot dropped in the unit case (c_0 = 0 there).
    MultiPoly out;
    for (long k = form.tag == FormCase::Unit ? 1 : 0; k <= n; ++k) {
        Rational coeff(0);
        for (long j = k; j <= n; ++j) {
            Rational a_nj = form.a.taylor(n - j);
            if (a_nj == 0) continue;
            coeff += binom(n, j) * a_nj * at_taylor(bell(j, k), form.phi);
        }
        if (coeff != 0) out += MultiPoly::variable(static_cast<int>(k)) * coeff;
    }
    return out;
}

MultiPoly gamma_bar(long n, const SeriesForm& form) {
    MultiPoly out;
    if (form.tag == FormCase::Unit) {
        for (long k = 0; k <= n; ++k) {
            Rational coeff(0);
            for (long j = k; j <= n; ++j) {
                Rational anj = at_taylor(stirling_a(n, j), form.phi);
                if (anj == 0) continue;
                Rational r = evaluate(reciprocal_poly_hat(j - k),
                                      [&](int i) { return form.a.taylor(i); });
                coeff += binom(j, k) * r * anj;
            }
            if (coeff != 0) out += MultiPoly::variable(static_cast<int>(k)) * coeff;
        }
        return out;
    }
    for (long k = 0; k <= n; ++k) {
        Rational coeff(0);
        for (long j = k; j <= n; ++j) {
            Rational anj = at_taylor(stirling_a(n, j), form.phi);
            if (anj == 0) continue;
            Rational r = evaluate(reciprocal_poly_hat(j - k),
                                  [&](int i) { return form.a.taylor(i + 1) / Rational(i + 1); });
            coeff += binom(j, k) * r * anj;
        }
        if (coeff != 0) {
            out += MultiPoly::variable(static_cast<int>(k + 1)) * (coeff / Rational(k + 1));
        }
    }
    return out;
}

MultiPoly lambda_general(long n, const SeriesForm& form_a, const SeriesForm& form_b) {
    MultiPoly inner = compose_family(gamma_bar(n, form_b), [](int j) {
        return j == 0 ? MultiPoly() : stirling_a(j, 1);
    });
    return compose_family(inner, [&](int j) { return gamma_conv(j, form_a); });
}

MultiPoly lambda_special_units(long n, const PowerSeries& phi, const PowerSeries& psi) {
    MultiPoly out;
    for (long k = 1; k <= n; ++k) {
        Rational apsi = at_taylor(stirling_a(n, k), psi);
        if (apsi == 0) continue;
        MultiPoly s;
        for (long j = 1; j <= k; ++j) {
            Rational aphi = at_taylor(stirling_a(j, 1), phi);
            if (aphi != 0) s += stirling_a(k, j) * aphi;
        }
        out += s * apsi;
    }
    return out;
}

MultiPoly lambda_special_id(long n, const PowerSeries& phi, const PowerSeries& psi) {
    MultiPoly out;
    for (long k = 0; k <= n; ++k) {
        Rational apsi = at_taylor(stirling_a(n, k), psi);
        if (apsi == 0) continue;
        MultiPoly s;
        for (long j = 0; j <= k; ++j) {
            Rational bphi = at_taylor(bell(k, j), phi);
            if (bphi != 0) s += ihat(j, k) * bphi;
        }
        out += s * apsi;
    }
    return out;
}

MultiPoly ihat(long n, long k) {
    if (n < 0) return MultiPoly();
    MultiPoly out;
    if (n == 0) {
        return MultiPoly::variable(0, static_cast<int>(-(k + 1))) * rat(1, k + 1);
    }
    for (long j = 1; j <= n; ++j) {
        Rational c = falling(k + j, j - 1);
        if (j % 2 == 1) c = -c;
        if (c == 0) continue;
        out += MultiPoly::variable(0, static_cast<int>(-(k + 1 + j))) * bell(n, j) * c;
    }
    return out;
}

MultiPoly ipoly(long n, long k) {
    MultiPoly::Assignment sigma;
    sigma.emplace(0, MultiPoly(1));
    return ihat(n, k).substitute(sigma);
}

MultiPoly comtet_thm_f_lambda(long n, long s) {
    if (n < 1 || s < 1) throw DomainViolation("thm-F lambda needs n, s >= 1");
    MultiPoly out;
    for (long k = 1; k <= n; ++k) {
        Rational c = binom(s * n + k, k - 1) * Rational(factorial(k - 1));
        MultiPoly part = bell(n, k) * c;
        out += k % 2 == 0 ? part : -part;
    }
    return out;
}

bool comtet_thm_f_round_trip(const std::vector<Rational>& c, long s, long big_n) {
    if (c.empty() || c[0] != 1) throw DomainViolation("thm-F constants need c_0 = 1");
    if (s < 1) throw DomainViolation("thm-F needs s >= 1");
    auto cval = [&](int j) {
        return static_cast<size_t>(j) < c.size() ? c[j] : Rational(0);
    };
    auto build = [&](const std::function<Rational(int)>& coeffs) {
        std::vector<Rational> ord(static_cast<size_t>(big_n) + 1, Rational(0));
        for (long m = 0; s * m + 1 <= big_n; ++m) {
            ord[s * m + 1] = coeffs(static_cast<int>(m)) / Rational(factorial(m));
        }
        return PowerSeries::from_ordinary(std::move(ord));
    };
    PowerSeries f = build(cval);
    // The inverse carries d_m = Lambda_m(c_1, ..., c_m) for every m whose
    // monomial x^{sm+1} survives the truncation, not just m < |c|.
    long m_max = (big_n - 1) / s;
    std::vector<Rational> d(static_cast<size_t>(m_max) + 1, Rational(0));
    d[0] = 1;
    for (long m = 1; m <= m_max; ++m) {
        d[m] = evaluate(comtet_thm_f_lambda(m, s), cval);
    }
    PowerSeries g = build([&](int j) { return d[j]; });
    PowerSeries id = PowerSeries::identity(big_n);
    return agree_to_order(compose_0case(f, g), id, big_n) &&
           agree_to_order(compose_0case(g, f), id, big_n);
}

} // namespace mspoly
