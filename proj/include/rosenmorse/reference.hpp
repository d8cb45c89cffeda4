#pragma once

// Classical families from their standard three-term recurrences. These never
// touch the Rodrigues engine and serve as its reference.

#include <vector>

#include "rosenmorse/polynomial.hpp"

namespace rm::reference {

template <Scalar S>
using Family = std::vector<Polynomial<S>>;  // members 0..m_max

namespace detail {

template <Scalar S>
Family<S> run(unsigned m_max, Polynomial<S> p0, Polynomial<S> p1, auto&& step) {
    Family<S> out{std::move(p0)};
    if (m_max >= 1) out.push_back(std::move(p1));
    for (unsigned m = 1; m < m_max; ++m) out.push_back(step(m, out[m], out[m - 1]));
    return out;
}

template <Scalar S>
Polynomial<S> lin(const S& c0, const S& c1) {
    return Polynomial<S>{c0, c1};
}

}  // namespace detail

/// H_{m+1} = 2x H_m - 2m H_{m-1}
template <Scalar S>
Family<S> hermite(unsigned m_max) {
    return detail::run<S>(m_max, Polynomial<S>::constant(S(1)), detail::lin<S>(S(0), S(2)),
                          [](unsigned m, const Polynomial<S>& pm, const Polynomial<S>& pm1) {
                              return detail::lin<S>(S(0), S(2)) * pm - pm1 * S(2L * m);
                          });
}

/// (m+1) L_{m+1} = (2m+1+nu-x) L_m - (m+nu) L_{m-1}
template <Scalar S>
Family<S> laguerre(unsigned m_max, const S& nu) {
    return detail::run<S>(m_max, Polynomial<S>::constant(S(1)), detail::lin<S>(S(1) + nu, S(-1)),
                          [nu](unsigned m, const Polynomial<S>& pm, const Polynomial<S>& pm1) {
                              const S mm(static_cast<long>(m));
                              return (detail::lin<S>(S(2) * mm + S(1) + nu, S(-1)) * pm - pm1 * (mm + nu)) *
                                     (S(1) / (mm + S(1)));
                          });
}

/// Standard Jacobi recurrence for P^(nu,mu), weight (1-x)^nu (1+x)^mu.
template <Scalar S>
Family<S> jacobi(unsigned m_max, const S& nu, const S& mu) {
    const S p1c0 = (nu - mu) / S(2);
    const S p1c1 = (nu + mu + S(2)) / S(2);
    return detail::run<S>(
        m_max, Polynomial<S>::constant(S(1)), detail::lin<S>(p1c0, p1c1),
        [nu, mu](unsigned m, const Polynomial<S>& pm, const Polynomial<S>& pm1) {
            const S mm(static_cast<long>(m));
            const S c = S(2) * mm + nu + mu;
            const S a1 = S(2) * (mm + S(1)) * (mm + nu + mu + S(1)) * c;
            const S a2 = (c + S(1)) * (nu * nu - mu * mu);
            const S a3 = c * (c + S(1)) * (c + S(2));
            const S a4 = S(2) * (mm + nu) * (mm + mu) * (c + S(2));
            return (detail::lin<S>(a2, a3) * pm - pm1 * a4) * (S(1) / a1);
        });
}

/// (m+1) C_{m+1} = 2(m+lambda) x C_m - (m+2 lambda-1) C_{m-1}
template <Scalar S>
Family<S> gegenbauer(unsigned m_max, const S& lambda) {
    return detail::run<S>(m_max, Polynomial<S>::constant(S(1)), detail::lin<S>(S(0), S(2) * lambda),
                          [lambda](unsigned m, const Polynomial<S>& pm, const Polynomial<S>& pm1) {
                              const S mm(static_cast<long>(m));
                              return (detail::lin<S>(S(0), S(2) * (mm + lambda)) * pm -
                                      pm1 * (mm + S(2) * lambda - S(1))) *
                                     (S(1) / (mm + S(1)));
                          });
}

/// (m+1) P_{m+1} = (2m+1) x P_m - m P_{m-1}
template <Scalar S>
Family<S> legendre(unsigned m_max) {
    return detail::run<S>(m_max, Polynomial<S>::constant(S(1)), detail::lin<S>(S(0), S(1)),
                          [](unsigned m, const Polynomial<S>& pm, const Polynomial<S>& pm1) {
                              const S mm(static_cast<long>(m));
                              return (detail::lin<S>(S(0), S(2) * mm + S(1)) * pm - pm1 * mm) * (S(1) / (mm + S(1)));
                          });
}

/// T_{m+1} = 2x T_m - T_{m-1}
template <Scalar S>
Family<S> chebyshev1(unsigned m_max) {
    return detail::run<S>(m_max, Polynomial<S>::constant(S(1)), detail::lin<S>(S(0), S(1)),
                          [](unsigned, const Polynomial<S>& pm, const Polynomial<S>& pm1) {
                              return detail::lin<S>(S(0), S(2)) * pm - pm1;
                          });
}

/// U_{m+1} = 2x U_m - U_{m-1}
template <Scalar S>
Family<S> chebyshev2(unsigned m_max) {
    return detail::run<S>(m_max, Polynomial<S>::constant(S(1)), detail::lin<S>(S(0), S(2)),
                          [](unsigned, const Polynomial<S>& pm, const Polynomial<S>& pm1) {
                              return detail::lin<S>(S(0), S(2)) * pm - pm1;
                          });
}

/// True when p = k q for some nonzero scalar k (exact cross-multiplication).
inline bool proportional(const Polynomial<Rational>& p, const Polynomial<Rational>& q) {
    if (p.is_zero() || q.is_zero()) return false;
    if (p.degree() != q.degree()) return false;
    return p * q.leading() == q * p.leading();
}

}  // namespace rm::reference
