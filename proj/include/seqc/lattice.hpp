#pragma once

#include <utility>

#include "seqc/natural.hpp"

namespace seqc {

// Row vector of a rank-2 integer lattice.
struct LatticeVec {
    mpz_class a;
    mpz_class b;
};

inline mpz_class sup_norm(const LatticeVec& w) {
    mpz_class aa = abs(w.a), bb = abs(w.b);
    return aa > bb ? aa : bb;
}

namespace detail {

// Integer mu minimizing sup_norm(v - mu*u) for u != 0. The objective is
// convex piecewise-linear in mu, so the integer minimum sits next to one of
// the four real critical points |v.a - mu u.a| = 0, |v.b - mu u.b| = 0,
// or the two balance points where the component magnitudes cross.
inline mpz_class best_sup_mu(const LatticeVec& u, const LatticeVec& v) {
    mpz_class best_mu = 0;
    mpz_class best = sup_norm(v);
    auto consider = [&](const mpz_class& mu) {
        LatticeVec w{v.a - mu * u.a, v.b - mu * u.b};
        const mpz_class s = sup_norm(w);
        if (s < best) {
            best = s;
            best_mu = mu;
        }
    };
    auto around = [&](const mpz_class& num, const mpz_class& den) {
        if (den == 0) return;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        consider(q);
        consider(q + 1);
    };
    around(v.a, u.a);
    around(v.b, u.b);
    around(v.a + v.b, u.a + u.b);
    around(v.a - v.b, u.a - u.b);
    return best_mu;
}

} // namespace detail

// Lagrange reduction of a rank-2 basis under the sup norm: on return u is a
// shortest lattice vector and v a shortest vector independent of u, both in
// the sup norm.
inline void lagrange_reduce(LatticeVec& u, LatticeVec& v) {
    if (sup_norm(u) > sup_norm(v)) std::swap(u, v);
    while (sup_norm(u) > 0) {
        const mpz_class mu = detail::best_sup_mu(u, v);
        if (mu == 0) break;
        v.a -= mu * u.a;
        v.b -= mu * u.b;
        if (sup_norm(v) >= sup_norm(u)) break;
        std::swap(u, v);
    }
}

} // namespace seqc
