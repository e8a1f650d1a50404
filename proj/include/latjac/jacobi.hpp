#pragma once

// Two-variable exact q-expansions indexed by a positive definite lattice:
// theta series by exact lattice-point enumeration, products, tensor products,
// scalar multiplication by one-variable series, pullbacks along isometric
// embeddings, theta decomposition, the delta operator, and verification
// helpers (holomorphy, lattice invariance, Nullwert).

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "matrix.hpp"
#include "qseries.hpp"

namespace latjac {

// Keys are (24n, d*r) with d the common denominator of the stored shadow
// vectors r.  All keys with 24n <= prec24 and nonzero coefficient are stored.
struct JacobiQExp {
    Lattice index;
    Rat k = Rat(0);         // weight
    long h = 0;             // character exponent mod 24
    bool has_h = false;
    long denom = 1;
    long prec24 = 0;
    Rat D_min = Rat(0);     // floor for n - beta(r) (0 for holomorphic forms)
    std::map<std::pair<long, std::vector<long>>, Rat> c;

    RatVec vec_of(const std::vector<long>& key) const {
        RatVec r(key.size());
        for (std::size_t i = 0; i < key.size(); ++i)
            r[i] = ratio(Int(key[i]), Int(denom));
        return r;
    }
    Rat coeff(long n24, const std::vector<long>& dr) const {
        auto it = c.find({n24, dr});
        return it == c.end() ? Rat(0) : it->second;
    }
    void trim() {
        for (auto it = c.begin(); it != c.end();)
            it = (it->second == 0 || it->first.first > prec24)
                     ? c.erase(it)
                     : std::next(it);
    }
    long min_exp24() const {
        long m = prec24;
        for (const auto& [key, v] : c) m = std::min(m, key.first);
        return c.empty() ? 0 : m;
    }
};

namespace detail {

inline long round_to_long(const Rat& x) {
    return static_cast<long>(floor_rat(x + ratio(Int(1), Int(2))).get_si());
}

// Exact rational Cholesky data for q(x) = sum_i c_i (x_i + sum_{j>i} m_ij x_j)^2.
struct CholeskyForm {
    std::vector<Rat> c;
    RatMat m;
};

inline CholeskyForm cholesky_of(const IntMat& gram) {
    std::size_t n = gram.size();
    RatMat a(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = ratio(Int(gram[i][j]), Int(2));
    CholeskyForm f{std::vector<Rat>(n), RatMat(n, RatVec(n, Rat(0)))};
    for (std::size_t i = 0; i < n; ++i) {
        f.c[i] = a[i][i];
        for (std::size_t j = i + 1; j < n; ++j) f.m[i][j] = a[i][j] / a[i][i];
        for (std::size_t kk = i + 1; kk < n; ++kk)
            for (std::size_t l = i + 1; l < n; ++l)
                a[kk][l] -= a[kk][i] * a[i][l] / a[i][i];
    }
    return f;
}

// All vectors x in offset + Z^n with q(x) <= bound, visited via callback.
template <typename F>
inline void enumerate_level(const CholeskyForm& f, const RatVec& offset,
                            long i, RatVec& x, const Rat& budget, F&& visit) {
    if (i < 0) {
        visit(const_cast<const RatVec&>(x));
        return;
    }
    Rat t(0);
    for (std::size_t j = i + 1; j < offset.size(); ++j)
        t += f.m[i][j] * x[j];
    // c_i (offset_i + u + t)^2 <= budget; the admissible integers u form an
    // interval around the minimizer.
    Rat center = -t - offset[i];
    long u0 = round_to_long(center);
    auto term = [&](long u) -> Rat {
        Rat y = offset[i] + Rat(u) + t;
        return f.c[i] * y * y;
    };
    for (long u = u0; term(u) <= budget; ++u) {
        x[i] = offset[i] + Rat(u);
        enumerate_level(f, offset, i - 1, x, budget - term(u), visit);
    }
    for (long u = u0 - 1; term(u) <= budget; --u) {
        x[i] = offset[i] + Rat(u);
        enumerate_level(f, offset, i - 1, x, budget - term(u), visit);
    }
}

inline long lcm_of_denoms(const RatVec& v, long seed = 1) {
    long d = seed;
    for (const Rat& q : v) d = lcm_long(d, static_cast<long>(q.get_den().get_si()));
    return d;
}

inline std::vector<long> scaled_key(const RatVec& r, long d) {
    std::vector<long> key(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Rat s = r[i] * d;
        if (!is_integer(s)) throw Error("denominator mismatch in key");
        key[i] = static_cast<long>(s.get_num().get_si());
    }
    return key;
}

// e(beta(x)) = (-1)^{x^t G x} for integral x.
inline int translate_sign(const Lattice& L, const RatVec& x) {
    Rat b = beta_value(L, x) * 2;
    if (!is_integer(b)) throw Error("translate_sign: non-integral vector");
    return mpz_odd_p(b.get_num().get_mpz_t()) ? -1 : 1;
}

inline void set_common_denom(JacobiQExp& phi, long d) {
    if (d == phi.denom) return;
    if (d % phi.denom != 0) throw Error("denominator refinement must divide");
    long f = d / phi.denom;
    std::map<std::pair<long, std::vector<long>>, Rat> out;
    for (auto& [key, v] : phi.c) {
        std::vector<long> dr = key.second;
        for (long& e : dr) e *= f;
        out[{key.first, dr}] = v;
    }
    phi.c = std::move(out);
    phi.denom = d;
}

}  // namespace detail

// theta_series(L, lambda, N): sum over r in sh L with beta(r) <= N of
// lambda(coset of r) e(beta(r - rep)) q^{beta(r)} e(beta(r,z)).  The sign
// factor makes the result L-invariant also for odd lattices.
inline JacobiQExp theta_series(const Lattice& L, const std::vector<Rat>& lambda,
                               const Rat& N) {
    if (L.definiteness != Definiteness::PositiveDefinite)
        throw NotPositiveDefiniteError("theta_series needs a definite index");
    auto reps = shadow_reps(L);
    if (lambda.size() != reps.size())
        throw DimensionMismatchError("lambda must live on the shadow cosets");
    std::size_t n = L.rank();
    JacobiQExp phi;
    phi.index = L;
    phi.k = ratio(Int(static_cast<long>(n)), Int(2));
    phi.prec24 = static_cast<long>(floor_rat(N * 24).get_si());
    long d = 1;
    for (const auto& c : reps) d = detail::lcm_of_denoms(c.rep, d);
    phi.denom = d;
    detail::CholeskyForm f = detail::cholesky_of(L.gram);
    bool h_known = true;
    long h_val = -1;
    for (std::size_t ci = 0; ci < reps.size(); ++ci) {
        if (lambda[ci] == 0) continue;
        Rat b24 = frac(reps[ci].beta_mod1) * 24;
        if (!is_integer(b24))
            h_known = false;
        else {
            long hv = static_cast<long>(b24.get_num().get_si());
            if (h_val == -1) h_val = hv;
            if (hv != h_val) h_known = false;
        }
        RatVec x(n, Rat(0));
        detail::enumerate_level(
            f, reps[ci].rep, static_cast<long>(n) - 1, x, N,
            [&](const RatVec& r) {
                RatVec t(n);
                for (std::size_t i = 0; i < n; ++i) t[i] = r[i] - reps[ci].rep[i];
                Rat coeff = lambda[ci] * detail::translate_sign(L, t);
                Rat n24 = beta_value(L, r) * 24;
                phi.c[{static_cast<long>(n24.get_num().get_si()),
                       detail::scaled_key(r, d)}] = coeff;
            });
    }
    if (h_known && h_val >= 0) {
        phi.h = h_val;
        phi.has_h = true;
    }
    phi.trim();
    return phi;
}

inline JacobiQExp jacobi_scale(const JacobiQExp& a, const Rat& v) {
    JacobiQExp s = a;
    for (auto& [key, w] : s.c) w *= v;
    s.trim();
    return s;
}

inline JacobiQExp jacobi_add(const JacobiQExp& a, const JacobiQExp& b) {
    if (a.index.gram != b.index.gram)
        throw ModuleMismatchError("addition requires equal index");
    JacobiQExp s = a;
    JacobiQExp bb = b;
    long d = lcm_long(a.denom, b.denom);
    detail::set_common_denom(s, d);
    detail::set_common_denom(bb, d);
    s.prec24 = std::min(a.prec24, b.prec24);
    s.D_min = std::min(a.D_min, b.D_min);
    for (const auto& [key, v] : bb.c) s.c[key] += v;
    s.trim();
    return s;
}

inline JacobiQExp jacobi_sub(const JacobiQExp& a, const JacobiQExp& b) {
    return jacobi_add(a, jacobi_scale(b, Rat(-1)));
}

// Product of forms on the same module: index Grams add.
inline JacobiQExp jacobi_mul(const JacobiQExp& a, const JacobiQExp& b) {
    if (a.index.rank() != b.index.rank())
        throw ModuleMismatchError("product requires equal rank");
    std::size_t n = a.index.rank();
    IntMat g(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g[i][j] = a.index.gram[i][j] + b.index.gram[i][j];
    JacobiQExp s;
    s.index = make_lattice(g);
    s.k = a.k + b.k;
    if (a.has_h && b.has_h) {
        s.h = ((a.h + b.h) % 24 + 24) % 24;
        s.has_h = true;
    }
    s.prec24 = std::min(a.prec24 + b.min_exp24(), b.prec24 + a.min_exp24());
    s.D_min = a.D_min + b.D_min;
    // The elliptic pairings add: r1^t G_a + r2^t G_b = r^t (G_a + G_b).
    RatMat ginv = rat_inverse(to_rat(g));
    RatMat ga = to_rat(a.index.gram), gb = to_rat(b.index.gram);
    std::vector<std::tuple<long, RatVec, Rat>> entries;
    long d = 1;
    for (const auto& [ka, va] : a.c) {
        RatVec pa = vec_mat(a.vec_of(ka.second), ga);
        for (const auto& [kb, vb] : b.c) {
            long e = ka.first + kb.first;
            if (e > s.prec24) continue;
            RatVec p = vec_mat(b.vec_of(kb.second), gb);
            for (std::size_t i = 0; i < n; ++i) p[i] += pa[i];
            RatVec r = vec_mat(p, ginv);
            d = detail::lcm_of_denoms(r, d);
            entries.emplace_back(e, std::move(r), va * vb);
        }
    }
    s.denom = d;
    for (const auto& [e, r, v] : entries)
        s.c[{e, detail::scaled_key(r, d)}] += v;
    s.trim();
    return s;
}

// Tensor product: index direct sum, elliptic variables concatenated.
inline JacobiQExp jacobi_tensor(const JacobiQExp& a, const JacobiQExp& b) {
    JacobiQExp s;
    s.index = direct_sum(a.index, b.index);
    s.k = a.k + b.k;
    if (a.has_h && b.has_h) {
        s.h = ((a.h + b.h) % 24 + 24) % 24;
        s.has_h = true;
    }
    s.denom = lcm_long(a.denom, b.denom);
    s.prec24 = std::min(a.prec24 + b.min_exp24(), b.prec24 + a.min_exp24());
    s.D_min = a.D_min + b.D_min;
    long fa = s.denom / a.denom, fb = s.denom / b.denom;
    for (const auto& [ka, va] : a.c)
        for (const auto& [kb, vb] : b.c) {
            long e = ka.first + kb.first;
            if (e > s.prec24) continue;
            std::vector<long> dr;
            dr.reserve(ka.second.size() + kb.second.size());
            for (long x : ka.second) dr.push_back(x * fa);
            for (long x : kb.second) dr.push_back(x * fb);
            s.c[{e, dr}] += va * vb;
        }
    s.trim();
    return s;
}

inline JacobiQExp jacobi_scalar_mul(const QSeries24& f, const JacobiQExp& phi) {
    JacobiQExp s;
    s.index = phi.index;
    s.k = phi.k + f.weight;
    if (phi.has_h) {
        s.h = ((phi.h + f.offset) % 24 + 24) % 24;
        s.has_h = true;
    }
    s.denom = phi.denom;
    s.prec24 = std::min(f.prec24 + phi.min_exp24(), phi.prec24 + f.min_exp24());
    s.D_min = phi.D_min + ratio(Int(f.min_exp24()), Int(24));
    for (const auto& [e1, v1] : f.c)
        for (const auto& [key, v2] : phi.c) {
            long e = e1 + key.first;
            if (e > s.prec24) continue;
            s.c[{e, key.second}] += v1 * v2;
        }
    s.trim();
    return s;
}

// phi(tau, d z), a form on the rescaled index L(d^2).
inline JacobiQExp dilate(const JacobiQExp& phi, long d) {
    JacobiQExp s = phi;
    s.index = rescale(phi.index, d * d);
    s.denom = phi.denom * d;
    return s;
}

// Pullback along the isometric embedding with rows A = images of the basis
// of L' inside the index of phi.
inline JacobiQExp pullback(const JacobiQExp& phi, const RatMat& A,
                           const Lattice& Lprime) {
    std::size_t np = Lprime.rank(), n = phi.index.rank();
    if (A.size() != np || (np > 0 && A[0].size() != n))
        throw DimensionMismatchError("embedding matrix shape");
    RatMat gm = to_rat(phi.index.gram);
    RatMat check = mat_mul(mat_mul(A, gm), transpose(A));
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < np; ++j)
            if (check[i][j] != Rat(Lprime.gram[i][j]))
                throw NotIsometricError("embedding is not isometric");
    RatMat proj = mat_mul(mat_mul(gm, transpose(A)),
                          rat_inverse(to_rat(Lprime.gram)));
    JacobiQExp s;
    s.index = Lprime;
    s.k = phi.k;
    s.h = phi.h;
    s.has_h = phi.has_h;
    s.prec24 = phi.prec24;
    s.D_min = phi.D_min;
    // First pass: common denominator of all projected vectors.
    std::vector<std::pair<long, RatVec>> projected;
    long d = 1;
    for (const auto& [key, v] : phi.c) {
        RatVec r = phi.vec_of(key.second);
        RatVec pr = vec_mat(r, proj);
        d = detail::lcm_of_denoms(pr, d);
        projected.emplace_back(key.first, std::move(pr));
    }
    s.denom = d;
    std::size_t idx = 0;
    for (const auto& [key, v] : phi.c) {
        const auto& [e, pr] = projected[idx++];
        s.c[{e, detail::scaled_key(pr, d)}] += v;
    }
    s.trim();
    return s;
}

inline JacobiQExp pullback(const JacobiQExp& phi, const RatMat& A) {
    std::size_t np = A.size(), n = phi.index.rank();
    RatMat gm = to_rat(phi.index.gram);
    RatMat g = mat_mul(mat_mul(A, gm), transpose(A));
    IntMat gi(np, IntVec(np));
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < np; ++j) {
            if (!is_integer(g[i][j]))
                throw NotIsometricError("pulled-back Gram is not integral");
            gi[i][j] = Int(g[i][j].get_num());
        }
    (void)n;
    return pullback(phi, A, make_lattice(gi));
}

inline RatMat to_rat_mat(const IntMat& a) { return to_rat(a); }

inline bool verify_holomorphic(const JacobiQExp& phi) {
    for (const auto& [key, v] : phi.c) {
        Rat D = ratio(Int(key.first), Int(24)) -
                beta_value(phi.index, phi.vec_of(key.second));
        if (D < 0) return false;
    }
    return true;
}

inline QSeries24 nullwert(const JacobiQExp& phi) {
    QSeries24 s;
    s.offset = phi.has_h ? phi.h : 0;
    s.weight = phi.k - ratio(Int(static_cast<long>(phi.index.rank())), Int(2));
    s.prec24 = phi.prec24;
    for (const auto& [key, v] : phi.c) s.c[key.first] += v;
    s.trim();
    return s;
}

// c(n, r) = e(beta(x)) c(n + beta(r+x) - beta(r), r + x) for all lattice
// translates x, checked exhaustively over unit translates within precision.
inline bool check_L_invariance(const JacobiQExp& phi) {
    const Lattice& L = phi.index;
    std::size_t n = L.rank();
    for (const auto& [key, v] : phi.c) {
        RatVec r = phi.vec_of(key.second);
        // Shadow membership: beta(r, e_i) = beta(e_i) mod Z.
        for (std::size_t i = 0; i < n; ++i) {
            RatVec ei(n, Rat(0));
            ei[i] = 1;
            if (!is_integer(beta_pair(L, r, ei) - beta_value(L, ei)))
                return false;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (int sgn : {1, -1}) {
                RatVec x(n, Rat(0));
                x[i] = sgn;
                RatVec rx(n);
                for (std::size_t j = 0; j < n; ++j) rx[j] = r[j] + x[j];
                Rat nprime =
                    ratio(Int(key.first), Int(24)) + beta_value(L, rx) -
                    beta_value(L, r);
                Rat np24 = nprime * 24;
                if (!is_integer(np24)) return false;
                long e = static_cast<long>(np24.get_num().get_si());
                if (e > phi.prec24) continue;
                Rat other = phi.coeff(e, detail::scaled_key(rx, phi.denom));
                if (v != Rat(detail::translate_sign(L, x)) * other)
                    return false;
            }
    }
    return true;
}

// Theta decomposition: phi = sum_{cosets} h_coset * theta_coset with
// h_coset(D) = C(D, rep), exponents D = n - beta(r).
struct ThetaDecomposition {
    std::vector<ShadowCoset> cosets;
    std::vector<QSeries24> h;
};

inline ThetaDecomposition theta_decompose(const JacobiQExp& phi) {
    if (!check_L_invariance(phi))
        throw NotLInvariantError("form is not L-invariant");
    const Lattice& L = phi.index;
    ThetaDecomposition dec{shadow_reps(L), {}};
    dec.h.resize(dec.cosets.size());
    for (std::size_t ci = 0; ci < dec.cosets.size(); ++ci) {
        Rat b24 = dec.cosets[ci].beta_mod1 * 24;
        if (!is_integer(b24))
            throw Error("theta_decompose: unsupported coset denominator");
        dec.h[ci].prec24 = phi.prec24 -
                           static_cast<long>(b24.get_num().get_si());
        dec.h[ci].weight = phi.k -
                           ratio(Int(static_cast<long>(L.rank())), Int(2));
        if (phi.has_h)
            dec.h[ci].offset =
                ((phi.h - static_cast<long>(b24.get_num().get_si())) % 24 +
                 24) %
                24;
    }
    for (const auto& [key, v] : phi.c) {
        RatVec r = phi.vec_of(key.second);
        RatVec rep(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) rep[i] = frac(r[i]);
        std::size_t ci = 0;
        while (ci < dec.cosets.size() && dec.cosets[ci].rep != rep) ++ci;
        if (ci == dec.cosets.size())
            throw NotLInvariantError("key outside the shadow");
        RatVec x(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) x[i] = r[i] - rep[i];
        Rat D24 = Rat(key.first) - beta_value(L, r) * 24;
        if (!is_integer(D24))
            throw Error("theta_decompose: non-integral 24D");
        long e = static_cast<long>(D24.get_num().get_si());
        // Canonical coefficient C(D, rep) = e(beta(x)) c(n, r).
        dec.h[ci].c[e] = Rat(detail::translate_sign(L, x)) * v;
    }
    for (auto& s : dec.h) s.trim();
    return dec;
}

// Reconstruction sum h_coset * theta_coset, exact to the joint precision.
inline JacobiQExp theta_reconstruct(const ThetaDecomposition& dec,
                                    const Lattice& L, long prec24) {
    JacobiQExp acc;
    bool first = true;
    for (std::size_t ci = 0; ci < dec.cosets.size(); ++ci) {
        std::vector<Rat> lambda(dec.cosets.size(), Rat(0));
        lambda[ci] = 1;
        JacobiQExp th = theta_series(L, lambda, ratio(Int(prec24), Int(24)));
        JacobiQExp term = jacobi_scalar_mul(dec.h[ci], th);
        acc = first ? term : jacobi_add(acc, term);
        first = false;
    }
    acc.prec24 = std::min(acc.prec24, prec24);
    acc.trim();
    return acc;
}

inline bool jacobi_agree(const JacobiQExp& a, const JacobiQExp& b) {
    if (a.index.gram != b.index.gram) return false;
    long p = std::min(a.prec24, b.prec24);
    long d = lcm_long(a.denom, b.denom);
    JacobiQExp aa = a, bb = b;
    detail::set_common_denom(aa, d);
    detail::set_common_denom(bb, d);
    for (const auto& [key, v] : aa.c)
        if (key.first <= p && v != bb.coeff(key.first, key.second))
            return false;
    for (const auto& [key, v] : bb.c)
        if (key.first <= p && v != aa.coeff(key.first, key.second))
            return false;
    return true;
}

// delta phi = sum (q d/dq h_coset) theta_coset - (1/12)(k - n/2) E2 phi,
// a form of weight k + 2 with the same index and character.
inline JacobiQExp delta_operator(const JacobiQExp& phi) {
    ThetaDecomposition dec = theta_decompose(phi);
    for (auto& s : dec.h) s = qs_qdq(s);
    JacobiQExp lead = theta_reconstruct(dec, phi.index, phi.prec24);
    Rat factor = (phi.k - ratio(Int(static_cast<long>(phi.index.rank())),
                                Int(2))) /
                 12;
    QSeries24 e2 = series_E(2, phi.prec24 / 24 + 1);
    JacobiQExp corr = jacobi_scalar_mul(qs_scale(e2, factor), phi);
    JacobiQExp out = jacobi_sub(lead, corr);
    out.k = phi.k + 2;
    out.h = phi.h;
    out.has_h = phi.has_h;
    return out;
}

}  // namespace latjac
