#pragma once

// Dimensions of spaces of Jacobi forms of lattice index: the closed formula
// (exact for k >= n/2 + 2), the low-weight window logic, Eisenstein counts,
// module ranks over C[E4, E6], Hilbert-Poincare numerators, stable-equivalence
// dimension checks, and critical-weight component enumeration.

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "lattice.hpp"
#include "theta_rep.hpp"

namespace latjac {

enum class Exactness { Exact, FormulaMinusSkewCusp, Unknown };
enum class DimMethod { formula, singular, zero_propagation, user_override };

struct DimResult {
    Rat value;
    Exactness exactness;
    DimMethod method;
};

namespace detail {

inline void require_half_integer(const Rat& k) {
    if (k.get_den() != 1 && k.get_den() != 2)
        throw Error("weight must be a half-integer");
}

// pry = k - h/2 when integral; sets ok = false otherwise.
inline long parity_weight(const Rat& k, long h, bool& ok) {
    Rat pry = k - ratio(Int(h), Int(2));
    ok = is_integer(pry);
    return ok ? static_cast<long>(pry.get_num().get_si()) : 0;
}

inline Int two_power(long e) {
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return t;
}

}  // namespace detail

// The right-hand side of the dimension formula; equals
// dim J_{k,L}(eps^h) - dim J^{skew,cusp}_{n+2-k,L}(eps^h), and the exact
// dimension once k >= n/2 + 2.
inline Rat dim_formula(const Lattice& L, const Rat& k, long h) {
    detail::require_half_integer(k);
    h = ((h % 24) + 24) % 24;
    bool integral = false;
    long pry = detail::parity_weight(k, h, integral);
    if (!integral) return Rat(0);
    long n = static_cast<long>(L.rank());
    LatticeInfo info = invariants_of(L);
    long sgn_pn = (pry + info.n2) % 2 == 0 ? 1 : -1;
    Int two_nn2 = detail::two_power(n - info.n2);

    Rat total = ratio(Int(1), Int(24)) * (k - ratio(Int(n), Int(2)) - 1) *
                Rat(info.det + Rat(sgn_pn) * Rat(two_nn2));
    total += Rat(kronecker12(2 * pry + 2 * n + 1)) * ratio(Int(1), Int(6));

    // Character-sum terms, assembled exactly in a cyclotomic field.
    CycloNum acc(Rat(0));
    acc += (cyclo_root(4, pry) * gauss_sum_chi(L, 2)).real_part() * Rat(1, 4);
    // 1/(3 sqrt 3) = sqrt(3)/9.
    CycloNum sqrt3 = sqrt_positive_integer(3);
    long sgn_p = pry % 2 == 0 ? 1 : -1;
    acc += sqrt3 *
           (cyclo_root(6, pry) * cyclo_root(24, n + 2) * gauss_sum_chi(L, -3))
               .real_part() *
           ratio(Int(sgn_p), Int(9));
    total += acc.to_rational();  // IrrationalResultError must never fire

    Rat h24 = ratio(Int(h), Int(24));
    Rat saw_all(0), saw_two(0);
    for (const ShadowCoset& c : shadow_reps(L)) {
        Rat s = sawtooth(h24 - c.beta_mod1);
        saw_all += s;
        if (c.order2) saw_two += s;
    }
    total -= saw_all * ratio(Int(1), Int(2));
    total -= saw_two * ratio(Int(sgn_pn), Int(2));
    return total;
}

// dim J^Eis_k + dim J^{skew,Eis}_{n+2-k}, a count of shadow cosets with
// beta(x) = h/24 mod Z weighted by the order-2 sign.
inline Rat eisenstein_count(const Lattice& L, const Rat& k, long h) {
    detail::require_half_integer(k);
    h = ((h % 24) + 24) % 24;
    bool integral = false;
    long pry = detail::parity_weight(k, h, integral);
    if (!integral) throw Error("eisenstein_count requires k = h/2 mod Z");
    LatticeInfo info = invariants_of(L);
    long sgn = (pry + info.n2) % 2 == 0 ? 1 : -1;
    Rat h24 = ratio(Int(h), Int(24));
    long all = 0, two = 0;
    for (const ShadowCoset& c : shadow_reps(L))
        if (frac(c.beta_mod1 - h24) == 0) {
            ++all;
            if (c.order2) ++two;
        }
    return ratio(Int(all + sgn * two), Int(2));
}

// Ranks of the even/odd submodules of Jacobi forms over C[E4, E6].
inline std::pair<Int, Int> module_ranks(const Lattice& L) {
    LatticeInfo info = invariants_of(L);
    long n = static_cast<long>(L.rank());
    Int t = detail::two_power(n - info.n2);
    if (info.n2 % 2 != 0) t = -t;
    return {(info.det + t) / 2, (info.det - t) / 2};
}

// Exactness ladder.  `lower_bound` is an externally constructed dimension
// lower bound (from explicit q-expansions) used to pin the window
// n/2 < k < n/2 + 2 against the propagation upper bound.
inline DimResult dim_jacobi(const Lattice& L, const Rat& k, long h,
                            long lower_bound = 0) {
    detail::require_half_integer(k);
    h = ((h % 24) + 24) % 24;
    long n = static_cast<long>(L.rank());
    Rat n2r = ratio(Int(n), Int(2));
    bool integral = false;
    (void)detail::parity_weight(k, h, integral);
    if (!integral) return {Rat(0), Exactness::Exact, DimMethod::formula};
    if (k < n2r) return {Rat(0), Exactness::Exact, DimMethod::formula};
    if (k == n2r)
        return {Rat(singular_dimension(L, h)), Exactness::Exact,
                DimMethod::singular};
    if (k >= n2r + 2) {
        Rat v = dim_formula(L, k, h);
        if (!is_integer(v) || v < 0)
            throw IrrationalResultError("formula value not a dimension");
        return {v, Exactness::Exact, DimMethod::formula};
    }
    // Window n/2 < k < n/2 + 2: propagate upper bounds through injective
    // multiplication maps (eta^4, eta^2, E4), all landing in the exact regime.
    Rat ub = dim_formula(L, k + 2, h + 4);          // eta^4
    if (k + 1 >= n2r + 2) {
        Rat u2 = dim_formula(L, k + 1, h + 2);      // eta^2
        if (u2 < ub) ub = u2;
    }
    Rat u4 = dim_formula(L, k + 4, h);              // E4
    if (u4 < ub) ub = u4;
    if (ub == 0)
        return {Rat(0), Exactness::Exact, DimMethod::zero_propagation};
    if (Rat(lower_bound) == ub)
        return {ub, Exactness::Exact, DimMethod::user_override};
    return {dim_formula(L, k, h), Exactness::Unknown, DimMethod::formula};
}

// ---------------------------------------------------------------------------
// Hilbert-Poincare numerators.
// ---------------------------------------------------------------------------

enum class Parity { even, odd };

struct HPTerm {
    long exp2k;   // exponent of t, equal to twice the weight
    long coeff;   // b(k); meaningful only when !unknown
    bool unknown;
};

struct HPResult {
    Parity parity;
    std::vector<HPTerm> terms;  // denominator is (1-t^4)(1-t^6)
    bool complete() const {
        for (const auto& t : terms)
            if (t.unknown) return false;
        return true;
    }
    long value_at_one() const {
        long s = 0;
        for (const auto& t : terms) s += t.coeff;
        return s;
    }
};

// Q_{parity,L,h}(t): generator-degree polynomial of the free module of
// Jacobi forms over C[E4, E6].  `overrides` maps weights (where dim_jacobi
// alone is Unknown) to externally established dimensions.
inline HPResult hp_polynomial(const Lattice& L, long h, Parity parity,
                              const std::map<Rat, long>& overrides = {}) {
    h = ((h % 24) + 24) % 24;
    long n = static_cast<long>(L.rank());
    Rat n2r = ratio(Int(n), Int(2));
    // Starting weight: the unique k in [n/2, n/2+2) with
    // k = h/2 + parity mod 2Z.
    Rat target = frac((ratio(Int(h), Int(2)) +
                       (parity == Parity::odd ? Rat(1) : Rat(0))) /
                      2) *
                 2;  // representative of the class mod 2 in [0,2)
    Rat s = n2r + frac((target - n2r) / 2) * 2;

    auto dim_at = [&](const Rat& j) -> std::pair<long, bool> {
        if (j < n2r) return {0, true};
        auto it = overrides.find(j);
        DimResult r = dim_jacobi(L, j, h, it != overrides.end() ? it->second
                                                                : 0);
        if (r.exactness == Exactness::Exact)
            return {static_cast<long>(r.value.get_num().get_si()), true};
        if (it != overrides.end()) return {it->second, true};
        return {0, false};
    };

    HPResult out{parity, {}};
    for (Rat kk = s; kk < n2r + 12; kk += 2) {
        auto [a0, ok0] = dim_at(kk);
        auto [a4, ok4] = dim_at(kk - 4);
        auto [a6, ok6] = dim_at(kk - 6);
        auto [a10, ok10] = dim_at(kk - 10);
        bool ok = ok0 && ok4 && ok6 && ok10;
        long b = a0 - a4 - a6 + a10;
        long e = static_cast<long>(Rat(kk * 2).get_num().get_si());
        if (!ok)
            out.terms.push_back({e, 0, true});
        else if (b != 0)
            out.terms.push_back({e, b, false});
    }
    return out;
}

// Stable equivalence: lattices with isomorphic bilinear discriminant modules
// have equal dimensions after the weight/character shift by (n_i/2, 3 n_i).
inline bool stable_equiv_dim_check(const Lattice& L1, const Lattice& L2,
                                   long h, const std::vector<Rat>& k_list) {
    long n1 = static_cast<long>(L1.rank()), n2 = static_cast<long>(L2.rank());
    for (const Rat& k : k_list) {
        Rat d1 = dim_formula(L1, k + ratio(Int(n1), Int(2)), h + 3 * n1);
        Rat d2 = dim_formula(L2, k + ratio(Int(n2), Int(2)), h + 3 * n2);
        if (d1 != d2) return false;
    }
    return true;
}

// Components of the critical-weight space J_{(n+1)/2,L}(eps^h): divisors
// N' | N with N/N' square-free, each contributing the singular space of the
// rank-enlarged lattice Z(2N') + L.
inline std::vector<std::pair<long, long>> critical_components(const Lattice& L,
                                                              long h) {
    h = ((h % 24) + 24) % 24;
    LatticeInfo info = invariants_of(L);
    long hpart = 24 / std::gcd(24L, h == 0 ? 24L : h);
    long N = lcm_long(info.level, hpart);
    std::vector<std::pair<long, long>> out;
    for (long d : divisors(N))
        if (is_squarefree(N / d)) {
            Lattice enlarged = direct_sum(rescale(lattice_Zn(1), 2 * d), L);
            out.emplace_back(d, singular_dimension(enlarged, h));
        }
    return out;
}

}  // namespace latjac
