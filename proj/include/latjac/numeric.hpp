#pragma once

// Exact integer / rational helpers on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latjac {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// Error hierarchy (one class per spec error kind).
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
struct NonSymmetricError : Error { using Error::Error; };
struct NotPositiveDefiniteError : Error { using Error::Error; };
struct DegenerateError : Error { using Error::Error; };
struct NotSemiDefiniteError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct ModuleMismatchError : Error { using Error::Error; };
struct NotIsometricError : Error { using Error::Error; };
struct NotLInvariantError : Error { using Error::Error; };
struct IrrationalResultError : Error { using Error::Error; };
struct SyntaxError : Error { using Error::Error; };
struct UnknownLatticeError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Small numeric utilities.
// ---------------------------------------------------------------------------

// Canonicalized rational from numerator/denominator (mpq_class requires
// canonical form for correct arithmetic).
inline Rat ratio(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_rat(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }

// Fractional part in [0,1).
inline Rat frac(const Rat& x) {
    Rat r = x - Rat(floor_rat(x));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Sawtooth <x> = x - floor(x) - 1/2 (equals -1/2 at integers).
inline Rat sawtooth(const Rat& x) { return frac(x) - Rat(1, 2); }

// 2-adic valuation of a nonzero rational (valuation of num minus den).
inline long val2(const Rat& x) {
    if (x == 0) throw Error("val2 of zero");
    return static_cast<long>(mpz_scan1(x.get_num().get_mpz_t(), 0)) -
           static_cast<long>(mpz_scan1(x.get_den().get_mpz_t(), 0));
}

// Real character mod 12: +1 for m = ±1, -1 for m = ±5, 0 otherwise.
inline int kronecker12(const Int& m) {
    Int r = m % 12;
    if (r < 0) r += 12;
    if (r == 1 || r == 11) return 1;
    if (r == 5 || r == 7) return -1;
    return 0;
}

// Kronecker symbol (-4/r): +1 for r = 1 mod 4, -1 for r = 3 mod 4, 0 even.
inline int kronecker_m4(const Int& r) {
    Int m = r % 4;
    if (m < 0) m += 4;
    if (m == 1) return 1;
    if (m == 3) return -1;
    return 0;
}

// Kronecker symbol (12/r): +1 for r = ±1 mod 12, -1 for r = ±5 mod 12, 0 else.
inline int kronecker_12_over(const Int& r) { return kronecker12(r); }

inline long lcm_long(long a, long b) {
    Int l = lcm(Int(a), Int(b));
    return l.get_si();
}

inline bool is_perfect_square(const Int& d) {
    if (d < 0) return false;
    return mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

// Euler phi (desk scale: trial division).
inline long euler_phi(long m) {
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Moebius function.
inline int moebius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline bool is_squarefree(long n) {
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

// sigma_k(n): sum of k-th powers of divisors.
inline Int sigma_k(long n, int k) {
    Int s = 0;
    for (long d : divisors(n)) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(k));
        s += p;
    }
    return s;
}

}  // namespace latjac
