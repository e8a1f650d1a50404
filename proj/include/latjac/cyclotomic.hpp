#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_M), Gauss sums, and exact
// square roots of positive integers.

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>
#include <vector>

#include "lattice.hpp"
#include "numeric.hpp"

namespace latjac {

namespace detail {

// Coefficients (low to high) of the M-th cyclotomic polynomial, via the
// Moebius factorization of x^M - 1.
inline std::vector<Int> cyclotomic_poly(long M) {
    auto mul_xk_minus_1 = [](std::vector<Int> p, long k) {
        std::vector<Int> r(p.size() + static_cast<std::size_t>(k), Int(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            r[i + static_cast<std::size_t>(k)] += p[i];
            r[i] -= p[i];
        }
        return r;
    };
    auto div_xk_minus_1 = [](std::vector<Int> p, long k) {
        // Exact division by x^k - 1.
        std::vector<Int> q(p.size() - static_cast<std::size_t>(k), Int(0));
        for (std::size_t i = p.size(); i-- > static_cast<std::size_t>(k);) {
            Int c = p[i];
            q[i - static_cast<std::size_t>(k)] = c;
            p[i] -= c;
            p[i - static_cast<std::size_t>(k)] += c;
        }
        return q;
    };
    std::vector<Int> num{Int(1)};
    std::vector<long> dens;
    for (long d : divisors(M)) {
        int mu = moebius(M / d);
        if (mu == 1) num = mul_xk_minus_1(std::move(num), d);
        else if (mu == -1) dens.push_back(d);
    }
    for (long d : dens) num = div_xk_minus_1(std::move(num), d);
    return num;
}

struct CycloField {
    long M;
    long phi;
    std::vector<Int> poly;  // cyclotomic polynomial, monic, degree phi
};

inline const CycloField& cyclo_field(long M) {
    static std::mutex mu;
    static std::map<long, CycloField> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it == cache.end()) {
        CycloField f;
        f.M = M;
        f.poly = cyclotomic_poly(M);
        f.phi = static_cast<long>(f.poly.size()) - 1;
        it = cache.emplace(M, std::move(f)).first;
    }
    return it->second;
}

// Reduce a rational polynomial modulo the M-th cyclotomic polynomial.
inline void reduce_mod_cyclo(std::vector<Rat>& p, const CycloField& f) {
    std::size_t phi = static_cast<std::size_t>(f.phi);
    for (std::size_t i = p.size(); i-- > phi;) {
        if (p[i] == 0) continue;
        Rat c = p[i];
        p[i] = 0;
        for (std::size_t j = 0; j < phi; ++j)
            p[i - phi + j] -= c * Rat(f.poly[j]);
    }
    p.resize(phi);
}

}  // namespace detail

class CycloNum {
  public:
    CycloNum() : CycloNum(Rat(0)) {}
    explicit CycloNum(const Rat& r) : m_(1), c_{r} {}
    explicit CycloNum(const Int& n) : m_(1), c_{Rat(n)} {}
    explicit CycloNum(long n) : m_(1), c_{Rat(n)} {}

    // e_M(a) = exp(2 pi i a / M), with modulus canonically reduced by
    // gcd(a, M).
    static CycloNum root(long M, long a) {
        if (M < 1) throw Error("cyclo_root: modulus must be positive");
        a %= M;
        if (a < 0) a += M;
        long g = std::gcd(a, M);
        M /= g;
        a /= g;
        const auto& f = detail::cyclo_field(M);
        std::vector<Rat> p(static_cast<std::size_t>(a) + 1, Rat(0));
        p[static_cast<std::size_t>(a)] = 1;
        detail::reduce_mod_cyclo(p, f);
        return CycloNum(M, std::move(p));
    }

    // e(q) for rational q.
    static CycloNum e(const Rat& q) {
        Rat x = frac(q);
        return root(static_cast<long>(x.get_den().get_si()),
                    static_cast<long>(x.get_num().get_si()));
    }

    long modulus() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rat to_rational() const {
        if (!is_rational())
            throw IrrationalResultError("value is not rational");
        return c_.empty() ? Rat(0) : c_[0];
    }

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
        auto [x, y, M] = coerced(a, b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return CycloNum(M, std::move(x));
    }
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b) {
        auto [x, y, M] = coerced(a, b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
        return CycloNum(M, std::move(x));
    }
    CycloNum operator-() const {
        std::vector<Rat> x = c_;
        for (auto& v : x) v = -v;
        return CycloNum(m_, std::move(x));
    }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        auto [x, y, M] = coerced(a, b);
        const auto& f = detail::cyclo_field(M);
        std::vector<Rat> p(2 * x.size(), Rat(0));
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j)
                if (y[j] != 0) p[i + j] += x[i] * y[j];
        }
        detail::reduce_mod_cyclo(p, f);
        return CycloNum(M, std::move(p));
    }
    friend CycloNum operator*(const Rat& r, const CycloNum& a) {
        std::vector<Rat> x = a.c_;
        for (auto& v : x) v *= r;
        return CycloNum(a.m_, std::move(x));
    }
    friend CycloNum operator*(const CycloNum& a, const Rat& r) { return r * a; }
    friend CycloNum operator/(const CycloNum& a, const Rat& r) {
        return ratio(r.get_den(), r.get_num()) * a;
    }
    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) {
        return !(a == b);
    }

    CycloNum conj() const {
        // zeta^j -> zeta^(M-j).
        std::vector<Rat> p(static_cast<std::size_t>(m_), Rat(0));
        p[0] = c_[0];
        for (std::size_t j = 1; j < c_.size(); ++j)
            p[static_cast<std::size_t>(m_) - j] = c_[j];
        detail::reduce_mod_cyclo(p, detail::cyclo_field(m_));
        return CycloNum(m_, std::move(p));
    }

    CycloNum real_part() const { return (*this + conj()) * Rat(1, 2); }

    // Multiplicative inverse via the extended Euclidean algorithm against
    // the cyclotomic polynomial.
    CycloNum inverse() const {
        if (is_zero()) throw Error("division by zero");
        if (is_rational()) {
            Rat r = c_[0];
            return CycloNum(ratio(r.get_den(), r.get_num()));
        }
        const auto& f = detail::cyclo_field(m_);
        std::vector<Rat> r0;  // cyclotomic polynomial
        for (const auto& x : f.poly) r0.emplace_back(x);
        std::vector<Rat> r1 = c_;
        while (!r1.empty() && r1.back() == 0) r1.pop_back();
        std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients on *this
        auto deg = [](const std::vector<Rat>& p) {
            return static_cast<long>(p.size()) - 1;
        };
        while (deg(r1) > 0) {
            // r0 = q*r1 + r; long division.
            std::vector<Rat> q(
                static_cast<std::size_t>(std::max(deg(r0) - deg(r1), 0L)) + 1,
                Rat(0));
            std::vector<Rat> r = r0;
            while (static_cast<long>(r.size()) >= static_cast<long>(r1.size())) {
                std::size_t qi = r.size() - r1.size();
                Rat c = r.back() / r1.back();
                if (c != 0) {
                    q[qi] += c;
                    for (std::size_t j = 0; j < r1.size(); ++j)
                        r[qi + j] -= c * r1[j];
                }
                r.pop_back();
                while (!r.empty() && r.back() == 0) r.pop_back();
            }
            // s_new = s0 - q*s1.
            std::vector<Rat> snew(
                std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
            for (std::size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < s1.size(); ++j)
                    snew[i + j] -= q[i] * s1[j];
            }
            r0 = std::move(r1);
            s0 = std::move(s1);
            r1 = std::move(r);
            s1 = std::move(snew);
            if (r1.empty())
                throw Error("inverse: polynomial not coprime to modulus");
        }
        // r1 is a nonzero constant: inverse = s1 / r1[0].
        Rat d = r1[0];
        std::vector<Rat> res(s1.size());
        for (std::size_t i = 0; i < s1.size(); ++i) res[i] = s1[i] / d;
        detail::reduce_mod_cyclo(res, f);
        res.resize(static_cast<std::size_t>(f.phi), Rat(0));
        return CycloNum(m_, std::move(res));
    }

    std::complex<double> to_complex() const {
        std::complex<double> s = 0.0;
        const double tau = 6.283185307179586476925;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            double ang = tau * static_cast<double>(j) / static_cast<double>(m_);
            s += c_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return s;
    }

    // Coerce into Q(zeta_Mnew), M | Mnew.
    CycloNum coerce(long Mnew) const {
        if (Mnew == m_) return *this;
        if (Mnew % m_ != 0) throw Error("coerce: modulus not a multiple");
        long t = Mnew / m_;
        const auto& f = detail::cyclo_field(Mnew);
        std::vector<Rat> p(static_cast<std::size_t>(Mnew), Rat(0));
        for (std::size_t j = 0; j < c_.size(); ++j)
            p[j * static_cast<std::size_t>(t)] = c_[j];
        detail::reduce_mod_cyclo(p, f);
        return CycloNum(Mnew, std::move(p));
    }

  private:
    CycloNum(long M, std::vector<Rat> c) : m_(M), c_(std::move(c)) {
        c_.resize(static_cast<std::size_t>(detail::cyclo_field(m_).phi),
                  Rat(0));
    }

    static std::tuple<std::vector<Rat>, std::vector<Rat>, long> coerced(
        const CycloNum& a, const CycloNum& b) {
        long M = lcm_long(a.m_, b.m_);
        CycloNum x = a.coerce(M), y = b.coerce(M);
        return {x.c_, y.c_, M};
    }

    long m_;
    std::vector<Rat> c_;
};

inline CycloNum cyclo_root(long M, long a) { return CycloNum::root(M, a); }
inline CycloNum cyclo_e(const Rat& q) { return CycloNum::e(q); }
inline CycloNum e8(long a) { return cyclo_root(8, a); }

// Exact square root of a positive integer, via the quadratic Gauss sum
// sum_{a mod 4d} e_{4d}(a^2) = (1+i) sqrt(4d).
inline CycloNum sqrt_positive_integer(const Int& d0) {
    if (d0 < 1) throw Error("sqrt_positive_integer requires d >= 1");
    // Strip the square part: d0 = f^2 * m with m squarefree.
    Int f = 1, m = d0;
    for (Int p = 2; p * p <= m; ++p)
        while (m % (p * p) == 0) {
            m /= p * p;
            f *= p;
        }
    if (m == 1) return CycloNum(f);
    long md = m.get_si();
    CycloNum g(Rat(0));
    long N = 4 * md;
    for (long a = 0; a < N; ++a) g += cyclo_root(N, (a * a) % N);
    // s = g / (2(1+i)) = g * (1-i)/4.
    CycloNum one_minus_i = CycloNum(Rat(1)) - cyclo_root(4, 1);
    return ratio(f, 4) * g * one_minus_i;
}

// chi_L(t) = det^{-1/2} * sum over shadow cosets of e(t * beta(x)).
inline CycloNum gauss_sum_chi(const Lattice& L, const Int& t) {
    auto reps = shadow_reps(L);
    Int d(static_cast<long>(reps.size()));
    CycloNum s(Rat(0));
    for (const auto& c : reps) s += cyclo_e(Rat(t) * c.beta_mod1);
    // 1/sqrt(d) = sqrt(d)/d.
    return s * sqrt_positive_integer(d) / Rat(d);
}

struct GaussValue {
    CycloNum value;
    Int det;
};

inline GaussValue gauss_value(const Lattice& L, const Int& t) {
    return GaussValue{gauss_sum_chi(L, t), invariants_of(L).det};
}

// Milgram's formula (with the odd-lattice extension):
// chi_L(1) = e_8(signature) = e_8(n) for positive definite L.
inline bool milgram_check(const Lattice& L) {
    return gauss_sum_chi(L, 1) == e8(static_cast<long>(L.rank()) % 8);
}

}  // namespace latjac
