#pragma once

// One-variable exact q-expansions with exponents in (1/24)Z: eta powers and
// the Eisenstein series E2, E4, E6, with precision-tracking arithmetic.

#include <map>

#include "numeric.hpp"

namespace latjac {

// Exponents are n/24 with the key n integral; `offset` records the class of
// the exponents mod Z (times 24), which for eta powers coincides with the
// character exponent.  Terms with key <= prec24 are stored; larger ones are
// truncated.
struct QSeries24 {
    long offset = 0;
    Rat weight = Rat(0);
    long prec24 = 0;
    std::map<long, Rat> c;

    Rat coeff(long n24) const {
        auto it = c.find(n24);
        return it == c.end() ? Rat(0) : it->second;
    }
    long min_exp24() const { return c.empty() ? 0 : c.begin()->first; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        for (auto it = c.begin(); it != c.end();)
            it = (it->second == 0 || it->first > prec24) ? c.erase(it)
                                                         : std::next(it);
    }
};

inline QSeries24 qs_constant(const Rat& v, long prec24) {
    QSeries24 s;
    s.prec24 = prec24;
    if (v != 0) s.c[0] = v;
    return s;
}

inline QSeries24 qs_add(const QSeries24& a, const QSeries24& b) {
    QSeries24 s = a;
    s.prec24 = std::min(a.prec24, b.prec24);
    for (const auto& [e, v] : b.c) s.c[e] += v;
    s.trim();
    return s;
}

inline QSeries24 qs_scale(const QSeries24& a, const Rat& v) {
    QSeries24 s = a;
    for (auto& [e, w] : s.c) w *= v;
    s.weight = a.weight;
    s.trim();
    return s;
}

inline QSeries24 qs_sub(const QSeries24& a, const QSeries24& b) {
    return qs_add(a, qs_scale(b, Rat(-1)));
}

inline QSeries24 qs_mul(const QSeries24& a, const QSeries24& b) {
    QSeries24 s;
    s.offset = ((a.offset + b.offset) % 24 + 24) % 24;
    s.weight = a.weight + b.weight;
    s.prec24 = std::min(a.prec24 + b.min_exp24(), b.prec24 + a.min_exp24());
    if (a.is_zero() || b.is_zero()) {
        s.prec24 = std::min(a.prec24, b.prec24);
        return s;
    }
    for (const auto& [ea, va] : a.c)
        for (const auto& [eb, vb] : b.c) {
            long e = ea + eb;
            if (e > s.prec24) break;  // b.c ordered ascending
            s.c[e] += va * vb;
        }
    s.trim();
    return s;
}

// Multiplicative inverse of a series whose lowest term is nonzero.
inline QSeries24 qs_inverse(const QSeries24& a) {
    if (a.is_zero()) throw DegenerateError("inverse of zero series");
    long m = a.min_exp24();
    Rat lead = a.coeff(m);
    QSeries24 s;
    s.offset = ((-a.offset) % 24 + 24) % 24;
    s.weight = -a.weight;
    s.prec24 = a.prec24 - 2 * m;
    // b with sum_{j} a_{m+j} b_{-m+t-j} = [t == 0].
    std::map<long, Rat> b;  // keyed by exponent + m (so starts at 0)
    b[0] = ratio(lead.get_den(), lead.get_num());
    long span = a.prec24 - m;
    for (long t = 1; t <= span; ++t) {
        Rat acc(0);
        for (const auto& [e, v] : a.c) {
            long j = e - m;
            if (j == 0 || j > t) continue;
            auto it = b.find(t - j);
            if (it != b.end()) acc += v * it->second;
        }
        if (acc != 0) b[t] = -acc / lead;
    }
    for (const auto& [t, v] : b) {
        long e = t - m;  // exponent of q^{e/24}
        if (e <= s.prec24) s.c[e] = v;
    }
    s.trim();
    return s;
}

inline bool qs_agree(const QSeries24& a, const QSeries24& b) {
    long p = std::min(a.prec24, b.prec24);
    for (const auto& [e, v] : a.c)
        if (e <= p && v != b.coeff(e)) return false;
    for (const auto& [e, v] : b.c)
        if (e <= p && v != a.coeff(e)) return false;
    return true;
}

// q d/dq: multiplies the coefficient of q^{n/24} by n/24.
inline QSeries24 qs_qdq(const QSeries24& a) {
    QSeries24 s = a;
    s.weight = a.weight + 2;
    for (auto& [e, v] : s.c) v *= ratio(Int(e), Int(24));
    s.trim();
    return s;
}

// eta^l = q^{l/24} prod (1-q^n)^l; negative l through series inversion.
inline QSeries24 series_eta_pow(long l, long N) {
    long prec24 = 24 * N;
    // Euler product via the pentagonal number theorem.
    QSeries24 euler = qs_constant(Rat(1), prec24);
    euler.c.clear();
    for (long j = -N - 2; j <= N + 2; ++j) {
        long e = 24 * (j * (3 * j - 1) / 2);
        if (e >= 0 && e <= prec24) euler.c[e] = (j % 2 == 0) ? 1 : -1;
    }
    QSeries24 base = l >= 0 ? euler : qs_inverse(euler);
    QSeries24 out = qs_constant(Rat(1), prec24);
    for (long i = 0; i < (l >= 0 ? l : -l); ++i) out = qs_mul(out, base);
    // Shift by q^{l/24} and set grading.
    QSeries24 s;
    s.offset = ((l % 24) + 24) % 24;
    s.weight = ratio(Int(l), Int(2));
    s.prec24 = prec24;
    for (const auto& [e, v] : out.c)
        if (e + l <= prec24) s.c[e + l] = v;
    s.trim();
    return s;
}

// E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3, E6 = 1 - 504 sum sigma_5.
inline QSeries24 series_E(int k, long N) {
    long factor;
    int power;
    switch (k) {
        case 2: factor = -24; power = 1; break;
        case 4: factor = 240; power = 3; break;
        case 6: factor = -504; power = 5; break;
        default: throw Error("series_E: k must be 2, 4 or 6");
    }
    QSeries24 s = qs_constant(Rat(1), 24 * N);
    s.weight = k;
    for (long n = 1; n <= N; ++n) s.c[24 * n] = Rat(factor) * sigma_k(n, power);
    return s;
}

}  // namespace latjac
