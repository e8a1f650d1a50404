#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <latjac/cyclotomic.hpp>

using namespace latjac;

TEST_CASE("cyclotomic roots and arithmetic") {
    CHECK(cyclo_root(4, 1) * cyclo_root(4, 1) == CycloNum(Rat(-1)));
    CHECK(cyclo_root(4, 1) * cyclo_root(4, 3) == CycloNum(Rat(1)));
    CHECK((cyclo_root(3, 1) + cyclo_root(3, 2)).is_rational());
    CHECK((cyclo_root(3, 1) + cyclo_root(3, 2)).to_rational() == Rat(-1));
    // Canonical modulus reduction: e_4(2) = e_2(1) = -1.
    CHECK(cyclo_root(4, 2) == CycloNum(Rat(-1)));
    CHECK(cyclo_root(6, 0) == CycloNum(Rat(1)));
    // Sum of all M-th roots vanishes.
    for (long M : {5L, 8L, 12L, 9L}) {
        CycloNum s(Rat(0));
        for (long a = 0; a < M; ++a) s += cyclo_root(M, a);
        CHECK(s.is_zero());
    }
}

TEST_CASE("conjugation and real part") {
    CHECK(cyclo_root(8, 1).conj() == cyclo_root(8, 7));
    auto x = cyclo_root(8, 1);
    CHECK(x.conj().conj() == x);
    auto re = x.real_part();
    double v = re.to_complex().real();
    CHECK(std::abs(v - std::sqrt(2.0) / 2) < 1e-12);
    CHECK(std::abs(re.to_complex().imag()) < 1e-12);
}

TEST_CASE("to_complex agrees with exact value") {
    auto x = cyclo_root(7, 3) * Rat(2, 5) + cyclo_root(7, 6);
    const double tau = 6.283185307179586476925;
    std::complex<double> want =
        0.4 * std::exp(std::complex<double>(0, tau * 3 / 7)) +
        std::exp(std::complex<double>(0, tau * 6 / 7));
    CHECK(std::abs(x.to_complex() - want) < 1e-12);
}

TEST_CASE("inverse") {
    for (auto x : {cyclo_root(12, 5), cyclo_root(8, 1) + CycloNum(Rat(2)),
                   cyclo_root(5, 1) - cyclo_root(5, 3)}) {
        CHECK(x * x.inverse() == CycloNum(Rat(1)));
    }
}

TEST_CASE("sqrt of positive integers") {
    CHECK(sqrt_positive_integer(1) == CycloNum(Rat(1)));
    CHECK(sqrt_positive_integer(4) == CycloNum(Rat(2)));
    CHECK(sqrt_positive_integer(3) == cyclo_root(12, 1) + cyclo_root(12, 11));
    for (long d = 1; d <= 100; ++d) {
        auto s = sqrt_positive_integer(d);
        CHECK(s * s == CycloNum(Rat(d)));
        CHECK(s.to_complex().real() > 0);
    }
}

TEST_CASE("gauss sums") {
    CHECK(gauss_sum_chi(lattice_An(2), 1) == cyclo_root(8, 2));  // = i
    CHECK(gauss_sum_chi(lattice_Zn(1), 1) == e8(1));
    CHECK(gauss_sum_chi(lattice_Zn(1), 2) == cyclo_root(4, 1));  // = i
    // conj(chi(t)) = chi(-t).
    for (const Lattice& L : {lattice_An(2), lattice_Zn(2), lattice_Dn(4)})
        for (Int t : {Int(1), Int(2), Int(-3)})
            CHECK(gauss_sum_chi(L, t).conj() == gauss_sum_chi(L, -t));
    // Multiplicativity over direct sums.
    CHECK(gauss_sum_chi(direct_sum(lattice_An(2), lattice_Zn(1)), 2) ==
          gauss_sum_chi(lattice_An(2), 2) * gauss_sum_chi(lattice_Zn(1), 2));
}

TEST_CASE("milgram") {
    CHECK(milgram_check(lattice_An(2)));
    for (std::size_t n = 1; n <= 8; ++n) CHECK(milgram_check(lattice_Zn(n)));
    CHECK(milgram_check(lattice_En(8)));
    CHECK(gauss_sum_chi(lattice_En(8), 1) == CycloNum(Rat(1)));
}
