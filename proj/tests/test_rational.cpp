#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "earoot/cyclotomic.hpp"
#include "earoot/linalg.hpp"
#include "earoot/rational.hpp"

using namespace earoot;

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(7, 3) / Rat(7, 3) == Rat(1));
    CHECK(Rat(1, 2) < Rat(2, 3));
    CHECK(Rat(-5).sign() == -1);
    CHECK_THROWS(Rat(1, 0));
    CHECK_THROWS(Rat(1) / Rat(0));
    CHECK(Rat(6, 4).str() == "3/2");
}

TEST_CASE("rational field laws on random samples") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<Int> num(-40, 40);
    std::uniform_int_distribution<Int> den(1, 40);
    auto rnd = [&] { return Rat(num(rng), den(rng)); };
    for (int i = 0; i < 200; ++i) {
        Rat a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a / a == Rat(1));
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(Cyc::degree(1) == 1);
    CHECK(Cyc::degree(2) == 1);
    CHECK(Cyc::degree(3) == 2);
    CHECK(Cyc::degree(4) == 2);
    CHECK(Cyc::degree(12) == 4);
    // Phi_4 = x^2 + 1
    auto& phi4 = Cyc::cyclotomic_polynomial(4);
    CHECK(phi4 == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    // Phi_6 = x^2 - x + 1
    auto& phi6 = Cyc::cyclotomic_polynomial(6);
    CHECK(phi6 == std::vector<Rat>{Rat(1), Rat(-1), Rat(1)});
}

TEST_CASE("cyclotomic arithmetic") {
    // order 2: zeta = -1
    Cyc z2 = Cyc::zeta_pow(2, 1);
    CHECK(z2.is_rational());
    CHECK(z2.rational_part() == Rat(-1));

    // order 4: zeta = i, i^2 = -1
    Cyc i4 = Cyc::zeta_pow(4, 1);
    CHECK((i4 * i4).rational_part() == Rat(-1));
    CHECK((i4 * i4 * i4 * i4).rational_part() == Rat(1));
    CHECK(i4.conj() == Cyc::zeta_pow(4, 3));
    CHECK((i4 * i4.inverse()).rational_part() == Rat(1));

    // order 3: 1 + z + z^2 = 0
    Cyc z3 = Cyc::zeta_pow(3, 1);
    Cyc s = Cyc::one(3) + z3 + z3 * z3;
    CHECK(s.is_zero());

    // order 5 inverse sanity
    Cyc z5 = Cyc::zeta_pow(5, 1) + Cyc(5, Rat(2));
    CHECK((z5 * z5.inverse()) == Cyc::one(5));

    // order 12
    Cyc z12 = Cyc::zeta_pow(12, 1);
    Cyc w = z12 * z12;  // primitive 6th root
    CHECK((w * w * w).rational_part() == Rat(-1));
}

TEST_CASE("row reduction, rank, kernel, inverse") {
    QMat m(3, 3);
    m << Rat(1), Rat(2), Rat(3),
         Rat(2), Rat(4), Rat(6),
         Rat(1), Rat(0), Rat(1);
    CHECK(rank_of(m) == 2);
    QMat ker = kernel_basis(m);
    CHECK(ker.cols() == 1);
    QVec kv = ker.col(0);
    QVec mv = m * kv;
    for (int i = 0; i < 3; ++i) CHECK(mv[i].is_zero());

    QMat a(2, 2);
    a << Rat(2), Rat(1), Rat(1), Rat(1);
    auto inv = inverse_of(a);
    REQUIRE(inv.has_value());
    QMat prod = a * *inv;
    CHECK(prod(0, 0) == Rat(1));
    CHECK(prod(0, 1) == Rat(0));
    CHECK(determinant(a) == Rat(1));

    QVec b(2);
    b << Rat(3), Rat(2);
    auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    QVec ax = a * *x;
    CHECK(ax[0] == Rat(3));
    CHECK(ax[1] == Rat(2));
}

TEST_CASE("span builder") {
    SpanBuilder<Rat> sb(3);
    QVec v1(3), v2(3), v3(3);
    v1 << Rat(1), Rat(1), Rat(0);
    v2 << Rat(0), Rat(1), Rat(1);
    v3 << Rat(1), Rat(2), Rat(1);
    CHECK(sb.add(v1));
    CHECK(sb.add(v2));
    CHECK_FALSE(sb.add(v3));  // v3 = v1 + v2
    CHECK(sb.dim() == 2);
    CHECK(sb.contains(v3));
}

TEST_CASE("hermite normal form and lattice membership") {
    IntMat g(2, 2);
    g << 2, 0, 0, 2;
    IntVec v(2);
    v << 4, -2;
    CHECK(lattice_contains(g, v));
    v << 1, 0;
    CHECK_FALSE(lattice_contains(g, v));

    IntMat g2(3, 2);
    g2 << 1, 1, 1, -1, 3, 1;
    // lattice generated: contains (2,0) = (1,1)+(1,-1), and (1,1)
    IntVec w(2);
    w << 2, 0;
    CHECK(lattice_contains(g2, w));
    w << 0, 2;
    CHECK(lattice_contains(g2, w));
    w << 1, 0;
    CHECK_FALSE(lattice_contains(g2, w));
    CHECK(integer_rank(g2) == 2);

    IntMat h = lattice_basis(g2);
    CHECK(h.rows() == 2);
    IntVec u(2);
    u << 1, 1;
    CHECK(lattice_contains(h, u));
}
