#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "earoot/finroot.hpp"

using namespace earoot;

namespace {

IntVec iv(std::initializer_list<Int> xs) {
    IntVec v(Eigen::Index(xs.size()));
    Eigen::Index i = 0;
    for (Int x : xs) v[i++] = x;
    return v;
}

QVec qv(std::initializer_list<Int> xs) {
    QVec v(Eigen::Index(xs.size()));
    Eigen::Index i = 0;
    for (Int x : xs) v[i++] = Rat(x);
    return v;
}

// membership predicate over a finite system, with 0 adjoined
std::function<bool(const QVec&)> member_of(const FiniteRootSystem& rs) {
    return [&rs](const QVec& v) {
        if (v.isZero()) return true;
        IntVec w(v.size());
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (!v[i].is_integer()) return false;
            w[i] = v[i].as_integer();
        }
        return rs.contains(w);
    };
}

std::function<Rat(const QVec&, const QVec&)> inner_of(const FiniteRootSystem& rs) {
    return [&rs](const QVec& a, const QVec& b) {
        Rat r(0);
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) r += a[i] * rs.gram()(i, j) * b[j];
        return r;
    };
}

}  // namespace

TEST_CASE("type parsing and rank bounds") {
    CHECK(FiniteType::parse("A1").str() == "A1");
    CHECK(FiniteType::parse("BC8").str() == "BC8");
    CHECK_THROWS_WITH(FiniteType::parse("D2"), doctest::Contains("illegal rank"));
    CHECK_THROWS(FiniteType::parse("E9"));
    CHECK_THROWS(FiniteType::parse("F3"));
    CHECK_THROWS(FiniteType::parse("G3"));
    CHECK_THROWS(FiniteType::parse("Q2"));
}

TEST_CASE("root counts match the classical cardinalities") {
    auto count = [](const char* t) {
        return FiniteRootSystem::build(FiniteType::parse(t)).roots().size();
    };
    CHECK(count("A1") == 2);
    CHECK(count("A2") == 6);
    CHECK(count("A4") == 20);
    CHECK(count("B2") == 8);
    CHECK(count("B3") == 18);
    CHECK(count("C3") == 18);
    CHECK(count("D4") == 24);
    CHECK(count("F4") == 48);
    CHECK(count("G2") == 12);
    CHECK(count("E6") == 72);
    CHECK(count("BC1") == 4);
    CHECK(count("BC2") == 12);
    CHECK(count("BC3") == 24);
}

TEST_CASE("A2 roots are all short") {
    auto rs = FiniteRootSystem::build(FiniteType::parse("A2"));
    CHECK(rs.roots().size() == 6);
    for (const auto& r : rs.roots()) {
        CHECK(rs.class_of(r) == LengthClass::Short);
        CHECK(rs.norm2(r) == Rat(2));
    }
}

TEST_CASE("BC1 has two short and two extra-long roots") {
    auto rs = FiniteRootSystem::build(FiniteType::parse("BC1"));
    CHECK(rs.roots_in_class(LengthClass::Short).size() == 2);
    CHECK(rs.roots_in_class(LengthClass::ExtraLong).size() == 2);
    CHECK(rs.contains(iv({1})));
    CHECK(rs.contains(iv({2})));
    CHECK(rs.contains(iv({-2})));
    CHECK_FALSE(rs.contains(iv({3})));
}

TEST_CASE("B2 splits four short and four long") {
    auto rs = FiniteRootSystem::build(FiniteType::parse("B2"));
    CHECK(rs.roots_in_class(LengthClass::Short).size() == 4);
    CHECK(rs.roots_in_class(LengthClass::Long).size() == 4);
}

TEST_CASE("every generated system is closed under its reflections") {
    for (const char* t : {"A1", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "BC1", "BC2"}) {
        auto rs = FiniteRootSystem::build(FiniteType::parse(t));
        for (const auto& a : rs.roots())
            for (const auto& b : rs.roots()) CHECK(rs.contains(rs.reflect(a, b)));
    }
}

TEST_CASE("root strings") {
    SUBCASE("A2: string of alpha2 through alpha1 is (0,1)") {
        auto rs = FiniteRootSystem::build(FiniteType::parse("A2"));
        auto s = root_string(member_of(rs), inner_of(rs), qv({1, 0}), qv({0, 1}));
        CHECK(s.d == 0);
        CHECK(s.u == 1);
    }
    SUBCASE("beta = alpha gives (2,0): the chain passes through 0") {
        for (const char* t : {"A1", "A2", "B2", "G2"}) {
            auto rs = FiniteRootSystem::build(FiniteType::parse(t));
            QVec a = to_rat(rs.roots().front());
            auto s = root_string(member_of(rs), inner_of(rs), a, a);
            CHECK(s.d == 2);
            CHECK(s.u == 0);
        }
    }
    SUBCASE("BC1: string of 2a through a has d-u = 4") {
        auto rs = FiniteRootSystem::build(FiniteType::parse("BC1"));
        auto s = root_string(member_of(rs), inner_of(rs), qv({1}), qv({2}));
        CHECK(s.d - s.u == 4);
        CHECK(s.d == 4);
        CHECK(s.u == 0);
    }
    SUBCASE("string anomaly on artificially broken data") {
        // accept beta and beta+2a but not beta+a: broken chain
        QVec a = qv({1});
        auto inner = [](const QVec& x, const QVec& y) { return x[0] * y[0] * Rat(2); };
        auto member = [](const QVec& v) {
            return v[0] == Rat(0) || v[0] == Rat(2) || v[0] == Rat(1) * Rat(-10);
        };
        CHECK_THROWS_WITH(root_string(member, inner, a, qv({0})),
                          doctest::Contains("anomaly"));
    }
}

TEST_CASE("classify round-trips every buildable type") {
    for (const char* t :
         {"A1", "A2", "A4", "B2", "B3", "C3", "C4", "D4", "D5", "G2", "F4", "E6",
          "BC1", "BC2", "BC3"}) {
        auto rs = FiniteRootSystem::build(FiniteType::parse(t));
        std::vector<QVec> vecs;
        for (const auto& r : rs.roots()) vecs.push_back(to_rat(r));
        auto comps = classify(vecs, rs.gram());
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].type.str() == t);
        CHECK(comps[0].roots.size() == rs.roots().size());
        CHECK(comps[0].simple_system.size() == size_t(rs.rank()));
    }
}

TEST_CASE("D3 is canonicalized to A3") {
    auto rs = FiniteRootSystem::build(FiniteType::parse("D3"));
    std::vector<QVec> vecs;
    for (const auto& r : rs.roots()) vecs.push_back(to_rat(r));
    auto comps = classify(vecs, rs.gram());
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].type.str() == "A3");
}

TEST_CASE("orthogonal A1 pair inside A3 coordinates") {
    auto rs = FiniteRootSystem::build(FiniteType::parse("A3"));
    std::vector<QVec> vecs = {qv({1, 0, 0}), qv({-1, 0, 0}), qv({0, 0, 1}),
                              qv({0, 0, -1})};
    auto comps = classify(vecs, rs.gram());
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].type.str() == "A1");
    CHECK(comps[1].type.str() == "A1");
    CHECK(comps[0].roots.size() == 2);
}

TEST_CASE("explicit D4 in orthonormal coordinates") {
    // {+-e_i +- e_j : i < j <= 4} with the standard form
    std::vector<QVec> vecs;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    QVec v = QVec::Zero(4);
                    v[i] = Rat(si);
                    v[j] = Rat(sj);
                    vecs.push_back(v);
                }
    QMat gram = QMat::Zero(4, 4);
    for (int i = 0; i < 4; ++i) gram(i, i) = Rat(1);
    auto comps = classify(vecs, gram);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].type.str() == "D4");
    CHECK(comps[0].roots.size() == 24);
}

TEST_CASE("classify rejects a reflection-deficient set") {
    auto rs = FiniteRootSystem::build(FiniteType::parse("A2"));
    std::vector<QVec> vecs = {qv({1, 0}), qv({-1, 0}), qv({0, 1}), qv({0, -1})};
    // missing alpha1+alpha2: r_{a1}(a2) = a1 + a2 not in set
    CHECK_THROWS_WITH(classify(vecs, rs.gram()), doctest::Contains("not a root system"));
}
