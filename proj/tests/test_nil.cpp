#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "ringlab/expr.hpp"
#include "ringlab/nil.hpp"

using namespace ringlab;

namespace {

std::set<Elem> as_set(const SubsetMask& m) {
    auto v = m.indices();
    return {v.begin(), v.end()};
}

// Exhaustive oracle over all subsets: largest two-sided ideal satisfying
// `pred` on its members, found by scanning subsets of a candidate superset.
// Feasible only for tiny rings; used to pin J(R) and Nil*(R) independently.
SubsetMask largest_ideal_by_enumeration(const RingTable& R, const SubsetMask& superset) {
    std::vector<Elem> pool = superset.indices();
    REQUIRE(pool.size() <= 20);
    SubsetMask best(R);
    best.set(R.zero);
    for (uint32_t bits = 0; bits < (1u << pool.size()); ++bits) {
        SubsetMask cand(R);
        cand.set(R.zero);
        for (size_t i = 0; i < pool.size(); ++i)
            if (bits & (1u << i)) cand.set(pool[i]);
        if (cand.count() <= best.count()) continue;
        bool ideal = true;
        for (Elem a = 0; a < R.order && ideal; ++a) {
            if (!cand.test(a)) continue;
            if (!cand.test(R.neg(a))) ideal = false;
            for (Elem b = 0; b < R.order && ideal; ++b) {
                if (cand.test(b) && !cand.test(R.add(a, b))) ideal = false;
                if (!cand.test(R.mul(a, b)) || !cand.test(R.mul(b, a))) ideal = false;
            }
        }
        if (ideal) best = cand;
    }
    return best;
}

}  // namespace

TEST_CASE("nilpotency indices in Z(8) and matrix rings") {
    RingTable Z8 = build("Z(8)");
    CHECK(nilpotency_index(Z8, 0) == 1);
    CHECK(nilpotency_index(Z8, 2) == 3);  // 2^3 = 8
    CHECK(nilpotency_index(Z8, 4) == 2);
    CHECK(!nilpotency_index(Z8, 1).has_value());
    CHECK(!nilpotency_index(Z8, 3).has_value());
    CHECK(nilpotency_index(Z8, 6) == 3);  // 6 = -2, so 6^3 = -8 = 0
}

TEST_CASE("nilpotent_mask agrees with nilpotency_index everywhere") {
    for (const char* s : {"Z(16)", "M(2,Z(2))", "UT(2,Z(3))", "SUT(4,Z(2))", "PROD(Z(4),Z(9))"}) {
        RingTable R = build(s);
        auto mask = nilpotent_mask(R);
        for (Elem a = 0; a < R.order; ++a) {
            CAPTURE(s);
            CAPTURE(a);
            CHECK(bool(mask[size_t(a)]) == nilpotency_index(R, a).has_value());
        }
    }
}

TEST_CASE("nil report of Z(4) matches hand computation") {
    NilReport rep = nil_report(build("Z(4)"));
    CHECK(as_set(rep.nilpotents) == std::set<Elem>{0, 2});
    CHECK(as_set(rep.q_set) == std::set<Elem>{0, 2});
    CHECK(as_set(rep.j_radical) == std::set<Elem>{0, 2});
    CHECK(as_set(rep.upper_nilradical) == std::set<Elem>{0, 2});
    CHECK(as_set(rep.idempotents) == std::set<Elem>{0, 1});
    REQUIRE(rep.units.has_value());
    CHECK(as_set(*rep.units) == std::set<Elem>{1, 3});
    CHECK(rep.bound == 2);
    CHECK(rep.index_of[0] == 1);
    CHECK(rep.index_of[2] == 2);
    CHECK(rep.index_of[1] == 0);
}

TEST_CASE("nil report of M(2,Z(2))") {
    RingTable R = build("M(2,Z(2))");
    NilReport rep = nil_report(R);
    CHECK(rep.nilpotents.count() == 4);  // 0 and the three nonzero square-zero matrices
    CHECK(as_set(rep.j_radical) == std::set<Elem>{0});
    CHECK(as_set(rep.upper_nilradical) == std::set<Elem>{0});
    REQUIRE(rep.units.has_value());
    CHECK(rep.units->count() == 6);  // |GL(2,2)| = 6
    CHECK(rep.bound == 2);
    // Q(R) = non-units shifted: q quasi-regular iff 1-q invertible
    for (Elem q = 0; q < R.order; ++q) {
        Elem one_minus_q = R.sub(*R.one, q);
        CHECK(rep.q_set.test(q) == rep.units->test(one_minus_q));
    }
}

TEST_CASE("nil report of UT(2,Z(2))") {
    RingTable R = build("UT(2,Z(2))");
    NilReport rep = nil_report(R);
    Elem e12 = encode_matrix(MatrixShape::upper, 2, 2, {0, 1, 0});
    CHECK(as_set(rep.nilpotents) == std::set<Elem>{0, e12});
    CHECK(as_set(rep.j_radical) == std::set<Elem>{0, e12});
    CHECK(as_set(rep.upper_nilradical) == std::set<Elem>{0, e12});
    CHECK(rep.idempotents.count() == 6);
}

TEST_CASE("U(R) = 1 - Q(R) in unital rings") {
    for (const char* s : {"Z(12)", "M(2,Z(3))", "UT(3,Z(2))", "DORROH(SUT(3,Z(2)))"}) {
        RingTable R = build(s);
        NilReport rep = nil_report(R);
        REQUIRE(rep.units.has_value());
        SubsetMask shifted(R);
        for (Elem q = 0; q < R.order; ++q)
            if (rep.q_set.test(q)) shifted.set(R.sub(*R.one, q));
        CHECK(shifted == *rep.units);
    }
}

TEST_CASE("J and Nil* agree with subset enumeration on small rings") {
    for (const char* s : {"Z(8)", "Z(12)", "UT(2,Z(2))", "SUT(3,Z(2))", "PROD(Z(4),Z(2))",
                          "SUB(M(2,Z(2)),[1,2])"}) {
        CAPTURE(s);
        RingTable R = build(s);
        REQUIRE(R.order <= 16);
        NilReport rep = nil_report(R);
        // J(R): largest ideal inside Q(R); Nil*(R): largest ideal inside Nil(R).
        CHECK(rep.j_radical == largest_ideal_by_enumeration(R, rep.q_set));
        CHECK(rep.upper_nilradical == largest_ideal_by_enumeration(R, rep.nilpotents));
    }
}

TEST_CASE("circle is a monoid with identity 0") {
    for (const char* s : {"Z(6)", "SUT(3,Z(2))", "UT(2,Z(2))"}) {
        RingTable R = build(s);
        for (Elem x = 0; x < R.order; ++x) {
            CHECK(circle(R, x, R.zero) == x);
            CHECK(circle(R, R.zero, x) == x);
            for (Elem y = 0; y < R.order; ++y)
                for (Elem z = 0; z < R.order; ++z)
                    CHECK(circle(R, circle(R, x, y), z) == circle(R, x, circle(R, y, z)));
        }
    }
}

TEST_CASE("Q(R) is a group under circle") {
    for (const char* s : {"Z(12)", "UT(2,Z(3))", "SUT(4,Z(2))"}) {
        RingTable R = build(s);
        NilReport rep = nil_report(R);
        auto q = rep.q_set.indices();
        for (Elem x : q) {
            bool has_inverse = false;
            for (Elem y : q) {
                CHECK(rep.q_set.test(circle(R, x, y)));  // closure
                if (circle(R, x, y) == R.zero && circle(R, y, x) == R.zero) has_inverse = true;
            }
            CHECK(has_inverse);
        }
    }
}

TEST_CASE("quasi_inverse_nilpotent produces two-sided circle inverses") {
    for (const char* s : {"Z(16)", "M(2,Z(2))", "SUT(4,Z(2))", "UT(3,Z(2))"}) {
        RingTable R = build(s);
        auto nil = nilpotent_mask(R);
        for (Elem q = 0; q < R.order; ++q) {
            if (!nil[size_t(q)]) continue;
            Elem r = quasi_inverse_nilpotent(R, q);
            CHECK(circle(R, q, r) == R.zero);
            CHECK(circle(R, r, q) == R.zero);
            CHECK(nil[size_t(r)]);
        }
    }
    CHECK_THROWS(quasi_inverse_nilpotent(build("Z(4)"), 1));
}

TEST_CASE("koethe_z_construction satisfies its identities") {
    std::mt19937 rng(23);
    for (const char* s : {"Z(8)", "UT(2,Z(2))", "SUT(4,Z(2))", "M(2,Z(2))"}) {
        RingTable R = build(s);
        for (int t = 0; t < 100; ++t) {
            Elem x = int(rng() % R.order), y = int(rng() % R.order);
            auto ny = nilpotency_index(R, y);
            if (!ny) continue;
            Elem z = koethe_z_construction(R, x, y, *ny);
            CHECK(R.sub(z, R.mul(y, z)) == x);
            CHECK(circle(R, y, z) == R.add(x, y));
        }
    }
}

TEST_CASE("koethe_sum_probe holds on sample rings") {
    for (const char* s :
         {"Z(8)", "M(2,Z(2))", "UT(2,Z(2))", "SUT(4,Z(2))", "PROD(Z(4),M(2,Z(2)))"}) {
        CAPTURE(s);
        KoetheProbeResult r = koethe_sum_probe(build(s));
        CHECK(r.holds);
        CHECK(!r.witness.has_value());
    }
}

TEST_CASE("nil report JSON has aligned fields") {
    NilReport rep = nil_report(build("Z(4)"));
    nlohmann::json j = to_json(rep);
    CHECK(j["nilpotents"] == nlohmann::json({0, 2}));
    CHECK(j["index_of"].size() == j["nilpotents"].size());
    CHECK(j["bound"] == 2);
    CHECK(j["units"] == nlohmann::json({1, 3}));
}
