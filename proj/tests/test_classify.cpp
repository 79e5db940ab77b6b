#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ringlab/classify.hpp"
#include "ringlab/expr.hpp"

using namespace ringlab;

TEST_CASE("closure verdicts and witnesses") {
    SUBCASE("Z(4): all six closures hold") {
        RingTable R = build("Z(4)");
        for (ClosureOp op : kClosureOps) {
            Verdict v = closure_check(R, op);
            CAPTURE(to_string(op));
            CHECK(v.holds);
            CHECK(v.witness.empty());
        }
    }
    SUBCASE("M(2,Z(2)): all six closures fail with valid witnesses") {
        RingTable R = build("M(2,Z(2))");
        auto nil = nilpotent_mask(R);
        for (ClosureOp op : kClosureOps) {
            Verdict v = closure_check(R, op);
            CAPTURE(to_string(op));
            CHECK(!v.holds);
            REQUIRE(v.witness.size() == 2);
            CHECK(nil[size_t(v.witness[0])]);
            CHECK(nil[size_t(v.witness[1])]);
            CHECK(!nil[size_t(apply_closure_op(R, op, v.witness[0], v.witness[1]))]);
        }
    }
}

TEST_CASE("apply_closure_op formulas") {
    RingTable R = build("Z(12)");
    Elem x = 5, y = 7;
    CHECK(apply_closure_op(R, ClosureOp::add, x, y) == R.add(x, y));
    CHECK(apply_closure_op(R, ClosureOp::mul, x, y) == R.mul(x, y));
    CHECK(apply_closure_op(R, ClosureOp::circle, x, y) == R.sub(R.add(x, y), R.mul(x, y)));
    CHECK(apply_closure_op(R, ClosureOp::star, x, y) == R.add(R.add(x, y), R.mul(x, y)));
    CHECK(apply_closure_op(R, ClosureOp::jordan, x, y) == R.add(R.mul(x, y), R.mul(y, x)));
    CHECK(apply_closure_op(R, ClosureOp::lie, x, y) == R.sub(R.mul(x, y), R.mul(y, x)));
}

TEST_CASE("property verdicts on reference rings") {
    struct Row {
        const char* expr;
        bool nr, ni, abelian, boolean_ring;
    } rows[] = {
        {"Z(2)", true, true, true, true},
        {"Z(3)", true, true, true, false},
        {"Z(4)", true, true, true, false},
        {"M(2,Z(2))", false, false, false, false},
        {"UT(2,Z(2))", true, true, false, false},
        {"SUT(3,Z(2))", true, true, true, false},  // nilpotent ring: no nonzero idempotents
        {"PROD(Z(2),Z(2))", true, true, true, true},
    };
    for (const auto& r : rows) {
        CAPTURE(r.expr);
        RingTable R = build(r.expr);
        CHECK(is_nr(R).holds == r.nr);
        CHECK(is_ni(R).holds == r.ni);
        CHECK(is_abelian(R).holds == r.abelian);
        CHECK(is_boolean(R).holds == r.boolean_ring);
    }
}

TEST_CASE("failed verdicts carry witnesses") {
    RingTable R = build("M(2,Z(2))");
    Verdict nr = is_nr(R);
    REQUIRE(!nr.holds);
    auto nil = nilpotent_mask(R);
    REQUIRE(nr.witness.size() == 2);
    CHECK(nil[size_t(nr.witness[0])]);
    CHECK(nil[size_t(nr.witness[1])]);

    Verdict ab = is_abelian(build("UT(2,Z(2))"));
    REQUIRE(!ab.holds);
    REQUIRE(ab.witness.size() == 2);  // (idempotent, element) that fail to commute
}

TEST_CASE("UU verdicts") {
    CHECK(is_uu(build("Z(4)")).holds);
    CHECK(is_uu(build("Z(2)")).holds);
    CHECK(!is_uu(build("Z(3)")).holds);        // -1 is a non-unipotent unit
    CHECK(!is_uu(build("M(2,Z(2))")).holds);
    CHECK_THROWS(is_uu(build("SUT(3,Z(2))")));  // non-unital
}

TEST_CASE("exchange verdicts and certificates") {
    for (const char* s : {"Z(4)", "Z(6)", "M(2,Z(2))", "UT(2,Z(2))", "SUT(3,Z(2))"}) {
        CAPTURE(s);
        RingTable R = build(s);
        ExchangeVerdict v = is_exchange(R);
        REQUIRE(v.holds());  // all of these are exchange (finite + clean/radical cases)
        REQUIRE(int(v.certificates.size()) == R.order);
        for (const auto& c : v.certificates) {
            CHECK(R.mul(c.e, c.e) == c.e);
            CHECK(R.mul(c.r, c.a) == c.e);
            Elem s_circ_a = R.sub(R.add(c.s, c.a), R.mul(c.s, c.a));
            CHECK(s_circ_a == c.e);
        }
    }
    ExchangeVerdict skipped = is_exchange(build("UT(3,Z(4))"), 1024);
    CHECK(skipped.status == ExchangeVerdict::Status::skipped);
}

TEST_CASE("exchange on non-unital subrings") {
    // {0,2,4} in Z(6) is a field with identity 4; {0,3} is Boolean.
    CHECK(is_exchange(build("SUB(Z(6),[2])")).holds());
    CHECK(is_exchange(build("SUB(Z(6),[3])")).holds());
}

TEST_CASE("clean and nil-clean verdicts") {
    CHECK(is_clean(build("Z(4)")).holds);
    CHECK(is_clean(build("Z(6)")).holds);
    CHECK(is_clean(build("M(2,Z(2))")).holds);
    CHECK(is_nil_clean(build("Z(4)")).holds);
    CHECK(is_nil_clean(build("Z(2)")).holds);
    CHECK(!is_nil_clean(build("Z(3)")).holds);  // 2 = e + q has no solution
    CHECK(is_nil_clean(build("M(2,Z(2))")).holds);
    CHECK_THROWS(is_clean(build("SUT(3,Z(2))")));
}

TEST_CASE("strongly nil clean verdicts and decompositions") {
    struct Row {
        const char* expr;
        bool snc;
    } rows[] = {
        {"Z(2)", true},  {"Z(4)", true},        {"Z(3)", false},
        {"Z(6)", false}, {"M(2,Z(2))", false},  {"UT(2,Z(2))", true},
        {"SUT(3,Z(2))", true},  // radical ring: a = 0 + a with a nilpotent
        {"PROD(Z(2),Z(4))", true},
    };
    for (const auto& r : rows) {
        CAPTURE(r.expr);
        RingTable R = build(r.expr);
        CleanVerdict v = is_strongly_nil_clean(R);
        CHECK(v.holds == r.snc);
        if (v.holds) {
            REQUIRE(int(v.decompositions.size()) == R.order);
            auto nil = nilpotent_mask(R);
            for (Elem a = 0; a < R.order; ++a) {
                const auto& d = v.decompositions[size_t(a)];
                CHECK(R.mul(d.e, d.e) == d.e);
                CHECK(nil[size_t(d.u)]);
                CHECK(R.add(d.e, d.u) == a);
                CHECK(R.mul(d.e, d.u) == R.mul(d.u, d.e));
            }
        }
    }
}

TEST_CASE("snc_idempotent explicit formula") {
    SUBCASE("Z(4), a=3, n=2") {
        RingTable R = build("Z(4)");
        // a - a^2 = 3 - 9 = -6 = 2, 2^2 = 0: n = 2 works.
        Elem e = snc_idempotent(R, 3, 2);
        CHECK(R.mul(e, e) == e);
        CHECK(e == 1);  // (1-(1-3)^2)^2 = (1-4)^2 = 9 = 1 mod 4
        Elem q = R.sub(3, e);
        CHECK(nilpotency_index(R, q).has_value());
    }
    SUBCASE("all applicable elements of sample rings") {
        for (const char* s : {"Z(8)", "UT(2,Z(2))", "SUT(3,Z(2))", "PROD(Z(4),Z(2))"}) {
            RingTable R = build(s);
            for (Elem a = 0; a < R.order; ++a) {
                auto n = nilpotency_index(R, R.sub(a, R.mul(a, a)));
                if (!n) continue;
                Elem e = snc_idempotent(R, a, *n);
                CHECK(R.mul(e, e) == e);
                CHECK(R.mul(e, a) == R.mul(a, e));
                auto idx = nilpotency_index(R, R.sub(a, e));
                REQUIRE(idx.has_value());
                CHECK(*idx <= *n);
            }
        }
    }
    SUBCASE("rejects elements violating the hypothesis") {
        CHECK_THROWS(snc_idempotent(build("Z(3)"), 2, 2));  // 2-4=-2=1 not nilpotent
    }
}

TEST_CASE("bounded_index values") {
    CHECK(bounded_index(build("Z(2)")) == 1);   // reduced
    CHECK(bounded_index(build("Z(6)")) == 1);   // reduced
    CHECK(bounded_index(build("Z(4)")) == 2);
    CHECK(bounded_index(build("Z(8)")) == 3);
    CHECK(bounded_index(build("M(2,Z(2))")) == 2);
    CHECK(bounded_index(build("SUT(4,Z(2))")) == 4);
}

TEST_CASE("classification report invariants over a mixed sample") {
    for (const char* s : {"Z(2)", "Z(3)", "Z(4)", "Z(6)", "Z(8)", "Z(12)", "M(2,Z(2))",
                          "M(2,Z(3))", "UT(2,Z(2))", "UT(2,Z(3))", "SUT(3,Z(2))", "SUT(4,Z(2))",
                          "PROD(Z(2),Z(4))", "DORROH(SUT(3,Z(2)))", "QUOT(Z(12),[4])"}) {
        CAPTURE(s);
        RingTable R = build(s);
        ClassificationReport rep = classify(R);

        // NI implies NR; Boolean implies strongly nil clean; strongly nil
        // clean implies nil clean and exchange; UU implies NR (unital).
        if (rep.ni.holds) CHECK(rep.nr.holds);
        if (rep.boolean_ring.holds) CHECK(rep.strongly_nil_clean.holds);
        if (R.unital()) {
            REQUIRE(rep.uu.has_value());
            REQUIRE(rep.nil_clean.has_value());
            REQUIRE(rep.clean.has_value());
            if (rep.strongly_nil_clean.holds) CHECK(rep.nil_clean->holds);
            if (rep.nil_clean->holds) CHECK(rep.clean->holds);
            if (rep.uu->holds) CHECK(rep.nr.holds);
        }
        // the six closure verdicts agree with is_nr (main equivalence)
        for (const Verdict& v : rep.closures) CHECK(v.holds == rep.nr.holds);
        CHECK(rep.bounded_index == bounded_index(R));
    }
}

TEST_CASE("classification JSON shape") {
    nlohmann::json j = to_json(classify(build("Z(4)")));
    CHECK(j["nr"]["holds"] == true);
    CHECK(j["boolean"]["holds"] == false);
    CHECK(j["bounded_index"] == 2);
    CHECK(j["closure"].size() == 6);
    CHECK(j.contains("uu"));
    nlohmann::json k = to_json(classify(build("SUT(3,Z(2))")));
    CHECK(k["uu"].is_null());
}
