// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Criteria recompute their claims directly from the library rather
// than trusting each other's caches.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/nil.hpp"
#include "ringlab/suites.hpp"

using namespace ringlab;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Gate {
    int failures = 0;

    void report(int id, const char* name, bool ok, const std::string& detail) {
        std::printf("%s  criterion %2d  %-28s %s\n", ok ? "PASS" : "FAIL", id, name,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f ms", ms);
    return buf;
}

const RingTable* find_ring(const std::vector<RingTable>& corpus, const std::string& label) {
    for (const auto& r : corpus)
        if (r.label == label) return &r;
    return nullptr;
}

}  // namespace

int main() {
    Gate gate;

    // ---- criterion 1: axiom suite over the default corpus ----------------
    std::vector<RingTable> corpus;
    {
        auto t0 = Clock::now();
        CorpusSpec spec;  // seed 0, max_order 4096
        corpus = generate_corpus(spec);
        bool ok = corpus.size() >= 50;
        int bad_axioms = 0;
        for (const auto& R : corpus) {
            if (R.order < 2 || R.order > 4096) ok = false;
            if (!validate_axioms(R).empty()) ++bad_axioms;
        }
        double ms = ms_since(t0);
        ok = ok && bad_axioms == 0 && ms < 60000;
        gate.report(1, "axiom suite", ok,
                    std::to_string(corpus.size()) + " rings, " + std::to_string(bad_axioms) +
                        " axiom failures, " + fmt_ms(ms) + " (limit 60000 ms)");
    }

    // ---- criterion 2: six closure verdicts agree with is_nr ----------------
    {
        auto t0 = Clock::now();
        SuiteResult r = verify_main_equivalences(corpus);
        bool anchors_ok = false;
        const RingTable* z4 = find_ring(corpus, "Z(4)");
        const RingTable* m2 = find_ring(corpus, "M(2,Z(2))");
        if (z4 && m2) {
            bool all_true = is_nr(*z4).holds, all_false = !is_nr(*m2).holds;
            for (ClosureOp op : kClosureOps) {
                all_true = all_true && closure_check(*z4, op).holds;
                all_false = all_false && !closure_check(*m2, op).holds;
            }
            anchors_ok = all_true && all_false;
        }
        bool ok = r.passed() && anchors_ok;
        gate.report(2, "closure/NR equivalence", ok,
                    std::to_string(r.violations.size()) + " violations, " +
                        std::to_string(r.checks) + " checks, anchors " +
                        (anchors_ok ? "ok" : "BAD") + ", " + fmt_ms(ms_since(t0)));
    }

    // ---- criterion 3: first worked example (3x3 matrices over Z/2) --------
    {
        auto t0 = Clock::now();
        SuiteResult r = reproduce_example_m3();
        double ms = ms_since(t0);
        bool ok = r.passed() && ms < 1000;
        gate.report(3, "3x3 example", ok,
                    std::to_string(r.violations.size()) + " violations, " + fmt_ms(ms) +
                        " (limit 1000 ms)");
    }

    // ---- criterion 4: second worked example (2x2 blocks over SUT) ---------
    {
        auto t0 = Clock::now();
        SuiteResult r3 = reproduce_example_m2t(3);
        double ms3 = ms_since(t0);
        auto t1 = Clock::now();
        SuiteResult r4 = reproduce_example_m2t(4);
        double ms4 = ms_since(t1);
        bool ok = r3.passed() && r4.passed() && ms3 < 5000 && ms4 < 5000;
        gate.report(4, "block-matrix example", ok,
                    "n=3: " + std::to_string(r3.violations.size()) + " violations " + fmt_ms(ms3) +
                        ", n=4: " + std::to_string(r4.violations.size()) + " violations " +
                        fmt_ms(ms4) + " (limit 5000 ms each)");
    }

    // ---- criterion 5: strongly-nil-clean trichotomy ------------------------
    {
        auto t0 = Clock::now();
        int bad = 0;
        long long elementwise = 0;
        for (const auto& R : corpus) {
            NilReport rep = nil_report(R);
            bool v_search = is_strongly_nil_clean(R).holds;
            bool v_crit = true;
            for (Elem a = 0; a < R.order && v_crit; ++a)
                v_crit = nilpotency_index(R, R.sub(a, R.mul(a, a))).has_value();
            bool v_quot = is_boolean(quotient(R, rep.upper_nilradical)).holds;
            if (v_search != v_crit || v_crit != v_quot) {
                ++bad;
                continue;
            }
            for (Elem a = 0; a < R.order; ++a) {
                auto n = nilpotency_index(R, R.sub(a, R.mul(a, a)));
                if (!n) continue;
                Elem e = snc_idempotent(R, a, *n);
                bool good = R.mul(e, e) == e && R.mul(e, a) == R.mul(a, e);
                auto idx = nilpotency_index(R, R.sub(a, e));
                good = good && idx && *idx <= *n;
                if (!good) ++bad;
                ++elementwise;
            }
        }
        gate.report(5, "strongly-nil-clean", bad == 0,
                    std::to_string(bad) + " violations, " + std::to_string(elementwise) +
                        " explicit idempotents, " + fmt_ms(ms_since(t0)));
    }

    // ---- criterion 6: exchange theorems ------------------------------------
    {
        auto t0 = Clock::now();
        int bad = 0, applicable = 0;
        for (const auto& R : corpus) {
            ExchangeVerdict ex = is_exchange(R);
            if (!ex.holds() || !is_nr(R).holds) continue;
            ++applicable;
            NilReport rep = nil_report(R);
            if (!is_ni(R).holds) ++bad;
            if (!rep.nilpotents.subset_of(rep.j_radical)) ++bad;
            if (rep.upper_nilradical.count() == 1 && rep.nilpotents.count() != 1) ++bad;
        }
        gate.report(6, "exchange theorems", bad == 0,
                    std::to_string(bad) + " violations over " + std::to_string(applicable) +
                        " exchange NR rings, " + fmt_ms(ms_since(t0)));
    }

    // ---- criterion 7: Abelian quotient -------------------------------------
    {
        auto t0 = Clock::now();
        int bad = 0, applicable = 0;
        for (const auto& R : corpus) {
            if (!is_nr(R).holds) continue;
            ++applicable;
            NilReport rep = nil_report(R);
            if (!is_abelian(quotient(R, rep.upper_nilradical)).holds) ++bad;
        }
        RingTable ut2 = build("UT(2,Z(2))");
        bool remark = is_ni(ut2).holds && !is_abelian(ut2).holds;
        gate.report(7, "Abelian quotient", bad == 0 && remark,
                    std::to_string(bad) + " violations over " + std::to_string(applicable) +
                        " NR rings, NI-not-Abelian witness " + (remark ? "ok" : "BAD") + ", " +
                        fmt_ms(ms_since(t0)));
    }

    // ---- criterion 8: index-2 lemmas ---------------------------------------
    {
        auto t0 = Clock::now();
        SuiteResult r = verify_index2_lemmas(corpus);
        double ms = ms_since(t0);
        bool ok = r.passed() && ms < 300000;
        gate.report(8, "index-2 lemmas", ok,
                    std::to_string(r.violations.size()) + " violations, " +
                        std::to_string(r.checks) + " checks, " + fmt_ms(ms) +
                        " (limit 300000 ms)");
    }

    // ---- criterion 9: semiprime bound --------------------------------------
    {
        auto t0 = Clock::now();
        SuiteResult r = verify_semiprime_lemmas(corpus);
        gate.report(9, "semiprime bound", r.passed(),
                    std::to_string(r.violations.size()) + " violations, " +
                        std::to_string(r.checks) + " checks, " + fmt_ms(ms_since(t0)));
    }

    // ---- criterion 10: circle machinery ------------------------------------
    {
        auto t0 = Clock::now();
        int bad = 0;
        long long quasi = 0;
        for (const auto& R : corpus) {
            NilReport rep = nil_report(R);
            for (Elem q : rep.nilpotents.indices()) {
                Elem r = quasi_inverse_nilpotent(R, q);
                if (circle(R, q, r) != R.zero || circle(R, r, q) != R.zero ||
                    !rep.nilpotents.test(r))
                    ++bad;
                ++quasi;
            }
            if (R.unital()) {
                SubsetMask shifted(R);
                for (Elem q = 0; q < R.order; ++q)
                    if (rep.q_set.test(q)) shifted.set(R.sub(*R.one, q));
                if (!(shifted == *rep.units)) ++bad;
            }
        }
        // 1000 sampled construction checks across rings with nonzero nilpotents
        std::mt19937_64 rng(0xC0FFEE);
        std::vector<const RingTable*> pool;
        std::vector<NilReport> reps;
        for (const auto& R : corpus) {
            NilReport rep = nil_report(R);
            if (rep.nilpotents.count() > 1) {
                pool.push_back(&R);
                reps.push_back(std::move(rep));
            }
        }
        int sampled = 0;
        while (sampled < 1000 && !pool.empty()) {
            size_t i = rng() % pool.size();
            const RingTable& R = *pool[i];
            auto nils = reps[i].nilpotents.indices();
            Elem y = nils[rng() % nils.size()];
            Elem x = Elem(rng() % R.order);
            int n = reps[i].index_of[size_t(y)];
            Elem z = koethe_z_construction(R, x, y, n);
            if (circle(R, y, z) != R.add(x, y) || R.sub(z, R.mul(y, z)) != x) ++bad;
            ++sampled;
        }
        gate.report(10, "circle machinery", bad == 0,
                    std::to_string(bad) + " violations, " + std::to_string(quasi) +
                        " quasi-inverses, " + std::to_string(sampled) + " sampled pairs, " +
                        fmt_ms(ms_since(t0)));
    }

    // ---- criterion 11: principal-nil-ideal sum probe ------------------------
    {
        auto t0 = Clock::now();
        int bad = 0;
        for (const auto& R : corpus)
            if (!koethe_sum_probe(R).holds) ++bad;
        CorpusSpec spec;
        SuiteResult probe = probe_questions(spec);
        bool ok = bad == 0 && probe.passed() && probe.rings >= 100;
        gate.report(11, "nil-ideal sum probe", ok,
                    std::to_string(bad) + " probe failures, " + std::to_string(probe.rings) +
                        " rings examined, " + std::to_string(probe.violations.size()) +
                        " candidates, " + fmt_ms(ms_since(t0)));
    }

    if (gate.failures) {
        std::printf("acceptance: %d criteria FAILED\n", gate.failures);
        return 1;
    }
    std::printf("acceptance: all 11 criteria passed\n");
    return 0;
}
