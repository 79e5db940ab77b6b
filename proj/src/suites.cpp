#include "ringlab/suites.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "ringlab/classify.hpp"
#include "ringlab/nil.hpp"

namespace ringlab {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Per-ring partial result, merged in corpus order.
struct Partial {
    long long checks = 0;
    long long vacuous = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;

    void violate(const RingTable& R, std::string statement, std::vector<Elem> witness = {}) {
        violations.push_back({R.label, std::move(statement), std::move(witness)});
    }
};

template <typename Fn>
SuiteResult run_over_corpus(std::string suite, const std::vector<RingTable>& corpus,
                            const SuiteOptions& opts, Fn&& per_ring) {
    auto start = Clock::now();
    SuiteResult res;
    res.suite = std::move(suite);
    res.rings = int(corpus.size());
    std::vector<Partial> partials(corpus.size());

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || corpus.size() <= 1) {
        for (size_t i = 0; i < corpus.size(); ++i) per_ring(corpus[i], partials[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < corpus.size(); i = next.fetch_add(1))
                per_ring(corpus[i], partials[i]);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& p : partials) {
        res.checks += p.checks;
        res.vacuous += p.vacuous;
        res.violations.insert(res.violations.end(), p.violations.begin(), p.violations.end());
        res.notes.insert(res.notes.end(), p.notes.begin(), p.notes.end());
    }
    res.ms = elapsed_ms(start);
    return res;
}

// Suite-local nilpotence oracle: plain power iteration, capped at `order`
// steps. Shares no code with classifiers' repeated-squaring mask.
bool oracle_nilpotent(const RingTable& R, Elem x) {
    Elem p = x;
    for (int i = 0; i < R.order; ++i) {
        if (p == R.zero) return true;
        p = R.mul(p, x);
    }
    return p == R.zero;
}

std::vector<uint8_t> oracle_nil_mask(const RingTable& R) {
    std::vector<uint8_t> mask(R.order);
    for (Elem x = 0; x < R.order; ++x) mask[x] = oracle_nilpotent(R, x) ? 1 : 0;
    return mask;
}

Elem power(const RingTable& R, Elem x, long long n) {
    Elem p = x;
    for (long long i = 1; i < n; ++i) p = R.mul(p, x);
    return p;
}

uint64_t ring_stream_seed(uint64_t seed, const std::string& label) {
    return seed ^ std::hash<std::string>{}(label);
}

}  // namespace

SuiteResult verify_main_equivalences(const std::vector<RingTable>& corpus,
                                     const SuiteOptions& opts) {
    return run_over_corpus("main", corpus, opts, [](const RingTable& R, Partial& p) {
        const auto nil = oracle_nil_mask(R);
        bool verdicts[7];
        for (size_t k = 0; k < kClosureOps.size(); ++k) {
            bool ok = true;
            for (Elem x = 0; x < R.order && ok; ++x) {
                if (!nil[x]) continue;
                for (Elem y = 0; y < R.order; ++y) {
                    if (!nil[y]) continue;
                    ++p.checks;
                    if (!nil[apply_closure_op(R, kClosureOps[k], x, y)]) {
                        ok = false;
                        break;
                    }
                }
            }
            verdicts[k] = ok;
        }
        verdicts[6] = is_nr(R).holds;
        ++p.checks;
        for (int k = 1; k < 7; ++k)
            if (verdicts[k] != verdicts[0]) {
                p.violate(R, std::string("main-equivalence: '") +
                                 (k < 6 ? to_string(kClosureOps[k]) : "nr") +
                                 "' disagrees with 'add'");
                break;
            }
        auto kp = koethe_sum_probe(R);
        p.checks += std::max<long long>(kp.pairs_checked, 1);
        if (!kp.holds)
            p.violate(R, "koethe-sum",
                      {kp.witness ? kp.witness->first : -1, kp.witness ? kp.witness->second : -1});
    });
}

SuiteResult verify_index2_lemmas(const std::vector<RingTable>& corpus, const SuiteOptions& opts) {
    const int cap = opts.index2_max_order;
    return run_over_corpus("index2", corpus, opts, [cap](const RingTable& R, Partial& p) {
        if (R.order > cap) {
            ++p.vacuous;
            p.notes.push_back(R.label + ": skipped (order above index2 cap)");
            return;
        }
        const auto nil = nilpotent_mask(R);
        std::vector<Elem> square_zero;
        for (Elem x = 0; x < R.order; ++x)
            if (R.mul(x, x) == R.zero) square_zero.push_back(x);
        static constexpr ClosureOp ops[] = {ClosureOp::add, ClosureOp::circle, ClosureOp::jordan,
                                            ClosureOp::lie};
        static constexpr const char* ids[] = {"redi2plus", "redi2krogec", "index2-jordan",
                                              "index2-lie"};
        for (Elem x : square_zero)
            for (Elem y : square_zero) {
                bool xy_nil = nil[R.mul(x, y)] != 0;
                for (int k = 0; k < 4; ++k) {
                    if (nil[apply_closure_op(R, ops[k], x, y)]) {
                        ++p.checks;
                        if (!xy_nil) p.violate(R, ids[k], {x, y});
                    } else {
                        ++p.vacuous;
                    }
                }
            }
    });
}

SuiteResult verify_semiprime_lemmas(const std::vector<RingTable>& corpus,
                                    const SuiteOptions& opts) {
    const uint64_t seed = opts.seed;
    return run_over_corpus("semiprime", corpus, opts, [seed](const RingTable& R, Partial& p) {
        NilReport rep = nil_report(R);
        if (rep.upper_nilradical.count() != 1) {
            ++p.vacuous;
            return;
        }
        const auto& nil = rep.nilpotents;
        std::vector<Elem> nilpotents = nil.indices();
        std::vector<Elem> square_zero;
        for (Elem x : nilpotents)
            if (R.mul(x, x) == R.zero) square_zero.push_back(x);

        // Hypothesis of Lemma glavnalema: xy nilpotent for all nilpotent x, y
        // with x^2 = 0.
        bool h1 = true;
        for (Elem x : square_zero)
            for (Elem y : nilpotents)
                if (!nil.test(R.mul(x, y))) {
                    h1 = false;
                    break;
                }
        // Hypothesis of Lemma glavnalema2: both factors of index <= 2.
        bool h2 = true;
        for (Elem x : square_zero)
            for (Elem y : square_zero)
                if (!nil.test(R.mul(x, y))) {
                    h2 = false;
                    break;
                }

        std::mt19937_64 rng(ring_stream_seed(seed, R.label));
        if (h1) {
            // Closing conclusion: (xy)^m = 0 for x of index m.
            for (Elem x : nilpotents) {
                int m = rep.index_of[x];
                for (Elem y : nilpotents) {
                    ++p.checks;
                    if (power(R, R.mul(x, y), m) != R.zero)
                        p.violate(R, "glavnalema-conclusion", {x, y});
                }
            }
            // Sampled exponent-pattern identity, r <= 3.
            if (!nilpotents.empty()) {
                for (int trial = 0; trial < 200; ++trial) {
                    Elem x1 = nilpotents[rng() % nilpotents.size()];
                    int m = rep.index_of[x1];
                    int r = 1 + int(rng() % 3);
                    std::vector<Elem> xs(r);
                    xs[0] = x1;
                    for (int i = 1; i < r; ++i) xs[i] = nilpotents[rng() % nilpotents.size()];
                    std::vector<int> exps(r);
                    long long total = 0;
                    for (int i = 0; i < r; ++i) {
                        exps[i] = 1 + int(rng() % std::max(1, m));
                        total += exps[i];
                    }
                    if (total < m) exps[r - 1] += int(m - total);
                    // word = x1^e1 x2 x1^e2 x3 ... x1^er
                    Elem w = power(R, x1, exps[0]);
                    for (int i = 1; i < r; ++i) w = R.mul(R.mul(w, xs[i]), power(R, x1, exps[i]));
                    ++p.checks;
                    if (w != R.zero) p.violate(R, "glavnalema-pattern", {x1});
                }
            }
        } else {
            ++p.vacuous;
        }
        if (h2) {
            // (xy)^(2^(n-1)) x = 0 for x^2 = 0 and y^(2^n) = 0.
            for (Elem x : square_zero)
                for (Elem y : nilpotents) {
                    int n = 0;
                    while ((1 << n) < rep.index_of[y]) ++n;
                    n = std::max(n, 1);
                    long long half = 1LL << (n - 1);
                    Elem w = R.mul(power(R, R.mul(x, y), half), x);
                    ++p.checks;
                    if (w != R.zero) p.violate(R, "glavnalema2-bound", {x, y});
                }
        } else {
            ++p.vacuous;
        }
        // Lemma pomozna: in a NR ring of bounded index n with Nil* = 0, every
        // product of n index-2 nilpotents vanishes.
        if (is_nr(R).holds) {
            int n = rep.bound;
            auto check_tuple = [&](const std::vector<Elem>& t) {
                Elem w = t[0];
                for (int i = 1; i < n; ++i) w = R.mul(w, t[i]);
                ++p.checks;
                if (w != R.zero) p.violate(R, "pomozna", t);
            };
            if (n <= 3) {
                std::vector<Elem> t(n);
                std::vector<size_t> cursor(n, 0);
                // odometer over square_zero^n
                bool done = square_zero.empty();
                while (!done) {
                    for (int i = 0; i < n; ++i) t[i] = square_zero[cursor[i]];
                    check_tuple(t);
                    int i = n - 1;
                    while (i >= 0 && ++cursor[i] == square_zero.size()) cursor[i--] = 0;
                    done = i < 0;
                }
            } else if (!square_zero.empty()) {
                std::vector<Elem> t(n);
                for (int trial = 0; trial < 1000; ++trial) {
                    for (int i = 0; i < n; ++i) t[i] = square_zero[rng() % square_zero.size()];
                    check_tuple(t);
                }
            }
        } else {
            ++p.vacuous;
        }
    });
}

SuiteResult verify_quotient_theorems(const std::vector<RingTable>& corpus,
                                     const SuiteOptions& opts) {
    const int cap = opts.exchange_cap;
    return run_over_corpus("quotient", corpus, opts, [cap](const RingTable& R, Partial& p) {
        NilReport rep = nil_report(R);
        bool nr = is_nr(R).holds;
        ExchangeVerdict ex = is_exchange(R, cap);
        RingTable Rq = quotient(R, rep.upper_nilradical);

        if (nr) {
            ++p.checks;
            Verdict ab = is_abelian(Rq);
            if (!ab.holds) p.violate(R, "abelovost", ab.witness);
        } else {
            ++p.vacuous;
        }
        bool semiprime = rep.upper_nilradical.count() == 1;
        if (ex.holds() && nr && semiprime) {
            ++p.checks;
            if (rep.nilpotents.count() != 1) p.violate(R, "poseb");
        } else {
            ++p.vacuous;
        }
        if (ex.holds() && nr) {
            ++p.checks;
            Verdict ni = is_ni(R);
            if (!ni.holds) p.violate(R, "exbounded", ni.witness);
            ++p.checks;
            if (!rep.nilpotents.subset_of(rep.j_radical)) p.violate(R, "nil-in-j");
        } else {
            p.vacuous += 2;
        }
        ++p.checks;
        bool snc = is_strongly_nil_clean(R).holds;
        bool boolean_q = is_boolean(Rq).holds;
        if (snc != boolean_q) p.violate(R, "stronglynilclean-iii");
    });
}

SuiteResult verify_corollaries(const std::vector<RingTable>& corpus, const SuiteOptions& opts) {
    return run_over_corpus("corollaries", corpus, opts, [](const RingTable& R, Partial& p) {
        NilReport rep = nil_report(R);
        bool nr = is_nr(R).holds;

        if (rep.nilpotents == rep.q_set) {
            ++p.checks;
            if (!nr) p.violate(R, "torabimo");
        } else {
            ++p.vacuous;
        }
        if (R.one) {
            if (is_uu(R).holds) {
                ++p.checks;
                if (!nr) p.violate(R, "uu-implies-nr");
            } else {
                ++p.vacuous;
            }
        } else {
            ++p.vacuous;
        }
        // NR iff Nil(R) is a subgroup of (Q(R), ∘): closed under ∘ and under
        // quasi-inverses.
        bool circle_closed = true;
        Elem wx = -1, wy = -1;
        for (Elem x = 0; x < R.order && circle_closed; ++x) {
            if (!rep.nilpotents.test(x)) continue;
            for (Elem y = 0; y < R.order; ++y) {
                if (!rep.nilpotents.test(y)) continue;
                if (!rep.nilpotents.test(circle(R, x, y))) {
                    circle_closed = false;
                    wx = x;
                    wy = y;
                    break;
                }
            }
        }
        bool inverse_closed = true;
        for (Elem q : rep.nilpotents.indices())
            if (!rep.nilpotents.test(quasi_inverse_nilpotent(R, q))) {
                inverse_closed = false;
                break;
            }
        ++p.checks;
        if (nr != (circle_closed && inverse_closed))
            p.violate(R, "nil-subgroup-of-q", wx >= 0 ? std::vector<Elem>{wx, wy}
                                                      : std::vector<Elem>{});
    });
}

SuiteResult probe_questions(const CorpusSpec& spec, const SuiteOptions& opts) {
    auto start = Clock::now();
    CorpusSpec s = spec;
    if (s.radical_count <= 0) s.radical_count = 120;
    std::vector<std::string> notices;
    std::vector<RingTable> corpus = generate_corpus(s, &notices);

    std::vector<RingTable> radical = generate_radical_rings(s.seed + 1, s.radical_count, s.max_order);
    int radical_examined = int(radical.size());

    int q1_candidates = 0, q2_candidates = 0;
    SuiteResult res = run_over_corpus("probe", corpus, opts, [&](const RingTable& R, Partial& p) {
        const auto nil = nilpotent_mask(R);
        bool mult_closed = closure_check(R, ClosureOp::mul, nil).holds;
        auto kp = koethe_sum_probe(R);
        ++p.checks;
        if (mult_closed && !kp.holds) {
            p.violate(R, "q1-candidate");
        }
        ExchangeVerdict ex = is_exchange(R, opts.exchange_cap);
        if (ex.holds() && is_nr(R).holds) {
            ++p.checks;
            if (!is_ni(R).holds) p.violate(R, "q2-candidate");
        } else {
            ++p.vacuous;
        }
    });
    // Radical rings: every one must be exchange, and none may witness Q1/Q2.
    for (const RingTable& R : radical) {
        NilReport rep = nil_report(R);
        ++res.checks;
        if (rep.j_radical.count() != R.order) {
            res.violations.push_back({R.label, "radical-family-not-radical", {}});
            continue;
        }
        ExchangeVerdict ex = is_exchange(R, opts.exchange_cap);
        ++res.checks;
        if (!ex.holds()) res.violations.push_back({R.label, "radical-not-exchange", {}});
        const auto nil = nilpotent_mask(R);
        bool mult_closed = closure_check(R, ClosureOp::mul, nil).holds;
        auto kp = koethe_sum_probe(R);
        ++res.checks;
        if (mult_closed && !kp.holds) res.violations.push_back({R.label, "q1-candidate", {}});
        if (ex.holds() && is_nr(R).holds) {
            ++res.checks;
            if (!is_ni(R).holds) res.violations.push_back({R.label, "q2-candidate", {}});
        }
    }
    res.rings = int(corpus.size() + radical.size());
    for (const auto& v : res.violations) {
        if (v.statement == "q1-candidate") ++q1_candidates;
        if (v.statement == "q2-candidate") ++q2_candidates;
    }
    res.notes.push_back("radical rings examined: " + std::to_string(radical_examined));
    res.notes.push_back("Q1 candidate counterexamples: " + std::to_string(q1_candidates));
    res.notes.push_back("Q2 candidate counterexamples: " + std::to_string(q2_candidates));
    res.notes.push_back(
        "finite rings satisfy Koethe's conjecture and have bounded index; zero candidates are "
        "consistency evidence only, the questions remain open");
    res.ms = elapsed_ms(start);
    return res;
}

// ---------------------------------------------------------------------------
// Example reproducers.

namespace {

// 3x3 matrices over Z/p, used as the independent oracle for the M3 example.
struct Mat3 {
    int p;
    std::array<int, 9> a{};

    static Mat3 zero(int p) { return {p, {}}; }
    Mat3 mul(const Mat3& o) const {
        Mat3 r = zero(p);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                for (int j = 0; j < 3; ++j)
                    r.a[i * 3 + j] = (r.a[i * 3 + j] + a[i * 3 + k] * o.a[k * 3 + j]) % p;
        return r;
    }
    Mat3 add(const Mat3& o) const {
        Mat3 r = zero(p);
        for (int i = 0; i < 9; ++i) r.a[i] = (a[i] + o.a[i]) % p;
        return r;
    }
    Mat3 circ(const Mat3& o) const {
        // x∘y = x + y - xy
        Mat3 r = add(o);
        Mat3 m = mul(o);
        for (int i = 0; i < 9; ++i) r.a[i] = ((r.a[i] - m.a[i]) % p + p) % p;
        return r;
    }
    bool is_zero() const {
        for (int v : a)
            if (v) return false;
        return true;
    }
    // A 3x3 matrix is nilpotent iff A^3 = 0.
    bool nilpotent() const { return mul(*this).mul(*this).is_zero(); }
};

Mat3 make_mat3(int p, std::array<int, 9> entries) {
    Mat3 m{p, {}};
    for (int i = 0; i < 9; ++i) m.a[i] = ((entries[i] % p) + p) % p;
    return m;
}

struct M3Claim {
    const char* id;
    bool expect_nilpotent;
};

}  // namespace

SuiteResult reproduce_example_m3() {
    auto start = Clock::now();
    SuiteResult res;
    res.suite = "example-m3";
    res.rings = 1;

    const std::array<int, 9> ex = {0, 1, 0, 0, 0, 1, 0, 0, 0};
    const std::array<int, 9> ey = {0, 0, 0, 1, 0, 0, 0, -1, 0};
    const std::array<int, 9> ez = {0, 0, 0, 0, 0, 0, 1, 0, 0};
    const std::array<int, 9> ew = {1, 1, 0, -1, -1, 0, 0, 1, 0};

    RingTable R = build("M(3,Z(2))", 4096);
    const auto nil = nilpotent_mask(R);
    auto index_of = [&](const std::array<int, 9>& entries) {
        std::vector<Elem> e(9);
        for (int i = 0; i < 9; ++i) e[i] = ((entries[i] % 2) + 2) % 2;
        return encode_matrix(MatrixShape::full, 3, 2, e);
    };
    const Elem x = index_of(ex), y = index_of(ey), z = index_of(ez), w = index_of(ew);

    struct TableClaim {
        const char* id;
        Elem value;
        bool expect_nilpotent;
    };
    const TableClaim claims[] = {
        {"x nilpotent", x, true},
        {"y nilpotent", y, true},
        {"x+y nilpotent", R.add(x, y), true},
        {"xy not nilpotent", R.mul(x, y), false},
        {"x∘y not nilpotent", circle(R, x, y), false},
        {"z nilpotent", z, true},
        {"xz nilpotent", R.mul(x, z), true},
        {"x+z not nilpotent", R.add(x, z), false},
        {"x∘z not nilpotent", circle(R, x, z), false},
        {"w nilpotent", w, true},
        {"x∘w nilpotent", circle(R, x, w), true},
        {"x+w not nilpotent", R.add(x, w), false},
        {"xw not nilpotent", R.mul(x, w), false},
    };
    for (const auto& c : claims) {
        ++res.checks;
        if ((nil[c.value] != 0) != c.expect_nilpotent)
            res.violations.push_back({R.label, c.id, {c.value}});
    }

    // Independent matrix oracle over Z/2, and the same claims over Z/3 and
    // Z/5 recorded without assertion.
    for (int p : {2, 3, 5}) {
        Mat3 mx = make_mat3(p, ex), my = make_mat3(p, ey), mz = make_mat3(p, ez),
             mw = make_mat3(p, ew);
        struct OracleClaim {
            const char* id;
            Mat3 value;
            bool expect;
        };
        const OracleClaim oc[] = {
            {"x nilpotent", mx, true},
            {"y nilpotent", my, true},
            {"x+y nilpotent", mx.add(my), true},
            {"xy not nilpotent", mx.mul(my), false},
            {"x∘y not nilpotent", mx.circ(my), false},
            {"z nilpotent", mz, true},
            {"xz nilpotent", mx.mul(mz), true},
            {"x+z not nilpotent", mx.add(mz), false},
            {"x∘z not nilpotent", mx.circ(mz), false},
            {"w nilpotent", mw, true},
            {"x∘w nilpotent", mx.circ(mw), true},
            {"x+w not nilpotent", mx.add(mw), false},
            {"xw not nilpotent", mx.mul(mw), false},
        };
        if (p == 2) {
            for (const auto& c : oc) {
                ++res.checks;
                if (c.value.nilpotent() != c.expect)
                    res.violations.push_back({"M(3,Z(2)) [matrix oracle]", c.id, {}});
            }
        } else {
            std::ostringstream note;
            note << "over Z/" << p << ": ";
            bool first = true;
            for (const auto& c : oc) {
                bool holds = c.value.nilpotent() == c.expect;
                if (!holds) {
                    note << (first ? "" : ", ") << "'" << c.id << "' fails";
                    first = false;
                }
            }
            if (first) note << "all thirteen claims hold";
            res.notes.push_back(note.str());
        }
    }
    res.ms = elapsed_ms(start);
    return res;
}

namespace {

// Square matrices over GF(2) with bitset rows; dimension <= 64.
struct Gf2Mat {
    int n = 0;
    std::vector<uint64_t> rows;

    explicit Gf2Mat(int n) : n(n), rows(n, 0) {}
    bool get(int i, int j) const { return (rows[i] >> j) & 1; }
    void set(int i, int j) { rows[i] |= uint64_t(1) << j; }
    bool is_zero() const {
        for (uint64_t r : rows)
            if (r) return false;
        return true;
    }
    Gf2Mat mul(const Gf2Mat& o) const {
        Gf2Mat r(n);
        for (int i = 0; i < n; ++i) {
            uint64_t row = rows[i], acc = 0;
            while (row) {
                int j = std::countr_zero(row);
                row &= row - 1;
                acc ^= o.rows[j];
            }
            r.rows[i] = acc;
        }
        return r;
    }
};

int gf2_nilpotency_index(const Gf2Mat& m) {
    Gf2Mat p = m;
    int idx = 1;
    while (!p.is_zero()) {
        p = p.mul(m);
        ++idx;
        if (idx > m.n + 1) return -1;
    }
    return idx;
}

}  // namespace

SuiteResult reproduce_example_m2t(int n) {
    if (n < 3) throw std::invalid_argument("reproduce_example_m2t: n must be >= 3");
    if (n > 16) throw std::invalid_argument("reproduce_example_m2t: n too large for the bitset model");
    auto start = Clock::now();
    SuiteResult res;
    res.suite = "example-m2t";
    res.rings = 1;
    const std::string label = "M(2,SUT(" + std::to_string(2 * n) + ",Z(2)))";
    const int t = 2 * n;   // T is t x t strictly upper triangular
    const int dim = 4 * n; // R = M2(T) as dim x dim matrices

    auto expect = [&](bool cond, const char* id, std::vector<Elem> witness = {}) {
        ++res.checks;
        if (!cond) res.violations.push_back({label, id, std::move(witness)});
    };

    // A: ones on the superdiagonal of T.
    Gf2Mat A(t);
    for (int i = 0; i + 1 < t; ++i) A.set(i, i + 1);
    expect(gf2_nilpotency_index(A) == t, "index(A) = 2n");

    // x = [[0,A],[0,0]], y = [[0,0],[A,0]] as dim x dim matrices.
    auto embed = [&](const Gf2Mat& blk, int bi, int bj) {
        Gf2Mat r(dim);
        for (int i = 0; i < t; ++i) r.rows[bi * t + i] = blk.rows[i] << (bj * t);
        return r;
    };
    Gf2Mat x = embed(A, 0, 1), y = embed(A, 1, 0);
    expect(gf2_nilpotency_index(x) == 2, "index(x) = 2");
    expect(gf2_nilpotency_index(y) == 2, "index(y) = 2");
    expect(gf2_nilpotency_index(x.mul(y)) == n, "index(xy) = n");

    // Alternating product x y x y ... x of length 2n-1 is nonzero.
    Gf2Mat alt = x;
    for (int i = 1; i < 2 * n - 1; ++i) alt = alt.mul(i % 2 == 1 ? y : x);
    expect(!alt.is_zero(), "alternating length 2n-1 product nonzero");

    // Sampled length-2n products vanish, with block-degree bookkeeping: a
    // product of k factors has entries only where (col mod t) - (row mod t)
    // >= k, i.e. block entries in T^k; T^(2n) = 0.
    std::mt19937_64 rng(uint64_t(12345) + uint64_t(n));
    auto random_element = [&] {
        Gf2Mat r(dim);
        for (int bi = 0; bi < 2; ++bi)
            for (int bj = 0; bj < 2; ++bj)
                for (int i = 0; i < t; ++i)
                    for (int j = i + 1; j < t; ++j)
                        if (rng() & 1) r.set(bi * t + i, bj * t + j);
        return r;
    };
    auto degree_ok = [&](const Gf2Mat& m, int k) {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (m.get(i, j) && (j % t) - (i % t) < k) return false;
        return true;
    };
    bool all_zero = true, degrees_ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        Gf2Mat prod = random_element();
        for (int k = 2; k <= 2 * n; ++k) {
            prod = prod.mul(random_element());
            if (!degree_ok(prod, k)) degrees_ok = false;
        }
        ++res.checks;
        if (!prod.is_zero()) all_zero = false;
    }
    expect(all_zero, "sampled length-2n products all zero");
    expect(degrees_ok, "block-degree bookkeeping: k factors lie in T^k");
    res.ms = elapsed_ms(start);
    return res;
}

nlohmann::json to_json(const SuiteResult& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["rings"] = r.rings;
    j["checks"] = r.checks;
    j["vacuous"] = r.vacuous;
    nlohmann::json v = nlohmann::json::array();
    for (const auto& viol : r.violations)
        v.push_back({{"ring", viol.ring}, {"statement", viol.statement}, {"witness", viol.witness}});
    j["violations"] = v;
    j["ms"] = r.ms;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

}  // namespace ringlab
