#pragma once

#include <string>
#include <vector>

#include "ringlab/corpus.hpp"
#include "ringlab/ring_table.hpp"

namespace ringlab {

struct Violation {
    std::string ring;
    std::string statement;
    std::vector<Elem> witness;
};

struct SuiteResult {
    std::string suite;
    int rings = 0;
    long long checks = 0;   // substantive assertions executed
    long long vacuous = 0;  // obligations skipped because hypotheses failed
    std::vector<Violation> violations;
    double ms = 0;
    std::vector<std::string> notes;
    bool passed() const { return violations.empty(); }
};

struct SuiteOptions {
    uint64_t seed = 0;
    int jobs = 1;
    int index2_max_order = 1024;
    int exchange_cap = 4096;
};

// Theorem (main equivalences): the six closure verdicts and is_nr agree on
// every ring; the Köthe sum probe holds. The closure verdicts are recomputed
// here independently of classifiers.
SuiteResult verify_main_equivalences(const std::vector<RingTable>& corpus,
                                     const SuiteOptions& opts = {});

// Index-2 lemmas: for x^2 = y^2 = 0, nilpotence of x+y / x∘y / xy+yx / xy-yx
// forces nilpotence of xy.
SuiteResult verify_index2_lemmas(const std::vector<RingTable>& corpus,
                                 const SuiteOptions& opts = {});

// Semiprime lemmas on rings with Nil*(R) = 0: (xy)^m = 0 conclusion, the
// sampled exponent-pattern identity, the (xy)^(2^(n-1))x = 0 bound, and
// vanishing products of index-2 nilpotents in bounded-index NR rings.
SuiteResult verify_semiprime_lemmas(const std::vector<RingTable>& corpus,
                                    const SuiteOptions& opts = {});

// Quotient theorems: NR implies R/Nil* Abelian; exchange NR implies NI and
// Nil ⊆ J; exchange NR semiprime implies Nil = 0; strongly nil clean iff
// R/Nil* Boolean.
SuiteResult verify_quotient_theorems(const std::vector<RingTable>& corpus,
                                     const SuiteOptions& opts = {});

// Corollaries: Nil = Q implies NR; unital UU implies NR; NR iff Nil(R) is a
// subgroup of (Q(R), ∘).
SuiteResult verify_corollaries(const std::vector<RingTable>& corpus,
                               const SuiteOptions& opts = {});

// Searches the corpus plus random radical rings for counterexample candidates
// to the paper's open questions; zero findings are expected at finite order.
SuiteResult probe_questions(const CorpusSpec& spec, const SuiteOptions& opts = {});

// The M3(F) example: the thirteen membership claims over Z/2, with the
// behavior over Z/3 and Z/5 recorded in the notes.
SuiteResult reproduce_example_m3();

// The M2(T) example with T the strictly upper triangular 2n x 2n matrices
// over Z/2: index(x) = index(y) = 2, index(xy) = n, a nonzero alternating
// product of length 2n-1, and sampled length-2n products all zero.
SuiteResult reproduce_example_m2t(int n = 3);

nlohmann::json to_json(const SuiteResult& result);

}  // namespace ringlab
