#pragma once

#include <array>
#include <optional>

#include "ringlab/nil.hpp"
#include "ringlab/ring_table.hpp"

namespace ringlab {

enum class ClosureOp { add, mul, circle, star, jordan, lie };
inline constexpr std::array<ClosureOp, 6> kClosureOps = {
    ClosureOp::add, ClosureOp::mul, ClosureOp::circle,
    ClosureOp::star, ClosureOp::jordan, ClosureOp::lie};
const char* to_string(ClosureOp op);
Elem apply_closure_op(const RingTable& ring, ClosureOp op, Elem x, Elem y);

struct Verdict {
    bool holds = true;
    std::vector<Elem> witness;  // empty when holds
};

// ok iff the op of any two nilpotents is nilpotent; first witness in index
// order otherwise.
Verdict closure_check(const RingTable& ring, ClosureOp op);
Verdict closure_check(const RingTable& ring, ClosureOp op, const std::vector<uint8_t>& nil);

Verdict is_nr(const RingTable& ring);
Verdict is_ni(const RingTable& ring);
Verdict is_abelian(const RingTable& ring);
Verdict is_boolean(const RingTable& ring);
Verdict is_uu(const RingTable& ring);  // throws on non-unital rings

struct ExchangeWitness {
    Elem a, e, r, s;  // e = ra = s∘a
};

struct ExchangeVerdict {
    enum class Status { holds, fails, skipped } status = Status::skipped;
    std::vector<ExchangeWitness> certificates;  // one per element when holds
    Elem failing = -1;
    bool holds() const { return status == Status::holds; }
};

// e = ra = s∘a for some idempotent e and r, s in R. For unital rings the
// equivalent form (e in Ra, 1-e in R(1-a)) is recomputed and must agree.
ExchangeVerdict is_exchange(const RingTable& ring, int exchange_cap = 4096);

struct Decomposition {
    Elem e, u;  // idempotent + unit/nilpotent
};

struct CleanVerdict {
    bool holds = true;
    std::vector<Decomposition> decompositions;  // per element when holds
    Elem failing = -1;
};

CleanVerdict is_clean(const RingTable& ring);      // unital only
CleanVerdict is_nil_clean(const RingTable& ring);  // unital only

// Both routes are computed and must agree elementwise: the decomposition
// search a = e + q (e idempotent, q nilpotent, eq = qe), and the criterion
// a - a^2 nilpotent. Disagreement is a logic error, surfaced loudly.
CleanVerdict is_strongly_nil_clean(const RingTable& ring);

// e = (1 - (1-a)^n)^n computed in the unitalization; requires (a-a^2)^n = 0.
// The result lies in R, is idempotent, commutes with a, and (a-e)^n = 0.
Elem snc_idempotent(const RingTable& ring, Elem a, int n);

// Max nilpotency index over Nil(R); 1 for reduced rings.
int bounded_index(const RingTable& ring);

struct ClassificationReport {
    Verdict nr, ni, abelian, boolean_ring;
    std::optional<Verdict> uu;  // unital rings only
    ExchangeVerdict exchange;
    std::optional<CleanVerdict> clean, nil_clean;  // unital rings only
    CleanVerdict strongly_nil_clean;
    int bounded_index = 1;
    std::array<Verdict, 6> closures;  // aligned with kClosureOps
};

struct ClassifyOptions {
    int exchange_cap = 4096;
};

ClassificationReport classify(const RingTable& ring, const ClassifyOptions& opts = {});

nlohmann::json to_json(const ClassificationReport& report);

}  // namespace ringlab
