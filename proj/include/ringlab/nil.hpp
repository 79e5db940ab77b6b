#pragma once

#include <optional>

#include "ringlab/ring_table.hpp"

namespace ringlab {

// x∘y = x + y - xy. (R, ∘) is a monoid with identity 0.
Elem circle(const RingTable& ring, Elem x, Elem y);

// Least n with x^n = 0; absent for non-nilpotent elements. The power
// sequence of a finite ring element cycles within `order` steps, so the
// search is capped there.
std::optional<int> nilpotency_index(const RingTable& ring, Elem x);

// Full nilpotence predicate in O(log order) multiplications per element:
// x is nilpotent iff x^(2^k) = 0 for 2^k >= order.
std::vector<uint8_t> nilpotent_mask(const RingTable& ring);

struct NilReport {
    SubsetMask nilpotents;
    std::vector<int> index_of;  // size order; 0 for non-nilpotent elements
    int bound = 1;              // max nilpotency index (bounded index n)
    SubsetMask q_set;           // quasi-regular elements, Q(R)
    SubsetMask j_radical;       // J(R)
    SubsetMask upper_nilradical;  // Nil*(R)
    SubsetMask idempotents;
    std::optional<SubsetMask> units;  // unital rings only
};

NilReport nil_report(const RingTable& ring);

// Geometric-series quasi-inverse r = -(q + q^2 + ... + q^(n-1)) of a
// nilpotent q; q∘r = r∘q = 0. Throws if q is not nilpotent.
Elem quasi_inverse_nilpotent(const RingTable& ring, Elem q);

// z = x + yx + y^2 x + ... + y^(n-1) x for y^n = 0; asserts z - yz = x and
// y∘z = x + y.
Elem koethe_z_construction(const RingTable& ring, Elem x, Elem y, int n);

struct KoetheProbeResult {
    bool holds = true;
    std::optional<std::pair<Elem, Elem>> witness;  // generator pair on failure
    long long pairs_checked = 0;
};

// For every pair x, y whose principal left ideals (Zx+Rx, Zy+Ry) are nil,
// checks that every element of the sum ideal is nilpotent.
KoetheProbeResult koethe_sum_probe(const RingTable& ring);

nlohmann::json to_json(const NilReport& report);

}  // namespace ringlab
