#pragma once

#include <cstdint>

#include "ringlab/expr.hpp"
#include "ringlab/ring_table.hpp"

namespace ringlab {

struct CorpusSpec {
    uint64_t seed = 0;
    int max_order = 4096;
    bool zmods = true;
    bool matrices = true;
    bool triangular = true;
    bool products = true;
    bool dorroh = true;
    bool subrings = true;
    bool quotients = true;
    int subring_count = 8;
    int quotient_count = 6;
    int radical_count = 0;  // nilpotent (hence radical) rings, used by the probe

    bool any_family() const {
        return zmods || matrices || triangular || products || dorroh || subrings || quotients ||
               radical_count > 0;
    }
};

// Deterministic under a fixed seed. Always contains the anchor rings
// Z(2), Z(4), M(2,Z(2)), UT(2,Z(2)), SUT(3,Z(2)), PROD(Z(2),Z(4)).
// Families that would exceed max_order are skipped with a notice.
std::vector<RingTable> generate_corpus(const CorpusSpec& spec,
                                       std::vector<std::string>* notices = nullptr);

// Random nilpotent rings (generated subrings of strictly upper triangular
// matrix rings); every finite radical ring is of this kind.
std::vector<RingTable> generate_radical_rings(uint64_t seed, int count, int max_order);

}  // namespace ringlab
