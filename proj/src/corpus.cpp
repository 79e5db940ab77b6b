#include "ringlab/corpus.hpp"

#include <random>
#include <set>

namespace ringlab {

namespace {

const char* kAnchors[] = {
    "Z(2)", "Z(4)", "M(2,Z(2))", "UT(2,Z(2))", "SUT(3,Z(2))", "PROD(Z(2),Z(4))",
};

const char* kZmods[] = {
    "Z(3)", "Z(5)", "Z(6)", "Z(7)", "Z(8)", "Z(9)",
    "Z(10)", "Z(12)", "Z(16)", "Z(27)", "Z(30)", "Z(32)",
};

const char* kMatrices[] = {
    "M(2,Z(3))", "M(2,Z(4))", "M(3,Z(2))", "M(2,Z(5))",
};

const char* kTriangular[] = {
    "UT(2,Z(3))", "UT(2,Z(4))", "UT(3,Z(2))", "UT(3,Z(3))", "UT(3,Z(4))",
    "SUT(3,Z(3))", "SUT(4,Z(2))", "SUT(4,Z(3))", "SUT(5,Z(2))",
};

const char* kProducts[] = {
    "PROD(Z(2),Z(2))",          "PROD(Z(2),Z(3))",
    "PROD(Z(4),Z(4))",          "PROD(Z(2),M(2,Z(2)))",
    "PROD(UT(2,Z(2)),Z(4))",    "PROD(SUT(3,Z(2)),Z(2))",
    "PROD(Z(2),PROD(Z(2),Z(2)))",
};

const char* kDorroh[] = {
    "DORROH(SUT(3,Z(2)))", "DORROH(SUT(3,Z(3)))", "DORROH(SUB(Z(4),[2]))",
    "DORROH(SUT(4,Z(2)))", "DORROH(SUB(Z(8),[2]))",
};

// Base rings for randomly generated subrings and quotients.
const char* kSubringBases[] = {
    "M(2,Z(2))", "M(2,Z(3))", "M(3,Z(2))", "UT(3,Z(2))", "UT(2,Z(4))",
};

const char* kQuotientBases[] = {
    "Z(8)", "Z(16)", "UT(2,Z(4))", "UT(3,Z(2))", "M(2,Z(4))", "SUT(4,Z(2))",
};

struct Emitter {
    const CorpusSpec& spec;
    std::vector<RingTable>& out;
    std::vector<std::string>* notices;
    std::set<std::string> seen;

    bool emit(const std::string& expr_text) {
        if (seen.count(expr_text)) return false;
        try {
            RingTable r = build(expr_text, spec.max_order);
            if (r.order < 2) {
                if (notices) notices->push_back(expr_text + ": skipped (trivial order)");
                return false;
            }
            seen.insert(expr_text);
            out.push_back(std::move(r));
            return true;
        } catch (const BuildError& e) {
            if (notices) notices->push_back(expr_text + ": skipped (" + e.what() + ")");
            return false;
        }
    }
};

}  // namespace

std::vector<RingTable> generate_corpus(const CorpusSpec& spec, std::vector<std::string>* notices) {
    if (!spec.any_family()) return {};
    std::vector<RingTable> out;
    Emitter em{spec, out, notices, {}};

    for (const char* e : kAnchors) em.emit(e);
    if (spec.zmods)
        for (const char* e : kZmods) em.emit(e);
    if (spec.matrices)
        for (const char* e : kMatrices) em.emit(e);
    if (spec.triangular)
        for (const char* e : kTriangular) em.emit(e);
    if (spec.products)
        for (const char* e : kProducts) em.emit(e);
    if (spec.dorroh)
        for (const char* e : kDorroh) em.emit(e);

    std::mt19937_64 rng(spec.seed);
    if (spec.subrings) {
        int made = 0, attempts = 0;
        while (made < spec.subring_count && attempts < spec.subring_count * 20) {
            ++attempts;
            const char* base = kSubringBases[rng() % std::size(kSubringBases)];
            RingTable inner;
            try {
                inner = build(base, spec.max_order);
            } catch (const BuildError&) {
                continue;  // base exceeds the cap; ambient-skip notices come from emit()
            }
            int gens = 1 + int(rng() % 2);
            std::string expr = std::string("SUB(") + base + ",[";
            for (int g = 0; g < gens; ++g) {
                Elem x = 1 + Elem(rng() % (inner.order - 1));
                expr += (g ? "," : "") + std::to_string(x);
            }
            expr += "])";
            if (em.emit(expr)) ++made;
        }
    }
    if (spec.quotients) {
        int made = 0, attempts = 0;
        while (made < spec.quotient_count && attempts < spec.quotient_count * 20) {
            ++attempts;
            const char* base = kQuotientBases[rng() % std::size(kQuotientBases)];
            RingTable inner;
            try {
                inner = build(base, spec.max_order);
            } catch (const BuildError&) {
                continue;
            }
            Elem x = 1 + Elem(rng() % (inner.order - 1));
            std::string expr = std::string("QUOT(") + base + ",[" + std::to_string(x) + "])";
            if (em.emit(expr)) ++made;
        }
    }
    if (spec.radical_count > 0) {
        auto radical = generate_radical_rings(spec.seed + 1, spec.radical_count, spec.max_order);
        for (auto& r : radical) {
            if (em.seen.count(r.label)) continue;
            em.seen.insert(r.label);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<RingTable> generate_radical_rings(uint64_t seed, int count, int max_order) {
    // Finite radical rings are nilpotent, so generated subrings of strictly
    // upper triangular matrix rings cover the territory.
    const char* bases[] = {
        "SUT(3,Z(2))", "SUT(4,Z(2))", "SUT(5,Z(2))", "SUT(3,Z(3))", "SUT(4,Z(3))", "SUT(3,Z(4))",
    };
    std::vector<RingTable> built;
    for (const char* b : bases) {
        try {
            built.push_back(build(b, max_order));
        } catch (const BuildError&) {
            // base exceeds the cap; the remaining bases still provide variety
        }
    }
    if (built.empty()) return {};

    std::mt19937_64 rng(seed);
    std::vector<RingTable> out;
    std::set<std::string> seen;
    // A few fixed nilpotent subrings of Z(p^k).
    for (const char* e : {"SUB(Z(4),[2])", "SUB(Z(8),[2])", "SUB(Z(9),[3])", "SUB(Z(16),[2])"}) {
        if (int(out.size()) >= count) break;
        try {
            RingTable r = build(e, max_order);
            seen.insert(r.label);
            out.push_back(std::move(r));
        } catch (const BuildError&) {
        }
    }
    int attempts = 0;
    while (int(out.size()) < count && attempts < count * 50) {
        ++attempts;
        const RingTable& base = built[rng() % built.size()];
        int gens = 1 + int(rng() % 2);
        std::vector<Elem> g;
        for (int i = 0; i < gens; ++i) g.push_back(1 + Elem(rng() % (base.order - 1)));
        std::string label = "SUB(" + base.label + ",[";
        for (int i = 0; i < gens; ++i) label += (i ? "," : "") + std::to_string(g[i]);
        label += "])";
        if (seen.count(label)) continue;
        SubsetMask mask = subring_generated(base, g);
        if (mask.count() < 2 || mask.count() > max_order) continue;
        seen.insert(label);
        out.push_back(subring_table(base, mask, label));
    }
    return out;
}

}  // namespace ringlab
