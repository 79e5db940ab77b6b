#include "ringlab/ring_table.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ringlab {

namespace {

// Above this order, validate_axioms switches from exhaustive triple loops to
// the additive-generator reduction (sound and complete, see below).
constexpr int kExhaustiveLimit = 256;

constexpr int kMaxViolations = 16;

}  // namespace

std::string RingTable::name_of(Elem a) const {
    if (size_t(a) < element_names.size()) return element_names[a];
    return std::to_string(a);
}

int SubsetMask::count() const {
    return int(std::count(bits.begin(), bits.end(), uint8_t(1)));
}

std::vector<Elem> SubsetMask::indices() const {
    std::vector<Elem> out;
    for (int i = 0; i < order; ++i)
        if (bits[i]) out.push_back(i);
    return out;
}

bool SubsetMask::subset_of(const SubsetMask& o) const {
    if (order != o.order) return false;
    for (int i = 0; i < order; ++i)
        if (bits[i] && !o.bits[i]) return false;
    return true;
}

static void require_same_ring(const SubsetMask& a, const SubsetMask& b) {
    if (a.order != b.order || a.ring_label != b.ring_label)
        throw std::invalid_argument("SubsetMask: set operation between masks of different rings");
}

SubsetMask mask_union(const SubsetMask& a, const SubsetMask& b) {
    require_same_ring(a, b);
    SubsetMask r = a;
    for (int i = 0; i < r.order; ++i) r.bits[i] |= b.bits[i];
    return r;
}

SubsetMask mask_intersection(const SubsetMask& a, const SubsetMask& b) {
    require_same_ring(a, b);
    SubsetMask r = a;
    for (int i = 0; i < r.order; ++i) r.bits[i] &= b.bits[i];
    return r;
}

SubsetMask mask_complement(const SubsetMask& a) {
    SubsetMask r = a;
    for (int i = 0; i < r.order; ++i) r.bits[i] ^= 1;
    return r;
}

void finalize(RingTable& ring) {
    const int n = ring.order;
    ring.neg_tab.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
        ring.neg_tab[a] = uint16_t(a);  // fallback; validate_axioms flags missing inverses
        for (Elem b = 0; b < n; ++b)
            if (ring.add(a, b) == ring.zero) {
                ring.neg_tab[a] = uint16_t(b);
                break;
            }
    }
    long long exponent = 1;
    for (Elem a = 0; a < n; ++a) {
        Elem acc = a;
        int ord = 1;
        while (acc != ring.zero && ord <= n) {
            acc = ring.add(acc, a);
            ++ord;
        }
        if (acc != ring.zero) continue;  // broken group; flagged elsewhere
        exponent = std::lcm(exponent, (long long)ord);
        if (exponent > n) {
            exponent = n;  // impossible for a valid group; clamp
            break;
        }
    }
    ring.exponent = int(exponent);
}

namespace {

struct Validator {
    const RingTable& R;
    std::vector<AxiomViolation> out;

    bool full() const { return int(out.size()) >= kMaxViolations; }

    void report(std::string axiom, std::vector<Elem> witness, std::string detail = {}) {
        if (!full()) out.push_back({std::move(axiom), std::move(witness), std::move(detail)});
    }

    bool check_shape() {
        const size_t n = size_t(R.order);
        if (R.order <= 0) {
            report("shape", {}, "order must be positive");
            return false;
        }
        if (R.add_tab.size() != n * n || R.mul_tab.size() != n * n || R.neg_tab.size() != n) {
            report("shape", {}, "table size mismatch");
            return false;
        }
        for (uint16_t v : R.add_tab)
            if (v >= n) {
                report("shape", {}, "add entry out of range");
                return false;
            }
        for (uint16_t v : R.mul_tab)
            if (v >= n) {
                report("shape", {}, "mul entry out of range");
                return false;
            }
        if (R.zero < 0 || R.zero >= R.order || (R.one && (*R.one < 0 || *R.one >= R.order))) {
            report("shape", {}, "zero/one out of range");
            return false;
        }
        return true;
    }

    bool check_group_basics() {
        bool ok = true;
        for (Elem a = 0; a < R.order && !full(); ++a) {
            if (R.add(a, R.zero) != a || R.add(R.zero, a) != a) {
                report("add-identity", {a});
                ok = false;
            }
            if (R.add(a, R.neg(a)) != R.zero) {
                report("add-inverse", {a});
                ok = false;
            }
        }
        for (Elem a = 0; a < R.order && !full(); ++a)
            for (Elem b = a + 1; b < R.order; ++b)
                if (R.add(a, b) != R.add(b, a)) {
                    report("add-commutativity", {a, b});
                    ok = false;
                    if (full()) return ok;
                }
        return ok;
    }

    // Greedy additive generating set. Every element is reachable as a
    // left-nested chain of generator additions, which makes the reduced
    // associativity / distributivity checks below complete.
    std::vector<Elem> additive_generators() const {
        std::vector<uint8_t> reached(R.order, 0);
        std::vector<Elem> members{R.zero}, gens;
        reached[R.zero] = 1;
        for (Elem e = 0; e < R.order; ++e) {
            if (reached[e]) continue;
            gens.push_back(e);
            bool grew = true;
            while (grew) {
                grew = false;
                for (size_t i = 0; i < members.size(); ++i)
                    for (Elem s : gens) {
                        Elem v = R.add(members[i], s);
                        if (!reached[v]) {
                            reached[v] = 1;
                            members.push_back(v);
                            grew = true;
                        }
                    }
            }
        }
        return gens;
    }

    void check_exhaustive() {
        const int n = R.order;
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c) {
                    if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c))) {
                        report("add-associativity", {a, b, c});
                        if (full()) return;
                    }
                    if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))) {
                        report("mul-associativity", {a, b, c});
                        if (full()) return;
                    }
                    if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c))) {
                        report("right-distributivity", {a, b, c});
                        if (full()) return;
                    }
                    if (R.mul(c, R.add(a, b)) != R.add(R.mul(c, a), R.mul(c, b))) {
                        report("left-distributivity", {a, b, c});
                        if (full()) return;
                    }
                }
    }

    void check_reduced() {
        const int n = R.order;
        const auto gens = additive_generators();
        // (a+b)+s = a+(b+s) for all a,b and generators s implies full
        // associativity by induction on the generator chain of the third slot.
        for (Elem s : gens)
            for (Elem a = 0; a < n; ++a)
                for (Elem b = 0; b < n; ++b)
                    if (R.add(R.add(a, b), s) != R.add(a, R.add(b, s))) {
                        report("add-associativity", {a, b, s});
                        if (full()) return;
                    }
        // Bilinearity: c(a+s) = ca+cs and (a+s)c = ac+sc pin down both
        // distributive laws once additive associativity holds.
        for (Elem s : gens)
            for (Elem c = 0; c < n; ++c)
                for (Elem a = 0; a < n; ++a) {
                    if (R.mul(c, R.add(a, s)) != R.add(R.mul(c, a), R.mul(c, s))) {
                        report("left-distributivity", {c, a, s});
                        if (full()) return;
                    }
                    if (R.mul(R.add(a, s), c) != R.add(R.mul(a, c), R.mul(s, c))) {
                        report("right-distributivity", {a, s, c});
                        if (full()) return;
                    }
                }
        // With bilinearity, associativity of mul on generator triples extends
        // additively to all triples.
        for (Elem s : gens)
            for (Elem t : gens)
                for (Elem u : gens)
                    if (R.mul(R.mul(s, t), u) != R.mul(s, R.mul(t, u))) {
                        report("mul-associativity", {s, t, u});
                        if (full()) return;
                    }
    }

    void check_unit_and_exponent() {
        if (R.one)
            for (Elem a = 0; a < R.order; ++a)
                if (R.mul(*R.one, a) != a || R.mul(a, *R.one) != a) {
                    report("unit", {a});
                    if (full()) return;
                }
        // exponent*a = 0 for all a, and exponent minimal.
        long long want = 1;
        for (Elem a = 0; a < R.order; ++a) {
            Elem acc = a;
            int ord = 1;
            while (acc != R.zero && ord <= R.order) {
                acc = R.add(acc, a);
                ++ord;
            }
            if (acc != R.zero) {
                report("additive-order", {a}, "no additive order within ring order");
                return;
            }
            want = std::lcm(want, (long long)ord);
            if (want > R.order) break;
        }
        if (want != R.exponent) report("exponent", {}, "stored exponent not minimal");
    }
};

}  // namespace

std::vector<AxiomViolation> validate_axioms(const RingTable& ring) {
    Validator v{ring, {}};
    if (!v.check_shape()) return v.out;
    bool group_ok = v.check_group_basics();
    if (ring.order <= kExhaustiveLimit)
        v.check_exhaustive();
    else if (group_ok)
        v.check_reduced();
    if (!v.full()) v.check_unit_and_exponent();
    return v.out;
}

namespace {

// Worklist closure. `expand` pushes the images of a newly added element.
template <typename Expand>
SubsetMask saturate(const RingTable& R, std::span<const Elem> seeds, Expand&& expand,
                    const SubsetMask* allowed, bool* aborted) {
    SubsetMask mask(R);
    std::vector<Elem> members, work;
    auto insert = [&](Elem v) {
        if (!mask.test(v)) {
            if (allowed && !allowed->test(v)) {
                if (aborted) *aborted = true;
                return false;
            }
            mask.set(v);
            members.push_back(v);
            work.push_back(v);
        }
        return true;
    };
    if (aborted) *aborted = false;
    if (!insert(R.zero)) return mask;
    for (Elem g : seeds)
        if (!insert(g)) return mask;
    while (!work.empty()) {
        Elem a = work.back();
        work.pop_back();
        if (!insert(R.neg(a))) return mask;
        for (size_t i = 0; i < members.size(); ++i) {
            if (!insert(R.add(a, members[i]))) return mask;
            if (!insert(R.add(members[i], a))) return mask;
        }
        if (!expand(a, insert)) return mask;
    }
    return mask;
}

}  // namespace

SubsetMask subring_generated(const RingTable& ring, std::span<const Elem> gens) {
    SubsetMask mask(ring);
    std::vector<Elem> members, work;
    auto insert = [&](Elem v) {
        if (!mask.test(v)) {
            mask.set(v);
            members.push_back(v);
            work.push_back(v);
        }
    };
    insert(ring.zero);
    for (Elem g : gens) {
        if (g < 0 || g >= ring.order) throw std::invalid_argument("generator out of range");
        insert(g);
    }
    while (!work.empty()) {
        Elem a = work.back();
        work.pop_back();
        insert(ring.neg(a));
        for (size_t i = 0; i < members.size(); ++i) {
            Elem b = members[i];
            insert(ring.add(a, b));
            insert(ring.add(b, a));
            insert(ring.mul(a, b));
            insert(ring.mul(b, a));
        }
    }
    return mask;
}

static SubsetMask ideal_closure(const RingTable& ring, std::span<const Elem> gens, IdealKind kind,
                                const SubsetMask* allowed, bool* aborted) {
    auto expand = [&](Elem a, auto&& insert) {
        for (Elem r = 0; r < ring.order; ++r) {
            if (!insert(ring.mul(r, a))) return false;
            if (kind == IdealKind::two_sided && !insert(ring.mul(a, r))) return false;
        }
        return true;
    };
    return saturate(ring, gens, expand, allowed, aborted);
}

SubsetMask ideal_generated(const RingTable& ring, std::span<const Elem> gens, IdealKind kind) {
    for (Elem g : gens)
        if (g < 0 || g >= ring.order) throw std::invalid_argument("generator out of range");
    return ideal_closure(ring, gens, kind, nullptr, nullptr);
}

SubsetMask ideal_generated(const RingTable& ring, Elem x, IdealKind kind) {
    return ideal_generated(ring, std::span<const Elem>(&x, 1), kind);
}

std::optional<SubsetMask> ideal_generated_within(const RingTable& ring, Elem x,
                                                 const SubsetMask& allowed, IdealKind kind) {
    bool aborted = false;
    SubsetMask mask = ideal_closure(ring, std::span<const Elem>(&x, 1), kind, &allowed, &aborted);
    if (aborted) return std::nullopt;
    return mask;
}

RingTable quotient(const RingTable& ring, const SubsetMask& ideal) {
    if (ideal.order != ring.order)
        throw std::invalid_argument("quotient: mask/ring order mismatch");
    if (!ideal.test(ring.zero)) throw AxiomError("quotient: mask does not contain zero");
    const auto members = ideal.indices();
    for (Elem a : members) {
        for (Elem b : members)
            if (!ideal.test(ring.add(a, b)))
                throw AxiomError("quotient: mask not additively closed, witness (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")");
        for (Elem r = 0; r < ring.order; ++r) {
            if (!ideal.test(ring.mul(r, a)))
                throw AxiomError("quotient: mask does not absorb left multiplication, witness (" +
                                 std::to_string(r) + "," + std::to_string(a) + ")");
            if (!ideal.test(ring.mul(a, r)))
                throw AxiomError("quotient: mask does not absorb right multiplication, witness (" +
                                 std::to_string(a) + "," + std::to_string(r) + ")");
        }
    }

    // Coset of x = {x + i}; representative = minimal element index.
    const int n = ring.order;
    std::vector<Elem> rep(n);
    for (Elem x = 0; x < n; ++x) {
        Elem m = x;
        for (Elem i : members) m = std::min(m, ring.add(x, i));
        rep[x] = m;
    }
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::vector<int> coset_id(n, -1);
    for (size_t c = 0; c < reps.size(); ++c) coset_id[reps[c]] = int(c);
    for (Elem x = 0; x < n; ++x) coset_id[x] = coset_id[rep[x]];

    RingTable q;
    q.order = int(reps.size());
    q.zero = coset_id[ring.zero];
    if (ring.one) q.one = coset_id[*ring.one];
    q.label = ring.label + "/I" + std::to_string(members.size());
    q.add_tab.resize(size_t(q.order) * q.order);
    q.mul_tab.resize(size_t(q.order) * q.order);
    for (int a = 0; a < q.order; ++a)
        for (int b = 0; b < q.order; ++b) {
            q.add_tab[size_t(a) * q.order + b] = uint16_t(coset_id[ring.add(reps[a], reps[b])]);
            q.mul_tab[size_t(a) * q.order + b] = uint16_t(coset_id[ring.mul(reps[a], reps[b])]);
        }
    if (!ring.element_names.empty()) {
        q.element_names.resize(q.order);
        for (int a = 0; a < q.order; ++a) q.element_names[a] = ring.name_of(reps[a]) + "+I";
    }
    finalize(q);
    return q;
}

RingTable dorroh_unitalization(const RingTable& ring, int cap) {
    const long long m = ring.exponent, n = ring.order;
    const long long order = m * n;
    if (order > cap || order > kHardOrderCap)
        throw BuildError("dorroh: order " + std::to_string(order) + " exceeds cap");
    RingTable d;
    d.order = int(order);
    d.zero = 0;  // (0, zero) assuming zero index remapped below
    auto idx = [&](long long k, Elem r) { return Elem(k * n + r); };
    d.zero = idx(0, ring.zero);
    d.one = idx(1 % m, ring.zero);
    d.label = "DORROH(" + ring.label + ")";
    d.add_tab.resize(size_t(order) * order);
    d.mul_tab.resize(size_t(order) * order);
    // scalar multiples k*r, k < m
    std::vector<Elem> smul(size_t(m) * n);
    for (Elem r = 0; r < n; ++r) smul[r] = ring.zero;
    for (long long k = 1; k < m; ++k)
        for (Elem r = 0; r < n; ++r) smul[size_t(k) * n + r] = ring.add(smul[size_t(k - 1) * n + r], r);
    for (long long k = 0; k < m; ++k)
        for (Elem r = 0; r < n; ++r) {
            const Elem a = idx(k, r);
            for (long long l = 0; l < m; ++l)
                for (Elem s = 0; s < n; ++s) {
                    const Elem b = idx(l, s);
                    d.add_tab[size_t(a) * order + b] = uint16_t(idx((k + l) % m, ring.add(r, s)));
                    Elem prod = ring.add(ring.add(smul[size_t(k) * n + s], smul[size_t(l) * n + r]),
                                         ring.mul(r, s));
                    d.mul_tab[size_t(a) * order + b] = uint16_t(idx((k * l) % m, prod));
                }
        }
    if (!ring.element_names.empty() || order <= 512) {
        d.element_names.resize(order);
        for (long long k = 0; k < m; ++k)
            for (Elem r = 0; r < n; ++r)
                d.element_names[idx(k, r)] = "(" + std::to_string(k) + "," + ring.name_of(r) + ")";
    }
    finalize(d);
    return d;
}

RingTable subring_table(const RingTable& ring, const SubsetMask& mask, std::string label) {
    if (mask.order != ring.order) throw std::invalid_argument("subring_table: mask mismatch");
    const auto members = mask.indices();
    if (members.empty()) throw BuildError("subring_table: empty subset");
    std::vector<int> pos(ring.order, -1);
    for (size_t i = 0; i < members.size(); ++i) pos[members[i]] = int(i);
    RingTable s;
    s.order = int(members.size());
    s.label = std::move(label);
    if (pos[ring.zero] < 0) throw BuildError("subring_table: subset does not contain zero");
    s.zero = pos[ring.zero];
    s.add_tab.resize(size_t(s.order) * s.order);
    s.mul_tab.resize(size_t(s.order) * s.order);
    for (int a = 0; a < s.order; ++a)
        for (int b = 0; b < s.order; ++b) {
            Elem sum = ring.add(members[a], members[b]);
            Elem prod = ring.mul(members[a], members[b]);
            if (pos[sum] < 0 || pos[prod] < 0)
                throw BuildError("subring_table: subset not closed");
            s.add_tab[size_t(a) * s.order + b] = uint16_t(pos[sum]);
            s.mul_tab[size_t(a) * s.order + b] = uint16_t(pos[prod]);
        }
    if (!ring.element_names.empty()) {
        s.element_names.resize(s.order);
        for (int a = 0; a < s.order; ++a) s.element_names[a] = ring.name_of(members[a]);
    }
    // A subring may have its own identity even when the ambient ring does not.
    for (int e = 0; e < s.order; ++e) {
        bool is_one = true;
        for (int x = 0; x < s.order && is_one; ++x)
            is_one = s.mul_tab[size_t(e) * s.order + x] == x && s.mul_tab[size_t(x) * s.order + e] == x;
        if (is_one) {
            s.one = e;
            break;
        }
    }
    finalize(s);
    return s;
}

nlohmann::json ring_to_json(const RingTable& ring) {
    nlohmann::json j;
    j["order"] = ring.order;
    j["zero"] = ring.zero;
    j["one"] = ring.one ? nlohmann::json(*ring.one) : nlohmann::json(nullptr);
    auto dump_tab = [&](const std::vector<uint16_t>& tab) {
        nlohmann::json rows = nlohmann::json::array();
        for (int a = 0; a < ring.order; ++a) {
            nlohmann::json row = nlohmann::json::array();
            for (int b = 0; b < ring.order; ++b) row.push_back(tab[size_t(a) * ring.order + b]);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["add"] = dump_tab(ring.add_tab);
    j["mul"] = dump_tab(ring.mul_tab);
    j["label"] = ring.label;
    return j;
}

RingTable ring_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("ring file: expected a JSON object");
    for (const char* key : {"order", "zero", "one", "add", "mul", "label"})
        if (!j.contains(key)) throw SchemaError(std::string("ring file: missing field '") + key + "'");
    RingTable r;
    if (!j["order"].is_number_integer()) throw SchemaError("ring file: 'order' must be an integer");
    r.order = j["order"].get<int>();
    if (r.order <= 0 || r.order > kHardOrderCap) throw SchemaError("ring file: order out of range");
    r.zero = j["zero"].get<int>();
    if (!j["one"].is_null()) r.one = j["one"].get<int>();
    if (!j["label"].is_string()) throw SchemaError("ring file: 'label' must be a string");
    r.label = j["label"].get<std::string>();
    auto read_tab = [&](const nlohmann::json& rows, std::vector<uint16_t>& tab, const char* name) {
        if (!rows.is_array() || int(rows.size()) != r.order)
            throw SchemaError(std::string("ring file: '") + name + "' must be an order x order array");
        tab.resize(size_t(r.order) * r.order);
        for (int a = 0; a < r.order; ++a) {
            const auto& row = rows[a];
            if (!row.is_array() || int(row.size()) != r.order)
                throw SchemaError(std::string("ring file: row ") + std::to_string(a) + " of '" +
                                  name + "' has wrong length");
            for (int b = 0; b < r.order; ++b) {
                if (!row[b].is_number_integer())
                    throw SchemaError(std::string("ring file: non-integer entry in '") + name + "'");
                int v = row[b].get<int>();
                if (v < 0 || v >= r.order)
                    throw SchemaError(std::string("ring file: entry out of range in '") + name + "'");
                tab[size_t(a) * r.order + b] = uint16_t(v);
            }
        }
    };
    read_tab(j["add"], r.add_tab, "add");
    read_tab(j["mul"], r.mul_tab, "mul");
    if (r.zero < 0 || r.zero >= r.order) throw SchemaError("ring file: zero out of range");
    if (r.one && (*r.one < 0 || *r.one >= r.order)) throw SchemaError("ring file: one out of range");
    finalize(r);
    auto violations = validate_axioms(r);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "ring file: axiom violation: " << violations.front().axiom << " at (";
        for (size_t i = 0; i < violations.front().witness.size(); ++i)
            msg << (i ? "," : "") << violations.front().witness[i];
        msg << ")";
        throw AxiomError(msg.str());
    }
    return r;
}

std::string serialize(const RingTable& ring) { return ring_to_json(ring).dump(); }

RingTable load(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("ring file: invalid JSON: ") + e.what());
    }
    return ring_from_json(j);
}

RingTable load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open ring file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load(ss.str());
}

}  // namespace ringlab
