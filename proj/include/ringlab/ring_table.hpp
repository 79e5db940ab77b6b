#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace ringlab {

using Elem = int;

// A finite associative ring given by explicit operation tables.
// Not necessarily unital. Immutable after construction.
struct RingTable {
    int order = 0;
    Elem zero = 0;
    std::optional<Elem> one;
    std::vector<uint16_t> add_tab;  // order*order, row-major
    std::vector<uint16_t> mul_tab;
    std::vector<uint16_t> neg_tab;  // derived
    int exponent = 1;               // additive group exponent, derived
    std::string label;
    std::vector<std::string> element_names;  // optional, may be empty

    Elem add(Elem a, Elem b) const { return add_tab[size_t(a) * order + b]; }
    Elem mul(Elem a, Elem b) const { return mul_tab[size_t(a) * order + b]; }
    Elem neg(Elem a) const { return neg_tab[size_t(a)]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    bool unital() const { return one.has_value(); }
    std::string name_of(Elem a) const;
};

// Maximum order representable with uint16_t table entries.
inline constexpr int kHardOrderCap = 65536;
inline constexpr int kDefaultOrderCap = 65536;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AxiomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Membership bitset over the elements of one ring.
struct SubsetMask {
    std::string ring_label;
    int order = 0;
    std::vector<uint8_t> bits;

    SubsetMask() = default;
    SubsetMask(const RingTable& ring, bool fill = false)
        : ring_label(ring.label), order(ring.order), bits(ring.order, fill ? 1 : 0) {}

    bool test(Elem i) const { return bits[size_t(i)] != 0; }
    void set(Elem i, bool v = true) { bits[size_t(i)] = v ? 1 : 0; }
    int count() const;
    std::vector<Elem> indices() const;
    bool operator==(const SubsetMask& o) const { return order == o.order && bits == o.bits; }
    bool subset_of(const SubsetMask& o) const;
};

// Set operations require masks over the same ring.
SubsetMask mask_union(const SubsetMask& a, const SubsetMask& b);
SubsetMask mask_intersection(const SubsetMask& a, const SubsetMask& b);
SubsetMask mask_complement(const SubsetMask& a);

struct AxiomViolation {
    std::string axiom;
    std::vector<Elem> witness;
    std::string detail;
};

// Derives neg_tab and exponent from the addition table. Called by every
// builder and by load(); tolerates broken tables (validate_axioms flags them).
void finalize(RingTable& ring);

// Exhaustive for small orders, additive-generator reduction above.
// Empty result iff all ring axioms hold.
std::vector<AxiomViolation> validate_axioms(const RingTable& ring);

// Smallest subset containing gens that contains zero and is closed under
// add, neg and mul.
SubsetMask subring_generated(const RingTable& ring, std::span<const Elem> gens);

enum class IdealKind { two_sided, left };

// Smallest (two-sided or left) ideal containing the generators.
SubsetMask ideal_generated(const RingTable& ring, std::span<const Elem> gens,
                           IdealKind kind = IdealKind::two_sided);
SubsetMask ideal_generated(const RingTable& ring, Elem x,
                           IdealKind kind = IdealKind::two_sided);

// Same closure, aborting as soon as an element outside `allowed` appears.
std::optional<SubsetMask> ideal_generated_within(const RingTable& ring, Elem x,
                                                 const SubsetMask& allowed,
                                                 IdealKind kind = IdealKind::two_sided);

// Factor ring by a verified two-sided ideal. Cosets are ordered by minimal
// representative index. Throws AxiomError naming a witness if the mask is
// not an ideal.
RingTable quotient(const RingTable& ring, const SubsetMask& ideal);

// Unitalization over Z/exponent(R): pairs (k, r), (k,r)(l,s) = (kl, ks+lr+rs).
// r -> (0, r) is an embedding whose image is an ideal.
RingTable dorroh_unitalization(const RingTable& ring, int cap = kDefaultOrderCap);
inline Elem dorroh_embed(const RingTable& inner, Elem r) { return r; }  // index (0, r)

// Subring on the elements of `mask`, elements ordered by original index.
// Detects a unit by scanning.
RingTable subring_table(const RingTable& ring, const SubsetMask& mask, std::string label);

nlohmann::json ring_to_json(const RingTable& ring);
// Checks the schema, derives neg/exponent and runs validate_axioms.
RingTable ring_from_json(const nlohmann::json& j);

std::string serialize(const RingTable& ring);
RingTable load(const std::string& bytes);
RingTable load_file(const std::string& path);

}  // namespace ringlab
