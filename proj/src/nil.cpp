#include "ringlab/nil.hpp"

#include <algorithm>
#include <map>

namespace ringlab {

Elem circle(const RingTable& R, Elem x, Elem y) {
    return R.sub(R.add(x, y), R.mul(x, y));
}

std::optional<int> nilpotency_index(const RingTable& R, Elem x) {
    if (x == R.zero) return 1;
    Elem p = x;
    for (int n = 1; n <= R.order; ++n) {
        if (p == R.zero) return n;
        p = R.mul(p, x);
    }
    return std::nullopt;
}

std::vector<uint8_t> nilpotent_mask(const RingTable& R) {
    int k = 0;
    while ((1LL << k) < R.order) ++k;
    std::vector<uint8_t> mask(R.order, 0);
    for (Elem x = 0; x < R.order; ++x) {
        Elem w = x;
        for (int i = 0; i < k && w != R.zero; ++i) w = R.mul(w, w);
        mask[x] = (w == R.zero) ? 1 : 0;
    }
    return mask;
}

NilReport nil_report(const RingTable& R) {
    NilReport rep;
    rep.nilpotents = SubsetMask(R);
    rep.q_set = SubsetMask(R);
    rep.j_radical = SubsetMask(R);
    rep.upper_nilradical = SubsetMask(R);
    rep.idempotents = SubsetMask(R);
    rep.index_of.assign(R.order, 0);

    const auto nil = nilpotent_mask(R);
    for (Elem x = 0; x < R.order; ++x) {
        if (nil[x]) {
            rep.nilpotents.set(x);
            rep.index_of[x] = *nilpotency_index(R, x);
            rep.bound = std::max(rep.bound, rep.index_of[x]);
        }
        if (R.mul(x, x) == x) rep.idempotents.set(x);
    }

    // Q(R): existence of a two-sided circle inverse, by scanning candidates.
    for (Elem q = 0; q < R.order; ++q)
        for (Elem r = 0; r < R.order; ++r)
            if (circle(R, q, r) == R.zero && circle(R, r, q) == R.zero) {
                rep.q_set.set(q);
                break;
            }

    // J(R) = {x : ideal(x) ⊆ Q(R)}, Nil*(R) = {x : ideal(x) ⊆ Nil(R)}.
    // Once an ideal is verified inside the bound, all its elements qualify.
    auto largest_ideal_inside = [&](const SubsetMask& bound) {
        SubsetMask acc(R);
        for (Elem x = 0; x < R.order; ++x) {
            if (!bound.test(x) || acc.test(x)) continue;
            auto ideal = ideal_generated_within(R, x, bound, IdealKind::two_sided);
            if (ideal) acc = mask_union(acc, *ideal);
        }
        return acc;
    };
    rep.j_radical = largest_ideal_inside(rep.q_set);
    rep.upper_nilradical = largest_ideal_inside(rep.nilpotents);

    if (R.one) {
        SubsetMask units(R);
        for (Elem u = 0; u < R.order; ++u)
            for (Elem v = 0; v < R.order; ++v)
                if (R.mul(u, v) == *R.one && R.mul(v, u) == *R.one) {
                    units.set(u);
                    break;
                }
        rep.units = std::move(units);
    }
    return rep;
}

Elem quasi_inverse_nilpotent(const RingTable& R, Elem q) {
    auto n = nilpotency_index(R, q);
    if (!n) throw std::invalid_argument("quasi_inverse_nilpotent: element is not nilpotent");
    Elem sum = R.zero, p = q;
    for (int i = 1; i < *n; ++i) {
        sum = R.add(sum, p);
        p = R.mul(p, q);
    }
    return R.neg(sum);
}

Elem koethe_z_construction(const RingTable& R, Elem x, Elem y, int n) {
    if (n < 1) throw std::invalid_argument("koethe_z_construction: n must be positive");
    Elem yp = y;
    for (int i = 1; i < n; ++i) yp = R.mul(yp, y);
    if (yp != R.zero) throw std::invalid_argument("koethe_z_construction: y^n != 0");
    // z = x + yx + y^2 x + ... + y^(n-1) x
    Elem z = x;
    Elem p = y;
    for (int i = 1; i < n; ++i) {
        z = R.add(z, R.mul(p, x));
        p = R.mul(p, y);
    }
    if (R.sub(z, R.mul(y, z)) != x)
        throw std::logic_error("koethe_z_construction: z - yz != x");
    if (circle(R, y, z) != R.add(x, y))
        throw std::logic_error("koethe_z_construction: y∘z != x + y");
    return z;
}

KoetheProbeResult koethe_sum_probe(const RingTable& R) {
    KoetheProbeResult res;
    const auto nil = nilpotent_mask(R);

    // If Nil(R) is additively closed, sums of nil ideals stay nil elementwise.
    bool additively_closed = true;
    for (Elem x = 0; x < R.order && additively_closed; ++x) {
        if (!nil[x]) continue;
        for (Elem y = x; y < R.order; ++y)
            if (nil[y] && !nil[R.add(x, y)]) {
                additively_closed = false;
                break;
            }
    }
    if (additively_closed) return res;

    SubsetMask nil_mask(R);
    for (Elem x = 0; x < R.order; ++x) nil_mask.set(x, nil[x] != 0);

    // Principal nil left ideals Zx + Rx, deduplicated.
    std::map<std::vector<uint8_t>, Elem> distinct;  // bits -> first generator
    for (Elem x = 0; x < R.order; ++x) {
        if (!nil[x]) continue;
        bool aborted = false;
        auto expand = [&](Elem a, auto&& insert) {
            for (Elem r = 0; r < R.order; ++r)
                if (!insert(R.mul(r, a))) return false;
            return true;
        };
        SubsetMask left(R);
        {
            // left ideal closure of {x} within the nilpotent set
            std::vector<Elem> members, work;
            auto insert = [&](Elem v) {
                if (!left.test(v)) {
                    if (!nil_mask.test(v)) {
                        aborted = true;
                        return false;
                    }
                    left.set(v);
                    members.push_back(v);
                    work.push_back(v);
                }
                return true;
            };
            bool ok = insert(R.zero) && insert(x);
            while (ok && !work.empty()) {
                Elem a = work.back();
                work.pop_back();
                ok = insert(R.neg(a));
                for (size_t i = 0; ok && i < members.size(); ++i) {
                    ok = insert(R.add(a, members[i])) && insert(R.add(members[i], a));
                }
                if (ok) ok = expand(a, insert);
            }
        }
        if (!aborted) distinct.emplace(left.bits, x);
    }

    std::vector<std::pair<std::vector<Elem>, Elem>> ideals;
    for (auto& [bits, gen] : distinct) {
        std::vector<Elem> elems;
        for (Elem i = 0; i < R.order; ++i)
            if (bits[i]) elems.push_back(i);
        ideals.emplace_back(std::move(elems), gen);
    }

    for (size_t i = 0; i < ideals.size() && res.holds; ++i)
        for (size_t j = i; j < ideals.size() && res.holds; ++j)
            for (Elem a : ideals[i].first) {
                for (Elem b : ideals[j].first) {
                    ++res.pairs_checked;
                    if (!nil[R.add(a, b)]) {
                        res.holds = false;
                        res.witness = {ideals[i].second, ideals[j].second};
                        break;
                    }
                }
                if (!res.holds) break;
            }
    return res;
}

static nlohmann::json mask_indices(const SubsetMask& mask) {
    nlohmann::json arr = nlohmann::json::array();
    for (Elem i : mask.indices()) arr.push_back(i);
    return arr;
}

nlohmann::json to_json(const NilReport& rep) {
    nlohmann::json j;
    j["nilpotents"] = mask_indices(rep.nilpotents);
    nlohmann::json idx = nlohmann::json::array();
    for (Elem i : rep.nilpotents.indices()) idx.push_back(rep.index_of[i]);
    j["index_of"] = idx;
    j["bound"] = rep.bound;
    j["q_set"] = mask_indices(rep.q_set);
    j["j_radical"] = mask_indices(rep.j_radical);
    j["upper_nilradical"] = mask_indices(rep.upper_nilradical);
    j["idempotents"] = mask_indices(rep.idempotents);
    j["units"] = rep.units ? mask_indices(*rep.units) : nlohmann::json(nullptr);
    return j;
}

}  // namespace ringlab
