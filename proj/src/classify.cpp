#include "ringlab/classify.hpp"

namespace ringlab {

const char* to_string(ClosureOp op) {
    switch (op) {
        case ClosureOp::add: return "add";
        case ClosureOp::mul: return "mul";
        case ClosureOp::circle: return "circle";
        case ClosureOp::star: return "star";
        case ClosureOp::jordan: return "jordan";
        case ClosureOp::lie: return "lie";
    }
    return "?";
}

Elem apply_closure_op(const RingTable& R, ClosureOp op, Elem x, Elem y) {
    switch (op) {
        case ClosureOp::add: return R.add(x, y);
        case ClosureOp::mul: return R.mul(x, y);
        case ClosureOp::circle: return R.sub(R.add(x, y), R.mul(x, y));
        case ClosureOp::star: return R.add(R.add(x, y), R.mul(x, y));
        case ClosureOp::jordan: return R.add(R.mul(x, y), R.mul(y, x));
        case ClosureOp::lie: return R.sub(R.mul(x, y), R.mul(y, x));
    }
    return R.zero;
}

Verdict closure_check(const RingTable& R, ClosureOp op, const std::vector<uint8_t>& nil) {
    for (Elem x = 0; x < R.order; ++x) {
        if (!nil[x]) continue;
        for (Elem y = 0; y < R.order; ++y) {
            if (!nil[y]) continue;
            if (!nil[apply_closure_op(R, op, x, y)]) return {false, {x, y}};
        }
    }
    return {};
}

Verdict closure_check(const RingTable& R, ClosureOp op) {
    return closure_check(R, op, nilpotent_mask(R));
}

Verdict is_nr(const RingTable& R) {
    const auto nil = nilpotent_mask(R);
    Verdict add = closure_check(R, ClosureOp::add, nil);
    if (!add.holds) return add;
    return closure_check(R, ClosureOp::mul, nil);
}

Verdict is_ni(const RingTable& R) {
    Verdict nr = is_nr(R);
    if (!nr.holds) return nr;
    const auto nil = nilpotent_mask(R);
    for (Elem r = 0; r < R.order; ++r)
        for (Elem x = 0; x < R.order; ++x) {
            if (!nil[x]) continue;
            if (!nil[R.mul(r, x)] || !nil[R.mul(x, r)]) return {false, {r, x}};
        }
    return {};
}

Verdict is_abelian(const RingTable& R) {
    for (Elem e = 0; e < R.order; ++e) {
        if (R.mul(e, e) != e) continue;
        for (Elem x = 0; x < R.order; ++x)
            if (R.mul(e, x) != R.mul(x, e)) return {false, {e, x}};
    }
    return {};
}

Verdict is_boolean(const RingTable& R) {
    for (Elem a = 0; a < R.order; ++a)
        if (R.mul(a, a) != a) return {false, {a}};
    return {};
}

static SubsetMask unit_mask(const RingTable& R) {
    SubsetMask units(R);
    for (Elem u = 0; u < R.order; ++u)
        for (Elem v = 0; v < R.order; ++v)
            if (R.mul(u, v) == *R.one && R.mul(v, u) == *R.one) {
                units.set(u);
                break;
            }
    return units;
}

Verdict is_uu(const RingTable& R) {
    if (!R.one) throw std::invalid_argument("is_uu: ring has no unit");
    const auto nil = nilpotent_mask(R);
    SubsetMask unipotents(R);
    for (Elem q = 0; q < R.order; ++q)
        if (nil[q]) unipotents.set(R.add(*R.one, q));
    SubsetMask units = unit_mask(R);
    for (Elem x = 0; x < R.order; ++x)
        if (units.test(x) != unipotents.test(x)) return {false, {x}};
    return {};
}

ExchangeVerdict is_exchange(const RingTable& R, int exchange_cap) {
    ExchangeVerdict verdict;
    if (R.order > exchange_cap) {
        verdict.status = ExchangeVerdict::Status::skipped;
        return verdict;
    }
    std::vector<Elem> idempotents;
    for (Elem e = 0; e < R.order; ++e)
        if (R.mul(e, e) == e) idempotents.push_back(e);

    std::vector<Elem> first_r(R.order), first_s(R.order);
    for (Elem a = 0; a < R.order; ++a) {
        std::fill(first_r.begin(), first_r.end(), -1);
        std::fill(first_s.begin(), first_s.end(), -1);
        for (Elem r = 0; r < R.order; ++r) {
            Elem ra = R.mul(r, a);
            if (first_r[ra] < 0) first_r[ra] = r;
            Elem sa = circle(R, r, a);
            if (first_s[sa] < 0) first_s[sa] = r;
        }
        Elem found = -1;
        for (Elem e : idempotents)
            if (first_r[e] >= 0 && first_s[e] >= 0) {
                found = e;
                break;
            }
        if (R.one) {
            // Equivalent unital form: e in Ra and 1-e in R(1-a).
            std::vector<uint8_t> r1ma(R.order, 0);
            Elem oma = R.sub(*R.one, a);
            for (Elem r = 0; r < R.order; ++r) r1ma[R.mul(r, oma)] = 1;
            bool alt = false;
            for (Elem e : idempotents)
                if (first_r[e] >= 0 && r1ma[R.sub(*R.one, e)]) {
                    alt = true;
                    break;
                }
            if (alt != (found >= 0))
                throw std::logic_error("is_exchange: unital reformulation disagrees at a=" +
                                       std::to_string(a) + " in " + R.label);
        }
        if (found < 0) {
            verdict.status = ExchangeVerdict::Status::fails;
            verdict.failing = a;
            verdict.certificates.clear();
            return verdict;
        }
        verdict.certificates.push_back({a, found, first_r[found], first_s[found]});
    }
    verdict.status = ExchangeVerdict::Status::holds;
    return verdict;
}

static CleanVerdict decompose_all(const RingTable& R, const SubsetMask& parts) {
    CleanVerdict v;
    std::vector<Elem> idempotents;
    for (Elem e = 0; e < R.order; ++e)
        if (R.mul(e, e) == e) idempotents.push_back(e);
    for (Elem a = 0; a < R.order; ++a) {
        Elem found_e = -1;
        for (Elem e : idempotents)
            if (parts.test(R.sub(a, e))) {
                found_e = e;
                break;
            }
        if (found_e < 0) {
            v.holds = false;
            v.failing = a;
            v.decompositions.clear();
            return v;
        }
        v.decompositions.push_back({found_e, R.sub(a, found_e)});
    }
    return v;
}

CleanVerdict is_clean(const RingTable& R) {
    if (!R.one) throw std::invalid_argument("is_clean: ring has no unit");
    return decompose_all(R, unit_mask(R));
}

CleanVerdict is_nil_clean(const RingTable& R) {
    if (!R.one) throw std::invalid_argument("is_nil_clean: ring has no unit");
    const auto nil = nilpotent_mask(R);
    SubsetMask mask(R);
    for (Elem x = 0; x < R.order; ++x) mask.set(x, nil[x] != 0);
    return decompose_all(R, mask);
}

CleanVerdict is_strongly_nil_clean(const RingTable& R) {
    const auto nil = nilpotent_mask(R);
    std::vector<Elem> idempotents;
    for (Elem e = 0; e < R.order; ++e)
        if (R.mul(e, e) == e) idempotents.push_back(e);
    CleanVerdict v;
    for (Elem a = 0; a < R.order; ++a) {
        Elem found_e = -1;
        for (Elem e : idempotents) {
            Elem q = R.sub(a, e);
            if (nil[q] && R.mul(e, q) == R.mul(q, e)) {
                found_e = e;
                break;
            }
        }
        bool criterion = nil[R.sub(a, R.mul(a, a))] != 0;
        if (criterion != (found_e >= 0))
            throw std::logic_error(
                "is_strongly_nil_clean: decomposition search and a-a^2 criterion disagree at a=" +
                std::to_string(a) + " in " + R.label);
        if (found_e < 0) {
            v.holds = false;
            v.failing = a;
            v.decompositions.clear();
            return v;
        }
        v.decompositions.push_back({found_e, R.sub(a, found_e)});
    }
    return v;
}

namespace {

// Arithmetic in the Dorroh unitalization Z/m ⊕ R, without materializing it.
struct DorrohPair {
    long long k;
    Elem r;
};

struct DorrohOps {
    const RingTable& R;
    long long m;

    Elem scal(long long k, Elem r) const {
        Elem acc = R.zero, base = r;
        while (k > 0) {
            if (k & 1) acc = R.add(acc, base);
            base = R.add(base, base);
            k >>= 1;
        }
        return acc;
    }
    DorrohPair add(DorrohPair a, DorrohPair b) const {
        return {(a.k + b.k) % m, R.add(a.r, b.r)};
    }
    DorrohPair sub(DorrohPair a, DorrohPair b) const {
        return {((a.k - b.k) % m + m) % m, R.sub(a.r, b.r)};
    }
    DorrohPair mul(DorrohPair a, DorrohPair b) const {
        Elem r = R.add(R.add(scal(a.k, b.r), scal(b.k, a.r)), R.mul(a.r, b.r));
        return {(a.k * b.k) % m, r};
    }
    DorrohPair pow(DorrohPair a, int n) const {
        DorrohPair acc{1 % m, R.zero};
        for (int i = 0; i < n; ++i) acc = mul(acc, a);
        return acc;
    }
};

}  // namespace

Elem snc_idempotent(const RingTable& R, Elem a, int n) {
    if (n < 1) throw std::invalid_argument("snc_idempotent: n must be positive");
    Elem d = R.sub(a, R.mul(a, a));
    Elem p = d;
    for (int i = 1; i < n; ++i) p = R.mul(p, d);
    if (p != R.zero) throw std::invalid_argument("snc_idempotent: (a-a^2)^n != 0");

    DorrohOps D{R, R.exponent};
    DorrohPair one{1 % D.m, R.zero};
    DorrohPair pa{0, a};
    DorrohPair e = D.pow(D.sub(one, D.pow(D.sub(one, pa), n)), n);
    if (e.k % D.m != 0)
        throw std::logic_error("snc_idempotent: e does not lie in the embedded ring");
    Elem er = e.r;
    if (R.mul(er, er) != er) throw std::logic_error("snc_idempotent: e not idempotent");
    if (R.mul(a, er) != R.mul(er, a)) throw std::logic_error("snc_idempotent: e does not commute");
    Elem q = R.sub(a, er), qn = q;
    for (int i = 1; i < n; ++i) qn = R.mul(qn, q);
    if (qn != R.zero) throw std::logic_error("snc_idempotent: (a-e)^n != 0");
    return er;
}

int bounded_index(const RingTable& R) {
    const auto nil = nilpotent_mask(R);
    int bound = 1;
    for (Elem x = 0; x < R.order; ++x)
        if (nil[x]) bound = std::max(bound, *nilpotency_index(R, x));
    return bound;
}

ClassificationReport classify(const RingTable& R, const ClassifyOptions& opts) {
    ClassificationReport rep;
    const auto nil = nilpotent_mask(R);
    for (size_t i = 0; i < kClosureOps.size(); ++i)
        rep.closures[i] = closure_check(R, kClosureOps[i], nil);
    rep.nr = is_nr(R);
    rep.ni = is_ni(R);
    rep.abelian = is_abelian(R);
    rep.boolean_ring = is_boolean(R);
    rep.exchange = is_exchange(R, opts.exchange_cap);
    rep.strongly_nil_clean = is_strongly_nil_clean(R);
    rep.bounded_index = bounded_index(R);
    if (R.one) {
        rep.uu = is_uu(R);
        rep.clean = is_clean(R);
        rep.nil_clean = is_nil_clean(R);
    }
    return rep;
}

static nlohmann::json verdict_json(const Verdict& v) {
    nlohmann::json j;
    j["holds"] = v.holds;
    j["witness"] = v.holds ? nlohmann::json(nullptr) : nlohmann::json(v.witness);
    return j;
}

static nlohmann::json clean_json(const CleanVerdict& v) {
    nlohmann::json j;
    j["holds"] = v.holds;
    j["witness"] = v.holds ? nlohmann::json(nullptr) : nlohmann::json(v.failing);
    return j;
}

nlohmann::json to_json(const ClassificationReport& rep) {
    nlohmann::json j;
    j["nr"] = verdict_json(rep.nr);
    j["ni"] = verdict_json(rep.ni);
    j["abelian"] = verdict_json(rep.abelian);
    j["boolean"] = verdict_json(rep.boolean_ring);
    j["uu"] = rep.uu ? verdict_json(*rep.uu) : nlohmann::json(nullptr);
    switch (rep.exchange.status) {
        case ExchangeVerdict::Status::holds:
            j["exchange"] = {{"holds", true}, {"witness", nullptr}};
            break;
        case ExchangeVerdict::Status::fails:
            j["exchange"] = {{"holds", false}, {"witness", rep.exchange.failing}};
            break;
        case ExchangeVerdict::Status::skipped:
            j["exchange"] = {{"holds", nullptr}, {"witness", nullptr}, {"note", "not computed"}};
            break;
    }
    j["clean"] = rep.clean ? clean_json(*rep.clean) : nlohmann::json(nullptr);
    j["nil_clean"] = rep.nil_clean ? clean_json(*rep.nil_clean) : nlohmann::json(nullptr);
    j["strongly_nil_clean"] = clean_json(rep.strongly_nil_clean);
    j["bounded_index"] = rep.bounded_index;
    nlohmann::json closures;
    for (size_t i = 0; i < kClosureOps.size(); ++i)
        closures[to_string(kClosureOps[i])] = verdict_json(rep.closures[i]);
    j["closure"] = closures;
    return j;
}

}  // namespace ringlab
