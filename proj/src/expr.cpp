#include "ringlab/expr.hpp"

#include <cctype>
#include <sstream>

namespace ringlab {

bool RingExpr::operator==(const RingExpr& o) const {
    if (kind != o.kind || n != o.n || indices != o.indices || path != o.path ||
        args.size() != o.args.size())
        return false;
    for (size_t i = 0; i < args.size(); ++i)
        if (!(*args[i] == *o.args[i])) return false;
    return true;
}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(uint8_t(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }

    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(uint8_t(text[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        if (pos - start > 9) fail("malformed integer: too long");
        return std::stoi(text.substr(start, pos - start));
    }

    std::vector<Elem> int_list() {
        expect('[');
        std::vector<Elem> out;
        skip_ws();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
            return out;
        }
        out.push_back(integer());
        skip_ws();
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            out.push_back(integer());
            skip_ws();
        }
        expect(']');
        return out;
    }

    std::string name() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isalpha(uint8_t(text[pos]))) ++pos;
        if (start == pos) fail("expected a constructor name");
        return text.substr(start, pos - start);
    }

    RingExpr expr() {
        size_t name_pos = pos;
        std::string id = name();
        RingExpr e;
        if (id == "Z") {
            e.kind = RingExpr::Kind::zmod;
            expect('(');
            e.n = integer();
            expect(')');
        } else if (id == "M" || id == "UT" || id == "SUT") {
            e.kind = id == "M" ? RingExpr::Kind::mat
                   : id == "UT" ? RingExpr::Kind::ut
                                : RingExpr::Kind::sut;
            expect('(');
            e.n = integer();
            expect(',');
            e.args.push_back(std::make_unique<RingExpr>(expr()));
            expect(')');
        } else if (id == "PROD") {
            e.kind = RingExpr::Kind::prod;
            expect('(');
            e.args.push_back(std::make_unique<RingExpr>(expr()));
            expect(',');
            e.args.push_back(std::make_unique<RingExpr>(expr()));
            expect(')');
        } else if (id == "DORROH") {
            e.kind = RingExpr::Kind::dorroh;
            expect('(');
            e.args.push_back(std::make_unique<RingExpr>(expr()));
            expect(')');
        } else if (id == "SUB" || id == "QUOT") {
            e.kind = id == "SUB" ? RingExpr::Kind::sub : RingExpr::Kind::quot;
            expect('(');
            e.args.push_back(std::make_unique<RingExpr>(expr()));
            expect(',');
            e.indices = int_list();
            expect(')');
        } else if (id == "TABLE") {
            e.kind = RingExpr::Kind::table;
            expect('(');
            size_t start = pos;
            while (pos < text.size() && text[pos] != ')') ++pos;
            if (pos >= text.size()) fail("unterminated TABLE path");
            std::string raw = text.substr(start, pos - start);
            ++pos;  // ')'
            size_t a = raw.find_first_not_of(" \t\r\n");
            size_t b = raw.find_last_not_of(" \t\r\n");
            if (a == std::string::npos) {
                pos = start;
                fail("empty TABLE path");
            }
            e.path = raw.substr(a, b - a + 1);
        } else {
            pos = name_pos;
            fail("unknown constructor '" + id + "'");
        }
        return e;
    }
};

long long ipow_capped(long long base, int exp, long long cap) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

RingExpr parse_ring_expr(const std::string& text) {
    Parser p{text};
    RingExpr e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

std::string to_string(const RingExpr& e) {
    std::ostringstream s;
    switch (e.kind) {
        case RingExpr::Kind::zmod:
            s << "Z(" << e.n << ")";
            break;
        case RingExpr::Kind::mat:
            s << "M(" << e.n << "," << to_string(*e.args[0]) << ")";
            break;
        case RingExpr::Kind::ut:
            s << "UT(" << e.n << "," << to_string(*e.args[0]) << ")";
            break;
        case RingExpr::Kind::sut:
            s << "SUT(" << e.n << "," << to_string(*e.args[0]) << ")";
            break;
        case RingExpr::Kind::prod:
            s << "PROD(" << to_string(*e.args[0]) << "," << to_string(*e.args[1]) << ")";
            break;
        case RingExpr::Kind::dorroh:
            s << "DORROH(" << to_string(*e.args[0]) << ")";
            break;
        case RingExpr::Kind::sub:
        case RingExpr::Kind::quot: {
            s << (e.kind == RingExpr::Kind::sub ? "SUB(" : "QUOT(") << to_string(*e.args[0])
              << ",[";
            for (size_t i = 0; i < e.indices.size(); ++i) s << (i ? "," : "") << e.indices[i];
            s << "])";
            break;
        }
        case RingExpr::Kind::table:
            s << "TABLE(" << e.path << ")";
            break;
    }
    return s.str();
}

std::vector<std::pair<int, int>> matrix_positions(MatrixShape shape, int k) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (shape == MatrixShape::upper && j < i) continue;
            if (shape == MatrixShape::strict_upper && j <= i) continue;
            pos.emplace_back(i, j);
        }
    return pos;
}

Elem encode_matrix(MatrixShape shape, int k, int inner_order, const std::vector<Elem>& entries) {
    const auto pos = matrix_positions(shape, k);
    long long index = 0, weight = 1;
    for (const auto& [i, j] : pos) {
        index += (long long)entries[size_t(i) * k + j] * weight;
        weight *= inner_order;
    }
    return Elem(index);
}

std::vector<Elem> decode_matrix(MatrixShape shape, int k, int inner_order, Elem index) {
    const auto pos = matrix_positions(shape, k);
    std::vector<Elem> entries(size_t(k) * k, 0);
    long long rest = index;
    for (const auto& [i, j] : pos) {
        entries[size_t(i) * k + j] = Elem(rest % inner_order);
        rest /= inner_order;
    }
    return entries;
}

namespace {

RingTable build_zmod(int n) {
    if (n < 1) throw BuildError("Z(n): n must be >= 1");
    RingTable r;
    r.order = n;
    r.zero = 0;
    r.one = 1 % n;
    r.label = "Z(" + std::to_string(n) + ")";
    r.add_tab.resize(size_t(n) * n);
    r.mul_tab.resize(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            r.add_tab[size_t(a) * n + b] = uint16_t((a + b) % n);
            r.mul_tab[size_t(a) * n + b] = uint16_t((long long)a * b % n);
        }
    if (n <= 512) {
        r.element_names.resize(n);
        for (int a = 0; a < n; ++a) r.element_names[a] = std::to_string(a);
    }
    finalize(r);
    return r;
}

RingTable build_matrix(MatrixShape shape, int k, const RingTable& inner, const std::string& label,
                       int cap) {
    if (k < 1) throw BuildError("matrix constructor: k must be >= 1");
    const auto pos = matrix_positions(shape, k);
    long long order = ipow_capped(inner.order, int(pos.size()), std::min<long long>(cap, kHardOrderCap));
    if (order > cap || order > kHardOrderCap)
        throw BuildError(label + ": order exceeds cap " + std::to_string(cap));
    if (order < 1) throw BuildError(label + ": empty ring");

    RingTable r;
    r.order = int(order);
    r.zero = 0;
    r.label = label;
    if (shape != MatrixShape::strict_upper && inner.one) {
        std::vector<Elem> id(size_t(k) * k, inner.zero);
        for (int i = 0; i < k; ++i) id[size_t(i) * k + i] = *inner.one;
        r.one = encode_matrix(shape, k, inner.order, id);
    }
    r.add_tab.resize(size_t(order) * order);
    r.mul_tab.resize(size_t(order) * order);

    std::vector<std::vector<Elem>> mats(order);
    for (Elem a = 0; a < order; ++a) mats[a] = decode_matrix(shape, k, inner.order, a);

    std::vector<Elem> tmp(size_t(k) * k);
    for (Elem a = 0; a < order; ++a) {
        const auto& A = mats[a];
        for (Elem b = 0; b < order; ++b) {
            const auto& B = mats[b];
            for (const auto& [i, j] : pos)
                tmp[size_t(i) * k + j] = inner.add(A[size_t(i) * k + j], B[size_t(i) * k + j]);
            r.add_tab[size_t(a) * order + b] = uint16_t(encode_matrix(shape, k, inner.order, tmp));
            for (const auto& [i, j] : pos) {
                Elem acc = inner.zero;
                for (int l = 0; l < k; ++l)
                    acc = inner.add(acc, inner.mul(A[size_t(i) * k + l], B[size_t(l) * k + j]));
                tmp[size_t(i) * k + j] = acc;
            }
            r.mul_tab[size_t(a) * order + b] = uint16_t(encode_matrix(shape, k, inner.order, tmp));
        }
    }
    if (order <= 512) {
        r.element_names.resize(order);
        for (Elem a = 0; a < order; ++a) {
            std::ostringstream s;
            s << "[";
            for (int i = 0; i < k; ++i) {
                s << (i ? ";[" : "[");
                for (int j = 0; j < k; ++j)
                    s << (j ? "," : "") << inner.name_of(mats[a][size_t(i) * k + j]);
                s << "]";
            }
            s << "]";
            r.element_names[a] = s.str();
        }
    }
    finalize(r);
    return r;
}

RingTable build_product(const RingTable& lhs, const RingTable& rhs, const std::string& label,
                        int cap) {
    long long order = (long long)lhs.order * rhs.order;
    if (order > cap || order > kHardOrderCap)
        throw BuildError(label + ": order exceeds cap " + std::to_string(cap));
    RingTable r;
    r.order = int(order);
    r.label = label;
    auto idx = [&](Elem a, Elem b) { return Elem(a * rhs.order + b); };
    r.zero = idx(lhs.zero, rhs.zero);
    if (lhs.one && rhs.one) r.one = idx(*lhs.one, *rhs.one);
    r.add_tab.resize(size_t(order) * order);
    r.mul_tab.resize(size_t(order) * order);
    for (Elem a1 = 0; a1 < lhs.order; ++a1)
        for (Elem a2 = 0; a2 < rhs.order; ++a2) {
            const Elem a = idx(a1, a2);
            for (Elem b1 = 0; b1 < lhs.order; ++b1)
                for (Elem b2 = 0; b2 < rhs.order; ++b2) {
                    const Elem b = idx(b1, b2);
                    r.add_tab[size_t(a) * order + b] = uint16_t(idx(lhs.add(a1, b1), rhs.add(a2, b2)));
                    r.mul_tab[size_t(a) * order + b] = uint16_t(idx(lhs.mul(a1, b1), rhs.mul(a2, b2)));
                }
        }
    if (order <= 512) {
        r.element_names.resize(order);
        for (Elem a1 = 0; a1 < lhs.order; ++a1)
            for (Elem a2 = 0; a2 < rhs.order; ++a2)
                r.element_names[idx(a1, a2)] = "(" + lhs.name_of(a1) + "," + rhs.name_of(a2) + ")";
    }
    finalize(r);
    return r;
}

}  // namespace

RingTable build(const RingExpr& expr, int cap) {
    const std::string label = to_string(expr);
    switch (expr.kind) {
        case RingExpr::Kind::zmod: {
            if (expr.n > cap) throw BuildError(label + ": order exceeds cap");
            return build_zmod(expr.n);
        }
        case RingExpr::Kind::mat:
            return build_matrix(MatrixShape::full, expr.n, build(*expr.args[0], cap), label, cap);
        case RingExpr::Kind::ut:
            return build_matrix(MatrixShape::upper, expr.n, build(*expr.args[0], cap), label, cap);
        case RingExpr::Kind::sut:
            return build_matrix(MatrixShape::strict_upper, expr.n, build(*expr.args[0], cap), label,
                                cap);
        case RingExpr::Kind::prod:
            return build_product(build(*expr.args[0], cap), build(*expr.args[1], cap), label, cap);
        case RingExpr::Kind::dorroh: {
            RingTable inner = build(*expr.args[0], cap);
            RingTable d = dorroh_unitalization(inner, cap);
            d.label = label;
            return d;
        }
        case RingExpr::Kind::sub: {
            RingTable inner = build(*expr.args[0], cap);
            if (expr.indices.empty()) throw BuildError(label + ": SUB requires generators");
            for (Elem g : expr.indices)
                if (g < 0 || g >= inner.order)
                    throw BuildError(label + ": generator index out of range");
            SubsetMask mask = subring_generated(inner, expr.indices);
            return subring_table(inner, mask, label);
        }
        case RingExpr::Kind::quot: {
            RingTable inner = build(*expr.args[0], cap);
            for (Elem g : expr.indices)
                if (g < 0 || g >= inner.order)
                    throw BuildError(label + ": generator index out of range");
            SubsetMask ideal = ideal_generated(inner, expr.indices, IdealKind::two_sided);
            RingTable q = quotient(inner, ideal);
            q.label = label;
            return q;
        }
        case RingExpr::Kind::table: {
            RingTable r = load_file(expr.path);
            if (r.order > cap) throw BuildError(label + ": order exceeds cap");
            return r;
        }
    }
    throw BuildError("unreachable");
}

RingTable build(const std::string& text, int cap) { return build(parse_ring_expr(text), cap); }

}  // namespace ringlab
