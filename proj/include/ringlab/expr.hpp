#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ringlab/ring_table.hpp"

namespace ringlab {

// Constructor expression:
//   expr := Z(n) | M(k,expr) | UT(k,expr) | SUT(k,expr) | PROD(expr,expr)
//         | DORROH(expr) | SUB(expr,[i,...]) | QUOT(expr,[i,...]) | TABLE(path)
struct RingExpr {
    enum class Kind { zmod, mat, ut, sut, prod, dorroh, sub, quot, table };
    Kind kind;
    int n = 0;  // modulus for zmod, dimension for mat/ut/sut
    std::vector<std::unique_ptr<RingExpr>> args;
    std::vector<Elem> indices;  // generators for sub/quot
    std::string path;           // for table

    bool operator==(const RingExpr& o) const;
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(std::string msg, size_t pos) : std::runtime_error(std::move(msg)), position(pos) {}
};

RingExpr parse_ring_expr(const std::string& text);
std::string to_string(const RingExpr& expr);

// Materializes the expression as an operation table. Throws BuildError when
// the resulting order exceeds the cap.
RingTable build(const RingExpr& expr, int cap = kDefaultOrderCap);
RingTable build(const std::string& text, int cap = kDefaultOrderCap);

// Element encoding of the matrix constructors: stored positions are taken in
// row-major order, the first position being the least significant digit.
enum class MatrixShape { full, upper, strict_upper };
std::vector<std::pair<int, int>> matrix_positions(MatrixShape shape, int k);
Elem encode_matrix(MatrixShape shape, int k, int inner_order, const std::vector<Elem>& entries);
std::vector<Elem> decode_matrix(MatrixShape shape, int k, int inner_order, Elem index);

}  // namespace ringlab
