#pragma once

#include <cstdint>
#include <vector>

#include "odkit/matrix.hpp"

namespace odkit {

// Bit-packed (0,+1,-1) matrix: one bitplane for +1 entries, one for -1.
// Row-against-row dot products reduce to popcounts, which keeps Gram and
// cross-product certification of large families cheap and exact.
class PackedPM {
public:
    PackedPM() : rows_(0), cols_(0), words_(0) {}

    static PackedPM from_dense(const IntMatrix& m);
    IntMatrix to_dense() const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    i64 entry(std::size_t r, std::size_t c) const;

    // <row r of this, row s of other>, i.e. entry (r, s) of this * other^T.
    i64 row_dot(std::size_t r, const PackedPM& other, std::size_t s) const;

    std::size_t row_support(std::size_t r) const;

    bool operator==(const PackedPM& o) const;

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> plus_, minus_;
};

// this * other^T as a dense matrix (small outputs only).
IntMatrix packed_mul_transpose(const PackedPM& a, const PackedPM& b);

// a * a^T == k I, streamed row by row across threads.
bool packed_gram_is_scaled_identity(const PackedPM& a, i64 k);

// Every entry of a * b^T lies in {0, +s, -s}, streamed across threads.
bool packed_product_entries_in_zero_pm(const PackedPM& a, const PackedPM& b, i64 s);

// Every entry of a * b^T equals t, streamed across threads.
bool packed_product_is_constant(const PackedPM& a, const PackedPM& b, i64 t);

}  // namespace odkit
