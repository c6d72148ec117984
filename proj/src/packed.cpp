#include "odkit/packed.hpp"

#include <atomic>
#include <bit>

namespace odkit {

PackedPM PackedPM::from_dense(const IntMatrix& m) {
    PackedPM p;
    p.rows_ = m.rows();
    p.cols_ = m.cols();
    p.words_ = (m.cols() + 63) / 64;
    p.plus_.assign(p.rows_ * p.words_, 0);
    p.minus_.assign(p.rows_ * p.words_, 0);
    for (std::size_t r = 0; r < p.rows_; ++r)
        for (std::size_t c = 0; c < p.cols_; ++c) {
            i64 v = m(r, c);
            if (v == 0) continue;
            if (v != 1 && v != -1) throw domain_error("PackedPM needs entries in {0,1,-1}");
            auto& plane = v == 1 ? p.plus_ : p.minus_;
            plane[r * p.words_ + c / 64] |= std::uint64_t(1) << (c % 64);
        }
    return p;
}

IntMatrix PackedPM::to_dense() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = entry(r, c);
    return m;
}

i64 PackedPM::entry(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw domain_error("PackedPM index out of range");
    std::uint64_t bit = std::uint64_t(1) << (c % 64);
    if (plus_[r * words_ + c / 64] & bit) return 1;
    if (minus_[r * words_ + c / 64] & bit) return -1;
    return 0;
}

i64 PackedPM::row_dot(std::size_t r, const PackedPM& other, std::size_t s) const {
    if (cols_ != other.cols_) throw domain_error("PackedPM width mismatch");
    const std::uint64_t* ap = plus_.data() + r * words_;
    const std::uint64_t* am = minus_.data() + r * words_;
    const std::uint64_t* bp = other.plus_.data() + s * other.words_;
    const std::uint64_t* bm = other.minus_.data() + s * other.words_;
    i64 agree = 0, differ = 0;
    for (std::size_t w = 0; w < words_; ++w) {
        agree += std::popcount(ap[w] & bp[w]) + std::popcount(am[w] & bm[w]);
        differ += std::popcount(ap[w] & bm[w]) + std::popcount(am[w] & bp[w]);
    }
    return agree - differ;
}

std::size_t PackedPM::row_support(std::size_t r) const {
    std::size_t n = 0;
    for (std::size_t w = 0; w < words_; ++w)
        n += std::popcount(plus_[r * words_ + w]) + std::popcount(minus_[r * words_ + w]);
    return n;
}

bool PackedPM::operator==(const PackedPM& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && plus_ == o.plus_ && minus_ == o.minus_;
}

IntMatrix packed_mul_transpose(const PackedPM& a, const PackedPM& b) {
    IntMatrix m(a.rows(), b.rows());
    parallel_for_rows(a.rows(), [&](std::size_t r) {
        for (std::size_t c = 0; c < b.rows(); ++c) m(r, c) = a.row_dot(r, b, c);
    });
    return m;
}

bool packed_gram_is_scaled_identity(const PackedPM& a, i64 k) {
    if (a.rows() == 0 || a.rows() != a.cols()) return false;
    std::atomic<bool> ok{true};
    parallel_for_rows(a.rows(), [&](std::size_t r) {
        if (!ok.load(std::memory_order_relaxed)) return;
        for (std::size_t c = 0; c < a.rows(); ++c) {
            i64 want = r == c ? k : 0;
            if (a.row_dot(r, a, c) != want) {
                ok.store(false, std::memory_order_relaxed);
                return;
            }
        }
    });
    return ok.load();
}

bool packed_product_entries_in_zero_pm(const PackedPM& a, const PackedPM& b, i64 s) {
    if (a.cols() != b.cols()) return false;
    std::atomic<bool> ok{true};
    parallel_for_rows(a.rows(), [&](std::size_t r) {
        if (!ok.load(std::memory_order_relaxed)) return;
        for (std::size_t c = 0; c < b.rows(); ++c) {
            i64 v = a.row_dot(r, b, c);
            if (v != 0 && v != s && v != -s) {
                ok.store(false, std::memory_order_relaxed);
                return;
            }
        }
    });
    return ok.load();
}

bool packed_product_is_constant(const PackedPM& a, const PackedPM& b, i64 t) {
    if (a.cols() != b.cols()) return false;
    std::atomic<bool> ok{true};
    parallel_for_rows(a.rows(), [&](std::size_t r) {
        if (!ok.load(std::memory_order_relaxed)) return;
        for (std::size_t c = 0; c < b.rows(); ++c) {
            if (a.row_dot(r, b, c) != t) {
                ok.store(false, std::memory_order_relaxed);
                return;
            }
        }
    });
    return ok.load();
}

}  // namespace odkit
