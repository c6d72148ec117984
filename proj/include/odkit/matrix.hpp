#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "odkit/checked.hpp"

namespace odkit {

// Dense row-major matrix over an exact signed integer type (64 or 128 bit).
// Every arithmetic path is overflow-checked; products accumulate in 128 bits.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, T fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Mat(std::size_t rows, std::size_t cols, std::initializer_list<T> vals)
        : rows_(rows), cols_(cols), data_(vals) {
        if (data_.size() != rows * cols) throw domain_error("initializer size mismatch");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(std::size_t r, std::size_t c) {
        if (r >= rows_ || c >= cols_) throw domain_error("matrix index out of range");
        return data_[r * cols_ + c];
    }
    const T& at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw domain_error("matrix index out of range");
        return data_[r * cols_ + c];
    }
    // Unchecked access for inner loops; callers validate shapes up front.
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat all_ones(std::size_t rows, std::size_t cols) { return Mat(rows, cols, T(1)); }

    Mat transpose() const {
        Mat m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    Mat operator+(const Mat& o) const {
        require_same_shape(o, "add");
        Mat m(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = checked_add(data_[i], o.data_[i]);
        return m;
    }

    Mat operator-(const Mat& o) const {
        require_same_shape(o, "sub");
        Mat m(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = checked_sub(data_[i], o.data_[i]);
        return m;
    }

    Mat operator-() const {
        Mat m(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = checked_sub(T(0), data_[i]);
        return m;
    }

    Mat scaled(T s) const {
        Mat m(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = checked_mul(data_[i], s);
        return m;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw domain_error("shape mismatch in mul");
        Mat m(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t k = 0; k < cols_; ++k) {
                T a = (*this)(r, k);
                if (a == 0) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) {
                    T b = o(k, c);
                    if (b == 0) continue;
                    m(r, c) = checked_add(m(r, c), checked_mul(a, b));
                }
            }
        }
        return m;
    }

    // this * other^T without materializing the transpose.
    Mat mul_transpose(const Mat& o) const {
        if (cols_ != o.cols_) throw domain_error("shape mismatch in mul_transpose");
        Mat m(rows_, o.rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < o.rows_; ++c) {
                T acc = 0;
                for (std::size_t k = 0; k < cols_; ++k)
                    acc = checked_add(acc, checked_mul((*this)(r, k), o(c, k)));
                m(r, c) = acc;
            }
        }
        return m;
    }

    Mat gram() const { return mul_transpose(*this); }

    bool is_zero() const {
        for (const T& v : data_)
            if (v != 0) return false;
        return true;
    }

    bool is_scalar_multiple_of_identity(T s) const {
        if (!is_square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if ((*this)(r, c) != (r == c ? s : T(0))) return false;
        return true;
    }

    Mat block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
        if (r0 + nrows > rows_ || c0 + ncols > cols_) throw domain_error("block out of range");
        Mat m(nrows, ncols);
        for (std::size_t r = 0; r < nrows; ++r)
            for (std::size_t c = 0; c < ncols; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
        return m;
    }

    void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
        if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw domain_error("block out of range");
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }

    T row_sum(std::size_t r) const {
        T acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = checked_add(acc, (*this)(r, c));
        return acc;
    }

    T col_sum(std::size_t c) const {
        T acc = 0;
        for (std::size_t r = 0; r < rows_; ++r) acc = checked_add(acc, (*this)(r, c));
        return acc;
    }

    T max_abs() const {
        T m = 0;
        for (const T& v : data_) {
            T a = v < 0 ? checked_sub(T(0), v) : v;
            if (a > m) m = a;
        }
        return m;
    }

private:
    void require_same_shape(const Mat& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw domain_error(std::string("shape mismatch in ") + op);
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Mat<i64>;

template <typename T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            T s = a(ar, ac);
            if (s == 0) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    T v = b(br, bc);
                    if (v != 0) m(ar * b.rows() + br, ac * b.cols() + bc) = checked_mul(s, v);
                }
        }
    return m;
}

template <typename T>
Mat<T> direct_sum(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

// Assemble from a rectangular grid of equally shaped blocks.
template <typename T>
Mat<T> from_blocks(const std::vector<std::vector<Mat<T>>>& grid) {
    if (grid.empty() || grid[0].empty()) throw domain_error("empty block grid");
    std::size_t br = grid[0][0].rows(), bc = grid[0][0].cols();
    std::size_t gr = grid.size(), gc = grid[0].size();
    Mat<T> m(gr * br, gc * bc);
    for (std::size_t i = 0; i < gr; ++i) {
        if (grid[i].size() != gc) throw domain_error("ragged block grid");
        for (std::size_t j = 0; j < gc; ++j) {
            if (grid[i][j].rows() != br || grid[i][j].cols() != bc)
                throw domain_error("uneven blocks in grid");
            m.set_block(i * br, j * bc, grid[i][j]);
        }
    }
    return m;
}

// Cyclic forward shift permutation: entry (i, i+1 mod n) is 1.
IntMatrix circulant_shift(std::size_t n);

// Anti-diagonal permutation: entry (i, n-1-i) is 1.
IntMatrix back_identity(std::size_t n);

// Circulant with given first row.
IntMatrix circulant(const std::vector<i64>& first_row);

// Replace each entry w_ab of the template by w_ab * K_b: the block column
// index picks the inflating matrix. All K_b must share one square shape.
IntMatrix templated_tensor(const IntMatrix& w, const std::vector<IntMatrix>& ks);

bool entries_in(const IntMatrix& m, const std::vector<i64>& allowed);

// Weighing matrix test: entries in {0,1,-1} and M M^T = k I.
bool is_weighing(const IntMatrix& m, i64 k);

// Hadamard test: entries in {1,-1} and H H^T = n I.
bool is_hadamard(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

// Run fn(row) for row in [0, nrows), split across worker threads.
// Thread count comes from ODKIT_THREADS (default: hardware concurrency).
// Deterministic: workers own disjoint row ranges and share nothing.
void parallel_for_rows(std::size_t nrows, const std::function<void(std::size_t)>& fn);

unsigned thread_count();

}  // namespace odkit
