#pragma once

#include <cstddef>
#include <vector>

#include "odkit/matrix.hpp"

namespace odkit {

// Square matrix with exactly one +-1 per row and column, stored as the
// nonzero column and sign of each row. Products and tensor products of
// these stay cheap, which matters when regular representations of rings
// get tensored together many times.
class MonomialMatrix {
public:
    explicit MonomialMatrix(std::size_t n) : col_(n), sign_(n, 1) {
        for (std::size_t i = 0; i < n; ++i) col_[i] = i;
    }

    MonomialMatrix(std::vector<std::size_t> col, std::vector<int> sign)
        : col_(std::move(col)), sign_(std::move(sign)) {
        if (col_.size() != sign_.size()) throw domain_error("monomial: size mismatch");
        std::vector<bool> seen(col_.size(), false);
        for (std::size_t i = 0; i < col_.size(); ++i) {
            if (col_[i] >= col_.size() || seen[col_[i]]) throw domain_error("monomial: not a permutation");
            if (sign_[i] != 1 && sign_[i] != -1) throw domain_error("monomial: sign must be +-1");
            seen[col_[i]] = true;
        }
    }

    // Cyclic shift by `by`: row i maps to column (i + by) mod n.
    static MonomialMatrix shift(std::size_t n, std::size_t by) {
        MonomialMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.col_[i] = (i + by) % n;
        return m;
    }

    std::size_t size() const { return col_.size(); }
    std::size_t col(std::size_t r) const { return col_[r]; }
    int sign(std::size_t r) const { return sign_[r]; }

    MonomialMatrix operator*(const MonomialMatrix& o) const {
        if (size() != o.size()) throw domain_error("monomial: size mismatch in mul");
        MonomialMatrix m(size());
        for (std::size_t i = 0; i < size(); ++i) {
            m.col_[i] = o.col_[col_[i]];
            m.sign_[i] = sign_[i] * o.sign_[col_[i]];
        }
        return m;
    }

    MonomialMatrix transpose() const {
        MonomialMatrix m(size());
        for (std::size_t i = 0; i < size(); ++i) {
            m.col_[col_[i]] = i;
            m.sign_[col_[i]] = sign_[i];
        }
        return m;
    }

    bool operator==(const MonomialMatrix& o) const { return col_ == o.col_ && sign_ == o.sign_; }
    bool operator!=(const MonomialMatrix& o) const { return !(*this == o); }

    IntMatrix to_dense() const {
        IntMatrix m(size(), size());
        for (std::size_t i = 0; i < size(); ++i) m(i, col_[i]) = sign_[i];
        return m;
    }

private:
    std::vector<std::size_t> col_;
    std::vector<int> sign_;
};

inline MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b) {
    std::size_t n = a.size(), m = b.size();
    std::vector<std::size_t> col(n * m);
    std::vector<int> sign(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            col[i * m + j] = a.col(i) * m + b.col(j);
            sign[i * m + j] = a.sign(i) * b.sign(j);
        }
    return MonomialMatrix(std::move(col), std::move(sign));
}

}  // namespace odkit
