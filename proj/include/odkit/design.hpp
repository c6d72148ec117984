#pragma once

#include <string>
#include <vector>

#include "odkit/matrix.hpp"

namespace odkit {

struct VerifyResult {
    bool ok = true;
    std::string message;  // empty when ok, else the first failing condition
};

// Orthogonal design of order n and type (s_1,...,s_u) on variables x_1..x_u.
// Entries are coded integers: 0, or +-(i+1) standing for +-x_i (0-based i).
// One cell holds at most one variable, so supports are disjoint by
// construction; the coefficient-list verifier below also covers inputs
// assembled from separate matrices.
class OrthogonalDesign {
public:
    OrthogonalDesign(std::vector<i64> type, IntMatrix entries);

    std::size_t order() const { return entries_.rows(); }
    std::size_t num_vars() const { return type_.size(); }
    const std::vector<i64>& type() const { return type_; }
    const IntMatrix& entries() const { return entries_; }

    // (0,+1,-1) coefficient matrix of variable i (0-based).
    IntMatrix coefficient(std::size_t i) const;
    std::vector<IntMatrix> coefficients() const;

    static OrthogonalDesign from_coefficients(std::vector<i64> type,
                                              const std::vector<IntMatrix>& coeffs);

    // Entrywise substitution x_i := values[i].
    IntMatrix substitute(const std::vector<i64>& values) const;

    // x_i := 1 for all i. For a full design this is how Hadamard matrices
    // drop out; in general it gives a (0,+-1) matrix of weight sum(type).
    IntMatrix substitute_ones() const;

    OrthogonalDesign transpose() const;

    // Negate variable i throughout (type unchanged).
    OrthogonalDesign negate_var(std::size_t i) const;

    bool operator==(const OrthogonalDesign& o) const {
        return type_ == o.type_ && entries_ == o.entries_;
    }

private:
    std::vector<i64> type_;
    IntMatrix entries_;
};

// Full verification, reporting the first failing condition in a fixed order:
// entry ranges, pairwise disjoint supports, per-variable Gram s_i I, then
// pairwise anticommutation, each scanned in lexicographic index order.
VerifyResult verify_od(const OrthogonalDesign& d);

VerifyResult verify_od_coefficients(std::size_t order, const std::vector<i64>& type,
                                    const std::vector<IntMatrix>& coeffs);

// A B^T == B A^T.
bool amicable(const IntMatrix& a, const IntMatrix& b);

// A B == B A.
bool matrices_commute(const IntMatrix& a, const IntMatrix& b);

// Group variables: each group of indices collapses to one new variable whose
// type entry is the group's sum. Valid on any design since a sum of
// same-variable-group coefficients keeps all three defining conditions.
OrthogonalDesign merge_variables(const OrthogonalDesign& d,
                                 const std::vector<std::vector<std::size_t>>& groups);

// Find a grouping realizing the target type (greedy first, exhaustive
// fallback) and apply it. Throws if no grouping of parts works.
OrthogonalDesign merge_to_type(const OrthogonalDesign& d, const std::vector<i64>& target);

// Collapse everything into one variable: a weighing matrix of weight sum(type).
IntMatrix merge_to_weighing(const OrthogonalDesign& d);

struct PlugInResult {
    IntMatrix matrix;  // order n*m
    i64 weight;        // matrix * matrix^T == weight * I
};

// Substitute matrices for variables: x_i := B_i gives sum A_i (x) B_i.
// Requires pairwise amicable B_i and sum s_i B_i B_i^T = c I; both are
// checked here because they are exactly what makes the output orthogonal.
PlugInResult plug_in(const OrthogonalDesign& d, const std::vector<IntMatrix>& mats);

}  // namespace odkit
