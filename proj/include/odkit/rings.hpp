#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "odkit/monomial.hpp"

namespace odkit {

// Finite commutative ring with identity, one of:
//   Z_m            integers mod m
//   GF(p^e)        field on the lexicographically least monic irreducible
//   GR(p^s, m)     Galois ring Z_{p^s}[x]/(f), f a lift of the GF(p) choice
//                  whose root has multiplicative order p^m - 1
// Elements are dense indices 0..size-1 encoding coefficient digit vectors
// (base p for fields, base p^s for Galois rings, plain residues for Z_m).
class Ring {
public:
    enum class Kind { Zm, GF, GR };

    static Ring integers_mod(i64 m, std::size_t size_cap = default_size_cap);
    static Ring galois_field(i64 p, unsigned e, std::size_t size_cap = default_size_cap);
    static Ring galois_ring(i64 p, unsigned s, unsigned m, std::size_t size_cap = default_size_cap);

    // Accepts "Z8", "GF(9)", "GR(4,2)" style names.
    static Ring parse(const std::string& text, std::size_t size_cap = default_size_cap);

    static constexpr std::size_t default_size_cap = 4096;

    Kind kind() const { return kind_; }
    std::size_t size() const { return size_; }
    std::size_t zero() const { return 0; }
    std::size_t one() const { return one_; }

    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t neg(std::size_t a) const;
    std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
    std::size_t mul(std::size_t a, std::size_t b) const;
    bool is_unit(std::size_t a) const;
    std::size_t pow(std::size_t a, i64 e) const;

    std::string describe() const;
    std::string element_name(std::size_t a) const;

    // Cyclic factors (n_1,...,n_r) of the additive group, matching coords().
    const std::vector<i64>& additive_decomposition() const { return add_cycles_; }
    std::vector<i64> coords(std::size_t a) const;

    // Regular representation of the additive group: a permutation matrix
    // per element, multiplicative over addition, built as a tensor product
    // of cyclic shifts (first coordinate outermost).
    MonomialMatrix phi(std::size_t a) const;

    const std::vector<i64>& modulus_polynomial() const { return poly_; }

private:
    Ring() = default;

    Kind kind_ = Kind::Zm;
    i64 p_ = 0;          // prime for GF/GR, modulus for Zm
    unsigned s_ = 1;     // coefficient ring Z_{p^s}
    unsigned deg_ = 1;   // extension degree
    i64 base_ = 0;       // digit base: p^s (or m for Zm)
    std::size_t size_ = 0, one_ = 0;
    std::vector<i64> poly_;        // monic modulus, degree deg_, length deg_+1
    std::vector<i64> add_cycles_;  // additive cyclic factors
    mutable std::vector<signed char> unit_cache_;  // GR only, lazily filled

    std::vector<i64> digits(std::size_t a) const;
    std::size_t from_digits(const std::vector<i64>& d) const;
};

// Lexicographically least m elements containing 0 whose pairwise
// differences are all units; empty if none exist. Exhaustive search.
std::vector<std::size_t> unit_difference_set(const Ring& r, std::size_t m);

// Largest such set (ties broken lexicographically).
std::vector<std::size_t> max_unit_difference_set(const Ring& r);

// Visit ascending index tuples of size m with pairwise unit differences in
// lexicographic order. anchor_zero restricts to tuples starting at 0, which
// is a normalization only valid when the caller's use is translation
// invariant. Return true from the visitor to stop early.
void for_each_unit_difference_set(
    const Ring& r, std::size_t m, bool anchor_zero,
    const std::function<bool(const std::vector<std::size_t>&)>& visit);

// Grid K[i][l] = phi(alpha_i * x_l). The construction work done by these
// grids rests on one certificate, checked here at build time: for i != j
// the products (alpha_i - alpha_j) * x_l must be pairwise distinct, which
// is exactly when sum_l K[i][l] K[j][l]^T is a (0,1) matrix.
struct KGrid {
    std::vector<std::vector<MonomialMatrix>> k;
    std::size_t members() const { return k.size(); }
    std::size_t cols() const { return k.empty() ? 0 : k[0].size(); }
    std::size_t block() const { return k.empty() || k[0].empty() ? 0 : k[0][0].size(); }
};

KGrid build_k_grid(const Ring& r, const std::vector<std::size_t>& alphas,
                   const std::vector<std::size_t>& xs);

}  // namespace odkit
