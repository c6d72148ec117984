#include "odkit/latin.hpp"

namespace odkit {

namespace {

// Both constructions divide by arbitrary nonzero elements, so they need
// every nonzero element invertible.
bool ring_is_field(const Ring& r) {
    for (std::size_t a = 1; a < r.size(); ++a)
        if (!r.is_unit(a)) return false;
    return true;
}

}  // namespace

bool is_latin(const IntMatrix& sq) {
    if (!sq.is_square() || sq.rows() == 0) return false;
    std::size_t n = sq.rows();
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<bool> row_seen(n, false), col_seen(n, false);
        for (std::size_t c = 0; c < n; ++c) {
            i64 v = sq(r, c), w = sq(c, r);
            if (v < 0 || v >= static_cast<i64>(n) || w < 0 || w >= static_cast<i64>(n)) return false;
            if (row_seen[static_cast<std::size_t>(v)] || col_seen[static_cast<std::size_t>(w)])
                return false;
            row_seen[static_cast<std::size_t>(v)] = true;
            col_seen[static_cast<std::size_t>(w)] = true;
        }
    }
    return true;
}

bool are_orthogonal_latin(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || !a.is_square() || !b.is_square()) return false;
    std::size_t n = a.rows();
    std::vector<bool> seen(n * n, false);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t pair = static_cast<std::size_t>(a(r, c)) * n + static_cast<std::size_t>(b(r, c));
            if (seen[pair]) return false;
            seen[pair] = true;
        }
    return true;
}

bool are_suitable_latin(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || !a.is_square() || !b.is_square()) return false;
    std::size_t n = a.rows();
    for (std::size_t ra = 0; ra < n; ++ra)
        for (std::size_t rb = 0; rb < n; ++rb) {
            int matches = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (a(ra, c) == b(rb, c)) ++matches;
            if (matches != 1) return false;
        }
    return true;
}

std::vector<IntMatrix> mols_field(const Ring& field) {
    if (!ring_is_field(field)) throw domain_error("orthogonal square construction needs a field");
    std::size_t q = field.size();
    std::vector<IntMatrix> out;
    for (std::size_t k = 1; k < q; ++k) {
        IntMatrix sq(q, q);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                sq(i, j) = static_cast<i64>(field.add(field.mul(k, i), j));
        out.push_back(std::move(sq));
    }
    for (const auto& sq : out)
        if (!is_latin(sq)) throw domain_error("square construction failed latin check");
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!are_orthogonal_latin(out[i], out[j]))
                throw domain_error("square construction failed orthogonality check");
    return out;
}

std::vector<IntMatrix> msls_field(const Ring& field) {
    if (!ring_is_field(field)) throw domain_error("suitable square construction needs a field");
    std::size_t q = field.size();
    // Inverses by scan; the sizes here stay tiny.
    std::vector<std::size_t> inv(q, 0);
    for (std::size_t k = 1; k < q; ++k)
        for (std::size_t x = 1; x < q; ++x)
            if (field.mul(k, x) == field.one()) {
                inv[k] = x;
                break;
            }
    std::vector<IntMatrix> out;
    for (std::size_t k = 1; k < q; ++k) {
        IntMatrix sq(q, q);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                sq(i, j) = static_cast<i64>(field.mul(inv[k], field.sub(j, i)));
        out.push_back(std::move(sq));
    }
    for (const auto& sq : out)
        if (!is_latin(sq)) throw domain_error("square construction failed latin check");
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!are_suitable_latin(out[i], out[j]))
                throw domain_error("square construction failed suitability check");
    return out;
}

}  // namespace odkit
