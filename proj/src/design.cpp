#include "odkit/design.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace odkit {

namespace {

std::string cell(std::size_t r, std::size_t c) {
    std::ostringstream os;
    os << "(" << r << "," << c << ")";
    return os.str();
}

}  // namespace

OrthogonalDesign::OrthogonalDesign(std::vector<i64> type, IntMatrix entries)
    : type_(std::move(type)), entries_(std::move(entries)) {
    if (!entries_.is_square() || entries_.rows() == 0)
        throw domain_error("design matrix must be square and nonempty");
    if (type_.empty()) throw domain_error("design needs at least one variable");
    for (i64 s : type_)
        if (s <= 0) throw domain_error("type entries must be positive");
    i64 u = static_cast<i64>(type_.size());
    for (const i64& v : entries_.data())
        if (v > u || v < -u) throw domain_error("design entry references unknown variable");
}

IntMatrix OrthogonalDesign::coefficient(std::size_t i) const {
    if (i >= type_.size()) throw domain_error("variable index out of range");
    i64 code = static_cast<i64>(i) + 1;
    IntMatrix m(order(), order());
    for (std::size_t r = 0; r < order(); ++r)
        for (std::size_t c = 0; c < order(); ++c) {
            i64 v = entries_(r, c);
            if (v == code) m(r, c) = 1;
            else if (v == -code) m(r, c) = -1;
        }
    return m;
}

std::vector<IntMatrix> OrthogonalDesign::coefficients() const {
    std::vector<IntMatrix> out;
    out.reserve(type_.size());
    for (std::size_t i = 0; i < type_.size(); ++i) out.push_back(coefficient(i));
    return out;
}

OrthogonalDesign OrthogonalDesign::from_coefficients(std::vector<i64> type,
                                                     const std::vector<IntMatrix>& coeffs) {
    if (coeffs.empty() || coeffs.size() != type.size())
        throw domain_error("need one coefficient matrix per variable");
    std::size_t n = coeffs[0].rows();
    IntMatrix entries(n, n);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const IntMatrix& a = coeffs[i];
        if (a.rows() != n || a.cols() != n) throw domain_error("coefficient shape mismatch");
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                i64 v = a(r, c);
                if (v == 0) continue;
                if (v != 1 && v != -1) throw domain_error("coefficient entries must be 0,+-1");
                if (entries(r, c) != 0) throw domain_error("coefficient supports overlap");
                entries(r, c) = v * (static_cast<i64>(i) + 1);
            }
    }
    return OrthogonalDesign(std::move(type), std::move(entries));
}

IntMatrix OrthogonalDesign::substitute(const std::vector<i64>& values) const {
    if (values.size() != type_.size()) throw domain_error("need one value per variable");
    IntMatrix m(order(), order());
    for (std::size_t r = 0; r < order(); ++r)
        for (std::size_t c = 0; c < order(); ++c) {
            i64 v = entries_(r, c);
            if (v > 0) m(r, c) = values[static_cast<std::size_t>(v) - 1];
            else if (v < 0) m(r, c) = checked_neg(values[static_cast<std::size_t>(-v) - 1]);
        }
    return m;
}

IntMatrix OrthogonalDesign::substitute_ones() const {
    return substitute(std::vector<i64>(type_.size(), 1));
}

OrthogonalDesign OrthogonalDesign::transpose() const {
    return OrthogonalDesign(type_, entries_.transpose());
}

OrthogonalDesign OrthogonalDesign::negate_var(std::size_t i) const {
    if (i >= type_.size()) throw domain_error("variable index out of range");
    i64 code = static_cast<i64>(i) + 1;
    IntMatrix e = entries_;
    for (i64& v : e.data())
        if (v == code || v == -code) v = -v;
    return OrthogonalDesign(type_, std::move(e));
}

VerifyResult verify_od_coefficients(std::size_t order, const std::vector<i64>& type,
                                    const std::vector<IntMatrix>& coeffs) {
    VerifyResult res;
    if (type.empty() || coeffs.size() != type.size()) {
        return {false, "need one coefficient matrix per type entry"};
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].rows() != order || coeffs[i].cols() != order)
            return {false, "coefficient " + std::to_string(i + 1) + " has wrong shape"};
        if (!entries_in(coeffs[i], {0, 1, -1}))
            return {false, "coefficient " + std::to_string(i + 1) + " has entries outside 0,+-1"};
    }
    // Disjoint supports, scanned pairwise in lexicographic order.
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = i + 1; j < coeffs.size(); ++j)
            for (std::size_t r = 0; r < order; ++r)
                for (std::size_t c = 0; c < order; ++c)
                    if (coeffs[i](r, c) != 0 && coeffs[j](r, c) != 0)
                        return {false, "supports of x" + std::to_string(i + 1) + " and x" +
                                           std::to_string(j + 1) + " overlap at " + cell(r, c)};
    // Per-variable Gram.
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        IntMatrix g = coeffs[i].gram();
        for (std::size_t r = 0; r < order; ++r)
            for (std::size_t c = 0; c < order; ++c) {
                i64 want = r == c ? type[i] : 0;
                if (g(r, c) != want)
                    return {false, "gram of x" + std::to_string(i + 1) + " is not " +
                                       std::to_string(type[i]) + "*I at " + cell(r, c)};
            }
    }
    // Pairwise anticommutation.
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = i + 1; j < coeffs.size(); ++j) {
            IntMatrix s = coeffs[i].mul_transpose(coeffs[j]) + coeffs[j].mul_transpose(coeffs[i]);
            for (std::size_t r = 0; r < order; ++r)
                for (std::size_t c = 0; c < order; ++c)
                    if (s(r, c) != 0)
                        return {false, "x" + std::to_string(i + 1) + " and x" +
                                           std::to_string(j + 1) +
                                           " fail anticommutation at " + cell(r, c)};
        }
    return res;
}

VerifyResult verify_od(const OrthogonalDesign& d) {
    return verify_od_coefficients(d.order(), d.type(), d.coefficients());
}

bool amicable(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return a.mul_transpose(b) == b.mul_transpose(a);
}

bool matrices_commute(const IntMatrix& a, const IntMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) return false;
    return a * b == b * a;
}

OrthogonalDesign merge_variables(const OrthogonalDesign& d,
                                 const std::vector<std::vector<std::size_t>>& groups) {
    if (groups.empty()) throw domain_error("merge needs at least one group");
    std::vector<bool> used(d.num_vars(), false);
    for (const auto& g : groups) {
        if (g.empty()) throw domain_error("merge group is empty");
        for (std::size_t i : g) {
            if (i >= d.num_vars() || used[i]) throw domain_error("merge groups must partition variables");
            used[i] = true;
        }
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw domain_error("merge groups must cover all variables");

    std::vector<i64> new_code(d.num_vars());
    std::vector<i64> new_type(groups.size(), 0);
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (std::size_t i : groups[g]) {
            new_code[i] = static_cast<i64>(g) + 1;
            new_type[g] = checked_add(new_type[g], d.type()[i]);
        }

    IntMatrix e = d.entries();
    for (i64& v : e.data()) {
        if (v > 0) v = new_code[static_cast<std::size_t>(v) - 1];
        else if (v < 0) v = -new_code[static_cast<std::size_t>(-v) - 1];
    }
    return OrthogonalDesign(std::move(new_type), std::move(e));
}

namespace {

// Match parts to target sums: greedy largest-first, then exhaustive search.
bool assign_parts(const std::vector<i64>& type, const std::vector<i64>& target,
                  std::vector<std::vector<std::size_t>>& groups) {
    std::vector<std::size_t> order(type.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return type[a] > type[b]; });

    std::vector<i64> remaining = target;
    groups.assign(target.size(), {});
    std::vector<std::size_t> chosen(type.size(), SIZE_MAX);

    std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
        if (k == order.size()) {
            for (i64 r : remaining)
                if (r != 0) return false;
            return true;
        }
        std::size_t idx = order[k];
        for (std::size_t g = 0; g < target.size(); ++g) {
            if (remaining[g] < type[idx]) continue;
            // Skip sibling groups with identical residue to cut symmetry.
            bool dup = false;
            for (std::size_t h = 0; h < g; ++h)
                if (remaining[h] == remaining[g] && target[h] == target[g]) { dup = true; break; }
            if (dup) continue;
            remaining[g] -= type[idx];
            chosen[idx] = g;
            if (place(k + 1)) return true;
            remaining[g] += type[idx];
            chosen[idx] = SIZE_MAX;
        }
        return false;
    };

    if (!place(0)) return false;
    for (std::size_t i = 0; i < type.size(); ++i) groups[chosen[i]].push_back(i);
    return true;
}

}  // namespace

OrthogonalDesign merge_to_type(const OrthogonalDesign& d, const std::vector<i64>& target) {
    i64 have = 0, want = 0;
    for (i64 s : d.type()) have = checked_add(have, s);
    for (i64 s : target) want = checked_add(want, s);
    if (have != want) throw domain_error("merge target has different total weight");
    std::vector<std::vector<std::size_t>> groups;
    if (!assign_parts(d.type(), target, groups))
        throw domain_error("type cannot be grouped into the target");
    return merge_variables(d, groups);
}

IntMatrix merge_to_weighing(const OrthogonalDesign& d) {
    return d.substitute_ones();
}

PlugInResult plug_in(const OrthogonalDesign& d, const std::vector<IntMatrix>& mats) {
    if (mats.size() != d.num_vars()) throw domain_error("plug_in: one matrix per variable");
    std::size_t m = mats[0].rows();
    for (const auto& b : mats)
        if (b.rows() != m || b.cols() != m) throw domain_error("plug_in: blocks must share a square shape");

    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            if (!amicable(mats[i], mats[j]))
                throw domain_error("plug_in: blocks " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) + " are not amicable");

    IntMatrix weighted(m, m);
    for (std::size_t i = 0; i < mats.size(); ++i)
        weighted = weighted + mats[i].gram().scaled(d.type()[i]);
    i64 c = weighted(0, 0);
    if (!weighted.is_scalar_multiple_of_identity(c))
        throw domain_error("plug_in: weighted gram sum is not a multiple of I");

    IntMatrix out(d.order() * m, d.order() * m);
    for (std::size_t i = 0; i < d.num_vars(); ++i)
        out = out + kron(d.coefficient(i), mats[i]);
    return {std::move(out), c};
}

}  // namespace odkit
