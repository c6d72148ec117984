#include "odkit/rings.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace odkit {

namespace {

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// n = p^k with p prime, or {0,0} if not a prime power.
std::pair<i64, unsigned> prime_power_split(i64 n) {
    if (n < 2) return {0, 0};
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned k = 0;
        i64 m = n;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        return m == 1 ? std::make_pair(p, k) : std::make_pair(i64(0), 0u);
    }
    return {n, 1};  // prime
}

i64 mod_norm(i64 v, i64 m) {
    v %= m;
    return v < 0 ? v + m : v;
}

// Little-endian polynomial remainder by a monic divisor, coefficients mod m.
std::vector<i64> poly_rem(std::vector<i64> a, const std::vector<i64>& b, i64 m) {
    std::size_t db = b.size() - 1;
    while (a.size() > db) {
        i64 lead = mod_norm(a.back(), m);
        std::size_t shift = a.size() - 1 - db;
        if (lead != 0)
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = mod_norm(a[shift + i] - lead * b[i], m);
        a.pop_back();
    }
    while (!a.empty() && mod_norm(a.back(), m) == 0) a.pop_back();
    for (i64& c : a) c = mod_norm(c, m);
    return a;
}

bool poly_is_irreducible(const std::vector<i64>& f, i64 p) {
    std::size_t e = f.size() - 1;
    if (e == 1) return true;
    // Trial division by every monic polynomial of degree 1..e/2.
    for (std::size_t d = 1; 2 * d <= e; ++d) {
        i64 count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (i64 idx = 0; idx < count; ++idx) {
            std::vector<i64> g(d + 1, 0);
            i64 t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Lexicographically least monic irreducible of degree e over Z_p, ordering
// candidates by their low-coefficient vector read as a base-p number.
std::vector<i64> least_irreducible(i64 p, unsigned e) {
    i64 count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (i64 idx = 0; idx < count; ++idx) {
        std::vector<i64> f(e + 1, 0);
        i64 t = idx;
        for (unsigned i = 0; i < e; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[e] = 1;
        if (poly_is_irreducible(f, p)) return f;
    }
    throw domain_error("no irreducible polynomial found");
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    for (i64 d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            if (out.empty() || out.back() != d) out.push_back(d);
            n /= d;
        }
    if (n > 1 && (out.empty() || out.back() != n)) out.push_back(n);
    return out;
}

}  // namespace

Ring Ring::integers_mod(i64 m, std::size_t size_cap) {
    if (m < 2) throw domain_error("modulus must be at least 2");
    if (static_cast<std::size_t>(m) > size_cap) throw domain_error("ring exceeds size cap");
    Ring r;
    r.kind_ = Kind::Zm;
    r.p_ = m;
    r.base_ = m;
    r.deg_ = 1;
    r.size_ = static_cast<std::size_t>(m);
    r.one_ = 1;
    r.poly_ = {0, 1};
    r.add_cycles_ = {m};
    return r;
}

Ring Ring::galois_field(i64 p, unsigned e, std::size_t size_cap) {
    if (!is_prime(p)) throw domain_error("field characteristic must be prime");
    if (e == 0) throw domain_error("extension degree must be positive");
    i64 size = 1;
    for (unsigned i = 0; i < e; ++i) {
        size = checked_mul(size, p);
        if (static_cast<std::size_t>(size) > size_cap) throw domain_error("ring exceeds size cap");
    }
    Ring r;
    r.kind_ = Kind::GF;
    r.p_ = p;
    r.s_ = 1;
    r.deg_ = e;
    r.base_ = p;
    r.size_ = static_cast<std::size_t>(size);
    r.one_ = 1;
    r.poly_ = least_irreducible(p, e);
    r.add_cycles_.assign(e, p);
    return r;
}

Ring Ring::galois_ring(i64 p, unsigned s, unsigned m, std::size_t size_cap) {
    if (!is_prime(p)) throw domain_error("characteristic base must be prime");
    if (s == 0 || m == 0) throw domain_error("galois ring parameters must be positive");
    if (s == 1) return galois_field(p, m, size_cap);
    i64 ps = 1;
    for (unsigned i = 0; i < s; ++i) ps = checked_mul(ps, p);
    i64 size = 1;
    for (unsigned i = 0; i < m; ++i) {
        size = checked_mul(size, ps);
        if (static_cast<std::size_t>(size) > size_cap) throw domain_error("ring exceeds size cap");
    }

    Ring r;
    r.kind_ = Kind::GR;
    r.p_ = p;
    r.s_ = s;
    r.deg_ = m;
    r.base_ = ps;
    r.size_ = static_cast<std::size_t>(size);
    r.one_ = 1;
    r.add_cycles_.assign(m, ps);

    if (m == 1) {
        r.poly_ = {0, 1};
        return r;
    }

    // Lift the degree-m irreducible from Z_p: adjust non-leading
    // coefficients by multiples of p until the class of x has
    // multiplicative order p^m - 1, which pins the right lift.
    std::vector<i64> f0 = least_irreducible(p, m);
    i64 group = 1;
    for (unsigned i = 0; i < m; ++i) group *= p;
    group -= 1;  // p^m - 1
    std::vector<i64> gfactors = prime_factors(group);

    i64 lift_choices = 1;
    for (unsigned i = 0; i < m; ++i) lift_choices = checked_mul(lift_choices, ps / p);
    for (i64 lift = 0; lift < lift_choices; ++lift) {
        std::vector<i64> f = f0;
        i64 t = lift;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = mod_norm(f[i] + p * (t % (ps / p)), ps);
            t /= ps / p;
        }
        r.poly_ = f;
        std::size_t x = r.from_digits({0, 1});
        if (r.pow(x, group) != r.one_) continue;
        bool primitive_order = true;
        for (i64 q : gfactors)
            if (r.pow(x, group / q) == r.one_) {
                primitive_order = false;
                break;
            }
        if (primitive_order) return r;
    }
    throw domain_error("no suitable polynomial lift found");
}

Ring Ring::parse(const std::string& text, std::size_t size_cap) {
    if (text.size() >= 2 && (text[0] == 'Z' || text[0] == 'z')) {
        return integers_mod(std::stoll(text.substr(1)), size_cap);
    }
    auto args_of = [&](std::size_t at) {
        std::size_t close = text.find(')', at);
        if (close == std::string::npos) throw domain_error("unbalanced ring name: " + text);
        std::vector<i64> vals;
        std::string body = text.substr(at + 1, close - at - 1);
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) vals.push_back(std::stoll(tok));
        return vals;
    };
    if (text.rfind("GF(", 0) == 0) {
        auto v = args_of(2);
        if (v.size() != 1) throw domain_error("GF takes one argument");
        auto [p, e] = prime_power_split(v[0]);
        if (p == 0) throw domain_error("GF size must be a prime power");
        return galois_field(p, e, size_cap);
    }
    if (text.rfind("GR(", 0) == 0) {
        auto v = args_of(2);
        if (v.size() != 2) throw domain_error("GR takes two arguments");
        auto [p, s] = prime_power_split(v[0]);
        if (p == 0) throw domain_error("GR coefficient size must be a prime power");
        return galois_ring(p, s, static_cast<unsigned>(v[1]), size_cap);
    }
    throw domain_error("unrecognized ring name: " + text);
}

std::vector<i64> Ring::digits(std::size_t a) const {
    std::vector<i64> d(deg_);
    for (unsigned i = 0; i < deg_; ++i) {
        d[i] = static_cast<i64>(a % static_cast<std::size_t>(base_));
        a /= static_cast<std::size_t>(base_);
    }
    return d;
}

std::size_t Ring::from_digits(const std::vector<i64>& d) const {
    std::size_t a = 0;
    for (unsigned i = deg_; i-- > 0;) {
        i64 digit = i < d.size() ? mod_norm(d[i], base_) : 0;
        a = a * static_cast<std::size_t>(base_) + static_cast<std::size_t>(digit);
    }
    return a;
}

std::size_t Ring::add(std::size_t a, std::size_t b) const {
    std::vector<i64> da = digits(a), db = digits(b);
    for (unsigned i = 0; i < deg_; ++i) da[i] = mod_norm(da[i] + db[i], base_);
    return from_digits(da);
}

std::size_t Ring::neg(std::size_t a) const {
    std::vector<i64> d = digits(a);
    for (i64& c : d) c = mod_norm(-c, base_);
    return from_digits(d);
}

std::size_t Ring::mul(std::size_t a, std::size_t b) const {
    std::vector<i64> da = digits(a), db = digits(b);
    std::vector<i64> prod(2 * deg_ - 1, 0);
    for (unsigned i = 0; i < deg_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < deg_; ++j)
            prod[i + j] = mod_norm(prod[i + j] + da[i] * db[j], base_);
    }
    std::vector<i64> rem = deg_ == 1 ? prod : poly_rem(std::move(prod), poly_, base_);
    return from_digits(rem);
}

std::size_t Ring::pow(std::size_t a, i64 e) const {
    if (e < 0) throw domain_error("negative powers unsupported");
    std::size_t acc = one_;
    while (e > 0) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

bool Ring::is_unit(std::size_t a) const {
    if (a >= size_) throw domain_error("element out of range");
    switch (kind_) {
        case Kind::Zm:
            return std::gcd(static_cast<i64>(a), p_) == 1;
        case Kind::GF:
            return a != 0;
        case Kind::GR: {
            if (unit_cache_.empty()) {
                unit_cache_.assign(size_, 0);
                for (std::size_t x = 0; x < size_; ++x)
                    for (std::size_t y = 0; y < size_; ++y)
                        if (mul(x, y) == one_) {
                            unit_cache_[x] = 1;
                            break;
                        }
            }
            return unit_cache_[a] != 0;
        }
    }
    return false;
}

std::string Ring::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Zm: os << "Z" << p_; break;
        case Kind::GF: os << "GF(" << size_ << ")"; break;
        case Kind::GR: os << "GR(" << base_ << "," << deg_ << ")"; break;
    }
    return os.str();
}

std::string Ring::element_name(std::size_t a) const {
    if (deg_ == 1) return std::to_string(a);
    std::vector<i64> d = digits(a);
    std::ostringstream os;
    os << "(";
    for (unsigned i = 0; i < deg_; ++i) {
        if (i) os << ",";
        os << d[i];
    }
    os << ")";
    return os.str();
}

std::vector<i64> Ring::coords(std::size_t a) const {
    if (a >= size_) throw domain_error("element out of range");
    return digits(a);
}

MonomialMatrix Ring::phi(std::size_t a) const {
    std::vector<i64> c = coords(a);
    MonomialMatrix m = MonomialMatrix::shift(static_cast<std::size_t>(add_cycles_[0]),
                                             static_cast<std::size_t>(c[0]));
    for (std::size_t i = 1; i < add_cycles_.size(); ++i)
        m = kron(m, MonomialMatrix::shift(static_cast<std::size_t>(add_cycles_[i]),
                                          static_cast<std::size_t>(c[i])));
    return m;
}

void for_each_unit_difference_set(
    const Ring& r, std::size_t m, bool anchor_zero,
    const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (m == 0) return;
    std::vector<std::size_t> chosen;
    bool stop = false;
    std::function<void(std::size_t)> extend = [&](std::size_t next) {
        if (stop) return;
        if (chosen.size() == m) {
            stop = visit(chosen);
            return;
        }
        for (std::size_t x = next; x < r.size() && !stop; ++x) {
            bool ok = true;
            for (std::size_t y : chosen)
                if (!r.is_unit(r.sub(x, y))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(x);
            extend(x + 1);
            chosen.pop_back();
        }
    };
    if (anchor_zero) {
        chosen.push_back(0);
        extend(1);
    } else {
        extend(0);
    }
}

std::vector<std::size_t> unit_difference_set(const Ring& r, std::size_t m) {
    std::vector<std::size_t> found;
    // Any valid set shifts to one through 0 and shifting cannot raise the
    // lex order of the sorted tuple, so anchoring at 0 is complete here.
    for_each_unit_difference_set(r, m, /*anchor_zero=*/m > 0, [&](const auto& s) {
        found = s;
        return true;
    });
    return found;
}

std::vector<std::size_t> max_unit_difference_set(const Ring& r) {
    for (std::size_t m = r.size(); m >= 1; --m) {
        std::vector<std::size_t> s = unit_difference_set(r, m);
        if (!s.empty()) return s;
    }
    return {};
}

KGrid build_k_grid(const Ring& r, const std::vector<std::size_t>& alphas,
                   const std::vector<std::size_t>& xs) {
    if (alphas.empty() || xs.empty()) throw domain_error("grid needs members and columns");
    for (std::size_t l = 0; l < xs.size(); ++l)
        for (std::size_t l2 = l + 1; l2 < xs.size(); ++l2)
            if (xs[l] == xs[l2]) throw domain_error("grid columns must be distinct elements");

    KGrid g;
    g.k.resize(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        g.k[i].reserve(xs.size());
        for (std::size_t l = 0; l < xs.size(); ++l) g.k[i].push_back(r.phi(r.mul(alphas[i], xs[l])));
    }

    // Certificate: for i != j the images (alpha_i - alpha_j) x_l must be
    // pairwise distinct; two equal images would stack two permutation
    // matrices on the same cells and the downstream cross products would
    // stop being (0,1) patterns.
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j) {
            std::size_t u = r.sub(alphas[i], alphas[j]);
            std::vector<std::size_t> imgs;
            for (std::size_t x : xs) imgs.push_back(r.mul(u, x));
            std::sort(imgs.begin(), imgs.end());
            if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end())
                throw domain_error("grid certificate failed: repeated difference image");
        }
    return g;
}

}  // namespace odkit
