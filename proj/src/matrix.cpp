#include "odkit/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

namespace odkit {

std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Build digits from the magnitude; the minimum value still negates safely
    // digit by digit because we divide before negating.
    std::string s;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        v /= 10;
        if (d < 0) d = -d;
        s.push_back(static_cast<char>('0' + d));
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

IntMatrix circulant_shift(std::size_t n) {
    if (n == 0) throw domain_error("circulant_shift: empty");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, (i + 1) % n) = 1;
    return m;
}

IntMatrix back_identity(std::size_t n) {
    if (n == 0) throw domain_error("back_identity: empty");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
    return m;
}

IntMatrix circulant(const std::vector<i64>& first_row) {
    std::size_t n = first_row.size();
    if (n == 0) throw domain_error("circulant: empty");
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = first_row[(c + n - r) % n];
    return m;
}

IntMatrix templated_tensor(const IntMatrix& w, const std::vector<IntMatrix>& ks) {
    if (ks.size() != w.cols()) throw domain_error("templated_tensor: need one block per column");
    if (ks.empty()) throw domain_error("templated_tensor: empty");
    std::size_t b = ks[0].rows();
    for (const auto& k : ks)
        if (k.rows() != b || k.cols() != b) throw domain_error("templated_tensor: uneven blocks");
    IntMatrix m(w.rows() * b, w.cols() * b);
    for (std::size_t r = 0; r < w.rows(); ++r)
        for (std::size_t c = 0; c < w.cols(); ++c) {
            i64 s = w(r, c);
            if (s == 0) continue;
            m.set_block(r * b, c * b, ks[c].scaled(s));
        }
    return m;
}

bool entries_in(const IntMatrix& m, const std::vector<i64>& allowed) {
    for (const i64& v : m.data())
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
    return true;
}

bool is_weighing(const IntMatrix& m, i64 k) {
    if (!m.is_square()) return false;
    if (!entries_in(m, {0, 1, -1})) return false;
    return m.gram().is_scalar_multiple_of_identity(k);
}

bool is_hadamard(const IntMatrix& m) {
    if (!m.is_square() || m.rows() == 0) return false;
    if (!entries_in(m, {1, -1})) return false;
    return m.gram().is_scalar_multiple_of_identity(static_cast<i64>(m.rows()));
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m(r, c);
        }
        os << '\n';
    }
    return os.str();
}

unsigned thread_count() {
    if (const char* env = std::getenv("ODKIT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_for_rows(std::size_t nrows, const std::function<void(std::size_t)>& fn) {
    unsigned workers = thread_count();
    if (workers <= 1 || nrows < 2) {
        for (std::size_t r = 0; r < nrows; ++r) fn(r);
        return;
    }
    if (workers > nrows) workers = static_cast<unsigned>(nrows);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex err_mu;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::size_t lo = nrows * w / workers, hi = nrows * (w + 1) / workers;
            try {
                for (std::size_t r = lo; r < hi; ++r) fn(r);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace odkit
