#include "kappagraph/tree_count.hpp"

#include <cstdint>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

#include "kappagraph/factored.hpp"
#include "kappagraph/graph.hpp"

namespace kappagraph {

namespace {

// Reduced Laplacian (row/column of vertex 0 deleted) as signed 64-bit
// entries; degrees are bounded by the vertex count.
std::vector<std::int64_t> reduced_laplacian(const Graph& g) {
    const std::uint32_t m = g.vertex_count() - 1;
    std::vector<std::int64_t> lap(static_cast<std::size_t>(m) * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        lap[static_cast<std::size_t>(i) * m + i] = g.degree(i + 1);
        for (std::uint32_t j = 0; j < m; ++j)
            if (j != i && g.adjacent(i + 1, j + 1)) lap[static_cast<std::size_t>(i) * m + j] = -1;
    }
    return lap;
}

// ---------------------------------------------------------------------------
// Bareiss fraction-free elimination.  Every intermediate entry is a minor of
// the original matrix, so all divisions are exact.
BigCount det_bareiss(const std::vector<std::int64_t>& lap, std::uint32_t m) {
    std::vector<mpz_class> a(lap.begin(), lap.end());
    auto at = [&](std::uint32_t i, std::uint32_t j) -> mpz_class& {
        return a[static_cast<std::size_t>(i) * m + j];
    };

    mpz_class prev(1), t1, t2;
    for (std::uint32_t k = 0; k + 1 < m; ++k) {
        // first nonzero pivot in column order, no reordering heuristics
        std::uint32_t pivot = k;
        while (pivot < m && at(pivot, k) == 0) ++pivot;
        if (pivot == m) return 0;
        if (pivot != k)
            for (std::uint32_t j = k; j < m; ++j) std::swap(at(k, j), at(pivot, j));

        for (std::uint32_t i = k + 1; i < m; ++i) {
            for (std::uint32_t j = k + 1; j < m; ++j) {
                // a[i][j] = (a[i][j]*a[k][k] - a[i][k]*a[k][j]) / prev
                mpz_mul(t1.get_mpz_t(), at(i, j).get_mpz_t(), at(k, k).get_mpz_t());
                mpz_mul(t2.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    mpz_class det = at(m - 1, m - 1);
    // row swaps may flip the sign; kappa is the magnitude
    return abs(det);
}

// ---------------------------------------------------------------------------
// Multimodular determinant: residues modulo 62-bit primes in Montgomery
// form, recombined by the Chinese remainder theorem once the prime product
// exceeds the Hadamard bound.

struct Montgomery {
    std::uint64_t mod, inv, r2;  // inv = -mod^-1 mod 2^64, r2 = (2^64)^2 mod mod

    explicit Montgomery(std::uint64_t m) : mod(m) {
        std::uint64_t x = m;
        for (int i = 0; i < 5; ++i) x *= 2 - m * x;  // Newton: x = m^-1 mod 2^64
        inv = ~x + 1;
        mpz_class r = 1;
        mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 128);
        mpz_mod_ui(r.get_mpz_t(), r.get_mpz_t(), m);
        r2 = mpz_get_ui(r.get_mpz_t());
    }

    std::uint64_t reduce(unsigned __int128 t) const {
        std::uint64_t q = static_cast<std::uint64_t>(t) * inv;
        std::uint64_t hi = static_cast<std::uint64_t>((t + static_cast<unsigned __int128>(q) * mod) >> 64);
        return hi >= mod ? hi - mod : hi;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return reduce(static_cast<unsigned __int128>(a) * b);
    }
    std::uint64_t to_mont(std::uint64_t a) const { return mul(a, r2); }
    std::uint64_t from_mont(std::uint64_t a) const { return reduce(a); }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + mod - b;
    }
    std::uint64_t pow(std::uint64_t base, std::uint64_t e) const {
        std::uint64_t r = to_mont(1);
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

std::uint64_t det_mod_prime(const std::vector<std::int64_t>& lap, std::uint32_t m,
                            std::uint64_t p) {
    Montgomery mont(p);
    std::vector<std::uint64_t> a(static_cast<std::size_t>(m) * m);
    for (std::size_t k = 0; k < a.size(); ++k) {
        std::int64_t v = lap[k];
        std::uint64_t r = v >= 0 ? static_cast<std::uint64_t>(v) % p
                                 : p - static_cast<std::uint64_t>(-v) % p;
        a[k] = mont.to_mont(r == p ? 0 : r);
    }
    auto at = [&](std::uint32_t i, std::uint32_t j) -> std::uint64_t& {
        return a[static_cast<std::size_t>(i) * m + j];
    };

    std::uint64_t det = mont.to_mont(1);
    bool negate = false;
    for (std::uint32_t k = 0; k < m; ++k) {
        std::uint32_t pivot = k;
        while (pivot < m && at(pivot, k) == 0) ++pivot;
        if (pivot == m) return 0;
        if (pivot != k) {
            negate = !negate;
            for (std::uint32_t j = k; j < m; ++j) std::swap(at(k, j), at(pivot, j));
        }
        det = mont.mul(det, at(k, k));
        // normalize the pivot row, then eliminate below
        std::uint64_t inv = mont.pow(at(k, k), p - 2);
        for (std::uint32_t j = k; j < m; ++j) at(k, j) = mont.mul(at(k, j), inv);
        for (std::uint32_t i = k + 1; i < m; ++i) {
            std::uint64_t f = at(i, k);
            if (f == 0) continue;
            for (std::uint32_t j = k; j < m; ++j)
                at(i, j) = mont.sub(at(i, j), mont.mul(f, at(k, j)));
        }
    }
    std::uint64_t d = mont.from_mont(det);
    if (negate && d != 0) d = p - d;
    return d;
}

BigCount det_multimodular(const std::vector<std::int64_t>& lap, std::uint32_t m) {
    // Hadamard bound on |det|
    BigCount bound_sq = 1;
    BigCount row_sq;
    for (std::uint32_t i = 0; i < m; ++i) {
        row_sq = 0;
        for (std::uint32_t j = 0; j < m; ++j) {
            std::int64_t v = lap[static_cast<std::size_t>(i) * m + j];
            row_sq += BigCount(static_cast<long>(v)) * static_cast<long>(v);
        }
        if (row_sq == 0) return 0;
        bound_sq *= row_sq;
    }
    BigCount bound;
    mpz_sqrt(bound.get_mpz_t(), bound_sq.get_mpz_t());
    bound += 1;
    BigCount target = 2 * bound + 1;

    std::vector<std::uint64_t> primes;
    BigCount product = 1;
    std::uint64_t candidate = (1ull << 62) - 1;
    while (product < target) {
        while (!is_prime_u64(candidate)) candidate -= 2;
        primes.push_back(candidate);
        product *= static_cast<unsigned long>(candidate);
        candidate -= 2;
    }

    // residues are independent; evaluate in parallel, combine in fixed order
    std::vector<std::uint64_t> residues(primes.size());
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(primes.size()));
    if (workers <= 1 || primes.size() == 1) {
        for (std::size_t i = 0; i < primes.size(); ++i)
            residues[i] = det_mod_prime(lap, m, primes[i]);
    } else {
        std::vector<std::future<void>> jobs;
        std::size_t chunk = (primes.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t lo = w * chunk, hi = std::min(primes.size(), lo + chunk);
            if (lo >= hi) break;
            jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i)
                    residues[i] = det_mod_prime(lap, m, primes[i]);
            }));
        }
        for (auto& j : jobs) j.get();
    }

    // incremental CRT
    BigCount x = 0, modulus = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        std::uint64_t xm = mpz_fdiv_ui(x.get_mpz_t(), p);
        std::uint64_t mm = mpz_fdiv_ui(modulus.get_mpz_t(), p);
        Montgomery mont(p);
        std::uint64_t diff = residues[i] >= xm ? residues[i] - xm : residues[i] + p - xm;
        std::uint64_t inv = mont.from_mont(mont.pow(mont.to_mont(mm), p - 2));
        std::uint64_t t = mont.from_mont(mont.mul(mont.to_mont(diff), mont.to_mont(inv)));
        x += modulus * static_cast<unsigned long>(t);
        modulus *= static_cast<unsigned long>(p);
    }
    // symmetric lift, then discard the sign
    if (x * 2 > modulus) x -= modulus;
    return abs(x);
}

}  // namespace

BigCount tree_number(const Graph& g, DetMethod method) {
    if (g.vertex_count() == 1) return 1;
    if (!g.connected()) return 0;

    const std::uint32_t m = g.vertex_count() - 1;
    const auto lap = reduced_laplacian(g);
    switch (method) {
        case DetMethod::Bareiss:
            return det_bareiss(lap, m);
        case DetMethod::Multimodular:
            return det_multimodular(lap, m);
        case DetMethod::Auto:
            return m <= 100 ? det_bareiss(lap, m) : det_multimodular(lap, m);
    }
    throw std::logic_error("unreachable");
}

}  // namespace kappagraph
