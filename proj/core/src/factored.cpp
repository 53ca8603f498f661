#include "kappagraph/factored.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace kappagraph {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("FactoredInteger: exponent overflow");
    return static_cast<std::uint64_t>(p);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw std::overflow_error("FactoredInteger: exponent overflow");
    return a + b;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

FactoredInteger FactoredInteger::zero() {
    FactoredInteger f;
    f.cofactor_ = 0;
    return f;
}

FactoredInteger FactoredInteger::one() { return FactoredInteger{}; }

FactoredInteger FactoredInteger::unfactored(BigCount value) {
    if (value < 0) throw std::invalid_argument("unfactored: value must be nonnegative");
    FactoredInteger f;
    f.cofactor_ = std::move(value);
    return f;
}

FactoredInteger FactoredInteger::from_prime_power(std::uint64_t prime, std::uint64_t exponent) {
    if (!is_prime_u64(prime)) throw std::invalid_argument("from_prime_power: base is not prime");
    FactoredInteger f;
    if (exponent > 0) f.factors_.push_back({prime, exponent});
    return f;
}

BigCount FactoredInteger::value() const {
    if (is_zero()) return 0;
    BigCount v = cofactor_;
    for (const auto& pp : factors_) v *= big_pow(pp.prime, pp.exponent);
    return v;
}

double FactoredInteger::decimal_digits_estimate() const {
    if (is_zero()) return 1.0;
    double d = mpz_sizeinbase(cofactor_.get_mpz_t(), 10);
    for (const auto& pp : factors_)
        d += static_cast<double>(pp.exponent) * std::log10(static_cast<double>(pp.prime));
    return d;
}

std::string FactoredInteger::to_string() const {
    if (is_zero()) return "0";
    if (is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& pp : factors_) {
        if (!first) out << " * ";
        first = false;
        out << pp.prime;
        if (pp.exponent > 1) out << '^' << pp.exponent;
    }
    if (cofactor_ != 1) {
        if (!first) out << " * ";
        out << cofactor_.get_str();
    }
    return out.str();
}

FactoredInteger& FactoredInteger::operator*=(const FactoredInteger& rhs) {
    if (is_zero() || rhs.is_zero()) {
        *this = zero();
        return *this;
    }
    std::vector<PrimePower> merged;
    merged.reserve(factors_.size() + rhs.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = rhs.factors_.begin(), be = rhs.factors_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->prime < b->prime)) {
            merged.push_back(*a++);
        } else if (a == ae || b->prime < a->prime) {
            merged.push_back(*b++);
        } else {
            merged.push_back({a->prime, checked_add(a->exponent, b->exponent)});
            ++a;
            ++b;
        }
    }
    factors_ = std::move(merged);
    cofactor_ *= rhs.cofactor_;
    return *this;
}

FactoredInteger FactoredInteger::pow(std::uint64_t exponent) const {
    if (exponent == 0) return one();
    if (is_zero()) return zero();
    FactoredInteger r;
    r.factors_.reserve(factors_.size());
    for (const auto& pp : factors_)
        r.factors_.push_back({pp.prime, checked_mul(pp.exponent, exponent)});
    mpz_pow_ui(r.cofactor_.get_mpz_t(), cofactor_.get_mpz_t(),
               static_cast<unsigned long>(exponent));
    return r;
}

FactoredInteger FactoredInteger::divide_exact(const FactoredInteger& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
    if (is_zero()) return zero();
    if (!fully_factored() || !divisor.fully_factored())
        throw std::invalid_argument("divide_exact: operands must be fully factored");
    FactoredInteger r;
    auto a = factors_.begin(), ae = factors_.end();
    auto b = divisor.factors_.begin(), be = divisor.factors_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->prime < b->prime)) {
            r.factors_.push_back(*a++);
        } else if (a == ae || b->prime < a->prime) {
            throw std::invalid_argument("divide_exact: quotient is not an integer");
        } else {
            if (a->exponent < b->exponent)
                throw std::invalid_argument("divide_exact: quotient is not an integer");
            if (a->exponent > b->exponent)
                r.factors_.push_back({a->prime, a->exponent - b->exponent});
            ++a;
            ++b;
        }
    }
    return r;
}

bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (v % p == 0) return v == p;
    }
    std::uint64_t d = v - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses decide primality for every v < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decompose(std::uint64_t v) {
    if (v < 2) return std::nullopt;
    std::uint64_t p = v;
    // Smallest prime factor by trial division; v fits in 64 bits so the scan
    // stops at v^(1/2) of the reduced value.
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            p = d;
            break;
        }
    }
    unsigned k = 0;
    std::uint64_t rest = v;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, k);
}

FactoredInteger factorize(const BigCount& value, std::uint64_t trial_bound) {
    if (value < 0) throw std::invalid_argument("factorize: value must be nonnegative");
    if (trial_bound < 2) throw std::invalid_argument("factorize: trial_bound must be >= 2");
    if (value == 0) return FactoredInteger::zero();

    FactoredInteger out;
    BigCount rest = value;
    std::vector<PrimePower> factors;

    auto divide_out = [&](std::uint64_t p) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) return;
        std::uint64_t e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        factors.push_back({p, e});
    };

    divide_out(2);
    for (std::uint64_t d = 3; d < trial_bound && rest > 1; d += 2) {
        // Composites d fail the divisibility test because their prime factors
        // were already divided out.
        if (mpz_fits_ulong_p(rest.get_mpz_t())) {
            std::uint64_t r64 = mpz_get_ui(rest.get_mpz_t());
            if (static_cast<unsigned __int128>(d) * d > r64) break;
        }
        divide_out(d);
    }

    BigCount bound_sq = BigCount(static_cast<unsigned long>(trial_bound)) *
                        static_cast<unsigned long>(trial_bound);
    if (rest > 1 && rest < bound_sq && mpz_fits_ulong_p(rest.get_mpz_t())) {
        // The leftover has no factor below trial_bound, hence it is prime.
        factors.push_back({static_cast<std::uint64_t>(mpz_get_ui(rest.get_mpz_t())), 1});
        rest = 1;
    }

    out = FactoredInteger::one();
    for (const auto& pp : factors) out *= FactoredInteger::from_prime_power(pp.prime, pp.exponent);
    if (rest != 1) out *= FactoredInteger::unfactored(rest);
    return out;
}

FactoredInteger factorize_u64(std::uint64_t value, std::uint64_t trial_bound) {
    return factorize(BigCount(static_cast<unsigned long>(value)), trial_bound);
}

}  // namespace kappagraph
