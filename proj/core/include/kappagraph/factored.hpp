#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kappagraph/bigint.hpp"

namespace kappagraph {

struct PrimePower {
    std::uint64_t prime;
    std::uint64_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// An exact nonnegative integer kept as a product of explicit prime powers
// times an unfactored cofactor.  Invariant: primes strictly increasing, every
// listed prime really is prime, exponents >= 1, and
//   value = prod(prime^exponent) * cofactor.
// The zero value is encoded as {factors: [], cofactor: 0}.
class FactoredInteger {
public:
    FactoredInteger() = default;  // one

    static FactoredInteger zero();
    static FactoredInteger one();
    static FactoredInteger from_prime_power(std::uint64_t prime, std::uint64_t exponent);
    // A value carried entirely in the cofactor, nothing factored yet.
    static FactoredInteger unfactored(BigCount value);

    const std::vector<PrimePower>& factors() const { return factors_; }
    const BigCount& cofactor() const { return cofactor_; }

    bool is_zero() const { return cofactor_ == 0; }
    bool is_one() const { return factors_.empty() && cofactor_ == 1; }
    bool fully_factored() const { return cofactor_ == 1 || cofactor_ == 0; }

    // Expands to the plain integer. Can be enormous; callers guard the size.
    BigCount value() const;

    // Rough size of the decimal expansion, without expanding.
    double decimal_digits_estimate() const;

    // "2^84 * 3^28 * 7^40"; an unfactored cofactor is appended as a plain
    // decimal trailing factor.  "0" and "1" for the trivial values.
    std::string to_string() const;

    FactoredInteger& operator*=(const FactoredInteger& rhs);
    friend FactoredInteger operator*(FactoredInteger lhs, const FactoredInteger& rhs) {
        lhs *= rhs;
        return lhs;
    }

    // Raises to the exponent; throws std::overflow_error if a resulting
    // exponent does not fit in 64 bits.
    FactoredInteger pow(std::uint64_t exponent) const;

    // Exact division; both sides must be fully factored and the quotient must
    // have nonnegative exponents, otherwise throws std::invalid_argument.
    FactoredInteger divide_exact(const FactoredInteger& divisor) const;

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

private:
    std::vector<PrimePower> factors_;
    BigCount cofactor_ = 1;
};

// Trial division by every prime below trial_bound (default 10^6).  A leftover
// below trial_bound^2 is necessarily prime and is promoted into the factor
// list; anything larger stays in the cofactor.
FactoredInteger factorize(const BigCount& value, std::uint64_t trial_bound = 1000000);
FactoredInteger factorize_u64(std::uint64_t value, std::uint64_t trial_bound = 1000000);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t v);

// v = p^k with p prime, k >= 1, if such a decomposition exists.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decompose(std::uint64_t v);

}  // namespace kappagraph
