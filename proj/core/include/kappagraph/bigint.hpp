#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace kappagraph {

// Exact nonnegative count. Every spanning-tree number in this library is a
// BigCount; there is no floating point anywhere on the counting paths.
using BigCount = mpz_class;

inline BigCount big_pow(const BigCount& base, std::uint64_t exp) {
    BigCount r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

inline BigCount big_pow(std::uint64_t base, std::uint64_t exp) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

}  // namespace kappagraph
