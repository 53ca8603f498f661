#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "kappagraph/bigint.hpp"
#include "kappagraph/factored.hpp"

namespace kappagraph {

class GraphExpr;

// Multiset of integer Laplacian eigenvalues with multiplicities.
class Spectrum {
public:
    using Map = std::map<std::uint64_t, std::uint64_t>;

    Spectrum() = default;
    explicit Spectrum(Map multiplicities);

    const Map& multiplicities() const { return mult_; }
    std::uint64_t total_multiplicity() const { return total_; }
    std::uint64_t multiplicity(std::uint64_t eigenvalue) const;

    // Sum of eigenvalue * multiplicity; equals twice the edge count.
    BigCount weighted_sum() const;

    // "64^8, 16^49, 8^6, 0" -- weakly decreasing, '^1' omitted.
    std::string to_string() const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    Map mult_;
    std::uint64_t total_ = 0;
};

// Exact Laplacian spectrum of an expression via the closed composition
// rules for joins and disjoint unions of integral-spectrum parts.
Spectrum spectrum(const GraphExpr& expr);

// Product of the nonzero eigenvalues divided by the vertex count.  Returns 0
// when the zero eigenvalue has multiplicity > 1 (disconnected realization).
// The division must be exact; a remainder signals an internal inconsistency
// and throws std::logic_error.
BigCount kappa_from_spectrum(const Spectrum& s);

// Same quantity in factored form, without ever expanding the product; every
// eigenvalue must factor completely below trial_bound^2.
FactoredInteger kappa_factored_from_spectrum(const Spectrum& s,
                                             std::uint64_t trial_bound = 1000000);

}  // namespace kappagraph
