#include "kappagraph/spectrum.hpp"

#include <sstream>
#include <stdexcept>

#include "kappagraph/graph_expr.hpp"

namespace kappagraph {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > ~b) throw std::overflow_error("spectrum multiplicity overflow");
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > ~0ull) throw std::overflow_error("spectrum multiplicity overflow");
    return static_cast<std::uint64_t>(p);
}

}  // namespace

Spectrum::Spectrum(Map multiplicities) : mult_(std::move(multiplicities)) {
    for (const auto& [value, count] : mult_) {
        if (count == 0) throw std::invalid_argument("spectrum multiplicities must be positive");
        (void)value;
        total_ = checked_add(total_, count);
    }
}

std::uint64_t Spectrum::multiplicity(std::uint64_t eigenvalue) const {
    auto it = mult_.find(eigenvalue);
    return it == mult_.end() ? 0 : it->second;
}

BigCount Spectrum::weighted_sum() const {
    BigCount sum = 0;
    for (const auto& [value, count] : mult_)
        sum += BigCount(static_cast<unsigned long>(value)) * static_cast<unsigned long>(count);
    return sum;
}

std::string Spectrum::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) {
        if (!first) out << ", ";
        first = false;
        out << it->first;
        if (it->second > 1) out << '^' << it->second;
    }
    return out.str();
}

namespace {

using Map = Spectrum::Map;

Map spectrum_map(const GraphExpr& e) {
    switch (e.kind()) {
        case GraphExpr::Kind::Complete: {
            Map m;
            const std::uint64_t n = e.leaf_size();
            if (n > 1) m[n] = n - 1;
            m[0] = 1;
            return m;
        }
        case GraphExpr::Kind::Coclique:
            return Map{{0, e.leaf_size()}};
        case GraphExpr::Kind::Union: {
            Map a = spectrum_map(e.left());
            for (const auto& [value, count] : spectrum_map(e.right()))
                a[value] = checked_add(a[value], count);
            return a;
        }
        case GraphExpr::Kind::Repeat: {
            Map a = spectrum_map(e.left());
            for (auto& [value, count] : a) count = checked_mul(count, e.repeat_count());
            return a;
        }
        case GraphExpr::Kind::Join: {
            const std::uint64_t m = e.left().vertex_count();
            const std::uint64_t n = e.right().vertex_count();
            Map a = spectrum_map(e.left());
            Map b = spectrum_map(e.right());
            // each side keeps all but one of its zeros, then shifts by the
            // other side's vertex count
            for (Map* side : {&a, &b}) {
                auto it = side->find(0);
                if (it == side->end()) throw std::logic_error("Laplacian spectrum lacks a zero");
                if (--it->second == 0) side->erase(it);
            }
            Map out;
            for (const auto& [value, count] : a) out[value + n] = checked_add(out[value + n], count);
            for (const auto& [value, count] : b) out[value + m] = checked_add(out[value + m], count);
            out[m + n] = checked_add(out[m + n], 1);
            out[0] = checked_add(out[0], 1);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Spectrum spectrum(const GraphExpr& expr) {
    Spectrum s(spectrum_map(expr));
    if (s.total_multiplicity() != expr.vertex_count())
        throw std::logic_error("spectrum size does not match vertex count");
    return s;
}

BigCount kappa_from_spectrum(const Spectrum& s) {
    if (s.total_multiplicity() < 1) throw std::invalid_argument("empty spectrum");
    const std::uint64_t zeros = s.multiplicity(0);
    if (zeros == 0) throw std::logic_error("Laplacian spectrum lacks a zero");
    if (zeros > 1) return 0;

    BigCount product = 1;
    for (const auto& [value, count] : s.multiplicities()) {
        if (value == 0) continue;
        product *= big_pow(value, count);
    }
    BigCount n(static_cast<unsigned long>(s.total_multiplicity()));
    if (!mpz_divisible_p(product.get_mpz_t(), n.get_mpz_t()))
        throw std::logic_error("eigenvalue product is not divisible by the vertex count");
    BigCount result;
    mpz_divexact(result.get_mpz_t(), product.get_mpz_t(), n.get_mpz_t());
    return result;
}

FactoredInteger kappa_factored_from_spectrum(const Spectrum& s, std::uint64_t trial_bound) {
    if (s.total_multiplicity() < 1) throw std::invalid_argument("empty spectrum");
    const std::uint64_t zeros = s.multiplicity(0);
    if (zeros == 0) throw std::logic_error("Laplacian spectrum lacks a zero");
    if (zeros > 1) return FactoredInteger::zero();

    FactoredInteger product = FactoredInteger::one();
    for (const auto& [value, count] : s.multiplicities()) {
        if (value == 0) continue;
        FactoredInteger f = factorize_u64(value, trial_bound);
        if (!f.fully_factored())
            throw std::invalid_argument("eigenvalue " + std::to_string(value) +
                                        " does not factor below the trial bound");
        product *= f.pow(count);
    }
    FactoredInteger n = factorize_u64(s.total_multiplicity(), trial_bound);
    if (!n.fully_factored())
        throw std::invalid_argument("vertex count does not factor below the trial bound");
    return product.divide_exact(n);
}

}  // namespace kappagraph
