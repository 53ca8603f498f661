#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kappagraph {

// Euler's totient: the number of generators of a cyclic group of order n.
std::uint64_t euler_phi(std::uint64_t n);

// Parsed constructor expression for a finite group.
//
// Grammar (whitespace around '*' is ignored):
//   spec    := atom ('*' atom)*          -- '*' is the direct product
//   atom    := 'Z:'n | 'D:'m | 'Q:'m | 'EA:'q | 'S:'n | 'A:'n
//            | 'PSL2:'p | 'file:'path
// with D:m requiring m even >= 4, Q:m a power of two >= 8, EA:q a prime
// power, PSL2:p a prime >= 5.  Paths containing '*' are not supported.
struct GroupSpec {
    enum class Family {
        Cyclic,             // Z:n
        Dihedral,           // D:m, |G| = m
        Quaternion,         // Q:m, |G| = m = 2^k
        ElementaryAbelian,  // EA:q, q = p^k
        Symmetric,          // S:n
        Alternating,        // A:n
        ProjectiveSL2,      // PSL2:p
        CayleyFile,         // file:path
        Product,            // factors[0] x factors[1] x ...
    };

    Family family = Family::Cyclic;
    std::uint64_t param = 0;
    std::string path;
    std::vector<GroupSpec> factors;

    std::string to_string() const;
};

GroupSpec parse_group_spec(const std::string& text);

struct ElementInfo {
    std::uint32_t index = 0;
    std::uint32_t order = 0;
    std::vector<std::uint32_t> cyclic_subgroup;  // sorted, contains the identity
};

// A finite group on indices 0..n-1 with index 0 the identity.  Immutable
// after construction; every query is pure and safe to call concurrently.
//
// The multiplication is always held as a full Cayley table; groups built
// from permutation generators additionally retain the permutations.
class Group {
public:
    static constexpr std::uint32_t kMaxOrder = 4096;

    std::uint32_t order() const { return n_; }
    const std::string& label() const { return label_; }

    std::uint32_t mult(std::uint32_t i, std::uint32_t j) const {
        return table_[static_cast<std::size_t>(i) * n_ + j];
    }
    std::uint32_t inverse(std::uint32_t i) const { return inverse_[i]; }

    std::uint32_t element_order(std::uint32_t i) const;
    ElementInfo element_info(std::uint32_t i) const;

    // j in <i>, i.e. j is a power of i.
    bool is_power_of(std::uint32_t j, std::uint32_t i) const;

    // Adjacency in the power graph; requires i != j.
    bool is_power_related(std::uint32_t i, std::uint32_t j) const;

    // Adjacency in the commuting graph; requires i != j.
    bool commutes(std::uint32_t i, std::uint32_t j) const;

    bool is_abelian() const;

    bool permutation_backed() const { return degree_ > 0; }
    std::uint32_t permutation_degree() const { return degree_; }
    const std::vector<std::uint16_t>& permutation(std::uint32_t i) const;

    friend Group make_group_from_table(std::vector<std::uint16_t> table, std::uint32_t n,
                                       std::string label,
                                       std::vector<std::vector<std::uint16_t>> perms);

private:
    Group() = default;
    void check_index(std::uint32_t i) const;
    void build_caches();

    std::uint32_t n_ = 0;
    std::string label_;
    std::vector<std::uint16_t> table_;                 // row-major n x n
    std::vector<std::vector<std::uint16_t>> perms_;    // optional backing
    std::uint32_t degree_ = 0;

    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> orders_;
    std::vector<std::uint64_t> power_bits_;  // n rows; bit j of row i <=> j in <i>
    std::uint32_t words_ = 0;
};

// Builds the group described by the spec.  Throws std::invalid_argument on
// constraint violations, std::runtime_error on unreadable or non-group
// Cayley files.
Group build_group(const GroupSpec& spec);
Group build_group(const std::string& spec_text);

// Cayley-table file: line 1 holds n, then n lines of n 0-based indices.
// Index 0 must be the identity; the table must satisfy the group axioms.
Group read_cayley_file(const std::string& path);

// Validates the table (identity, Latin property, inverses, associativity --
// exhaustively for n <= 512, on 10^4 fixed-seed random triples above) and
// wraps it as a Group.
Group make_group_from_table(std::vector<std::uint16_t> table, std::uint32_t n, std::string label,
                            std::vector<std::vector<std::uint16_t>> perms = {});

// True when `elements` (by index, must contain 0) is closed under the
// multiplication of g.
bool is_subgroup(const Group& g, const std::vector<std::uint32_t>& elements);

// The subgroup as a standalone group with induced multiplication, elements
// reindexed in ascending original order (identity stays first).
Group subgroup_as_group(const Group& g, const std::vector<std::uint32_t>& elements);

// order -> number of elements of that order.
std::map<std::uint32_t, std::uint32_t> order_census(const Group& g);

}  // namespace kappagraph
