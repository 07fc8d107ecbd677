#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raglab/rng.hpp"

namespace raglab {

/**
 * Finite group description. Three kinds:
 *  - Hypercube(d): {+1,-1}^d under coordinate-wise product. Elements are
 *    packed 64-bit words, bit 1 encoding coordinate -1, so the product is
 *    XOR and the Hamming class is a popcount.
 *  - CyclicProduct(m_1..m_r): Z_{m_1} x ... x Z_{m_r}, one residue per word.
 *  - Table(op, inv): explicit multiplication table (op must be a Latin
 *    square, inv an involution consistent with it, identity at index 0).
 *
 * The identity is the all-(+1) vector / zero residue vector / index 0.
 */
struct GroupSpec {
    enum class Kind { Hypercube, CyclicProduct, Table };

    Kind kind = Kind::Hypercube;
    int d = 0;                               // Hypercube dimension
    std::vector<std::uint64_t> moduli;       // CyclicProduct moduli, each >= 2
    std::vector<std::vector<std::uint32_t>> op;  // Table: op[g][h]
    std::vector<std::uint32_t> inv_table;        // Table: inverse per index
    std::uint64_t order = 0;

    static GroupSpec hypercube(int d);
    static GroupSpec cyclic_product(std::vector<std::uint64_t> moduli);
    static GroupSpec table(std::vector<std::vector<std::uint32_t>> op,
                           std::vector<std::uint32_t> inv);

    int words_per_element() const;
    bool enumerable(std::uint64_t cap = kEnumerationCap) const { return order <= cap; }

    static constexpr std::uint64_t kEnumerationCap = 1u << 24;

    std::string to_json() const;
    static GroupSpec from_json(const std::string& text);
};

/**
 * One group element, stored as a flat word vector whose interpretation
 * depends on the spec kind (packed bits / residues / single index).
 */
struct GroupElement {
    std::vector<std::uint64_t> w;

    bool operator==(const GroupElement& o) const { return w == o.w; }
};

GroupElement identity(const GroupSpec& spec);
GroupElement mul(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement inv(const GroupSpec& spec, const GroupElement& x);
bool is_valid(const GroupSpec& spec, const GroupElement& x);

/// Number of coordinates equal to -1 of a hypercube element (popcount).
int hamming_class(const GroupSpec& spec, const GroupElement& x);

/// Enumeration for groups with order <= cap: index <-> element.
GroupElement element_from_index(const GroupSpec& spec, std::uint64_t idx);
std::uint64_t index_of_element(const GroupSpec& spec, const GroupElement& x);

GroupElement random_element(const GroupSpec& spec, RngStream& rng);

/**
 * Partition of an enumerable group into orbits {g, g^-1}; orbit size 1
 * exactly when g is its own inverse.
 */
struct OrbitPartition {
    std::vector<std::vector<std::uint64_t>> orbits;  // element indices
};

OrbitPartition orbit_partition(const GroupSpec& spec,
                               std::uint64_t cap = GroupSpec::kEnumerationCap);

}  // namespace raglab
