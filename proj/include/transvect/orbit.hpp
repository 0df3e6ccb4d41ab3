#pragma once

#include <cstdint>
#include <unordered_map>

#include "transvect/identity.hpp"

namespace transvect {

enum class GroupFamily { Linear, Symplectic, LinearRelative, SymplecticRelative, LinearFirstRowCol, SymplecticFirstRowCol };

struct GroupSpec {
    GroupFamily family = GroupFamily::Linear;
    int size = 2;
    Ring ring;
    std::optional<Ideal> ideal;  // relative and first-row/column families
};

std::string family_name(GroupFamily f);
GroupFamily parse_family(const std::string& text);  // e, esp, e-rel, esp-rel, e1, esp1

// Rows over ℤ/m or GF(p) packed as mixed-radix integers; packing order is lexicographic order.
struct PackedRows {
    std::int64_t modulus = 0;
    int length = 0;
    std::vector<std::uint64_t> rows;  // sorted ascending
};

struct Budget {
    std::uint64_t rows = 10'000'000;
    std::uint64_t closure = 1'000'000;
};

std::uint64_t pack_row(const std::vector<int>& v, std::int64_t m);
std::vector<int> unpack_row(std::uint64_t code, std::int64_t m, int length);

// Um_n(R), or the rows ≡ e_1 mod I when I is given and proper.
PackedRows enumerate_unimodular(const Ring& r, int n, const std::optional<Ideal>& I = std::nullopt,
                                const Budget& budget = {});

// Additive generating set of an ideal of a finite ring.
std::vector<RingElement> additive_generators(const Ideal& I);

std::vector<SquareMatrix> generators_for(const GroupSpec& spec, bool all_ring_elements = false);

struct OrbitPartition {
    PackedRows universe;
    std::vector<std::uint32_t> orbit_of;   // per row: index of its orbit
    std::vector<std::uint64_t> orbit_rep;  // least row of each orbit, ascending
    std::vector<std::uint64_t> orbit_size;
    std::size_t generator_count = 0;
    std::vector<std::uint64_t> frontier_sizes;  // BFS level sizes, concatenated over orbits
    std::uint64_t multiplications = 0;

    std::size_t orbit_count() const { return orbit_rep.size(); }
};

// Right action v ↦ v g under every generator and its inverse. Throws when the action leaves the universe.
OrbitPartition orbit_partition(const PackedRows& universe, const std::vector<SquareMatrix>& generators, int threads = 1);

// Post hoc check that random (row, generator) pairs stay in their orbit.
bool spot_check_closed(const OrbitPartition& p, const std::vector<SquareMatrix>& generators, int pairs,
                       std::uint64_t seed);

struct OrbitEqualityReport {
    std::uint64_t universe_size = 0;
    std::size_t linear_orbits = 0;
    std::size_t symplectic_orbits = 0;
    std::vector<std::uint64_t> linear_sizes;
    std::vector<std::uint64_t> symplectic_sizes;
    bool equal = false;
};
// Um_{2n}(R, I) under E_{2n}(R, I) and ESp_{2n}(R, I); the full groups when I is absent or R.
OrbitEqualityReport check_orbit_equality(const Ring& r, int size, const std::optional<Ideal>& I, int threads = 1);

struct TransitivityReport {
    std::uint64_t universe_size = 0;      // Um_n(R)
    std::size_t orbit_count = 0;
    std::size_t congruence_classes = 0;   // classes of Um_n(R) mod I
    bool classes_match = false;           // orbits are exactly the congruence classes
    std::uint64_t relative_rows = 0;      // rows ≡ e_1 mod I
    bool relative_single_orbit = false;
    bool ok() const { return classes_match && relative_single_orbit; }
};
TransitivityReport check_dim0_transitivity(const Ring& r, int n, const std::optional<Ideal>& I, int threads = 1);

// Finite matrix group as a set of packed matrices.
class MatrixSet {
public:
    MatrixSet(std::int64_t modulus, int n) : m_(modulus), n_(n) {}
    std::int64_t modulus() const { return m_; }
    int dim() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(const SquareMatrix& g) const;
    bool contains_key(const std::string& k) const { return index_.count(k) > 0; }
    bool insert_key(const std::string& k);
    const std::vector<std::string>& keys() const { return elems_; }
    std::string key(const SquareMatrix& g) const;

private:
    std::int64_t m_;
    int n_;
    std::vector<std::string> elems_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct ClosureResult {
    MatrixSet elements;
    bool complete = false;  // false when the cap stopped the enumeration
};

// Group generated by `generators`; with conjugators, the normal closure under their group.
ClosureResult subgroup_closure(const std::vector<SquareMatrix>& generators,
                               const std::vector<SquareMatrix>& conjugators = {}, std::uint64_t cap = 1'000'000);

struct MembershipReport {
    int samples = 0;
    int tested = 0;
    int members = 0;
    std::size_t group_order = 0;
    int factorizations_checked = 0;
    int factorizations_ok = 0;
    bool ok() const { return tested == samples && members == tested && factorizations_ok == factorizations_checked; }
};

// Random first-row/column words reduced to ≡ 1 mod I, tested for membership in ESp_{2n}(R, I).
MembershipReport kernel_membership_test(const Ring& r, int size, const Ideal& I, int samples, std::uint64_t seed,
                                        int threads = 1, std::uint64_t cap = 1'000'000);

// se_kl(z) se_ij(ab) se_kl(-z) with a, b ∈ I and (k,l) opposite to (i,j), tested for membership in the group
// generated by se_ij(x), x ∈ I; each sample's explicit factorization is checked as well.
MembershipReport square_ideal_inclusion_test(const Ring& r, int size, const Ideal& I, int samples, std::uint64_t seed,
                                             std::uint64_t cap = 1'000'000);

}  // namespace transvect
