#pragma once

// Cyclic permutations, set partitions and the non-crossing partition lattice.

#include "qssep/numbers.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace qssep {

inline constexpr int kMaxNonCrossingSize = 12;
inline constexpr int kMaxLatticeSize = 8;
inline constexpr int kMaxSetPartitionSize = 10;

/// A single cycle on a finite set of positive indices, stored as its word
/// k, s(k), s^2(k), ... rotated so that it starts at the minimum of the support.
class CyclicPermutation {
public:
    /// Throws std::invalid_argument on an empty word, duplicates or indices < 1.
    explicit CyclicPermutation(std::vector<int> word);

    const std::vector<int>& word() const { return word_; }
    std::size_t size() const { return word_.size(); }

    /// Sorted support.
    std::vector<int> support() const;
    bool contains(int x) const;

    /// Image of x under the cycle. Throws std::out_of_range if x is not in the support.
    int operator()(int x) const;
    /// x, s(x), ..., s^(m-1)(x): the word starting at x.
    std::vector<int> orbit_from(int x) const;

    CyclicPermutation inverse() const;
    /// Relabels every entry through the given map (entries absent from the map are kept).
    CyclicPermutation relabeled(const std::map<int, int>& relabel) const;

    /// "1,3,2,4"
    std::string to_string() const;

    friend bool operator==(const CyclicPermutation&, const CyclicPermutation&) = default;
    friend auto operator<=>(const CyclicPermutation& a, const CyclicPermutation& b) {
        return a.word_ <=> b.word_;
    }

private:
    std::vector<int> word_;
};

CyclicPermutation canonicalize_cycle(std::vector<int> word);

/// Parses a comma separated cycle word such as "3,2,4,1".
CyclicPermutation parse_cycle(const std::string& text);

/// s_i sigma s_i: swaps the labels i and i+1 in the word.
CyclicPermutation conjugate_by_adjacent(const CyclicPermutation& sigma, int i);

struct CycleSplit {
    CyclicPermutation minus;  // contains i
    CyclicPermutation plus;   // contains i+1
};

/// The two cycles of s_i sigma, composed as x -> s_i(sigma(x)).
CycleSplit split_by_transposition(const CyclicPermutation& sigma, int i);

/// All (n-1)! cycles on {1..n}, sorted by word.
std::vector<CyclicPermutation> all_cycles(int n);

using Block = std::vector<int>;

/// A partition of {1..n}; blocks sorted ascending and ordered by their minimum.
class SetPartition {
public:
    /// Throws std::invalid_argument unless the blocks cover {1..n} disjointly.
    SetPartition(int n, std::vector<Block> blocks);

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    /// Index of the block holding x (1-based x).
    std::size_t block_of(int x) const;

    /// True when every block of *this lies inside a block of coarser.
    bool refines(const SetPartition& coarser) const;

    /// "{1,3,4},{2}"
    std::string to_string() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

private:
    int n_;
    std::vector<Block> blocks_;
};

bool is_noncrossing(const SetPartition& p);

class NonCrossingPartition {
public:
    /// Throws std::invalid_argument for a crossing partition.
    explicit NonCrossingPartition(SetPartition p);
    NonCrossingPartition(int n, std::vector<Block> blocks)
        : NonCrossingPartition(SetPartition(n, std::move(blocks))) {}

    static NonCrossingPartition one_block(int n);
    static NonCrossingPartition singletons(int n);

    const SetPartition& partition() const { return p_; }
    int n() const { return p_.n(); }
    const std::vector<Block>& blocks() const { return p_.blocks(); }
    std::size_t block_count() const { return p_.block_count(); }
    std::string to_string() const { return p_.to_string(); }

    friend bool operator==(const NonCrossingPartition&, const NonCrossingPartition&) = default;
    friend auto operator<=>(const NonCrossingPartition& a, const NonCrossingPartition& b) {
        return a.p_ <=> b.p_;
    }

private:
    SetPartition p_;
};

/// All set partitions of {1..n} (n <= kMaxSetPartitionSize), sorted.
std::vector<SetPartition> enumerate_set_partitions(int n);

/// NC(n), sorted. Throws std::out_of_range outside 1..kMaxNonCrossingSize.
std::vector<NonCrossingPartition> enumerate_nc(int n);

/// Kreweras complement with the primed point i' placed just before i on the circle.
NonCrossingPartition kreweras(const NonCrossingPartition& p);

/// Image under x -> x + shift (mod n, values in 1..n).
NonCrossingPartition rotate(const NonCrossingPartition& p, int shift);

/// mu(p, 1_n) from the product of signed Catalan numbers over the blocks of K(p).
BigInt mobius_nc(const NonCrossingPartition& p);

/// mu(q, 1_n) for every q in NC(n), by inverting the zeta matrix of the refinement order.
std::map<NonCrossingPartition, BigInt> mobius_table_via_lattice(int n);
BigInt mobius_via_lattice(const NonCrossingPartition& p);

BigInt catalan(int n);
/// A001003: number of Schroeder trees with n leaves.
BigInt small_schroeder(int n);
BigInt factorial(int n);

}  // namespace qssep
