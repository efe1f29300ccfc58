#pragma once

// Schroeder trees (plane rooted trees, every internal vertex of arity >= 2),
// their corner partitions, and the dual picture as polygon dissections.

#include "qssep/combinatorics.hpp"

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qssep {

inline constexpr int kMaxTreeLeaves = 10;

class SchroederTree {
public:
    /// The single-leaf tree.
    SchroederTree() = default;
    /// Throws std::invalid_argument with fewer than two children.
    explicit SchroederTree(std::vector<SchroederTree> children);

    static SchroederTree leaf() { return {}; }
    /// Root with the given number of leaf children.
    static SchroederTree corolla(int leaves);

    bool is_leaf() const { return children_.empty(); }
    const std::vector<SchroederTree>& children() const { return children_; }
    int leaf_count() const;
    int internal_count() const;

    /// Nested parentheses with '*' for a leaf, e.g. "((* *) *)".
    std::string to_string() const;
    /// Inverse of to_string; throws std::invalid_argument on malformed input.
    static SchroederTree parse(std::string_view text);

    friend bool operator==(const SchroederTree&, const SchroederTree&) = default;

private:
    std::vector<SchroederTree> children_;
};

/// All trees with the given number of leaves, ordered by leftmost-child leaf count, then by text.
std::vector<SchroederTree> enumerate_trees(int n_leaves, int guard = kMaxTreeLeaves);

/// Prime trees (last root child is a leaf), built from trees with one leaf less; same order.
std::vector<SchroederTree> enumerate_prime_trees(int n_leaves, int guard = kMaxTreeLeaves);

/// Throws std::domain_error for the single-leaf tree.
bool is_prime(const SchroederTree& t);

/// owner[c - 1] is the preorder index (among internal vertices, root = 0) of the vertex owning corner c.
std::vector<int> label_corners(const SchroederTree& t);

/// Corner labels grouped by owning vertex. Throws std::domain_error for the single-leaf tree.
NonCrossingPartition tree_partition(const SchroederTree& t);

/// Leaves grouped by the components left after cutting every root-to-child edge
/// other than the leftmost and rightmost at each internal vertex.
SetPartition leaf_forest_partition(const SchroederTree& t);

/// All prime trees t with n+1 leaves and tree_partition(t) == pi, built block by block.
std::vector<SchroederTree> prime_trees_for_partition(const NonCrossingPartition& pi);

struct SignedMonomial {
    int sign = 1;
    std::vector<int> variables;  // sorted

    friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

/// Product over internal vertices v of -x_{i(v)}, where corner j carries s^j(k) for
/// j < n and corner n carries k, and i(v) is the least label at v.
SignedMonomial tree_monomial(const SchroederTree& t, int k, const CyclicPermutation& sigma);

/// Convex polygon with vertices 1..polygon_size in clockwise order plus compatible diagonals.
class Dissection {
public:
    using Diagonal = std::pair<int, int>;

    /// Throws std::invalid_argument on sides, out-of-range vertices or crossing diagonals.
    Dissection(int polygon_size, std::set<Diagonal> diagonals);

    int polygon_size() const { return polygon_size_; }
    const std::set<Diagonal>& diagonals() const { return diagonals_; }
    bool touches(int vertex) const;

    /// "(1,6),(3,6),(6,8)"
    std::string to_string() const;

    friend bool operator==(const Dissection&, const Dissection&) = default;

private:
    int polygon_size_;
    std::set<Diagonal> diagonals_;
};

bool diagonals_cross(const Dissection::Diagonal& a, const Dissection::Diagonal& b);

/// Dual dissection of the (n+1)-gon with the root face on the base edge [n, n+1].
Dissection tree_to_dissection(const SchroederTree& t);
SchroederTree dissection_to_tree(const Dissection& d);

}  // namespace qssep
