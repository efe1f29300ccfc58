#include "qssep/schroeder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace qssep {

SchroederTree::SchroederTree(std::vector<SchroederTree> children) : children_(std::move(children)) {
    if (children_.size() < 2) {
        throw std::invalid_argument("internal vertex needs at least two children");
    }
}

SchroederTree SchroederTree::corolla(int leaves) {
    return SchroederTree(std::vector<SchroederTree>(leaves));
}

int SchroederTree::leaf_count() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children_) n += c.leaf_count();
    return n;
}

int SchroederTree::internal_count() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const auto& c : children_) n += c.internal_count();
    return n;
}

std::string SchroederTree::to_string() const {
    if (is_leaf()) return "*";
    std::string out = "(";
    for (std::size_t j = 0; j < children_.size(); ++j) {
        if (j) out += ' ';
        out += children_[j].to_string();
    }
    return out + ")";
}

namespace {

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    SchroederTree parse_all() {
        SchroederTree t = parse_tree();
        if (pos_ != text_.size()) fail("trailing characters");
        return t;
    }

private:
    SchroederTree parse_tree() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (text_[pos_] == '*') {
            ++pos_;
            return SchroederTree::leaf();
        }
        if (text_[pos_] != '(') fail("expected '*' or '('");
        ++pos_;
        std::vector<SchroederTree> children;
        children.push_back(parse_tree());
        while (pos_ < text_.size() && text_[pos_] == ' ') {
            ++pos_;
            children.push_back(parse_tree());
        }
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
        ++pos_;
        if (children.size() < 2) fail("internal vertex with a single child");
        return SchroederTree(std::move(children));
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("malformed tree '" + std::string(text_) + "' at offset " +
                                    std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void check_guard(int n_leaves, int guard) {
    if (n_leaves < 1 || n_leaves > guard) {
        throw std::out_of_range("tree enumeration supports 1 <= leaves <= " + std::to_string(guard));
    }
}

void sort_canonically(std::vector<SchroederTree>& trees) {
    std::vector<std::tuple<int, std::string, std::size_t>> keys;
    keys.reserve(trees.size());
    for (std::size_t j = 0; j < trees.size(); ++j) {
        const int left = trees[j].is_leaf() ? 0 : trees[j].children().front().leaf_count();
        keys.emplace_back(left, trees[j].to_string(), j);
    }
    std::sort(keys.begin(), keys.end());
    std::vector<SchroederTree> sorted;
    sorted.reserve(trees.size());
    for (const auto& key : keys) sorted.push_back(std::move(trees[std::get<2>(key)]));
    trees = std::move(sorted);
}

// Sequences of at least two trees whose leaf counts sum to n.
void forests(int n, bool need_two, std::vector<SchroederTree>& prefix,
             const std::vector<std::vector<SchroederTree>>& by_size, std::vector<SchroederTree>& out) {
    if (n == 0) {
        if (prefix.size() >= 2) out.emplace_back(prefix);
        return;
    }
    const int largest = need_two && prefix.empty() ? n - 1 : n;
    for (int first = 1; first <= largest; ++first) {
        for (const auto& t : by_size[first]) {
            prefix.push_back(t);
            forests(n - first, need_two, prefix, by_size, out);
            prefix.pop_back();
        }
    }
}

}  // namespace

SchroederTree SchroederTree::parse(std::string_view text) { return TreeParser(text).parse_all(); }

std::vector<SchroederTree> enumerate_trees(int n_leaves, int guard) {
    check_guard(n_leaves, guard);
    std::vector<std::vector<SchroederTree>> by_size(n_leaves + 1);
    by_size[1] = {SchroederTree::leaf()};
    for (int m = 2; m <= n_leaves; ++m) {
        std::vector<SchroederTree> prefix;
        forests(m, true, prefix, by_size, by_size[m]);
    }
    auto result = std::move(by_size[n_leaves]);
    sort_canonically(result);
    return result;
}

std::vector<SchroederTree> enumerate_prime_trees(int n_leaves, int guard) {
    check_guard(n_leaves, guard);
    if (n_leaves < 2) {
        throw std::domain_error("primality needs at least two leaves");
    }
    if (n_leaves == 2) return {SchroederTree::corolla(2)};
    std::vector<SchroederTree> out;
    for (const auto& t : enumerate_trees(n_leaves - 1, guard)) {
        auto appended = t.children();
        appended.push_back(SchroederTree::leaf());
        out.emplace_back(std::move(appended));
        out.push_back(SchroederTree({t, SchroederTree::leaf()}));
    }
    sort_canonically(out);
    return out;
}

bool is_prime(const SchroederTree& t) {
    if (t.is_leaf()) {
        throw std::domain_error("primality is undefined for the single-leaf tree");
    }
    return t.children().back().is_leaf();
}

std::vector<int> label_corners(const SchroederTree& t) {
    std::vector<int> owner;
    int next_id = 0;
    auto walk = [&](auto&& self, const SchroederTree& node) -> void {
        if (node.is_leaf()) return;
        const int id = next_id++;
        const auto& kids = node.children();
        for (std::size_t j = 0; j < kids.size(); ++j) {
            self(self, kids[j]);
            if (j + 1 < kids.size()) owner.push_back(id);
        }
    };
    walk(walk, t);
    return owner;
}

NonCrossingPartition tree_partition(const SchroederTree& t) {
    if (t.is_leaf()) {
        throw std::domain_error("the single-leaf tree has no corners");
    }
    const auto owner = label_corners(t);
    std::map<int, Block> groups;
    for (std::size_t c = 0; c < owner.size(); ++c) groups[owner[c]].push_back(static_cast<int>(c) + 1);
    std::vector<Block> blocks;
    for (auto& [id, block] : groups) blocks.push_back(std::move(block));
    return NonCrossingPartition(static_cast<int>(owner.size()), std::move(blocks));
}

SetPartition leaf_forest_partition(const SchroederTree& t) {
    // Vertices numbered in preorder; leaves additionally get their left-to-right rank.
    std::vector<int> parent;
    std::vector<int> leaf_rank;  // -1 for internal vertices
    auto walk = [&](auto&& self, const SchroederTree& node, int up) -> int {
        const int id = static_cast<int>(parent.size());
        parent.push_back(up);
        leaf_rank.push_back(-1);
        if (node.is_leaf()) {
            leaf_rank[id] = 1 + static_cast<int>(std::count_if(leaf_rank.begin(), leaf_rank.end(),
                                                               [](int r) { return r >= 0; }));
            return id;
        }
        const auto& kids = node.children();
        for (std::size_t j = 0; j < kids.size(); ++j) {
            const bool kept = j == 0 || j + 1 == kids.size();
            self(self, kids[j], kept ? id : -1);
        }
        return id;
    };
    walk(walk, t, -1);

    auto component = [&](int v) {
        while (parent[v] >= 0) v = parent[v];
        return v;
    };
    std::map<int, Block> groups;
    int leaves = 0;
    for (std::size_t v = 0; v < parent.size(); ++v) {
        if (leaf_rank[v] >= 0) {
            groups[component(static_cast<int>(v))].push_back(leaf_rank[v]);
            ++leaves;
        }
    }
    std::vector<Block> blocks;
    for (auto& [root, block] : groups) blocks.push_back(std::move(block));
    return SetPartition(leaves, std::move(blocks));
}

namespace {

// Trees whose corners are the interval [lo, hi] of a fixed partition (block id per corner).
class PartitionTreeBuilder {
public:
    explicit PartitionTreeBuilder(const NonCrossingPartition& pi) : block_id_(pi.n() + 1, -1) {
        for (std::size_t b = 0; b < pi.blocks().size(); ++b) {
            blocks_.push_back(pi.blocks()[b]);
            for (int x : pi.blocks()[b]) block_id_[x] = static_cast<int>(b);
        }
    }

    std::vector<SchroederTree> with_root_block(const Block& root, int lo, int hi) const {
        std::vector<std::vector<SchroederTree>> options;
        int gap_lo = lo;
        for (int c : root) {
            options.push_back(build(gap_lo, c - 1));
            gap_lo = c + 1;
        }
        options.push_back(build(gap_lo, hi));
        std::vector<std::vector<SchroederTree>> partial{{}};
        for (const auto& choice : options) {
            std::vector<std::vector<SchroederTree>> next;
            for (const auto& head : partial) {
                for (const auto& t : choice) {
                    auto extended = head;
                    extended.push_back(t);
                    next.push_back(std::move(extended));
                }
            }
            partial = std::move(next);
        }
        std::vector<SchroederTree> out;
        for (auto& kids : partial) out.emplace_back(std::move(kids));
        return out;
    }

    const Block& block_of(int corner) const { return blocks_[block_id_[corner]]; }

private:
    std::vector<SchroederTree> build(int lo, int hi) const {
        if (lo > hi) return {SchroederTree::leaf()};
        // The root owns an outermost block of the interval: one not enclosed by another.
        std::vector<SchroederTree> out;
        std::vector<char> seen(blocks_.size(), 0);
        for (int c = lo; c <= hi; ++c) {
            const int b = block_id_[c];
            if (seen[b]) continue;
            seen[b] = 1;
            const Block& block = blocks_[b];
            bool enclosed = false;
            for (int d = lo; d < block.front() && !enclosed; ++d) {
                enclosed = blocks_[block_id_[d]].back() > block.back();
            }
            if (enclosed) continue;
            auto trees = with_root_block(block, lo, hi);
            out.insert(out.end(), trees.begin(), trees.end());
        }
        return out;
    }

    std::vector<Block> blocks_;
    std::vector<int> block_id_;
};

}  // namespace

std::vector<SchroederTree> prime_trees_for_partition(const NonCrossingPartition& pi) {
    const int n = pi.n();
    PartitionTreeBuilder builder(pi);
    // Prime: the root owns the last corner n, and its last child is a leaf.
    auto out = builder.with_root_block(builder.block_of(n), 1, n);
    sort_canonically(out);
    return out;
}

SignedMonomial tree_monomial(const SchroederTree& t, int k, const CyclicPermutation& sigma) {
    if (t.is_leaf() || !is_prime(t)) {
        throw std::domain_error("tree monomials are defined for prime trees only");
    }
    const int n = static_cast<int>(sigma.size());
    if (t.leaf_count() != n + 1) {
        throw std::invalid_argument("tree has " + std::to_string(t.leaf_count()) + " leaves, expected " +
                                    std::to_string(n + 1));
    }
    const auto orbit = sigma.orbit_from(k);  // k, s(k), ..., s^(n-1)(k)
    const auto owner = label_corners(t);
    std::map<int, int> least;
    for (int c = 1; c <= n; ++c) {
        const int label = orbit[c % n];
        auto [it, inserted] = least.try_emplace(owner[c - 1], label);
        if (!inserted) it->second = std::min(it->second, label);
    }
    SignedMonomial m;
    for (const auto& [vertex, label] : least) {
        m.variables.push_back(label);
        m.sign = -m.sign;
    }
    std::sort(m.variables.begin(), m.variables.end());
    return m;
}

// ---------------------------------------------------------------------------
// Dissections

bool diagonals_cross(const Dissection::Diagonal& a, const Dissection::Diagonal& b) {
    auto strictly_inside = [](int x, const Dissection::Diagonal& d) { return x > d.first && x < d.second; };
    if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) {
        return false;
    }
    return strictly_inside(b.first, a) != strictly_inside(b.second, a);
}

Dissection::Dissection(int polygon_size, std::set<Diagonal> diagonals) : polygon_size_(polygon_size) {
    if (polygon_size_ < 3) {
        throw std::invalid_argument("polygon needs at least three vertices");
    }
    for (auto [u, v] : diagonals) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > polygon_size_) {
            throw std::invalid_argument("diagonal (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") leaves the polygon");
        }
        if (v - u < 2 || (u == 1 && v == polygon_size_)) {
            throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                        ") is a side, not a diagonal");
        }
        diagonals_.emplace(u, v);
    }
    for (auto a = diagonals_.begin(); a != diagonals_.end(); ++a) {
        for (auto b = std::next(a); b != diagonals_.end(); ++b) {
            if (diagonals_cross(*a, *b)) {
                throw std::invalid_argument("diagonals (" + std::to_string(a->first) + "," +
                                            std::to_string(a->second) + ") and (" + std::to_string(b->first) +
                                            "," + std::to_string(b->second) + ") cross");
            }
        }
    }
}

bool Dissection::touches(int vertex) const {
    return std::any_of(diagonals_.begin(), diagonals_.end(),
                       [vertex](const Diagonal& d) { return d.first == vertex || d.second == vertex; });
}

std::string Dissection::to_string() const {
    std::string out;
    for (const auto& [u, v] : diagonals_) {
        if (!out.empty()) out += ',';
        out += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    }
    return out;
}

// Positions along the polygon are counted from vertex n+1 (position 0) through 1..n,
// so a subtree with L leaves spans the positions [a, a+L] and the root spans [0, n].

Dissection tree_to_dissection(const SchroederTree& t) {
    if (t.is_leaf()) {
        throw std::domain_error("the single-leaf tree has no polygon");
    }
    const int n = t.leaf_count();
    auto vertex = [n](int position) { return position == 0 ? n + 1 : position; };
    std::set<Dissection::Diagonal> diagonals;
    auto walk = [&](auto&& self, const SchroederTree& node, int start, bool is_root) -> int {
        if (node.is_leaf()) return start + 1;
        int end = start;
        for (const auto& child : node.children()) end = self(self, child, end, false);
        if (!is_root) {
            const auto d = std::minmax({vertex(start), vertex(end)});
            diagonals.emplace(d.first, d.second);
        }
        return end;
    };
    walk(walk, t, 0, true);
    return Dissection(n + 1, std::move(diagonals));
}

SchroederTree dissection_to_tree(const Dissection& d) {
    const int n = d.polygon_size() - 1;
    auto position = [n](int vertex) { return vertex == n + 1 ? 0 : vertex; };
    std::set<std::pair<int, int>> chords;
    for (const auto& [u, v] : d.diagonals()) {
        const auto c = std::minmax({position(u), position(v)});
        chords.emplace(c.first, c.second);
    }
    auto build = [&](auto&& self, int lo, int hi) -> SchroederTree {
        if (hi - lo == 1) return SchroederTree::leaf();
        // Walk the face sitting on the edge (lo, hi), always taking the outermost chord.
        std::vector<SchroederTree> children;
        int v = lo;
        while (v != hi) {
            int next = v + 1;
            for (int w = hi; w > v + 1; --w) {
                if (w == hi && v == lo) continue;
                if (chords.count({v, w})) {
                    next = w;
                    break;
                }
            }
            children.push_back(self(self, v, next));
            v = next;
        }
        return SchroederTree(std::move(children));
    };
    return build(build, 0, n);
}

}  // namespace qssep
