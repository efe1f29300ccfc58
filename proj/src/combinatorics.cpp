#include "qssep/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qssep {

// ---------------------------------------------------------------------------
// Cyclic permutations

CyclicPermutation::CyclicPermutation(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty()) {
        throw std::invalid_argument("cycle word is empty");
    }
    std::set<int> seen;
    for (int x : word_) {
        if (x < 1) {
            throw std::invalid_argument("cycle entries must be positive, got " + std::to_string(x));
        }
        if (!seen.insert(x).second) {
            throw std::invalid_argument("duplicate entry " + std::to_string(x) + " in cycle word");
        }
    }
    std::rotate(word_.begin(), std::min_element(word_.begin(), word_.end()), word_.end());
}

std::vector<int> CyclicPermutation::support() const {
    std::vector<int> s = word_;
    std::sort(s.begin(), s.end());
    return s;
}

bool CyclicPermutation::contains(int x) const {
    return std::find(word_.begin(), word_.end(), x) != word_.end();
}

int CyclicPermutation::operator()(int x) const {
    auto it = std::find(word_.begin(), word_.end(), x);
    if (it == word_.end()) {
        throw std::out_of_range(std::to_string(x) + " is not in the support of (" + to_string() + ")");
    }
    ++it;
    return it == word_.end() ? word_.front() : *it;
}

std::vector<int> CyclicPermutation::orbit_from(int x) const {
    auto it = std::find(word_.begin(), word_.end(), x);
    if (it == word_.end()) {
        throw std::out_of_range(std::to_string(x) + " is not in the support of (" + to_string() + ")");
    }
    std::vector<int> out(it, word_.end());
    out.insert(out.end(), word_.begin(), it);
    return out;
}

CyclicPermutation CyclicPermutation::inverse() const {
    std::vector<int> w(word_.rbegin(), word_.rend());
    return CyclicPermutation(std::move(w));
}

CyclicPermutation CyclicPermutation::relabeled(const std::map<int, int>& relabel) const {
    std::vector<int> w = word_;
    for (int& x : w) {
        if (auto it = relabel.find(x); it != relabel.end()) x = it->second;
    }
    return CyclicPermutation(std::move(w));
}

std::string CyclicPermutation::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < word_.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(word_[j]);
    }
    return out;
}

CyclicPermutation canonicalize_cycle(std::vector<int> word) {
    return CyclicPermutation(std::move(word));
}

CyclicPermutation parse_cycle(const std::string& text) {
    std::vector<int> word;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        item = first == std::string::npos ? std::string() : item.substr(first, last - first + 1);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed cycle word '" + text + "'");
        }
        if (used != item.size()) {
            throw std::invalid_argument("malformed cycle word '" + text + "'");
        }
        word.push_back(value);
    }
    if (!text.empty() && text.back() == ',') {
        throw std::invalid_argument("malformed cycle word '" + text + "'");
    }
    return CyclicPermutation(std::move(word));
}

namespace {

void require_adjacent_pair(const CyclicPermutation& sigma, int i) {
    if (!sigma.contains(i) || !sigma.contains(i + 1)) {
        throw std::out_of_range("indices " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                " must both lie in the support of (" + sigma.to_string() + ")");
    }
}

}  // namespace

CyclicPermutation conjugate_by_adjacent(const CyclicPermutation& sigma, int i) {
    require_adjacent_pair(sigma, i);
    return sigma.relabeled({{i, i + 1}, {i + 1, i}});
}

CycleSplit split_by_transposition(const CyclicPermutation& sigma, int i) {
    require_adjacent_pair(sigma, i);
    auto swap_adjacent = [i](int x) { return x == i ? i + 1 : (x == i + 1 ? i : x); };
    auto cycle_through = [&](int start) {
        std::vector<int> w{start};
        for (int x = swap_adjacent(sigma(start)); x != start; x = swap_adjacent(sigma(x))) {
            w.push_back(x);
        }
        return CyclicPermutation(std::move(w));
    };
    return CycleSplit{cycle_through(i), cycle_through(i + 1)};
}

std::vector<CyclicPermutation> all_cycles(int n) {
    if (n < 1) {
        throw std::out_of_range("cycle length must be positive");
    }
    std::vector<int> tail(n - 1);
    std::iota(tail.begin(), tail.end(), 2);
    std::vector<CyclicPermutation> out;
    do {
        std::vector<int> w{1};
        w.insert(w.end(), tail.begin(), tail.end());
        out.emplace_back(std::move(w));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Set partitions

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 0) {
        throw std::invalid_argument("partition ground set size must be non-negative");
    }
    std::vector<char> seen(n_ + 1, 0);
    int covered = 0;
    for (auto& b : blocks_) {
        if (b.empty()) {
            throw std::invalid_argument("partition blocks must be nonempty");
        }
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n_ || seen[x]) {
                throw std::invalid_argument("blocks must partition {1.." + std::to_string(n_) + "}");
            }
            seen[x] = 1;
            ++covered;
        }
    }
    if (covered != n_) {
        throw std::invalid_argument("blocks must cover {1.." + std::to_string(n_) + "}");
    }
    std::sort(blocks_.begin(), blocks_.end());
}

std::size_t SetPartition::block_of(int x) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), x)) return b;
    }
    throw std::out_of_range(std::to_string(x) + " is outside the ground set");
}

bool SetPartition::refines(const SetPartition& coarser) const {
    if (n_ != coarser.n_) return false;
    std::vector<std::size_t> owner(n_ + 1);
    for (std::size_t b = 0; b < coarser.blocks_.size(); ++b) {
        for (int x : coarser.blocks_[b]) owner[x] = b;
    }
    for (const auto& b : blocks_) {
        for (int x : b) {
            if (owner[x] != owner[b.front()]) return false;
        }
    }
    return true;
}

std::string SetPartition::to_string() const {
    std::string out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += ',';
        out += '{';
        for (std::size_t j = 0; j < blocks_[b].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(blocks_[b][j]);
        }
        out += '}';
    }
    return out;
}

bool is_noncrossing(const SetPartition& p) {
    // Two blocks cross iff some element of one lies strictly between two
    // consecutive elements of the other while another of its elements lies outside.
    const auto& blocks = p.blocks();
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        const auto& outer = blocks[a];
        for (std::size_t j = 0; j + 1 < outer.size(); ++j) {
            const int lo = outer[j], hi = outer[j + 1];
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                if (b == a) continue;
                bool inside = false, outside = false;
                for (int x : blocks[b]) {
                    (x > lo && x < hi ? inside : outside) = true;
                }
                if (inside && outside) return false;
            }
        }
    }
    return true;
}

NonCrossingPartition::NonCrossingPartition(SetPartition p) : p_(std::move(p)) {
    if (!is_noncrossing(p_)) {
        throw std::invalid_argument("partition " + p_.to_string() + " is crossing");
    }
}

NonCrossingPartition NonCrossingPartition::one_block(int n) {
    Block b(n);
    std::iota(b.begin(), b.end(), 1);
    return NonCrossingPartition(n, {b});
}

NonCrossingPartition NonCrossingPartition::singletons(int n) {
    std::vector<Block> blocks;
    for (int x = 1; x <= n; ++x) blocks.push_back({x});
    return NonCrossingPartition(n, std::move(blocks));
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
    if (n < 1 || n > kMaxSetPartitionSize) {
        throw std::out_of_range("set partition enumeration supports 1 <= n <= " +
                                std::to_string(kMaxSetPartitionSize));
    }
    std::vector<SetPartition> out;
    std::vector<Block> blocks;
    auto place = [&](auto&& self, int x) -> void {
        if (x > n) {
            out.emplace_back(n, blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(x);
            self(self, x + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({x});
        self(self, x + 1);
        blocks.pop_back();
    };
    place(place, 1);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// All non-crossing partitions of the integer interval [lo, hi].
std::vector<std::vector<Block>> nc_of_interval(int lo, int hi) {
    if (lo > hi) return {{}};
    std::vector<std::vector<Block>> out;
    const int span = hi - lo;
    // The block of lo is {lo} plus a subset of (lo, hi]; the gaps it leaves are independent.
    for (unsigned mask = 0; mask < (1u << span); ++mask) {
        Block first{lo};
        for (int j = 0; j < span; ++j) {
            if (mask & (1u << j)) first.push_back(lo + 1 + j);
        }
        std::vector<std::vector<Block>> partial{{first}};
        for (std::size_t g = 0; g < first.size(); ++g) {
            const int gap_lo = first[g] + 1;
            const int gap_hi = g + 1 < first.size() ? first[g + 1] - 1 : hi;
            auto fillings = nc_of_interval(gap_lo, gap_hi);
            std::vector<std::vector<Block>> next;
            next.reserve(partial.size() * fillings.size());
            for (const auto& head : partial) {
                for (const auto& fill : fillings) {
                    auto joined = head;
                    joined.insert(joined.end(), fill.begin(), fill.end());
                    next.push_back(std::move(joined));
                }
            }
            partial = std::move(next);
        }
        out.insert(out.end(), partial.begin(), partial.end());
    }
    return out;
}

}  // namespace

std::vector<NonCrossingPartition> enumerate_nc(int n) {
    if (n < 1 || n > kMaxNonCrossingSize) {
        throw std::out_of_range("NC(n) enumeration supports 1 <= n <= " +
                                std::to_string(kMaxNonCrossingSize));
    }
    std::vector<NonCrossingPartition> out;
    for (auto& blocks : nc_of_interval(1, n)) {
        out.emplace_back(n, std::move(blocks));
    }
    std::sort(out.begin(), out.end());
    return out;
}

NonCrossingPartition kreweras(const NonCrossingPartition& p) {
    const int n = p.n();
    // Primed points a' < b' (a' just before a) share a block iff no block of p
    // has elements both inside the arc {a, ..., b-1} and outside it.
    auto separated = [&](int a, int b) {
        for (const auto& block : p.blocks()) {
            bool inside = false, outside = false;
            for (int x : block) {
                (x >= a && x < b ? inside : outside) = true;
            }
            if (inside && outside) return true;
        }
        return false;
    };
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            if (!separated(a, b)) parent[find(b)] = find(a);
        }
    }
    std::map<int, Block> groups;
    for (int x = 1; x <= n; ++x) groups[find(x)].push_back(x);
    std::vector<Block> blocks;
    for (auto& [root, block] : groups) blocks.push_back(std::move(block));
    return NonCrossingPartition(n, std::move(blocks));
}

NonCrossingPartition rotate(const NonCrossingPartition& p, int shift) {
    const int n = p.n();
    std::vector<Block> blocks = p.blocks();
    for (auto& b : blocks) {
        for (int& x : b) x = ((x - 1 + shift) % n + n) % n + 1;
    }
    return NonCrossingPartition(n, std::move(blocks));
}

BigInt mobius_nc(const NonCrossingPartition& p) {
    BigInt value = 1;
    const auto complement = kreweras(p);
    for (const auto& block : complement.blocks()) {
        const int m = static_cast<int>(block.size()) - 1;
        value *= catalan(m);
        if (m % 2) value = -value;
    }
    return value;
}

std::map<NonCrossingPartition, BigInt> mobius_table_via_lattice(int n) {
    if (n < 1 || n > kMaxLatticeSize) {
        throw std::out_of_range("lattice Mobius inversion supports 1 <= n <= " +
                                std::to_string(kMaxLatticeSize));
    }
    auto lattice = enumerate_nc(n);
    std::stable_sort(lattice.begin(), lattice.end(), [](const auto& a, const auto& b) {
        return a.block_count() < b.block_count();
    });
    // lattice[0] is 1_n; anything strictly above q has fewer blocks and comes earlier.
    std::vector<BigInt> mu(lattice.size());
    for (std::size_t q = 0; q < lattice.size(); ++q) {
        if (q == 0) {
            mu[q] = 1;
            continue;
        }
        BigInt sum = 0;
        for (std::size_t r = 0; r < lattice.size(); ++r) {
            if (lattice[r].block_count() >= lattice[q].block_count()) break;
            if (lattice[q].partition().refines(lattice[r].partition())) sum += mu[r];
        }
        mu[q] = -sum;
    }
    std::map<NonCrossingPartition, BigInt> table;
    for (std::size_t q = 0; q < lattice.size(); ++q) table.emplace(lattice[q], mu[q]);
    return table;
}

BigInt mobius_via_lattice(const NonCrossingPartition& p) {
    return mobius_table_via_lattice(p.n()).at(p);
}

BigInt catalan(int n) {
    if (n < 0) throw std::out_of_range("catalan index must be non-negative");
    BigInt c = 1;
    for (int k = 0; k < n; ++k) {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
}

BigInt small_schroeder(int n) {
    if (n < 1) throw std::out_of_range("small Schroeder index must be positive");
    if (n <= 2) return 1;
    // (m+1) s_{m+1} = 3(2m-1) s_m - (m-2) s_{m-1}
    BigInt prev = 1, cur = 1;
    for (int m = 2; m < n; ++m) {
        BigInt next = (3 * (2 * m - 1) * cur - (m - 2) * prev) / (m + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace qssep
