#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nkstar {

// Parameters of an (n,k)-star graph: vertices are k-permutations of {1..n}.
// k == n-1 gives the classical star graph, k == 1 the complete graph K_n.
struct GraphSpec {
    int n = 0;
    int k = 0;

    bool operator==(const GraphSpec&) const = default;
};

// Throws std::invalid_argument naming the violated bound.
// Bounds: 2 <= n <= 20 (ranking arithmetic stays in uint64), 1 <= k <= n-1.
void validate_spec(const GraphSpec& spec);

// A k-permutation of {1..n}: pairwise distinct symbols, 1-based.
struct PermLabel {
    std::vector<int> symbols;

    bool operator==(const PermLabel&) const = default;
    int size() const { return static_cast<int>(symbols.size()); }
    int operator[](int pos) const { return symbols[pos]; }
};

// Throws std::invalid_argument if label is not a k-permutation of {1..n}.
void validate_label(const PermLabel& label, const GraphSpec& spec);

// Number of k-permutations of an n-set: n!/(n-k)!. Requires validated spec.
std::uint64_t num_vertices(const GraphSpec& spec);

// Lexicographic rank of a label among all k-permutations of {1..n}, 0-based.
// rank and unrank are mutually inverse; both validate their inputs.
std::uint64_t rank(const PermLabel& label, const GraphSpec& spec);
PermLabel unrank(std::uint64_t index, const GraphSpec& spec);

// Text form: symbols concatenated when n <= 9 ("123"), comma-separated
// otherwise ("10,2,3"). parse_label accepts either and validates.
std::string format_label(const PermLabel& label, const GraphSpec& spec);
PermLabel parse_label(const std::string& text, const GraphSpec& spec);

}  // namespace nkstar
