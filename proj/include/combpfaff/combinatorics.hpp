#pragma once

#include <utility>
#include <vector>

namespace combpfaff {

// A bijection on {0..k-1} together with its parity.
struct Permutation {
    std::vector<int> images;
    int sign = 1;  // (-1)^(inversion count)
};

// All k! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int k);

int permutation_sign(const std::vector<int>& images);

// A partition of {0..2n-1} into unordered pairs, each stored (low, high).
struct PerfectMatching {
    std::vector<std::pair<int, int>> pairs;

    // Pairs {i,j} and {k,l} with i<k<j<l cross.
    int crossing_count() const;
};

// All perfect matchings of {0..n-1}; empty for odd n, one empty matching for n=0.
std::vector<PerfectMatching> perfect_matchings(int n);

// All strictly increasing k-tuples of {0..n-1}, in lexicographic order.
std::vector<std::vector<int>> increasing_tuples(int n, int k);

}  // namespace combpfaff
