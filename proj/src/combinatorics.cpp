#include "combpfaff/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace combpfaff {

int permutation_sign(const std::vector<int>& images) {
    int inversions = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            if (images[i] > images[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> all_permutations(int k) {
    std::vector<int> images(k);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation{images, permutation_sign(images)});
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

int PerfectMatching::crossing_count() const {
    int crossings = 0;
    for (std::size_t x = 0; x < pairs.size(); ++x) {
        for (std::size_t y = x + 1; y < pairs.size(); ++y) {
            auto [i, j] = pairs[x];
            auto [k, l] = pairs[y];
            if (k < i) {
                std::swap(i, k);
                std::swap(j, l);
            }
            if (i < k && k < j && j < l) ++crossings;
        }
    }
    return crossings;
}

namespace {

void extend_matchings(std::vector<int>& unmatched, PerfectMatching& current,
                      std::vector<PerfectMatching>& out) {
    if (unmatched.empty()) {
        out.push_back(current);
        return;
    }
    int low = unmatched.front();
    for (std::size_t idx = 1; idx < unmatched.size(); ++idx) {
        int partner = unmatched[idx];
        std::vector<int> rest;
        rest.reserve(unmatched.size() - 2);
        for (std::size_t t = 1; t < unmatched.size(); ++t) {
            if (t != idx) rest.push_back(unmatched[t]);
        }
        current.pairs.emplace_back(low, partner);
        extend_matchings(rest, current, out);
        current.pairs.pop_back();
    }
}

}  // namespace

std::vector<PerfectMatching> perfect_matchings(int n) {
    if (n % 2 != 0) return {};
    std::vector<int> unmatched(n);
    std::iota(unmatched.begin(), unmatched.end(), 0);
    std::vector<PerfectMatching> out;
    PerfectMatching current;
    extend_matchings(unmatched, current, out);
    return out;
}

std::vector<std::vector<int>> increasing_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> tuple(k);
    std::iota(tuple.begin(), tuple.end(), 0);
    while (true) {
        out.push_back(tuple);
        int i = k - 1;
        while (i >= 0 && tuple[i] == n - k + i) --i;
        if (i < 0) break;
        ++tuple[i];
        for (int j = i + 1; j < k; ++j) tuple[j] = tuple[j - 1] + 1;
    }
    return out;
}

}  // namespace combpfaff
