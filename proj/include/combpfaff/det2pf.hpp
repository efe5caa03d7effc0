#pragma once

#include "combpfaff/matrix.hpp"
#include "combpfaff/report.hpp"

#include <string>
#include <vector>

namespace combpfaff {

// An A x B table of ring values C~_1 over a finite ordered B. The k x k
// minors *define* C~_k, and R~_k sums those minors over strictly increasing
// column tuples; the determinant-to-Pfaffian principle says the R~_k then
// satisfy the Pfaffian relation for even k.
class MinorFamily {
public:
    MinorFamily(std::vector<std::string> a_labels, std::vector<std::string> b_labels);
    explicit MinorFamily(RingMatrix table);

    std::size_t a_size() const { return table_.rows(); }
    std::size_t b_size() const { return table_.cols(); }
    const RingMatrix& table() const { return table_; }

    void set(std::size_t a, std::size_t b, RationalFunction value);
    const RationalFunction& at(std::size_t a, std::size_t b) const;

    // det of the selected minor; 1 for k = 0. Indices are positions into the
    // A and B lists; out-of-range positions raise IndexOutOfFamily.
    RationalFunction ctilde_k(const std::vector<int>& a, const std::vector<int>& b) const;

    // Sum of C~_k over strictly increasing B-tuples; 1 for k = 0 and 0 when
    // k exceeds |B| (the empty sum).
    RationalFunction rtilde_k(const std::vector<int>& a) const;

    // Skew matrix with upper entries R~_2(a_i, a_j).
    SkewMatrix rtilde2_matrix(const std::vector<int>& a) const;

private:
    RingMatrix table_;
    void check_positions(const std::vector<int>& idx, std::size_t bound) const;
};

// The D*M*D^T proof construction: D_{ib} = C~_1(a_i, b), M the all-ones-above
// skew matrix over B. The product is skew-symmetric, entrywise equal to
// R~_2(a_i, a_j), and its Pfaffian equals R~_k(a).
RingMatrix dmd_construction(const MinorFamily& fam, const std::vector<int>& a);

// Checks R~_k(a) = Pf(R~_2(a_i,a_j)) for even |a|.
VerificationReport pfaffian_principle_check(const MinorFamily& fam,
                                            const std::vector<int>& a);

// Checks the minor summation identity
//   Pf(D M D^T) = sum over column subsets J of Pf(M_J) det(D_J)
// for a k x m matrix D (k even) and skew m x m matrix M.
VerificationReport minor_summation_check(const RingMatrix& d, const SkewMatrix& m);

// Pf of the n x n skew matrix with all above-diagonal entries 1:
// 1 for even n (including n = 0), 0 for odd n.
RationalFunction allones_pfaffian(std::size_t n);

}  // namespace combpfaff
