#pragma once

#include "combpfaff/combinatorics.hpp"
#include "combpfaff/rational_function.hpp"

#include <string>
#include <vector>

namespace combpfaff {

// Dense rectangular matrix over the rational-function field, with labelled
// rows and columns. Submatrix extraction preserves the labels.
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(std::size_t rows, std::size_t cols);
    RingMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

    static RingMatrix identity(std::size_t n);

    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    const RationalFunction& at(std::size_t i, std::size_t j) const;
    RationalFunction& at(std::size_t i, std::size_t j);

    RingMatrix submatrix(const std::vector<int>& row_indices,
                         const std::vector<int>& col_indices) const;
    RingMatrix transpose() const;

    friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
    friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b);
    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);

    // Entrywise semantic equality (cross-multiplication).
    bool equals(const RingMatrix& other) const;

    std::string str() const;

private:
    std::vector<std::string> row_labels_, col_labels_;
    std::vector<RationalFunction> entries_;  // row-major
};

// Cofactor expansion memoized on column subsets. Throws NotSquare, and
// MatrixTooLarge above 12x12 (fraction-free elimination is a non-goal and
// expansion past that size is hopeless anyway). det of the empty matrix is 1.
RationalFunction determinant(const RingMatrix& m);

// Adjugate over determinant. Throws Singular when det = 0.
RingMatrix matrix_inverse(const RingMatrix& m);

// Skew-symmetric square matrix: only the strictly-upper entries are stored,
// A[i][j] = -A[j][i] and A[i][i] = 0 hold by construction. Odd sizes are
// allowed; their Pfaffian is 0.
class SkewMatrix {
public:
    explicit SkewMatrix(std::size_t n);
    static SkewMatrix all_ones(std::size_t n);

    std::size_t size() const { return n_; }
    RationalFunction at(std::size_t i, std::size_t j) const;  // signed
    const RationalFunction& upper(std::size_t i, std::size_t j) const;  // i < j
    void set_upper(std::size_t i, std::size_t j, RationalFunction value);

    SkewMatrix principal_submatrix(const std::vector<int>& indices) const;
    RingMatrix to_ring_matrix() const;

private:
    std::size_t n_ = 0;
    std::vector<RationalFunction> upper_;  // packed, row-major over i < j
};

// Signed sum over perfect matchings; the sign of a matching is
// (-1)^(crossing count). Returns 0 for odd sizes and 1 for the empty matrix.
RationalFunction pfaffian_matchings(const SkewMatrix& a);

// Expansion along the first row,
//   Pf(A) = sum_{j=2..2n} (-1)^j a_{1j} Pf(A minus rows/cols 1 and j),
// memoized on index subsets. Agrees with pfaffian_matchings on every input.
RationalFunction pfaffian_recursive(const SkewMatrix& a);

}  // namespace combpfaff
