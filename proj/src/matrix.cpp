#include "combpfaff/matrix.hpp"

#include "combpfaff/errors.hpp"

#include <bit>
#include <sstream>
#include <unordered_map>

namespace combpfaff {

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    return labels;
}

}  // namespace

RingMatrix::RingMatrix(std::size_t rows, std::size_t cols)
    : RingMatrix(numeric_labels(rows), numeric_labels(cols)) {}

RingMatrix::RingMatrix(std::vector<std::string> row_labels,
                       std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(row_labels_.size() * col_labels_.size()) {}

RingMatrix RingMatrix::identity(std::size_t n) {
    RingMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RationalFunction(1);
    return m;
}

const RationalFunction& RingMatrix::at(std::size_t i, std::size_t j) const {
    return entries_[i * cols() + j];
}

RationalFunction& RingMatrix::at(std::size_t i, std::size_t j) {
    return entries_[i * cols() + j];
}

RingMatrix RingMatrix::submatrix(const std::vector<int>& row_indices,
                                 const std::vector<int>& col_indices) const {
    std::vector<std::string> rl, cl;
    for (int i : row_indices) rl.push_back(row_labels_.at(i));
    for (int j : col_indices) cl.push_back(col_labels_.at(j));
    RingMatrix out(std::move(rl), std::move(cl));
    for (std::size_t i = 0; i < row_indices.size(); ++i) {
        for (std::size_t j = 0; j < col_indices.size(); ++j) {
            out.at(i, j) = at(row_indices[i], col_indices[j]);
        }
    }
    return out;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix out(col_labels_, row_labels_);
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) out.at(j, i) = at(i, j);
    }
    return out;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error("matrix shape mismatch in addition");
    }
    RingMatrix out(a.row_labels_, a.col_labels_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        out.entries_[k] = a.entries_[k] + b.entries_[k];
    }
    return out;
}

RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error("matrix shape mismatch in subtraction");
    }
    RingMatrix out(a.row_labels_, a.col_labels_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        out.entries_[k] = a.entries_[k] - b.entries_[k];
    }
    return out;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix shape mismatch in product");
    RingMatrix out(a.row_labels_, b.col_labels_);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            RationalFunction sum;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                sum += a.at(i, k) * b.at(k, j);
            }
            out.at(i, j) = std::move(sum);
        }
    }
    return out;
}

bool RingMatrix::equals(const RingMatrix& other) const {
    if (rows() != other.rows() || cols() != other.cols()) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (!entries_[k].equals(other.entries_[k])) return false;
    }
    return true;
}

std::string RingMatrix::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows(); ++i) {
        out << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols(); ++j) {
            out << (j == 0 ? "[" : ", ") << at(i, j).str();
        }
        out << "]" << (i + 1 == rows() ? "]" : "\n");
    }
    return out.str();
}

namespace {

constexpr std::size_t kMaxExpansionSize = 12;

class DeterminantExpander {
public:
    explicit DeterminantExpander(const RingMatrix& m) : m_(m), n_(m.rows()) {}

    RationalFunction run() {
        if (n_ == 0) return RationalFunction(1);
        return expand((1u << n_) - 1);
    }

private:
    // mask: columns still unused; current row = n - popcount(mask).
    RationalFunction expand(std::uint32_t mask) {
        int row = static_cast<int>(n_) - std::popcount(mask);
        if (mask == 0) return RationalFunction(1);
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        RationalFunction result;
        int position = 0;
        for (std::size_t col = 0; col < n_; ++col) {
            if (!(mask & (1u << col))) continue;
            const RationalFunction& entry = m_.at(row, col);
            if (!entry.is_zero()) {
                RationalFunction sub = expand(mask & ~(1u << col));
                RationalFunction term = entry * sub;
                if (position % 2 == 0) {
                    result += term;
                } else {
                    result -= term;
                }
            }
            ++position;
        }
        memo_.emplace(mask, result);
        return result;
    }

    const RingMatrix& m_;
    std::size_t n_;
    std::unordered_map<std::uint32_t, RationalFunction> memo_;
};

}  // namespace

RationalFunction determinant(const RingMatrix& m) {
    if (m.rows() != m.cols()) {
        throw NotSquare("determinant of a " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " matrix");
    }
    if (m.rows() > kMaxExpansionSize) {
        throw MatrixTooLarge("determinant expansion is capped at 12x12");
    }
    return DeterminantExpander(m).run();
}

RingMatrix matrix_inverse(const RingMatrix& m) {
    if (m.rows() != m.cols()) {
        throw NotSquare("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    RationalFunction det = determinant(m);
    if (det.is_zero()) throw Singular("matrix is singular");
    RingMatrix out(m.col_labels(), m.row_labels());
    if (n == 0) return out;
    std::vector<int> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int t : all) {
                if (t != static_cast<int>(j)) rows.push_back(t);
            }
            for (int t : all) {
                if (t != static_cast<int>(i)) cols.push_back(t);
            }
            RationalFunction cofactor = determinant(m.submatrix(rows, cols));
            if ((i + j) % 2 == 1) cofactor = -cofactor;
            out.at(i, j) = cofactor / det;
        }
    }
    return out;
}

SkewMatrix::SkewMatrix(std::size_t n) : n_(n), upper_(n * (n - 1) / 2) {}

SkewMatrix SkewMatrix::all_ones(std::size_t n) {
    SkewMatrix m(n);
    for (auto& entry : m.upper_) entry = RationalFunction(1);
    return m;
}

namespace {

std::size_t upper_index(std::size_t n, std::size_t i, std::size_t j) {
    // packed strictly-upper row-major: offset of row i plus (j - i - 1)
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

const RationalFunction& SkewMatrix::upper(std::size_t i, std::size_t j) const {
    return upper_[upper_index(n_, i, j)];
}

void SkewMatrix::set_upper(std::size_t i, std::size_t j, RationalFunction value) {
    upper_[upper_index(n_, i, j)] = std::move(value);
}

RationalFunction SkewMatrix::at(std::size_t i, std::size_t j) const {
    if (i == j) return RationalFunction();
    if (i < j) return upper(i, j);
    return -upper(j, i);
}

SkewMatrix SkewMatrix::principal_submatrix(const std::vector<int>& indices) const {
    SkewMatrix out(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = i + 1; j < indices.size(); ++j) {
            out.set_upper(i, j, at(indices[i], indices[j]));
        }
    }
    return out;
}

RingMatrix SkewMatrix::to_ring_matrix() const {
    RingMatrix out(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) out.at(i, j) = at(i, j);
    }
    return out;
}

RationalFunction pfaffian_matchings(const SkewMatrix& a) {
    const std::size_t n = a.size();
    if (n % 2 != 0) return RationalFunction();
    RationalFunction result;
    for (const PerfectMatching& matching : perfect_matchings(static_cast<int>(n))) {
        RationalFunction product(1);
        for (auto [i, j] : matching.pairs) {
            if (a.upper(i, j).is_zero()) {
                product = RationalFunction();
                break;
            }
            product *= a.upper(i, j);
        }
        if (product.is_zero()) continue;
        if (matching.crossing_count() % 2 == 0) {
            result += product;
        } else {
            result -= product;
        }
    }
    return result;
}

namespace {

class PfaffianExpander {
public:
    explicit PfaffianExpander(const SkewMatrix& a) : a_(a) {}

    RationalFunction run() {
        const std::size_t n = a_.size();
        if (n % 2 != 0) return RationalFunction();
        return expand((n == 0 ? 0u : (1u << n) - 1));
    }

private:
    RationalFunction expand(std::uint32_t mask) {
        if (mask == 0) return RationalFunction(1);
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        std::vector<int> active;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (mask & (1u << i)) active.push_back(static_cast<int>(i));
        }
        int first = active[0];
        RationalFunction result;
        for (std::size_t pos = 1; pos < active.size(); ++pos) {
            int j = active[pos];
            const RationalFunction& entry = a_.upper(first, j);
            if (entry.is_zero()) continue;
            std::uint32_t rest = mask & ~(1u << first) & ~(1u << j);
            RationalFunction term = entry * expand(rest);
            // position is 1-based row index j in the active submatrix, so the
            // paper's (-1)^j sign is + for even positions (pos odd here).
            if (pos % 2 == 1) {
                result += term;
            } else {
                result -= term;
            }
        }
        memo_.emplace(mask, result);
        return result;
    }

    const SkewMatrix& a_;
    std::unordered_map<std::uint32_t, RationalFunction> memo_;
};

}  // namespace

RationalFunction pfaffian_recursive(const SkewMatrix& a) {
    if (a.size() > 2 * kMaxExpansionSize) {
        throw MatrixTooLarge("pfaffian expansion is capped at 24x24");
    }
    return PfaffianExpander(a).run();
}

}  // namespace combpfaff
