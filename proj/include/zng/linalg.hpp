#pragma once

/**
 * @file linalg.hpp
 * @brief Dense matrices and unit-pivot Gaussian elimination over finite local rings.
 *
 * A Ring context provides value_type, zero(), one(), add, sub, mul, neg,
 * is_zero, is_unit, inverse and equal. Both Zmod and GaloisRing qualify.
 * Over a local ring an element is invertible iff it is a unit modulo the
 * maximal ideal, so elimination only ever pivots on unit entries; a column
 * without a unit candidate means the columns are dependent modulo p.
 */

#include <zng/error.hpp>
#include <zng/ring_core.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace zng {

template <class Ring>
concept LocalRing = requires(const Ring& R, typename Ring::value_type a) {
    { R.zero() };
    { R.one() };
    { R.add(a, a) };
    { R.sub(a, a) };
    { R.mul(a, a) };
    { R.neg(a) };
    { R.is_zero(a) } -> std::convertible_to<bool>;
    { R.is_unit(a) } -> std::convertible_to<bool>;
    { R.inverse(a) };
    { R.equal(a, a) } -> std::convertible_to<bool>;
};

/// Row-major dense matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

template <LocalRing Ring>
Matrix<typename Ring::value_type> identity_matrix(const Ring& R, std::size_t n) {
    Matrix<typename Ring::value_type> out(n, n, R.zero());
    for (std::size_t i = 0; i < n; ++i) out(i, i) = R.one();
    return out;
}

template <LocalRing Ring>
Matrix<typename Ring::value_type> matmul(const Ring& R, const Matrix<typename Ring::value_type>& a,
                                         const Matrix<typename Ring::value_type>& b) {
    if (a.cols() != b.rows()) throw precondition_error("matmul: shape mismatch");
    Matrix<typename Ring::value_type> out(a.rows(), b.cols(), R.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (R.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = R.add(out(i, j), R.mul(a(i, k), b(k, j)));
        }
    return out;
}

template <LocalRing Ring>
bool matrices_equal(const Ring& R, const Matrix<typename Ring::value_type>& a,
                    const Matrix<typename Ring::value_type>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!R.equal(a(i, j), b(i, j))) return false;
    return true;
}

/// Solve A x = b where the columns of A form a basis of a free direct summand.
/// Throws singular_system when some column has no unit pivot, and
/// precondition_error when b is not in the column span.
template <LocalRing Ring>
std::vector<typename Ring::value_type> solve_unit_pivot(const Ring& R, Matrix<typename Ring::value_type> A,
                                                        std::vector<typename Ring::value_type> b) {
    const std::size_t rows = A.rows(), cols = A.cols();
    if (b.size() != rows) throw precondition_error("solve_unit_pivot: rhs length mismatch");
    std::vector<std::size_t> pivot_row(cols);
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::optional<std::size_t> found;
        for (std::size_t i = next; i < rows; ++i)
            if (R.is_unit(A(i, c))) {
                found = i;
                break;
            }
        if (!found) throw singular_system("no unit pivot in column " + std::to_string(c));
        A.swap_rows(next, *found);
        std::swap(b[next], b[*found]);
        const auto inv = R.inverse(A(next, c));
        for (std::size_t j = 0; j < cols; ++j) A(next, j) = R.mul(inv, A(next, j));
        b[next] = R.mul(inv, b[next]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == next || R.is_zero(A(i, c))) continue;
            const auto f = A(i, c);
            for (std::size_t j = 0; j < cols; ++j) A(i, j) = R.sub(A(i, j), R.mul(f, A(next, j)));
            b[i] = R.sub(b[i], R.mul(f, b[next]));
        }
        pivot_row[c] = next++;
    }
    for (std::size_t i = next; i < rows; ++i)
        if (!R.is_zero(b[i])) throw precondition_error("solve_unit_pivot: right-hand side not in the column span");
    std::vector<typename Ring::value_type> x(cols, R.zero());
    for (std::size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]];
    return x;
}

/// Square matrix invertibility (unit determinant) over a local ring.
template <LocalRing Ring>
bool is_invertible(const Ring& R, Matrix<typename Ring::value_type> A) {
    if (A.rows() != A.cols()) return false;
    const std::size_t n = A.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::optional<std::size_t> found;
        for (std::size_t i = c; i < n; ++i)
            if (R.is_unit(A(i, c))) {
                found = i;
                break;
            }
        if (!found) return false;
        A.swap_rows(c, *found);
        const auto inv = R.inverse(A(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (R.is_zero(A(i, c))) continue;
            const auto f = R.mul(A(i, c), inv);
            for (std::size_t j = c; j < n; ++j) A(i, j) = R.sub(A(i, j), R.mul(f, A(c, j)));
        }
    }
    return true;
}

template <LocalRing Ring>
Matrix<typename Ring::value_type> inverse_matrix(const Ring& R, const Matrix<typename Ring::value_type>& A) {
    const std::size_t n = A.rows();
    if (n != A.cols()) throw precondition_error("inverse_matrix: matrix must be square");
    Matrix<typename Ring::value_type> out(n, n, R.zero());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<typename Ring::value_type> e(n, R.zero());
        e[j] = R.one();
        auto col = solve_unit_pivot(R, A, std::move(e));
        for (std::size_t i = 0; i < n; ++i) out(i, j) = col[i];
    }
    return out;
}

/// Rank over the prime field F_p of integer vectors (entries reduced mod p).
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    auto inv = [p](std::int64_t a) {
        std::int64_t r = 1, base = a % p, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    for (auto& row : rows)
        for (auto& v : row) v = ((v % p) + p) % p;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const std::int64_t iv = inv(rows[rank][c]);
        for (auto& v : rows[rank]) v = v * iv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            const std::int64_t f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Basis of the right kernel {v : A v = 0} over F_p.
inline std::vector<std::vector<std::int64_t>> nullspace_mod_p(const Matrix<std::int64_t>& A, std::int64_t p) {
    const std::size_t rows = A.rows(), cols = A.cols();
    Zmod F(p, 1);
    Matrix<std::int64_t> M(rows, cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = F.reduce(A(i, j));
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && M(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        M.swap_rows(piv, rank);
        const auto iv = F.inverse(M(rank, c));
        for (std::size_t j = 0; j < cols; ++j) M(rank, j) = F.mul(M(rank, j), iv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || M(i, c) == 0) continue;
            const auto f = M(i, c);
            for (std::size_t j = 0; j < cols; ++j) M(i, j) = F.sub(M(i, j), F.mul(f, M(rank, j)));
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::int64_t> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = F.neg(M(i, f));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace zng
