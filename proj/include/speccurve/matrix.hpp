#pragma once

#include <optional>
#include <string>
#include <vector>

#include "speccurve/bipoly.hpp"
#include "speccurve/errors.hpp"
#include "speccurve/unipoly.hpp"

namespace speccurve {

inline UniPoly zero_like(const UniPoly& p) { return UniPoly(p.var()); }
inline UniPoly one_like(const UniPoly& p) { return UniPoly(p.var(), 1); }
inline BiPoly zero_like(const BiPoly&) { return BiPoly(); }
inline BiPoly one_like(const BiPoly&) { return BiPoly(Rational(1)); }

// Dense matrix over an exact polynomial ring.
template <class T>
class Matrix {
public:
    Matrix(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows <= 0 || cols <= 0) throw ValidationError("matrix dimensions must be positive");
    }

    static Matrix identity(int n, const T& one) {
        Matrix m(n, n, zero_like(one));
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(int i, int j) { return data_[i * cols_ + j]; }
    const T& at(int i, int j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    Matrix operator+(const Matrix& rhs) const {
        require_same_shape(rhs);
        Matrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + rhs.data_[k];
        return out;
    }

    Matrix operator-(const Matrix& rhs) const {
        require_same_shape(rhs);
        Matrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - rhs.data_[k];
        return out;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw ValidationError("matrix shape mismatch in product");
        Matrix out(rows_, rhs.cols_, zero_like(data_[0]));
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) = out.at(i, j) + a * rhs.at(k, j);
            }
        return out;
    }

    Matrix scaled(const T& f) const {
        Matrix out = *this;
        for (auto& e : out.data_) e = e * f;
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_, zero_like(data_[0]));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    Matrix minor_matrix(int row, int col) const {
        Matrix out(rows_ - 1, cols_ - 1, zero_like(data_[0]));
        for (int i = 0, oi = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (int j = 0, oj = 0; j < cols_; ++j) {
                if (j == col) continue;
                out.at(oi, oj) = at(i, j);
                ++oj;
            }
            ++oi;
        }
        return out;
    }

private:
    void require_same_shape(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw ValidationError("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> data_;
};

using PolyMatrix = Matrix<UniPoly>;
using BiPolyMatrix = Matrix<BiPoly>;

template <class T>
Matrix<T> matrix_pow(const Matrix<T>& m, int k) {
    if (!m.is_square()) throw ValidationError("power of a non-square matrix");
    if (k < 0) throw ValidationError("negative matrix power");
    Matrix<T> acc = Matrix<T>::identity(m.rows(), one_like(m.at(0, 0)));
    for (int i = 0; i < k; ++i) acc = acc * m;
    return acc;
}

template <class T>
T det_cofactor(const Matrix<T>& m) {
    if (!m.is_square()) throw ValidationError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    T acc = zero_like(m.at(0, 0));
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        T sub = det_cofactor(m.minor_matrix(0, j));
        T term = m.at(0, j) * sub;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Fraction-free Gaussian elimination (Bareiss). Every division performed
// is exact in the coefficient ring; row pivoting handles zero pivots.
template <class T>
T det_bareiss(const Matrix<T>& m) {
    if (!m.is_square()) throw ValidationError("determinant of a non-square matrix");
    const int n = m.rows();
    Matrix<T> w = m;
    bool negate = false;
    std::optional<T> prev;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            int r = k + 1;
            while (r < n && w.at(r, k).is_zero()) ++r;
            if (r == n) return zero_like(m.at(0, 0));
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                T num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = prev ? exact_div(num, *prev) : num;
            }
            w.at(i, k) = zero_like(m.at(0, 0));
        }
        prev = w.at(k, k);
    }
    T det = w.at(n - 1, n - 1);
    return negate ? zero_like(det) - det : det;
}

// Cofactor expansion for small matrices, Bareiss beyond.
template <class T>
T det_poly(const Matrix<T>& m) {
    if (!m.is_square()) throw ValidationError("determinant of a non-square matrix");
    return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

// Inverse over the polynomial ring; exists exactly when det is a nonzero
// constant (adjugate divided by the determinant).
inline PolyMatrix inverse_constant_det(const PolyMatrix& m) {
    if (!m.is_square()) throw ValidationError("inverse of a non-square matrix");
    const UniPoly d = det_poly(m);
    if (d.is_zero() || !d.is_constant())
        throw ValidationError("matrix is not invertible over the polynomial ring (det = " + d.str() + ")");
    const Rational inv_det = Rational(1) / d.coeff(0);
    const int n = m.rows();
    PolyMatrix out(n, n, zero_like(m.at(0, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            UniPoly c = n == 1 ? one_like(m.at(0, 0)) : det_poly(m.minor_matrix(j, i));
            if ((i + j) % 2 != 0) c = zero_like(c) - c;
            out.at(i, j) = c * inv_det;
        }
    return out;
}

// det(e*1 - M) as a bivariate polynomial. With eigenvalue_on_y (the
// spectral-curve convention) the matrix variable is substituted by x and
// the eigenvalue rides on y; otherwise the roles flip.
inline BiPoly char_poly(const PolyMatrix& m, bool eigenvalue_on_y = true) {
    if (!m.is_square()) throw ValidationError("characteristic polynomial of a non-square matrix");
    const int n = m.rows();
    BiPolyMatrix w(n, n, BiPoly());
    const BiPoly eig = eigenvalue_on_y ? BiPoly::var_y() : BiPoly::var_x();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BiPoly e = eigenvalue_on_y ? BiPoly::from_unipoly_x(m.at(i, j))
                                       : BiPoly::from_unipoly_y(m.at(i, j));
            w.at(i, j) = (i == j) ? eig - e : -e;
        }
    return det_poly(w);
}

template <class T>
std::string matrix_str(const Matrix<T>& m) {
    std::vector<std::string> cells(m.rows() * m.cols());
    std::vector<std::size_t> width(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            cells[i * m.cols() + j] = m.at(i, j).str();
            width[j] = std::max(width[j], cells[i * m.cols() + j].size());
        }
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        out += "[ ";
        for (int j = 0; j < m.cols(); ++j) {
            const std::string& c = cells[i * m.cols() + j];
            out += c;
            if (j + 1 < m.cols()) out += std::string(width[j] - c.size(), ' ') + ", ";
        }
        out += " ]\n";
    }
    return out;
}

} // namespace speccurve
