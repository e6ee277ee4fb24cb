#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quiverrep/field.hpp"

namespace quiverrep {

/// Dense matrix over an exact field.  Matrices act on coordinate columns;
/// composition multiplies in the usual order (psi * phi applies phi first).
///
/// All elimination-based operations pivot on the leftmost nonzero column,
/// topmost nonzero row, so output bases are deterministic functions of the
/// input.  Zero-row and zero-column shapes are legal everywhere.
class Matrix {
public:
    Matrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& value);
    void set_int(std::size_t r, std::size_t c, long long value);

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    Matrix pow(std::size_t e) const;

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }
    bool is_zero() const;
    bool is_identity() const;

    /// Columns picked from this matrix / stacked blocks.
    Matrix columns(const std::vector<std::size_t>& idx) const;
    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix block_diag(const std::vector<Matrix>& blocks, const Field& f);

    std::size_t rank() const;

    /// Reduced row echelon form; pivot column indices optionally reported.
    Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

    /// Columns form a basis of { x : M x = 0 }; column count = cols - rank.
    Matrix kernel_basis() const;

    /// The columns of M at the leftmost independent positions; spans im M.
    Matrix image_basis() const;

    /// C with C*M = 0, C of full row rank (rows - rank of them); C is
    /// surjective onto the cokernel coordinates.
    Matrix cokernel_projection() const;

    /// Some X with M X = B, or nullopt when the system is inconsistent.
    std::optional<Matrix> solve(const Matrix& rhs) const;

    std::optional<Matrix> inverse() const;
    bool is_invertible() const;

    /// Monic minimal polynomial, little-endian coefficient list.
    std::vector<Scalar> minimal_polynomial() const;

    Scalar trace() const;

    std::string to_string() const;

private:
    void require_same_field(const Matrix& other) const;
    std::size_t idx(std::size_t r, std::size_t c) const { return r * cols_ + c; }

    Field field_;
    std::size_t rows_, cols_;
    std::vector<mpq_class> q_;      // payload when rationals
    std::vector<std::int64_t> m_;   // payload when prime field
};

/// Applies a polynomial (little-endian coefficients) to a square matrix.
Matrix poly_eval_matrix(const std::vector<Scalar>& poly, const Matrix& m);

} // namespace quiverrep
