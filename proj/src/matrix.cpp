#include "quiverrep/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "quiverrep/poly.hpp"

namespace quiverrep {

namespace {

// Element policies for the shared elimination kernels.

struct QOps {
    using T = mpq_class;
    static T zero() { return mpq_class(0); }
    static T one() { return mpq_class(1); }
    static bool is_zero(const T& a) { return a == 0; }
    static T add(const T& a, const T& b) { return a + b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T neg(const T& a) { return -a; }
    static T inv(const T& a) { return 1 / a; }
};

struct POps {
    std::int64_t p;
    using T = std::int64_t;
    T zero() const { return 0; }
    T one() const { return 1 % p; }
    bool is_zero(const T& a) const { return a == 0; }
    T add(const T& a, const T& b) const { return (a + b) % p; }
    T sub(const T& a, const T& b) const {
        T v = (a - b) % p;
        return v < 0 ? v + p : v;
    }
    T mul(const T& a, const T& b) const { return static_cast<T>((__int128)a * b % p); }
    T neg(const T& a) const { return a == 0 ? 0 : p - a; }
    T inv(const T& a) const { return inv_mod(a, p); }
};

// In-place Gauss-Jordan on a rows x cols grid; returns pivot columns.
// Pivots: leftmost nonzero column, topmost nonzero row.
template <class Ops>
std::vector<std::size_t> rref_in_place(const Ops& ops, typename Ops::T* a,
                                       std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && ops.is_zero(a[piv * cols + col])) ++piv;
        if (piv == rows) continue;
        if (piv != row)
            for (std::size_t c = col; c < cols; ++c) std::swap(a[row * cols + c], a[piv * cols + c]);
        const auto pinv = ops.inv(a[row * cols + col]);
        for (std::size_t c = col; c < cols; ++c) a[row * cols + c] = ops.mul(a[row * cols + c], pinv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row) continue;
            const auto f = a[r * cols + col];
            if (ops.is_zero(f)) continue;
            a[r * cols + col] = ops.zero();
            for (std::size_t c = col + 1; c < cols; ++c) {
                if (!ops.is_zero(a[row * cols + c]))
                    a[r * cols + c] = ops.sub(a[r * cols + c], ops.mul(f, a[row * cols + c]));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Ops>
std::vector<typename Ops::T> matmul(const Ops& ops, const typename Ops::T* a, std::size_t ar,
                                    std::size_t ac, const typename Ops::T* b, std::size_t bc) {
    std::vector<typename Ops::T> out(ar * bc, ops.zero());
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t k = 0; k < ac; ++k) {
            const auto& f = a[i * ac + k];
            if (ops.is_zero(f)) continue;
            for (std::size_t j = 0; j < bc; ++j)
                if (!ops.is_zero(b[k * bc + j]))
                    out[i * bc + j] = ops.add(out[i * bc + j], ops.mul(f, b[k * bc + j]));
        }
    return out;
}

struct QOpsState {
    using T = mpq_class;
    T zero() const { return QOps::zero(); }
    T one() const { return QOps::one(); }
    bool is_zero(const T& a) const { return QOps::is_zero(a); }
    T add(const T& a, const T& b) const { return QOps::add(a, b); }
    T sub(const T& a, const T& b) const { return QOps::sub(a, b); }
    T mul(const T& a, const T& b) const { return QOps::mul(a, b); }
    T neg(const T& a) const { return QOps::neg(a); }
    T inv(const T& a) const { return QOps::inv(a); }
};

} // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
    if (field_.is_rationals())
        q_.assign(rows * cols, mpq_class(0));
    else
        m_.assign(rows * cols, 0);
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, i, Scalar::one(f));
    return out;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size(), c = r == 0 ? 0 : rows[0].size();
    Matrix out(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw validation_error("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) out.set(i, j, rows[i][j]);
    }
    return out;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size(), c = r == 0 ? 0 : rows[0].size();
    Matrix out(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw validation_error("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) out.set_int(i, j, rows[i][j]);
    }
    return out;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw validation_error("matrix index out of range");
    if (field_.is_rationals()) return Scalar::of_mpq(q_[idx(r, c)]);
    return Scalar::of_residue(field_, m_[idx(r, c)]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
    if (r >= rows_ || c >= cols_) throw validation_error("matrix index out of range");
    if (!(value.field() == field_)) throw validation_error("scalar/matrix field mismatch");
    if (field_.is_rationals())
        q_[idx(r, c)] = value.rat();
    else
        m_[idx(r, c)] = value.residue();
}

void Matrix::set_int(std::size_t r, std::size_t c, long long value) {
    set(r, c, Scalar::of_int(field_, value));
}

void Matrix::require_same_field(const Matrix& other) const {
    if (!(field_ == other.field_))
        throw validation_error("matrix field mismatch: " + field_.to_string() + " vs " +
                               other.field_.to_string());
}

Matrix Matrix::operator+(const Matrix& other) const {
    require_same_field(other);
    if (rows_ != other.rows_ || cols_ != other.cols_) throw validation_error("shape mismatch in +");
    Matrix out(field_, rows_, cols_);
    if (field_.is_rationals())
        for (std::size_t i = 0; i < q_.size(); ++i) out.q_[i] = q_[i] + other.q_[i];
    else {
        std::int64_t p = field_.prime();
        for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] = (m_[i] + other.m_[i]) % p;
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + (-other); }

Matrix Matrix::operator-() const {
    Matrix out(field_, rows_, cols_);
    if (field_.is_rationals())
        for (std::size_t i = 0; i < q_.size(); ++i) out.q_[i] = -q_[i];
    else {
        std::int64_t p = field_.prime();
        for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] = m_[i] == 0 ? 0 : p - m_[i];
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    require_same_field(other);
    if (cols_ != other.rows_)
        throw validation_error("shape mismatch in *: " + std::to_string(cols_) + " vs " +
                               std::to_string(other.rows_));
    Matrix out(field_, rows_, other.cols_);
    if (field_.is_rationals())
        out.q_ = matmul(QOpsState{}, q_.data(), rows_, cols_, other.q_.data(), other.cols_);
    else
        out.m_ = matmul(POps{field_.prime()}, m_.data(), rows_, cols_, other.m_.data(), other.cols_);
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j) * c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (field_.is_rationals())
                out.q_[j * rows_ + i] = q_[idx(i, j)];
            else
                out.m_[j * rows_ + i] = m_[idx(i, j)];
        }
    return out;
}

Matrix Matrix::pow(std::size_t e) const {
    if (rows_ != cols_) throw validation_error("pow on non-square matrix");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return result;
}

bool Matrix::operator==(const Matrix& other) const {
    if (!(field_ == other.field_) || rows_ != other.rows_ || cols_ != other.cols_) return false;
    return field_.is_rationals() ? q_ == other.q_ : m_ == other.m_;
}

bool Matrix::is_zero() const {
    if (field_.is_rationals())
        return std::all_of(q_.begin(), q_.end(), [](const mpq_class& v) { return v == 0; });
    return std::all_of(m_.begin(), m_.end(), [](std::int64_t v) { return v == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

Matrix Matrix::columns(const std::vector<std::size_t>& which) const {
    Matrix out(field_, rows_, which.size());
    for (std::size_t j = 0; j < which.size(); ++j) {
        if (which[j] >= cols_) throw validation_error("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out.set(i, j, at(i, which[j]));
    }
    return out;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
    if (r0 + h > rows_ || c0 + w > cols_) throw validation_error("submatrix out of range");
    Matrix out(field_, h, w);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) out.set(i, j, at(r0 + i, c0 + j));
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    a.require_same_field(b);
    if (a.rows_ != b.rows_) throw validation_error("hstack row mismatch");
    Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) out.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols_; ++j) out.set(i, a.cols_ + j, b.at(i, j));
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    a.require_same_field(b);
    if (a.cols_ != b.cols_) throw validation_error("vstack column mismatch");
    Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out.set(a.rows_ + i, j, b.at(i, j));
    return out;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks, const Field& f) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix out(f, rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out.set(r0 + i, c0 + j, b.at(i, j));
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_cols) const {
    Matrix out = *this;
    std::vector<std::size_t> pivots;
    if (field_.is_rationals())
        pivots = rref_in_place(QOpsState{}, out.q_.data(), rows_, cols_);
    else
        pivots = rref_in_place(POps{field_.prime()}, out.m_.data(), rows_, cols_);
    if (pivot_cols) *pivot_cols = pivots;
    return out;
}

std::size_t Matrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

Matrix Matrix::kernel_basis() const {
    std::vector<std::size_t> pivots;
    Matrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix out(field_, cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        out.set(f, k, Scalar::one(field_));
        for (std::size_t i = 0; i < pivots.size(); ++i)
            out.set(pivots[i], k, -r.at(i, f));
    }
    return out;
}

Matrix Matrix::image_basis() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return columns(pivots);
}

Matrix Matrix::cokernel_projection() const {
    return transpose().kernel_basis().transpose();
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    require_same_field(rhs);
    if (rhs.rows_ != rows_)
        throw validation_error("solve: rhs has " + std::to_string(rhs.rows_) + " rows, expected " +
                               std::to_string(rows_));
    Matrix aug = hstack(*this, rhs);
    std::vector<std::size_t> pivots;
    Matrix r = aug.rref(&pivots);
    for (auto c : pivots)
        if (c >= cols_) return std::nullopt;
    Matrix x(field_, cols_, rhs.cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j) x.set(pivots[i], j, r.at(i, cols_ + j));
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(field_, rows_));
    if (!x) return std::nullopt;
    if (!((*x) * (*this)).is_identity()) return std::nullopt;
    return x;
}

bool Matrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw validation_error("trace of non-square matrix");
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

std::vector<Scalar> Matrix::minimal_polynomial() const {
    if (rows_ != cols_) throw validation_error("minimal polynomial of non-square matrix");
    const std::size_t n = rows_;
    Poly result{Scalar::one(field_)}; // constant 1
    if (n == 0) return result;

    // Krylov iteration per standard basis vector; lcm of relation polynomials.
    for (std::size_t start = 0; start < n; ++start) {
        if (poly_degree(result) == static_cast<long>(n)) break;
        // Columns: v, Mv, M^2 v, ... until linearly dependent.
        Matrix kry(field_, n, 0);
        Matrix v(field_, n, 1);
        v.set(start, 0, Scalar::one(field_));
        Poly rel;
        for (std::size_t step = 0;; ++step) {
            auto coeffs = kry.solve(v);
            if (coeffs && step > 0) {
                rel.assign(step + 1, Scalar::zero(field_));
                for (std::size_t i = 0; i < step; ++i) rel[i] = -coeffs->at(i, 0);
                rel[step] = Scalar::one(field_);
                break;
            }
            if (step == 0 && v.is_zero()) {
                rel = {Scalar::one(field_)};
                break;
            }
            kry = Matrix::hstack(kry, v);
            v = (*this) * v;
        }
        result = poly_lcm(result, rel);
    }
    return result;
}

Matrix poly_eval_matrix(const std::vector<Scalar>& poly, const Matrix& m) {
    if (m.rows() != m.cols()) throw validation_error("poly_eval_matrix needs a square matrix");
    Matrix acc(m.field(), m.rows(), m.rows());
    // Horner
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < m.rows(); ++d) acc.set(d, d, acc.at(d, d) + poly[i]);
    }
    return acc;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace quiverrep
