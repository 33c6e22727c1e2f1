#include "torelli/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "torelli/errors.hpp"

namespace torelli {

Int add_checked(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition overflow");
    return r;
}

Int mul_checked(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication overflow");
    return r;
}

namespace {
Int fma_checked(Int acc, Int a, Int b) { return add_checked(acc, mul_checked(a, b)); }

// floor division
Int fdiv(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
}  // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, int cols) {
    if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& cols, int rows) {
    if (rows < 0) rows = cols.empty() ? 0 : static_cast<int>(cols[0].size());
    IntMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

std::vector<Int> IntMatrix::row(int i) const {
    return std::vector<Int>(data_.begin() + static_cast<long>(i) * cols_, data_.begin() + static_cast<long>(i + 1) * cols_);
}

std::vector<Int> IntMatrix::column(int j) const {
    std::vector<Int> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorCode::PreconditionFailed, "matrix shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Int a = (*this)(i, k);
            if (!a) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) = fma_checked(r(i, j), a, o(k, j));
        }
    return r;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
    if (cols_ != static_cast<int>(v.size())) throw Error(ErrorCode::PreconditionFailed, "vector shape mismatch");
    std::vector<Int> r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] = fma_checked(r[i], (*this)(i, j), v[j]);
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    IntMatrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = add_checked(data_[i], -o.data_[i]);
    return r;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Int x) { return x == 0; });
}

Int IntMatrix::trace() const {
    Int t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t = add_checked(t, (*this)(i, i));
    return t;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(int target, int source, Int f) {
    if (!f) return;
    for (int j = 0; j < cols_; ++j) (*this)(target, j) = fma_checked((*this)(target, j), f, (*this)(source, j));
}

void IntMatrix::add_col(int target, int source, Int f) {
    if (!f) return;
    for (int i = 0; i < rows_; ++i) (*this)(i, target) = fma_checked((*this)(i, target), f, (*this)(i, source));
}

void IntMatrix::negate_row(int i) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(int j) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
    std::vector<std::vector<Int>> out;
    for (int i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << '[';
        for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
        out << "]\n";
    }
    return out.str();
}

Echelon row_echelon(const IntMatrix& gens) {
    IntMatrix a = gens;
    const int R = a.rows(), C = a.cols();
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < C && r < R; ++c) {
        // gcd-reduce column c among rows r..R-1
        while (true) {
            int best = -1;
            for (int i = r; i < R; ++i)
                if (a(i, c) != 0 && (best < 0 || std::llabs(a(i, c)) < std::llabs(a(best, c)))) best = i;
            if (best < 0) break;
            a.swap_rows(r, best);
            bool done = true;
            for (int i = r + 1; i < R; ++i) {
                if (a(i, c) == 0) continue;
                a.add_row(i, r, -fdiv(a(i, c), a(r, c)));
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0) a.negate_row(r);
        for (int i = 0; i < r; ++i) a.add_row(i, r, -fdiv(a(i, c), a(r, c)));
        pivots.push_back(c);
        ++r;
    }
    Echelon e;
    e.basis = IntMatrix(r, C);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < C; ++j) e.basis(i, j) = a(i, j);
    e.pivots = pivots;
    return e;
}

std::optional<std::vector<Int>> solve_in(const Echelon& e, const std::vector<Int>& v0) {
    std::vector<Int> v = v0;
    std::vector<Int> coeff(e.rank(), 0);
    for (int i = 0; i < e.rank(); ++i) {
        int p = e.pivots[i];
        Int piv = e.basis(i, p);
        if (v[p] % piv != 0) return std::nullopt;
        Int c = v[p] / piv;
        coeff[i] = c;
        if (!c) continue;
        for (int j = p; j < e.basis.cols(); ++j) v[j] = fma_checked(v[j], -c, e.basis(i, j));
    }
    for (Int x : v)
        if (x != 0) return std::nullopt;
    return coeff;
}

Smith smith_normal_form(const IntMatrix& a0) {
    Smith s;
    s.D = a0;
    IntMatrix& d = s.D;
    const int R = d.rows(), C = d.cols();
    s.U = IntMatrix::identity(R);
    s.V = IntMatrix::identity(C);
    int t = 0;
    for (; t < std::min(R, C); ++t) {
        while (true) {
            int bi = -1, bj = -1;
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j)
                    if (d(i, j) != 0 && (bi < 0 || std::llabs(d(i, j)) < std::llabs(d(bi, bj)))) bi = i, bj = j;
            if (bi < 0) goto finished;
            d.swap_rows(t, bi);
            s.U.swap_rows(t, bi);
            d.swap_cols(t, bj);
            s.V.swap_cols(t, bj);
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                Int q = fdiv(d(i, t), d(t, t));
                d.add_row(i, t, -q);
                s.U.add_row(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < C; ++j) {
                Int q = fdiv(d(t, j), d(t, t));
                d.add_col(j, t, -q);
                s.V.add_col(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the remaining block
            int bad = -1;
            for (int i = t + 1; i < R && bad < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            d.add_row(t, bad, 1);
            s.U.add_row(t, bad, 1);
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            s.U.negate_row(t);
        }
        s.diagonal.push_back(d(t, t));
    }
finished:
    return s;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::PreconditionFailed, "determinant of a non-square matrix");
    // Bareiss fraction-free elimination
    IntMatrix m = a;
    const int n = m.rows();
    Int sign = 1, prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) p = i;
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = add_checked(mul_checked(m(i, j), m(k, k)), -mul_checked(m(i, k), m(k, j))) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::PreconditionFailed, "inverse of a non-square matrix");
    Smith s = smith_normal_form(a);
    if (s.rank() != a.rows() || s.diagonal.back() != 1) throw Error(ErrorCode::PreconditionFailed, "matrix is not unimodular");
    // U A V = I  =>  A^{-1} = V U
    return s.V * s.U;
}

IntMatrix standard_symplectic(int h) {
    IntMatrix j(2 * h, 2 * h);
    for (int i = 0; i < h; ++i) {
        j(2 * i, 2 * i + 1) = 1;
        j(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

bool is_antisymmetric(const IntMatrix& j) {
    if (j.rows() != j.cols()) return false;
    for (int a = 0; a < j.rows(); ++a)
        for (int b = 0; b < j.cols(); ++b)
            if (j(a, b) != -j(b, a)) return false;
    return true;
}

IntMatrix symplectic_basis(const IntMatrix& j0) {
    if (!is_antisymmetric(j0) || j0.rows() % 2 != 0) throw Error(ErrorCode::PreconditionFailed, "form is not antisymmetric of even rank");
    IntMatrix j = j0;
    const int n = j.rows();
    IntMatrix u = IntMatrix::identity(n);
    // e_k <- e_k + c e_src as a congruence
    auto add = [&](int k, int src, Int c) {
        j.add_col(k, src, c);
        j.add_row(k, src, c);
        u.add_col(k, src, c);
    };
    auto swap = [&](int a, int b) {
        j.swap_cols(a, b);
        j.swap_rows(a, b);
        u.swap_cols(a, b);
    };
    for (int t = 0; t < n; t += 2) {
        while (true) {
            int bi = -1, bj = -1;
            for (int a = t; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (j(a, b) != 0 && (bi < 0 || std::llabs(j(a, b)) < std::llabs(j(bi, bj)))) bi = a, bj = b;
            if (bi < 0) throw Error(ErrorCode::PreconditionFailed, "form is degenerate");
            swap(t, bi);
            swap(t + 1, bj == t ? bi : bj);
            Int p = j(t, t + 1);
            bool clean = true;
            for (int k = t + 2; k < n; ++k) {
                add(k, t + 1, -fdiv(j(t, k), p));
                add(k, t, fdiv(j(t + 1, k), p));
                if (j(t, k) != 0 || j(t + 1, k) != 0) clean = false;
            }
            if (clean) break;
        }
        if (j(t, t + 1) < 0) {
            u.negate_col(t + 1);
            j.negate_col(t + 1);
            j.negate_row(t + 1);
        }
        if (j(t, t + 1) != 1) throw Error(ErrorCode::PreconditionFailed, "form is not unimodular");
    }
    return u;
}

}  // namespace torelli
