#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace torelli {

using Int = std::int64_t;

// Overflow-checked arithmetic; throws Error(Overflow).
Int add_checked(Int a, Int b);
Int mul_checked(Int a, Int b);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, int cols = -1);
    static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols, int rows = -1);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    Int operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<Int> row(int i) const;
    std::vector<Int> column(int j) const;
    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    IntMatrix operator-(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
    bool is_identity() const;
    bool is_zero() const;
    Int trace() const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void add_row(int target, int source, Int factor);  // row target += factor * row source
    void add_col(int target, int source, Int factor);
    void negate_row(int i);
    void negate_col(int j);

    std::vector<std::vector<Int>> to_rows() const;
    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// Row-echelon basis of the lattice spanned by the rows, with positive
// pivots and entries above each pivot reduced into [0, pivot).
struct Echelon {
    IntMatrix basis;
    std::vector<int> pivots;
    int rank() const { return basis.rows(); }
};

Echelon row_echelon(const IntMatrix& generators);
// Coefficients c with c * basis = v, if v lies in the lattice.
std::optional<std::vector<Int>> solve_in(const Echelon& e, const std::vector<Int>& v);
inline bool in_lattice(const Echelon& e, const std::vector<Int>& v) { return solve_in(e, v).has_value(); }

// U * A * V = D, D diagonal with d_1 | d_2 | ... positive.
struct Smith {
    IntMatrix U, D, V;
    std::vector<Int> diagonal;  // nonzero invariant factors
    int rank() const { return static_cast<int>(diagonal.size()); }
};

Smith smith_normal_form(const IntMatrix& a);
IntMatrix inverse_unimodular(const IntMatrix& a);
Int determinant(const IntMatrix& a);

// Standard symplectic form on 2h coordinates ordered x1, y1, x2, y2, ...
IntMatrix standard_symplectic(int h);
bool is_antisymmetric(const IntMatrix& j);
// U with U^T J U = standard form; throws PreconditionFailed unless J is
// antisymmetric and unimodular.
IntMatrix symplectic_basis(const IntMatrix& j);

}  // namespace torelli
