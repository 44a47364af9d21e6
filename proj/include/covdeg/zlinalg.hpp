#ifndef COVDEG_ZLINALG_HPP
#define COVDEG_ZLINALG_HPP

#include <vector>

#include "covdeg/common.hpp"

namespace covdeg {

/// Dense integer matrix with exact entries, row-major. Empty matrices
/// (zero rows and/or zero columns) are legal.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {
        if (rows < 0 || cols < 0) throw InvalidInput("IntMatrix: negative dimension");
    }
    IntMatrix(long rows, long cols, std::vector<Int> entries);

    static IntMatrix identity(long n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, long cols);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Int& at(long r, long c) { return a_[static_cast<size_t>(r * cols_ + c)]; }
    const Int& at(long r, long c) const { return a_[static_cast<size_t>(r * cols_ + c)]; }

    std::vector<Int> row(long r) const;

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    IntMatrix operator*(const IntMatrix& o) const;

    void swap_rows(long i, long j);
    void swap_cols(long i, long j);
    void negate_row(long i);
    void negate_col(long i);
    /// row i += q * row j
    void add_row_multiple(long i, long j, const Int& q);
    /// col i += q * col j
    void add_col_multiple(long i, long j, const Int& q);

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// Exact determinant (Bareiss fraction-free elimination). Square input only.
Int determinant(const IntMatrix& m);

/// Smith normal form U * M * V = D with U, V unimodular and D diagonal,
/// diagonal entries nonnegative and d1 | d2 | ... .
struct SnfResult {
    IntMatrix U, D, V;
    /// Number of nonzero diagonal entries.
    long rank() const;
    /// The nonzero diagonal entries, in chain order.
    std::vector<Int> nonzero_diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// echelon rows with positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Membership of v in the row lattice of a Hermite-form matrix, by
/// back-substitution along the pivots.
bool hnf_contains(const IntMatrix& hnf, std::vector<Int> v);

/// gcd of the binomial coefficients C(n,1), ..., C(n,r). Requires 1 <= r <= n.
Int gcd_binomials(long n, long r);

/// Isomorphism type of Z^ambient_rank / <relations> in invariant-factor form.
FinAbGroup abelian_quotient(long ambient_rank, const std::vector<std::vector<Int>>& relations);

/// Order of v in Z^ambient_rank / <relations>: the smallest t > 0 with t*v in
/// the relation lattice, computed in Smith coordinates. Returns nullopt when
/// the order is infinite.
std::optional<Int> element_order(const std::vector<Int>& v, long ambient_rank,
                                 const std::vector<std::vector<Int>>& relations);

}  // namespace covdeg

#endif
