#ifndef IHX_MATRIX_HPP
#define IHX_MATRIX_HPP

#include "ihx/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace ihx {

/// Sparse matrix over Q. Absent entries are zero; stored entries are
/// never zero, so structural equality is value equality.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    const Rational& at(int r, int c) const;
    void set(int r, int c, Rational v);
    void add_to(int r, int c, const Rational& v);

    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalMatrix transpose() const;
    bool operator==(const RationalMatrix& rhs) const = default;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Rational> entries_;
};

/// Column-concatenation [A | B]; row counts must agree.
RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix matrix_from_columns(int rows, const std::vector<std::vector<Rational>>& cols);

/// Rank over Q. Dense fraction-free (Bareiss) elimination below 64x64,
/// sparse exact elimination above. Deterministic for a fixed input.
long rank(const RationalMatrix& m);

/// Basis of ker M; size is cols - rank. Each vector satisfies Mv = 0 exactly.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Elementary divisors d_1 | d_2 | ... of an integral matrix (nonzero ones,
/// all positive). Throws std::invalid_argument on non-integral entries.
std::vector<Int> smith_normal_form(const RationalMatrix& m);

/// Solves A X = Y column by column. Throws std::domain_error when some
/// column of Y is outside the column span of A. Free variables are set
/// to zero, so the result is deterministic.
RationalMatrix solve_columns(const RationalMatrix& a, const RationalMatrix& y);

/// True iff v lies in the column span of A.
bool in_column_span(const RationalMatrix& a, const std::vector<Rational>& v);

} // namespace ihx

#endif
