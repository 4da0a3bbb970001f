#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Dense column-major complex matrices with the factorizations the toolkit
// needs: multiplication, LU with partial pivoting, inverses.  Inner loops go
// through the runtime-dispatched vector kernels.

namespace specbound::la {

using cdouble = std::complex<double>;

class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cdouble& operator()(std::size_t i, std::size_t j) { return data_[i + j * rows_]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return data_[i + j * rows_]; }

    cdouble* col(std::size_t j) { return data_.data() + j * rows_; }
    const cdouble* col(std::size_t j) const { return data_.data() + j * rows_; }

    cdouble* data() { return data_.data(); }
    const cdouble* data() const { return data_.data(); }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cdouble> data_;
};

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
CMatrix add(const CMatrix& a, const CMatrix& b);
CMatrix sub(const CMatrix& a, const CMatrix& b);

std::vector<cdouble> matvec(const CMatrix& a, const std::vector<cdouble>& x);

double frobenius_norm(const CMatrix& a);
cdouble trace(const CMatrix& a);

struct LU {
    CMatrix f;             // L (unit diagonal, below) and U (on and above)
    std::vector<int> piv;  // piv[k]: row swapped with k at step k
    double parity;         // +1 / -1
};

// Partial-pivoting LU; exactly-zero pivots are kept (detected in solves).
LU lu_factor(CMatrix a);

std::vector<cdouble> lu_solve(const LU& lu, std::vector<cdouble> b);

cdouble lu_det(const LU& lu);

// A^{-1} via LU; throws singular_error when a pivot vanishes.
CMatrix inverse(const CMatrix& a);

}  // namespace specbound::la
