#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace recoh {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage. Everything in this library runs
/// at desk scale (dimension <= 64), so the kernel favors robustness over
/// speed: plain loops, Jacobi sweeps, no blocking.
struct CMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> a;  // rows*cols entries, row-major

    CMat() = default;
    CMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    static CMat identity(std::size_t n);
    static CMat diag(const std::vector<double>& d);

    cplx& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool square() const { return rows == cols; }
};

CMat operator*(const CMat& x, const CMat& y);
CMat operator+(const CMat& x, const CMat& y);
CMat operator-(const CMat& x, const CMat& y);
CMat operator*(cplx s, const CMat& x);

CMat adjoint(const CMat& m);
cplx trace(const CMat& m);
bool is_finite(const CMat& m);

/// Largest entrywise modulus.
double max_abs(const CMat& m);

/// Largest entrywise |m - m^dagger|; 0 for a 0x0 matrix.
double hermiticity_defect(const CMat& m);

struct EighResult {
    std::vector<double> values;  // ascending
    CMat vectors;                // column k is the eigenvector for values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps
/// (off-diagonal threshold 1e-12 relative to the Frobenius norm, at most 100
/// sweeps). Throws std::invalid_argument if the input is not square or the
/// hermiticity defect exceeds herm_tol.
EighResult eigh(const CMat& h, double herm_tol = 1e-10);

/// Eigenvalues only, ascending with multiplicity.
std::vector<double> hermitian_eigenvalues(const CMat& h, double herm_tol = 1e-10);

/// Sum of singular values, computed as sum of square roots of the
/// eigenvalues of m^dagger m. Eigenvalues in [-1e-12, 0) are clamped to 0;
/// anything below -1e-12 throws std::runtime_error (numerical breakdown).
double trace_norm(const CMat& m);

/// Hermitian PSD square root. Eigenvalues in [-1e-10, 0) are clamped to 0;
/// anything below -1e-10 throws std::invalid_argument (not PSD).
CMat psd_sqrt(const CMat& p);

/// [Tr m, Tr m^2, ..., Tr m^n] by repeated multiplication.
std::vector<cplx> power_sums(const CMat& m, int n);

/// All real roots of c4 t^4 + c3 t^3 + c2 t^2 + c1 t + c0, ascending with
/// multiplicity. Solved by Ferrari factorization through the resolvent
/// cubic, then Newton-polished; a candidate is kept only if the monic
/// residual satisfies |poly(r)| <= 1e-8 * max(1, |r|^4). Complex roots are
/// discarded. Throws std::invalid_argument when |c4| < 1e-14.
std::vector<double> real_quartic_roots(double c4, double c3, double c2, double c1, double c0);

}  // namespace recoh
