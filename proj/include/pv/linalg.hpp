#pragma once
#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "pv/rng.hpp"

namespace pv {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using cplx = std::complex<double>;

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SvdResult {
    CMat U;       // columns orthonormal
    RVec s;       // descending, nonnegative
    CMat Vh;      // rows orthonormal
};

bool is_finite(const CMat& M);

SvdResult svd(const CMat& M);

// p in {1, 2, inf}; pass p = 0 for the operator norm (infinity)
double schatten_norm(const CMat& M, double p);
inline double op_norm(const CMat& M) { return schatten_norm(M, 0); }
inline double trace_norm(const CMat& M) { return schatten_norm(M, 1); }

CMat kron(const CMat& A, const CMat& B);

// Haar-ish contraction: isometry from orthonormalized Gaussian columns
// when rows >= cols, adjoint of one otherwise.  Operator norm exactly 1.
CMat random_contraction(int rows, int cols, SeededRng rng);

CVec random_unit_vector(int dim, SeededRng rng);

// top eigenpair of a Hermitian PSD matrix
std::pair<double, CVec> top_hermitian_eigenpair(const CMat& H);

// scale singular values above 1 down to 1 (projection onto the operator-norm ball)
CMat project_to_operator_ball(const CMat& M);

} // namespace pv
