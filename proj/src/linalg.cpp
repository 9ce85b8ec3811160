#include "pv/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace pv {

bool is_finite(const CMat& M) {
    return M.allFinite();
}

SvdResult svd(const CMat& M) {
    if (!is_finite(M)) throw NumericalError("svd: input has non-finite entries");
    Eigen::JacobiSVD<CMat> solver(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (solver.info() != Eigen::Success)
        throw NumericalError("svd: kernel failed to converge");
    SvdResult out;
    out.U = solver.matrixU();
    out.s = solver.singularValues();
    out.Vh = solver.matrixV().adjoint();
    return out;
}

double schatten_norm(const CMat& M, double p) {
    if (!is_finite(M)) throw NumericalError("schatten_norm: non-finite input");
    if (p == 2) return M.norm();  // Frobenius, no SVD needed
    if (M.size() == 0) return 0.0;
    RVec s = svd(M).s;
    if (p == 1) return s.sum();
    return s.size() ? s(0) : 0.0;  // p = inf / 0
}

CMat kron(const CMat& A, const CMat& B) {
    const Eigen::Index r = A.rows() * B.rows(), c = A.cols() * B.cols();
    if (r > (1 << 22) || c > (1 << 22) || double(r) * double(c) > 5e8)
        throw ShapeError("kron: result dimensions too large");
    CMat out(r, c);
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return out;
}

static CMat gaussian_matrix(int rows, int cols, SeededRng& rng) {
    CMat G(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            G(i, j) = rng.next_cgaussian();
    return G;
}

CMat random_contraction(int rows, int cols, SeededRng rng) {
    if (rows < 1 || cols < 1) throw ShapeError("random_contraction: dims must be >= 1");
    const bool tall = rows >= cols;
    const int r = tall ? rows : cols, c = tall ? cols : rows;
    CMat G = gaussian_matrix(r, c, rng);
    // thin QR gives orthonormal columns -> isometry
    Eigen::HouseholderQR<CMat> qr(G);
    CMat Q = qr.householderQ() * CMat::Identity(r, c);
    return tall ? Q : CMat(Q.adjoint());
}

CVec random_unit_vector(int dim, SeededRng rng) {
    CVec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.next_cgaussian();
    double nrm = v.norm();
    if (nrm == 0.0) { v.setZero(); v(0) = 1.0; return v; }
    return v / nrm;
}

std::pair<double, CVec> top_hermitian_eigenpair(const CMat& H) {
    Eigen::SelfAdjointEigenSolver<CMat> es(H);
    if (es.info() != Eigen::Success)
        throw NumericalError("top_hermitian_eigenpair: eigensolver failed");
    Eigen::Index last = H.rows() - 1;
    return {es.eigenvalues()(last), es.eigenvectors().col(last)};
}

CMat project_to_operator_ball(const CMat& M) {
    SvdResult d = svd(M);
    RVec s = d.s;
    bool inside = true;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > 1.0) { s(i) = 1.0; inside = false; }
    if (inside) return M;
    return d.U * s.asDiagonal() * d.Vh;
}

} // namespace pv
