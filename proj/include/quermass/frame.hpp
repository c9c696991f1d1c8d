#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace quermass {

// Orthonormal r-frame spanning an r-plane through the origin in n-space.
// Construction either re-orthonormalizes (for random draws) or validates an
// already-orthonormal set; the stored Gram matrix always deviates from the
// identity by less than 1e-12.
class SubspaceFrame {
public:
    static constexpr double kGramTol = 1e-12;

    static SubspaceFrame orthonormalized(Eigen::MatrixXd cols) {
        const auto n = cols.rows();
        const auto r = cols.cols();
        if (r < 1 || r > n) throw std::invalid_argument("SubspaceFrame: need 1 <= rank <= n");
        // modified Gram-Schmidt, two passes
        for (Eigen::Index pass = 0; pass < 2; ++pass)
            for (Eigen::Index k = 0; k < r; ++k) {
                for (Eigen::Index j = 0; j < k; ++j)
                    cols.col(k) -= cols.col(j).dot(cols.col(k)) * cols.col(j);
                double nrm = cols.col(k).norm();
                if (nrm < 1e-10)
                    throw std::invalid_argument("SubspaceFrame: rank-deficient column set");
                cols.col(k) /= nrm;
            }
        return SubspaceFrame(std::move(cols));
    }

    static SubspaceFrame checked(Eigen::MatrixXd cols) {
        SubspaceFrame f(std::move(cols));
        if (f.gram_error() > kGramTol)
            throw std::invalid_argument("SubspaceFrame: columns are not orthonormal (Gram error " +
                                        std::to_string(f.gram_error()) + ")");
        return f;
    }

    static SubspaceFrame coordinate(int n, int r) {
        if (r < 1 || r > n) throw std::invalid_argument("SubspaceFrame: need 1 <= rank <= n");
        return SubspaceFrame(Eigen::MatrixXd::Identity(n, n).leftCols(r));
    }

    int ambient_dim() const { return static_cast<int>(basis_.cols() ? basis_.rows() : 0); }
    int rank() const { return static_cast<int>(basis_.cols()); }
    const Eigen::MatrixXd& basis() const { return basis_; }

    double gram_error() const {
        Eigen::MatrixXd g = basis_.transpose() * basis_;
        g -= Eigen::MatrixXd::Identity(rank(), rank());
        return g.cwiseAbs().maxCoeff();
    }

private:
    explicit SubspaceFrame(Eigen::MatrixXd basis) : basis_(std::move(basis)) {}
    Eigen::MatrixXd basis_;  // n x r, orthonormal columns
};

}  // namespace quermass
