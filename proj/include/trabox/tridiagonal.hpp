#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace trabox {

/// Symmetric tridiagonal matrix. Only the diagonal and the single
/// off-diagonal are stored, so symmetry holds by construction.
struct TridiagonalSymmetric {
    std::vector<double> diag;     ///< main diagonal, size N
    std::vector<double> offdiag;  ///< sub/super diagonal, size N-1

    TridiagonalSymmetric() = default;

    explicit TridiagonalSymmetric(std::size_t n)
        : diag(check_dim(n), 0.0), offdiag(n - 1, 0.0) {}

    TridiagonalSymmetric(std::vector<double> d, std::vector<double> e)
        : diag(std::move(d)), offdiag(std::move(e)) {
        check_dim(diag.size());
        if (offdiag.size() + 1 != diag.size())
            throw std::invalid_argument(
                "TridiagonalSymmetric: offdiag must have size N-1");
    }

    std::size_t size() const noexcept { return diag.size(); }

    /// Maximum absolute row sum.
    double norm_inf() const;

  private:
    static std::size_t check_dim(std::size_t n) {
        if (n == 0)
            throw std::invalid_argument("TridiagonalSymmetric: N must be >= 1");
        return n;
    }
};

}  // namespace trabox
