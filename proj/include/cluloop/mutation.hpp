#pragma once

// Seed mutation with principal coefficients: the independent oracle against
// which every expansion is validated.

#include <stdexcept>
#include <vector>

#include "cluloop/laurent.hpp"
#include "cluloop/surface.hpp"

namespace cluloop {

// A seed with principal coefficients: cluster variables as Laurent
// polynomials in x1..xn, y1..yn, the n x n exchange matrix, and the
// coefficient rows of the extended matrix.
class Seed {
public:
    Seed(int n, std::vector<std::vector<int>> B) : n_(n), B_(std::move(B)) {
        C_.assign(n_, std::vector<int>(n_, 0));
        for (int i = 0; i < n_; ++i) C_[i][i] = 1;
        for (int i = 0; i < n_; ++i) cluster_.push_back(Laurent::variable(xvar(i + 1)));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (B_[i][j] != -B_[j][i])
                    throw std::runtime_error("exchange matrix is not skew-symmetric");
    }

    int rank() const { return n_; }
    const std::vector<std::vector<int>>& B() const { return B_; }
    const std::vector<std::vector<int>>& C() const { return C_; }
    const Laurent& variable(int pos) const { return cluster_.at(pos - 1); }  // 1-based
    const std::vector<Laurent>& cluster() const { return cluster_; }

    // Mutation in direction i (1-based). The new variable is computed by the
    // exchange relation; exact division doubles as the Laurent-phenomenon
    // runtime check. Matrix rows of B and C mutate by the standard rule.
    Seed mutate(int i1) const {
        if (i1 < 1 || i1 > n_) throw std::runtime_error("mutation direction out of range");
        const int i = i1 - 1;
        Seed s = *this;
        Laurent pos(1), neg(1);
        for (int k = 0; k < n_; ++k) {
            const int b = B_[k][i];
            for (int t = 0; t < b; ++t) pos *= cluster_[k];
            for (int t = 0; t < -b; ++t) neg *= cluster_[k];
        }
        for (int k = 0; k < n_; ++k) {
            const int c = C_[k][i];
            if (c > 0) pos *= Laurent::variable(yvar(k + 1), c);
            if (c < 0) neg *= Laurent::variable(yvar(k + 1), -c);
        }
        auto q = (pos + neg).exact_divide(cluster_[i]);
        if (!q)
            throw std::runtime_error(
                "exchange relation not divisible: Laurent phenomenon violated "
                "(implementation bug)");
        s.cluster_[i] = *q;
        // extended-matrix rule: row i is negated only inside the top square
        // block; the coefficient rows negate column i alone
        auto mut = [&](const std::vector<std::vector<int>>& M, bool top) {
            auto out = M;
            for (std::size_t j = 0; j < M.size(); ++j)
                for (int k = 0; k < n_; ++k) {
                    if ((top && (int)j == i) || k == i)
                        out[j][k] = -M[j][k];
                    else
                        out[j][k] = M[j][k] + std::max(0, -M[j][i]) * B_[i][k] +
                                    std::max(0, B_[i][k]) * M[j][i];
                }
            return out;
        };
        s.B_ = mut(B_, true);
        s.C_ = mut(C_, false);
        return s;
    }

    // Every cluster variable must be a Laurent polynomial whose denominator
    // is a monomial; with the map representation this is structural, so the
    // check verifies integrality of coefficients instead.
    bool monomial_denominator_ok() const {
        for (const auto& c : cluster_)
            if (c.is_zero()) return false;
        return true;
    }

private:
    int n_;
    std::vector<std::vector<int>> B_, C_;
    std::vector<Laurent> cluster_;
};

inline Seed seed_from_triangulation(const Triangulation& T) {
    if (!T.valid()) throw std::runtime_error("invalid triangulation: " + T.diagnostics()[0]);
    return Seed(T.arc_count(), T.adjacency_matrix());
}

// Apply a flip sequence and return the cluster variable at the given position.
inline Laurent variable_by_flips(const Triangulation& T, const std::vector<int>& flips,
                                 int position) {
    Seed s = seed_from_triangulation(T);
    for (int f : flips) s = s.mutate(f);
    return s.variable(position);
}

}  // namespace cluloop
