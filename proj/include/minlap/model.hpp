#pragma once

// Finite-dimensional model of the global sections the transform reduces
// into: constants plus, at each finite point, the simple-pole sections whose
// residue lies in the image of the residue matrix. The cokernel basis is the
// classes of v^{j,k}/(x - p_j) dx over the nonzero-eigenvalue eigenvectors,
// ordered by point index and then eigen index.

#include <string>
#include <utility>
#include <vector>

#include "minlap/connection.hpp"
#include "minlap/linalg.hpp"
#include "minlap/validate.hpp"

namespace minlap {

class GlobalSectionModel {
public:
    explicit GlobalSectionModel(ParabolicConnection conn) : conn_(std::move(conn)) {
        const int r = conn_.rank();
        for (int j = 0; j < conn_.point_count(); ++j) {
            const RegularSingularity& s = conn_.at_point(j);
            if (minlap::rank(s.residue_matrix) != r - s.zero_multiplicity)
                throw domain_error("residue matrix rank disagrees with its zero multiplicity");
            Matrix<K> p = conn_.eigenvector_matrix(j);
            auto pinv = inverse(p);
            if (!pinv) throw domain_error("eigenvector matrix is singular");
            eigen_inverse_.push_back(std::move(*pinv));
            for (int k = s.zero_multiplicity; k < r; ++k) {
                if (!solve_linear(s.residue_matrix, s.eigen[static_cast<std::size_t>(k)].vector))
                    throw domain_error("residue basis vector escapes the image of the residue matrix");
                labels_.push_back({j, k});
            }
        }
    }

    const ParabolicConnection& connection() const { return conn_; }

    // cokernel basis classes [v^{j,k}/(x - p_j) dx], (point, eigen slot)
    const std::vector<std::pair<int, int>>& basis_labels() const { return labels_; }
    int cokernel_dimension() const { return static_cast<int>(labels_.size()); }
    int h0f_dimension() const { return conn_.rank() + cokernel_dimension(); }

    const std::vector<K>& basis_vector(int idx) const {
        auto [j, k] = labels_[static_cast<std::size_t>(idx)];
        return conn_.at_point(j).eigen[static_cast<std::size_t>(k)].vector;
    }

    // columns-of-eigenvectors inverse at point j, for residue expansion
    const Matrix<K>& eigen_inverse(int j) const { return eigen_inverse_[static_cast<std::size_t>(j)]; }

    // (A^j - m Id)^{-1} for integers m >= 1; singularity here means the
    // resonance precondition was violated
    Matrix<K> residue_shift_inverse(int j, int m) const {
        Matrix<K> shifted = conn_.at_point(j).residue_matrix;
        for (int i = 0; i < conn_.rank(); ++i) shifted.at(i, i) -= K(m);
        auto inv = inverse(shifted);
        if (!inv)
            throw domain_error("reduction solve failed: residue matrix minus " + std::to_string(m) +
                               " at point " + std::to_string(j + 1) + " is singular");
        return *inv;
    }

private:
    ParabolicConnection conn_;
    std::vector<std::pair<int, int>> labels_;
    std::vector<Matrix<K>> eigen_inverse_;
};

inline GlobalSectionModel build_model(const ParabolicConnection& conn) {
    require_transform_ready(conn);
    return GlobalSectionModel(conn);
}

}  // namespace minlap
