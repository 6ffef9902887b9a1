#pragma once

// Input data model: parabolic connections on the trivial rank-r bundle over
// the projective line, d + (A + sum_j A^j/(x - p_j)) dx, with semi-simple
// residues at the finite points and a rank-1 irregular point at infinity.
// Structural requirements are enforced at construction; the report-style
// validators (resonance, admissibility) live in validate.hpp.

#include <string>
#include <utility>
#include <vector>

#include "minlap/gaussian_rational.hpp"
#include "minlap/linalg.hpp"
#include "minlap/matrix.hpp"

namespace minlap {

struct EigenDatum {
    K value;
    mpq_class weight;       // in [0,1)
    std::vector<K> vector;  // eigenvector of the residue matrix
};

struct RegularSingularity {
    K point;
    Matrix<K> residue_matrix;
    std::vector<EigenDatum> eigen;  // zero eigenvalues listed first
    int zero_multiplicity = 0;      // recomputed at connection construction
};

struct IrregularData {
    std::vector<K> a_diagonal;       // diagonal of A, constant on blocks
    std::vector<int> blocks;         // boundaries 0 = a_0 < a_1 < ... < a_{n'} = r
    std::vector<K> c_diagonal;       // mu^inf_k
    std::vector<mpq_class> weights;  // beta^inf_k in [0,1)

    int block_count() const { return static_cast<int>(blocks.size()) - 1; }
    int block_size(int l) const { return blocks[l + 1] - blocks[l]; }
    const K& xi(int l) const { return a_diagonal[blocks[l]]; }
    int block_of(int k) const {
        for (int l = 0; l < block_count(); ++l)
            if (k >= blocks[l] && k < blocks[l + 1]) return l;
        throw domain_error("index outside block range");
    }
};

class ParabolicConnection {
public:
    ParabolicConnection(int rank_in, std::vector<RegularSingularity> reg, IrregularData irr)
        : r_(rank_in), reg_(std::move(reg)), irr_(std::move(irr)) {
        check();
    }

    int rank() const { return r_; }
    int point_count() const { return static_cast<int>(reg_.size()); }
    const std::vector<RegularSingularity>& regular() const { return reg_; }
    const RegularSingularity& at_point(int j) const { return reg_[static_cast<std::size_t>(j)]; }
    const IrregularData& irregular() const { return irr_; }

    // rank of the transformed side: sum_j (r - r_j)
    int transformed_rank() const {
        int d = 0;
        for (const auto& s : reg_) d += r_ - s.zero_multiplicity;
        return d;
    }

    Matrix<K> leading_matrix() const {
        Matrix<K> a(r_, r_);
        for (int k = 0; k < r_; ++k) a.at(k, k) = irr_.a_diagonal[static_cast<std::size_t>(k)];
        return a;
    }

    Matrix<K> c_matrix() const {
        Matrix<K> c(r_, r_);
        for (int k = 0; k < r_; ++k) c.at(k, k) = irr_.c_diagonal[static_cast<std::size_t>(k)];
        return c;
    }

    Matrix<K> residue_sum() const {
        Matrix<K> s(r_, r_);
        for (const auto& sing : reg_) s = s + sing.residue_matrix;
        return s;
    }

    // columns are the listed eigenvectors of A^j
    Matrix<K> eigenvector_matrix(int j) const {
        Matrix<K> p(r_, r_);
        for (int k = 0; k < r_; ++k) p.set_column(k, reg_[static_cast<std::size_t>(j)].eigen[static_cast<std::size_t>(k)].vector);
        return p;
    }

private:
    void check() {
        if (r_ < 1) throw domain_error("rank must be at least 1");
        for (std::size_t j = 0; j < reg_.size(); ++j)
            for (std::size_t k = j + 1; k < reg_.size(); ++k)
                if (reg_[j].point == reg_[k].point)
                    throw domain_error("singular points must be pairwise distinct");
        for (auto& s : reg_) {
            if (s.residue_matrix.rows() != r_ || s.residue_matrix.cols() != r_)
                throw domain_error("residue matrix must be rank x rank");
            if (static_cast<int>(s.eigen.size()) != r_)
                throw domain_error("eigen data must list exactly rank entries");
            Matrix<K> p(r_, r_);
            int zeros = 0;
            bool seen_nonzero = false;
            for (int k = 0; k < r_; ++k) {
                const EigenDatum& e = s.eigen[static_cast<std::size_t>(k)];
                if (static_cast<int>(e.vector.size()) != r_)
                    throw domain_error("eigenvector length mismatch");
                if (e.weight < 0 || e.weight >= 1) throw domain_error("weight outside [0,1)");
                bool vzero = true;
                for (const K& c : e.vector)
                    if (!c.is_zero()) vzero = false;
                if (vzero) throw domain_error("zero eigenvector");
                std::vector<K> av = s.residue_matrix * e.vector;
                for (int i = 0; i < r_; ++i)
                    if (av[static_cast<std::size_t>(i)] != e.value * e.vector[static_cast<std::size_t>(i)])
                        throw domain_error("listed pair is not an eigenpair of the residue matrix");
                if (e.value.is_zero()) {
                    if (seen_nonzero) throw domain_error("zero eigenvalues must be listed first");
                    ++zeros;
                } else {
                    seen_nonzero = true;
                }
                p.set_column(k, e.vector);
            }
            if (minlap::rank(p) != r_) throw domain_error("eigenvectors must form a basis");
            s.zero_multiplicity = zeros;
        }
        if (static_cast<int>(irr_.a_diagonal.size()) != r_ || static_cast<int>(irr_.c_diagonal.size()) != r_ ||
            static_cast<int>(irr_.weights.size()) != r_)
            throw domain_error("irregular data arrays must have exactly rank entries");
        if (irr_.blocks.empty() || irr_.blocks.front() != 0 || irr_.blocks.back() != r_)
            throw domain_error("block boundaries must run from 0 to rank");
        for (int l = 0; l < irr_.block_count(); ++l)
            if (irr_.blocks[static_cast<std::size_t>(l)] >= irr_.blocks[static_cast<std::size_t>(l) + 1])
                throw domain_error("block boundaries must be strictly increasing");
        for (int k = 0; k < r_; ++k)
            if (irr_.a_diagonal[static_cast<std::size_t>(k)] != irr_.xi(irr_.block_of(k)))
                throw domain_error("leading matrix must be constant on each block");
        for (int l = 0; l < irr_.block_count(); ++l)
            for (int m = l + 1; m < irr_.block_count(); ++m)
                if (irr_.xi(l) == irr_.xi(m)) throw domain_error("block eigenvalues must be pairwise distinct");
        for (const mpq_class& w : irr_.weights)
            if (w < 0 || w >= 1) throw domain_error("weight outside [0,1)");
        Matrix<K> s = residue_sum();
        for (int k = 0; k < r_; ++k) {
            for (int m = 0; m < r_; ++m) {
                if (irr_.block_of(k) != irr_.block_of(m)) continue;
                if (k == m) {
                    if (s.at(k, k) != -irr_.c_diagonal[static_cast<std::size_t>(k)])
                        throw domain_error(
                            "residue at infinity mismatch: C must equal minus the block diagonal of the residue sum");
                } else if (!s.at(k, m).is_zero()) {
                    throw domain_error("in-block off-diagonal entries of the residue sum must vanish");
                }
            }
        }
        if (!(s.trace() + c_matrix().trace()).is_zero())
            throw domain_error("residues over all points must sum to zero");
    }

    int r_;
    std::vector<RegularSingularity> reg_;
    IrregularData irr_;
};

}  // namespace minlap
