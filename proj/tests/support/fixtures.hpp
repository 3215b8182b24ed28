#pragma once

// Test-only fixtures and reference computations. Nothing here calls the
// determinantal machinery under test; the references are plain
// Gauss-Jordan elimination, Laplace expansion and explicit
// core-nilpotent constructions with a known Drazin inverse.

#include "drazin/matrix.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

namespace fixtures {

using drazin::CMatrix;
using drazin::GaussianRational;
using drazin::Rational;

inline GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }
inline GaussianRational frac(long num, long den, long inum = 0, long iden = 1) {
    return {Rational(num, den), Rational(inum, iden)};
}
inline const GaussianRational I = GaussianRational::i();

// Worked example 1: AXB = D.
inline CMatrix ex1_A() { return {{2, 0, 0}, {-I, I, I}, {-I, -I, -I}}; }
inline CMatrix ex1_B() { return {{1, -1, 1}, {I, -I, I}, {-1, 1, 2}}; }
inline CMatrix ex1_D() { return {{1, I, 1}, {I, 0, 1}, {1, I, 0}}; }

// Worked example 2: X' + AX = B. A equals ex1_B, B equals ex1_D.
inline CMatrix ex2_A() { return ex1_B(); }
inline CMatrix ex2_B() { return ex1_D(); }

/// Exact inverse by Gauss-Jordan elimination, nullopt when singular.
std::optional<CMatrix> gauss_jordan_inverse(const CMatrix& a);

/// Determinant by cofactor expansion along the first row.
GaussianRational laplace_det(const CMatrix& a);

/// Rank by plain (non fraction-free) row reduction.
std::size_t reference_rank(const CMatrix& a);

/// Basis of the null space, one column per vector, via reduced row echelon form.
std::vector<CMatrix> nullspace_basis(const CMatrix& a);

/*
 * A = S diag(C, N) S^{-1} with C invertible, N a direct sum of nilpotent
 * Jordan blocks and S unimodular over the Gaussian integers, so that
 * A^D = S diag(C^{-1}, 0) S^{-1}, Ind A is the largest Jordan block and
 * rank(A^k) = dim C, all known without touching the code under test.
 */
struct CoreNilpotent {
    CMatrix a;
    CMatrix drazin;
    std::size_t index = 0;
    std::size_t core_rank = 0;
};

class Generator {
public:
    explicit Generator(std::uint32_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    GaussianRational gaussian_int(long bound) { return gr(uniform(-bound, bound), uniform(-bound, bound)); }
    CMatrix matrix(std::size_t rows, std::size_t cols, long bound = 3);
    CMatrix invertible(std::size_t n, long bound = 3);
    /// Unimodular: product of unit lower and unit upper triangular matrices.
    std::pair<CMatrix, CMatrix> unimodular_with_inverse(std::size_t n);
    /// Explicit core-nilpotent construction with the given nilpotent block sizes.
    CoreNilpotent core_nilpotent(std::size_t core, const std::vector<std::size_t>& blocks);
    /// Random core-nilpotent matrix of dimension n that is singular.
    CoreNilpotent random_core_nilpotent(std::size_t n);
    /// U V with U n x p and V p x n, p < n.
    CMatrix rank_deficient_product(std::size_t n);
    /// Alternates between the two singular constructions.
    CMatrix singular(std::size_t n);

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
    bool flip_ = false;
};

} // namespace fixtures
