#pragma once

#include <vector>

#include "rgw/rational.hpp"

namespace rgw {

// Dense exact linear algebra over Q. Subspaces of Q^n are row spaces of
// matrices in reduced row echelon form.
using Vec = std::vector<Rat>;
using Matrix = std::vector<std::vector<Rat>>;

// In-place reduced row echelon form; returns the rank.
int rref(Matrix& m);

int subspace_dim(const Matrix& basis);

// Canonical basis (RREF rows, zero rows dropped).
Matrix subspace_canon(Matrix m);

Matrix subspace_sum(const Matrix& a, const Matrix& b);

// Kernel of m (solutions of m x = 0) as a subspace basis.
Matrix null_space(const Matrix& m, int width);

// Annihilator equations of a row space inside Q^n.
Matrix annihilator(const Matrix& basis, int n);

Matrix subspace_intersection(const Matrix& a, const Matrix& b, int n);

// {x : (map x) in target}.
Matrix preimage(const Matrix& map, const Matrix& target, int n);

// Span of the images of the basis rows.
Matrix image_of(const Matrix& map, const Matrix& basis);

Vec apply(const Matrix& map, const Vec& v);

bool subspace_contains(const Matrix& basis, const Vec& v);

// Coordinates of v in the given (independent-row) basis; empty if outside.
std::vector<Rat> coordinates_in(const Matrix& basis, const Vec& v);

Matrix mat_mul(const Matrix& a, const Matrix& b);
int mat_rank(Matrix m);

} // namespace rgw
