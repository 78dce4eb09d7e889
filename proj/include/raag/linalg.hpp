#ifndef RAAG_LINALG_HPP
#define RAAG_LINALG_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace raag {

using Int = mpz_class;
using Rat = mpq_class;

using VecQ = std::vector<Rat>;
using VecZ = std::vector<Int>;

// Dense exact matrices, row-major.  Everything in this project is tiny
// (dimensions well under 100), so no attempt at sparsity is made.
struct MatQ {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    MatQ() = default;
    MatQ(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static MatQ identity(std::size_t n);
    bool operator==(const MatQ& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct MatZ {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    MatZ() = default;
    MatZ(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static MatZ identity(std::size_t n);
    MatQ to_q() const;
    bool operator==(const MatZ& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

MatQ mul(const MatQ& x, const MatQ& y);
MatZ mul(const MatZ& x, const MatZ& y);
VecQ mul(const MatQ& x, const VecQ& v);
MatQ neg(const MatQ& x);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(MatQ& m);

std::size_t rank(MatQ m);
std::size_t rank(const MatZ& m);

// Solve m * x = b exactly; empty optional when inconsistent.  The returned
// solution sets every free variable to zero, so it is deterministic.
std::optional<VecQ> solve(const MatQ& m, const VecQ& b);

// Basis of the right nullspace { x : m x = 0 }, one vector per free column,
// scaled to primitive integer vectors with positive leading entry.
std::vector<VecQ> nullspace(const MatQ& m);

MatQ invert(const MatQ& m); // throws internal_error if singular

// Determinant by fraction-free (Bareiss) elimination over the integers.
Int det_bareiss(MatZ m);

// Column-style Hermite normal form of m (operations on columns only), so the
// column lattice is preserved.  Returns H; m is not modified.
MatZ hnf_columns(const MatZ& m);

// Least n >= 1 with n*target in the lattice spanned by the columns of m,
// or nullopt when no multiple of target lies in the lattice.
std::optional<Int> min_multiple_in_lattice(const MatZ& m, const VecZ& target);

// Scale a rational vector to a primitive integer vector whose first nonzero
// entry is positive.  Zero vectors pass through unchanged.
VecQ normalize_primitive(VecQ v);

std::string to_string(const MatQ& m);
std::string to_string(const VecQ& v);

} // namespace raag

#endif
