#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relext/matrix.hpp"
#include "relext/quiver.hpp"

namespace relext {

// Finite-dimensional basic algebra with a basis adapted to the Peirce
// decomposition: every basis element b satisfies e_src(b) * b * e_tgt(b) = b.
// Multiplication is a structure-constant table; the radical filtration is
// supplied by whichever construction produced the algebra.
struct Algebra {
    Field field = Field::rationals();
    Quiver quiver; // the algebra's own quiver (for extensions: the extended one)

    std::vector<std::string> labels;
    std::vector<int> src;
    std::vector<int> tgt;
    // arrow word whose product is the basis element, when it is one (path
    // algebra quotients: all; trivial extensions: the base part only)
    std::vector<std::optional<std::vector<int>>> basis_arrows;

    std::vector<int> idempotent; // vertex -> basis index of e_x
    std::vector<int> arrow_rep;  // quiver arrow -> basis index

    // table[i*dim+j] = coordinates of b_i * b_j, sparse
    std::vector<std::vector<std::pair<int, Scalar>>> table;

    // rad^1, rad^2, ... as row-space matrices over the basis, until zero
    std::vector<Matrix> radical_powers;

    int dim() const { return static_cast<int>(labels.size()); }
    // smallest t with rad^t = 0
    int nilpotency() const { return static_cast<int>(radical_powers.size()) + 1; }

    const std::vector<std::pair<int, Scalar>>& basis_product(int i, int j) const {
        return table[static_cast<std::size_t>(i) * labels.size() + j];
    }

    std::vector<Scalar> mul(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;
    std::vector<Scalar> unit() const;           // sum of idempotents
    std::vector<Scalar> basis_vector(int i) const;

    // coords(v * b_j) = coords(v) * right_mult(j)
    Matrix right_mult(int j) const;
    // coords(b_j * v) = coords(v) * left_mult(j)
    Matrix left_mult(int j) const;
    Matrix right_mult_elem(const std::vector<Scalar>& u) const;
    Matrix left_mult_elem(const std::vector<Scalar>& u) const;

    Matrix radical_power(int k) const; // k >= 1; zero-row matrix once exhausted

    std::vector<int> pair_block(int x, int y) const; // basis indices with tags (x, y)

    // Full well-formedness audit (associativity on all triples, idempotent
    // axioms, tag consistency). Throws Internal on violation.
    void verify() const;
};

struct BuildOptions {
    int max_length = 64;       // nilpotency-cut search bound
    long path_budget = 200000; // enumeration safety valve
};

// Basis, normal form and multiplication table of kQ/I. The basis consists of
// the degree-lexicographically smallest paths surviving elimination of the
// relation ideal; errors: NonAdmissibleIdeal, InfiniteDimensional,
// DuplicateName (via Quiver/Presentation validation).
Algebra build_algebra(const Presentation& p, const BuildOptions& opts = {});

Algebra opposite(const Algebra& a);

// Per-pair sizes of a minimal system of relations: dim e_x (I/(JI+IJ)) e_y,
// J the arrow ideal. Requires an acyclic quiver.
std::map<std::pair<int, int>, int> ideal_top_counts(const Presentation& p);

// Arrow counts of the quiver of the algebra, read off rad/rad^2 blockwise.
std::vector<std::vector<int>> quiver_arrow_counts(const Algebra& a);

// Row space of { u * v : u in rows of xs, v in rows of ys }.
Matrix product_space(const Algebra& a, const Matrix& xs, const Matrix& ys);

// All paths of an acyclic quiver, deglex order (used as the relation-free
// reference count in tests and by ideal_top_counts).
std::vector<Path> all_paths_acyclic(const Quiver& q);

// All paths of length <= max_len, deglex order (cyclic quivers allowed).
std::vector<Path> paths_up_to(const Quiver& q, int max_len);

} // namespace relext
