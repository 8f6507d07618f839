#pragma once

#include <string>
#include <vector>

#include "relext/algebra.hpp"

namespace relext {

// Right module over a basic algebra, presented as a representation of the
// algebra's quiver: one dimension per vertex and one dims(src) x dims(tgt)
// matrix per arrow acting on row coordinates. The algebra is held by
// non-owning pointer; callers keep it alive.
struct Representation {
    const Algebra* alg = nullptr;
    std::vector<int> dims;
    std::vector<Matrix> arrow_maps; // per quiver arrow

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    int vertex_offset(int x) const; // start of the x-block in flat coordinates

    const Matrix& arrow_map(int a) const { return arrow_maps[a]; }

    // Action of a path (by arrow indices) as V_src -> V_tgt.
    Matrix act_path(int src_vertex, const std::vector<int>& arrows) const;
    // Action of an algebra basis element; requires its arrow word.
    Matrix act_basis_elt(int basis_idx) const;

    // Evaluates all relations of a presentation; true when all vanish.
    bool satisfies(const Presentation& p) const;
};

Representation zero_rep(const Algebra& a);
Representation simple_module(const Algebra& a, int vertex);
// e_x * A with basis the algebra basis elements of source x.
Representation projective(const Algebra& a, int vertex);
// D(A e_x): dual-basis coordinates of the elements of target x.
Representation injective(const Algebra& a, int vertex);
// A as a right module over itself (basis order = algebra basis order).
Representation regular_rep(const Algebra& a);
// D(A) with dual-basis coordinates; block at y = elements of source y.
Representation dual_regular_rep(const Algebra& a);
// D(V) as a module over the opposite algebra (same dims, transposed maps).
Representation dual_rep(const Algebra& op, const Representation& v);

// Map of representations: one dims_V(x) x dims_W(x) block per vertex.
struct ModuleMap {
    std::vector<int> src_dims, tgt_dims;
    std::vector<Matrix> blocks;

    bool is_zero() const;
    static ModuleMap zero(const Field& f, const std::vector<int>& s, const std::vector<int>& t);
    static ModuleMap identity(const Field& f, const std::vector<int>& d);
    ModuleMap compose(const ModuleMap& then) const; // this followed by `then`

    // naturality squares against the two representations
    bool is_natural(const Representation& v, const Representation& w) const;
};

// Kernel as a subrepresentation together with its inclusion.
struct SubRep {
    Representation rep;
    ModuleMap inclusion;
};
SubRep kernel(const ModuleMap& f, const Representation& v, const Representation& w);

// Basis of Hom(V, W) via the naturality constraint system.
std::vector<ModuleMap> hom_basis(const Representation& v, const Representation& w);

// Per-vertex row bases of rad^k V for k = 1, 2, ... until zero.
std::vector<std::vector<Matrix>> radical_chain(const Representation& v);

// Radical filtration layers as dimension vectors, top first.
std::vector<std::vector<int>> loewy_series(const Representation& v);

// Loewy layers rendered like "[3 / 1 2 / 3 / 1]".
std::string loewy_display(const Representation& v);

std::vector<int> socle_dims(const Representation& v);

// Dimension vector of V / rad V together with representative vectors
// (per vertex) lifting a basis of the top.
struct Top {
    std::vector<int> dims;
    std::vector<Matrix> reps; // rows = lifted basis vectors in V_x
};
Top top_of(const Representation& v);

} // namespace relext
