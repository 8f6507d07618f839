#pragma once

#include <optional>
#include <random>
#include <vector>

#include "relext/representation.hpp"

namespace relext {

// Direct sum of indecomposable projectives P_{y_1} + ... + P_{y_r} with the
// generator structure kept explicit: module maps out of a FreeModule are
// determined by the images of the generators, which is what makes Hom spaces
// and chain lifting cheap.
struct FreeModule {
    const Algebra* alg = nullptr;
    std::vector<int> gen_vertices;             // y_j per generator
    Representation rep;
    std::vector<std::pair<int, int>> coords;   // flat coordinate -> (generator, algebra basis elt)
    std::vector<int> gen_coord;                // generator -> flat coordinate of e_{y_j}

    int rank() const { return static_cast<int>(gen_vertices.size()); }
    // multiplicity of P_y in the sum
    int multiplicity(int y) const;
};

FreeModule free_module(const Algebra& a, std::vector<int> gen_vertices);

// Module map out of a free module determined by generator images
// (images[j] = flat coordinate vector in the target).
ModuleMap free_map(const FreeModule& p, const Representation& target,
                   const std::vector<std::vector<Scalar>>& images);

// Flat coordinates of Hom(P, N) = sum_j N_{y_j}: per generator, its image.
int hom_free_dim(const FreeModule& p, const Representation& n);
ModuleMap hom_coords_to_map(const FreeModule& p, const Representation& n,
                            const std::vector<Scalar>& coords);
std::vector<Scalar> map_to_hom_coords(const FreeModule& p, const ModuleMap& m);

struct Cover {
    FreeModule proj;
    ModuleMap map; // surjection onto the covered module, kernel in rad P
};

// Projective cover P(top V) -> V; error ZeroModule on V = 0.
Cover projective_cover(const Representation& v);

// Minimal projective resolution up to max_degree:
//   P_len -> ... -> P_1 -> P_0 -> V -> 0.
// `complete` reports whether the final syzygy vanished (so length = pd V).
struct Resolution {
    Representation module;
    std::vector<FreeModule> terms;
    std::vector<ModuleMap> diffs; // diffs[i]: P_{i+1} -> P_i
    ModuleMap augmentation;       // P_0 -> module
    bool complete = false;

    int length() const { return static_cast<int>(terms.size()) - 1; }
};

Resolution minimal_resolution(const Representation& v, int max_degree);

// Default degree bound: the radical nilpotency index + 1, enough to detect
// finite projective dimension at this scale.
Resolution minimal_resolution(const Representation& v);

// dim Ext^i(M, N), exact.
int ext_dim(const Representation& m, const Representation& n, int i);

// Exact global dimension when <= bound, otherwise nothing.
std::optional<int> global_dimension(const Algebra& a, int bound);

// pd V, or nothing if it exceeds the bound.
std::optional<int> projective_dimension(const Representation& v, int bound);

// id V = pd of D(V) over the opposite algebra.
std::optional<int> injective_dimension(const Algebra& a, const Representation& v, int bound);

// dim Ext^i(S_x, S_y) for all vertex pairs via minimal resolutions; asserts
// the cohomology reading against the multiplicity of P_y in term i.
std::vector<std::vector<int>> ext_simple_table(const Algebra& a, int i);

struct LiftOptions {
    bool randomize = false;
    std::uint32_t seed = 0;
};

// Chain lift of an endomorphism f of res.module: maps f_i: P_i -> P_i with
// f_0 * aug = aug * f and f_i * d_i = d_i * f_{i-1}. Error NotAModuleMap if
// f is not natural. With randomize set, each generator image is shifted by a
// random kernel element (the induced maps on Ext stay the same).
std::vector<ModuleMap> lift_endomorphism(const Resolution& res, const ModuleMap& f,
                                         const LiftOptions& opts = {});

} // namespace relext
