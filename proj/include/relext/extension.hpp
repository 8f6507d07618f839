#pragma once

#include "relext/bimodule.hpp"

namespace relext {

// Quiver of an extension: the base quiver plus tagged new arrows, each with
// a concrete representative (coordinates over the extension algebra) when
// one was constructed.
struct ExtendedQuiver {
    Quiver quiver;
    std::vector<int> new_arrows; // arrow indices of the added arrows
    std::vector<std::vector<Scalar>> reps; // per new arrow; empty for the
                                           // relation-counting route

    int num_new() const { return static_cast<int>(new_arrows.size()); }
    std::vector<std::vector<int>> arrow_count_matrix() const;
};

// Trivial extension C ⋉ M: basis = base basis followed by the bimodule
// basis, multiplication (c,m)(c',m') = (cc', cm' + mc').
struct ExtensionAlgebra {
    Algebra base;
    Bimodule bimodule;
    Algebra total;              // its quiver is the extended quiver
    ExtendedQuiver extended;

    int base_dim() const { return base.dim(); }
};

// Builds the extension, re-verifies associativity on all basis triples, and
// derives the extended quiver from rad/rad^2 of the total algebra. New
// arrows are named z1, z2, ... unless names are supplied.
// Errors: ActionMismatch, DuplicateName.
ExtensionAlgebra trivial_extension(const Algebra& a, const Bimodule& m,
                                   const std::vector<std::string>& new_arrow_names = {});

// Re-derives the quiver of the extension from its radical filtration
// (the rad/rad^2 construction applied to the total algebra).
ExtendedQuiver quiver_from_extension(const ExtensionAlgebra& e);

// Relation-counting route: base quiver plus ideal_top_counts(y, x) arrows
// x -> y. Errors: CyclicQuiver, GlobalDimensionTooHigh.
ExtendedQuiver relext_quiver(const Presentation& p,
                             const std::vector<std::string>& new_arrow_names = {});

// P~_x = e_x (C ⋉ M) as a representation over the extension.
std::vector<Representation> extension_projectives(const ExtensionAlgebra& e);

// A bound quiver presentation of the extension: evaluates all paths of the
// extended quiver up to the nilpotency index, extracts the kernel of the
// induced map from the path algebra, and minimizes it by the kernel-ideal
// top. The result is validated by rebuilding: same dimension, same quiver.
// Errors: RepresentativeChoiceFailed (surjectivity defect).
Presentation present_extension(const ExtensionAlgebra& e);

} // namespace relext
