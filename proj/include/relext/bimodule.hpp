#pragma once

#include <map>

#include "relext/resolution.hpp"

namespace relext {

// Finite-dimensional C-C-bimodule given by a basis and one action matrix per
// algebra basis element (row convention: coords(c.m) = coords(m) * left[c],
// coords(m.c) = coords(m) * right[c]). The basis is adapted to the Peirce
// decomposition; within each (x, y) block the top representatives (a basis
// of the block modulo the bimodule radical) come first.
struct Bimodule {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> pair_of; // (x, y) with m = e_x m e_y
    std::vector<char> is_top;
    std::vector<Matrix> left;  // per algebra basis element
    std::vector<Matrix> right;

    std::map<std::pair<int, int>, int> pair_components() const;
};

Bimodule zero_bimodule(const Algebra& a);

// Validates the bimodule axioms against the algebra: linear actions that are
// multiplicative (anti-multiplicative on the left in matrix order), unital,
// commuting, and compatible with the Peirce tags. Throws ActionMismatch.
void verify_bimodule(const Algebra& a, const Bimodule& m);

// Ext^2(DC, C) with its natural actions: the left action postcomposes with
// left multiplication on C, the right action precomposes with a chain lift
// of left multiplication on DC through the minimal resolution of DC. Every
// lift is solved twice (canonical and seeded-random); the induced matrices
// must agree, which is asserted. Error: GlobalDimensionTooHigh.
Bimodule ext2_bimodule(const Algebra& a, const LiftOptions& opts = {});

// Row space of M rad(C) + rad(C) M over the bimodule coordinates.
Matrix bimodule_radical(const Algebra& a, const Bimodule& m);

// Per-pair dimensions of top(M) = M / (M rad C + rad C M).
std::map<std::pair<int, int>, int> bimodule_top(const Algebra& a, const Bimodule& m);

} // namespace relext
