#pragma once

// Shared presentations used across the test suites: small tilted algebras
// with known projectives, injectives and extension data.

#include <vector>

#include "relext/quiver.hpp"

namespace fixtures {

using namespace relext;

inline Path path_of(const Quiver& q, std::initializer_list<const char*> arrows) {
    std::vector<int> idx;
    for (const char* a : arrows)
        idx.push_back(*q.arrow_index(a));
    return Path::of_arrows(q, idx);
}

inline PathVector mono(const Field& f, const Quiver& q,
                       std::initializer_list<const char*> arrows) {
    return PathVector::make(f, {{path_of(q, arrows), f.one()}});
}

inline PathVector commutator(const Field& f, const Quiver& q,
                             std::initializer_list<const char*> a,
                             std::initializer_list<const char*> b) {
    return PathVector::make(f, {{path_of(q, a), f.one()}, {path_of(q, b), f.neg(f.one())}});
}

// A_3 quiver 1 <-beta- 2 <-alpha- 3 with an extra arrow gamma: 3 -> 1,
// bound by alpha*beta = 0. Tilted, gldim 2, dim 6.
inline Presentation tilted_a3(const Field& f = Field::rationals()) {
    Presentation p;
    p.field = f;
    p.quiver.add_vertex("1");
    p.quiver.add_vertex("2");
    p.quiver.add_vertex("3");
    p.quiver.add_arrow("alpha", "3", "2");
    p.quiver.add_arrow("beta", "2", "1");
    p.quiver.add_arrow("gamma", "3", "1");
    p.relations.push_back(mono(f, p.quiver, {"alpha", "beta"}));
    return p;
}

// The relation-extension of tilted_a3 as a bound quiver: one extra arrow
// delta: 1 -> 3, relations alpha*beta, delta*alpha, beta*delta, delta*gamma*delta.
// Finite-dimensional of dimension 10; its quiver has a 2-cycle.
inline Presentation tilted_a3_extended(const Field& f = Field::rationals()) {
    Presentation p;
    p.field = f;
    p.quiver.add_vertex("1");
    p.quiver.add_vertex("2");
    p.quiver.add_vertex("3");
    p.quiver.add_arrow("alpha", "3", "2");
    p.quiver.add_arrow("beta", "2", "1");
    p.quiver.add_arrow("gamma", "3", "1");
    p.quiver.add_arrow("delta", "1", "3");
    p.relations.push_back(mono(f, p.quiver, {"alpha", "beta"}));
    p.relations.push_back(mono(f, p.quiver, {"delta", "alpha"}));
    p.relations.push_back(mono(f, p.quiver, {"beta", "delta"}));
    p.relations.push_back(mono(f, p.quiver, {"delta", "gamma", "delta"}));
    return p;
}

// Two monomial relations on a commutative square: alpha*beta = 0 = gamma*delta.
// Tilted of euclidean type, dim 8, with dim Ext^2(I_4, P_1) = 2.
inline Presentation tilted_a3_tilde(const Field& f = Field::rationals()) {
    Presentation p;
    p.field = f;
    p.quiver.add_vertex("1");
    p.quiver.add_vertex("2");
    p.quiver.add_vertex("3");
    p.quiver.add_vertex("4");
    p.quiver.add_arrow("alpha", "4", "2");
    p.quiver.add_arrow("beta", "2", "1");
    p.quiver.add_arrow("gamma", "4", "3");
    p.quiver.add_arrow("delta", "3", "1");
    p.relations.push_back(mono(f, p.quiver, {"alpha", "beta"}));
    p.relations.push_back(mono(f, p.quiver, {"gamma", "delta"}));
    return p;
}

// Commutative square bound by alpha*beta = gamma*delta: tilted of type D_4.
inline Presentation tilted_d4_commutative(const Field& f = Field::rationals()) {
    Presentation p;
    p.field = f;
    p.quiver.add_vertex("1");
    p.quiver.add_vertex("2");
    p.quiver.add_vertex("3");
    p.quiver.add_vertex("4");
    p.quiver.add_arrow("alpha", "4", "2");
    p.quiver.add_arrow("beta", "2", "1");
    p.quiver.add_arrow("gamma", "4", "3");
    p.quiver.add_arrow("delta", "3", "1");
    p.relations.push_back(commutator(f, p.quiver, {"alpha", "beta"}, {"gamma", "delta"}));
    return p;
}

// Fan 2 <- 4 -> 3 with epsilon: 1 -> 4 and both compositions zero: a second
// tilted D_4 algebra with the same relation-extension.
inline Presentation tilted_d4_fan(const Field& f = Field::rationals()) {
    Presentation p;
    p.field = f;
    p.quiver.add_vertex("1");
    p.quiver.add_vertex("2");
    p.quiver.add_vertex("3");
    p.quiver.add_vertex("4");
    p.quiver.add_arrow("alpha", "4", "2");
    p.quiver.add_arrow("beta", "4", "3");
    p.quiver.add_arrow("epsilon", "1", "4");
    p.relations.push_back(mono(f, p.quiver, {"epsilon", "alpha"}));
    p.relations.push_back(mono(f, p.quiver, {"epsilon", "beta"}));
    return p;
}

// Linear A_3 without relations (hereditary).
inline Presentation hereditary_a3(const Field& f = Field::rationals()) {
    Presentation p;
    p.field = f;
    p.quiver.add_vertex("1");
    p.quiver.add_vertex("2");
    p.quiver.add_vertex("3");
    p.quiver.add_arrow("alpha", "3", "2");
    p.quiver.add_arrow("beta", "2", "1");
    return p;
}

// Kronecker quiver: two parallel arrows, hereditary.
inline Presentation kronecker(const Field& f = Field::rationals()) {
    Presentation p;
    p.field = f;
    p.quiver.add_vertex("1");
    p.quiver.add_vertex("2");
    p.quiver.add_arrow("a", "2", "1");
    p.quiver.add_arrow("b", "2", "1");
    return p;
}

// One loop bound by x^2 = 0 (cyclic quiver, finite-dimensional quotient).
inline Presentation loop_nilpotent(int power = 2, const Field& f = Field::rationals()) {
    Presentation p;
    p.field = f;
    p.quiver.add_vertex("1");
    p.quiver.add_arrow("x", "1", "1");
    std::vector<int> word(power, *p.quiver.arrow_index("x"));
    p.relations.push_back(PathVector::make(f, {{Path::of_arrows(p.quiver, word), f.one()}}));
    return p;
}

// One loop, no relations: infinite-dimensional.
inline Presentation loop_free(const Field& f = Field::rationals()) {
    Presentation p;
    p.field = f;
    p.quiver.add_vertex("1");
    p.quiver.add_arrow("x", "1", "1");
    return p;
}

} // namespace fixtures
