#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relext/field.hpp"

namespace relext {

struct Arrow {
    std::string name;
    int src; // vertex indices
    int tgt;
};

// Finite directed multigraph. Vertices and arrows keep declaration order;
// that order is the tie-breaker for every deterministic choice downstream.
class Quiver {
  public:
    Quiver() = default;

    int add_vertex(const std::string& name);
    int add_arrow(const std::string& name, const std::string& src, const std::string& tgt);
    int add_arrow(const std::string& name, int src, int tgt);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_name(int v) const { return vertices_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::optional<int> vertex_index(const std::string& name) const;
    std::optional<int> arrow_index(const std::string& name) const;

    std::vector<int> arrows_from(int v) const;
    int arrow_count(int src, int tgt) const;

    bool is_acyclic() const;
    bool is_connected() const; // underlying undirected graph

    Quiver reversed() const;

  private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_by_name_;
    std::map<std::string, int> arrow_by_name_;
};

// true iff arrows x -> y and y -> x exist with x != y
bool has_two_cycle(const Quiver& q);

// Path in a quiver: possibly empty arrow sequence (the trivial path e_x).
// Composition reads left to right: in "a*b" the arrow a is traversed first,
// so tgt(a) must equal src(b).
struct Path {
    int src = -1;
    int tgt = -1;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool is_trivial() const { return arrows.empty(); }

    static Path trivial(int vertex) { return Path{vertex, vertex, {}}; }
    static Path of_arrows(const Quiver& q, std::vector<int> arrow_indices);

    std::string display(const Quiver& q) const;

    bool operator==(const Path& o) const {
        return src == o.src && tgt == o.tgt && arrows == o.arrows;
    }
    // degree-lexicographic: by length, then by arrow indices, then by source
    // vertex (relevant for trivial paths only)
    bool operator<(const Path& o) const {
        if (length() != o.length())
            return length() < o.length();
        if (arrows != o.arrows)
            return arrows < o.arrows;
        return src < o.src;
    }
};

// Formal combination of parallel paths with nonzero coefficients.
class PathVector {
  public:
    PathVector() = default;

    // Combines like terms; drops zeros; checks all paths share (src, tgt).
    static PathVector make(const Field& f, std::vector<std::pair<Path, Scalar>> terms);

    bool is_zero() const { return terms_.empty(); }
    int src() const { return src_; }
    int tgt() const { return tgt_; }
    int min_length() const;
    int max_length() const;
    const std::vector<std::pair<Path, Scalar>>& terms() const { return terms_; }

    std::string display(const Quiver& q, const Field& f) const;

  private:
    int src_ = -1;
    int tgt_ = -1;
    std::vector<std::pair<Path, Scalar>> terms_; // sorted by Path order
};

// Bound quiver presentation kQ/I over an exact field.
struct Presentation {
    Field field = Field::rationals();
    Quiver quiver;
    std::vector<PathVector> relations;

    // DuplicateName / NonAdmissibleIdeal / ZeroRelation checks.
    void validate() const;
};

// Syntactic reversal: arrows keep their names with endpoints swapped and
// every relation path runs backwards.
Presentation opposite(const Presentation& p);

// Same quiver and relations with all coefficients re-reduced over another
// field. Throws ZeroRelation if a relation collapses (e.g. p * path over F_p).
Presentation change_field(const Presentation& p, const Field& f);

} // namespace relext
