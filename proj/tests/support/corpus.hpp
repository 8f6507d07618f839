#pragma once

// Deterministic random corpus of acyclic bound quiver presentations with
// global dimension <= 2, used by the property suites. Same seed, same
// corpus: std::mt19937 semantics are fixed by the standard.

#include <random>
#include <vector>

#include "relext/resolution.hpp"

namespace corpus {

using namespace relext;

inline Path concat(const Quiver& q, const Path& u, const Path& mid, const Path& v) {
    std::vector<int> arrows = u.arrows;
    arrows.insert(arrows.end(), mid.arrows.begin(), mid.arrows.end());
    arrows.insert(arrows.end(), v.arrows.begin(), v.arrows.end());
    if (arrows.empty())
        return Path::trivial(u.src);
    return Path::of_arrows(q, arrows);
}

// a random element u * rho * v of the relation ideal
inline PathVector random_ideal_element(std::mt19937& rng, const Presentation& p,
                                       const std::vector<Path>& paths) {
    const PathVector& rho = p.relations[rng() % p.relations.size()];
    std::vector<const Path*> lefts, rights;
    for (const Path& u : paths)
        if (u.tgt == rho.src())
            lefts.push_back(&u);
    for (const Path& v : paths)
        if (v.src == rho.tgt())
            rights.push_back(&v);
    const Path& u = *lefts[rng() % lefts.size()];
    const Path& v = *rights[rng() % rights.size()];
    std::vector<std::pair<Path, Scalar>> terms;
    for (const auto& [mid, c] : rho.terms())
        terms.emplace_back(concat(p.quiver, u, mid, v), c);
    return PathVector::make(p.field, terms);
}

inline std::vector<Presentation> random_gldim2_corpus(int count, std::uint32_t seed,
                                                      const Field& field = Field::rationals()) {
    std::mt19937 rng(seed);
    std::vector<Presentation> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > count * 200)
            throw std::runtime_error("corpus generation stalled");
        Presentation p;
        p.field = field;
        const int n = 2 + static_cast<int>(rng() % 4); // 2..5 vertices
        for (int v = 1; v <= n; ++v)
            p.quiver.add_vertex(std::to_string(v));
        const int m = 1 + static_cast<int>(rng() % 6); // 1..6 arrows
        for (int a = 0; a < m; ++a) {
            int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
            if (i == j)
                continue;
            // orient along the vertex order: higher index -> lower index
            if (i < j)
                std::swap(i, j);
            p.quiver.add_arrow("a" + std::to_string(a + 1), i, j);
        }
        if (p.quiver.num_arrows() == 0 || !p.quiver.is_connected())
            continue;

        std::vector<Path> paths = all_paths_acyclic(p.quiver);
        std::vector<Path> candidates;
        for (const Path& q : paths)
            if (q.length() >= 2 && q.length() <= 3)
                candidates.push_back(q);

        const int want = static_cast<int>(rng() % 4); // 0..3 relations
        for (int r = 0; r < want && !candidates.empty(); ++r) {
            const Path& lhs = candidates[rng() % candidates.size()];
            std::vector<const Path*> parallel;
            for (const Path& q : candidates)
                if (q.src == lhs.src && q.tgt == lhs.tgt && !(q == lhs))
                    parallel.push_back(&q);
            PathVector rel;
            if (!parallel.empty() && rng() % 2 == 0) {
                const Path& rhs = *parallel[rng() % parallel.size()];
                rel = PathVector::make(p.field,
                                       {{lhs, p.field.one()}, {rhs, p.field.neg(p.field.one())}});
            } else {
                rel = PathVector::make(p.field, {{lhs, p.field.one()}});
            }
            bool dup = false;
            for (const PathVector& existing : p.relations)
                if (existing.terms() == rel.terms())
                    dup = true;
            if (!dup)
                p.relations.push_back(std::move(rel));
        }

        Algebra a = build_algebra(p);
        auto gd = global_dimension(a, p.quiver.num_vertices());
        if (!gd || *gd > 2)
            continue;
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace corpus
