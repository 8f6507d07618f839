#include "relext/resolution.hpp"

#include <algorithm>
#include <map>

#include "relext/error.hpp"

namespace relext {

int FreeModule::multiplicity(int y) const {
    return static_cast<int>(std::count(gen_vertices.begin(), gen_vertices.end(), y));
}

FreeModule free_module(const Algebra& a, std::vector<int> gens) {
    FreeModule p;
    p.alg = &a;
    p.gen_vertices = std::move(gens);
    p.rep.alg = &a;
    const int nv = a.quiver.num_vertices();
    p.rep.dims.assign(nv, 0);
    p.gen_coord.assign(p.gen_vertices.size(), -1);

    // coordinates per vertex block: generators in order, basis elements of
    // that source in order
    std::vector<std::vector<std::pair<int, int>>> block(nv);
    for (int j = 0; j < p.rank(); ++j)
        for (int b = 0; b < a.dim(); ++b)
            if (a.src[b] == p.gen_vertices[j])
                block[a.tgt[b]].emplace_back(j, b);
    std::vector<std::map<std::pair<int, int>, int>> pos(nv);
    for (int x = 0; x < nv; ++x) {
        p.rep.dims[x] = static_cast<int>(block[x].size());
        for (int i = 0; i < p.rep.dims[x]; ++i)
            pos[x][block[x][i]] = i;
    }
    int offset = 0;
    for (int x = 0; x < nv; ++x) {
        for (int i = 0; i < p.rep.dims[x]; ++i) {
            auto [j, b] = block[x][i];
            p.coords.emplace_back(j, b);
            if (b == a.idempotent[p.gen_vertices[j]])
                p.gen_coord[j] = offset + i;
        }
        offset += p.rep.dims[x];
    }
    for (int j = 0; j < p.rank(); ++j)
        check_internal(p.gen_coord[j] >= 0, "free module generator coordinate missing");

    for (int ar = 0; ar < a.quiver.num_arrows(); ++ar) {
        const Arrow& arr = a.quiver.arrow(ar);
        Matrix m(a.field, p.rep.dims[arr.src], p.rep.dims[arr.tgt]);
        for (int i = 0; i < p.rep.dims[arr.src]; ++i) {
            auto [j, b] = block[arr.src][i];
            for (const auto& [k, c] : a.basis_product(b, a.arrow_rep[ar])) {
                auto it = pos[arr.tgt].find({j, k});
                check_internal(it != pos[arr.tgt].end(), "free module coordinate missing");
                m.at(i, it->second) = a.field.add(m.at(i, it->second), c);
            }
        }
        p.rep.arrow_maps.push_back(std::move(m));
    }
    return p;
}

ModuleMap free_map(const FreeModule& p, const Representation& target,
                   const std::vector<std::vector<Scalar>>& images) {
    const Algebra& a = *p.alg;
    ModuleMap m = ModuleMap::zero(a.field, p.rep.dims, target.dims);
    int flat = 0;
    for (int x = 0; x < static_cast<int>(p.rep.dims.size()); ++x)
        for (int i = 0; i < p.rep.dims[x]; ++i, ++flat) {
            auto [j, b] = p.coords[flat];
            // image of g_j * b is images[j] acted on by b
            std::vector<Scalar> row =
                Matrix::apply(images[j], target.act_basis_elt(b));
            for (int q = 0; q < target.dims[x]; ++q)
                m.blocks[x].at(i, q) = row[q];
        }
    return m;
}

int hom_free_dim(const FreeModule& p, const Representation& n) {
    int d = 0;
    for (int y : p.gen_vertices)
        d += n.dims[y];
    return d;
}

ModuleMap hom_coords_to_map(const FreeModule& p, const Representation& n,
                            const std::vector<Scalar>& coords) {
    std::vector<std::vector<Scalar>> images;
    std::size_t at = 0;
    for (int y : p.gen_vertices) {
        images.emplace_back(coords.begin() + at, coords.begin() + at + n.dims[y]);
        at += n.dims[y];
    }
    check_internal(at == coords.size(), "hom coordinate length mismatch");
    return free_map(p, n, images);
}

std::vector<Scalar> map_to_hom_coords(const FreeModule& p, const ModuleMap& m) {
    std::vector<Scalar> out;
    for (int j = 0; j < p.rank(); ++j) {
        const int y = p.gen_vertices[j];
        const int local = p.gen_coord[j] - p.rep.vertex_offset(y);
        std::vector<Scalar> row = m.blocks[y].row(local);
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

Cover projective_cover(const Representation& v) {
    if (v.is_zero())
        throw Error(ErrorKind::ZeroModule, "projective cover of the zero module");
    const Algebra& a = *v.alg;
    Top t = top_of(v);
    std::vector<int> gens;
    std::vector<std::vector<Scalar>> images;
    for (int x = 0; x < static_cast<int>(t.dims.size()); ++x)
        for (int i = 0; i < t.dims[x]; ++i) {
            gens.push_back(x);
            images.push_back(t.reps[x].row(i));
        }
    Cover c;
    c.proj = free_module(a, std::move(gens));
    c.map = free_map(c.proj, v, images);
    // a cover of the top is automatically surjective by Nakayama; audit it
    for (std::size_t x = 0; x < c.map.blocks.size(); ++x)
        check_internal(static_cast<int>(c.map.blocks[x].rank()) == v.dims[x],
                       "projective cover not surjective");
    return c;
}

Resolution minimal_resolution(const Representation& v, int max_degree) {
    check_internal(max_degree >= 0, "negative resolution degree");
    Resolution r;
    r.module = v;
    if (v.is_zero()) {
        r.terms.push_back(free_module(*v.alg, {}));
        r.augmentation = ModuleMap::zero(v.alg->field, r.terms[0].rep.dims, v.dims);
        r.complete = true;
        return r;
    }
    Cover c0 = projective_cover(v);
    r.augmentation = c0.map;
    SubRep syzygy = kernel(c0.map, c0.proj.rep, v);
    r.terms.push_back(std::move(c0.proj));
    for (int deg = 1; deg <= max_degree; ++deg) {
        if (syzygy.rep.is_zero()) {
            r.complete = true;
            return r;
        }
        Cover c = projective_cover(syzygy.rep);
        r.diffs.push_back(c.map.compose(syzygy.inclusion));
        SubRep next = kernel(c.map, c.proj.rep, syzygy.rep);
        r.terms.push_back(std::move(c.proj));
        syzygy = std::move(next);
    }
    r.complete = syzygy.rep.is_zero();
    return r;
}

Resolution minimal_resolution(const Representation& v) {
    return minimal_resolution(v, v.alg->nilpotency() + 1);
}

namespace {

// cache of action matrices of algebra basis elements on a representation
struct ActCache {
    const Representation* n;
    std::map<int, Matrix> acts;
    const Matrix& get(int b) {
        auto it = acts.find(b);
        if (it == acts.end())
            it = acts.emplace(b, n->act_basis_elt(b)).first;
        return it->second;
    }
};

// matrix of Hom(d, N): Hom(P, N) -> Hom(Pnext, N), phi -> d o phi, in the
// generator coordinates of the two free modules
Matrix hom_differential(const FreeModule& pnext, const ModuleMap& d, const FreeModule& p,
                        const Representation& n, ActCache& cache) {
    const Field& f = n.alg->field;
    Matrix t(f, hom_free_dim(p, n), hom_free_dim(pnext, n));
    // offsets of phi-coordinates per generator of p
    std::vector<int> poff(p.rank() + 1, 0);
    for (int l = 0; l < p.rank(); ++l)
        poff[l + 1] = poff[l] + n.dims[p.gen_vertices[l]];
    int qoff = 0;
    for (int j = 0; j < pnext.rank(); ++j) {
        const int y = pnext.gen_vertices[j];
        const int local = pnext.gen_coord[j] - pnext.rep.vertex_offset(y);
        std::vector<Scalar> w = d.blocks[y].row(local); // d(g_j) in P's y-block
        const int pvo = p.rep.vertex_offset(y);
        for (int posn = 0; posn < p.rep.dims[y]; ++posn) {
            if (w[posn].is_zero())
                continue;
            auto [l, b] = p.coords[pvo + posn];
            const Matrix& act = cache.get(b); // n_{y_l} -> n_y
            for (std::size_t beta = 0; beta < act.rows(); ++beta)
                for (std::size_t gamma = 0; gamma < act.cols(); ++gamma)
                    if (!act.at(beta, gamma).is_zero())
                        t.at(poff[l] + beta, qoff + gamma) =
                            f.add(t.at(poff[l] + beta, qoff + gamma),
                                  f.mul(w[posn], act.at(beta, gamma)));
        }
        qoff += n.dims[y];
    }
    return t;
}

int ext_from_resolution(const Resolution& res, const Representation& n, int i) {
    if (i > res.length())
        return 0;
    ActCache cache{&n, {}};
    const int h_i = hom_free_dim(res.terms[i], n);
    std::size_t rank_ti = 0;
    if (i + 1 <= res.length()) {
        Matrix t = hom_differential(res.terms[i + 1], res.diffs[i], res.terms[i], n, cache);
        rank_ti = t.rank();
    }
    std::size_t rank_prev = 0;
    if (i >= 1) {
        Matrix t = hom_differential(res.terms[i], res.diffs[i - 1], res.terms[i - 1], n, cache);
        rank_prev = t.rank();
    }
    return h_i - static_cast<int>(rank_ti) - static_cast<int>(rank_prev);
}

} // namespace

int ext_dim(const Representation& m, const Representation& n, int i) {
    check_internal(i >= 0, "negative Ext degree");
    if (m.is_zero() || n.is_zero())
        return 0;
    Resolution res = minimal_resolution(m, i + 1);
    if (i > res.length() && !res.complete)
        internal_error("resolution too short for the requested Ext degree");
    return ext_from_resolution(res, n, i);
}

std::optional<int> projective_dimension(const Representation& v, int bound) {
    if (v.is_zero())
        return 0;
    Resolution res = minimal_resolution(v, bound);
    if (!res.complete)
        return std::nullopt;
    return res.length();
}

std::optional<int> global_dimension(const Algebra& a, int bound) {
    int g = 0;
    for (int x = 0; x < a.quiver.num_vertices(); ++x) {
        auto pd = projective_dimension(simple_module(a, x), bound);
        if (!pd)
            return std::nullopt;
        g = std::max(g, *pd);
    }
    return g;
}

std::optional<int> injective_dimension(const Algebra& a, const Representation& v, int bound) {
    Algebra op = opposite(a);
    Representation dv = dual_rep(op, v);
    return projective_dimension(dv, bound);
}

std::vector<std::vector<int>> ext_simple_table(const Algebra& a, int i) {
    const int nv = a.quiver.num_vertices();
    std::vector<std::vector<int>> table(nv, std::vector<int>(nv, 0));
    for (int x = 0; x < nv; ++x) {
        Resolution res = minimal_resolution(simple_module(a, x), i + 1);
        for (int y = 0; y < nv; ++y) {
            const int viaHom = ext_from_resolution(res, simple_module(a, y), i);
            const int viaMult = i <= res.length() ? res.terms[i].multiplicity(y) : 0;
            check_internal(viaHom == viaMult,
                           "Ext(S,S) cohomology and multiplicity readings disagree");
            table[x][y] = viaHom;
        }
    }
    return table;
}

std::vector<ModuleMap> lift_endomorphism(const Resolution& res, const ModuleMap& f,
                                         const LiftOptions& opts) {
    const Representation& v = res.module;
    if (!f.is_natural(v, v))
        throw Error(ErrorKind::NotAModuleMap, "endomorphism violates naturality");
    const Field& field = v.alg->field;
    std::mt19937 rng(opts.seed);
    std::uniform_int_distribution<int> coeff(-2, 2);

    std::vector<ModuleMap> chain;
    const ModuleMap* prev = &f;
    for (std::size_t deg = 0; deg < res.terms.size(); ++deg) {
        const FreeModule& p = res.terms[deg];
        const ModuleMap& t = deg == 0 ? res.augmentation : res.diffs[deg - 1];
        // per-vertex solvers for x * T = rhs, reused across generators
        std::map<int, LeftSolver> solvers;
        std::vector<std::vector<Scalar>> images;
        for (int j = 0; j < p.rank(); ++j) {
            const int y = p.gen_vertices[j];
            auto it = solvers.find(y);
            if (it == solvers.end())
                it = solvers.emplace(y, LeftSolver(t.blocks[y])).first;
            const int local = p.gen_coord[j] - p.rep.vertex_offset(y);
            // rhs = (T then prev)(g_j)
            std::vector<Scalar> rhs =
                Matrix::apply(t.blocks[y].row(local), prev->blocks[y]);
            std::vector<Scalar> x;
            if (!it->second.solve(rhs, x))
                internal_error("chain lift system unsolvable");
            if (opts.randomize) {
                const Matrix& ker = it->second.kernel();
                for (std::size_t r = 0; r < ker.rows(); ++r) {
                    const Scalar c = field.from_long(coeff(rng));
                    if (c.is_zero())
                        continue;
                    for (std::size_t q = 0; q < x.size(); ++q)
                        x[q] = field.add(x[q], field.mul(c, ker.at(r, q)));
                }
            }
            images.push_back(std::move(x));
        }
        chain.push_back(free_map(p, p.rep, images));
        prev = &chain.back();
    }
    return chain;
}

} // namespace relext
