#include "relext/representation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "relext/error.hpp"

namespace relext {

int Representation::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

int Representation::vertex_offset(int x) const {
    return std::accumulate(dims.begin(), dims.begin() + x, 0);
}

Matrix Representation::act_path(int src_vertex, const std::vector<int>& arrows) const {
    const Field& f = alg->field;
    Matrix m = Matrix::identity(f, dims[src_vertex]);
    for (int a : arrows)
        m = m * arrow_maps[a];
    return m;
}

Matrix Representation::act_basis_elt(int basis_idx) const {
    check_internal(alg->basis_arrows[basis_idx].has_value(),
                   "basis element has no arrow word");
    return act_path(alg->src[basis_idx], *alg->basis_arrows[basis_idx]);
}

bool Representation::satisfies(const Presentation& p) const {
    for (const PathVector& r : p.relations) {
        Matrix sum(alg->field, dims[r.src()], dims[r.tgt()]);
        for (const auto& [path, c] : r.terms())
            sum = sum + act_path(path.src, path.arrows).scaled(c);
        if (!sum.is_zero())
            return false;
    }
    return true;
}

Representation zero_rep(const Algebra& a) {
    Representation v;
    v.alg = &a;
    v.dims.assign(a.quiver.num_vertices(), 0);
    for (int ar = 0; ar < a.quiver.num_arrows(); ++ar)
        v.arrow_maps.emplace_back(a.field, 0, 0);
    return v;
}

Representation simple_module(const Algebra& a, int vertex) {
    Representation v = zero_rep(a);
    v.dims[vertex] = 1;
    for (int ar = 0; ar < a.quiver.num_arrows(); ++ar) {
        const Arrow& arr = a.quiver.arrow(ar);
        v.arrow_maps[ar] = Matrix(a.field, v.dims[arr.src], v.dims[arr.tgt]);
    }
    return v;
}

namespace {

// Representation on a subset of the algebra basis that is stable under right
// multiplication by arrows, graded by a choice of vertex tag per element.
Representation basis_subset_rep(const Algebra& a, const std::vector<int>& elems,
                                const std::vector<int>& grading_vertex, bool right_action) {
    Representation v;
    v.alg = &a;
    const int nv = a.quiver.num_vertices();
    v.dims.assign(nv, 0);
    std::vector<int> pos(a.dim(), -1);
    std::vector<std::vector<int>> block(nv);
    for (int e : elems) {
        pos[e] = static_cast<int>(block[grading_vertex[e]].size());
        block[grading_vertex[e]].push_back(e);
        ++v.dims[grading_vertex[e]];
    }
    for (int ar = 0; ar < a.quiver.num_arrows(); ++ar) {
        const Arrow& arr = a.quiver.arrow(ar);
        Matrix m(a.field, v.dims[arr.src], v.dims[arr.tgt]);
        for (int i = 0; i < v.dims[arr.src]; ++i) {
            const int b = block[arr.src][i];
            if (right_action) {
                // b * arrow
                for (const auto& [k, c] : a.basis_product(b, a.arrow_rep[ar])) {
                    check_internal(pos[k] >= 0, "right action leaves the subset");
                    m.at(i, pos[k]) = a.field.add(m.at(i, pos[k]), c);
                }
            } else {
                // dual coordinates: entry [b, c] = coefficient of b in arrow * c
                for (int j = 0; j < v.dims[arr.tgt]; ++j) {
                    const int cb = block[arr.tgt][j];
                    for (const auto& [k, s] : a.basis_product(a.arrow_rep[ar], cb))
                        if (k == b)
                            m.at(i, j) = a.field.add(m.at(i, j), s);
                }
            }
        }
        v.arrow_maps.push_back(std::move(m));
    }
    return v;
}

} // namespace

Representation projective(const Algebra& a, int vertex) {
    std::vector<int> elems;
    for (int i = 0; i < a.dim(); ++i)
        if (a.src[i] == vertex)
            elems.push_back(i);
    return basis_subset_rep(a, elems, a.tgt, true);
}

Representation regular_rep(const Algebra& a) {
    std::vector<int> elems(a.dim());
    std::iota(elems.begin(), elems.end(), 0);
    return basis_subset_rep(a, elems, a.tgt, true);
}

Representation dual_regular_rep(const Algebra& a) {
    std::vector<int> elems(a.dim());
    std::iota(elems.begin(), elems.end(), 0);
    return basis_subset_rep(a, elems, a.src, false);
}

Representation injective(const Algebra& a, int vertex) {
    std::vector<int> elems;
    for (int i = 0; i < a.dim(); ++i)
        if (a.tgt[i] == vertex)
            elems.push_back(i);
    return basis_subset_rep(a, elems, a.src, false);
}

Representation dual_rep(const Algebra& op, const Representation& v) {
    Representation d;
    d.alg = &op;
    d.dims = v.dims;
    d.arrow_maps.resize(op.quiver.num_arrows());
    for (int ar = 0; ar < op.quiver.num_arrows(); ++ar) {
        // same arrow name, reversed endpoints: the map dualizes contravariantly
        auto orig = v.alg->quiver.arrow_index(op.quiver.arrow(ar).name);
        check_internal(orig.has_value(), "dual_rep: arrow missing in the base quiver");
        d.arrow_maps[ar] = v.arrow_maps[*orig].transpose();
    }
    return d;
}

bool ModuleMap::is_zero() const {
    for (const Matrix& b : blocks)
        if (!b.is_zero())
            return false;
    return true;
}

ModuleMap ModuleMap::zero(const Field& f, const std::vector<int>& s, const std::vector<int>& t) {
    ModuleMap m;
    m.src_dims = s;
    m.tgt_dims = t;
    for (std::size_t x = 0; x < s.size(); ++x)
        m.blocks.emplace_back(f, s[x], t[x]);
    return m;
}

ModuleMap ModuleMap::identity(const Field& f, const std::vector<int>& d) {
    ModuleMap m;
    m.src_dims = d;
    m.tgt_dims = d;
    for (int n : d)
        m.blocks.push_back(Matrix::identity(f, n));
    return m;
}

ModuleMap ModuleMap::compose(const ModuleMap& then) const {
    check_internal(tgt_dims == then.src_dims, "composition shape mismatch");
    ModuleMap m;
    m.src_dims = src_dims;
    m.tgt_dims = then.tgt_dims;
    for (std::size_t x = 0; x < blocks.size(); ++x)
        m.blocks.push_back(blocks[x] * then.blocks[x]);
    return m;
}

bool ModuleMap::is_natural(const Representation& v, const Representation& w) const {
    if (v.dims != src_dims || w.dims != tgt_dims)
        return false;
    for (int ar = 0; ar < v.alg->quiver.num_arrows(); ++ar) {
        const Arrow& arr = v.alg->quiver.arrow(ar);
        if (v.arrow_maps[ar] * blocks[arr.tgt] != blocks[arr.src] * w.arrow_maps[ar])
            return false;
    }
    return true;
}

SubRep kernel(const ModuleMap& f, const Representation& v, const Representation& w) {
    check_internal(f.is_natural(v, w), "kernel of a non-natural map");
    SubRep k;
    k.rep.alg = v.alg;
    std::vector<Matrix> bases;
    for (std::size_t x = 0; x < f.blocks.size(); ++x) {
        bases.push_back(f.blocks[x].left_kernel());
        k.rep.dims.push_back(static_cast<int>(bases.back().rows()));
    }
    for (int ar = 0; ar < v.alg->quiver.num_arrows(); ++ar) {
        const Arrow& arr = v.alg->quiver.arrow(ar);
        // rows of K_src * A_a lie in the row space of K_tgt
        Matrix image = bases[arr.src] * v.arrow_maps[ar];
        k.rep.arrow_maps.push_back(bases[arr.tgt].express_rows(image));
    }
    k.inclusion.src_dims = k.rep.dims;
    k.inclusion.tgt_dims = v.dims;
    k.inclusion.blocks = std::move(bases);
    return k;
}

std::vector<ModuleMap> hom_basis(const Representation& v, const Representation& w) {
    const Field& f = v.alg->field;
    const int nv = static_cast<int>(v.dims.size());
    std::vector<int> offset(nv + 1, 0);
    for (int x = 0; x < nv; ++x)
        offset[x + 1] = offset[x] + v.dims[x] * w.dims[x];
    const int unknowns = offset[nv];

    // columns = one equation per arrow square entry
    int eqs = 0;
    for (int ar = 0; ar < v.alg->quiver.num_arrows(); ++ar) {
        const Arrow& arr = v.alg->quiver.arrow(ar);
        eqs += v.dims[arr.src] * w.dims[arr.tgt];
    }
    Matrix sys(f, unknowns, eqs);
    int col0 = 0;
    for (int ar = 0; ar < v.alg->quiver.num_arrows(); ++ar) {
        const Arrow& arr = v.alg->quiver.arrow(ar);
        const Matrix& av = v.arrow_maps[ar];
        const Matrix& aw = w.arrow_maps[ar];
        for (int p = 0; p < v.dims[arr.src]; ++p)
            for (int q = 0; q < w.dims[arr.tgt]; ++q) {
                const int col = col0 + p * w.dims[arr.tgt] + q;
                // sum_i av[p,i] f_tgt[i,q] - sum_j f_src[p,j] aw[j,q] = 0
                for (int i = 0; i < v.dims[arr.tgt]; ++i)
                    if (!av.at(p, i).is_zero()) {
                        const int u = offset[arr.tgt] + i * w.dims[arr.tgt] + q;
                        sys.at(u, col) = f.add(sys.at(u, col), av.at(p, i));
                    }
                for (int j = 0; j < w.dims[arr.src]; ++j)
                    if (!aw.at(j, q).is_zero()) {
                        const int u = offset[arr.src] + p * w.dims[arr.src] + j;
                        sys.at(u, col) = f.sub(sys.at(u, col), aw.at(j, q));
                    }
            }
        col0 += v.dims[arr.src] * w.dims[arr.tgt];
    }

    Matrix ker = sys.left_kernel();
    std::vector<ModuleMap> out;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        ModuleMap m = ModuleMap::zero(f, v.dims, w.dims);
        for (int x = 0; x < nv; ++x)
            for (int i = 0; i < v.dims[x]; ++i)
                for (int j = 0; j < w.dims[x]; ++j)
                    m.blocks[x].at(i, j) = ker.at(r, offset[x] + i * w.dims[x] + j);
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::vector<Matrix>> radical_chain(const Representation& v) {
    const Field& f = v.alg->field;
    const int nv = static_cast<int>(v.dims.size());
    std::vector<std::vector<Matrix>> chain;

    // spans closed under all arrow maps, seeded with the arrow images of prev
    auto close_under_arrows = [&](std::vector<EchelonSet>& spans) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int ar = 0; ar < v.alg->quiver.num_arrows(); ++ar) {
                const Arrow& arr = v.alg->quiver.arrow(ar);
                std::vector<EchelonSet::SparseRow> rows;
                for (const auto& [piv, row] : spans[arr.src].rows()) {
                    std::vector<Scalar> vec(v.dims[arr.src], f.zero());
                    for (const auto& [c, s] : row)
                        vec[c] = s;
                    std::vector<Scalar> img = Matrix::apply(vec, v.arrow_maps[ar]);
                    EchelonSet::SparseRow r;
                    for (int j = 0; j < v.dims[arr.tgt]; ++j)
                        if (!img[j].is_zero())
                            r.emplace_back(j, img[j]);
                    rows.push_back(std::move(r));
                }
                for (auto& r : rows)
                    if (spans[arr.tgt].insert(std::move(r)))
                        changed = true;
            }
        }
    };

    // previous layer starts as the whole module
    std::vector<Matrix> prev;
    for (int x = 0; x < nv; ++x)
        prev.push_back(Matrix::identity(f, v.dims[x]));

    while (true) {
        std::vector<EchelonSet> spans(nv, EchelonSet(f));
        for (int ar = 0; ar < v.alg->quiver.num_arrows(); ++ar) {
            const Arrow& arr = v.alg->quiver.arrow(ar);
            Matrix img = prev[arr.src] * v.arrow_maps[ar];
            for (std::size_t i = 0; i < img.rows(); ++i) {
                EchelonSet::SparseRow r;
                for (int j = 0; j < v.dims[arr.tgt]; ++j)
                    if (!img.at(i, j).is_zero())
                        r.emplace_back(j, img.at(i, j));
                spans[arr.tgt].insert(std::move(r));
            }
        }
        close_under_arrows(spans);
        std::vector<Matrix> layer;
        int total = 0;
        for (int x = 0; x < nv; ++x) {
            Matrix m(f, spans[x].rank(), v.dims[x]);
            std::size_t r = 0;
            for (const auto& [piv, row] : spans[x].rows()) {
                for (const auto& [c, s] : row)
                    m.at(r, c) = s;
                ++r;
            }
            total += static_cast<int>(m.rows());
            layer.push_back(std::move(m));
        }
        if (total == 0)
            break;
        chain.push_back(layer);
        prev = std::move(layer);
    }
    return chain;
}

std::vector<std::vector<int>> loewy_series(const Representation& v) {
    auto chain = radical_chain(v);
    const int nv = static_cast<int>(v.dims.size());
    std::vector<std::vector<int>> layers;
    std::vector<int> prev = v.dims;
    for (std::size_t k = 0; k <= chain.size(); ++k) {
        std::vector<int> cur(nv, 0);
        if (k < chain.size())
            for (int x = 0; x < nv; ++x)
                cur[x] = static_cast<int>(chain[k][x].rows());
        std::vector<int> layer(nv);
        for (int x = 0; x < nv; ++x)
            layer[x] = prev[x] - cur[x];
        layers.push_back(layer);
        prev = cur;
    }
    if (!layers.empty()) {
        bool zero = std::all_of(layers.back().begin(), layers.back().end(),
                                [](int d) { return d == 0; });
        if (zero && layers.size() > 1)
            layers.pop_back();
    }
    return layers;
}

std::string loewy_display(const Representation& v) {
    auto layers = loewy_series(v);
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < layers.size(); ++k) {
        if (k)
            os << " / ";
        bool first = true;
        for (std::size_t x = 0; x < layers[k].size(); ++x)
            for (int c = 0; c < layers[k][x]; ++c) {
                if (!first)
                    os << " ";
                os << v.alg->quiver.vertex_name(static_cast<int>(x));
                first = false;
            }
        if (first)
            os << "0";
    }
    os << "]";
    return os.str();
}

std::vector<int> socle_dims(const Representation& v) {
    const Field& f = v.alg->field;
    const int nv = static_cast<int>(v.dims.size());
    std::vector<int> out(nv);
    for (int x = 0; x < nv; ++x) {
        Matrix stacked(f, 0, v.dims[x]);
        for (int ar = 0; ar < v.alg->quiver.num_arrows(); ++ar)
            if (v.alg->quiver.arrow(ar).src == x)
                stacked = stacked.vstack(v.arrow_maps[ar].transpose());
        // v in socle iff v * A_a = 0 for all arrows out of x
        Matrix m = stacked.transpose();
        out[x] = static_cast<int>(m.left_kernel().rows());
    }
    return out;
}

Top top_of(const Representation& v) {
    auto chain = radical_chain(v);
    const Field& f = v.alg->field;
    const int nv = static_cast<int>(v.dims.size());
    Top t;
    t.dims.assign(nv, 0);
    for (int x = 0; x < nv; ++x) {
        EchelonSet span(f);
        if (!chain.empty())
            for (std::size_t i = 0; i < chain[0][x].rows(); ++i) {
                EchelonSet::SparseRow r;
                for (int j = 0; j < v.dims[x]; ++j)
                    if (!chain[0][x].at(i, j).is_zero())
                        r.emplace_back(j, chain[0][x].at(i, j));
                span.insert(std::move(r));
            }
        // greedy unit-vector complement of rad V at x
        std::vector<int> chosen;
        for (int j = 0; j < v.dims[x]; ++j)
            if (span.insert({{j, f.one()}}))
                chosen.push_back(j);
        Matrix reps(f, chosen.size(), v.dims[x]);
        for (std::size_t i = 0; i < chosen.size(); ++i)
            reps.at(i, chosen[i]) = f.one();
        t.dims[x] = static_cast<int>(chosen.size());
        t.reps.push_back(std::move(reps));
    }
    return t;
}

} // namespace relext
