#include "relext/extension.hpp"

#include <algorithm>

#include "relext/error.hpp"

namespace relext {

std::vector<std::vector<int>> ExtendedQuiver::arrow_count_matrix() const {
    const int nv = quiver.num_vertices();
    std::vector<std::vector<int>> m(nv, std::vector<int>(nv, 0));
    for (const Arrow& a : quiver.arrows())
        ++m[a.src][a.tgt];
    return m;
}

ExtensionAlgebra trivial_extension(const Algebra& a, const Bimodule& m,
                                   const std::vector<std::string>& names) {
    verify_bimodule(a, m);
    const Field& f = a.field;
    const int nb = a.dim();
    const int n = nb + m.dim;

    Algebra t;
    t.field = f;
    t.labels = a.labels;
    t.src = a.src;
    t.tgt = a.tgt;
    t.basis_arrows = a.basis_arrows;
    for (int k = 0; k < m.dim; ++k) {
        t.labels.push_back(m.labels[k]);
        t.src.push_back(m.pair_of[k].first);
        t.tgt.push_back(m.pair_of[k].second);
        t.basis_arrows.emplace_back(std::nullopt);
    }
    t.idempotent = a.idempotent;

    t.table.assign(static_cast<std::size_t>(n) * n, {});
    auto put = [&](int i, int j, int k, const Scalar& c) {
        if (!c.is_zero())
            t.table[static_cast<std::size_t>(i) * n + j].emplace_back(k, c);
    };
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            t.table[static_cast<std::size_t>(i) * n + j] = a.basis_product(i, j);
    for (int i = 0; i < nb; ++i)
        for (int k = 0; k < m.dim; ++k) {
            // (b_i, 0)(0, m_k) = (0, b_i . m_k)
            for (int q = 0; q < m.dim; ++q)
                put(i, nb + k, nb + q, m.left[i].at(k, q));
            // (0, m_k)(b_i, 0) = (0, m_k . b_i)
            for (int q = 0; q < m.dim; ++q)
                put(nb + k, i, nb + q, m.right[i].at(k, q));
        }
    // bimodule part squares to zero

    // radical filtration: rad = rad C + M, then honest products
    {
        Matrix radc = a.radical_power(1);
        Matrix rad1(f, radc.rows() + m.dim, n);
        for (std::size_t i = 0; i < radc.rows(); ++i)
            for (int j = 0; j < nb; ++j)
                rad1.at(i, j) = radc.at(i, j);
        for (int k = 0; k < m.dim; ++k)
            rad1.at(radc.rows() + k, nb + k) = f.one();
        t.radical_powers.push_back(rad1);
        while (true) {
            Matrix next = product_space(t, t.radical_powers.back(), rad1);
            if (next.rows() == 0)
                break;
            t.radical_powers.push_back(std::move(next));
        }
    }

    // extended quiver from rad/rad^2 of the total algebra (the trivial
    // extension's own quiver, not the bimodule top)
    t.quiver = a.quiver;
    t.arrow_rep = a.arrow_rep;
    const Matrix rad1 = t.radical_powers[0];
    const Matrix rad2 = t.radical_power(2);
    ExtendedQuiver ext;
    int counter = 0;
    std::size_t name_at = 0;
    for (int x = 0; x < a.quiver.num_vertices(); ++x)
        for (int y = 0; y < a.quiver.num_vertices(); ++y) {
            // candidate units in e_x rad e_y: nontrivial base paths and
            // bimodule coordinates, in basis order (top representatives of
            // each Peirce block come first among the latter)
            std::vector<int> block;
            for (int i = 0; i < n; ++i)
                if (t.src[i] == x && t.tgt[i] == y &&
                    !(i < nb && a.basis_arrows[i] && a.basis_arrows[i]->empty()))
                    block.push_back(i);
            if (block.empty())
                continue;
            EchelonSet span(f);
            auto insert_vec = [&](const std::vector<Scalar>& v) {
                EchelonSet::SparseRow r;
                for (int j = 0; j < n; ++j)
                    if (!v[j].is_zero())
                        r.emplace_back(j, v[j]);
                return span.insert(std::move(r));
            };
            // seed with rad^2 restricted to the block and the base arrows
            for (std::size_t i = 0; i < rad2.rows(); ++i)
                insert_vec(rad2.row(i));
            for (int ar = 0; ar < a.quiver.num_arrows(); ++ar) {
                const Arrow& arr = a.quiver.arrow(ar);
                if (arr.src == x && arr.tgt == y)
                    insert_vec(t.basis_vector(a.arrow_rep[ar]));
            }
            for (int u : block) {
                if (!span.insert({{u, f.one()}}))
                    continue;
                // u is a new arrow representative
                std::string name;
                if (name_at < names.size())
                    name = names[name_at++];
                else
                    name = "z" + std::to_string(++counter);
                int ar = t.quiver.add_arrow(name, x, y);
                t.arrow_rep.push_back(u);
                ext.new_arrows.push_back(ar);
                std::vector<Scalar> rep(m.dim, f.zero());
                check_internal(u >= nb, "new arrow representative outside the bimodule");
                rep[u - nb] = f.one();
                ext.reps.push_back(std::move(rep));
            }
        }
    ext.quiver = t.quiver;

    // audit against rad/rad^2 dimensions
    auto counts = quiver_arrow_counts(t);
    for (int x = 0; x < t.quiver.num_vertices(); ++x)
        for (int y = 0; y < t.quiver.num_vertices(); ++y)
            check_internal(counts[x][y] == t.quiver.arrow_count(x, y),
                           "extension quiver disagrees with rad/rad^2");

    t.verify(); // associativity and idempotent axioms on all basis triples

    ExtensionAlgebra e;
    e.base = a;
    e.bimodule = m;
    e.total = std::move(t);
    e.extended = std::move(ext);
    return e;
}

ExtendedQuiver quiver_from_extension(const ExtensionAlgebra& e) {
    // recompute from the radical filtration; the construction stored the
    // same data, so this doubles as an audit
    auto counts = quiver_arrow_counts(e.total);
    ExtendedQuiver out;
    out.quiver = e.extended.quiver;
    out.new_arrows = e.extended.new_arrows;
    out.reps = e.extended.reps;
    std::vector<std::vector<int>> declared(out.quiver.num_vertices(),
                                           std::vector<int>(out.quiver.num_vertices(), 0));
    for (const Arrow& a : out.quiver.arrows())
        ++declared[a.src][a.tgt];
    check_internal(counts == declared, "extension quiver drifted from rad/rad^2");
    return out;
}

ExtendedQuiver relext_quiver(const Presentation& p, const std::vector<std::string>& names) {
    if (!p.quiver.is_acyclic())
        throw Error(ErrorKind::CyclicQuiver,
                    "the relation-counting construction needs an acyclic quiver");
    Algebra a = build_algebra(p);
    if (!global_dimension(a, 2))
        throw Error(ErrorKind::GlobalDimensionTooHigh,
                    "relation-extension needs global dimension <= 2");
    auto counts = ideal_top_counts(p);
    ExtendedQuiver out;
    out.quiver = p.quiver;
    int counter = 0;
    std::size_t name_at = 0;
    for (int x = 0; x < p.quiver.num_vertices(); ++x)
        for (int y = 0; y < p.quiver.num_vertices(); ++y) {
            auto it = counts.find({y, x}); // one arrow x -> y per relation y -> x
            if (it == counts.end())
                continue;
            for (int k = 0; k < it->second; ++k) {
                std::string name = name_at < names.size() ? names[name_at++]
                                                          : "z" + std::to_string(++counter);
                out.new_arrows.push_back(out.quiver.add_arrow(name, x, y));
                out.reps.emplace_back();
            }
        }
    return out;
}

std::vector<Representation> extension_projectives(const ExtensionAlgebra& e) {
    std::vector<Representation> out;
    for (int x = 0; x < e.total.quiver.num_vertices(); ++x)
        out.push_back(projective(e.total, x));
    return out;
}

Presentation present_extension(const ExtensionAlgebra& e) {
    const Algebra& t = e.total;
    const Field& f = t.field;
    const int nilp = t.nilpotency();

    std::vector<Path> paths = paths_up_to(t.quiver, nilp);
    const int np = static_cast<int>(paths.size());
    check_internal(np < 100000, "path enumeration of the extension exploded");

    // evaluate the induced map k(extended quiver) -> extension
    std::vector<std::vector<Scalar>> value(np);
    std::map<std::vector<int>, int> by_word; // arrow word (with src sentinel) -> path id
    auto key_of = [](const Path& p) {
        std::vector<int> k{p.src};
        k.insert(k.end(), p.arrows.begin(), p.arrows.end());
        return k;
    };
    for (int i = 0; i < np; ++i)
        by_word[key_of(paths[i])] = i;
    for (int i = 0; i < np; ++i) {
        const Path& p = paths[i];
        if (p.is_trivial()) {
            value[i] = t.basis_vector(t.idempotent[p.src]);
        } else {
            std::vector<int> prefix = key_of(p);
            prefix.pop_back();
            const std::vector<Scalar>& prev = value[by_word.at(prefix)];
            value[i] = Matrix::apply(prev, t.right_mult(t.arrow_rep[p.arrows.back()]));
        }
    }

    // surjectivity audit
    {
        EchelonSet span(f);
        for (int i = 0; i < np; ++i) {
            EchelonSet::SparseRow r;
            for (int j = 0; j < t.dim(); ++j)
                if (!value[i][j].is_zero())
                    r.emplace_back(j, value[i][j]);
            span.insert(std::move(r));
        }
        if (static_cast<int>(span.rank()) != t.dim())
            throw Error(ErrorKind::RepresentativeChoiceFailed,
                        "arrow representatives do not generate the extension");
    }

    // kernel of the evaluation per ordered vertex pair, as sparse rows over
    // global path ids
    const int nv = t.quiver.num_vertices();
    std::map<std::pair<int, int>, std::vector<EchelonSet::SparseRow>> kernels;
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y) {
            std::vector<int> pid;
            for (int i = 0; i < np; ++i)
                if (paths[i].src == x && paths[i].tgt == y)
                    pid.push_back(i);
            if (pid.empty())
                continue;
            std::vector<int> cols = t.pair_block(x, y);
            Matrix eval(f, pid.size(), cols.size());
            for (std::size_t i = 0; i < pid.size(); ++i)
                for (std::size_t j = 0; j < cols.size(); ++j)
                    eval.at(i, j) = value[pid[i]][cols[j]];
            Matrix ker = eval.left_kernel();
            if (ker.rows() == 0)
                continue;
            auto& rows = kernels[{x, y}];
            for (std::size_t r = 0; r < ker.rows(); ++r) {
                EchelonSet::SparseRow row;
                for (std::size_t c = 0; c < ker.cols(); ++c)
                    if (!ker.at(r, c).is_zero())
                        row.emplace_back(pid[c], ker.at(r, c));
                rows.push_back(std::move(row));
            }
        }

    // minimize per pair: generators of the (x, y) component of the kernel
    // ideal modulo J*ker + ker*J, whose (x, y) part is spanned by one-arrow
    // shifts of the neighbouring pairs' kernels (truncated at the nilpotency
    // index: longer components are single-path kernel elements)
    auto shift = [&](const EchelonSet::SparseRow& row, int arrow, bool left) {
        EchelonSet::SparseRow out;
        for (const auto& [id, c] : row) {
            const Path& p = paths[id];
            if (p.length() + 1 > nilp)
                continue;
            std::vector<int> key;
            if (left) {
                key.push_back(t.quiver.arrow(arrow).src);
                key.push_back(arrow);
                key.insert(key.end(), p.arrows.begin(), p.arrows.end());
            } else {
                key.push_back(p.src);
                key.insert(key.end(), p.arrows.begin(), p.arrows.end());
                key.push_back(arrow);
            }
            auto it = by_word.find(key);
            check_internal(it != by_word.end(), "shifted path missing");
            out.emplace_back(it->second, c);
        }
        return out;
    };

    std::vector<PathVector> relations;
    for (const auto& [pr, rows] : kernels) {
        const auto [x, y] = pr;
        EchelonSet sub(f);
        for (int ar = 0; ar < t.quiver.num_arrows(); ++ar) {
            const Arrow& arr = t.quiver.arrow(ar);
            if (arr.src == x) {
                auto it = kernels.find({arr.tgt, y});
                if (it != kernels.end())
                    for (const auto& row : it->second)
                        sub.insert(shift(row, ar, true));
            }
            if (arr.tgt == y) {
                auto it = kernels.find({x, arr.src});
                if (it != kernels.end())
                    for (const auto& row : it->second)
                        sub.insert(shift(row, ar, false));
            }
        }
        // greedy minimal generators: kernel rows extending J*K + K*J
        for (const auto& row : rows) {
            if (!sub.insert(row))
                continue;
            std::vector<std::pair<Path, Scalar>> terms;
            for (const auto& [id, c] : row)
                terms.emplace_back(paths[id], c);
            relations.push_back(PathVector::make(f, terms));
            check_internal(relations.back().min_length() >= 2,
                           "kernel element with a short component");
        }
    }

    Presentation out;
    out.field = f;
    out.quiver = t.quiver;
    out.relations = std::move(relations);

    // round-trip contract: same dimension and same quiver after rebuilding
    Algebra rebuilt = build_algebra(out);
    check_internal(rebuilt.dim() == t.dim(), "presentation round-trip dimension mismatch");
    auto counts = quiver_arrow_counts(rebuilt);
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y)
            check_internal(counts[x][y] == t.quiver.arrow_count(x, y),
                           "presentation round-trip quiver mismatch");
    return out;
}

} // namespace relext
