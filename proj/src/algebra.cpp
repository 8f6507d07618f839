#include "relext/algebra.hpp"

#include <algorithm>

#include "relext/error.hpp"

namespace relext {

std::vector<Scalar> Algebra::mul(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
    const int n = dim();
    check_internal(static_cast<int>(u.size()) == n && static_cast<int>(v.size()) == n,
                   "element length mismatch");
    std::vector<Scalar> r(n, field.zero());
    for (int i = 0; i < n; ++i) {
        if (u[i].is_zero())
            continue;
        for (int j = 0; j < n; ++j) {
            if (v[j].is_zero())
                continue;
            const Scalar c = field.mul(u[i], v[j]);
            for (const auto& [k, s] : basis_product(i, j))
                r[k] = field.add(r[k], field.mul(c, s));
        }
    }
    return r;
}

std::vector<Scalar> Algebra::unit() const {
    std::vector<Scalar> r(dim(), field.zero());
    for (int e : idempotent)
        r[e] = field.one();
    return r;
}

std::vector<Scalar> Algebra::basis_vector(int i) const {
    std::vector<Scalar> r(dim(), field.zero());
    r[i] = field.one();
    return r;
}

Matrix Algebra::right_mult(int j) const {
    Matrix m(field, dim(), dim());
    for (int i = 0; i < dim(); ++i)
        for (const auto& [k, s] : basis_product(i, j))
            m.at(i, k) = field.add(m.at(i, k), s);
    return m;
}

Matrix Algebra::left_mult(int j) const {
    Matrix m(field, dim(), dim());
    for (int i = 0; i < dim(); ++i)
        for (const auto& [k, s] : basis_product(j, i))
            m.at(i, k) = field.add(m.at(i, k), s);
    return m;
}

Matrix Algebra::right_mult_elem(const std::vector<Scalar>& u) const {
    Matrix m(field, dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        if (u[j].is_zero())
            continue;
        for (int i = 0; i < dim(); ++i)
            for (const auto& [k, s] : basis_product(i, j))
                m.at(i, k) = field.add(m.at(i, k), field.mul(u[j], s));
    }
    return m;
}

Matrix Algebra::left_mult_elem(const std::vector<Scalar>& u) const {
    Matrix m(field, dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        if (u[j].is_zero())
            continue;
        for (int i = 0; i < dim(); ++i)
            for (const auto& [k, s] : basis_product(j, i))
                m.at(i, k) = field.add(m.at(i, k), field.mul(u[j], s));
    }
    return m;
}

Matrix Algebra::radical_power(int k) const {
    check_internal(k >= 1, "radical_power wants k >= 1");
    if (k > static_cast<int>(radical_powers.size()))
        return Matrix(field, 0, dim());
    return radical_powers[k - 1];
}

std::vector<int> Algebra::pair_block(int x, int y) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (src[i] == x && tgt[i] == y)
            out.push_back(i);
    return out;
}

void Algebra::verify() const {
    const int n = dim();
    // idempotent axioms and tag consistency
    for (int x = 0; x < quiver.num_vertices(); ++x) {
        const int ex = idempotent[x];
        check_internal(src[ex] == x && tgt[ex] == x, "idempotent tag mismatch");
        for (int y = 0; y < quiver.num_vertices(); ++y) {
            auto p = basis_product(ex, idempotent[y]);
            if (x == y)
                check_internal(p.size() == 1 && p[0].first == ex && p[0].second == field.one(),
                               "e_x * e_x != e_x");
            else
                check_internal(p.empty(), "e_x * e_y != 0");
        }
    }
    for (int i = 0; i < n; ++i) {
        auto l = basis_product(idempotent[src[i]], i);
        check_internal(l.size() == 1 && l[0].first == i && l[0].second == field.one(),
                       "e_src * b != b");
        auto r = basis_product(i, idempotent[tgt[i]]);
        check_internal(r.size() == 1 && r[0].first == i && r[0].second == field.one(),
                       "b * e_tgt != b");
        for (int x = 0; x < quiver.num_vertices(); ++x) {
            if (x != src[i])
                check_internal(basis_product(idempotent[x], i).empty(), "e_x * b != 0 off-source");
            if (x != tgt[i])
                check_internal(basis_product(i, idempotent[x]).empty(), "b * e_x != 0 off-target");
        }
    }
    // associativity on all basis triples
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& ij = basis_product(i, j);
            if (ij.empty() && tgt[i] != src[j])
                continue;
            for (int k = 0; k < n; ++k) {
                std::vector<Scalar> lhs(n, field.zero()), rhs(n, field.zero());
                for (const auto& [m, c] : ij)
                    for (const auto& [t, d] : basis_product(m, k))
                        lhs[t] = field.add(lhs[t], field.mul(c, d));
                for (const auto& [m, c] : basis_product(j, k))
                    for (const auto& [t, d] : basis_product(i, m))
                        rhs[t] = field.add(rhs[t], field.mul(c, d));
                check_internal(lhs == rhs, "associativity fails on a basis triple");
            }
        }
}

// ---------------------------------------------------------------------------
// path enumeration for build_algebra

namespace {

struct PathTable {
    const Quiver* q;
    std::vector<Path> paths;                 // id -> path, ids in deglex order
    std::vector<char> dead;                  // certified member of the ideal
    std::vector<std::vector<int>> by_length; // length -> ids
    std::map<std::pair<int, int>, int> child;
    std::vector<int> trivial_id;

    explicit PathTable(const Quiver& quiver) : q(&quiver) {
        by_length.emplace_back();
        for (int v = 0; v < q->num_vertices(); ++v) {
            trivial_id.push_back(add(Path::trivial(v), 0));
        }
        by_length.emplace_back();
        for (int a = 0; a < q->num_arrows(); ++a) {
            int id = add(Path::of_arrows(*q, {a}), 1);
            child[{trivial_id[q->arrow(a).src], a}] = id;
        }
    }

    int add(Path p, int len) {
        paths.push_back(std::move(p));
        dead.push_back(false);
        by_length[len].push_back(static_cast<int>(paths.size()) - 1);
        return static_cast<int>(paths.size()) - 1;
    }

    // next length layer; returns number of paths added. Dead paths are
    // extended too: the truncated ideal span below needs every product
    // u * rho * v over enumerated paths, not only over surviving ones.
    int extend() {
        const int len = static_cast<int>(by_length.size());
        by_length.emplace_back();
        int added = 0;
        for (int pid : by_length[len - 1]) {
            const Path& p = paths[pid];
            for (int a = 0; a < q->num_arrows(); ++a) {
                if (q->arrow(a).src != p.tgt)
                    continue;
                Path np = p;
                np.arrows.push_back(a);
                np.tgt = q->arrow(a).tgt;
                int id = add(std::move(np), len);
                child[{pid, a}] = id;
                ++added;
            }
        }
        return added;
    }

    // walk u + mid + v through the child table; -1 when not enumerated
    int locate(const Path& u, const Path& mid, const Path& v) const {
        int cur = trivial_id[u.is_trivial() ? u.src : q->arrow(u.arrows.front()).src];
        auto step = [&](const std::vector<int>& arrows) {
            for (int a : arrows) {
                if (cur < 0)
                    return;
                auto it = child.find({cur, a});
                cur = (it == child.end()) ? -1 : it->second;
            }
        };
        step(u.arrows);
        step(mid.arrows);
        step(v.arrows);
        return cur;
    }

    int max_length() const { return static_cast<int>(by_length.size()) - 1; }
};

} // namespace

std::vector<Path> all_paths_acyclic(const Quiver& q) {
    if (!q.is_acyclic())
        throw Error(ErrorKind::CyclicQuiver, "quiver has oriented cycles");
    PathTable t(q);
    while (t.extend() > 0) {
    }
    return t.paths;
}

std::vector<Path> paths_up_to(const Quiver& q, int max_len) {
    PathTable t(q);
    for (int len = 2; len <= max_len; ++len)
        if (t.extend() == 0)
            break;
    if (max_len == 0) {
        std::vector<Path> out;
        for (int v = 0; v < q.num_vertices(); ++v)
            out.push_back(Path::trivial(v));
        return out;
    }
    return t.paths;
}

Algebra build_algebra(const Presentation& p, const BuildOptions& opts) {
    p.validate();
    const Field& F = p.field;
    const Quiver& Q = p.quiver;

    int spread = 0;
    for (const PathVector& r : p.relations)
        spread = std::max(spread, r.max_length() - r.min_length());

    PathTable tab(Q);
    EchelonSet ideal(F); // untruncated generator span, coordinates = path ids

    auto add_generators_with_max_component = [&](int total) {
        // all u * rho * v whose longest component has length == total
        for (const PathVector& rho : p.relations) {
            const int k = total - rho.max_length();
            if (k < 0)
                continue;
            for (int ulen = 0; ulen <= k; ++ulen) {
                const int vlen = k - ulen;
                if (ulen >= static_cast<int>(tab.by_length.size()) ||
                    vlen >= static_cast<int>(tab.by_length.size()))
                    continue;
                for (int uid : tab.by_length[ulen]) {
                    if (tab.paths[uid].tgt != rho.src())
                        continue;
                    for (int vid : tab.by_length[vlen]) {
                        if (tab.paths[vid].src != rho.tgt())
                            continue;
                        EchelonSet::SparseRow row;
                        for (const auto& [mid, c] : rho.terms()) {
                            int id = tab.locate(tab.paths[uid], mid, tab.paths[vid]);
                            check_internal(id >= 0, "generator component not enumerated");
                            row.emplace_back(id, c);
                        }
                        ideal.insert(std::move(row));
                    }
                }
            }
        }
    };

    auto mark_deaths = [&] {
        for (const auto& [piv, row] : ideal.rows()) {
            int id = static_cast<int>(piv);
            if (tab.dead[id])
                continue;
            if (ideal.reduce({{piv, F.one()}}).empty())
                tab.dead[id] = true;
        }
    };

    int cut = -1;
    for (int n = 2;; ++n) {
        if (n > opts.max_length)
            throw Error(ErrorKind::InfiniteDimensional,
                        "no nilpotency bound <= " + std::to_string(opts.max_length) +
                            " found: the quotient is infinite-dimensional or the ideal "
                            "is not admissible");
        tab.extend();
        if (static_cast<long>(tab.paths.size()) > opts.path_budget)
            throw Error(ErrorKind::InfiniteDimensional,
                        "path enumeration exceeded the budget of " +
                            std::to_string(opts.path_budget) +
                            " paths: presumed infinite-dimensional");
        add_generators_with_max_component(n);
        mark_deaths();
        // smallest l with every length-l path certified inside the ideal;
        // that certifies J^l contained in I, so truncating at l-1 is exact
        cut = -1;
        for (int l = 1; l <= n && cut < 0; ++l) {
            bool all_dead = true;
            for (int pid : tab.by_length[l])
                if (!tab.dead[pid]) {
                    all_dead = false;
                    break;
                }
            if (all_dead)
                cut = l;
        }
        // ensure every (cut-1)-truncated generator has its components
        // enumerated before finalizing (mixed-length relations only)
        if (cut >= 0 && n >= cut - 1 + spread)
            break;
    }

    // truncated generator span: pi_{cut-1}(u * rho * v) over all u, v with
    // some surviving component; equals I intersected with paths of length < cut
    EchelonSet trunc(F);
    for (const PathVector& rho : p.relations) {
        const int budget = cut - 1 - rho.min_length();
        for (int ulen = 0; ulen <= budget; ++ulen)
            for (int vlen = 0; ulen + vlen <= budget; ++vlen) {
                if (ulen >= static_cast<int>(tab.by_length.size()) ||
                    vlen >= static_cast<int>(tab.by_length.size()))
                    continue;
                for (int uid : tab.by_length[ulen]) {
                    if (tab.paths[uid].tgt != rho.src())
                        continue;
                    for (int vid : tab.by_length[vlen]) {
                        if (tab.paths[vid].src != rho.tgt())
                            continue;
                        EchelonSet::SparseRow row;
                        for (const auto& [mid, c] : rho.terms()) {
                            if (ulen + mid.length() + vlen > cut - 1)
                                continue; // component lies in J^cut, itself in I
                            int id = tab.locate(tab.paths[uid], mid, tab.paths[vid]);
                            check_internal(id >= 0, "truncated generator component missing");
                            row.emplace_back(id, c);
                        }
                        trunc.insert(std::move(row));
                    }
                }
            }
    }

    // basis = deglex-smallest surviving paths of length < cut
    std::vector<int> basis_ids;
    std::vector<int> pos_of_id(tab.paths.size(), -1);
    for (int l = 0; l < cut && l < static_cast<int>(tab.by_length.size()); ++l)
        for (int pid : tab.by_length[l])
            if (!trunc.is_pivot(pid)) {
                pos_of_id[pid] = static_cast<int>(basis_ids.size());
                basis_ids.push_back(pid);
            }

    Algebra a;
    a.field = F;
    a.quiver = Q;
    const int dim = static_cast<int>(basis_ids.size());
    a.idempotent.assign(Q.num_vertices(), -1);
    a.arrow_rep.assign(Q.num_arrows(), -1);
    for (int i = 0; i < dim; ++i) {
        const Path& path = tab.paths[basis_ids[i]];
        a.labels.push_back(path.display(Q));
        a.src.push_back(path.src);
        a.tgt.push_back(path.tgt);
        a.basis_arrows.emplace_back(path.arrows);
        if (path.is_trivial())
            a.idempotent[path.src] = i;
        if (path.length() == 1)
            a.arrow_rep[path.arrows[0]] = i;
    }
    for (int v = 0; v < Q.num_vertices(); ++v)
        check_internal(a.idempotent[v] >= 0, "trivial path fell out of the basis");
    for (int ar = 0; ar < Q.num_arrows(); ++ar)
        check_internal(a.arrow_rep[ar] >= 0, "arrow fell out of the basis");

    // normal form of a path id as coordinates over the basis
    auto normal_form = [&](int pid) {
        std::vector<std::pair<int, Scalar>> out;
        if (pid < 0 || tab.paths[pid].length() >= cut)
            return out;
        for (const auto& [coord, c] : trunc.reduce({{pid, F.one()}})) {
            check_internal(pos_of_id[coord] >= 0, "normal form hit a pivot coordinate");
            out.emplace_back(pos_of_id[coord], c);
        }
        return out;
    };

    a.table.assign(static_cast<std::size_t>(dim) * dim, {});
    for (int i = 0; i < dim; ++i) {
        const Path& pi = tab.paths[basis_ids[i]];
        for (int j = 0; j < dim; ++j) {
            const Path& pj = tab.paths[basis_ids[j]];
            if (pi.tgt != pj.src)
                continue;
            if (pi.length() + pj.length() >= cut)
                continue;
            int id = tab.locate(pi, pj, Path::trivial(pj.tgt));
            a.table[static_cast<std::size_t>(i) * dim + j] = normal_form(id);
        }
    }

    // rad^k = span of normal forms of all surviving paths of length >= k
    for (int k = 1; k < cut; ++k) {
        EchelonSet span(F);
        for (int l = k; l < cut && l < static_cast<int>(tab.by_length.size()); ++l)
            for (int pid : tab.by_length[l]) {
                EchelonSet::SparseRow row;
                for (const auto& [pos, c] : normal_form(pid))
                    row.emplace_back(pos, c);
                span.insert(std::move(row));
            }
        if (span.rank() == 0)
            break;
        Matrix m(F, span.rank(), dim);
        std::size_t r = 0;
        for (const auto& [piv, row] : span.rows()) {
            for (const auto& [coord, c] : row)
                m.at(r, coord) = c;
            ++r;
        }
        a.radical_powers.push_back(std::move(m));
    }
    return a;
}

Algebra opposite(const Algebra& a) {
    Algebra op;
    op.field = a.field;
    op.quiver = a.quiver.reversed();
    const int n = a.dim();
    op.src = a.tgt;
    op.tgt = a.src;
    op.idempotent = a.idempotent;
    op.arrow_rep = a.arrow_rep;
    for (int i = 0; i < n; ++i) {
        if (a.basis_arrows[i]) {
            std::vector<int> rev(a.basis_arrows[i]->rbegin(), a.basis_arrows[i]->rend());
            Path p = rev.empty() ? Path::trivial(op.src[i]) : Path::of_arrows(op.quiver, rev);
            op.labels.push_back(p.display(op.quiver));
            op.basis_arrows.emplace_back(std::move(rev));
        } else {
            op.labels.push_back(a.labels[i]);
            op.basis_arrows.emplace_back(std::nullopt);
        }
    }
    op.table.assign(static_cast<std::size_t>(n) * n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            op.table[static_cast<std::size_t>(i) * n + j] = a.basis_product(j, i);
    op.radical_powers = a.radical_powers;
    return op;
}

std::map<std::pair<int, int>, int> ideal_top_counts(const Presentation& p) {
    p.validate();
    if (!p.quiver.is_acyclic())
        throw Error(ErrorKind::CyclicQuiver, "ideal_top_counts requires an acyclic quiver");
    const Field& F = p.field;

    PathTable tab(p.quiver);
    while (tab.extend() > 0) {
    }

    // the generators u * rho * v are parallel-path vectors, so the spans of
    // the ideal and of J*I + I*J split over ordered vertex pairs
    std::map<std::pair<int, int>, EchelonSet> full, sub;
    for (const PathVector& rho : p.relations) {
        for (std::size_t uid = 0; uid < tab.paths.size(); ++uid) {
            if (tab.paths[uid].tgt != rho.src())
                continue;
            for (std::size_t vid = 0; vid < tab.paths.size(); ++vid) {
                if (tab.paths[vid].src != rho.tgt())
                    continue;
                EchelonSet::SparseRow row;
                for (const auto& [mid, c] : rho.terms()) {
                    int id = tab.locate(tab.paths[uid], mid, tab.paths[vid]);
                    check_internal(id >= 0, "acyclic enumeration is complete");
                    row.emplace_back(id, c);
                }
                const std::pair<int, int> key{tab.paths[uid].src, tab.paths[vid].tgt};
                auto [itf, unused1] = full.try_emplace(key, F);
                itf->second.insert(row);
                if (tab.paths[uid].length() + tab.paths[vid].length() >= 1) {
                    auto [its, unused2] = sub.try_emplace(key, F);
                    its->second.insert(std::move(row));
                }
            }
        }
    }

    std::map<std::pair<int, int>, int> counts;
    for (const auto& [key, span] : full) {
        int s = 0;
        auto it = sub.find(key);
        if (it != sub.end())
            s = static_cast<int>(it->second.rank());
        const int c = static_cast<int>(span.rank()) - s;
        check_internal(c >= 0, "ideal top count negative");
        if (c > 0)
            counts[key] = c;
    }
    return counts;
}

std::vector<std::vector<int>> quiver_arrow_counts(const Algebra& a) {
    const int nv = a.quiver.num_vertices();
    const Matrix rad = a.radical_power(1);
    const Matrix rad2 = a.radical_power(2);
    std::vector<std::vector<int>> counts(nv, std::vector<int>(nv, 0));
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y) {
            std::vector<int> block = a.pair_block(x, y);
            if (block.empty())
                continue;
            auto project = [&](const Matrix& m) {
                Matrix b(a.field, m.rows(), block.size());
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < block.size(); ++j)
                        b.at(i, j) = m.at(i, block[j]);
                return b.rank();
            };
            counts[x][y] = static_cast<int>(project(rad)) - static_cast<int>(project(rad2));
        }
    return counts;
}

Matrix product_space(const Algebra& a, const Matrix& xs, const Matrix& ys) {
    EchelonSet span(a.field);
    for (std::size_t i = 0; i < xs.rows(); ++i) {
        const std::vector<Scalar> u = xs.row(i);
        for (std::size_t j = 0; j < ys.rows(); ++j) {
            const std::vector<Scalar> w = a.mul(u, ys.row(j));
            EchelonSet::SparseRow row;
            for (int k = 0; k < a.dim(); ++k)
                if (!w[k].is_zero())
                    row.emplace_back(k, w[k]);
            span.insert(std::move(row));
        }
    }
    Matrix m(a.field, span.rank(), a.dim());
    std::size_t r = 0;
    for (const auto& [piv, row] : span.rows()) {
        for (const auto& [coord, c] : row)
            m.at(r, coord) = c;
        ++r;
    }
    return m;
}

} // namespace relext
