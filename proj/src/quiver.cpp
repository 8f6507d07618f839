#include "relext/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "relext/error.hpp"

namespace relext {

int Quiver::add_vertex(const std::string& name) {
    if (vertex_by_name_.count(name))
        throw Error(ErrorKind::DuplicateName, "duplicate vertex name '" + name + "'");
    if (arrow_by_name_.count(name))
        throw Error(ErrorKind::DuplicateName, "name '" + name + "' already used for an arrow");
    vertices_.push_back(name);
    vertex_by_name_[name] = num_vertices() - 1;
    return num_vertices() - 1;
}

int Quiver::add_arrow(const std::string& name, const std::string& src, const std::string& tgt) {
    auto s = vertex_index(src);
    if (!s)
        throw Error(ErrorKind::UnknownName, "unknown vertex '" + src + "'");
    auto t = vertex_index(tgt);
    if (!t)
        throw Error(ErrorKind::UnknownName, "unknown vertex '" + tgt + "'");
    return add_arrow(name, *s, *t);
}

int Quiver::add_arrow(const std::string& name, int src, int tgt) {
    if (arrow_by_name_.count(name) || vertex_by_name_.count(name))
        throw Error(ErrorKind::DuplicateName, "duplicate name '" + name + "'");
    check_internal(src >= 0 && src < num_vertices() && tgt >= 0 && tgt < num_vertices(),
                   "arrow endpoint out of range");
    arrows_.push_back(Arrow{name, src, tgt});
    arrow_by_name_[name] = num_arrows() - 1;
    return num_arrows() - 1;
}

std::optional<int> Quiver::vertex_index(const std::string& name) const {
    auto it = vertex_by_name_.find(name);
    if (it == vertex_by_name_.end())
        return std::nullopt;
    return it->second;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const {
    auto it = arrow_by_name_.find(name);
    if (it == arrow_by_name_.end())
        return std::nullopt;
    return it->second;
}

std::vector<int> Quiver::arrows_from(int v) const {
    std::vector<int> out;
    for (int a = 0; a < num_arrows(); ++a)
        if (arrows_[a].src == v)
            out.push_back(a);
    return out;
}

int Quiver::arrow_count(int src, int tgt) const {
    int n = 0;
    for (const Arrow& a : arrows_)
        if (a.src == src && a.tgt == tgt)
            ++n;
    return n;
}

bool Quiver::is_acyclic() const {
    // Kahn's algorithm
    std::vector<int> indeg(num_vertices(), 0);
    for (const Arrow& a : arrows_)
        ++indeg[a.tgt];
    std::vector<int> stack;
    for (int v = 0; v < num_vertices(); ++v)
        if (indeg[v] == 0)
            stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (const Arrow& a : arrows_)
            if (a.src == v && --indeg[a.tgt] == 0)
                stack.push_back(a.tgt);
    }
    return seen == num_vertices();
}

bool Quiver::is_connected() const {
    if (num_vertices() == 0)
        return true;
    std::vector<bool> vis(num_vertices(), false);
    std::vector<int> stack{0};
    vis[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Arrow& a : arrows_) {
            if (a.src == v && !vis[a.tgt]) {
                vis[a.tgt] = true;
                stack.push_back(a.tgt);
            }
            if (a.tgt == v && !vis[a.src]) {
                vis[a.src] = true;
                stack.push_back(a.src);
            }
        }
    }
    return std::all_of(vis.begin(), vis.end(), [](bool b) { return b; });
}

Quiver Quiver::reversed() const {
    Quiver r;
    for (const std::string& v : vertices_)
        r.add_vertex(v);
    for (const Arrow& a : arrows_)
        r.add_arrow(a.name, a.tgt, a.src);
    return r;
}

bool has_two_cycle(const Quiver& q) {
    for (int x = 0; x < q.num_vertices(); ++x)
        for (int y = x + 1; y < q.num_vertices(); ++y)
            if (q.arrow_count(x, y) > 0 && q.arrow_count(y, x) > 0)
                return true;
    return false;
}

Path Path::of_arrows(const Quiver& q, std::vector<int> arrow_indices) {
    check_internal(!arrow_indices.empty(), "of_arrows needs at least one arrow");
    Path p;
    p.arrows = std::move(arrow_indices);
    p.src = q.arrow(p.arrows.front()).src;
    p.tgt = q.arrow(p.arrows.back()).tgt;
    for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (q.arrow(p.arrows[i]).tgt != q.arrow(p.arrows[i + 1]).src)
            throw Error(ErrorKind::CompositionMismatch,
                        "arrows '" + q.arrow(p.arrows[i]).name + "' and '" +
                            q.arrow(p.arrows[i + 1]).name + "' do not compose");
    return p;
}

std::string Path::display(const Quiver& q) const {
    if (is_trivial())
        return "e_" + q.vertex_name(src);
    std::string s;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (i)
            s += "*";
        s += q.arrow(arrows[i]).name;
    }
    return s;
}

PathVector PathVector::make(const Field& f, std::vector<std::pair<Path, Scalar>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    PathVector v;
    for (auto& [p, c] : terms) {
        Scalar cc = f.reduce(c);
        if (cc.is_zero())
            continue;
        if (!v.terms_.empty() && v.terms_.back().first == p) {
            v.terms_.back().second = f.add(v.terms_.back().second, cc);
            if (v.terms_.back().second.is_zero())
                v.terms_.pop_back();
        } else {
            v.terms_.emplace_back(p, cc);
        }
    }
    if (v.terms_.empty())
        return v;
    v.src_ = v.terms_.front().first.src;
    v.tgt_ = v.terms_.front().first.tgt;
    for (const auto& [p, c] : v.terms_)
        if (p.src != v.src_ || p.tgt != v.tgt_)
            throw Error(ErrorKind::CompositionMismatch,
                        "relation terms are not parallel paths");
    return v;
}

int PathVector::min_length() const {
    int m = terms_.empty() ? 0 : terms_.front().first.length();
    for (const auto& [p, c] : terms_)
        m = std::min(m, p.length());
    return m;
}

int PathVector::max_length() const {
    int m = 0;
    for (const auto& [p, c] : terms_)
        m = std::max(m, p.length());
    return m;
}

std::string PathVector::display(const Quiver& q, const Field& f) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        Scalar abs = c;
        bool negative = false;
        if (f.kind() == Field::Kind::Rationals && c < 0) {
            negative = true;
            abs = -c;
        }
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        if (abs != f.one())
            os << f.str(abs) << "*";
        os << p.display(q);
        first = false;
    }
    return os.str();
}

void Presentation::validate() const {
    for (const PathVector& r : relations) {
        if (r.is_zero())
            throw Error(ErrorKind::ZeroRelation, "relation reduces to zero");
        if (r.min_length() < 2)
            throw Error(ErrorKind::NonAdmissibleIdeal,
                        "relation has a term of length < 2: " + r.display(quiver, field));
    }
    if (quiver.num_vertices() == 0)
        throw Error(ErrorKind::Syntax, "presentation has no vertices");
}

Presentation change_field(const Presentation& p, const Field& f) {
    Presentation out;
    out.field = f;
    out.quiver = p.quiver;
    for (const PathVector& r : p.relations) {
        PathVector v = PathVector::make(f, r.terms());
        if (v.is_zero())
            throw Error(ErrorKind::ZeroRelation,
                        "relation collapses to zero over " + f.name() + ": " +
                            r.display(p.quiver, p.field));
        out.relations.push_back(std::move(v));
    }
    return out;
}

Presentation opposite(const Presentation& p) {
    Presentation op;
    op.field = p.field;
    op.quiver = p.quiver.reversed();
    for (const PathVector& r : p.relations) {
        std::vector<std::pair<Path, Scalar>> terms;
        for (const auto& [path, c] : r.terms()) {
            std::vector<int> rev(path.arrows.rbegin(), path.arrows.rend());
            terms.emplace_back(Path::of_arrows(op.quiver, rev), c);
        }
        op.relations.push_back(PathVector::make(op.field, terms));
    }
    return op;
}

} // namespace relext
