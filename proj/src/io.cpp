#include "relext/io.hpp"

#include <cctype>
#include <sstream>

#include "relext/error.hpp"

namespace relext {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string s;
    int n = 0;
    while (std::getline(in, s)) {
        ++n;
        auto hash = s.find('#');
        if (hash != std::string::npos)
            s = s.substr(0, hash);
        lines.push_back({n, s});
    }
    return lines;
}

struct Cursor {
    const Line* line;
    std::size_t at = 0;

    void skip_ws() {
        while (at < line->text.size() && std::isspace(static_cast<unsigned char>(line->text[at])))
            ++at;
    }
    bool done() {
        skip_ws();
        return at >= line->text.size();
    }
    int col() const { return static_cast<int>(at) + 1; }
    char peek() {
        skip_ws();
        return at < line->text.size() ? line->text[at] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error(ErrorKind::Syntax, msg, line->number, col());
    }
    bool eat(char c) {
        skip_ws();
        if (at < line->text.size() && line->text[at] == c) {
            ++at;
            return true;
        }
        return false;
    }
    bool eat(const std::string& tok) {
        skip_ws();
        if (line->text.compare(at, tok.size(), tok) == 0) {
            at += tok.size();
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = at;
        while (at < line->text.size()) {
            char c = line->text[at];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')
                ++at;
            else
                break;
        }
        if (start == at)
            fail("expected a name");
        return line->text.substr(start, at - start);
    }
    long number() {
        skip_ws();
        std::size_t start = at;
        if (at < line->text.size() && (line->text[at] == '-' || line->text[at] == '+'))
            ++at;
        while (at < line->text.size() && std::isdigit(static_cast<unsigned char>(line->text[at])))
            ++at;
        if (start == at || (at - start == 1 && !std::isdigit(static_cast<unsigned char>(line->text[start]))))
            fail("expected a number");
        return std::stol(line->text.substr(start, at - start));
    }
    bool looks_like_number() {
        skip_ws();
        if (at >= line->text.size())
            return false;
        char c = line->text[at];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return true;
        return (c == '-' || c == '+') && at + 1 < line->text.size() &&
               std::isdigit(static_cast<unsigned char>(line->text[at + 1]));
    }
};

// one product term: [coefficient *] name (* name)*
struct Term {
    Scalar coeff;
    std::vector<std::string> names;
    int line, col;
};

Term parse_term(Cursor& c, const Field& f, bool negated) {
    Term t;
    t.line = c.line->number;
    t.col = c.col();
    t.coeff = f.one();
    if (c.looks_like_number()) {
        long num = c.number();
        long den = 1;
        if (c.eat('/'))
            den = c.number();
        t.coeff = f.from_fraction(num, den);
        if (!c.eat('*'))
            c.fail("expected '*' after a coefficient");
    }
    if (negated)
        t.coeff = f.neg(t.coeff);
    t.names.push_back(c.ident());
    while (c.eat('*')) {
        if (c.looks_like_number()) {
            // allow 2*alpha*1/3*beta? no: coefficients only lead a term
            c.fail("coefficients must precede the path");
        }
        t.names.push_back(c.ident());
    }
    return t;
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    bool field_set = false;
    std::vector<Line> lines = split_lines(text);

    // relations are collected as raw cursors and resolved once the quiver is
    // complete, so declarations may come in any order
    std::vector<const Line*> relation_lines;

    for (const Line& ln : lines) {
        Cursor c{&ln};
        if (c.done())
            continue;
        std::string head = c.ident();
        if (head == "field") {
            if (field_set)
                c.fail("duplicate field declaration");
            std::string kind = c.ident();
            if (kind == "Q" || kind == "q") {
                p.field = Field::rationals();
            } else if (kind == "F" || kind == "f") {
                long q = c.number();
                if (q < 2 || q > 0x7fffffff || !is_prime(static_cast<std::uint32_t>(q)))
                    throw Error(ErrorKind::Syntax,
                                "field characteristic must be a prime", ln.number, c.col());
                p.field = Field::prime(static_cast<std::uint32_t>(q));
            } else {
                c.fail("unknown field '" + kind + "' (use Q or F <prime>)");
            }
            field_set = true;
            if (!c.done())
                c.fail("trailing input after field declaration");
        } else if (head == "vertex") {
            do {
                p.quiver.add_vertex(c.ident());
            } while (!c.done());
        } else if (head == "arrow") {
            std::string name = c.ident();
            if (!c.eat(':'))
                c.fail("expected ':' after the arrow name");
            std::string src = c.ident();
            if (!c.eat("->"))
                c.fail("expected '->' between endpoints");
            std::string tgt = c.ident();
            if (!p.quiver.vertex_index(src))
                throw Error(ErrorKind::UnknownName, "unknown vertex '" + src + "'", ln.number, 1);
            if (!p.quiver.vertex_index(tgt))
                throw Error(ErrorKind::UnknownName, "unknown vertex '" + tgt + "'", ln.number, 1);
            p.quiver.add_arrow(name, src, tgt);
            if (!c.done())
                c.fail("trailing input after arrow declaration");
        } else if (head == "relation") {
            relation_lines.push_back(&ln);
        } else {
            c.fail("unknown declaration '" + head + "'");
        }
    }

    for (const Line* lnp : relation_lines) {
        Cursor c{lnp};
        std::string head = c.ident(); // "relation"
        check_internal(head == "relation", "relation line lost");
        std::vector<Term> terms;
        bool neg = c.eat('-');
        terms.push_back(parse_term(c, p.field, neg));
        while (!c.done()) {
            bool minus;
            if (c.eat('-'))
                minus = true;
            else if (c.eat('+'))
                minus = false;
            else
                c.fail("expected '+' or '-' between terms");
            terms.push_back(parse_term(c, p.field, minus));
        }
        std::vector<std::pair<Path, Scalar>> tv;
        for (const Term& t : terms) {
            std::vector<int> arrows;
            for (const std::string& n : t.names) {
                auto a = p.quiver.arrow_index(n);
                if (!a)
                    throw Error(ErrorKind::UnknownName, "unknown arrow '" + n + "'",
                                t.line, t.col);
                arrows.push_back(*a);
            }
            try {
                tv.emplace_back(Path::of_arrows(p.quiver, arrows), t.coeff);
            } catch (const Error& e) {
                throw Error(ErrorKind::CompositionMismatch, e.what(), t.line, t.col);
            }
        }
        PathVector v;
        try {
            v = PathVector::make(p.field, tv);
        } catch (const Error& e) {
            throw Error(e.kind, e.what(), lnp->number, 1);
        }
        if (v.is_zero())
            throw Error(ErrorKind::ZeroRelation, "relation reduces to zero", lnp->number, 1);
        if (v.min_length() < 2)
            throw Error(ErrorKind::NonAdmissibleIdeal,
                        "relation has a term of length < 2", lnp->number, 1);
        p.relations.push_back(std::move(v));
    }

    if (p.quiver.num_vertices() == 0)
        throw Error(ErrorKind::Syntax, "no vertices declared", 1, 1);
    return p;
}

std::string presentation_to_string(const Presentation& p) {
    std::ostringstream os;
    if (p.field.kind() == Field::Kind::Rationals)
        os << "field Q\n";
    else
        os << "field F " << p.field.characteristic() << "\n";
    os << "vertex";
    for (int v = 0; v < p.quiver.num_vertices(); ++v)
        os << " " << p.quiver.vertex_name(v);
    os << "\n";
    for (const Arrow& a : p.quiver.arrows())
        os << "arrow " << a.name << " : " << p.quiver.vertex_name(a.src) << " -> "
           << p.quiver.vertex_name(a.tgt) << "\n";
    for (const PathVector& r : p.relations)
        os << "relation " << r.display(p.quiver, p.field) << "\n";
    return os.str();
}

std::string quiver_to_dot(const Quiver& q, const std::vector<int>& new_arrows) {
    std::vector<char> is_new(q.num_arrows(), false);
    for (int a : new_arrows)
        is_new[a] = true;
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int v = 0; v < q.num_vertices(); ++v)
        os << "  \"" << q.vertex_name(v) << "\";\n";
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        os << "  \"" << q.vertex_name(ar.src) << "\" -> \"" << q.vertex_name(ar.tgt)
           << "\" [label=\"" << ar.name << "\"";
        if (is_new[a])
            os << ", style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace relext
