#include "relext/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "relext/io.hpp"
#include "relext/resolution.hpp"

namespace relext {

namespace {

struct Options {
    std::string input;
    std::string field;
    std::string output;
    std::vector<std::string> names;
    int max_length = 64;
    int gldim_bound = -1; // default: #vertices (acyclic) or nilpotency + 1
    bool base_only = false;
    bool dot = false;
    bool json = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Syntax, "cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Field parse_field_flag(const std::string& s) {
    if (s == "Q" || s == "q")
        return Field::rationals();
    if ((s[0] == 'f' || s[0] == 'F') && s.size() > 1) {
        long p = std::stol(s.substr(1));
        if (p >= 2 && p <= 0x7fffffff && is_prime(static_cast<std::uint32_t>(p)))
            return Field::prime(static_cast<std::uint32_t>(p));
    }
    throw Error(ErrorKind::Syntax, "bad field '" + s + "' (use Q or f<prime>)");
}

Presentation load(const Options& o) {
    Presentation p = parse_presentation(read_file(o.input));
    if (!o.field.empty())
        p = change_field(p, parse_field_flag(o.field));
    return p;
}

std::string dims_str(const std::vector<int>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? ", " : "") + std::to_string(d[i]);
    return s + ")";
}

std::string int_table(const Quiver& q, const std::vector<std::vector<int>>& t,
                      const std::string& corner) {
    std::ostringstream os;
    os << "  " << corner;
    for (int y = 0; y < q.num_vertices(); ++y)
        os << "\t" << q.vertex_name(y);
    os << "\n";
    for (int x = 0; x < q.num_vertices(); ++x) {
        os << "  " << q.vertex_name(x);
        for (int y = 0; y < q.num_vertices(); ++y)
            os << "\t" << t[x][y];
        os << "\n";
    }
    return os.str();
}

int default_gldim_bound(const Presentation& p, const Algebra& a) {
    if (p.quiver.is_acyclic())
        return std::max(1, p.quiver.num_vertices());
    return a.nilpotency() + 1;
}

std::string pair_counts_str(const Quiver& q, const std::map<std::pair<int, int>, int>& c) {
    if (c.empty())
        return "none";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pr, n] : c) {
        if (!first)
            os << ", ";
        os << "(" << q.vertex_name(pr.first) << "," << q.vertex_name(pr.second) << "): " << n;
        first = false;
    }
    return os.str();
}

void cmd_check(const Options& o, std::ostream& out) {
    Presentation p = load(o);
    p.validate();
    out << "field: " << p.field.name() << "\n";
    out << "vertices: " << p.quiver.num_vertices() << "\n";
    out << "arrows: " << p.quiver.num_arrows() << "\n";
    out << "relations: " << p.relations.size() << "\n";
    const bool acyclic = p.quiver.is_acyclic();
    out << "acyclic: " << (acyclic ? "yes" : "no") << "\n";
    BuildOptions bo;
    bo.max_length = o.max_length;
    Algebra a = build_algebra(p, bo);
    out << "admissible: yes\n";
    out << "dim C = " << a.dim() << "\n";
    const int bound = o.gldim_bound > 0 ? o.gldim_bound : default_gldim_bound(p, a);
    auto gd = global_dimension(a, bound);
    if (gd)
        out << "global dimension = " << *gd << " (bound " << bound << ")\n";
    else
        out << "global dimension > " << bound << "\n";
    if (acyclic && gd && *gd <= 2) {
        ExtendedQuiver eq = relext_quiver(p, o.names);
        out << "relation-extension quiver: " << eq.num_new() << " new arrow(s)\n";
        for (int na : eq.new_arrows) {
            const Arrow& ar = eq.quiver.arrow(na);
            out << "  " << ar.name << ": " << eq.quiver.vertex_name(ar.src) << " -> "
                << eq.quiver.vertex_name(ar.tgt) << "\n";
        }
        if (has_two_cycle(eq.quiver))
            out << "extension quiver 2-cycle present: NOT cluster-tilted-shaped\n";
        else
            out << "extension quiver 2-cycle: none\n";
    } else {
        if (has_two_cycle(p.quiver))
            out << "2-cycle present: NOT cluster-tilted-shaped\n";
        else
            out << "2-cycle present: none\n";
    }
}

void cmd_info(const Options& o, std::ostream& out) {
    Presentation p = load(o);
    BuildOptions bo;
    bo.max_length = o.max_length;
    Algebra a = build_algebra(p, bo);
    out << "field: " << p.field.name() << "\n";
    out << "vertices:";
    for (int v = 0; v < p.quiver.num_vertices(); ++v)
        out << " " << p.quiver.vertex_name(v);
    out << "\n";
    for (const Arrow& ar : p.quiver.arrows())
        out << "arrow " << ar.name << ": " << p.quiver.vertex_name(ar.src) << " -> "
            << p.quiver.vertex_name(ar.tgt) << "\n";
    for (const PathVector& r : p.relations)
        out << "relation " << r.display(p.quiver, p.field) << " = 0\n";
    out << "dim C = " << a.dim() << "\n";
    out << "basis:";
    for (const std::string& l : a.labels)
        out << " " << l;
    out << "\n";
    out << "radical layer dims:";
    std::vector<int> layers;
    int prev = a.dim();
    for (int k = 1; k <= a.nilpotency(); ++k) {
        int cur = static_cast<int>(a.radical_power(k).rows());
        out << " " << (prev - cur);
        prev = cur;
    }
    out << "\n";
    const int bound = o.gldim_bound > 0 ? o.gldim_bound : default_gldim_bound(p, a);
    auto gd = global_dimension(a, bound);
    if (gd)
        out << "global dimension = " << *gd << "\n";
    else
        out << "global dimension > " << bound << "\n";
}

void cmd_modules(const Options& o, std::ostream& out, bool proj) {
    Presentation p = load(o);
    BuildOptions bo;
    bo.max_length = o.max_length;
    Algebra a = build_algebra(p, bo);
    for (int x = 0; x < p.quiver.num_vertices(); ++x) {
        Representation m = proj ? projective(a, x) : injective(a, x);
        out << (proj ? "P_" : "I_") << p.quiver.vertex_name(x) << ": dims " << dims_str(m.dims)
            << "  Loewy " << loewy_display(m) << "\n";
    }
}

void cmd_ext(const Options& o, std::ostream& out) {
    Presentation p = load(o);
    Algebra a = build_algebra(p);
    out << "field: " << p.field.name() << "\n";
    out << "Ext^1(S_x, S_y) = arrows x -> y:\n"
        << int_table(p.quiver, ext_simple_table(a, 1), "x\\y");
    out << "Ext^2(S_x, S_y) = relations x -> y:\n"
        << int_table(p.quiver, ext_simple_table(a, 2), "x\\y");
    const int nv = p.quiver.num_vertices();
    std::vector<std::vector<int>> pairs(nv, std::vector<int>(nv, 0));
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y)
            pairs[x][y] = ext_dim(injective(a, y), projective(a, x), 2);
    out << "Ext^2(I_y, P_x) (rows x, cols y):\n" << int_table(p.quiver, pairs, "x\\y");
}

void cmd_extend(const Options& o, std::ostream& out) {
    Presentation p = load(o);
    if (!p.quiver.is_acyclic())
        throw Error(ErrorKind::CyclicQuiver, "extend needs an acyclic quiver");
    BuildOptions bo;
    bo.max_length = o.max_length;
    Algebra a = build_algebra(p, bo);
    Bimodule m = ext2_bimodule(a);
    ExtensionAlgebra e = trivial_extension(a, m, o.names);
    out << "field: " << p.field.name() << "\n";
    out << "dim C = " << a.dim() << "\n";
    out << "dim Ext2(DC,C) = " << m.dim << "\n";
    out << "dim extension = " << e.total.dim() << "\n";
    out << "pair components e_x M e_y: " << pair_counts_str(p.quiver, m.pair_components())
        << "\n";
    ExtendedQuiver eq = quiver_from_extension(e);
    if (eq.num_new() == 0)
        out << "0 new arrows; extension = input algebra\n";
    for (int na : eq.new_arrows) {
        const Arrow& ar = eq.quiver.arrow(na);
        out << "new arrow " << ar.name << ": " << eq.quiver.vertex_name(ar.src) << " -> "
            << eq.quiver.vertex_name(ar.tgt) << "\n";
    }
    out << "extension projectives:\n";
    auto projs = extension_projectives(e);
    for (int x = 0; x < p.quiver.num_vertices(); ++x)
        out << "  P~_" << p.quiver.vertex_name(x) << ": dims " << dims_str(projs[x].dims)
            << "  Loewy " << loewy_display(projs[x]) << "\n";
    if (has_two_cycle(eq.quiver))
        out << "extension quiver 2-cycle present: NOT cluster-tilted-shaped\n";
    else
        out << "extension quiver 2-cycle: none\n";
}

void cmd_present(const Options& o, std::ostream& out) {
    Presentation p = load(o);
    if (!p.quiver.is_acyclic())
        throw Error(ErrorKind::CyclicQuiver, "present needs an acyclic quiver");
    BuildOptions bo;
    bo.max_length = o.max_length;
    Algebra a = build_algebra(p, bo);
    Bimodule m = ext2_bimodule(a);
    ExtensionAlgebra e = trivial_extension(a, m, o.names);
    out << presentation_to_string(present_extension(e));
}

void cmd_quiver(const Options& o, std::ostream& out) {
    Presentation p = load(o);
    BuildOptions bo;
    bo.max_length = o.max_length;

    Quiver q = p.quiver;
    std::vector<int> new_arrows;
    nlohmann::ordered_json doc;
    doc["field"] = p.field.name();
    int dim_c = -1, dim_m = -1, dim_e = -1;
    std::vector<std::vector<int>> ext_table;

    if (!o.base_only) {
        if (!p.quiver.is_acyclic())
            throw Error(ErrorKind::CyclicQuiver,
                        "quiver of the extension needs an acyclic input (use --base)");
        Algebra a = build_algebra(p, bo);
        Bimodule m = ext2_bimodule(a);
        ExtensionAlgebra e = trivial_extension(a, m, o.names);
        ExtendedQuiver eq = quiver_from_extension(e);
        q = eq.quiver;
        new_arrows = eq.new_arrows;
        dim_c = a.dim();
        dim_m = m.dim;
        dim_e = e.total.dim();
        ext_table = ext_simple_table(a, 2);
    } else {
        Algebra a = build_algebra(p, bo);
        dim_c = a.dim();
    }

    if (o.dot) {
        out << quiver_to_dot(q, new_arrows);
        return;
    }
    if (o.json) {
        std::vector<char> is_new(q.num_arrows(), false);
        for (int a : new_arrows)
            is_new[a] = true;
        doc["vertices"] = nlohmann::ordered_json::array();
        for (int v = 0; v < q.num_vertices(); ++v)
            doc["vertices"].push_back(q.vertex_name(v));
        doc["arrows"] = nlohmann::ordered_json::array();
        for (int a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow(a);
            doc["arrows"].push_back({{"name", ar.name},
                                     {"src", q.vertex_name(ar.src)},
                                     {"tgt", q.vertex_name(ar.tgt)},
                                     {"new", static_cast<bool>(is_new[a])}});
        }
        doc["dims"]["algebra"] = dim_c;
        if (!o.base_only) {
            doc["dims"]["bimodule"] = dim_m;
            doc["dims"]["extension"] = dim_e;
            doc["ext_table"] = ext_table;
        }
        out << doc.dump(2) << "\n";
        return;
    }
    // plain text
    std::vector<char> is_new(q.num_arrows(), false);
    for (int a : new_arrows)
        is_new[a] = true;
    out << "vertices:";
    for (int v = 0; v < q.num_vertices(); ++v)
        out << " " << q.vertex_name(v);
    out << "\n";
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        out << (is_new[a] ? "new arrow " : "arrow ") << ar.name << ": "
            << q.vertex_name(ar.src) << " -> " << q.vertex_name(ar.tgt) << "\n";
    }
}

} // namespace

RunResult run_command(const std::vector<std::string>& args) {
    RunResult result;
    CLI::App app{"relation-extension calculator for bound quiver algebras"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* sub, bool with_names) {
        sub->add_option("input", o.input, "quiver presentation file")->required();
        sub->add_option("--field", o.field, "ground field override: Q or f<prime>");
        sub->add_option("-o,--output", o.output, "write the document to a file");
        sub->add_option("--max-length", o.max_length,
                        "nilpotency search bound for the path enumeration");
        sub->add_option("--gldim-bound", o.gldim_bound, "bound for global dimension reports");
        if (with_names)
            sub->add_option("--names", o.names, "names for the new arrows (default z1, z2, ...)");
    };

    CLI::App* check = app.add_subcommand("check", "acyclicity, dimension, gldim, 2-cycle status");
    add_common(check, true);
    CLI::App* info = app.add_subcommand("info", "algebra summary: basis, radical, gldim");
    add_common(info, false);
    CLI::App* proj = app.add_subcommand("projectives", "indecomposable projectives with Loewy series");
    add_common(proj, false);
    CLI::App* inj = app.add_subcommand("injectives", "indecomposable injectives with Loewy series");
    add_common(inj, false);
    CLI::App* ext = app.add_subcommand("ext", "Ext tables between simples and Ext^2(I_y, P_x)");
    add_common(ext, false);
    CLI::App* extend = app.add_subcommand("extend", "relation-extension: bimodule, quiver, projectives");
    add_common(extend, true);
    CLI::App* present = app.add_subcommand("present", "emit a presentation of the relation-extension");
    add_common(present, true);
    CLI::App* quiver = app.add_subcommand("quiver", "emit the extension quiver (text, DOT or JSON)");
    add_common(quiver, true);
    quiver->add_flag("--base", o.base_only, "emit the input quiver instead of the extension");
    quiver->add_flag("--dot", o.dot, "DOT output (new arrows dashed)");
    quiver->add_flag("--json", o.json, "JSON output");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        if (e.get_exit_code() == 0) { // --help
            result.out = app.help();
            result.status = 0;
            return result;
        }
        os << e.what() << "\n";
        result.err = os.str();
        result.status = 1;
        return result;
    }

    std::ostringstream out;
    try {
        if (*check)
            cmd_check(o, out);
        else if (*info)
            cmd_info(o, out);
        else if (*proj)
            cmd_modules(o, out, true);
        else if (*inj)
            cmd_modules(o, out, false);
        else if (*ext)
            cmd_ext(o, out);
        else if (*extend)
            cmd_extend(o, out);
        else if (*present)
            cmd_present(o, out);
        else if (*quiver)
            cmd_quiver(o, out);
    } catch (const Error& e) {
        std::ostringstream os;
        os << "error (" << error_kind_name(e.kind) << "): " << e.what();
        if (e.line >= 0)
            os << " [line " << e.line << ", col " << e.col << "]";
        os << "\n";
        result.err = os.str();
        result.status = error_exit_code(e.kind);
        return result;
    }

    if (!o.output.empty()) {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) {
            result.err = "error: cannot write '" + o.output + "'\n";
            result.status = 1;
            return result;
        }
        f << out.str();
    } else {
        result.out = out.str();
    }
    return result;
}

} // namespace relext
