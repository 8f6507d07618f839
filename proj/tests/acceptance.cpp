// Acceptance suite: one pass/fail line per criterion, exact integer
// equality throughout. Exit status 0 iff every criterion passes.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "relext/extension.hpp"
#include "relext/io.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace relext;

namespace {

int failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& detail) {
    std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok)
        ++failures;
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok)
                detail << "; ";
            detail << what;
            ok = false;
        }
    }
};

std::vector<std::vector<int>> ext_pair_table(const Algebra& a) {
    const int nv = a.quiver.num_vertices();
    std::vector<std::vector<int>> t(nv, std::vector<int>(nv, 0));
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y)
            t[x][y] = ext_dim(injective(a, y), projective(a, x), 2);
    return t;
}

void criterion1() {
    Check c;
    Presentation p = fixtures::tilted_a3();
    Algebra a = build_algebra(p);
    c.expect(a.dim() == 6, "dim C != 6");
    c.expect(global_dimension(a, 6) == 2, "gldim != 2");

    // Ext^2(I_y, P_x) table: exactly (1,3), (3,3), (1,1), (3,1) equal to 1
    auto t = ext_pair_table(a);
    std::vector<std::vector<int>> expected{{1, 0, 1}, {0, 0, 0}, {1, 0, 1}};
    c.expect(t == expected, "Ext^2(I_y,P_x) table wrong");

    c.expect(projective_dimension(injective(a, 1), 6) == 1, "pd I_2 != 1");
    c.expect(injective_dimension(a, projective(a, 1), 6) == 1, "id P_2 != 1");

    Bimodule m = ext2_bimodule(a);
    c.expect(m.dim == 4, "dim Ext^2(DC,C) != 4");

    ExtensionAlgebra e = trivial_extension(a, m);
    ExtendedQuiver eq = quiver_from_extension(e);
    c.expect(eq.num_new() == 1, "new arrow count != 1");
    if (eq.num_new() == 1) {
        const Arrow& na = eq.quiver.arrow(eq.new_arrows[0]);
        c.expect(eq.quiver.vertex_name(na.src) == "1" && eq.quiver.vertex_name(na.tgt) == "3",
                 "new arrow is not 1 -> 3");
    }

    auto projs = extension_projectives(e);
    c.expect(projs[0].dims == std::vector<int>{2, 0, 1} &&
                 loewy_display(projs[0]) == "[1 / 3 / 1]",
             "P~_1 wrong");
    c.expect(projs[1].dims == std::vector<int>{1, 1, 0} && loewy_display(projs[1]) == "[2 / 1]",
             "P~_2 wrong");
    c.expect(projs[2].dims == std::vector<int>{2, 1, 2} &&
                 loewy_display(projs[2]) == "[3 / 1 2 / 3 / 1]",
             "P~_3 wrong");

    c.expect(e.total.dim() == 10, "dim extension != 10");

    Presentation pres = present_extension(e);
    Algebra rebuilt = build_algebra(pres);
    c.expect(rebuilt.dim() == 10, "present_extension quotient dim != 10");
    auto counts = quiver_arrow_counts(rebuilt);
    std::vector<std::vector<int>> declared(3, std::vector<int>(3, 0));
    for (const Arrow& ar : e.total.quiver.arrows())
        ++declared[ar.src][ar.tgt];
    c.expect(counts == declared, "present_extension quiver mismatch");

    c.expect(has_two_cycle(eq.quiver), "expected a 2-cycle");
    report(1, "tilted A3 fixture end-to-end", c.ok, c.detail.str());
}

void criterion2() {
    Check c;
    Presentation p = fixtures::tilted_a3_tilde();
    Algebra a = build_algebra(p);
    c.expect(ext_dim(injective(a, 3), projective(a, 0), 2) == 2, "Ext^2(I_4,P_1) != 2");

    ExtensionAlgebra e = trivial_extension(a, ext2_bimodule(a));
    ExtendedQuiver eq = quiver_from_extension(e);
    c.expect(eq.num_new() == 2, "new arrow count != 2");
    for (int na : eq.new_arrows) {
        const Arrow& ar = eq.quiver.arrow(na);
        c.expect(eq.quiver.vertex_name(ar.src) == "1" && eq.quiver.vertex_name(ar.tgt) == "4",
                 "extra arrow is not 1 -> 4");
    }
    c.expect(!has_two_cycle(eq.quiver), "unexpected 2-cycle");

    auto projs = extension_projectives(e);
    c.expect(projs[0].dims == std::vector<int>{1, 1, 1, 2}, "P~_1 dims wrong");
    c.expect(projs[1].dims == std::vector<int>{1, 2, 0, 1}, "P~_2 dims wrong");
    c.expect(projs[2].dims == std::vector<int>{1, 0, 2, 1}, "P~_3 dims wrong");
    c.expect(projs[3].dims == std::vector<int>{0, 1, 1, 1}, "P~_4 dims wrong");

    Presentation pres = present_extension(e);
    c.expect(build_algebra(pres).dim() == 16, "present_extension quotient dim != 16");
    report(2, "two-relation square fixture", c.ok, c.detail.str());
}

void criterion3() {
    Check c;
    Presentation p1 = fixtures::tilted_d4_commutative();
    Presentation p2 = fixtures::tilted_d4_fan();
    ExtendedQuiver q1 = relext_quiver(p1);
    ExtendedQuiver q2 = relext_quiver(p2);
    // one arrow per relation class: a single one for the commutative square,
    // two for the fan (its ideal needs two generators)
    auto total_counts = [](const Presentation& pres) {
        int n = 0;
        for (const auto& [pr, k] : ideal_top_counts(pres))
            n += k;
        return n;
    };
    c.expect(q1.num_new() == 1 && q1.num_new() == total_counts(p1),
             "commutative square should add a single arrow");
    c.expect(q2.num_new() == total_counts(p2) && q2.num_new() == 2,
             "fan should add one arrow per relation class");
    c.expect(!q1.quiver.is_acyclic() && !q2.quiver.is_acyclic(),
             "added arrows must close oriented cycles");

    auto m1 = q1.arrow_count_matrix();
    auto m2 = q2.arrow_count_matrix();
    // degree sequences
    auto degrees = [](const std::vector<std::vector<int>>& m) {
        std::vector<std::pair<int, int>> d;
        for (std::size_t x = 0; x < m.size(); ++x) {
            int out = 0, in = 0;
            for (std::size_t y = 0; y < m.size(); ++y) {
                out += m[x][y];
                in += m[y][x];
            }
            d.emplace_back(out, in);
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    c.expect(degrees(m1) == degrees(m2), "degree sequences differ");

    // explicit vertex bijection by search
    std::vector<int> perm{0, 1, 2, 3};
    bool found = false;
    do {
        bool ok = true;
        for (int x = 0; x < 4 && ok; ++x)
            for (int y = 0; y < 4 && ok; ++y)
                ok = m1[x][y] == m2[perm[x]][perm[y]];
        if (ok)
            found = true;
    } while (!found && std::next_permutation(perm.begin(), perm.end()));
    c.expect(found, "no vertex bijection matches the multigraphs");

    Algebra a1 = build_algebra(p1);
    Algebra a2 = build_algebra(p2);
    int d1 = build_algebra(present_extension(trivial_extension(a1, ext2_bimodule(a1)))).dim();
    int d2 = build_algebra(present_extension(trivial_extension(a2, ext2_bimodule(a2)))).dim();
    c.expect(d1 == d2, "extension quotient dimensions differ");
    report(3, "two tilted D4 algebras share one extension quiver", c.ok, c.detail.str());
}

// shared corpus for criteria 4-8
const std::vector<Presentation>& corpus_instances() {
    static std::vector<Presentation> c = corpus::random_gldim2_corpus(200, 20250809u);
    return c;
}

void criterion4() {
    Check c;
    int checked = 0;
    for (const Presentation& p : corpus_instances()) {
        Algebra a = build_algebra(p);
        Bimodule m = ext2_bimodule(a);
        ExtensionAlgebra e = trivial_extension(a, m);

        auto route1 = relext_quiver(p).arrow_count_matrix();
        auto route2 = quiver_from_extension(e).arrow_count_matrix();
        std::vector<std::vector<int>> route3(p.quiver.num_vertices(),
                                             std::vector<int>(p.quiver.num_vertices(), 0));
        for (int x = 0; x < p.quiver.num_vertices(); ++x)
            for (int y = 0; y < p.quiver.num_vertices(); ++y)
                route3[x][y] = p.quiver.arrow_count(x, y);
        for (const auto& [pr, n] : bimodule_top(a, m))
            route3[pr.first][pr.second] += n;

        if (route1 != route2 || route2 != route3) {
            c.expect(false, "disagreement on instance " + std::to_string(checked));
            break;
        }
        ++checked;
    }
    c.expect(checked >= 200, "corpus smaller than 200");
    report(4, "three-route agreement on " + std::to_string(checked) + " random presentations",
           c.ok, c.detail.str());
}

void criterion5() {
    Check c;
    std::mt19937 rng(991);
    int checked = 0;
    for (const Presentation& p : corpus_instances()) {
        Algebra a = build_algebra(p);
        auto counts = ideal_top_counts(p);
        auto ext2 = ext_simple_table(a, 2);
        for (int x = 0; x < p.quiver.num_vertices(); ++x)
            for (int y = 0; y < p.quiver.num_vertices(); ++y) {
                auto it = counts.find({x, y});
                const int want = it == counts.end() ? 0 : it->second;
                if (ext2[x][y] != want)
                    c.expect(false, "count/Ext mismatch on instance " + std::to_string(checked));
            }
        if (!p.relations.empty()) {
            std::vector<Path> paths = all_paths_acyclic(p.quiver);
            Presentation aug = p;
            aug.relations.push_back(corpus::random_ideal_element(rng, p, paths));
            aug.relations.push_back(corpus::random_ideal_element(rng, p, paths));
            if (ideal_top_counts(aug) != counts)
                c.expect(false, "augmentation changed counts on instance " +
                                    std::to_string(checked));
        }
        ++checked;
        if (!c.ok)
            break;
    }
    report(5, "relation counts = Ext^2(S,S), stable under generator change", c.ok,
           c.detail.str());
}

void criterion6() {
    Check c;
    auto run = [&](const Presentation& p, const std::string& tag) {
        Algebra a = build_algebra(p);
        Bimodule m = ext2_bimodule(a);
        ExtensionAlgebra e = trivial_extension(a, m);
        auto projs = extension_projectives(e);
        std::vector<int> exm(p.quiver.num_vertices(), 0);
        for (int k = 0; k < m.dim; ++k)
            ++exm[m.pair_of[k].first];
        int total = 0;
        for (int x = 0; x < p.quiver.num_vertices(); ++x) {
            if (projs[x].total_dim() != projective(a, x).total_dim() + exm[x])
                c.expect(false, "dim P~ identity fails at " + tag);
            total += projs[x].total_dim();
        }
        if (total != a.dim() + m.dim)
            c.expect(false, "sum of P~ dims != dim C + dim M at " + tag);
    };
    int i = 0;
    for (const Presentation& p : corpus_instances()) {
        run(p, std::to_string(i++));
        if (!c.ok)
            break;
    }
    run(fixtures::tilted_a3(), "tilted_a3");
    run(fixtures::tilted_a3_tilde(), "tilted_a3_tilde");
    run(fixtures::tilted_d4_commutative(), "tilted_d4_commutative");
    run(fixtures::tilted_d4_fan(), "tilted_d4_fan");
    run(fixtures::hereditary_a3(), "hereditary_a3");
    report(6, "dim P~_x = dim P_x + dim e_x Ext^2(DC,C) everywhere", c.ok, c.detail.str());
}

void criterion7() {
    Check c;
    int hereditary = 0;
    for (const Presentation& p : corpus_instances()) {
        if (!p.relations.empty())
            continue;
        ++hereditary;
        Algebra a = build_algebra(p);
        Bimodule m = ext2_bimodule(a);
        if (m.dim != 0)
            c.expect(false, "nonzero bimodule on a hereditary instance");
        ExtensionAlgebra e = trivial_extension(a, m);
        if (e.total.dim() != a.dim() || e.total.table != a.table)
            c.expect(false, "extension differs from a hereditary input");
        if (!c.ok)
            break;
    }
    c.expect(hereditary > 0, "corpus has no hereditary instances");
    report(7,
           "hereditary degenerate case on " + std::to_string(hereditary) + " instances",
           c.ok, c.detail.str());
}

void criterion8() {
    Check c;
    int nonhereditary = 0;
    for (const Presentation& p : corpus_instances()) {
        if (p.relations.empty())
            continue;
        ++nonhereditary;
        Algebra a = build_algebra(p);
        Bimodule m = ext2_bimodule(a);
        if (m.dim <= 0)
            c.expect(false, "Ext^2(DC,C) vanished on a non-hereditary gldim-2 instance");
        ExtensionAlgebra e = trivial_extension(a, m);
        if (e.total.quiver.is_acyclic())
            c.expect(false, "extension quiver of a non-hereditary input is acyclic");
        if (!c.ok)
            break;
    }
    c.expect(nonhereditary > 0, "corpus has no non-hereditary instances");
    report(8,
           "nonvanishing and cyclicity on " + std::to_string(nonhereditary) +
               " non-hereditary instances",
           c.ok, c.detail.str());
}

void criterion9() {
    Check c;
    auto run = [&](const Presentation& p, const std::string& tag) {
        Algebra a = build_algebra(p);
        LiftOptions canonical;
        LiftOptions r1, r2;
        r1.randomize = true;
        r1.seed = 1337;
        r2.randomize = true;
        r2.seed = 424243;
        Bimodule m0 = ext2_bimodule(a, canonical);
        Bimodule m1 = ext2_bimodule(a, r1);
        Bimodule m2 = ext2_bimodule(a, r2);
        for (const Bimodule* m : {&m1, &m2}) {
            if (m->dim != m0.dim || m->labels != m0.labels)
                c.expect(false, "basis drift at " + tag);
            for (int b = 0; b < a.dim(); ++b)
                if (m->left[b] != m0.left[b] || m->right[b] != m0.right[b])
                    c.expect(false, "action matrices differ at " + tag);
        }
    };
    run(fixtures::tilted_a3(), "tilted_a3");
    run(fixtures::tilted_a3_tilde(), "tilted_a3_tilde");
    run(fixtures::tilted_d4_commutative(), "tilted_d4_commutative");
    run(fixtures::tilted_d4_fan(), "tilted_d4_fan");
    run(fixtures::hereditary_a3(), "hereditary_a3");
    report(9, "lift-independence of the bimodule actions", c.ok, c.detail.str());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures == 0)
        std::printf("acceptance: all 9 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
