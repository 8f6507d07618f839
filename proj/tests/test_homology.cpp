#include "doctest.h"

#include "relext/resolution.hpp"
#include "support/fixtures.hpp"

using namespace relext;

namespace {

int vertex(const Algebra& a, const char* name) { return *a.quiver.vertex_index(name); }

std::vector<int> dimvec(const Representation& v) { return v.dims; }

} // namespace

TEST_CASE("projectives of tilted A3") {
    Algebra a = build_algebra(fixtures::tilted_a3());
    Representation p3 = projective(a, vertex(a, "3"));
    CHECK(dimvec(p3) == std::vector<int>{1, 1, 1});
    CHECK(loewy_series(p3) == std::vector<std::vector<int>>{{0, 0, 1}, {1, 1, 0}});
    CHECK(loewy_display(p3) == "[3 / 1 2]");

    // sink vertex: P_1 = S_1
    Representation p1 = projective(a, vertex(a, "1"));
    CHECK(dimvec(p1) == std::vector<int>{1, 0, 0});
    CHECK(loewy_series(p1).size() == 1);

    Representation p2 = projective(a, vertex(a, "2"));
    CHECK(loewy_display(p2) == "[2 / 1]");
}

TEST_CASE("projective P_4 of the two-relation square") {
    Algebra a = build_algebra(fixtures::tilted_a3_tilde());
    Representation p4 = projective(a, vertex(a, "4"));
    CHECK(dimvec(p4) == std::vector<int>{0, 1, 1, 1});
    CHECK(loewy_display(p4) == "[4 / 2 3]");
}

TEST_CASE("injectives of tilted A3") {
    Algebra a = build_algebra(fixtures::tilted_a3());
    Representation i1 = injective(a, vertex(a, "1"));
    CHECK(dimvec(i1) == std::vector<int>{1, 1, 1});
    CHECK(loewy_display(i1) == "[2 3 / 1]");
    CHECK(socle_dims(i1) == std::vector<int>{1, 0, 0});

    Representation i2 = injective(a, vertex(a, "2"));
    CHECK(loewy_display(i2) == "[3 / 2]");

    // I_3 is simple; a source vertex has I_x = S_x
    Representation i3 = injective(a, vertex(a, "3"));
    CHECK(dimvec(i3) == std::vector<int>{0, 0, 1});
}

TEST_CASE("simples: indicators, tops and socles") {
    Algebra a = build_algebra(fixtures::tilted_a3());
    for (int x = 0; x < 3; ++x) {
        Representation s = simple_module(a, x);
        CHECK(s.total_dim() == 1);
        CHECK(s.dims[x] == 1);
        Top t = top_of(projective(a, x));
        CHECK(t.dims == s.dims);
        CHECK(socle_dims(injective(a, x)) == s.dims);
    }
}

TEST_CASE("representations satisfy their presentations") {
    Presentation pres = fixtures::tilted_a3();
    Algebra a = build_algebra(pres);
    for (int x = 0; x < 3; ++x) {
        CHECK(projective(a, x).satisfies(pres));
        CHECK(injective(a, x).satisfies(pres));
    }
    CHECK(regular_rep(a).satisfies(pres));
    CHECK(dual_regular_rep(a).satisfies(pres));
}

TEST_CASE("projective covers") {
    Algebra a = build_algebra(fixtures::tilted_a3());
    // cover of a projective is an isomorphism
    Cover cp = projective_cover(projective(a, vertex(a, "3")));
    CHECK(cp.proj.gen_vertices == std::vector<int>{2});
    CHECK(kernel(cp.map, cp.proj.rep, projective(a, 2)).rep.is_zero());

    // cover of S_3 has kernel rad P_3 of dimension vector (1,1,0)
    Representation s3 = simple_module(a, vertex(a, "3"));
    Cover cs = projective_cover(s3);
    SubRep k = kernel(cs.map, cs.proj.rep, s3);
    CHECK(dimvec(k.rep) == std::vector<int>{1, 1, 0});

    // cover of DC: tops of I_1, I_2, I_3 are S_2+S_3, S_3, S_3, so the
    // cover is P_2 + P_3 + P_3 + P_3
    Cover cd = projective_cover(dual_regular_rep(a));
    std::vector<int> gens = cd.proj.gen_vertices;
    std::sort(gens.begin(), gens.end());
    CHECK(gens == std::vector<int>{1, 2, 2, 2});

    CHECK_THROWS_AS(projective_cover(zero_rep(a)), Error);
}

TEST_CASE("minimal resolution of S_3: P_3 <- P_1+P_2 <- P_1") {
    Algebra a = build_algebra(fixtures::tilted_a3());
    Representation s3 = simple_module(a, vertex(a, "3"));
    Resolution r = minimal_resolution(s3, 5);
    REQUIRE(r.complete);
    REQUIRE(r.length() == 2);
    CHECK(r.terms[0].gen_vertices == std::vector<int>{2});
    std::vector<int> t1 = r.terms[1].gen_vertices;
    std::sort(t1.begin(), t1.end());
    CHECK(t1 == std::vector<int>{0, 1});
    CHECK(r.terms[2].gen_vertices == std::vector<int>{0});

    // exactness: rank d_1 + rank d_2 = dim P_1 (cohomology vanishes in degree 1)
    auto flatrank = [&](const ModuleMap& m) {
        int rk = 0;
        for (const Matrix& b : m.blocks)
            rk += static_cast<int>(b.rank());
        return rk;
    };
    CHECK(flatrank(r.diffs[0]) + flatrank(r.diffs[1]) == r.terms[1].rep.total_dim());

    // Euler characteristic: alternating sum of term dims = dim module
    int euler = 0, sign = 1;
    for (const FreeModule& t : r.terms) {
        euler += sign * t.rep.total_dim();
        sign = -sign;
    }
    CHECK(euler == s3.total_dim());

    // a projective resolves in length 0
    Resolution rp = minimal_resolution(projective(a, 0), 5);
    CHECK(rp.complete);
    CHECK(rp.length() == 0);
}

TEST_CASE("pd I_2 = 1 and id P_2 = 1 in tilted A3") {
    Algebra a = build_algebra(fixtures::tilted_a3());
    CHECK(projective_dimension(injective(a, vertex(a, "2")), 5) == 1);
    CHECK(injective_dimension(a, projective(a, vertex(a, "2")), 5) == 1);
}

TEST_CASE("ext dimensions on the worked fixtures") {
    Algebra a = build_algebra(fixtures::tilted_a3());
    const int v1 = vertex(a, "1"), v3 = vertex(a, "3");
    CHECK(ext_dim(injective(a, v3), projective(a, v1), 2) == 1);
    CHECK(ext_dim(injective(a, v3), projective(a, v3), 2) == 1);
    CHECK(ext_dim(injective(a, v1), projective(a, v1), 2) == 1);
    CHECK(ext_dim(injective(a, v1), projective(a, v3), 2) == 1);
    CHECK(ext_dim(injective(a, vertex(a, "2")), regular_rep(a), 2) == 0);

    // projective first argument kills all higher Ext
    for (int i = 1; i <= 3; ++i)
        CHECK(ext_dim(projective(a, v3), regular_rep(a), i) == 0);

    // Ext^0 = Hom; Hom(P_x, C) = C e_x
    CHECK(ext_dim(projective(a, v3), regular_rep(a), 0) == 1);
    CHECK(ext_dim(projective(a, v1), regular_rep(a), 0) == 3);

    Algebra b = build_algebra(fixtures::tilted_a3_tilde());
    CHECK(ext_dim(injective(b, vertex(b, "4")), projective(b, vertex(b, "1")), 2) == 2);
}

TEST_CASE("global dimension") {
    CHECK(global_dimension(build_algebra(fixtures::tilted_a3()), 6) == 2);
    CHECK(global_dimension(build_algebra(fixtures::hereditary_a3()), 6) == 1);
    CHECK(global_dimension(build_algebra(fixtures::kronecker()), 6) == 1);
    CHECK(global_dimension(build_algebra(fixtures::tilted_d4_commutative()), 6) == 2);
    CHECK(global_dimension(build_algebra(fixtures::tilted_d4_fan()), 6) == 2);
    // semisimple: gldim 0
    Presentation ss;
    ss.quiver.add_vertex("1");
    CHECK(global_dimension(build_algebra(ss), 3) == 0);
    // the nilpotent loop algebra has infinite global dimension
    CHECK(global_dimension(build_algebra(fixtures::loop_nilpotent(2)), 8) == std::nullopt);
}

TEST_CASE("ext(S_x, S_y, 1) counts arrows; ext(S_x, S_y, 2) counts relations") {
    for (auto make : {fixtures::tilted_a3, fixtures::tilted_a3_tilde,
                      fixtures::tilted_d4_commutative, fixtures::tilted_d4_fan,
                      fixtures::hereditary_a3, fixtures::kronecker}) {
        Presentation p = make(Field::rationals());
        Algebra a = build_algebra(p);
        auto ext1 = ext_simple_table(a, 1);
        for (int x = 0; x < p.quiver.num_vertices(); ++x)
            for (int y = 0; y < p.quiver.num_vertices(); ++y)
                CHECK(ext1[x][y] == p.quiver.arrow_count(x, y));
        auto ext2 = ext_simple_table(a, 2);
        auto counts = ideal_top_counts(p);
        for (int x = 0; x < p.quiver.num_vertices(); ++x)
            for (int y = 0; y < p.quiver.num_vertices(); ++y) {
                auto it = counts.find({x, y});
                CHECK(ext2[x][y] == (it == counts.end() ? 0 : it->second));
            }
    }
}

TEST_CASE("duality: ext over C matches ext over the opposite") {
    Presentation p = fixtures::tilted_a3();
    Algebra a = build_algebra(p);
    Algebra op = opposite(a);
    for (int i = 0; i <= 2; ++i)
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                Representation m = injective(a, x);
                Representation n = projective(a, y);
                CHECK(ext_dim(m, n, i) == ext_dim(dual_rep(op, n), dual_rep(op, m), i));
            }
}

TEST_CASE("loewy layers sum to the dimension vector") {
    Algebra a = build_algebra(fixtures::tilted_d4_fan());
    for (int x = 0; x < 4; ++x) {
        Representation p = projective(a, x);
        auto layers = loewy_series(p);
        std::vector<int> sum(4, 0);
        for (const auto& l : layers)
            for (int v = 0; v < 4; ++v)
                sum[v] += l[v];
        CHECK(sum == p.dims);
        CHECK(layers[0] == simple_module(a, x).dims); // top layer = S_x
    }
}

TEST_CASE("lift_endomorphism: identity, zero and idempotent lifts") {
    Algebra a = build_algebra(fixtures::tilted_a3());
    Representation dc = dual_regular_rep(a);
    Resolution res = minimal_resolution(dc, 3);
    REQUIRE(res.complete);
    REQUIRE(res.length() == 2);

    const Field& f = a.field;
    ModuleMap id = ModuleMap::identity(f, dc.dims);
    auto chain = lift_endomorphism(res, id);
    // lifts of the identity along a minimal resolution are isomorphisms
    for (std::size_t d = 0; d < chain.size(); ++d)
        for (std::size_t x = 0; x < chain[d].blocks.size(); ++x)
            CHECK(chain[d].blocks[x].rank() == chain[d].blocks[x].rows());

    ModuleMap zero = ModuleMap::zero(f, dc.dims, dc.dims);
    auto zchain = lift_endomorphism(res, zero);
    // induced map on Hom(P_2, -) must then be zero on cohomology; the lift
    // itself lands in the radical, so its generator rows vanish nowhere forced;
    // compose with the augmentation to certify it lifts zero
    CHECK(zchain[0].compose(res.augmentation).is_zero());

    // a non-natural block map is rejected
    ModuleMap bad = ModuleMap::zero(f, dc.dims, dc.dims);
    bad.blocks[0].at(0, 0) = f.one();
    if (!bad.is_natural(dc, dc))
        CHECK_THROWS_AS(lift_endomorphism(res, bad), Error);
}

TEST_CASE("hom spaces via the naturality system agree with Ext^0") {
    Algebra a = build_algebra(fixtures::tilted_a3());
    Representation c = regular_rep(a);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            Representation px = projective(a, x);
            Representation iy = injective(a, y);
            CHECK(static_cast<int>(hom_basis(px, iy).size()) == ext_dim(px, iy, 0));
            for (const ModuleMap& f : hom_basis(px, iy))
                CHECK(f.is_natural(px, iy));
        }
    CHECK(static_cast<int>(hom_basis(c, c).size()) == ext_dim(c, c, 0));
    // End(C) of a basic algebra is C itself
    CHECK(static_cast<int>(hom_basis(c, c).size()) == a.dim());

    // default-bound resolutions terminate for gldim <= 2 inputs
    Resolution r = minimal_resolution(simple_module(a, 2));
    CHECK(r.complete);
    CHECK(r.length() == 2);
}

TEST_CASE("direct injectives agree with duals of opposite projectives") {
    Presentation pres = fixtures::tilted_a3_tilde();
    Algebra a = build_algebra(pres);
    Algebra op = opposite(a);
    for (int x = 0; x < a.quiver.num_vertices(); ++x) {
        Representation i1 = injective(a, x);
        Representation i2 = dual_rep(a, projective(op, x));
        CHECK(i1.dims == i2.dims);
        CHECK(loewy_display(i1) == loewy_display(i2));
        CHECK(socle_dims(i1) == socle_dims(i2));
    }
}

TEST_CASE("loewy display with multiplicities on the multigraph") {
    Algebra k = build_algebra(fixtures::kronecker());
    CHECK(loewy_display(projective(k, 1)) == "[2 / 1 1]");
    CHECK(loewy_display(injective(k, 0)) == "[2 2 / 1]");
}
