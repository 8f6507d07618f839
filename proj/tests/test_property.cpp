#include "doctest.h"

#include "relext/extension.hpp"
#include "relext/io.hpp"
#include "support/corpus.hpp"

using namespace relext;

// bounded version of the acceptance property suites, as a fast regression net
TEST_CASE("random gldim-2 presentations: routes, identities, exactness") {
    auto instances = corpus::random_gldim2_corpus(25, 777u);
    REQUIRE(instances.size() == 25);
    for (const Presentation& p : instances) {
        Algebra a = build_algebra(p);
        a.verify();
        CAPTURE(presentation_to_string(p));

        // Euler characteristic of each simple's resolution
        for (int x = 0; x < p.quiver.num_vertices(); ++x) {
            Resolution r = minimal_resolution(simple_module(a, x), p.quiver.num_vertices());
            REQUIRE(r.complete);
            int euler = 0, sign = 1;
            for (const FreeModule& t : r.terms) {
                euler += sign * t.rep.total_dim();
                sign = -sign;
            }
            CHECK(euler == 1);
        }

        Bimodule m = ext2_bimodule(a);
        ExtensionAlgebra e = trivial_extension(a, m);
        auto route1 = relext_quiver(p).arrow_count_matrix();
        auto route2 = quiver_from_extension(e).arrow_count_matrix();
        CHECK(route1 == route2);

        // loewy layers of extension projectives sum to the dimension vectors
        for (const Representation& proj : extension_projectives(e)) {
            auto layers = loewy_series(proj);
            std::vector<int> sum(p.quiver.num_vertices(), 0);
            for (const auto& l : layers)
                for (std::size_t v = 0; v < l.size(); ++v)
                    sum[v] += l[v];
            CHECK(sum == proj.dims);
        }
    }
}

TEST_CASE("random presentations over F_7 build and resolve") {
    auto instances = corpus::random_gldim2_corpus(8, 424u, Field::prime(7));
    for (const Presentation& p : instances) {
        Algebra a = build_algebra(p);
        a.verify();
        Bimodule m = ext2_bimodule(a);
        ExtensionAlgebra e = trivial_extension(a, m);
        CHECK(e.total.dim() == a.dim() + m.dim);
    }
}
