#include <doctest.h>

#include "xm/fixtures.hpp"
#include "xm/pathspace.hpp"

using namespace xm;

TEST_CASE("path space carriers have the product sizes") {
    for (const auto& A : {fixtures::fix_c(fixtures::Z2t()), fixtures::fix_d()}) {
        PathSpace P = path_space(A);
        std::size_t l = A->L->order(), e = A->E->order(), g = A->G->order();
        CHECK(P.total->G->order() == g * e);
        CHECK(P.total->E->order() == e * e * l);
        CHECK(P.total->L->order() == l * l);
    }
}

TEST_CASE("projections split the inclusion") {
    auto A = fixtures::fix_d();
    PathSpace P = path_space(A);
    for (const Morph* pr : {&P.pr0, &P.pr1}) {
        for (const auto& g : A->G->elements()) CHECK(pr->phi(P.incl.phi(g)) == g);
        for (const auto& e : A->E->elements()) CHECK(pr->psi(P.incl.psi(e)) == e);
        for (const auto& l : A->L->elements()) CHECK(pr->mu(P.incl.mu(l)) == l);
    }
    auto s = levelwise_surjective(P.pr0);
    CHECK((s[0] && s[1] && s[2]));
}

TEST_CASE("path space reports") {
    VerifyCfg cfg;
    CHECK(path_space_report(path_space(fixtures::fix_c(fixtures::Z2t())), cfg).passed());
    CHECK(lifted_action_cases(*fixtures::fix_d(), cfg).passed());
}

TEST_CASE("triangle explicit forms on fixC_Z2") {
    VerifyCfg cfg;
    Triangle T = triangle_space(fixtures::fix_c(fixtures::Z2t()));
    CHECK(triangle_report(T, cfg).passed());
}
