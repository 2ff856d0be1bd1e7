#include <doctest.h>

#include "xm/fixtures.hpp"
#include "xm/group.hpp"

using namespace xm;

namespace {

// Brute-force group laws over an enumerable carrier.
void check_group_laws(const GroupP& G) {
    auto el = G->elements();
    for (const auto& a : el) {
        CHECK(G->mul(a, G->id()) == a);
        CHECK(G->mul(G->id(), a) == a);
        CHECK(G->mul(a, G->inv(a)) == G->id());
        for (const auto& b : el)
            for (const auto& c : el) CHECK(G->mul(G->mul(a, b), c) == G->mul(a, G->mul(b, c)));
    }
}

}  // namespace

TEST_CASE("table and cyclic groups satisfy the group laws") {
    check_group_laws(fixtures::S3());
    check_group_laws(fixtures::Z2t());
    check_group_laws(std::make_shared<CyclicGroup>(6));
    check_group_laws(dihedral_group(4));
}

TEST_CASE("S3 has three involutions and is not abelian") {
    auto S = fixtures::S3();
    int involutions = 0;
    for (const auto& x : S->elements())
        if (!S->is_id(x) && S->is_id(S->mul(x, x))) ++involutions;
    CHECK(involutions == 3);
    CHECK_FALSE(is_abelian(S));
    CHECK(describe(S) == "S3");
    CHECK(describe(fixtures::Z2t()) == "Z2");
}

TEST_CASE("element orders in Z6") {
    auto Z6 = std::make_shared<CyclicGroup>(6);
    for (std::int64_t k = 0; k < 6; ++k) {
        std::size_t want = 6 / std::gcd<std::int64_t, std::int64_t>(k, 6);
        CHECK(elem_order(Z6, Elem(k)) == want);
    }
}

TEST_CASE("free group words reduce") {
    FreeGroup F({"x", "y"});
    Elem x = F.gen(0), y = F.gen(1);
    CHECK(F.mul(x, F.inv(x)) == F.id());
    CHECK(F.mul(F.mul(x, y), F.inv(y)) == x);
    CHECK(F.show(F.mul(x, F.inv(y))) == "[x][y]^-1");
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Elem a = F.random_word(rng, 8), b = F.random_word(rng, 8), c = F.random_word(rng, 8);
        CHECK(F.mul(a, F.inv(a)) == F.id());
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        CHECK(F.inv(F.mul(a, b)) == F.mul(F.inv(b), F.inv(a)));
    }
}

TEST_CASE("subgroup closure and normality") {
    auto S = fixtures::S3();
    auto r = *S->find("(0 1 2)");
    auto A3 = closure(S, {Elem(static_cast<std::int64_t>(r))});
    CHECK(A3.size() == 3);
    CHECK(is_normal(S, A3));
    auto t = *S->find("(0 1)");
    auto C2 = closure(S, {Elem(static_cast<std::int64_t>(t))});
    CHECK(C2.size() == 2);
    CHECK_FALSE(is_normal(S, C2));
}

TEST_CASE("kernel and image of the sign map S3 -> Z2") {
    auto S = fixtures::S3();
    auto Z2 = fixtures::Z2t();
    std::vector<Elem> img;
    for (const auto& x : S->elements()) {
        auto nm = S->show(x);
        // transpositions have exactly one blank in cycle notation
        img.push_back(Elem(std::count(nm.begin(), nm.end(), ' ') == 1 ? 1 : 0));
    }
    Hom sign = table_hom(S, Z2, img, "sign");
    CHECK(kernel(sign).size() == 3);
    CHECK(image(sign).size() == 2);
}
