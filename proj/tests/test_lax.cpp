#include <doctest.h>

#include "xm/fixtures.hpp"
#include "xm/lax.hpp"
#include "xm/suites.hpp"

using namespace xm;

namespace {

struct Corpus {
    XModP A = fixtures::fix_c(fixtures::Z2t());
    XModP B = fixtures::fix_d();
    Q1 Q = q1(A);
    std::vector<LaxHomotopy> cells = all_lax_cells(A, B, 0);
};

const Corpus& corpus() {
    static Corpus c;
    return c;
}

}  // namespace

TEST_CASE("morphism count matches the involutions of S3") {
    const auto& c = corpus();
    // psi: Z2 -> S3 is determined by an element of order at most 2; mu and phi are forced.
    std::size_t want = 0;
    auto S = fixtures::S3();
    for (const auto& x : S->elements()) want += S->is_id(S->mul(x, x));
    CHECK(enumerate_morphisms(c.A, c.B).size() == want);
}

TEST_CASE("search space size per base") {
    const auto& c = corpus();
    // s: G -> E', t: E -> L', Pi: G x G -> L'
    std::uint64_t E = 6, L = 3, G = 2, Es = 2;
    std::uint64_t want = 1;
    for (std::uint64_t i = 0; i < G; ++i) want *= E;
    for (std::uint64_t i = 0; i < Es; ++i) want *= L;
    for (std::uint64_t i = 0; i < G * G; ++i) want *= L;
    for (const auto& f : enumerate_morphisms(c.A, c.B)) CHECK(lax_space_size(f) == want);
}

TEST_CASE("serial and parallel search agree") {
    const auto& c = corpus();
    for (const auto& f : enumerate_morphisms(c.A, c.B)) {
        auto a = lax_search(f, 1), b = lax_search(f, 0);
        CHECK(a.index == b.index);
    }
}

TEST_CASE("lax operations: units, inverses, involution") {
    const auto& c = corpus();
    REQUIRE(c.cells.size() == 144);
    for (const auto& h : c.cells) {
        CHECK(lax_holds(h));
        LaxHomotopy inv = lax_invert(h, c.Q);
        CHECK(lax_holds(inv));
        CHECK(same_lax(lax_invert(inv, c.Q), h));
        CHECK(same_lax(lax_concat(lax_unit(h.f), h, c.Q), h));
        CHECK(same_lax(lax_concat(h, lax_unit(lax_target(h)), c.Q), h));
        CHECK(same_lax(lax_concat(h, inv, c.Q), lax_unit(h.f)));
    }
}

TEST_CASE("lax to strict and back") {
    const auto& c = corpus();
    for (std::size_t i = 0; i < c.cells.size(); i += 7) {
        const auto& h = c.cells[i];
        Homotopy s = lax_to_strict(h, c.Q);
        CHECK(same_lax(strict_to_lax(s, c.Q), h));
    }
}

TEST_CASE("two-fold targets stay in the family") {
    const auto& c = corpus();
    for (std::size_t i = 0; i < c.cells.size(); i += 11)
        for (const auto& k : lax_twofold_search(c.cells[i], c.Q)) {
            LaxHomotopy t = lax_twofold_target(k, c.Q);
            CHECK(lax_holds(t));
            CHECK(std::any_of(c.cells.begin(), c.cells.end(), [&](const LaxHomotopy& x) { return same_lax(x, t); }));
        }
}

TEST_CASE("the asymmetric example validates forward only") {
    CHECK(lax_validate(fail_case_lax(), VerifyCfg{}).passed());
    FailCase fc = fail_case(20, VerifyCfg{});
    CHECK(fc.forward.passed());
    CHECK_FALSE(fc.reverse_found);
    CHECK(fc.exact_obstruction);
}

TEST_CASE("kernel relations of Q1") {
    CHECK(kernel_relations_check(q1(fixtures::fix_c(fixtures::Z2t())), VerifyCfg{}).passed());
}

TEST_CASE("lax equivalence: identity of fixD") {
    Morph id = identity_morph(fixtures::fix_d());
    LaxEquivalence e;
    CHECK(lax_equivalence_search(id, id, VerifyCfg{}, &e).passed());
    CHECK(is_lax_equivalence(e, VerifyCfg{}).passed());
}
