#include <doctest.h>

#include <map>

#include "xm/fixtures.hpp"
#include "xm/model.hpp"

using namespace xm;

namespace {

Model corpus() { return load_model(XM_CORPUS); }

// Position of a parse failure, or (0,0) when the text parses.
std::pair<int, int> error_at(const std::string& text, std::string* msg = nullptr) {
    try {
        parse_model(text, "t.xmd");
    } catch (const ParseError& e) {
        if (msg) *msg = e.msg;
        return {e.line, e.col};
    }
    return {0, 0};
}

// Elements of a finite carrier keyed by their printed names.
std::map<std::string, Elem> by_name(const GroupP& G) {
    std::map<std::string, Elem> m;
    for (const auto& x : G->elements()) m[G->show(x)] = x;
    return m;
}

// Two finite 2-crossed modules agree once elements are matched by name.
void same_structure(const XMod2& a, const XMod2& b) {
    auto La = by_name(a.L), Lb = by_name(b.L);
    auto Ea = by_name(a.E), Eb = by_name(b.E);
    auto Ga = by_name(a.G), Gb = by_name(b.G);
    REQUIRE(La.size() == Lb.size());
    REQUIRE(Ea.size() == Eb.size());
    REQUIRE(Ga.size() == Gb.size());
    for (const auto& [n, l] : La) CHECK(a.E->show(a.delta(l)) == b.E->show(b.delta(Lb.at(n))));
    for (const auto& [n, e] : Ea) CHECK(a.G->show(a.bd(e)) == b.G->show(b.bd(Eb.at(n))));
    for (const auto& [gn, g] : Ga) {
        for (const auto& [n, e] : Ea) CHECK(a.E->show(a.actE(g, e)) == b.E->show(b.actE(Gb.at(gn), Eb.at(n))));
        for (const auto& [n, l] : La) CHECK(a.L->show(a.actL(g, l)) == b.L->show(b.actL(Gb.at(gn), Lb.at(n))));
    }
    for (const auto& [n, e] : Ea)
        for (const auto& [m, f] : Ea) CHECK(a.L->show(a.lift(e, f)) == b.L->show(b.lift(Eb.at(n), Eb.at(m))));
}

}  // namespace

TEST_CASE("corpus loads and its modules match the built-in fixtures") {
    Model m = corpus();
    CHECK(m.has_seed);
    same_structure(*m.xmod("fixA"), *fixtures::fix_a());
    same_structure(*m.xmod("fixC_Z2"), *fixtures::fix_c(fixtures::Z2t()));
    same_structure(*m.xmod("fixC_S3"), *fixtures::fix_c(fixtures::S3()));
    same_structure(*m.xmod("fixD"), *fixtures::fix_d());
}

TEST_CASE("corpus fixB matches the fixture on integer probes") {
    Model m = corpus();
    const auto& a = *m.xmod("fixB");
    auto B = fixtures::fix_b();
    for (std::int64_t x = -8; x <= 8; ++x) {
        CHECK(a.delta(Elem(x)) == B->delta(Elem(x)));
        CHECK(a.bd(Elem(x)) == B->bd(Elem(x)));
        for (std::int64_t g = 0; g < 2; ++g) {
            CHECK(a.actE(Elem(g), Elem(x)) == B->actE(Elem(g), Elem(x)));
            CHECK(a.actL(Elem(g), Elem(x)) == B->actL(Elem(g), Elem(x)));
        }
        for (std::int64_t y = -8; y <= 8; ++y) CHECK(a.lift(Elem(x), Elem(y)) == B->lift(Elem(x), Elem(y)));
    }
}

TEST_CASE("emit then load reproduces the model") {
    Model m = corpus();
    std::string text = emit_model(m);
    Model m2 = parse_model(text, "emitted");
    std::string why;
    CHECK_MESSAGE(models_equivalent(m, m2, &why), why);
    CHECK(emit_model(m2) == text);
}

TEST_CASE("parse errors carry line and column") {
    std::string msg;
    CHECK(error_at("group G cyclic 2\nmap f G -> H trivial\n", &msg) == std::pair{2, 12});
    CHECK(msg.find("unresolved-name") == 0);

    CHECK(error_at("group G cyclic 2\ngroup H cyclic 3\nmap f G -> H table\n  0 -> 0\n  1 -> 7\nend\n", &msg).first == 5);
    CHECK(msg.find("type-mismatch") == 0);

    CHECK(error_at("group G cyclic\n", &msg).first == 1);
    CHECK(error_at("group G table\n  elements a b\n  row a b\n", &msg).first != 0);
    CHECK(error_at("seed 3\nbogus line\n", &msg) == std::pair{2, 1});
    CHECK(error_at("group G cyclic 2 # comment\n") == std::pair{0, 0});
}

TEST_CASE("xmod blocks are type-checked") {
    std::string base =
        "group G cyclic 2\ngroup H cyclic 3\n"
        "map d H -> G trivial\nmap b G -> G identity\n"
        "action a G on G trivial\naction c G on H trivial\nlifting l G -> H trivial\n";
    std::string msg;
    auto at = error_at(base + "xmod X\n  L H\n  E G\n  G G\n  delta d\n  boundary b\n  actE a\n  actL c\n  lift l\nend\n",
                       &msg);
    CHECK(at == std::pair{0, 0});
    at = error_at(base + "xmod X\n  L H\n  E G\n  G G\n  delta b\n  boundary b\n  actE a\n  actL c\n  lift l\nend\n", &msg);
    CHECK(at.first == 12);
    CHECK(msg.find("type-mismatch") == 0);
}

TEST_CASE("quoted element names round-trip") {
    Model m = corpus();
    auto S = m.groups.at("S3");
    for (const auto& x : S->elements()) {
        auto back = parse_elem(S, S->show(x));
        REQUIRE(back);
        CHECK(*back == x);
    }
    CHECK_FALSE(parse_elem(S, "(0 3)"));
}

TEST_CASE("corpus cells are valid") {
    Model m = corpus();
    for (const auto& [name, h] : m.lax) CHECK_MESSAGE(lax_holds(h), name);
    const auto& k = m.twofold("k1");
    CHECK(lax_holds(lax_twofold_target(k, m.q1_of(k.h.f.src))));
    CHECK_THROWS_AS(m.xmod("nope"), GroupError);
}
