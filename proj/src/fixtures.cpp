#include "xm/fixtures.hpp"

namespace xm::fixtures {

std::shared_ptr<const TableGroup> S3() {
    static const auto g = symmetric_group(3);
    return g;
}

std::shared_ptr<const TableGroup> Z2t() {
    static const auto g = std::make_shared<const TableGroup>("Z2", std::vector<std::string>{"0", "1"},
                                                             std::vector<int>{0, 1, 1, 0});
    return g;
}

XModP fix_a() {
    auto A = std::make_shared<XMod2>();
    auto one = std::make_shared<CyclicGroup>(1);
    auto z2 = std::make_shared<CyclicGroup>(2);
    A->name = "fixA";
    A->L = one;
    A->E = std::make_shared<CyclicGroup>(1);
    A->G = z2;
    A->delta = trivial_hom(A->L, A->E);
    A->bd = trivial_hom(A->E, A->G);
    A->actE = trivial_action(A->G, A->E);
    A->actL = trivial_action(A->G, A->L);
    A->lift = [](const Elem&, const Elem&) { return Elem(0); };
    return A;
}

namespace {

XModP fix_b_with(std::function<Elem(const Elem&, const Elem&)> lift, std::string name) {
    auto A = std::make_shared<XMod2>();
    auto Z = std::make_shared<IntegerGroup>();
    auto L = std::make_shared<IntegerGroup>();
    auto z2 = std::make_shared<CyclicGroup>(2);
    A->name = std::move(name);
    A->L = L;
    A->E = Z;
    A->G = z2;
    A->delta = linear_hom(L, Z, 2);
    A->bd = linear_hom(Z, z2, 1);
    auto sign = [](const Elem& g, const Elem& n) { return Elem(g.v == 1 ? -n.v : n.v); };
    A->actE = Action{z2, Z, sign, "sign"};
    A->actL = Action{z2, L, sign, "sign"};
    A->lift = std::move(lift);
    return A;
}

}  // namespace

XModP fix_b() {
    return fix_b_with([](const Elem& m, const Elem& n) { return Elem(m.v % 2 != 0 ? n.v : 0); }, "fixB");
}

XModP fix_b_zero_lift() {
    return fix_b_with([](const Elem&, const Elem&) { return Elem(0); }, "fixB_zero");
}

XModP fix_c(const GroupP& G, std::string name) {
    auto A = std::make_shared<XMod2>();
    A->name = name.empty() ? "fixC_" + G->name : std::move(name);
    A->L = std::make_shared<CyclicGroup>(1);
    A->E = G;
    A->G = G;
    A->delta = trivial_hom(A->L, G);
    A->bd = identity_hom(G);
    A->actE = conjugation_action(G);
    A->actL = trivial_action(G, A->L);
    A->lift = [](const Elem&, const Elem&) { return Elem(0); };
    return A;
}

XModP fix_d() {
    auto s3 = S3();
    // The 3-cycles are the elements of order 3.
    std::vector<Elem> gens;
    for (const auto& x : s3->elements())
        if (elem_order(s3, x) == 3) gens.push_back(x);
    auto A3 = std::make_shared<SubsetGroup>(s3, closure(s3, gens), "A3");
    auto A = std::make_shared<XMod2>();
    A->name = "fixD";
    A->L = A3;
    A->E = s3;
    A->G = std::make_shared<CyclicGroup>(1);
    A->delta = Hom{A3, s3, [](const Elem& x) { return x; }, {}, "incl"};
    A->bd = trivial_hom(s3, A->G);
    A->actE = trivial_action(A->G, s3);
    A->actL = trivial_action(A->G, A3);
    GroupP E = s3;
    A->lift = [E](const Elem& a, const Elem& b) { return E->comm(a, b); };
    return A;
}

XModP bottom_only(const GroupP& G, std::string name) {
    auto A = std::make_shared<XMod2>();
    A->name = name.empty() ? "bottom_" + G->name : std::move(name);
    A->L = std::make_shared<CyclicGroup>(1);
    A->E = std::make_shared<CyclicGroup>(1);
    A->G = G;
    A->delta = trivial_hom(A->L, A->E);
    A->bd = trivial_hom(A->E, G);
    A->actE = trivial_action(G, A->E);
    A->actL = trivial_action(G, A->L);
    A->lift = [](const Elem&, const Elem&) { return Elem(0); };
    return A;
}

Morph fail_map(const XModP& A, const XModP& B) {
    return Morph{A, B, trivial_hom(A->L, B->L), trivial_hom(A->E, B->E),
                 Hom{A->G, B->G, [](const Elem& x) { return x; }, {Hom::Linear::Mul, 1}, "id"}, "f"};
}

Morph fail_target(const XModP& A, const XModP& B) {
    return Morph{A, B, trivial_hom(A->L, B->L), trivial_hom(A->E, B->E), trivial_hom(A->G, B->G), "f'"};
}

}  // namespace xm::fixtures
