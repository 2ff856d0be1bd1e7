#pragma once

#include <array>

#include "xm/xmod.hpp"

namespace xm {

// Element layouts (positional, as in the displayed formulas):
//   Gr0(P*A) = G ⋉ E            (g,e)          = T2(g, e)
//   Gr1(P*A) = E ⋉ (E ⋉ L)      (a,e,k)        = T3(a, e, k)
//   Gr2(P*A) = L ⋉ L            (k,l)          = T2(k, l)

Elem derived_action(const XMod2& A, const Elem& b, const Elem& ek);
Elem first_lifted_action(const XMod2& A, const Elem& gx, const Elem& aek);
Elem second_lifted_action(const XMod2& A, const Elem& gx, const Elem& kl);
Elem path_lifting(const XMod2& A, const Elem& x, const Elem& y);

struct PathSpace {
    XModP base, total;
    Morph pr0, pr1, incl;
};

PathSpace path_space(const XModP& A);
// P*(f) between already-built path spaces of f.src and f.tgt.
Morph path_space_map(const Morph& f, const XModP& Psrc, const XModP& Ptgt);
Morph path_space_map(const Morph& f);

// Lifted-action special cases, path-space axioms, projections and inclusion.
Report path_space_report(const PathSpace& P, const VerifyCfg& cfg);
Report lifted_action_cases(const XMod2& A, const VerifyCfg& cfg);

struct DoublePath {
    PathSpace inner, outer;
    std::array<Morph, 4> d;  // d0 = P*(Pr1), d1 = Pr1 outer, d2 = Pr0 outer, d3 = P*(Pr0)
};

DoublePath double_path_space(const XModP& A);

// Closed-form faces of the double path space; level 0 = G'', 1 = E'', 2 = L''.
Elem explicit_face(const XMod2& A, int face, int level, const Elem& x);
Report double_faces_report(const DoublePath& D, const VerifyCfg& cfg, bool check_morphisms = true);

// Triangle space: sub-2-crossed module of the double path space.
struct Triangle {
    DoublePath dp;
    XModP total;                // carriers restricted (enumerated when A is finite)
    std::array<Morph, 4> d;     // restricted faces T(A) -> P*(A)
};

bool in_triangle0(const XMod2& A, const Elem& X);
bool in_triangle1(const XMod2& A, const Elem& X);
bool in_triangle2(const XMod2& A, const Elem& X);
Elem triangle_beta(const XMod2& A, const Elem& X);
// ((a,e,k),(1,f,l),(1,m)) as an element of E''.
Elem tri1(const XMod2& A, const Elem& a, const Elem& e, const Elem& k, const Elem& f, const Elem& l, const Elem& m);
// (g,x,1,z,w) as an element of G''.
Elem tri0(const XMod2& A, const Elem& g, const Elem& x, const Elem& z, const Elem& w);
Elem triangle_product_explicit(const XMod2& A, const Elem& X, const Elem& Y);
Elem triangle_action_explicit(const XMod2& A, const Elem& P, const Elem& X);

Triangle triangle_space(const XModP& A);
Report triangle_report(const Triangle& T, const VerifyCfg& cfg);
Report triangle_pullback_report(const Triangle& T, const VerifyCfg& cfg);

// Disk space: explicit carriers (G⋉E)⋉L, (E⋉(E⋉L))⋉L, L⋉L and the
// inherited copy inside the double path space.
struct Disk {
    XModP explicit_total;
    XModP inherited;
    Morph embed;           // explicit -> double path space
    Morph d1, d2;          // explicit faces to P*(A)
    DoublePath dp;
};

Disk disk_space(const XModP& A);
Report disk_report(const Disk& D, const VerifyCfg& cfg);

// Tetrahedron group inside Gr0(P*(T(A))).
struct Tetra {
    Triangle tri;
    GroupP P0;                    // Gr0(P*(T(A))) = Gr0(T) ⋉ Gr1(T)
    std::vector<Elem> elems;      // the carrier, enumerated
    std::array<Hom, 4> faces;     // Pr0, Pr1, P*(d1), P*(d0) into G''
};

Tetra tetra_group(const XModP& A);
// Closed forms for the four faces, in the order of Tetra::faces.
Elem tetra_face_explicit(const XMod2& A, int face, const Elem& X);
Report tetra_report(const Tetra& T, const VerifyCfg& cfg);

}  // namespace xm
