#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "xm/homotopy.hpp"
#include "xm/lax.hpp"

namespace xm {

// Line-oriented model files. One declaration per line or per block closed by
// `end`; `#` starts a comment; tokens containing blanks are double-quoted.
//
//   seed 7
//   group S3 table            elements ... / row ... (one row per element)
//   group Z2 cyclic 2
//   group Z integers radius 6
//   group F free x y
//   group A3 subgroup S3      generators ...
//   map d A -> B trivial|identity|inclusion|mul K|table (x -> y lines)
//   action a G on E trivial|conjugation|sign|table (g x -> y lines)
//   lifting l E -> L trivial|commutator|parity|table (x y -> z lines)
//   xmod X                    L/E/G/delta/boundary/actE/actL/lift lines
//   xmod QX q1 X              derived: Q¹(X); also `path X`
//   morph f X -> Y            mu/psi/phi lines
//   lax h over f              s/t/pi value lists
//   twofold k over h          k value list
//   homotopy h over f         s basis values, t values over E (or `t zero`)

class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, int line, int col, const std::string& msg);
    std::string file;
    int line, col;
    std::string msg;
};

struct Token {
    std::string text;
    int col = 0;
    bool quoted = false;
};

struct GroupDecl {
    std::string name, kind;  // table | cyclic | integers | free | subgroup
    std::int64_t n = 0;
    int radius = 0;
    std::vector<std::string> elements, basis, gens;
    std::vector<std::vector<std::string>> rows;
    std::string parent;
};

struct MapDecl {
    std::string name, dom, cod, rule;  // trivial | identity | inclusion | mul | table
    std::int64_t k = 0;
    std::vector<std::array<std::string, 2>> table;
};

struct ActionDecl {
    std::string name, actor, target, rule;  // trivial | conjugation | sign | table
    std::vector<std::array<std::string, 3>> table;
};

struct LiftDecl {
    std::string name, E, L, rule;  // trivial | commutator | parity | table
    std::vector<std::array<std::string, 3>> table;
};

struct XModDecl {
    std::string name, kind;  // explicit | q1 | path
    std::string of;
    std::string L, E, G, delta, bd, actE, actL, lift;
};

struct MorphDecl {
    std::string name, src, tgt, mu, psi, phi;
};

struct CellDecl {
    std::string name, kind, over;  // kind: lax | twofold | homotopy
    std::vector<std::string> s, t, pi, k;
    bool t_zero = false;
};

struct Model {
    std::string file;
    std::uint64_t seed = 0;
    bool has_seed = false;

    // Declarations in file order, for emit.
    std::vector<std::pair<char, std::size_t>> order;
    std::vector<GroupDecl> group_decls;
    std::vector<MapDecl> map_decls;
    std::vector<ActionDecl> action_decls;
    std::vector<LiftDecl> lift_decls;
    std::vector<XModDecl> xmod_decls;
    std::vector<MorphDecl> morph_decls;
    std::vector<CellDecl> cell_decls;

    std::map<std::string, GroupP> groups;
    std::map<std::string, Hom> maps;
    std::map<std::string, Action> actions;
    std::map<std::string, std::function<Elem(const Elem&, const Elem&)>> lifts;
    std::map<std::string, XModP> xmods;
    std::map<std::string, Morph> morphs;
    std::map<std::string, LaxHomotopy> lax;
    std::map<std::string, LaxTwoFold> twofolds;
    std::map<std::string, Homotopy> homotopies;
    std::map<std::string, Q1> q1s;  // keyed by base xmod name, built on demand

    const XModP& xmod(const std::string& name) const;
    const Morph& morph(const std::string& name) const;
    const LaxHomotopy& lax_cell(const std::string& name) const;
    const LaxTwoFold& twofold(const std::string& name) const;
    const Homotopy& homotopy(const std::string& name) const;
    const Q1& q1_of(const XModP& A);
};

Model parse_model(const std::string& text, const std::string& file = "<input>");
Model load_model(const std::string& path);
std::string emit_model(const Model& m);

// Element names: table names, integers, free words "[x][y]^-1" ("()" is the
// identity), parent names for subgroups, and show strings of enumerable carriers.
std::optional<Elem> parse_elem(const GroupP& G, const std::string& tok);

// Structural agreement of two loaded models: same declarations and, on every
// enumerable carrier, the same tables.
bool models_equivalent(const Model& a, const Model& b, std::string* why = nullptr);

}  // namespace xm
