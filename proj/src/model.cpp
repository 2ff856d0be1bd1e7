#include "xm/model.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace xm {

ParseError::ParseError(std::string f, int l, int c, const std::string& m)
    : std::runtime_error(f + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + m),
      file(std::move(f)),
      line(l),
      col(c),
      msg(m) {}

namespace {

// Integers with an inline probe radius.
class BoundedIntegers : public IntegerGroup {
public:
    explicit BoundedIntegers(int radius) : radius_(radius) {}
    std::vector<Elem> probes(const ProbeCfg& cfg) const override {
        if (radius_ <= 0) return IntegerGroup::probes(cfg);
        ProbeCfg c = cfg;
        c.int_radius = radius_;
        return IntegerGroup::probes(c);
    }
    int radius() const { return radius_; }

private:
    int radius_;
};

std::vector<Token> tokenize(const std::string& line, const std::string& file, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#') break;
        Token t;
        t.col = static_cast<int>(i) + 1;
        if (c == '"') {
            t.quoted = true;
            std::size_t j = i + 1;
            while (j < line.size() && line[j] != '"') t.text += line[j++];
            if (j >= line.size()) throw ParseError(file, lineno, t.col, "syntax: unterminated quote");
            i = j + 1;
        } else {
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
                t.text += line[i++];
        }
        out.push_back(std::move(t));
    }
    return out;
}

bool is_int(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

std::string quote(const std::string& s) {
    bool plain = !s.empty();
    for (char c : s)
        if (c == ' ' || c == '\t' || c == '#' || c == '"') plain = false;
    return plain ? s : "\"" + s + "\"";
}

struct Line {
    int no;
    std::vector<Token> toks;
};

class Parser {
public:
    Parser(const std::string& text, std::string file) : file_(std::move(file)) {
        std::istringstream in(text);
        std::string s;
        int no = 0;
        while (std::getline(in, s)) {
            ++no;
            auto toks = tokenize(s, file_, no);
            if (!toks.empty()) lines_.push_back(Line{no, std::move(toks)});
        }
        m_.file = file_;
    }

    Model run() {
        while (pos_ < lines_.size()) {
            const Line& l = lines_[pos_++];
            const std::string& kw = l.toks[0].text;
            if (kw == "seed") {
                need(l, 2);
                if (!is_int(l.toks[1].text)) fail(l, 1, "syntax: seed must be an integer");
                m_.seed = std::stoull(l.toks[1].text);
                m_.has_seed = true;
            } else if (kw == "group") {
                group(l);
            } else if (kw == "map") {
                map(l);
            } else if (kw == "action") {
                action(l);
            } else if (kw == "lifting") {
                lifting(l);
            } else if (kw == "xmod") {
                xmod(l);
            } else if (kw == "morph") {
                morph(l);
            } else if (kw == "lax" || kw == "twofold" || kw == "homotopy") {
                cell(l);
            } else {
                fail(l, 0, "syntax: unknown declaration '" + kw + "'");
            }
        }
        return std::move(m_);
    }

private:
    std::string file_;
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    Model m_;

    [[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& msg) const {
        int col = tok < l.toks.size() ? l.toks[tok].col : (l.toks.empty() ? 1 : l.toks.back().col);
        throw ParseError(file_, l.no, col, msg);
    }
    void need(const Line& l, std::size_t n) const {
        if (l.toks.size() < n) fail(l, l.toks.size(), "syntax: expected " + std::to_string(n) + " fields");
    }
    void exactly(const Line& l, std::size_t n) const {
        need(l, n);
        if (l.toks.size() > n) fail(l, n, "syntax: unexpected '" + l.toks[n].text + "'");
    }
    void expect(const Line& l, std::size_t i, const char* word) const {
        if (i >= l.toks.size() || l.toks[i].text != word) fail(l, i, std::string("syntax: expected '") + word + "'");
    }
    void fresh(const Line& l, const std::string& name, bool taken) const {
        if (taken) fail(l, 1, "duplicate name '" + name + "'");
    }

    // Body lines up to `end`.
    std::vector<Line> block(const Line& head) {
        std::vector<Line> body;
        while (pos_ < lines_.size()) {
            const Line& l = lines_[pos_++];
            if (l.toks[0].text == "end") {
                exactly(l, 1);
                return body;
            }
            body.push_back(l);
        }
        fail(head, 0, "syntax: missing 'end' for block opened here");
    }

    GroupP group_ref(const Line& l, std::size_t i) const {
        need(l, i + 1);
        auto it = m_.groups.find(l.toks[i].text);
        if (it == m_.groups.end()) fail(l, i, "unresolved-name: group '" + l.toks[i].text + "'");
        return it->second;
    }
    Elem elem(const Line& l, std::size_t i, const GroupP& G) const {
        auto e = parse_elem(G, l.toks[i].text);
        if (!e) fail(l, i, "type-mismatch: '" + l.toks[i].text + "' is not an element of " + G->name);
        return *e;
    }
    template <class T>
    const T& ref(const Line& l, std::size_t i, const std::map<std::string, T>& tab, const char* what) const {
        need(l, i + 1);
        auto it = tab.find(l.toks[i].text);
        if (it == tab.end()) fail(l, i, std::string("unresolved-name: ") + what + " '" + l.toks[i].text + "'");
        return it->second;
    }
    template <class F>
    auto guard(const Line& l, F&& f) -> decltype(f()) {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& ex) {
            fail(l, 1, ex.what());
        }
    }

    void group(const Line& l) {
        need(l, 3);
        GroupDecl d;
        d.name = l.toks[1].text;
        d.kind = l.toks[2].text;
        fresh(l, d.name, m_.groups.count(d.name) > 0);
        std::shared_ptr<Group> g;
        if (d.kind == "cyclic") {
            exactly(l, 4);
            if (!is_int(l.toks[3].text) || std::stoll(l.toks[3].text) < 1) fail(l, 3, "syntax: order must be >= 1");
            d.n = std::stoll(l.toks[3].text);
            g = std::make_shared<CyclicGroup>(d.n);
        } else if (d.kind == "integers") {
            if (l.toks.size() > 3) {
                exactly(l, 5);
                expect(l, 3, "radius");
                if (!is_int(l.toks[4].text)) fail(l, 4, "syntax: radius must be an integer");
                d.radius = std::stoi(l.toks[4].text);
            }
            g = std::make_shared<BoundedIntegers>(d.radius);
        } else if (d.kind == "free") {
            for (std::size_t i = 3; i < l.toks.size(); ++i) d.basis.push_back(l.toks[i].text);
            g = std::make_shared<FreeGroup>(d.basis, d.name);
        } else if (d.kind == "table") {
            exactly(l, 3);
            for (const auto& b : block(l)) {
                if (b.toks[0].text == "elements") {
                    for (std::size_t i = 1; i < b.toks.size(); ++i) d.elements.push_back(b.toks[i].text);
                } else if (b.toks[0].text == "row") {
                    std::vector<std::string> row;
                    for (std::size_t i = 1; i < b.toks.size(); ++i) row.push_back(b.toks[i].text);
                    if (row.size() != d.elements.size())
                        fail(b, b.toks.size(), "syntax: row needs " + std::to_string(d.elements.size()) + " entries");
                    for (std::size_t i = 0; i < row.size(); ++i)
                        if (std::find(d.elements.begin(), d.elements.end(), row[i]) == d.elements.end())
                            fail(b, i + 1, "unresolved-name: element '" + row[i] + "'");
                    d.rows.push_back(std::move(row));
                } else {
                    fail(b, 0, "syntax: expected 'elements' or 'row'");
                }
            }
            if (d.elements.empty()) fail(l, 1, "syntax: table group without elements");
            if (d.rows.size() != d.elements.size()) fail(l, 1, "syntax: table needs one row per element");
            std::vector<int> tab;
            for (const auto& row : d.rows)
                for (const auto& x : row)
                    tab.push_back(static_cast<int>(std::find(d.elements.begin(), d.elements.end(), x) - d.elements.begin()));
            g = guard(l, [&] { return std::make_shared<TableGroup>(d.name, d.elements, tab); });
        } else if (d.kind == "subgroup") {
            exactly(l, 4);
            d.parent = l.toks[3].text;
            GroupP parent = group_ref(l, 3);
            if (!parent->finite()) fail(l, 3, "type-mismatch: subgroup of an infinite carrier");
            std::vector<Elem> gens;
            for (const auto& b : block(l)) {
                if (b.toks[0].text != "generators") fail(b, 0, "syntax: expected 'generators'");
                for (std::size_t i = 1; i < b.toks.size(); ++i) {
                    d.gens.push_back(b.toks[i].text);
                    gens.push_back(elem(b, i, parent));
                }
            }
            auto sub = subgroup_closure(parent, gens, d.name);
            m_.groups[d.name] = sub;
            m_.order.emplace_back('g', m_.group_decls.size());
            m_.group_decls.push_back(std::move(d));
            return;
        } else {
            fail(l, 2, "syntax: unknown group kind '" + d.kind + "'");
        }
        g->name = d.name;
        m_.groups[d.name] = g;
        m_.order.emplace_back('g', m_.group_decls.size());
        m_.group_decls.push_back(std::move(d));
    }

    static bool arithmetic(const GroupP& g) { return g->kind() == "cyclic" || g->kind() == "integers"; }

    void map(const Line& l) {
        need(l, 6);
        MapDecl d;
        d.name = l.toks[1].text;
        fresh(l, d.name, m_.maps.count(d.name) > 0);
        d.dom = l.toks[2].text;
        expect(l, 3, "->");
        d.cod = l.toks[4].text;
        d.rule = l.toks[5].text;
        GroupP A = group_ref(l, 2), B = group_ref(l, 4);
        Hom h;
        if (d.rule == "trivial") {
            exactly(l, 6);
            h = trivial_hom(A, B);
        } else if (d.rule == "identity") {
            exactly(l, 6);
            if (A != B) fail(l, 4, "type-mismatch: identity needs equal domain and codomain");
            h = identity_hom(A);
        } else if (d.rule == "inclusion") {
            exactly(l, 6);
            if (!A->finite()) fail(l, 2, "type-mismatch: inclusion needs an enumerable domain");
            for (const auto& x : A->elements())
                if (!B->contains(x)) fail(l, 4, "type-mismatch: " + A->name + " is not contained in " + B->name);
            h = Hom{A, B, [](const Elem& x) { return x; }, {}, d.name};
        } else if (d.rule == "mul") {
            exactly(l, 7);
            if (!is_int(l.toks[6].text)) fail(l, 6, "syntax: multiplier must be an integer");
            if (!arithmetic(A) || !arithmetic(B)) fail(l, 5, "type-mismatch: 'mul' needs cyclic or integer carriers");
            d.k = std::stoll(l.toks[6].text);
            h = guard(l, [&] { return linear_hom(A, B, d.k); });
        } else if (d.rule == "table") {
            exactly(l, 6);
            auto F = std::dynamic_pointer_cast<const FreeGroup>(A);
            if (!F && !A->finite()) fail(l, 2, "type-mismatch: table map needs an enumerable or free domain");
            std::vector<Elem> dom = F ? std::vector<Elem>{} : A->elements();
            if (F)
                for (std::size_t i = 0; i < F->rank(); ++i) dom.push_back(F->gen(i));
            std::vector<std::optional<Elem>> img(dom.size());
            for (const auto& b : block(l)) {
                exactly(b, 3);
                expect(b, 1, "->");
                Elem x = elem(b, 0, A);
                auto it = std::find(dom.begin(), dom.end(), x);
                if (it == dom.end()) fail(b, 0, "type-mismatch: free maps are given on basis letters");
                auto i = static_cast<std::size_t>(it - dom.begin());
                if (img[i]) fail(b, 0, "duplicate entry for '" + b.toks[0].text + "'");
                img[i] = elem(b, 2, B);
                d.table.push_back({b.toks[0].text, b.toks[2].text});
            }
            std::vector<Elem> im;
            for (std::size_t i = 0; i < dom.size(); ++i) {
                if (!img[i]) fail(l, 1, "table not total: missing '" + A->show(dom[i]) + "'");
                im.push_back(*img[i]);
            }
            h = F ? hom_extend_free(F, B, im, d.name) : table_hom(A, B, im, d.name);
        } else {
            fail(l, 5, "syntax: unknown map rule '" + d.rule + "'");
        }
        h.label = d.name;
        m_.maps[d.name] = h;
        m_.order.emplace_back('m', m_.map_decls.size());
        m_.map_decls.push_back(std::move(d));
    }

    void action(const Line& l) {
        need(l, 6);
        ActionDecl d;
        d.name = l.toks[1].text;
        fresh(l, d.name, m_.actions.count(d.name) > 0);
        d.actor = l.toks[2].text;
        expect(l, 3, "on");
        d.target = l.toks[4].text;
        d.rule = l.toks[5].text;
        exactly(l, 6);
        GroupP G = group_ref(l, 2), X = group_ref(l, 4);
        Action a;
        if (d.rule == "trivial") {
            a = trivial_action(G, X);
        } else if (d.rule == "conjugation") {
            if (G != X) fail(l, 4, "type-mismatch: conjugation needs actor = target");
            a = conjugation_action(G);
        } else if (d.rule == "sign") {
            if (!arithmetic(G) || !arithmetic(X)) fail(l, 5, "type-mismatch: 'sign' needs cyclic or integer carriers");
            a = Action{G, X, [X](const Elem& g, const Elem& x) { return g.v % 2 != 0 ? X->inv(x) : x; }, "sign"};
        } else if (d.rule == "table") {
            if (!G->finite() || !X->finite()) fail(l, 2, "type-mismatch: table action needs enumerable carriers");
            std::size_t ng = G->order(), nx = X->order();
            std::vector<std::optional<Elem>> tab(ng * nx);
            for (const auto& b : block(l)) {
                exactly(b, 4);
                expect(b, 2, "->");
                Elem g = elem(b, 0, G), x = elem(b, 1, X);
                std::size_t i = G->index_of(g) * nx + X->index_of(x);
                if (tab[i]) fail(b, 0, "duplicate entry");
                tab[i] = elem(b, 3, X);
                d.table.push_back({b.toks[0].text, b.toks[1].text, b.toks[3].text});
            }
            std::vector<Elem> full;
            for (std::size_t i = 0; i < tab.size(); ++i) {
                if (!tab[i]) fail(l, 1, "table not total: missing (" + G->show(G->at(i / nx)) + "," + X->show(X->at(i % nx)) + ")");
                full.push_back(*tab[i]);
            }
            a = Action{G, X, [G, X, full, nx](const Elem& g, const Elem& x) { return full[G->index_of(g) * nx + X->index_of(x)]; },
                       d.name};
        } else {
            fail(l, 5, "syntax: unknown action rule '" + d.rule + "'");
        }
        a.label = d.name;
        m_.actions[d.name] = a;
        m_.order.emplace_back('a', m_.action_decls.size());
        m_.action_decls.push_back(std::move(d));
    }

    void lifting(const Line& l) {
        need(l, 6);
        LiftDecl d;
        d.name = l.toks[1].text;
        fresh(l, d.name, m_.lifts.count(d.name) > 0);
        d.E = l.toks[2].text;
        expect(l, 3, "->");
        d.L = l.toks[4].text;
        d.rule = l.toks[5].text;
        exactly(l, 6);
        GroupP E = group_ref(l, 2), L = group_ref(l, 4);
        std::function<Elem(const Elem&, const Elem&)> f;
        if (d.rule == "trivial") {
            f = [L](const Elem&, const Elem&) { return L->id(); };
        } else if (d.rule == "commutator") {
            if (E->finite())
                for (const auto& x : E->elements())
                    for (const auto& y : E->elements())
                        if (!L->contains(E->comm(x, y)))
                            fail(l, 4, "type-mismatch: commutators of " + E->name + " do not lie in " + L->name);
            f = [E](const Elem& x, const Elem& y) { return E->comm(x, y); };
        } else if (d.rule == "parity") {
            if (!arithmetic(E) || !arithmetic(L)) fail(l, 5, "type-mismatch: 'parity' needs cyclic or integer carriers");
            auto cyc = std::dynamic_pointer_cast<const CyclicGroup>(L);
            std::int64_t mod = cyc ? cyc->modulus() : 0;
            f = [L, mod](const Elem& m, const Elem& n) {
                if (m.v % 2 == 0) return L->id();
                return mod ? Elem(((n.v % mod) + mod) % mod) : Elem(n.v);
            };
        } else if (d.rule == "table") {
            if (!E->finite() || !L->finite()) fail(l, 2, "type-mismatch: table lifting needs enumerable carriers");
            std::size_t ne = E->order();
            std::vector<std::optional<Elem>> tab(ne * ne);
            for (const auto& b : block(l)) {
                exactly(b, 4);
                expect(b, 2, "->");
                Elem x = elem(b, 0, E), y = elem(b, 1, E);
                std::size_t i = E->index_of(x) * ne + E->index_of(y);
                if (tab[i]) fail(b, 0, "duplicate entry");
                tab[i] = elem(b, 3, L);
                d.table.push_back({b.toks[0].text, b.toks[1].text, b.toks[3].text});
            }
            std::vector<Elem> full;
            for (std::size_t i = 0; i < tab.size(); ++i) {
                if (!tab[i]) fail(l, 1, "table not total");
                full.push_back(*tab[i]);
            }
            f = [E, full, ne](const Elem& x, const Elem& y) { return full[E->index_of(x) * ne + E->index_of(y)]; };
        } else {
            fail(l, 5, "syntax: unknown lifting rule '" + d.rule + "'");
        }
        m_.lifts[d.name] = f;
        m_.order.emplace_back('l', m_.lift_decls.size());
        m_.lift_decls.push_back(std::move(d));
    }

    void xmod(const Line& l) {
        need(l, 2);
        XModDecl d;
        d.name = l.toks[1].text;
        fresh(l, d.name, m_.xmods.count(d.name) > 0);
        if (l.toks.size() > 2) {
            exactly(l, 4);
            d.kind = l.toks[2].text;
            d.of = l.toks[3].text;
            const XModP& base = ref(l, 3, m_.xmods, "xmod");
            if (d.kind == "q1") {
                Q1 Q = guard(l, [&] { return q1(base); });
                auto T = std::make_shared<XMod2>(*Q.total);
                T->name = d.name;
                Q.total = T;
                Q.proj.src = T;
                m_.q1s[base->name] = Q;
                m_.xmods[d.name] = T;
            } else if (d.kind == "path") {
                auto T = std::make_shared<XMod2>(*path_space(base).total);
                T->name = d.name;
                m_.xmods[d.name] = T;
            } else {
                fail(l, 2, "syntax: unknown derived xmod '" + d.kind + "'");
            }
        } else {
            d.kind = "explicit";
            std::map<std::string, const Line*> field;
            std::vector<Line> body = block(l);
            for (const auto& b : body) {
                exactly(b, 2);
                static const std::set<std::string> keys{"L", "E", "G", "delta", "boundary", "actE", "actL", "lift"};
                if (!keys.count(b.toks[0].text)) fail(b, 0, "syntax: unknown field '" + b.toks[0].text + "'");
                if (field.count(b.toks[0].text)) fail(b, 0, "duplicate field '" + b.toks[0].text + "'");
                field[b.toks[0].text] = &b;
            }
            for (const char* k : {"L", "E", "G", "delta", "boundary", "actE", "actL", "lift"})
                if (!field.count(k)) fail(l, 1, std::string("syntax: missing field '") + k + "'");
            auto X = std::make_shared<XMod2>();
            X->name = d.name;
            X->L = group_ref(*field["L"], 1);
            X->E = group_ref(*field["E"], 1);
            X->G = group_ref(*field["G"], 1);
            X->delta = ref(*field["delta"], 1, m_.maps, "map");
            X->bd = ref(*field["boundary"], 1, m_.maps, "map");
            X->actE = ref(*field["actE"], 1, m_.actions, "action");
            X->actL = ref(*field["actL"], 1, m_.actions, "action");
            X->lift = ref(*field["lift"], 1, m_.lifts, "lifting");
            auto typed = [&](const char* k, bool ok, const std::string& msg) {
                if (!ok) fail(*field[k], 1, "type-mismatch: " + msg);
            };
            typed("delta", X->delta.dom == X->L && X->delta.cod == X->E, "delta must map L to E");
            typed("boundary", X->bd.dom == X->E && X->bd.cod == X->G, "boundary must map E to G");
            typed("actE", X->actE.actor == X->G && X->actE.target == X->E, "actE must be an action of G on E");
            typed("actL", X->actL.actor == X->G && X->actL.target == X->L, "actL must be an action of G on L");
            const LiftDecl* ld = nullptr;
            for (const auto& x : m_.lift_decls)
                if (x.name == field["lift"]->toks[1].text) ld = &x;
            typed("lift", ld && m_.groups.at(ld->E) == X->E && m_.groups.at(ld->L) == X->L, "lift must map E×E to L");
            d.L = field["L"]->toks[1].text;
            d.E = field["E"]->toks[1].text;
            d.G = field["G"]->toks[1].text;
            d.delta = field["delta"]->toks[1].text;
            d.bd = field["boundary"]->toks[1].text;
            d.actE = field["actE"]->toks[1].text;
            d.actL = field["actL"]->toks[1].text;
            d.lift = field["lift"]->toks[1].text;
            m_.xmods[d.name] = X;
        }
        m_.order.emplace_back('x', m_.xmod_decls.size());
        m_.xmod_decls.push_back(std::move(d));
    }

    void morph(const Line& l) {
        exactly(l, 5);
        MorphDecl d;
        d.name = l.toks[1].text;
        fresh(l, d.name, m_.morphs.count(d.name) > 0);
        d.src = l.toks[2].text;
        expect(l, 3, "->");
        d.tgt = l.toks[4].text;
        XModP S = ref(l, 2, m_.xmods, "xmod"), T = ref(l, 4, m_.xmods, "xmod");
        std::map<std::string, const Line*> field;
        std::vector<Line> body = block(l);
        for (const auto& b : body) {
            exactly(b, 2);
            const auto& k = b.toks[0].text;
            if (k != "mu" && k != "psi" && k != "phi") fail(b, 0, "syntax: unknown field '" + k + "'");
            field[k] = &b;
        }
        for (const char* k : {"mu", "psi", "phi"})
            if (!field.count(k)) fail(l, 1, std::string("syntax: missing field '") + k + "'");
        Hom mu = ref(*field["mu"], 1, m_.maps, "map"), psi = ref(*field["psi"], 1, m_.maps, "map"),
            phi = ref(*field["phi"], 1, m_.maps, "map");
        auto typed = [&](const char* k, const Hom& h, const GroupP& a, const GroupP& b) {
            if (h.dom != a || h.cod != b) fail(*field[k], 1, std::string("type-mismatch: ") + k + " has the wrong carriers");
        };
        typed("mu", mu, S->L, T->L);
        typed("psi", psi, S->E, T->E);
        typed("phi", phi, S->G, T->G);
        d.mu = field["mu"]->toks[1].text;
        d.psi = field["psi"]->toks[1].text;
        d.phi = field["phi"]->toks[1].text;
        m_.morphs[d.name] = Morph{S, T, mu, psi, phi, d.name};
        m_.order.emplace_back('f', m_.morph_decls.size());
        m_.morph_decls.push_back(std::move(d));
    }

    std::vector<Elem> values(const Line& b, const GroupP& G, std::size_t n, std::vector<std::string>& keep) {
        if (b.toks.size() != n + 1)
            fail(b, std::min(b.toks.size(), n + 1), "syntax: expected " + std::to_string(n) + " values");
        std::vector<Elem> out;
        for (std::size_t i = 1; i < b.toks.size(); ++i) {
            out.push_back(elem(b, i, G));
            keep.push_back(b.toks[i].text);
        }
        return out;
    }

    void cell(const Line& l) {
        exactly(l, 4);
        CellDecl d;
        d.kind = l.toks[0].text;
        d.name = l.toks[1].text;
        expect(l, 2, "over");
        d.over = l.toks[3].text;
        bool taken = m_.lax.count(d.name) || m_.twofolds.count(d.name) || m_.homotopies.count(d.name);
        fresh(l, d.name, taken);
        std::vector<Line> body = block(l);
        auto line_of = [&](const char* k) -> const Line* {
            const Line* r = nullptr;
            for (const auto& b : body)
                if (b.toks[0].text == k) {
                    if (r) fail(b, 0, std::string("duplicate field '") + k + "'");
                    r = &b;
                }
            return r;
        };
        for (const auto& b : body) {
            const auto& k = b.toks[0].text;
            bool ok = d.kind == "lax" ? (k == "s" || k == "t" || k == "pi")
                      : d.kind == "twofold" ? k == "k"
                                            : (k == "s" || k == "t");
            if (!ok) fail(b, 0, "syntax: unknown field '" + k + "'");
        }
        auto required = [&](const char* k) -> const Line& {
            const Line* r = line_of(k);
            if (!r) fail(l, 1, std::string("syntax: missing field '") + k + "'");
            return *r;
        };
        if (d.kind == "lax") {
            const Morph& f = ref(l, 3, m_.morphs, "morph");
            const XMod2& A = *f.src;
            const XMod2& B = *f.tgt;
            if (!A.finite()) fail(l, 3, "type-mismatch: lax data needs a finite source");
            LaxHomotopy h;
            h.f = f;
            h.name = d.name;
            std::size_t n = A.G->order();
            h.s = values(required("s"), B.E, n, d.s);
            h.t = values(required("t"), B.L, A.E->order(), d.t);
            h.Pi = values(required("pi"), B.L, n * n, d.pi);
            m_.lax[d.name] = std::move(h);
        } else if (d.kind == "twofold") {
            const LaxHomotopy& h = ref(l, 3, m_.lax, "lax cell");
            LaxTwoFold k{h, {}};
            k.k = values(required("k"), h.f.tgt->L, h.s.size(), d.k);
            m_.twofolds[d.name] = std::move(k);
        } else {
            const Morph& f = ref(l, 3, m_.morphs, "morph");
            auto F = free_base(*f.src);
            if (!F) fail(l, 3, "type-mismatch: homotopy data needs a free bottom group in the source");
            std::vector<Elem> sb = values(required("s"), f.tgt->E, F->rank(), d.s);
            const Line& tl = required("t");
            Fn t;
            if (tl.toks.size() == 2 && tl.toks[1].text == "zero") {
                d.t_zero = true;
                auto L = f.tgt->L;
                t = [L](const Elem&) { return L->id(); };
            } else {
                if (!f.src->E->finite()) fail(tl, 0, "type-mismatch: t tables need an enumerable E; use 't zero'");
                auto E = f.src->E;
                std::vector<Elem> tab = values(tl, f.tgt->L, E->order(), d.t);
                t = [E, tab](const Elem& e) { return tab[E->index_of(e)]; };
            }
            m_.homotopies[d.name] = make_homotopy(f, std::move(sb), std::move(t), d.name);
        }
        m_.order.emplace_back('c', m_.cell_decls.size());
        m_.cell_decls.push_back(std::move(d));
    }
};

void emit_list(std::ostringstream& o, const char* key, const std::vector<std::string>& v) {
    o << "  " << key;
    for (const auto& x : v) o << " " << quote(x);
    o << "\n";
}

}  // namespace

Model parse_model(const std::string& text, const std::string& file) { return Parser(text, file).run(); }

Model load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, 0, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str(), path);
}

std::string emit_model(const Model& m) {
    std::ostringstream o;
    if (m.has_seed) o << "seed " << m.seed << "\n";
    for (const auto& [kind, i] : m.order) {
        o << "\n";
        switch (kind) {
            case 'g': {
                const auto& d = m.group_decls[i];
                o << "group " << quote(d.name) << " " << d.kind;
                if (d.kind == "cyclic") o << " " << d.n;
                if (d.kind == "integers" && d.radius > 0) o << " radius " << d.radius;
                if (d.kind == "free")
                    for (const auto& b : d.basis) o << " " << quote(b);
                if (d.kind == "subgroup") o << " " << quote(d.parent);
                o << "\n";
                if (d.kind == "table") {
                    emit_list(o, "elements", d.elements);
                    for (const auto& r : d.rows) emit_list(o, "row", r);
                    o << "end\n";
                }
                if (d.kind == "subgroup") {
                    emit_list(o, "generators", d.gens);
                    o << "end\n";
                }
                break;
            }
            case 'm': {
                const auto& d = m.map_decls[i];
                o << "map " << quote(d.name) << " " << quote(d.dom) << " -> " << quote(d.cod) << " " << d.rule;
                if (d.rule == "mul") o << " " << d.k;
                o << "\n";
                if (d.rule == "table") {
                    for (const auto& e : d.table) o << "  " << quote(e[0]) << " -> " << quote(e[1]) << "\n";
                    o << "end\n";
                }
                break;
            }
            case 'a': {
                const auto& d = m.action_decls[i];
                o << "action " << quote(d.name) << " " << quote(d.actor) << " on " << quote(d.target) << " " << d.rule << "\n";
                if (d.rule == "table") {
                    for (const auto& e : d.table) o << "  " << quote(e[0]) << " " << quote(e[1]) << " -> " << quote(e[2]) << "\n";
                    o << "end\n";
                }
                break;
            }
            case 'l': {
                const auto& d = m.lift_decls[i];
                o << "lifting " << quote(d.name) << " " << quote(d.E) << " -> " << quote(d.L) << " " << d.rule << "\n";
                if (d.rule == "table") {
                    for (const auto& e : d.table) o << "  " << quote(e[0]) << " " << quote(e[1]) << " -> " << quote(e[2]) << "\n";
                    o << "end\n";
                }
                break;
            }
            case 'x': {
                const auto& d = m.xmod_decls[i];
                o << "xmod " << quote(d.name);
                if (d.kind != "explicit") {
                    o << " " << d.kind << " " << quote(d.of) << "\n";
                    break;
                }
                o << "\n  L " << quote(d.L) << "\n  E " << quote(d.E) << "\n  G " << quote(d.G) << "\n  delta "
                  << quote(d.delta) << "\n  boundary " << quote(d.bd) << "\n  actE " << quote(d.actE) << "\n  actL "
                  << quote(d.actL) << "\n  lift " << quote(d.lift) << "\nend\n";
                break;
            }
            case 'f': {
                const auto& d = m.morph_decls[i];
                o << "morph " << quote(d.name) << " " << quote(d.src) << " -> " << quote(d.tgt) << "\n  mu "
                  << quote(d.mu) << "\n  psi " << quote(d.psi) << "\n  phi " << quote(d.phi) << "\nend\n";
                break;
            }
            case 'c': {
                const auto& d = m.cell_decls[i];
                o << d.kind << " " << quote(d.name) << " over " << quote(d.over) << "\n";
                if (d.kind == "lax") {
                    emit_list(o, "s", d.s);
                    emit_list(o, "t", d.t);
                    emit_list(o, "pi", d.pi);
                } else if (d.kind == "twofold") {
                    emit_list(o, "k", d.k);
                } else {
                    emit_list(o, "s", d.s);
                    if (d.t_zero)
                        o << "  t zero\n";
                    else
                        emit_list(o, "t", d.t);
                }
                o << "end\n";
                break;
            }
        }
    }
    return o.str();
}

std::optional<Elem> parse_elem(const GroupP& G, const std::string& tok) {
    if (auto T = std::dynamic_pointer_cast<const TableGroup>(G)) {
        if (auto i = T->find(tok)) return Elem(static_cast<std::int64_t>(*i));
        return std::nullopt;
    }
    if (G->kind() == "cyclic" || G->kind() == "integers") {
        if (!is_int(tok)) return std::nullopt;
        Elem e(std::stoll(tok));
        return G->contains(e) ? std::optional<Elem>(e) : std::nullopt;
    }
    if (auto S = std::dynamic_pointer_cast<const SubsetGroup>(G)) {
        auto e = parse_elem(S->parent(), tok);
        if (e && S->contains(*e)) return e;
        return std::nullopt;
    }
    if (auto F = std::dynamic_pointer_cast<const FreeGroup>(G)) {
        if (tok == "()" || tok == "1") return F->id();
        std::vector<std::int32_t> w;
        std::size_t i = 0;
        while (i < tok.size()) {
            if (tok[i] != '[') return std::nullopt;
            std::size_t j = tok.find(']', i);
            if (j == std::string::npos) return std::nullopt;
            std::string b = tok.substr(i + 1, j - i - 1);
            const auto& basis = F->basis();
            auto it = std::find(basis.begin(), basis.end(), b);
            if (it == basis.end()) return std::nullopt;
            auto letter = static_cast<std::int32_t>(it - basis.begin() + 1);
            i = j + 1;
            if (tok.compare(i, 3, "^-1") == 0) {
                letter = -letter;
                i += 3;
            }
            w.push_back(letter);
        }
        return Elem::word(FreeGroup::reduce(w));
    }
    if (G->finite() && G->order() <= 100000)
        for (const auto& x : G->elements())
            if (G->show(x) == tok) return x;
    return std::nullopt;
}

const XModP& Model::xmod(const std::string& n) const {
    auto it = xmods.find(n);
    if (it == xmods.end()) throw GroupError("unresolved-name: xmod '" + n + "'");
    return it->second;
}
const Morph& Model::morph(const std::string& n) const {
    auto it = morphs.find(n);
    if (it == morphs.end()) throw GroupError("unresolved-name: morph '" + n + "'");
    return it->second;
}
const LaxHomotopy& Model::lax_cell(const std::string& n) const {
    auto it = lax.find(n);
    if (it == lax.end()) throw GroupError("unresolved-name: lax cell '" + n + "'");
    return it->second;
}
const LaxTwoFold& Model::twofold(const std::string& n) const {
    auto it = twofolds.find(n);
    if (it == twofolds.end()) throw GroupError("unresolved-name: twofold '" + n + "'");
    return it->second;
}
const Homotopy& Model::homotopy(const std::string& n) const {
    auto it = homotopies.find(n);
    if (it == homotopies.end()) throw GroupError("unresolved-name: homotopy '" + n + "'");
    return it->second;
}
const Q1& Model::q1_of(const XModP& A) {
    auto it = q1s.find(A->name);
    if (it != q1s.end() && it->second.base == A) return it->second;
    return q1s[A->name] = q1(A);
}

bool models_equivalent(const Model& a, const Model& b, std::string* why) {
    auto no = [&](std::string s) {
        if (why) *why = std::move(s);
        return false;
    };
    if (emit_model(a) != emit_model(b)) return no("declarations differ");
    for (const auto& [name, X] : a.xmods) {
        const XModP& Y = b.xmods.at(name);
        if (!X->finite() || !Y->finite()) continue;
        for (auto [g, h] : {std::pair{X->L, Y->L}, {X->E, Y->E}, {X->G, Y->G}}) {
            if (g->order() != h->order()) return no(name + ": carrier orders differ");
            for (std::size_t i = 0; i < g->order(); ++i)
                for (std::size_t j = 0; j < g->order(); ++j)
                    if (g->mul(g->at(i), g->at(j)) != h->mul(h->at(i), h->at(j))) return no(name + ": products differ");
        }
        for (const auto& e : X->E->elements()) {
            if (X->bd(e) != Y->bd(e)) return no(name + ": boundary differs");
            for (const auto& f : X->E->elements())
                if (X->lift(e, f) != Y->lift(e, f)) return no(name + ": lifting differs");
            for (const auto& g : X->G->elements())
                if (X->actE(g, e) != Y->actE(g, e)) return no(name + ": action on E differs");
        }
        for (const auto& l : X->L->elements()) {
            if (X->delta(l) != Y->delta(l)) return no(name + ": delta differs");
            for (const auto& g : X->G->elements())
                if (X->actL(g, l) != Y->actL(g, l)) return no(name + ": action on L differs");
        }
    }
    return true;
}

}  // namespace xm
