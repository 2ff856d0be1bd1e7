#include "xm/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace xm {

bool operator==(const Elem& a, const Elem& b) {
    return a.v == b.v && a.w == b.w && a.t == b.t;
}

bool operator<(const Elem& a, const Elem& b) {
    if (a.v != b.v) return a.v < b.v;
    if (a.w != b.w) return a.w < b.w;
    return std::lexicographical_compare(a.t.begin(), a.t.end(), b.t.begin(), b.t.end());
}

std::size_t ElemHash::operator()(const Elem& e) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(e.v);
    auto mix = [&h](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (auto l : e.w) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(l)) * 0x100000001b3ULL);
    mix(e.t.size());
    for (const auto& c : e.t) mix((*this)(c));
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- Group base

Elem Group::random(Rng& rng) const {
    if (!finite()) throw GroupError(name + ": no sampler for this infinite carrier");
    std::uniform_int_distribution<std::size_t> d(0, order() - 1);
    return at(d(rng));
}

std::vector<Elem> Group::probes(const ProbeCfg& cfg) const {
    if (!finite()) throw GroupError(name + ": infinite carrier without a probe set");
    if (order() <= cfg.enum_limit) return elements();
    Rng rng(cfg.seed ^ 0x51a3d0c1ULL);
    std::vector<Elem> out{id()};
    std::unordered_set<Elem, ElemHash> seen{id()};
    for (std::size_t i = 0; i < cfg.big_samples * 4 && out.size() < cfg.big_samples; ++i) {
        Elem x = random(rng);
        if (seen.insert(x).second) out.push_back(std::move(x));
    }
    return out;
}

std::vector<Elem> Group::elements() const {
    std::vector<Elem> out;
    std::size_t n = order();
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
    return out;
}

Elem Group::pow(const Elem& a, std::int64_t n) const {
    Elem base = n < 0 ? inv(a) : a;
    std::int64_t m = n < 0 ? -n : n;
    Elem r = id();
    while (m > 0) {
        if (m & 1) r = mul(r, base);
        base = mul(base, base);
        m >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------- TableGroup

TableGroup::TableGroup(std::string nm, std::vector<std::string> names, std::vector<int> table)
    : n_(names.size()), names_(std::move(names)), table_(std::move(table)) {
    name = std::move(nm);
    if (table_.size() != n_ * n_) throw GroupError(name + ": Cayley table has wrong size");
    for (int x : table_)
        if (x < 0 || static_cast<std::size_t>(x) >= n_) throw GroupError(name + ": table entry out of range");
    for (std::size_t j = 0; j < n_; ++j)
        if (table_[j] != static_cast<int>(j)) throw GroupError(name + ": first element must be the identity");
    inv_.assign(n_, -1);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (table_[i * n_ + j] == 0) inv_[i] = static_cast<int>(j);
    for (int x : inv_)
        if (x < 0) throw GroupError(name + ": element without inverse");
}

Elem TableGroup::mul(const Elem& a, const Elem& b) const {
    return Elem(table_[static_cast<std::size_t>(a.v) * n_ + static_cast<std::size_t>(b.v)]);
}

bool TableGroup::contains(const Elem& e) const {
    return e.t.empty() && e.w.empty() && e.v >= 0 && static_cast<std::size_t>(e.v) < n_;
}

std::string TableGroup::show(const Elem& e) const {
    if (!contains(e)) return "?";
    return names_[static_cast<std::size_t>(e.v)];
}

std::optional<std::size_t> TableGroup::find(const std::string& nm) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (names_[i] == nm) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------- Cyclic / Z

CyclicGroup::CyclicGroup(std::int64_t n) : n_(n) {
    if (n < 1) throw GroupError("cyclic group needs n >= 1");
    name = "Z" + std::to_string(n);
}

Elem IntegerGroup::random(Rng& rng) const {
    std::uniform_int_distribution<std::int64_t> d(-64, 64);
    return Elem(d(rng));
}

std::vector<Elem> IntegerGroup::probes(const ProbeCfg& cfg) const {
    std::vector<Elem> out;
    for (std::int64_t i = -cfg.int_radius; i <= cfg.int_radius; ++i) out.emplace_back(i);
    return out;
}

// ---------------------------------------------------------------- Free

FreeGroup::FreeGroup(std::vector<std::string> basis, std::string nm) : basis_(std::move(basis)) {
    name = std::move(nm);
    std::set<std::string> s(basis_.begin(), basis_.end());
    if (s.size() != basis_.size()) throw GroupError(name + ": basis symbols must be distinct");
}

std::vector<std::int32_t> FreeGroup::reduce(const std::vector<std::int32_t>& w) {
    std::vector<std::int32_t> st;
    st.reserve(w.size());
    for (auto l : w) {
        if (!st.empty() && st.back() == -l)
            st.pop_back();
        else
            st.push_back(l);
    }
    return st;
}

Elem FreeGroup::mul(const Elem& a, const Elem& b) const {
    std::vector<std::int32_t> out = a.w;
    for (auto l : b.w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return Elem::word(std::move(out));
}

Elem FreeGroup::inv(const Elem& a) const {
    std::vector<std::int32_t> out(a.w.rbegin(), a.w.rend());
    for (auto& l : out) l = -l;
    return Elem::word(std::move(out));
}

bool FreeGroup::contains(const Elem& e) const {
    if (!e.t.empty() || e.v != 0) return false;
    for (std::size_t i = 0; i < e.w.size(); ++i) {
        auto l = e.w[i];
        if (l == 0 || static_cast<std::size_t>(std::abs(l)) > basis_.size()) return false;
        if (i > 0 && e.w[i - 1] == -l) return false;
    }
    return true;
}

std::string FreeGroup::show(const Elem& e) const {
    if (e.w.empty()) return "()";
    std::string s;
    for (auto l : e.w) {
        s += "[" + basis_[static_cast<std::size_t>(std::abs(l) - 1)] + "]";
        if (l < 0) s += "^-1";
    }
    return s;
}

Elem FreeGroup::random_word(Rng& rng, int maxlen) const {
    std::uniform_int_distribution<int> len(0, maxlen);
    std::uniform_int_distribution<std::int32_t> sym(1, static_cast<std::int32_t>(basis_.size()));
    std::bernoulli_distribution sign(0.5);
    int n = len(rng);
    std::vector<std::int32_t> w;
    while (static_cast<int>(w.size()) < n) {
        std::int32_t l = sym(rng) * (sign(rng) ? 1 : -1);
        if (!w.empty() && w.back() == -l) continue;
        w.push_back(l);
    }
    return Elem::word(std::move(w));
}

Elem FreeGroup::random(Rng& rng) const { return random_word(rng, 8); }

std::vector<Elem> FreeGroup::probes(const ProbeCfg& cfg) const {
    std::vector<Elem> out{Elem{}};
    std::vector<std::vector<std::int32_t>> layer{{}};
    auto r = static_cast<std::int32_t>(basis_.size());
    for (int d = 1; d <= cfg.word_depth; ++d) {
        std::vector<std::vector<std::int32_t>> next;
        for (const auto& w : layer) {
            for (std::int32_t s = 1; s <= r; ++s) {
                for (std::int32_t l : {s, -s}) {
                    if (!w.empty() && w.back() == -l) continue;
                    auto x = w;
                    x.push_back(l);
                    next.push_back(std::move(x));
                }
            }
        }
        for (const auto& w : next) out.push_back(Elem::word(w));
        layer = std::move(next);
    }
    if (cfg.word_samples > 0) {
        std::unordered_set<Elem, ElemHash> seen(out.begin(), out.end());
        Rng rng(cfg.seed ^ 0xf4ee0001ULL);
        for (int i = 0; i < cfg.word_samples; ++i) {
            Elem x = random_word(rng, cfg.word_maxlen);
            if (seen.insert(x).second) out.push_back(std::move(x));
        }
    }
    return out;
}

// ---------------------------------------------------------------- Homs

Hom identity_hom(const GroupP& g) {
    Hom h{g, g, [](const Elem& x) { return x; }, {}, "id"};
    h.lin = {Hom::Linear::Mul, 1};
    return h;
}

Hom trivial_hom(const GroupP& dom, const GroupP& cod) {
    Elem one = cod->id();
    Hom h{dom, cod, [one](const Elem&) { return one; }, {}, "1"};
    h.lin = {Hom::Linear::Zero, 0};
    return h;
}

Hom compose(const Hom& outer, const Hom& inner) {
    auto f = outer.f;
    auto g = inner.f;
    Hom h{inner.dom, outer.cod, [f, g](const Elem& x) { return f(g(x)); }, {}, outer.label + "∘" + inner.label};
    if (outer.lin.kind == Hom::Linear::Zero || inner.lin.kind == Hom::Linear::Zero)
        h.lin = {Hom::Linear::Zero, 0};
    else if (outer.lin.kind == Hom::Linear::Mul && inner.lin.kind == Hom::Linear::Mul)
        h.lin = {Hom::Linear::Mul, outer.lin.k * inner.lin.k};
    return h;
}

Hom linear_hom(const GroupP& dom, const GroupP& cod, std::int64_t k) {
    std::int64_t m = 0;
    if (auto c = std::dynamic_pointer_cast<const CyclicGroup>(cod)) m = c->modulus();
    else if (!std::dynamic_pointer_cast<const IntegerGroup>(cod))
        throw GroupError("linear_hom needs a cyclic or integer codomain");
    Hom h{dom, cod,
          [k, m](const Elem& x) {
              std::int64_t y = k * x.v;
              if (m > 0) y = ((y % m) + m) % m;
              return Elem(y);
          },
          {}, "x" + std::to_string(k)};
    h.lin = {Hom::Linear::Mul, k};
    return h;
}

Hom table_hom(const GroupP& dom, const GroupP& cod, std::vector<Elem> images, std::string label) {
    if (!dom->finite() || images.size() != dom->order()) throw GroupError("table_hom: table must cover the domain");
    auto tab = std::make_shared<const std::vector<Elem>>(std::move(images));
    GroupP d = dom;
    return Hom{dom, cod, [tab, d](const Elem& x) { return (*tab)[d->index_of(x)]; }, {}, std::move(label)};
}

Hom hom_extend_free(const std::shared_ptr<const FreeGroup>& F, const GroupP& cod, std::vector<Elem> images,
                    std::string label) {
    if (images.size() != F->rank()) throw GroupError("hom_extend_free: one image per basis symbol");
    std::vector<Elem> invs;
    for (const auto& x : images) invs.push_back(cod->inv(x));
    auto im = std::make_shared<const std::vector<Elem>>(std::move(images));
    auto iv = std::make_shared<const std::vector<Elem>>(std::move(invs));
    GroupP c = cod;
    return Hom{F, cod,
               [im, iv, c](const Elem& w) {
                   Elem r = c->id();
                   for (auto l : w.w) {
                       auto i = static_cast<std::size_t>(std::abs(l) - 1);
                       r = c->mul(r, l > 0 ? (*im)[i] : (*iv)[i]);
                   }
                   return r;
               },
               {}, std::move(label)};
}

Action trivial_action(const GroupP& actor, const GroupP& target) {
    return Action{actor, target, [](const Elem&, const Elem& x) { return x; }, "trivial"};
}

Action conjugation_action(const GroupP& g) {
    GroupP G = g;
    return Action{g, g, [G](const Elem& a, const Elem& x) { return G->conj(a, x); }, "ad"};
}

Action action_via(const Action& a, const Hom& h) {
    auto f = a.f;
    auto hf = h.f;
    return Action{h.dom, a.target, [f, hf](const Elem& g, const Elem& x) { return f(hf(g), x); }, a.label};
}

// ---------------------------------------------------------------- Semidirect

Semidirect::Semidirect(GroupP actor, GroupP target, Action act, std::string nm)
    : H_(std::move(actor)), N_(std::move(target)), act_(std::move(act)) {
    name = nm.empty() ? H_->name + "⋉" + N_->name : std::move(nm);
}

Elem Semidirect::mul(const Elem& a, const Elem& b) const {
    const Elem& g = a.t[0];
    const Elem& e = a.t[1];
    const Elem& g2 = b.t[0];
    const Elem& e2 = b.t[1];
    return T2(H_->mul(g, g2), N_->mul(act_.f(H_->inv(g2), e), e2));
}

Elem Semidirect::inv(const Elem& a) const {
    const Elem& g = a.t[0];
    return T2(H_->inv(g), act_.f(g, N_->inv(a.t[1])));
}

Elem Semidirect::at(std::size_t i) const {
    std::size_t n = N_->order();
    return T2(H_->at(i / n), N_->at(i % n));
}

std::size_t Semidirect::index_of(const Elem& e) const {
    return H_->index_of(e.t[0]) * N_->order() + N_->index_of(e.t[1]);
}

bool Semidirect::contains(const Elem& e) const {
    return e.t.size() == 2 && H_->contains(e.t[0]) && N_->contains(e.t[1]);
}

std::string Semidirect::show(const Elem& e) const {
    return "(" + H_->show(e.t[0]) + "," + N_->show(e.t[1]) + ")";
}

Elem Semidirect::random(Rng& rng) const {
    Elem a = H_->random(rng);
    return T2(std::move(a), N_->random(rng));
}

std::vector<Elem> Semidirect::probes(const ProbeCfg& cfg) const {
    if (finite()) return Group::probes(cfg);
    auto ph = H_->probes(cfg);
    auto pn = N_->probes(cfg);
    std::vector<Elem> out;
    if (ph.size() * pn.size() <= cfg.enum_limit) {
        for (const auto& a : ph)
            for (const auto& b : pn) out.push_back(T2(a, b));
        return out;
    }
    Rng rng(cfg.seed ^ 0x5e3d1ULL);
    std::uniform_int_distribution<std::size_t> dh(0, ph.size() - 1), dn(0, pn.size() - 1);
    out.push_back(id());
    for (std::size_t i = 0; i < cfg.big_samples; ++i) out.push_back(T2(ph[dh(rng)], pn[dn(rng)]));
    return out;
}

GroupP direct_product(const GroupP& a, const GroupP& b) {
    return std::make_shared<Semidirect>(a, b, trivial_action(a, b), a->name + "×" + b->name);
}

// ---------------------------------------------------------------- Subset

SubsetGroup::SubsetGroup(GroupP parent, std::vector<Elem> elems, std::string nm)
    : parent_(std::move(parent)), elems_(std::move(elems)) {
    name = std::move(nm);
    for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = i;
}

std::size_t SubsetGroup::index_of(const Elem& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw GroupError(name + ": element not in carrier");
    return it->second;
}

// ---------------------------------------------------------------- Pullback

PullbackGroup::PullbackGroup(Hom phi, Hom bd, std::string nm, ProbeFn probe_override)
    : phi_(std::move(phi)), bd_(std::move(bd)), probe_override_(std::move(probe_override)) {
    name = nm.empty() ? phi_.dom->name + "×" + bd_.dom->name : std::move(nm);
    finite_ = phi_.dom->finite() && bd_.dom->finite();
    if (finite_) {
        std::unordered_map<Elem, std::vector<Elem>, ElemHash> fibre;
        for (const auto& m : bd_.dom->elements()) fibre[bd_(m)].push_back(m);
        for (const auto& g : phi_.dom->elements()) {
            auto it = fibre.find(phi_(g));
            if (it == fibre.end()) continue;
            for (const auto& m : it->second) {
                index_[T2(g, m)] = elems_.size();
                elems_.push_back(T2(g, m));
            }
        }
    }
}

Elem PullbackGroup::mul(const Elem& a, const Elem& b) const {
    return T2(phi_.dom->mul(a.t[0], b.t[0]), bd_.dom->mul(a.t[1], b.t[1]));
}

Elem PullbackGroup::inv(const Elem& a) const { return T2(phi_.dom->inv(a.t[0]), bd_.dom->inv(a.t[1])); }

Elem PullbackGroup::id() const { return T2(phi_.dom->id(), bd_.dom->id()); }

std::size_t PullbackGroup::order() const {
    if (!finite_) return Group::order();
    return elems_.size();
}

Elem PullbackGroup::at(std::size_t i) const {
    if (!finite_) return Group::at(i);
    return elems_.at(i);
}

std::size_t PullbackGroup::index_of(const Elem& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw GroupError(name + ": element not in carrier");
    return it->second;
}

bool PullbackGroup::contains(const Elem& e) const {
    return e.t.size() == 2 && phi_.dom->contains(e.t[0]) && bd_.dom->contains(e.t[1]) &&
           phi_(e.t[0]) == bd_(e.t[1]);
}

std::string PullbackGroup::show(const Elem& e) const {
    return "(" + phi_.dom->show(e.t[0]) + "," + bd_.dom->show(e.t[1]) + ")";
}

Elem PullbackGroup::random(Rng& rng) const {
    if (finite_) return Group::random(rng);
    ProbeCfg cfg;
    cfg.seed = rng();
    auto p = probes(cfg);
    std::uniform_int_distribution<std::size_t> d(0, p.size() - 1);
    return p[d(rng)];
}

std::vector<Elem> PullbackGroup::probes(const ProbeCfg& cfg) const {
    if (probe_override_) return probe_override_(cfg);
    if (finite_) return Group::probes(cfg);
    std::vector<Elem> out;
    auto pg = phi_.dom->probes(cfg);
    auto pm = bd_.dom->probes(cfg);
    for (const auto& g : pg)
        for (const auto& m : pm)
            if (phi_(g) == bd_(m)) out.push_back(T2(g, m));
    return out;
}

Hom pullback_proj_left(const std::shared_ptr<const PullbackGroup>& P) {
    return Hom{P, P->phi().dom, [](const Elem& x) { return x.t[0]; }, {}, "pr_1"};
}

Hom pullback_proj_right(const std::shared_ptr<const PullbackGroup>& P) {
    return Hom{P, P->bd().dom, [](const Elem& x) { return x.t[1]; }, {}, "pr_2"};
}

// ---------------------------------------------------------------- Quotient

QuotientGroup::QuotientGroup(GroupP parent, const std::vector<Elem>& normal, std::string nm)
    : parent_(std::move(parent)) {
    name = std::move(nm);
    std::size_t n = parent_->order();
    const std::size_t unset = static_cast<std::size_t>(-1);
    rep_of_.assign(n, unset);
    for (std::size_t i = 0; i < n; ++i) {
        if (rep_of_[i] != unset) continue;
        Elem g = parent_->at(i);
        std::size_t r = reps_.size();
        reps_.push_back(g);
        for (const auto& m : normal) rep_of_[parent_->index_of(parent_->mul(g, m))] = r;
    }
}

Elem QuotientGroup::canon(const Elem& e) const { return reps_[rep_of_[parent_->index_of(e)]]; }

std::size_t QuotientGroup::index_of(const Elem& e) const { return rep_of_[parent_->index_of(e)]; }

bool QuotientGroup::contains(const Elem& e) const {
    if (!parent_->contains(e)) return false;
    return canon(e) == e;
}

// ---------------------------------------------------------------- Permutations

namespace {

std::string cycle_name(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        s += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) s += " ";
            s += std::to_string(j);
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

}  // namespace

std::shared_ptr<const TableGroup> permutation_group(const std::vector<std::vector<int>>& gens, std::string nm) {
    if (gens.empty()) throw GroupError("permutation_group: need at least one generator");
    std::size_t deg = gens.front().size();
    std::vector<int> idp(deg);
    std::iota(idp.begin(), idp.end(), 0);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems{idp};
    index[idp] = 0;
    // compose(p,q) = p∘q, i.e. apply q first
    auto compose_p = [deg](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(deg);
        for (std::size_t i = 0; i < deg; ++i) r[i] = p[static_cast<std::size_t>(q[i])];
        return r;
    };
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (const auto& g : gens) {
            auto x = compose_p(elems[k], g);
            if (!index.count(x)) {
                index[x] = static_cast<int>(elems.size());
                elems.push_back(x);
            }
        }
    }
    std::size_t n = elems.size();
    std::vector<int> table(n * n);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(cycle_name(elems[i]));
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index.at(compose_p(elems[i], elems[j]));
    }
    return std::make_shared<TableGroup>(std::move(nm), std::move(names), std::move(table));
}

std::shared_ptr<const TableGroup> symmetric_group(int n) {
    std::vector<int> t(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), 0);
    if (n > 1) std::swap(t[0], t[1]);
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
    return permutation_group({t, c}, "S" + std::to_string(n));
}

std::shared_ptr<const TableGroup> dihedral_group(int n) {
    std::vector<int> r(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        r[static_cast<std::size_t>(i)] = (i + 1) % n;
        s[static_cast<std::size_t>(i)] = (n - i) % n;
    }
    return permutation_group({r, s}, "D" + std::to_string(n));
}

std::shared_ptr<const TableGroup> tabulate(const GroupP& g, std::string nm) {
    if (!g->finite()) throw GroupError(g->name + ": cannot tabulate an infinite carrier");
    std::size_t n = g->order();
    auto elems = g->elements();
    std::size_t idx = g->index_of(g->id());
    // Put the identity first; remaining elements keep their relative order.
    std::vector<std::size_t> perm{idx}, pos(n);
    for (std::size_t i = 0; i < n; ++i)
        if (i != idx) perm.push_back(i);
    for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
    std::vector<std::string> names;
    std::vector<int> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(g->show(elems[perm[i]]));
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = static_cast<int>(pos[g->index_of(g->mul(elems[perm[i]], elems[perm[j]]))]);
    }
    return std::make_shared<TableGroup>(nm.empty() ? g->name : std::move(nm), std::move(names), std::move(table));
}

// ---------------------------------------------------------------- Subgroups

std::vector<Elem> closure(const GroupP& parent, const std::vector<Elem>& gens) {
    std::vector<Elem> out{parent->id()};
    std::unordered_set<Elem, ElemHash> seen{parent->id()};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const auto& g : gens) {
            Elem x = parent->mul(out[k], g);
            if (seen.insert(x).second) out.push_back(std::move(x));
        }
        if (out.size() > 10'000'000) throw GroupError(parent->name + ": closure too large");
    }
    return out;
}

std::shared_ptr<const SubsetGroup> subgroup_closure(const GroupP& parent, const std::vector<Elem>& gens,
                                                    std::string nm) {
    if (!parent->finite()) throw GroupError(parent->name + ": closure needs an enumerable parent");
    return std::make_shared<SubsetGroup>(parent, closure(parent, gens), nm.empty() ? "<" + parent->name + ">" : nm);
}

bool is_normal(const GroupP& parent, const std::vector<Elem>& sub) {
    std::unordered_set<Elem, ElemHash> s(sub.begin(), sub.end());
    for (const auto& g : parent->elements())
        for (const auto& n : sub)
            if (!s.count(parent->conj(g, n))) return false;
    return true;
}

std::shared_ptr<const QuotientGroup> quotient(const GroupP& parent, const std::vector<Elem>& normal,
                                              std::string nm) {
    if (!parent->finite()) throw GroupError(parent->name + ": quotient needs an enumerable parent");
    if (!is_normal(parent, normal)) throw GroupError(parent->name + ": subgroup is not normal");
    return std::make_shared<QuotientGroup>(parent, normal, nm.empty() ? parent->name + "/N" : nm);
}

std::vector<Elem> kernel(const Hom& h) {
    std::vector<Elem> out;
    Elem one = h.cod->id();
    for (const auto& x : h.dom->elements())
        if (h(x) == one) out.push_back(x);
    return out;
}

std::vector<Elem> image(const Hom& h) {
    std::vector<Elem> out;
    std::unordered_set<Elem, ElemHash> seen;
    for (const auto& x : h.dom->elements()) {
        Elem y = h(x);
        if (seen.insert(y).second) out.push_back(std::move(y));
    }
    return out;
}

bool is_subgroup(const GroupP& parent, const std::vector<Elem>& subset) {
    std::unordered_set<Elem, ElemHash> s(subset.begin(), subset.end());
    if (!s.count(parent->id())) return false;
    // Greedy generating set, then compare the generated subgroup with the subset.
    std::vector<Elem> gens;
    std::unordered_set<Elem, ElemHash> span{parent->id()};
    for (const auto& x : subset) {
        if (span.count(x)) continue;
        gens.push_back(x);
        auto c = closure(parent, gens);
        if (c.size() > subset.size()) return false;
        span = std::unordered_set<Elem, ElemHash>(c.begin(), c.end());
    }
    if (span.size() != s.size()) return false;
    for (const auto& x : span)
        if (!s.count(x)) return false;
    return true;
}

bool is_abelian(const GroupP& g) {
    auto el = g->elements();
    for (const auto& a : el)
        for (const auto& b : el)
            if (g->mul(a, b) != g->mul(b, a)) return false;
    return true;
}

std::size_t elem_order(const GroupP& g, const Elem& x) {
    Elem y = x;
    std::size_t k = 1;
    while (!g->is_id(y)) {
        y = g->mul(y, x);
        ++k;
        if (k > 1'000'000) throw GroupError("elem_order: no finite order found");
    }
    return k;
}

std::string describe(const GroupP& g) {
    if (!g->finite()) {
        if (std::dynamic_pointer_cast<const IntegerGroup>(g)) return "Z";
        return "infinite";
    }
    std::size_t n = g->order();
    if (n == 1) return "1";
    bool ab = is_abelian(g);
    if (ab) {
        for (const auto& x : g->elements())
            if (elem_order(g, x) == n) return "Z" + std::to_string(n);
        return "abelian of order " + std::to_string(n);
    }
    if (n == 6) return "S3";
    return "nonabelian of order " + std::to_string(n);
}

}  // namespace xm
