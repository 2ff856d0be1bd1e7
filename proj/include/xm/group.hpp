#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace xm {

// Payload of a group element. Which fields are live depends on the carrier:
// table/cyclic/integer carriers use v, free carriers use w (letters are +(i+1)
// or -(i+1) for basis symbol i), composite carriers use t.
struct Elem {
    std::int64_t v = 0;
    std::vector<std::int32_t> w;
    std::vector<Elem> t;

    Elem() = default;
    explicit Elem(std::int64_t x) : v(x) {}
    static Elem word(std::vector<std::int32_t> letters) {
        Elem e;
        e.w = std::move(letters);
        return e;
    }
    static Elem tuple(std::vector<Elem> parts) {
        Elem e;
        e.t = std::move(parts);
        return e;
    }
    const Elem& operator[](std::size_t i) const { return t.at(i); }
};

bool operator==(const Elem& a, const Elem& b);
inline bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
bool operator<(const Elem& a, const Elem& b);

struct ElemHash {
    std::size_t operator()(const Elem& e) const;
};

inline Elem T2(Elem a, Elem b) { return Elem::tuple({std::move(a), std::move(b)}); }
// Nested tuple (a,(e,k)) used for triples in E⋉(E⋉L) and similar carriers.
inline Elem T3(Elem a, Elem b, Elem c) { return T2(std::move(a), T2(std::move(b), std::move(c))); }

class GroupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProbeCfg {
    int int_radius = 8;
    int word_depth = 3;
    int word_samples = 500;
    int word_maxlen = 8;
    std::uint64_t seed = 20240611;
    // Finite carriers larger than this are sampled instead of enumerated.
    std::size_t enum_limit = 5000;
    std::size_t big_samples = 300;
};

using Rng = std::mt19937_64;

class Group;
using GroupP = std::shared_ptr<const Group>;

class Group {
public:
    virtual ~Group() = default;

    virtual Elem mul(const Elem& a, const Elem& b) const = 0;
    virtual Elem inv(const Elem& a) const = 0;
    virtual Elem id() const = 0;
    virtual bool finite() const = 0;
    // Only meaningful when finite().
    virtual std::size_t order() const { throw GroupError(name + ": carrier is not enumerable"); }
    virtual Elem at(std::size_t) const { throw GroupError(name + ": carrier is not enumerable"); }
    virtual std::size_t index_of(const Elem&) const { throw GroupError(name + ": carrier is not enumerable"); }
    virtual bool contains(const Elem& e) const = 0;
    virtual std::string show(const Elem& e) const = 0;
    virtual std::string kind() const = 0;
    virtual Elem random(Rng& rng) const;
    // Quantification domain used whenever a law ranges over this carrier.
    virtual std::vector<Elem> probes(const ProbeCfg& cfg) const;

    std::vector<Elem> elements() const;
    Elem pow(const Elem& a, std::int64_t n) const;
    Elem conj(const Elem& a, const Elem& b) const { return mul(mul(a, b), inv(a)); }
    Elem comm(const Elem& a, const Elem& b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
    bool is_id(const Elem& a) const { return a == id(); }

    std::string name;
};

// Cayley-table carrier; elements are indices 0..n-1, index 0 is the identity.
class TableGroup : public Group {
public:
    TableGroup(std::string nm, std::vector<std::string> names, std::vector<int> table);
    Elem mul(const Elem& a, const Elem& b) const override;
    Elem inv(const Elem& a) const override { return Elem(inv_[static_cast<std::size_t>(a.v)]); }
    Elem id() const override { return Elem(0); }
    bool finite() const override { return true; }
    std::size_t order() const override { return n_; }
    Elem at(std::size_t i) const override { return Elem(static_cast<std::int64_t>(i)); }
    std::size_t index_of(const Elem& e) const override { return static_cast<std::size_t>(e.v); }
    bool contains(const Elem& e) const override;
    std::string show(const Elem& e) const override;
    std::string kind() const override { return "table"; }

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& table() const { return table_; }
    std::optional<std::size_t> find(const std::string& nm) const;

private:
    std::size_t n_;
    std::vector<std::string> names_;
    std::vector<int> table_;
    std::vector<int> inv_;
};

class CyclicGroup : public Group {
public:
    explicit CyclicGroup(std::int64_t n);
    Elem mul(const Elem& a, const Elem& b) const override { return Elem((a.v + b.v) % n_); }
    Elem inv(const Elem& a) const override { return Elem((n_ - a.v) % n_); }
    Elem id() const override { return Elem(0); }
    bool finite() const override { return true; }
    std::size_t order() const override { return static_cast<std::size_t>(n_); }
    Elem at(std::size_t i) const override { return Elem(static_cast<std::int64_t>(i)); }
    std::size_t index_of(const Elem& e) const override { return static_cast<std::size_t>(e.v); }
    bool contains(const Elem& e) const override { return e.t.empty() && e.w.empty() && e.v >= 0 && e.v < n_; }
    std::string show(const Elem& e) const override { return std::to_string(e.v); }
    std::string kind() const override { return "cyclic"; }
    std::int64_t modulus() const { return n_; }

private:
    std::int64_t n_;
};

class IntegerGroup : public Group {
public:
    IntegerGroup() { name = "Z"; }
    Elem mul(const Elem& a, const Elem& b) const override { return Elem(a.v + b.v); }
    Elem inv(const Elem& a) const override { return Elem(-a.v); }
    Elem id() const override { return Elem(0); }
    bool finite() const override { return false; }
    bool contains(const Elem& e) const override { return e.t.empty() && e.w.empty(); }
    std::string show(const Elem& e) const override { return std::to_string(e.v); }
    std::string kind() const override { return "integers"; }
    Elem random(Rng& rng) const override;
    std::vector<Elem> probes(const ProbeCfg& cfg) const override;
};

class FreeGroup : public Group {
public:
    explicit FreeGroup(std::vector<std::string> basis, std::string nm = "F");
    Elem mul(const Elem& a, const Elem& b) const override;
    Elem inv(const Elem& a) const override;
    Elem id() const override { return Elem{}; }
    bool finite() const override { return false; }
    bool contains(const Elem& e) const override;
    std::string show(const Elem& e) const override;
    std::string kind() const override { return "free"; }
    Elem random(Rng& rng) const override;
    std::vector<Elem> probes(const ProbeCfg& cfg) const override;

    std::size_t rank() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    Elem gen(std::size_t i) const { return Elem::word({static_cast<std::int32_t>(i + 1)}); }
    Elem random_word(Rng& rng, int maxlen) const;
    static std::vector<std::int32_t> reduce(const std::vector<std::int32_t>& w);

private:
    std::vector<std::string> basis_;
};

struct Hom;
struct Action;

struct Hom {
    // Optional exact description of maps between cyclic/integer carriers.
    struct Linear {
        enum Kind { None, Mul, Zero } kind = None;
        std::int64_t k = 0;
    };

    GroupP dom, cod;
    std::function<Elem(const Elem&)> f;
    Linear lin{};
    std::string label;

    Elem operator()(const Elem& x) const { return f(x); }
};

struct Action {
    GroupP actor, target;
    std::function<Elem(const Elem&, const Elem&)> f;
    std::string label;

    Elem operator()(const Elem& g, const Elem& x) const { return f(g, x); }
};

Hom identity_hom(const GroupP& g);
Hom trivial_hom(const GroupP& dom, const GroupP& cod);
Hom compose(const Hom& outer, const Hom& inner);
Hom linear_hom(const GroupP& dom, const GroupP& cod, std::int64_t k);
Hom table_hom(const GroupP& dom, const GroupP& cod, std::vector<Elem> images, std::string label = "");
// Unique extension of basis images along a free domain.
Hom hom_extend_free(const std::shared_ptr<const FreeGroup>& F, const GroupP& cod, std::vector<Elem> images,
                    std::string label = "");
Action trivial_action(const GroupP& actor, const GroupP& target);
Action conjugation_action(const GroupP& g);
Action action_via(const Action& a, const Hom& h);

// G ⋉ H with (g,e)(g',e') = (gg', (g'^{-1} ▷ e) e').
class Semidirect : public Group {
public:
    Semidirect(GroupP actor, GroupP target, Action act, std::string nm = "");
    Elem mul(const Elem& a, const Elem& b) const override;
    Elem inv(const Elem& a) const override;
    Elem id() const override { return T2(H_->id(), N_->id()); }
    bool finite() const override { return H_->finite() && N_->finite(); }
    std::size_t order() const override { return H_->order() * N_->order(); }
    Elem at(std::size_t i) const override;
    std::size_t index_of(const Elem& e) const override;
    bool contains(const Elem& e) const override;
    std::string show(const Elem& e) const override;
    std::string kind() const override { return "semidirect"; }
    Elem random(Rng& rng) const override;
    std::vector<Elem> probes(const ProbeCfg& cfg) const override;

    const GroupP& actor() const { return H_; }
    const GroupP& target() const { return N_; }
    const Action& action() const { return act_; }

private:
    GroupP H_, N_;
    Action act_;
};

// Direct product, the semidirect product with trivial action.
GroupP direct_product(const GroupP& a, const GroupP& b);

// Carrier given by an explicit finite list of elements of a parent.
class SubsetGroup : public Group {
public:
    SubsetGroup(GroupP parent, std::vector<Elem> elems, std::string nm);
    Elem mul(const Elem& a, const Elem& b) const override { return parent_->mul(a, b); }
    Elem inv(const Elem& a) const override { return parent_->inv(a); }
    Elem id() const override { return parent_->id(); }
    bool finite() const override { return true; }
    std::size_t order() const override { return elems_.size(); }
    Elem at(std::size_t i) const override { return elems_.at(i); }
    std::size_t index_of(const Elem& e) const override;
    bool contains(const Elem& e) const override { return index_.count(e) > 0; }
    std::string show(const Elem& e) const override { return parent_->show(e); }
    std::string kind() const override { return "subgroup"; }
    const GroupP& parent() const { return parent_; }

private:
    GroupP parent_;
    std::vector<Elem> elems_;
    std::unordered_map<Elem, std::size_t, ElemHash> index_;
};

// {(g,m) : φ(g) = ∂(m)} with componentwise multiplication.
class PullbackGroup : public Group {
public:
    using ProbeFn = std::function<std::vector<Elem>(const ProbeCfg&)>;
    PullbackGroup(Hom phi, Hom bd, std::string nm = "", ProbeFn probe_override = {});
    Elem mul(const Elem& a, const Elem& b) const override;
    Elem inv(const Elem& a) const override;
    Elem id() const override;
    bool finite() const override { return finite_; }
    std::size_t order() const override;
    Elem at(std::size_t i) const override;
    std::size_t index_of(const Elem& e) const override;
    bool contains(const Elem& e) const override;
    std::string show(const Elem& e) const override;
    std::string kind() const override { return "pullback"; }
    Elem random(Rng& rng) const override;
    std::vector<Elem> probes(const ProbeCfg& cfg) const override;

    const Hom& phi() const { return phi_; }
    const Hom& bd() const { return bd_; }

private:
    Hom phi_, bd_;
    bool finite_;
    std::vector<Elem> elems_;
    std::unordered_map<Elem, std::size_t, ElemHash> index_;
    ProbeFn probe_override_;
};

Hom pullback_proj_left(const std::shared_ptr<const PullbackGroup>& P);
Hom pullback_proj_right(const std::shared_ptr<const PullbackGroup>& P);

// G/N with canonical coset representatives (least parent index in each coset).
class QuotientGroup : public Group {
public:
    QuotientGroup(GroupP parent, const std::vector<Elem>& normal, std::string nm);
    Elem mul(const Elem& a, const Elem& b) const override { return canon(parent_->mul(a, b)); }
    Elem inv(const Elem& a) const override { return canon(parent_->inv(a)); }
    Elem id() const override { return canon(parent_->id()); }
    bool finite() const override { return true; }
    std::size_t order() const override { return reps_.size(); }
    Elem at(std::size_t i) const override { return reps_.at(i); }
    std::size_t index_of(const Elem& e) const override;
    bool contains(const Elem& e) const override;
    std::string show(const Elem& e) const override { return "[" + parent_->show(e) + "]"; }
    std::string kind() const override { return "quotient"; }
    Elem canon(const Elem& e) const;

private:
    GroupP parent_;
    std::vector<std::size_t> rep_of_;  // parent index -> index into reps_
    std::vector<Elem> reps_;
};

std::shared_ptr<const TableGroup> symmetric_group(int n);
std::shared_ptr<const TableGroup> dihedral_group(int n);
std::shared_ptr<const TableGroup> permutation_group(const std::vector<std::vector<int>>& gens, std::string nm);
std::shared_ptr<const TableGroup> tabulate(const GroupP& g, std::string nm = "");

std::vector<Elem> closure(const GroupP& parent, const std::vector<Elem>& gens);
std::shared_ptr<const SubsetGroup> subgroup_closure(const GroupP& parent, const std::vector<Elem>& gens,
                                                    std::string nm = "");
bool is_normal(const GroupP& parent, const std::vector<Elem>& sub);
std::shared_ptr<const QuotientGroup> quotient(const GroupP& parent, const std::vector<Elem>& normal,
                                              std::string nm = "");
std::vector<Elem> kernel(const Hom& h);
std::vector<Elem> image(const Hom& h);
// Whether a finite subset of a parent is closed under products and inverses.
bool is_subgroup(const GroupP& parent, const std::vector<Elem>& subset);

bool is_abelian(const GroupP& g);
std::size_t elem_order(const GroupP& g, const Elem& x);
// Short structural description: "1", "Z2", "Z", "S3", "order 6 nonabelian".
std::string describe(const GroupP& g);

}  // namespace xm
