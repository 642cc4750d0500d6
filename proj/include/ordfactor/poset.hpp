#pragma once

#include "ordfactor/common.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordfactor {

class Poset {
public:
    Poset() = default;
    // rows[a][b] set iff a <= b; throws InputError unless the relation is a partial order
    Poset(const std::vector<Bits>& rows, std::vector<std::string> labels);

    static Poset from_relation(std::size_t n, const std::function<bool(Id, Id)>& leq,
                               std::vector<std::string> labels);
    // reflexive-transitive closure of the given strict pairs (lo, hi)
    static Poset from_pairs(std::size_t n, const std::vector<std::pair<Id, Id>>& pairs,
                            std::vector<std::string> labels);
    // inclusion order on a family of sets
    static Poset from_sets(const std::vector<Bits>& sets, std::vector<std::string> labels);

    std::size_t size() const { return n_; }
    bool leq(Id a, Id b) const { return up_[a][b]; }
    bool lt(Id a, Id b) const { return a != b && up_[a][b]; }
    bool comparable(Id a, Id b) const { return up_[a][b] || up_[b][a]; }
    const Bits& up(Id a) const { return up_[a]; }
    const Bits& down(Id a) const { return down_[a]; }

    Bits none() const { return Bits(n_); }
    Bits all() const { return Bits(n_).set(); }
    Bits single(Id a) const;

    Bits down_set(const Bits& A) const;
    Bits up_set(const Bits& A) const;
    bool is_lower_set(const Bits& A) const;
    bool is_upper_set(const Bits& A) const;

    std::optional<Id> join(const Bits& A) const;
    std::optional<Id> meet(const Bits& A) const;
    std::optional<Id> join2(Id a, Id b) const;
    std::optional<Id> meet2(Id a, Id b) const;
    std::optional<Id> bottom() const { return bottom_; }
    std::optional<Id> top() const { return top_; }

    // least / greatest element of a subset, if it has one
    std::optional<Id> least_of(const Bits& S) const;
    std::optional<Id> greatest_of(const Bits& S) const;
    Bits minimal_of(const Bits& S) const;
    Bits maximal_of(const Bits& S) const;
    bool is_antichain(const Bits& S) const;

    std::vector<Id> lower_covers(Id a) const;
    std::vector<Id> upper_covers(Id a) const;

    const std::string& label(Id a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Id> find(const std::string& label) const;
    Id at(const std::string& label) const; // throws InputError
    std::string format(const Bits& S) const;

    Poset dual() const;
    // induced suborder; map[i] is the ambient id of new element i
    Poset induced(const Bits& S, std::vector<Id>* map = nullptr) const;

    void check_index(Id a) const;
    void check_subset(const Bits& A) const;

private:
    void build();

    std::size_t n_ = 0;
    std::vector<Bits> up_, down_;
    std::vector<std::string> labels_;
    std::map<std::string, Id> index_;
    std::optional<Id> bottom_, top_;
};

using PosetPtr = std::shared_ptr<const Poset>;

enum class Side { Join, Meet };
enum class Strength { Plain, Strong };
enum class Arity { Finite, Complete };

bool irreducible(const Poset& p, Id a, Side side, Strength strength, Arity arity);

struct LatticeClass {
    bool join_semilattice = false;
    bool meet_semilattice = false;
    bool lattice = false;
    bool complete = false;
    bool distributive = false;
    Verdict completely_distributive = Verdict::NotEvaluated;
    std::string witness; // first failing witness, if any
};

LatticeClass lattice_class(const Poset& p, std::size_t cd_cap = 12);

// dense table of binary joins/meets; npos where absent
struct OpTables {
    std::size_t n = 0;
    std::vector<Id> join, meet;
    Id j(Id a, Id b) const { return join[a * n + b]; }
    Id m(Id a, Id b) const { return meet[a * n + b]; }
};
OpTables op_tables(const Poset& p);

// every antichain, fed to the callback; stops early when it returns false
void for_each_antichain(const Poset& p, const std::function<bool(const Bits&)>& f);

enum class EnumStatus { Complete, Stopped, Truncated };
// antichains inside `within` of size <= max_size; Truncated when a larger antichain exists
// or more than budget antichains were visited
EnumStatus antichains_within(const Poset& p, const Bits& within, std::size_t max_size, std::size_t budget,
                             const std::function<bool(const Bits&)>& f);

// brute-force search; throws CapExceeded when either size exceeds cap
std::optional<std::vector<Id>> order_isomorphism(const Poset& p, const Poset& q, std::size_t cap = 10);
// checks that the given bijection is an order isomorphism
bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<Id>& f);

} // namespace ordfactor
