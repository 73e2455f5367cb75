#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hlpa/element.hpp"
#include "hlpa/grading.hpp"
#include "hlpa/hypergraph.hpp"

namespace hlpa {

/// A finitely presented commutative monoid: named generators and relations
/// lhs = rhs given as multiplicity vectors. Both sides of every relation
/// have positive total (the conical presentations of this theory).
struct MonoidPresentation {
    struct Relation {
        std::vector<long long> lhs;
        std::vector<long long> rhs;

        bool operator==(const Relation&) const = default;
    };
    std::vector<std::string> generators;
    std::vector<Relation> relations;

    bool operator==(const MonoidPresentation&) const = default;
};

/// Invariants of the group completion: Z^freeRank (+) Z/t1 (+) ... (Smith
/// normal form of the relation lattice).
struct GroupInvariant {
    int free_rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1

    bool operator==(const GroupInvariant&) const = default;
};

/// Finite truncation of the grading group Z^d: all degrees with coordinates
/// in [-B, B].
struct DegreeWindow {
    int rank = 0;
    long long bound = 0;
};

/// Degrees of a window in lexicographic order.
std::vector<Degree> window_degrees(const DegreeWindow& window);
bool window_contains(const DegreeWindow& window, const Degree& g);

/// Name of a degree-indexed copy of a vertex/edge, e.g. v_g_m1_0 for v at
/// degree (-1,0). Stays within the identifier grammar.
std::string graded_name(const std::string& base, const Degree& g);

MonoidPresentation v_monoid_presentation(const Hypergraph& H);

/// Inverse construction: one hyperedge per relation; round-trips with
/// v_monoid_presentation up to hyperedge naming.
Hypergraph monoid_to_hypergraph(const MonoidPresentation& P);

struct MonoidTraceStep {
    int relation = 0;
    bool forward = true;  // forward: x + lhs -> x + rhs
};

struct MonoidEquality {
    enum class Kind { Equal, Unknown } kind = Kind::Unknown;
    std::vector<MonoidTraceStep> trace;  // Equal: rewrite steps from a to b
};

/// Bounded search for congruence of two vectors; sound but not complete
/// (Unknown when the search exhausts the coordinate bound).
MonoidEquality monoid_equal_bounded(const MonoidPresentation& P,
                                    const std::vector<long long>& a,
                                    const std::vector<long long>& b, long long bound);

/// Replays a trace starting from a; used to validate Equal certificates.
std::vector<long long> replay_trace(const MonoidPresentation& P,
                                    const std::vector<long long>& a,
                                    const std::vector<MonoidTraceStep>& trace);

GroupInvariant group_completion(const MonoidPresentation& P);

/// Graded V-monoid presentation truncated to the window: generators v_g and
/// the relations of each (edge, g) whose shifted indices stay inside.
MonoidPresentation graded_monoid_presentation(const Hypergraph& H, const WeightMap& w,
                                              const DegreeWindow& window);

/// Window fragment of the covering hypergraph together with the origin of
/// each covering vertex/edge.
struct CoverModel {
    std::shared_ptr<const Hypergraph> cover;
    std::vector<std::pair<int, Degree>> vertex_origin;  // cover vertex -> (v, g)
    std::vector<std::pair<int, Degree>> edge_origin;    // cover edge -> (h, g)
};

CoverModel covering_model(const Hypergraph& H, const WeightMap& w,
                          const DegreeWindow& window);
Hypergraph covering_hypergraph(const Hypergraph& H, const WeightMap& w,
                               const DegreeWindow& window);

/// Element of the smash product L_K(H) # Z^d: finitely many components
/// r^(g) p_g with r^(g) in L_K(H).
class SmashElement {
public:
    SmashElement(std::shared_ptr<const Hypergraph> H, Field f)
        : H_(std::move(H)), field_(f) {}
    static SmashElement monomial(const AlgebraElement& r, const Degree& g);

    const std::map<Degree, AlgebraElement>& components() const { return comps_; }
    const std::shared_ptr<const Hypergraph>& graph() const { return H_; }
    const Field& field() const { return field_; }
    bool is_zero() const { return comps_.empty(); }

    void add(const Degree& g, const AlgebraElement& r);
    bool operator==(const SmashElement& o) const {
        return comps_ == o.comps_;
    }
    std::string str() const;

private:
    std::shared_ptr<const Hypergraph> H_;
    Field field_;
    std::map<Degree, AlgebraElement> comps_;
};

SmashElement smash_add(const SmashElement& x, const SmashElement& y);
SmashElement smash_multiply(const SmashElement& x, const SmashElement& y,
                            const WeightMap& w, Budget* budget = nullptr);

struct CoverReport {
    std::vector<std::string> violations;
    int checks = 0;

    bool ok() const { return violations.empty(); }
};

/// Checks that the generator images of the covering-hypergraph relations are
/// identities in the smash product, plus random multiplicativity trials.
CoverReport verify_cover_isomorphism(std::shared_ptr<const Hypergraph> H,
                                     const WeightMap& w, const DegreeWindow& window,
                                     int trials, Field field = {},
                                     unsigned seed = 20240817,
                                     Budget* budget = nullptr);

}  // namespace hlpa
