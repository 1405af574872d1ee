#pragma once

#include <set>
#include <utility>
#include <vector>

#include "structctrl/basis.hpp"
#include "structctrl/pattern.hpp"

namespace structctrl {

/// Undirected simple graph on vertices {1, ..., n+1} with two disjoint edge
/// classes: solid edges between vertices <= n (rotation degrees of freedom)
/// and broken edges (k, n+1) (translation degrees of freedom). The classes
/// cannot collide: solid edges never touch vertex n+1, broken ones always do.
class PatternGraph {
public:
    explicit PatternGraph(int n);

    [[nodiscard]] int n() const noexcept { return n_; }

    /// Adds a solid edge {i, j}; endpoints in [1, n], order irrelevant.
    void add_solid(int i, int j);
    /// Adds the broken edge {k, n+1}.
    void add_broken(int k);

    [[nodiscard]] bool has_solid(int i, int j) const;
    [[nodiscard]] bool has_broken(int k) const { return broken_.count(k) != 0; }

    /// Solid edges as canonical (i, j) pairs with i < j.
    [[nodiscard]] const std::set<IndexPair>& solid() const noexcept { return solid_; }
    /// Endpoints k of broken edges (k, n+1).
    [[nodiscard]] const std::set<int>& broken() const noexcept { return broken_; }

    [[nodiscard]] std::size_t edge_count() const noexcept { return solid_.size() + broken_.size(); }

    friend bool operator==(const PatternGraph&, const PatternGraph&) = default;

private:
    int n_;
    std::set<IndexPair> solid_;
    std::set<int> broken_;
};

/// Solid edge per rotation entry, broken edge per translation entry.
[[nodiscard]] PatternGraph graph_of_pattern(const Pattern& p);

/// One transitive-closure step. For every 2-path (i,j),(j,k) in the input:
///   solid + solid  -> add solid (i,k)
///   solid + broken -> add broken (i, n+1)
///   broken + broken -> add nothing
/// New edges are derived from the input graph only (no cascading within the
/// step); existing edges are retained.
[[nodiscard]] PatternGraph closure_step(const PatternGraph& g);

/// The closure iteration with every intermediate graph recorded.
/// steps[0] is the input, steps[l] its l-th closure; converged_at indexes the
/// first fixpoint (closure_step(steps[converged_at]) == steps[converged_at]).
struct ClosureTrace {
    std::vector<PatternGraph> steps;
    int converged_at = 0;

    [[nodiscard]] const PatternGraph& final() const { return steps.back(); }
};

/// Iterates closure_step to its fixpoint. Convergence within n steps is an
/// invariant; violating it throws std::logic_error.
[[nodiscard]] ClosureTrace transitive_closure(const PatternGraph& g);

/// True iff the graph is the complete graph on n+1 vertices, i.e. the solid
/// edges form K_n on {1..n} and all n broken edges are present.
[[nodiscard]] bool is_complete(const PatternGraph& g);

/// Connectivity of the solid subgraph on {1..n}; the single vertex (n = 1)
/// counts as connected.
[[nodiscard]] bool solid_connected(const PatternGraph& g);

/// Connectivity of the whole graph on {1..n+1}.
[[nodiscard]] bool full_connected(const PatternGraph& g);

enum class Method { closure, connectivity };

/// Structural controllability decision. `closure` tests completeness of the
/// transitive closure; `connectivity` tests connectedness of the solid
/// subgraph on {1..n} together with connectedness of the full graph. The two
/// always agree.
[[nodiscard]] bool is_structurally_controllable(const Pattern& p, Method method);

/// Structural accessibility of the system with drift; the criterion
/// coincides with the controllability one.
[[nodiscard]] bool is_structurally_accessible(const Pattern& p);

/// Rotation(i,j) -> solid edge (i,j); Translation(k) -> broken edge (k, n+1).
[[nodiscard]] PatternGraph graph_of_subspace(const CanonicalSubspace& d);

/// Inverse of graph_of_subspace; the two maps are mutually inverse.
[[nodiscard]] CanonicalSubspace subspace_of_graph(const PatternGraph& g);

}  // namespace structctrl
