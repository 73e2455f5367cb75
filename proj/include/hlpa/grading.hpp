#pragma once

#include <map>
#include <vector>

#include "hlpa/element.hpp"
#include "hlpa/hypergraph.hpp"

namespace hlpa {

/// An element of Z^d, written additively.
using Degree = std::vector<long long>;

Degree degree_zero(int rank);
Degree degree_add(const Degree& a, const Degree& b);
Degree degree_sub(const Degree& a, const Degree& b);
Degree degree_neg(const Degree& a);
std::string degree_str(const Degree& g);

/// An admissible Z^d weight map: an assignment of degrees to the direct
/// letters h_{ij} satisfying
///   assign(h_{ij}) = assign(h_{i1}) - assign(h_{11}) + assign(h_{1j}).
/// Stars carry the negated degree; vertices degree 0.
class WeightMap {
public:
    WeightMap(const Hypergraph& H, int rank,
              std::map<std::tuple<int, int, int>, Degree> assign);

    int rank() const { return rank_; }
    const Degree& assign(int edge, int i, int j) const;
    Degree letter_degree(const Letter& l) const;
    Degree word_degree(const Word& w) const;

private:
    int rank_;
    std::map<std::tuple<int, int, int>, Degree> assign_;  // (edge, i, j) -> degree
};

/// Standard grading: rank = max |s(h)|, assign(h_{ij}) = alpha_i.
WeightMap standard_weight(const Hypergraph& H);

/// Double grading: rank = max |s(h)| + max |r(h)|, assign(h_{ij}) = alpha_i (+) alpha_j.
WeightMap double_weight(const Hypergraph& H);

/// Weight file: one line per direct letter "EDGE i j : d integers".
WeightMap parse_weight_map(const Hypergraph& H, const std::string& text);

/// Splits a into its homogeneous components; the components sum to a.
std::map<Degree, AlgebraElement> homogeneous_components(const AlgebraElement& a,
                                                        const WeightMap& w);

/// Homogeneous component of a at a single degree (zero element if absent).
AlgebraElement homogeneous_component(const AlgebraElement& a, const WeightMap& w,
                                     const Degree& g);

}  // namespace hlpa
