#pragma once

#include <functional>
#include <gmpxx.h>
#include <vector>

#include "hlpa/element.hpp"
#include "hlpa/hypergraph.hpp"

namespace hlpa {

/// Nod-path counts: perLength[n] = number of nod-paths of length exactly n,
/// cumulative[n] = dim of the span of products of <= n generators.
struct GrowthTable {
    std::vector<mpz_class> per_length;
    std::vector<mpz_class> cumulative;
};

bool is_nod_path(const Word& w, const LetterGraph& G);

/// Emits all nod-paths of length <= max_len, grouped by length, each group
/// in canonical serialization order. The visitor receives (length, word).
void enumerate_nod_paths(const LetterGraph& G, int max_len,
                         const std::function<void(int, const Word&)>& visit);

/// Convenience form collecting the stream.
std::vector<std::vector<Word>> nod_paths_by_length(const LetterGraph& G, int max_len);

/// Counts nod-paths per length by dynamic programming over the letter graph
/// (no enumeration; safe for exponential hypergraphs).
GrowthTable growth_table(const LetterGraph& G, int max_len);

}  // namespace hlpa
