#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hlpa/basis.hpp"
#include "hlpa/element.hpp"
#include "hlpa/errors.hpp"
#include "hlpa/hypergraph.hpp"

namespace hlpa {

/// A quasi-cycle: a nod-path p with p^2 a nod-path such that no subword of
/// p^2 of length < |p| has that property. Letters are pairwise distinct.
struct QuasiCycle {
    Word word;         // letters only, length >= 1
    int class_id = 0;  // shift-equivalence class

    bool operator==(const QuasiCycle&) const = default;
};

struct GkResult {
    enum class Kind { Finite, Exponential } kind = Kind::Finite;
    int dimension = 0;                   // Finite: chain length
    std::vector<QuasiCycle> chain;       // Finite: witness chain
    std::optional<std::pair<QuasiCycle, Word>> witness;  // Exponential
};

/// All quasi-cycles, in canonical order, with shift classes identified.
std::vector<QuasiCycle> enumerate_quasi_cycles(const LetterGraph& G);

/// Shortest connector o (|o| >= 1, p not a prefix of o, poq a nod-path),
/// found by reachability in the product of the letter graph with a
/// prefix-match counter; std::nullopt when no connector exists.
std::optional<Word> connects_nod(const Word& p, const Word& q, const LetterGraph& G,
                                 Budget* budget = nullptr);

/// p ==> q: pq is a nod-path or a connector exists.
bool connects(const Word& p, const Word& q, const LetterGraph& G,
              Budget* budget = nullptr);

/// First selfconnected quasi-cycle in canonical order with its connector.
std::optional<std::pair<QuasiCycle, Word>> selfconnected_witness(
    const LetterGraph& G, Budget* budget = nullptr);

/// Longest chain of pairwise non-shift-equivalent quasi-cycles consecutively
/// related by ==>. Precondition: no selfconnected quasi-cycle.
std::pair<int, std::vector<QuasiCycle>> max_chain(const LetterGraph& G,
                                                  Budget* budget = nullptr);

GkResult gk_dimension(const LetterGraph& G, Budget* budget = nullptr);

}  // namespace hlpa
