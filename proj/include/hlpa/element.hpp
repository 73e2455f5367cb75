#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hlpa/errors.hpp"
#include "hlpa/hypergraph.hpp"
#include "hlpa/scalar.hpp"

namespace hlpa {

/// A d-path: a single vertex (length 0) or a nonempty letter sequence whose
/// consecutive letters satisfy range_vertex(x_k) == source_vertex(x_{k+1}).
struct Word {
    int vertex = -1;
    std::vector<Letter> letters;

    bool is_vertex() const { return letters.empty(); }
    size_t length() const { return letters.size(); }

    auto operator<=>(const Word&) const = default;
};

std::vector<std::string> word_tokens(const Hypergraph& H, const Word& w);
std::string word_str(const Hypergraph& H, const Word& w);

/// Canonical output order: by length, then lexicographically on tokens.
bool canonical_word_less(const Hypergraph& H, const Word& a, const Word& b);

/// Token of an unnormalized word: a vertex or a letter.
struct RawTok {
    int vertex = -1;
    Letter letter;

    bool is_vertex() const { return vertex >= 0; }

    static RawTok of_vertex(int v) { return RawTok{v, {}}; }
    static RawTok of_letter(Letter l) { return RawTok{-1, l}; }
};
using RawWord = std::vector<RawTok>;

RawWord raw_of(const Word& w);

enum class Strategy { Leftmost, Rightmost };

/// An element of L_K(H) in nod-path normal form: a finite mapping from
/// nod-paths to nonzero scalars. This representation is canonical; equal
/// elements compare equal term-by-term.
class AlgebraElement {
public:
    AlgebraElement(std::shared_ptr<const Hypergraph> H, Field field)
        : H_(std::move(H)), field_(field) {}

    static AlgebraElement vertex(std::shared_ptr<const Hypergraph> H, Field f, int v);
    static AlgebraElement generator(std::shared_ptr<const Hypergraph> H, Field f, Letter l);
    /// Sum of all vertices: the multiplicative identity of a finite H.
    static AlgebraElement unit(std::shared_ptr<const Hypergraph> H, Field f);

    const std::shared_ptr<const Hypergraph>& graph() const { return H_; }
    const Field& field() const { return field_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const AlgebraElement& o) const {
        return *H_ == *o.H_ && field_ == o.field_ && terms_ == o.terms_;
    }

    std::string str() const;

private:
    friend AlgebraElement normal_form(std::shared_ptr<const Hypergraph>, Field,
                                      const std::vector<std::pair<RawWord, Scalar>>&,
                                      Strategy, Budget*);
    friend AlgebraElement combine(const Scalar&, const AlgebraElement&, const Scalar&,
                                  const AlgebraElement&);

    std::shared_ptr<const Hypergraph> H_;
    Field field_;
    std::map<Word, Scalar> terms_;
};

/// Reduces an arbitrary raw linear combination to its unique normal form
/// (fixed point of the reduction rules). The strategy selects which redex is
/// contracted first; by confluence the result does not depend on it.
AlgebraElement normal_form(std::shared_ptr<const Hypergraph> H, Field field,
                           const std::vector<std::pair<RawWord, Scalar>>& raw,
                           Strategy strategy = Strategy::Leftmost,
                           Budget* budget = nullptr);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        Budget* budget = nullptr);
AlgebraElement combine(const Scalar& c1, const AlgebraElement& a, const Scalar& c2,
                       const AlgebraElement& b);
AlgebraElement scale(const Scalar& c, const AlgebraElement& a);
AlgebraElement involute(const AlgebraElement& a, Budget* budget = nullptr);

/// Image of a under the algebra map induced by a hypergraph homomorphism.
AlgebraElement apply_homomorphism(const HypergraphHom& phi, const AlgebraElement& a,
                                  std::shared_ptr<const Hypergraph> target,
                                  Budget* budget = nullptr);

/// Sum of all endpoint vertices of words in S; u*x*u == x for all x in S.
AlgebraElement local_unit_for(const std::vector<AlgebraElement>& S);

AlgebraElement parse_expression(const std::string& text,
                                std::shared_ptr<const Hypergraph> H, Field field,
                                Budget* budget = nullptr);

}  // namespace hlpa
