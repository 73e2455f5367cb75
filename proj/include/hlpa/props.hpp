#pragma once

#include <map>
#include <optional>
#include <string>

#include "hlpa/element.hpp"
#include "hlpa/hypergraph.hpp"

namespace hlpa {

/// Hyperedge-size conditions governing the ring-theoretic properties.
struct ConditionsProfile {
    bool lv = false;      // every edge has |s|, |r| >= 2
    bool a = false;       // some edge has |s|, |r| >= 2
    bool a_prime = false; // such an edge with a proper multiset or meeting sets
    bool b = false;       // every edge has |s|, |r| >= 2 or |s| = |r| = 1
    std::string lv_counterexample;  // edge violating (LV), when !lv
    std::string a_witness;          // edge witnessing (A), when a
    std::string a_prime_witness;    // edge witnessing (A'), when a_prime
    std::string b_counterexample;   // edge violating (B), when !b
};

enum class Verdict { Yes, No, Unknown };

struct PropertyVerdict {
    Verdict verdict = Verdict::Unknown;
    std::string witness;   // machine-checkable fact backing the verdict
    std::string citation;  // criterion the verdict is derived from
};

/// Three-valued report; verdicts are derived only from the cited criteria
/// and stay Unknown where no criterion applies.
struct PropertyReport {
    // Keys: domain, prime, nonsingular, semiprimitive, vonNeumannRegular,
    // simple, finiteDimensional, leftArtinian, rightArtinian, leftNoetherian,
    // rightNoetherian.
    std::map<std::string, PropertyVerdict> properties;
};

ConditionsProfile check_conditions(const Hypergraph& H);

/// Weak connectivity through d-paths (star letters included).
bool is_connected(const Hypergraph& H);

constexpr long long kValuationZero = -1;  // encodes -infinity

/// nu(a) = max word length in the normal form; -1 encodes -infinity (a = 0).
long long local_valuation(const AlgebraElement& a);

PropertyReport property_report(const Hypergraph& H);

std::string verdict_str(Verdict v);

}  // namespace hlpa
