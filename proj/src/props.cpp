#include "hlpa/props.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace hlpa {

namespace {

std::map<int, int> multiplicities(const std::vector<int>& seq) {
    std::map<int, int> m;
    for (int v : seq) ++m[v];
    return m;
}

bool is_proper_multiset(const std::vector<int>& seq) {
    for (const auto& [v, c] : multiplicities(seq))
        if (c >= 2) return true;
    return false;
}

bool is_set(const std::vector<int>& seq) { return !is_proper_multiset(seq); }

}  // namespace

ConditionsProfile check_conditions(const Hypergraph& H) {
    ConditionsProfile p;
    p.lv = true;
    p.b = true;
    for (const auto& e : H.edges()) {
        size_t ns = e.source.size(), nr = e.range.size();
        bool big = ns >= 2 && nr >= 2;
        if (!big && p.lv) {
            p.lv = false;
            p.lv_counterexample = e.name;
        }
        if (big && !p.a) {
            p.a = true;
            p.a_witness = e.name;
        }
        if (!big && !(ns == 1 && nr == 1) && p.b) {
            p.b = false;
            p.b_counterexample = e.name;
        }
        if (big && !p.a_prime) {
            bool proper = is_proper_multiset(e.source) || is_proper_multiset(e.range);
            bool meet = false;
            if (!proper && is_set(e.source) && is_set(e.range)) {
                std::set<int> s(e.source.begin(), e.source.end());
                meet = std::any_of(e.range.begin(), e.range.end(),
                                   [&](int v) { return s.count(v) > 0; });
            }
            if (proper || meet) {
                p.a_prime = true;
                p.a_prime_witness = e.name;
            }
        }
    }
    return p;
}

bool is_connected(const Hypergraph& H) {
    int n = static_cast<int>(H.vertices().size());
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (const auto& e : H.edges())
        for (int v : e.range) root[find(v)] = find(e.source.front());
    for (const auto& e : H.edges())
        for (int v : e.source) root[find(v)] = find(e.source.front());
    int r0 = find(0);
    for (int v = 1; v < n; ++v)
        if (find(v) != r0) return false;
    return true;
}

long long local_valuation(const AlgebraElement& a) {
    long long best = kValuationZero;
    for (const auto& [w, c] : a.terms())
        best = std::max(best, static_cast<long long>(w.length()));
    return best;
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "Yes";
        case Verdict::No: return "No";
        default: return "Unknown";
    }
}

PropertyReport property_report(const Hypergraph& H) {
    ConditionsProfile c = check_conditions(H);
    bool connected = is_connected(H);
    bool has_edges = !H.edges().empty();
    bool single_vertex = H.vertices().size() == 1;

    PropertyReport r;
    for (const char* name :
         {"domain", "prime", "nonsingular", "semiprimitive", "vonNeumannRegular", "simple",
          "finiteDimensional", "leftArtinian", "rightArtinian", "leftNoetherian",
          "rightNoetherian"})
        r.properties[name] = PropertyVerdict{};

    auto set = [&](const std::string& name, Verdict v, const std::string& witness,
                   const std::string& citation) {
        r.properties[name] = PropertyVerdict{v, witness, citation};
    };

    // The domain criterion is an iff and therefore never Unknown.
    if (single_vertex && c.b) {
        set("domain", Verdict::Yes, "single vertex and every edge balanced",
            "domain iff |H0| = 1 and Condition (B)");
    } else {
        set("domain", Verdict::No,
            single_vertex ? "edge '" + c.b_counterexample + "' violates Condition (B)"
                          : "more than one vertex",
            "domain iff |H0| = 1 and Condition (B)");
    }

    if (c.lv) {
        set("nonsingular", Verdict::Yes, "Condition (LV) holds",
            "local valuation exists under (LV) => nonsingular");
        if (connected) {
            set("prime", Verdict::Yes, "Condition (LV) holds and H is connected",
                "(LV) + connected => prime");
            set("semiprimitive", Verdict::Yes, "Condition (LV) holds and H is connected",
                "(LV) + connected => semiprimitive");
        }
        if (has_edges)
            set("vonNeumannRegular", Verdict::No, "nontrivial local valuation via (LV)",
                "(LV) with an edge => not von Neumann regular");
    }
    if (c.a) {
        std::string w = "edge '" + c.a_witness + "' has |s|,|r| >= 2";
        set("finiteDimensional", Verdict::No, w, "Condition (A) => infinite dimensional");
        set("simple", Verdict::No, w, "Condition (A) => infinitely many ideals");
        set("leftArtinian", Verdict::No, w, "Condition (A) => not left Artinian");
        set("rightArtinian", Verdict::No, w, "Condition (A) => not right Artinian");
        set("vonNeumannRegular", Verdict::No, w, "Condition (A) => not von Neumann regular");
    }
    if (c.a_prime) {
        std::string w = "edge '" + c.a_prime_witness + "' witnesses Condition (A')";
        set("leftNoetherian", Verdict::No, w, "Condition (A') => not left Noetherian");
        set("rightNoetherian", Verdict::No, w, "Condition (A') => not right Noetherian");
    }
    return r;
}

}  // namespace hlpa
