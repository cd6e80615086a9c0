#include "afs/ub_semantics.hpp"

#include "afs/propagation.hpp"

#include <algorithm>
#include <stdexcept>

using namespace std;

namespace afs {

namespace detail {

vector<Labelling> ub_apply(const Framework& fw, const BaseFunction& base) {
    if (fw.empty()) return {Labelling{}};
    SccDecomposition dec = scc_decomposition(fw);
    if (dec.components.size() == 1) return base(fw);

    vector<Labelling> partials{all_undec(fw)};
    for (const vector<int>& comp : dec.components) {
        vector<Labelling> next;
        for (const Labelling& partial : partials) {
            vector<int> blocked, rest;
            for (int a : comp) {
                bool attacked_from_in = false;
                for (int b : fw.attackers(a)) {
                    if (dec.component_of[b] != dec.component_of[a] &&
                        partial.at(b) == Label::in) {
                        attacked_from_in = true;
                        break;
                    }
                }
                (attacked_from_in ? blocked : rest).push_back(a);
            }
            Framework sub = fw.restrict_to(rest);
            vector<Labelling> sub_labellings =
                rest.empty() ? vector<Labelling>{Labelling{}} : ub_apply(sub, base);
            for (const Labelling& sl : sub_labellings) {
                Labelling merged = partial;
                for (int a : blocked) merged.labels[a] = Label::out;
                for (int i = 0; i < sub.size(); i++)
                    merged.labels[fw.index_of(sub.name(i))] = sl.at(i);
                next.push_back(move(merged));
            }
        }
        partials = move(next);
    }

    // Distinct branches can converge on the same labelling.
    vector<Labelling> unique_labellings;
    for (Labelling& l : partials) {
        bool seen = false;
        for (const Labelling& u : unique_labellings)
            if (u == l) { seen = true; break; }
        if (!seen) unique_labellings.push_back(move(l));
    }
    return unique_labellings;
}

}  // namespace detail

Labelling ub_grounded_labelling(const Framework& fw) {
    if (fw.empty())
        throw invalid_argument("ub-grounded labelling requires a non-empty framework");
    vector<Labelling> out = detail::ub_apply(
        fw, [](const Framework& f) { return vector<Labelling>{grounded_labelling(f)}; });
    if (out.size() != 1)
        throw logic_error("a single-status base must yield a single labelling");
    return out.front();
}

namespace {

// Pairs (a, b) with a credulously accepted and every weakly complete
// labelling accepting a deciding b. `component_internal` restricts the
// relation to pairs inside one strongly connected component.
vector<pair<int, int>> precedence_pairs(const Framework& fw, bool component_internal,
                                        const EnumerationLimits& limits) {
    LabellingSet wc = weakly_complete_labellings(fw, limits);
    int n = fw.size();
    vector<char> credulous(n, 0);
    for (const Labelling& l : wc.labellings)
        for (int a = 0; a < n; a++)
            if (l.at(a) == Label::in) credulous[a] = 1;

    SccDecomposition dec;
    if (component_internal) dec = scc_decomposition(fw);

    vector<pair<int, int>> pairs;
    for (int a = 0; a < n; a++) {
        if (!credulous[a]) continue;
        for (int b = 0; b < n; b++) {
            if (a == b) continue;
            if (component_internal && dec.component_of[a] != dec.component_of[b]) continue;
            bool always_decided = true;
            for (const Labelling& l : wc.labellings) {
                if (l.at(a) == Label::in && l.at(b) == Label::undec) {
                    always_decided = false;
                    break;
                }
            }
            if (always_decided) pairs.emplace_back(a, b);
        }
    }
    return pairs;
}

vector<pair<int, int>> strict_part(const vector<pair<int, int>>& pairs) {
    vector<pair<int, int>> strict;
    for (const auto& p : pairs) {
        bool reverse_present =
            find(pairs.begin(), pairs.end(), make_pair(p.second, p.first)) != pairs.end();
        if (!reverse_present) strict.push_back(p);
    }
    return strict;
}

}  // namespace

PrecedenceRelation semantic_precedence(const Framework& fw, const EnumerationLimits& limits) {
    PrecedenceRelation rel;
    rel.pairs = precedence_pairs(fw, true, limits);
    rel.strict = strict_part(rel.pairs);
    return rel;
}

vector<int> precedence_initial_set(const Framework& fw, InitialSetMode mode,
                                   const EnumerationLimits& limits) {
    bool component_internal = (mode == InitialSetMode::component_literal);
    vector<pair<int, int>> pairs = precedence_pairs(fw, component_internal, limits);
    vector<pair<int, int>> strict = strict_part(pairs);

    vector<char> preceded(fw.size(), 0);
    for (const auto& p : strict) preceded[p.second] = 1;

    vector<char> eligible(fw.size(), 1);
    if (mode == InitialSetMode::credulous_global) {
        LabellingSet wc = weakly_complete_labellings(fw, limits);
        fill(eligible.begin(), eligible.end(), 0);
        for (const Labelling& l : wc.labellings)
            for (int a = 0; a < fw.size(); a++)
                if (l.at(a) == Label::in) eligible[a] = 1;
    }

    vector<int> out;
    for (int a = 0; a < fw.size(); a++)
        if (eligible[a] && !preceded[a]) out.push_back(a);
    return out;
}

vector<Labelling> ub_preferred_labellings(const Framework& fw, const EnumerationLimits& limits,
                                          InitialSetMode mode) {
    if (fw.empty())
        throw invalid_argument("ub-preferred labellings require a non-empty framework");
    detail::BaseFunction base = [&limits, mode](const Framework& f) {
        LabellingSet wpr = weakly_preferred_labellings(f, limits);
        vector<int> initial = precedence_initial_set(f, mode, limits);
        vector<char> is_initial(f.size(), 0);
        for (int a : initial) is_initial[a] = 1;

        auto score = [&](const Labelling& l) {
            vector<char> s(f.size(), 0);
            for (int a = 0; a < f.size(); a++)
                if (is_initial[a] && l.at(a) == Label::in) s[a] = 1;
            return s;
        };
        auto strict_subset = [](const vector<char>& x, const vector<char>& y) {
            bool proper = false;
            for (size_t i = 0; i < x.size(); i++) {
                if (x[i] && !y[i]) return false;
                if (!x[i] && y[i]) proper = true;
            }
            return proper;
        };

        vector<vector<char>> scores;
        scores.reserve(wpr.labellings.size());
        for (const Labelling& l : wpr.labellings) scores.push_back(score(l));

        vector<Labelling> kept;
        for (size_t i = 0; i < wpr.labellings.size(); i++) {
            bool dominated = false;
            for (size_t j = 0; j < wpr.labellings.size() && !dominated; j++)
                if (i != j && strict_subset(scores[i], scores[j])) dominated = true;
            if (!dominated) kept.push_back(wpr.labellings[i]);
        }
        return kept;
    };
    return detail::ub_apply(fw, base);
}

}
