#include "afs/enumeration.hpp"

#include "afs/errors.hpp"
#include "afs/propagation.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

using namespace std;

namespace afs {

set<vector<string>> in_set_family(const Framework& fw, const vector<Labelling>& ls) {
    set<vector<string>> fam;
    for (const Labelling& l : ls) fam.insert(in_names(fw, l));
    return fam;
}

namespace {

string inset_key(const Labelling& l) {
    string key(l.size(), '0');
    for (int a = 0; a < l.size(); a++)
        if (l.at(a) == Label::in) key[a] = '1';
    return key;
}

struct Enumerator {
    const Framework& fw;
    LabellingSet result;
    unordered_map<string, int> index_by_inset;
    unordered_set<string> expanded;
    chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;

    explicit Enumerator(const Framework& f, double budget_seconds) : fw(f) {
        if (budget_seconds > 0.0) {
            has_deadline = true;
            deadline = chrono::steady_clock::now() +
                       chrono::duration_cast<chrono::steady_clock::duration>(
                           chrono::duration<double>(budget_seconds));
        }
    }

    void record(const Labelling& l, const vector<int>& grounds) {
        result.discoveries++;
        string key = inset_key(l);
        auto it = index_by_inset.find(key);
        if (it == index_by_inset.end()) {
            index_by_inset.emplace(move(key), result.size());
            result.labellings.push_back(l);
            result.ground_sequences.push_back({grounds});
        } else {
            result.ground_sequences[it->second].push_back(grounds);
        }
    }

    // Tries every currently undecided argument as the next ground. A branch
    // whose labelling was already expanded is cut: by the in-set identity
    // its subtree cannot produce anything new.
    void expand(const Labelling& l, vector<int>& path) {
        if (has_deadline && chrono::steady_clock::now() > deadline)
            throw resource_limit_error("enumeration exceeded its wall-clock budget");
        if (!expanded.insert(inset_key(l)).second) return;
        for (int g = 0; g < fw.size(); g++) {
            if (l.at(g) != Label::undec) continue;
            PropagationOutcome out = in_out_fw(fw, {g}, l);
            if (!out.ok()) continue;
            path.push_back(g);
            record(out.labelling, path);
            expand(out.labelling, path);
            path.pop_back();
        }
    }
};

}  // namespace

LabellingSet weakly_complete_labellings(const Framework& fw, const EnumerationLimits& limits) {
    if (fw.empty())
        throw invalid_argument("enumeration requires a non-empty framework");
    if (fw.size() > limits.max_arguments)
        throw resource_limit_error("enumeration refused: " + to_string(fw.size()) +
                                   " arguments exceed the limit of " +
                                   to_string(limits.max_arguments));
    Enumerator e(fw, limits.time_budget_seconds);
    Labelling grounded = grounded_labelling(fw);
    e.record(grounded, {});
    vector<int> path;
    e.expand(grounded, path);
    return move(e.result);
}

static LabellingSet filter_set(LabellingSet src, const vector<char>& keep) {
    LabellingSet out;
    for (int i = 0; i < src.size(); i++) {
        if (!keep[i]) continue;
        out.labellings.push_back(move(src.labellings[i]));
        out.ground_sequences.push_back(move(src.ground_sequences[i]));
        out.discoveries++;
    }
    return out;
}

static bool subset_of(const vector<Label>& a, const vector<Label>& b) {
    for (size_t i = 0; i < a.size(); i++)
        if (a[i] == Label::in && b[i] != Label::in) return false;
    return true;
}

LabellingSet weakly_preferred_labellings(const Framework& fw, const EnumerationLimits& limits) {
    LabellingSet wc = weakly_complete_labellings(fw, limits);
    vector<char> keep(wc.size(), 1);
    for (int i = 0; i < wc.size(); i++)
        for (int j = 0; j < wc.size() && keep[i]; j++)
            if (i != j && subset_of(wc.labellings[i].labels, wc.labellings[j].labels))
                keep[i] = 0;
    return filter_set(move(wc), keep);
}

Labelling weakly_grounded_labelling(const Framework& fw) {
    return grounded_labelling(fw);
}

LabellingSet weakly_stable_labellings(const Framework& fw, const EnumerationLimits& limits) {
    LabellingSet wc = weakly_complete_labellings(fw, limits);
    vector<char> keep(wc.size(), 1);
    for (int i = 0; i < wc.size(); i++)
        keep[i] = undec_set(wc.labellings[i]).empty();
    return filter_set(move(wc), keep);
}

static bool admissible_in_set(const Framework& fw, const Labelling& l) {
    for (int a = 0; a < fw.size(); a++) {
        if (l.at(a) != Label::in) continue;
        for (int b : fw.attackers(a))
            if (l.at(b) != Label::out) return false;
    }
    return true;
}

LabellingSet dung_complete_labellings(const Framework& fw, const EnumerationLimits& limits) {
    LabellingSet wc = weakly_complete_labellings(fw, limits);
    vector<char> keep(wc.size(), 1);
    for (int i = 0; i < wc.size(); i++)
        keep[i] = admissible_in_set(fw, wc.labellings[i]);
    return filter_set(move(wc), keep);
}

LabellingSet dung_preferred_labellings(const Framework& fw, const EnumerationLimits& limits) {
    LabellingSet co = dung_complete_labellings(fw, limits);
    vector<char> keep(co.size(), 1);
    for (int i = 0; i < co.size(); i++)
        for (int j = 0; j < co.size() && keep[i]; j++)
            if (i != j && subset_of(co.labellings[i].labels, co.labellings[j].labels))
                keep[i] = 0;
    return filter_set(move(co), keep);
}

LabellingSet dung_stable_labellings(const Framework& fw, const EnumerationLimits& limits) {
    LabellingSet co = dung_complete_labellings(fw, limits);
    vector<char> keep(co.size(), 1);
    for (int i = 0; i < co.size(); i++)
        keep[i] = undec_set(co.labellings[i]).empty();
    return filter_set(move(co), keep);
}

bool credulous_wc(const Framework& fw, int arg) {
    if (arg < 0 || arg >= fw.size())
        throw invalid_argument("unknown argument index");
    Labelling grounded = grounded_labelling(fw);
    if (grounded.at(arg) == Label::in) return true;
    if (grounded.at(arg) == Label::out) return false;
    return in_out_fw(fw, {arg}, grounded).ok();
}

bool credulous_wc(const Framework& fw, const string& arg) {
    return credulous_wc(fw, fw.index_of(arg));
}

bool skeptical_wc(const Framework& fw, int arg, const EnumerationLimits& limits) {
    if (arg < 0 || arg >= fw.size())
        throw invalid_argument("unknown argument index");
    for (const Labelling& l : weakly_complete_labellings(fw, limits).labellings)
        if (l.at(arg) != Label::in) return false;
    return true;
}

bool skeptical_wc(const Framework& fw, const string& arg, const EnumerationLimits& limits) {
    return skeptical_wc(fw, fw.index_of(arg), limits);
}

}
