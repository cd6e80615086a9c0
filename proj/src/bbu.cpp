#include "afs/bbu.hpp"

#include "afs/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

using namespace std;

namespace afs {

set<vector<string>> extension_name_family(const Framework& fw, const ExtensionSet& es) {
    set<vector<string>> fam;
    for (const vector<int>& ext : es.extensions) {
        vector<string> names;
        names.reserve(ext.size());
        for (int a : ext) names.push_back(fw.name(a));
        sort(names.begin(), names.end());
        fam.insert(move(names));
    }
    return fam;
}

Framework reduct(const Framework& fw, const vector<int>& extension) {
    vector<char> removed(fw.size(), 0);
    for (int a : extension) {
        if (a < 0 || a >= fw.size())
            throw invalid_argument("unknown argument index in extension");
        removed[a] = 1;
    }
    for (int a : extension)
        for (int t : fw.targets(a)) removed[t] = 1;
    vector<int> keep;
    for (int a = 0; a < fw.size(); a++)
        if (!removed[a]) keep.push_back(a);
    return fw.restrict_to(move(keep));
}

Framework reduct_names(const Framework& fw, const vector<string>& extension) {
    vector<int> idx;
    idx.reserve(extension.size());
    for (const string& n : extension) idx.push_back(fw.index_of(n));
    return reduct(fw, idx);
}

namespace {

using Mask = uint64_t;

// All set-based computations run over the original framework with a
// present-arguments mask standing in for each reduct, so the memo table is
// shared across the whole recursion.
class WadmEngine {
public:
    WadmEngine(const Framework& fw, double budget_seconds) : fw_(fw), n_(fw.size()) {
        if (budget_seconds > 0.0) {
            has_deadline_ = true;
            deadline_ = chrono::steady_clock::now() +
                        chrono::duration_cast<chrono::steady_clock::duration>(
                            chrono::duration<double>(budget_seconds));
        }
        attacker_mask_.assign(n_, 0);
        target_mask_.assign(n_, 0);
        for (int a = 0; a < n_; a++) {
            for (int b : fw.attackers(a)) attacker_mask_[a] |= Mask(1) << b;
            for (int t : fw.targets(a)) target_mask_[a] |= Mask(1) << t;
        }
    }

    Mask full_mask() const { return n_ == 64 ? ~Mask(0) : (Mask(1) << n_) - 1; }

    Mask targets_of(Mask e) const {
        Mask t = 0;
        for (int a = 0; a < n_; a++)
            if (e & (Mask(1) << a)) t |= target_mask_[a];
        return t;
    }

    Mask attackers_of(Mask e) const {
        Mask t = 0;
        for (int a = 0; a < n_; a++)
            if (e & (Mask(1) << a)) t |= attacker_mask_[a];
        return t;
    }

    Mask reduct_mask(Mask present, Mask e) const { return present & ~(e | targets_of(e)); }

    const vector<Mask>& weakly_admissible(Mask present) {
        check_deadline();
        auto it = memo_.find(present);
        if (it != memo_.end()) return it->second;

        vector<Mask> result;
        vector<Mask> candidates;
        collect_conflict_free(present, 0, 0, candidates);
        static_assert(kAttackerDefeatsViaReductAdmissibility);
        for (Mask e : candidates) {
            if (e == 0) {
                result.push_back(0);
                continue;
            }
            Mask enemies = attackers_of(e) & present;
            if (enemies == 0) {
                result.push_back(e);
                continue;
            }
            Mask child = reduct_mask(present, e);
            Mask admissible_union = 0;
            for (Mask m : weakly_admissible(child)) admissible_union |= m;
            if ((enemies & admissible_union) == 0) result.push_back(e);
        }
        return memo_.emplace(present, move(result)).first->second;
    }

    Mask admissible_union(Mask present) {
        Mask u = 0;
        for (Mask m : weakly_admissible(present)) u |= m;
        return u;
    }

private:
    void check_deadline() const {
        if (has_deadline_ && chrono::steady_clock::now() > deadline_)
            throw resource_limit_error("set-based semantics exceeded the wall-clock budget");
    }

    void collect_conflict_free(Mask present, int from, Mask chosen, vector<Mask>& out) const {
        if (from == n_) {
            check_deadline();
            out.push_back(chosen);
            return;
        }
        collect_conflict_free(present, from + 1, chosen, out);
        Mask bit = Mask(1) << from;
        if (!(present & bit)) return;
        if (attacker_mask_[from] & bit) return;  // self-attack
        if ((attacker_mask_[from] | target_mask_[from]) & chosen) return;
        collect_conflict_free(present, from + 1, chosen | bit, out);
    }

    const Framework& fw_;
    int n_;
    vector<Mask> attacker_mask_;
    vector<Mask> target_mask_;
    unordered_map<Mask, vector<Mask>> memo_;
    chrono::steady_clock::time_point deadline_{};
    bool has_deadline_ = false;
};

void check_limit(const Framework& fw, const BbuLimits& limits) {
    if (fw.size() > limits.max_arguments)
        throw resource_limit_error("set-based semantics refused: " + to_string(fw.size()) +
                                   " arguments exceed the limit of " +
                                   to_string(limits.max_arguments));
    if (fw.size() > 62)
        throw resource_limit_error("set-based semantics support at most 62 arguments");
}

vector<int> mask_to_indices(Mask m) {
    vector<int> out;
    for (int a = 0; a < 64; a++)
        if (m & (Mask(1) << a)) out.push_back(a);
    return out;
}

Mask indices_to_mask(const Framework& fw, const vector<int>& idx) {
    Mask m = 0;
    for (int a : idx) {
        if (a < 0 || a >= fw.size())
            throw invalid_argument("unknown argument index in set");
        m |= Mask(1) << a;
    }
    return m;
}

ExtensionSet to_extension_set(const Framework& fw, vector<Mask> masks) {
    ExtensionSet es;
    es.extensions.reserve(masks.size());
    for (Mask m : masks) es.extensions.push_back(mask_to_indices(m));
    sort(es.extensions.begin(), es.extensions.end(),
         [&fw](const vector<int>& a, const vector<int>& b) {
             vector<string> an, bn;
             for (int x : a) an.push_back(fw.name(x));
             for (int x : b) bn.push_back(fw.name(x));
             sort(an.begin(), an.end());
             sort(bn.begin(), bn.end());
             return an < bn;
         });
    return es;
}

// Weak defence of X by E given E's precomputed reduct data. The second
// disjunct compares the part of X that survives into the reduct.
bool defends(WadmEngine& eng, Mask e, Mask x, Mask reduct, const vector<Mask>& reduct_adm,
             Mask reduct_union) {
    Mask e_targets = eng.targets_of(e);
    bool needs_extension_clause = false;
    Mask enemies = eng.attackers_of(x);
    for (int y = 0; y < 64; y++) {
        if (!(enemies & (Mask(1) << y))) continue;
        if (e_targets & (Mask(1) << y)) continue;
        if (reduct_union & (Mask(1) << y)) return false;
        if (e & (Mask(1) << y)) return false;
        needs_extension_clause = true;
    }
    if (needs_extension_clause) {
        Mask residual = x & reduct;
        bool covered = false;
        for (Mask m : reduct_adm)
            if ((residual & ~m) == 0) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

vector<Mask> complete_masks(WadmEngine& eng) {
    Mask full = eng.full_mask();
    vector<Mask> complete;
    for (Mask e : eng.weakly_admissible(full)) {
        Mask reduct = eng.reduct_mask(full, e);
        const vector<Mask>& reduct_adm = eng.weakly_admissible(reduct);
        Mask reduct_union = 0;
        for (Mask m : reduct_adm) reduct_union |= m;

        Mask rest = full & ~e;
        bool defended_superset = false;
        for (Mask t = rest; t != 0 && !defended_superset; t = (t - 1) & rest)
            if (defends(eng, e, e | t, reduct, reduct_adm, reduct_union))
                defended_superset = true;
        if (!defended_superset) complete.push_back(e);
    }
    return complete;
}

}  // namespace

ExtensionSet weakly_admissible_sets(const Framework& fw, const BbuLimits& limits) {
    check_limit(fw, limits);
    WadmEngine eng(fw, limits.time_budget_seconds);
    return to_extension_set(fw, eng.weakly_admissible(eng.full_mask()));
}

bool weakly_defends(const Framework& fw, const vector<int>& e, const vector<int>& x,
                    const BbuLimits& limits) {
    check_limit(fw, limits);
    WadmEngine eng(fw, limits.time_budget_seconds);
    Mask em = indices_to_mask(fw, e);
    Mask xm = indices_to_mask(fw, x);
    Mask reduct = eng.reduct_mask(eng.full_mask(), em);
    const vector<Mask>& reduct_adm = eng.weakly_admissible(reduct);
    Mask reduct_union = 0;
    for (Mask m : reduct_adm) reduct_union |= m;
    return defends(eng, em, xm, reduct, reduct_adm, reduct_union);
}

bool weakly_defends_names(const Framework& fw, const vector<string>& e, const vector<string>& x,
                          const BbuLimits& limits) {
    vector<int> ei, xi;
    for (const string& s : e) ei.push_back(fw.index_of(s));
    for (const string& s : x) xi.push_back(fw.index_of(s));
    return weakly_defends(fw, ei, xi, limits);
}

ExtensionSet bbu_complete(const Framework& fw, const BbuLimits& limits) {
    check_limit(fw, limits);
    WadmEngine eng(fw, limits.time_budget_seconds);
    return to_extension_set(fw, complete_masks(eng));
}

ExtensionSet bbu_preferred(const Framework& fw, const BbuLimits& limits) {
    check_limit(fw, limits);
    WadmEngine eng(fw, limits.time_budget_seconds);
    vector<Mask> adm = eng.weakly_admissible(eng.full_mask());
    vector<Mask> maximal;
    for (Mask e : adm) {
        bool dominated = false;
        for (Mask f : adm)
            if (f != e && (e & ~f) == 0) { dominated = true; break; }
        if (!dominated) maximal.push_back(e);
    }
    return to_extension_set(fw, maximal);
}

ExtensionSet bbu_grounded(const Framework& fw, const BbuLimits& limits) {
    check_limit(fw, limits);
    WadmEngine eng(fw, limits.time_budget_seconds);
    vector<Mask> complete = complete_masks(eng);
    vector<Mask> minimal;
    for (Mask e : complete) {
        bool dominated = false;
        for (Mask f : complete)
            if (f != e && (f & ~e) == 0) { dominated = true; break; }
        if (!dominated) minimal.push_back(e);
    }
    return to_extension_set(fw, minimal);
}

}
