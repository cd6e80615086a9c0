#pragma once

#include "afs/framework.hpp"
#include "afs/labelling.hpp"

#include <set>
#include <vector>

namespace afs {

struct EnumerationLimits {
    // Full enumeration is refused above this many arguments; raise it
    // explicitly for larger instances. Credulous acceptance has no limit.
    int max_arguments = 25;
    // Wall-clock budget in seconds; 0 means unlimited. Breaching it raises
    // resource_limit_error, never a truncated result.
    double time_budget_seconds = 0.0;
};

// Labellings deduplicated by in-set (the in-set identifies a weakly
// complete labelling uniquely), in discovery order. `ground_sequences[i]`
// lists the sequences of grounds that produced labelling i, one per
// discovery; `discoveries` counts every discovery including duplicates.
struct LabellingSet {
    std::vector<Labelling> labellings;
    std::vector<std::vector<std::vector<int>>> ground_sequences;
    int discoveries = 0;

    int size() const { return static_cast<int>(labellings.size()); }
};

// The in-sets of a labelling collection as sorted name lists — the
// canonical comparison form.
std::set<std::vector<std::string>> in_set_family(const Framework& fw,
                                                 const std::vector<Labelling>& ls);

// All weakly complete labellings, found by depth-first repeated forward
// propagation from the grounded labelling. Always contains the grounded
// labelling (ground sequence empty).
LabellingSet weakly_complete_labellings(const Framework& fw, const EnumerationLimits& limits = {});

// Weakly complete labellings whose in-set is maximal w.r.t. set inclusion.
LabellingSet weakly_preferred_labellings(const Framework& fw, const EnumerationLimits& limits = {});

// Identical to the grounded labelling (the undec-maximal weakly complete
// labelling is the grounded one).
Labelling weakly_grounded_labelling(const Framework& fw);

// Weakly complete labellings with empty undec-set; coincides with stable.
LabellingSet weakly_stable_labellings(const Framework& fw, const EnumerationLimits& limits = {});

// Weakly complete labellings where every accepted argument has all its
// attackers rejected, i.e. the complete labellings.
LabellingSet dung_complete_labellings(const Framework& fw, const EnumerationLimits& limits = {});

// Complete labellings with in-set maximal / undec-set empty.
LabellingSet dung_preferred_labellings(const Framework& fw, const EnumerationLimits& limits = {});
LabellingSet dung_stable_labellings(const Framework& fw, const EnumerationLimits& limits = {});

// Polynomial credulous acceptance: decided by the grounded label, or by a
// single propagation attempt when the argument is undecided there.
bool credulous_wc(const Framework& fw, int arg);
bool credulous_wc(const Framework& fw, const std::string& arg);

// Acceptance in every weakly complete labelling; requires enumeration.
bool skeptical_wc(const Framework& fw, int arg, const EnumerationLimits& limits = {});
bool skeptical_wc(const Framework& fw, const std::string& arg, const EnumerationLimits& limits = {});

}
