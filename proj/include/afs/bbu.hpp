#pragma once

#include "afs/framework.hpp"

#include <set>
#include <string>
#include <vector>

namespace afs {

struct BbuLimits {
    // The set-based semantics enumerate candidate sets; refuse above this
    // many arguments unless raised explicitly.
    int max_arguments = 20;
    // Wall-clock budget in seconds; 0 means unlimited.
    double time_budget_seconds = 0.0;
};

// Deduplicated argument sets, each sorted by argument index; the set list
// is ordered by the sorted-name form for reproducible output.
struct ExtensionSet {
    std::vector<std::vector<int>> extensions;

    int size() const { return static_cast<int>(extensions.size()); }
};

std::set<std::vector<std::string>> extension_name_family(const Framework& fw,
                                                         const ExtensionSet& es);

// Polarity of the recursive membership test: an attacker defeats a
// candidate set only when the attacker itself belongs to some weakly
// admissible set of the candidate's reduct. Attackers that are nowhere
// weakly admissible in the reduct carry no weight.
inline constexpr bool kAttackerDefeatsViaReductAdmissibility = true;

// Restriction of the framework to the arguments neither in E nor attacked
// by E.
Framework reduct(const Framework& fw, const std::vector<int>& extension);
Framework reduct_names(const Framework& fw, const std::vector<std::string>& extension);

// All conflict-free sets none of whose attackers is weakly admissible in
// the corresponding reduct (recursive, memoized per reduct).
ExtensionSet weakly_admissible_sets(const Framework& fw, const BbuLimits& limits = {});

// E weakly defends X iff every attacker y of X is attacked by E, or y is
// neither in E nor weakly admissible anywhere in reduct(fw, E) while the
// part of X that survives into the reduct extends to a weakly admissible
// set there.
bool weakly_defends(const Framework& fw, const std::vector<int>& e, const std::vector<int>& x,
                    const BbuLimits& limits = {});
bool weakly_defends_names(const Framework& fw, const std::vector<std::string>& e,
                          const std::vector<std::string>& x, const BbuLimits& limits = {});

// Weakly admissible sets that weakly defend no strict superset.
ExtensionSet bbu_complete(const Framework& fw, const BbuLimits& limits = {});
// Inclusion-maximal weakly admissible sets.
ExtensionSet bbu_preferred(const Framework& fw, const BbuLimits& limits = {});
// Inclusion-minimal members of the complete family.
ExtensionSet bbu_grounded(const Framework& fw, const BbuLimits& limits = {});

}
