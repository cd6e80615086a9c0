#pragma once

#include "afs/enumeration.hpp"
#include "afs/framework.hpp"
#include "afs/labelling.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace afs {

namespace detail {

// Base function plugged into the component-recursive schema. It must
// return weakly complete labellings for any framework it is handed.
using BaseFunction = std::function<std::vector<Labelling>(const Framework&)>;

// Component-recursive undecidedness-blocking schema: components are
// processed in topological order; arguments attacked by an accepted
// argument from an earlier component are rejected, and the base function
// labels the remainder of each component (re-decomposing it when the
// removal split it). Attacks from undecided external arguments are
// ignored, which is what blocks undecidedness at component boundaries.
// Multi-labelling bases branch the recursion.
std::vector<Labelling> ub_apply(const Framework& fw, const BaseFunction& base);

}

// Schema instantiated with the grounded labelling; single status, always
// exists.
Labelling ub_grounded_labelling(const Framework& fw);

// Ordered pairs (a, b) within one strongly connected component such that a
// is credulously accepted and every weakly complete labelling accepting a
// decides b. `strict` keeps the asymmetric pairs.
struct PrecedenceRelation {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<int, int>> strict;
};

PrecedenceRelation semantic_precedence(const Framework& fw, const EnumerationLimits& limits = {});

// Two readings of the "no predecessor" set. The default drops the
// same-component restriction and keeps only credulously accepted
// arguments; the literal variant stays within components and keeps every
// unpreceded argument.
enum class InitialSetMode { credulous_global, component_literal };

std::vector<int> precedence_initial_set(const Framework& fw,
                                        InitialSetMode mode = InitialSetMode::credulous_global,
                                        const EnumerationLimits& limits = {});

// Schema instantiated with the weakly preferred labellings that maximize
// acceptance within the precedence-initial set of each (sub)framework.
std::vector<Labelling> ub_preferred_labellings(const Framework& fw,
                                               const EnumerationLimits& limits = {},
                                               InitialSetMode mode = InitialSetMode::credulous_global);

}
