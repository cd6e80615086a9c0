#pragma once

#include "afs/framework.hpp"
#include "afs/labelling.hpp"

#include <optional>

namespace afs {

// Result of a forward propagation run. On a clash the input labelling is
// returned untouched and `clash` names the argument that would have needed
// both labels.
struct PropagationOutcome {
    Labelling labelling;
    std::optional<int> clash;

    bool ok() const { return !clash.has_value(); }
};

// Forward label propagation: the grounds are accepted, their targets
// rejected, and any undecided argument whose attackers become all rejected
// is promoted and processed in turn, until nothing changes or an argument
// would be relabelled inconsistently. Previously assigned in/out labels are
// never modified. Promotions are driven by newly rejected arguments only;
// each attack is examined a constant number of times.
//
// Precondition: every ground is currently undecided. An empty ground set
// returns the labelling unchanged.
PropagationOutcome in_out_fw(const Framework& fw, const std::vector<int>& grounds,
                             const Labelling& start);

PropagationOutcome in_out_fw_names(const Framework& fw, const std::vector<std::string>& grounds,
                                   const Labelling& start);

// The unique grounded labelling: propagation from the initial arguments
// over the all-undec labelling. Never clashes. Rejects empty frameworks.
Labelling grounded_labelling(const Framework& fw);

}
