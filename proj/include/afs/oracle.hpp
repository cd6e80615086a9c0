#pragma once

#include "afs/framework.hpp"
#include "afs/labelling.hpp"

#include <vector>

namespace afs {
namespace oracle {

// Direct pointwise checks of the labelling conditions. Deliberately naive;
// these are the ground truth the fast paths are tested against.

// in  => no attacker labelled in
// out => at least one attacker labelled in
// undec => at least one attacker undec and no attacker in
bool is_weakly_complete(const Framework& fw, const Labelling& l);

// in  => all attackers labelled out
// out => at least one attacker labelled in
// undec => at least one attacker undec and no attacker in
bool is_complete(const Framework& fw, const Labelling& l);

// Exhaustive 3^n scan, lexicographic over labels per argument in framework
// order (in < out < undec). Throws resource_limit_error above the cap.
std::vector<Labelling> brute_force_weakly_complete(const Framework& fw, int max_arguments = 12);
std::vector<Labelling> brute_force_complete(const Framework& fw, int max_arguments = 12);

bool brute_force_credulous(const Framework& fw, int arg, int max_arguments = 12);

}
}
