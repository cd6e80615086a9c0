#pragma once

#include "afs/bbu.hpp"
#include "afs/enumeration.hpp"
#include "afs/framework.hpp"
#include "afs/labelling.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace afs {

enum class SemanticsId {
    grounded,
    complete,
    preferred,
    stable,
    weakly_complete,
    weakly_preferred,
    weakly_grounded,
    weakly_stable,
    ub_grounded,
    ub_preferred,
    bbu_complete,
    bbu_preferred,
    bbu_grounded,
};

const char* semantics_token(SemanticsId id);
std::optional<SemanticsId> semantics_from_token(const std::string& token);

// Uniform labelling view of every semantics; extension-based families are
// lifted through the in-set construction.
std::vector<Labelling> semantics_labellings(const Framework& fw, SemanticsId id,
                                            const EnumerationLimits& limits = {},
                                            const BbuLimits& bbu_limits = {});

// Per-ordered-pair attack probability, self-attacks included; reproducible
// from the seed.
Framework random_framework(int n, double p, std::uint32_t seed);

struct LabellingPrincipleFlags {
    bool conflict_free;  // no accepted argument attacks an accepted one
    bool admissible;     // every accepted argument has all attackers rejected
    bool reinstatement;  // all attackers rejected forces acceptance
    bool rejection;      // an accepted attacker forces rejection
};

LabellingPrincipleFlags check_labelling_principles(const Framework& fw, const Labelling& l);

enum class Verdict { holds_on_sample, refuted };

struct PrincipleResult {
    Verdict verdict = Verdict::holds_on_sample;
    std::optional<Framework> counterexample;
    std::string note;
};

// For every unattacked component U, the semantics of the restriction to U
// must produce exactly the projections of the full semantics onto U.
PrincipleResult check_directionality(const Framework& fw, SemanticsId id,
                                     const EnumerationLimits& limits = {},
                                     const BbuLimits& bbu_limits = {});

// An argument accepted in one labelling and rejected in another must be
// undecided in some third labelling.
PrincipleResult check_abstention(const Framework& fw, SemanticsId id,
                                 const EnumerationLimits& limits = {},
                                 const BbuLimits& bbu_limits = {});

bool i_maximal(const std::vector<Labelling>& ls);

// Pure directed cycles of length 2..max_len: no argument may receive two
// different labels across the labellings of the semantics.
PrincipleResult check_cycle_homogeneity(SemanticsId id, int max_len,
                                        const EnumerationLimits& limits = {},
                                        const BbuLimits& bbu_limits = {});

struct SampleSpec {
    int max_arguments = 6;
    std::vector<double> edge_probabilities = {0.1, 0.3, 0.5};
    int samples = 300;
    std::uint32_t seed = 1;
    int max_cycle_length = 7;
};

struct CardinalitySummary {
    int min_count = 0;
    int max_count = 0;
    bool always_exactly_one = false;
    bool always_at_least_one = false;
};

struct PrincipleReport {
    std::vector<SemanticsId> semantics;
    std::vector<std::string> principles;
    // (semantics token, principle) -> result
    std::map<std::pair<std::string, std::string>, PrincipleResult> rows;
    std::map<std::string, CardinalitySummary> cardinality;
    SampleSpec sample;
    int frameworks_checked = 0;
    std::vector<std::string> notes;
};

// Samples random frameworks plus the bundled counterexample fixtures and
// evaluates every checkable principle for the requested semantics.
PrincipleReport principle_report(const std::vector<SemanticsId>& ids, const SampleSpec& spec);

std::string render_report(const PrincipleReport& report);

}
