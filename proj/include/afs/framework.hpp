#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace afs {

// A finite directed attack graph over named arguments. Immutable after
// construction; argument order is the insertion order of the declaration
// list, and every derived ordering in the library follows it.
class Framework {
public:
    Framework() = default;

    // Validates and normalizes the input. Rejects empty/duplicate argument
    // ids and attacks with undeclared endpoints. Duplicate attack pairs are
    // collapsed. Self-attacks are permitted.
    static Framework build(const std::vector<std::string>& arguments,
                           const std::vector<std::pair<std::string, std::string>>& attacks);

    int size() const { return static_cast<int>(names_.size()); }
    bool empty() const { return names_.empty(); }
    int attack_count() const { return attack_count_; }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    int index_of(const std::string& name) const;
    const std::string& name(int arg) const { return names_[arg]; }
    const std::vector<std::string>& names() const { return names_; }

    const std::vector<int>& attackers(int arg) const { return attackers_[arg]; }
    const std::vector<int>& targets(int arg) const { return targets_[arg]; }
    bool has_attack(int from, int to) const;
    std::vector<std::pair<std::string, std::string>> attack_pairs() const;

    // Arguments with no attackers at all, self-attacks included.
    std::vector<int> initial_arguments() const;

    // Vertex-induced subgraph. Keeps argument order; `keep` may be unsorted
    // but must not contain unknown indices. The result may be empty.
    Framework restrict_to(std::vector<int> keep) const;
    Framework restrict_to_names(const std::vector<std::string>& keep) const;

    std::vector<std::string> attacker_names(const std::string& arg) const;
    std::vector<std::string> target_names(const std::string& arg) const;
    std::vector<std::string> initial_argument_names() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> attackers_;
    std::vector<std::vector<int>> targets_;
    std::unordered_set<std::uint64_t> attack_keys_;
    int attack_count_ = 0;
};

// Strongly connected components in a topological order of the condensation:
// for any attack (a, b) across components, the component of a comes first.
struct SccDecomposition {
    std::vector<std::vector<int>> components;
    std::vector<int> component_of;
};

SccDecomposition scc_decomposition(const Framework& fw);

// True iff the argument sits on no cycle: its component is a singleton
// without a self-attack.
bool is_acyclic_argument(const Framework& fw, int arg);
bool is_acyclic_argument(const Framework& fw, const std::string& arg);

}
