#include "afs/framework.hpp"

#include <algorithm>
#include <stdexcept>

using namespace std;

namespace afs {

static uint64_t attack_key(int from, int to) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(from)) << 32) | static_cast<uint32_t>(to);
}

Framework Framework::build(const vector<string>& arguments,
                           const vector<pair<string, string>>& attacks) {
    Framework fw;
    fw.names_.reserve(arguments.size());
    for (const string& id : arguments) {
        if (id.empty())
            throw invalid_argument("argument identifier must be a non-empty string");
        if (!fw.index_.emplace(id, static_cast<int>(fw.names_.size())).second)
            throw invalid_argument("duplicate argument identifier: " + id);
        fw.names_.push_back(id);
    }
    fw.attackers_.assign(fw.names_.size(), {});
    fw.targets_.assign(fw.names_.size(), {});
    for (const auto& [from, to] : attacks) {
        auto fi = fw.index_.find(from);
        auto ti = fw.index_.find(to);
        if (fi == fw.index_.end())
            throw invalid_argument("attack references undeclared argument: " + from);
        if (ti == fw.index_.end())
            throw invalid_argument("attack references undeclared argument: " + to);
        if (!fw.attack_keys_.insert(attack_key(fi->second, ti->second)).second)
            continue;
        fw.targets_[fi->second].push_back(ti->second);
        fw.attackers_[ti->second].push_back(fi->second);
        fw.attack_count_++;
    }
    for (auto& v : fw.attackers_) sort(v.begin(), v.end());
    for (auto& v : fw.targets_) sort(v.begin(), v.end());
    return fw;
}

int Framework::index_of(const string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw invalid_argument("unknown argument: " + name);
    return it->second;
}

bool Framework::has_attack(int from, int to) const {
    return attack_keys_.count(attack_key(from, to)) != 0;
}

vector<pair<string, string>> Framework::attack_pairs() const {
    vector<pair<string, string>> out;
    out.reserve(attack_count_);
    for (int a = 0; a < size(); a++)
        for (int t : targets_[a])
            out.emplace_back(names_[a], names_[t]);
    return out;
}

vector<int> Framework::initial_arguments() const {
    vector<int> out;
    for (int a = 0; a < size(); a++)
        if (attackers_[a].empty())
            out.push_back(a);
    return out;
}

Framework Framework::restrict_to(vector<int> keep) const {
    sort(keep.begin(), keep.end());
    keep.erase(unique(keep.begin(), keep.end()), keep.end());
    vector<string> args;
    args.reserve(keep.size());
    for (int a : keep) {
        if (a < 0 || a >= size())
            throw invalid_argument("restriction references unknown argument index");
        args.push_back(names_[a]);
    }
    vector<char> in_keep(size(), 0);
    for (int a : keep) in_keep[a] = 1;
    vector<pair<string, string>> atts;
    for (int a : keep)
        for (int t : targets_[a])
            if (in_keep[t])
                atts.emplace_back(names_[a], names_[t]);
    return build(args, atts);
}

Framework Framework::restrict_to_names(const vector<string>& keep) const {
    vector<int> idx;
    idx.reserve(keep.size());
    for (const string& n : keep) idx.push_back(index_of(n));
    return restrict_to(move(idx));
}

vector<string> Framework::attacker_names(const string& arg) const {
    vector<string> out;
    for (int a : attackers_[index_of(arg)]) out.push_back(names_[a]);
    return out;
}

vector<string> Framework::target_names(const string& arg) const {
    vector<string> out;
    for (int a : targets_[index_of(arg)]) out.push_back(names_[a]);
    return out;
}

vector<string> Framework::initial_argument_names() const {
    vector<string> out;
    for (int a : initial_arguments()) out.push_back(names_[a]);
    return out;
}

// Iterative Tarjan. Components are emitted sinks-first, so reversing the
// emission order yields the topological order the decomposition promises.
SccDecomposition scc_decomposition(const Framework& fw) {
    int n = fw.size();
    SccDecomposition dec;
    dec.component_of.assign(n, -1);
    if (n == 0) return dec;

    vector<int> dfs_number(n, -1), low(n, 0);
    vector<char> on_stack(n, 0);
    vector<int> scc_stack;
    vector<vector<int>> sccs;
    int counter = 0;

    struct StackFrame {
        int vertex;
        size_t next_child;
    };
    vector<StackFrame> call_stack;

    for (int root = 0; root < n; root++) {
        if (dfs_number[root] != -1) continue;
        call_stack.push_back({root, 0});
        dfs_number[root] = low[root] = counter++;
        scc_stack.push_back(root);
        on_stack[root] = 1;
        while (!call_stack.empty()) {
            StackFrame& frame = call_stack.back();
            int v = frame.vertex;
            const vector<int>& succ = fw.targets(v);
            if (frame.next_child < succ.size()) {
                int w = succ[frame.next_child++];
                if (dfs_number[w] == -1) {
                    dfs_number[w] = low[w] = counter++;
                    scc_stack.push_back(w);
                    on_stack[w] = 1;
                    call_stack.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = min(low[v], dfs_number[w]);
                }
            } else {
                if (low[v] == dfs_number[v]) {
                    vector<int> comp;
                    int w;
                    do {
                        w = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != v);
                    sort(comp.begin(), comp.end());
                    sccs.push_back(move(comp));
                }
                call_stack.pop_back();
                if (!call_stack.empty()) {
                    int parent = call_stack.back().vertex;
                    low[parent] = min(low[parent], low[v]);
                }
            }
        }
    }

    reverse(sccs.begin(), sccs.end());
    dec.components = move(sccs);
    for (size_t c = 0; c < dec.components.size(); c++)
        for (int a : dec.components[c])
            dec.component_of[a] = static_cast<int>(c);
    return dec;
}

bool is_acyclic_argument(const Framework& fw, int arg) {
    if (arg < 0 || arg >= fw.size())
        throw invalid_argument("unknown argument index");
    if (fw.has_attack(arg, arg)) return false;
    SccDecomposition dec = scc_decomposition(fw);
    return dec.components[dec.component_of[arg]].size() == 1;
}

bool is_acyclic_argument(const Framework& fw, const string& arg) {
    return is_acyclic_argument(fw, fw.index_of(arg));
}

}
