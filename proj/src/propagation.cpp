#include "afs/propagation.hpp"

#include <deque>
#include <stdexcept>

using namespace std;

namespace afs {

PropagationOutcome in_out_fw(const Framework& fw, const vector<int>& grounds,
                             const Labelling& start) {
    if (start.size() != fw.size())
        throw invalid_argument("labelling does not match framework");
    for (int g : grounds) {
        if (g < 0 || g >= fw.size())
            throw invalid_argument("unknown ground argument index");
        if (start.at(g) != Label::undec)
            throw invalid_argument("ground argument is not undecided: " + fw.name(g));
    }
    if (grounds.empty())
        return {start, nullopt};

    Labelling l = start;
    // Attackers not yet labelled out; an undecided argument is promotable
    // once its count reaches zero.
    vector<int> live_attackers(fw.size(), 0);
    for (int a = 0; a < fw.size(); a++)
        for (int b : fw.attackers(a))
            if (l.at(b) != Label::out) live_attackers[a]++;

    deque<int> queue;
    for (int g : grounds) {
        if (l.labels[g] == Label::in) continue;  // duplicate ground
        l.labels[g] = Label::in;
        queue.push_back(g);
    }

    while (!queue.empty()) {
        int g = queue.front();
        queue.pop_front();
        for (int x : fw.targets(g)) {
            if (l.labels[x] == Label::in)
                return {start, x};
            if (l.labels[x] == Label::out) continue;
            l.labels[x] = Label::out;
            for (int y : fw.targets(x)) {
                if (--live_attackers[y] == 0 && l.labels[y] == Label::undec) {
                    l.labels[y] = Label::in;
                    queue.push_back(y);
                }
            }
        }
    }
    return {move(l), nullopt};
}

PropagationOutcome in_out_fw_names(const Framework& fw, const vector<string>& grounds,
                                   const Labelling& start) {
    vector<int> idx;
    idx.reserve(grounds.size());
    for (const string& g : grounds) idx.push_back(fw.index_of(g));
    return in_out_fw(fw, idx, start);
}

Labelling grounded_labelling(const Framework& fw) {
    if (fw.empty())
        throw invalid_argument("grounded labelling requires a non-empty framework");
    PropagationOutcome out = in_out_fw(fw, fw.initial_arguments(), all_undec(fw));
    if (!out.ok())
        throw logic_error("propagation from initial arguments can never clash");
    return out.labelling;
}

}
