#include "afs/labelling.hpp"

#include <algorithm>
#include <stdexcept>

using namespace std;

namespace afs {

Labelling all_undec(const Framework& fw) {
    return Labelling{vector<Label>(fw.size(), Label::undec)};
}

static vector<int> collect(const Labelling& l, Label which) {
    vector<int> out;
    for (int a = 0; a < l.size(); a++)
        if (l.labels[a] == which) out.push_back(a);
    return out;
}

vector<int> in_set(const Labelling& l) { return collect(l, Label::in); }
vector<int> out_set(const Labelling& l) { return collect(l, Label::out); }
vector<int> undec_set(const Labelling& l) { return collect(l, Label::undec); }

static vector<string> sorted_names(const Framework& fw, const vector<int>& args) {
    vector<string> out;
    out.reserve(args.size());
    for (int a : args) out.push_back(fw.name(a));
    sort(out.begin(), out.end());
    return out;
}

vector<string> in_names(const Framework& fw, const Labelling& l) {
    return sorted_names(fw, in_set(l));
}
vector<string> out_names(const Framework& fw, const Labelling& l) {
    return sorted_names(fw, out_set(l));
}
vector<string> undec_names(const Framework& fw, const Labelling& l) {
    return sorted_names(fw, undec_set(l));
}

Labelling labelling_from_in_set(const Framework& fw, const vector<int>& in_args) {
    for (int a : in_args)
        if (a < 0 || a >= fw.size())
            throw invalid_argument("unknown argument index in in-set");
    vector<char> chosen(fw.size(), 0);
    for (int a : in_args) chosen[a] = 1;
    for (int a : in_args)
        for (int t : fw.targets(a))
            if (chosen[t])
                throw invalid_argument("in-set is not conflict-free: " + fw.name(a) +
                                       " attacks " + fw.name(t));
    Labelling l = all_undec(fw);
    for (int a : in_args) l.labels[a] = Label::in;
    for (int a : in_args)
        for (int t : fw.targets(a))
            l.labels[t] = Label::out;
    return l;
}

Labelling labelling_from_in_set_names(const Framework& fw, const vector<string>& in_args) {
    vector<int> idx;
    idx.reserve(in_args.size());
    for (const string& n : in_args) idx.push_back(fw.index_of(n));
    return labelling_from_in_set(fw, idx);
}

}
