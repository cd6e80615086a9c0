#include "afs/oracle.hpp"

#include "afs/errors.hpp"

#include <stdexcept>
#include <string>

using namespace std;

namespace afs {
namespace oracle {

bool is_weakly_complete(const Framework& fw, const Labelling& l) {
    if (l.size() != fw.size())
        throw invalid_argument("labelling does not match framework");
    for (int a = 0; a < fw.size(); a++) {
        bool has_in = false, has_undec = false;
        for (int b : fw.attackers(a)) {
            if (l.at(b) == Label::in) has_in = true;
            if (l.at(b) == Label::undec) has_undec = true;
        }
        switch (l.at(a)) {
            case Label::in:
                if (has_in) return false;
                break;
            case Label::out:
                if (!has_in) return false;
                break;
            case Label::undec:
                if (!has_undec || has_in) return false;
                break;
        }
    }
    return true;
}

bool is_complete(const Framework& fw, const Labelling& l) {
    if (l.size() != fw.size())
        throw invalid_argument("labelling does not match framework");
    for (int a = 0; a < fw.size(); a++) {
        bool has_in = false, has_undec = false, all_out = true;
        for (int b : fw.attackers(a)) {
            if (l.at(b) == Label::in) has_in = true;
            if (l.at(b) == Label::undec) has_undec = true;
            if (l.at(b) != Label::out) all_out = false;
        }
        switch (l.at(a)) {
            case Label::in:
                if (!all_out) return false;
                break;
            case Label::out:
                if (!has_in) return false;
                break;
            case Label::undec:
                if (!has_undec || has_in) return false;
                break;
        }
    }
    return true;
}

template <typename Pred>
static vector<Labelling> scan(const Framework& fw, int max_arguments, Pred keep) {
    if (fw.empty())
        throw invalid_argument("brute-force scan requires a non-empty framework");
    if (fw.size() > max_arguments)
        throw resource_limit_error("brute-force scan refused: " + to_string(fw.size()) +
                                   " arguments exceed the cap of " + to_string(max_arguments));
    const Label order[3] = {Label::in, Label::out, Label::undec};
    int n = fw.size();
    vector<int> digits(n, 0);
    vector<Labelling> found;
    while (true) {
        Labelling l;
        l.labels.resize(n);
        for (int a = 0; a < n; a++) l.labels[a] = order[digits[a]];
        if (keep(fw, l)) found.push_back(move(l));
        int pos = n - 1;
        while (pos >= 0 && digits[pos] == 2) digits[pos--] = 0;
        if (pos < 0) break;
        digits[pos]++;
    }
    return found;
}

vector<Labelling> brute_force_weakly_complete(const Framework& fw, int max_arguments) {
    return scan(fw, max_arguments,
                [](const Framework& f, const Labelling& l) { return is_weakly_complete(f, l); });
}

vector<Labelling> brute_force_complete(const Framework& fw, int max_arguments) {
    return scan(fw, max_arguments,
                [](const Framework& f, const Labelling& l) { return is_complete(f, l); });
}

bool brute_force_credulous(const Framework& fw, int arg, int max_arguments) {
    if (arg < 0 || arg >= fw.size())
        throw invalid_argument("unknown argument index");
    for (const Labelling& l : brute_force_weakly_complete(fw, max_arguments))
        if (l.at(arg) == Label::in) return true;
    return false;
}

}
}
