#pragma once

#include "afs/framework.hpp"

#include <vector>

namespace afs {

enum class Label : unsigned char { in, out, undec };

// Total assignment argument -> label, aligned with the framework's
// argument indices.
struct Labelling {
    std::vector<Label> labels;

    bool operator==(const Labelling&) const = default;

    Label at(int arg) const { return labels[arg]; }
    int size() const { return static_cast<int>(labels.size()); }
};

Labelling all_undec(const Framework& fw);

std::vector<int> in_set(const Labelling& l);
std::vector<int> out_set(const Labelling& l);
std::vector<int> undec_set(const Labelling& l);

// Lexicographically sorted name lists, the comparison form used by tests
// and by the serializers.
std::vector<std::string> in_names(const Framework& fw, const Labelling& l);
std::vector<std::string> out_names(const Framework& fw, const Labelling& l);
std::vector<std::string> undec_names(const Framework& fw, const Labelling& l);

// The unique labelling with the given conflict-free in-set: targets of the
// in-set are out, everything else undec. Rejects non-conflict-free input.
Labelling labelling_from_in_set(const Framework& fw, const std::vector<int>& in_args);
Labelling labelling_from_in_set_names(const Framework& fw, const std::vector<std::string>& in_args);

}
