#pragma once

#include "afs/bbu.hpp"
#include "afs/framework.hpp"
#include "afs/labelling.hpp"

#include <string>
#include <vector>

namespace afs {

// Trivial graph format: one argument id per line, a separator line "#",
// then attack lines "x y".
Framework parse_tgf(const std::string& text);

// ASPARTIX format: facts "arg(x)." and "att(x,y)." in any order, "%"
// comments, whitespace tolerated. Endpoints may be declared anywhere in
// the file.
Framework parse_apx(const std::string& text);

std::string emit_tgf(const Framework& fw);
std::string emit_apx(const Framework& fw);

// {"in":[...],"out":[...],"undec":[...]} with each list sorted
// lexicographically.
std::string emit_labelling_json(const Framework& fw, const Labelling& l);
std::string emit_labelling_text(const Framework& fw, const Labelling& l);

// JSON array of labelling objects sorted by in-set (lexicographic over the
// sorted in lists).
std::string emit_labellings_json(const Framework& fw, const std::vector<Labelling>& ls);
std::string emit_labellings_text(const Framework& fw, const std::vector<Labelling>& ls);

// JSON array of sorted name arrays, sorted lexicographically.
std::string emit_extensions_json(const Framework& fw, const ExtensionSet& es);
std::string emit_extensions_text(const Framework& fw, const ExtensionSet& es);

}
