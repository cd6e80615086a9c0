#pragma once

#include "afs/framework.hpp"
#include "afs/io.hpp"
#include "afs/labelling.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace test_helpers {

inline afs::Framework fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return afs::parse_tgf(ss.str());
}

inline afs::Framework mk(const std::vector<std::string>& args,
                         const std::vector<std::pair<std::string, std::string>>& attacks) {
    return afs::Framework::build(args, attacks);
}

using NameSet = std::set<std::vector<std::string>>;

}
