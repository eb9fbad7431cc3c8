#pragma once

#include "../oracle.hpp"

#include <fosm/interpretation.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace test {

inline std::string read_file(const std::string& name, const char* dir = FOSM_TEST_DATA) {
    std::ifstream in(std::string(dir) + "/" + name);
    if (!in)
        throw std::runtime_error("cannot open " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline oracle::Names names(const fosm::AtomSet& atoms) {
    oracle::Names out;
    for (const auto& a : atoms)
        out.insert(fosm::to_string(a));
    return out;
}

inline std::vector<oracle::Names> names(const std::vector<fosm::AtomSet>& sets) {
    std::vector<oracle::Names> out;
    for (const auto& s : sets)
        out.push_back(names(s));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace test
