#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "odyn/format.hpp"

namespace odyn_test {

inline std::string read_data_file(const std::string& name) {
    std::string path = std::string(ODYN_DATA_DIR) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline odyn::FamilyDocument load_doc(const std::string& name) {
    return odyn::parse_family(read_data_file(name));
}

inline odyn::DynamicFamily load_family(const std::string& name) {
    return odyn::to_family(load_doc(name));
}

}  // namespace odyn_test
