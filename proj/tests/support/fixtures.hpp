#pragma once

#include <sgx/parser.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace sgx::test {

inline std::string fixture_path(const std::string& name) { return std::string(SGX_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
    std::ifstream     in(fixture_path(name), std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Program fixture(const std::string& name) { return parse_program(read_fixture(name)); }

inline Interpretation M(std::initializer_list<std::string_view> names) { return Interpretation::of(names); }

} // namespace sgx::test
