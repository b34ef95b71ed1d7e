#pragma once

#include <string>
#include <vector>

#include "bnt/boolfun.hpp"

namespace bnt {

// Newline-separated function file: first line "m=<int>", then one hex
// truth table per line.
struct FunctionFile {
    int m = 0;
    std::vector<BoolFun> functions;
};

FunctionFile read_function_file(const std::string& path);
void write_function_file(const std::string& path, int m, const std::vector<BoolFun>& fns);

}  // namespace bnt
