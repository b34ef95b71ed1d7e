#include "bnt/io.hpp"

#include <fstream>
#include <stdexcept>

namespace bnt {

FunctionFile read_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("m=", 0) != 0)
        throw std::runtime_error(path + ": first line must be m=<int>");
    FunctionFile ff;
    ff.m = std::stoi(line.substr(2));
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            ff.functions.push_back(parse_hex(line, ff.m));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return ff;
}

void write_function_file(const std::string& path, int m, const std::vector<BoolFun>& fns) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "m=" << m << "\n";
    for (const BoolFun& f : fns) out << format_hex(f) << "\n";
}

}  // namespace bnt
