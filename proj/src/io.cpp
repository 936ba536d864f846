#include "domrt/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace domrt {

CdfInput read_cdf_input(std::istream& is) {
    std::stringstream buffered;
    buffered << is.rdbuf();
    const std::string content = buffered.str();

    std::istringstream scan(content);
    std::string line;
    std::string header;
    while (std::getline(scan, line)) {
        if (line.empty() || line[0] == '#') continue;
        header = line;
        break;
    }
    std::istringstream parse(content);
    if (header.rfind("runtime", 0) == 0) return read_sample_set_csv(parse);
    if (header.rfind("k,pmf,cdf", 0) == 0) return read_discrete_dist_csv(parse);
    throw std::runtime_error("unrecognized CSV header '" + header + "'");
}

CdfInput read_cdf_input_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open '" + path + "'");
    return read_cdf_input(is);
}

}  // namespace domrt
