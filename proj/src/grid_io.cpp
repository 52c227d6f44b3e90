#include "biharm/grid_io.hpp"

#include "biharm/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace biharm {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_grid_csv(std::ostream& os, const GridFunction& f) {
    const GridSpec& s = f.spec();
    os << "# " << s.dim() << ',' << s.points_per_axis() << ',' << format_real(s.side_length()) << '\n';
    for (double v : f.values()) os << format_real(v) << '\n';
}

GridFunction read_grid_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.size() < 2 || line[0] != '#')
        throw DomainError("grid CSV must start with a '# dim,N,L' header");
    int dim = 0, n = 0;
    double length = 0.0;
    {
        std::string body = line.substr(1);
        for (char& c : body)
            if (c == ',') c = ' ';
        std::istringstream hs(body);
        if (!(hs >> dim >> n >> length)) throw DomainError("cannot parse grid CSV header: " + line);
    }
    GridSpec spec(dim, n, length);
    std::vector<double> values;
    values.reserve(spec.size());
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(line, &used);
        } catch (const std::exception&) {
            throw DomainError("bad sample in grid CSV: '" + line + "'");
        }
        values.push_back(v);
    }
    return GridFunction(spec, std::move(values));
}

GridFunction load_grid_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path.string());
    return read_grid_csv(in);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw DomainError("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace biharm
