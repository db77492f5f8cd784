#include "exclusion/povm_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace exclusion {

namespace {

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

void write_povm_csv(const Povm& m, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_povm_csv: cannot open " + path.string());
    out << m.dim() << ',' << m.size() << '\n';
    for (const ComplexMatrix& e : m.effects) {
        std::string line;
        for (int i = 0; i < e.dim(); ++i) {
            for (int j = 0; j < e.dim(); ++j) {
                const Cx v = e.at(i, j);
                if (!line.empty()) line += ',';
                line += fmt12(v.real());
                line += ',';
                line += fmt12(v.imag());
            }
        }
        out << line << '\n';
    }
    if (!out) throw IoError("write_povm_csv: write failed for " + path.string());
}

Povm read_povm_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("read_povm_csv: cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw IoError("read_povm_csv: missing header in " + path.string());
    int dim = 0, count = 0;
    {
        std::istringstream hdr(line);
        char comma = 0;
        if (!(hdr >> dim >> comma >> count) || comma != ',' || dim < 1 ||
            count < 1)
            throw IoError("read_povm_csv: bad header '" + line + "'");
    }
    Povm m;
    m.effects.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        if (!std::getline(in, line))
            throw IoError("read_povm_csv: expected " + std::to_string(count) +
                          " effect rows, got " + std::to_string(k));
        std::istringstream row(line);
        ComplexMatrix e(dim);
        std::string cell;
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                double re = 0.0, im = 0.0;
                if (!std::getline(row, cell, ','))
                    throw IoError("read_povm_csv: short row " +
                                  std::to_string(k));
                re = std::stod(cell);
                if (!std::getline(row, cell, ','))
                    throw IoError("read_povm_csv: short row " +
                                  std::to_string(k));
                im = std::stod(cell);
                e.set(i, j, Cx{re, im});
            }
        }
        if (!all_finite(e))
            throw IoError("read_povm_csv: non-finite entries in row " +
                          std::to_string(k));
        m.effects.push_back(std::move(e));
    }
    return m;
}

}  // namespace exclusion
