#include "catgen/amplitude_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace catgen::amplitude_io {

void write_amplitudes(const std::filesystem::path& path, const hilbert::Vector& amps,
                      bool normalized) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_amplitudes: cannot open " + path.string());
    out << "# dim=" << amps.size() << " normalized=" << (normalized ? 1 : 0) << "\n";
    char line[96];
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        std::snprintf(line, sizeof(line), "%lld %.17g %.17g\n",
                      static_cast<long long>(i), amps(i).real(), amps(i).imag());
        out << line;
    }
    if (!out)
        throw std::runtime_error("write_amplitudes: write failed for " + path.string());
}

Amplitudes read_amplitudes(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("read_amplitudes: cannot open " + path.string());
    std::string header;
    std::getline(in, header);
    long long dim = -1;
    int norm_flag = -1;
    if (std::sscanf(header.c_str(), "# dim=%lld normalized=%d", &dim, &norm_flag) != 2 ||
        dim < 0 || (norm_flag != 0 && norm_flag != 1))
        throw std::runtime_error("read_amplitudes: malformed header in " + path.string());

    hilbert::Vector amps(dim);
    for (long long i = 0; i < dim; ++i) {
        long long idx;
        double re, im;
        if (!(in >> idx >> re >> im) || idx != i)
            throw std::runtime_error("read_amplitudes: malformed or out-of-order line " +
                                     std::to_string(i) + " in " + path.string());
        amps(i) = hilbert::Complex(re, im);
    }
    return Amplitudes{std::move(amps), norm_flag == 1};
}

} // namespace catgen::amplitude_io
