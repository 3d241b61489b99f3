#pragma once

#include <filesystem>
#include <string>

#include "catgen/hilbert.hpp"

namespace catgen::amplitude_io {

// Plain-text amplitude files:
//   # dim=<D> normalized=<0|1>
//   <index> <re> <im>         one line per basis index, 0..D-1 in order
// Floats are written with 17 significant digits, so a write/read round trip
// reproduces every double bit-exactly.

struct Amplitudes {
    hilbert::Vector amps;
    bool normalized;
};

void write_amplitudes(const std::filesystem::path& path, const hilbert::Vector& amps,
                      bool normalized);
Amplitudes read_amplitudes(const std::filesystem::path& path);

inline void write_field(const std::filesystem::path& path, const hilbert::FieldVector& v) {
    write_amplitudes(path, v.amps, v.normalized);
}

inline void write_joint(const std::filesystem::path& path, const hilbert::AtomFieldVector& v) {
    write_amplitudes(path, v.amps, v.normalized);
}

} // namespace catgen::amplitude_io
