#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>

#include "mubkit/linalg.hpp"
#include "mubkit/rng.hpp"

namespace testsupport {

using mubkit::Complex;
using mubkit::ComplexMatrix;

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols,
                                   mubkit::RandomStream& rng) {
    ComplexMatrix m(rows, cols);
    for (auto& z : m.entries()) z = rng.next_complex_gaussian();
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t d, mubkit::RandomStream& rng) {
    ComplexMatrix g = random_matrix(d, d, rng);
    ComplexMatrix h(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
        }
    }
    return h;
}

inline ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const Complex& z : row) m(i, j++) = z;
        ++i;
    }
    return m;
}

inline ComplexMatrix pauli_x() { return from_rows({{0.0, 1.0}, {1.0, 0.0}}); }

// unique temp path; cleaned up by the caller or left for the OS
inline std::string temp_path(const std::string& stem) {
    static std::uint64_t counter = 0;
    const auto dir = std::filesystem::temp_directory_path() / "mubkit_tests";
    std::filesystem::create_directories(dir);
    return (dir / (stem + "_" + std::to_string(::getpid()) + "_" +
                   std::to_string(counter++))).string();
}

}  // namespace testsupport
