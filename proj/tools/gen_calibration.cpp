// Writes the (d, c) -> isomorphism-class table consumed by recognize_toric.
// Usage: cstar_gen_calibration <max_d> <output header>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "cstar/toric/toric.hpp"

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: " << argv[0] << " <max_d> <output>\n";
        return 1;
    }
    const long max_d = std::atol(argv[1]);
    std::map<std::pair<long, long>, long> table;
    for (long d = 1; d <= max_d; ++d) {
        std::set<long> classes;
        for (const auto& entry : cstar::calibrate(d)) {
            auto [it, inserted] = table.try_emplace({d, entry.c}, entry.e);
            if (!inserted && it->second != entry.e) {
                std::cerr << "d=" << d << " c=" << entry.c << " maps to both e=" << it->second << " and e="
                          << entry.e << "\n";
                return 2;
            }
            classes.insert(entry.e);
        }
        std::size_t cs = 0;
        for (const auto& [key, e] : table)
            cs += key.first == d;
        if (cs != classes.size()) {
            std::cerr << "d=" << d << ": " << classes.size() << " classes but " << cs << " normal forms\n";
            return 2;
        }
    }

    std::ofstream out(argv[2]);
    out << "#pragma once\n\n// Generated by cstar_gen_calibration. Do not edit by hand.\n\n#include <array>\n\n"
           "namespace cstar {\n\n"
           "/// Lattice normal form (d, c) of extract_dpd(V_{d,e}) and the isomorphism-class\n"
           "/// representative e = min(e, e^-1 mod d).\n"
           "struct CalibrationEntry {\n    long d;\n    long c;\n    long e;\n};\n\n"
        << "inline constexpr long kCalibrationMaxD = " << max_d << ";\n\n"
        << "inline constexpr std::array<CalibrationEntry, " << table.size() << "> kCalibrationTable{{\n";
    for (const auto& [key, e] : table)
        out << "    {" << key.first << ", " << key.second << ", " << e << "},\n";
    out << "}};\n\n}  // namespace cstar\n";
    return out ? 0 : 3;
}
