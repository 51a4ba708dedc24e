// Benchmark comparing the serial reference scans against the OpenMP kernels
// on variety equation checks and axiom scans over larger downset algebras.

#include <chrono>
#include <iostream>

#include "coheyt/variety.hpp"
#include "coheyt/witness.hpp"

using namespace coheyt;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// fence posets p0 < q0 > p1 < q1 > ... give wide, irregular downset algebras
poset_ptr fence(unsigned n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (unsigned i = 0; i < n; ++i) names.push_back((i % 2 ? "q" : "p") + std::to_string(i / 2));
    for (unsigned i = 0; i + 1 < n; ++i) {
        if (i % 2 == 0)
            covers.emplace_back(names[i], names[i + 1]);   // p_k < q_k
        else
            covers.emplace_back(names[i + 1], names[i]);   // p_{k+1} < q_k
    }
    return build_poset(names, covers);
}

poset_ptr chains(unsigned count, unsigned len) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (unsigned k = 0; k < count; ++k)
        for (unsigned i = 0; i < len; ++i) {
            names.push_back("c" + std::to_string(k) + "_" + std::to_string(i));
            if (i > 0) covers.emplace_back(names[names.size() - 2], names.back());
        }
    return build_poset(names, covers);
}

poset_ptr grid(unsigned rows, unsigned cols) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (unsigned r = 0; r < rows; ++r)
        for (unsigned c = 0; c < cols; ++c)
            names.push_back("g" + std::to_string(r) + "_" + std::to_string(c));
    auto at = [&](unsigned r, unsigned c) { return names[r * cols + c]; };
    for (unsigned r = 0; r < rows; ++r)
        for (unsigned c = 0; c < cols; ++c) {
            if (r + 1 < rows) covers.emplace_back(at(r, c), at(r + 1, c));
            if (c + 1 < cols) covers.emplace_back(at(r, c), at(r, c + 1));
        }
    return build_poset(names, covers);
}

struct row {
    const char* what;
    double serial, parallel;
};

void print_row(const row& r) {
    double speedup = r.parallel > 0 ? r.serial / r.parallel : 0.0;
    std::printf("%-34s %9.3fs %9.3fs %6.2fx\n", r.what, r.serial, r.parallel, speedup);
}

}

int main() {
    std::printf("%-34s %10s %10s %7s\n", "kernel", "serial", "openmp", "speedup");

    {
        algebra L(fence(16));
        std::printf("fence(16): %zu elements\n", L.count_elements());
        auto t0 = clock_type::now();
        auto r1 = check_equational(L, variety_tag::V4, scan_mode::serial);
        double s = seconds_since(t0);
        t0 = clock_type::now();
        auto r2 = check_equational(L, variety_tag::V4, scan_mode::parallel);
        double p = seconds_since(t0);
        if (r1.member != r2.member) {
            std::fprintf(stderr, "serial/parallel disagree\n");
            return 1;
        }
        print_row({"V4 equations on fence(16)", s, p});
    }
    {
        algebra L(chains(4, 7));
        std::printf("chains(4x7): %zu elements\n", L.count_elements());
        auto t0 = clock_type::now();
        auto r1 = check_equational(L, variety_tag::V6, scan_mode::serial);
        double s = seconds_since(t0);
        t0 = clock_type::now();
        auto r2 = check_equational(L, variety_tag::V6, scan_mode::parallel);
        double p = seconds_since(t0);
        if (r1.member != r2.member) {
            std::fprintf(stderr, "serial/parallel disagree\n");
            return 1;
        }
        print_row({"V6 equations on chains(4x7)", s, p});
    }
    {
        algebra L(fence(9));
        std::printf("fence(9): %zu elements\n", L.count_elements());
        auto t0 = clock_type::now();
        auto r1 = check_splitting(L, 1, scan_mode::serial);
        double s = seconds_since(t0);
        t0 = clock_type::now();
        auto r2 = check_splitting(L, 1, scan_mode::parallel);
        double p = seconds_since(t0);
        if (r1.holds != r2.holds || r1.instances.size() != r2.instances.size()) {
            std::fprintf(stderr, "serial/parallel disagree\n");
            return 1;
        }
        print_row({"S1 axiom scan on fence(9)", s, p});
    }
    {
        algebra L(fence(13));
        std::printf("fence(13): %zu elements\n", L.count_elements());
        auto t0 = clock_type::now();
        auto r1 = check_density(L, 1, scan_mode::serial);
        double s = seconds_since(t0);
        t0 = clock_type::now();
        auto r2 = check_density(L, 1, scan_mode::parallel);
        double p = seconds_since(t0);
        if (r1.holds != r2.holds) {
            std::fprintf(stderr, "serial/parallel disagree\n");
            return 1;
        }
        print_row({"D1 axiom scan on fence(13)", s, p});
    }
    return 0;
}
