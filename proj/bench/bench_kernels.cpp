// Times the serial reference kernels against their OpenMP counterparts.
//
//   bench_kernels [repeats]

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "filterlab/axioms.hpp"
#include "filterlab/enumerate.hpp"
#include "filterlab/kernels.hpp"

using filterlab::kernels::Exec;

namespace {

template <class F>
double best_seconds(int repeats, F&& f)
{
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void report(const std::string& name, double serial, double parallel, bool agree)
{
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed
              << std::setprecision(6) << std::setw(12) << serial << std::setw(12) << parallel
              << std::setw(9) << std::setprecision(2) << serial / parallel << "x"
              << (agree ? "" : "   MISMATCH") << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    std::cout << "threads: " << omp_get_max_threads() << "\n";
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12)
              << "serial[s]" << std::setw(12) << "omp[s]" << std::setw(10) << "speedup"
              << "\n";

    // Intersection-closure scan over a principal filter on 14 points (8192 members).
    {
        const std::size_t n = 14;
        std::vector<std::uint64_t> members;
        for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
            if (u & 1U) {
                members.push_back(u);
            }
        }
        std::optional<std::pair<std::size_t, std::size_t>> s, p;
        const double ts = best_seconds(repeats, [&] {
            s = filterlab::kernels::first_unclosed_pair(members, Exec::serial);
        });
        const double tp = best_seconds(repeats, [&] {
            p = filterlab::kernels::first_unclosed_pair(members, Exec::parallel);
        });
        report("first_unclosed_pair (n=14)", ts, tp, s == p);
    }

    // Upward closure of 64 random generators on 20 points.
    {
        const std::size_t n = 20;
        std::mt19937_64 rng(7);
        std::vector<std::uint64_t> base(64);
        for (auto& b : base) {
            b = rng() & ((std::uint64_t{1} << n) - 1);
        }
        std::vector<std::uint64_t> s, p;
        const double ts = best_seconds(repeats, [&] {
            s = filterlab::kernels::upward_closure(base, n, Exec::serial);
        });
        const double tp = best_seconds(repeats, [&] {
            p = filterlab::kernels::upward_closure(base, n, Exec::parallel);
        });
        report("upward_closure (n=20, |B|=64)", ts, tp, s == p);
    }

    // Subfamily oracle on 20 members sharing element 0.
    {
        std::mt19937_64 rng(11);
        std::vector<std::uint64_t> members(20);
        for (auto& m : members) {
            m = (rng() & 0xFFFF) | 1U;
        }
        bool s = false, p = false;
        const double ts = best_seconds(repeats, [&] {
            s = filterlab::kernels::all_subfamilies_intersect(members, 16, Exec::serial);
        });
        const double tp = best_seconds(repeats, [&] {
            p = filterlab::kernels::all_subfamilies_intersect(members, 16, Exec::parallel);
        });
        report("all_subfamilies_intersect (|G|=20)", ts, tp, s == p);
    }

    // Exhaustive sweep of all 65536 families over 4 points.
    {
        const filterlab::Universe universe = filterlab::Universe::numbered(4);
        auto is_filter_code = [&](std::uint64_t code) {
            return filterlab::is_filter(filterlab::family_from_code(code, 4), universe).verdict();
        };
        std::vector<std::uint64_t> s, p;
        const double ts = best_seconds(repeats, [&] {
            s = filterlab::kernels::sweep_families(4, is_filter_code, Exec::serial);
        });
        const double tp = best_seconds(repeats, [&] {
            p = filterlab::kernels::sweep_families(4, is_filter_code, Exec::parallel);
        });
        report("sweep_families is_filter (n=4)", ts, tp, s == p);
    }
    return 0;
}
