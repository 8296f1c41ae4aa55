// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "filterlab/axioms.hpp"
#include "filterlab/cofinite.hpp"
#include "filterlab/construct.hpp"
#include "filterlab/enumerate.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace filterlab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

constexpr int kRandomTrials = 1000;
constexpr double kCensusSeconds = 5.0;

std::vector<SubsetFamily> random_fip_families(std::uint64_t seed, int count, std::size_t max_n,
                                              std::size_t max_size)
{
    std::mt19937_64 rng(seed);
    std::vector<SubsetFamily> out;
    for (int k = 0; k < count; ++k) {
        const std::size_t n = 1 + rng() % max_n;
        out.push_back(oracle::random_fip_family(rng, n, 1 + rng() % max_size));
    }
    return out;
}

Outcome filter_census()
{
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t n = 1; n <= 8; ++n) {
        const Universe u = Universe::numbered(n);
        const auto filters = enumerate_filters(u);
        const auto ultras = enumerate_ultrafilters(u);
        if (filters.count != (std::size_t{1} << n) - 1 || ultras.count != n) {
            return {false, "wrong count at n=" + std::to_string(n)};
        }
        if (n <= 3 && enumerate_filters_bruteforce(u).families != filters.families) {
            return {false, "brute-force sweep disagrees at n=" + std::to_string(n)};
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= kCensusSeconds) {
        return {false, "took " + std::to_string(secs) + " s"};
    }
    return {true, "n=1..8, " + std::to_string(secs) + " s"};
}

Outcome equivalence()
{
    std::size_t disagreements = 0;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const Universe u = Universe::numbered(n);
        const auto bad = kernels::sweep_families(n, [&](std::uint64_t code) {
            const auto f = family_from_code(code, n);
            return is_ultrafilter(f, u).verdict() != is_max_filter(f, u).verdict();
        });
        disagreements += bad.size();
        checked += kernels::family_count(n);
    }
    const Universe u4 = Universe::numbered(4);
    for (const auto& f : enumerate_filters(u4).families) {
        disagreements += is_ultrafilter(f, u4).verdict() != is_max_filter(f, u4).verdict();
        ++checked;
    }
    return {disagreements == 0,
            std::to_string(checked) + " families, " + std::to_string(disagreements) +
                " disagreements"};
}

// Bases produced by criterion 3, reused by criterion 4.
std::vector<std::pair<SubsetFamily, Universe>> produced_bases;

Outcome base_closure()
{
    std::size_t failures = 0;
    const auto families = random_fip_families(1001, kRandomTrials, 6, 8);
    for (const auto& g : families) {
        const Universe u = Universe::numbered(g.width());
        const auto base = base_from_family(g);
        if (!base.includes(g) || !is_filter_base(base, u)) {
            ++failures;
        }
        produced_bases.emplace_back(base, u);
    }
    return {failures == 0, std::to_string(families.size()) + " families, " +
                               std::to_string(failures) + " failures"};
}

Outcome filter_from_bases()
{
    auto cases = produced_bases;
    for (std::size_t n = 1; n <= 3; ++n) {
        const Universe u = Universe::numbered(n);
        for (auto code : kernels::sweep_families(n, [&](std::uint64_t c) {
                 return is_filter_base(family_from_code(c, n), u).verdict();
             })) {
            cases.emplace_back(family_from_code(code, n), u);
        }
    }
    std::size_t failures = 0;
    for (const auto& [base, u] : cases) {
        const auto f = filter_from_base(base, u);
        if (!f.includes(base) || !is_filter(f, u)) {
            ++failures;
        }
    }
    return {failures == 0,
            std::to_string(cases.size()) + " bases, " + std::to_string(failures) + " failures"};
}

Outcome fep_suite()
{
    const auto families = random_fip_families(5005, kRandomTrials, 8, 8);
    std::size_t failures = 0;
    std::vector<SubsetFamily> first, second;
    for (int run = 0; run < 2; ++run) {
        auto& results = run == 0 ? first : second;
        for (const auto& g : families) {
            const Universe u = Universe::numbered(g.width());
            results.push_back(fep(g, u));
            if (run == 0) {
                const auto& f = results.back();
                if (!f.includes(g) || !is_ultrafilter(f, u) || !is_principal(f, u)) {
                    ++failures;
                }
            }
        }
    }
    const bool deterministic = first == second;
    return {failures == 0 && deterministic,
            std::to_string(families.size()) + " families, " + std::to_string(failures) +
                " failures, " + (deterministic ? "deterministic" : "NOT deterministic")};
}

Outcome degenerate_frechet()
{
    for (std::size_t n = 1; n <= 6; ++n) {
        const Universe u = Universe::numbered(n);
        const auto f = frechet_finite(u);
        const auto r = is_filter(f, u);
        if (f != powerset_family(u) || r || r.failed_axiom() != AxiomTag::EmptyMember) {
            return {false, "n=" + std::to_string(n)};
        }
    }
    return {true, "n=1..6"};
}

Outcome no_free_ultrafilter()
{
    std::size_t checked = 0;
    std::size_t exceptions = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const Universe u = Universe::numbered(n);
        const auto codes = kernels::sweep_families(n, [&](std::uint64_t c) {
            return is_ultrafilter(family_from_code(c, n), u).verdict();
        });
        if (codes.size() != n) {
            return {false, "found " + std::to_string(codes.size()) + " ultrafilters at n=" +
                               std::to_string(n)};
        }
        for (auto code : codes) {
            const auto f = family_from_code(code, n);
            const auto r = is_free_ultrafilter(f, u);
            ++checked;
            if (r || r.failed_axiom() != AxiomTag::FiniteMember || r.witness()->size() != 1 ||
                !f.contains(r.witness()->front())) {
                ++exceptions;
            }
        }
    }
    return {exceptions == 0, std::to_string(checked) + " ultrafilters, " +
                                 std::to_string(exceptions) + " exceptions"};
}

Outcome cofinite_frechet()
{
    std::mt19937_64 rng(8008);
    std::size_t failures = 0;
    constexpr int batch = 20;
    std::vector<CofiniteSet> sets;
    for (int k = 0; k < kRandomTrials; ++k) {
        std::vector<std::uint64_t> support(rng() % 8);
        for (auto& x : support) {
            x = rng() % 64;
        }
        sets.push_back(rng() % 2 ? CofiniteSet::finite(support) : CofiniteSet::cofinite(support));
    }
    for (std::size_t start = 0; start < sets.size(); start += batch) {
        const std::span<const CofiniteSet> slice(sets.data() + start,
                                                 std::min<std::size_t>(batch, sets.size() - start));
        if (!frechet_axiom_suite(slice)) {
            ++failures;
        }
    }
    for (const auto& s : sets) {
        if (s.is_finite() && frechet_contains(s)) {
            ++failures;
        }
        if (frechet_contains(s) == frechet_contains(cof_complement(s))) {
            ++failures;
        }
    }
    return {failures == 0,
            std::to_string(sets.size()) + " sets, " + std::to_string(failures) + " failures"};
}

Outcome fip_oracle()
{
    std::size_t disagreements = 0;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::uint64_t code = 0; code < kernels::family_count(n); ++code) {
            const auto f = family_from_code(code, n);
            disagreements += has_fip(f) != has_fip_oracle(f);
            ++checked;
        }
    }
    std::mt19937_64 rng(909);
    for (int k = 0; k < kRandomTrials; ++k) {
        const std::size_t n = 1 + rng() % 10;
        const std::size_t size = rng() % 13;
        const auto f = k % 2 == 0 ? oracle::random_family(rng, n, size)
                                  : oracle::random_fip_family(rng, n, size);
        disagreements += has_fip(f) != has_fip_oracle(f);
        ++checked;
    }
    return {disagreements == 0, std::to_string(checked) + " families, " +
                                    std::to_string(disagreements) + " disagreements"};
}

Outcome cli_golden()
{
    const std::string dir = FILTERLAB_GOLDEN_DIR;
    const std::vector<std::string> fixtures{"trivial_filter", "principal", "fip_pair",
                                            "fip_violating", "cofinite_sample"};
    std::size_t run = 0;
    std::size_t failures = 0;
    for (const auto& c : golden::load_cases(dir)) {
        const bool fixture_case =
            std::any_of(fixtures.begin(), fixtures.end(),
                        [&](const std::string& f) { return c.name.starts_with(f + "."); });
        if (!fixture_case) {
            continue;
        }
        const auto a = golden::run_case(c, dir);
        const auto b = golden::run_case(c, dir);
        ++run;
        if (a.exit_code != c.expected_exit || b.exit_code != c.expected_exit ||
            a.out != b.out || a.err != b.err || a.out != golden::read(c.expected_out) ||
            a.err != golden::read(c.expected_err)) {
            ++failures;
            std::printf("      golden mismatch: %s\n", c.name.c_str());
        }
    }
    return {failures == 0 && run > 0,
            std::to_string(run) + " fixture runs, " + std::to_string(failures) + " mismatches"};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 filter census", filter_census},
        {"2 ultrafilter/maximal equivalence", equivalence},
        {"3 filter base from FIP family", base_closure},
        {"4 filter from base", filter_from_bases},
        {"5 extension to ultrafilter", fep_suite},
        {"6 degenerate finite Frechet family", degenerate_frechet},
        {"7 no free ultrafilter on finite sets", no_free_ultrafilter},
        {"8 cofinite Frechet axioms", cofinite_frechet},
        {"9 FIP oracle agreement", fip_oracle},
        {"10 CLI golden files", cli_golden},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %-40s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
