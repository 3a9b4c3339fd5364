// Long-running target: rref_search for a rank-7 CPD of <2,2,2> over GF(2).
// Worst case 2^36 tail assignments times 2^4 row vectors. Not run by ctest.
//
//   mm222_rank7 [threads]

#include "tcpd/search.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace tcpd;
    const PrimeField f(2);
    const auto t = mm_tensor(2, 2, 2, f);
    SearchOptions opts;
    opts.threads = argc > 1 ? static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10)) : 1;
    opts.progress_interval = 1u << 20;
    const auto start = std::chrono::steady_clock::now();
    opts.progress = [&](std::uint64_t done, std::uint64_t total) {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "progress: " << done << "/" << total << " tails, " << s << "s\n";
    };
    const auto out = rref_search(t, 7, opts);
    std::cout << (out.found() ? "found" : "exhausted") << " after " << out.stats.tail_assignments_processed
              << " tail assignments, " << out.stats.pairs_inspected << " pairs\n";
    return 0;
}
