// Times the serial reference scans against the OpenMP-sharded ones and
// checks that both produce identical results.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "fortdyn/scan.hpp"

namespace {

template <class Fn>
double time_it(Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace fortdyn::scan;
    int m = argc > 1 ? std::atoi(argv[1]) : 6;
    int jobs = argc > 2 ? std::atoi(argv[2]) : 4;
    if (m < 1 || m > 7 || jobs < 1) {
        std::cerr << "usage: bench_scan [m<=7] [jobs]\n";
        return 2;
    }

    SelfmapScan seq_serial, seq_parallel;
    double t1 = time_it([&] { seq_serial = scan_selfmap_sequences_serial(m); });
    double t2 = time_it([&] { seq_parallel = scan_selfmap_sequences_parallel(m, jobs); });
    bool seq_match = seq_serial.sequences == seq_parallel.sequences &&
                     seq_serial.full_length == seq_parallel.full_length &&
                     seq_serial.systems_scanned == seq_parallel.systems_scanned;
    std::cout << "selfmap sequences  m=" << m << "  systems=" << seq_serial.systems_scanned
              << "\n  serial   " << t1 << "s\n  parallel " << t2 << "s  (jobs=" << jobs
              << ", speedup " << (t2 > 0 ? t1 / t2 : 0) << "x)\n  results "
              << (seq_match ? "identical" : "DIFFER") << "\n";

    int hm = std::min(m, 5);
    HeightEquivalenceScan h_serial, h_parallel;
    double t3 = time_it([&] { h_serial = scan_height_equivalence_serial(hm); });
    double t4 = time_it([&] { h_parallel = scan_height_equivalence_parallel(hm, jobs); });
    bool h_match = h_serial.systems_scanned == h_parallel.systems_scanned &&
                   h_serial.subsets_checked == h_parallel.subsets_checked &&
                   h_serial.counterexample == h_parallel.counterexample;
    std::cout << "height equivalence m=" << hm << "  systems=" << h_serial.systems_scanned
              << "  subsets=" << h_serial.subsets_checked << "\n  serial   " << t3
              << "s\n  parallel " << t4 << "s  (jobs=" << jobs << ", speedup "
              << (t4 > 0 ? t3 / t4 : 0) << "x)\n  results " << (h_match ? "identical" : "DIFFER")
              << "\n";

    return seq_match && h_match ? 0 : 1;
}
