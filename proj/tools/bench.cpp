#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "lrcrystal/graded.hpp"

// Times the parallel graded-multiplicity kernel against the serial reference.
int main() {
  using clock = std::chrono::steady_clock;
  struct Case {
    std::string name;
    lrc::Partition nu;
    lrc::SymPair pair;
  };
  std::vector<Case> cases = {
      {"O6 nu=(4,4)", lrc::Partition{{4, 4, 0, 0, 0, 0}}, {lrc::PairKind::O, 6}},
      {"O8 nu=(4,2,2)", lrc::Partition{{4, 2, 2, 0, 0, 0, 0, 0}}, {lrc::PairKind::O, 8}},
      {"O8 nu=(4,4,2,2)", lrc::Partition{{4, 4, 2, 2, 0, 0, 0, 0}}, {lrc::PairKind::O, 8}},
      {"Sp8 nu=(3,3,1,1)",
       lrc::Partition{{3, 3, 1, 1, 0, 0, 0, 0}},
       {lrc::PairKind::Sp, 4}},
      {"Sp10 nu=(3,3,2,2,2)",
       lrc::Partition{{3, 3, 2, 2, 2, 0, 0, 0, 0, 0}},
       {lrc::PairKind::Sp, 5}},
  };
  std::cout << "case                  serial_ms  parallel_ms  speedup\n";
  for (const auto& c : cases) {
    auto t0 = clock::now();
    lrc::GradedPoly serial = lrc::graded_multiplicity_serial(c.nu, c.pair);
    auto t1 = clock::now();
    lrc::GradedPoly parallel = lrc::graded_multiplicity(c.nu, c.pair);
    auto t2 = clock::now();
    if (!(serial == parallel)) {
      std::cerr << "mismatch on " << c.name << "\n";
      return 1;
    }
    double ms_serial = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double ms_parallel = std::chrono::duration<double, std::milli>(t2 - t1).count();
    std::printf("%-20s %10.2f %12.2f %8.2f\n", c.name.c_str(), ms_serial, ms_parallel,
                ms_parallel > 0 ? ms_serial / ms_parallel : 0.0);
  }
  return 0;
}
