#include "doctest.h"
#include "lie/parallel.hpp"
#include "lie/repchar.hpp"

using namespace lie;

TEST_CASE("parallel kernels agree with the serial references exactly") {
  for (auto& [desc, hw] : std::vector<std::pair<std::string, IVec>>{
           {"A2sc", {4, 3}},
           {"B3sc", {1, 1, 1}},
           {"C3sc", {2, 0, 1}},
           {"D4sc", {1, 0, 1, 0}},
           {"E7sc", {0, 0, 0, 0, 0, 0, 1}},
       }) {
    CAPTURE(desc);
    RootDatum d = RootDatum::parse(desc);
    CHECK(dominant_weight_multiplicities(d, hw) ==
          dominant_weight_multiplicities_serial(d, hw));
    auto chi = irrep_character(d, hw);
    auto p = tensor(chi, chi);
    auto s = tensor_serial(chi, chi);
    CHECK(p.mults == s.mults);
    // repeated parallel runs are bitwise identical
    CHECK(tensor(chi, chi).mults == p.mults);
  }
}

TEST_CASE("thread count is positive") { CHECK(max_threads() >= 1); }
