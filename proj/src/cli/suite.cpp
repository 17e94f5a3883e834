#include "displace/cli/suite.hpp"

#include <sstream>

#include "displace/core/errors.hpp"
#include "suite_util.hpp"

namespace displace {

const std::vector<Suite>& suite_registry() {
  static const std::vector<Suite> registry = [] {
    using namespace suites;
    return std::vector<Suite>{
        wreath_cznc_suite(),   wreath_converse_suite(), torsion_suite(),       hall_analogue_suite(),
        prime_towers_suite(),  gl_block_suite(),        gl_centralizer_suite(), gl_z2_suite(),
        pl_tower_suite(),      fixed_point_suite(),     m_implies_czc_suite(), britton_suite(),
        bass_serre_suite(),    binate_tower_suite(),    mitosis_suite(),       product_cc_suite(),
    };
  }();
  return registry;
}

Suite find_suite(const std::string& name) {
  if (name == "all") {
    Suite all{"all", "every suite", {}};
    for (const auto& suite : suite_registry()) {
      for (CheckSpec c : suite.checks) {
        c.id = suite.name + "/" + c.id;
        all.checks.push_back(std::move(c));
      }
    }
    return all;
  }
  for (const auto& suite : suite_registry()) {
    if (suite.name == name) return suite;
  }
  throw InvalidArgument("unknown suite '" + name + "' (try --list)");
}

std::string list_suites() {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& suite : suite_registry()) width = std::max(width, suite.name.size());
  for (const auto& suite : suite_registry()) {
    out << suite.name << std::string(width + 2 - suite.name.size(), ' ') << suite.description << '\n';
  }
  return out.str();
}

}  // namespace displace
