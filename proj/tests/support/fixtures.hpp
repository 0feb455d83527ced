#pragma once
// Helpers for loading the bundled .cox systems in tests.

#include <string>

#include "cox/matrix.hpp"
#include "cox/system.hpp"

namespace coxtest {

inline std::string fixture_path(const std::string& name) {
  return std::string(COX_FIXTURE_DIR) + "/" + name;
}

inline cox::CoxeterMatrix load_matrix(const std::string& name) {
  return cox::CoxeterMatrix::parse_file(fixture_path(name));
}

inline cox::CoxeterSystem load_system(const std::string& name) {
  return cox::CoxeterSystem(load_matrix(name));
}

}  // namespace coxtest
