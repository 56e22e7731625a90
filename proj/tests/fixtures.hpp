#pragma once

#include "cubix/models.hpp"

// Shared fixtures, built once per process. All come out of cube_nerve fully
// validated; tests that need a broken structure make their own copy.
namespace fx {

inline const cubix::SingleSetStructure& pair2() {
  static const auto s =
      cubix::cube_nerve(cubix::BaseKind::pair_groupoid, 2, 2, true);
  return s;
}

inline const cubix::SingleSetStructure& pair3() {
  static const auto s =
      cubix::cube_nerve(cubix::BaseKind::pair_groupoid, 2, 3, true);
  return s;
}

inline const cubix::SingleSetStructure& chain2() {
  static const auto s =
      cubix::cube_nerve(cubix::BaseKind::chain_poset, 2, 2, true);
  return s;
}

inline const cubix::SingleSetStructure& discrete2() {
  static const auto s =
      cubix::cube_nerve(cubix::BaseKind::discrete, 2, 2, true);
  return s;
}

// One object, one arrow; every level of the nerve is a point.
inline const cubix::SingleSetStructure& terminal3() {
  static const auto s =
      cubix::cube_nerve(cubix::BaseKind::discrete, 1, 3, true);
  return s;
}

inline cubix::Cell by_name(const cubix::SingleSetStructure& s,
                           const std::string& name) {
  for (cubix::Cell x = 0; x < s.size(); ++x)
    if (s.names[x] == name) return x;
  return cubix::no_cell;
}

}  // namespace fx
