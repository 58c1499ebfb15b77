#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hallforge {

/// A finite quiver together with the field size and the nilpotency flag for
/// its representation category.
struct QuiverSpec {
  int vertices = 1;
  std::vector<std::pair<int, int>> arrows;  // (source, target)
  bool nilpotent = false;
  int q = 2;

  bool has_oriented_cycle() const;
  /// Throws std::invalid_argument on bad vertex indices, non-prime q, or a
  /// cyclic quiver without the nilpotent flag.
  void validate() const;
};

/// Presets "a1" (one vertex, no arrows), "a2" (1 -> 2) and "jordan"
/// (one vertex, one loop, nilpotent).
QuiverSpec preset_quiver(const std::string& name, int q);

QuiverSpec quiver_from_json_text(const std::string& text);
std::string quiver_to_json_text(const QuiverSpec& spec);

}  // namespace hallforge
