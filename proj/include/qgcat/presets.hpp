#pragma once

#include "qgcat/category.hpp"
#include "qgcat/partitions.hpp"

#include <string>
#include <vector>

namespace qgcat {

// Named easy categories on the identity frame:
//   O+  the pair on "ww"                      (noncrossing pairings)
//   U+  no generators                         (coloured noncrossing pairings)
//   B+  the pair and the singleton on "w"     (noncrossing pairs and singletons)
//   S+  every noncrossing partition on at most four points
std::vector<std::string> preset_names();
bool is_preset(const std::string& name);
// Throws ParseError for unknown names.
std::vector<Partition> preset_partitions(const std::string& name);
std::vector<FixGenerator> preset_generators(const std::string& name, int N);
// Fix-space generators spanned by the one-row forms of the partitions.
std::vector<FixGenerator> partition_generators(const std::vector<Partition>& parts, int N);

}  // namespace qgcat
