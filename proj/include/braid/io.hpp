#ifndef BRAID_IO_HPP
#define BRAID_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "braid/group.hpp"

namespace braid {

// Group file: optional '#' comment lines, "degree n", then one generator per
// line in cycle or image-list notation.
struct GroupFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

GroupFile parse_group_text(const std::string& text);
GroupFile read_group_file(const std::filesystem::path& path);
Group load_group(const std::filesystem::path& path, GroupOptions options = {});

std::string read_text(const std::filesystem::path& path);

}  // namespace braid

#endif
