#include "braid/io.hpp"

#include <fstream>
#include <sstream>

#include "braid/errors.hpp"

namespace braid {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupFile parse_group_text(const std::string& text) {
  GroupFile out;
  std::istringstream in(text);
  std::string line;
  bool have_degree = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!have_degree) {
      std::istringstream words(line);
      std::string key;
      long long n = -1;
      words >> key >> n;
      if (key != "degree" || n <= 0 || !words.eof()) {
        throw InputError("group file must start with \"degree n\", got \"" + line + "\"");
      }
      out.degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    out.generators.push_back(parse_permutation(line, out.degree));
  }
  if (!have_degree) throw InputError("group file has no degree line");
  if (out.generators.empty()) throw InputError("group file has no generators");
  return out;
}

GroupFile read_group_file(const std::filesystem::path& path) {
  return parse_group_text(read_text(path));
}

Group load_group(const std::filesystem::path& path, GroupOptions options) {
  GroupFile f = read_group_file(path);
  return Group(f.degree, std::move(f.generators), path.stem().string(), std::move(options));
}

}  // namespace braid
