#include "charvan/groupfile.hpp"

#include "charvan/error.hpp"

#include <fstream>
#include <sstream>

namespace charvan {

namespace {

std::string strip_line(const std::string& raw) {
  std::string line = raw;
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

} // namespace

GroupFile parse_group_text(const std::string& text, const Limits& lim) {
  GroupFile gf;
  std::uint32_t degree = 0;
  bool have_degree = false;
  std::vector<Perm> ambient;
  std::vector<std::pair<std::string, std::vector<Perm>>> blocks;
  int current = -1; // -1 = ambient

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_line(raw);
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) {
      input_error("group file line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated block header");
      std::string inner = strip_line(line.substr(1, line.size() - 2));
      if (inner.rfind("normal", 0) != 0) fail("unknown block '" + inner + "'");
      std::string id = strip_line(inner.substr(6));
      if (id.empty()) fail("normal block needs an id");
      blocks.emplace_back(id, std::vector<Perm>{});
      current = static_cast<int>(blocks.size()) - 1;
      continue;
    }
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    rest = strip_line(rest);
    if (key == "name") {
      if (rest.empty()) fail("name needs a value");
      gf.name = rest;
    } else if (key == "degree") {
      try {
        degree = static_cast<std::uint32_t>(std::stoul(rest));
      } catch (const std::exception&) {
        fail("bad degree '" + rest + "'");
      }
      if (degree == 0) fail("degree must be positive");
      have_degree = true;
    } else if (key == "gen") {
      if (!have_degree) fail("gen before degree");
      Perm p = parse_perm(rest, degree);
      if (current < 0)
        ambient.push_back(std::move(p));
      else
        blocks[current].second.push_back(std::move(p));
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!have_degree) input_error("group file: missing degree");
  if (ambient.empty()) input_error("group file: no ambient generators");
  if (gf.name.empty()) input_error("group file: missing name");
  gf.group = PermGroup::generated(ambient, lim);
  for (auto& [id, gens] : blocks) {
    PermGroup h = gens.empty() ? PermGroup::trivial(degree)
                               : PermGroup::generated(gens, lim);
    if (!is_normal(gf.group, h))
      input_error("group file: block '" + id + "' is not a normal subgroup");
    gf.normals.emplace_back(id, std::move(h));
  }
  return gf;
}

GroupFile load_group_file(const std::string& path, const Limits& lim) {
  std::ifstream in(path);
  if (!in) input_error("cannot open group file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), lim);
}

std::string group_file_text(const std::string& name, const PermGroup& g,
                            const std::vector<std::pair<std::string, PermGroup>>& normals) {
  std::ostringstream os;
  os << "name " << name << "\n";
  os << "degree " << g.degree() << "\n";
  for (const Perm& p : g.generators()) os << "gen " << cycle_string(p) << "\n";
  for (const auto& [id, h] : normals) {
    os << "[normal " << id << "]\n";
    for (const Perm& p : h.generators()) os << "gen " << cycle_string(p) << "\n";
  }
  return os.str();
}

} // namespace charvan
