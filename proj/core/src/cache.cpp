#include "charvan/cache.hpp"

#include "charvan/error.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace charvan {

std::string group_cache_key(const PermGroup& g) {
  std::vector<std::vector<std::uint32_t>> gens;
  for (const Perm& p : g.generators()) gens.push_back(p.images());
  std::sort(gens.begin(), gens.end());

  std::string bytes;
  bytes.push_back(static_cast<char>(CharacterTable::json_version));
  auto put_u32 = [&](std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8)
      bytes.push_back(static_cast<char>((v >> shift) & 0xff));
  };
  put_u32(g.degree());
  for (const auto& images : gens)
    for (std::uint32_t v : images) put_u32(v);

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    internal_error("SHA-256 digest failed");
  std::ostringstream os;
  os << std::hex;
  for (unsigned int i = 0; i < len; ++i) {
    os.width(2);
    os.fill('0');
    os << static_cast<int>(digest[i]);
  }
  return os.str();
}

namespace {

std::filesystem::path cache_path(const std::string& dir, const PermGroup& g) {
  return std::filesystem::path(dir) / (group_cache_key(g) + ".json");
}

} // namespace

std::optional<CharacterTable> load_cached_table(const std::string& dir,
                                                const PermGroup& g,
                                                std::shared_ptr<const ClassData> cd) {
  std::ifstream in(cache_path(dir, g));
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return CharacterTable::from_json(buf.str(), std::move(cd));
}

void store_cached_table(const std::string& dir, const PermGroup& g,
                        const CharacterTable& table, const std::string& name) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) input_error("cannot create cache directory '" + dir + "'");
  std::ofstream out(cache_path(dir, g));
  if (!out) input_error("cannot write cache file under '" + dir + "'");
  out << table.to_json(name);
}

} // namespace charvan
