#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charvan/cache.hpp"
#include "charvan/error.hpp"
#include "charvan/groupfile.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace charvan;

namespace {

const char* sample = R"(# sample definition
name S4
degree 4
gen (1 2)
gen (1 2 3 4)

[normal A4]
gen (1 2 3)
gen (2 3 4)
[normal V4]
gen (1 2)(3 4)
gen   (1 3)(2 4)   # trailing comment
)";

} // namespace

TEST_CASE("group file parsing") {
  GroupFile gf = parse_group_text(sample);
  CHECK(gf.name == "S4");
  CHECK(gf.group.order() == 24);
  REQUIRE(gf.normal("A4") != nullptr);
  CHECK(gf.normal("A4")->order() == 12);
  CHECK(gf.normal("V4")->order() == 4);
  CHECK(gf.normal("nope") == nullptr);
}

TEST_CASE("group file errors") {
  CHECK_THROWS_AS(parse_group_text("degree 3\ngen (1 2)\n"), Error); // no name
  CHECK_THROWS_AS(parse_group_text("name X\ngen (1 2)\n"), Error);   // gen before degree
  CHECK_THROWS_AS(parse_group_text("name X\ndegree 3\n"), Error);    // no generators
  CHECK_THROWS_AS(parse_group_text("name X\ndegree 3\ngen (1 5)\n"), Error);
  CHECK_THROWS_AS(parse_group_text("name X\ndegree 3\nfoo bar\n"), Error);
  // a block that is not normal is rejected
  CHECK_THROWS_AS(parse_group_text("name X\ndegree 4\ngen (1 2)\ngen (1 2 3 4)\n"
                                   "[normal H]\ngen (1 2)\n"),
                  Error);
}

TEST_CASE("group file writer round trip") {
  GroupFile gf = parse_group_text(sample);
  std::string text = group_file_text(gf.name, gf.group, gf.normals);
  GroupFile back = parse_group_text(text);
  CHECK(back.name == gf.name);
  CHECK(back.group.order() == gf.group.order());
  CHECK(back.group.elements() == gf.group.elements());
  REQUIRE(back.normal("V4") != nullptr);
  CHECK(back.normal("V4")->elements() == gf.normal("V4")->elements());
}

TEST_CASE("cache keys depend on the generator set, not its order") {
  PermGroup a = PermGroup::generated({parse_perm("(1 2)", 4), parse_perm("(1 2 3 4)", 4)});
  PermGroup b = PermGroup::generated({parse_perm("(1 2 3 4)", 4), parse_perm("(1 2)", 4)});
  CHECK(group_cache_key(a) == group_cache_key(b));
  PermGroup c = PermGroup::generated({parse_perm("(1 3)", 4), parse_perm("(1 2 3 4)", 4)});
  CHECK(group_cache_key(a) != group_cache_key(c));
  CHECK(group_cache_key(a).size() == 64); // sha-256 hex
}

TEST_CASE("table cache round trip and version checks") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "charvan_cache_test";
  fs::remove_all(dir);

  GroupFile gf = parse_group_text(sample);
  auto cd = ClassData::compute(gf.group);
  CharacterTable t = CharacterTable::dixon(cd);

  CHECK_FALSE(load_cached_table(dir.string(), gf.group, cd).has_value());
  store_cached_table(dir.string(), gf.group, t, "S4");
  auto loaded = load_cached_table(dir.string(), gf.group, cd);
  REQUIRE(loaded.has_value());
  CHECK(loaded->degrees() == t.degrees());
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t i = 0; i < t.columns(); ++i)
      CHECK(loaded->value(r, i).equals(t.value(r, i)));

  // stale version is ignored
  fs::path file = dir / (group_cache_key(gf.group) + ".json");
  std::ifstream in(file);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  in.close();
  auto pos = content.find("\"version\":1");
  REQUIRE(pos != std::string::npos);
  content[pos + 10] = '7';
  std::ofstream out(file);
  out << content;
  out.close();
  CHECK_FALSE(load_cached_table(dir.string(), gf.group, cd).has_value());

  fs::remove_all(dir);
}
