#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/tmpdir.hpp"
#include "wsd/inventory.hpp"

using wsd::SenseInventory;
using wsd::testing::TempDir;

TEST_CASE("load parses dictionary lines") {
  TempDir dir("inv_load");
  const std::string path = dir.write("dict.tsv",
                                     "# E-K dictionary\n"
                                     "plant\tfactory\tkongjang\n"
                                     "plant\tplant\tsikmul,chomok\n"
                                     "\n"
                                     "bank\tshore\tkangbyon\n");
  const SenseInventory inv = SenseInventory::load(path);

  CHECK(inv.word_count() == 2);
  REQUIRE(inv.contains("plant"));
  const auto ids = inv.sense_ids("plant");
  CHECK(ids == std::vector<wsd::SenseId>{"factory", "plant"});
  CHECK(inv.senses("plant")[0].translations == std::vector<std::string>{"kongjang"});
  CHECK(inv.senses("plant")[1].translations == std::vector<std::string>{"chomok", "sikmul"});
}

TEST_CASE("empty file yields empty inventory") {
  TempDir dir("inv_empty");
  const SenseInventory inv = SenseInventory::load(dir.write("dict.tsv", ""));
  CHECK(inv.empty());
}

TEST_CASE("duplicate sense id under one word is rejected") {
  TempDir dir("inv_dup");
  const std::string path = dir.write("dict.tsv",
                                     "bank\tshore\tx\n"
                                     "bank\tshore\ty\n");
  CHECK_THROWS_WITH_AS(SenseInventory::load(path),
                       doctest::Contains("duplicate sense id"), std::runtime_error);
}

TEST_CASE("malformed line reports its line number") {
  TempDir dir("inv_bad");
  const std::string path = dir.write("dict.tsv",
                                     "plant\tfactory\tkongjang\n"
                                     "not a dictionary line\n");
  CHECK_THROWS_WITH_AS(SenseInventory::load(path), doctest::Contains(":2:"),
                       std::runtime_error);
}

TEST_CASE("empty translation set is rejected") {
  TempDir dir("inv_notr");
  CHECK_THROWS_WITH_AS(SenseInventory::load(dir.write("dict.tsv", "plant\tfactory\t, ,\n")),
                       doctest::Contains("empty translation"), std::runtime_error);
}

TEST_CASE("add_sense validates its inputs") {
  SenseInventory inv;
  inv.add_sense("bank", "shore", {"kangbyon", "kangbyon"});
  CHECK(inv.senses("bank")[0].translations.size() == 1);  // deduplicated
  CHECK_THROWS_AS(inv.add_sense("bank", "shore", {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(inv.add_sense("bank", "edge", {}), std::invalid_argument);
}

TEST_CASE("lookup of an unknown word throws") {
  SenseInventory inv;
  inv.add_sense("bank", "shore", {"x"});
  CHECK(!inv.contains("plant"));
  CHECK_THROWS_AS(inv.senses("plant"), std::runtime_error);
}

TEST_CASE("save and load round-trip") {
  SenseInventory inv;
  inv.add_sense("plant", "factory", {"kongjang"});
  inv.add_sense("plant", "plant", {"sikmul", "chomok"});
  inv.add_sense("bank", "shore", {"kangbyon"});

  TempDir dir("inv_rt");
  const std::string path = dir.file("dict.tsv");
  wsd::save_inventory(inv, path);
  const SenseInventory back = SenseInventory::load(path);

  CHECK(back.word_count() == inv.word_count());
  CHECK(back.sense_ids("plant") == inv.sense_ids("plant"));
  CHECK(back.senses("plant")[1].translations == inv.senses("plant")[1].translations);
}
