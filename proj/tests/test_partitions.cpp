#include <algorithm>
#include <map>

#include "doctest.h"
#include "ffc/error.hpp"
#include "ffc/partitions.hpp"
#include "support.hpp"

using namespace ffc;
using namespace ffc::partitions;

namespace {

// mu(0, pi) from the defining recursion on the interval [0, pi].
std::int64_t recursive_mobius(const SetPartition& pi, const std::vector<SetPartition>& all) {
  const SetPartition zero = SetPartition::singletons(pi.size());
  if (pi == zero) return 1;
  std::int64_t s = 0;
  for (const auto& sigma : all) {
    if (sigma != pi && refines(sigma, pi)) s += recursive_mobius(sigma, all);
  }
  return -s;
}

bool crossing_by_definition(const SetPartition& p) {
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (p.label(a) == p.label(c) && p.label(b) == p.label(d) && p.label(a) != p.label(b)) return true;
  return false;
}

}  // namespace

TEST_CASE("Bell and Catalan counts") {
  const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  const std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 1; n <= 10; ++n) {
    CHECK(enumerate_partitions(n).size() == bell[n]);
    CHECK(enumerate_noncrossing(n).size() == catalan[n]);
  }
}

TEST_CASE("enumeration yields distinct canonical partitions") {
  const auto all = enumerate_partitions(6);
  std::vector<std::string> text;
  for (const auto& p : all) text.push_back(p.to_string());
  std::sort(text.begin(), text.end());
  CHECK(std::adjacent_find(text.begin(), text.end()) == text.end());
  CHECK(all.front() == SetPartition::one_block(6));
}

TEST_CASE("parse and print") {
  const auto p = SetPartition::parse("{1,3|2,4}");
  CHECK(p.size() == 4);
  CHECK(p.block_count() == 2);
  CHECK(p.to_string() == "{1,3|2,4}");
  CHECK_FALSE(is_noncrossing(p));
  CHECK(SetPartition::parse("{2,4|1,3}") == p);
  CHECK(SetPartition::from_blocks({{4, 1}, {2, 3}}).to_string() == "{1,4|2,3}");
  CHECK_THROWS_AS(SetPartition::parse("{1,2|2}"), Error);
  CHECK_THROWS_AS(SetPartition::parse("{1,3}"), Error);
}

TEST_CASE("non-crossing agrees with the four-index definition") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate_partitions(n)) CHECK(is_noncrossing(p) == !crossing_by_definition(p));
  }
}

TEST_CASE("Mobius function matches the recursive definition") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_partitions(n);
    for (const auto& p : all) CHECK(mobius_from_zero(p) == recursive_mobius(p, all));
  }
  CHECK(mobius_to_one(SetPartition::singletons(4)) == -6);
}

TEST_CASE("per-type counts: closed forms against filtering") {
  for (int n = 1; n <= 10; ++n) {
    std::map<PartitionType, std::uint64_t> all, nc;
    for (const auto& p : enumerate_partitions(n)) {
      ++all[partition_type(p)];
      if (is_noncrossing(p)) ++nc[partition_type(p)];
    }
    for (const auto& [t, c] : all) {
      CHECK(count_by_type(t, Lattice::all) == Integer(std::to_string(c)));
      CHECK(count_by_type(t, Lattice::noncrossing) == Integer(std::to_string(nc[t])));
    }
  }
}

TEST_CASE("type table matches enumeration") {
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t total = 0;
    for (const auto& tc : type_classes(n)) {
      total += tc.count_all;
      CHECK(tc.mobius == mobius_from_zero(tc.type));
    }
    CHECK(total == enumerate_partitions(n).size());
  }
}

TEST_CASE("coarsening histogram counts the interval above a representative") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_partitions(n);
    const auto& classes = type_classes(n);
    const auto& coarse = coarsenings(n);
    for (const auto& sigma : all) {
      std::map<std::size_t, std::uint64_t> direct;
      for (const auto& pi : all) {
        if (refines(sigma, pi)) ++direct[type_index(partition_type(pi))];
      }
      const auto& table = coarse[type_index(partition_type(sigma))];
      CHECK(table.size() == direct.size());
      for (const auto& [t, m] : table) CHECK(direct[t] == m);
    }
    CHECK(classes.size() == coarse.size());
  }
}

TEST_CASE("join and refinement") {
  const auto a = SetPartition::parse("{1,2|3|4}");
  const auto b = SetPartition::parse("{1|2,3|4}");
  CHECK(join(a, b).to_string() == "{1,2,3|4}");
  CHECK(refines(a, join(a, b)));
  CHECK(refines(SetPartition::singletons(4), a));
  CHECK_FALSE(refines(a, b));
}

TEST_CASE("lattice characteristic polynomial is the falling factorial") {
  for (int n = 1; n <= 10; ++n) CHECK(partition_lattice_charpoly(n) == VarPoly::falling_factorial(static_cast<unsigned>(n)));
}

TEST_CASE("multiplicative extension") {
  const auto f = testing::Qs("2,3,5");
  CHECK(multiplicative_extension(f, SetPartition::parse("{1,2|3|4,5,6}")) == 3 * 2 * 5);
  CHECK_THROWS_AS(multiplicative_extension(f, SetPartition::one_block(4)), Error);
  CHECK(block_size_product(SetPartition::parse("{1,2|3|4,5,6}")) == 6);
}

TEST_CASE("size cap") {
  const int saved = max_size();
  set_max_size(5);
  CHECK_THROWS_AS(enumerate_partitions(6), Error);
  try {
    enumerate_partitions(6);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::size_limit);
    CHECK(std::string(e.what()).find("5") != std::string::npos);
  }
  set_max_size(saved);
  CHECK_THROWS_AS(set_max_size(kMaxGroundSize + 1), Error);
}
