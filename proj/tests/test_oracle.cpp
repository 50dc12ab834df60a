// Copyright 2026 The pcol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcol/error.hpp"
#include "pcol/oracle.hpp"
#include "support.hpp"

using namespace pcol;
using namespace pcol::testing;

namespace {

int brute_min_medium(const MultiGraph& g, int k) {
  int best = g.edge_count() + 1;
  for_each_proper(g, k, [&](const std::vector<int>& c) { best = std::min(best, brute_medium(g, c)); });
  return best;
}

// Normal k-colourings counted up to renaming: each is reduced to the form
// where colours first appear in increasing order along the edge ids.
long brute_normal_classes(const MultiGraph& g, int k) {
  std::set<std::vector<int>> forms;
  for_each_proper(g, k, [&](const std::vector<int>& c) {
    if (brute_medium(g, c) != 0) return;
    std::vector<int> rename(k + 1, 0), form;
    int next = 0;
    for (int x : c) {
      if (!rename[x]) rename[x] = ++next;
      form.push_back(rename[x]);
    }
    forms.insert(form);
  });
  return static_cast<long>(forms.size());
}

}  // namespace

TEST_CASE("min_medium_exact fixtures") {
  const MinMediumResult p = min_medium_exact(petersen(), 4);
  CHECK(p.count == 8);
  CHECK(brute_proper(petersen(), p.witness.colour));
  CHECK(brute_medium(petersen(), p.witness.colour) == 8);
  CHECK(min_medium_exact(k4(), 4).count == 0);
  CHECK(min_medium_exact(k33(), 4).count == 0);
  CHECK_THROWS_AS(min_medium_exact(petersen(), 3), InputError);
  CHECK_THROWS_AS(min_medium_exact(k4(), 2), InputError);
  CHECK_THROWS_AS(min_medium_exact(k4(), 7), InputError);
}

TEST_CASE("min_medium_exact agrees with full enumeration") {
  for (const MultiGraph& g : {k4(), k33(), prism3(), necklace4(), theta()}) {
    for (int k : {3, 4}) {
      const int want = brute_min_medium(g, k);
      if (want > g.edge_count()) continue;
      const MinMediumResult r = min_medium_exact(g, k);
      CHECK(r.count == want);
      CHECK(brute_medium(g, r.witness.colour) == r.count);
    }
  }
}

TEST_CASE("symmetry breaking does not change the optimum") {
  SearchOptions plain;
  plain.symmetry_breaking = false;
  for (int n = 4; n <= 10; n += 2) {
    for (const MultiGraph& g : bridgeless_cubic_graphs(n)) {
      for (int k : {4, 5}) {
        const MinMediumResult a = min_medium_exact(g, k);
        const MinMediumResult b = min_medium_exact(g, k, plain);
        CHECK(a.count == b.count);
        CHECK(a.nodes <= b.nodes);
      }
    }
  }
}

TEST_CASE("more colours never need more medium edges") {
  for (int n = 4; n <= 10; n += 2) {
    for (const MultiGraph& g : bridgeless_cubic_graphs(n)) {
      int prev = g.edge_count() + 1;
      for (int k = 3; k <= 6; ++k) {
        int now = prev;
        try {
          now = min_medium_exact(g, k).count;
        } catch (const InputError&) {
          CHECK(k == 3);
          CHECK_FALSE(try_3_edge_colouring(g));
        }
        CHECK(now <= prev);
        prev = now;
      }
    }
  }
}

TEST_CASE("exists_normal") {
  const auto strong = exists_normal(petersen(), 5);
  REQUIRE(strong);
  CHECK(count_classes(petersen(), *strong).rich == 15);
  CHECK_FALSE(exists_normal(petersen(), 4));
  const auto k = exists_normal(k4(), 3);
  REQUIRE(k);
  CHECK(count_classes(k4(), *k).poor == 6);
}

TEST_CASE("for_each_normal enumerates up to colour renaming") {
  long labelled = 0;
  for_each_proper(k4(), 3, [&](const std::vector<int>&) { ++labelled; });
  CHECK(labelled == 6);
  CHECK(for_each_normal(k4(), 3, 100, [](const EdgeColouring&) { return true; }) == 1);
  for (const MultiGraph& g : {k4(), k33(), prism3()}) {
    CHECK(for_each_normal(g, 5, 1000, [](const EdgeColouring&) { return true; }) ==
          brute_normal_classes(g, 5));
  }
  CHECK(for_each_normal(k33(), 5, 1, [](const EdgeColouring&) { return true; }) == 1);
  CHECK(for_each_normal(k33(), 5, 100, [](const EdgeColouring&) { return false; }) == 1);
  // Normal 5-colourings of the Petersen graph come from its automorphisms,
  // so there is exactly one up to renaming the colours.
  CHECK(for_each_normal(petersen(), 5, 100, [](const EdgeColouring&) { return true; }) == 1);
}

TEST_CASE("verify_conjecture_on") {
  const ConjectureReport p = verify_conjecture_on(petersen());
  CHECK(p.holds);
  CHECK(p.round_trip);
  REQUIRE(p.image);
  CHECK(p.image->kind == PetersenImage::kSurjective);
  CHECK(p.image_consistent);

  const ConjectureReport k = verify_conjecture_on(k4());
  CHECK(k.holds);
  CHECK(k.round_trip);
  REQUIRE(k.image);
  CHECK(k.image_consistent);
}
