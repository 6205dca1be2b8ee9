#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chromatic/bond_lattice.hpp"
#include "chromatic/chromatic_poly.hpp"
#include "test_util.hpp"

using namespace chromatic;

TEST_CASE("bond lattice of a path") {
  Graph path3 = family(Family::path, 3);
  BondLattice lattice = bond_lattice(path3);

  REQUIRE(lattice.flats().size() == 4);
  REQUIRE(lattice.flats()[0].to_string() == "1|2|3");
  REQUIRE(lattice.flats()[0].dim() == 3);
  REQUIRE(lattice.mobius()[0] == CheckedInt(1));

  // the two hyperplane flats 1|23 and 12|3, then the full merge
  REQUIRE(lattice.flats()[1].to_string() == "1|23");
  REQUIRE(lattice.flats()[2].to_string() == "12|3");
  REQUIRE(lattice.mobius()[1] == CheckedInt(-1));
  REQUIRE(lattice.mobius()[2] == CheckedInt(-1));
  REQUIRE(lattice.flats()[3].to_string() == "123");
  REQUIRE(lattice.flats()[3].dim() == 1);
  REQUIRE(lattice.mobius()[3] == CheckedInt(1));
  REQUIRE(mobius_function(lattice) == lattice.mobius());

  REQUIRE(characteristic_poly(lattice) == IntPoly({0, 1, -2, 1}));
}

TEST_CASE("bond lattice edge cases") {
  REQUIRE(bond_lattice(Graph::edgeless(4)).flats().size() == 1);
  REQUIRE(characteristic_poly(bond_lattice(Graph::edgeless(4))) ==
          IntPoly::monomial(4));

  // every block is connected in a triangle: singletons, 3 merges, the top
  BondLattice k3 = bond_lattice(family(Family::complete, 3));
  REQUIRE(k3.flats().size() == 5);

  REQUIRE(characteristic_poly(bond_lattice(
              Graph(4, {{1, 2}, {1, 4}, {2, 4}, {2, 3}}))) ==
          IntPoly({0, -2, 5, -4, 1}));
}

TEST_CASE("complete graphs produce the full partition lattice") {
  for (int n = 1; n <= 6; ++n)
    REQUIRE((long long)bond_lattice(family(Family::complete, n))
                .flats()
                .size() == testutil::count_set_partitions(n));
}

TEST_CASE("Mobius recursion resums to zero") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(1 + (int)(rng() % 6), 0.5, rng());
    BondLattice lattice = bond_lattice(g);
    const int count = (int)lattice.flats().size();
    for (int s = 1; s < count; ++s) {
      CheckedInt total = lattice.mobius()[s];
      for (int t = 0; t < s; ++t)
        if (lattice.flats()[t].dim() > lattice.flats()[s].dim() &&
            lattice.refines(t, s))
          total += lattice.mobius()[t];
      REQUIRE(total.is_zero());
    }
    // dim of the minimum is n; dim is the block count everywhere
    REQUIRE(lattice.flats()[0].dim() == g.vertex_count());
    for (const Flat& f : lattice.flats())
      REQUIRE(f.dim() == (int)f.blocks().size());
  }
}

TEST_CASE("characteristic polynomial matches deletion-contraction") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(1 + (int)(rng() % 6), 0.5, rng());
    REQUIRE(characteristic_poly(bond_lattice(g)) == chromatic_poly_dc(g));
  }
}

TEST_CASE("region identity") {
  auto path_report = verify_zaslavsky(family(Family::path, 3));
  REQUIRE(path_report.chi_at_minus_one == CheckedInt(-4));
  REQUIRE(path_report.regions == 4);
  REQUIRE(path_report.n == 3);

  auto gstar_report =
      verify_zaslavsky(Graph(4, {{1, 2}, {1, 4}, {2, 4}, {2, 3}}));
  REQUIRE(gstar_report.chi_at_minus_one == CheckedInt(12));
  REQUIRE(gstar_report.regions == 12);

  auto single = verify_zaslavsky(Graph::edgeless(1));
  REQUIRE(single.chi_at_minus_one == CheckedInt(-1));
  REQUIRE(single.regions == 1);
}

TEST_CASE("flat rendering and budget") {
  Flat flat({{2, 3}, {1}});
  REQUIRE(flat.to_string() == "1|23");
  REQUIRE(flat.dim() == 2);

  Budget tiny;
  tiny.max_subsets = 2;
  REQUIRE_THROWS_AS(bond_lattice(family(Family::complete, 4), tiny),
                    ResourceError);
}
