#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "edgealg/monomial.hpp"
#include "oracles.hpp"

using namespace edgealg;

namespace {

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

// random exponent vectors with entries in [0, hi]
std::vector<Monomial> random_monomials(int n, int hi, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(0, hi);
  std::vector<Monomial> out;
  for (int k = 0; k < count; ++k) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(n))};
    for (auto& e : m.e) e = d(rng);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("monomial basics", "[monomial]") {
  CHECK(divides(mono({1, 0}), mono({2, 1})));
  CHECK_FALSE(divides(mono({1, 2}), mono({2, 1})));
  CHECK(mon_lcm(mono({1, 2}), mono({2, 1})) == mono({2, 2}));
  CHECK(mon_product(mono({1, 2}), mono({2, 1})) == mono({3, 3}));
  CHECK(monomial_to_string(mono({1, 0, 2})) == "x0*x2^2");
  CHECK(monomial_to_string(mono({0, 0})) == "1");
}

TEST_CASE("graded-lex order", "[monomial]") {
  // lower degree first; within a degree, lexicographically larger exponent
  // vector first (so x0*x1 precedes x1*x2)
  CHECK(grlex_less(mono({1, 0, 0}), mono({1, 1, 0})));
  CHECK(grlex_less(mono({1, 1, 0}), mono({0, 1, 1})));
  CHECK_FALSE(grlex_less(mono({0, 1, 1}), mono({1, 1, 0})));
  CHECK_FALSE(grlex_less(mono({1, 1, 0}), mono({1, 1, 0})));
}

TEST_CASE("minimal generators and ideal construction", "[monomial]") {
  const MonomialIdeal i = make_ideal(2, {mono({2, 1}), mono({1, 1}), mono({1, 1}),
                                         mono({0, 3}), mono({1, 2})});
  CHECK(i.gens == std::vector<Monomial>{mono({1, 1}), mono({0, 3})});

  CHECK(make_ideal(2, {}).is_zero());
  CHECK_THROWS_AS(make_ideal(2, {mono({0, 0})}), std::invalid_argument);  // unit
  CHECK_THROWS_AS(make_ideal(2, {mono({1})}), std::invalid_argument);    // length
  CHECK_THROWS_AS(make_ideal(2, {mono({-1, 1})}), std::invalid_argument);

  const MonomialIdeal e = edge_ideal(path_graph(3));
  CHECK(e.gens == std::vector<Monomial>{mono({1, 1, 0}), mono({0, 1, 1})});
  CHECK(is_squarefree(e));
  CHECK_FALSE(is_squarefree(make_ideal(1, {mono({2})})));
}

TEST_CASE("ideal arithmetic agrees with the membership oracle", "[monomial][oracle]") {
  const MonomialIdeal a = edge_ideal(cycle_graph(4));
  const MonomialIdeal b = make_ideal(4, {mono({2, 0, 0, 0}), mono({0, 1, 0, 1})});
  const auto probes = random_monomials(4, 4, 300, 7u);

  SECTION("sum") {
    const MonomialIdeal s = ideal_sum(a, b);
    for (const auto& m : probes)
      CHECK(ideal_contains(s, m) == (oracle::ideal_member(a, m) || oracle::ideal_member(b, m)));
  }
  SECTION("intersection") {
    const MonomialIdeal s = ideal_intersect(a, b);
    for (const auto& m : probes)
      CHECK(ideal_contains(s, m) == (oracle::ideal_member(a, m) && oracle::ideal_member(b, m)));
  }
  SECTION("product and power") {
    const MonomialIdeal p = ideal_product(a, b);
    const MonomialIdeal a2 = ideal_power(a, 2);
    const MonomialIdeal a3 = ideal_power(a, 3);
    for (const auto& m : probes) {
      CHECK(ideal_contains(a2, m) == oracle::power_member(a, m, 2));
      CHECK(ideal_contains(a3, m) == oracle::power_member(a, m, 3));
      if (ideal_contains(p, m)) {
        bool witness = false;
        for (const auto& ga : a.gens)
          for (const auto& gb : b.gens)
            if (divides(mon_product(ga, gb), m)) witness = true;
        CHECK(witness);
      }
    }
  }
}

TEST_CASE("variable primes and transversals", "[monomial]") {
  const MonomialIdeal p = variable_prime({0, 2}, 3);
  CHECK(p.gens == std::vector<Monomial>{mono({1, 0, 0}), mono({0, 0, 1})});

  // transversals of the edge supports of P_3 = {01, 12}: {1} and {0,2}
  const auto t = minimal_transversals({{0, 1}, {1, 2}}, 3);
  CHECK(t == std::vector<std::vector<int>>{{0, 2}, {1}});

  // (x0, x1)^2 = (x0^2, x0 x1, x1^2)
  const MonomialIdeal q = cover_prime_power({0, 1}, 2, 2);
  CHECK(q.gens == std::vector<Monomial>{mono({2, 0}), mono({1, 1}), mono({0, 2})});
}

TEST_CASE("symbolic powers", "[monomial][oracle]") {
  SECTION("routes agree and match the cover-degree criterion") {
    for (const auto& g : {cycle_graph(5), path_graph(4), star_graph(3),
                          complete_graph(4), wheel_graph(4)}) {
      for (int s = 1; s <= 3; ++s) {
        const MonomialIdeal sym = symbolic_power(g, s);
        CHECK(sym.gens == symbolic_power_by_enumeration(g, s).gens);
        for (const auto& m : random_monomials(g.n, s + 1, 120, 11u))
          CHECK(ideal_contains(sym, m) == oracle::symbolic_member(g, m, s));
      }
    }
  }
  SECTION("s = 1 is the edge ideal") {
    CHECK(symbolic_power(cycle_graph(6), 1).gens == edge_ideal(cycle_graph(6)).gens);
  }
  SECTION("bipartite graphs: symbolic equals ordinary") {
    for (const auto& g :
         {path_graph(4), cycle_graph(4), star_graph(3), complete_multipartite({2, 3})})
      for (int s = 2; s <= 3; ++s)
        CHECK(symbolic_power(g, s).gens == ideal_power(edge_ideal(g), s).gens);
  }
  SECTION("odd cycle: the monomial of all five variables separates the powers") {
    const Monomial all{std::vector<int>{1, 1, 1, 1, 1}};
    CHECK(ideal_contains(symbolic_power(cycle_graph(5), 3), all));
    CHECK_FALSE(ideal_contains(ideal_power(edge_ideal(cycle_graph(5)), 3), all));
    // at s = 2 the two powers of C_5 still coincide
    CHECK(symbolic_power(cycle_graph(5), 2).gens ==
          ideal_power(edge_ideal(cycle_graph(5)), 2).gens);
  }
  SECTION("squarefree route matches the graph route") {
    for (const auto& g : {cycle_graph(5), path_graph(4)})
      for (int s = 2; s <= 3; ++s)
        CHECK(symbolic_power_squarefree(edge_ideal(g), s).gens == symbolic_power(g, s).gens);
  }
}
