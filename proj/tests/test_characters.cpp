#include <doctest.h>

#include <chrono>
#include <fstream>
#include <numeric>
#include <sstream>

#include "dirichlet/characters.hpp"
#include "dirichlet/errors.hpp"

using namespace dirichlet;

TEST_CASE("factorize and totient") {
  using PE = std::vector<std::pair<std::uint64_t, int>>;
  CHECK(factorize(1) == PE{});
  CHECK(factorize(360) == PE{{2, 3}, {3, 2}, {5, 1}});
  CHECK(totient(1) == 1);
  CHECK(totient(36) == 12);
  CHECK(totient(97) == 96);
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(9) == 2);
  CHECK(primitive_root(25) == 2);
}

TEST_CASE("unit root notation round trips") {
  for (int order : {1, 2, 4, 6, 12}) {
    for (int k = 0; k < order; ++k) {
      UnitRoot u = UnitRoot::power(order, k);
      CHECK(UnitRoot::parse(u.symbol(), order) == u);
    }
  }
  CHECK(UnitRoot::power(12, 3).symbol() == "i");
  CHECK(UnitRoot::power(12, 10).symbol() == "ub2");
  CHECK_THROWS_AS(UnitRoot::parse("q", 4), DomainError);
}

TEST_CASE("tables match the reference listing") {
  std::ifstream in(DIRICHLET_GOLDEN_DIR "/chars.txt");
  REQUIRE(in);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int m = 0;
    int r = 0;
    ls >> m >> r;
    const CharacterTable& t = cached_character_table(m);
    const Character& chi = t[r];
    std::vector<std::string> tok;
    for (std::string s; ls >> s;) tok.push_back(s);
    REQUIRE(tok.size() == static_cast<std::size_t>(m + 1));
    CAPTURE(line);
    for (int n = 1; n <= m; ++n) CHECK(chi(n).symbol() == tok[static_cast<std::size_t>(n - 1)]);
    CHECK(chi.conductor == std::stoi(tok.back()));
    ++rows;
  }
  CHECK(rows == 149);
}

TEST_CASE("group properties for m <= 40") {
  for (int m = 1; m <= 40; ++m) {
    CAPTURE(m);
    CharacterTable t = character_table(m);
    const int phi = static_cast<int>(totient(static_cast<std::uint64_t>(m)));
    REQUIRE(t.phi() == phi);
    CHECK(t[1].is_principal());
    for (int r = 1; r <= phi; ++r) {
      const Character& chi = t[r];
      // multiplicative and zero exactly off the units
      for (int a = 0; a < m; ++a) {
        CHECK(chi(a).is_zero() == (std::gcd(a, m) != 1));
        for (int b = 0; b < m; ++b) CHECK(chi(a) * chi(b) == chi(static_cast<long>(a) * b));
      }
      CHECK(m % chi.conductor == 0);
      CHECK(t.conjugate(r).index > 0);
      CHECK(t.power(r, phi).index == 1);
      for (int s = r + 1; s <= phi; ++s) CHECK_FALSE(t[s] == chi);
    }
  }
}

TEST_CASE("orthogonality sums vanish exactly") {
  // sum_n chi(n) = 0 for non-principal chi: count exponents per class
  for (int m : {5, 8, 12, 15, 16, 21}) {
    CharacterTable t = character_table(m);
    for (int r = 2; r <= t.phi(); ++r) {
      std::vector<int> hist(static_cast<std::size_t>(t.phi()), 0);
      for (int n = 0; n < m; ++n) {
        if (!t[r](n).is_zero()) ++hist[static_cast<std::size_t>(t[r](n).exponent())];
      }
      // the histogram is constant on cosets of the image subgroup
      int nonzero = 0;
      int count = -1;
      for (int h : hist) {
        if (h == 0) continue;
        ++nonzero;
        CHECK((count < 0 || count == h));
        count = h;
      }
      CHECK(nonzero > 1);
    }
  }
}

TEST_CASE("parity and inverse coefficients") {
  const CharacterTable& t = cached_character_table(3);
  CHECK(t[1].parity() == 1);
  CHECK(t[2].parity() == -1);
  SignedRoot c = dirichlet_inverse_coeff(t[2], 2);
  CHECK(c.sign == -1);
  CHECK(c.root.symbol() == "-1");
  CHECK(dirichlet_inverse_coeff(t[2], 4).sign == 0);
  CHECK(dirichlet_inverse_coeff(t[2], 3).sign == 0);
}

TEST_CASE("m = 1 and invalid moduli") {
  CharacterTable t = character_table(1);
  CHECK(t.phi() == 1);
  CHECK(t[1](7).symbol() == "1");
  CHECK_THROWS_AS(character_table(0), DomainError);
}

TEST_CASE("building tables for m <= 14 is fast") {
  auto t0 = std::chrono::steady_clock::now();
  for (int m = 1; m <= 14; ++m) (void)character_table(m);
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(dt < 1.0);
}
