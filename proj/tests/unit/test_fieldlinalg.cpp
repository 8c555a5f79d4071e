#include <doctest.h>

#include <vector>

#include "legspec/errors.hpp"
#include "legspec/field.hpp"
#include "legspec/filtered_reduction.hpp"
#include "legspec/sparse_matrix.hpp"
#include "oracles.hpp"

using namespace legspec;

namespace {

using M2 = SparseColumnMatrix<F2>;
using MQ = SparseColumnMatrix<Rational>;

// Edges 01, 02, 12 of a hollow triangle against vertices 0, 1, 2.
M2 hollow_triangle() { return M2::from_dense({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}); }

M2 random_matrix(oracle::Gen& g, int rows, int cols, int density) {
  std::vector<std::vector<F2>> d(rows, std::vector<F2>(cols));
  for (auto& r : d) {
    for (auto& x : r) x = g.integer(0, 99) < density ? 1 : 0;
  }
  return M2::from_dense(d);
}

ImageQuery<F2> image_of(const M2& m, const std::vector<F2>& v) { return in_image(m, std::span<const F2>(v)); }

oracle::Bits bits(const std::vector<F2>& v) {
  oracle::Bits out;
  for (auto x : v) out.push_back(x.bit());
  return out;
}

oracle::Dense to_oracle(const M2& m) {
  oracle::Dense d(m.rows(), oracle::Bits(m.cols(), 0));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) d[e.row][j] = e.value.bit();
  }
  return d;
}

}  // namespace

TEST_CASE("F2 arithmetic is XOR and AND") {
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      CHECK((F2(a) + F2(b)).bit() == (a ^ b));
      CHECK((F2(a) * F2(b)).bit() == (a & b));
      CHECK(F2(a) - F2(b) == F2(a) + F2(b));
    }
  }
  CHECK(F2(1) / F2(1) == F2(1));
  CHECK_THROWS_AS((void)(F2(1) / F2(0)), std::domain_error);
}

TEST_CASE("field parsing") {
  CHECK(parse_field("f2") == Field::f2);
  CHECK(parse_field("q") == Field::q);
  CHECK(to_string(Field::q) == "q");
  CHECK_THROWS_AS((void)parse_field("z"), InputError);
}

TEST_CASE("rational arithmetic stays exact") {
  Rational third(1, 3);
  CHECK(third + third + third == 1);
  CHECK(third * 3 == 1);
}

TEST_CASE("column invariants are enforced") {
  M2 m(3, 1);
  CHECK_THROWS_AS((void)m.set_column(0, {{2, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS((void)m.set_column(0, {{0, 0}}), InputError);
  CHECK_THROWS_AS((void)m.set_column(0, {{3, 1}}), InputError);
  m.set_column(0, {{0, 1}, {2, 1}});
  CHECK(m.at(2, 0) == F2(1));
  CHECK(m.at(1, 0) == F2(0));
}

TEST_CASE("dense round trip and transpose") {
  const auto m = hollow_triangle();
  CHECK(M2::from_dense(m.to_dense()) == m);
  CHECK(m.transpose().transpose() == m);
  CHECK(m.transpose().at(0, 1) == m.at(1, 0));
}

TEST_CASE("reduce") {
  SUBCASE("zero matrix") {
    const M2 z(3, 3);
    const auto r = reduce(z);
    CHECK(r.rank() == 0);
    CHECK(r.reduced == z);
  }
  SUBCASE("identity") {
    const auto id = M2::identity(3);
    const auto r = reduce(id);
    CHECK(r.rank() == 3);
    CHECK(r.reduced == id);
  }
  SUBCASE("hollow triangle has rank 2") {
    // beta_0 = 3 - 2 = 1 and beta_1 = 3 - 2 = 1, the hand count for a circle.
    CHECK(reduce(hollow_triangle()).rank() == 2);
  }
}

TEST_CASE("reduction identity and pivots on random matrices") {
  oracle::Gen g(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_matrix(g, g.integer(1, 12), g.integer(1, 12), 35);
    const auto r = reduce(m);
    // reduced = m * transform, column by column
    const auto md = m.to_dense();
    const auto td = r.transform.to_dense();
    const auto rd = r.reduced.to_dense();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        F2 s;
        for (std::size_t k = 0; k < m.cols(); ++k) s += md[i][k] * td[k][j];
        CHECK(s == rd[i][j]);
      }
    }
    std::vector<std::int64_t> lows;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (low(r.reduced, j) >= 0) lows.push_back(low(r.reduced, j));
    }
    std::sort(lows.begin(), lows.end());
    CHECK(std::adjacent_find(lows.begin(), lows.end()) == lows.end());
    CHECK(r.rank() == oracle::rank(to_oracle(m)));
    CHECK(rank(m) == r.rank());
  }
}

TEST_CASE("in_image") {
  SUBCASE("zero vector is always in the image") {
    const auto q = image_of(hollow_triangle(), {0, 0, 0});
    CHECK(q.member);
    for (auto c : q.coefficients) CHECK(c == F2(0));
  }
  SUBCASE("identity contains e1") {
    CHECK(image_of(M2::identity(3), {1, 0, 0}).member);
  }
  SUBCASE("single column (1,1,0) misses (1,0,0)") {
    // The span is {0, (1,1,0)}.
    const auto m = M2::from_dense({{1}, {1}, {0}});
    CHECK_FALSE(image_of(m, {1, 0, 0}).member);
    CHECK(image_of(m, {1, 1, 0}).member);
  }
  SUBCASE("coefficients reproduce the vector") {
    oracle::Gen g(5);
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = random_matrix(g, 8, 6, 30);
      std::vector<F2> v(8);
      for (auto& x : v) x = g.integer(0, 1);
      const ImageOracle<F2> o(m);
      const auto q = o.query(std::span<const F2>(v));
      auto rows = to_oracle(m.transpose());
      CHECK(q.member == oracle::in_span(rows, bits(v)));
      if (q.member) {
        for (std::size_t i = 0; i < 8; ++i) {
          F2 s;
          for (std::size_t j = 0; j < 6; ++j) s += m.at(i, j) * q.coefficients[j];
          CHECK(s == v[i]);
        }
      }
    }
  }
}

TEST_CASE("kernel") {
  SUBCASE("hollow triangle edge boundary") {
    // Of the 8 edge vectors only 0 and (1,1,1) have zero boundary.
    const auto k = kernel_basis(hollow_triangle());
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<F2>{1, 1, 1});
  }
  SUBCASE("rank plus nullity") {
    oracle::Gen g(9);
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = random_matrix(g, g.integer(1, 10), g.integer(1, 10), 40);
      const auto k = kernel_basis(m);
      CHECK(k.size() + rank(m) == m.cols());
      for (const auto& v : k) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
          F2 s;
          for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
          CHECK(s == F2(0));
        }
      }
    }
  }
}

TEST_CASE("rational rank differs from F2 rank on a torsion matrix") {
  // [[1,1],[1,-1]] has determinant -2: rank 2 over Q, rank 1 over F2.
  const auto q = MQ::from_dense({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}});
  CHECK(rank(q) == 2);
  CHECK(rank(M2::from_dense({{1, 1}, {1, 1}})) == 1);
  CHECK(rank(MQ::identity(4)) == 4);
}

TEST_CASE("filtered reduction of a filled triangle") {
  // vertices 0,1,2; edges 3=01, 4=02, 5=12; face 6
  FilteredBoundary b;
  const std::vector<std::vector<std::uint32_t>> faces{{}, {}, {}, {0, 1}, {0, 2}, {1, 2}, {3, 4, 5}};
  const std::vector<std::uint8_t> dims{0, 0, 0, 1, 1, 1, 2};
  for (std::size_t i = 0; i < faces.size(); ++i) b.push_back(dims[i], faces[i]);
  std::vector<std::uint64_t> tags(7, 0);
  tags[0] = 1;
  const auto r = reduce_filtered(b, tags);
  REQUIRE(r.essential.size() == 1);
  CHECK(r.essential[0] == 0);
  CHECK(r.essential_tags[0] == 1);
  CHECK(r.partner[1] == 3);
  CHECK(r.partner[2] == 4);
  CHECK(r.partner[5] == 6);
}
