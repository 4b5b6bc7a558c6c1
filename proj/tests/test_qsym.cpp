#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "cqsym/json_io.hpp"
#include "cqsym/qsym.hpp"

using namespace cqsym;

namespace {

QSymElement M(std::vector<int> parts, QPoly c = QPoly{1}) {
  return QSymElement::monomial(Composition(std::move(parts)), std::move(c));
}

std::vector<Composition> compositions_up_to(int max_weight) {
  std::vector<Composition> out;
  for (int w = 1; w <= max_weight; ++w) {
    for (auto& c : compositions_of(w)) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("qpoly arithmetic and trimming") {
  QPoly p{1, 1};
  CHECK(p.degree() == 1);
  CHECK((p * p) == QPoly{1, 2, 1});
  CHECK((p - p).is_zero());
  CHECK(QPoly{0, 0}.is_zero());
  CHECK(QPoly{1, 2}.reversed(3) == QPoly{0, 0, 2, 1});
  CHECK_THROWS_AS(QPoly({1, 2, 3}).reversed(1), InvalidArgument);
  CHECK(QPoly{2, 4}.divexact(2) == QPoly{1, 2});
  CHECK_THROWS_AS(QPoly({2, 3}).divexact(2), NonIntegralDivision);
  CHECK(QPoly{3, 0, 5}.at_one() == 8);
  CHECK_FALSE(QPoly{1, -1}.nonnegative());
}

TEST_CASE("compositions and partitions") {
  CHECK(compositions_of(4).size() == 8);
  CHECK(partitions_of(6).size() == 11);
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Composition{1, 3, 2}.underlying_partition() == Partition{3, 2, 1});
  CHECK(rearrangements(Partition{2, 1, 1}).size() == 3);
  CHECK_THROWS_AS(Composition({1, 0}), InvalidArgument);
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK(Partition{2, 2}.dominated_by(Partition{3, 1}));
  CHECK_FALSE(Partition{3, 1}.dominated_by(Partition{2, 2}));
}

TEST_CASE("quasi-shuffle small products") {
  CHECK(quasi_shuffle(M({1}), M({1})) == M({1, 1}, QPoly{2}) + M({2}));
  CHECK(quasi_shuffle(M({1}), M({2})) == M({1, 2}) + M({2, 1}) + M({3}));
  CHECK(quasi_shuffle(M({1, 1}), QSymElement(0)).is_zero());
}

TEST_CASE("quasi-shuffle against variable evaluation") {
  // Evaluate M_alpha on 4 explicit variables and compare products pointwise.
  const std::vector<long> x{2, 3, 5, 7};
  auto eval = [&](const QSymElement& f) {
    BigInt total = 0;
    for (const auto& [alpha, c] : f.terms()) {
      int k = alpha.length();
      std::vector<int> idx(k);
      std::function<void(int, int, BigInt)> rec = [&](int pos, int start, BigInt prod) {
        if (pos == k) {
          total += prod * c.at_one();
          return;
        }
        for (int i = start; i < static_cast<int>(x.size()); ++i) {
          BigInt p = prod;
          for (int e = 0; e < alpha[pos]; ++e) p *= x[i];
          rec(pos + 1, i + 1, p);
        }
      };
      rec(0, 0, 1);
    }
    return total;
  };
  for (const auto& a : compositions_up_to(3)) {
    for (const auto& b : compositions_up_to(3)) {
      CHECK(eval(quasi_shuffle(M(a.parts()), M(b.parts()))) == eval(M(a.parts())) * eval(M(b.parts())));
    }
  }
}

TEST_CASE("quasi-shuffle is commutative and associative to degree 6") {
  auto comps = compositions_up_to(5);
  for (const auto& a : comps) {
    for (const auto& b : comps) {
      if (a.weight() + b.weight() > 6) continue;
      CHECK(quasi_shuffle(M(a.parts()), M(b.parts())) == quasi_shuffle(M(b.parts()), M(a.parts())));
    }
  }
  auto small = compositions_up_to(4);
  for (const auto& a : small) {
    for (const auto& b : small) {
      for (const auto& c : small) {
        if (a.weight() + b.weight() + c.weight() > 6) continue;
        auto left = quasi_shuffle(quasi_shuffle(M(a.parts()), M(b.parts())), M(c.parts()));
        auto right = quasi_shuffle(M(a.parts()), quasi_shuffle(M(b.parts()), M(c.parts())));
        CHECK(left == right);
      }
    }
  }
}

TEST_CASE("symmetry detection and witnesses") {
  CHECK(is_symmetric(M({1, 1}, QPoly{1, 1})));
  CHECK_FALSE(is_symmetric(M({2, 1})));
  CHECK(is_symmetric(M({1}, QPoly{7})));
  auto w = nonsymmetry_witness(M({2, 1}));
  REQUIRE(w.has_value());
  CHECK(w->first == Composition{2, 1});
  CHECK(w->second == Composition{1, 2});
  CHECK_FALSE(nonsymmetry_witness(M({1, 2}) + M({2, 1})).has_value());
}

TEST_CASE("collapse to monomial symmetric") {
  auto m = collapse_to_monomial_symmetric(M({1, 1}, QPoly{1, 1}));
  CHECK(m.terms.size() == 1);
  CHECK(m.terms.at(Partition{1, 1}) == QPoly{1, 1});
  CHECK(collapse_to_monomial_symmetric(QSymElement(3)).terms.empty());
  CHECK_THROWS_AS(collapse_to_monomial_symmetric(M({2, 1})), NotSymmetric);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      auto e = elementary_in_monomial(lambda);
      CHECK(monomial_symmetric_to_qsym(collapse_to_monomial_symmetric(e)) == e);
    }
  }
}

TEST_CASE("elementary functions in the monomial basis") {
  CHECK(elementary_in_monomial(Partition{2}) == M({1, 1}));
  CHECK(elementary_in_monomial(Partition{1, 1}) == M({1, 1}, QPoly{2}) + M({2}));
  CHECK(elementary_in_monomial(Partition{3}) == M({1, 1, 1}));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      QSymElement prod = QSymElement::constant(1);
      for (int part : lambda.parts()) prod = quasi_shuffle(prod, elementary_in_monomial(Partition{part}));
      CHECK(elementary_in_monomial(lambda) == prod);
    }
  }
}

TEST_CASE("e-expansion round trips") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) {
      auto e = e_expand(elementary_in_monomial(mu));
      CHECK(e.terms.size() == 1);
      CHECK(e.terms.at(mu) == QPoly{1});
    }
  }
  auto edge = e_expand(M({1, 1}, QPoly{1, 1}));
  CHECK(edge.terms.at(Partition{2}) == QPoly{1, 1});
  CHECK(e_expand(M({1, 1, 1})).terms.at(Partition{3}) == QPoly{1});
  CHECK_THROWS_AS(e_expand(M({1, 1, 1}, QPoly{2}) + M({2, 1})), NotSymmetric);
  // m_(2,1) = e_(2,1) - 3 e_3 is not e-positive.
  auto m21 = M({2, 1}) + M({1, 2});
  auto ex = e_expand(m21);
  CHECK(ex.terms.at(Partition{2, 1}) == QPoly{1});
  CHECK(ex.terms.at(Partition{3}) == QPoly{-3});
  CHECK_FALSE(is_e_positive(m21));
  CHECK(is_e_positive(M({1, 1}, QPoly{1, 1})));
}

TEST_CASE("palindromicity") {
  CHECK(is_palindromic(M({1, 1}, QPoly{1, 1}), 1));
  CHECK(is_palindromic(QSymElement(2), 5));
  CHECK_FALSE(is_palindromic(M({1, 1, 1}, QPoly{1, 2}), 1));
  CHECK_FALSE(is_palindromic(M({1, 1}, QPoly{1, 1}), 2));
  CHECK(is_palindromic(M({1, 1}, QPoly{0, 1, 1}), 2, PalindromeCenter::OwnSupport));
  CHECK_FALSE(is_palindromic(M({1, 1}, QPoly{0, 1, 1}), 2));
}

TEST_CASE("lyndon words") {
  CHECK(lyndon_words(1) == std::vector<Composition>{Composition{1}});
  CHECK(lyndon_words(2) == std::vector<Composition>{Composition{2}});
  CHECK(lyndon_words(3) == std::vector<Composition>{Composition{1, 2}, Composition{3}});
  // Number of Lyndon compositions of n: 1, 1, 2, 3, 6, 9, 18.
  const std::vector<std::size_t> counts{1, 1, 2, 3, 6, 9, 18};
  for (int n = 1; n <= 7; ++n) CHECK(lyndon_words(n).size() == counts[n - 1]);
  CHECK_THROWS_AS(lyndon_words(0), InvalidArgument);
}

TEST_CASE("hazewinkel generators") {
  CHECK(hazewinkel_lambda(1, Composition{1, 2}) == M({1, 2}));
  for (int n = 1; n <= 4; ++n) {
    CHECK(hazewinkel_lambda(n, Composition{1}) == elementary_in_monomial(Partition{n}));
  }
  auto a = M({1, 2});
  auto expected = quasi_shuffle(a, a) - M({2, 4});
  QSymElement half(6);
  for (const auto& [gamma, c] : expected.terms()) half.add_term(gamma, c.divexact(2));
  CHECK(hazewinkel_lambda(2, Composition{1, 2}) == half);
  CHECK_THROWS_AS(hazewinkel_lambda(2, Composition{2, 1}), InvalidArgument);
}

TEST_CASE("json round trips") {
  auto f = M({1, 2}, QPoly{1, 0, 3}) + M({3}, QPoly{-2});
  CHECK(qsym_from_json(to_json(f)) == f);
  CHECK(to_json(f).dump() ==
        R"({"degree":3,"terms":[{"index":[1,2],"poly":[1,0,3]},{"index":[3],"poly":[-2]}]})");
  BigInt big("123456789012345678901234567890");
  auto j = to_json(QPoly(std::vector<BigInt>{big}));
  CHECK(j[0].is_string());
  CHECK(qpoly_from_json(j) == QPoly(std::vector<BigInt>{big}));
  auto s = e_expand(M({1, 1}, QPoly{1, 1}));
  CHECK(sym_from_json(to_json(s)) == s);
}
