#include <doctest.h>

#include "kkpath/json_io.hpp"

using namespace kkpath;

TEST_CASE("cartan json round trip") {
  CartanMatrix b2 = CartanMatrix::named("B2");
  json j = cartan_to_json(b2);
  CHECK(j.dump() == "[[2,-2],[-1,2]]");
  CHECK(cartan_from_json(j).matrix() == b2.matrix());
  CHECK_THROWS_AS(cartan_from_json(json::parse("[[2],[2,2]]")), invalid_input);
}

TEST_CASE("path json uses p/q strings and round trips") {
  WeylGroup b2(CartanMatrix::named("B2"));
  Crystal c(b2, parse_int_vec("2,1"));
  bool saw_fraction = false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    json j = path_to_json(c.path(k).path());
    if (j.dump().find('/') != std::string::npos) saw_fraction = true;
    CHECK(path_from_json(j) == c.path(k).path());
  }
  CHECK(saw_fraction);
}

TEST_CASE("decomposition json") {
  Decomposition d;
  d.add(parse_int_vec("2,1"), 2);
  d.add(parse_int_vec("0,3"), 1);
  json j = decomposition_to_json(d);
  CHECK(j.dump() ==
        R"([{"mult":1,"weight":[0,3]},{"mult":2,"weight":[2,1]}])");
  CHECK(decomposition_from_json(j) == d);
}

TEST_CASE("kk index json") {
  WeylGroup b2(CartanMatrix::named("B2"));
  KKIndex idx = make_kk_index(b2, parse_int_vec("2,0"), b2.longest(),
                              parse_int_vec("2,1"));
  json j = kk_index_to_json(b2, idx);
  CHECK(j.at("w").get<std::string>() == "1,2,1");
  CHECK(j.at("lambda").dump() == "[2,0]");

  LoadedKKIndex loaded = kk_index_from_json(j);
  CHECK(loaded.group->cartan().matrix() == b2.cartan().matrix());
  CHECK(loaded.index.lambda == idx.lambda);
  CHECK(loaded.index.mu == idx.mu);
  CHECK(loaded.group->word(loaded.index.w) == b2.word(idx.w));
}

TEST_CASE("concat json round trip") {
  WeylGroup b2(CartanMatrix::named("B2"));
  Crystal c(b2, parse_int_vec("1,1"));
  ConcatPath pair(b2, {c.path(0), c.path(c.size() - 1)});
  json j = concat_to_json(pair);
  CHECK(concat_from_json(b2, j) == pair);
}

TEST_CASE("ssyt json") {
  json j = json::parse("[[1,3,6,8],[2,4],[7]]");
  SSYT s = ssyt_from_json(j);
  CHECK(s.rows.size() == 3);
  CHECK(ssyt_to_json(s) == j);
  CHECK_THROWS_AS(ssyt_from_json(json::parse("[[2,1]]")), invalid_input);
}
