#include <stdexcept>

#include "doctest.h"
#include "rqnn/config.hpp"

TEST_CASE("flat key-value text parses with comments and trimming") {
  const auto cfg = rqnn::parse_config_text(
      "# run settings\n"
      "experiment = rate-sweep\n"
      "\n"
      "seed=12345\n"
      "  trials  =  50  \n"
      "n_list = 8, 16,32\n"
      "tolerance = 0.125\n"
      "bounded = true\n");
  CHECK(cfg.get_string("experiment") == "rate-sweep");
  CHECK(cfg.get_u64("seed") == 12345);
  CHECK(cfg.get_int("trials") == 50);
  CHECK(cfg.get_double("tolerance") == 0.125);
  CHECK(cfg.get_bool("bounded", false));
  const auto ns = cfg.get_int_list("n_list");
  REQUIRE(ns.size() == 3);
  CHECK(ns[0] == 8);
  CHECK(ns[1] == 16);
  CHECK(ns[2] == 32);
}

TEST_CASE("missing keys fall back or throw depending on the accessor") {
  const auto cfg = rqnn::parse_config_text("a = 1\n");
  CHECK(cfg.get_int("missing", 7) == 7);
  CHECK(cfg.get_double("missing", 0.5) == 0.5);
  CHECK(cfg.get_string("missing", "x") == "x");
  CHECK_THROWS_AS(cfg.get_int("missing"), std::invalid_argument);
  CHECK_THROWS_AS(cfg.get_u64("missing"), std::invalid_argument);
  CHECK_THROWS_AS(cfg.get_string("missing"), std::invalid_argument);
}

TEST_CASE("unparsable values are reported") {
  const auto cfg = rqnn::parse_config_text("n = twelve\n");
  CHECK_THROWS_AS(cfg.get_int("n"), std::invalid_argument);
  CHECK_THROWS_AS(cfg.get_double("n"), std::invalid_argument);
}

TEST_CASE("malformed lines name the line number") {
  try {
    rqnn::parse_config_text("a = 1\nnot-a-pair\n");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("later keys and overrides win") {
  auto cfg = rqnn::parse_config_text("a = 1\na = 2\n");
  CHECK(cfg.get_int("a") == 2);
  rqnn::merge_overrides(cfg, rqnn::parse_config_text("a = 3\nb = 4\n"));
  CHECK(cfg.get_int("a") == 3);
  CHECK(cfg.get_int("b") == 4);
}

TEST_CASE("values may contain equals signs") {
  const auto cfg = rqnn::parse_config_text("expr = a=b\n");
  CHECK(cfg.get_string("expr") == "a=b");
}
