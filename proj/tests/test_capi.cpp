// Exercises the shared library through its C header only.
#include <string>

#include "doctest.h"
#include "ffconv/ffconv.h"

namespace {

std::string take(char* s) {
  std::string out = s;
  ffc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("polynomial handles and convolution") {
  ffc_poly *p = nullptr, *q = nullptr, *r = nullptr;
  REQUIRE(ffc_poly_from_json(R"({"degree":2,"a":["1","0","-1"]})", &p) == FFC_OK);
  REQUIRE(ffc_poly_from_roots("1,-1", &q) == FFC_OK);
  CHECK(ffc_poly_degree(p) == 2);
  REQUIRE(ffc_boxplus(p, q, &r) == FFC_OK);
  char* s = nullptr;
  REQUIRE(ffc_poly_to_json(r, &s) == FFC_OK);
  CHECK(take(s) == R"({"a":["1","0","-2"],"degree":2})");
  ffc_poly_free(r);
  ffc_poly_free(q);
  ffc_poly_free(p);
}

TEST_CASE("cumulants and families") {
  ffc_poly* h = nullptr;
  REQUIRE(ffc_hermite(2, 0, &h) == FFC_OK);
  char* s = nullptr;
  REQUIRE(ffc_cumulants(h, 0, &s) == FFC_OK);
  CHECK(take(s) == R"({"d":2,"kappa":["0","1"],"variant":"standard"})");
  ffc_poly_free(h);

  ffc_poly *poi = nullptr, *pw = nullptr;
  REQUIRE(ffc_poisson("1/4", 4, &poi) == FFC_OK);
  REQUIRE(ffc_boxplus_power(poi, "4/3", &pw) == FFC_OK);
  REQUIRE(ffc_poly_to_json(pw, &s) == FFC_OK);
  CHECK(take(s) == R"({"a":["1","4/3","1/6","-1/54","5/2592"],"degree":4})");
  ffc_poly_free(pw);
  ffc_poly_free(poi);
}

TEST_CASE("error statuses and messages") {
  ffc_poly* p = nullptr;
  CHECK(ffc_poly_from_json("{bad", &p) == FFC_ERR_MALFORMED);
  CHECK(std::string(ffc_last_error_message()).size() > 0);
  CHECK(ffc_poisson("1/3", 4, &p) == FFC_ERR_DOMAIN);
  CHECK(p == nullptr);

  ffc_poly *a = nullptr, *b = nullptr, *c = nullptr;
  REQUIRE(ffc_poly_from_roots("1,2", &a) == FFC_OK);
  REQUIRE(ffc_poly_from_roots("1,2,3", &b) == FFC_OK);
  CHECK(ffc_boxplus(a, b, &c) == FFC_ERR_DIMENSION);
  CHECK(ffc_boxplus(nullptr, b, &c) == FFC_ERR_MALFORMED);
  ffc_poly_free(a);
  ffc_poly_free(b);

  const int saved = ffc_get_max_partition_size();
  REQUIRE(ffc_set_max_partition_size(3) == FFC_OK);
  char* s = nullptr;
  CHECK(ffc_partitions(4, 0, 0, &s) == FFC_ERR_SIZE_LIMIT);
  CHECK(ffc_set_max_partition_size(99) == FFC_ERR_SIZE_LIMIT);
  REQUIRE(ffc_set_max_partition_size(saved) == FFC_OK);
  CHECK(std::string(ffc_status_name(FFC_ERR_DOMAIN)) == "domain");
}

TEST_CASE("divisibility entry points") {
  int cpd = -1;
  REQUIRE(ffc_is_cpd("1,3/4,3/8,3/32", &cpd) == FFC_OK);
  CHECK(cpd == 0);
  ffc_poly* h = nullptr;
  REQUIRE(ffc_hermite(5, 0, &h) == FFC_OK);
  char* s = nullptr;
  REQUIRE(ffc_check_id(h, &s) == FFC_OK);
  CHECK(take(s).find(R"("verdict":"infinitely_divisible")") != std::string::npos);
  ffc_poly_free(h);
}
