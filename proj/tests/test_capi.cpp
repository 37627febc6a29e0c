#include <doctest.h>

#include <cstring>
#include <string>

#include "bcm/bcm.h"

namespace {

struct System {
  bcm_system* handle = nullptr;
  ~System() { bcm_system_destroy(handle); }
};

struct Report {
  bcm_report* handle = nullptr;
  ~Report() { bcm_report_destroy(handle); }
};

std::string take_error(char* error) {
  std::string text = error ? error : "";
  bcm_free(error);
  return text;
}

}  // namespace

TEST_CASE("c api: eviction on the propositional system") {
  System system;
  char* error = nullptr;
  REQUIRE(bcm_system_create("prop", "p,q", nullptr, &system.handle, &error) == BCM_OK);

  Report report;
  REQUIRE(bcm_evict(system.handle, "p | q\n", "{tt}", "lex-min", 0, &report.handle, &error) ==
          BCM_OK);
  std::string text = bcm_report_text(report.handle);
  CHECK(text.find("chosen: {ft,tf}") != std::string::npos);
  CHECK(text.find("candidates: 1") != std::string::npos);
  std::string json = bcm_report_json(report.handle);
  CHECK(json.find("\"op\":\"evict\"") != std::string::npos);
  CHECK(json.find("\"chosen\":\"{ft,tf}\"") != std::string::npos);
}

TEST_CASE("c api: parse errors carry positions") {
  System system;
  char* error = nullptr;
  REQUIRE(bcm_system_create("prop", "p,q", nullptr, &system.handle, &error) == BCM_OK);

  bcm_report* out = nullptr;
  bcm_status status = bcm_evict(system.handle, "p ->\n", "{tt}", nullptr, 0, &out, &error);
  CHECK(status == BCM_PARSE_ERROR);
  CHECK(out == nullptr);
  std::string message = take_error(error);
  CHECK(message.find("line 1") != std::string::npos);
  CHECK(message.find("column 5") != std::string::npos);
}

TEST_CASE("c api: incompatibility surfaces a witness") {
  System system;
  char* error = nullptr;
  REQUIRE(bcm_system_create("prop-t", "a,b", nullptr, &system.handle, &error) == BCM_OK);

  bcm_report* out = nullptr;
  bcm_status status = bcm_evict(system.handle, "a\n", "mod-of: a", nullptr, 0, &out, &error);
  CHECK(status == BCM_INCOMPATIBLE);
  take_error(error);

  // Keep mode turns the failure into a no-op report.
  Report kept;
  REQUIRE(bcm_evict(system.handle, "a\n", "mod-of: a", nullptr, 1, &kept.handle, &error) ==
          BCM_OK);
  std::string json = bcm_report_json(kept.handle);
  CHECK(json.find("\"status\":\"kept\"") != std::string::npos);
}

TEST_CASE("c api: compat lines") {
  char* error = nullptr;
  System p3;
  REQUIRE(bcm_system_create("p3", "p", nullptr, &p3.handle, &error) == BCM_OK);
  Report p3_report;
  REQUIRE(bcm_compat(p3.handle, &p3_report.handle, &error) == BCM_OK);
  CHECK(std::string(bcm_report_text(p3_report.handle)) ==
        "eviction: no (all-u model in every representable set)\nreception: yes\n");

  System ltlx;
  REQUIRE(bcm_system_create("ltlx", nullptr, nullptr, &ltlx.handle, &error) == BCM_OK);
  Report ltlx_report;
  REQUIRE(bcm_compat(ltlx.handle, &ltlx_report.handle, &error) == BCM_OK);
  CHECK(std::string(bcm_report_text(ltlx_report.handle)) ==
        "eviction: no (universal model witness)\nreception: yes (rcp_X construction)\n");

  System horn;
  REQUIRE(bcm_system_create("horn", "p,q", nullptr, &horn.handle, &error) == BCM_OK);
  Report horn_report;
  REQUIRE(bcm_compat(horn.handle, &horn_report.handle, &error) == BCM_OK);
  CHECK(std::string(bcm_report_text(horn_report.handle)) == "eviction: yes\nreception: yes\n");
}

TEST_CASE("c api: usage errors") {
  char* error = nullptr;
  bcm_system* out = nullptr;
  CHECK(bcm_system_create("modal", "p", nullptr, &out, &error) == BCM_USAGE_ERROR);
  CHECK(take_error(error).find("unknown logic") != std::string::npos);
  CHECK(bcm_system_create("prop", nullptr, nullptr, &out, &error) == BCM_USAGE_ERROR);
  take_error(error);
  CHECK(bcm_system_create("horn", "p,q", "1/2", &out, &error) == BCM_USAGE_ERROR);
  CHECK(take_error(error).find("theta") != std::string::npos);
}

TEST_CASE("c api: postulates and lattice need a finite catalog") {
  char* error = nullptr;
  System qint;
  REQUIRE(bcm_system_create("qint", nullptr, nullptr, &qint.handle, &error) == BCM_OK);
  bcm_report* out = nullptr;
  CHECK(bcm_postulates(qint.handle, &out, &error) == BCM_BOUND_ERROR);
  take_error(error);
  CHECK(bcm_lattice(qint.handle, nullptr, &out, &error) == BCM_BOUND_ERROR);
  take_error(error);

  System prop;
  REQUIRE(bcm_system_create("prop", "p,q", nullptr, &prop.handle, &error) == BCM_OK);
  Report lattice;
  REQUIRE(bcm_lattice(prop.handle, "{tt,tf}", &lattice.handle, &error) == BCM_OK);
  CHECK(std::string(bcm_report_text(lattice.handle)).find("digraph lattice") !=
        std::string::npos);

  Report postulates;
  REQUIRE(bcm_postulates(prop.handle, &postulates.handle, &error) == BCM_OK);
  CHECK(std::string(bcm_report_text(postulates.handle)).find("10/10 postulates pass") !=
        std::string::npos);
}

TEST_CASE("c api: qint and ltlx round trips") {
  char* error = nullptr;
  System qint;
  REQUIRE(bcm_system_create("qint", nullptr, nullptr, &qint.handle, &error) == BCM_OK);

  Report received;
  REQUIRE(bcm_receive(qint.handle, "[0,1]\n", "[2,3]", nullptr, 0, &received.handle, &error) ==
          BCM_OK);
  CHECK(std::string(bcm_report_text(received.handle)).find("[0,3]") != std::string::npos);

  bcm_report* out = nullptr;
  bcm_status status = bcm_evict(qint.handle, "[0,1]\n", "{1}", nullptr, 0, &out, &error);
  CHECK(status == BCM_INCOMPATIBLE);
  CHECK(take_error(error).find("witness") != std::string::npos);

  System ltlx;
  REQUIRE(bcm_system_create("ltlx", "p,q", nullptr, &ltlx.handle, &error) == BCM_OK);
  status = bcm_evict(ltlx.handle, "p\nX p\n", "mod-of-base", nullptr, 0, &out, &error);
  CHECK(status == BCM_INCOMPATIBLE);
  std::string message = take_error(error);
  CHECK(message.find("witness") != std::string::npos);
  CHECK(message.find("label s0 p,q") != std::string::npos);
}

TEST_CASE("c api: version string") {
  CHECK(std::strlen(bcm_version()) > 0);
}
