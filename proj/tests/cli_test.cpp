#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "okb/fixtures.hpp"
#include "okb/model_io.hpp"
#include "okb/okounkov.hpp"
#include "okb/polygon.hpp"

using namespace okb;
using json = nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Invoke the installed binary the way a user would, capturing both streams.
RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string base = "/tmp/okb_cli_" + std::to_string(++counter);
  std::string out_path = base + ".out";
  std::string err_path = base + ".err";
  std::string cmd =
      std::string(OKB_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("zariski json output") {
    RunResult r = run_cli("zariski L1 --fixture quartic --json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["positive"] == json::array({"0", "0", "0"}));
    CHECK(j["negative"] == json({{"L1", "1"}}));

    RunResult mixed = run_cli("zariski C+2L1+2L2+L1 --fixture quartic --json");
    REQUIRE(mixed.code == 0);
    json jm = json::parse(mixed.out);
    CHECK(jm["positive"] == json::array({"2", "2", "1"}));
    CHECK(jm["negative"] == json({{"L1", "1"}}));
  }

  TEST_CASE("volume and chambers") {
    RunResult vol = run_cli("volume C+2L1+2L2 --fixture quartic --json");
    REQUIRE(vol.code == 0);
    CHECK(json::parse(vol.out)["volume"] == "6");

    RunResult count = run_cli("chambers --fixture quartic --count-only");
    REQUIRE(count.code == 0);
    CHECK(count.out == "4\n");

    RunResult js = run_cli("chambers --fixture quartic --json");
    REQUIRE(js.code == 0);
    json j = json::parse(js.out);
    CHECK(j["count"] == 4);
    CHECK(j["chambers"] == json::array({json::array({"L1"}), json::array({"L2"}),
                                        json::array({"C"}),
                                        json::array({"L1", "L2"})}));

    RunResult dp6 = run_cli("chambers --fixture dp6 --count-only --json");
    CHECK(json::parse(dp6.out)["count"] == 17);
  }

  TEST_CASE("star and weyl checks") {
    json quartic = json::parse(run_cli("star-check --fixture quartic --json").out);
    CHECK(quartic["satisfied"] == false);
    CHECK(quartic["witness"] == json::array({"L1", "L2"}));

    json dp6 = json::parse(run_cli("star-check --fixture dp6 --json").out);
    CHECK(dp6["satisfied"] == true);
    CHECK(dp6["witness"].is_null());

    CHECK(json::parse(run_cli("weyl-check --fixture quartic --json").out)["simple"] ==
          false);
    CHECK(json::parse(run_cli("weyl-check --fixture dp6 --json").out)["simple"] == true);
  }

  TEST_CASE("okounkov json matches the library") {
    RunResult r = run_cli("okounkov 3,0,-1,-1 --flag 3,-1,-1,-1 --fixture dp6 --json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["vertices"] ==
          json::array({json::array({"0", "0"}), json::array({"1", "0"}),
                       json::array({"0", "7"})}));
    CHECK(j["area"] == "7/2");
    CHECK(j["t_min"] == "0");
    CHECK(j["t_max"] == "1");
    REQUIRE(j["segments"].size() == 1);
    CHECK(j["segments"][0]["support"] == json::array({"E1"}));

    // Byte-stable across runs.
    RunResult again = run_cli("okounkov 3,0,-1,-1 --flag 3,-1,-1,-1 --fixture dp6 --json");
    CHECK(r.out == again.out);

    // A nef-but-not-big class degenerates; no walk data is printed.
    json seg = json::parse(
        run_cli("okounkov 1,0,1 --flag C+2L1+2L2 --fixture quartic --json").out);
    CHECK(seg["vertices"] ==
          json::array({json::array({"0", "0"}), json::array({"0", "6"})}));
    CHECK(seg.find("t_min") == seg.end());
  }

  TEST_CASE("okounkov svg export") {
    std::string svg_path = "/tmp/okb_cli_okounkov.svg";
    RunResult r = run_cli("okounkov C+2L1+2L2 --flag C+2L1+2L2 --fixture quartic --json --svg " +
                          svg_path);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["svg"] == svg_path);

    SurfaceModel m = fixtures::quartic();
    DivisorClass d({2, 2, 1});
    RationalPolygon poly = okounkov_polygon(m, d, Flag{d});
    CHECK(slurp(svg_path) == polygons_to_svg({{"C+2L1+2L2", poly}}));
    std::remove(svg_path.c_str());
  }

  TEST_CASE("minkowski basis commands") {
    json mb = json::parse(run_cli("mb --flag C+2L1+2L2 --fixture quartic --json").out);
    CHECK(mb["count"] == 4);
    REQUIRE(mb["elements"].size() == 4);
    CHECK(mb["elements"][0]["class"] == json::array({"2", "2", "1"}));
    CHECK(mb["elements"][0]["origin"] == "flag");
    CHECK(mb["elements"][1]["origin"] == "nef-ray");
    CHECK(mb["elements"][3]["class"] == json::array({"2", "2", "4"}));
    CHECK(mb["elements"][3]["origin"] == "chamber");
    CHECK(mb["elements"][3]["chamber"] == json::array({"C"}));

    RunResult card = run_cli("mb-card --bound --fixture quartic --flag C+2L1+2L2");
    CHECK(card.out == "4\n");
    RunResult ample = run_cli("mb-card --ample --fixture quartic");
    CHECK(ample.out == "7\n");
    json card_js =
        json::parse(run_cli("mb-card --bignef --fixture dp6 --flag 1,0,0,0 --json").out);
    CHECK(card_js["mode"] == "bignef");
    CHECK(card_js["count"] == 11);

    json dec = json::parse(
        run_cli("mb-decompose 3,2,2 --flag C+2L1+2L2 --fixture quartic --json").out);
    REQUIRE(dec["coefficients"].size() == 4);  // one term per basis element, zeros kept
    CHECK(dec["coefficients"][0]["element"] == json::array({"2", "2", "1"}));
    CHECK(dec["coefficients"][0]["coefficient"] == "1");
    CHECK(dec["coefficients"][1]["coefficient"] == "0");
    CHECK(dec["coefficients"][2]["element"] == json::array({"1", "0", "1"}));
    CHECK(dec["coefficients"][2]["coefficient"] == "1");
    CHECK(dec["coefficients"][3]["element"] == json::array({"2", "2", "4"}));
    CHECK(dec["coefficients"][3]["coefficient"] == "0");

    json reduced =
        json::parse(run_cli("reduced-chambers --fixture dp6 --flag 1,0,0,0 --json").out);
    CHECK(reduced["count"] == 7);
  }

  TEST_CASE("numeq and fujita") {
    json numeq =
        json::parse(run_cli("numeq 3,2,1 2,2,1 --fixture quartic --json").out);
    CHECK(numeq["equivalent"] == false);
    CHECK(numeq["polygons_equal"] == true);
    CHECK(numeq["curve_products_equal"] == false);
    CHECK(numeq["curve_mismatches"] == json::array({"L1", "L2", "C"}));
    CHECK(numeq["battery"].size() == 3);

    json fujita = json::parse(
        run_cli("fujita 3,0,-1,-1 3,-1,-1,-1 --flag 3,-1,-1,-1 --beta 1 --fixture dp6 --json")
            .out);
    CHECK(fujita["beta"] == "1");
    CHECK(fujita["inner_contained"] == true);
    CHECK(fujita["inner_gap"] == "1/2");
    CHECK(fujita["minimal_delta"] == "1/6");
    CHECK(fujita["outer_gap"] == "7/12");
    CHECK(fujita["within_beta"] == true);
    CHECK(fujita["scaled_a_vertices"] ==
          json::array({json::array({"0", "0"}), json::array({"7/6", "0"}),
                       json::array({"0", "7"})}));
  }

  TEST_CASE("model files and validate") {
    SurfaceModel m = fixtures::quartic();
    std::string good_path = "/tmp/okb_cli_model.json";
    {
      std::ofstream out(good_path, std::ios::binary);
      out << model_to_json(m);
    }
    RunResult good = run_cli("zariski L1 --model " + good_path + " --json");
    REQUIRE(good.code == 0);
    CHECK(good.out == run_cli("zariski L1 --fixture quartic --json").out);

    json valid = json::parse(run_cli("validate --model " + good_path + " --json").out);
    CHECK(valid["valid"] == true);
    CHECK(valid["violations"] == json::array());

    // Break the gram symmetry: validate reports and exits 3.
    std::string text = model_to_json(m);
    text.replace(text.find("\"1\""), 3, "\"7\"");
    std::string bad_path = "/tmp/okb_cli_bad_model.json";
    {
      std::ofstream out(bad_path, std::ios::binary);
      out << text;
    }
    RunResult bad = run_cli("validate --model " + bad_path + " --json");
    CHECK(bad.code == 3);
    json report = json::parse(bad.out);
    CHECK(report["valid"] == false);
    CHECK(report["violations"].size() > 0);

    // Other subcommands refuse an invalid model outright.
    CHECK(run_cli("zariski L1 --model " + bad_path).code == 3);

    std::remove(good_path.c_str());
    std::remove(bad_path.c_str());
  }

  TEST_CASE("exit codes") {
    CHECK(run_cli("no-such-command --fixture quartic").code == 2);
    CHECK(run_cli("zariski --fixture quartic").code == 2);           // missing class
    CHECK(run_cli("zariski L9 --fixture quartic").code == 2);        // unknown label
    CHECK(run_cli("zariski L1 --fixture bogus").code == 2);          // unknown fixture
    CHECK(run_cli("zariski L1").code == 2);                          // no model source
    CHECK(run_cli("zariski L1 --model /tmp/okb_missing_model.json").code == 2);
    CHECK(run_cli("okounkov C+2L1+2L2 --flag L1 --fixture quartic").code == 4);
    CHECK(run_cli("mb-card --bignef --flag C+2L1+2L2 --fixture quartic").code == 4);
    CHECK(run_cli("mb-card --bignef --fixture quartic").code == 2);  // missing --flag
    CHECK(run_cli("volume 0,0,-1 --fixture quartic").code == 4);     // not pseudoeffective
    CHECK(run_cli("zariski L1 --fixture quartic --model /tmp/x.json").code == 2);
    CHECK(run_cli("mb-card --ample --bound --flag C --fixture quartic").code == 2);
  }
}
