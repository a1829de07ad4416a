#include <atomic>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "doctest.h"

#include "nrt/cache.hpp"
#include "nrt/catalog.hpp"
#include "nrt/cli.hpp"
#include "nrt/error.hpp"
#include "nrt/group_expr.hpp"
#include "nrt/loop_iso.hpp"
#include "nrt/orbit.hpp"
#include "nrt/serialize.hpp"
#include "nrt/subgroups.hpp"
#include "nrt/transversal.hpp"
#include "nrt/verify.hpp"

using namespace nrt;
namespace fs = std::filesystem;

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  struct TempDir {
    fs::path path;

    TempDir() {
      std::random_device rd;
      path = fs::temp_directory_path() / ("nrt-test-" + std::to_string(rd()));
      fs::create_directories(path);
    }

    ~TempDir() {
      std::error_code ec;
      fs::remove_all(path, ec);
    }
  };

  std::string slurp(fs::path const& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  IsoClassReport d8_report(bool orbits) {
    static GroupTable g = make_group("D(8)");
    ClassifyOptions   options;
    options.orbits      = orbits;
    options.group_label = "D(8)";
    return classify_pair(right_cosets(resolve_subgroup(g, "gens:(1,3)")), options);
  }
}  // namespace

TEST_CASE("group serialization") {
  for (auto const* text : {"D(8)", "C(3) : C(4) [inv]", "Alt(4) x C(2)", "Q8"}) {
    auto g    = make_group(text);
    auto j    = group_to_json(g);
    auto back = group_from_json(json::parse(j.dump()));
    CHECK(back.content_hash() == g.content_hash());
    CHECK(back.order() == g.order());
    for (element_type x = 0; x < g.order(); ++x) {
      CHECK(back.name(x) == g.name(x));
    }
  }
  auto j = group_to_json(make_group("Sym(3)"));
  j["mul"][1] = 0;
  CHECK_THROWS_AS(group_from_json(j), ValidationError);
}

TEST_CASE("transversal and loop serialization") {
  auto g = make_group("Alt(4)");
  auto d = right_cosets(resolve_subgroup(g, "gens:(1,2)(3,4)"));
  for (TransversalRank r = 0; r < nrt_count(d); r += 5) {
    auto s = nrt_unrank(d, r);
    CHECK(transversal_from_json(json::parse(transversal_to_json(s).dump()), d) == s);
    auto loop = induced_loop(s);
    CHECK(loop_from_json(json::parse(loop_to_json(loop).dump())) == loop);
  }
}

TEST_CASE("report serialization") {
  for (bool orbits : {false, true}) {
    auto rep  = d8_report(orbits);
    auto text = report_to_json(rep).dump();
    auto back = report_from_json(json::parse(text));
    CHECK(back == rep);
    CHECK(report_to_json(back).dump() == text);
    CHECK(text.find("seconds") == std::string::npos);
  }
  auto j = report_to_json(d8_report(false));
  j["schema_version"] = 99;
  CHECK_THROWS(report_from_json(j));

  CHECK(report_csv_header() == "group,subgroup,m,n,phi,orbit_count,wall_seconds");
  auto row = report_csv_row(d8_report(true));
  CHECK(row.find(",2,4,6,6,") != std::string::npos);
  CHECK(census_csv_header() == "n,labeled_count,T_n,wall_seconds");
  CHECK(census_csv_row(census(4)).rfind("4,216,44,", 0) == 0);
  auto cj = census_to_json(census(3));
  CHECK(cj["classes"] == 3);
}

TEST_CASE("report cache") {
  TempDir     dir;
  ReportCache cache(dir.path);
  auto        rep = d8_report(true);
  CHECK(!cache.load(rep.group_hash, rep.subgroup));
  cache.store(rep);
  auto hit = cache.load(rep.group_hash, rep.subgroup);
  REQUIRE(hit);
  CHECK(*hit == rep);

  auto key = cache_key(rep.group_hash, rep.subgroup);
  CHECK(key.size() == 64);
  CHECK(key != cache_key(rep.group_hash, rep.subgroup, "nrtkit-2"));
  CHECK(fs::exists(cache.path_for(key)));

  ReportCache bumped(dir.path, "nrtkit-2");
  CHECK(!bumped.load(rep.group_hash, rep.subgroup));

  auto other = rep.subgroup;
  other.push_back(1);
  CHECK(!cache.load(rep.group_hash, other));

  {
    std::ofstream corrupt(cache.path_for(key), std::ios::trunc);
    corrupt << "{\"schema_version\": 1, \"key\": ";
  }
  std::ostringstream warn;
  CHECK(!cache.load(rep.group_hash, rep.subgroup, &warn));
  CHECK(!warn.str().empty());

  cache.store(rep);
  auto reference = slurp(cache.path_for(key));
  std::vector<std::jthread> writers;
  for (int i = 0; i < 8; ++i) {
    writers.emplace_back([&] {
      for (int k = 0; k < 20; ++k) {
        cache.store(rep);
      }
    });
  }
  writers.clear();
  CHECK(slurp(cache.path_for(key)) == reference);
  std::size_t files = 0;
  for ([[maybe_unused]] auto const& e : fs::directory_iterator(dir.path)) {
    ++files;
  }
  CHECK(files == 1);

  CHECK_THROWS_AS(ReportCache(fs::path("/proc/nrt-no-such-dir")).store(rep), ResourceError);
}

TEST_CASE("subgroup selectors") {
  auto s4 = make_group("Sym(4)");
  CHECK(resolve_subgroup(s4, "gens:(1,2);(3,4)").size() == 4);
  CHECK(resolve_subgroup(s4, "gens:").size() == 1);
  CHECK(resolve_subgroup(s4, "order:8").size() == 8);
  CHECK(resolve_subgroup(s4, "order:4,normal").is_normal());
  CHECK(!resolve_subgroup(s4, "order:4,nonnormal").is_normal());
  CHECK(core(resolve_subgroup(s4, "order:2,corefree")).size() == 1);
  CHECK(resolve_subgroup(s4, " order:12 ").size() == 12);
  auto all = subgroups_all(s4);
  CHECK(resolve_subgroup(s4, "index:7") == all[7]);
  CHECK_THROWS_AS(resolve_subgroup(s4, "index:30"), PreconditionError);
  CHECK_THROWS_AS(resolve_subgroup(s4, "order:5"), PreconditionError);
  CHECK_THROWS_AS(resolve_subgroup(s4, "order:4,tiny"), ParseError);
  CHECK_THROWS_AS(resolve_subgroup(s4, "gens:(1,5)"), ParseError);
  CHECK_THROWS_AS(resolve_subgroup(s4, "index:x"), ParseError);
  CHECK_THROWS_AS(resolve_subgroup(s4, "subgroup 3"), ParseError);

  for (auto const& h : all) {
    CHECK(resolve_subgroup(s4, gens_selector(h)) == h);
  }
  auto c3c4 = make_group("C(3) : C(4) [inv]");
  for (auto const& h : subgroups_all(c3c4)) {
    CHECK(resolve_subgroup(c3c4, gens_selector(h)) == h);
  }
  CHECK(subgroup_class_representatives(s4).size() == 11);

  auto d8 = resolve_subgroup(s4, "gens:(1,3);(1,2,3,4)");
  auto as_group = make_group(permutation_group_expr(d8));
  CHECK(as_group.order() == 8);
}

TEST_CASE("fixture catalog") {
  auto pairs = fixture_pairs();
  CHECK(pairs.size() >= 10);
  for (auto const& p : pairs) {
    CAPTURE(p.name);
    CHECK_NOTHROW(make_group(p.group));
  }
}

TEST_CASE("CLI exit codes and output") {
  CHECK(run({}).code == EXIT_USAGE);
  CHECK(run({"bogus"}).code == EXIT_USAGE);
  CHECK(run({"census", "6"}).code == EXIT_RESOURCE);
  CHECK(run({"census", "x"}).code == EXIT_USAGE);
  CHECK(run({"classify", "Sym(4"}).code == EXIT_USAGE);
  CHECK(run({"classify", "Sym(4", "-s", "order:2"}).code == EXIT_USAGE);
  CHECK(run({"classify", "Sym(4)", "-s", "order:5"}).code == EXIT_USAGE);
  CHECK(run({"classify", "Sym(4)", "-s", "order:2", "--bound", "10"}).code
        == EXIT_RESOURCE);
  CHECK(run({"verify", "--suite", "other"}).code == EXIT_USAGE);
  CHECK(run({"group", "info", "C(4) : C(2) [pow 2]"}).code == EXIT_USAGE);

  auto parse = run({"group", "info", "Sym(4"});
  CHECK(parse.err.find("position 5") != std::string::npos);

  auto info = run({"group", "info", "C(3) : C(4) [inv]"});
  CHECK(info.code == EXIT_OK);
  CHECK(info.out.find("order        12") != std::string::npos);
  CHECK(info.out.find("order   2: 1\n") != std::string::npos);

  auto cls = run({"classify", "D(8)", "-s", "gens:(1,3)", "--orbits"});
  CHECK(cls.code == EXIT_OK);
  CHECK(cls.out.find("phi          6") != std::string::npos);
  CHECK(cls.out.find("lengths 2 2 1 1 1 1") != std::string::npos);

  auto js = run({"classify", "Alt(4)", "-s", "gens:(1,2)(3,4)", "--format", "json"});
  CHECK(js.code == EXIT_OK);
  CHECK(json::parse(js.out)["phi"] == 5);

  auto census4 = run({"census", "4"});
  CHECK(census4.out.find("T_4 = 44") != std::string::npos);
  auto csv = run({"census", "3", "--format", "csv"});
  CHECK(csv.out.rfind("n,labeled_count,T_n,wall_seconds\n3,4,3,", 0) == 0);

  auto burn = run({"burnside", "Sym(4)", "-s", "order:6"});
  CHECK(burn.code == EXIT_OK);
  CHECK(burn.out == "44\n");

  auto count = run({"nrt", "count", "Sym(4)", "-s", "index:4"});
  CHECK(count.code == EXIT_OK);

  auto subs = run({"subgroups", "Q8", "--format", "json"});
  CHECK(subs.code == EXIT_OK);
  CHECK(json::parse(subs.out)["subgroups"].size() == 6);
}

TEST_CASE("CLI cache round trip") {
  TempDir dir;
  auto    args = std::vector<std::string>{"classify", "D(12)", "-s", "order:2,nonnormal",
                                          "--cache", dir.path.string(), "--format", "json"};
  auto first  = run(args);
  auto second = run(args);
  CHECK(first.code == EXIT_OK);
  CHECK(second.out == first.out);
  CHECK(json::parse(first.out)["phi"] == 20);
  std::size_t files = 0;
  for ([[maybe_unused]] auto const& e : fs::directory_iterator(dir.path)) {
    ++files;
  }
  CHECK(files == 1);
  args.push_back("--orbits");
  auto with_orbits = json::parse(run(args).out);
  CHECK(with_orbits.contains("orbits"));
}

TEST_CASE("scan") {
  ScanOptions one;
  one.max_order = 24;
  ScanOptions two = one;
  two.jobs        = 2;
  auto a = scan_theorems(one);
  auto b = scan_theorems(two);
  CHECK(a.passed());
  CHECK(a.label == "consistency check");
  CHECK(scan_to_json(a).dump() == scan_to_json(b).dump());
  for (auto const& t : a.theorems) {
    CAPTURE(t.name);
    CHECK(t.passed);
  }
  auto scan = run({"scan", "--ambient", "D(12)"});
  CHECK(scan.code == EXIT_OK);
}

TEST_CASE("reference suite without the order-120 classification") {
  SuiteOptions options;
  options.sym5_classification = false;
  options.jobs                = 2;
  auto checks                 = run_paper_suite(options);
  CHECK(checks.size() >= 25);
  for (auto const& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
}
