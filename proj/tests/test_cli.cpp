#include <catch_amalgamated.hpp>

#include <string>

#include <json.hpp>

#include "helpers.hpp"

using test_helpers::data_file;
using test_helpers::run_cli;
using nlohmann::json;

TEST_CASE("surface subcommands") {
  auto r = run_cli("xi-two N{1,6}");
  CHECK(r.status == 0);
  CHECK(r.out == "4\n");

  CHECK(run_cli("xi S{0,4}").out == "1\n");
  CHECK(run_cli("double-cover N{3,3}").out == "S{2,6}\n");

  auto j = json::parse(run_cli("xi-two N{1,6} --format json").out);
  CHECK(j["value"] == 4);
}

TEST_CASE("word subcommands") {
  std::string g = " --graph " + data_file("p4.json") + " ";
  auto r = run_cli("reduce" + g + "\"b a b^-1\"");
  CHECK(r.status == 0);
  CHECK(r.out == "a\n");

  CHECK(run_cli("normal-form" + g + "\"b a b^-1 c\"").out == "a c\n");

  auto eq = run_cli("equal" + g + "\"b a b^-1\" \"a\"");
  CHECK(eq.status == 0);
  CHECK(eq.out == "true\n");
  CHECK(run_cli("equal" + g + "\"a\" \"b\"").out == "false\n");

  auto cox = run_cli("equal" + g + "--flavor coxeter \"a a\" \"1\"");
  CHECK(cox.status == 0);
  CHECK(cox.out == "true\n");
}

TEST_CASE("enumeration subcommand") {
  auto r = run_cli("enumerate-c4-cases --target 4");
  CHECK(r.status == 0);
  CHECK(r.out.find("6 cases") != std::string::npos);

  auto j = json::parse(run_cli("enumerate-c4-cases --target 4 --format json").out);
  CHECK(j["cases"].size() == 6);
}

TEST_CASE("check-map renders the certificate table") {
  // reuse the bundled fold: build it on the fly through diagonal-hom instead
  if (!test_helpers::data_present("gamma0.json")) SKIP("bundled data absent");
  auto r = run_cli("gamma-demo --samples 200 --max-len 10 --data-dir " +
                   test_helpers::data_dir());
  CHECK(r.status == 0);
  CHECK(r.out.find("phi(q) = e f") != std::string::npos);
  CHECK(r.out.find("K = 2") != std::string::npos);
  CHECK(r.out.find("passed:          yes") != std::string::npos);
}

TEST_CASE("curve graph and pipeline subcommands") {
  if (!test_helpers::data_present("k5_n5_0.json")) SKIP("bundled data absent");
  auto r = run_cli("curve-graph --curves " + data_file("k5_n5_0.json") + " --all");
  CHECK(r.status == 0);
  CHECK(r.out.find("x1") != std::string::npos);

  auto dot = run_cli("curve-graph --curves " + data_file("k5_n5_0.json") + " --all --emit-dot");
  CHECK(dot.out.rfind("graph curves {", 0) == 0);

  auto pipe = run_cli("pipeline --p4 4 --data-dir " + test_helpers::data_dir());
  CHECK(pipe.status == 0);
  CHECK(pipe.out.find("K = 2") != std::string::npos);
  CHECK(pipe.out.find("twist recipe:") != std::string::npos);

  auto blocked = run_cli("pipeline --p4 3 --data-dir " + test_helpers::data_dir());
  CHECK(blocked.status == 1);
  CHECK(blocked.out.find("error: E_INPUT:") != std::string::npos);
  CHECK(blocked.out.find("< 2") != std::string::npos);
}

TEST_CASE("json and text render the same data") {
  std::string g = " --graph " + data_file("p4.json") + " ";
  auto text = run_cli("normal-form" + g + "\"c a\"");
  auto j = json::parse(run_cli("normal-form" + g + "\"c a\" --format json").out);
  CHECK(text.out == j["normal_form"].get<std::string>() + "\n");
}

TEST_CASE("exit codes") {
  CHECK(run_cli("").status == 2);                      // missing subcommand
  CHECK(run_cli("xi-two").status == 2);                // missing argument
  CHECK(run_cli("no-such-command").status == 2);       // unknown subcommand
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("xi-two S{1,0}").status == 1);         // domain error
  auto r = run_cli("xi-two S{1,0}");
  CHECK(r.out.rfind("error: E_INPUT:", 0) == 0);
  CHECK(run_cli("reduce --graph /nonexistent.json a").status == 1);
  CHECK(run_cli("xi-two N{1,6}").status == 0);
}

TEST_CASE("find-induced subcommand") {
  std::string p4 = data_file("p4.json");
  auto r = run_cli("find-induced --small " + p4 + " --big " + p4);
  CHECK(r.status == 0);
  CHECK(r.out.find("2 embeddings") != std::string::npos);  // identity and reversal
}
