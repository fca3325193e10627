#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using hca::cli::RunConfig;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <typename F>
Run run(F&& f) {
    std::ostringstream out, err;
    int code = f(out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("basis listing") {
    RunConfig cfg;
    cfg.curve = "t^6-2*b*t^3+1";
    Run r = run([&](auto& o, auto& e) { return hca::cli::cmd_basis(cfg, o, e); });
    CHECK(r.code == 0);
    CHECK(r.out.find("omega0 = t^-1 dt") != std::string::npos);
    CHECK(r.out.find("omega6 = t^-6*u dt") != std::string::npos);

    cfg.curve = "t^2-2*b*t+1";
    r = run([&](auto& o, auto& e) { return hca::cli::cmd_basis(cfg, o, e); });
    CHECK(r.code == 0);
    CHECK(r.out.find("omega2") != std::string::npos);
    CHECK(r.out.find("omega3") == std::string::npos);

    cfg.curve = "t^3";
    r = run([&](auto& o, auto& e) { return hca::cli::cmd_basis(cfg, o, e); });
    CHECK(r.code == 2);
    CHECK(r.err.find("a_0") != std::string::npos);
}

TEST_CASE("series command with route comparison") {
    RunConfig cfg;
    cfg.curve = "t^4-2*c*t^2+1";
    cfg.order = 13;
    cfg.both_routes = true;
    Run r = run([&](auto& o, auto& e) { return hca::cli::cmd_series(cfg, "p", -4, o, e); });
    CHECK(r.code == 0);
    CHECK(r.out.find("routes agree: yes") != std::string::npos);
    cfg.format = "json";
    r = run([&](auto& o, auto& e) { return hca::cli::cmd_series(cfg, "p", -4, o, e); });
    CHECK(r.code == 0);
    CHECK(r.out.find("\"routes_agree\": true") != std::string::npos);
    CHECK(r.out.find("\"coefficient\": \"1\"") != std::string::npos);
    // usage errors
    r = run([&](auto& o, auto& e) { return hca::cli::cmd_series(cfg, "x", -4, o, e); });
    CHECK(r.code == 2);
    r = run([&](auto& o, auto& e) { return hca::cli::cmd_series(cfg, "p", -9, o, e); });
    CHECK(r.code == 2);
}

TEST_CASE("series csv table") {
    RunConfig cfg;
    cfg.curve = "t^6-2*b*t^3+1";
    cfg.order = 16;
    cfg.format = "csv";
    Run r = run([&](auto& o, auto& e) { return hca::cli::cmd_series(cfg, "p", -1, o, e); });
    CHECK(r.code == 0);
    CHECK(r.out.find("k,i,polynomial") != std::string::npos);
    CHECK(r.out.find("2,-1,\"1/2*b\"") != std::string::npos);
}

TEST_CASE("bracket command") {
    RunConfig cfg;
    cfg.curve = "t^6-2*b*t^3+1";
    Run r = run([&](auto& o, auto& e) {
        return hca::cli::cmd_bracket(cfg, "e@t", "f@t^-1", o, e);
    });
    CHECK(r.code == 0);
    CHECK(r.out.find("h@1 - 4*omega0") != std::string::npos);
    r = run([&](auto& o, auto& e) {
        return hca::cli::cmd_bracket(cfg, "h@1", "h@t^5", o, e);
    });
    CHECK(r.code == 0);
    CHECK(r.out.find("= 0") != std::string::npos);
    r = run([&](auto& o, auto& e) {
        return hca::cli::cmd_bracket(cfg, "e@u", "f@t^3", o, e);
    });
    CHECK(r.code == 0);
    CHECK(r.out.find("6*b*omega1") != std::string::npos);
    CHECK(r.out.find("6*omega4") != std::string::npos);
    // parse failure carries a caret diagnostic
    r = run([&](auto& o, auto& e) { return hca::cli::cmd_bracket(cfg, "e@t^", "f@1", o, e); });
    CHECK(r.code == 2);
    CHECK(r.err.find('^') != std::string::npos);
}

TEST_CASE("reduce command, lemma and elimination routes") {
    RunConfig cfg;
    cfg.curve = "t^6-2*b*t^3+1";
    Run r = run([&](auto& o, auto& e) {
        return hca::cli::cmd_reduce(cfg, "t^2", "t^-2", false, o, e);
    });
    CHECK(r.code == 0);
    CHECK(r.out.find("-2*omega0") != std::string::npos);
    r = run([&](auto& o, auto& e) {
        return hca::cli::cmd_reduce(cfg, "t^2*u dt", "", false, o, e);
    });
    CHECK(r.code == 0);
    CHECK(r.out.find("1/2*b*omega1") != std::string::npos);
    cfg.at = "b=2";
    r = run([&](auto& o, auto& e) {
        return hca::cli::cmd_reduce(cfg, "t^2*u dt", "", true, o, e);
    });
    CHECK(r.code == 0);
    CHECK(r.out.find("omega1 + 1/2*omega4") != std::string::npos);
}

TEST_CASE("verify exits 0 only when every suite passes") {
    RunConfig cfg;
    cfg.curve = "t^6-2*b*t^3+1";
    cfg.trials = 25;
    Run r = run([&](auto& o, auto& e) { return hca::cli::cmd_verify(cfg, "all", o, e); });
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS jacobi") != std::string::npos);
    CHECK(r.out.find("PASS routes") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    r = run([&](auto& o, auto& e) { return hca::cli::cmd_verify(cfg, "bogus", o, e); });
    CHECK(r.code == 2);
}

TEST_CASE("verify output is deterministic under a fixed seed") {
    RunConfig cfg;
    cfg.curve = "t^4-2*c*t^2+1";
    cfg.trials = 10;
    cfg.seed = 99;
    Run a = run([&](auto& o, auto& e) { return hca::cli::cmd_verify(cfg, "oracle", o, e); });
    Run b = run([&](auto& o, auto& e) { return hca::cli::cmd_verify(cfg, "oracle", o, e); });
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("examples reproduce the embedded worked values") {
    RunConfig cfg;
    for (const char* which : {"quartic", "hexic"}) {
        Run r = run([&](auto& o, auto& e) { return hca::cli::cmd_examples(cfg, which, o, e); });
        CHECK(r.code == 0);
        CHECK(r.out.find("all values reproduced") != std::string::npos);
        CHECK(r.out.find("MISMATCH") == std::string::npos);
    }
    Run r = run([&](auto& o, auto& e) { return hca::cli::cmd_examples(cfg, "cubic", o, e); });
    CHECK(r.code == 2);
}

TEST_CASE("custom algebra from a structure-constant file") {
    const std::string path = "sl2_rows.csv";
    {
        std::ofstream f(path);
        f << "# [x1,x0] = 2 x0, [x1,x2] = -2 x2, [x0,x2] = x1\n";
        f << "1,0,0,2\n1,2,2,-2\n0,2,1,1\n";
    }
    RunConfig cfg;
    cfg.curve = "t^6-2*b*t^3+1";
    cfg.algebra = "file:" + path;
    Run r = run([&](auto& o, auto& e) {
        return hca::cli::cmd_bracket(cfg, "x0@t", "x2@t^-1", o, e);
    });
    CHECK(r.code == 0);
    CHECK(r.out.find("x1@1 - 4*omega0") != std::string::npos);
    cfg.trials = 25;
    r = run([&](auto& o, auto& e) { return hca::cli::cmd_verify(cfg, "jacobi", o, e); });
    CHECK(r.code == 0);
    cfg.algebra = "file:no_such_file.csv";
    r = run([&](auto& o, auto& e) { return hca::cli::cmd_verify(cfg, "jacobi", o, e); });
    CHECK(r.code == 2);
    std::remove(path.c_str());
}

TEST_CASE("structure table formats") {
    RunConfig cfg;
    cfg.curve = "t^4-2*c*t^2+1";
    cfg.format = "json";
    Run r = run([&](auto& o, auto& e) { return hca::cli::cmd_table(cfg, -2, 2, "all", o, e); });
    CHECK(r.code == 0);
    CHECK(r.out.find("\"rows\"") != std::string::npos);
    CHECK(r.out.find("\"parity\": \"odd\"") != std::string::npos);
    cfg.format = "csv";
    r = run([&](auto& o, auto& e) { return hca::cli::cmd_table(cfg, -2, 2, "all", o, e); });
    CHECK(r.code == 0);
    CHECK(r.out.find("left_exp,left_parity") != std::string::npos);
    r = run([&](auto& o, auto& e) { return hca::cli::cmd_table(cfg, -2, 2, "sideways", o, e); });
    CHECK(r.code == 2);
}
