#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <latjac/catalog.hpp>
#include <latjac/json_io.hpp>
#include <latjac/lattice_expr.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace latjac;

TEST_CASE("expression parsing") {
    CHECK(lattice_from_expr("A2").gram == IntMat{{2, 1}, {1, 2}});
    CHECK(lattice_from_expr("Z(3)+Z2").gram ==
          IntMat{{3, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(lattice_from_expr("Z").gram == IntMat{{1}});
    CHECK(lattice_from_expr(" D 4 ").gram == lattice_Dn(4).gram);
    CHECK(lattice_from_expr("E8").gram == lattice_En(8).gram);
    CHECK(lattice_from_expr("gram:[[2,1],[1,2]]").gram ==
          lattice_An(2).gram);
    CHECK(lattice_from_expr("gram:[[1]](4)").gram == IntMat{{4}});
    CHECK(lattice_from_expr("A1+gram:[[1,0],[0,1]]+E6").rank() == 9);
    CHECK(lattice_from_expr("A2(2)").gram == IntMat{{4, 2}, {2, 4}});
}

TEST_CASE("expression errors") {
    CHECK_THROWS_AS(lattice_from_expr("E9"), UnknownLatticeError);
    CHECK_THROWS_AS(lattice_from_expr("A0"), UnknownLatticeError);
    CHECK_THROWS_AS(lattice_from_expr("D2"), UnknownLatticeError);
    CHECK_THROWS_AS(lattice_from_expr("A"), SyntaxError);
    CHECK_THROWS_AS(lattice_from_expr("Z(3"), SyntaxError);
    CHECK_THROWS_AS(lattice_from_expr("Q2"), SyntaxError);
    CHECK_THROWS_AS(lattice_from_expr("A2+"), SyntaxError);
    CHECK_THROWS_AS(lattice_from_expr("gram:[[1,2]"), SyntaxError);
    CHECK_THROWS_AS(lattice_from_expr("A2 A2"), SyntaxError);
    // Position is reported.
    try {
        lattice_from_expr("A2+Q");
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    }
    // Degenerate gram literal is a math-domain error, not a syntax error.
    CHECK_THROWS_AS(lattice_from_expr("gram:[[1,1],[1,1]]"), DegenerateError);
}

TEST_CASE("parse-print roundtrip on canonical forms") {
    for (std::string s : {"A2", "Z1(3)+Z2", "E8", "D4(2)+A1",
                          "gram:[[\"2\",\"1\"],[\"1\",\"2\"]]"}) {
        std::string once = print_lattice_expr(parse_lattice_expr(s));
        std::string twice = print_lattice_expr(parse_lattice_expr(once));
        CHECK(once == twice);
        CHECK(evaluate_lattice_expr(parse_lattice_expr(once)).gram ==
              evaluate_lattice_expr(parse_lattice_expr(s)).gram);
    }
    CHECK(print_lattice_expr(parse_lattice_expr("A2")) == "A2");
    CHECK(print_lattice_expr(parse_lattice_expr(" Z ( 3 ) + Z2 ")) ==
          "Z1(3)+Z2");
}

TEST_CASE("gram JSON roundtrip") {
    IntMat g = lattice_An(3).gram;
    CHECK(gram_from_json(gram_to_json(g)) == g);
}

TEST_CASE("recorded root-lattice gram matrices match the constructors") {
    std::ifstream in(std::string(LATJAC_SOURCE_DIR) +
                     "/data/root_lattices.json");
    REQUIRE(in.good());
    json j;
    in >> j;
    auto gram = [&](const std::string& name) {
        IntMat g;
        for (const auto& row : j.at(name)) {
            IntVec r;
            for (const auto& x : row) r.push_back(Int(x.get<long>()));
            g.push_back(r);
        }
        return g;
    };
    CHECK(gram("Z1") == lattice_Zn(1).gram);
    CHECK(gram("Z2") == lattice_Zn(2).gram);
    CHECK(gram("A1") == lattice_An(1).gram);
    CHECK(gram("A2") == lattice_An(2).gram);
    CHECK(gram("A3") == lattice_An(3).gram);
    CHECK(gram("D3") == lattice_Dn(3).gram);
    CHECK(gram("D4") == lattice_Dn(4).gram);
    CHECK(gram("D5") == lattice_Dn(5).gram);
    CHECK(gram("E6") == lattice_En(6).gram);
    CHECK(gram("E7") == lattice_En(7).gram);
    CHECK(gram("E8") == lattice_En(8).gram);
}

// ---------------------------------------------------------------------------
// Integration through the installed binary (built next to this test).
// ---------------------------------------------------------------------------

// The CLI binary is built into the same directory as this test.
static std::string cli_path() {
    char buf[4096];
    ssize_t n = readlink("/proc/self/exe", buf, sizeof buf - 1);
    std::string s(buf, n > 0 ? static_cast<std::size_t>(n) : 0);
    return s.substr(0, s.rfind('/') + 1) + "latjac";
}

static std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST_CASE("cli dim and hp examples") {
    auto [code, out] = run_cli("dim A2 --k 4 --h 0 --json");
    REQUIRE(code == 0);
    json j = json::parse(out);
    CHECK(j.at("value") == "1");
    CHECK(j.at("exactness") == "exact");

    auto [code2, out2] = run_cli("hp A3 --h 0 --parity even --json");
    REQUIRE(code2 == 0);
    json j2 = json::parse(out2);
    CHECK(j2.at("complete") == true);
    REQUIRE(j2.at("terms").size() == 3);
    CHECK(j2.at("terms")[0].at("twok") == 8);
    CHECK(j2.at("terms")[1].at("twok") == 12);
    CHECK(j2.at("terms")[2].at("twok") == 16);
    for (const auto& t : j2.at("terms")) CHECK(t.at("coeff") == 1);

    // Fractional weights in both spellings.
    auto [c3, o3] = run_cli("dim Z --k 1/2 --h 3 --json");
    auto [c4, o4] = run_cli("dim Z --k 0.5 --h 3 --json");
    REQUIRE(c3 == 0);
    REQUIRE(c4 == 0);
    CHECK(json::parse(o3) == json::parse(o4));
    CHECK(json::parse(o3).at("value") == "1");
    CHECK(json::parse(o3).at("method") == "singular");
}

TEST_CASE("cli info and singular") {
    auto [code, out] = run_cli("info A2 --json");
    REQUIRE(code == 0);
    json j = json::parse(out);
    CHECK(j.at("det") == "3");
    CHECK(j.at("even") == true);
    CHECK(j.at("level") == 3);
    CHECK(j.at("shadow").size() == 3);

    auto [c2, o2] = run_cli("singular Z --all --json");
    REQUIRE(c2 == 0);
    json j2 = json::parse(o2);
    REQUIRE(j2.size() == 24);
    for (const auto& e : j2)
        CHECK(e.at("dim") == (e.at("h") == 3 ? 1 : 0));

    auto [c3, o3] = run_cli("singular A2 --h 8 --basis --json");
    REQUIRE(c3 == 0);
    json j3 = json::parse(o3);
    CHECK(j3[0].at("dim") == 1);
    CHECK(j3[0].at("basis").size() == 1);
}

TEST_CASE("cli qexp agrees with the library and is deterministic") {
    auto [code, out] = run_cli("qexp theta --prec 5 --json");
    REQUIRE(code == 0);
    JacobiQExp phi = jacobi_from_json(json::parse(out));
    JacobiQExp want = form_theta(5);
    CHECK(phi.c == want.c);
    CHECK(phi.k == want.k);
    auto [code2, out2] = run_cli("qexp theta --prec 5 --json");
    CHECK(out == out2);
}

TEST_CASE("cli verify suite") {
    auto [code, out] = run_cli("verify --suite representation --json");
    CHECK(code == 0);
    json j = json::parse(out);
    REQUIRE(j.size() == 2);
    for (const auto& e : j) CHECK(e.at("pass") == true);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("info E9").first == 1);           // unknown lattice
    CHECK(run_cli("info 'A2 A2'").first == 1);      // syntax error
    CHECK(run_cli("dim A2 --h 0").first == 1);      // missing --k
    CHECK(run_cli("dim A2 --k 1/3 --h 0").first == 1);  // not half-integral
    CHECK(run_cli("qexp nosuchform --prec 3").first == 1);
    CHECK(run_cli("info gram:[[0]]").first == 2);   // degenerate: math domain
    CHECK(run_cli("info gram:[[-2]]").first == 2);  // not positive definite
    CHECK(run_cli("verify --suite nosuch").first == 1);
}
