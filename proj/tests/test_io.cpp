#include "tomo/error.hpp"
#include "tomo/generate.hpp"
#include "tomo/io.hpp"
#include "tomo/render.hpp"
#include "tomo/verifier.hpp"

#include "support/brute_force.hpp"

#include <doctest.h>

using namespace tomo;
using tomo::testing::Rng;

namespace {

const char* const kMinimalRec = "REC\n"
                                "k 2 nu 1 t 0\n"
                                "m 2 n 2\n"
                                "R 1 0\n"
                                "C 0 1\n"
                                "V\n"
                                "1 1 1\n"
                                "END\n";

int parse_error_line(std::string_view text)
{
    try {
        parse_instance(text);
    }
    catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_CASE("minimal REC file")
{
    const auto inst = std::get<RecInstance>(parse_instance(kMinimalRec));
    CHECK(inst.k == 2);
    CHECK(inst.nu == 1);
    CHECK(inst.t == 0);
    CHECK(inst.m == 2);
    CHECK(inst.n == 2);
    CHECK(inst.row_sums == std::vector<int>{1, 0});
    CHECK(inst.col_sums == std::vector<int>{0, 1});
    CHECK(inst.block_values == std::vector<int>{1});
    CHECK(write_instance(inst) == kMinimalRec);
}

TEST_CASE("block value outside {0, nu}")
{
    const std::string text = "REC\nk 2 nu 1 t 0\nm 2 n 2\nR 1 0\nC 0 1\nV\n1 1 2\nEND\n";
    CHECK_THROWS_AS(parse_instance(text), ParseError);
    CHECK(parse_error_line(text) == 7);
}

TEST_CASE("window leaving the grid")
{
    const std::string text = "WREC\nk 2 t 0\nm 2 n 2\nR 0 0\nC 0 0\nW\n2 1 = 0\nEND\n";
    CHECK_THROWS_AS(parse_instance(text), ParseError);
    CHECK(parse_error_line(text) == 7);
}

TEST_CASE("further malformed input")
{
    // wrong header, missing corner, bad relation, k not dividing m, short sums
    CHECK(parse_error_line("RECT\n") == 1);
    CHECK(parse_error_line("REC\nk 2 nu 1 t 0\nm 4 n 2\nR 0 0\nC 0 0 0 0\nV\n1 1 1\nEND\n") > 0);
    CHECK(parse_error_line("WREC\nk 2 t 0\nm 2 n 2\nR 0 0\nC 0 0\nW\n1 1 << 0\nEND\n") == 7);
    CHECK(parse_error_line("REC\nk 2 nu 1 t 0\nm 3 n 2\nR 0 0\nC 0 0 0\nV\nEND\n") > 0);
    CHECK(parse_error_line("REC\nk 2 nu 1 t 0\nm 2 n 2\nR 0\nC 0 0\nV\n1 1 1\nEND\n") == 4);
    CHECK(parse_error_line("") > 0);
}

TEST_CASE("WREC round trip")
{
    const std::string text = "WREC\nk 2 t 3\nm 4 n 2\nR 2 3\nC 1 2 1 1\nW\n1 1 <= 3\n2 1 >= 2\n3 1 = 3\nEND\n";
    const auto inst = parse_instance(text);
    const auto& w = std::get<WRecInstance>(inst);
    CHECK(w.windows.size() == 3);
    CHECK(w.windows.at({2, 1}).rel == Relation::GE);
    CHECK(write_instance(inst) == text);
}

TEST_CASE("solution format")
{
    BinaryImage x(2, 2);
    x.set(2, 1, true);
    CHECK(write_solution(x) == "SOL 2 2\n00\n01\n");
    CHECK(parse_solution("SOL 2 2\n00\n01\n") == x);
    CHECK(write_solution(BinaryImage(3, 1)) == "SOL 3 1\n000\n");
    CHECK_THROWS_AS(parse_solution("SOL 2 2\n00\n0x\n"), ParseError);
    CHECK_THROWS_AS(parse_solution("SOL 2 2\n00\n"), ParseError);
    CHECK_THROWS_AS(parse_solution("SOL 2 2\n000\n01\n"), ParseError);
}

TEST_CASE("solution round trip on random images")
{
    Rng rng(71);
    for (int round = 0; round < 200; ++round) {
        const auto x = testing::image_from_mask(rng.uniform(1, 8), rng.uniform(1, 8), rng.next());
        CHECK(parse_solution(write_solution(x)) == x);
    }
}

TEST_CASE("three-color file round trip")
{
    const std::string text = "TCOL\nm 2 n 1\nR1 1\nR2 1\nC1 1 0\nC2 0 1\nEND\n";
    const auto tc = parse_three_color(text);
    CHECK(tc.m == 2);
    CHECK(tc.c2 == std::vector<int>{0, 1});
    CHECK(write_three_color(tc) == text);
}

TEST_CASE("rendering")
{
    BinaryImage x(2, 2);
    x.set(1, 2, true);
    CHECK(render(x, RenderFormat::ASCII) == "#.\n..\n");

    const auto pgm = render(BinaryImage(4, 2), RenderFormat::PGM);
    const std::string header = "P5\n4 2\n255\n";
    REQUIRE(pgm.size() == header.size() + 8);
    CHECK(pgm.substr(0, header.size()) == header);
    for (std::size_t i = header.size(); i < pgm.size(); ++i)
        CHECK(static_cast<unsigned char>(pgm[i]) == 255);

    const auto dark = render(x, RenderFormat::PGM);
    CHECK(static_cast<unsigned char>(dark[std::string("P5\n2 2\n255\n").size()]) == 0);
}

TEST_CASE("planted generator")
{
    const auto empty = gen_planted(4, 4, 2, 1, 0, 0.0, 3);
    CHECK(empty.witness.count() == 0);
    CHECK(empty.instance.row_sums == std::vector<int>(4, 0));

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto corners = gen_planted(4, 4, 2, 1, 1, 1.0, seed);
        for (const auto& c : corner_points(4, 4, 2)) {
            const auto p = pattern_of(corners.witness, c.p, c.q, 2);
            CHECK(p.size() == 1);
            CHECK((p.contains({0, 0}) || p.contains({1, 1})));
        }
    }

    Rng rng(72);
    for (int round = 0; round < 300; ++round) {
        const int k = rng.uniform(1, 3);
        const int t = rng.uniform(0, 2);
        const int nu = rng.uniform(1, k * k);
        const auto planted = gen_planted(k * rng.uniform(1, 4), k * rng.uniform(1, 4), k, nu, t, 0.5, rng.next());
        CHECK(verify_rec(planted.instance, planted.witness).ok());
        CHECK(testing::naive_rec_ok(planted.instance, planted.witness));
        const auto again = parse_instance(write_instance(planted.instance));
        CHECK(std::get<RecInstance>(again) == planted.instance);
    }
    CHECK(gen_planted(6, 6, 2, 1, 0, 0.7, 9).witness == gen_planted(6, 6, 2, 1, 0, 0.7, 9).witness);
}
