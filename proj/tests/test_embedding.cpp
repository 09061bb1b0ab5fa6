#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "hamsep/embedding.hpp"
#include "hamsep/generators.hpp"

using namespace hamsep;

namespace {

const char* kOctahedron = R"(# octahedron
n 6
v 0: 1 2 3 4
v 1: 0 4 5 2
v 2: 0 1 5 3
v 3: 0 2 5 4
v 4: 0 3 5 1
v 5: 1 4 3 2
)";

std::vector<Vertex> random_perm(int n, std::uint64_t seed) {
    std::vector<Vertex> p(n);
    for (int i = 0; i < n; ++i)
        p[i] = i;
    Rng rng(seed);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[i], p[uniform_index(rng, i + 1)]);
    return p;
}

}  // namespace

TEST_CASE("octahedron text parses as a sphere triangulation") {
    SignedEmbedding e = parse_signed_rotation(kOctahedron);
    CHECK(e.order() == 6);
    CHECK(e.size() == 12);
    CHECK(e.all_positive());
    auto faces = trace_faces(e);
    CHECK(faces.size() == 8);
    for (const Face& f : faces)
        CHECK(f.length() == 3);
    CHECK(euler_genus(e) == 0);
    CHECK(validate_triangulation(e).ok());
}

TEST_CASE("K6 fixture is a projective-plane triangulation") {
    auto inst = cli::load_instances(corpus::fixture("k6_projective.rot"), cli::InputFormat::rotation);
    REQUIRE(inst.size() == 1);
    const SignedEmbedding& e = inst[0].embedding;
    CHECK(e.order() == 6);
    CHECK(e.size() == 15);
    CHECK(trace_faces(e).size() == 10);
    CHECK(euler_characteristic(e) == 1);
    CHECK(euler_genus(e) == 1);
    CHECK(validate_triangulation(e).ok());
    CHECK(require_supported_triangulation(e) == 1);
    CHECK(e == k6_projective());
}

TEST_CASE("C4 with two quadrilateral faces fails validation") {
    auto inst = cli::load_instances(corpus::fixture("c4.rot"), cli::InputFormat::rotation);
    ValidationReport r = validate_triangulation(inst[0].embedding);
    CHECK_FALSE(r.ok());
    CHECK(r.faces == 2);
    CHECK_FALSE(r.triangular);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations[0].find("non-triangular face") != std::string::npos);
    CHECK_THROWS_AS(require_supported_triangulation(inst[0].embedding), HypothesisError);
}

TEST_CASE("double wheel face counts") {
    CHECK(trace_faces(double_wheel(10)).size() == 16);
    CHECK(euler_genus(double_wheel(8)) == 0);
    SignedEmbedding w7 = double_wheel(7);
    CHECK(w7.size() == 15);
    CHECK(trace_faces(w7).size() == 10);
}

TEST_CASE("sign mismatch between endpoint lines is rejected") {
    // edge 2-5 is negative at 2 but positive at 5
    std::string text = serialize_signed_rotation(k6_projective());
    auto at = text.find("v 5:");
    REQUIRE(at != std::string::npos);
    auto line_end = text.find('\n', at);
    std::string line = text.substr(at, line_end - at);
    auto pos = line.find(" 2-");
    REQUIRE(pos != std::string::npos);
    line.erase(pos + 2, 1);
    text.replace(at, line_end - at, line);
    CHECK_THROWS_AS(parse_signed_rotation(text), ParseError);
}

TEST_CASE("signed rotation parse errors") {
    CHECK_THROWS_AS(parse_signed_rotation("v 0: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_signed_rotation("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_signed_rotation("n 3\nv 0: 1 2\nv 1: 0 2\n"), ParseError);  // missing vertex 2
    CHECK_THROWS_AS(parse_signed_rotation("n 3\nv 0: 1 2\nv 1: 0 2\nv 2: 0\n"), ParseError);  // asymmetric
    CHECK_THROWS_AS(parse_signed_rotation("n 3\nv 0: 1 9\nv 1: 0\nv 2: 0\n"), ParseError);
    CHECK_THROWS_AS(parse_signed_rotation("n 2\nv 0: 1\nv 0: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_signed_rotation("n 2\nv 0: 1\nv 1: 0\nbogus\n"), ParseError);
}

TEST_CASE("planar code: octahedron, empty stream, errors") {
    auto pcs = cli::load_instances(corpus::fixture("octahedron.pc"), cli::InputFormat::planar_code);
    REQUIRE(pcs.size() == 1);
    CHECK(pcs[0].embedding.order() == 6);
    CHECK(pcs[0].embedding.size() == 12);
    CHECK(trace_faces(pcs[0].embedding).size() == 8);

    CHECK(parse_planar_code(">>planar_code<<").empty());
    CHECK(parse_planar_code("").empty());

    std::string bytes = ">>planar_code<<";
    bytes += std::string("\x03\x02\x03\x00\x01\x03\x00\x01", 8);  // truncated triangle
    CHECK_THROWS_AS(parse_planar_code(bytes), ParseError);

    std::string bad = std::string("\x03\x02\x07\x00\x01\x03\x00\x01\x02\x00", 10);  // neighbour 7 of 3
    CHECK_THROWS_AS(parse_planar_code(bad), ParseError);

    std::string asym = std::string("\x03\x02\x03\x00\x03\x00\x01\x02\x00", 9);  // 1->2 but not 2->1
    CHECK_THROWS_AS(parse_planar_code(asym), ParseError);
}

TEST_CASE("planar code round trip") {
    std::vector<SignedEmbedding> all;
    for (int n = 6; n <= 12; ++n)
        all.push_back(double_wheel(n));
    all.push_back(icosahedron());
    all.push_back(random_triangulation_4c(15, 3, 60));
    auto back = parse_planar_code(serialize_planar_code(all));
    REQUIRE(back.size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(back[i] == all[i]);
}

TEST_CASE("signed rotation round trip over the corpus") {
    for (const auto& item : corpus::triangulations()) {
        CAPTURE(item.name);
        CHECK(parse_signed_rotation(serialize_signed_rotation(item.embedding)) == item.embedding);
    }
}

TEST_CASE("Euler formula on every corpus triangulation") {
    for (const auto& item : corpus::triangulations()) {
        CAPTURE(item.name);
        const SignedEmbedding& e = item.embedding;
        const int n = e.order(), m = e.size();
        auto faces = trace_faces(e);
        int sides = 0;
        for (const Face& f : faces)
            sides += f.length();
        CHECK(sides == 2 * m);
        if (euler_genus(e) == 0) {
            CHECK(m == 3 * n - 6);
            CHECK(static_cast<int>(faces.size()) == 2 * n - 4);
        } else {
            CHECK(euler_genus(e) == 1);
            CHECK(m == 3 * n - 3);
            CHECK(static_cast<int>(faces.size()) == 2 * n - 2);
        }
    }
}

TEST_CASE("vertex flips and relabeling preserve genus and face count") {
    for (const SignedEmbedding& e : {k6_projective(), icosahedron(), double_wheel(9)}) {
        const int genus = euler_genus(e);
        const auto faces = trace_faces(e).size();
        SignedEmbedding f = e;
        for (Vertex v = 0; v < e.order(); v += 2) {
            f = f.flipped(v);
            CHECK(euler_genus(f) == genus);
            CHECK(trace_faces(f).size() == faces);
        }
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            SignedEmbedding r = e.relabeled(random_perm(e.order(), seed));
            CHECK(euler_genus(r) == genus);
            CHECK(trace_faces(r).size() == faces);
        }
    }
}

TEST_CASE("normalisation clears signs on the sphere") {
    SignedEmbedding e = icosahedron().flipped(3).flipped(7);
    CHECK_FALSE(e.all_positive());
    CHECK(e.normalized().all_positive());
    CHECK_FALSE(k6_projective().normalized().all_positive());
}

TEST_CASE("K_{3,q} Euler genus") {
    CHECK(k3q_euler_genus(3) == 1);
    CHECK(k3q_euler_genus(4) == 1);
    CHECK(k3q_euler_genus(7) == 3);
    for (int q = 3; q <= 20; ++q)
        CHECK(k3q_euler_genus(q) == (q - 2 + 1) / 2);
    CHECK_THROWS(k3q_euler_genus(2));
}

TEST_CASE("embedding construction rejects broken rotations") {
    using Rotation = std::vector<std::vector<Vertex>>;
    CHECK_THROWS_AS(SignedEmbedding(Rotation{{1}, {}}), ParseError);
    CHECK_THROWS_AS(SignedEmbedding(Rotation{{1}, {0}, {3}, {2}}), ParseError);  // disconnected
    CHECK_THROWS_AS(SignedEmbedding(Rotation{{1, 1}, {0, 0}}), ParseError);
    CHECK_THROWS_AS(SignedEmbedding(Rotation{{1}, {0}}, {{-1}, {1}}), ParseError);
}
