#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hn/fuchsian.hpp>
#include <hn/words.hpp>

#include <cmath>

using hn::FuchsianRep;
using hn::GroupWord;
using hn::Isometry;

namespace {

GroupWord W(const std::string& s) { return hn::parse_word(2, s); }

double dist_to_pm_identity(const Isometry& m) {
    double dp = 0, dm = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double id = i == j ? 1.0 : 0.0;
            dp = std::max(dp, std::abs(m.m[i][j] - id));
            dm = std::max(dm, std::abs(m.m[i][j] + id));
        }
    return std::min(dp, dm);
}

}  // namespace

TEST_CASE("surface relator evaluates to plus or minus identity") {
    for (int g : {2, 3}) {
        FuchsianRep rep = hn::fuchsian_representation(g);
        REQUIRE(static_cast<int>(rep.gens.size()) == 2 * g);
        Isometry r = hn::evaluate(rep, hn::relator(g));
        CHECK(dist_to_pm_identity(r) < 1e-9);
        for (const Isometry& gen : rep.gens)
            CHECK(hn::classify(gen) == hn::IsoType::Hyperbolic);
    }
}

TEST_CASE("evaluate matches the naive product") {
    FuchsianRep rep = hn::fuchsian_representation(2);
    // short word: entries stay O(1), absolute agreement
    GroupWord s = W("a1 b2 A1 b1");
    Isometry cs = hn::evaluate(rep, s);
    Isometry ns;
    for (int l : s.letters) ns = hn::iso_compose(ns, rep.letter(l));
    ns = hn::iso_normalize(ns);
    double ds = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            ds = std::max(ds, std::min(std::abs(cs.m[i][j] - ns.m[i][j]),
                                       std::abs(cs.m[i][j] + ns.m[i][j])));
    CHECK(ds < 1e-9);
    // long word: entries grow like exp(length), compare relative to the scale
    GroupWord w = W("a1 b2 A1 b1 b1 a2 B1 a1 a1 b2 B2 A2 a1");
    Isometry chunked = hn::evaluate(rep, w);
    Isometry naive;
    for (int l : w.letters) naive = hn::iso_compose(naive, rep.letter(l));
    naive = hn::iso_normalize(naive);
    double d = 0, scale = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            d = std::max(d, std::min(std::abs(chunked.m[i][j] - naive.m[i][j]),
                                     std::abs(chunked.m[i][j] + naive.m[i][j])));
            scale = std::max(scale, std::abs(naive.m[i][j]));
        }
    CHECK(d / scale < 1e-4);
}

TEST_CASE("letter applies signs") {
    FuchsianRep rep = hn::fuchsian_representation(2);
    Isometry a = rep.letter(1);
    Isometry ai = rep.letter(-1);
    Isometry prod = hn::iso_compose(a, ai);
    CHECK(dist_to_pm_identity(prod) < 1e-12);
}

TEST_CASE("word_axis is invariant under the word and conjugation-equivariant") {
    FuchsianRep rep = hn::fuchsian_representation(2);
    GroupWord w = W("a1 b1");
    hn::OrientedGeodesic ax = hn::word_axis(rep, w);
    Isometry m = hn::evaluate(rep, w);
    hn::OrientedGeodesic img = hn::apply_to_geodesic(m, ax);
    CHECK(hn::angle_dist(img.from, ax.from) < 1e-7);
    CHECK(hn::angle_dist(img.to, ax.to) < 1e-7);

    GroupWord c = W("b2 a1");
    hn::OrientedGeodesic cx = hn::word_axis(rep, hn::conjugate(w, c));
    hn::OrientedGeodesic tx = hn::apply_to_geodesic(hn::evaluate(rep, c), ax);
    CHECK(hn::same_geodesic(cx, tx, 1e-6));
}

TEST_CASE("conjugate_axes contains the base axis and all short translates") {
    FuchsianRep rep = hn::fuchsian_representation(2);
    hn::OrientedGeodesic base = hn::word_axis(rep, W("a1"));
    auto axes = hn::conjugate_axes(rep, base, 2);
    REQUIRE(!axes.empty());
    bool has_base = false, has_b1 = false;
    hn::OrientedGeodesic tb1 = hn::apply_to_geodesic(hn::evaluate(rep, W("b1")), base);
    for (const auto& g : axes) {
        if (hn::same_geodesic(g, base, 1e-7)) has_base = true;
        if (hn::same_geodesic(g, tb1, 1e-7)) has_b1 = true;
    }
    CHECK(has_base);
    CHECK(has_b1);
    // depth grows the list monotonically in content
    auto deeper = hn::conjugate_axes(rep, base, 3);
    CHECK(deeper.size() > axes.size());
}

TEST_CASE("translate crossing table at depth 3") {
    FuchsianRep rep = hn::fuchsian_representation(2);
    // Dual handle generators cross inside the handle.
    CHECK(hn::translates_cross(rep, W("a1"), W("b1"), 3) == hn::Tri::Yes);
    CHECK(hn::translates_cross(rep, W("a2"), W("b2"), 3) == hn::Tri::Yes);
    // Curves supported on different handles stay disjoint.
    CHECK(hn::translates_cross(rep, W("a1"), W("a2"), 3) == hn::Tri::No);
    CHECK(hn::translates_cross(rep, W("a1"), W("b2"), 3) == hn::Tri::No);
    CHECK(hn::translates_cross(rep, W("b1"), W("a2"), 3) == hn::Tri::No);
    CHECK(hn::translates_cross(rep, W("b1"), W("b2"), 3) == hn::Tri::No);
    // Symmetry of the verdicts.
    CHECK(hn::translates_cross(rep, W("b1"), W("a1"), 3) == hn::Tri::Yes);
    CHECK(hn::translates_cross(rep, W("a2"), W("a1"), 3) == hn::Tri::No);
}

TEST_CASE("simplicity of closed geodesics") {
    FuchsianRep rep = hn::fuchsian_representation(2);
    for (const char* s : {"a1", "b1", "a2", "b2", "a1 b1"})
        CHECK(hn::is_simple_closed_geodesic(rep, W(s)) == hn::Simplicity::Simple);
    // a a b b has a single self-crossing on a genus-2 surface
    CHECK(hn::is_simple_closed_geodesic(rep, W("a1 a1 b1 b1")) == hn::Simplicity::NonSimple);
    CHECK(hn::is_simple_closed_geodesic(rep, W("a1 b1 A1 b1")) == hn::Simplicity::NonSimple);
}

TEST_CASE("simplicity is a conjugacy and inversion invariant") {
    FuchsianRep rep = hn::fuchsian_representation(2);
    GroupWord w = W("a1 b1");
    GroupWord c = W("a2 B1");
    CHECK(hn::is_simple_closed_geodesic(rep, hn::conjugate(w, c)) == hn::Simplicity::Simple);
    CHECK(hn::is_simple_closed_geodesic(rep, hn::invert(w)) == hn::Simplicity::Simple);
    GroupWord n = W("a1 a1 b1 b1");
    CHECK(hn::is_simple_closed_geodesic(rep, hn::conjugate(n, c)) == hn::Simplicity::NonSimple);
    // powers share the primitive root's geodesic
    CHECK(hn::is_simple_closed_geodesic(rep, hn::power(w, 2)) == hn::Simplicity::Simple);
}
