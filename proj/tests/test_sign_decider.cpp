#include <catch2/catch_amalgamated.hpp>
#include <mtp/parser.hpp>
#include <mtp/sign_decider.hpp>

#include <random>

#include "support/build.hpp"
#include "support/eval.hpp"

using namespace mtp;
using namespace mtptest;

namespace {

// 10^4-point scan on (0, hi): returns {min sign seen, max sign seen}.
std::pair<int, int> scan_signs(const MTPExpr& e, const Rational& hi, int samples = 10000) {
    int lo_sign = 2, hi_sign = -2;
    BigFloat step = BigFloat(hi) / BigFloat(static_cast<long>(samples));
    for (int i = 1; i < samples; ++i) {
        int s = eval_mtp(e, step * BigFloat(static_cast<long>(i))).sgn();
        lo_sign = std::min(lo_sign, s);
        hi_sign = std::max(hi_sign, s);
    }
    return {lo_sign, hi_sign};
}

}  // namespace

TEST_CASE("no constant sign on the half-line (unbounded roots)") {
    SignVerdict v = decide_on_halfline(parse_mtp("2/3*x + x*cos(x) - sin(x)"));
    CHECK(v.kind == SignKind::NoConstantSign);
    CHECK(!v.inconclusive);
    REQUIRE(v.odd_bound.has_value());
    CHECK(v.odd_bound->kind == Boundedness::Unbounded);
}

TEST_CASE("positive on the half-line with the worked certificate") {
    SignVerdict v = decide_on_halfline(parse_mtp("2/3*x + 1/3*x*cos(x) - sin(x)"));
    CHECK(v.kind == SignKind::Positive);
    CHECK(!v.inconclusive);
    REQUIRE(v.odd_bound.has_value());
    CHECK(v.odd_bound->bound == rat(111, 64));
    REQUIRE(v.window.has_value());
    const WindowDecision& wd = *v.window;
    CHECK(wd.p == 2);
    // g(t) = 4/3 t + 2/3 t (1 - 2 s^2) - 2 s c
    CHECK(wd.trivariate == Q(2) * X() - Q(4, 3) * X() * S() * S() - Q(2) * S() * C());
    // numerator 3y - 2yt^2 + 3yt^4 - 6t + 6t^3 (content 2/3 stripped)
    QPoly expect_h =
        Q(3) * X() - Q(2) * X() * S() * S() + Q(3) * X() * S().pow(4) - Q(6) * S() + Q(6) * S().pow(3);
    CHECK(wd.tanhalf_num == expect_h);
    CHECK(wd.content == rat(2, 3));
    CHECK(wd.denom_power == 2);
    // arctan polynomial 3a - 2at^2 + 3at^4 - 3t + 3t^3
    QPoly t = QPoly::variable(vars::t), a = QPoly::variable(vars::a);
    CHECK(wd.arctan_poly == Q(3) * a - Q(2) * a * t * t + Q(3) * a * t.pow(4) - Q(3) * t + Q(3) * t.pow(3));
    CHECK(wd.outcome.kind == ArctanSign::Positive);
}

TEST_CASE("worked trivariate of the doubled-angle window") {
    // to_trivariate(F(2t)) equals 4/3 t + 2/3 t cos(2t) - sin(2t) expanded
    MTPExpr g = parse_mtp("4/3*x + 2/3*x*cos(2*x) - sin(2*x)");
    CHECK(to_trivariate(g) == Q(2) * X() - Q(4, 3) * X() * S() * S() - Q(2) * S() * C());
}

TEST_CASE("bounded-interval verdicts") {
    CHECK(decide_on_bounded(parse_mtp("sin(x)"), rat(3, 2)).kind == SignKind::Positive);
    CHECK(decide_on_bounded(parse_mtp("x*cos(x) - sin(x)"), Rational(1)).kind == SignKind::Negative);
    CHECK(decide_on_bounded(parse_mtp("2/3*x + 1/3*x*cos(x) - sin(x)"), rat(111, 64)).kind == SignKind::Positive);
    CHECK_THROWS_AS(decide_on_bounded(parse_mtp("sin(x)"), Rational(0)), std::domain_error);
    // sin is also positive on (0, 3/2) through the square-free fast path
    CHECK(decide_on_bounded(parse_mtp("sin(x)"), rat(3, 2), {}, true).kind == SignKind::Positive);
    // and loses constant sign on (0, 4): root at pi
    CHECK(decide_on_bounded(parse_mtp("sin(x)"), Rational(4)).kind == SignKind::NoConstantSign);
}

TEST_CASE("even powers give weak signs") {
    SignVerdict v = decide_on_halfline(parse_mtp("sin(x)^2"));
    CHECK(v.kind == SignKind::NonNegative);
    CHECK(v.q_counter == 1);
    CHECK(v.p_counter == 0);
    SignVerdict w = decide_on_halfline(parse_mtp("0 - sin(x)^2"));
    CHECK(w.kind == SignKind::NonPositive);
    SignVerdict u = decide_on_halfline(parse_mtp("1 - sin(x)^3"));
    CHECK(u.kind == SignKind::NonNegative);  // zero exactly at pi/2 + 2k pi
    CHECK(u.q_counter == 1);
}

TEST_CASE("identically zero and constants") {
    CHECK(decide_on_halfline(parse_mtp("sin(x)^2 + cos(x)^2 - 1")).kind == SignKind::IdenticallyZero);
    CHECK(decide_on_halfline(parse_mtp("5")).kind == SignKind::Positive);
    CHECK(decide_on_halfline(parse_mtp("0 - 5")).kind == SignKind::Negative);
    CHECK(decide_on_halfline(MTPExpr()).kind == SignKind::IdenticallyZero);
}

TEST_CASE("sign verdicts are consistent with dense numeric scans") {
    struct Case {
        const char* text;
        Rational hi;
    };
    const Case cases[] = {
        {"2/3*x + 1/3*x*cos(x) - sin(x)", Rational(100)},
        {"sin(x)^2", Rational(40)},
        {"1 - sin(x)^3", Rational(40)},
        {"x*cos(x) - sin(x)", Rational(1)},
    };
    for (const auto& c : cases) {
        MTPExpr e = parse_mtp(c.text);
        SignVerdict v = c.hi <= 1 ? decide_on_bounded(e, c.hi) : decide_on_halfline(e);
        auto [mn, mx] = scan_signs(e, c.hi, 2000);
        switch (v.kind) {
            case SignKind::Positive: CHECK(mn == 1); break;
            case SignKind::NonNegative: CHECK(mn >= 0); break;
            case SignKind::Negative: CHECK(mx == -1); break;
            case SignKind::NonPositive: CHECK(mx <= 0); break;
            default: break;
        }
    }
}

TEST_CASE("no-constant-sign exhibits both signs numerically") {
    MTPExpr e = parse_mtp("2/3*x + x*cos(x) - sin(x)");
    REQUIRE(decide_on_halfline(e).kind == SignKind::NoConstantSign);
    auto [mn, mx] = scan_signs(e, Rational(1000), 4000);
    CHECK(mn == -1);
    CHECK(mx == 1);
}

TEST_CASE("scaling invariance of bounded decisions") {
    // F(x) and F(2x) on matching intervals
    MTPExpr f = parse_mtp("2/3*x + 1/3*x*cos(x) - sin(x)");
    MTPExpr g = f.scale_argument(Rational(2));  // g(t) = f(2t)
    SignVerdict a = decide_on_bounded(f, rat(111, 64));
    SignVerdict b = decide_on_bounded(g, rat(111, 128));
    CHECK(a.kind == b.kind);

    // the frequency-normalized form on the rescaled interval agrees, for
    // random expressions
    std::mt19937_64 rng(20241013);
    std::uniform_int_distribution<long> coef(-3, 3);
    const Rational freqs[] = {rat(1, 2), rat(1), rat(2)};
    int done = 0;
    for (int iter = 0; iter < 60 && done < 20; ++iter) {
        MTPExpr e;
        int nterms = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < nterms; ++i)
            e.push(rat(coef(rng)), static_cast<unsigned>(rng() % 2), static_cast<unsigned>(rng() % 3),
                   static_cast<unsigned>(rng() % 2), freqs[rng() % 3]);
        if (e.is_zero() || to_laurent(e).is_zero()) continue;
        auto norm = normalize_frequency(e);
        if (norm.scale == 1) continue;
        Rational T = rat(1 + static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 2));
        SignVerdict lhs = decide_on_bounded(e, T);
        SignVerdict rhs = decide_on_bounded(norm.expr, Rational(T * norm.scale));
        CHECK(lhs.kind == rhs.kind);
        ++done;
    }
    CHECK(done == 20);
}

TEST_CASE("p-floor certification") {
    // p = floor(T / (pi/2)) + 1 satisfies p*(pi/2) > T >= (p-1)*(pi/2)
    for (const Rational& t : {rat(111, 64), rat(3, 2), Rational(10), rat(1, 7)}) {
        Integer p = floor_div_half_pi(t) + 1;
        RationalInterval pi = pi_enclosure(128);
        CHECK(Rational(p) * pi.lo / 2 > t);
        CHECK((Rational(p - 1) * pi.hi / 2 <= t || p == 1));
    }
}

TEST_CASE("touching zeros of an even mixed factor degrade to a certified weak verdict") {
    // (x - 2 + cos x)^2 is nonnegative with transcendental touching zeros in
    // (1, 3); the strictness question is undecidable by design and must come
    // back as NonNegative with the inconclusive flag, never as strict.
    MTPExpr e = parse_mtp("(x - 2 + cos(x))^2");
    SignVerdict v = decide_on_halfline(e);
    CHECK(v.kind == SignKind::NonNegative);
    CHECK(v.inconclusive);
    auto [mn, mx] = scan_signs(e, Rational(50), 2000);
    CHECK(mn >= 0);
}
