#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "gpc/cli.hpp"
#include "gpc/constructions.hpp"
#include "gpc/error.hpp"
#include "gpc/oracle.hpp"
#include "gpc/serialize.hpp"

using namespace gpc;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

// Collects failed checks for one criterion.
struct Checker {
    std::vector<std::string> failures;
    long checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 5) failures.push_back(what);
        else if (!ok) failures.back() = "...";
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;
    std::function<void(Checker&)> body;
};

Rational random_rational(std::mt19937_64& rng, long span) {
    std::uniform_int_distribution<long> d(-span, span);
    long den = 0;
    while (den == 0) den = d(rng);
    return rat(d(rng), den);
}

bool is_verified_gp(const GPSequence& seq) { return verify_gp(seq.points()) == seq.ratio(); }

void ac1(Checker& c) {
    for (const auto& row : table1_rows()) {
        GPSequence seq = gp3_from_t(row.s, row.t);
        std::vector<Rational> expected{row.x1, row.x2, row.x3};
        c.expect(seq.ratio() == row.ratio, "ratio for s=" + row.s.str() + " t=" + row.t.str());
        c.expect(seq.abscissae() == expected, "abscissae for s=" + row.s.str() + " t=" + row.t.str());
    }
    c.expect(table1_rows().size() == 6, "six rows");
}

void ac2(Checker& c) {
    HuffParams params(q("5/4"));
    const char* pairs[3][2] = {{"8", "1/5"}, {"64/273", "21/52"}, {"37523/119144", "67159/41605"}};
    const char* xs[3] = {"125/128", "4225/256", "351125/114242"};
    const char* ys[3] = {"375/2048", "61425/1024", "876825375/436861408"};
    const char* circle[3][4] = {
        {"16/65", "63/65", "5/13", "12/13"},
        {"34944/78625", "70433/78625", "2184/3145", "2263/3145"},
        {"8941280624/15603268265", "12787317207/15603268265", "2794150195/3120653653", "1389677628/3120653653"},
    };
    for (int i = 0; i < 3; ++i) {
        HuffPoint h{q(pairs[i][0]), q(pairs[i][1])};
        c.expect(huff_contains(params, h), std::string("Huff point ") + pairs[i][0]);
        ECPoint image = huff_to_w(params, h);
        c.expect(image.x() == q(xs[i]), std::string("abscissa ") + xs[i]);
        c.expect(image.y().abs() == q(ys[i]), std::string("ordinate ") + ys[i]);
        GPSequence seq = gp2_from_huff(params, h);
        c.expect(seq.ratio() == q("25/16") && is_verified_gp(seq), std::string("circle pair from s=") + pairs[i][0]);
        std::vector<CirclePoint> published{CirclePoint(q(circle[i][0]), q(circle[i][1])),
                                           CirclePoint(q(circle[i][2]), q(circle[i][3]))};
        c.expect(verify_gp(published) == q("25/16"), std::string("published pair ") + circle[i][0]);
        c.expect(seq.abscissae() == std::vector<Rational>{published[0].x(), published[1].x()},
                 std::string("generated pair matches ") + circle[i][0]);
    }
    auto first = gp2_from_huff(params, {8, q("1/5")});
    c.expect(first.abscissae() == std::vector<Rational>{q("16/65"), q("5/13")}, "first pair is (16/65, 5/13)");
}

void ac3(Checker& c) {
    WeierstrassCurve g = GCurveGenerator::curve();
    ECPoint p(-27, 81);
    c.expect(g == WeierstrassCurve(0, -972, 0), "G coefficients");
    c.expect(GCurveGenerator::point() == p, "generator");
    c.expect(Rational(81 * 81) == Rational(-27 * -27 * -27) - Rational(972) * Rational(-27), "on G by hand");
    c.expect(ec_on_curve(g, p), "ec_on_curve");
    c.expect(is_infinite_order(ec_classify(g, p)), "infinite order");
    ECPoint doubled = ec_add(g, p, p);
    c.expect(doubled == ECPoint(q("441/4"), q("-8883/8")), "doubling");
    // tangent slope (3u^2 + a4) / (2v)
    Rational slope = (Rational(3) * p.x() * p.x() + g.a4()) / (Rational(2) * p.y());
    Rational x3 = slope * slope - Rational(2) * p.x();
    c.expect(doubled.x() == x3 && doubled.y() == slope * (p.x() - x3) - p.y(), "doubling by tangent");
    c.expect(doubled.y() * doubled.y() == doubled.x().pow(3) - Rational(972) * doubled.x(), "2P on G");
}

void ac4(Checker& c) {
    for (long m = 1; m <= 3; ++m) {
        Construction out = lemma1_gp2(m, 1);
        Rational r = rat(-4 * m, m * m + 2);
        c.expect(out.sequence.size() == 2 && is_verified_gp(out.sequence), "lemma1_gp2(" + std::to_string(m) + ")");
        c.expect(out.sequence.ratio() == r, "ratio for m=" + std::to_string(m));
    }
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        Rational m = random_rational(rng, 1000);
        if (m.is_zero()) m = 1;
        ConicPoint cp = lemma1_r(m);
        Rational r2 = cp.r * cp.r;
        c.expect(cp.s * cp.s + Rational(2) * r2 == Rational(4), "conic at m=" + m.str());
        ECPoint base = lemma1_base(cp);
        c.expect(base.y() * base.y() == Rational(-8) * (r2 - Rational(2)) * r2 * r2, "base ordinate at m=" + m.str());
        c.expect(ec_on_curve(lemma1_curve(cp.r), base), "base on E_r at m=" + m.str());
    }
}

void ac5(Checker& c) {
    std::vector<Rational> svals = thm1_svalues(3);
    c.expect(svals.size() == 3, "three s-values");
    for (std::size_t n = 0; n < svals.size(); ++n) {
        const Rational& s = svals[n];
        c.expect(thm1_svalue_stream(n + 1) == s, "stream index " + std::to_string(n + 1));
        c.expect(rat_sqrt(thm1_square_condition(s)).has_value(), "square condition at s=" + s.str());
        auto special = thm1_special_x(s);
        c.expect(special.has_value(), "special point at s=" + s.str());
        if (!special) continue;
        c.expect(ec_on_curve(thm1_curve(s), *special), "special on curve at s=" + s.str());
        c.expect(is_infinite_order(ec_classify(thm1_curve(s), *special)), "special order at s=" + s.str());
        Rational middle = Rational(2) * s / (Rational(1) + s * s);
        for (long k : {1L, 2L}) {
            GPSequence seq = gp3_generate(s, k).sequence;
            c.expect(seq.size() == 3 && is_verified_gp(seq), "gp3_generate(" + s.str() + ", " + std::to_string(k) + ")");
            c.expect(seq.abscissae()[1] == middle, "middle abscissa at s=" + s.str());
        }
    }
}

void ac6(Checker& c) {
    auto inv = enumerate(5);
    c.expect(inv.points.size() == 12, "enumerate(5) size");
    auto found = search_gp(125, 3, q("39/25"));
    std::vector<Rational> row1{q("5/13"), q("3/5"), q("117/125")};
    bool hit = false;
    for (const auto& s : found) hit = hit || s.abscissae() == row1;
    c.expect(hit, "row-1 chain in search_gp(125, 3, 39/25)");

    std::vector<GPSequence> pipeline;
    for (long m = 1; m <= 12; ++m) {
        for (long k : {1L, 2L}) {
            try {
                pipeline.push_back(lemma1_gp2(m, k).sequence);
            } catch (const Error&) {
            }
        }
    }
    for (const auto& row : table1_rows()) pipeline.push_back(gp3_from_t(row.s, row.t));
    HuffParams params(q("5/4"));
    for (const auto& h : {HuffPoint{8, q("1/5")}, HuffPoint{q("64/273"), q("21/52")}}) {
        pipeline.push_back(gp2_from_huff(params, h));
    }
    for (const auto& s : thm1_svalues(2)) {
        for (long k : {1L, -1L, 2L}) pipeline.push_back(gp3_generate(s, k).sequence);
    }
    pipeline.push_back(prop1_gp2(2, 2, 1).sequence);

    int checked = 0;
    for (const auto& seq : pipeline) {
        if (seq.max_height() > 10000) continue;
        ++checked;
        c.expect(cross_check(seq), "cross_check " + csv_line(seq));
        if (seq.size() == 2) {
            auto at_bound = search_gp(10000, 2, seq.ratio());
            bool in = false;
            for (const auto& s : at_bound) in = in || s.abscissae() == seq.abscissae();
            c.expect(in, "length-2 search at 10^4 finds " + csv_line(seq));
        }
    }
    c.expect(checked >= 10, "at least ten pipeline sequences of height <= 10^4 (got " + std::to_string(checked) + ")");
}

int transport_quartic(Checker& c, const QuarticCurve& quartic, const ECPoint& p, const ECPoint& t, int t_order,
                      const std::string& name) {
    QuarticReduction red(quartic);
    const WeierstrassCurve& w = red.curve();
    int done = 0;
    for (int a = -30; a <= 30 && done < 100; ++a) {
        for (int b = 0; b < t_order && done < 100; ++b) {
            ECPoint point = ec_add(w, ec_mul(w, a, p), ec_mul(w, b, t));
            auto back = red.to_quartic(point);
            if (!back) continue;
            c.expect(quartic.contains(*back), name + " w2q on quartic");
            c.expect(red.to_weierstrass(*back) == point, name + " q2w(w2q(P)) = P");
            ++done;
        }
    }
    c.expect(done == 100, name + " has 100 round trips");
    return done;
}

void ac7(Checker& c) {
    std::mt19937_64 rng(7);

    // group law on G, E'_r, E_r and E_s
    struct Family {
        WeierstrassCurve curve;
        std::vector<ECPoint> gens;
    };
    Rational r = q("-4/3");
    std::vector<Family> families{
        {GCurveGenerator::curve(), {GCurveGenerator::point(), ECPoint(0, 0)}},
        {HuffParams(q("5/4")).weierstrass(), {ECPoint(q("125/128"), q("-375/2048")), ECPoint(1, 0)}},
        {quadric_curve(r), {ECPoint(q("32/9"), q("-64/27")), ECPoint(4, 0)}},
        {thm1_curve(q("4/7")), {*thm1_special_x(q("4/7")), ECPoint(0, 0)}},
    };
    std::uniform_int_distribution<int> coeff(-4, 4);
    int triples = 0;
    for (int i = 0; i < 500; ++i) {
        const Family& f = families[i % families.size()];
        auto random_point = [&] {
            ECPoint acc;
            for (const auto& g : f.gens) acc = ec_add(f.curve, acc, ec_mul(f.curve, coeff(rng), g));
            return acc;
        };
        ECPoint a = random_point(), b = random_point(), d = random_point();
        c.expect(ec_add(f.curve, ec_add(f.curve, a, b), d) == ec_add(f.curve, a, ec_add(f.curve, b, d)), "associativity");
        c.expect(ec_add(f.curve, a, b) == ec_add(f.curve, b, a), "commutativity");
        ++triples;
    }
    c.expect(triples == 500, "500 triples");

    // model transports
    transport_quartic(c, thm1_s_quartic(), ECPoint(-3, 3), ECPoint(0, 0), 2, "s-quartic");
    QuarticCurve h = prop1_hquartic(2);
    transport_quartic(c, h, QuarticReduction(h).to_weierstrass(h.base()), ECPoint(0, 0), 2, "H quartic");
    {
        Rational s = q("4/7");
        QuarticCurve tq = thm1_quartic(s);
        QuarticReduction red(tq);
        ShortForm sf = short_form(thm1_curve(s));
        auto lambda = find_iso(sf.curve, red.curve());
        ECPoint special = scale_point(sf.to_short(*thm1_special_x(s)), *lambda);
        transport_quartic(c, tq, special, red.to_weierstrass(tq.base()), 4, "t-quartic");
    }
    {
        HuffParams params(q("5/4"));
        WeierstrassCurve w = params.weierstrass();
        ECPoint p(q("125/128"), q("-375/2048"));
        std::vector<ECPoint> tors{ECPoint(), ECPoint(0, 0), ECPoint(1, 0), ECPoint(q("625/256"), 0)};
        int done = 0;
        for (int a = -30; a <= 30 && done < 100; ++a) {
            for (const auto& t : tors) {
                ECPoint point = ec_add(w, ec_mul(w, a, p), t);
                if (point.is_identity() || point.y().is_zero()) continue;
                HuffPoint hp = w_to_huff(params, point);
                if (params.r() * params.r() * hp.s == hp.t) continue;
                c.expect(huff_contains(params, hp), "Huff image on curve");
                c.expect(huff_to_w(params, hp) == point, "huff_to_w(w_to_huff(P)) = P");
                if (++done == 100) break;
            }
        }
        c.expect(done == 100, "Huff has 100 round trips");
    }
    {
        WeierstrassCurve er = quadric_curve(r);
        ECPoint p0(q("32/9"), q("-64/27"));
        std::vector<ECPoint> tors{ECPoint(), ECPoint(0, 0), ECPoint(4, 0), ECPoint(Rational(4) * r * r, 0)};
        int done = 0;
        for (int a = -30; a <= 30 && done < 100; ++a) {
            for (const auto& t : tors) {
                auto img = er_to_quadric(r, ec_add(er, ec_mul(er, a, p0), t));
                if (!img) continue;
                c.expect(quadric_contains(r, *img), "quadric image on both quadrics");
                if (++done == 100) break;
            }
        }
        c.expect(done == 100, "quadric map has 100 images");
    }
    for (int i = 0; i < 100; ++i) {
        Rational t = random_rational(rng, 10000);
        c.expect(t_from_point(point_from_t(t)) == t, "circle parametrization round trip");
    }

    // identities
    for (int i = 0; i < 100; ++i) {
        Rational s = random_rational(rng, 100000);
        Rational one = 1;
        c.expect((one + s).pow(2) * thm1_square_condition(s) == Rational(8) * s.pow(3) + (one + s * s).pow(3),
                 "square-condition identity at s=" + s.str());
        Rational lhs = s * s * (s * s + one).pow(4) - Rational(4) * s.pow(4) * (s * s + one).pow(2);
        c.expect(lhs == (s.pow(5) - s).pow(2), "base-point identity at s=" + s.str());
        if (!s.is_zero() && s.abs() != one) c.expect(thm1_quartic(s).contains({s, s.pow(5) - s}), "base on quartic");
    }
}

void ac8(Checker& c) {
    namespace fs = std::filesystem;
    auto table = cli::run({"table1"});
    c.expect(table.exit_code == cli::kOk, "table1 exits 0");

    const std::vector<std::vector<std::string>> generators{
        {"gp2", "--m", "1"},          {"gp2", "--m", "5/2", "--mult", "2"}, {"gp2sq", "--u", "2"},
        {"gp2sq", "--u", "3/2"},      {"gp3", "--s", "3", "--t", "5"},       {"gp3", "--s", "4/7"},
        {"gp3", "--s", "-244/231", "--mult", "2"},
    };
    int index = 0;
    for (const auto& args : generators) {
        std::string label = args[0] + " " + args[2];
        auto first = cli::run(args);
        auto second = cli::run(args);
        c.expect(first.exit_code == cli::kOk, label + " exits 0");
        c.expect(first.payload == second.payload, label + " is bit-identical");
        fs::path path = fs::temp_directory_path() / ("gpc_acceptance_" + std::to_string(index++) + ".json");
        std::ofstream(path) << first.payload;
        auto verified = cli::run({"verify", "--file", path.string()});
        c.expect(verified.exit_code == cli::kOk, label + " passes verify");
        fs::remove(path);
    }
    c.expect(cli::run({"svalues", "--count", "2"}).payload == cli::run({"svalues", "--count", "2"}).payload,
             "svalues is bit-identical");
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "Table 1 reproduction", 1.0, ac1},
        {"AC2", "r = 5/4 example reproduction", 1.0, ac2},
        {"AC3", "G-curve facts", 1.0, ac3},
        {"AC4", "length-2 conic pipeline", 10.0, ac4},
        {"AC5", "length-3 s-value stream", 30.0, ac5},
        {"AC6", "oracle cross-validation", 60.0, ac6},
        {"AC7", "property suites", 120.0, ac7},
        {"AC8", "CLI contract", 60.0, ac8},
    };
    int failed = 0;
    for (const auto& criterion : criteria) {
        Checker checker;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(checker);
        } catch (const std::exception& e) {
            checker.failures.push_back(std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > criterion.limit_seconds) {
            std::ostringstream msg;
            msg << "runtime " << seconds << " s exceeds " << criterion.limit_seconds << " s";
            checker.failures.push_back(msg.str());
        }
        bool ok = checker.failures.empty();
        if (!ok) ++failed;
        std::printf("%s %s  %-34s checks=%-6ld %.3f s\n", criterion.id, ok ? "PASS" : "FAIL", criterion.title,
                    checker.checks, seconds);
        for (const auto& f : checker.failures) std::printf("    %s\n", f.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
