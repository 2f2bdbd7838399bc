#include "gpc/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gpc/constructions.hpp"
#include "gpc/error.hpp"
#include "gpc/oracle.hpp"
#include "gpc/serialize.hpp"

namespace gpc::cli {

namespace {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotOnCircle:
    case ErrorKind::InvalidSequence:
        return kVerificationFailure;
    case ErrorKind::ExhaustedAttempts:
    case ErrorKind::NoInfiniteOrderPointFound:
    case ErrorKind::IsomorphismNotFound:
    case ErrorKind::ExceptionalPoint:
        return kConstructionFailure;
    default:
        return kInvalidInput;
    }
}

struct OutputOptions {
    bool csv = false;
    bool canonical = false;
};

GPSequence prepared(const GPSequence& seq, const OutputOptions& opts) {
    return opts.canonical ? seq.canonical() : seq;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

std::string render_sequences(const std::vector<GPSequence>& seqs, const OutputOptions& opts) {
    std::string out;
    for (const auto& s : seqs) out += csv_line(prepared(s, opts)) + "\n";
    return out;
}

CommandResult emit_construction(const Construction& c, const OutputOptions& opts) {
    GPSequence seq = prepared(c.sequence, opts);
    if (opts.csv) return {kOk, render_sequences({seq}, opts), {}};
    Json doc = seq;
    doc["trace"] = c.trace;
    return {kOk, render(doc), {}};
}

CommandResult cmd_table1(const OutputOptions& opts) {
    Json rows = Json::array();
    Json seqs = Json::array();
    std::vector<GPSequence> computed;
    std::string report;
    bool all_match = true;
    int index = 0;
    for (const auto& row : table1_rows()) {
        ++index;
        GPSequence seq = prepared(gp3_from_t(row.s, row.t), opts);
        std::vector<Rational> expected{row.x1, row.x2, row.x3};
        bool match = seq.ratio() == row.ratio && seq.abscissae() == expected;
        all_match = all_match && match;
        rows.push_back(Json{{"row", index},
                            {"s", row.s},
                            {"t", row.t},
                            {"expected", Json{{"ratio", row.ratio}, {"abscissae", expected}}},
                            {"computed", Json{{"ratio", seq.ratio()}, {"abscissae", seq.abscissae()}}},
                            {"match", match}});
        seqs.push_back(seq);
        computed.push_back(seq);
        report += "row " + std::to_string(index) + ": " + (match ? "PASS" : "FAIL") + "\n";
    }
    int code = all_match ? kOk : kVerificationFailure;
    if (opts.csv) return {code, render_sequences(computed, opts), report};
    return {code, render(Json{{"all_match", all_match}, {"rows", rows}, {"sequences", seqs}}), report};
}

CommandResult cmd_svalues(long count) {
    if (count < 1) throw Error(ErrorKind::DegenerateParameter, "--count must be positive");
    QuarticReduction reduction(thm1_s_quartic());
    auto lambda = find_iso(reduction.curve(), GCurveGenerator::curve());
    Json values = Json::array();
    int index = 0;
    for (const auto& s : thm1_svalues(static_cast<std::size_t>(count))) {
        auto special = thm1_special_x(s);
        Json entry{{"n", ++index}, {"s", s}, {"square_root", *rat_sqrt(thm1_square_condition(s))}};
        entry["special_point"] = *special;
        entry["special_order"] = is_infinite_order(ec_classify(thm1_curve(s), *special)) ? "infinite" : "torsion";
        values.push_back(std::move(entry));
    }
    Json trace{{"s_quartic", thm1_s_quartic()},
               {"model", reduction.curve()},
               {"g_curve", GCurveGenerator::curve()},
               {"g_point", GCurveGenerator::point()},
               {"lambda", *lambda}};
    return {kOk, render(Json{{"count", count}, {"svalues", values}, {"trace", trace}}), {}};
}

CommandResult cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {kInvalidInput, {}, "cannot open " + path + "\n"};
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        return {kInvalidInput, {}, std::string("malformed JSON: ") + e.what() + "\n"};
    }
    std::vector<const Json*> records;
    if (doc.is_array()) {
        for (const auto& r : doc) records.push_back(&r);
    } else if (doc.is_object() && doc.contains("points")) {
        records.push_back(&doc);
    } else if (doc.is_object() && doc.contains("sequences") && doc["sequences"].is_array()) {
        for (const auto& r : doc["sequences"]) records.push_back(&r);
    } else {
        throw Error(ErrorKind::ParseError, "no GP sequence records in " + path);
    }

    Json results = Json::array();
    bool all_ok = true;
    std::string diag;
    for (std::size_t i = 0; i < records.size(); ++i) {
        Json result{{"index", i}};
        try {
            SequenceRecord rec = sequence_record_from_json(*records[i]);
            auto ratio = verify_gp(rec.points);
            bool ok = ratio && *ratio == rec.ratio;
            result["ok"] = ok;
            result["declared_ratio"] = rec.ratio;
            result["ratio"] = ratio ? Json(*ratio) : Json(nullptr);
            if (!ok) diag += "record " + std::to_string(i) + ": abscissae do not match the declared ratio\n";
            all_ok = all_ok && ok;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ParseError) throw;
            result["ok"] = false;
            result["error"] = e.what();
            diag += "record " + std::to_string(i) + ": " + e.what() + "\n";
            all_ok = false;
        }
        results.push_back(std::move(result));
    }
    Json payload{{"file", path}, {"count", records.size()}, {"ok", all_ok}, {"results", results}};
    return {all_ok ? kOk : kVerificationFailure, render(payload), diag};
}

CommandResult cmd_search(long bound, int length, const std::optional<Rational>& ratio, unsigned threads,
                         const OutputOptions& opts) {
    auto seqs = search_gp(bound, length, ratio, threads);
    if (opts.csv) return {kOk, render_sequences(seqs, opts), {}};
    Json payload{{"bound", bound},
                 {"length", length},
                 {"ratio", ratio ? Json(*ratio) : Json(nullptr)},
                 {"count", seqs.size()},
                 {"sequences", seqs}};
    return {kOk, render(payload), {}};
}

} // namespace

Rational parse_rational(std::string_view text) { return Rational::parse(text); }

CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"Exact geometric progressions of rational points on the unit circle", "gpcircle"};
    app.require_subcommand(1);
    app.fallthrough();
    OutputOptions opts;
    app.add_flag("--csv", opts.csv, "Emit abscissa chains as CSV lines: ratio,x1,x2,...");
    app.add_flag("--canonical-ordinates", opts.canonical, "Replace every ordinate by its absolute value");

    std::string m, u, s, t;
    long mult = 1, r_mult = 2, point_mult = 1, count = 1, bound = 1;
    int length = 2;
    unsigned threads = 1;
    std::string ratio_text, file;

    auto* gp2 = app.add_subcommand("gp2", "Length-2 GP with ratio -4m/(m^2+2)");
    gp2->add_option("--m", m, "Conic parameter m")->required();
    gp2->add_option("--mult", mult, "Multiple of the base point");

    auto* gp2sq = app.add_subcommand("gp2sq", "Length-2 GP with a square ratio r^2");
    gp2sq->add_option("--u", u, "Quartic parameter u")->required();
    gp2sq->add_option("--mult", r_mult, "Multiple on the quartic H selecting r (|k| >= 2)");
    gp2sq->add_option("--point-mult", point_mult, "Multiple of the seed point on E'_r");

    auto* gp3 = app.add_subcommand("gp3", "Length-3 GP: direct assembly from (s, t) or generation from s");
    gp3->add_option("--s", s, "Parameter s")->required();
    auto* t_opt = gp3->add_option("--t", t, "Parameter t (direct assembly)");
    auto* gp3_mult = gp3->add_option("--mult", mult, "Multiple of the infinite-order seed (generation)");
    t_opt->excludes(gp3_mult);

    auto* svalues = app.add_subcommand("svalues", "Stream of s values with a special point on E_s");
    svalues->add_option("--count", count, "How many values")->required();

    auto* verify = app.add_subcommand("verify", "Verify GP sequence records in a JSON file");
    verify->add_option("--file", file, "Path to JSON")->required();

    auto* search = app.add_subcommand("search", "Exhaustive GP search over bounded-height circle points");
    search->add_option("--bound", bound, "Height bound")->required();
    search->add_option("--length", length, "Sequence length (2, 3 or 4)")->required();
    search->add_option("--ratio", ratio_text, "Restrict to this ratio");
    search->add_option("--threads", threads, "Enumeration workers");

    auto* table1 = app.add_subcommand("table1", "Reproduce the six published length-3 examples");

    std::vector<std::string> storage{"gpcircle"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return {kOk, app.help(), {}};
        return {kInvalidInput, {}, std::string(e.what()) + "\n"};
    }

    try {
        if (gp2->parsed()) return emit_construction(lemma1_gp2(parse_rational(m), mult), opts);
        if (gp2sq->parsed()) return emit_construction(prop1_gp2(parse_rational(u), r_mult, point_mult), opts);
        if (gp3->parsed()) {
            Rational sv = parse_rational(s);
            if (t_opt->count() == 0) return emit_construction(gp3_generate(sv, mult), opts);
            Rational tv = parse_rational(t);
            Json trace{{"pipeline", "direct"}, {"s", sv}, {"t", tv}};
            return emit_construction(Construction{gp3_from_t(sv, tv), trace}, opts);
        }
        if (svalues->parsed()) return cmd_svalues(count);
        if (verify->parsed()) return cmd_verify(file);
        if (search->parsed()) {
            std::optional<Rational> ratio;
            if (!ratio_text.empty()) ratio = parse_rational(ratio_text);
            return cmd_search(bound, length, ratio, threads, opts);
        }
        if (table1->parsed()) return cmd_table1(opts);
    } catch (const Error& e) {
        return {exit_code_for(e.kind()), {}, std::string(e.what()) + "\n"};
    } catch (const std::exception& e) {
        return {kConstructionFailure, {}, std::string("internal error: ") + e.what() + "\n"};
    }
    return {kInvalidInput, {}, "no subcommand\n"};
}

} // namespace gpc::cli
