#include "kodaira/cli.hpp"

#include "kodaira/classify.hpp"
#include "kodaira/constructor.hpp"
#include "kodaira/io.hpp"
#include "kodaira/papadopoulos.hpp"
#include "kodaira/sweep.hpp"
#include "kodaira/tamagawa.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace kodaira {

namespace {

struct Opts {
    std::string format = "json";
    int jobs = 0;

    std::string ainvs;
    std::vector<std::string> primes;

    std::string family;
    std::string prime;

    std::string grid_family = "all";
    long a_max = 50, b_max = 50, d_max = 50;

    std::vector<std::string> at;

    std::string curve, search;
    long k_min = -1, k_max = 0;

    std::string path, input_format, output;

    int table = 0;
    bool papadopoulos = false;
};

bool csv(const Opts& o) {
    return o.format == "csv";
}

std::vector<Int> prime_list(const std::vector<std::string>& v) {
    std::vector<Int> out;
    for (const auto& s : v) {
        Int p;
        if (p.set_str(s, 10) != 0 || p < 2 || !is_prime(p)) throw ArgumentError("not a prime: " + s);
        out.push_back(p);
    }
    return out;
}

int cmd_localdata(const Opts& o, std::ostream& out) {
    WeierstrassModel e(parse_ainvs(o.ainvs));
    std::vector<LocalData> data;
    if (o.primes.empty()) {
        data = global_minimal_discriminant(e).bad;
    } else {
        for (const auto& p : prime_list(o.primes)) data.push_back(tate_local_data(e, p));
    }
    if (csv(o)) {
        out << localdata_csv_header() << '\n';
        for (const auto& d : data) out << localdata_csv_row(d) << '\n';
        return kExitOk;
    }
    Json j{{"ainvs", ainvs_json(e.ainvs())}, {"disc", int_json(e.invariants().disc)}, {"local", Json::array()}};
    for (const auto& d : data) j["local"].push_back(to_json(d));
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_classify(const Opts& o, std::ostream& out) {
    FamilySpec s = parse_family(o.family);
    validate(s, {.allow_d1 = true});
    std::vector<Int> ps;
    if (!o.prime.empty()) {
        ps = prime_list({o.prime});
    } else {
        for (const auto& ap : additive_primes(s)) ps.push_back(ap.p);
    }
    if (csv(o)) out << "row_id," << localdata_csv_header() << '\n';
    Json arr = Json::array();
    for (const auto& p : ps) {
        Classification c = classify_detailed(s, p);
        if (csv(o)) {
            out << c.row->id << ',' << localdata_csv_row(c.data) << '\n';
        } else {
            Json j = to_json(c.data);
            j["row"] = c.row->id;
            j["condition"] = c.row->condition;
            arr.push_back(j);
        }
    }
    if (!csv(o)) out << Json{{"family", s.str()}, {"local", arr}}.dump(2) << '\n';
    return kExitOk;
}

Json stats_json(const SweepStats& st) {
    Json f = Json::array();
    for (const auto& x : st.failures)
        f.push_back({{"kind", x.kind}, {"spec", x.spec.str()}, {"p", int_json(x.p)}, {"detail", x.detail}});
    return {{"specs", st.specs},
            {"cases", st.cases},
            {"mismatches", st.mismatches},
            {"coverage_errors", st.coverage_errors},
            {"papadopoulos_failures", st.papadopoulos_failures},
            {"non_minimal", st.non_minimal},
            {"even_n_star", st.even_star},
            {"conductor_bound", st.conductor_bound},
            {"IIstar_at_odd_p", st.odd_IIstar},
            {"failures", f}};
}

int cmd_crosscheck(const Opts& o, std::ostream& out) {
    std::vector<Grid> grids;
    if (o.grid_family == "all") {
        grids = standard_grids(o.a_max, o.b_max, o.d_max);
    } else {
        grids.push_back({parse_tag(o.grid_family), o.a_max, o.b_max, o.d_max});
    }
    SweepStats total;
    Json per = Json::object();
    if (csv(o)) out << "family,specs,cases,mismatches,coverage_errors,papadopoulos_failures,non_minimal,even_n_star,conductor_bound,IIstar_at_odd_p\n";
    for (const auto& g : grids) {
        SweepStats st = sweep_parallel(g, o.jobs);
        if (csv(o))
            out << tag_name(g.tag) << ',' << st.specs << ',' << st.cases << ',' << st.mismatches << ','
                << st.coverage_errors << ',' << st.papadopoulos_failures << ',' << st.non_minimal << ','
                << st.even_star << ',' << st.conductor_bound << ',' << st.odd_IIstar << '\n';
        else
            per[tag_name(g.tag)] = stats_json(st);
        total.merge(st);
    }
    if (!csv(o)) out << Json{{"families", per}, {"clean", total.clean()}}.dump(2) << '\n';
    return total.clean() ? kExitOk : kExitMismatch;
}

int cmd_construct(const Opts& o, std::ostream& out) {
    VerifyReport r = verify_prescription(parse_prescription(o.at));
    WeierstrassModel e = build_curve(r.spec, {.allow_d1 = true});
    if (csv(o)) {
        out << "p,expected," << localdata_csv_header() << ",ok\n";
        for (const auto& c : r.checks)
            out << c.p.get_str() << ',' << (c.expected_n ? KodairaType::Instar(*c.expected_n).str() : "")
                << ',' << localdata_csv_row(c.data) << ',' << (c.ok ? 1 : 0) << '\n';
        for (const auto& d : r.extra_additive) out << d.p.get_str() << ",," << localdata_csv_row(d) << ",0\n";
    } else {
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            Json j = to_json(c.data);
            if (c.expected_n) j["expected"] = KodairaType::Instar(*c.expected_n).str();
            j["ok"] = c.ok;
            checks.push_back(j);
        }
        Json extra = Json::array();
        for (const auto& d : r.extra_additive) extra.push_back(to_json(d));
        out << Json{{"prescription", r.pres.str()},
                    {"family", r.spec.str()},
                    {"ainvs", ainvs_json(e.ainvs())},
                    {"checks", checks},
                    {"extra_additive", extra},
                    {"verified", r.ok()}}
                   .dump(2)
            << '\n';
    }
    return r.ok() ? kExitOk : kExitMismatch;
}

void report_csv_rows(std::ostream& out, const std::string& key, const GlobalReport& g) {
    for (const auto& c : g.contributions)
        out << key << ',' << g.c.get_str() << ',' << g.conductor.get_str() << ',' << c.p.get_str() << ','
            << c.type.str() << ',' << c.fp << ',' << c.cp << '\n';
}

int cmd_tamagawa(const Opts& o, std::ostream& out) {
    int given = !o.curve.empty() + !o.family.empty() + !o.search.empty();
    if (given != 1) throw ArgumentError("give exactly one of --curve, --family, --search");
    if (csv(o)) out << "curve,c,conductor,p,type,f,cp\n";
    if (!o.search.empty()) {
        C1Kind kind = parse_c1_kind(o.search);
        long lo = o.k_min >= 0 ? o.k_min : (kind == C1Kind::ThreeTorsionCubes ? 1 : 0);
        auto fams = enumerate_c1_families(kind, lo, o.k_max, o.jobs);
        bool all_one = true;
        Json arr = Json::array();
        for (const auto& f : fams) {
            all_one = all_one && f.certificate.c == 1;
            if (csv(o)) {
                report_csv_rows(out, f.spec.str(), f.certificate);
            } else {
                Json j = to_json(f.certificate);
                j["k"] = f.k;
                j["spec"] = f.spec.str();
                arr.push_back(j);
            }
        }
        if (!csv(o)) out << Json{{"kind", c1_kind_name(kind)}, {"curves", arr}, {"all_c1", all_one}}.dump(2) << '\n';
        return all_one ? kExitOk : kExitMismatch;
    }
    GlobalReport g = o.curve.empty() ? global_tamagawa(parse_family(o.family))
                                     : global_tamagawa(WeierstrassModel(parse_ainvs(o.curve)));
    if (csv(o))
        report_csv_rows(out, o.curve.empty() ? o.family : o.curve, g);
    else
        out << to_json(g).dump(2) << '\n';
    return kExitOk;
}

int cmd_batch(const Opts& o, std::ostream& out) {
    BatchFormat in_fmt = o.input_format.empty() ? format_from_path(o.path) : parse_batch_format(o.input_format);
    auto res = run_batch(ingest_batch(o.path, in_fmt), o.jobs);
    BatchFormat out_fmt = csv(o) ? BatchFormat::Csv : BatchFormat::JsonLines;
    if (o.output.empty()) {
        write_batch(out, res, out_fmt);
    } else {
        std::ofstream f(o.output);
        if (!f) throw ArgumentError("cannot write " + o.output);
        write_batch(f, res, out_fmt);
    }
    return batch_ok(res) ? kExitOk : kExitMismatch;
}

int cmd_dump(const Opts& o, std::ostream& out) {
    if (o.papadopoulos) {
        out << dump_tables_csv();
        return kExitOk;
    }
    if (o.table != 0) {
        if (o.table < 2 || o.table > 8) throw ArgumentError("table must be in 2..8");
        out << rows_csv(o.table);
        return kExitOk;
    }
    for (int t = 2; t <= 8; ++t) out << rows_csv(t);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local data of rational elliptic curves with torsion"};
    app.require_subcommand(1);
    app.fallthrough();
    Opts o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", o.jobs, "Worker threads (0 = all)");

    auto* ld = app.add_subcommand("localdata", "Per-prime local data of a curve");
    ld->add_option("--ainvs", o.ainvs, "a1,a2,a3,a4,a6")->required();
    ld->add_option("--p", o.primes, "Restrict to these primes");

    auto* cl = app.add_subcommand("classify", "Local data from the family tables");
    cl->add_option("family", o.family, "T:a,b[,d]")->required();
    cl->add_option("--p", o.prime, "Prime");

    auto* cc = app.add_subcommand("crosscheck", "Compare tables against Tate's algorithm on a grid");
    cc->add_option("--family", o.grid_family, "Torsion tag or 'all'");
    cc->add_option("--a-max", o.a_max);
    cc->add_option("--b-max", o.b_max);
    cc->add_option("--d-max", o.d_max);

    auto* co = app.add_subcommand("construct", "Curve with prescribed I_n* reduction");
    co->add_option("--at", o.at, "p=n")->required();

    auto* ta = app.add_subcommand("tamagawa", "Global Tamagawa number");
    ta->add_option("--curve", o.curve, "a1,a2,a3,a4,a6");
    ta->add_option("--family", o.family, "T:a,b[,d]");
    ta->add_option("--search", o.search, "three-torsion-cubes or two-torsion-quadratic");
    ta->add_option("--k-min", o.k_min);
    ta->add_option("--k-max", o.k_max);

    auto* ba = app.add_subcommand("batch", "Annotate a file of curves");
    ba->add_option("path", o.path)->required();
    ba->add_option("--input-format", o.input_format, "csv or json-lines");
    ba->add_option("--output", o.output);

    auto* dt = app.add_subcommand("dump-tables", "Encoded table rows as CSV");
    dt->add_option("--table", o.table, "2..8");
    dt->add_flag("--papadopoulos", o.papadopoulos, "Conductor tables instead");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return kExitInput;
    }

    try {
        if (*ld) return cmd_localdata(o, out);
        if (*cl) return cmd_classify(o, out);
        if (*cc) return cmd_crosscheck(o, out);
        if (*co) return cmd_construct(o, out);
        if (*ta) return cmd_tamagawa(o, out);
        if (*ba) return cmd_batch(o, out);
        if (*dt) return cmd_dump(o, out);
    } catch (const CoverageError& e) {
        err << "coverage: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace kodaira
