#include "kodaira/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kodaira {

Json int_json(const Int& n) {
    if (n.fits_slong_p()) return Json(static_cast<long long>(n.get_si()));
    return Json(n.get_str());
}

Int json_int(const Json& j) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        Int n;
        if (n.set_str(j.get<std::string>(), 10) != 0) throw ArgumentError("not an integer: " + j.dump());
        return n;
    }
    if (j.is_number_float()) throw ArgumentError("integer out of range, quote it as a string: " + j.dump());
    throw ArgumentError("expected integer, got " + j.dump());
}

Json ainvs_json(const Ainvs& a) {
    Json j = Json::array();
    for (const auto& x : a.array()) j.push_back(int_json(x));
    return j;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& s) {
    Int n;
    std::string t = trim(s);
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    if (t.empty() || n.set_str(t, 10) != 0) throw ArgumentError("not an integer: '" + s + "'");
    return n;
}

Ainvs from_array(const std::vector<Int>& v) {
    if (v.size() != 5) throw ArgumentError("expected 5 a-invariants, got " + std::to_string(v.size()));
    return {v[0], v[1], v[2], v[3], v[4]};
}

}  // namespace

Ainvs parse_ainvs(const std::string& csv) {
    std::string s = trim(csv);
    if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    std::vector<Int> v;
    for (const auto& f : split(s, ',')) v.push_back(parse_int(f));
    return from_array(v);
}

Json to_json(const LocalData& d) {
    return Json{{"p", int_json(d.p)},
                {"type", d.type.str()},
                {"f", d.fp},
                {"c", d.cp},
                {"vdelta_min", d.vdelta_min},
                {"u_scale", d.u_scale},
                {"minimal_model", ainvs_json(d.minimal_model)}};
}

Json to_json(const GlobalReport& r) {
    Json local = Json::array();
    for (const auto& c : r.contributions)
        local.push_back({{"p", int_json(c.p)}, {"type", c.type.str()}, {"f", c.fp}, {"c", c.cp}});
    Json j{{"ainvs", ainvs_json(r.curve.ainvs())},
           {"c", int_json(r.c)},
           {"conductor", int_json(r.conductor)},
           {"disc_min", int_json(r.disc_min)},
           {"local", local}};
    if (r.torsion_hint) j["family"] = tag_name(*r.torsion_hint);
    return j;
}

std::string localdata_csv_header() {
    return "p,type,f,c,vdelta_min,u_scale,a1,a2,a3,a4,a6";
}

std::string localdata_csv_row(const LocalData& d) {
    std::ostringstream o;
    o << d.p.get_str() << ',' << d.type.str() << ',' << d.fp << ',' << d.cp << ',' << d.vdelta_min << ','
      << d.u_scale;
    for (const auto& x : d.minimal_model.array()) o << ',' << x.get_str();
    return o.str();
}

BatchFormat parse_batch_format(const std::string& s) {
    if (s == "csv") return BatchFormat::Csv;
    if (s == "json" || s == "jsonl" || s == "json-lines") return BatchFormat::JsonLines;
    throw ArgumentError("unknown batch format '" + s + "'");
}

BatchFormat format_from_path(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    return ext == "csv" ? BatchFormat::Csv : BatchFormat::JsonLines;
}

bool BatchRecord::same_record(const BatchRecord& o) const {
    return label == o.label && ainvs == o.ainvs && expected_c == o.expected_c &&
           expected_local == o.expected_local && rejection == o.rejection;
}

namespace {

void check_singular(BatchRecord& r) {
    if (discriminant(r.ainvs) == 0) r.rejection = "singular";
}

std::vector<BatchRecord> parse_csv(std::istream& in) {
    std::vector<BatchRecord> out;
    std::string line;
    long row = 0;
    // column positions: label, a1..a6, expected_c
    std::vector<int> pos{0, 1, 2, 3, 4, 5, 6};
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty() || trim(line)[0] == '#') continue;
        auto f = split(line, ',');
        for (auto& x : f) x = trim(x);
        if (!header_seen && !f.empty() && f[0] == "label") {
            header_seen = true;
            const char* names[] = {"label", "a1", "a2", "a3", "a4", "a6", "expected_c"};
            for (int k = 0; k < 7; ++k) {
                auto it = std::find(f.begin(), f.end(), names[k]);
                pos[k] = it == f.end() ? -1 : static_cast<int>(it - f.begin());
                if (pos[k] < 0 && k < 6) throw BatchError(row, std::string("missing column ") + names[k]);
            }
            continue;
        }
        header_seen = true;
        BatchRecord r;
        r.row = row;
        try {
            for (int k = 0; k < 6; ++k)
                if (pos[k] >= static_cast<int>(f.size())) throw ArgumentError("too few fields");
            if (!f[pos[0]].empty()) r.label = f[pos[0]];
            std::vector<Int> v;
            for (int k = 1; k < 6; ++k) v.push_back(parse_int(f[pos[k]]));
            r.ainvs = from_array(v);
            if (pos[6] >= 0 && pos[6] < static_cast<int>(f.size()) && !f[pos[6]].empty())
                r.expected_c = parse_int(f[pos[6]]);
        } catch (const ArgumentError& e) {
            throw BatchError(row, e.what());
        }
        check_singular(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BatchRecord> parse_jsonl(std::istream& in) {
    std::vector<BatchRecord> out;
    std::string line;
    long row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        BatchRecord r;
        r.row = row;
        try {
            Json j = Json::parse(line);
            if (!j.is_object()) throw ArgumentError("expected a JSON object");
            if (j.contains("label") && !j["label"].is_null()) r.label = j["label"].get<std::string>();
            if (!j.contains("ainvs") || !j["ainvs"].is_array()) throw ArgumentError("missing ainvs array");
            std::vector<Int> v;
            for (const auto& x : j["ainvs"]) v.push_back(json_int(x));
            r.ainvs = from_array(v);
            if (j.contains("expected") && !j["expected"].is_null()) {
                const Json& e = j["expected"];
                if (e.is_number() || e.is_string()) {
                    r.expected_c = json_int(e);
                } else {
                    if (e.contains("c")) r.expected_c = json_int(e["c"]);
                    if (e.contains("local"))
                        for (const auto& l : e["local"]) {
                            ExpectedLocal x{json_int(l.at("p")), {}, {}, {}};
                            if (l.contains("type")) x.type = parse_kodaira(l["type"].get<std::string>());
                            if (l.contains("f")) x.f = l["f"].get<int>();
                            if (l.contains("c")) x.c = l["c"].get<int>();
                            r.expected_local.push_back(std::move(x));
                        }
                }
            }
        } catch (const Json::exception& e) {
            throw BatchError(row, e.what());
        } catch (const ArgumentError& e) {
            throw BatchError(row, e.what());
        }
        check_singular(r);
        out.push_back(std::move(r));
    }
    return out;
}

bool matches(const BatchRecord& rec, const GlobalReport& g) {
    if (rec.expected_c && *rec.expected_c != g.c) return false;
    for (const auto& x : rec.expected_local) {
        auto it = std::find_if(g.contributions.begin(), g.contributions.end(),
                               [&](const Contribution& c) { return c.p == x.p; });
        KodairaType type = it == g.contributions.end() ? KodairaType::In(0) : it->type;
        int f = it == g.contributions.end() ? 0 : it->fp;
        int c = it == g.contributions.end() ? 1 : it->cp;
        if ((x.type && *x.type != type) || (x.f && *x.f != f) || (x.c && *x.c != c)) return false;
    }
    return true;
}

bool result_less(const BatchResult& x, const BatchResult& y) {
    const auto& a = x.record;
    const auto& b = y.record;
    if (a.label != b.label) return a.label < b.label;
    auto u = a.ainvs.array(), v = b.ainvs.array();
    if (u != v) return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
    return a.row < b.row;
}

std::string csv_cell(const std::optional<std::string>& s) {
    return s ? *s : "";
}

}  // namespace

std::vector<BatchRecord> parse_batch(std::istream& in, BatchFormat fmt) {
    return fmt == BatchFormat::Csv ? parse_csv(in) : parse_jsonl(in);
}

std::vector<BatchRecord> ingest_batch(const std::string& path, BatchFormat fmt) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path);
    return parse_batch(in, fmt);
}

std::vector<BatchResult> run_batch(const std::vector<BatchRecord>& recs, int jobs) {
    std::vector<BatchResult> res(recs.size());
    int threads = jobs > 0 ? jobs : 1;
#ifdef _OPENMP
    if (jobs <= 0) threads = omp_get_max_threads();
#endif
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < static_cast<long>(recs.size()); ++i) {
        BatchResult& r = res[i];
        r.record = recs[i];
        if (recs[i].rejection) {
            r.status = "rejected: " + *recs[i].rejection;
            continue;
        }
        try {
            r.report = global_tamagawa(WeierstrassModel(recs[i].ainvs));
            r.status = matches(recs[i], *r.report) ? "ok" : "mismatch";
        } catch (const std::exception& e) {
            r.status = std::string("error: ") + e.what();
        }
    }
    std::sort(res.begin(), res.end(), result_less);
    return res;
}

bool batch_ok(const std::vector<BatchResult>& res) {
    for (const auto& r : res)
        if (r.status == "mismatch" || r.status.rfind("error", 0) == 0) return false;
    return true;
}

void write_batch(std::ostream& out, const std::vector<BatchResult>& res, BatchFormat fmt) {
    if (fmt == BatchFormat::Csv) {
        out << "label,a1,a2,a3,a4,a6,expected_c,c,conductor,disc_min,status\n";
        for (const auto& r : res) {
            out << csv_cell(r.record.label);
            for (const auto& x : r.record.ainvs.array()) out << ',' << x.get_str();
            out << ',' << (r.record.expected_c ? r.record.expected_c->get_str() : "");
            if (r.report)
                out << ',' << r.report->c.get_str() << ',' << r.report->conductor.get_str() << ','
                    << r.report->disc_min.get_str();
            else
                out << ",,,";
            std::string st = r.status;
            std::replace(st.begin(), st.end(), ',', ';');
            out << ',' << st << '\n';
        }
        return;
    }
    for (const auto& r : res) {
        Json j{{"ainvs", ainvs_json(r.record.ainvs)}, {"status", r.status}};
        if (r.record.label) j["label"] = *r.record.label;
        if (r.record.expected_c || !r.record.expected_local.empty()) {
            Json e = Json::object();
            if (r.record.expected_c) e["c"] = int_json(*r.record.expected_c);
            if (!r.record.expected_local.empty()) {
                Json l = Json::array();
                for (const auto& x : r.record.expected_local) {
                    Json o{{"p", int_json(x.p)}};
                    if (x.type) o["type"] = x.type->str();
                    if (x.f) o["f"] = *x.f;
                    if (x.c) o["c"] = *x.c;
                    l.push_back(o);
                }
                e["local"] = l;
            }
            j["expected"] = e;
        }
        if (r.report) j["result"] = to_json(*r.report);
        out << j.dump() << '\n';
    }
}

}  // namespace kodaira
