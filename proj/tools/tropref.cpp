#include "tropref/tropref.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace tropref;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kBadInput = 2, kCap = 3, kInconclusive = 4 };

struct ClassArgs {
    std::string surface;
    std::string polygon;
    std::string cls;
};

void add_class_options(CLI::App* cmd, ClassArgs& c) {
    cmd->add_option("--surface", c.surface, "hirzebruch:<delta>, p2, or polygon:<file>");
    cmd->add_option("--polygon", c.polygon, "polygon JSON file (same as --surface polygon:<file>)");
    cmd->add_option("--class", c.cls, "a,b for Hirzebruch surfaces, d for p2");
}

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "' in --class");
        out.push_back(v);
    }
    return out;
}

SurfaceClass read_polygon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polygon file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument("polygon file '" + path + "' is not JSON: " + e.what());
    }
    return class_from_json(j);
}

std::optional<SurfaceClass> maybe_class(const ClassArgs& c) {
    if (c.surface.empty() && c.polygon.empty()) return std::nullopt;
    std::string surf = c.surface;
    if (surf.empty() || surf == "polygon") {
        if (c.polygon.empty()) throw std::invalid_argument("--surface polygon needs --polygon <file>");
        return read_polygon(c.polygon);
    }
    if (surf.rfind("polygon:", 0) == 0) return read_polygon(surf.substr(8));
    std::vector<long> k = parse_longs(c.cls);
    if (surf == "p2") {
        if (k.size() != 1) throw std::invalid_argument("p2 needs --class d");
        return p2_class(k[0]);
    }
    if (surf.rfind("hirzebruch:", 0) == 0) {
        std::vector<long> d = parse_longs(surf.substr(11));
        if (d.size() != 1 || d[0] < 0) throw std::invalid_argument("bad Hirzebruch index in '" + surf + "'");
        if (k.size() != 2) throw std::invalid_argument("hirzebruch needs --class a,b");
        return hirzebruch_class(d[0], k[0], k[1]);
    }
    throw std::invalid_argument("unknown surface '" + surf + "'");
}

SurfaceClass require_class(const ClassArgs& c) {
    auto s = maybe_class(c);
    if (!s) throw std::invalid_argument("a surface is required (--surface or --polygon)");
    return *s;
}

unsigned resolve_threads(long flag) {
    if (flag > 0) return static_cast<unsigned>(flag);
    if (flag == 0) throw std::invalid_argument("--threads must be positive");
    if (const char* env = std::getenv("TROPREF_THREADS")) {
        std::vector<long> v = parse_longs(env);
        if (v.size() != 1 || v[0] < 1) throw std::invalid_argument("TROPREF_THREADS must be a positive integer");
        return static_cast<unsigned>(v[0]);
    }
    return 1;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << text;
}

std::string to_string(const TruncSeries& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

std::string to_string(const SymLaurent& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

json string_list(const std::vector<std::string>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------

struct InvariantArgs {
    ClassArgs cls;
    long genus = 0, pairs = 0, threads = -1, cap = 30;
    std::optional<long> mod_x;
    bool full = false, as_json = false, timing = false;
    std::string out;
};

int cmd_invariant(const InvariantArgs& a) {
    SurfaceClass s = require_class(a.cls);
    if (a.full && a.mod_x) throw std::invalid_argument("--full and --mod-x are exclusive");
    if (a.genus < 0 || a.pairs < 0) throw std::invalid_argument("genus and s must be non-negative");
    const unsigned threads = resolve_threads(a.threads);
    Stopwatch clock;
    json j{{"schema_version", kSchemaVersion}, {"class", class_to_json(s)}, {"genus", a.genus}, {"s", a.pairs}};
    std::string text;
    if (a.mod_x) {
        if (*a.mod_x < 0) throw std::invalid_argument("--mod-x must be non-negative");
        TruncatedInvariant t = bg_truncated(s, a.genus, *a.mod_x, a.pairs, threads);
        j["truncation"] = *a.mod_x;
        j["series"] = series_to_json(t.series);
        j["hypothesis_warnings"] = string_list(t.warnings);
        j["diagram_count"] = t.diagram_count;
        text = to_string(t.series) + "\n";
    } else {
        InvariantOptions opt;
        opt.enumeration.threads = threads;
        opt.enumeration.area2_cap = a.cap;
        long count = static_cast<long>(enumerate_diagrams(s, a.genus, opt.enumeration).size());
        SymLaurent p = bg(s, a.genus, a.pairs, opt), c = bg_cleared(s, a.genus, a.pairs, opt);
        j["truncation"] = nullptr;
        j["bg"] = laurent_to_json(p);
        j["bg_cleared"] = laurent_to_json(c);
        j["hypothesis_warnings"] = string_list(hypothesis_warnings(s, 0, a.pairs));
        j["diagram_count"] = count;
        text = "bg = " + to_string(p) + "\nbg_cleared = " + to_string(c) + "\n";
    }
    if (a.timing) {
        j["wall_time"] = clock.seconds();
        std::cerr << "wall time " << std::fixed << std::setprecision(3) << clock.seconds() << " s\n";
    }
    if (!a.out.empty()) emit(j.dump(2) + "\n", a.out);
    if (a.as_json) std::cout << j.dump(2) << "\n";
    else if (a.out.empty()) std::cout << text;
    return kOk;
}

// ---------------------------------------------------------------------------

std::string describe(const SurfaceClass& s) {
    std::ostringstream os;
    os << "a=" << s.a << " b=" << s.b_bot << "/" << s.b_top << " L=";
    for (std::size_t i = 0; i < s.b_left.size(); ++i) os << (i ? "," : "") << s.b_left[i];
    os << " R=";
    for (std::size_t i = 0; i < s.b_right.size(); ++i) os << (i ? "," : "") << s.b_right[i];
    return os.str();
}

struct VerifyArgs {
    ClassArgs cls;
    std::string mode;
    long mod_x = 1, genus_max = 2, pairs = 0, threads = -1;
    bool force = false, as_json = false;
};

int cmd_verify(const VerifyArgs& a) {
    SurfaceClass s = require_class(a.cls);
    VerifyMode mode = parse_verify_mode(a.mode);
    const bool by_genus = mode == VerifyMode::Codeg0 || mode == VerifyMode::Codeg1;
    VerifyOptions opt{by_genus ? a.genus_max : a.mod_x, a.pairs, a.force, resolve_threads(a.threads)};
    if (opt.order < 0 || opt.pairs < 0) throw std::invalid_argument("orders and s must be non-negative");
    VerifyReport rep = verify(s, mode, opt);
    const std::string label = describe(s);
    if (a.as_json) {
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"coefficient", r.label},
                            {"enumerated", to_decimal(r.enumerated)},
                            {"closed_form", to_decimal(r.closed_form)},
                            {"status", r.ok ? "pass" : "fail"}});
        json j{{"schema_version", kSchemaVersion},
               {"mode", a.mode},
               {"class", class_to_json(s)},
               {"order", opt.order},
               {"s", opt.pairs},
               {"forced", opt.force},
               {"status", status_name(rep.status)},
               {"unmet_conditions", string_list(rep.unmet)},
               {"rows", rows}};
        std::cout << j.dump(2) << "\n";
    } else {
        const int wc = static_cast<int>(label.size()) + 2;
        std::cout << std::left << std::setw(wc) << "class" << std::setw(22) << "coefficient" << std::setw(16)
                  << "enumerated" << std::setw(16) << "closed-form"
                  << "status\n";
        for (const auto& r : rep.rows)
            std::cout << std::setw(wc) << label << std::setw(22) << r.label << std::setw(16) << r.enumerated.get_str()
                      << std::setw(16) << r.closed_form.get_str() << (r.ok ? "pass" : "FAIL") << "\n";
        for (const auto& u : rep.unmet) std::cout << "unmet: " << u << "\n";
        std::cout << "verdict: " << status_name(rep.status) << "\n";
    }
    switch (rep.status) {
        case VerifyReport::Status::Pass: return kOk;
        case VerifyReport::Status::Fail: return kMismatch;
        case VerifyReport::Status::Inconclusive: return kInconclusive;
    }
    return kMismatch;
}

// ---------------------------------------------------------------------------

struct SeriesArgs {
    ClassArgs cls;
    std::string name;
    long mod_x = 6, mod_u = 3, m = 1, n = -1, pairs = 0;
    std::optional<long> chi, g_max;
    bool as_json = false;
};

int cmd_series(const SeriesArgs& a) {
    const long N = a.mod_x;
    if (N < 0 || a.mod_u < 0) throw std::invalid_argument("truncation orders must be non-negative");
    std::optional<SurfaceClass> s = maybe_class(a.cls);
    std::optional<LatticeInvariants> inv;
    if (s) inv = lattice_invariants(*s);
    auto need = [&](const std::optional<long>& flag, long LatticeInvariants::*field, const char* what) {
        if (flag) return *flag;
        if (inv) return (*inv).*field;
        throw std::invalid_argument(std::string("series ") + a.name + " needs --" + what + " or a surface");
    };
    auto print = [&](const TruncSeries& r, const char* var) {
        if (a.as_json) {
            json j = series_to_json(r, var);
            j["schema_version"] = kSchemaVersion;
            j["name"] = a.name;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << r << "\n";
        }
    };

    if (a.name == "p") print(partition_series(N), "x");
    else if (a.name == "e2") print(eisenstein_e2(N), "x");
    else if (a.name == "bracket") print(bracket_series(a.m, N), "x");
    else if (a.name == "p-chi") print(partition_series(N).pow(need(a.chi, &LatticeInvariants::chi, "chi")), "x");
    else if (a.name == "pearl") print(pearl_series(N), "x");
    else if (a.name == "pearl-weighted") print(pearl_weighted_series(N), "x");
    else if (a.name == "sentence") print(sentence_series(a.n < 0 ? N + 1 : a.n, N, a.pairs), "x");
    else if (a.name == "ar-genus0") print(ar_genus0(need(a.chi, &LatticeInvariants::chi, "chi"), N), "x");
    else if (a.name == "ar-genus1")
        print(ar_genus1(need(a.chi, &LatticeInvariants::chi, "chi"), need(a.g_max, &LatticeInvariants::g_max, "g-max"),
                        N, a.pairs),
              "x");
    else if (a.name == "ar-codeg0") print(ar_codeg0(need(a.g_max, &LatticeInvariants::g_max, "g-max"), a.mod_u), "u");
    else if (a.name == "ar-codeg1") {
        if (!inv) throw std::invalid_argument("series ar-codeg1 needs a surface");
        print(ar_codeg1(*inv, a.mod_u), "u");
    } else if (a.name == "conjecture") {
        long chi = need(a.chi, &LatticeInvariants::chi, "chi");
        BiTruncSeries r = conjecture_mod_u2(chi, 12 - chi, need(a.g_max, &LatticeInvariants::g_max, "g-max"), N);
        if (a.as_json) {
            json j{{"schema_version", kSchemaVersion},
                   {"name", a.name},
                   {"var", "u,x"},
                   {"trunc", json::array({1, N})},
                   {"coeffs", json::array({series_to_json(r.u_slice(0))["coeffs"],
                                           series_to_json(r.u_slice(1))["coeffs"]})}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "u^0 " << r.u_slice(0) << "\nu^1 " << r.u_slice(1) << "\n";
        }
    } else {
        throw std::invalid_argument("unknown series '" + a.name + "'");
    }
    return kOk;
}

// ---------------------------------------------------------------------------

struct RoundtripArgs {
    ClassArgs cls;
    std::string file;
    bool as_json = false;
};

int cmd_word_roundtrip(const RoundtripArgs& a) {
    std::ifstream in(a.file);
    if (!in) throw std::invalid_argument("cannot open word file '" + a.file + "'");
    std::vector<Word> words;
    std::string line;
    for (long no = 1; std::getline(in, line); ++no) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            words.push_back(parse_word(line));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(a.file + ":" + std::to_string(no) + ": " + e.what());
        }
    }
    if (words.empty()) throw std::invalid_argument("no words in '" + a.file + "'");
    std::optional<SurfaceClass> given = maybe_class(a.cls);
    json results = json::array();
    long bad = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        SurfaceClass s = given ? *given : infer_class({words[i]});
        WordDecoding dec = decode_word(words[i], s);
        std::string problem;
        const bool sloped =
            std::any_of(words[i].begin(), words[i].end(), [](const Letter& x) { return x.sloped; });
        if (!dec.marked) problem = "an elevator has non-positive weight";
        else if (encode_word(*dec.marked, sloped) != words[i]) problem = "re-encoding differs";
        if (!problem.empty()) ++bad;
        json r{{"word", format_word(words[i])}, {"class", class_to_json(s)}, {"ok", problem.empty()}};
        if (dec.marked) {
            r["genus"] = genus(dec.marked->diagram);
            r["codegree"] = codegree(dec.marked->diagram);
        }
        if (!problem.empty()) r["error"] = problem;
        results.push_back(r);
        if (!a.as_json && !problem.empty()) std::cout << "word " << i + 1 << ": " << problem << "\n";
    }
    if (a.as_json) {
        json j{{"schema_version", kSchemaVersion},
               {"file", a.file},
               {"validated", static_cast<long>(words.size()) - bad},
               {"failed", bad},
               {"words", results}};
        std::cout << j.dump(2) << "\n";
    } else if (bad == 0) {
        std::cout << "OK, " << words.size() << (words.size() == 1 ? " word" : " words") << " validated\n";
    } else {
        std::cout << "FAILED, " << bad << " of " << words.size() << " words\n";
    }
    return bad == 0 ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------

struct ExportArgs {
    ClassArgs cls;
    long genus = 0, threads = -1, cap = 30;
    std::optional<long> codeg_max;
    std::string format = "jsonl", out;
    bool as_json = false;
};

int cmd_export_diagrams(const ExportArgs& a) {
    SurfaceClass s = require_class(a.cls);
    std::string format = a.as_json ? "jsonl" : a.format;
    if (format != "jsonl" && format != "dot") throw std::invalid_argument("format must be jsonl or dot");
    EnumerationOptions opt;
    opt.codeg_budget = a.codeg_max;
    opt.threads = resolve_threads(a.threads);
    opt.area2_cap = a.cap;
    std::ostringstream os;
    long index = 0;
    for (const FloorDiagram& d : enumerate_diagrams(s, a.genus, opt)) {
        ++index;
        if (format == "dot") {
            os << diagram_to_dot(d, "D" + std::to_string(index));
        } else {
            json j{{"schema_version", kSchemaVersion},
                   {"index", index},
                   {"genus", genus(d)},
                   {"codegree", codegree(d)},
                   {"markings", to_decimal(count_markings(d))},
                   {"multiplicity", laurent_to_json(bg_multiplicity(d))},
                   {"diagram", diagram_to_json(d)}};
            os << j.dump() << "\n";
        }
    }
    emit(os.str(), a.out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Refined tropical invariants of toric surfaces via floor diagrams"};
    app.require_subcommand(1);

    InvariantArgs inv;
    auto* c_inv = app.add_subcommand("invariant", "refined invariant of a class, exact or modulo x^(N+1)");
    add_class_options(c_inv, inv.cls);
    c_inv->add_option("--genus", inv.genus, "genus");
    c_inv->add_option("--mod-x", inv.mod_x, "truncate the codegree expansion after x^N");
    c_inv->add_option("--s", inv.pairs, "pairs of conjugate points");
    c_inv->add_flag("--full", inv.full, "exact Laurent polynomial (default without --mod-x)");
    c_inv->add_option("--out", inv.out, "write the JSON result to a file");
    c_inv->add_option("--threads", inv.threads, "worker threads (default: TROPREF_THREADS or 1)");
    c_inv->add_option("--cap", inv.cap, "largest twice-area allowed for --full");
    c_inv->add_flag("--json", inv.as_json, "print JSON");
    c_inv->add_flag("--timing", inv.timing, "report wall time");

    VerifyArgs ver;
    auto* c_ver = app.add_subcommand("verify", "compare enumeration with a closed form");
    c_ver->add_option("mode", ver.mode, "codeg0, codeg1, genus0, genus1 or conjecture")->required();
    add_class_options(c_ver, ver.cls);
    c_ver->add_option("--mod-x", ver.mod_x, "x-truncation for the genus modes");
    c_ver->add_option("--genus-max", ver.genus_max, "largest genus for the codegree modes");
    c_ver->add_option("--s", ver.pairs, "pairs of conjugate points");
    c_ver->add_flag("--force", ver.force, "compare even below the size thresholds");
    c_ver->add_option("--threads", ver.threads, "worker threads (default: TROPREF_THREADS or 1)");
    c_ver->add_flag("--json", ver.as_json, "print a JSON report");

    SeriesArgs ser;
    auto* c_ser = app.add_subcommand("series", "print a named series");
    c_ser->add_option("name", ser.name,
                      "p, e2, bracket, p-chi, pearl, pearl-weighted, sentence, ar-genus0, ar-genus1, ar-codeg0, "
                      "ar-codeg1, conjecture")
        ->required();
    add_class_options(c_ser, ser.cls);
    c_ser->add_option("--mod-x", ser.mod_x, "x-truncation");
    c_ser->add_option("--mod-u", ser.mod_u, "u-truncation for ar-codeg0 and ar-codeg1");
    c_ser->add_option("--m", ser.m, "exponent of the bracket series");
    c_ser->add_option("--n", ser.n, "sentence length (default N+1)");
    c_ser->add_option("--s", ser.pairs, "pairs of conjugate points");
    c_ser->add_option("--chi", ser.chi, "number of sides");
    c_ser->add_option("--g-max", ser.g_max, "number of interior points");
    c_ser->add_flag("--json", ser.as_json, "print JSON");

    RoundtripArgs rt;
    auto* c_rt = app.add_subcommand("word-roundtrip", "decode and re-encode the words of a file");
    c_rt->add_option("file", rt.file, "word file, one word per line")->required();
    add_class_options(c_rt, rt.cls);
    c_rt->add_flag("--json", rt.as_json, "print JSON");

    ExportArgs ex;
    auto* c_ex = app.add_subcommand("export-diagrams", "stream the diagrams of a class");
    add_class_options(c_ex, ex.cls);
    c_ex->add_option("--genus", ex.genus, "genus");
    c_ex->add_option("--codeg-max", ex.codeg_max, "only diagrams of codegree at most this");
    c_ex->add_option("--format", ex.format, "jsonl or dot");
    c_ex->add_option("--out", ex.out, "output file");
    c_ex->add_option("--threads", ex.threads, "worker threads (default: TROPREF_THREADS or 1)");
    c_ex->add_option("--cap", ex.cap, "largest twice-area allowed without --codeg-max");
    c_ex->add_flag("--json", ex.as_json, "JSON-lines output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*c_inv) return cmd_invariant(inv);
        if (*c_ver) return cmd_verify(ver);
        if (*c_ser) return cmd_series(ser);
        if (*c_rt) return cmd_word_roundtrip(rt);
        if (*c_ex) return cmd_export_diagrams(ex);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return kBadInput;
}
