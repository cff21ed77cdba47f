#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "exthyp/exthyp.h"

namespace {

constexpr const char* kUsage =
    "usage: exthyp <eval|table|verify> [flags] key=value...\n"
    "\n"
    "  eval <function> key=value...\n"
    "    functions and keys:\n"
    "      gamma_p     s= p=\n"
    "      lower       s= x= p=\n"
    "      upper       s= x= p=\n"
    "      poch_lower  lambda= nu= x= p=\n"
    "      poch_upper  lambda= nu= x= p=\n"
    "      hyp         kind=lower|upper|complete alpha1= x= p= z=\n"
    "                  [num=a,b,...] [den=a,b,...]\n"
    "      genfun      family=shifted-block|terminating-block|paired-blocks|\n"
    "                         balanced-blocks|shifted-single|paired-single\n"
    "                  lambda= n= t= side=lhs|rhs + base series keys as hyp\n"
    "      frac        op=integral|derivative a= rho= mu= omega= y=\n"
    "                  + base series keys as hyp (z ignored)\n"
    "\n"
    "  table <function> sweep <var> <start>..<stop> steps=N key=value...\n"
    "    sweeps one numeric key; other keys fixed.\n"
    "\n"
    "  verify <suite> [tol=T]\n"
    "    suites: all gamma pochhammer hyp reps genfun frac\n"
    "\n"
    "flags: --format text|csv|json   --rel-tol R   --abs-tol A\n"
    "       --max-terms N            --max-subdiv N\n"
    "\n"
    "exit codes: 0 success, 1 usage, 2 domain error, 3 non-convergence,\n"
    "            4 verification failure\n";

int usage(const std::string& msg) {
    if (!msg.empty()) std::fprintf(stderr, "exthyp: %s\n", msg.c_str());
    std::fputs(kUsage, stderr);
    return 1;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    char* end = nullptr;
    out = std::strtod(text.c_str(), &end);
    return end && *end == '\0' && std::isfinite(out);
}

bool parse_long(const std::string& text, long& out) {
    if (text.empty()) return false;
    char* end = nullptr;
    out = std::strtol(text.c_str(), &end, 10);
    return end && *end == '\0';
}

struct Args {
    std::string command;
    std::string target;                       // function or suite name
    std::string format = "text";
    double rel_tol = 0, abs_tol = 0;          // 0 = keep defaults
    long max_terms = 0, max_subdiv = 0;
    std::map<std::string, std::string> kv;
    bool has_sweep = false;
    std::string sweep_var;
    double sweep_start = 0, sweep_stop = 0;
};

// Returns empty string on success, error text otherwise.
std::string parse_args(int argc, char** argv, Args& out) {
    std::vector<std::string> pos;
    for (int i = 1; i < argc; ++i) {
        std::string tok = argv[i];
        if (tok.rfind("--", 0) == 0) {
            std::string name = tok, value;
            auto eq = tok.find('=');
            if (eq != std::string::npos) {
                name = tok.substr(0, eq);
                value = tok.substr(eq + 1);
            } else {
                if (i + 1 >= argc) return "flag " + name + " needs a value";
                value = argv[++i];
            }
            if (name == "--format") {
                if (value != "text" && value != "csv" && value != "json")
                    return "unknown format: " + value;
                out.format = value;
            } else if (name == "--rel-tol") {
                if (!parse_double(value, out.rel_tol) || out.rel_tol <= 0)
                    return "bad --rel-tol value: " + value;
            } else if (name == "--abs-tol") {
                if (!parse_double(value, out.abs_tol) || out.abs_tol <= 0)
                    return "bad --abs-tol value: " + value;
            } else if (name == "--max-terms") {
                if (!parse_long(value, out.max_terms) || out.max_terms <= 0)
                    return "bad --max-terms value: " + value;
            } else if (name == "--max-subdiv") {
                if (!parse_long(value, out.max_subdiv) || out.max_subdiv <= 0)
                    return "bad --max-subdiv value: " + value;
            } else {
                return "unknown flag: " + name;
            }
        } else if (tok == "sweep") {
            if (i + 2 >= argc) return "sweep needs: sweep <var> <start>..<stop>";
            out.has_sweep = true;
            out.sweep_var = argv[++i];
            std::string range = argv[++i];
            auto dots = range.find("..");
            if (dots == std::string::npos) return "bad sweep range: " + range;
            if (!parse_double(range.substr(0, dots), out.sweep_start) ||
                !parse_double(range.substr(dots + 2), out.sweep_stop))
                return "bad sweep range: " + range;
        } else if (tok.find('=') != std::string::npos) {
            auto eq = tok.find('=');
            std::string key = tok.substr(0, eq);
            if (key.empty()) return "empty key in: " + tok;
            if (out.kv.count(key)) return "duplicate key: " + key;
            out.kv[key] = tok.substr(eq + 1);
        } else {
            pos.push_back(tok);
        }
    }
    if (pos.empty()) return "missing command";
    out.command = pos[0];
    if (pos.size() >= 2) out.target = pos[1];
    if (pos.size() > 2) return "unexpected argument: " + pos[2];
    return "";
}

int exit_for(exthyp_status st) {
    switch (st) {
        case EXTHYP_OK: return 0;
        case EXTHYP_ERR_INVALID_ARG: return 1;
        case EXTHYP_ERR_DOMAIN:
        case EXTHYP_ERR_POLE: return 2;
        default: return 3;
    }
}

const char* status_word(exthyp_status st) {
    switch (st) {
        case EXTHYP_OK: return "ok";
        case EXTHYP_ERR_INVALID_ARG: return "invalid";
        case EXTHYP_ERR_DOMAIN: return "domain";
        case EXTHYP_ERR_POLE: return "pole";
        case EXTHYP_ERR_NONCONVERGENCE: return "nonconvergence";
        case EXTHYP_ERR_DIVERGENCE: return "divergence";
        case EXTHYP_ERR_MAX_TERMS: return "max_terms";
        default: return "internal";
    }
}

class KeyReader {
  public:
    explicit KeyReader(const std::map<std::string, std::string>& kv) : kv_(kv) {}

    bool number(const std::string& key, double& out, bool required = true) {
        auto it = kv_.find(key);
        if (it == kv_.end()) {
            if (required) error_ = "missing key: " + key;
            return false;
        }
        seen_.insert(key);
        if (!parse_double(it->second, out)) {
            error_ = "bad numeric value for " + key + ": " + it->second;
            return false;
        }
        return true;
    }

    bool integer(const std::string& key, long& out, bool required = true) {
        auto it = kv_.find(key);
        if (it == kv_.end()) {
            if (required) error_ = "missing key: " + key;
            return false;
        }
        seen_.insert(key);
        if (!parse_long(it->second, out)) {
            error_ = "bad integer value for " + key + ": " + it->second;
            return false;
        }
        return true;
    }

    bool word(const std::string& key, std::string& out, bool required = true) {
        auto it = kv_.find(key);
        if (it == kv_.end()) {
            if (required) error_ = "missing key: " + key;
            return false;
        }
        seen_.insert(key);
        out = it->second;
        return true;
    }

    bool list(const std::string& key, std::vector<double>& out) {
        auto it = kv_.find(key);
        if (it == kv_.end()) return true;
        seen_.insert(key);
        std::string rest = it->second;
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string piece = rest.substr(0, comma);
            double v;
            if (!parse_double(piece, v)) {
                error_ = "bad numeric list for " + key + ": " + it->second;
                return false;
            }
            out.push_back(v);
            if (comma == std::string::npos) break;
            rest = rest.substr(comma + 1);
        }
        return true;
    }

    // Flags an error if any key was never consumed.
    bool finish() {
        if (!error_.empty()) return false;
        for (const auto& [key, value] : kv_)
            if (!seen_.count(key)) {
                error_ = "unknown key: " + key;
                return false;
            }
        return true;
    }

    const std::string& error() const { return error_; }
    bool failed() const { return !error_.empty(); }

  private:
    const std::map<std::string, std::string>& kv_;
    std::set<std::string> seen_;
    std::string error_;
};

using SpecPtr = std::unique_ptr<exthyp_spec, decltype(&exthyp_spec_destroy)>;

SpecPtr build_spec(KeyReader& keys, bool want_z, std::string& err) {
    std::string kind_word = "upper";
    keys.word("kind", kind_word, false);
    exthyp_kind kind;
    if (kind_word == "lower") kind = EXTHYP_KIND_LOWER;
    else if (kind_word == "upper") kind = EXTHYP_KIND_UPPER;
    else if (kind_word == "complete") kind = EXTHYP_KIND_COMPLETE;
    else {
        err = "unknown kind: " + kind_word;
        return {nullptr, exthyp_spec_destroy};
    }
    double alpha1 = 0, x = 0, p = 0, z = 0;
    if (!keys.number("alpha1", alpha1)) return {nullptr, exthyp_spec_destroy};
    keys.number("x", x, false);
    keys.number("p", p, false);
    if (want_z) {
        if (!keys.number("z", z)) return {nullptr, exthyp_spec_destroy};
    } else {
        keys.number("z", z, false);
    }
    std::vector<double> num, den;
    if (!keys.list("num", num) || !keys.list("den", den))
        return {nullptr, exthyp_spec_destroy};
    if (keys.failed()) return {nullptr, exthyp_spec_destroy};
    SpecPtr spec(exthyp_spec_create(kind, alpha1, x, p, z), exthyp_spec_destroy);
    if (!spec) {
        err = "could not build series spec";
        return spec;
    }
    for (double a : num) exthyp_spec_add_num(spec.get(), a);
    for (double b : den) exthyp_spec_add_den(spec.get(), b);
    return spec;
}

bool genfun_family(const std::string& word, exthyp_genfun_family& out) {
    if (word == "shifted-block") out = EXTHYP_GENFUN_SHIFTED_BLOCK;
    else if (word == "terminating-block") out = EXTHYP_GENFUN_TERMINATING_BLOCK;
    else if (word == "paired-blocks") out = EXTHYP_GENFUN_PAIRED_BLOCKS;
    else if (word == "balanced-blocks") out = EXTHYP_GENFUN_BALANCED_BLOCKS;
    else if (word == "shifted-single") out = EXTHYP_GENFUN_SHIFTED_SINGLE;
    else if (word == "paired-single") out = EXTHYP_GENFUN_PAIRED_SINGLE;
    else return false;
    return true;
}

// Evaluates one point; returns a status and (on success) the result.
exthyp_status eval_point(exthyp_ctx* ctx, const std::string& function,
                         const std::map<std::string, std::string>& kv,
                         exthyp_result& res, std::string& err) {
    KeyReader keys(kv);
    auto bad_keys = [&]() {
        err = keys.error();
        return EXTHYP_ERR_INVALID_ARG;
    };

    if (function == "gamma_p") {
        double s = 0, p = 0;
        if (!keys.number("s", s) || !keys.number("p", p) || !keys.finish())
            return bad_keys();
        return exthyp_gamma_complete(ctx, s, p, &res);
    }
    if (function == "lower" || function == "upper") {
        double s = 0, x = 0, p = 0;
        if (!keys.number("s", s) || !keys.number("x", x) || !keys.number("p", p) ||
            !keys.finish())
            return bad_keys();
        return function == "lower" ? exthyp_gamma_lower(ctx, s, x, p, &res)
                                   : exthyp_gamma_upper(ctx, s, x, p, &res);
    }
    if (function == "poch_lower" || function == "poch_upper") {
        double lambda = 0, nu = 0, x = 0, p = 0;
        if (!keys.number("lambda", lambda) || !keys.number("nu", nu) ||
            !keys.number("x", x) || !keys.number("p", p) || !keys.finish())
            return bad_keys();
        return function == "poch_lower"
                   ? exthyp_poch_lower(ctx, lambda, nu, x, p, &res)
                   : exthyp_poch_upper(ctx, lambda, nu, x, p, &res);
    }
    if (function == "hyp") {
        SpecPtr spec = build_spec(keys, true, err);
        if (!spec || !keys.finish()) return err.empty() ? bad_keys()
                                                        : EXTHYP_ERR_INVALID_ARG;
        return exthyp_eval_hyp(ctx, spec.get(), &res);
    }
    if (function == "genfun") {
        std::string family_word, side_word = "rhs";
        double lambda = 0, t = 0;
        long block = 1;
        if (!keys.word("family", family_word) || !keys.number("lambda", lambda) ||
            !keys.number("t", t))
            return bad_keys();
        keys.integer("n", block, false);
        keys.word("side", side_word, false);
        exthyp_genfun_family family;
        if (!genfun_family(family_word, family)) {
            err = "unknown family: " + family_word;
            return EXTHYP_ERR_INVALID_ARG;
        }
        exthyp_genfun_side side;
        if (side_word == "lhs") side = EXTHYP_GENFUN_LHS;
        else if (side_word == "rhs") side = EXTHYP_GENFUN_RHS;
        else {
            err = "unknown side: " + side_word;
            return EXTHYP_ERR_INVALID_ARG;
        }
        SpecPtr spec = build_spec(keys, true, err);
        if (!spec || !keys.finish()) return err.empty() ? bad_keys()
                                                        : EXTHYP_ERR_INVALID_ARG;
        return exthyp_eval_genfun(ctx, family, lambda, static_cast<int>(block), t,
                                  side, spec.get(), &res);
    }
    if (function == "frac") {
        std::string op_word;
        double a = 0, rho = 0, mu = 0, omega = 0, y = 0;
        if (!keys.word("op", op_word) || !keys.number("a", a) ||
            !keys.number("rho", rho) || !keys.number("mu", mu) ||
            !keys.number("omega", omega) || !keys.number("y", y))
            return bad_keys();
        exthyp_frac_op op;
        if (op_word == "integral") op = EXTHYP_FRAC_INTEGRAL;
        else if (op_word == "derivative") op = EXTHYP_FRAC_DERIVATIVE;
        else {
            err = "unknown op: " + op_word;
            return EXTHYP_ERR_INVALID_ARG;
        }
        SpecPtr spec = build_spec(keys, false, err);
        if (!spec || !keys.finish()) return err.empty() ? bad_keys()
                                                        : EXTHYP_ERR_INVALID_ARG;
        return exthyp_eval_frac(ctx, op, a, rho, mu, omega, y, spec.get(), &res);
    }
    err = "unknown function: " + function;
    return EXTHYP_ERR_INVALID_ARG;
}

void print_eval(const std::string& format, const exthyp_result& res) {
    if (format == "json") {
        std::printf("{\"value\":%s,\"err_estimate\":%s,\"n_evals\":%ld,"
                    "\"n_terms\":%ld}\n",
                    fmt17(res.value).c_str(), fmt17(res.err_estimate).c_str(),
                    res.n_evals, res.n_terms);
    } else if (format == "csv") {
        std::printf("value,err_estimate,n_evals,n_terms\n%s,%s,%ld,%ld\n",
                    fmt17(res.value).c_str(), fmt17(res.err_estimate).c_str(),
                    res.n_evals, res.n_terms);
    } else {
        std::printf("%s\n", fmt17(res.value).c_str());
        std::fprintf(stderr, "# err_estimate=%s n_evals=%ld n_terms=%ld\n",
                     fmt17(res.err_estimate).c_str(), res.n_evals, res.n_terms);
    }
}

int cmd_eval(exthyp_ctx* ctx, const Args& args) {
    if (args.has_sweep) return usage("sweep is only valid with the table command");
    exthyp_result res{};
    std::string err;
    exthyp_status st = eval_point(ctx, args.target, args.kv, res, err);
    if (st != EXTHYP_OK) {
        if (err.empty()) err = exthyp_last_error(ctx);
        if (st == EXTHYP_ERR_INVALID_ARG) return usage(err);
        std::fprintf(stderr, "exthyp: %s error: %s\n", status_word(st), err.c_str());
        return exit_for(st);
    }
    print_eval(args.format, res);
    return 0;
}

int cmd_table(exthyp_ctx* ctx, const Args& args) {
    if (!args.has_sweep) return usage("table needs: sweep <var> <start>..<stop>");
    if (args.kv.count(args.sweep_var))
        return usage("swept key also given as fixed value: " + args.sweep_var);
    long steps = 0;
    std::map<std::string, std::string> fixed = args.kv;
    auto it = fixed.find("steps");
    if (it != fixed.end()) {
        if (!parse_long(it->second, steps) || steps < 0)
            return usage("bad steps value: " + it->second);
        fixed.erase(it);
    }

    // Probe the first row so key errors surface as usage problems up front.
    {
        std::map<std::string, std::string> probe = fixed;
        probe[args.sweep_var] = fmt17(args.sweep_start);
        exthyp_result res{};
        std::string err;
        exthyp_status st = eval_point(ctx, args.target, probe, res, err);
        if (st == EXTHYP_ERR_INVALID_ARG)
            return usage(err.empty() ? exthyp_last_error(ctx) : err);
    }

    const std::string var = args.sweep_var;
    if (args.format == "csv")
        std::printf("%s,value,err_estimate,status\n", var.c_str());
    else if (args.format == "text")
        std::printf("%-22s %-24s %-12s %s\n", var.c_str(), "value", "err_estimate",
                    "status");
    for (long i = 0; i <= steps; ++i) {
        double v = steps == 0 ? args.sweep_start
                              : args.sweep_start +
                                    (args.sweep_stop - args.sweep_start) *
                                        static_cast<double>(i) /
                                        static_cast<double>(steps);
        std::map<std::string, std::string> kv = fixed;
        kv[var] = fmt17(v);
        exthyp_result res{};
        std::string err;
        exthyp_status st = eval_point(ctx, args.target, kv, res, err);
        const bool ok = st == EXTHYP_OK;
        if (args.format == "json") {
            if (ok)
                std::printf("{\"%s\":%s,\"value\":%s,\"err_estimate\":%s,"
                            "\"status\":\"ok\"}\n",
                            var.c_str(), fmt17(v).c_str(), fmt17(res.value).c_str(),
                            fmt17(res.err_estimate).c_str());
            else
                std::printf("{\"%s\":%s,\"value\":null,\"err_estimate\":null,"
                            "\"status\":\"%s\"}\n",
                            var.c_str(), fmt17(v).c_str(), status_word(st));
        } else if (args.format == "csv") {
            if (ok)
                std::printf("%s,%s,%s,ok\n", fmt17(v).c_str(),
                            fmt17(res.value).c_str(), fmt17(res.err_estimate).c_str());
            else
                std::printf("%s,,,%s\n", fmt17(v).c_str(), status_word(st));
        } else {
            if (ok)
                std::printf("%-22s %-24s %-12s %s\n", fmt17(v).c_str(),
                            fmt17(res.value).c_str(), fmt17(res.err_estimate).c_str(),
                            "ok");
            else
                std::printf("%-22s %-24s %-12s %s\n", fmt17(v).c_str(), "-", "-",
                            status_word(st));
        }
    }
    return 0;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

int cmd_verify(exthyp_ctx* ctx, const Args& args) {
    if (args.has_sweep) return usage("sweep is only valid with the table command");
    double tol_override = 0.0;
    std::map<std::string, std::string> kv = args.kv;
    auto it = kv.find("tol");
    if (it != kv.end()) {
        if (!parse_double(it->second, tol_override) || tol_override <= 0)
            return usage("bad tol value: " + it->second);
        kv.erase(it);
    }
    if (!kv.empty()) return usage("unknown key: " + kv.begin()->first);
    const std::set<std::string> suites = {"all",  "gamma",  "pochhammer", "hyp",
                                          "reps", "genfun", "frac"};
    if (!suites.count(args.target)) return usage("unknown suite: " + args.target);

    exthyp_run* raw = nullptr;
    exthyp_status st = exthyp_run_suite(ctx, args.target.c_str(), tol_override, &raw);
    using RunPtr = std::unique_ptr<exthyp_run, decltype(&exthyp_run_destroy)>;
    RunPtr run(raw, exthyp_run_destroy);
    if (st != EXTHYP_OK) {
        std::fprintf(stderr, "exthyp: %s error: %s\n", status_word(st),
                     exthyp_last_error(ctx));
        return exit_for(st);
    }

    const long count = exthyp_run_count(run.get());
    if (args.format == "csv")
        std::printf("identity_id,lhs,rhs,abs_err,rel_err,tol,status,"
                    "series_terms,quad_evals\n");
    long passed = 0, failed = 0, skipped = 0;
    for (long i = 0; i < count; ++i) {
        const char* id = nullptr;
        const char* status = nullptr;
        double lhs, rhs, abs_err, rel_err, tol;
        long terms, evals;
        exthyp_run_report(run.get(), i, &id, &lhs, &rhs, &abs_err, &rel_err, &tol,
                          &status, &terms, &evals);
        if (std::strcmp(status, "PASS") == 0) ++passed;
        else if (std::strcmp(status, "FAIL") == 0) ++failed;
        else ++skipped;
        if (args.format == "json") {
            std::printf("{\"identity_id\":\"%s\",\"lhs\":%s,\"rhs\":%s,"
                        "\"abs_err\":%s,\"rel_err\":%s,\"tol\":%s,"
                        "\"status\":\"%s\",\"series_terms\":%ld,"
                        "\"quad_evals\":%ld}\n",
                        id, fmt17(lhs).c_str(), fmt17(rhs).c_str(),
                        fmt17(abs_err).c_str(), fmt17(rel_err).c_str(),
                        fmt17(tol).c_str(), status, terms, evals);
        } else if (args.format == "csv") {
            std::printf("%s,%s,%s,%s,%s,%s,%s,%ld,%ld\n", csv_quote(id).c_str(),
                        fmt17(lhs).c_str(), fmt17(rhs).c_str(),
                        fmt17(abs_err).c_str(), fmt17(rel_err).c_str(),
                        fmt17(tol).c_str(), status, terms, evals);
        } else {
            std::printf("%-7s %-58s rel_err=%-12.3g tol=%-8.1g\n", status, id,
                        rel_err, tol);
        }
    }
    if (args.format == "text")
        std::printf("passed %ld failed %ld skipped %ld\n", passed, failed, skipped);
    else
        std::fprintf(stderr, "passed %ld failed %ld skipped %ld\n", passed, failed,
                     skipped);
    return failed > 0 ? 4 : 0;
}

} // namespace

int main(int argc, char** argv) {
    Args args;
    std::string err = parse_args(argc, argv, args);
    if (!err.empty()) return usage(err);
    if (args.command != "eval" && args.command != "table" && args.command != "verify")
        return usage("unknown command: " + args.command);
    if (args.target.empty())
        return usage(args.command == "verify" ? "missing suite name"
                                              : "missing function name");

    using CtxPtr = std::unique_ptr<exthyp_ctx, decltype(&exthyp_ctx_destroy)>;
    CtxPtr ctx(exthyp_ctx_create(), exthyp_ctx_destroy);
    if (!ctx) {
        std::fprintf(stderr, "exthyp: could not allocate context\n");
        return 3;
    }
    if (args.rel_tol > 0 || args.abs_tol > 0 || args.max_subdiv > 0) {
        double rel = args.rel_tol > 0 ? args.rel_tol : 1e-12;
        double abs = args.abs_tol > 0 ? args.abs_tol : 1e-14;
        long subdiv = args.max_subdiv > 0 ? args.max_subdiv : 2000;
        if (exthyp_ctx_set_quad(ctx.get(), rel, abs, subdiv) != EXTHYP_OK)
            return usage(exthyp_last_error(ctx.get()));
    }
    if (args.rel_tol > 0 || args.max_terms > 0) {
        double rel = args.rel_tol > 0 ? args.rel_tol : 1e-12;
        long terms = args.max_terms > 0 ? args.max_terms : 10000;
        if (exthyp_ctx_set_series(ctx.get(), rel, terms) != EXTHYP_OK)
            return usage(exthyp_last_error(ctx.get()));
    }

    if (args.command == "eval") return cmd_eval(ctx.get(), args);
    if (args.command == "table") return cmd_table(ctx.get(), args);
    return cmd_verify(ctx.get(), args);
}
