#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lsym/errors.hpp"
#include "lsym/induction.hpp"
#include "pool.hpp"

namespace lsym::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int resolve_jobs(const RunOptions& opt) { return opt.jobs > 0 ? opt.jobs : default_jobs(); }

void require_limit(bool within, const RunOptions& opt, const std::string& what) {
    if (!within && !opt.force) throw ValidationError(what + " exceeds the documented limit; pass --force to run it anyway");
}

std::string real_string(const Real& x) {
    std::ostringstream os;
    os << std::setprecision(25) << x;
    return os.str();
}

double real_double(const Real& x) { return x.convert_to<double>(); }

template <class Item>
int run_sweep(const RunOptions& opt, const std::string& command, const std::vector<Item>& items,
              const std::function<json(const Item&)>& one, std::ostream& os) {
    auto t0 = Clock::now();
    ReportSink sink(os, command, opt.summary);
    run_ordered<json>(items.size(), resolve_jobs(opt), [&](std::size_t i) { return one(items[i]); },
                      [&](std::size_t, json&& rec) { sink.emit(rec); });
    return sink.finish(ms_since(t0));
}

std::pair<int, int> line_and_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

}  // namespace

int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---- report sink ----

ReportSink::ReportSink(std::ostream& os, std::string command, bool summary_only)
    : os_(os), command_(std::move(command)), summary_only_(summary_only) {}

void ReportSink::emit(const json& record) {
    ++cases_;
    if (!record.value("equal", false)) failures_.push_back(record.value("case", std::string("?")));
    if (!summary_only_) os_ << record.dump() << '\n';
}

json ReportSink::summary(double elapsed_ms) const {
    return json{{"summary", true},
                {"command", command_},
                {"cases", cases_},
                {"passed", cases_ - failures_.size()},
                {"failed", failures_.size()},
                {"failures", failures_},
                {"equal", failures_.empty()},
                {"elapsed_ms", elapsed_ms}};
}

int ReportSink::finish(double elapsed_ms) {
    os_ << summary(elapsed_ms).dump() << '\n';
    os_.flush();
    return failures_.empty() ? kPass : kMismatch;
}

// ---- JSON forms ----

json to_json(const VerificationReport& r) {
    json checks = json::object();
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    return json{{"case", r.case_id}, {"lhs", r.lhs},       {"rhs", r.rhs},         {"degree", r.degree},
                {"checks", checks},  {"equal", r.equal}, {"elapsed_ms", r.elapsed_ms}};
}

json to_json(const NumericReport& r) {
    return json{{"case", r.case_id},
                {"lhs", real_string(r.lhs)},
                {"rhs", real_string(r.rhs)},
                {"abs_err", real_double(r.abs_err)},
                {"tol", real_double(r.tol)},
                {"error_bound", real_double(r.error_bound)},
                {"equal", r.equal},
                {"elapsed_ms", r.elapsed_ms}};
}

json to_json(const Derivation& d, bool with_steps, double elapsed_ms) {
    const DeriveParams& p = d.params;
    std::string id = "derive:" + to_string(d.goal) + ":n=" + std::to_string(p.n) + ",m=" + std::to_string(p.m) +
                     ",l=" + std::to_string(p.l) + ",d=" + std::to_string(p.d);
    json params{{"n", p.n}, {"m", p.m}, {"l", p.l}, {"d", p.d}};
    if (!p.shape.empty()) {
        params["shape"] = p.shape;
        id += ",shape=" + join_ints(p.shape);
    }
    if (p.cycle) {
        params["cycle"] = p.cycle->s;
        id += ",cycle=" + join_ints(p.cycle->s);
    }
    json checks = json::object();
    for (const auto& c : d.checks) checks[c.name] = c.ok;
    json out{{"case", id},
             {"goal", to_string(d.goal)},
             {"params", params},
             {"exponent", d.exponent},
             {"expected", d.expected},
             {"residual", d.residual.to_string()},
             {"expected_residual", d.expected_residual.to_string()},
             {"tag", d.tag.to_string()},
             {"assumptions", d.assumptions},
             {"checks", checks},
             {"step_count", d.step_count()}};
    if (with_steps) {
        json steps = json::array();
        for (const auto& [name, trace] : d.traces)
            for (const auto& s : trace.steps)
                steps.push_back(json{{"trace", name},
                                     {"rule", s.rule},
                                     {"tag", s.tag.to_string()},
                                     {"matched", s.matched.to_string()},
                                     {"replacement", s.replacement.to_string()}});
        out["steps"] = steps;
    }
    out["equal"] = d.ok();
    out["elapsed_ms"] = elapsed_ms;
    return out;
}

// ---- weight files ----

namespace {

int get_int(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw ValidationError(where + "." + key + ": expected an integer");
    return v.get<int>();
}

BigRational get_rational(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) return BigRational(0);
    const auto& v = obj.at(key);
    if (v.is_number_integer()) return BigRational(v.get<long long>());
    if (!v.is_string()) throw ValidationError(where + "." + key + ": expected a rational string such as \"1/2\"");
    try {
        return BigRational::parse(v.get<std::string>());
    } catch (const ValidationError& e) {
        throw ValidationError(where + "." + key + ": " + e.what());
    }
}

std::vector<std::vector<int>> get_matrix(const json& v, const std::string& where) {
    if (!v.is_array()) throw ValidationError(where + ": expected an array of integer arrays");
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& row = v[i];
        std::string here = where + "[" + std::to_string(i) + "]";
        if (!row.is_array()) throw ValidationError(here + ": expected an array of integers");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw ValidationError(here + ": expected integers");
            r.push_back(x.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

HighestWeight get_weight(const json& obj, const std::string& key, const std::string& bar_key, int rank, int degree,
                         const std::string& where) {
    auto mu = get_matrix(obj.at(key), where + "." + key);
    if (static_cast<int>(mu.size()) != degree)
        throw ValidationError(where + "." + key + ": expected " + std::to_string(degree) + " places, got " +
                              std::to_string(mu.size()));
    for (std::size_t v = 0; v < mu.size(); ++v)
        if (static_cast<int>(mu[v].size()) != rank)
            throw ValidationError(where + "." + key + "[" + std::to_string(v) + "]: expected " + std::to_string(rank) +
                                  " entries, got " + std::to_string(mu[v].size()));
    HighestWeight w = HighestWeight::conjugate_self_dual(mu);
    if (obj.contains(bar_key)) {
        auto bar = get_matrix(obj.at(bar_key), where + "." + bar_key);
        if (bar.size() != mu.size()) throw ValidationError(where + "." + bar_key + ": place count differs from " + key);
        for (std::size_t v = 0; v < bar.size(); ++v) w.places[v].mu_bar = bar[v];
    }
    try {
        w.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(where + "." + key + ": " + e.what());
    }
    return w;
}

WeightInput parse_one(const json& obj, const std::string& where) {
    if (!obj.is_object()) throw ValidationError(where + ": expected an object");
    static const std::vector<std::string> known = {"label", "n", "d", "mu", "mu_bar", "r", "mu_prime", "mu_prime_bar", "s"};
    for (const auto& [key, value] : obj.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ValidationError(where + ": unknown field '" + key + "'");
    for (const char* key : {"n", "d", "mu"})
        if (!obj.contains(key)) throw ValidationError(where + ": missing field '" + std::string(key) + "'");
    WeightInput w;
    w.label = where;
    if (obj.contains("label")) {
        if (!obj["label"].is_string()) throw ValidationError(where + ".label: expected a string");
        w.label = obj["label"].get<std::string>();
    }
    int n = get_int(obj, "n", where);
    int d = get_int(obj, "d", where);
    if (n < 1) throw ValidationError(where + ".n: must be at least 1");
    if (d < 1) throw ValidationError(where + ".d: must be at least 1");
    w.mu = get_weight(obj, "mu", "mu_bar", n, d, where);
    w.r = get_rational(obj, "r", where);
    if (obj.contains("mu_prime")) {
        if (n < 2) throw ValidationError(where + ".mu_prime: needs n >= 2");
        w.mu_prime = get_weight(obj, "mu_prime", "mu_prime_bar", n - 1, d, where);
    } else if (obj.contains("mu_prime_bar") || obj.contains("s")) {
        throw ValidationError(where + ": 's' and 'mu_prime_bar' need 'mu_prime'");
    }
    w.s = get_rational(obj, "s", where);
    return w;
}

}  // namespace

std::vector<WeightInput> parse_weights(const std::string& text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string what = e.what();
        auto cut = what.find("syntax error");
        throw ValidationError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                              (cut == std::string::npos ? what : what.substr(cut)));
    }
    std::vector<WeightInput> out;
    if (doc.is_array()) {
        if (doc.empty()) throw ValidationError(source + ": empty weight list");
        for (std::size_t i = 0; i < doc.size(); ++i)
            out.push_back(parse_one(doc[i], source + ": weight[" + std::to_string(i) + "]"));
    } else {
        out.push_back(parse_one(doc, source + ": weight"));
    }
    // Labels default to the position in the file, without the file name, so reports do not depend on paths.
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::string prefix = source + ": ";
        if (out[i].label.rfind(prefix, 0) == 0) out[i].label = out[i].label.substr(prefix.size());
    }
    return out;
}

json crit_report(const WeightInput& w) {
    auto t0 = Clock::now();
    InfinityType a = infinity_type(w.mu, w.r);
    json checks = json::object();
    json out{{"case", w.label},
             {"n", w.mu.rank()},
             {"d", w.mu.degree()},
             {"r", w.r.to_string()},
             {"infinity_type", a.to_string()},
             {"regular", a.regular()},
             {"conjugate_self_dual", a.conjugate_self_dual()},
             {"sufficiently_regular", sufficiently_regular(w.mu)}};

    if (a.rank() >= 2 && a.regular() && a.conjugate_self_dual()) {
        CriticalSet same = crit_asai(a, AsaiSign::Same);
        CriticalSet opposite = crit_asai(a, AsaiSign::Opposite);
        const BigRational zero(0), one(1);
        checks["asai_same_contains_0_1"] = same.contains(zero) && same.contains(one);
        checks["asai_opposite_avoids_0_1"] = !opposite.contains(zero) && !opposite.contains(one);
        out["asai"] = json{{"same", same.to_string()}, {"opposite", opposite.to_string()}};
    } else {
        out["asai"] = nullptr;
        out["asai_note"] = a.rank() < 2      ? "rank below 2"
                           : !a.regular()    ? "infinity-type is not regular"
                                             : "infinity-type is not conjugate self-dual";
    }

    if (w.mu_prime) {
        InfinityType b = infinity_type(*w.mu_prime, w.s);
        CriticalSet crit = crit_rankin_selberg(a, b, w.r, w.s);
        bool piano = piano_check(w.mu, *w.mu_prime);
        bool nmc = no_middle_class(a, b, w.r, w.s);
        bool central = crit.contains(BigRational(1, 2));
        checks["piano_implies_no_middle_class"] = !piano || nmc;
        if (w.r.is_zero() && w.s.is_zero() && piano) checks["central_point_critical"] = central;
        out["rankin_selberg"] = json{{"s", w.s.to_string()},
                                     {"infinity_type_prime", b.to_string()},
                                     {"critical", crit.to_string()},
                                     {"central_critical", central},
                                     {"piano", piano},
                                     {"no_middle_class", nmc}};
    } else {
        out["rankin_selberg"] = nullptr;
    }

    bool ok = true;
    for (const auto& [name, v] : checks.items()) ok = ok && v.get<bool>();
    out["checks"] = checks;
    out["equal"] = ok;
    out["elapsed_ms"] = ms_since(t0);
    return out;
}

// ---- commands ----

int cmd_verify_lemma32(const RunOptions& opt, int max_n, std::ostream& os) {
    if (max_n < 2) throw ValidationError("--max-n must be at least 2");
    require_limit(max_n <= Limits::lemma32_max_n, opt, "--max-n " + std::to_string(max_n));
    std::vector<std::pair<std::vector<int>, PlaceKind>> items;
    for (int n = 2; n <= max_n; ++n)
        for (const auto& parts : compositions(n))
            for (PlaceKind k : {PlaceKind::Split, PlaceKind::Inert}) items.emplace_back(parts, k);
    return run_sweep<std::pair<std::vector<int>, PlaceKind>>(
        opt, "verify-lemma32", items, [](const auto& it) { return to_json(verify_lemma32(it.first, it.second)); }, os);
}

int cmd_verify_prop34(const RunOptions& opt, int max_n, std::ostream& os) {
    if (max_n < 2) throw ValidationError("--max-n must be at least 2");
    require_limit(max_n <= Limits::prop34_max_n, opt, "--max-n " + std::to_string(max_n));
    return run_sweep<InducedDatum>(
        opt, "verify-prop34", induced_grid(max_n), [](const InducedDatum& d) { return to_json(verify_prop34(d)); }, os);
}

int cmd_crit(const RunOptions& opt, const std::string& input_path, std::ostream& os) {
    std::string text;
    if (input_path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(input_path, std::ios::binary);
        if (!in) throw ValidationError("cannot read weight file '" + input_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    auto weights = parse_weights(text, input_path == "-" ? "<stdin>" : input_path);
    // Validate everything before emitting so a bad entry never leaves a partial stream.
    for (const auto& w : weights) {
        InfinityType a = infinity_type(w.mu, w.r);
        if (w.mu_prime) {
            InfinityType b = infinity_type(*w.mu_prime, w.s);
            crit_rankin_selberg(a, b, w.r, w.s);
        }
    }
    return run_sweep<WeightInput>(opt, "crit", weights, [](const WeightInput& w) { return crit_report(w); }, os);
}

int cmd_derive(const RunOptions& opt, const DeriveRequest& req, std::ostream& os) {
    const DeriveParams& p = req.params;
    require_limit(p.n <= Limits::derive_max_n, opt, "--n " + std::to_string(p.n));
    require_limit(p.d <= Limits::derive_max_d, opt, "--d " + std::to_string(p.d));
    require_limit(std::abs(p.m) <= Limits::derive_max_shift && std::abs(p.l) <= Limits::derive_max_shift, opt,
                  "--m/--l");

    std::vector<std::pair<Goal, DeriveParams>> items;
    if (!req.sweep) {
        if (req.goal == "all") throw ValidationError("--goal all needs --sweep");
        Goal g = goal_from_string(req.goal);
        p.validate(g);
        items.emplace_back(g, p);
    } else {
        if (p.cycle || !p.shape.empty()) throw ValidationError("--sweep does not take --cycle or --shape");
        if (p.n < 2) throw ValidationError("--n must be at least 2 with --sweep");
        std::vector<Goal> goals = req.goal == "all" ? all_goals() : std::vector<Goal>{goal_from_string(req.goal)};
        for (Goal g : goals)
            for (int n = 2; n <= p.n; ++n)
                for (int d = 1; d <= p.d; ++d) {
                    auto push = [&](int m, int l, std::vector<int> shape) {
                        DeriveParams q;
                        q.n = n;
                        q.d = d;
                        q.m = m;
                        q.l = l;
                        q.shape = std::move(shape);
                        items.emplace_back(g, q);
                    };
                    bool uses_m = g != Goal::AsaiInduced && g != Goal::ThmB && g != Goal::Delta;
                    if (g == Goal::ThmB) {
                        for (auto& shape : compositions(n)) push(0, 0, shape);
                    } else if (!uses_m) {
                        push(0, 0, {});
                    } else {
                        for (int m = -2; m <= 3; ++m) {
                            if (g == Goal::ThmE)
                                for (int l = -2; l <= 3; ++l) push(m, l, {});
                            else
                                push(m, 0, {});
                        }
                    }
                }
    }
    bool with_steps = req.with_steps && !req.sweep;
    using Item = std::pair<Goal, DeriveParams>;
    return run_sweep<Item>(
        opt, "derive", items,
        [with_steps](const Item& it) {
            auto t0 = Clock::now();
            Derivation d = derive(it.first, it.second);
            return to_json(d, with_steps, ms_since(t0));
        },
        os);
}

int cmd_gauss(const RunOptions& opt, const GaussRequest& req, std::ostream& os) {
    auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v) throw ValidationError(std::string("--mode ") + req.mode + " needs " + flag + " (or --sweep)");
        return *v;
    };
    if (req.tol && !(*req.tol > 0)) throw ValidationError("--tol must be positive");
    std::vector<std::function<NumericReport()>> items;

    if (req.mode == "quadratic") {
        Real tol = req.tol ? Real(*req.tol) : Real("1e-9");
        std::vector<int> ds;
        if (req.sweep) {
            for (int d = -1; d >= -200; --d)
                if (is_fundamental_discriminant(d)) ds.push_back(d);
        } else {
            ds.push_back(need(req.discriminant, "--D"));
        }
        for (int d : ds) items.push_back([d, tol] { return verify_quadratic_gauss(d, tol); });
    } else if (req.mode == "classnumber") {
        Real tol = req.tol ? Real(*req.tol) : Real("1e-6");
        struct Row {
            int d, h, w;
        };
        std::vector<Row> rows;
        if (req.sweep) {
            rows = {{-3, 1, 6}, {-4, 1, 4}, {-7, 1, 2}, {-8, 1, 2}, {-11, 1, 2}, {-23, 3, 2}};
        } else {
            rows.push_back({need(req.discriminant, "--D"), need(req.class_number, "--h"), need(req.units, "--w")});
        }
        for (const Row& r : rows) items.push_back([r, tol] { return class_number_check(r.d, r.h, r.w, tol); });
    } else if (req.mode == "modulus") {
        Real tol = req.tol ? Real(*req.tol) : Real("1e-9");
        std::vector<int> moduli;
        if (req.sweep) {
            for (int n = 1; n <= 50; ++n) moduli.push_back(n);
        } else {
            int n = need(req.modulus, "--N");
            if (n < 1) throw ValidationError("--N must be positive");
            require_limit(n <= Limits::gauss_max_modulus, opt, "--N " + std::to_string(n));
            moduli.push_back(n);
        }
        for (int n : moduli)
            for (const auto& chi : DirichletChar::all(n))
                if (chi.is_primitive()) items.push_back([chi, tol] { return verify_gauss_norm(chi, tol); });
    } else {
        throw ValidationError("unknown --mode '" + req.mode + "' (expected quadratic, classnumber or modulus)");
    }
    // Surface validation errors before any output.
    if (!req.sweep && req.mode != "modulus") items.front()();

    using Item = std::function<NumericReport()>;
    return run_sweep<Item>(
        opt, "gauss", items,
        [&req](const Item& f) {
            json rec = to_json(f());
            rec["mode"] = req.mode;
            return rec;
        },
        os);
}

// ---- command line ----

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of local L-factor identities, critical sets and period exponents", "lsym"};
    app.require_subcommand(1);
    app.fallthrough();

    RunOptions opt;
    std::string out_path;
    app.add_option("--out", out_path, "Write the report stream to this file instead of stdout");
    app.add_option("--jobs", opt.jobs, "Worker threads (default: logical cores)")->check(CLI::Range(1, 1024));
    app.add_flag("--summary", opt.summary, "Emit only the aggregated summary object");
    app.add_flag("--force", opt.force, "Allow parameters beyond the documented limits");

    int lemma_max_n = 5;
    auto* lemma = app.add_subcommand("verify-lemma32", "Twisted tensor factor of isobaric sums, all compositions");
    lemma->add_option("--max-n", lemma_max_n, "Largest rank (at least 2)")->capture_default_str();

    int prop_max_n = 6;
    auto* prop = app.add_subcommand("verify-prop34", "Twisted tensor factor of induced representations");
    prop->add_option("--max-n", prop_max_n, "Largest degree (at least 2)")->capture_default_str();

    std::string crit_input;
    auto* crit = app.add_subcommand("crit", "Critical sets from a weight file ('-' reads stdin)");
    crit->add_option("input", crit_input, "Weight JSON file")->required();

    DeriveRequest dreq;
    std::string shape_text, cycle_text;
    auto* der = app.add_subcommand("derive", "Power of 2 pi i in a special-value formula, with its rewrite trace");
    der->add_option("--goal", dreq.goal, "asai-induced, rs-induced, arch-asai, arch-rs, ThmA, ThmB, ThmC, ThmE, Delta")
        ->required();
    der->add_option("--n", dreq.params.n, "Rank (the largest rank with --sweep)")->capture_default_str();
    der->add_option("--d", dreq.params.d, "Degree of the totally real field (the largest with --sweep)")
        ->capture_default_str();
    der->add_option("--m", dreq.params.m, "Point 1/2 + m")->capture_default_str();
    der->add_option("--l", dreq.params.l, "Second point 1/2 + l")->capture_default_str();
    der->add_option("--shape", shape_text, "Isobaric shape, comma separated (ThmB)");
    der->add_option("--cycle", cycle_text, "Images of 1..n under the Galois generator, comma separated (asai-induced)");
    der->add_flag("--sweep", dreq.sweep, "Run the grid n in [2, --n], d in [1, --d], m and l in [-2, 3]");
    bool no_steps = false;
    der->add_flag("--no-steps", no_steps, "Omit the rewrite steps from the report");

    GaussRequest greq;
    auto* gauss = app.add_subcommand("gauss", "Numeric Gauss-sum and class-number checks");
    gauss->set_help_flag("--help", "Print this help message and exit");
    gauss->add_option("--mode", greq.mode, "quadratic, classnumber or modulus")->capture_default_str();
    gauss->add_option("--D", greq.discriminant, "Negative fundamental discriminant");
    gauss->add_option("--h", greq.class_number, "Class number");
    gauss->add_option("--w", greq.units, "Number of roots of unity");
    gauss->add_option("--N", greq.modulus, "Modulus (all primitive characters)");
    gauss->add_option("--tol", greq.tol, "Absolute tolerance override");
    gauss->add_flag("--sweep", greq.sweep, "Run the full grid for the mode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kPass;
        }
        err << "lsym: " << e.what() << "\n";
        return kUsage;
    }

    auto parse_list = [](const std::string& text, const char* flag) {
        std::vector<int> v;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                int x = std::stoi(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                v.push_back(x);
            } catch (const std::exception&) {
                throw ValidationError(std::string(flag) + ": '" + item + "' is not an integer");
            }
        }
        if (v.empty()) throw ValidationError(std::string(flag) + ": empty list");
        return v;
    };

    try {
        std::ofstream file;
        std::ostream* os = &out;
        if (!out_path.empty()) {
            file.open(out_path, std::ios::binary | std::ios::trunc);
            if (!file) throw ValidationError("cannot open '" + out_path + "' for writing");
            os = &file;
        }
        if (*lemma) return cmd_verify_lemma32(opt, lemma_max_n, *os);
        if (*prop) return cmd_verify_prop34(opt, prop_max_n, *os);
        if (*crit) return cmd_crit(opt, crit_input, *os);
        if (*der) {
            if (!shape_text.empty()) dreq.params.shape = parse_list(shape_text, "--shape");
            if (!cycle_text.empty()) {
                CycleDatum c;
                c.s = parse_list(cycle_text, "--cycle");
                c.n = static_cast<int>(c.s.size());
                dreq.params.cycle = c;
            }
            dreq.with_steps = !no_steps;
            return cmd_derive(opt, dreq, *os);
        }
        if (*gauss) return cmd_gauss(opt, greq, *os);
    } catch (const ValidationError& e) {
        err << "lsym: " << e.what() << "\n";
        return kUsage;
    } catch (const MathError& e) {
        err << "lsym: " << e.what() << "\n";
        return kMismatch;
    } catch (const std::exception& e) {
        err << "lsym: internal error: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}

}  // namespace lsym::cli
