#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lsym/derive.hpp"
#include "lsym/gauss.hpp"
#include "lsym/satake.hpp"
#include "lsym/weights.hpp"

namespace lsym::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2 };

struct RunOptions {
    int jobs = 0;  // 0 picks the number of logical cores
    bool summary = false;
    bool force = false;
};

// Documented sweep limits; larger values need --force.
struct Limits {
    static constexpr int lemma32_max_n = 7;
    static constexpr int prop34_max_n = 10;
    static constexpr int derive_max_n = 12;
    static constexpr int derive_max_d = 4;
    static constexpr int derive_max_shift = 10;
    static constexpr int gauss_max_modulus = 200;
};

// Collects per-case records, writes them as NDJSON (or only the summary), and decides the exit code.
class ReportSink {
public:
    ReportSink(std::ostream& os, std::string command, bool summary_only);

    void emit(const nlohmann::json& record);  // expects "case" and "equal"
    nlohmann::json summary(double elapsed_ms) const;
    int finish(double elapsed_ms);

    std::size_t cases() const { return cases_; }
    std::size_t failed() const { return failures_.size(); }

private:
    std::ostream& os_;
    std::string command_;
    bool summary_only_;
    std::size_t cases_ = 0;
    std::vector<std::string> failures_;
};

// JSON forms of the library reports.
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const NumericReport& r);
nlohmann::json to_json(const Derivation& d, bool with_steps, double elapsed_ms);

// One entry of a weight file.
struct WeightInput {
    std::string label;
    HighestWeight mu;
    BigRational r;
    std::optional<HighestWeight> mu_prime;
    BigRational s;
};

// Parses a weight document (one object or an array of objects). `source` names the input in messages.
// Throws ValidationError with line and column context on malformed text.
std::vector<WeightInput> parse_weights(const std::string& text, const std::string& source);
nlohmann::json crit_report(const WeightInput& w);

struct DeriveRequest {
    std::string goal = "ThmA";  // or "all" together with sweep
    DeriveParams params;
    bool sweep = false;
    bool with_steps = true;
};

struct GaussRequest {
    std::string mode = "quadratic";  // quadratic, classnumber, modulus
    std::optional<int> discriminant;
    std::optional<int> class_number;
    std::optional<int> units;
    std::optional<int> modulus;
    bool sweep = false;
    std::optional<double> tol;
};

int cmd_verify_lemma32(const RunOptions& opt, int max_n, std::ostream& os);
int cmd_verify_prop34(const RunOptions& opt, int max_n, std::ostream& os);
int cmd_crit(const RunOptions& opt, const std::string& input_path, std::ostream& os);
int cmd_derive(const RunOptions& opt, const DeriveRequest& req, std::ostream& os);
int cmd_gauss(const RunOptions& opt, const GaussRequest& req, std::ostream& os);

// Full command line, as used by the executable. Errors go to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lsym::cli
