#pragma once

#include "fol/classify.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fol::cli {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kRejected = 2 };

struct CommandResult {
    int exit_code = kOk;
    nlohmann::json payload = nlohmann::json::object();
    std::vector<DiscrepancyFlag> flags;
    std::string text;  // aligned human-readable rendering
    double elapsed = 0;

    bool ok() const { return exit_code == kOk; }
    // {"status", "payload", "flags", "elapsed"}
    nlohmann::json to_json() const;
};

// Times the command; library errors become status "error" with exit code 2.
CommandResult run(const std::function<CommandResult()>& body);

// Left-aligned columns separated by two spaces.
class Table {
public:
    void row(std::vector<std::string> cells);
    std::string str() const;

private:
    std::vector<std::vector<std::string>> rows_;
};

CommandResult cmd_classify(int d, long c2N, bool reduced);
// b is replaced by a random projective 1-form of coefficient degree *sample when given.
CommandResult cmd_wedge(const std::string& a, const std::optional<std::string>& b, bool invariants, bool rao,
                        std::optional<int> sample, std::uint64_t seed);
CommandResult cmd_verify(const std::string& suite, std::uint64_t seed);
CommandResult cmd_hilbert(const std::string& ideal_text);
CommandResult cmd_rao(const std::string& ideal_text);
// row: comma separated polynomials; weights: comma separated integers.
CommandResult cmd_syzygy(const std::string& row, const std::string& weights, int degree);
CommandResult cmd_chi(int rank, long c1, long c2, long c3, long twist);
// kind: line:a[,b...] | cotangent | null-correlation | instanton:n[:h0]; range: lo..hi
CommandResult cmd_cohomology(const std::string& kind, const std::string& range);
CommandResult cmd_monad(const std::string& spec_text, bool regularity);
// kind: legendrian | nc
CommandResult cmd_moduli(const std::string& kind, long n);
CommandResult cmd_invariants(int d, long c2N);

std::string read_file(const std::string& path);

}  // namespace fol::cli
