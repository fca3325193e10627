#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hca::cli {

// Shared options. order/window of 0 mean "derive from the curve degree"
// (4n+8 and max(3n, 3n+2n) respectively).
struct RunConfig {
    std::string curve = "t^6 - 2*b*t^3 + 1";
    std::string algebra = "sl2";
    long order = 0;
    long window = 0;
    long trials = 200;
    std::uint64_t seed = 0;
    std::string format = "text";  // text | json | csv
    std::string out;              // output path; empty prints to stdout
    bool both_routes = false;
    std::string at;               // instantiation point "b=2,c=1/3"
};

// All commands return a process exit code: 0 success, 1 verification
// failure, 2 usage error (bad input reported on err).

int cmd_basis(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_series(const RunConfig& cfg, const std::string& family, long i, std::ostream& out,
               std::ostream& err);
int cmd_bracket(const RunConfig& cfg, const std::string& left, const std::string& right,
                std::ostream& out, std::ostream& err);
// Reduces a monomial 1-form ("t^3*u dt") or, when `second` is nonempty, the
// class of f dg for two ring elements. use_oracle switches to the
// elimination route at the --at instantiation point.
int cmd_reduce(const RunConfig& cfg, const std::string& form_or_f, const std::string& second,
               bool use_oracle, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& cfg, long lo, long hi, const std::string& parity,
              std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out,
               std::ostream& err);
int cmd_examples(const RunConfig& cfg, const std::string& which, std::ostream& out,
                 std::ostream& err);

}  // namespace hca::cli
