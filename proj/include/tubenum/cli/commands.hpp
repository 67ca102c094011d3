#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace tubenum {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct CommonFlags {
  bool json = false;
  std::string out;  // output path or prefix; empty means stdout only
  std::optional<std::uint64_t> seed;
  std::string eps;  // rational or decimal literal
};

struct DeriveArgs {
  std::string name;
  std::string alpha = "1";
  std::string beta = "65/28";
  std::string alpha_low;  // beta-window interval; empty means alpha*
  std::string alpha_high = "1";
};

struct SimArgs {
  std::string config_path;
  bool scale = false;
};

struct NetArgs {
  int dim = 3;
  int N = 16;
  double budget = 32;
  bool list = false;
};

struct FitArgs {
  std::string csv_path;
  int dim = 4;
};

struct VerifyArgs {
  std::string only;
};

int cmd_derive(const DeriveArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err);
int cmd_sim(const SimArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err);
int cmd_net(const NetArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err);
int cmd_fit(const FitArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace tubenum
