#include "geoarith/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "geoarith/convergence.hpp"
#include "geoarith/divisor_arith.hpp"
#include "geoarith/errors.hpp"
#include "geoarith/seq_transforms.hpp"
#include "geoarith/text_io.hpp"

namespace geoarith::cli {
namespace {

/// Usage-level failure: reported on the error stream, exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string command;
  std::string input = "-";
  std::string rhs;
  std::string output = "-";
  Repr repr = Repr::exponent;
  CheckMode mode = CheckMode::exact;
  std::optional<double> epsilon;
  double tau = Tolerance::kDefaultTau;
  std::optional<Index> n;
  std::optional<Index> size;
  std::vector<Index> chain;
  bool sums = false;
  std::optional<Index> witness_cap;
};

class Streams {
 public:
  Streams(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  template <typename Parse>
  auto read(const std::string& path, Parse parse) {
    if (path == "-") {
      if (stdin_used_) throw UsageError("standard input can feed only one operand");
      stdin_used_ = true;
      return parse(in_);
    }
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open input file '" + path + "'");
    return parse(file);
  }

  void write(const std::string& path, const std::string& text) {
    if (path == "-") {
      out_ << text;
      return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot open output file '" + path + "'");
    file << text;
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

Index require_flag(const std::optional<Index>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required flag ") + flag);
  return *value;
}

CheckOptions check_options(const Config& cfg) {
  CheckOptions opts;
  opts.mode = cfg.mode;
  opts.tol = Tolerance(cfg.tau);
  opts.witness_cap = cfg.witness_cap;
  if (cfg.mode == CheckMode::epsilon) {
    if (!cfg.epsilon) throw UsageError("--mode epsilon requires --epsilon");
    if (!(*cfg.epsilon > 0.0)) throw UsageError("--epsilon must be > 0 (exponent units)");
    opts.epsilon = GReal::from_exponent(*cfg.epsilon);
  } else if (cfg.epsilon) {
    throw UsageError("--epsilon is only valid with --mode epsilon");
  }
  return opts;
}

int dispatch(const Config& cfg, Streams& io) {
  const auto read_seq = [&](const std::string& path) {
    return io.read(path, [&](std::istream& s) { return parse_gseq(s, cfg.repr); });
  };
  const auto read_matrix = [&](const std::string& path) {
    return io.read(path, [&](std::istream& s) { return parse_matrix(s, cfg.repr); });
  };
  const auto second_operand = [&]() {
    if (cfg.rhs.empty()) throw UsageError(cfg.command + " requires --rhs");
    return cfg.rhs;
  };
  const auto emit_seq = [&](const GSeq& f) {
    std::ostringstream s;
    write_gseq(s, f, cfg.repr);
    io.write(cfg.output, s.str());
    return kExitOk;
  };
  const auto emit_matrix = [&](const DivisorMatrix& a) {
    std::ostringstream s;
    write_matrix(s, a, cfg.repr);
    io.write(cfg.output, s.str());
    return kExitOk;
  };
  const auto emit_report = [&](const MembershipReport& r) {
    io.write(cfg.output, format_report(r) + "\n");
    return r.consistent() ? kExitOk : kExitRefuted;
  };

  const std::string& c = cfg.command;
  if (c == "wsum") return emit_seq(w_transform(read_seq(cfg.input)));
  if (c == "minvert") return emit_seq(m_transform(read_seq(cfg.input)));
  if (c == "convolve") {
    const GSeq f = read_seq(cfg.input);
    const GSeq g = read_seq(second_operand());
    return emit_seq(dirichlet_convolve(f, g));
  }
  if (c == "qtrans") return emit_seq(q_transform(read_seq(cfg.input), require_flag(cfg.n, "--n")));
  if (c == "rtrans") return emit_seq(r_transform(read_seq(cfg.input), require_flag(cfg.n, "--n")));
  if (c == "mobius") {
    return emit_seq(GSeq::tabulate(mobius_fn(), require_flag(cfg.size, "--size")));
  }
  if (c == "emit-w") return emit_matrix(emit_w_matrix(require_flag(cfg.size, "--size")));
  if (c == "emit-m") return emit_matrix(emit_m_matrix(require_flag(cfg.size, "--size")));
  if (c == "matmul") {
    const DivisorMatrix a = read_matrix(cfg.input);
    const DivisorMatrix b = read_matrix(second_operand());
    return emit_matrix(gmatmul(a, b));
  }
  if (c == "check-ac") return emit_report(check_arith_convergent(read_seq(cfg.input), check_options(cfg)));
  if (c == "check-as") return emit_report(check_arith_summable(read_seq(cfg.input), check_options(cfg)));
  if (c == "check-phi") {
    return emit_report(classify_eventually_zero(read_seq(cfg.input), Tolerance(cfg.tau)));
  }
  if (c == "chain") {
    if (cfg.chain.empty()) throw UsageError("missing required flag --chain");
    const GSeq f = read_seq(cfg.input);
    const ChainReport r = cfg.sums ? summable_chain_extract(f, cfg.chain, Tolerance(cfg.tau))
                                   : chain_extract(f, cfg.chain, Tolerance(cfg.tau));
    io.write(cfg.output, format_report(r) + "\n");
    return r.is_cauchy ? kExitOk : kExitRefuted;
  }
  if (c == "verify-inversion") {
    const Index size = require_flag(cfg.size, "--size");
    const DivisorMatrix w = emit_w_matrix(size);
    const DivisorMatrix m = emit_m_matrix(size);
    const DivisorMatrix id = DivisorMatrix::identity(size);
    const bool ok = gmatmul(w, m) == id && gmatmul(m, w) == id;
    io.write(cfg.output, ok ? "PASS\n" : "FAIL\n");
    return ok ? kExitOk : kExitRefuted;
  }
  throw UsageError("unknown command '" + c + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Arithmetic summability and convergence over the geometric real field",
               "geoarith"};
  Config cfg;

  const std::map<std::string, Repr> reprs{{"exponent", Repr::exponent}, {"value", Repr::value}};
  const std::map<std::string, CheckMode> modes{{"exact", CheckMode::exact},
                                               {"epsilon", CheckMode::epsilon}};

  const std::vector<std::pair<std::string, std::string>> commands{
      {"wsum", "divisor-sum transform W"},
      {"minvert", "Mobius inversion M"},
      {"convolve", "Dirichlet convolution of --input and --rhs"},
      {"qtrans", "gcd pullback Q_n (needs --n)"},
      {"rtrans", "divisor restriction R_n (needs --n)"},
      {"mobius", "table of mu_G(1..size) (needs --size)"},
      {"emit-w", "truncated W matrix (needs --size)"},
      {"emit-m", "truncated M matrix (needs --size)"},
      {"matmul", "geometric product of matrices --input and --rhs"},
      {"check-ac", "arithmetic convergence check"},
      {"check-as", "arithmetic summability check"},
      {"check-phi", "eventually-zero classification"},
      {"chain", "divisor-chain extraction (needs --chain, --sums for divisor sums)"},
      {"verify-inversion", "check W*M = M*W = identity (needs --size)"},
  };
  app.fallthrough();
  for (const auto& [name, description] : commands) {
    app.add_subcommand(name, description)->callback([&cfg, name = name] { cfg.command = name; });
  }
  app.require_subcommand(1);

  app.add_option("-i,--input", cfg.input, "input file, '-' for standard input");
  app.add_option("--rhs", cfg.rhs, "second operand for convolve and matmul");
  app.add_option("-o,--output", cfg.output, "output file, '-' for standard output");
  std::string repr_name = "exponent";
  std::string mode_name = "exact";
  app.add_option("--repr", repr_name, "term representation: exponent or value")
      ->check(CLI::IsMember(reprs));
  app.add_option("--mode", mode_name, "membership mode: exact or epsilon")
      ->check(CLI::IsMember(modes));
  app.add_option("--epsilon", cfg.epsilon, "geometric epsilon in exponent units (> 0)");
  app.add_option("--tau", cfg.tau, "tolerance in exponent units")->check(CLI::NonNegativeNumber);
  app.add_option("--n", cfg.n, "index n for qtrans/rtrans")->check(CLI::PositiveNumber);
  app.add_option("--size", cfg.size, "matrix or table size")->check(CLI::PositiveNumber);
  app.add_option("--chain", cfg.chain, "divisibility chain a,b,c")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  app.add_flag("--sums", cfg.sums, "extract divisor sums along the chain");
  app.add_option("--witness-cap", cfg.witness_cap, "largest witness tried")
      ->check(CLI::PositiveNumber);

  const std::string usage = app.help();
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << usage;
    return kExitUsage;
  }

  cfg.repr = reprs.at(repr_name);
  cfg.mode = modes.at(mode_name);

  Streams io(in, out);
  try {
    return dispatch(cfg, io);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace geoarith::cli
