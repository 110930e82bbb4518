#include "cli.hpp"

#include "kraus/channels.hpp"
#include "kraus/dynamics.hpp"
#include "kraus/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <numbers>
#include <ostream>

namespace kraus::cli {

namespace {

using io::json;

struct Options {
  double p = 0;
  std::string out, unitary, channel, state;
  int ds = 0, da = 0, env_init = 0;
  bool via_dilation = false;
  int samples = 100;
  std::uint64_t seed = 0x5eed;
  double theta = 0, phi = 0, r = 1, gamma = 1, t_max = 0;
  bool radians = false, p_grid = false;
};

int cmd_ad_channel(const Options& o, std::ostream& out) {
  const KrausChannel ch = amplitude_damping(o.p);
  io::write_json_file(o.out, io::channel_to_json(ch));
  out << "operators: " << ch.size() << '\n';
  return kOk;
}

int cmd_extract(const Options& o, std::ostream& out) {
  const json j = io::read_json_file(o.unitary);
  const JointUnitary u(io::matrix_from_json(j), o.ds, o.da);
  const KrausChannel ch = drop_null_operators(extract_kraus(u, o.env_init));
  io::write_json_file(o.out, io::channel_to_json(ch));
  out << "operators: " << ch.size() << '\n'
      << "completeness_residual: " << io::format_double(completeness_residual(ch.d_s(), ch.operators())) << '\n';
  return kOk;
}

int cmd_apply(const Options& o, std::ostream& out) {
  const DensityMatrix rho(io::matrix_from_json(io::read_json_file(o.state)));
  DensityMatrix result = rho;
  if (o.via_dilation) {
    if (o.unitary.empty()) throw DomainError("apply --via-dilation requires --unitary");
    const JointUnitary u(io::matrix_from_json(io::read_json_file(o.unitary)), o.ds, o.da);
    result = apply_via_dilation(u, rho, o.env_init);
  } else {
    if (o.channel.empty()) throw DomainError("apply requires --channel (or --via-dilation with --unitary)");
    result = apply(io::channel_from_json(io::read_json_file(o.channel)), rho);
  }
  io::write_json_file(o.out, io::matrix_to_json(result.matrix()));
  out << "trace: " << io::format_double(result.matrix().trace().real()) << '\n'
      << "min_eigenvalue: " << io::format_double(result.min_eigenvalue()) << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const KrausChannel ch = io::channel_from_json(io::read_json_file(o.channel), false);
  const ChannelReport rep = verify(ch, o.samples, o.seed);
  const json j = {
      {"completeness_residual", rep.completeness_residual},
      {"trace_deviation_max", rep.trace_deviation_max},
      {"hermiticity_deviation_max", rep.hermiticity_deviation_max},
      {"min_output_eigenvalue", rep.min_output_eigenvalue},
      {"operator_count", rep.operator_count},
      {"gram_rank", rep.gram_rank},
  };
  out << j.dump() << '\n';
  const bool ok = rep.completeness_residual <= kCompletenessTol && rep.min_output_eigenvalue >= -kCompletenessTol;
  return ok ? kOk : kVerificationFailed;
}

int cmd_trajectory(const Options& o, std::ostream& out) {
  const double scale = o.radians ? 1.0 : std::numbers::pi / 180.0;
  const BlochVector initial = from_spherical(o.r, o.theta * scale, o.phi * scale);
  const auto points = o.p_grid ? trajectory_p_grid(initial, o.gamma, o.samples)
                               : trajectory(initial, DecayParams{o.gamma, o.t_max, o.samples});
  std::ofstream f(o.out);
  if (!f) throw io::IoError("cannot open " + o.out + " for writing");
  io::write_trajectory_csv(f, points);
  if (!f) throw io::IoError("write to " + o.out + " failed");
  out << "samples: " << points.size() << '\n';
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const KrausChannel ch = io::channel_from_json(io::read_json_file(o.channel));
  const KrausChannel reduced = reduce(ch);
  io::write_json_file(o.out, io::channel_to_json(reduced));
  out << "operators: " << ch.size() << " -> " << reduced.size() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kraus operator-sum simulation of open quantum systems", "krausim"};
  app.require_subcommand(1);
  Options o;

  auto* ad = app.add_subcommand("ad-channel", "Write the amplitude-damping Kraus pair");
  ad->add_option("--p", o.p, "Emission probability in [0, 1]")->required();
  ad->add_option("--out", o.out, "Output channel JSON")->required();

  auto* ex = app.add_subcommand("extract", "Extract Kraus operators from a joint unitary");
  ex->add_option("--unitary", o.unitary, "Joint unitary matrix JSON")->required();
  ex->add_option("--ds", o.ds, "System dimension")->required();
  ex->add_option("--da", o.da, "Environment dimension")->required();
  ex->add_option("--env-init", o.env_init, "Initial environment basis state");
  ex->add_option("--out", o.out, "Output channel JSON")->required();

  auto* ap = app.add_subcommand("apply", "Apply a channel to a density matrix");
  ap->add_option("--channel", o.channel, "Channel JSON");
  ap->add_option("--state", o.state, "Density matrix JSON")->required();
  ap->add_option("--out", o.out, "Output density matrix JSON")->required();
  ap->add_flag("--via-dilation", o.via_dilation, "Evolve through the joint unitary and a partial trace");
  ap->add_option("--unitary", o.unitary, "Joint unitary matrix JSON (with --via-dilation)");
  ap->add_option("--ds", o.ds, "System dimension (with --via-dilation)");
  ap->add_option("--da", o.da, "Environment dimension (with --via-dilation)");
  ap->add_option("--env-init", o.env_init, "Initial environment basis state (with --via-dilation)");

  auto* ve = app.add_subcommand("verify", "Check completeness, trace preservation and positivity");
  ve->add_option("--channel", o.channel, "Channel JSON")->required();
  ve->add_option("--samples", o.samples, "Random input states")->check(CLI::PositiveNumber);
  ve->add_option("--seed", o.seed, "Random seed");

  auto* tr = app.add_subcommand("trajectory", "Amplitude-damping Bloch and coherence trajectory as CSV");
  tr->add_option("--theta-deg", o.theta, "Polar angle of the initial Bloch vector")->required();
  tr->add_option("--phi-deg", o.phi, "Azimuthal angle of the initial Bloch vector");
  tr->add_option("--r", o.r, "Bloch radius in [0, 1]");
  tr->add_option("--gamma", o.gamma, "Decay rate");
  tr->add_option("--t-max", o.t_max, "Final time");
  tr->add_option("--samples", o.samples, "Grid points (>= 2)");
  tr->add_flag("--radians", o.radians, "Interpret the angle options as radians");
  tr->add_flag("--p-grid", o.p_grid, "Uniform grid in p over [0, 1] instead of time");
  tr->add_option("--out", o.out, "Output CSV")->required();

  auto* re = app.add_subcommand("reduce", "Reduce a Kraus set to at most d_s^2 operators");
  re->add_option("--channel", o.channel, "Channel JSON")->required();
  re->add_option("--out", o.out, "Output channel JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  try {
    if (*ad) return cmd_ad_channel(o, out);
    if (*ex) return cmd_extract(o, out);
    if (*ap) return cmd_apply(o, out);
    if (*ve) return cmd_verify(o, out);
    if (*tr) return cmd_trajectory(o, out);
    if (*re) return cmd_reduce(o, out);
  } catch (const io::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {  // DomainError, DimensionError
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kDomainError;
}

}  // namespace kraus::cli
