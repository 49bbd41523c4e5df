#include "cli/commands.hpp"

#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "cli/io.hpp"
#include "radix/dual.hpp"
#include "radix/space.hpp"
#include "radix/tensor.hpp"

namespace radix::cli {

namespace {

std::string indexed(const char* key, std::size_t i) {
  return std::string(key) + "[" + std::to_string(i) + "]";
}

void line(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << ": " << value << '\n';
}

void emit_tensor_text(std::ostream& out, const Tensor& t) {
  line(out, "type", std::to_string(t.contra()) + " " + std::to_string(t.cova()));
  if (t.order() == 0) {
    line(out, "value", to_string(t.value()));
  } else {
    line(out, "components", to_string(t.components()));
  }
  if (!t.in_ambient_basis()) {
    for (std::size_t c = 0; c < t.dim(); ++c) line(out, indexed("basis", c + 1), to_string(t.basis().column(c)));
  }
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotRadicalAnnihilator:
    case ErrorKind::BadScreen:
      return kGateFailure;
    default:
      return kInvalidInput;
  }
}

int cmd_analyze(const AnalyzeArgs& args, Format format, std::ostream& out) {
  const Space s = load_space(args.space);
  const Signature sig = s.signature();
  const RadicalBasis& basis = s.canonical_basis();
  const AnnihView view = annih_view(s);
  const auto cometric = cometric_in_dual_basis(s, basis);

  if (format == Format::Json) {
    Json doc = Json::object();
    doc["dim"] = s.dim();
    doc["signature"] = Json{{"r", sig.zero}, {"s", sig.negative}, {"t", sig.positive}};
    doc["rank"] = s.rank();
    Json rad = Json::array();
    for (const auto& z : s.radical().basis()) rad.push_back(vector_to_json(z));
    doc["radical"] = rad;
    Json ob = Json::array();
    for (std::size_t a = 0; a < basis.dim(); ++a) {
      ob.push_back(Json{{"vector", vector_to_json(basis.vectors[a])}, {"alpha", to_string(basis.alpha[a])}});
    }
    doc["orthogonal_basis"] = ob;
    Json ab = Json::array();
    for (const auto& w : view.basis) ab.push_back(vector_to_json(w.components()));
    doc["annihilator_basis"] = ab;
    Json cd = Json::array();
    for (const auto& c : cometric) cd.push_back(Json{{"index", c.index}, {"value", to_string(c.value)}});
    doc["cometric_dual"] = cd;
    emit_json(out, doc);
    return kOk;
  }

  line(out, "dim", std::to_string(s.dim()));
  line(out, "signature", std::to_string(sig.zero) + " " + std::to_string(sig.negative) + " " +
                             std::to_string(sig.positive));
  line(out, "rank", std::to_string(s.rank()));
  line(out, "radical_count", std::to_string(s.radical().dim()));
  for (std::size_t i = 0; i < s.radical().dim(); ++i) {
    line(out, indexed("radical", i + 1), to_string(s.radical().basis()[i]));
  }
  for (std::size_t a = 0; a < basis.dim(); ++a) {
    line(out, indexed("orthogonal_basis", a + 1), to_string(basis.vectors[a]));
    line(out, indexed("alpha", a + 1), to_string(basis.alpha[a]));
  }
  for (std::size_t i = 0; i < view.dim(); ++i) {
    line(out, indexed("annihilator_basis", i + 1), to_string(view.basis[i].components()));
  }
  for (const auto& c : cometric) line(out, indexed("cometric_dual", c.index), to_string(c.value));
  return kOk;
}

int cmd_lower(const LowerArgs& args, Format format, std::ostream& out) {
  const Space s = load_space(args.space);
  const Tensor t = load_tensor(args.tensor);
  const Tensor lowered = lower_index(s, t, args.slot);
  const bool zero = lowered.is_zero();
  if (args.out) write_json_file(*args.out, tensor_to_json(lowered));

  if (format == Format::Json) {
    Json doc = Json::object();
    doc["slot"] = args.slot;
    doc["zero"] = zero;
    doc["radical_slot"] = zero;
    doc["tensor"] = tensor_to_json(lowered);
    emit_json(out, doc);
    return kOk;
  }
  line(out, "slot", std::to_string(args.slot));
  line(out, "zero", zero ? "true" : "false");
  if (zero) {
    line(out, "notice", "slot " + std::to_string(args.slot) + " is radical; lowering it gives zero");
  }
  emit_tensor_text(out, lowered);
  return kOk;
}

int cmd_contract(const ContractArgs& args, Format format, std::ostream& out) {
  const Space s = load_space(args.space);
  const Tensor t = load_tensor(args.tensor);

  Json gates = Json::array();
  std::optional<Tensor> result;
  if (args.mode == "mixed") {
    result = contract_mixed(t, args.k, args.l);
  } else if (args.mode == "covariant") {
    std::optional<ScreenDecomposition> screen;
    if (args.screen) screen = choose_screen(s, load_screen(*args.screen));
    for (std::size_t slot : {args.k, args.l}) {
      const bool ok = is_radannih_slot(s, t, slot);
      gates.push_back(Json{{"slot", slot}, {"radannih", ok}});
      if (format == Format::Text) line(out, indexed("gate", slot), ok ? "radannih true" : "radannih false");
      if (!ok) break;
    }
    result = contract_covariant(s, t, args.k, args.l, screen);
  } else {
    throw Error(ErrorKind::ParseError, "mode must be 'mixed' or 'covariant'");
  }
  if (args.out) write_json_file(*args.out, tensor_to_json(*result));

  if (format == Format::Json) {
    Json doc = Json::object();
    doc["mode"] = args.mode;
    doc["k"] = args.k;
    doc["l"] = args.l;
    if (args.mode == "covariant") doc["gates"] = gates;
    if (result->order() == 0) doc["value"] = to_string(result->value());
    doc["tensor"] = tensor_to_json(*result);
    emit_json(out, doc);
    return kOk;
  }
  line(out, "mode", args.mode);
  emit_tensor_text(out, *result);
  return kOk;
}

int cmd_check(const CheckArgs& args, Format format, std::ostream& out) {
  const Space s = load_space(args.space);
  const Tensor t = load_tensor(args.tensor);

  struct Witness {
    std::string kind;
    Vector probe;
    Tensor evaluation;
  };
  std::vector<Witness> witnesses;
  bool holds = false;
  if (args.predicate == "radannih") {
    holds = is_radannih_slot(s, t, args.slot);
    for (const auto& z : s.radical().basis()) {
      witnesses.push_back({"vector", z, plug_vector(t, args.slot, vector_in_basis(z, t.basis()))});
    }
  } else if (args.predicate == "radical") {
    holds = is_radical_slot(s, t, args.slot);
    for (const auto& w : annih_view(s).basis) {
      witnesses.push_back(
          {"covector", w.components(), plug_covector(t, args.slot, covector_in_basis(w, t.basis()))});
    }
  } else {
    throw Error(ErrorKind::ParseError, "predicate must be 'radical' or 'radannih'");
  }

  if (format == Format::Json) {
    Json doc = Json::object();
    doc["predicate"] = args.predicate;
    doc["slot"] = args.slot;
    Json ws = Json::array();
    for (const auto& w : witnesses) {
      ws.push_back(Json{{"kind", w.kind},
                        {"probe", vector_to_json(w.probe)},
                        {"evaluation", vector_to_json(w.evaluation.components())},
                        {"zero", w.evaluation.is_zero()}});
    }
    doc["witnesses"] = ws;
    doc["result"] = holds;
    emit_json(out, doc);
    return kOk;
  }
  line(out, "predicate", args.predicate);
  line(out, "slot", std::to_string(args.slot));
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const auto& w = witnesses[i];
    line(out, indexed("witness", i + 1),
         w.kind + " " + to_string(w.probe) + " -> " + to_string(w.evaluation.components()) +
             (w.evaluation.is_zero() ? " (zero)" : " (nonzero)"));
  }
  line(out, "result", holds ? "true" : "false");
  return kOk;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor algebra on possibly degenerate inner product spaces", "radix"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of key: value lines");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Signature, radical, bases and cometric of a space");
  analyze_cmd->add_option("space", analyze.space, "SpaceFile")->required();

  LowerArgs lower;
  auto* lower_cmd = app.add_subcommand("lower", "Lower a contravariant slot with the metric");
  lower_cmd->add_option("space", lower.space, "SpaceFile")->required();
  lower_cmd->add_option("tensor", lower.tensor, "TensorFile")->required();
  lower_cmd->add_option("--slot", lower.slot, "Contravariant slot (1-based)")->required();
  lower_cmd->add_option("--out", lower.out, "Write the lowered TensorFile here");

  ContractArgs contract;
  auto* contract_cmd = app.add_subcommand("contract", "Mixed or covariant contraction");
  contract_cmd->add_option("space", contract.space, "SpaceFile")->required();
  contract_cmd->add_option("tensor", contract.tensor, "TensorFile")->required();
  contract_cmd->add_option("--mode", contract.mode, "mixed | covariant")
      ->check(CLI::IsMember({"mixed", "covariant"}))
      ->required();
  contract_cmd->add_option("--k", contract.k, "First slot (contravariant for mixed)")->required();
  contract_cmd->add_option("--l", contract.l, "Second slot (covariant)")->required();
  contract_cmd->add_option("--screen", contract.screen, "Screen file for the cometric extension");
  contract_cmd->add_option("--out", contract.out, "Write the result TensorFile here");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Radical / radical-annihilator slot predicates");
  check_cmd->add_option("space", check.space, "SpaceFile")->required();
  check_cmd->add_option("tensor", check.tensor, "TensorFile")->required();
  check_cmd->add_option("--predicate", check.predicate, "radical | radannih")
      ->check(CLI::IsMember({"radical", "radannih"}))
      ->required();
  check_cmd->add_option("--slot", check.slot, "Slot (1-based)")->required();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("radix");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  const Format format = json ? Format::Json : Format::Text;
  try {
    if (*analyze_cmd) return cmd_analyze(analyze, format, out);
    if (*lower_cmd) return cmd_lower(lower, format, out);
    if (*contract_cmd) return cmd_contract(contract, format, out);
    if (*check_cmd) return cmd_check(check, format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace radix::cli
