// Command line frontend: every capability of the library behind batch
// subcommands with deterministic human and structured output.
//
// Exit codes: 0 success, 1 usage or parse error, 2 internal cross-check
// disagreement.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lnc/group_algebra.hpp"
#include "lnc/matrix_oracle.hpp"
#include "lnc/nc_polynomial.hpp"
#include "lnc/permutation.hpp"
#include "lnc/sequence_action.hpp"
#include "lnc/tm_set.hpp"

using json = nlohmann::ordered_json;
using namespace lnc;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;

struct Options {
  std::string format = "human";
  int max_degree = 16;
};

bool structured(const Options& opts) { return opts.format == "structured"; }

void emit(const Options& opts, const std::string& command, const json& input,
          const json& result, const std::string& human) {
  if (structured(opts)) {
    json envelope;
    envelope["command"] = command;
    envelope["input"] = input;
    envelope["result"] = result;
    envelope["format"] = "structured";
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

json perm_record(const Permutation& sigma) {
  json record;
  record["perm"] = sigma.one_line();
  record["t"] = sigma.preimage(1);
  record["sign"] = sign(sigma);
  const auto taus = tau_decomposition(sigma);
  record["tau_set"] = taus.has_value() ? json(*taus) : json(nullptr);
  return record;
}

json polynomial_record(const NCPolynomial& p) {
  json terms = json::array();
  for (const auto& [word, coeff] : p.terms()) {
    json term;
    term["word"] = word;
    term["coeff"] = coeff.convert_to<std::int64_t>();
    terms.push_back(std::move(term));
  }
  return terms;
}

json algebra_record(const GroupAlgebraElement& e) {
  json terms = json::array();
  for (const auto& [sigma, coeff] : e.terms()) {
    json term;
    term["perm"] = sigma.one_line();
    term["coeff"] = coeff.convert_to<std::int64_t>();
    terms.push_back(std::move(term));
  }
  return terms;
}

json tower_record(const std::vector<SpectrumLevel>& levels) {
  json out = json::array();
  for (const auto& level : levels) {
    json entry;
    entry["value"] = level.value;
    entry["indices"] = level.indices;
    out.push_back(std::move(entry));
  }
  return out;
}

int run_tm_list(const Options& opts, int m) {
  const auto members = enumerate_tm(m);
  json result;
  result["count"] = members.size();
  json list = json::array();
  std::string human = "T_" + std::to_string(m) + " (" +
                      std::to_string(members.size()) + " elements):\n";
  for (const Permutation& sigma : members) {
    list.push_back(perm_record(sigma));
    human += "  " + sigma.one_line() + "\n";
  }
  result["members"] = std::move(list);
  emit(opts, "tm list", {{"m", m}}, result, human);
  return 0;
}

int run_tm_check(const Options& opts, const std::string& text) {
  const Permutation sigma = Permutation::parse_one_line(text);
  const bool descent = is_member_descent(sigma);
  const bool block = is_member_block(sigma);
  const bool tau = is_member_tau(sigma);
  const bool cycles = witness(sigma).has_value();
  json result;
  result["member_descent"] = descent;
  result["member_block"] = block;
  result["member_tau"] = tau;
  result["member_witness"] = cycles;
  result["sign"] = sign(sigma);
  std::string human = sigma.one_line() + ": member=" +
                      (descent ? "true" : "false") +
                      ", sign=" + std::to_string(sign(sigma)) + "\n";
  if (descent != block || descent != tau || descent != cycles) {
    emit(opts, "tm check", {{"perm", text}}, result,
         human + "internal error: membership characterizations disagree\n");
    return kExitDisagreement;
  }
  emit(opts, "tm check", {{"perm", text}}, result, human);
  return 0;
}

int run_tm_count(const Options& opts, int m, int t) {
  json result;
  std::string human;
  if (t == 0) {
    result["count"] = count_tm(m);
    human = std::to_string(count_tm(m)) + "\n";
  } else {
    result["count"] = count_tm_t(m, t);
    human = std::to_string(count_tm_t(m, t)) + "\n";
  }
  emit(opts, "tm count", {{"m", m}, {"t", t}}, result, human);
  return 0;
}

int run_tm_decompose(const Options& opts, const std::string& text) {
  const Permutation sigma = Permutation::parse_one_line(text);
  const auto taus = tau_decomposition(sigma);
  if (!taus.has_value()) {
    std::cerr << "error: " << sigma.one_line() << " is not a member\n";
    return kExitUsage;
  }
  json result;
  result["tau_set"] = *taus;
  std::string human = "{";
  for (size_t i = 0; i < taus->size(); ++i) {
    human += (i ? "," : "") + std::to_string((*taus)[i]);
  }
  human += "}\n";
  emit(opts, "tm decompose", {{"perm", text}}, result, human);
  return 0;
}

int run_tm_witness(const Options& opts, const std::string& text) {
  const Permutation sigma = Permutation::parse_one_line(text);
  const auto w = witness(sigma);
  if (!w.has_value()) {
    std::cerr << "error: " << sigma.one_line() << " is not a member\n";
    return kExitUsage;
  }
  json result;
  result["t"] = w->one_position;
  result["r"] = w->descent_count;
  result["cycles"] = w->cycle_indices;
  std::string human = "t=" + std::to_string(w->one_position) +
                      " r=" + std::to_string(w->descent_count) + " cycles=[";
  for (size_t i = 0; i < w->cycle_indices.size(); ++i) {
    human += (i ? "," : "") + std::to_string(w->cycle_indices[i]);
  }
  human += "]\n";
  emit(opts, "tm witness", {{"perm", text}}, result, human);
  return 0;
}

int run_expand(const Options& opts, int m, const std::string& mode, bool compare) {
  json result;
  std::string human;
  if (compare) {
    const NCPolynomial recursive = commutator_recursive(m);
    const NCPolynomial direct = commutator_via_tm(m);
    const bool equal = recursive == direct;
    result["equal"] = equal;
    result["terms"] = recursive.term_count();
    human = std::string("equal=") + (equal ? "true" : "false") +
            ", terms=" + std::to_string(recursive.term_count()) + "\n";
    if (!equal) {
      emit(opts, "expand", {{"m", m}, {"compare", true}}, result,
           human + "internal error: expansions disagree\n");
      return kExitDisagreement;
    }
    emit(opts, "expand", {{"m", m}, {"compare", true}}, result, human);
    return 0;
  }
  const NCPolynomial p =
      mode == "recursive" ? commutator_recursive(m) : commutator_via_tm(m);
  result["terms"] = polynomial_record(p);
  result["term_count"] = p.term_count();
  emit(opts, "expand", {{"m", m}, {"mode", mode}}, result, p.str() + "\n");
  return 0;
}

int run_vm(const Options& opts, int m, const std::string& form) {
  json result;
  if (form == "verify") {
    const GroupAlgebraElement reference = vm_definition(m);
    const bool all_equal = vm_cycles(m) == reference && vm_tau(m) == reference;
    result["all_equal"] = all_equal;
    result["support"] = reference.support_size();
    std::string human = std::string("all_equal=") + (all_equal ? "true" : "false") +
                        ", support=" + std::to_string(reference.support_size()) + "\n";
    if (!all_equal) {
      emit(opts, "vm", {{"m", m}, {"form", form}}, result,
           human + "internal error: factorizations disagree\n");
      return kExitDisagreement;
    }
    emit(opts, "vm", {{"m", m}, {"form", form}}, result, human);
    return 0;
  }
  GroupAlgebraElement element = form == "cycles"  ? vm_cycles(m)
                                : form == "tau"   ? vm_tau(m)
                                                  : vm_definition(m);
  result["terms"] = algebra_record(element);
  result["support"] = element.support_size();
  emit(opts, "vm", {{"m", m}, {"form", form}}, result, element.str() + "\n");
  return 0;
}

int run_oracle(const Options& opts, int m, const std::string& perm_text, bool force) {
  const auto chain = unit_chain(m);
  if (!perm_text.empty()) {
    const Permutation sigma = Permutation::parse_one_line(perm_text);
    if (sigma.degree() != m) {
      std::cerr << "error: permutation degree does not match m\n";
      return kExitUsage;
    }
    const bool product = permuted_product_is_nonzero(chain, sigma);
    const bool bracket = m >= 2 && !permuted_commutator(chain, sigma).is_zero();
    json result;
    result["perm"] = sigma.one_line();
    result["product_nonzero"] = product;
    result["commutator_nonzero"] = bracket;
    emit(opts, "oracle", {{"m", m}, {"perm", perm_text}}, result,
         std::string("product_nonzero=") + (product ? "true" : "false") +
             ", commutator_nonzero=" + (bracket ? "true" : "false") + "\n");
    return 0;
  }
  if (m < 2) {
    std::cerr << "error: full sweep needs m >= 2\n";
    return kExitUsage;
  }
  if (m > 8 && !force) {
    std::cerr << "error: full sweep guarded at m <= 8; pass --force to override\n";
    return kExitUsage;
  }
  std::size_t bracket_nonzero = 0;
  std::size_t product_nonzero = 0;
  bool agreement = true;
  for (const Permutation& sigma : all_permutations(m)) {
    if (permuted_product_is_nonzero(chain, sigma)) {
      ++product_nonzero;
      agreement = agreement && sigma.is_identity();
    }
    const bool nonzero = !permuted_commutator(chain, sigma).is_zero();
    if (nonzero) {
      ++bracket_nonzero;
    }
    agreement = agreement && nonzero == is_member_descent(sigma);
  }
  agreement = agreement && product_nonzero == 1 && bracket_nonzero == count_tm(m);
  json result;
  result["agreement"] = agreement;
  result["tm_size"] = bracket_nonzero;
  result["product_nonzero_count"] = product_nonzero;
  std::string human = std::string("agreement=") + (agreement ? "true" : "false") +
                      ", tm_size=" + std::to_string(bracket_nonzero) + "\n";
  if (!agreement) {
    emit(opts, "oracle", {{"m", m}}, result,
         human + "internal error: matrix oracle disagrees with the enumeration\n");
    return kExitDisagreement;
  }
  emit(opts, "oracle", {{"m", m}}, result, human);
  return 0;
}

int run_mirror(const Options& opts, const std::string& left, const std::string& right,
               const std::string& mode) {
  const SymbolSequence s = parse_sequence(left);
  const SymbolSequence s2 = parse_sequence(right);
  json result;
  std::string human;
  bool fast = false;
  bool brute = false;
  if (mode == "fast" || mode == "both") {
    fast = mirrored_fast(s, s2);
    result["fast"] = fast;
    human += std::string("fast=") + (fast ? "true" : "false") + "\n";
  }
  if (mode == "brute" || mode == "both") {
    brute = mirrored_bruteforce(s, s2, opts.max_degree);
    result["brute"] = brute;
    human += std::string("brute=") + (brute ? "true" : "false") + "\n";
    if (brute && !s.empty()) {
      // One matching partner per member, for the record.
      json witnesses = json::array();
      const int m = static_cast<int>(s.size());
      for (const Permutation& sigma : enumerate_tm(m)) {
        const SymbolSequence image = act(sigma, s);
        for (const Permutation& sigma2 : enumerate_tm(m)) {
          if (act(sigma2, s2) == image) {
            witnesses.push_back({{"sigma", sigma.one_line()},
                                 {"sigma_prime", sigma2.one_line()}});
            break;
          }
        }
      }
      result["witnesses"] = std::move(witnesses);
    }
  }
  if (mode == "both" && fast != brute) {
    emit(opts, "mirror", {{"s", left}, {"s_prime", right}, {"mode", mode}}, result,
         human + "internal error: decision procedures disagree\n");
    return kExitDisagreement;
  }
  emit(opts, "mirror", {{"s", left}, {"s_prime", right}, {"mode", mode}}, result, human);
  return 0;
}

int run_spectrum(const Options& opts, const std::string& text, const std::string& a,
                 const std::string& b) {
  const SymbolSequence s = parse_sequence(text);
  const SpectrumSequence sp = spectrum(s, a, b);
  json result;
  result["runs"] = sp.runs;
  result["levels"] = {{a, tower_record(m_levels(s, a, b))},
                      {b, tower_record(m_levels(s, b, a))}};
  std::string human = "(";
  for (size_t i = 0; i < sp.runs.size(); ++i) {
    human += (i ? "," : "") + std::to_string(sp.runs[i]);
  }
  human += ")\n";
  for (const std::string& symbol : {a, b}) {
    human += "levels " + symbol + ":";
    for (const auto& level : m_levels(s, symbol, symbol == a ? b : a)) {
      human += " " + std::to_string(level.value);
    }
    human += "\n";
  }
  emit(opts, "spectrum", {{"s", text}, {"a", a}, {"b", b}}, result, human);
  return 0;
}

int run_ow(const Options& opts, const std::string& text, const std::string& pattern) {
  const SymbolSequence s = parse_sequence(text);
  const SymbolSequence w = parse_sequence(pattern);
  const OccurrenceIndex index = occurrence_index(s, w, opts.max_degree);
  json result;
  result["infinite"] = index.is_infinite();
  if (!index.is_infinite()) {
    result["index"] = index.value();
  }
  emit(opts, "ow", {{"s", text}, {"w", pattern}}, result,
       (index.is_infinite() ? std::string("infinity") : std::to_string(index.value())) +
           "\n");
  return 0;
}

int run_special(const Options& opts, const std::string& left, const std::string& right) {
  const SymbolSequence s = parse_sequence(left);
  const SymbolSequence s2 = parse_sequence(right);
  json roles;
  std::string human;
  std::set<std::string> seen;
  for (const std::string& symbol : s) {
    if (!seen.insert(symbol).second) {
      continue;
    }
    const SymbolRole role = classify_symbol(s, s2, symbol);
    roles[symbol] = to_string(role);
    human += symbol + ": " + to_string(role) + "\n";
  }
  const bool special = is_special_pair(s, s2);
  json result;
  result["special"] = special;
  result["roles"] = std::move(roles);
  human += std::string("special=") + (special ? "true" : "false") + "\n";
  emit(opts, "special", {{"s", left}, {"s_prime", right}}, result, human);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of the permutation set behind left-normed long commutators"};
  app.require_subcommand(1);

  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  app.add_option("--max-degree", opts.max_degree,
                 "Cap for brute-force sweeps over the permutation set")
      ->capture_default_str();

  // tm
  auto* tm = app.add_subcommand("tm", "Membership, enumeration and factorization");
  tm->require_subcommand(1);
  int tm_m = 0;
  int tm_t = 0;
  std::string tm_perm;
  auto* tm_list = tm->add_subcommand("list", "Enumerate the whole set");
  tm_list->add_option("m", tm_m, "Degree")->required();
  auto* tm_check = tm->add_subcommand("check", "Check membership of one permutation");
  tm_check->add_option("perm", tm_perm, "One-line permutation")->required();
  auto* tm_count = tm->add_subcommand("count", "Count the set or one slice");
  tm_count->add_option("m", tm_m, "Degree")->required();
  tm_count->add_option("t", tm_t, "Slice index (optional)");
  auto* tm_decompose = tm->add_subcommand("decompose", "Tau-index factorization");
  tm_decompose->add_option("perm", tm_perm, "One-line permutation")->required();
  auto* tm_witness = tm->add_subcommand("witness", "Descending-cycle factorization");
  tm_witness->add_option("perm", tm_perm, "One-line permutation")->required();

  // expand
  auto* expand = app.add_subcommand("expand", "Expand the long commutator");
  int expand_m = 0;
  std::string expand_mode = "tm";
  bool expand_compare = false;
  expand->add_option("m", expand_m, "Bracket length")->required();
  expand->add_option("--mode", expand_mode, "Expansion route")
      ->check(CLI::IsMember({"recursive", "tm"}));
  expand->add_flag("--compare", expand_compare, "Run both routes and compare");

  // vm
  auto* vm = app.add_subcommand("vm", "Group algebra element and factorizations");
  int vm_m = 0;
  std::string vm_form;
  vm->add_option("m", vm_m, "Degree")->required();
  vm->add_option("form", vm_form, "definition|cycles|tau|verify")
      ->required()
      ->check(CLI::IsMember({"definition", "cycles", "tau", "verify"}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Matrix unit verification");
  int oracle_m = 0;
  std::string oracle_perm;
  bool oracle_force = false;
  oracle->add_option("m", oracle_m, "Chain length")->required();
  oracle->add_option("perm", oracle_perm, "Single permutation (optional)");
  oracle->add_flag("--force", oracle_force, "Override the sweep guard");

  // mirror
  auto* mirror = app.add_subcommand("mirror", "Mirrored pair decision");
  std::string mirror_s, mirror_s2, mirror_mode = "both";
  mirror->add_option("s", mirror_s, "First sequence")->required();
  mirror->add_option("s_prime", mirror_s2, "Second sequence")->required();
  mirror->add_option("--mode", mirror_mode, "fast|brute|both")
      ->check(CLI::IsMember({"fast", "brute", "both"}));

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Run-length spectrum and towers");
  std::string spectrum_s, spectrum_a, spectrum_b;
  spectrum_cmd->add_option("s", spectrum_s, "Two-symbol sequence")->required();
  spectrum_cmd->add_option("a", spectrum_a, "Reference symbol")->required();
  spectrum_cmd->add_option("b", spectrum_b, "Other symbol")->required();

  // ow
  auto* ow = app.add_subcommand("ow", "Occurrence index of a pattern");
  std::string ow_s, ow_w;
  ow->add_option("s", ow_s, "Sequence")->required();
  ow->add_option("w", ow_w, "Pattern")->required();

  // special
  auto* special = app.add_subcommand("special", "Symbol classification and special pairs");
  std::string special_s, special_s2;
  special->add_option("s", special_s, "First sequence")->required();
  special->add_option("s_prime", special_s2, "Second sequence")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (tm_list->parsed()) return run_tm_list(opts, tm_m);
    if (tm_check->parsed()) return run_tm_check(opts, tm_perm);
    if (tm_count->parsed()) return run_tm_count(opts, tm_m, tm_t);
    if (tm_decompose->parsed()) return run_tm_decompose(opts, tm_perm);
    if (tm_witness->parsed()) return run_tm_witness(opts, tm_perm);
    if (expand->parsed()) return run_expand(opts, expand_m, expand_mode, expand_compare);
    if (vm->parsed()) return run_vm(opts, vm_m, vm_form);
    if (oracle->parsed()) return run_oracle(opts, oracle_m, oracle_perm, oracle_force);
    if (mirror->parsed()) return run_mirror(opts, mirror_s, mirror_s2, mirror_mode);
    if (spectrum_cmd->parsed())
      return run_spectrum(opts, spectrum_s, spectrum_a, spectrum_b);
    if (ow->parsed()) return run_ow(opts, ow_s, ow_w);
    if (special->parsed()) return run_special(opts, special_s, special_s2);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
