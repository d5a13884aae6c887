#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thetavex/thetavex.h"

namespace {

enum Exit { kYes = 0, kNo = 1, kInput = 2, kInternal = 3 };

struct Options {
  bool json = false;
  bool pretty = false;
  bool overline = false;
  bool full = false;
  bool allow_large = false;
  bool show_crosses = false;
  bool show_ranks = false;
  unsigned jobs = 1;
  int n = 0;
  std::vector<std::string> input;
};

std::string joined(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

int report_error(tvx_status status) {
  std::cerr << "error: " << tvx_last_error() << "\n";
  switch (status) {
    case TVX_ERR_PARSE:
    case TVX_ERR_INVALID_TRIPLE:
    case TVX_ERR_INFEASIBLE_RANK:
    case TVX_ERR_RANK_TOO_LARGE:
    case TVX_ERR_OUT_OF_RANGE:
      return kInput;
    default:
      return kInternal;
  }
}

std::string take(char* s) {
  std::string out = s ? s : "";
  tvx_string_free(s);
  return out;
}

std::string window_json(const int* window, std::size_t n) {
  std::string s = "[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += ',';
    s += std::to_string(window[i]);
  }
  return s + "]";
}

std::string window_text(const int* window, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += ' ';
    s += std::to_string(window[i]);
  }
  return s;
}

// Owns a handle for the duration of one command.
template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  ~Handle() { Free(ptr); }
};
using Perm = Handle<tvx_perm, tvx_perm_free>;
using Triple = Handle<tvx_triple, tvx_triple_free>;

int parse_window(const Options& o, Perm& w) {
  if (tvx_status st = tvx_perm_parse(joined(o.input).c_str(), &w.ptr); st != TVX_OK) {
    return report_error(st);
  }
  return kYes;
}

int perm_text(const tvx_perm* w, bool overline, std::string& out) {
  char* s = nullptr;
  if (tvx_status st = tvx_perm_to_string(w, overline, &s); st != TVX_OK) return report_error(st);
  out = take(s);
  return kYes;
}

int cmd_classify(const Options& o) {
  Perm w;
  if (int rc = parse_window(o, w)) return rc;
  unsigned flags = 0;
  if (o.full) flags |= TVX_CLASSIFY_FULL;
  if (o.json) flags |= TVX_OUTPUT_JSON;
  if (o.pretty) flags |= TVX_OUTPUT_PRETTY;
  if (o.overline) flags |= TVX_OUTPUT_OVERLINE;
  int theta = 0;
  char* report = nullptr;
  if (tvx_status st = tvx_classify(w.ptr, flags, &theta, &report); st != TVX_OK) {
    return report_error(st);
  }
  std::cout << take(report);
  if (o.json) std::cout << "\n";
  return theta ? kYes : kNo;
}

int cmd_diagram(const Options& o) {
  Perm w;
  if (int rc = parse_window(o, w)) return rc;
  char* out = nullptr;
  tvx_status st;
  if (o.json) {
    st = tvx_diagram_json(w.ptr, o.pretty, &out);
  } else {
    unsigned flags = 0;
    if (o.show_crosses) flags |= TVX_RENDER_CROSSES;
    if (o.show_ranks) flags |= TVX_RENDER_RANKS;
    if (o.overline) flags |= TVX_OUTPUT_OVERLINE;
    st = tvx_render(w.ptr, flags, &out);
  }
  if (st != TVX_OK) return report_error(st);
  std::cout << take(out);
  if (o.json) std::cout << "\n";
  return kYes;
}

int cmd_construct(const Options& o) {
  Triple t;
  if (tvx_status st = tvx_triple_parse(joined(o.input).c_str(), o.n, &t.ptr); st != TVX_OK) {
    return report_error(st);
  }
  Perm w, inv;
  if (tvx_status st = tvx_construct(t.ptr, o.n, &w.ptr); st != TVX_OK) return report_error(st);
  const int rank = tvx_perm_rank(w.ptr);
  if (tvx_status st = tvx_construct_inverse(t.ptr, rank, &inv.ptr); st != TVX_OK) {
    return report_error(st);
  }
  if (o.json) {
    char* out = nullptr;
    if (tvx_status st = tvx_construction_json(t.ptr, rank, o.pretty, &out); st != TVX_OK) {
      return report_error(st);
    }
    std::cout << take(out) << "\n";
    return kYes;
  }
  std::string ws, is;
  if (int rc = perm_text(w.ptr, o.overline, ws)) return rc;
  if (int rc = perm_text(inv.ptr, o.overline, is)) return rc;
  std::cout << "w: " << ws << "\n" << "inverse: " << is << "\n";
  return kYes;
}

int cmd_recover(const Options& o) {
  Perm w;
  if (int rc = parse_window(o, w)) return rc;
  Triple t;
  if (tvx_status st = tvx_recover(w.ptr, &t.ptr); st != TVX_OK) return report_error(st);
  if (!t.ptr) {
    std::cout << (o.json ? "{\"schema\":\"1\",\"triple\":null}" : "NOT THETA-VEXILLARY") << "\n";
    return kNo;
  }
  char* s = nullptr;
  tvx_status st = o.json ? tvx_triple_to_json(t.ptr, &s) : tvx_triple_to_string(t.ptr, &s);
  if (st != TVX_OK) return report_error(st);
  if (o.json) {
    std::cout << "{\"schema\":\"1\",\"triple\":" << take(s) << "}\n";
  } else {
    std::cout << take(s) << "\n";
  }
  return kYes;
}

int print_mismatch(const int* window, std::size_t n, void*) {
  std::cerr << "mismatch: " << window_text(window, n) << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  tvx_summary s{};
  if (tvx_status st = tvx_verify(o.n, o.jobs, o.allow_large, &s, print_mismatch, nullptr);
      st != TVX_OK) {
    return report_error(st);
  }
  if (o.json) {
    std::cout << "{\"schema\":\"1\",\"n\":" << s.n << ",\"total\":" << s.total
              << ",\"theta_vexillary\":" << s.theta_vexillary << ",\"mismatches\":" << s.mismatches
              << "}\n";
  } else {
    std::cout << s.total << " total, " << s.theta_vexillary << " theta-vexillary, "
              << s.mismatches << " mismatches\n";
  }
  return s.mismatches == 0 ? kYes : kNo;
}

int print_window(const int* window, std::size_t n, void* user) {
  const bool json = *static_cast<const bool*>(user);
  std::cout << (json ? window_json(window, n) : window_text(window, n)) << '\n';
  return 0;
}

int cmd_enumerate(const Options& o) {
  bool json = o.json;
  if (tvx_status st = tvx_enumerate(o.n, o.jobs, o.allow_large, print_window, &json);
      st != TVX_OK) {
    return report_error(st);
  }
  std::cout.flush();
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Theta-vexillary signed permutations: classification, diagrams and triples"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_flag("--pretty", o.pretty, "Indent JSON output");
  app.add_flag("--overline", o.overline, "Print negative entries with an overline");
  app.add_flag("--allow-large", o.allow_large, "Lift the rank guard on exhaustive commands");
  app.add_option("--jobs", o.jobs, "Worker threads for verify and enumerate")
      ->check(CLI::Range(1u, 1024u));

  auto* classify = app.add_subcommand("classify", "Classify a signed permutation");
  classify->add_flag("--full", o.full, "Run every classifier instead of stopping early");
  classify->add_option("window", o.input, "Window, e.g. \"-2 3 1\"")->required();

  auto* diagram = app.add_subcommand("diagram", "Draw the extended diagram");
  diagram->add_flag("--show-crosses", o.show_crosses, "Mark crossed cells with 'x'");
  diagram->add_flag("--show-ranks", o.show_ranks, "Append the rank table");
  diagram->add_option("window", o.input, "Window")->required();

  auto* construct = app.add_subcommand("construct", "Build w and its inverse from a triple");
  construct->add_option("--n", o.n, "Rank (default: smallest feasible)")->check(CLI::PositiveNumber);
  construct->add_option("triple", o.input, "\"k...; p...; q...\" or JSON")->required();

  auto* recover = app.add_subcommand("recover", "Recover the triple of a permutation");
  recover->add_option("window", o.input, "Window")->required();

  auto* verify = app.add_subcommand("verify", "Check that the classifiers agree on all of W_n");
  verify->add_option("n", o.n, "Rank")->required()->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List theta-vexillary windows of W_n");
  enumerate->add_option("n", o.n, "Rank")->required()->check(CLI::PositiveNumber);

  for (auto* sub : {classify, diagram, recover}) sub->positionals_at_end();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInput;
  }

  if (*classify) return cmd_classify(o);
  if (*diagram) return cmd_diagram(o);
  if (*construct) return cmd_construct(o);
  if (*recover) return cmd_recover(o);
  if (*verify) return cmd_verify(o);
  if (*enumerate) return cmd_enumerate(o);
  return kInput;
}
