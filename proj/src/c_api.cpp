#include "thetavex/thetavex.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "thetavex/classify.hpp"
#include "thetavex/format.hpp"
#include "thetavex/render.hpp"

struct tvx_perm {
  thetavex::SignedPermutation w;
};

struct tvx_triple {
  thetavex::ThetaTriple t;
};

namespace {

thread_local std::string last_error;

tvx_status fail(tvx_status status, const std::string& message) {
  last_error = message;
  return status;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tvx_status give_string(const std::string& s, char** out) {
  *out = copy_string(s);
  return *out ? TVX_OK : fail(TVX_ERR_INTERNAL, "out of memory");
}

template <class Fn>
tvx_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const thetavex::ParseError& e) {
    return fail(TVX_ERR_PARSE, e.what());
  } catch (const thetavex::InvalidTripleError& e) {
    return fail(TVX_ERR_INVALID_TRIPLE, e.what());
  } catch (const thetavex::InfeasibleRankError& e) {
    return fail(TVX_ERR_INFEASIBLE_RANK, e.what());
  } catch (const thetavex::RankTooLargeError& e) {
    return fail(TVX_ERR_RANK_TOO_LARGE, e.what());
  } catch (const std::out_of_range& e) {
    return fail(TVX_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TVX_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(TVX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TVX_ERR_INTERNAL, "unknown error");
  }
}

#define TVX_REQUIRE(ptr) \
  if (!(ptr)) return fail(TVX_ERR_NULL_ARG, #ptr " is NULL")

int emit_window(tvx_window_cb cb, void* user, const thetavex::SignedPermutation& w) {
  return cb(w.window().data(), w.window().size(), user);
}

}  // namespace

extern "C" {

const char* tvx_version(void) { return "1.0.0"; }

const char* tvx_last_error(void) { return last_error.c_str(); }

const char* tvx_status_name(tvx_status status) {
  switch (status) {
    case TVX_OK: return "ok";
    case TVX_ERR_PARSE: return "parse error";
    case TVX_ERR_INVALID_TRIPLE: return "invalid triple";
    case TVX_ERR_INFEASIBLE_RANK: return "infeasible rank";
    case TVX_ERR_RANK_TOO_LARGE: return "rank too large";
    case TVX_ERR_OUT_OF_RANGE: return "out of range";
    case TVX_ERR_NULL_ARG: return "null argument";
    case TVX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void tvx_string_free(char* s) { std::free(s); }

int tvx_max_guarded_rank(void) { return thetavex::kMaxGuardedRank; }

tvx_status tvx_perm_parse(const char* text, tvx_perm** out) {
  TVX_REQUIRE(text);
  TVX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new tvx_perm{thetavex::SignedPermutation::parse(text)};
    return TVX_OK;
  });
}

tvx_status tvx_perm_from_window(const int* window, size_t n, tvx_perm** out) {
  TVX_REQUIRE(out);
  *out = nullptr;
  if (n > 0) TVX_REQUIRE(window);
  return guarded([&] {
    *out = new tvx_perm{thetavex::SignedPermutation(std::vector<int>(window, window + n))};
    return TVX_OK;
  });
}

void tvx_perm_free(tvx_perm* w) { delete w; }

int tvx_perm_rank(const tvx_perm* w) { return w ? w->w.rank() : -1; }

tvx_status tvx_perm_window(const tvx_perm* w, int* out, size_t cap) {
  TVX_REQUIRE(w);
  const auto win = w->w.window();
  if (cap < win.size()) return fail(TVX_ERR_OUT_OF_RANGE, "buffer shorter than the rank");
  if (!win.empty()) TVX_REQUIRE(out);
  std::copy(win.begin(), win.end(), out);
  return TVX_OK;
}

tvx_status tvx_perm_to_string(const tvx_perm* w, int overline, char** out) {
  TVX_REQUIRE(w);
  TVX_REQUIRE(out);
  return guarded([&] { return give_string(w->w.to_string(overline != 0), out); });
}

tvx_status tvx_perm_inverse(const tvx_perm* w, tvx_perm** out) {
  TVX_REQUIRE(w);
  TVX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new tvx_perm{w->w.inverse()};
    return TVX_OK;
  });
}

int tvx_perm_length(const tvx_perm* w) { return w ? thetavex::length(w->w) : -1; }

int tvx_perm_equal(const tvx_perm* a, const tvx_perm* b) {
  return a && b && a->w == b->w;
}

tvx_status tvx_triple_parse(const char* text, int n, tvx_triple** out) {
  TVX_REQUIRE(text);
  TVX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new tvx_triple{thetavex::parse_triple(text, n)};
    return TVX_OK;
  });
}

void tvx_triple_free(tvx_triple* t) { delete t; }

int tvx_triple_size(const tvx_triple* t) { return t ? t->t.size() : -1; }

tvx_status tvx_triple_to_string(const tvx_triple* t, char** out) {
  TVX_REQUIRE(t);
  TVX_REQUIRE(out);
  return guarded([&] { return give_string(t->t.to_string(), out); });
}

tvx_status tvx_triple_to_json(const tvx_triple* t, char** out) {
  TVX_REQUIRE(t);
  TVX_REQUIRE(out);
  return guarded([&] { return give_string(thetavex::triple_to_json(t->t), out); });
}

tvx_status tvx_triple_validate(const tvx_triple* t) {
  TVX_REQUIRE(t);
  return guarded([&] {
    const auto report = thetavex::validate(t->t);
    if (const auto* f = report.first_failure()) return fail(TVX_ERR_INVALID_TRIPLE, f->message());
    return TVX_OK;
  });
}

tvx_status tvx_construct(const tvx_triple* t, int n, tvx_perm** out) {
  TVX_REQUIRE(t);
  TVX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new tvx_perm{n > 0 ? thetavex::construct(t->t, n) : thetavex::construct(t->t)};
    return TVX_OK;
  });
}

tvx_status tvx_construction_json(const tvx_triple* t, int n, int pretty, char** out) {
  TVX_REQUIRE(t);
  TVX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto w = n > 0 ? thetavex::construct(t->t, n) : thetavex::construct(t->t);
    const auto inv = thetavex::construct_inverse(t->t, w.rank());
    *out = copy_string(thetavex::construction_to_json(t->t, w, inv, pretty != 0));
    return TVX_OK;
  });
}

tvx_status tvx_construct_inverse(const tvx_triple* t, int n, tvx_perm** out) {
  TVX_REQUIRE(t);
  TVX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new tvx_perm{n > 0 ? thetavex::construct_inverse(t->t, n)
                              : thetavex::construct_inverse(t->t)};
    return TVX_OK;
  });
}

tvx_status tvx_recover(const tvx_perm* w, tvx_triple** out) {
  TVX_REQUIRE(w);
  TVX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto verdict = thetavex::classify_by_triple(w->w);
    if (verdict.ok) *out = new tvx_triple{*verdict.triple};
    return TVX_OK;
  });
}

tvx_status tvx_classify(const tvx_perm* w, unsigned flags, int* theta_vexillary, char** report) {
  TVX_REQUIRE(w);
  TVX_REQUIRE(theta_vexillary);
  return guarded([&] {
    const auto mode = (flags & TVX_CLASSIFY_FULL) ? thetavex::ClassifyMode::Full
                                                  : thetavex::ClassifyMode::Quick;
    const auto r = thetavex::classify(w->w, mode);
    *theta_vexillary = r.theta_vexillary() ? 1 : 0;
    if (!report) return TVX_OK;
    if (flags & TVX_OUTPUT_JSON) {
      return give_string(thetavex::report_to_json(r, (flags & TVX_OUTPUT_PRETTY) != 0), report);
    }
    return give_string(thetavex::report_to_text(r, (flags & TVX_OUTPUT_OVERLINE) != 0), report);
  });
}

tvx_status tvx_render(const tvx_perm* w, unsigned flags, char** out) {
  TVX_REQUIRE(w);
  TVX_REQUIRE(out);
  return guarded([&] {
    const auto r = thetavex::classify(w->w, thetavex::ClassifyMode::Quick);
    thetavex::RenderOptions opts;
    opts.show_crosses = (flags & TVX_RENDER_CROSSES) != 0;
    opts.show_ranks = (flags & TVX_RENDER_RANKS) != 0;
    opts.overline = (flags & TVX_OUTPUT_OVERLINE) != 0;
    return give_string(thetavex::render_diagram(w->w, r.corners, opts), out);
  });
}

tvx_status tvx_diagram_json(const tvx_perm* w, int pretty, char** out) {
  TVX_REQUIRE(w);
  TVX_REQUIRE(out);
  return guarded([&] {
    const auto r = thetavex::classify(w->w, thetavex::ClassifyMode::Quick);
    return give_string(thetavex::diagram_to_json(w->w, r.corners, pretty != 0), out);
  });
}

tvx_status tvx_verify(int n, unsigned jobs, int allow_large, tvx_summary* out,
                      tvx_window_cb on_mismatch, void* user) {
  TVX_REQUIRE(out);
  return guarded([&] {
    const auto s = thetavex::verify_equivalence(n, jobs, allow_large != 0);
    out->n = s.n;
    out->total = s.total;
    out->theta_vexillary = s.theta_vexillary;
    out->mismatches = s.mismatches.size();
    if (on_mismatch) {
      for (const auto& w : s.mismatches) {
        if (emit_window(on_mismatch, user, w)) break;
      }
    }
    return TVX_OK;
  });
}

tvx_status tvx_enumerate(int n, unsigned jobs, int allow_large, tvx_window_cb cb, void* user) {
  TVX_REQUIRE(cb);
  return guarded([&] {
    thetavex::for_each_theta_vexillary(n, jobs, allow_large != 0,
                                       [&](const thetavex::SignedPermutation& w) {
                                         return emit_window(cb, user, w) == 0;
                                       });
    return TVX_OK;
  });
}

}  // extern "C"
