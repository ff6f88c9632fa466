#include "garank/garank.h"

#include <cstring>
#include <string>

#include "core/charpoly.hpp"
#include "core/expr.hpp"
#include "core/json_io.hpp"
#include "core/matrep.hpp"
#include "core/rank.hpp"
#include "core/verify.hpp"

using namespace garank;

struct garank_mv {
  AnyMultivector value;
};

namespace {

thread_local std::string g_last_error;

garank_status status_of(errc code) {
  switch (code) {
    case errc::invalid_argument: return GARANK_ERR_INVALID_ARGUMENT;
    case errc::parse_error: return GARANK_ERR_PARSE;
    case errc::signature_mismatch: return GARANK_ERR_SIGNATURE_MISMATCH;
    case errc::mode_mismatch: return GARANK_ERR_MODE_MISMATCH;
    case errc::out_of_range: return GARANK_ERR_OUT_OF_RANGE;
    case errc::singular: return GARANK_ERR_SINGULAR;
    case errc::not_in_image: return GARANK_ERR_NOT_IN_IMAGE;
    case errc::unsupported_mode: return GARANK_ERR_UNSUPPORTED_MODE;
    case errc::not_normal: return GARANK_ERR_NOT_NORMAL;
    case errc::numeric_breakdown: return GARANK_ERR_NUMERIC;
    case errc::json_error: return GARANK_ERR_JSON;
    default: return GARANK_ERR_INTERNAL;
  }
}

template <class Fn>
garank_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GARANK_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GARANK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return GARANK_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) fail(errc::invalid_argument, what);
}

Mode mode_of(garank_mode mode) {
  if (mode != GARANK_MODE_FLOAT && mode != GARANK_MODE_EXACT)
    fail(errc::invalid_argument, "bad mode value");
  return mode == GARANK_MODE_EXACT ? Mode::exact : Mode::floating;
}

double rank_tol(double tol) { return tol < 0 ? kDefaultRankTol : tol; }

template <class RankFn>
garank_status rank_entry(const garank_mv* m, double tol, int* rank_out, char** result_json,
                         RankFn&& fn) {
  return guarded([&] {
    require(m && rank_out, "arguments must be non-null");
    RankResult res = m->value.visit([&](const auto& mv) { return fn(mv, rank_tol(tol)); });
    *rank_out = res.rank;
    if (result_json) *result_json = dup_string(rank_result_to_json(res));
  });
}

void require_same_mode(const garank_mv* a, const garank_mv* b) {
  if (a->value.mode() != b->value.mode())
    fail(errc::mode_mismatch, "operands use different coefficient modes");
}

GaussianRational exact_scalar_from(const char* re, const char* im) {
  return {rational_from_string(re ? re : "0"), rational_from_string(im ? im : "0")};
}

}  // namespace

extern "C" {

const char* garank_version(void) { return "1.0.0"; }

const char* garank_status_name(garank_status status) {
  switch (status) {
    case GARANK_OK: return "ok";
    case GARANK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GARANK_ERR_PARSE: return "parse error";
    case GARANK_ERR_SIGNATURE_MISMATCH: return "signature mismatch";
    case GARANK_ERR_MODE_MISMATCH: return "mode mismatch";
    case GARANK_ERR_OUT_OF_RANGE: return "out of range";
    case GARANK_ERR_SINGULAR: return "singular multivector";
    case GARANK_ERR_NOT_IN_IMAGE: return "matrix not in the representation image";
    case GARANK_ERR_UNSUPPORTED_MODE: return "operation unsupported in this mode";
    case GARANK_ERR_NOT_NORMAL: return "multivector is not normal";
    case GARANK_ERR_NUMERIC: return "numerical breakdown";
    case GARANK_ERR_JSON: return "JSON error";
    default: return "internal error";
  }
}

const char* garank_last_error(void) { return g_last_error.c_str(); }

void garank_string_free(char* s) { delete[] s; }

void garank_mv_free(garank_mv* m) { delete m; }

garank_status garank_mv_parse(int p, int q, garank_mode mode, const char* text, garank_mv** out) {
  return guarded([&] {
    require(text && out, "text and out must be non-null");
    Signature sig(p, q);
    ExprPtr expr = parse_expression(text, sig);
    *out = new garank_mv{evaluate(expr, sig, mode_of(mode))};
  });
}

garank_status garank_mv_from_json(const char* json, garank_mv** out) {
  return guarded([&] {
    require(json && out, "json and out must be non-null");
    *out = new garank_mv{multivector_from_json(json)};
  });
}

garank_status garank_mv_zero(int p, int q, garank_mode mode, garank_mv** out) {
  return guarded([&] {
    require(out != nullptr, "out must be non-null");
    Signature sig(p, q);
    if (mode_of(mode) == Mode::exact)
      *out = new garank_mv{AnyMultivector(MvExact::zero(sig))};
    else
      *out = new garank_mv{AnyMultivector(MvFloat::zero(sig))};
  });
}

garank_status garank_mv_signature(const garank_mv* m, int* p, int* q) {
  return guarded([&] {
    require(m && p && q, "arguments must be non-null");
    *p = m->value.signature().p();
    *q = m->value.signature().q();
  });
}

garank_status garank_mv_mode(const garank_mv* m, garank_mode* mode) {
  return guarded([&] {
    require(m && mode, "arguments must be non-null");
    *mode = m->value.mode() == Mode::exact ? GARANK_MODE_EXACT : GARANK_MODE_FLOAT;
  });
}

garank_status garank_mv_term_count(const garank_mv* m, size_t* count) {
  return guarded([&] {
    require(m && count, "arguments must be non-null");
    *count = m->value.visit([](const auto& mv) { return mv.terms().size(); });
  });
}

garank_status garank_mv_to_json(const garank_mv* m, char** json) {
  return guarded([&] {
    require(m && json, "arguments must be non-null");
    *json = dup_string(multivector_to_json(m->value));
  });
}

garank_status garank_mv_to_text(const garank_mv* m, int significant_digits, char** text) {
  return guarded([&] {
    require(m && text, "arguments must be non-null");
    require(significant_digits >= 1 && significant_digits <= 17, "digits must be in 1..17");
    *text = dup_string(to_text(m->value, significant_digits));
  });
}

garank_status garank_mv_equal(const garank_mv* a, const garank_mv* b, int* equal) {
  return guarded([&] {
    require(a && b && equal, "arguments must be non-null");
    require_same_mode(a, b);
    if (a->value.mode() == Mode::exact)
      *equal = a->value.as_exact() == b->value.as_exact() ? 1 : 0;
    else
      *equal = a->value.as_float() == b->value.as_float() ? 1 : 0;
  });
}

garank_status garank_mv_add(const garank_mv* a, const garank_mv* b, garank_mv** out) {
  return guarded([&] {
    require(a && b && out, "arguments must be non-null");
    require_same_mode(a, b);
    if (a->value.mode() == Mode::exact)
      *out = new garank_mv{AnyMultivector(a->value.as_exact() + b->value.as_exact())};
    else
      *out = new garank_mv{AnyMultivector(a->value.as_float() + b->value.as_float())};
  });
}

garank_status garank_mv_sub(const garank_mv* a, const garank_mv* b, garank_mv** out) {
  return guarded([&] {
    require(a && b && out, "arguments must be non-null");
    require_same_mode(a, b);
    if (a->value.mode() == Mode::exact)
      *out = new garank_mv{AnyMultivector(a->value.as_exact() - b->value.as_exact())};
    else
      *out = new garank_mv{AnyMultivector(a->value.as_float() - b->value.as_float())};
  });
}

garank_status garank_mv_product(const garank_mv* a, const garank_mv* b, garank_mv** out) {
  return guarded([&] {
    require(a && b && out, "arguments must be non-null");
    require_same_mode(a, b);
    if (a->value.mode() == Mode::exact)
      *out = new garank_mv{AnyMultivector(a->value.as_exact() * b->value.as_exact())};
    else
      *out = new garank_mv{AnyMultivector(a->value.as_float() * b->value.as_float())};
  });
}

garank_status garank_mv_scale(const garank_mv* m, double re, double im, garank_mv** out) {
  return guarded([&] {
    require(m && out, "arguments must be non-null");
    if (m->value.mode() == Mode::exact)
      fail(errc::mode_mismatch, "use garank_mv_scale_rational for exact-mode values");
    *out = new garank_mv{AnyMultivector(m->value.as_float().scaled(FloatComplex{re, im}))};
  });
}

garank_status garank_mv_scale_rational(const garank_mv* m, const char* re, const char* im,
                                       garank_mv** out) {
  return guarded([&] {
    require(m && out, "arguments must be non-null");
    GaussianRational c = exact_scalar_from(re, im);
    if (m->value.mode() == Mode::exact) {
      *out = new garank_mv{AnyMultivector(m->value.as_exact().scaled(c))};
    } else {
      FloatComplex cf{c.re.get_d(), c.im.get_d()};
      *out = new garank_mv{AnyMultivector(m->value.as_float().scaled(cf))};
    }
  });
}

garank_status garank_mv_conjugate(const garank_mv* m, garank_conjugation kind, garank_mv** out) {
  return guarded([&] {
    require(m && out, "arguments must be non-null");
    m->value.visit([&](const auto& mv) {
      auto apply = [&](auto&& result) { *out = new garank_mv{AnyMultivector(result)}; };
      switch (kind) {
        case GARANK_CONJ_GRADE_INVOLUTION: apply(mv.grade_involution()); break;
        case GARANK_CONJ_REVERSION: apply(mv.reversion()); break;
        case GARANK_CONJ_COMPLEX: apply(mv.complex_conjugation()); break;
        case GARANK_CONJ_HERMITIAN: apply(mv.hermitian_conjugation()); break;
        case GARANK_CONJ_TRIANGLE: apply(mv.triangle_conjugation()); break;
        default: fail(errc::invalid_argument, "bad conjugation kind");
      }
    });
  });
}

garank_status garank_mv_grade_projection(const garank_mv* m, int grade, garank_mv** out) {
  return guarded([&] {
    require(m && out, "arguments must be non-null");
    m->value.visit(
        [&](const auto& mv) { *out = new garank_mv{AnyMultivector(mv.grade_projection(grade))}; });
  });
}

garank_status garank_mv_scalar_product(const garank_mv* a, const garank_mv* b, char** json) {
  return guarded([&] {
    require(a && b && json, "arguments must be non-null");
    require_same_mode(a, b);
    if (a->value.mode() == Mode::exact)
      *json = dup_string(scalar_to_json(scalar_product(a->value.as_exact(), b->value.as_exact())));
    else
      *json = dup_string(scalar_to_json(scalar_product(a->value.as_float(), b->value.as_float())));
  });
}

garank_status garank_mv_norm(const garank_mv* m, double* norm) {
  return guarded([&] {
    require(m && norm, "arguments must be non-null");
    if (m->value.mode() == Mode::exact)
      fail(errc::unsupported_mode,
           "norm is a float-mode operation; exact mode exposes the squared norm");
    *norm = m->value.as_float().norm_approx();
  });
}

garank_status garank_mv_norm_squared(const garank_mv* m, char** json) {
  return guarded([&] {
    require(m && json, "arguments must be non-null");
    if (m->value.mode() == Mode::exact) {
      *json = dup_string('"' + rational_to_string(m->value.as_exact().norm_squared()) + '"');
    } else {
      const double n = m->value.as_float().norm_approx();
      *json = dup_string(scalar_to_json(FloatComplex{n * n, 0.0}));
    }
  });
}

garank_status garank_mv_is_unitary(const garank_mv* m, double tol, int* unitary) {
  return guarded([&] {
    require(m && unitary, "arguments must be non-null");
    *unitary =
        m->value.visit([&](const auto& mv) { return is_unitary(mv, rank_tol(tol)) ? 1 : 0; });
  });
}

garank_status garank_mv_is_normal(const garank_mv* m, double tol, int* normal) {
  return guarded([&] {
    require(m && normal, "arguments must be non-null");
    *normal = m->value.visit([&](const auto& mv) { return is_normal(mv, rank_tol(tol)) ? 1 : 0; });
  });
}

garank_status garank_mv_charpoly(const garank_mv* m, char** json) {
  return guarded([&] {
    require(m && json, "arguments must be non-null");
    m->value.visit(
        [&](const auto& mv) { *json = dup_string(charpoly_to_json(faddeev_leverrier(mv))); });
  });
}

garank_status garank_mv_det(const garank_mv* m, char** json) {
  return guarded([&] {
    require(m && json, "arguments must be non-null");
    m->value.visit([&](const auto& mv) { *json = dup_string(scalar_to_json(determinant(mv))); });
  });
}

garank_status garank_mv_inverse(const garank_mv* m, garank_mv** out) {
  return guarded([&] {
    require(m && out, "arguments must be non-null");
    m->value.visit([&](const auto& mv) { *out = new garank_mv{AnyMultivector(inverse(mv))}; });
  });
}

garank_status garank_mv_rank(const garank_mv* m, double tol, int* rank_out, char** result_json) {
  return rank_entry(m, tol, rank_out, result_json,
                    [](const auto& mv, double t) { return rank(mv, t); });
}

garank_status garank_mv_rank_general(const garank_mv* m, double tol, int* rank_out,
                                     char** result_json) {
  return rank_entry(m, tol, rank_out, result_json,
                    [](const auto& mv, double t) { return rank_general(mv, t); });
}

garank_status garank_mv_rank_normal(const garank_mv* m, double tol, int* rank_out,
                                    char** result_json) {
  return rank_entry(m, tol, rank_out, result_json,
                    [](const auto& mv, double t) { return rank_normal(mv, t); });
}

garank_status garank_mv_rank_small_dim(const garank_mv* m, double tol, int* rank_out,
                                       char** result_json) {
  return rank_entry(m, tol, rank_out, result_json,
                    [](const auto& mv, double t) { return rank_small_dim(mv, t); });
}

garank_status garank_mv_represent(const garank_mv* m, char** matrix_json) {
  return guarded([&] {
    require(m && matrix_json, "arguments must be non-null");
    m->value.visit([&](const auto& mv) {
      using S = typename std::decay_t<decltype(mv)>::scalar_type;
      auto rep = Representation<S>::build(mv.signature());
      *matrix_json = dup_string(matrix_to_json(represent(rep, mv)));
    });
  });
}

garank_status garank_unrepresent(int p, int q, garank_mode mode, const char* matrix_json,
                                 garank_mv** out) {
  return guarded([&] {
    require(matrix_json && out, "arguments must be non-null");
    Signature sig(p, q);
    if (mode_of(mode) == Mode::exact) {
      auto rep = Representation<GaussianRational>::build(sig);
      *out = new garank_mv{
          AnyMultivector(unrepresent(rep, matrix_from_json_exact(matrix_json)))};
    } else {
      auto rep = Representation<FloatComplex>::build(sig);
      *out = new garank_mv{
          AnyMultivector(unrepresent(rep, matrix_from_json_float(matrix_json)))};
    }
  });
}

garank_status garank_mv_svd(const garank_mv* m, garank_mv** u, garank_mv** sigma, garank_mv** v) {
  return guarded([&] {
    require(m && u && sigma && v, "arguments must be non-null");
    if (m->value.mode() == Mode::exact)
      fail(errc::unsupported_mode, "SVD is unsupported in exact mode");
    auto rep = Representation<FloatComplex>::build(m->value.signature());
    GASvd<FloatComplex> f = svd_ga(rep, m->value.as_float());
    *u = new garank_mv{AnyMultivector(std::move(f.u))};
    *sigma = new garank_mv{AnyMultivector(std::move(f.sigma))};
    *v = new garank_mv{AnyMultivector(std::move(f.v))};
  });
}

garank_status garank_mv_verify(const garank_mv* m, double tol, int* ok, char** report_json) {
  return guarded([&] {
    require(m && ok, "arguments must be non-null");
    VerifyReport report = verify_against_oracle(m->value, rank_tol(tol));
    *ok = report.ok ? 1 : 0;
    if (report_json) *report_json = dup_string(verify_report_to_json(report));
  });
}

}  // extern "C"
