#include "ybgeo.h"

#include "core/expr.hpp"
#include "core/verify.hpp"
#include <cstring>

using namespace ybgeo;

struct ybgeo_rmatrix {
	GeomRMatrix v;
};
struct ybgeo_cbcst {
	CBCST v;
};
struct ybgeo_quantum {
	RMatrixQ v;
};

namespace {

char *dup_string(const std::string &s)
{
	char *out = (char *)std::malloc(s.size() + 1);
	if (out)
		std::memcpy(out, s.c_str(), s.size() + 1);
	return out;
}

void set_error(char **error_out, const std::string &msg)
{
	if (error_out)
		*error_out = dup_string(msg);
}

template <class F> ybgeo_status guard(char **error_out, F &&f)
{
	if (error_out)
		*error_out = nullptr;
	try {
		return f();
	} catch (const Error &e) {
		set_error(error_out, e.what());
		return YBGEO_INVALID_INPUT;
	} catch (const std::exception &e) {
		set_error(error_out, e.what());
		return YBGEO_ERROR;
	}
}

ybgeo_status report_result(const Report &rep, const std::string &command,
                           char **report_json_out)
{
	if (report_json_out)
		*report_json_out = dup_string(report_to_json(rep, command).dump(2));
	return rep.pass() ? YBGEO_OK : YBGEO_CHECK_FAILED;
}

} // namespace

extern "C" {

const char *ybgeo_version(void) { return "1.0.0"; }

void ybgeo_string_free(char *s) { std::free(s); }
void ybgeo_rmatrix_free(ybgeo_rmatrix *r) { delete r; }
void ybgeo_cbcst_free(ybgeo_cbcst *c) { delete c; }
void ybgeo_quantum_free(ybgeo_quantum *q) { delete q; }

ybgeo_status ybgeo_rmatrix_parse(const char *json_text, ybgeo_rmatrix **out,
                                 char **error_out)
{
	return guard(error_out, [&] {
		require(json_text && out, "null argument");
		*out = new ybgeo_rmatrix{rmatrix_from_json(parse_json_text(json_text))};
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_rmatrix_example5(ybgeo_rmatrix **out, char **error_out)
{
	return guard(error_out, [&] {
		require(out, "null argument");
		*out = new ybgeo_rmatrix{example5::rmatrix()};
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_rmatrix_example5_rack(ybgeo_rmatrix **out, char **error_out)
{
	return guard(error_out, [&] {
		require(out, "null argument");
		*out = new ybgeo_rmatrix{example5::rack_rmatrix()};
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_rmatrix_to_json(const ybgeo_rmatrix *r, char **json_out,
                                   char **error_out)
{
	return guard(error_out, [&] {
		require(r && json_out, "null argument");
		*json_out = dup_string(rmatrix_to_json(r->v).dump(2));
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_rmatrix_specialize(const ybgeo_rmatrix *r, const char *eps_value,
                                      ybgeo_rmatrix **out, char **error_out)
{
	return guard(error_out, [&] {
		require(r && eps_value && out, "null argument");
		*out = new ybgeo_rmatrix{r->v.specialize_eps(parse_rat(eps_value))};
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_rmatrix_minimize(const ybgeo_rmatrix *r, ybgeo_rmatrix **out,
                                    char **error_out)
{
	return guard(error_out, [&] {
		require(r && out, "null argument");
		*out = new ybgeo_rmatrix{minimize(r->v)};
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_rmatrix_check_cybe(const ybgeo_rmatrix *r, char **report_json_out,
                                      char **error_out)
{
	return guard(error_out, [&] {
		require(r, "null argument");
		return report_result(check_cybe(r->v), "check-cybe", report_json_out);
	});
}

ybgeo_status ybgeo_rmatrix_check_unitarity(const ybgeo_rmatrix *r, int *result_out,
                                           char **error_out)
{
	return guard(error_out, [&] {
		require(r && result_out, "null argument");
		*result_out = check_unitarity(r->v) ? 1 : 0;
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_cbcst_build(const ybgeo_rmatrix *r, ybgeo_cbcst **out,
                               char **error_out)
{
	return guard(error_out, [&] {
		require(r && out, "null argument");
		*out = new ybgeo_cbcst{from_rmatrix(r->v).cbcst};
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_cbcst_parse(const char *json_text, ybgeo_cbcst **out,
                               char **error_out)
{
	return guard(error_out, [&] {
		require(json_text && out, "null argument");
		*out = new ybgeo_cbcst{cbcst_from_json(parse_json_text(json_text))};
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_cbcst_to_json(const ybgeo_cbcst *c, char **json_out,
                                 char **error_out)
{
	return guard(error_out, [&] {
		require(c && json_out, "null argument");
		*json_out = dup_string(cbcst_to_json(c->v).dump(2));
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_cbcst_validate(const ybgeo_cbcst *c, char **report_json_out,
                                  char **error_out)
{
	return guard(error_out, [&] {
		require(c, "null argument");
		return report_result(validate(c->v), "validate", report_json_out);
	});
}

ybgeo_status ybgeo_cbcst_to_rmatrix(const ybgeo_cbcst *c, ybgeo_rmatrix **out,
                                    char **error_out)
{
	return guard(error_out, [&] {
		require(c && out, "null argument");
		*out = new ybgeo_rmatrix{to_rmatrix(c->v)};
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_quantize(const ybgeo_cbcst *c, int order, ybgeo_quantum **out,
                            char **error_out)
{
	return guard(error_out, [&] {
		require(c && out, "null argument");
		*out = new ybgeo_quantum{quantize(c->v, order)};
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_quantum_to_json(const ybgeo_quantum *q, char **json_out,
                                   char **error_out)
{
	return guard(error_out, [&] {
		require(q && json_out, "null argument");
		*json_out = dup_string(rseries_to_json(q->v).dump(2));
		return YBGEO_OK;
	});
}

ybgeo_status ybgeo_quantum_check_braid(const ybgeo_quantum *q, int flip_variant,
                                       char **report_json_out, char **error_out)
{
	return guard(error_out, [&] {
		require(q, "null argument");
		return report_result(check_braid(q->v, flip_variant != 0), "check-braid",
		                     report_json_out);
	});
}

ybgeo_status ybgeo_quantum_check_unitarity(const ybgeo_quantum *q,
                                           char **report_json_out, char **error_out)
{
	return guard(error_out, [&] {
		require(q, "null argument");
		return report_result(quantum_unitarity_report(q->v), "check-unitarity",
		                     report_json_out);
	});
}

ybgeo_status ybgeo_quantum_classical_limit(const ybgeo_quantum *q,
                                           const ybgeo_rmatrix *r,
                                           char **report_json_out, char **error_out)
{
	return guard(error_out, [&] {
		require(q && r, "null argument");
		return report_result(check_classical_limit(q->v, r->v), "classical-limit",
		                     report_json_out);
	});
}

ybgeo_status ybgeo_quantum_match_closed_forms(const ybgeo_quantum *q,
                                              const char *forms_json,
                                              char **report_json_out, char **error_out)
{
	return guard(error_out, [&] {
		require(q && forms_json, "null argument");
		ClosedForms cf = closed_forms_from_json(parse_json_text(forms_json));
		return report_result(match_closed_forms(q->v, cf), "closed-forms",
		                     report_json_out);
	});
}

ybgeo_status ybgeo_verify_example5(int order, const char *eps_mode, int corrupt,
                                   char **report_json_out, char **error_out)
{
	return guard(error_out, [&] {
		std::optional<Rat> eps;
		if (eps_mode && std::strcmp(eps_mode, "symbolic") != 0)
			eps = parse_rat(eps_mode);
		Report rep = verify_example5(order, eps, corrupt != 0);
		return report_result(rep, "verify-example5", report_json_out);
	});
}

} // extern "C"
