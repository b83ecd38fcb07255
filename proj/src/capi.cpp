#include "tspp5.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "congr.hpp"
#include "dseq.hpp"
#include "errors.hpp"
#include "etaq.hpp"
#include "padic.hpp"
#include "partitions.hpp"
#include "report.hpp"
#include "ubasis.hpp"

using namespace tspp5;

struct tspp5_series {
    LaurentSeries value;
};
struct tspp5_table {
    CountTable value;
};
struct tspp5_matrix {
    CoeffMatrix value;
};
struct tspp5_dseq {
    DSequence value;
};
struct tspp5_report {
    Report value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int status, const char* what) {
    g_last_error = what;
    return status;
}

// Runs fn, translating the library's exception taxonomy into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return TSPP5_OK;
    } catch (const PrecisionExceeded& e) {
        return fail(TSPP5_EPRECISION, e.what());
    } catch (const NonUnitLeadingCoefficient& e) {
        return fail(TSPP5_ENONUNIT, e.what());
    } catch (const DecompositionResidual& e) {
        return fail(TSPP5_ERESIDUAL, e.what());
    } catch (const MissingPriorRows& e) {
        return fail(TSPP5_EMISSINGROWS, e.what());
    } catch (const NonIntegralNewtonStep& e) {
        return fail(TSPP5_ENONINTEGRAL, e.what());
    } catch (const InternalIdentityFailure& e) {
        return fail(TSPP5_EIDENTITY, e.what());
    } catch (const PrecisionBudgetExceeded& e) {
        return fail(TSPP5_EBUDGET, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(TSPP5_EUSAGE, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(TSPP5_ENOMEM, e.what());
    } catch (const std::exception& e) {
        return fail(TSPP5_EINTERNAL, e.what());
    }
}

template <typename Handle, typename Fn>
int make_handle(Handle** out, Fn&& fn) {
    if (!out) return fail(TSPP5_EUSAGE, "null out-parameter");
    *out = nullptr;
    return guarded([&] { *out = new Handle{fn()}; });
}

int out_string(char** out, const std::string& s) {
    if (!out) return fail(TSPP5_EUSAGE, "null out-parameter");
    *out = dup_string(s);
    return *out ? TSPP5_OK : fail(TSPP5_ENOMEM, "allocation failed");
}

int make_report(tspp5_report** out, Report (*fn)(long), long arg) {
    return make_handle(out, [&] { return fn(arg); });
}

} // namespace

extern "C" {

const char* tspp5_version(void) {
    return "1.0.0";
}

const char* tspp5_status_name(int status) {
    switch (status) {
    case TSPP5_OK: return "ok";
    case TSPP5_EUSAGE: return "usage-error";
    case TSPP5_EPRECISION: return "precision-exceeded";
    case TSPP5_ENONUNIT: return "non-unit-leading-coefficient";
    case TSPP5_ERESIDUAL: return "decomposition-residual";
    case TSPP5_EMISSINGROWS: return "missing-prior-rows";
    case TSPP5_ENONINTEGRAL: return "non-integral-newton-step";
    case TSPP5_EIDENTITY: return "internal-identity-failure";
    case TSPP5_EBUDGET: return "precision-budget-exceeded";
    case TSPP5_ENOMEM: return "out-of-memory";
    default: return "internal-error";
    }
}

const char* tspp5_last_error(void) {
    return g_last_error.c_str();
}

void tspp5_string_free(char* s) {
    std::free(s);
}

/* ---- series ----------------------------------------------------------- */

int tspp5_series_named(const char* name, long prec, tspp5_series** out) {
    if (!name) return fail(TSPP5_EUSAGE, "null name");
    std::string n = name;
    return make_handle(out, [&] {
        if (n == "E") return euler_product(prec);
        return named_series(n, prec);
    });
}

int tspp5_series_add(const tspp5_series* f, const tspp5_series* g, tspp5_series** out) {
    if (!f || !g) return fail(TSPP5_EUSAGE, "null series handle");
    return make_handle(out, [&] { return add(f->value, g->value); });
}

int tspp5_series_mul(const tspp5_series* f, const tspp5_series* g, tspp5_series** out) {
    if (!f || !g) return fail(TSPP5_EUSAGE, "null series handle");
    return make_handle(out, [&] { return mul(f->value, g->value); });
}

int tspp5_series_invert(const tspp5_series* f, tspp5_series** out) {
    if (!f) return fail(TSPP5_EUSAGE, "null series handle");
    return make_handle(out, [&] { return invert(f->value); });
}

int tspp5_series_pow(const tspp5_series* f, long k, tspp5_series** out) {
    if (!f) return fail(TSPP5_EUSAGE, "null series handle");
    return make_handle(out, [&] { return pow(f->value, k); });
}

int tspp5_series_scale(const tspp5_series* f, long t, tspp5_series** out) {
    if (!f) return fail(TSPP5_EUSAGE, "null series handle");
    return make_handle(out, [&] { return scale(f->value, t); });
}

int tspp5_series_extract(const tspp5_series* f, long r, long m, tspp5_series** out) {
    if (!f) return fail(TSPP5_EUSAGE, "null series handle");
    return make_handle(out, [&] { return extract_progression(f->value, r, m); });
}

int tspp5_series_reduce_mod(const tspp5_series* f, const char* modulus, tspp5_series** out) {
    if (!f || !modulus) return fail(TSPP5_EUSAGE, "null argument");
    return make_handle(out, [&] { return reduce_mod(f->value, Int(modulus)); });
}

long tspp5_series_min_exp(const tspp5_series* f) {
    return f ? f->value.min_exp() : 0;
}

long tspp5_series_prec(const tspp5_series* f) {
    return f ? f->value.prec() : 0;
}

int tspp5_series_coeff(const tspp5_series* f, long n, char** decimal_out) {
    if (!f) return fail(TSPP5_EUSAGE, "null series handle");
    std::string s;
    int rc = guarded([&] { s = f->value.coeff(n).get_str(); });
    if (rc != TSPP5_OK) return rc;
    return out_string(decimal_out, s);
}

int tspp5_series_json(const tspp5_series* f, char** json_out) {
    if (!f) return fail(TSPP5_EUSAGE, "null series handle");
    return out_string(json_out, f->value.to_json());
}

void tspp5_series_free(tspp5_series* f) {
    delete f;
}

/* ---- counting tables --------------------------------------------------- */

int tspp5_table_compute(char kind, long up_to, const char* modulus, tspp5_table** out) {
    if (kind != 's' && kind != 'g') return fail(TSPP5_EUSAGE, "kind must be 's' or 'g'");
    return make_handle(out, [&] {
        Int m = modulus ? Int(modulus) : Int(0);
        return kind == 's' ? s_table(up_to, m) : g_table(up_to, m);
    });
}

long tspp5_table_up_to(const tspp5_table* t) {
    return t ? t->value.up_to : -1;
}

int tspp5_table_value(const tspp5_table* t, long n, char** decimal_out) {
    if (!t) return fail(TSPP5_EUSAGE, "null table handle");
    std::string s;
    int rc = guarded([&] { s = t->value.at(n).get_str(); });
    if (rc != TSPP5_OK) return rc;
    return out_string(decimal_out, s);
}

void tspp5_table_free(tspp5_table* t) {
    delete t;
}

/* ---- matrices ----------------------------------------------------------- */

int tspp5_matrix_appendix(char kind, tspp5_matrix** out) {
    if (kind != 'a' && kind != 'b') return fail(TSPP5_EUSAGE, "kind must be 'a' or 'b'");
    return make_handle(out, [&] {
        auto [a, b] = appendix_rows();
        return kind == 'a' ? std::move(a) : std::move(b);
    });
}

int tspp5_matrix_compute(char kind, long rows, long prec, tspp5_matrix** out) {
    if (kind != 'a' && kind != 'b') return fail(TSPP5_EUSAGE, "kind must be 'a' or 'b'");
    if (rows < 1) return fail(TSPP5_EUSAGE, "rows must be >= 1");
    return make_handle(out, [&] {
        auto [a, b] = compute_base_rows(prec);
        CoeffMatrix m = kind == 'a' ? std::move(a) : std::move(b);
        if (rows > m.row_count()) extend_to(m, rows);
        else m.rows.resize(rows);
        return m;
    });
}

int tspp5_matrix_product_t(const tspp5_matrix* a, const tspp5_matrix* b, long i_max,
                           tspp5_matrix** out) {
    if (!a || !b) return fail(TSPP5_EUSAGE, "null matrix handle");
    return make_handle(out, [&] { return t_matrix(a->value, b->value, i_max); });
}

long tspp5_matrix_rows(const tspp5_matrix* m) {
    return m ? m->value.row_count() : 0;
}

int tspp5_matrix_entry(const tspp5_matrix* m, long i, long j, char** decimal_out) {
    if (!m) return fail(TSPP5_EUSAGE, "null matrix handle");
    std::string s;
    int rc = guarded([&] { s = m->value.entry(i, j).get_str(); });
    if (rc != TSPP5_OK) return rc;
    return out_string(decimal_out, s);
}

int tspp5_matrix_json(const tspp5_matrix* m, char** json_out) {
    if (!m) return fail(TSPP5_EUSAGE, "null matrix handle");
    return out_string(json_out, m->value.to_json());
}

void tspp5_matrix_free(tspp5_matrix* m) {
    delete m;
}

/* ---- d sequences -------------------------------------------------------- */

int tspp5_dseq_compute(long alpha, int via_t, tspp5_dseq** out) {
    return make_handle(out, [&] { return d_sequence(alpha, via_t != 0); });
}

long tspp5_dseq_alpha(const tspp5_dseq* d) {
    return d ? d->value.alpha : 0;
}

long tspp5_dseq_max_support(const tspp5_dseq* d) {
    return d ? d->value.max_support() : 0;
}

int tspp5_dseq_entry(const tspp5_dseq* d, long j, char** decimal_out) {
    if (!d) return fail(TSPP5_EUSAGE, "null sequence handle");
    std::string s;
    int rc = guarded([&] { s = d->value.entry(j).get_str(); });
    if (rc != TSPP5_OK) return rc;
    return out_string(decimal_out, s);
}

int tspp5_dseq_json(const tspp5_dseq* d, char** json_out) {
    if (!d) return fail(TSPP5_EUSAGE, "null sequence handle");
    return out_string(json_out, d->value.to_json());
}

void tspp5_dseq_free(tspp5_dseq* d) {
    delete d;
}

/* ---- verification ------------------------------------------------------- */

int tspp5_verify_fg(long up_to, tspp5_report** out) {
    return make_handle(out, [&] { return check_fg(up_to); });
}

int tspp5_verify_s_vanishing(long up_to, tspp5_report** out) {
    return make_handle(out, [&] { return check_mod3_vanishing(up_to); });
}

int tspp5_verify_appendix(long prec, tspp5_report** out) {
    return make_report(out, verify_appendix, prec);
}

int tspp5_verify_sigmas(long prec, tspp5_report** out) {
    return make_report(out, verify_sigmas, prec);
}

int tspp5_verify_recurrence(long i_lo, long i_hi, long prec, tspp5_report** out) {
    return make_handle(out, [&] { return verify_recurrence(i_lo, i_hi, prec); });
}

int tspp5_verify_paper_d(tspp5_report** out) {
    return make_handle(out, [&] { return verify_paper_d(); });
}

int tspp5_verify_thd(long alpha, long prec, tspp5_report** out) {
    return make_handle(out, [&] { return verify_thd(alpha, prec); });
}

int tspp5_verify_thgd(long alpha, long prec, tspp5_report** out) {
    return make_handle(out, [&] { return verify_thgd(alpha, prec); });
}

int tspp5_verify_bounds(char which, long i_max, long j_max, tspp5_report** out) {
    return make_handle(out, [&]() -> Report {
        switch (which) {
        case 'a': {
            auto [a, b] = appendix_rows();
            extend_to(a, i_max);
            return check_bound_a(a, i_max, j_max);
        }
        case 'b': {
            auto [a, b] = appendix_rows();
            extend_to(b, i_max);
            return check_bound_b(b, i_max, j_max);
        }
        case 't': {
            auto [a, b] = appendix_rows();
            extend_to(a, i_max);
            long k_max = 0;
            for (long i = 1; i <= i_max; ++i)
                if (!a.row(i).empty()) k_max = std::max(k_max, a.row(i).rbegin()->first);
            extend_to(b, k_max);
            return check_bound_t(t_matrix(a, b, i_max), a, i_max, j_max);
        }
        case 'd': {
            std::vector<DSequence> ds = {d_sequence(1), d_sequence(3), d_sequence(5)};
            return check_bound_d(ds, j_max);
        }
        default:
            throw std::invalid_argument("bounds: which must be a, b, t, or d");
        }
    });
}

int tspp5_verify_claim(char target, int modulus_exp, long stride, long offset, long n_max,
                       tspp5_report** out) {
    if (target != 's' && target != 'g') return fail(TSPP5_EUSAGE, "target must be 's' or 'g'");
    CongruenceClaim c{target == 's' ? TableKind::S : TableKind::G, modulus_exp, stride,
                      offset, n_max};
    return make_handle(out, [&] { return verify_claim(c); });
}

int tspp5_verify_main_reduction(int alpha, long n_max, tspp5_report** out) {
    return make_handle(out, [&] { return main_theorem_reduction(alpha, n_max); });
}

int tspp5_verify_phi_lemmas(long prec, tspp5_report** out) {
    return make_report(out, verify_phi_lemmas, prec);
}

int tspp5_verify_x_phi_mod5(long prec, tspp5_report** out) {
    return make_report(out, verify_x_phi_mod5, prec);
}

int tspp5_verify_phi_progressions(long prec, tspp5_report** out) {
    return make_report(out, verify_phi_progressions, prec);
}

int tspp5_verify_family125(long n_max, tspp5_report** out) {
    return make_report(out, verify_family_125, n_max);
}

int tspp5_verify_family625(long n_max, tspp5_report** out) {
    return make_report(out, verify_family_625, n_max);
}

int tspp5_report_passed(const tspp5_report* r) {
    return (r && r->value.passed()) ? 1 : 0;
}

long tspp5_report_elapsed_ms(const tspp5_report* r) {
    return r ? static_cast<long>(r->value.elapsed_ms) : 0;
}

int tspp5_report_name(const tspp5_report* r, char** out) {
    if (!r) return fail(TSPP5_EUSAGE, "null report handle");
    return out_string(out, r->value.name);
}

int tspp5_report_json(const tspp5_report* r, char** json_out) {
    if (!r) return fail(TSPP5_EUSAGE, "null report handle");
    return out_string(json_out, r->value.to_json());
}

int tspp5_report_summary(const tspp5_report* r, char** out) {
    if (!r) return fail(TSPP5_EUSAGE, "null report handle");
    return out_string(out, r->value.summary_line());
}

void tspp5_report_free(tspp5_report* r) {
    delete r;
}

} // extern "C"
