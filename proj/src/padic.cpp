#include "padic.hpp"

namespace tspp5 {
namespace {

std::string val_to_string(const Valuation& v) {
    return v.infinite ? "inf" : std::to_string(v.value);
}

// Tracks the tightest (pi - bound) slack seen in a row.
struct SlackTracker {
    bool seen = false;
    long slack = 0;
    long at = 0;

    void update(const Valuation& v, long bound, long j) {
        if (v.infinite) return;
        long s = v.value - bound;
        if (!seen || s < slack) {
            seen = true;
            slack = s;
            at = j;
        }
    }
    void record(Report& r, const std::string& key) const {
        if (seen)
            r.param(key, std::to_string(slack) + " at j=" + std::to_string(at));
    }
};

Report check_bound_ab(const CoeffMatrix& m, long i_max, long j_max, long numer_shift,
                      const char* name) {
    if (m.row_count() < i_max)
        throw MissingPriorRows("bounds: rows 1.." + std::to_string(i_max) + " required");
    Report r;
    r.name = name;
    ReportTimer timer(r);
    r.param("iMax", i_max);
    r.param("jMax", j_max);
    for (long i = 1; i <= i_max; ++i) {
        SlackTracker tracker;
        for (long j = 1; j <= j_max; ++j) {
            Int e = m.entry(i, j);
            Valuation v = val5(e);
            long bound = floor_div(5 * j - i + numer_shift, 6);
            tracker.update(v, bound, j);
            if (!v.at_least(bound))
                r.witness("(" + std::to_string(i) + "," + std::to_string(j) + ")",
                          "pi=" + val_to_string(v) + " < bound " + std::to_string(bound));
        }
        tracker.record(r, "minSlack.row" + std::to_string(i));
    }
    return r;
}

} // namespace

Valuation val5(const Int& n) {
    if (n == 0) return Valuation::inf();
    static const Int five = 5;
    Int reduced;
    mp_bitcnt_t e = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), five.get_mpz_t());
    return Valuation::finite(static_cast<long>(e));
}

Report check_bound_a(const CoeffMatrix& a, long i_max, long j_max) {
    return check_bound_ab(a, i_max, j_max, -1, "bounds-a");
}

Report check_bound_b(const CoeffMatrix& b, long i_max, long j_max) {
    return check_bound_ab(b, i_max, j_max, +2, "bounds-b");
}

Report check_bound_t(const CoeffMatrix& t, const CoeffMatrix& a, long i_max, long j_max) {
    if (t.row_count() < i_max || a.row_count() < i_max)
        throw MissingPriorRows("bounds-t: T and A rows 1.." + std::to_string(i_max) +
                               " required");
    Report r;
    r.name = "bounds-t";
    ReportTimer timer(r);
    r.param("iMax", i_max);
    r.param("jMax", j_max);
    for (long i = 1; i <= i_max; ++i) {
        SlackTracker tracker;
        for (long j = 1; j <= j_max; ++j) {
            Valuation v = val5(t.entry(i, j));
            bool have_bound = false;
            long bound = 0;
            for (const auto& [k, unused] : a.row(i)) {
                long candidate = floor_div(5 * k - i - 1, 6) + floor_div(5 * j - k + 2, 6);
                if (!have_bound || candidate < bound) {
                    bound = candidate;
                    have_bound = true;
                }
            }
            if (!have_bound) continue; // empty A row: t(i,*) vanishes identically
            tracker.update(v, bound, j);
            if (!v.at_least(bound))
                r.witness("(" + std::to_string(i) + "," + std::to_string(j) + ")",
                          "pi=" + val_to_string(v) + " < bound " + std::to_string(bound));
        }
        tracker.record(r, "minSlack.row" + std::to_string(i));
    }
    return r;
}

Report check_bound_d(const std::vector<DSequence>& ds, long j_max) {
    Report r;
    r.name = "bounds-d";
    ReportTimer timer(r);
    for (const DSequence& d : ds) {
        if (d.alpha % 2 == 0)
            throw std::invalid_argument("bounds-d: sequences must have odd index");
        long alpha = (d.alpha + 1) / 2; // d = d_{2 alpha - 1}
        long sweep = j_max > 0 ? j_max : d.max_support();
        r.param("d" + std::to_string(d.alpha) + ".jMax", sweep);
        SlackTracker tracker;
        for (long j = 1; j <= sweep; ++j) {
            Valuation v = val5(d.entry(j));
            long bound = alpha + floor_div(5 * j - 5, 6);
            tracker.update(v, bound, j);
            if (!v.at_least(bound))
                r.witness("d" + std::to_string(d.alpha) + "(" + std::to_string(j) + ")",
                          "pi=" + val_to_string(v) + " < bound " + std::to_string(bound));
        }
        tracker.record(r, "minSlack.d" + std::to_string(d.alpha));
    }
    return r;
}

} // namespace tspp5
