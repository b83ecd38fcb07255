#include "ubasis.hpp"

#include <sstream>

namespace tspp5 {
namespace {

// Appendix rows in print order; {0,0,0} is a literal printed zero.
using WRow = std::vector<WCoded>;

const std::vector<WRow>& appendix_a() {
    static const std::vector<WRow> rows = {
        {{+1, 0, 11}, {-1, 1, 12}, {+1, 2, 7}, {-1, 3, 2}, {+1, 3, 1}},
        {{-1, 0, 24}, {+1, 2, 27}, {-1, 2, 268}, {+1, 2, 1492}, {-1, 4, 212},
         {+1, 4, 507}, {-1, 5, 164}, {+1, 6, 34}, {-1, 7, 4}, {+1, 7, 1}},
        {{+1, 0, 21}, {-1, 1, 402}, {+1, 1, 9973}, {-1, 3, 4926}, {+1, 3, 37953},
         {-1, 4, 40482}, {+1, 6, 6318}, {-1, 6, 18564}, {+1, 6, 41548}, {-1, 8, 2826},
         {+1, 8, 3588}, {-1, 9, 656}, {+1, 10, 81}, {-1, 11, 6}, {+1, 11, 1}},
        {{-1, 0, 8}, {+1, 0, 2984}, {-1, 2, 6568}, {+1, 2, 155979}, {-1, 3, 433696},
         {+1, 4, 812908}, {-1, 5, 1110256}, {+1, 5, 5790676}, {-1, 7, 950272},
         {+1, 7, 3122868}, {-1, 8, 1660784}, {+1, 11, 28687}, {-1, 10, 250848},
         {+1, 10, 352244}, {-1, 12, 15632}, {+1, 12, 13354}, {-1, 13, 1688},
         {+1, 14, 148}, {-1, 15, 8}, {+1, 15, 1}},
        {{+1, 0, 1}, {-1, 2, 106}, {+1, 2, 12651}, {-1, 3, 108424}, {+1, 4, 502703},
         {-1, 5, 1507426}, {+1, 5, 16113147}, {-1, 7, 5213554}, {+1, 7, 33184623},
         {-1, 9, 6827206}, {+1, 10, 5779831}, {-1, 11, 4077512}, {+1, 10, 60408822},
         {-1, 12, 6040498}, {+1, 12, 12754148}, {-1, 13, 4540118}, {+1, 15, 271053},
         {-1, 15, 336256}, {+1, 15, 342131}, {-1, 17, 11204}, {+1, 17, 7181},
         {-1, 18, 692}, {+1, 19, 47}, {-1, 20, 2}, {+1, 19, 1}},
    };
    return rows;
}

const std::vector<WRow>& appendix_b() {
    static const std::vector<WRow> rows = {
        {{-1, 1, 4}, {+1, 1, 61}, {-1, 2, 59}, {+1, 3, 31}, {-1, 4, 9}, {+1, 5, 1}},
        {{+1, 0, 24}, {-1, 1, 292}, {+1, 2, 952}, {-1, 3, 1531}, {+1, 4, 1517},
         {-1, 6, 202}, {+1, 5, 2331}, {-1, 6, 744}, {+1, 7, 156}, {-1, 8, 19},
         {+1, 9, 1}},
        {{-1, 0, 9}, {+1, 1, 541}, {-1, 2, 4383}, {+1, 4, 3064}, {-1, 4, 31268},
         {+1, 5, 42767}, {-1, 5, 210711}, {+1, 6, 155754}, {-1, 7, 88226},
         {+1, 8, 38579}, {-1, 9, 12961}, {+1, 9, 16426}, {-1, 10, 3029},
         {+1, 11, 381}, {-1, 12, 29}, {+1, 13, 1}},
        {{+1, 0, 1}, {-1, 1, 537}, {+1, 2, 10199}, {-1, 3, 68823}, {+1, 4, 250893},
         {-1, 5, 590573}, {+1, 5, 4938949}, {-1, 6, 6215846}, {+1, 7, 6103534},
         {-1, 8, 4786201}, {+1, 8, 15204111}, {-1, 10, 1577357}, {+1, 10, 3347006},
         {-1, 11, 1158111}, {+1, 12, 323711}, {-1, 13, 71907}, {+1, 13, 61846},
         {-1, 14, 7914}, {+1, 15, 706}, {-1, 16, 39}, {+1, 17, 1}},
        {{0, 0, 0}, {+1, 1, 328}, {-1, 2, 14692}, {+1, 3, 182424}, {-1, 5, 222312},
         {+1, 5, 4163392}, {-1, 6, 10783296}, {+1, 7, 20724763}, {-1, 8, 30940669},
         {+1, 7, 925372586}, {-1, 9, 181304786}, {+1, 11, 29532188},
         {-1, 11, 101019396}, {+1, 11, 292172327}, {-1, 12, 143376799},
         {+1, 12, 298569727}, {-1, 13, 105276189}, {+1, 14, 31253433},
         {-1, 15, 7741211}, {+1, 16, 1578438}, {-1, 17, 259898}, {+1, 17, 168091},
         {-1, 18, 16399}, {+1, 19, 1131}, {-1, 20, 49}, {+1, 21, 1}},
    };
    return rows;
}

CoeffMatrix decode_rows(MatrixKind kind, const std::vector<WRow>& rows) {
    CoeffMatrix m{kind, {}};
    for (const auto& wr : rows) {
        SparseRow row;
        for (std::size_t j = 0; j < wr.size(); ++j) {
            Int v = w_decode(wr[j]);
            if (v != 0) row[static_cast<long>(j) + 1] = std::move(v);
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

Int pow5(unsigned e) {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), 5, e);
    return v;
}

// Per-coefficient exact division; the Newton steps divide by 2..5.
LaurentSeries div_exact(const LaurentSeries& f, unsigned long d) {
    std::vector<Int> out(f.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (!mpz_divisible_ui_p(f.coeffs()[k].get_mpz_t(), d))
            throw NonIntegralNewtonStep("division by " + std::to_string(d) +
                                        " inexact at q^" +
                                        std::to_string(f.min_exp() + static_cast<long>(k)));
        mpz_divexact_ui(out[k].get_mpz_t(), f.coeffs()[k].get_mpz_t(), d);
    }
    return LaurentSeries(f.min_exp(), std::move(out), f.prec());
}

bool rows_equal(const SparseRow& a, const SparseRow& b) {
    return a == b;
}

std::string row_to_string(const SparseRow& r) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [j, v] : r) {
        if (!first) os << ", ";
        os << j << ": " << v.get_str();
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace

const SparseRow& CoeffMatrix::row(long i) const {
    if (i < 1 || i > row_count())
        throw MissingPriorRows("matrix row " + std::to_string(i) + " not materialized (have " +
                               std::to_string(row_count()) + ")");
    return rows[i - 1];
}

Int CoeffMatrix::entry(long i, long j) const {
    const SparseRow& r = row(i);
    auto it = r.find(j);
    return it == r.end() ? Int(0) : it->second;
}

std::string CoeffMatrix::to_json() const {
    std::ostringstream os;
    os << "{\"kind\":\"" << (kind == MatrixKind::A ? "A" : kind == MatrixKind::B ? "B" : "T")
       << "\",\"rows\":[";
    for (long i = 1; i <= row_count(); ++i) {
        if (i > 1) os << ',';
        os << "{\"i\":" << i << ",\"entries\":{";
        bool first = true;
        for (const auto& [j, v] : rows[i - 1]) {
            if (!first) os << ',';
            os << '"' << j << "\":\"" << v.get_str() << '"';
            first = false;
        }
        os << "}}";
    }
    os << "]}";
    return os.str();
}

Int w_decode(const WCoded& w) {
    if (w.sign == 0) return 0;
    return Int(w.sign) * Int(w.m) * pow5(w.e);
}

std::pair<CoeffMatrix, CoeffMatrix> appendix_rows() {
    return {decode_rows(MatrixKind::A, appendix_a()), decode_rows(MatrixKind::B, appendix_b())};
}

const std::vector<RecurrenceTap>& recurrence_taps() {
    static const std::vector<RecurrenceTap> taps = {
        {1, 1, 55}, {1, 2, -300}, {1, 3, 875}, {1, 4, -1250}, {1, 5, 625},
        {2, 1, -60}, {2, 2, 175}, {2, 3, -250}, {2, 4, 125},
        {3, 1, 35}, {3, 2, -50}, {3, 3, 25},
        {4, 1, -10}, {4, 2, 5},
        {5, 1, 1},
    };
    return taps;
}

UContext::UContext(long prec, long budget) : prec_(prec) {
    if (prec < 1) throw std::invalid_argument("UContext: prec must be >= 1");
    base_prec_ = 5 * prec + 25;
    if (base_prec_ > budget)
        throw PrecisionExceeded("base precision " + std::to_string(base_prec_) +
                                " exceeds the configured budget " + std::to_string(budget));
    x_powers_.resize(2);
    x_powers_[1] = expand(x_spec(), base_prec_);
    xi_ = expand(xi_spec(), base_prec_);
    x_at_prec_ = truncate(x_powers_[1], prec_);
    y_powers_.resize(1);
}

const LaurentSeries& UContext::x_power(long i) {
    while (static_cast<long>(x_powers_.size()) <= i)
        x_powers_.push_back(mul(x_powers_.back(), x_powers_[1]));
    return x_powers_[i];
}

const LaurentSeries& UContext::y_power(long k) {
    if (y_powers_.size() == 1) {
        LaurentSeries y = sub(x_at_prec_, LaurentSeries::constant(1, prec_));
        y_powers_.push_back(std::move(y));
    }
    while (static_cast<long>(y_powers_.size()) <= k)
        y_powers_.push_back(truncate(mul(y_powers_.back(), y_powers_[1]), prec_));
    return y_powers_[k];
}

LaurentSeries UContext::u_x_power(long i) {
    if (i < 1) throw std::invalid_argument("u_x_power: i must be >= 1");
    return truncate(extract_progression(x_power(i), 0, 5), prec_);
}

LaurentSeries UContext::u_xi_x_power(long i) {
    if (i < 0) throw std::invalid_argument("u_xi_x_power: i must be >= 0");
    LaurentSeries f = (i == 0) ? xi_ : mul(xi_, x_power(i));
    return truncate(extract_progression(f, 0, 5), prec_);
}

SparseRow UContext::decompose(const LaurentSeries& F, long max_j) {
    if (F.min_exp() < 0)
        throw std::invalid_argument("decompose: series has negative exponents");
    if (max_j < 1) throw std::invalid_argument("decompose: maxJ must be >= 1");
    long wp = std::min(F.prec(), prec_);
    if (wp <= max_j)
        throw PrecisionExceeded("decompose: window " + std::to_string(wp) +
                                " too short for maxJ " + std::to_string(max_j));
    LaurentSeries resid = truncate(F, wp);
    std::vector<Int> y_coeff(max_j + 1);
    y_coeff[0] = resid.coeff(0);
    if (y_coeff[0] != 0)
        resid = sub(resid, LaurentSeries::constant(y_coeff[0], wp));
    Int lead = 4; // Y = X-1 = 4q + O(q^2)
    for (long k = 1; k <= max_j; ++k) {
        const Int& t = resid.coeff(k);
        if (t != 0) {
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), lead.get_mpz_t());
            if (r != 0)
                throw DecompositionResidual("leading coefficient 4^" + std::to_string(k) +
                                            " does not divide the order-" + std::to_string(k) +
                                            " residual coefficient");
            resid = sub(resid, mul(y_power(k), q));
            y_coeff[k] = std::move(q);
        }
        lead *= 4;
    }
    if (!resid.is_zero())
        throw DecompositionResidual("nonzero residual of order " +
                                    std::to_string(resid.min_exp()) + " with maxJ " +
                                    std::to_string(max_j));
    // convert sum c_k Y^k = sum c_k (X-1)^k into the X basis
    std::vector<Int> x_coeff(max_j + 1);
    Int binom;
    for (long k = 0; k <= max_j; ++k) {
        if (y_coeff[k] == 0) continue;
        for (long j = 0; j <= k; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                         static_cast<unsigned long>(j));
            if ((k - j) % 2 == 1) binom = -binom;
            x_coeff[j] += y_coeff[k] * binom;
        }
    }
    if (x_coeff[0] != 0)
        throw DecompositionResidual("converted polynomial has constant term " +
                                    x_coeff[0].get_str());
    SparseRow out;
    for (long j = 1; j <= max_j; ++j)
        if (x_coeff[j] != 0) out[j] = std::move(x_coeff[j]);
    return out;
}

SparseRow UContext::decompose_grow(const LaurentSeries& F, long start_j, long cap_j) {
    for (long max_j = start_j;; max_j += 5) {
        if (max_j > cap_j) max_j = cap_j;
        try {
            return decompose(F, max_j);
        } catch (const DecompositionResidual&) {
            if (max_j >= cap_j) throw;
        }
    }
}

LaurentSeries u_of_x_power(long i, long prec, long budget) {
    UContext ctx(prec, budget);
    return ctx.u_x_power(i);
}

LaurentSeries u_of_xi_x_power(long i, long prec, long budget) {
    UContext ctx(prec, budget);
    return ctx.u_xi_x_power(i);
}

SparseRow x_basis_decompose(const LaurentSeries& F, long max_j, long prec) {
    UContext ctx(prec);
    return ctx.decompose(F, max_j);
}

std::pair<CoeffMatrix, CoeffMatrix> compute_base_rows(long prec) {
    UContext ctx(prec);
    CoeffMatrix a{MatrixKind::A, {}};
    CoeffMatrix b{MatrixKind::B, {}};
    for (long i = 1; i <= 5; ++i) {
        a.rows.push_back(ctx.decompose_grow(ctx.u_x_power(i), 5 * i, 5 * i + 15));
        b.rows.push_back(ctx.decompose_grow(ctx.u_xi_x_power(i), 5 * i + 1, 5 * i + 16));
    }
    return {std::move(a), std::move(b)};
}

SparseRow extend_row(const CoeffMatrix& m, long i) {
    if (i < 6)
        throw std::invalid_argument("extend_row: the recurrence starts at row 6");
    if (m.row_count() < i - 1)
        throw MissingPriorRows("extend_row: rows " + std::to_string(m.row_count() + 1) +
                               ".." + std::to_string(i - 1) + " missing");
    SparseRow out;
    for (const auto& tap : recurrence_taps()) {
        const SparseRow& prev = m.row(i - tap.row_back);
        for (const auto& [j, v] : prev) {
            Int& slot = out[j + tap.col_back];
            if (tap.coeff > 0)
                mpz_addmul_ui(slot.get_mpz_t(), v.get_mpz_t(),
                              static_cast<unsigned long>(tap.coeff));
            else
                mpz_submul_ui(slot.get_mpz_t(), v.get_mpz_t(),
                              static_cast<unsigned long>(-tap.coeff));
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

void extend_to(CoeffMatrix& m, long rows) {
    if (m.row_count() < 5 && rows > m.row_count())
        throw MissingPriorRows("extend_to: need the five base rows first");
    while (m.row_count() < rows)
        m.rows.push_back(extend_row(m, m.row_count() + 1));
}

CoeffMatrix t_matrix(const CoeffMatrix& a, const CoeffMatrix& b, long i_max) {
    if (a.row_count() < i_max)
        throw MissingPriorRows("t_matrix: A rows 1.." + std::to_string(i_max) + " required");
    CoeffMatrix t{MatrixKind::T, {}};
    for (long i = 1; i <= i_max; ++i) {
        SparseRow out;
        for (const auto& [k, aik] : a.row(i)) {
            for (const auto& [j, bkj] : b.row(k)) { // throws if B is too short
                Int& slot = out[j];
                mpz_addmul(slot.get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
            }
        }
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        t.rows.push_back(std::move(out));
    }
    return t;
}

std::array<SparseRow, 5> newton_sigmas(long prec) {
    UContext ctx(prec);
    std::array<LaurentSeries, 6> p; // power sums, 1-based
    for (long i = 1; i <= 5; ++i)
        p[i] = mul(ctx.u_x_power(i), Int(5));
    std::array<LaurentSeries, 6> sigma;
    sigma[1] = p[1];
    sigma[2] = div_exact(sub(mul(sigma[1], p[1]), p[2]), 2);
    sigma[3] = div_exact(add(sub(mul(sigma[2], p[1]), mul(sigma[1], p[2])), p[3]), 3);
    sigma[4] = div_exact(
        sub(add(sub(mul(sigma[3], p[1]), mul(sigma[2], p[2])), mul(sigma[1], p[3])), p[4]), 4);
    sigma[5] = div_exact(
        add(sub(add(sub(mul(sigma[4], p[1]), mul(sigma[3], p[2])), mul(sigma[2], p[3])),
                mul(sigma[1], p[4])),
            p[5]),
        5);
    std::array<SparseRow, 5> out;
    for (long t = 1; t <= 5; ++t)
        out[t - 1] = ctx.decompose_grow(sigma[t], 6 - t, 25);
    return out;
}

Report verify_appendix(long prec) {
    Report r;
    r.name = "appendix-rows";
    ReportTimer timer(r);
    r.param("prec", prec);
    auto [ca, cb] = compute_base_rows(prec);
    auto [aa, ab] = appendix_rows();
    for (long i = 1; i <= 5; ++i) {
        if (!rows_equal(ca.row(i), aa.row(i)))
            r.witness("A(" + std::to_string(i) + ",*)",
                      "computed " + row_to_string(ca.row(i)) + " != appendix " +
                          row_to_string(aa.row(i)));
        if (!rows_equal(cb.row(i), ab.row(i)))
            r.witness("B(" + std::to_string(i) + ",*)",
                      "computed " + row_to_string(cb.row(i)) + " != appendix " +
                          row_to_string(ab.row(i)));
    }
    r.param("rowsChecked", 10L);
    return r;
}

Report verify_sigmas(long prec) {
    Report r;
    r.name = "sigma-polynomials";
    ReportTimer timer(r);
    r.param("prec", prec);
    static const std::array<SparseRow, 5> expected = {
        SparseRow{{1, 55}, {2, -300}, {3, 875}, {4, -1250}, {5, 625}},
        SparseRow{{1, 60}, {2, -175}, {3, 250}, {4, -125}},
        SparseRow{{1, 35}, {2, -50}, {3, 25}},
        SparseRow{{1, 10}, {2, -5}},
        SparseRow{{1, 1}},
    };
    auto sigmas = newton_sigmas(prec);
    for (std::size_t t = 0; t < 5; ++t)
        if (!rows_equal(sigmas[t], expected[t]))
            r.witness("sigma" + std::to_string(t + 1), row_to_string(sigmas[t]));
    return r;
}

Report verify_recurrence(long i_lo, long i_hi, long prec) {
    Report r;
    r.name = "recurrence-oracle";
    ReportTimer timer(r);
    r.param("iLo", i_lo);
    r.param("iHi", i_hi);
    r.param("prec", prec);
    auto [a, b] = appendix_rows();
    UContext ctx(prec);
    for (long i = 6; i <= i_hi; ++i) {
        SparseRow ra = extend_row(a, i);
        SparseRow rb = extend_row(b, i);
        if (i >= i_lo) {
            SparseRow oa = ctx.decompose_grow(ctx.u_x_power(i), 5 * i, 5 * i + 15);
            SparseRow ob = ctx.decompose_grow(ctx.u_xi_x_power(i), 5 * i + 1, 5 * i + 16);
            if (!rows_equal(ra, oa))
                r.witness("A(" + std::to_string(i) + ",*)",
                          "recurrence " + row_to_string(ra) + " != oracle " + row_to_string(oa));
            if (!rows_equal(rb, ob))
                r.witness("B(" + std::to_string(i) + ",*)",
                          "recurrence " + row_to_string(rb) + " != oracle " + row_to_string(ob));
        }
        a.rows.push_back(std::move(ra));
        b.rows.push_back(std::move(rb));
    }
    return r;
}

} // namespace tspp5
