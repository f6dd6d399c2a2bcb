#include "fqdigits/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fqdigits/digits.hpp"
#include "fqdigits/intside.hpp"
#include "fqdigits/order.hpp"
#include "fqdigits/reference_tables.hpp"

namespace fqdigits {

namespace {

struct FieldOpts {
    std::uint64_t p = 2;
    unsigned ext_deg = 1;
    std::string ext_mod;
};

struct BaseOpts {
    std::string base_text = "x";
    std::string base_product;
};

void add_field_flags(CLI::App* cmd, FieldOpts& fo) {
    cmd->add_option("-p", fo.p, "prime characteristic of the field")->required();
    cmd->add_option("--ext-deg", fo.ext_deg, "extension degree k (default 1)");
    cmd->add_option("--ext-mod", fo.ext_mod,
                    "monic irreducible modulus in t defining F_{p^k} (required for k > 1)");
}

void add_base_flags(CLI::App* cmd, BaseOpts& bo) {
    auto* b = cmd->add_option("-B", bo.base_text, "base polynomial (default \"x\")");
    auto* bp = cmd->add_option("--B-product", bo.base_product,
                               "comma-separated factors multiplied to form B, e.g. \"x,x-1\"");
    bp->excludes(b);
}

FieldCtx make_field(const FieldOpts& fo) {
    if (fo.ext_deg <= 1) {
        if (!fo.ext_mod.empty()) {
            throw std::invalid_argument("--ext-mod is only meaningful with --ext-deg > 1");
        }
        return FieldCtx::make(fo.p);
    }
    if (fo.ext_mod.empty()) {
        throw MissingModulus("--ext-deg " + std::to_string(fo.ext_deg) +
                             " requires --ext-mod <poly in t>");
    }
    const FieldCtx fp = FieldCtx::make(fo.p);
    const Poly m = parse_poly(fo.ext_mod, fp, "t");
    return FieldCtx::make(fo.p, fo.ext_deg, m.coeffs());
}

Poly make_base(const FieldCtx& ctx, const BaseOpts& bo) {
    if (bo.base_product.empty()) return parse_poly(bo.base_text, ctx);
    Poly b = Poly::one(ctx);
    std::size_t start = 0;
    const std::string& s = bo.base_product;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::size_t end = comma == std::string::npos ? s.size() : comma;
        b = b * parse_poly(std::string_view(s).substr(start, end - start), ctx);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return b;
}

std::string join_digits(const Expansion& e, char sep) {
    std::string out;
    for (std::size_t i = 0; i < e.digits.size(); ++i) {
        if (i > 0) out += sep;
        out += to_string(e.digits[i], "x", TermOrder::ascending);
    }
    return out;
}

std::string expansion_line(const Expansion& e) {
    return "1/" + to_string(e.modulus) + " base " + to_string(e.base) + " = 0.(" +
           join_digits(e, ',') + ")";
}

constexpr std::string_view kRecordHeader = "modulus,base,period,digits,digit_sum,case";

void write_record_csv(std::ostream& os, const SweepRecord& r) {
    os << r.modulus << ',' << r.base << ',' << r.period << ',';
    for (std::size_t i = 0; i < r.digits.size(); ++i) {
        if (i > 0) os << ';';
        os << r.digits[i];
    }
    os << ',' << r.digit_sum << ',' << to_string(r.kind) << '\n';
}

void flush_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + path);
    f << content;
}

// both engines, required to agree before anything is reported
Expansion expand_checked(const Poly& M, const Poly& B) {
    Expansion e1 = expand_longdiv(M, B);
    const Expansion e2 = expand_via_cofactor(M, B);
    if (e1.period != e2.period || e1.digits != e2.digits) {
        throw VerificationFailure("expansion engines disagree for M = " + to_string(M) +
                                  ", B = " + to_string(B) + " (internal bug)");
    }
    return e1;
}

int cmd_expand(const FieldOpts& fo, const BaseOpts& bo, const std::string& m_text, bool csv,
               const std::string& out_path, std::ostream& out) {
    const FieldCtx ctx = make_field(fo);
    const Poly M = parse_poly(m_text, ctx);
    const Poly B = make_base(ctx, bo);

    const Expansion e = expand_checked(M, B);
    const DigitSumReport rep = digit_sum(e);

    std::ostringstream buf;
    if (csv) {
        SweepRecord r{to_string(M), to_string(B), e.period, {},
                      to_string(rep.sum, "x", TermOrder::ascending), rep.kind};
        for (const Poly& d : e.digits) r.digits.push_back(to_string(d, "x", TermOrder::ascending));
        buf << kRecordHeader << '\n';
        write_record_csv(buf, r);
    } else {
        buf << expansion_line(e) << '\n';
        buf << "T = " << e.period << '\n';
        buf << "S = " << to_string(rep.sum, "x", TermOrder::ascending) << '\n';
    }
    flush_output(out_path, buf.str(), out);
    return 0;
}

int cmd_order(const FieldOpts& fo, const BaseOpts& bo, const std::string& m_text,
              const std::string& out_path, std::ostream& out) {
    const FieldCtx ctx = make_field(fo);
    const Poly M = parse_poly(m_text, ctx);
    const Poly B = make_base(ctx, bo);
    std::ostringstream buf;
    buf << mul_order(B, M).order << '\n';
    flush_output(out_path, buf.str(), out);
    return 0;
}

int cmd_sweep(const FieldOpts& fo, const BaseOpts& bo, unsigned max_deg, bool csv,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
    const FieldCtx ctx = make_field(fo);
    const Poly B = make_base(ctx, bo);
    const SweepReport report = sweep(ctx, B, max_deg);

    std::ostringstream buf;
    if (csv) {
        buf << kRecordHeader << '\n';
        for (const SweepRecord& r : report.records) write_record_csv(buf, r);
    } else {
        buf << "sweep: " << report.field << ", base B = " << report.base
            << ", monic moduli of degree 1.." << report.max_degree
            << " (monic representatives; unit scaling preserves digit sums)\n";
        std::uint64_t coprime_total = 0;
        std::uint64_t period_one_total = 0;
        for (const auto& pd : report.per_degree) {
            buf << "degree " << pd.degree << ": coprime " << pd.coprime_count << ", period-one "
                << pd.period_one_count << '\n';
            coprime_total += pd.coprime_count;
            period_one_total += pd.period_one_count;
        }
        buf << "moduli checked: " << (coprime_total + period_one_total) << " (coprime "
            << coprime_total << ", period-one " << period_one_total << ")\n";
        buf << "failures: " << report.failures << '\n';
    }
    err << "elapsed: " << report.elapsed_seconds << " s\n";
    flush_output(out_path, buf.str(), out);
    return 0;
}

std::string modulus_of_row(std::string_view row) {
    return std::string(row.substr(0, row.find(' ')));
}

// recompute one reference table from scratch and compare byte-for-byte
template <std::size_t N>
bool rebuild_table(const FieldCtx& ctx, const Poly& B, bool with_order,
                   const std::array<std::string_view, N>& reference,
                   std::vector<std::string>& rows, std::ostream& err) {
    const Poly bm1 = B - Poly::one(ctx);

    std::set<std::string> computed;
    for (unsigned d = 1; d <= reference_tables::kTableMaxDegree; ++d) {
        for (const Poly& M : monic_polys(ctx, d)) {
            if (gcd(M, B).degree() == Degree(0) && gcd(M, bm1).degree() == Degree(0)) {
                computed.insert(to_string(M));
            }
        }
    }
    std::set<std::string> expected;
    for (std::string_view row : reference) expected.insert(modulus_of_row(row));
    if (computed != expected) {
        err << "tables: enumerated coprime moduli do not match the reference set\n";
        return false;
    }

    bool ok = true;
    for (std::string_view ref_row : reference) {
        const Poly M = parse_poly(modulus_of_row(ref_row), ctx);
        const Expansion e = expand_checked(M, B);
        std::string row = to_string(M);
        if (with_order) row += " | " + std::to_string(e.period);
        row += " | 0.(" + join_digits(e, ',') + ")";
        if (row != ref_row) {
            err << "tables: row mismatch\n  computed:  " << row << "\n  reference: " << ref_row
                << '\n';
            ok = false;
        }
        rows.push_back(std::move(row));
    }
    return ok;
}

int cmd_tables(const std::string& out_path, std::ostream& out, std::ostream& err) {
    const FieldCtx f2 = FieldCtx::make(2);
    const Poly b1 = parse_poly(reference_tables::kTable1Base, f2);
    const Poly b2 = parse_poly(reference_tables::kTable2Base, f2);

    std::vector<std::string> rows1, rows2;
    const bool ok1 = rebuild_table(f2, b1, true, reference_tables::kTable1Rows, rows1, err);
    const bool ok2 = rebuild_table(f2, b2, false, reference_tables::kTable2Rows, rows2, err);

    std::ostringstream buf;
    buf << "Table 1: 1/M in base B = " << to_string(b1)
        << " over F_2, monic M of degree <= " << reference_tables::kTableMaxDegree
        << " coprime to B(B-1)\n";
    buf << "M | ord(x,M) | 1/M\n";
    for (const std::string& r : rows1) buf << r << '\n';
    buf << '\n';
    buf << "Table 2: 1/P in base B = " << to_string(b2)
        << " over F_2, monic P of degree <= " << reference_tables::kTableMaxDegree
        << " coprime to B(B-1)\n";
    buf << "P | 1/P\n";
    for (const std::string& r : rows2) buf << r << '\n';
    buf << '\n';
    if (ok1 && ok2) {
        buf << "tables: OK (" << (rows1.size() + rows2.size()) << " rows match the reference data)\n";
    }
    flush_output(out_path, buf.str(), out);
    return ok1 && ok2 ? 0 : 1;
}

int cmd_intscan(const std::vector<std::uint64_t>& bases, std::uint64_t p_max, bool csv,
                const std::string& out_path, std::ostream& out) {
    const auto reports = girstmair_scan(bases, p_max);

    std::ostringstream buf;
    bool all_ok = true;
    if (csv) buf << "p,b,T,case,A,h,predicted,match\n";
    for (const GirstmairReport& r : reports) {
        const bool asserted = r.kind != IntCase::other;
        if (asserted && !r.match) all_ok = false;
        const std::string h = r.h ? std::to_string(*r.h) : "-";
        const std::string pred = r.predicted ? to_string(*r.predicted) : "-";
        const std::string match = asserted ? (r.match ? "yes" : "no") : "-";
        if (csv) {
            buf << r.p << ',' << r.b << ',' << r.period << ',' << to_string(r.kind) << ','
                << to_string(r.average) << ',' << (r.h ? std::to_string(*r.h) : "") << ','
                << (r.predicted ? to_string(*r.predicted) : "") << ','
                << (asserted ? (r.match ? "yes" : "no") : "") << '\n';
        } else {
            buf << "p=" << r.p << " b=" << r.b << " T=" << r.period
                << " case=" << to_string(r.kind) << " A=" << to_string(r.average) << " h=" << h
                << " pred=" << pred << " match=" << match << '\n';
        }
    }
    flush_output(out_path, buf.str(), out);
    return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"base-B digit expansions of 1/M over F_q[x], their digit sums, and the "
                 "integer-side class-number bias for contrast"};
    app.name("fqdigits");
    app.require_subcommand(1);

    int rc = 0;

    auto* expand = app.add_subcommand("expand", "expand 1/M in base B and print digits, T, S");
    FieldOpts expand_f;
    BaseOpts expand_b;
    std::string expand_m, expand_out;
    bool expand_csv = false;
    add_field_flags(expand, expand_f);
    add_base_flags(expand, expand_b);
    expand->add_option("-M", expand_m, "modulus polynomial")->required();
    expand->add_flag("--csv", expand_csv, "machine-readable output");
    expand->add_option("--out", expand_out, "write output to a file");
    expand->callback([&] { rc = cmd_expand(expand_f, expand_b, expand_m, expand_csv, expand_out, out); });

    auto* order = app.add_subcommand("order", "multiplicative order of B modulo M");
    FieldOpts order_f;
    BaseOpts order_b;
    std::string order_m, order_out;
    add_field_flags(order, order_f);
    add_base_flags(order, order_b);
    order->add_option("-M", order_m, "modulus polynomial")->required();
    order->add_option("--out", order_out, "write output to a file");
    order->callback([&] { rc = cmd_order(order_f, order_b, order_m, order_out, out); });

    auto* sweep_cmd = app.add_subcommand(
        "sweep", "verify vanishing digit sums over all monic moduli up to a degree");
    FieldOpts sweep_f;
    BaseOpts sweep_b;
    unsigned sweep_deg = 0;
    std::string sweep_out;
    bool sweep_csv = false;
    add_field_flags(sweep_cmd, sweep_f);
    add_base_flags(sweep_cmd, sweep_b);
    sweep_cmd->add_option("--max-deg", sweep_deg, "largest modulus degree")->required();
    sweep_cmd->add_flag("--csv", sweep_csv, "one record per modulus");
    sweep_cmd->add_option("--out", sweep_out, "write output to a file");
    sweep_cmd->callback(
        [&] { rc = cmd_sweep(sweep_f, sweep_b, sweep_deg, sweep_csv, sweep_out, out, err); });

    auto* tables = app.add_subcommand(
        "tables", "regenerate the two reference expansion tables and compare byte-for-byte");
    std::string tables_out;
    tables->add_option("--out", tables_out, "write output to a file");
    tables->callback([&] { rc = cmd_tables(tables_out, out, err); });

    auto* intscan = app.add_subcommand(
        "intscan", "scan 1/p digit averages against the exact class-number identity");
    std::vector<std::uint64_t> intscan_b;
    std::uint64_t intscan_pmax = 0;
    std::string intscan_out;
    bool intscan_csv = false;
    intscan->add_option("-b", intscan_b, "integer base(s)")->required();
    intscan->add_option("--p-max", intscan_pmax, "scan odd primes p <= this bound")->required();
    intscan->add_flag("--csv", intscan_csv, "machine-readable output");
    intscan->add_option("--out", intscan_out, "write output to a file");
    intscan->callback(
        [&] { rc = cmd_intscan(intscan_b, intscan_pmax, intscan_csv, intscan_out, out); });

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("fqdigits");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}

}  // namespace fqdigits
