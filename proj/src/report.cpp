#include "intmat/report.hpp"

#include <chrono>
#include <limits>

#include <json.hpp>

#include "intmat/divided_differences.hpp"
#include "intmat/enumerate.hpp"
#include "intmat/parse.hpp"

namespace intmat {

namespace {

using nlohmann::json;

json int_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

json poly_json(const IntPoly& p) {
    json a = json::array();
    for (const Int& c : p.coeffs()) a.push_back(int_json(c));
    return a;
}

json ratpoly_json(const RatPoly& f) { return json{{"num", poly_json(f.num())}, {"den", int_json(f.den())}}; }

json matrix_json(const MatZ& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(int_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json certificate_json(const std::optional<Certificate>& cert) {
    // Stable schema: {q, r} for quotient/remainder certificates, null otherwise.
    if (!cert) return nullptr;
    if (const auto* qr = std::get_if<QuotientRemainder>(&*cert))
        return json{{"q", ratpoly_json(qr->quotient)}, {"r", poly_json(qr->remainder)}};
    return nullptr;
}

json witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    json out;
    if (const auto* mw = std::get_if<MatrixWitness>(&*w)) {
        out["kind"] = "matrix";
        out["value"] = json{{"matrix", matrix_json(mw->matrix)},
                            {"entry", json::array({mw->row, mw->col})},
                            {"entry_value", int_json(mw->entry_value)}};
    } else if (const auto* cw = std::get_if<CoeffWitness>(&*w)) {
        out["kind"] = "coefficient";
        out["value"] = json{{"index", cw->index}, {"coefficient", int_json(cw->value)}};
    } else if (const auto* sw = std::get_if<SubsetWitness>(&*w)) {
        out["kind"] = "root-subset";
        out["value"] = json{{"k", sw->k}, {"indices", sw->indices}};
    } else if (const auto* tw = std::get_if<TupleWitness>(&*w)) {
        json pts = json::array();
        for (const Int& v : tw->points) pts.push_back(int_json(v));
        out["kind"] = "tuple";
        out["value"] = json{{"k", tw->k}, {"points", std::move(pts)}, {"value", int_json(tw->value)}};
    } else if (const auto* rw = std::get_if<ResidueWitness>(&*w)) {
        out["kind"] = "residue-poly";
        out["value"] = json{{"poly", poly_json(rw->poly)}, {"modulus", int_json(rw->modulus)}};
    }
    return out;
}

json counts_json(const Counts& c) {
    return json{{"residues_checked", c.residues_checked},
                {"matrices_swept", c.matrices_swept},
                {"tuples_checked", c.tuples_checked},
                {"subsets_checked", c.subsets_checked}};
}

std::string witness_text(const Witness& w) {
    if (const auto* mw = std::get_if<MatrixWitness>(&w))
        return "matrix " + to_string(mw->matrix) + ", entry (" + std::to_string(mw->row) + "," +
               std::to_string(mw->col) + ") = " + mw->entry_value.str();
    if (const auto* cw = std::get_if<CoeffWitness>(&w))
        return "remainder coefficient [" + std::to_string(cw->index) + "] = " + cw->value.str();
    if (const auto* sw = std::get_if<SubsetWitness>(&w)) {
        std::string s = "divided difference k=" + std::to_string(sw->k) + " at root indices {";
        for (std::size_t i = 0; i < sw->indices.size(); ++i) s += (i ? "," : "") + std::to_string(sw->indices[i]);
        return s + "}";
    }
    if (const auto* tw = std::get_if<TupleWitness>(&w)) {
        std::string s = "divided difference k=" + std::to_string(tw->k) + " at (";
        for (std::size_t i = 0; i < tw->points.size(); ++i) s += (i ? "," : "") + tw->points[i].str();
        return s + ") = " + tw->value.str();
    }
    if (const auto* rw = std::get_if<ResidueWitness>(&w))
        return "residue polynomial " + to_string(rw->poly) + " (mod " + rw->modulus.str() + ")";
    return "?";
}

struct Report {
    json j;
    std::string text;
    int exit_code = 0;

    Report(const std::string& command, const std::string& format) : format_(format) {
        j["command"] = command;
        j["member"] = nullptr;
        j["route"] = nullptr;
        j["certificate"] = nullptr;
        j["witness"] = nullptr;
        j["counts"] = json::object();
        j["result"] = nullptr;
        text = "command: " + command + "\n";
    }

    void add_verdict(const Verdict& v) {
        j["member"] = v.member;
        j["route"] = route_name(v.route);
        j["certificate"] = certificate_json(v.certificate);
        j["witness"] = witness_json(v.witness);
        j["counts"] = counts_json(v.counts);
        if (v.sampled) j["sampled"] = true;
        exit_code = v.member ? 0 : 1;

        text += "member: " + std::string(v.member ? "true" : "false") +
                (v.sampled ? " (sampled: necessary condition verified)" : "") + "\n";
        text += "route: " + route_name(v.route) + "\n";
        if (v.certificate) {
            if (const auto* qr = std::get_if<QuotientRemainder>(&*v.certificate))
                text += "certificate: r = " + to_string(qr->remainder) + ", q = " + to_string(qr->quotient) + "\n";
            else if (std::holds_alternative<SweepCertificate>(*v.certificate)) {
                const auto& sc = std::get<SweepCertificate>(*v.certificate);
                text += "certificate: exhaustive sweep of " + std::to_string(sc.checked) + " " + sc.what + "\n";
            } else if (std::holds_alternative<MatrixCertificate>(*v.certificate)) {
                text += "certificate: f(C_p) = " + to_string(std::get<MatrixCertificate>(*v.certificate).value) + "\n";
            } else {
                text += "certificate: Newton coefficients divisible by the denominator\n";
            }
        }
        if (v.witness) text += "witness: " + witness_text(*v.witness) + "\n";
    }

    void finish(double elapsed_ms) {
        j["elapsed_ms"] = elapsed_ms;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.2f", elapsed_ms);
        text += "elapsed_ms: " + std::string(buf) + "\n";
    }

    std::string render() const { return format_ == "json" ? j.dump() + "\n" : text; }

  private:
    std::string format_;
};

void run_check_mn(const Request& req, Report& rep) {
    if (req.f_text.empty() || req.n < 1) throw InvalidInput("check-mn requires --f and --n");
    RatPoly f = parse_poly(req.f_text);
    Verdict v = member_mn(f, req.n, req.budget);

    if (!v.member) {
        // Upgrade the residue witness to a concrete matrix witness through
        // the brute-force sweep when it fits the budget.
        if (const auto* rw = std::get_if<ResidueWitness>(&*v.witness)) {
            rep.j["failing_residue"] = poly_json(rw->poly);
            rep.text += "failing residue: " + to_string(rw->poly) + " (mod " + rw->modulus.str() + ")\n";
            try {
                Verdict bf = member_mn_bruteforce(f, req.n, req.budget, req.jobs);
                if (!bf.member && bf.witness) {
                    v.witness = bf.witness;
                    v.counts.matrices_swept = bf.counts.matrices_swept;
                }
            } catch (const BudgetExceeded&) {
                // keep the residue witness
            }
        }
    }
    rep.add_verdict(v);

    if (req.d_box) {
        Verdict irr = member_mn_irr_sampled(f, req.n, *req.d_box, req.budget);
        rep.j["irr_sampled"] = json{{"member", irr.member},
                                    {"sampled", irr.sampled},
                                    {"residues_checked", irr.counts.residues_checked},
                                    {"witness", witness_json(irr.witness)}};
        rep.text += "irreducible sample (box " + req.d_box->str() + "): " +
                    (irr.member ? "necessary condition verified" : "non-member, " + witness_text(*irr.witness)) + "\n";
    }
}

void run_check_mnp(const Request& req, Report& rep) {
    if (req.f_text.empty() || req.p_text.empty()) throw InvalidInput("check-mnp requires --f and --p");
    RatPoly f = parse_poly(req.f_text);
    IntPoly p = parse_monic_poly(req.p_text);
    if (req.n > 0 && req.n != p.degree()) throw InvalidInput("--n does not match deg p");
    rep.add_verdict(member_mnp_remainder(f, p));
}

void run_check_tn(const Request& req, Report& rep) {
    if (req.f_text.empty() || req.n < 1) throw InvalidInput("check-tn requires --f and --n");
    rep.add_verdict(member_tn(parse_poly(req.f_text), req.n, req.budget));
}

void run_check_closure(const Request& req, Report& rep) {
    if (req.p_text.empty()) throw InvalidInput("check-closure requires --p");
    IntPoly p = parse_monic_poly(req.p_text);
    ClosureReport report = closure_is_exact_for_irreducible(p, req.entry_box, req.budget);
    rep.j["member"] = report.exact();
    json violations = json::array();
    for (const MatZ& m : report.violations) violations.push_back(matrix_json(m));
    rep.j["result"] = json{{"scanned", report.scanned},
                           {"annihilating", report.annihilating},
                           {"with_char_poly", report.with_char_poly},
                           {"violations", std::move(violations)}};
    rep.exit_code = report.exact() ? 0 : 1;
    rep.text += "closure of the matrices with this characteristic polynomial, entries in [-" + req.entry_box.str() +
                ", " + req.entry_box.str() + "]:\n";
    rep.text += "  scanned: " + std::to_string(report.scanned) + "\n";
    rep.text += "  p(M) = 0: " + std::to_string(report.annihilating) + "\n";
    rep.text += "  char poly = p: " + std::to_string(report.with_char_poly) + "\n";
    rep.text += "  sets coincide: " + std::string(report.exact() ? "yes" : "NO") + "\n";
}

void run_divdiff(const Request& req, Report& rep) {
    if (req.g_text.empty() || req.points_text.empty()) throw InvalidInput("divdiff requires --g and --points");
    RatPoly f = parse_poly(req.g_text);
    std::vector<Rat> points = parse_rational_list(req.points_text);
    if (points.empty()) throw InvalidInput("divdiff: at least one point required");
    RationalRing q;
    Rat value = phi_eval(q, f.rational_coeffs(), std::span<const Rat>(points.data(), points.size()));
    rep.j["result"] = json{{"k", points.size() - 1}, {"value", to_string(value)}};
    rep.text += "phi^" + std::to_string(points.size() - 1) + " = " + to_string(value) + "\n";
}

void run_newton(const Request& req, Report& rep) {
    if (req.g_text.empty() || req.nodes_text.empty()) throw InvalidInput("newton requires --g and --nodes");
    RatPoly f = parse_poly(req.g_text);
    std::vector<Rat> nodes = parse_rational_list(req.nodes_text);
    RationalRing q;
    auto expansion = newton_expand(q, f.rational_coeffs(), nodes);
    json coeffs = json::array();
    std::string line;
    for (const Rat& c : expansion.coefficients) {
        coeffs.push_back(to_string(c));
        line += (line.empty() ? "" : ", ") + to_string(c);
    }
    rep.j["result"] = json{{"coefficients", std::move(coeffs)}};
    rep.text += "newton coefficients: " + line + "\n";
}

void run_nullideal(const Request& req, Report& rep) {
    if (req.d < 2) throw InvalidInput("nullideal requires --d >= 2");
    MatMod m = [&]() {
        if (!req.matrix_text.empty()) return reduce_mod(parse_matrix(req.matrix_text), req.d);
        if (!req.p_text.empty()) return companion_mod(parse_monic_poly(req.p_text), req.d);
        throw InvalidInput("nullideal requires --matrix or --p");
    }();
    const int bound = req.bound >= 0 ? req.bound : 2 * m.dim() - 1;
    auto polys = null_ideal_scan(m, bound, req.budget);
    json list = json::array();
    for (const ModPoly& g : polys) list.push_back(poly_json(g.lift()));
    rep.j["result"] = json{{"modulus", m.modulus()}, {"degree_bound", bound}, {"count", polys.size()}, {"annihilators", std::move(list)}};
    rep.text += "annihilators of degree <= " + std::to_string(bound) + " (mod " + std::to_string(m.modulus()) + "): " +
                std::to_string(polys.size()) + "\n";
    for (const ModPoly& g : polys) rep.text += "  " + to_string(g.lift()) + "\n";
}

}  // namespace

RunResult run(const Request& req) {
    Report rep(req.command, req.format);
    const auto start = std::chrono::steady_clock::now();
    try {
        if (req.command == "check-mn")
            run_check_mn(req, rep);
        else if (req.command == "check-mnp")
            run_check_mnp(req, rep);
        else if (req.command == "check-tn")
            run_check_tn(req, rep);
        else if (req.command == "check-closure")
            run_check_closure(req, rep);
        else if (req.command == "divdiff")
            run_divdiff(req, rep);
        else if (req.command == "newton")
            run_newton(req, rep);
        else if (req.command == "nullideal")
            run_nullideal(req, rep);
        else
            throw InvalidInput("unknown command: " + req.command);
    } catch (const std::exception& e) {
        rep.j["error"] = e.what();
        rep.text += std::string("error: ") + e.what() + "\n";
        rep.exit_code = 2;
    }
    const auto stop = std::chrono::steady_clock::now();
    rep.finish(std::chrono::duration<double, std::milli>(stop - start).count());
    return {rep.exit_code, rep.render()};
}

}  // namespace intmat
