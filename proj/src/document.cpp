#include "gckit/document.hpp"

#include "gckit/errors.hpp"
#include "gckit/gc_field.hpp"
#include "gckit/gc_linear.hpp"
#include "gckit/linearize.hpp"
#include "gckit/normal_form.hpp"

namespace gckit {

namespace {

using njson = nlohmann::ordered_json;

int require_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("document: missing integer field '") + key + "'");
    return j[key].get<int>();
}

std::vector<Rational> parse_point(const nlohmann::json& j, int d) {
    if (!j.is_array() || static_cast<int>(j.size()) != d)
        throw ParseError("point must be an array of d rational strings");
    std::vector<Rational> out;
    for (const auto& v : j) {
        if (!v.is_string())
            throw ParseError("point entries must be rational strings");
        out.push_back(rational_from_string(v.get<std::string>()));
    }
    return out;
}

PMat parse_poly_matrix(const nlohmann::json& j, int rows, int cols, int nvars) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ParseError("matrix has wrong number of rows");
    PMat m = pmat_zero(rows, cols, nvars);
    for (int i = 0; i < rows; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("matrix row " + std::to_string(i) + " has wrong length");
        for (int c = 0; c < cols; ++c) {
            if (!row[c].is_string())
                throw ParseError("matrix entries must be polynomial strings");
            m(i, c) = Polynomial::parse(row[c].get<std::string>(), nvars);
        }
    }
    return m;
}

OneForm parse_one_form(const nlohmann::json& j, int nvars) {
    if (!j.is_array() || static_cast<int>(j.size()) != nvars)
        throw ParseError("one-form must list one component per coordinate");
    OneForm xi(nvars, nvars);
    for (int i = 0; i < nvars; ++i)
        xi.c[i] = Polynomial::parse(j[i].get<std::string>(), nvars);
    return xi;
}

njson mat_json(const PMat& m) {
    njson rows = njson::array();
    for (int i = 0; i < m.rows(); ++i) {
        njson row = njson::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

njson mat_json(const GMat& m) {
    njson rows = njson::array();
    for (int i = 0; i < m.rows(); ++i) {
        njson row = njson::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

njson basis_json(const Subspace& s) {
    return mat_json(s.basis());
}

njson form_json(const KForm& w) {
    njson entries = njson::array();
    for (const auto& [idx, p] : w.components()) {
        njson e = njson::array();
        njson ids = njson::array();
        for (int v : idx)
            ids.push_back(v + 1); // 1-based coordinate labels in documents
        e.push_back(ids);
        e.push_back(p.str());
        entries.push_back(e);
    }
    njson out;
    out["k"] = w.k();
    out["entries"] = entries;
    return out;
}

struct CheckSet {
    std::map<std::string, njson> checks;
    bool any_fail = false;

    void pass(const std::string& name) {
        njson c;
        c["status"] = "pass";
        checks[name] = c;
    }
    void fail(const std::string& name, const std::vector<std::string>& residuals = {}) {
        njson c;
        c["status"] = "fail";
        if (!residuals.empty())
            c["residuals"] = residuals;
        checks[name] = c;
        any_fail = true;
    }
    void unsupported(const std::string& name, const std::string& note) {
        njson c;
        c["status"] = "unsupported";
        c["note"] = note;
        checks[name] = c;
    }
    void from_bool(const std::string& name, bool ok,
                   const std::vector<std::string>& residuals = {}) {
        if (ok)
            pass(name);
        else
            fail(name, residuals);
    }
};

std::vector<Polynomial> monomials_up_to(int nvars, int max_degree) {
    std::vector<Polynomial> out;
    Exponents e(nvars, 0);
    std::function<void(int, int)> rec = [&](int var, int budget) {
        if (var == nvars) {
            if (total_degree(e) > 0)
                out.push_back(Polynomial::monomial(nvars, e, Gaussian(1)));
            return;
        }
        for (int k = 0; k <= budget; ++k) {
            e[var] = static_cast<unsigned>(k);
            rec(var + 1, budget - k);
        }
        e[var] = 0;
    };
    rec(0, max_degree);
    return out;
}

std::vector<std::string> one_form_residual(const OneForm& xi) {
    std::vector<std::string> out;
    for (int i = 0; i < xi.dim(); ++i)
        if (!xi.c[i].is_zero())
            out.push_back("dx" + std::to_string(i + 1) + ": " + xi.c[i].str());
    return out;
}

std::vector<std::string> kform_residual(const KForm& w) {
    std::vector<std::string> out;
    for (const auto& [idx, p] : w.components()) {
        std::string label = "dx";
        for (size_t q = 0; q < idx.size(); ++q)
            label += (q ? "^dx" : "") + std::to_string(idx[q] + 1);
        out.push_back(label + ": " + p.str());
    }
    return out;
}

// ---------------------------------------------------------------------------
// individual commands
// ---------------------------------------------------------------------------

void check_algebraic(const StructureDoc& doc, CheckSet& cs) {
    int d = doc.dimension;
    int nv = d;
    const PMat& jm = doc.matrix;
    PMat sq = jm * jm;
    PMat minus_id = pmat_identity(2 * d, nv);
    for (int i = 0; i < 2 * d; ++i)
        minus_id(i, i) = -minus_id(i, i);
    cs.from_bool("algebra.square", sq == minus_id);
    PMat gram = pmat_zero(2 * d, 2 * d, nv);
    Polynomial one = Polynomial::constant(nv, Gaussian(1));
    for (int i = 0; i < d; ++i) {
        gram(i, d + i) = one;
        gram(d + i, i) = one;
    }
    cs.from_bool("algebra.pairing", jm.transpose() * gram * jm == gram);
    PMat j = jm.block(0, 0, d, d);
    PMat pi = jm.block(0, d, d, d);
    PMat sg = jm.block(d, 0, d, d);
    PMat k = jm.block(d, d, d, d);
    cs.from_bool("algebra.block_k", k == -j.transpose());
    cs.from_bool("algebra.block_pi_skew", pmat_is_skew(pi));
    cs.from_bool("algebra.block_sigma_skew", pmat_is_skew(sg));
    cs.from_bool("algebra.real", pmat_is_real(jm));
}

std::optional<FieldGC> try_field(const StructureDoc& doc, CheckSet& cs) {
    try {
        return FieldGC::from_matrix(doc.matrix, doc.dimension);
    } catch (const Error& e) {
        cs.fail("input.valid", {e.what()});
        return std::nullopt;
    }
}

void cmd_check(const StructureDoc& doc, const RunOptions& opts, CheckSet& cs, njson& outputs) {
    check_algebraic(doc, cs);
    if (cs.any_fail)
        return;
    FieldGC g = FieldGC::from_matrix(doc.matrix, doc.dimension);

    if (doc.kind == StructureDoc::Kind::constant) {
        ConstantGC cg = evaluate_at(g, std::vector<Rational>(doc.dimension, Rational(0)));
        cs.from_bool("eigenspace.dimension", cg.eigenspace().dim() == doc.dimension);
        cs.pass("eigenspace.isotropy"); // enforced by construction above
        EpsilonData es = extract_es(cg);
        cs.from_bool("leaf.omega_nondegenerate", rank(es.omega) == es.s_space.dim());
        outputs["eigenspace_basis"] = basis_json(cg.eigenspace());
        outputs["e_basis"] = basis_json(es.e_space);
        outputs["s_basis"] = basis_json(es.s_space);
        outputs["omega"] = mat_json(es.omega);
        outputs["eps"] = mat_json(es.eps);
        cs.pass("integrability.constant");
        return;
    }

    IntegrabilityReport rep = nijenhuis_report(g, 20, 0x5eedu);
    cs.from_bool("integrability.frame_pairs", rep.frame_ok, {rep.first_failure});
    cs.from_bool("integrability.random_pairs", rep.random_ok, {rep.first_failure});
    cs.from_bool("integrability.routes_agree", rep.agree());
    outputs["pi"] = mat_json(g.pi_block());

    // derivation identities of f -> xi_f on monomial pairs
    int xi_deg = std::min(2, opts.degree);
    auto monos = monomials_up_to(doc.dimension, xi_deg);
    bool prod_ok = true, br_ok = true;
    std::vector<std::string> prod_res, br_res;
    for (size_t a = 0; a < monos.size(); ++a)
        for (size_t b = a; b < monos.size(); ++b) {
            XiIdentityReport xi = check_xi_identities(g, monos[a], monos[b]);
            if (!xi.product_residual.is_zero() && prod_ok) {
                prod_ok = false;
                prod_res = one_form_residual(xi.product_residual);
            }
            if (!xi.bracket_residual.is_zero() && br_ok) {
                br_ok = false;
                br_res = one_form_residual(xi.bracket_residual);
            }
        }
    cs.from_bool("xi.product_rule", prod_ok, prod_res);
    cs.from_bool("xi.bracket_rule", br_ok, br_res);

    // leafwise two-form flow identity, where representable
    try {
        bool ok = true;
        std::vector<std::string> res;
        for (const Polynomial& f : monomials_up_to(doc.dimension, 2)) {
            FlowEpsilonReport fr = check_flow_epsilon(g, f);
            if (!fr.residual.is_zero()) {
                ok = false;
                res = kform_residual(fr.residual);
                break;
            }
        }
        cs.from_bool("flow_epsilon", ok, res);
    } catch (const UnsupportedError& e) {
        cs.unsupported("flow_epsilon", e.what());
    }
}

void cmd_poisson(const StructureDoc& doc, const RunOptions& opts, CheckSet& cs,
                 njson& outputs) {
    auto g = try_field(doc, cs);
    if (!g)
        return;
    Bivector pi = poisson(*g);
    outputs["pi"] = mat_json(pi.m);
    auto monos = monomials_up_to(doc.dimension, opts.degree);
    bool ok = true;
    std::vector<std::string> res;
    long count = 0;
    for (size_t a = 0; a < monos.size() && ok; ++a)
        for (size_t b = a + 1; b < monos.size() && ok; ++b)
            for (size_t c = b + 1; c < monos.size() && ok; ++c) {
                Polynomial j = jacobiator(pi, monos[a], monos[b], monos[c]);
                ++count;
                if (!j.is_zero()) {
                    ok = false;
                    res = {monos[a].str() + ", " + monos[b].str() + ", " + monos[c].str() +
                           " -> " + j.str()};
                }
            }
    cs.from_bool("jacobi.suite", ok, res);
    outputs["jacobi_triples_checked"] = count;
}

const Subspace& named_subspace(const StructureDoc& doc, const RunOptions& opts) {
    if (!opts.subspace)
        throw ParseError("command requires --subspace naming a subspace of the document");
    auto it = doc.subspaces.find(*opts.subspace);
    if (it == doc.subspaces.end())
        throw ParseError("document declares no subspace named '" + *opts.subspace + "'");
    return it->second;
}

ConstantGC doc_at_point(const StructureDoc& doc, const RunOptions& opts) {
    FieldGC g = FieldGC::from_matrix(doc.matrix, doc.dimension);
    std::vector<Rational> pt(doc.dimension, Rational(0));
    if (opts.point)
        pt = *opts.point;
    else if (doc.point)
        pt = *doc.point;
    else if (doc.kind == StructureDoc::Kind::field)
        throw ParseError("field documents need a --point for pointwise commands");
    return evaluate_at(g, pt);
}

void cmd_decompose(const StructureDoc& doc, const RunOptions& opts, CheckSet& cs,
                   njson& outputs) {
    ConstantGC g = doc_at_point(doc, opts);
    try {
        Decomposition dec = decompose(g);
        cs.pass("decompose.splitting_valid");
        outputs["s_basis"] = basis_json(dec.s0);
        outputs["w_basis"] = basis_json(dec.w);
        outputs["b"] = mat_json(dec.b);

        int k = dec.s0.dim();
        int n = g.n();
        GMat p(n, n);
        p.set_block(0, 0, dec.s0.basis());
        p.set_block(k, 0, dec.w.basis());
        ConstantGC adapted = pullback_gc(b_transform(g, dec.b), p);
        GMat pi = adapted.pi_block();
        cs.from_bool("decompose.leaf_symplectic", rank(pi.block(0, 0, k, k)) == k);
        cs.from_bool("decompose.off_blocks_zero", pi.block(0, k, k, n - k).is_zero() &&
                                                      pi.block(k, k, n - k, n - k).is_zero());
        bool transverse_rankless =
            dec.w.dim() == 0 ||
            extract_es(induced_structure(g, dec.w)).s_space.dim() == 0;
        cs.from_bool("decompose.transverse_leafless", transverse_rankless);
    } catch (const Error& e) {
        cs.fail("decompose.splitting_valid", {e.what()});
    }
}

void cmd_orthcomp(const StructureDoc& doc, const RunOptions& opts, CheckSet& cs,
                  njson& outputs) {
    ConstantGC g = doc_at_point(doc, opts);
    const Subspace& w = named_subspace(doc, opts);
    if (w.ambient_dim() != g.n())
        throw ParseError("subspace ambient dimension does not match the document");
    Subspace direct = orth_complement(g, w);
    Subspace oracle = orth_complement_oracle(g, w);
    cs.from_bool("orth.routes_agree", direct == oracle);
    outputs["c_w_basis"] = basis_json(direct);
    InducedSubspace ind = induced_subspace(g, w);
    cs.from_bool("subspace.criterion_agrees", gc_subspace_criterion(g, w) == ind.is_gc);
    outputs["is_gc_subspace"] = ind.is_gc;
    outputs["l_w_basis"] = basis_json(ind.l_w);
}

void cmd_linearize(const StructureDoc& doc, const RunOptions& opts, CheckSet& cs,
                   njson& outputs) {
    FieldGC g = FieldGC::from_matrix(doc.matrix, doc.dimension);
    std::vector<Rational> pt(doc.dimension, Rational(0));
    if (opts.point)
        pt = *opts.point;
    else if (doc.point)
        pt = *doc.point;
    if (rank_at(g, pt) != 0) {
        cs.fail("rank.zero", {"rank at the point is " + std::to_string(rank_at(g, pt))});
        return;
    }
    cs.pass("rank.zero");
    ConstantGC at = evaluate_at(g, pt);
    FieldGC work = g;
    if (!at.sigma_block().is_zero()) {
        GMat bm = normalize_point(at);
        outputs["normalizing_b"] = mat_json(bm);
        work = b_transform_field(g, pmat_from_gmat(bm, doc.dimension));
        cs.pass("normalize.applied");
    } else {
        cs.pass("normalize.not_needed");
    }
    try {
        ComplexLieAlgebra alg = linearize(work, pt);
        cs.pass("algebra.axioms");
        njson cc = njson::array();
        for (int i = 0; i < alg.n_complex; ++i) {
            njson row = njson::array();
            for (int j = 0; j < alg.n_complex; ++j) {
                njson vec = njson::array();
                for (int k = 0; k < alg.n_complex; ++k)
                    vec.push_back(to_string(alg.c[i][j][k]));
                row.push_back(vec);
            }
            cc.push_back(row);
        }
        outputs["structure_constants"] = cc;
        outputs["a_matrix"] = mat_json(alg.a_mat);
        outputs["complex_dimension"] = alg.n_complex;
        outputs["abelian"] = alg.is_abelian();
        outputs["derived_dim"] = alg.derived_dim();
        outputs["center_dim"] = alg.center_dim();
        if (alg.n_complex == 2)
            outputs["nonabelian_dim2_class"] = is_isomorphic_to_aff1(alg);
    } catch (const Error& e) {
        cs.fail("algebra.axioms", {e.what()});
    }
}

void cmd_normalform(const StructureDoc& doc, const RunOptions&, CheckSet& cs,
                    njson& outputs) {
    if (!doc.chart)
        throw ParseError("normalform requires a chart declaration in the document");
    const auto& decl = *doc.chart;
    ProductChart chart{decl.n_dim};
    bool ran_any = false;

    if (decl.family) {
        ran_any = true;
        LeafFamilyB fam{*decl.family};
        try {
            KForm bp = extend_bfield(chart, fam);
            outputs["b_prime"] = form_json(bp);
            ExtendIdentities ids = extend_bfield_identities(chart, fam);
            auto flat = [](const std::vector<Polynomial>& v) {
                std::vector<std::string> out;
                for (const auto& p : v)
                    if (!p.is_zero())
                        out.push_back(p.str());
                return out;
            };
            auto all_zero = [](const std::vector<Polynomial>& v) {
                for (const auto& p : v)
                    if (!p.is_zero())
                        return false;
                return true;
            };
            cs.from_bool("extend.closed_sss", all_zero(ids.sss), flat(ids.sss));
            cs.from_bool("extend.closed_ssn", all_zero(ids.ssn), flat(ids.ssn));
            cs.from_bool("extend.closed_snn", all_zero(ids.snn), flat(ids.snn));
            cs.from_bool("extend.closed_nnn", all_zero(ids.nnn), flat(ids.nnn));
            cs.from_bool("extend.closed_aggregate", d(bp).is_zero());
        } catch (const Error& e) {
            cs.fail("extend.valid", {e.what()});
        }
    }

    if (decl.xi_p && decl.xi_q) {
        ran_any = true;
        try {
            KForm b = step3_bfield(chart, *decl.xi_p, *decl.xi_q);
            outputs["b"] = form_json(b);
            Step3Identities ids = step3_identities(chart, *decl.xi_p, *decl.xi_q, b);
            cs.from_bool("step3.lie_p", ids.lie_p.is_zero(), kform_residual(ids.lie_p));
            cs.from_bool("step3.lie_q", ids.lie_q.is_zero(), kform_residual(ids.lie_q));
            cs.from_bool("step3.iota_p", ids.iota_p.is_zero(),
                         one_form_residual(ids.iota_p));
            cs.from_bool("step3.iota_q", ids.iota_q.is_zero(),
                         one_form_residual(ids.iota_q));
            cs.from_bool("step3.closed", ids.db.is_zero(), kform_residual(ids.db));
            // slice route for closedness must agree with the direct one
            KForm db = d(b);
            bool slice_route =
                iota(chart.x_p(), db).is_zero() && iota(chart.x_q(), db).is_zero();
            for (const auto& [idx, coef] : db.components())
                if (idx[0] >= 2)
                    slice_route = slice_route && coef.is_zero();
            cs.from_bool("step3.closed_routes_agree", slice_route == ids.db.is_zero());
        } catch (const Error& e) {
            cs.fail("step3.preconditions", {e.what()});
        }
    }

    if (decl.tau) {
        ran_any = true;
        KForm rp = ftc_identity(chart, *decl.tau, FtcForm::leaf_p);
        KForm rq = ftc_identity(chart, *decl.tau, FtcForm::leaf_q);
        cs.from_bool("ftc.leaf_p", rp.is_zero(), kform_residual(rp));
        cs.from_bool("ftc.leaf_q", rq.is_zero(), kform_residual(rq));
    }

    if (!ran_any)
        throw ParseError("chart declares no family, flow forms, or test form");
}

} // namespace

StructureDoc StructureDoc::parse(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("document is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("document must be a JSON object");
    StructureDoc doc;
    if (j.contains("schema") && j["schema"] != 1)
        throw ParseError("unsupported document schema");
    std::string kind = j.value("kind", "");
    if (kind == "constant")
        doc.kind = Kind::constant;
    else if (kind == "field")
        doc.kind = Kind::field;
    else
        throw ParseError("document kind must be 'constant' or 'field'");
    doc.dimension = require_int(j, "dimension");
    if (doc.dimension < 0 || doc.dimension > 16)
        throw ParseError("dimension out of range");
    int d = doc.dimension;
    if (!j.contains("matrix"))
        throw ParseError("document missing 'matrix'");
    doc.matrix = parse_poly_matrix(j["matrix"], 2 * d, 2 * d, d);
    if (doc.kind == Kind::constant) {
        for (int r = 0; r < 2 * d; ++r)
            for (int c = 0; c < 2 * d; ++c)
                if (!doc.matrix(r, c).is_constant())
                    throw ParseError("constant documents require degree-0 entries");
    }
    if (j.contains("point"))
        doc.point = parse_point(j["point"], d);
    if (j.contains("subspaces")) {
        if (!j["subspaces"].is_object())
            throw ParseError("subspaces must be an object of named basis lists");
        for (const auto& [name, rows] : j["subspaces"].items()) {
            if (!rows.is_array())
                throw ParseError("subspace basis must be an array of rows");
            GMat m(static_cast<int>(rows.size()), d);
            for (int r = 0; r < m.rows(); ++r) {
                const auto& row = rows[r];
                if (!row.is_array() || static_cast<int>(row.size()) != d)
                    throw ParseError("subspace row has wrong length");
                for (int c = 0; c < d; ++c)
                    m(r, c) = Gaussian(rational_from_string(row[c].get<std::string>()));
            }
            doc.subspaces.emplace(name, Subspace::span(d, m));
        }
    }
    if (j.contains("chart")) {
        const auto& cj = j["chart"];
        ChartDecl decl;
        decl.n_dim = require_int(cj, "n_dim");
        if (decl.n_dim < 0 || 2 + decl.n_dim != d)
            throw ParseError("chart n_dim must satisfy 2 + n_dim = dimension");
        if (cj.contains("family"))
            decl.family = parse_poly_matrix(cj["family"], 2, decl.n_dim, d);
        if (cj.contains("xi_p"))
            decl.xi_p = parse_one_form(cj["xi_p"], d);
        if (cj.contains("xi_q"))
            decl.xi_q = parse_one_form(cj["xi_q"], d);
        if (cj.contains("tau")) {
            const auto& tj = cj["tau"];
            int k = require_int(tj, "k");
            if (k < 0 || k > 3)
                throw ParseError("tau degree out of range");
            KForm tau(d, k, d);
            if (!tj.contains("entries") || !tj["entries"].is_array())
                throw ParseError("tau needs an 'entries' array");
            for (const auto& e : tj["entries"]) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_array())
                    throw ParseError("tau entry must be [[indices...], \"poly\"]");
                KForm::Index idx;
                for (const auto& v : e[0])
                    idx.push_back(v.get<int>() - 1);
                tau.set_component(idx,
                                  tau.component(idx) +
                                      Polynomial::parse(e[1].get<std::string>(), d));
            }
            decl.tau = tau;
        }
        doc.chart = decl;
    }
    return doc;
}

RunOptions RunOptions::parse(const std::string& json_text) {
    RunOptions opts;
    if (json_text.empty())
        return opts;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("options are not valid JSON: ") + e.what());
    }
    if (j.is_null())
        return opts;
    if (!j.is_object())
        throw ParseError("options must be a JSON object");
    if (j.contains("point")) {
        std::vector<Rational> pt;
        for (const auto& v : j["point"])
            pt.push_back(rational_from_string(v.get<std::string>()));
        opts.point = pt;
    }
    if (j.contains("subspace"))
        opts.subspace = j["subspace"].get<std::string>();
    if (j.contains("degree")) {
        opts.degree = j["degree"].get<int>();
        if (opts.degree < 0 || opts.degree > 6)
            throw ParseError("degree bound out of range");
    }
    return opts;
}

std::string Report::json_text() const {
    return body.dump(2) + "\n";
}

Report run_command(const StructureDoc& doc, const std::string& command,
                   const RunOptions& opts) {
    CheckSet cs;
    njson outputs;

    if (opts.point && static_cast<int>(opts.point->size()) != doc.dimension)
        throw ParseError("--point has wrong dimension for the document");

    if (command == "check")
        cmd_check(doc, opts, cs, outputs);
    else if (command == "poisson")
        cmd_poisson(doc, opts, cs, outputs);
    else if (command == "decompose")
        cmd_decompose(doc, opts, cs, outputs);
    else if (command == "orthcomp")
        cmd_orthcomp(doc, opts, cs, outputs);
    else if (command == "linearize")
        cmd_linearize(doc, opts, cs, outputs);
    else if (command == "normalform")
        cmd_normalform(doc, opts, cs, outputs);
    else
        throw ParseError("unknown command '" + command + "'");

    Report rep;
    rep.passed = !cs.any_fail;
    rep.body["schema"] = 1;
    rep.body["command"] = command;
    njson oj;
    if (opts.point) {
        njson pj = njson::array();
        for (const auto& r : *opts.point)
            pj.push_back(to_string(r));
        oj["point"] = pj;
    }
    if (opts.subspace)
        oj["subspace"] = *opts.subspace;
    oj["degree"] = opts.degree;
    rep.body["options"] = oj;
    rep.body["status"] = rep.passed ? "pass" : "fail";
    njson checks = njson::array();
    for (const auto& [name, c] : cs.checks) {
        njson entry;
        entry["name"] = name;
        for (const auto& [k, v] : c.items())
            entry[k] = v;
        checks.push_back(entry);
    }
    rep.body["checks"] = checks;
    rep.body["outputs"] = outputs;
    return rep;
}

} // namespace gckit
