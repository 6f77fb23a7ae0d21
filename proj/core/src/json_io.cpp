#include "conejump/json_io.hpp"

#include <algorithm>

namespace conejump {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational (integer or \"p/q\" string)");
}

Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a coefficient array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Poly(std::move(coeffs));
}

Json to_json(const ExactNumber& x) {
    Json j;
    switch (x.kind()) {
        case ExactNumber::Kind::Rational:
            j["kind"] = "rational";
            j["value"] = to_json(x.rational_value());
            break;
        case ExactNumber::Kind::Quadratic: {
            const auto& q = x.quadratic_value();
            j["kind"] = "quadratic";
            j["a"] = to_json(q.a);
            j["b"] = to_json(q.b);
            j["d"] = q.d.get_str();
            break;
        }
        default: {
            const auto& a = x.algebraic_value();
            j["kind"] = "algebraic";
            j["minpoly"] = to_json(a.minpoly);
            j["interval"] = Json::array({to_json(a.lo), to_json(a.hi)});
            j["irreducible_certified"] = a.irreducible_certified;
        }
    }
    return j;
}

ExactNumber exact_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return ExactNumber(rational_from_json(j));
    if (!j.is_object() || !j.contains("kind")) throw ParseError("expected an exact number object");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return ExactNumber(rational_from_json(j.at("value")));
    if (kind == "quadratic") {
        return ExactNumber::quadratic(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                                      Int(j.at("d").get<std::string>()));
    }
    if (kind == "algebraic") {
        Poly p = poly_from_json(j.at("minpoly"));
        return ExactNumber::algebraic(p, rational_from_json(j.at("interval").at(0)),
                                      rational_from_json(j.at("interval").at(1)));
    }
    throw ParseError("unknown exact-number kind: " + kind);
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        rows.push_back(r);
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    Matrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError("matrix row must be an array");
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rational_from_json(v));
        m.push_back(std::move(r));
    }
    return m;
}

Json to_json(const GramLattice& lattice) {
    Json j;
    j["gram"] = to_json(lattice.gram);
    j["labels"] = lattice.labels;
    return j;
}

std::shared_ptr<const GramLattice> lattice_from_json(const Json& j, bool require_ns_signature) {
    if (!j.is_object() || !j.contains("gram")) throw ParseError("lattice needs a \"gram\" field");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return std::make_shared<GramLattice>(
        make_lattice(matrix_from_json(j.at("gram")), std::move(labels), require_ns_signature));
}

Json to_json(const DivisorClass& cls) {
    Json coords = Json::array();
    for (const auto& v : cls.coords) coords.push_back(to_json(v));
    return Json{{"coords", coords}};
}

DivisorClass class_from_json(const Json& j, std::shared_ptr<const GramLattice> lattice) {
    const Json& arr = j.is_object() ? j.at("coords") : j;
    if (!arr.is_array()) throw ParseError("divisor class needs a coordinate array");
    std::vector<Rational> coords;
    for (const auto& v : arr) coords.push_back(rational_from_json(v));
    return make_class(std::move(coords), std::move(lattice));
}

Json to_json(const BoundaryCheck& check) {
    Json j;
    j["class"] = check.label;
    j["value"] = to_json(check.value);
    j["sign"] = check.sign;
    return j;
}

Json to_json(const ThresholdResult& result, int digits) {
    Json j;
    j["theta"] = to_json(result.theta);
    j["decimal"] = result.theta.decimal(digits);
    j["t0"] = to_json(result.t0);
    j["kappa"] = to_json(result.kappa);
    j["irrational"] = result.irrational;
    j["degree"] = result.degree;
    j["degree_certified"] = result.degree_certified;
    j["minpoly"] = to_json(result.theta.minimal_polynomial());
    auto [lo, hi] = result.theta.enclosure(make_rational(1, 1 << 20));
    j["isolating_interval"] = Json::array({to_json(lo), to_json(hi)});
    Json checks = Json::array();
    for (const auto& c : result.boundary_checks) checks.push_back(to_json(c));
    j["boundary_checks"] = checks;
    j["normalization_scale"] = result.normalization_scale;
    j["normalized"] = result.normalized;
    return j;
}

Json to_json(const NoVectorCertificate& cert) {
    Json j;
    j["family"] = cert.family == CertFamily::Nd ? "Nd" : "Lambda";
    j["parameter"] = cert.parameter;
    j["target_square"] = cert.target_square;
    j["kind"] = cert.kind;
    j["statement"] = cert.statement;
    Json data = Json::object();
    for (const auto& [k, v] : cert.data) data[k] = v;
    j["data"] = data;
    return j;
}

Json to_json(const IdealPower& power) {
    Json j;
    j["exponent"] = power.exponent.get_str();
    j["ideal"] = to_string(power);
    return j;
}

Json to_json(const QmReport& report) {
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        Json row;
        row["m"] = r.m;
        row["q_m"] = r.q_m.get_str();
        row["ratio"] = to_json(r.ratio);
        row["sign_vs_theta"] = r.sign_vs_theta;
        rows.push_back(row);
    }
    Json j;
    j["rows"] = rows;
    j["subadditive"] = report.subadditive;
    j["ratio_above_theta"] = report.ratio_above_theta;
    j["within_inverse_m"] = report.within_inverse_m;
    j["violations"] = report.violations;
    j["pass"] = report.pass();
    return j;
}

Json to_json(const RigidityReport& report) {
    Json j;
    j["n"] = report.n;
    j["epsilon"] = to_json(report.epsilon);
    j["samples"] = report.samples;
    j["lower_window_ok"] = report.lower_window_ok;
    j["upper_window_ok"] = report.upper_window_ok;
    j["endpoint_exact_ok"] = report.endpoint_exact_ok;
    j["violations"] = report.violations;
    j["pass"] = report.pass();
    return j;
}

Json to_json(const FrobeniusIndex& index) {
    Json j;
    j["p"] = index.p.get_str();
    j["b"] = index.b;
    j["c"] = index.c;
    j["d"] = index.d.get_str();
    j["modulus"] = index.modulus().get_str();
    return j;
}

Json to_json(const VerifyReport& report, int digits) {
    Json j;
    j["family"] = report.family;
    j["threshold"] = to_json(report.base_threshold, digits);
    j["matches_expected"] = report.matches_expected;
    j["irrational"] = report.irrational;
    j["not_q_gorenstein"] = report.not_q_gorenstein;
    j["irrationality_reason"] = report.irrationality_reason;
    j["normalization_scale"] = report.normalization_scale;
    j["normalized_in_unit_interval"] = report.normalized_in_unit_interval;
    j["kappa"] = to_json(report.kappa_normalized);
    j["kappa_decimal"] = report.kappa_normalized.decimal(digits);
    Json preview = Json::array();
    for (const auto& t : report.jump_preview) {
        Json p;
        p["exact"] = to_json(t);
        p["decimal"] = t.decimal(digits);
        preview.push_back(p);
    }
    j["jumping_number_preview"] = preview;
    j["cover_invariance_ok"] = report.cover_invariance_ok;
    Json certs = Json::array();
    for (const auto& c : report.certificates) certs.push_back(to_json(c));
    j["certificates"] = certs;
    j["generator_count"] = report.generator_count;
    j["pass"] = report.pass;
    return j;
}

Json to_json(const ConePoint& t, int digits) {
    Json j;
    j["u"] = to_json(t.u);
    j["v"] = to_json(t.v);
    ExactNumber value = t.value();
    j["value"] = to_json(value);
    j["decimal"] = value.decimal(digits);
    return j;
}

ConePoint parse_cone_point(const std::string& text, std::shared_ptr<const ExactNumber> theta) {
    // Accepted: "p/q" | "u+v*theta" | "u-v*theta" | "v*theta" | "theta".
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto star = s.find("*theta");
    if (star == std::string::npos) {
        if (s == "theta") return ConePoint(Rational(0), Rational(1), std::move(theta));
        return ConePoint(parse_rational(s), Rational(0), std::move(theta));
    }
    std::string left = s.substr(0, star);
    if (s.size() != star + 6) throw ParseError("trailing characters after theta in: " + text);
    // Split left into u and v at the last +/- that is not a leading sign.
    size_t split = std::string::npos;
    for (size_t i = left.size(); i-- > 1;) {
        if ((left[i] == '+' || left[i] == '-') && left[i - 1] != '/' && left[i - 1] != '+' && left[i - 1] != '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return ConePoint(Rational(0), parse_rational(left), std::move(theta));
    Rational u = parse_rational(left.substr(0, split));
    std::string vtxt = left.substr(split);
    if (vtxt == "+") vtxt = "1";
    if (vtxt == "-") vtxt = "-1";
    return ConePoint(u, parse_rational(vtxt), std::move(theta));
}

FamilySpec family_from_json(const Json& j) {
    FamilySpec f;
    f.name = j.value("name", std::string("custom"));
    f.display = f.name;
    f.lattice = lattice_from_json(j, j.value("require_ns_signature", false));
    f.L = class_from_json(j.at("L"), f.lattice);
    f.M = class_from_json(j.at("M"), f.lattice);
    ConeKind kind = ConeKind::Rank2PositiveCone;
    long param = 0;
    if (j.contains("cone")) {
        const Json& c = j.at("cone");
        std::string kname = c.is_string() ? c.get<std::string>() : c.value("kind", std::string("rank2"));
        if (kname == "ee") kind = ConeKind::AbelianEE;
        else if (kname == "isogenous") {
            kind = ConeKind::AbelianIsogenous;
            param = c.is_object() ? c.value("d", 1L) : 1L;
        } else if (kname == "eg") {
            kind = ConeKind::AbelianEg;
            param = c.is_object() ? c.value("g", 2L) : 2L;
        } else if (kname != "rank2")
            throw ParseError("unknown cone kind: " + kname);
    }
    DivisorClass witness = j.contains("witness") ? class_from_json(j.at("witness"), f.lattice) : f.M;
    f.cone = ConeDescriptor{kind, param, witness, {}};
    if (j.value("check_basis_boundaries", false)) {
        for (size_t i = 0; i < f.lattice->rank(); ++i) {
            std::vector<long> e(f.lattice->rank(), 0);
            e[i] = 1;
            f.cone.boundary_classes.emplace_back(f.lattice->labels[i], make_class(e, f.lattice));
        }
    }
    if (j.contains("expected_theta")) f.expected_theta = exact_from_json(j.at("expected_theta"));
    f.needs_cover = j.value("needs_cover", true);
    f.k_psef = j.value("k_psef", false);
    f.base_chi = j.value("base_chi", 0L);
    f.r_override = j.value("r", 0L);
    return f;
}

std::vector<FamilySpec> registry_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("family registry must be a JSON array");
    std::vector<FamilySpec> out;
    for (const auto& entry : j) out.push_back(family_from_json(entry));
    return out;
}

} // namespace conejump
