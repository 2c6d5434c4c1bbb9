/*
 * Copyright 2026 The dpcl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <ostream>

#include "family.hpp"
#include "mu3.hpp"
#include "oracle.hpp"
#include "version.hpp"

namespace dpcl {

// line-oriented "key: value" reports; integers are printed in full
struct ReportHeader {
    std::string command;
    std::string input_hash;
    std::optional<unsigned> seed;
};

inline void write_header(std::ostream& os, const ReportHeader& h) {
    os << "tool: dpcl " << DPCL_VERSION << "\n";
    os << "command: " << h.command << "\n";
    os << "input_sha256: " << h.input_hash << "\n";
    if (h.seed) os << "seed: " << *h.seed << "\n";
}

inline void write_points(std::ostream& os, const std::vector<QPoint>& pts, const GeneralPositionVerdict<Rat>& v) {
    for (size_t i = 0; i < pts.size(); ++i) os << "point_" << (i + 1) << ": " << to_string(pts[i]) << "\n";
    os << "general_position: " << (v.pass ? "PASS" : "FAIL") << "\n";
    if (!v.pass) {
        os << "violation: " << violation_name(v.kind) << "\n";
        os << "witness:";
        for (int k : v.witness) os << " point_" << (k + 1);
        os << "\n";
        if (!v.cubic.empty()) os << "witness_cubic: " << to_string(TriForm::from_coeffs(3, v.cubic)) << "\n";
    }
}

inline std::string binary_form_string(const BinaryForm& c) {
    int m = static_cast<int>(c.size()) - 1;
    std::string s;
    for (int j = m; j >= 0; --j) {
        if (sgn(c[j]) == 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c[j].get_str() + ")";
        if (j) s += "*u" + (j > 1 ? "^" + std::to_string(j) : std::string());
        if (m - j) s += "*v" + (m - j > 1 ? "^" + std::to_string(m - j) : std::string());
    }
    return s.empty() ? "0" : s;
}

inline void write_delpezzo(std::ostream& os, const DelPezzoData& d) {
    os << "u: " << to_string(d.u) << "\n";
    os << "v: " << to_string(d.v) << "\n";
    os << "w: " << to_string(d.w) << "\n";
    os << "ninth_base_point: " << to_string(d.base_point_O) << "\n";
}

inline void write_model(std::ostream& os, const TrigonalModel& m) {
    for (int j = m.n - 1; j >= 0; --j) os << "a" << j << ": " << to_string(m.a[j]) << "\n";
}

inline void write_branch_curve(std::ostream& os, const BranchCurveData& bc) {
    os << "c0: " << bc.weighted.c0.get_str() << "\n";
    os << "c2: " << binary_form_string(bc.weighted.c2) << "\n";
    os << "c4: " << binary_form_string(bc.weighted.c4) << "\n";
    os << "c6: " << binary_form_string(bc.weighted.c6) << "\n";
    os << "w_shift: " << bc.model.w_shift.get_str() << "\n";
    write_model(os, bc.model);
    os << "genus: " << geometric_genus(bc.model) << "\n";
    auto tr = totally_ramified_fibres(bc.model);
    os << "totally_ramified_rational:";
    for (auto& r : tr.finite) os << " " << r.get_str();
    os << "\n";
    os << "totally_ramified_other: " << to_string(tr.irrational) << "\n";
    os << "totally_ramified_infinity: " << (tr.infinity ? "yes" : "no") << "\n";
}

inline void write_kummer(std::ostream& os, const KummerFunction& h, const std::string& key) {
    os << key << ": " << to_string(h) << "\n";
}

inline void write_torsion(std::ostream& os, const TwoTorsionData& t) {
    os << "branch_precision: " << t.precision << "\n";
    for (size_t i = 0; i < t.thetas.size(); ++i) {
        std::string k = std::to_string(i + 1);
        os << "theta_" << k << "_point: " << to_string(t.thetas[i].center) << "\n";
        os << "g_" << k << ": " << to_string(t.thetas[i].g) << "\n";
        write_kummer(os, t.h[i], "h_" + k);
        os << "normalization_" << k << ": " << t.h[i].normalization.get_str() << "\n";
        os << "square_constant_" << k << ": " << t.h[i].square_constant.get_str() << "\n";
    }
    os << "weil_seed: " << t.weil.seed << "\n";
    os << "weil_shifts:";
    for (auto& q : t.weil.shifts) os << " " << q.get_str();
    os << "\n";
    for (auto& row : t.weil.matrix) {
        os << "weil_row: ";
        for (int x : row) os << x;
        os << "\n";
    }
    os << "weil_rank: " << t.weil.rank << "\n";
}

inline void write_profile(std::ostream& os, const AdmissibilityProfile& p) {
    os << "place  exponent\n";
    for (auto& [q, k] : p.finite) os << q.get_str() << "  " << k << "\n";
    os << "inf  " << p.archimedean.get_str() << "\n";
    os << "modulus: " << p.modulus().get_str() << "\n";
    for (auto& l : p.provenance) os << "derivation: " << l << "\n";
}

inline void write_certificate(std::ostream& os, const FieldCertificate& c) {
    os << "t: " << c.t.get_str() << "\n";
    os << "fibre: " << to_string(c.field.poly, "W") << "\n";
    os << "integral_model: " << to_string(c.field.integral, "Y") << "\n";
    os << "scale: " << c.field.scale.get_str() << "\n";
    os << "discriminant: " << c.field.discriminant.get_str() << "\n";
    os << "real_embeddings: " << c.field.real_embeddings << "\n";
    os << "precision: " << c.precision << "\n";
    for (size_t i = 0; i < c.x_const.size(); ++i)
        os << "x_" << (i + 1) << ": " << c.x_const[i].get_str() << " + " << c.x_gamma[i].get_str() << "*W\n";
    for (auto& [p, pls] : c.places)
        for (size_t w = 0; w < pls.size(); ++w)
            os << "place: p=" << p.get_str() << " index=" << w << " e=" << pls[w].e << " f=" << pls[w].f << " v(W)=" << pls[w].root_valuation.get_str() << "\n";
    for (auto& pc : c.parity_checks) {
        os << "parity: h=" << pc.h << " p=" << pc.p.get_str() << " place=" << pc.place;
        if (pc.valuation) os << " ord=" << Rat(*pc.valuation * pc.e).get_str();
        os << " " << verdict_name(pc.verdict) << "\n";
    }
    for (auto& sc : c.square2_checks)
        os << "square_at_2: h=" << sc.h << " place=" << sc.place << " v(x-1)>=" << sc.bound.get_str() << " " << verdict_name(sc.verdict) << "\n";
    for (auto& sc : c.sign_checks)
        os << "sign: h=" << sc.h << " embedding=" << sc.embedding << " sign=" << (sc.sign > 0 ? "+" : "-") << " " << verdict_name(sc.verdict) << "\n";
    os << "auxiliary_primes:";
    for (auto& q : c.independence.auxiliary_primes) os << " " << q.get_str();
    os << "\n";
    for (auto& row : c.independence.matrix) {
        os << "evidence_row: ";
        for (int x : row) os << x;
        os << "\n";
    }
    os << "independence_rank: " << c.independence.rank << "\n";
    if (c.independence.inconclusive) os << "independence: INCONCLUSIVE-INDEPENDENCE\n";
    os << "overall: " << verdict_name(c.overall) << "\n";
}

inline void write_oracle(std::ostream& os, const OracleReport& r) {
    os << "a: " << r.a.get_str() << "\n";
    os << "b: " << r.b.get_str() << "\n";
    write_profile(os, r.profile);
    for (auto& m : r.members)
        os << "member: q=" << m.q.get_str() << " D=" << m.discriminant.get_str() << " conductor^2=" << m.conductor_square.get_str()
           << " h=" << m.class_number << " 2-rank=" << m.two_rank << " independence_rank=" << m.independence_rank << "\n";
    for (auto& s : r.skipped) os << "skipped: " << s << "\n";
    os << "members: " << r.members.size() << "\n";
    os << "min_2rank: " << r.min_rank << "\n";
    os << "mean_2rank: " << r.mean_rank.get_str() << "\n";
    os << "assertion_2rank_ge_2: " << (r.assertion_holds ? "PASS" : "FAIL") << "\n";
}

inline void write_mu3(std::ostream& os, const Mu3Report& r) {
    os << "general_position: " << r.general_position.describe() << "\n";
    os << "invariant: " << (r.invariant ? "yes" : "no") << "\n";
    os << "order_three: " << (r.order_three ? "yes" : "no") << "\n";
    os << "galois_orbits: " << r.galois_orbits << "\n";
    for (auto& n : r.notes) os << "note: " << n << "\n";
    os << "verdict: " << (r.pass ? "PASS" : "FAIL") << "\n";
}

}  // namespace dpcl
