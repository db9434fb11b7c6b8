/*
   Copyright 2026 the springer-lab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "springerlab/report.hpp"

namespace sl {

std::string lambda_class_key(const LambdaClass& lbar) {
    std::string s;
    for (int b : lbar) s += b != 0 ? '1' : '0';
    return s;
}

ojson report_header(const ExperimentConfig& cfg, const BuiltDatum& built) {
    ojson j;
    j["schema_version"] = 1;
    j["tool"] = "springer-lab";
    j["config"] = ojson::object();
    j["config"]["name"] = cfg.name;
    j["config"]["p"] = cfg.p;
    j["config"]["e"] = cfg.e;
    j["config"]["q"] = built.base_field->q();
    j["config"]["hermitian"] = cfg.hermitian;
    j["config"]["precision_ceiling"] = cfg.precision_ceiling;
    j["config"]["budget"] = cfg.budget;
    j["config"]["seed"] = cfg.seed;
    ojson branches = ojson::array();
    for (const auto& b : cfg.branches) {
        ojson jb;
        jb["n"] = b.n;
        jb["gamma_plain"] = b.plain;
        jb["gamma_eps"] = b.eps;
        branches.push_back(jb);
    }
    j["config"]["branches"] = branches;
    if (built.ext != nullptr) {
        j["config"]["epsilon_index"] = built.ext->epsilon();
        j["config"]["ext_q"] = built.ext->ext().q();
    }
    return j;
}

ojson report_invariants(const SpectralDatum& datum) {
    ojson j;
    j["n_total"] = datum.n_total();
    j["delta_direct"] = datum.delta_direct();
    j["delta_formula"] = datum.delta_formula();
    j["delta_match"] = datum.delta_direct() == datum.delta_formula();
    ojson per = ojson::array();
    auto cond = datum.conductor_exponents();
    for (std::size_t i = 0; i < datum.size(); ++i) {
        ojson b;
        b["n"] = datum.branch(i).n;
        b["delta"] = datum.delta_branch(i);
        b["conductor"] = cond[i];
        b["min_poly"] = datum.minimal_polynomial(i).to_string();
        per.push_back(b);
    }
    j["branches"] = per;
    ojson rm = ojson::array();
    for (std::size_t i = 0; i < datum.size(); ++i) {
        ojson row = ojson::array();
        for (std::size_t jj = 0; jj < datum.size(); ++jj)
            row.push_back(i == jj ? 0 : datum.r_pair(i, jj));
        rm.push_back(row);
    }
    j["r_matrix"] = rm;
    return j;
}

ojson report_rosenlicht(const SpectralDatum& datum) {
    auto res = datum.rosenlicht_pairing();
    ojson j;
    j["delta"] = datum.delta_direct();
    j["omega_dim"] = res.omega_dim;
    j["perfect"] = res.perfect;
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < res.pairing.rows(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < res.pairing.cols(); ++c)
            row.push_back(res.pairing.get(r, c));
        rows.push_back(row);
    }
    j["pairing"] = rows;
    return j;
}

ojson report_enumeration(const ZPointsResult& z, bool list_points) {
    ojson j;
    j["d"] = z.model->d();
    j["N"] = z.model->N();
    j["stabilized_from_N"] = z.threshold_N;
    j["dim_window"] = z.model->dim();
    j["plane_dim"] = z.model->plane_dim();
    ojson st = ojson::array();
    for (const auto& row : z.stabilization) {
        ojson r;
        r["N"] = row.N;
        r["window_points"] = row.window_points;
        r["canonical_points"] = row.canonical_points;
        st.push_back(r);
    }
    j["stabilization"] = st;
    j["canonical_count"] = z.reps.size();
    if (list_points) {
        ojson pts = ojson::array();
        for (const auto& rep : z.reps) {
            ojson p;
            p["nu"] = rep.nu;
            p["free"] = rep.free_rank_one;
            ojson rows = ojson::array();
            for (std::size_t r = 0; r < rep.coords.rows(); ++r) {
                ojson row = ojson::array();
                for (std::size_t c = 0; c < rep.coords.cols(); ++c)
                    row.push_back(rep.coords.get(r, c));
                rows.push_back(row);
            }
            p["coords"] = rows;
            pts.push_back(p);
        }
        j["points"] = pts;
    }
    return j;
}

ojson report_classification(const Classification& cls) {
    ojson j;
    ojson counts = ojson::array();
    for (const auto& [lbar, c] : cls.counts) {
        ojson e;
        e["lambda_bar"] = lambda_class_key(lbar);
        e["count"] = c;
        counts.push_back(e);
    }
    j["counts"] = counts;
    j["fixed_total"] = cls.fixed_total;
    j["discarded"] = cls.discarded;
    return j;
}

ojson report_fl(const FLOutcome& fl) {
    ojson j;
    auto one_based = [](const std::vector<std::size_t>& v) {
        ojson a = ojson::array();
        for (auto i : v) a.push_back(i + 1);
        return a;
    };
    j["left"] = one_based(fl.left);
    j["right"] = one_based(fl.right);
    j["r"] = fl.r;
    ojson counts = ojson::array();
    for (const auto& [lbar, c] : fl.counts) {
        ojson e;
        e["lambda_bar"] = lambda_class_key(lbar);
        e["count"] = c;
        counts.push_back(e);
    }
    j["o_lambda"] = counts;
    j["o_kappa"] = fl.o_kappa;
    j["so_full"] = fl.so_full;
    j["so_left"] = fl.so_left;
    j["so_right"] = fl.so_right;
    j["q"] = fl.q_base;
    j["rhs_q_pow_r_so_so"] = fl.rhs;
    j["fl_holds"] = fl.fl_holds;
    ojson st = ojson::array();
    for (const auto& s : fl.strata) {
        ojson e;
        e["rho"] = s.rho;
        e["canonical_points"] = s.total;
        e["fixed_points"] = s.fixed;
        st.push_back(e);
    }
    j["strata"] = st;
    j["signed_strata_sum"] = fl.signed_sum;
    j["signed_matches_o_kappa"] = fl.signed_matches;
    j["discarded"] = fl.discarded;
    ojson w;
    w["N_full"] = fl.N_full;
    w["stabilized_from_N"] = fl.threshold_full;
    w["N_left"] = fl.N_left;
    w["N_right"] = fl.N_right;
    j["windows"] = w;
    return j;
}

std::string render_json(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace sl
