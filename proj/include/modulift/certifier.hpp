#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modulift/atsp.hpp"
#include "modulift/encoding.hpp"
#include "modulift/filters.hpp"
#include "modulift/modular.hpp"

namespace modulift {

enum class CertifyMode { oracle, self_normalized };

enum class Verdict {
    certified_optimal,
    rejected_t,
    rejected_fourier,
    rejected_hecke,
    rejected_lambda,
    indeterminate,
};

std::string to_string(Verdict v);
std::string to_string(CertifyMode m);

struct CertifyConfig {
    WeightPolicy weight_policy = WeightPolicy::min;
    std::optional<int> weight_override;
    std::optional<int> height_override;  // coset enumeration bound
    std::optional<double> zero_tol_override;
    std::optional<int> m_override;     // Fourier truncation, must be >= 2|A|
    double y0 = 0.8;                   // coefficient sampling height
    int series_order = 60;             // Q for the equilibrium residual
    double fourier_tol = 1e-6;         // relative ||V a|| threshold
    double hecke_tol = 1e-6;
    double lambda_tol = 1e-6;
};

struct StageStatus {
    bool ran = false;
    bool passed = false;
    bool indeterminate = false;
};

struct MembershipCounts {
    int member = 0;
    int non_member = 0;
    int indeterminate = 0;
};

struct CertificateReport {
    int version = 1;
    std::string instance_name;
    int n = 0;
    int num_arcs = 0;
    std::vector<int> tour_order;       // 1-indexed for reporting
    Cost tour_cost_value = 0;
    Cost r_ref = 0;
    CertifyMode mode = CertifyMode::oracle;
    Rational t;
    bool t_is_one = false;

    int weight = 0;
    ZeroBudget budget;
    int fourier_M = 0;

    StageStatus stage_t, stage_residual, stage_membership, stage_fourier,
        stage_hecke, stage_lambda;

    Complex equilibrium_residual_value;
    MembershipCounts membership;
    std::vector<double> membership_margins;   // per lifted point, s then tau per arc

    int vandermonde_rank = 0;
    int vandermonde_kernel_dim = 0;
    double fourier_residual = 0.0;
    double max_abs_coeff = 0.0;

    double hecke_max_residual = 0.0;
    bool hecke_normalizable = false;

    LambdaReport lambda;

    Verdict verdict = Verdict::indeterminate;
    std::vector<std::string> discrepancy_notes;
};

CertificateReport certify(const AtspInstance& inst, const Tour& candidate,
                          const CertifyConfig& cfg,
                          CertifyMode mode = CertifyMode::oracle);

std::string serialize_report(const CertificateReport& r);
CertificateReport parse_report(const std::string& json_text);

int verdict_exit_code(Verdict v);  // 0 certified, 2 rejected, 3 indeterminate

}  // namespace modulift
