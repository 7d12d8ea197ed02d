// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "amisac/sinr.hpp"

#include <cmath>

namespace amisac {

PowerControl default_ap_power_control(const NetworkRealization& real,
                                      const EstimationStats& stats,
                                      const SystemParams& p) {
    PowerControl pc;
    pc.eta_c.resize(p.m_c, p.k_ues);
    for (int m = 0; m < p.m_c; ++m) {
        const double denom = p.n_ap * stats.gamma.row(m).sum();
        for (int k = 0; k < p.k_ues; ++k) pc.eta_c(m, k) = 1.0 / denom;
    }
    pc.eta_s.resize(p.m_st);
    for (int m = 0; m < p.m_st; ++m) pc.eta_s(m) = 1.0 / (p.n_ap * real.zeta_stx_t(m));
    return pc;
}

PowerAllocation epa_allocation(double rho_pm) { return {0.5, 0.5, rho_pm}; }

namespace {

// ---- jamming-independent denominator pieces, shared by the direct SINR
// ---- evaluators and the q-coefficient builder

struct UeBulk {
    double ds_amp = 0, bu = 0, iu = 0, is = 0;
};

UeBulk ue_bulk(int k, const NetworkRealization& r, const EstimationStats& s,
               const PowerControl& eta, const SystemParams& p) {
    const double N = p.n_ap;
    const double rho_c = p.rho_c();
    const double rho_s = p.rho_s();
    UeBulk t;
    for (int m = 0; m < p.m_c; ++m) {
        t.ds_amp += std::sqrt(eta.eta_c(m, k) * rho_c) * N * s.gamma(m, k);
        t.bu += rho_c * N * eta.eta_c(m, k) * s.gamma(m, k) * r.beta_cap_ue(m, k);
        for (int kp = 0; kp < p.k_ues; ++kp) {
            if (kp == k) continue;
            t.iu += eta.eta_c(m, kp) * rho_c * N * s.gamma(m, kp) * r.beta_cap_ue(m, k);
        }
    }
    for (int mp = 0; mp < p.m_st; ++mp) {
        double cross = 0.0;
        for (int mq = 0; mq < p.m_st; ++mq) {
            if (mq == mp) continue;
            cross += std::sqrt(eta.eta_s(mq)) * r.zeta_stx_t(mq) * r.zeta_t_ue(k) * r.alpha * N;
        }
        t.is += std::sqrt(eta.eta_s(mp)) * rho_s * r.zeta_stx_t(mp) * N *
                (r.alpha * std::sqrt(eta.eta_s(mp)) * N * r.zeta_stx_t(mp) * r.zeta_t_ue(k) +
                 std::sqrt(eta.eta_s(mp)) * r.beta_stx_ue(mp, k) + cross);
    }
    return t;
}

struct MonitorBulk {
    double ds_amp = 0, bu = 0, iu = 0, is = 0, noise = 0;
};

MonitorBulk monitor_bulk(const NetworkRealization& r, const EstimationStats& s,
                         const PowerControl& eta, const SystemParams& p) {
    const double N = p.n_ap;
    const double Npm = p.n_pm;
    const double rho_c = p.rho_c();
    const double rho_s = p.rho_s();
    MonitorBulk t;
    for (int m = 0; m < p.m_c; ++m) {
        const double link = eta.eta_c(m, 0) * rho_c * r.beta_cap_pm(m) * s.gamma(m, 0) * N;
        t.ds_amp += link * Npm;
        t.noise += link * Npm;
    }
    {
        double a = 0.0;
        for (int m = 0; m < p.m_c; ++m)
            a += eta.eta_c(m, 0) * rho_c * r.beta_cap_pm(m) * s.gamma(m, 0) * N;
        t.bu = a * a * Npm;
    }
    for (int kp = 1; kp < p.k_ues; ++kp) {
        for (int m = 0; m < p.m_c; ++m) {
            double other = 0.0;
            for (int mt = 0; mt < p.m_c; ++mt) {
                if (mt == m) continue;
                other += eta.eta_c(mt, 0) * N * s.gamma(mt, 0) * r.beta_cap_pm(mt);
            }
            t.iu += eta.eta_c(m, kp) * rho_c * rho_c * Npm * N * s.gamma(m, kp) *
                    r.beta_cap_pm(m) *
                    (eta.eta_c(m, 0) * (Npm + N) * r.beta_cap_pm(m) * s.gamma(m, 0) + other);
        }
    }
    for (int m = 0; m < p.m_c; ++m) {
        for (int mp = 0; mp < p.m_st; ++mp) {
            double cross = 0.0;
            for (int mq = 0; mq < p.m_st; ++mq) {
                if (mq == mp) continue;
                cross += std::sqrt(eta.eta_s(mq)) * N * r.zeta_pm_t * r.zeta_stx_t(mq) * r.alpha;
            }
            t.is += std::sqrt(eta.eta_s(mp)) * eta.eta_c(m, 0) * rho_s * rho_c *
                    r.beta_cap_pm(m) * s.gamma(m, 0) * r.zeta_stx_t(mp) * Npm * N * N *
                    (std::sqrt(eta.eta_s(mp)) * r.beta_stx_pm(mp) +
                     std::sqrt(eta.eta_s(mp)) * N * r.zeta_pm_t * r.zeta_stx_t(mp) * r.alpha +
                     cross);
        }
    }
    return t;
}

struct CpuBulk {
    double ds_amp = 0, iu = 0, noise = 0;
};

// coherent probing sum over transmit S-APs
double probing_sum(const NetworkRealization& r, const PowerControl& eta, const SystemParams& p) {
    double s1 = 0.0;
    for (int mp = 0; mp < p.m_st; ++mp)
        s1 += std::sqrt(eta.eta_s(mp)) * r.zeta_stx_t(mp);
    return s1;
}

CpuBulk cpu_bulk(const NetworkRealization& r, const EstimationStats& s, const PowerControl& eta,
                 const SystemParams& p) {
    const double N = p.n_ap;
    const double rho_c = p.rho_c();
    const double rho_s = p.rho_s();
    CpuBulk t;
    for (int mr = 0; mr < p.m_sr; ++mr) {
        for (int mp = 0; mp < p.m_st; ++mp) {
            double cross = 0.0;
            for (int mq = 0; mq < p.m_st; ++mq) {
                if (mq == mp) continue;
                cross += std::sqrt(eta.eta_s(mq)) * r.zeta_stx_t(mq);
            }
            const double paired = std::sqrt(eta.eta_s(mp)) * r.zeta_stx_t(mp) + cross;
            t.ds_amp += std::sqrt(eta.eta_s(mp)) * rho_s * r.zeta_stx_t(mp) * r.zeta_t_srx(mr) *
                        r.alpha * N * N * N * paired;
            t.noise += std::sqrt(eta.eta_s(mp)) * rho_s * r.alpha * r.zeta_t_srx(mr) *
                       r.zeta_stx_t(mp) * N * N * N * paired;
            if (!p.cpu_cancels_cap_interference) {
                for (int k = 0; k < p.k_ues; ++k)
                    for (int m = 0; m < p.m_c; ++m)
                        t.iu += eta.eta_c(m, k) * std::sqrt(eta.eta_s(mp)) * rho_c * rho_s *
                                s.gamma(m, k) * r.alpha * N * N * N * N *
                                r.beta_cap_srx(m, mr) * r.zeta_t_srx(mr) * r.zeta_stx_t(mp) *
                                paired;
            }
        }
    }
    return t;
}

}  // namespace

SinrBreakdown sinr_ue(int k, const NetworkRealization& r, const EstimationStats& s,
                      const PowerAllocation& alloc, const PowerControl& eta,
                      const SystemParams& p) {
    const double Npm = p.n_pm;
    const UeBulk t = ue_bulk(k, r, s, eta, p);
    SinrBreakdown b;
    b.ds = t.ds_amp * t.ds_amp;
    b.bu = t.bu;
    b.iu = t.iu;
    b.is_ = t.is;
    // eta_pm_t = theta_t / (Npm * zeta_pm_t), eta_pm_1 = theta_1 / (Npm * beta_pm_1)
    const double eta_pm_t = alloc.theta_t / (Npm * r.zeta_pm_t);
    const double eta_pm_1 = alloc.theta_1 / (Npm * r.beta_pm_ue(0));
    b.js_s = eta_pm_t * alloc.rho_pm * r.zeta_pm_t * Npm *
             (r.beta_pm_ue(k) + r.alpha * r.zeta_t_ue(k) * Npm * r.zeta_pm_t);
    if (k == 0) {
        b.js_c = eta_pm_1 * alloc.rho_pm * r.beta_pm_ue(0) * Npm *
                 ((Npm + 1.0) * r.beta_pm_ue(0) + r.alpha * r.zeta_t_ue(0) * r.zeta_pm_t);
    } else {
        b.js_c = eta_pm_1 * alloc.rho_pm * r.beta_pm_ue(0) * Npm *
                 (r.beta_pm_ue(k) + r.alpha * r.zeta_t_ue(k) * r.zeta_pm_t);
    }
    b.noise = 1.0;
    return b;
}

SinrBreakdown sinr_monitor(const NetworkRealization& r, const EstimationStats& s,
                           const PowerAllocation& alloc, const PowerControl& eta,
                           const SystemParams& p) {
    const double N = p.n_ap;
    const double Npm = p.n_pm;
    const double rho_c = p.rho_c();
    const MonitorBulk t = monitor_bulk(r, s, eta, p);
    SinrBreakdown b;
    b.ds = t.ds_amp * t.ds_amp;
    b.bu = t.bu;
    b.iu = t.iu;
    b.is_ = t.is;
    b.noise = t.noise;
    const double eta_pm_t = alloc.theta_t / (Npm * r.zeta_pm_t);
    const double eta_pm_1 = alloc.theta_1 / (Npm * r.beta_pm_ue(0));
    for (int m = 0; m < p.m_c; ++m) {
        const double comb = eta.eta_c(m, 0) * rho_c * r.beta_cap_pm(m) * N * s.gamma(m, 0);
        b.js_s += eta_pm_t * alloc.rho_pm * r.zeta_pm_t * Npm * Npm * comb *
                  (p.sigma_si + r.alpha * Npm * r.zeta_pm_t * r.zeta_pm_t);
        b.js_c += eta_pm_1 * alloc.rho_pm * Npm * Npm * r.beta_pm_ue(0) * comb *
                  (p.sigma_si + r.alpha * r.zeta_pm_t * r.zeta_pm_t);
    }
    return b;
}

SinrBreakdown sinr_cpu(const NetworkRealization& r, const EstimationStats& s,
                       const PowerAllocation& alloc, const PowerControl& eta,
                       const SystemParams& p) {
    const double N = p.n_ap;
    const double Npm = p.n_pm;
    const double rho_c = p.rho_c();
    const double rho_s = p.rho_s();
    const CpuBulk t = cpu_bulk(r, s, eta, p);
    SinrBreakdown b;
    b.ds = t.ds_amp * t.ds_amp;
    b.iu = t.iu;
    b.noise = t.noise;
    const double s1 = probing_sum(r, eta, p);
    const double zt_sum = r.zeta_t_srx.sum();
    const double eta_pm_t = alloc.theta_t / (Npm * r.zeta_pm_t);
    const double eta_pm_1 = alloc.theta_1 / (Npm * r.beta_pm_ue(0));
    double zb = 0.0;  // echo-weighted monitor-to-receive-S-AP gain
    for (int mr = 0; mr < p.m_sr; ++mr) zb += r.zeta_t_srx(mr) * r.beta_pm_srx(mr);
    b.js_s = eta_pm_t * rho_s * alloc.rho_pm * r.alpha * N * N * N * Npm * r.zeta_pm_t * zb *
                 s1 * s1 +
             eta_pm_t * alloc.rho_pm * rho_s * r.zeta_pm_t * r.zeta_pm_t * N * N * N * N * Npm *
                 Npm * r.alpha * r.alpha * s1 * s1 * zt_sum * zt_sum;
    b.js_c = eta_pm_1 * alloc.rho_pm * rho_s * r.alpha * Npm * N * N * N * r.beta_pm_ue(0) * zb *
                 s1 * s1 +
             eta_pm_1 * alloc.rho_pm * rho_c * r.zeta_pm_t * r.beta_pm_ue(0) * N * N * N * N *
                 Npm * r.alpha * r.alpha * s1 * s1 * zt_sum * zt_sum;
    return b;
}

QCoefficients q_coefficients(const NetworkRealization& r, const EstimationStats& s,
                             const PowerControl& eta, double rho_pm, const SystemParams& p) {
    const double N = p.n_ap;
    const double Npm = p.n_pm;
    const double rho_c = p.rho_c();
    const double rho_s = p.rho_s();
    QCoefficients q;
    q.rho_pm = rho_pm;

    const MonitorBulk mb = monitor_bulk(r, s, eta, p);
    q.q1 = mb.ds_amp * mb.ds_amp;
    for (int m = 0; m < p.m_c; ++m) {
        q.q2 += rho_pm * eta.eta_c(m, 0) * rho_c * r.beta_cap_pm(m) * Npm * N * s.gamma(m, 0) *
                (p.sigma_si + r.alpha * Npm * r.zeta_pm_t * r.zeta_pm_t);
        q.q3 += eta.eta_c(m, 0) * rho_c * rho_pm * s.gamma(m, 0) * N * Npm * r.beta_cap_pm(m) *
                (p.sigma_si + r.alpha * r.zeta_pm_t * r.zeta_pm_t);
    }
    q.q4 = mb.bu + mb.iu + mb.is + mb.noise;

    const UeBulk ub = ue_bulk(0, r, s, eta, p);
    q.q5 = ub.ds_amp * ub.ds_amp;
    q.q6 = rho_pm * (r.beta_pm_ue(0) + r.alpha * r.zeta_t_ue(0) * Npm * r.zeta_pm_t);
    q.q7 = rho_pm * (Npm * r.beta_pm_ue(0) + r.beta_pm_ue(0) +
                     r.alpha * r.zeta_t_ue(0) * r.zeta_pm_t);
    q.q8 = ub.bu + ub.iu + ub.is + 1.0;

    const CpuBulk cb = cpu_bulk(r, s, eta, p);
    q.q9 = cb.ds_amp * cb.ds_amp;
    const double s1 = probing_sum(r, eta, p);
    const double zt_sum = r.zeta_t_srx.sum();
    for (int mr = 0; mr < p.m_sr; ++mr) {
        q.q10 += rho_s * rho_pm * r.zeta_t_srx(mr) * r.beta_pm_srx(mr) * N * N * N * r.alpha *
                 s1 * s1;
        q.q11 += rho_pm * rho_s * r.alpha * r.zeta_t_srx(mr) * N * N * N * r.beta_pm_srx(mr) *
                 s1 * s1;
    }
    q.q10 += rho_pm * rho_s * r.zeta_pm_t * N * N * N * N * Npm * r.alpha * r.alpha * s1 * s1 *
             zt_sum * zt_sum;
    q.q11 += rho_pm * rho_c * r.zeta_pm_t * N * N * N * N * r.alpha * r.alpha * s1 * s1 *
             zt_sum * zt_sum;
    q.q12 = cb.iu + cb.noise;
    return q;
}

UeAsymptotics asymptotic_ue_limit(int k, const NetworkRealization& r, const EstimationStats& s,
                                  const PowerControl& eta, const SystemParams& p,
                                  double p_pm_fixed) {
    const UeBulk t = ue_bulk(k, r, s, eta, p);
    UeAsymptotics a;
    a.js_s = 0.5 * p_pm_fixed * r.alpha * r.zeta_t_ue(k) * r.zeta_pm_t;
    a.js_c = (k == 0) ? 0.5 * p_pm_fixed * r.beta_pm_ue(0) : 0.0;
    a.sinr = t.ds_amp * t.ds_amp / (t.bu + t.iu + t.is + a.js_s + a.js_c + 1.0);
    return a;
}

double asymptotic_sinr_monitor_limit(const NetworkRealization& r, const EstimationStats& s,
                                     const PowerControl& eta, const SystemParams& p) {
    const double N = p.n_ap;
    double num = 0.0;
    for (int m = 0; m < p.m_c; ++m)
        num += eta.eta_c(m, 0) * r.beta_cap_pm(m) * N * s.gamma(m, 0);
    double den = 0.0;
    for (int kp = 1; kp < p.k_ues; ++kp)
        for (int m = 0; m < p.m_c; ++m)
            den += eta.eta_c(m, kp) * eta.eta_c(m, 0) * N * s.gamma(m, kp) *
                   r.beta_cap_pm(m) * r.beta_cap_pm(m) * s.gamma(m, 0);
    return num * num / den;
}

double asymptotic_sinr_cpu_limit(const NetworkRealization& r, const EstimationStats& s,
                                 const PowerControl& eta, const SystemParams& p,
                                 double p_pm_fixed) {
    const double N = p.n_ap;
    const CpuBulk t = cpu_bulk(r, s, eta, p);
    const double s1 = probing_sum(r, eta, p);
    const double zt_sum = r.zeta_t_srx.sum();
    const double js_s_lim = 0.5 * p_pm_fixed * p.rho_s() * r.zeta_pm_t * N * N * N * N *
                            r.alpha * r.alpha * s1 * s1 * zt_sum * zt_sum;
    return t.ds_amp * t.ds_amp / (t.iu + js_s_lim + t.noise);
}

}  // namespace amisac
