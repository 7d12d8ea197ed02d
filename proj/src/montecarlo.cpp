// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "amisac/montecarlo.hpp"

#include <cmath>
#include <vector>

#include "amisac/channels.hpp"
#include "amisac/estimation.hpp"

namespace amisac {

namespace {

// Pairwise (tree) reduction; keeps the floating-point error O(log n) and the
// result independent of how accumulation batches are later split.
double pairwise_sum(std::vector<double>& v, size_t lo, size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

class Mean {
public:
    explicit Mean(int n) { buf_.reserve(n); }
    void add(double x) { buf_.push_back(x); }
    double value() {
        if (buf_.empty()) return 0.0;
        return pairwise_sum(buf_, 0, buf_.size()) / static_cast<double>(buf_.size());
    }

private:
    std::vector<double> buf_;
};

class ComplexMean {
public:
    explicit ComplexMean(int n) : re_(n), im_(n) {}
    void add(cd z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cd value() { return {re_.value(), im_.value()}; }

private:
    Mean re_, im_;
};

// All estimates an AP bank produces in one fading draw: the true channels to
// the probed UE and the MMSE estimates used as precoders. The spoofing
// channel seen during training and the monitor-to-AP channel of the data
// block are independent draws (block fading across the two phases), matching
// the statistics the closed forms are derived under.
struct CapDraw {
    std::vector<Eigen::VectorXcd> g_true_k;            // channel C-AP m -> UE k, per m
    std::vector<std::vector<Eigen::VectorXcd>> g_hat;  // [m][k'] precoder estimates
};

CapDraw draw_cap_bank(int k_receiver, const NetworkRealization& r, const SystemParams& p,
                      Rng& rng, bool need_true_channel) {
    CapDraw d;
    d.g_true_k.resize(p.m_c);
    d.g_hat.resize(p.m_c);
    for (int m = 0; m < p.m_c; ++m) {
        const Eigen::MatrixXcd spoof =
            sample_rayleigh_matrix(r.beta_cap_pm(m), p.n_ap, p.n_pm, rng);
        d.g_hat[m].resize(p.k_ues);
        for (int k = 0; k < p.k_ues; ++k) {
            Eigen::VectorXcd g = sample_rayleigh_vector(r.beta_cap_ue(m, k), p.n_ap, rng);
            if (need_true_channel && k == k_receiver) d.g_true_k[m] = g;
            d.g_hat[m][k] = mmse_estimate_from_pilot(g, &spoof, m, k, r, p, rng);
        }
    }
    return d;
}

}  // namespace

SinrBreakdown empirical_sinr_ue(int k, const NetworkRealization& r,
                                const PowerAllocation& alloc, const PowerControl& eta,
                                const SystemParams& p, int n_draws, Rng& rng) {
    const double rho_c = p.rho_c();
    const double rho_s = p.rho_s();
    const double eta_pm_t = alloc.theta_t / (p.n_pm * r.zeta_pm_t);
    const double eta_pm_1 = alloc.theta_1 / (p.n_pm * r.beta_pm_ue(0));
    const double h_t_ue = std::sqrt(r.zeta_t_ue(k));

    std::vector<Eigen::VectorXcd> h_stx_t(p.m_st);
    for (int mp = 0; mp < p.m_st; ++mp)
        h_stx_t[mp] =
            los_channel(r.zeta_stx_t(mp), steering_vector(r.az_stx_t(mp), r.el_stx_t(mp), p.n_ap));
    const Eigen::VectorXcd h_pm_t =
        los_channel(r.zeta_pm_t, steering_vector(r.az_pm_t, r.el_pm_t, p.n_pm));

    ComplexMean ds_mean(n_draws);
    Mean ds_sq(n_draws), iu_sq(n_draws), is_sq(n_draws), jss_sq(n_draws), jsc_sq(n_draws);

    for (int d = 0; d < n_draws; ++d) {
        const CapDraw cap = draw_cap_bank(k, r, p, rng, true);

        cd c_ds = 0.0;
        double iu_draw = 0.0;
        for (int kp = 0; kp < p.k_ues; ++kp) {
            cd c = 0.0;
            for (int m = 0; m < p.m_c; ++m)
                c += std::sqrt(eta.eta_c(m, kp) * rho_c) *
                     (cap.g_true_k[m].transpose() * cap.g_hat[m][kp].conjugate())(0);
            if (kp == k)
                c_ds = c;
            else
                iu_draw += std::norm(c);
        }

        cd c_is = 0.0;
        for (int mp = 0; mp < p.m_st; ++mp) {
            const Eigen::VectorXcd g = sample_rayleigh_vector(r.beta_stx_ue(mp, k), p.n_ap, rng);
            const cd direct = (g.transpose() * h_stx_t[mp].conjugate())(0);
            const cd reflected =
                std::sqrt(r.alpha) * h_t_ue * (h_stx_t[mp].transpose() * h_stx_t[mp].conjugate())(0);
            c_is += std::sqrt(eta.eta_s(mp) * rho_s) * (direct + reflected);
        }

        const Eigen::VectorXcd g_pm_1 = sample_rayleigh_vector(r.beta_pm_ue(0), p.n_pm, rng);
        const Eigen::VectorXcd g_pm_k =
            (k == 0) ? g_pm_1 : sample_rayleigh_vector(r.beta_pm_ue(k), p.n_pm, rng);

        // effective monitor-to-UE row channel applied to the two jamming precoders
        auto eff = [&](const Eigen::VectorXcd& precoder) -> cd {
            const cd direct = (g_pm_k.transpose() * precoder)(0);
            const cd reflected =
                std::sqrt(r.alpha) * h_t_ue * (h_pm_t.transpose() * precoder)(0);
            return direct + reflected;
        };
        const cd c_jss = std::sqrt(eta_pm_t * alloc.rho_pm) * eff(h_pm_t.conjugate());
        const cd c_jsc = std::sqrt(eta_pm_1 * alloc.rho_pm) * eff(g_pm_1.conjugate());

        ds_mean.add(c_ds);
        ds_sq.add(std::norm(c_ds));
        iu_sq.add(iu_draw);
        is_sq.add(std::norm(c_is));
        jss_sq.add(std::norm(c_jss));
        jsc_sq.add(std::norm(c_jsc));
    }

    SinrBreakdown b;
    const cd ds_hat = ds_mean.value();
    b.ds = std::norm(ds_hat);
    b.bu = ds_sq.value() - std::norm(ds_hat);
    b.iu = iu_sq.value();
    b.is_ = is_sq.value();
    b.js_s = jss_sq.value();
    b.js_c = jsc_sq.value();
    b.noise = 1.0;
    return b;
}

SinrBreakdown empirical_sinr_monitor(const NetworkRealization& r,
                                     const PowerAllocation& alloc, const PowerControl& eta,
                                     const SystemParams& p, int n_draws, Rng& rng) {
    const double rho_c = p.rho_c();
    const double rho_s = p.rho_s();
    const double eta_pm_t = alloc.theta_t / (p.n_pm * r.zeta_pm_t);
    const double eta_pm_1 = alloc.theta_1 / (p.n_pm * r.beta_pm_ue(0));

    std::vector<Eigen::VectorXcd> h_stx_t(p.m_st);
    for (int mp = 0; mp < p.m_st; ++mp)
        h_stx_t[mp] =
            los_channel(r.zeta_stx_t(mp), steering_vector(r.az_stx_t(mp), r.el_stx_t(mp), p.n_ap));
    const Eigen::VectorXcd h_pm_t =
        los_channel(r.zeta_pm_t, steering_vector(r.az_pm_t, r.el_pm_t, p.n_pm));

    ComplexMean ds_mean(n_draws);
    Mean ds_sq(n_draws), iu_sq(n_draws), is_sq(n_draws), jss_sq(n_draws), jsc_sq(n_draws),
        n_sq(n_draws);

    for (int d = 0; d < n_draws; ++d) {
        const CapDraw cap = draw_cap_bank(0, r, p, rng, false);

        // data-block channels between the C-APs and the monitor
        std::vector<Eigen::MatrixXcd> g_cap_pm(p.m_c);
        for (int m = 0; m < p.m_c; ++m)
            g_cap_pm[m] = sample_rayleigh_matrix(r.beta_cap_pm(m), p.n_ap, p.n_pm, rng);

        // combining vector: conjugate of the received UE-1 precoded sum
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(p.n_pm);
        for (int m = 0; m < p.m_c; ++m)
            v += std::sqrt(eta.eta_c(m, 0) * rho_c) *
                 (g_cap_pm[m].transpose() * cap.g_hat[m][0].conjugate());
        const Eigen::VectorXcd w = v.conjugate();

        const cd c_ds = (w.transpose() * v)(0);  // = ||v||^2

        double iu_draw = 0.0;
        for (int kp = 1; kp < p.k_ues; ++kp) {
            Eigen::VectorXcd u = Eigen::VectorXcd::Zero(p.n_pm);
            for (int m = 0; m < p.m_c; ++m)
                u += std::sqrt(eta.eta_c(m, kp) * rho_c) *
                     (g_cap_pm[m].transpose() * cap.g_hat[m][kp].conjugate());
            iu_draw += std::norm((w.transpose() * u)(0));
        }

        cd c_is = 0.0;
        for (int mp = 0; mp < p.m_st; ++mp) {
            const Eigen::MatrixXcd g_mp_pm =
                sample_rayleigh_matrix(r.beta_stx_pm(mp), p.n_ap, p.n_pm, rng);
            const Eigen::VectorXcd lam_h =
                g_mp_pm.transpose() * h_stx_t[mp].conjugate() +
                std::sqrt(r.alpha) *
                    (h_stx_t[mp].transpose() * h_stx_t[mp].conjugate())(0) * h_pm_t;
            c_is += std::sqrt(eta.eta_s(mp) * rho_s) * (w.transpose() * lam_h)(0);
        }

        const Eigen::MatrixXcd g_si = sample_self_interference(p.sigma_si, p.n_pm, rng);
        const Eigen::VectorXcd g_pm_1 = sample_rayleigh_vector(r.beta_pm_ue(0), p.n_pm, rng);
        const cd hh = (h_pm_t.transpose() * h_pm_t.conjugate())(0);
        const Eigen::VectorXcd loop_t =
            g_si.transpose() * h_pm_t.conjugate() + std::sqrt(r.alpha) * hh * h_pm_t;
        const cd hg = (h_pm_t.transpose() * g_pm_1.conjugate())(0);
        const Eigen::VectorXcd loop_c =
            g_si.transpose() * g_pm_1.conjugate() + std::sqrt(r.alpha) * hg * h_pm_t;
        const cd c_jss = std::sqrt(eta_pm_t * alloc.rho_pm) * (w.transpose() * loop_t)(0);
        const cd c_jsc = std::sqrt(eta_pm_1 * alloc.rho_pm) * (w.transpose() * loop_c)(0);

        ds_mean.add(c_ds);
        ds_sq.add(std::norm(c_ds));
        iu_sq.add(iu_draw);
        is_sq.add(std::norm(c_is));
        jss_sq.add(std::norm(c_jss));
        jsc_sq.add(std::norm(c_jsc));
        n_sq.add(w.squaredNorm());
    }

    SinrBreakdown b;
    const cd ds_hat = ds_mean.value();
    b.ds = std::norm(ds_hat);
    b.bu = ds_sq.value() - std::norm(ds_hat);
    b.iu = iu_sq.value();
    b.is_ = is_sq.value();
    b.js_s = jss_sq.value();
    b.js_c = jsc_sq.value();
    b.noise = n_sq.value();
    return b;
}

SinrBreakdown empirical_sinr_cpu(const NetworkRealization& r, const PowerAllocation& alloc,
                                 const PowerControl& eta, const SystemParams& p, int n_draws,
                                 Rng& rng) {
    const double rho_c = p.rho_c();
    const double rho_s = p.rho_s();
    const double eta_pm_t = alloc.theta_t / (p.n_pm * r.zeta_pm_t);
    const double eta_pm_1 = alloc.theta_1 / (p.n_pm * r.beta_pm_ue(0));

    const Eigen::VectorXcd h_pm_t =
        los_channel(r.zeta_pm_t, steering_vector(r.az_pm_t, r.el_pm_t, p.n_pm));

    // echo combiners are line-of-sight only, hence deterministic
    double probing = 0.0;  // sum over transmit S-APs of sqrt(eta_s * rho_s) * N * zeta
    for (int mp = 0; mp < p.m_st; ++mp)
        probing += std::sqrt(eta.eta_s(mp) * rho_s) * p.n_ap * r.zeta_stx_t(mp);
    std::vector<Eigen::VectorXcd> h_t_srx(p.m_sr), w(p.m_sr);
    cd c_ds = 0.0;
    double noise_power = 0.0;
    for (int mr = 0; mr < p.m_sr; ++mr) {
        h_t_srx[mr] =
            los_channel(r.zeta_t_srx(mr), steering_vector(r.az_srx_t(mr), r.el_srx_t(mr), p.n_ap));
        w[mr] = (std::sqrt(r.alpha) * probing * h_t_srx[mr]).conjugate();
        // desired echo coefficient through this receiver (same deterministic chain)
        c_ds += (w[mr].transpose() * (std::sqrt(r.alpha) * probing * h_t_srx[mr]))(0);
        noise_power += w[mr].squaredNorm();
    }

    Mean iu_sq(n_draws), jss_sq(n_draws), jsc_sq(n_draws);

    for (int d = 0; d < n_draws; ++d) {
        double iu_draw = 0.0;
        if (!p.cpu_cancels_cap_interference) {
            const CapDraw cap = draw_cap_bank(0, r, p, rng, false);
            for (int k = 0; k < p.k_ues; ++k) {
                cd c = 0.0;
                for (int mr = 0; mr < p.m_sr; ++mr)
                    for (int m = 0; m < p.m_c; ++m) {
                        const Eigen::MatrixXcd g_m_mr =
                            sample_rayleigh_matrix(r.beta_cap_srx(m, mr), p.n_ap, p.n_ap, rng);
                        c += std::sqrt(eta.eta_c(m, k) * rho_c) *
                             (w[mr].transpose() * (g_m_mr.transpose() * cap.g_hat[m][k].conjugate()))(0);
                    }
                iu_draw += std::norm(c);
            }
        }

        const Eigen::VectorXcd g_pm_1 = sample_rayleigh_vector(r.beta_pm_ue(0), p.n_pm, rng);
        cd c_jss = 0.0, c_jsc = 0.0;
        for (int mr = 0; mr < p.m_sr; ++mr) {
            const Eigen::MatrixXcd g_pm_mr =
                sample_rayleigh_matrix(r.beta_pm_srx(mr), p.n_pm, p.n_ap, rng);
            const cd hh = (h_pm_t.transpose() * h_pm_t.conjugate())(0);
            const Eigen::VectorXcd lam_t =
                g_pm_mr.transpose() * h_pm_t.conjugate() + std::sqrt(r.alpha) * hh * h_t_srx[mr];
            const cd hg = (h_pm_t.transpose() * g_pm_1.conjugate())(0);
            const Eigen::VectorXcd lam_c =
                g_pm_mr.transpose() * g_pm_1.conjugate() + std::sqrt(r.alpha) * hg * h_t_srx[mr];
            c_jss += (w[mr].transpose() * lam_t)(0);
            c_jsc += (w[mr].transpose() * lam_c)(0);
        }
        jss_sq.add(eta_pm_t * alloc.rho_pm * std::norm(c_jss));
        jsc_sq.add(eta_pm_1 * alloc.rho_pm * std::norm(c_jsc));
        iu_sq.add(iu_draw);
    }

    SinrBreakdown b;
    b.ds = std::norm(c_ds);
    b.bu = 0.0;  // the desired echo is deterministic given the geometry
    b.iu = iu_sq.value();
    b.is_ = 0.0;
    b.js_s = jss_sq.value();
    b.js_c = jsc_sq.value();
    b.noise = noise_power;
    return b;
}

}  // namespace amisac
