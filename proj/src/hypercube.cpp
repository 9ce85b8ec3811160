#include "pv/hypercube.hpp"

#include <cmath>
#include <map>

namespace pv {

namespace {

int cube_side(int m) {
    int n = int(std::lround(std::sqrt(double(m))));
    if (n * n != m || n < 2)
        throw ShapeError("hypercube: m must be a perfect square n^2 with n >= 2");
    return n;
}

CVec vec_row(const CMat& M) {
    CVec v(M.rows() * M.cols());
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            v(i * M.cols() + j) = M(i, j);
    return v;
}

CMat swap_messages(const CMat& xi, int loc, int msg) {
    if (msg == 1) return xi;
    const int kt = loc * msg;
    CMat out(kt, kt);
    for (int la = 0; la < loc; ++la)
        for (int ma = 0; ma < msg; ++ma)
            for (int lb = 0; lb < loc; ++lb)
                for (int mb = 0; mb < msg; ++mb)
                    out(la * msg + mb, lb * msg + ma) = xi(la * msg + ma, lb * msg + mb);
    return out;
}

} // namespace

HypercubeFunction linear_hypercube_map(int m, const std::vector<CMat>& xs, NormTag tag) {
    if (int(xs.size()) != m) throw ShapeError("linear_hypercube_map: need m coefficient vectors");
    HypercubeFunction F;
    F.m = m;
    F.space = tag;
    F.eval = [xs, m](const SignVector& eps) {
        CMat acc = CMat::Zero(xs[0].rows(), xs[0].cols());
        for (int j = 0; j < m; ++j) acc += double(eps.entries[std::size_t(j)]) * xs[std::size_t(j)];
        return CMat(acc / double(m));
    };
    return F;
}

CMat derivative(const HypercubeFunction& F, const SignVector& eps, int direction) {
    if (direction < 0 || direction >= F.m) throw ShapeError("derivative: direction out of range");
    return 0.5 * (F.eval(eps) - F.eval(eps.flipped(direction)));
}

SigmaReport sigma(const HypercubeFunction& F, bool exact, std::uint64_t samples, SeededRng rng) {
    const int n = cube_side(F.m);
    SigmaReport rep;
    rep.log_prefactor = std::log(double(F.m));
    auto local = [&](const SignVector& eps) {
        CMat base = F.eval(eps);  // shared across directions
        double acc = 0.0;
        for (int d = 0; d < F.m; ++d) {
            CMat der = 0.5 * (base - F.eval(eps.flipped(d)));
            double nd = norm_eval(F.space, der, F.norm_opts).value;
            acc += nd * nd;
        }
        return std::sqrt(acc);
    };
    double mean = 0.0;
    if (exact) {
        const std::uint64_t total = sign_count(n);
        for (std::uint64_t idx = 0; idx < total; ++idx)
            mean += local(SignVector::from_index(idx, n));
        mean /= double(total);
        rep.mode = "exact";
        rep.samples = total;
    } else {
        for (std::uint64_t s = 0; s < samples; ++s) {
            SeededRng draw = rng.child(s);
            mean += local(SignVector::random(n, draw));
        }
        mean /= double(samples);
        rep.mode = "monte-carlo";
        rep.samples = samples;
    }
    rep.sigma = rep.log_prefactor * mean;
    return rep;
}

PisierCheck pisier_check(const HypercubeFunction& F, bool exact, std::uint64_t samples,
                         SeededRng rng) {
    const int n = cube_side(F.m);
    const double logm = std::log(double(F.m));
    PisierCheck out;
    auto norm_of = [&](const CMat& M) { return norm_eval(F.space, M, F.norm_opts).value; };
    if (exact) {
        const std::uint64_t total = sign_count(n);
        CMat mean;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            CMat v = F.eval(SignVector::from_index(idx, n));
            if (idx == 0) mean = v; else mean += v;
        }
        mean /= double(total);
        double lhs = 0.0, inner = 0.0;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            SignVector eps = SignVector::from_index(idx, n);
            lhs += norm_of(F.eval(eps) - mean);
            std::vector<CMat> ders;
            ders.reserve(std::size_t(F.m));
            for (int d = 0; d < F.m; ++d) ders.push_back(derivative(F, eps, d));
            for (std::uint64_t tmask = 0; tmask < total; ++tmask) {
                CMat acc = CMat::Zero(ders[0].rows(), ders[0].cols());
                for (int d = 0; d < F.m; ++d)
                    acc += ((tmask >> d) & 1 ? -1.0 : 1.0) * ders[std::size_t(d)];
                inner += norm_of(acc);
            }
        }
        out.lhs = lhs / double(total);
        out.rhs = logm * inner / (double(total) * double(total));
    } else {
        double lhs = 0.0, inner = 0.0;
        // estimate the mean first from the same sample budget
        CMat mean;
        for (std::uint64_t s = 0; s < samples; ++s) {
            SeededRng draw = rng.child(2 * s);
            CMat v = F.eval(SignVector::random(n, draw));
            if (s == 0) mean = v; else mean += v;
        }
        mean /= double(samples);
        for (std::uint64_t s = 0; s < samples; ++s) {
            SeededRng draw = rng.child(2 * s + 1);
            SignVector eps = SignVector::random(n, draw);
            SignVector tld = SignVector::random(n, draw);
            lhs += norm_of(F.eval(eps) - mean);
            CMat acc;
            for (int d = 0; d < F.m; ++d) {
                CMat der = double(tld.entries[std::size_t(d)]) * derivative(F, eps, d);
                if (d == 0) acc = der; else acc += der;
            }
            inner += norm_of(acc);
        }
        out.lhs = lhs / double(samples);
        out.rhs = logm * inner / double(samples);
    }
    out.ratio = out.rhs > 1e-300 ? out.lhs / out.rhs : 0.0;
    return out;
}

// ---------------------------------------------------------------------------
// strategy-derived maps

HypercubeFunction phi(const PureStrategy& S, PhiVariant variant) {
    const int n = S.n, k = S.k, kt = S.kt, r = S.r;
    const int loc = kt / S.msg, msg = S.msg;
    HypercubeFunction F;
    F.m = n * n;
    if (variant == PhiVariant::i) {
        F.space = NormTag{NormTag::Kind::Operator, r * r, k * kt, 0};
        F.eval = [S, n, k, kt, r, loc, msg](const SignVector& eps) {
            CMat Vte = S.Vt(eps), Wte = S.Wt(eps);
            CMat out = CMat::Zero(Eigen::Index(r) * r, Eigen::Index(k) * kt);
            for (int c = 0; c < k; ++c)
                for (int l = 0; l < kt; ++l) {
                    CMat amp = CMat::Zero(r, r);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                            CMat xi = CMat::Zero(kt, kt);
                            xi.col(l) = S.V.col(Eigen::Index(i * n + j) * k + c);
                            CMat xip = swap_messages(xi, loc, msg);
                            amp.noalias() += double(eps.at(i, j)) *
                                             (Vte.middleRows(Eigen::Index(i) * r, r) * xip *
                                              Wte.middleRows(Eigen::Index(j) * r, r).transpose());
                        }
                    out.col(Eigen::Index(c) * kt + l) = vec_row(amp) / double(n * n);
                }
            return out;
        };
        return F;
    }
    if (variant == PhiVariant::ii) {
        F.space = NormTag{NormTag::Kind::WSchatten2cb, kt, n, 0};
        F.eval = [S, n, k, kt, loc, msg](const SignVector& eps) {
            CMat We = S.W(eps);
            CMat Fmat(k, k);
            for (int m1 = 0; m1 < k; ++m1)
                for (int m2 = 0; m2 < k; ++m2) Fmat(m1, m2) = S.phi(Eigen::Index(m1) * k + m2);
            CMat out = CMat::Zero(Eigen::Index(n) * kt, Eigen::Index(n) * kt);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    CMat Xij = S.V.middleCols(Eigen::Index(i * n + j) * k, k);
                    CMat xip = swap_messages(Xij * Fmat * We.transpose(), loc, msg);
                    out.block(Eigen::Index(i) * kt, Eigen::Index(j) * kt, kt, kt) =
                        (double(eps.at(i, j)) / double(n * n)) * xip;
                }
            return out;
        };
        return F;
    }
    // variant iii: the eps-linear map with an open state slot of dim k*kt
    F.space = NormTag{NormTag::Kind::WSchatten2cbState, kt, n, k * kt};
    F.eval = [S, n, k, kt, loc, msg](const SignVector& eps) {
        const Eigen::Index rows = Eigen::Index(n) * kt * n * kt;
        CMat out = CMat::Zero(rows, Eigen::Index(k) * kt);
        for (int c = 0; c < k; ++c)
            for (int l = 0; l < kt; ++l) {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        CMat xi = CMat::Zero(kt, kt);
                        xi.col(l) = S.V.col(Eigen::Index(i * n + j) * k + c);
                        CMat xip = swap_messages(xi, loc, msg);
                        double w = double(eps.at(i, j)) / double(n * n);
                        for (int l1 = 0; l1 < kt; ++l1)
                            for (int l2 = 0; l2 < kt; ++l2)
                                out((Eigen::Index(i) * kt + l1) * (Eigen::Index(n) * kt) +
                                        Eigen::Index(j) * kt + l2,
                                    Eigen::Index(c) * kt + l) = w * xip(l1, l2);
                    }
            }
        return out;
    };
    return F;
}

GapReport value_domination_gap(const PureStrategy& S) {
    GapReport rep;
    rep.omega = value_exact(S).value;
    HypercubeFunction Fi = phi(S, PhiVariant::i);
    HypercubeFunction Fii = phi(S, PhiVariant::ii);
    const std::uint64_t total = sign_count(S.n);
    double mi = 0.0, mii = 0.0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        SignVector eps = SignVector::from_index(idx, S.n);
        mi += op_norm(Fi.eval(eps));
        NormEvalOptions opt;
        opt.budget = 25;
        opt.r_max = std::max(1, S.r);
        opt.witness_seeds.push_back({S.Vt(eps), S.Wt(eps)});
        mii += norm_eval(Fii.space, Fii.eval(eps), opt).value;
    }
    rep.mean_norm_phi_i = mi / double(total);
    rep.mean_norm_phi_ii_lb = mii / double(total);
    rep.slack = rep.mean_norm_phi_i - rep.omega;
    return rep;
}

double norm_of_mean(const HypercubeFunction& F) {
    const int n = cube_side(F.m);
    const std::uint64_t total = sign_count(n);
    CMat mean;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        CMat v = F.eval(SignVector::from_index(idx, n));
        if (idx == 0) mean = v; else mean += v;
    }
    mean /= double(total);
    return norm_eval(F.space, mean, F.norm_opts).value;
}

double appendix_sigma_bound(const PureStrategy& S, PhiVariant variant) {
    const int n = S.n, k = S.k;
    const double logm = std::log(double(n * n));
    const std::uint64_t total = sign_count(n);
    double mean = 0.0;
    if (variant == PhiVariant::i) {
        std::map<std::string, CMat> cache;
        auto kron_of = [&](const SignVector& eps) -> const CMat& {
            auto [it, fresh] = cache.try_emplace(eps.to_string());
            if (fresh) it->second = kron(S.Vt(eps), S.Wt(eps));
            return it->second;
        };
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            SignVector eps = SignVector::from_index(idx, n);
            double acc = 0.0;
            for (int d = 0; d < n * n; ++d) {
                double diff = op_norm(kron_of(eps) - kron_of(eps.flipped(d)));
                acc += 0.25 * diff * diff;
            }
            mean += std::sqrt(acc);
        }
    } else if (variant == PhiVariant::ii) {
        CMat Fmat(k, k);
        for (int m1 = 0; m1 < k; ++m1)
            for (int m2 = 0; m2 < k; ++m2) Fmat(m1, m2) = S.phi(Eigen::Index(m1) * k + m2);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            SignVector eps = SignVector::from_index(idx, n);
            CMat We = S.W(eps);
            double acc = 0.0;
            for (int d = 0; d < n * n; ++d) {
                CMat dW = We - S.W(eps.flipped(d));
                double diff = (Fmat * dW.transpose()).norm();  // ||(Id (x) dW) phi||
                acc += 0.25 * diff * diff;
            }
            mean += std::sqrt(acc);
        }
    } else {
        throw ShapeError("appendix_sigma_bound: only variants i and ii have block-difference bounds");
    }
    mean /= double(total);
    return logm * (mean + 2.0 / double(n));
}

} // namespace pv
