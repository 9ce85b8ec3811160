#include "pv/seesaw.hpp"

#include <cmath>
#include <sstream>

namespace pv {

namespace {

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

CMat phi_as_matrix(const PureStrategy& S) {
    CMat F(S.k, S.k);
    for (int a = 0; a < S.k; ++a)
        for (int b = 0; b < S.k; ++b) F(a, b) = S.phi(Eigen::Index(a) * S.k + b);
    return F;
}

// per-eps data entering the quadratic objective ||M||_F^2
struct EpsPieces {
    double c(int i, int j) const { return eps.at(i, j) / double(n * n); }
    SignVector eps{};
    int n = 0, r = 0, kt = 0;
    std::vector<CMat> xi;  // swapped xi'_ij, kt x kt, index i*n+j
    CMat Vte, Wte;         // n r x kt
};

EpsPieces make_pieces(const PureStrategy& S, const SignVector& eps) {
    EpsPieces P;
    P.eps = eps;
    P.n = S.n;
    P.r = S.r;
    P.kt = S.kt;
    P.Vte = S.Vt(eps);
    P.Wte = S.Wt(eps);
    CMat F = phi_as_matrix(S);
    CMat We = S.W(eps);
    const int loc = S.kt / S.msg;
    P.xi.resize(std::size_t(S.n) * S.n);
    for (int i = 0; i < S.n; ++i)
        for (int j = 0; j < S.n; ++j) {
            CMat Xij = S.V.middleCols(Eigen::Index(i * S.n + j) * S.k, S.k);
            P.xi[std::size_t(i * S.n + j)] = swap_messages(Xij * F * We.transpose(), loc, S.msg);
        }
    return P;
}

CMat amp_matrix(const EpsPieces& P) {
    CMat M = CMat::Zero(P.r, P.r);
    for (int i = 0; i < P.n; ++i)
        for (int j = 0; j < P.n; ++j)
            M.noalias() += P.c(i, j) * (P.Vte.middleRows(Eigen::Index(i) * P.r, P.r) *
                                        P.xi[std::size_t(i * P.n + j)] *
                                        P.Wte.middleRows(Eigen::Index(j) * P.r, P.r).transpose());
    return M;
}

double objective(const PureStrategy& S, const std::vector<SignVector>& eps_set) {
    double acc = 0.0;
    for (const auto& eps : eps_set) acc += amplitude(S, eps).squaredNorm();
    return acc / double(eps_set.size());
}

// candidate step sizes for the projected-ascent blocks
const double kEtas[] = {4.0, 1.0, 0.25, 0.0625};

// pick the best contraction among B and project(B + eta grad); returns the
// objective value reached and writes the winner into B
double ascend(CMat& B, const CMat& grad, double f0,
              const std::function<double(const CMat&)>& f) {
    CMat best = B;
    double fbest = f0;
    auto consider = [&](const CMat& cand) {
        double fc = f(cand);
        if (fc > fbest) { fbest = fc; best = cand; }
    };
    double gn = grad.norm();
    if (gn > 1e-14) consider(project_to_operator_ball(grad / gn));
    for (double eta : kEtas) consider(project_to_operator_ball(B + eta * grad));
    B = best;
    return fbest;
}

void update_wt_for(PureStrategy& S, const SignVector& eps) {
    EpsPieces P = make_pieces(S, eps);
    const int n = S.n, r = S.r, kt = S.kt;
    // R_j = sum_i c_ij A_i xi'_ij, r x kt
    std::vector<CMat> R;
    R.resize(std::size_t(n));
    for (int j = 0; j < n; ++j) {
        R[std::size_t(j)] = CMat::Zero(r, kt);
        for (int i = 0; i < n; ++i)
            R[std::size_t(j)].noalias() += P.c(i, j) *
                                           (P.Vte.middleRows(Eigen::Index(i) * r, r) *
                                            P.xi[std::size_t(i * n + j)]);
    }
    auto f_of = [&](const CMat& Wt) {
        CMat M = CMat::Zero(r, r);
        for (int j = 0; j < n; ++j)
            M.noalias() += R[std::size_t(j)] * Wt.middleRows(Eigen::Index(j) * r, r).transpose();
        return M.squaredNorm();
    };
    CMat M = amp_matrix(P);
    CMat grad(Eigen::Index(n) * r, kt);
    for (int j = 0; j < n; ++j)
        grad.middleRows(Eigen::Index(j) * r, r) = (M.adjoint() * R[std::size_t(j)]).conjugate();
    CMat B = P.Wte;
    ascend(B, grad, f_of(B), f_of);
    S.Wt.table[eps.to_string()] = B;
}

void update_vt_for(PureStrategy& S, const SignVector& eps) {
    EpsPieces P = make_pieces(S, eps);
    const int n = S.n, r = S.r, kt = S.kt;
    // T_i = sum_j c_ij xi'_ij B_j^T, kt x r
    std::vector<CMat> T;
    T.resize(std::size_t(n));
    for (int i = 0; i < n; ++i) {
        T[std::size_t(i)] = CMat::Zero(kt, r);
        for (int j = 0; j < n; ++j)
            T[std::size_t(i)].noalias() += P.c(i, j) *
                                           (P.xi[std::size_t(i * n + j)] *
                                            P.Wte.middleRows(Eigen::Index(j) * r, r).transpose());
    }
    auto f_of = [&](const CMat& Vt) {
        CMat M = CMat::Zero(r, r);
        for (int i = 0; i < n; ++i)
            M.noalias() += Vt.middleRows(Eigen::Index(i) * r, r) * T[std::size_t(i)];
        return M.squaredNorm();
    };
    CMat M = amp_matrix(P);
    CMat grad(Eigen::Index(n) * r, kt);
    for (int i = 0; i < n; ++i)
        grad.middleRows(Eigen::Index(i) * r, r) = M * T[std::size_t(i)].adjoint();
    CMat B = P.Vte;
    ascend(B, grad, f_of(B), f_of);
    S.Vt.table[eps.to_string()] = B;
}

void update_w_for(PureStrategy& S, const SignVector& eps) {
    const int n = S.n, r = S.r, k = S.k, kt = S.kt;
    const int loc = kt / S.msg;
    CMat F = phi_as_matrix(S);
    EpsPieces P = make_pieces(S, eps);
    CMat M = amp_matrix(P);
    CMat grad = CMat::Zero(kt, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CMat Q = P.Wte.middleRows(Eigen::Index(j) * r, r).transpose() * M.adjoint() *
                     P.Vte.middleRows(Eigen::Index(i) * r, r);
            CMat Xij = S.V.middleCols(Eigen::Index(i * n + j) * k, k);
            grad.noalias() += P.c(i, j) * (swap_messages(Q, loc, S.msg) * Xij * F).conjugate();
        }
    auto f_of = [&](const CMat& W) {
        CMat Mn = CMat::Zero(r, r);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CMat Xij = S.V.middleCols(Eigen::Index(i * n + j) * k, k);
                Mn.noalias() += P.c(i, j) *
                                (P.Vte.middleRows(Eigen::Index(i) * r, r) *
                                 swap_messages(Xij * F * W.transpose(), loc, S.msg) *
                                 P.Wte.middleRows(Eigen::Index(j) * r, r).transpose());
            }
        return Mn.squaredNorm();
    };
    CMat B = S.W(eps);
    ascend(B, grad, f_of(B), f_of);
    S.W.table[eps.to_string()] = B;
}

void update_v(PureStrategy& S, const std::vector<SignVector>& eps_set) {
    const int n = S.n, r = S.r, k = S.k, kt = S.kt;
    const int loc = kt / S.msg;
    CMat F = phi_as_matrix(S);
    CMat grad = CMat::Zero(kt, Eigen::Index(n) * n * k);
    for (const auto& eps : eps_set) {
        EpsPieces P = make_pieces(S, eps);
        CMat M = amp_matrix(P);
        CMat We = S.W(eps);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CMat Q = P.Wte.middleRows(Eigen::Index(j) * r, r).transpose() * M.adjoint() *
                         P.Vte.middleRows(Eigen::Index(i) * r, r);
                grad.middleCols(Eigen::Index(i * n + j) * k, k).noalias() +=
                    P.c(i, j) * (swap_messages(Q, loc, S.msg).adjoint() * We.conjugate() *
                                 F.adjoint());
            }
    }
    grad /= double(eps_set.size());
    auto f_of = [&](const CMat& V) {
        PureStrategy T = S;
        T.V = V;
        return objective(T, eps_set);
    };
    CMat B = S.V;
    ascend(B, grad, f_of(B), f_of);
    S.V = B;
}

void update_phi(PureStrategy& S, const std::vector<SignVector>& eps_set) {
    const Eigen::Index d = Eigen::Index(S.k) * S.k;
    CMat M = CMat::Zero(d, d);
    for (const auto& eps : eps_set) {
        CMat T = amplitude_operator_phi(S, eps);
        M.noalias() += T.adjoint() * T;
    }
    M /= double(eps_set.size());
    auto [val, vec] = top_hermitian_eigenpair(M);
    (void)val;
    S.phi = vec;
}

} // namespace

PureStrategy update_block(const PureStrategy& S, const std::string& block,
                          const std::vector<SignVector>& eps_set) {
    if (eps_set.empty()) throw ShapeError("update_block: empty sign-vector set");
    PureStrategy out = S;
    if (block == "phi") {
        update_phi(out, eps_set);
    } else if (block == "V") {
        update_v(out, eps_set);
    } else if (block == "W") {
        for (const auto& eps : eps_set) update_w_for(out, eps);
    } else if (block == "Vt") {
        for (const auto& eps : eps_set) update_vt_for(out, eps);
    } else if (block == "Wt") {
        for (const auto& eps : eps_set) update_wt_for(out, eps);
    } else {
        throw ShapeError("update_block: unknown block '" + block + "'");
    }
    return out;
}

namespace {

std::vector<SignVector> resolve_eps(const SeesawConfig& cfg, SeededRng rng) {
    std::vector<SignVector> out;
    if (cfg.eps_mode.exact) {
        const std::uint64_t total = sign_count(cfg.n);
        out.reserve(std::size_t(total));
        for (std::uint64_t idx = 0; idx < total; ++idx)
            out.push_back(SignVector::from_index(idx, cfg.n));
    } else {
        out.reserve(std::size_t(cfg.eps_mode.samples));
        for (std::uint64_t s = 0; s < cfg.eps_mode.samples; ++s) {
            SeededRng draw = rng.child(s);
            out.push_back(SignVector::random(cfg.n, draw));
        }
    }
    return out;
}

PureStrategy random_start(const SeesawConfig& cfg, const std::vector<SignVector>& eps_set,
                          SeededRng rng) {
    PureStrategy S;
    S.n = cfg.n;
    S.k = cfg.k;
    S.kt = cfg.kt;
    S.r = cfg.r;
    S.msg = cfg.msg;
    S.kind = "seesaw";
    S.V = random_contraction(cfg.kt, cfg.n * cfg.n * cfg.k, rng.child(0));
    SeededRng pr = rng.child(1);
    S.phi = random_unit_vector(cfg.k * cfg.k, pr);
    std::uint64_t e = 0;
    for (const auto& eps : eps_set) {
        const std::string key = eps.to_string();
        S.W.table[key] = random_contraction(cfg.kt, cfg.k, rng.child(10 + 3 * e));
        S.Vt.table[key] = random_contraction(cfg.n * cfg.r, cfg.kt, rng.child(11 + 3 * e));
        S.Wt.table[key] = random_contraction(cfg.n * cfg.r, cfg.kt, rng.child(12 + 3 * e));
        ++e;
    }
    return S;
}

// make the eps-indexed blocks writable per eps, keeping any generator as the
// off-grid fallback
void tabulate(PureStrategy& S, const std::vector<SignVector>& eps_set) {
    for (EpsBlock* B : {&S.W, &S.Vt, &S.Wt})
        for (const auto& eps : eps_set) {
            const std::string key = eps.to_string();
            if (!B->table.count(key)) B->table[key] = (*B)(eps);
        }
}

} // namespace

SeesawTrace optimize(const SeesawConfig& cfg) {
    if (cfg.restarts < 1 || cfg.max_iters < 1 || cfg.tol <= 0)
        throw ShapeError("seesaw: need restarts, max_iters >= 1 and tol > 0");
    SeededRng root(cfg.seed);
    SeesawTrace trace;
    trace.best_value = -1.0;
    for (int t = 0; t < cfg.restarts; ++t) {
        SeededRng rr = root.child(std::uint64_t(t));
        std::vector<SignVector> eps_set = resolve_eps(cfg, rr.child(0));
        PureStrategy S;
        if (t == 0 && cfg.warm_start) {
            S = *cfg.warm_start;
            tabulate(S, eps_set);
        } else {
            S = random_start(cfg, eps_set, rr.child(1));
        }
        validate(S);
        std::vector<double> vals;
        double prev = objective(S, eps_set);
        int stall = 0;
        for (int it = 0; it < cfg.max_iters; ++it) {
            for (const auto& block : cfg.block_schedule) S = update_block(S, block, eps_set);
            double v = objective(S, eps_set);
            vals.push_back(v);
            if (v - prev < cfg.tol) ++stall; else stall = 0;
            prev = v;
            if (stall >= 3) break;
        }
        trace.values.push_back(vals);
        if (prev > trace.best_value) {
            trace.best_value = prev;
            trace.best = S;
        }
    }
    if (cfg.eps_mode.exact) trace.best_value = value_exact(trace.best).value;
    return trace;
}

std::string trace_csv(const SeesawTrace& trace) {
    std::ostringstream os;
    os << "restart,iter,value\n";
    os.precision(17);
    for (std::size_t t = 0; t < trace.values.size(); ++t)
        for (std::size_t it = 0; it < trace.values[t].size(); ++it)
            os << t << ',' << it << ',' << trace.values[t][it] << '\n';
    return os.str();
}

} // namespace pv
