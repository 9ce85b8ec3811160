#include "pv/strategies.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <thread>

#include <json.hpp>

namespace pv {

using nlohmann::json;

const CMat& EpsBlock::at(const SignVector& eps) const {
    auto it = table.find(eps.to_string());
    if (it == table.end())
        throw ShapeError("eps-indexed block has no entry for " + eps.to_string());
    return it->second;
}

CMat EpsBlock::operator()(const SignVector& eps) const {
    if (!table.empty()) {
        auto it = table.find(eps.to_string());
        if (it != table.end()) return it->second;
    }
    if (gen) return gen(eps);
    throw ShapeError("eps-indexed block has neither table entry nor generator for " + eps.to_string());
}

static void check_shape(const CMat& M, Eigen::Index rows, Eigen::Index cols, const std::string& name) {
    if (M.rows() != rows || M.cols() != cols)
        throw ShapeError(name + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                         ", got " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
}

static void check_contraction(const CMat& M, double tol, const std::string& name) {
    double nm = op_norm(M);
    if (nm > 1.0 + tol)
        throw NumericalError(name + ": operator norm " + std::to_string(nm) + " exceeds 1 (not rescaled)");
}

void validate(const PureStrategy& S, double tol) {
    const int n = S.n;
    if (n < 2) throw ShapeError("strategy: n must be >= 2");
    if (S.msg < 1 || S.kt % S.msg != 0)
        throw ShapeError("strategy: msg must divide kt");
    check_shape(S.V, S.kt, Eigen::Index(n) * n * S.k, "V");
    check_contraction(S.V, tol, "V");
    if (S.phi.size() != Eigen::Index(S.k) * S.k)
        throw ShapeError("phi: expected dim k^2");
    if (std::abs(S.phi.norm() - 1.0) > tol)
        throw NumericalError("phi: not a unit vector (not rescaled)");
    auto check_block = [&](const EpsBlock& B, Eigen::Index rows, Eigen::Index cols, const std::string& name) {
        if (!B.table.empty()) {
            for (const auto& [key, M] : B.table) {
                check_shape(M, rows, cols, name + "[" + key + "]");
                check_contraction(M, tol, name + "[" + key + "]");
            }
        } else if (B.gen) {
            CMat M = B.gen(SignVector::all_plus(n));
            check_shape(M, rows, cols, name + "[gen]");
            check_contraction(M, tol, name + "[gen]");
        } else {
            throw ShapeError(name + ": empty block");
        }
    };
    check_block(S.W, S.kt, S.k, "W");
    check_block(S.Vt, Eigen::Index(n) * S.r, S.kt, "Vt");
    check_block(S.Wt, Eigen::Index(n) * S.r, S.kt, "Wt");
}

void validate(const ChannelStrategy& S, double tol) {
    const int n = S.n;
    if (n < 2) throw ShapeError("channel strategy: n must be >= 2");
    if (S.msg < 1 || S.kt % S.msg != 0)
        throw ShapeError("channel strategy: msg must divide kt");
    auto check_kraus = [&](const std::vector<CMat>& ks, Eigen::Index rows, Eigen::Index cols,
                           const std::string& name) {
        if (ks.empty()) throw ShapeError(name + ": empty Kraus list");
        CMat acc = CMat::Zero(cols, cols);
        for (const auto& K : ks) {
            check_shape(K, rows, cols, name);
            acc += K.adjoint() * K;
        }
        if ((acc - CMat::Identity(cols, cols)).norm() > tol * std::sqrt(double(cols)) + tol)
            throw NumericalError(name + ": Kraus completeness violated");
    };
    check_kraus(S.kraus_A, S.kt, Eigen::Index(n) * n * S.k, "kraus_A");
    for (const auto& [key, ks] : S.kraus_B) check_kraus(ks, S.kt, S.k, "kraus_B[" + key + "]");
    for (const auto& [key, ks] : S.kraus_At) check_kraus(ks, n, S.kt, "kraus_At[" + key + "]");
    for (const auto& [key, ks] : S.kraus_Bt) check_kraus(ks, n, S.kt, "kraus_Bt[" + key + "]");
    if (S.phi.rows() != Eigen::Index(S.k) * S.k || S.phi.cols() != S.phi.rows())
        throw ShapeError("channel phi: expected k^2 x k^2");
    if (std::abs(S.phi.trace().real() - 1.0) > tol || std::abs(S.phi.trace().imag()) > tol)
        throw NumericalError("channel phi: trace != 1");
}

// Reroute the two message registers: input slots (Alice kept, Alice msg) x
// (Bob kept, Bob msg), output slots (Alice kept, Bob msg) x (Bob kept, Alice msg).
static CMat swap_messages(const CMat& xi, int loc, int msg) {
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

// shared amplitude core: F is the k x k reshape of the shared state
static CMat amplitude_matrix(const PureStrategy& S, const SignVector& eps, const CMat& F) {
    const int n = S.n, k = S.k, kt = S.kt, r = S.r;
    const int loc = kt / S.msg;
    CMat We = S.W(eps), Vte = S.Vt(eps), Wte = S.Wt(eps);
    check_shape(We, kt, k, "W(eps)");
    check_shape(Vte, Eigen::Index(n) * r, kt, "Vt(eps)");
    check_shape(Wte, Eigen::Index(n) * r, kt, "Wt(eps)");
    CMat amp = CMat::Zero(r, r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CMat Xij = S.V.middleCols(Eigen::Index(i * n + j) * k, k);   // kt x k
            CMat xi = Xij * F * We.transpose();                          // kt x kt
            CMat xip = swap_messages(xi, loc, S.msg);
            amp.noalias() += double(eps.at(i, j)) *
                             (Vte.middleRows(Eigen::Index(i) * r, r) * xip *
                              Wte.middleRows(Eigen::Index(j) * r, r).transpose());
        }
    return amp / double(n * n);
}

static CVec vec_row(const CMat& M) {
    CVec v(M.rows() * M.cols());
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            v(i * M.cols() + j) = M(i, j);
    return v;
}

CVec amplitude(const PureStrategy& S, const SignVector& eps) {
    if (eps.n != S.n) throw ShapeError("amplitude: eps.n != strategy n");
    CMat F(S.k, S.k);
    for (int m = 0; m < S.k; ++m)
        for (int m2 = 0; m2 < S.k; ++m2)
            F(m, m2) = S.phi(Eigen::Index(m) * S.k + m2);
    return vec_row(amplitude_matrix(S, eps, F));
}

CMat amplitude_operator_phi(const PureStrategy& S, const SignVector& eps) {
    const int k = S.k, r = S.r;
    CMat T(Eigen::Index(r) * r, Eigen::Index(k) * k);
    CMat F = CMat::Zero(k, k);
    for (int m = 0; m < k; ++m)
        for (int m2 = 0; m2 < k; ++m2) {
            F(m, m2) = 1.0;
            T.col(Eigen::Index(m) * k + m2) = vec_row(amplitude_matrix(S, eps, F));
            F(m, m2) = 0.0;
        }
    return T;
}

ValueReport value_exact(const PureStrategy& S, int threads) {
    const std::uint64_t total = sign_count(S.n);
    if (threads < 1) threads = 1;
    std::vector<double> partial(threads, 0.0);
    auto work = [&](int t) {
        const std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
        double acc = 0.0;
        for (std::uint64_t idx = lo; idx < hi; ++idx)
            acc += amplitude(S, SignVector::from_index(idx, S.n)).squaredNorm();
        partial[std::size_t(t)] = acc;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    double acc = 0.0;
    for (double p : partial) acc += p;  // fixed order: deterministic
    ValueReport rep;
    rep.value = acc / double(total);
    rep.mode = "exact";
    rep.samples = total;
    rep.stderr_ = 0.0;
    return rep;
}

ValueReport value_mc(const PureStrategy& S, std::uint64_t samples, SeededRng rng) {
    if (samples < 2) throw ShapeError("value_mc: need samples >= 2");
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        SeededRng draw = rng.child(s);
        SignVector eps = SignVector::random(S.n, draw);
        double v = amplitude(S, eps).squaredNorm();
        sum += v;
        sumsq += v * v;
    }
    ValueReport rep;
    rep.value = sum / double(samples);
    double var = (sumsq - sum * sum / double(samples)) / double(samples - 1);
    rep.stderr_ = std::sqrt(std::max(0.0, var) / double(samples));
    rep.mode = "monte-carlo";
    rep.samples = samples;
    rep.seed = rng.seed();
    return rep;
}

ValueReport value_channel(const ChannelStrategy& S) {
    validate(S);
    const int n = S.n, k = S.k, kt = S.kt;
    const int loc = kt / S.msg;
    // spectral decomposition of the shared state
    Eigen::SelfAdjointEigenSolver<CMat> es(S.phi);
    if (es.info() != Eigen::Success) throw NumericalError("value_channel: phi eigensolver failed");
    const std::uint64_t total = sign_count(n);
    double acc = 0.0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        SignVector eps = SignVector::from_index(idx, n);
        const std::string key = eps.to_string();
        const auto& Bs = S.kraus_B.at(key);
        const auto& Ats = S.kraus_At.at(key);
        const auto& Bts = S.kraus_Bt.at(key);
        double val_eps = 0.0;
        for (Eigen::Index alpha = 0; alpha < es.eigenvalues().size(); ++alpha) {
            double lam = es.eigenvalues()(alpha);
            if (lam < 1e-14) continue;
            CMat F(k, k);
            for (int m = 0; m < k; ++m)
                for (int m2 = 0; m2 < k; ++m2)
                    F(m, m2) = es.eigenvectors()(Eigen::Index(m) * k + m2, alpha);
            for (const auto& Ka : S.kraus_A)
                for (const auto& Kb : Bs) {
                    // xi for this first-round branch, then all round-2 branches
                    std::vector<CMat> xips(std::size_t(n) * n);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                            CMat Xij = Ka.middleCols(Eigen::Index(i * n + j) * k, k);
                            xips[std::size_t(i) * n + j] =
                                swap_messages(Xij * F * Kb.transpose(), loc, S.msg);
                        }
                    for (const auto& Kat : Ats)
                        for (const auto& Kbt : Bts) {
                            cplx amp = 0.0;
                            for (int i = 0; i < n; ++i)
                                for (int j = 0; j < n; ++j)
                                    amp += double(eps.at(i, j)) *
                                           (Kat.row(i) * xips[std::size_t(i) * n + j] *
                                            Kbt.row(j).transpose())(0, 0);
                            amp /= double(n * n);
                            val_eps += lam * std::norm(amp);
                        }
                }
        }
        acc += val_eps;
    }
    ValueReport rep;
    rep.value = acc / double(total);
    rep.mode = "exact";
    rep.samples = total;
    return rep;
}

std::uint64_t classical_budget(std::uint64_t n, std::uint64_t k) {
    return n * n * n * n * k * k;
}

// ---------------------------------------------------------------------------
// purification (Stinespring dilation of every block + state purification)

PureStrategy purify(const ChannelStrategy& C) {
    validate(C);
    const int n = C.n, k = C.k, kt = C.kt, msg = C.msg;
    const int loc = kt / msg;

    Eigen::SelfAdjointEigenSolver<CMat> es(C.phi);
    if (es.info() != Eigen::Success) throw NumericalError("purify: phi eigensolver failed");
    std::vector<Eigen::Index> kept;
    for (Eigen::Index a = 0; a < es.eigenvalues().size(); ++a)
        if (es.eigenvalues()(a) > 1e-12) kept.push_back(a);
    const int e = int(kept.size());

    std::size_t kapA = C.kraus_A.size(), kapB = 0, kapAt = 0, kapBt = 0;
    for (const auto& [key, v] : C.kraus_B) kapB = std::max(kapB, v.size());
    for (const auto& [key, v] : C.kraus_At) kapAt = std::max(kapAt, v.size());
    for (const auto& [key, v] : C.kraus_Bt) kapBt = std::max(kapBt, v.size());
    const int kap1 = int(std::max(kapA, kapB));  // round-1 ancilla
    const int kap2 = int(std::max(kapAt, kapBt));  // round-2 ancilla

    PureStrategy P;
    P.n = n;
    P.k = k * e;
    P.msg = msg;
    const int locp = loc * kap1 * e;
    P.kt = locp * msg;
    P.r = kap2 * kap1 * e;
    P.kind = "purified";

    // purified shared state: environment register (dim e) on Alice's side,
    // a trivial slot on Bob's side
    P.phi = CVec::Zero(Eigen::Index(P.k) * P.k);
    for (int a = 0; a < e; ++a) {
        double lam = es.eigenvalues()(kept[std::size_t(a)]);
        for (int ma = 0; ma < k; ++ma)
            for (int mb = 0; mb < k; ++mb)
                P.phi(Eigen::Index(ma * e + a) * P.k + (mb * e + 0)) =
                    std::sqrt(lam) * es.eigenvectors()(Eigen::Index(ma) * k + mb, kept[std::size_t(a)]);
    }

    // round-1 Alice: dilate kraus_A, pass the environment through untouched
    P.V = CMat::Zero(P.kt, Eigen::Index(n) * n * P.k);
    for (std::size_t ka = 0; ka < kapA; ++ka) {
        const CMat& K = C.kraus_A[ka];
        for (int l = 0; l < loc; ++l)
            for (int m = 0; m < msg; ++m)
                for (int q = 0; q < n * n; ++q)
                    for (int ma = 0; ma < k; ++ma) {
                        cplx v = K(l * msg + m, Eigen::Index(q) * k + ma);
                        if (v == cplx(0.0)) continue;
                        for (int a = 0; a < e; ++a)
                            P.V(Eigen::Index((l * kap1 + int(ka)) * e + a) * msg + m,
                                Eigen::Index(q) * P.k + (ma * e + a)) = v;
                    }
    }

    const std::uint64_t total = sign_count(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        SignVector eps = SignVector::from_index(idx, n);
        const std::string key = eps.to_string();

        CMat Wp = CMat::Zero(P.kt, P.k);
        const auto& Bs = C.kraus_B.at(key);
        for (std::size_t kb = 0; kb < Bs.size(); ++kb)
            for (int l = 0; l < loc; ++l)
                for (int m = 0; m < msg; ++m)
                    for (int mb = 0; mb < k; ++mb) {
                        cplx v = Bs[kb](l * msg + m, mb);
                        if (v == cplx(0.0)) continue;
                        for (int b = 0; b < e; ++b)
                            Wp(Eigen::Index((l * kap1 + int(kb)) * e + b) * msg + m,
                               Eigen::Index(mb) * e + b) = v;
                    }
        P.W.table[key] = std::move(Wp);

        CMat Vtp = CMat::Zero(Eigen::Index(n) * P.r, P.kt);
        const auto& Ats = C.kraus_At.at(key);
        for (std::size_t kat = 0; kat < Ats.size(); ++kat)
            for (int i = 0; i < n; ++i)
                for (int la = 0; la < loc; ++la)
                    for (int m = 0; m < msg; ++m) {
                        cplx v = Ats[kat](i, la * msg + m);
                        if (v == cplx(0.0)) continue;
                        for (std::size_t ka = 0; ka < kapA; ++ka)
                            for (int a = 0; a < e; ++a)
                                Vtp(Eigen::Index(i) * P.r + ((int(kat) * kap1 + int(ka)) * e + a),
                                    Eigen::Index((la * kap1 + int(ka)) * e + a) * msg + m) = v;
                    }
        P.Vt.table[key] = std::move(Vtp);

        CMat Wtp = CMat::Zero(Eigen::Index(n) * P.r, P.kt);
        const auto& Bts = C.kraus_Bt.at(key);
        for (std::size_t kbt = 0; kbt < Bts.size(); ++kbt)
            for (int j = 0; j < n; ++j)
                for (int lb = 0; lb < loc; ++lb)
                    for (int m = 0; m < msg; ++m) {
                        cplx v = Bts[kbt](j, lb * msg + m);
                        if (v == cplx(0.0)) continue;
                        for (std::size_t kb = 0; kb < Bs.size(); ++kb)
                            for (int b = 0; b < e; ++b)
                                Wtp(Eigen::Index(j) * P.r + ((int(kbt) * kap1 + int(kb)) * e + b),
                                    Eigen::Index((lb * kap1 + int(kb)) * e + b) * msg + m) = v;
                    }
        P.Wt.table[key] = std::move(Wtp);
    }
    return P;
}

// ---------------------------------------------------------------------------
// strategy zoo

static PureStrategy make_do_nothing(int n) {
    PureStrategy S;
    S.n = n;
    S.k = 1;
    S.kt = n * n;
    S.r = n;
    S.msg = n;  // Alice keeps register A, sends register B across
    S.kind = "do_nothing";
    S.V = CMat::Identity(n * n, n * n);
    CMat w = CMat::Zero(n * n, 1);
    w(0, 0) = 1.0;
    // Alice round 2: kept i + received t -> answer i, ancilla t
    CMat Vt = CMat::Identity(n * n, n * n);
    // Bob round 2: kept t + received j -> answer j, ancilla t
    CMat Wt = CMat::Zero(n * n, n * n);
    for (int j = 0; j < n; ++j)
        for (int t = 0; t < n; ++t)
            Wt(j * n + t, t * n + j) = 1.0;
    S.phi = CVec::Ones(1);
    SignVector plus = SignVector::all_plus(n);
    // eps-independent blocks, stored as generators returning the fixed matrix
    S.W.gen = [w](const SignVector&) { return w; };
    S.Vt.gen = [Vt](const SignVector&) { return Vt; };
    S.Wt.gen = [Wt](const SignVector&) { return Wt; };
    (void)plus;
    return S;
}

static PureStrategy make_column_majority(int n) {
    PureStrategy S = make_do_nothing(n);
    S.kind = "column_majority";
    CMat Wt0 = S.Wt(SignVector::all_plus(n));
    S.Wt.gen = [Wt0, n](const SignVector& eps) {
        CMat M = Wt0;
        for (int j = 0; j < n; ++j) {
            int colsum = 0;
            for (int i = 0; i < n; ++i) colsum += eps.at(i, j);
            double sign = colsum >= 0 ? 1.0 : -1.0;  // ties resolve to +1
            M.middleRows(Eigen::Index(j) * n, n) *= sign;
        }
        return M;
    };
    return S;
}

static std::uint64_t eps_hash(const SignVector& eps) {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : eps.entries) { h ^= std::uint64_t(v == 1 ? 43 : 45); h *= 1099511628211ull; }
    return h;
}

PureStrategy zoo(const std::string& name, int n, int k, int kt, int r, SeededRng rng) {
    if (name == "do_nothing" || name == "column_majority") {
        if ((k != 0 && k != 1) || (kt != 0 && kt != n * n) || (r != 0 && r < n))
            throw ShapeError(name + ": requires k=1, kt=n^2, r>=n (pass 0 for defaults)");
        return name == "do_nothing" ? make_do_nothing(n) : make_column_majority(n);
    }
    if (k < 1 || kt < 1 || r < 1) throw ShapeError("zoo: dims must be >= 1");
    PureStrategy S;
    S.n = n;
    S.k = k;
    S.kt = kt;
    S.r = r;
    S.msg = 1;
    S.kind = name;
    S.V = random_contraction(kt, n * n * k, rng.child(1));
    S.phi = random_unit_vector(k * k, rng.child(2));
    if (name == "eps_independent_random") {
        CMat W0 = random_contraction(kt, k, rng.child(3));
        CMat Vt0 = random_contraction(n * r, kt, rng.child(4));
        CMat Wt0 = random_contraction(n * r, kt, rng.child(5));
        S.W.gen = [W0](const SignVector&) { return W0; };
        S.Vt.gen = [Vt0](const SignVector&) { return Vt0; };
        S.Wt.gen = [Wt0](const SignVector&) { return Wt0; };
        return S;
    }
    if (name != "random") throw ShapeError("zoo: unknown template '" + name + "'");
    SeededRng base = rng.child(6);
    int nn = n, kk = k, kkt = kt, rr = r;
    S.W.gen = [base, kkt, kk](const SignVector& eps) {
        return random_contraction(kkt, kk, base.child(eps_hash(eps)).child(1));
    };
    S.Vt.gen = [base, nn, rr, kkt](const SignVector& eps) {
        return random_contraction(nn * rr, kkt, base.child(eps_hash(eps)).child(2));
    };
    S.Wt.gen = [base, nn, rr, kkt](const SignVector& eps) {
        return random_contraction(nn * rr, kkt, base.child(eps_hash(eps)).child(3));
    };
    return S;
}

// ---------------------------------------------------------------------------
// JSON serialization

static json mat_to_json(const CMat& M) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            row.push_back(json::array({M(i, j).real(), M(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

static CMat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ShapeError("matrix json: expected nonempty array");
    const Eigen::Index rows = Eigen::Index(j.size()), cols = Eigen::Index(j[0].size());
    CMat M(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index c = 0; c < cols; ++c)
            M(i, c) = cplx(j[std::size_t(i)][std::size_t(c)][0].get<double>(),
                           j[std::size_t(i)][std::size_t(c)][1].get<double>());
    return M;
}

static void tabulate(EpsBlock& B, int n) {
    if (!B.table.empty() || !B.gen) return;
    for (const auto& eps : enumerate_signs(n)) B.table[eps.to_string()] = B.gen(eps);
}

std::string save_strategy(const PureStrategy& S) {
    PureStrategy copy = S;
    tabulate(copy.W, S.n);
    tabulate(copy.Vt, S.n);
    tabulate(copy.Wt, S.n);
    json j;
    j["schema_version"] = 1;
    j["meta"] = {{"n", S.n}, {"k", S.k}, {"kt", S.kt}, {"r", S.r}, {"msg", S.msg}, {"kind", S.kind}};
    json blocks;
    blocks["V"] = mat_to_json(S.V);
    for (const char* name : {"W", "Vt", "Wt"}) {
        const EpsBlock& B = std::string(name) == "W" ? copy.W
                          : std::string(name) == "Vt" ? copy.Vt : copy.Wt;
        json tbl = json::object();
        for (const auto& [key, M] : B.table) tbl[key] = mat_to_json(M);
        blocks[name] = std::move(tbl);
    }
    j["blocks"] = std::move(blocks);
    json phi = json::array();
    for (Eigen::Index i = 0; i < S.phi.size(); ++i)
        phi.push_back(json::array({S.phi(i).real(), S.phi(i).imag()}));
    j["phi"] = std::move(phi);
    return j.dump();
}

PureStrategy load_strategy(const std::string& text) {
    json j = json::parse(text);
    if (j.value("schema_version", 0) != 1)
        throw ShapeError("strategy file: unsupported schema_version");
    PureStrategy S;
    S.n = j["meta"]["n"].get<int>();
    S.k = j["meta"]["k"].get<int>();
    S.kt = j["meta"]["kt"].get<int>();
    S.r = j["meta"]["r"].get<int>();
    S.msg = j["meta"].value("msg", 1);
    S.kind = j["meta"].value("kind", "custom");
    S.V = mat_from_json(j["blocks"]["V"]);
    for (const char* name : {"W", "Vt", "Wt"}) {
        EpsBlock& B = std::string(name) == "W" ? S.W : std::string(name) == "Vt" ? S.Vt : S.Wt;
        for (const auto& [key, val] : j["blocks"][name].items())
            B.table[key] = mat_from_json(val);
    }
    const auto& phi = j["phi"];
    S.phi = CVec(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
        S.phi(Eigen::Index(i)) = cplx(phi[i][0].get<double>(), phi[i][1].get<double>());
    return S;
}

} // namespace pv
