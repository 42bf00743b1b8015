// Copyright 2026 The qconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qconv/decoder.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qconv/errors.h"
#include "qconv/kernels.h"

namespace qconv {

namespace {

constexpr double kEps = 1e-12;
constexpr double kOracleTol = 1e-9;
constexpr size_t kMaxExhaustiveQubits = 14;
constexpr size_t kMaxKernelDim = 26;
constexpr size_t kMaxStateQubits = 8;
constexpr size_t kMaxExtQubits = 12;

// Letter of `index` at position p of a pattern on len qubits.
inline unsigned digit(size_t index, size_t len, size_t p) {
    return (unsigned)((index >> (2 * (len - 1 - p))) & 3);
}

inline bool letters_anticommute(unsigned a, unsigned b) {
    return a != 0 && b != 0 && a != b;
}

std::array<size_t, 4> letter_counts(size_t index, size_t len) {
    std::array<size_t, 4> c{};
    for (size_t p = 0; p < len; p++) {
        c[digit(index, len, p)]++;
    }
    return c;
}

}  // namespace

size_t pattern_index(const SymplecticVector &e, size_t first, size_t len) {
    size_t v = 0;
    for (size_t p = 0; p < len; p++) {
        v = (v << 2) | (size_t)e.letter(first + p);
    }
    return v;
}

void set_pattern(SymplecticVector &e, size_t first, size_t len, size_t index) {
    for (size_t p = 0; p < len; p++) {
        e.set_letter(first + p, (Pauli)digit(index, len, p));
    }
}

// ---------------------------------------------------------------------------

ViterbiDecoder::ViterbiDecoder(const CodeSpec &c, const ChannelModel &ch)
    : n_(c.n), m_(c.m), r_(c.num_gens()), ch_(ch) {
    ch_.check();
    if (m_ > kMaxStateQubits || n_ > kMaxExtQubits || m_ > n_) {
        throw InstanceTooLarge("trellis too large for n=" + std::to_string(n_) + ", m=" + std::to_string(m_));
    }
    if (r_ > 32) {
        throw InstanceTooLarge("more than 32 generators per block");
    }
    num_states_ = size_t{1} << (2 * m_);
    num_ext_ = size_t{1} << (2 * n_);
    size_t num_syn = size_t{1} << r_;

    head_syn_.assign(num_states_, 0);
    state_ll_.assign(num_states_, 0.0);
    for (size_t e = 0; e < num_states_; e++) {
        uint32_t s = 0;
        for (size_t i = 0; i < r_; i++) {
            bool par = false;
            for (size_t p = 0; p < m_; p++) {
                par ^= letters_anticommute((unsigned)c.gens[i].letter(p), digit(e, m_, p));
            }
            s |= (uint32_t)par << i;
        }
        head_syn_[e] = s;
        state_ll_[e] = log_likelihood_counts(ch_, letter_counts(e, m_));
    }

    tail_syn_.assign(num_ext_, 0);
    ext_ll_.assign(num_ext_, 0.0);
    ext_by_syn_.assign(num_syn, {});
    for (size_t x = 0; x < num_ext_; x++) {
        uint32_t s = 0;
        for (size_t i = 0; i < r_; i++) {
            bool par = false;
            for (size_t p = 0; p < n_; p++) {
                par ^= letters_anticommute((unsigned)c.gens[i].letter(m_ + p), digit(x, n_, p));
            }
            s |= (uint32_t)par << i;
        }
        tail_syn_[x] = s;
        ext_ll_[x] = log_likelihood_counts(ch_, letter_counts(x, n_));
        ext_by_syn_[s].push_back((uint32_t)x);
    }

    best_ll_.assign(num_syn * num_states_, kNegInf);
    best_ext_.assign(num_syn * num_states_, UINT32_MAX);
    size_t mask = num_states_ - 1;
    for (size_t x = 0; x < num_ext_; x++) {
        if (ext_ll_[x] == kNegInf) {
            continue;
        }
        size_t slot = tail_syn_[x] * num_states_ + (x & mask);
        if (best_ext_[slot] == UINT32_MAX || ext_ll_[x] > best_ll_[slot] + kEps) {
            best_ll_[slot] = ext_ll_[x];
            best_ext_[slot] = (uint32_t)x;
        }
    }
}

void ViterbiDecoder::step_cached(
    uint32_t syndrome,
    const std::vector<double> &metric,
    const std::vector<uint32_t> &order,
    std::vector<double> &out_metric,
    StepTrace &tr) const {
    size_t np = order.size();
    std::vector<double> pm(np);
    std::vector<uint32_t> rows(np);
    for (size_t p = 0; p < np; p++) {
        pm[p] = metric[order[p]];
        rows[p] = syndrome ^ head_syn_[order[p]];
    }
    std::vector<uint32_t> arg(num_states_);
    out_metric.assign(num_states_, kNegInf);
    kernels::active().acs(
        pm.data(), rows.data(), np, best_ll_.data(), num_states_, kEps, out_metric.data(), arg.data());
    tr.back.assign(num_states_, UINT32_MAX);
    tr.ext.assign(num_states_, UINT32_MAX);
    for (size_t t = 0; t < num_states_; t++) {
        if (arg[t] == UINT32_MAX) {
            out_metric[t] = kNegInf;
            continue;
        }
        tr.back[t] = order[arg[t]];
        tr.ext[t] = best_ext_[rows[arg[t]] * num_states_ + t];
    }
}

void ViterbiDecoder::step_direct(
    uint32_t syndrome,
    const std::vector<double> &metric,
    const std::vector<uint32_t> &order,
    std::vector<double> &out_metric,
    StepTrace &tr,
    void *rng_ptr) const {
    auto *rng = static_cast<std::mt19937_64 *>(rng_ptr);
    size_t mask = num_states_ - 1;
    out_metric.assign(num_states_, kNegInf);
    tr.back.assign(num_states_, UINT32_MAX);
    tr.ext.assign(num_states_, UINT32_MAX);
    std::vector<uint64_t> ties(num_states_, 0);
    for (uint32_t e : order) {
        double base = metric[e];
        if (base == kNegInf) {
            continue;
        }
        for (uint32_t x : ext_by_syn_[syndrome ^ head_syn_[e]]) {
            double c = base + ext_ll_[x];
            if (c == kNegInf) {
                continue;
            }
            size_t t = x & mask;
            bool take;
            if (tr.ext[t] == UINT32_MAX || c > out_metric[t] + kEps) {
                take = true;
                ties[t] = 1;
            } else if (rng != nullptr && c >= out_metric[t] - kEps) {
                ties[t]++;
                take = std::uniform_int_distribution<uint64_t>(0, ties[t] - 1)(*rng) == 0;
            } else {
                take = false;
            }
            if (take) {
                out_metric[t] = c;
                tr.back[t] = e;
                tr.ext[t] = x;
            }
        }
    }
}

DecodeResult ViterbiDecoder::decode(const SyndromeStream &s, const DecodeOptions &opts) const {
    if (s.r != r_) {
        throw std::invalid_argument(
            "syndrome stream has " + std::to_string(s.r) + " bits per block, expected " + std::to_string(r_));
    }
    size_t q = s.q;
    size_t N = n_ * q + m_;
    bool random = opts.tie == TieBreak::Random;
    std::mt19937_64 rng(splitmix64(opts.seed));

    DecodeResult res;
    std::vector<double> metric = state_ll_;
    std::vector<uint32_t> rank(num_states_, UINT32_MAX);
    std::vector<uint32_t> order;
    for (uint32_t e = 0; e < num_states_; e++) {
        if (metric[e] != kNegInf) {
            rank[e] = (uint32_t)order.size();
            order.push_back(e);
        }
    }
    std::vector<StepTrace> trace(q);
    std::vector<double> next;

    // Trace back from state e after step j down to step stop; returns the
    // state before step stop (the initial pattern when stop == 0) and fills ext.
    auto walk = [&](size_t j, uint32_t e, size_t stop, std::vector<uint32_t> *ext) {
        for (size_t t = j + 1; t-- > stop;) {
            if (ext != nullptr) {
                (*ext)[t] = trace[t].ext[e];
            }
            e = trace[t].back[e];
        }
        return e;
    };
    auto best_state = [&](const std::vector<double> &mt, const std::vector<uint32_t> &ord) {
        uint32_t best = UINT32_MAX;
        for (uint32_t e : ord) {
            if (best == UINT32_MAX || mt[e] > mt[best] + kEps) {
                best = e;
            }
        }
        return best;
    };

    std::vector<uint32_t> committed_ext(q, UINT32_MAX);
    uint32_t committed_init = UINT32_MAX;
    size_t d = opts.traceback_depth;
    if (d > 0) {
        res.per_block_converged.assign(q, true);
    }

    for (size_t j = 0; j < q; j++) {
        uint32_t syn = s.block_value(j);
        if (random || !opts.use_cache) {
            step_direct(syn, metric, order, next, trace[j], random ? &rng : nullptr);
        } else {
            step_cached(syn, metric, order, next, trace[j]);
        }
        std::vector<uint32_t> new_order;
        for (uint32_t t = 0; t < num_states_; t++) {
            if (next[t] != kNegInf) {
                new_order.push_back(t);
            }
        }
        if (new_order.empty()) {
            throw InfeasibleSyndromes("no error pattern matches the syndromes up to block " + std::to_string(j));
        }
        const StepTrace &tr = trace[j];
        std::sort(new_order.begin(), new_order.end(), [&](uint32_t a, uint32_t b) {
            uint32_t ra = rank[tr.back[a]], rb = rank[tr.back[b]];
            return ra != rb ? ra < rb : tr.ext[a] < tr.ext[b];
        });
        std::vector<uint32_t> new_rank(num_states_, UINT32_MAX);
        for (size_t i = 0; i < new_order.size(); i++) {
            new_rank[new_order[i]] = (uint32_t)i;
        }
        metric.swap(next);
        order.swap(new_order);
        rank.swap(new_rank);
        if (opts.record_survivors) {
            res.survivor_metrics.push_back(metric);
        }

        if (d > 0 && j >= d) {
            size_t c = j - d;
            uint32_t b = best_state(metric, order);
            std::vector<uint32_t> ext(q, UINT32_MAX);
            uint32_t init = walk(j, b, c, &ext);
            bool agree = true;
            for (uint32_t e : order) {
                std::vector<uint32_t> other(q, UINT32_MAX);
                uint32_t oi = walk(j, e, c, &other);
                if (other[c] != ext[c] || (c == 0 && oi != init)) {
                    agree = false;
                    break;
                }
            }
            committed_ext[c] = ext[c];
            if (c == 0) {
                committed_init = init;
            }
            res.per_block_converged[c] = agree;
        }
    }

    uint32_t final_state = best_state(metric, order);
    if (opts.terminated) {
        if (metric[0] != kNegInf) {
            final_state = 0;
        } else {
            res.terminated_fallback = true;
        }
    }
    std::vector<uint32_t> ext(q, UINT32_MAX);
    uint32_t init = q > 0 ? walk(q - 1, final_state, 0, &ext) : final_state;
    res.loglik = metric[final_state];

    auto build = [&](uint32_t init_state, const std::vector<uint32_t> &exts) {
        SymplecticVector e(N);
        set_pattern(e, 0, m_, init_state);
        for (size_t j = 0; j < q; j++) {
            set_pattern(e, j * n_ + m_, n_, exts[j]);
        }
        return e;
    };
    res.estimate = build(init, ext);

    if (d > 0) {
        for (size_t c = 0; c < q; c++) {
            if (committed_ext[c] == UINT32_MAX) {
                committed_ext[c] = ext[c];
            }
        }
        if (committed_init == UINT32_MAX) {
            committed_init = init;
        }
        res.truncated_estimate = build(committed_init, committed_ext);
        res.truncated_agrees = *res.truncated_estimate == res.estimate;
    }
    return res;
}

DecodeResult viterbi_decode(const CodeSpec &c, const ChannelModel &ch, const SyndromeStream &s, const DecodeOptions &opts) {
    return ViterbiDecoder(c, ch).decode(s, opts);
}

// ---------------------------------------------------------------------------

namespace {

struct MaskOp {
    uint64_t x = 0;
    uint64_t z = 0;
};

MaskOp to_mask(const SymplecticVector &v) {
    MaskOp m;
    for (size_t q = 0; q < v.num_qubits(); q++) {
        m.x |= (uint64_t)v.x.get(q) << q;
        m.z |= (uint64_t)v.z.get(q) << q;
    }
    return m;
}

struct LetterLogs {
    double lp[4];
    bool possible[4];
};

LetterLogs letter_logs(const ChannelModel &ch) {
    LetterLogs l{};
    for (int p = 0; p < 4; p++) {
        l.lp[p] = ch.log_prob((Pauli)p);
        l.possible[p] = l.lp[p] != kNegInf;
    }
    return l;
}

double mask_ll(const LetterLogs &l, uint64_t ex, uint64_t ez, size_t N) {
    size_t cy = std::popcount(ex & ez);
    size_t cx = std::popcount(ex) - cy;
    size_t cz = std::popcount(ez) - cy;
    size_t ci = N - cx - cy - cz;
    size_t counts[4] = {ci, cx, cz, cy};
    double total = 0.0;
    for (int p = 0; p < 4; p++) {
        if (counts[p] == 0) {
            continue;
        }
        if (!l.possible[p]) {
            return kNegInf;
        }
        total += (double)counts[p] * l.lp[p];
    }
    return total;
}

unsigned __int128 lex_key(uint64_t ex, uint64_t ez, size_t N) {
    unsigned __int128 k = 0;
    for (size_t q = 0; q < N; q++) {
        k = (k << 2) | (unsigned __int128)(((ex >> q) & 1) | (((ez >> q) & 1) << 1));
    }
    return k;
}

struct Constraint {
    std::vector<MaskOp> rows;
    std::vector<bool> rhs;
};

// One particular solution plus a kernel basis of the syndrome map.
struct Coset {
    MaskOp base;
    std::vector<MaskOp> kernel;
};

Coset solve_coset(const Constraint &cons, size_t N) {
    BitMatrix mat(2 * N);
    BitVec rhs(cons.rows.size());
    for (size_t i = 0; i < cons.rows.size(); i++) {
        BitVec row(2 * N);
        for (size_t q = 0; q < N; q++) {
            row.set(q, (cons.rows[i].z >> q) & 1);
            row.set(N + q, (cons.rows[i].x >> q) & 1);
        }
        mat.push_row(std::move(row));
        rhs.set(i, cons.rhs[i]);
    }
    auto sol = solve(mat, rhs);
    if (!sol) {
        throw InfeasibleSyndromes("syndromes are inconsistent with the stabilizer");
    }
    auto unpack = [&](const BitVec &v) {
        MaskOp m;
        for (size_t q = 0; q < N; q++) {
            m.x |= (uint64_t)v.get(q) << q;
            m.z |= (uint64_t)v.get(N + q) << q;
        }
        return m;
    };
    Coset c;
    c.base = unpack(*sol);
    for (const BitVec &b : kernel_basis(mat)) {
        c.kernel.push_back(unpack(b));
    }
    return c;
}

template <typename Visit>
void enumerate_coset(const Coset &c, Visit &&visit) {
    if (c.kernel.size() > kMaxKernelDim) {
        throw InstanceTooLarge("coset enumeration needs 2^" + std::to_string(c.kernel.size()) + " patterns");
    }
    MaskOp cur = c.base;
    visit(cur);
    uint64_t total = uint64_t{1} << c.kernel.size();
    for (uint64_t i = 1; i < total; i++) {
        const MaskOp &b = c.kernel[std::countr_zero(i)];
        cur.x ^= b.x;
        cur.z ^= b.z;
        visit(cur);
    }
}

Constraint build_constraint(const CodeSpec &c, const SyndromeStream &s, size_t blocks, size_t N) {
    Constraint cons;
    for (size_t j = 0; j < blocks; j++) {
        for (size_t i = 0; i < c.num_gens(); i++) {
            cons.rows.push_back(to_mask(expand(c.gens[i], (int64_t)j, N)));
            cons.rhs.push_back(s.get(j, i));
        }
    }
    return cons;
}

}  // namespace

DecodeResult brute_force_ml(const CodeSpec &c, const ChannelModel &ch, const SyndromeStream &s, OracleMode mode) {
    ch.check();
    if (s.r != c.num_gens()) {
        throw std::invalid_argument("syndrome width does not match the code");
    }
    size_t N = c.n * s.q + c.m;
    if (N > 64) {
        throw InstanceTooLarge("brute force supports at most 64 qubits");
    }
    Constraint cons = build_constraint(c, s, s.q, N);
    LetterLogs logs = letter_logs(ch);

    bool found = false;
    double best_ll = kNegInf;
    MaskOp best;
    unsigned __int128 best_key = 0;
    auto consider = [&](const MaskOp &e, unsigned __int128 key) {
        double ll = mask_ll(logs, e.x, e.z, N);
        if (ll == kNegInf) {
            return;
        }
        if (!found || ll > best_ll + kOracleTol || (ll >= best_ll - kOracleTol && key < best_key)) {
            found = true;
            best_ll = ll;
            best = e;
            best_key = key;
        }
    };

    bool use_coset = mode == OracleMode::Coset;
    std::optional<Coset> coset;
    if (mode == OracleMode::Auto) {
        coset = solve_coset(cons, N);
        use_coset = coset->kernel.size() <= kMaxKernelDim || N > kMaxExhaustiveQubits;
    }
    if (use_coset) {
        if (!coset) {
            coset = solve_coset(cons, N);
        }
        enumerate_coset(*coset, [&](const MaskOp &e) {
            double ll = mask_ll(logs, e.x, e.z, N);
            if (ll == kNegInf || (found && ll < best_ll - kOracleTol)) {
                return;
            }
            consider(e, lex_key(e.x, e.z, N));
        });
    } else {
        if (N > kMaxExhaustiveQubits) {
            throw InstanceTooLarge("exhaustive search supports at most 14 qubits");
        }
        // Every pattern is visited in index order; the syndrome and likelihood
        // of the leading and trailing qubits come from per-half tables.
        struct Half {
            std::vector<uint64_t> syn;
            std::vector<double> ll;
            std::vector<MaskOp> op;
        };
        uint64_t target = 0;
        for (size_t i = 0; i < cons.rows.size(); i++) {
            target |= (uint64_t)cons.rhs[i] << i;
        }
        auto half = [&](size_t first, size_t len) {
            Half h;
            size_t count = size_t{1} << (2 * len);
            for (size_t idx = 0; idx < count; idx++) {
                MaskOp e;
                for (size_t k = 0; k < len; k++) {
                    unsigned v = (unsigned)((idx >> (2 * (len - 1 - k))) & 3);
                    e.x |= (uint64_t)(v & 1) << (first + k);
                    e.z |= (uint64_t)(v >> 1) << (first + k);
                }
                uint64_t syn = 0;
                for (size_t i = 0; i < cons.rows.size(); i++) {
                    syn |= (uint64_t)(std::popcount((cons.rows[i].x & e.z) ^ (cons.rows[i].z & e.x)) & 1) << i;
                }
                h.syn.push_back(syn);
                h.ll.push_back(mask_ll(logs, e.x, e.z, N));
                h.op.push_back(e);
            }
            return h;
        };
        size_t lo_len = std::min<size_t>(N, 7);
        Half head = half(0, N - lo_len), tail = half(N - lo_len, lo_len);
        for (size_t hi = 0; hi < head.syn.size(); hi++) {
            uint64_t want = target ^ head.syn[hi];
            for (size_t lo = 0; lo < tail.syn.size(); lo++) {
                if (tail.syn[lo] != want || head.ll[hi] == kNegInf || tail.ll[lo] == kNegInf) {
                    continue;
                }
                MaskOp e{head.op[hi].x | tail.op[lo].x, head.op[hi].z | tail.op[lo].z};
                consider(e, ((unsigned __int128)hi << (2 * lo_len)) | lo);
            }
        }
    }
    if (!found) {
        throw InfeasibleSyndromes("no error pattern with nonzero probability matches the syndromes");
    }
    DecodeResult res;
    res.estimate = SymplecticVector(N);
    for (size_t q = 0; q < N; q++) {
        res.estimate.x.set(q, (best.x >> q) & 1);
        res.estimate.z.set(q, (best.z >> q) & 1);
    }
    res.loglik = best_ll;
    return res;
}

std::vector<double> oracle_state_metrics(const CodeSpec &c, const ChannelModel &ch, const SyndromeStream &s, size_t j) {
    ch.check();
    if (j >= s.q) {
        throw std::out_of_range("oracle_state_metrics: block index past the stream");
    }
    size_t N = (j + 1) * c.n + c.m;
    if (N > 64) {
        throw InstanceTooLarge("oracle supports at most 64 qubits");
    }
    Constraint cons = build_constraint(c, s, j + 1, N);
    Coset coset = solve_coset(cons, N);
    LetterLogs logs = letter_logs(ch);
    std::vector<double> out(size_t{1} << (2 * c.m), kNegInf);
    enumerate_coset(coset, [&](const MaskOp &e) {
        double ll = mask_ll(logs, e.x, e.z, N);
        if (ll == kNegInf) {
            return;
        }
        size_t st = 0;
        for (size_t p = N - c.m; p < N; p++) {
            st = (st << 2) | (((e.x >> p) & 1) | (((e.z >> p) & 1) << 1));
        }
        out[st] = std::max(out[st], ll);
    });
    return out;
}

// ---------------------------------------------------------------------------

ResidualClassifier::ResidualClassifier(const CodeSpec &c, const LogicalOps &lo, size_t q)
    : zbar_missing_(lo.k > 0 && lo.zbar.empty()) {
    size_t N = c.n * q + c.m;
    auto add = [&](const PauliPoly &op, int64_t shift, const std::string &name) {
        PauliPoly d = delay(op, shift);
        if (d.support_end() <= N) {
            ops_.push_back(expand(op, shift, N));
            names_.push_back(name);
        }
    };
    for (size_t s = 0; s < q; s++) {
        int64_t shift = (int64_t)s + lo.lambda;
        for (size_t r = 0; r < lo.xbar.size(); r++) {
            std::string tag = "[s=" + std::to_string(s) + ",r=" + std::to_string(r) + "]";
            add(lo.xbar[r], shift, "X" + tag);
            if (r < lo.zbar.size()) {
                add(lo.zbar[r], shift, "Z" + tag);
            }
        }
    }
}

Classification ResidualClassifier::classify(const SymplecticVector &residual) const {
    Classification out;
    out.zbar_missing = zbar_missing_;
    for (size_t i = 0; i < ops_.size(); i++) {
        if (ops_[i].num_qubits() != residual.num_qubits()) {
            throw std::invalid_argument("residual has the wrong number of qubits");
        }
        if (!ops_[i].commutes_with(residual)) {
            out.success = false;
            out.violated.push_back(names_[i]);
        }
    }
    return out;
}

Classification classify_residual(
    const SymplecticVector &est, const SymplecticVector &truth, const CodeSpec &c, const LogicalOps &lo, size_t q) {
    SymplecticVector r = est;
    r ^= truth;
    return ResidualClassifier(c, lo, q).classify(r);
}

}  // namespace qconv
