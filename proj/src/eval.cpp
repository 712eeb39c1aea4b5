#include "leapp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace leapp {

RocResult roc_auc(const std::vector<double>& scores, const std::vector<bool>& truth) {
    if (scores.size() != truth.size()) {
        throw Error(ErrorCode::DimensionMismatch, "scores and truth differ in length");
    }
    const size_t n = scores.size();
    long long pos = 0;
    for (bool t : truth) pos += t ? 1 : 0;
    const long long neg = static_cast<long long>(n) - pos;
    if (pos == 0 || neg == 0) {
        throw Error(ErrorCode::DegenerateTruth, "need at least one positive and one negative");
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return scores[a] > scores[b]; });

    RocResult out;
    out.curve.reserve(n + 1);
    out.curve.emplace_back(0.0, 0.0);
    long long tp = 0;
    long long fp = 0;
    double auc = 0.0;
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        long long dtp = 0;
        long long dfp = 0;
        while (j < n && scores[order[j]] == scores[order[i]]) {
            if (truth[order[j]]) {
                ++dtp;
            } else {
                ++dfp;
            }
            ++j;
        }
        const double fpr0 = static_cast<double>(fp) / static_cast<double>(neg);
        const double tpr0 = static_cast<double>(tp) / static_cast<double>(pos);
        tp += dtp;
        fp += dfp;
        const double fpr1 = static_cast<double>(fp) / static_cast<double>(neg);
        const double tpr1 = static_cast<double>(tp) / static_cast<double>(pos);
        auc += (fpr1 - fpr0) * 0.5 * (tpr0 + tpr1);
        out.curve.emplace_back(fpr1, tpr1);
        i = j;
    }
    out.auc = auc;
    return out;
}

double precision_at(const std::vector<double>& scores, const std::vector<bool>& truth, int H) {
    if (scores.size() != truth.size()) {
        throw Error(ErrorCode::DimensionMismatch, "scores and truth differ in length");
    }
    if (H < 0 || static_cast<size_t>(H) > scores.size()) {
        throw Error(ErrorCode::InvalidScenario, "H must lie in [0, N]");
    }
    if (H == 0) return 0.0;
    std::vector<size_t> order(scores.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    long long hits = 0;
    for (int i = 0; i < H; ++i) {
        if (truth[order[static_cast<size_t>(i)]]) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(H);
}

double angle_cosine(const Vector& u_hat, const Vector& u) {
    if (u_hat.size() != u.size()) {
        throw Error(ErrorCode::DimensionMismatch, "vectors differ in length");
    }
    const double nu = u_hat.norm();
    const double nv = u.norm();
    if (nu == 0.0 || nv == 0.0) {
        throw Error(ErrorCode::ZeroVector, "angle with a zero vector is undefined");
    }
    return std::abs(u_hat.dot(u)) / (nu * nv);
}

std::vector<ResemblancePoint> resemblance_curve(const std::vector<std::vector<double>>& pvals,
                                                const std::vector<double>& alphas) {
    const size_t M = pvals.size();
    if (M < 2) {
        throw Error(ErrorCode::IndexMismatch, "need at least two p-value lists");
    }
    const size_t N = pvals[0].size();
    for (const auto& list : pvals) {
        if (list.size() != N) {
            throw Error(ErrorCode::IndexMismatch, "p-value lists differ in length");
        }
    }

    // Sweep events (p, gene) in ascending p; gene i in c lists contributes
    // C(c,2) pairwise intersections and 1 to the union once c >= 1.
    std::vector<std::pair<double, size_t>> events;
    events.reserve(M * N);
    for (const auto& list : pvals) {
        for (size_t i = 0; i < N; ++i) events.emplace_back(list[i], i);
    }
    std::sort(events.begin(), events.end());

    std::vector<int> count(N, 0);
    std::vector<ResemblancePoint> out;
    out.reserve(alphas.size());
    size_t e = 0;
    long long inter = 0;
    long long uni = 0;
    for (double alpha : alphas) {
        while (e < events.size() && events[e].first <= alpha) {
            int& c = count[events[e].second];
            inter += c;  // new pairs with each list already containing the gene
            if (c == 0) ++uni;
            ++c;
            ++e;
        }
        out.push_back({alpha, inter, uni});
    }
    return out;
}

}  // namespace leapp
