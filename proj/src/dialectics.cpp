#include "argus/dialectics.hpp"

#include <algorithm>

namespace argus {

std::string to_string(ProofOutcome o) {
    switch (o) {
    case ProofOutcome::ProponentWins: return "proponent-wins";
    case ProofOutcome::OpponentWins: return "opponent-wins";
    case ProofOutcome::DepthExceeded: return "depth-exceeded";
    }
    return "?";
}

std::string to_string(ProvableStatus s) {
    switch (s) {
    case ProvableStatus::ProvablyJustified: return "justified";
    case ProvableStatus::ProvablyDefeated: return "defeated";
    case ProvableStatus::ProvablyArguable: return "arguable";
    case ProvableStatus::Indeterminate: return "indeterminate";
    }
    return "?";
}

namespace {

enum class GameResult { Win, Lose, Deep };

// Winning is monotone in the branch history: banning more opponent moves
// only removes attacks the proponent must answer. A win found under the
// empty history therefore holds under every history, which makes the
// empty-history cache sound at any recursion point. Losses are not cached:
// a loss under a larger history says nothing about smaller ones.
class Game {
public:
    Game(const AttackAnalysis& analysis, int depth_limit, bool build_tree)
        : analysis_(analysis), depth_limit_(depth_limit), build_tree_(build_tree),
          win_cache_(analysis.size(), 0) {}

    GameResult run(int arg, ProofNode* node) {
        history_.clear();
        return proponent(arg, 1, node);
    }

private:
    GameResult proponent(int arg, int level, ProofNode* node) {
        if (node)
            *node = ProofNode{true, arg, {}};
        if (!build_tree_ && history_.empty() && win_cache_[arg] == 1)
            return GameResult::Win;
        bool deep = false;
        bool all_answered = true;
        for (int d : analysis_.defeaters_of(arg)) {
            if (std::find(history_.begin(), history_.end(), d) != history_.end())
                continue; // an opponent cannot repeat a move within a branch
            if (level + 1 > depth_limit_) {
                deep = true;
                if (node)
                    node->children.push_back(ProofNode{false, d, {}});
                continue;
            }
            ProofNode* opp_node = nullptr;
            if (node) {
                node->children.push_back(ProofNode{false, d, {}});
                opp_node = &node->children.back();
            }
            GameResult reply = opponent(d, level + 1, opp_node);
            if (reply == GameResult::Deep)
                deep = true;
            else if (reply == GameResult::Lose)
                all_answered = false;
            if (!all_answered && !node)
                return GameResult::Lose;
        }
        if (!all_answered)
            return GameResult::Lose;
        if (deep)
            return GameResult::Deep;
        if (!build_tree_ && history_.empty())
            win_cache_[arg] = 1;
        return GameResult::Win;
    }

    // A won opponent node carries exactly one child: the proponent reply
    // whose subtree wins. Alternatives are explored by backtracking.
    GameResult opponent(int move, int level, ProofNode* node) {
        bool deep = false;
        history_.push_back(move);
        GameResult result = GameResult::Lose;
        for (int z : analysis_.strict_defeaters_of(move)) {
            if (level + 1 > depth_limit_) {
                deep = true;
                break;
            }
            if (!build_tree_ && win_cache_[z] == 1) {
                result = GameResult::Win;
                if (node)
                    node->children.push_back(ProofNode{true, z, {}});
                break;
            }
            ProofNode reply;
            GameResult r = proponent(z, level + 1, node ? &reply : nullptr);
            if (r == GameResult::Win) {
                result = GameResult::Win;
                if (node)
                    node->children.push_back(std::move(reply));
                break;
            }
            if (r == GameResult::Deep)
                deep = true;
        }
        history_.pop_back();
        if (result == GameResult::Win)
            return GameResult::Win;
        return deep ? GameResult::Deep : GameResult::Lose;
    }

    const AttackAnalysis& analysis_;
    int depth_limit_;
    bool build_tree_;
    std::vector<int> history_;
    std::vector<uint8_t> win_cache_;
};

} // namespace

ProofTree prove(const AttackAnalysis& analysis, int arg, int depth_limit) {
    Game game(analysis, depth_limit, true);
    ProofTree tree{ProofNode{true, arg, {}}, ProofOutcome::OpponentWins};
    GameResult r = game.run(arg, &tree.root);
    switch (r) {
    case GameResult::Win: tree.outcome = ProofOutcome::ProponentWins; break;
    case GameResult::Lose: tree.outcome = ProofOutcome::OpponentWins; break;
    case GameResult::Deep: tree.outcome = ProofOutcome::DepthExceeded; break;
    }
    return tree;
}

DialecticalReport provable_statuses(const AttackAnalysis& analysis, int depth_limit) {
    const int n = analysis.size();
    DialecticalReport report;
    report.per_argument.assign(n, ProvableStatus::ProvablyArguable);

    Game game(analysis, depth_limit, false);
    std::vector<uint8_t> winner(n, 0);
    std::vector<uint8_t> unresolved(n, 0);
    for (int i = 0; i < n; ++i) {
        switch (game.run(i, nullptr)) {
        case GameResult::Win: winner[i] = 1; break;
        case GameResult::Deep:
            unresolved[i] = 1;
            report.depth_exceeded = true;
            break;
        case GameResult::Lose: break;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (winner[i]) {
            report.per_argument[i] = ProvableStatus::ProvablyJustified;
            continue;
        }
        if (unresolved[i]) {
            report.per_argument[i] = ProvableStatus::Indeterminate;
            continue;
        }
        bool defeated = false;
        for (int y = 0; y < n && !defeated; ++y)
            defeated = winner[y] && analysis.strictly_defeats(y, i);
        if (defeated)
            report.per_argument[i] = ProvableStatus::ProvablyDefeated;
    }
    return report;
}

ProvableStatus provable_status(const AttackAnalysis& analysis, int arg, int depth_limit) {
    return provable_statuses(analysis, depth_limit).per_argument[arg];
}

CrossCheckReport cross_check(const AttackAnalysis& analysis, const StatusReport& fixpoint_report,
                             int depth_limit) {
    DialecticalReport game = provable_statuses(analysis, depth_limit);
    CrossCheckReport report;
    report.depth_exceeded = game.depth_exceeded;
    for (int i = 0; i < analysis.size(); ++i) {
        ArgStatus fs = fixpoint_report.per_argument[i];
        ProvableStatus gs = game.per_argument[i];
        bool agree = (fs == ArgStatus::Justified && gs == ProvableStatus::ProvablyJustified) ||
                     (fs == ArgStatus::Defeated && gs == ProvableStatus::ProvablyDefeated) ||
                     (fs == ArgStatus::Arguable && gs == ProvableStatus::ProvablyArguable);
        if (!agree)
            report.disagreements.push_back({i, fs, gs});
    }
    return report;
}

} // namespace argus
