#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ontosim/ontology.hpp"

namespace ontosim {

/// One human rating of a concept pair on the 0-10 scale.
struct Judgment {
    int pair_id = 0;
    ConceptId c1;
    ConceptId c2;
    int user_id = 0;
    double score = 0.0;
};

struct ConceptPair {
    int pair_id = 0;
    ConceptId c1;
    ConceptId c2;
};

/// Range (max - min), sample standard deviation and mean of a pair's scores.
struct PairStats {
    double range = 0.0;
    double sd = 0.0;
    double mean = 0.0;
};

PairStats describe(const std::vector<double>& scores);

/// Concept pairs with per-user scores. Pairs are ordered by id; judgments
/// keep file order.
class JudgmentDataset {
public:
    JudgmentDataset() = default;
    /// Throws RangeError for scores outside [0,10] and ParseError when one
    /// pair_id names two different concept pairs.
    static JudgmentDataset from_judgments(std::vector<Judgment> judgments);

    const std::vector<ConceptPair>& pairs() const noexcept { return pairs_; }
    const std::vector<Judgment>& judgments() const noexcept { return judgments_; }
    std::vector<int> users() const;
    /// Position of `pair_id` in pairs(), or -1.
    int pair_position(int pair_id) const;
    std::vector<double> scores_for_pair(int pair_id) const;
    PairStats pair_stats(int pair_id) const { return describe(scores_for_pair(pair_id)); }
    bool empty() const noexcept { return judgments_.empty(); }

private:
    std::vector<ConceptPair> pairs_;
    std::vector<Judgment> judgments_;
    std::map<int, int> position_;
};

/// CSV with header `pair_id,concept1,concept2,user_id,score`.
JudgmentDataset read_judgments_csv(std::istream& in);
JudgmentDataset read_judgments_file(const std::string& path);
void write_judgments_csv(std::ostream& out, const JudgmentDataset& ds);

}  // namespace ontosim
