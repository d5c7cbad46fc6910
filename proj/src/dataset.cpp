#include "ontosim/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "ontosim/errors.hpp"

namespace ontosim {

PairStats describe(const std::vector<double>& scores) {
    PairStats s;
    if (scores.empty()) return s;
    const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
    s.range = *hi - *lo;
    double sum = 0.0;
    for (double x : scores) sum += x;
    s.mean = sum / static_cast<double>(scores.size());
    if (scores.size() > 1) {
        double ss = 0.0;
        for (double x : scores) ss += (x - s.mean) * (x - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(scores.size() - 1));
    }
    return s;
}

JudgmentDataset JudgmentDataset::from_judgments(std::vector<Judgment> judgments) {
    JudgmentDataset ds;
    std::map<int, ConceptPair> pairs;
    for (const auto& j : judgments) {
        if (!(j.score >= 0.0 && j.score <= 10.0))
            throw RangeError("score " + std::to_string(j.score) + " for pair " + std::to_string(j.pair_id) +
                             " is outside [0,10]");
        auto [it, fresh] = pairs.emplace(j.pair_id, ConceptPair{j.pair_id, j.c1, j.c2});
        if (!fresh && (it->second.c1 != j.c1 || it->second.c2 != j.c2))
            throw ParseError("pair " + std::to_string(j.pair_id) + " names two different concept pairs");
    }
    for (auto& [id, p] : pairs) {
        ds.position_[id] = static_cast<int>(ds.pairs_.size());
        ds.pairs_.push_back(std::move(p));
    }
    ds.judgments_ = std::move(judgments);
    return ds;
}

std::vector<int> JudgmentDataset::users() const {
    std::set<int> u;
    for (const auto& j : judgments_) u.insert(j.user_id);
    return {u.begin(), u.end()};
}

int JudgmentDataset::pair_position(int pair_id) const {
    auto it = position_.find(pair_id);
    return it == position_.end() ? -1 : it->second;
}

std::vector<double> JudgmentDataset::scores_for_pair(int pair_id) const {
    std::vector<double> out;
    for (const auto& j : judgments_)
        if (j.pair_id == pair_id) out.push_back(j.score);
    return out;
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line_no, const char* column) {
    T value{};
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("line " + std::to_string(line_no) + ": bad " + column + " '" + text + "'");
    return value;
}

}  // namespace

JudgmentDataset read_judgments_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("judgment CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "pair_id,concept1,concept2,user_id,score")
        throw ParseError("judgment CSV header must be 'pair_id,concept1,concept2,user_id,score'");
    std::vector<Judgment> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_row(line);
        if (cells.size() != 5) throw ParseError("line " + std::to_string(line_no) + ": expected 5 columns");
        Judgment j;
        j.pair_id = parse_number<int>(cells[0], line_no, "pair_id");
        j.c1 = ConceptId(cells[1]);
        j.c2 = ConceptId(cells[2]);
        j.user_id = parse_number<int>(cells[3], line_no, "user_id");
        j.score = parse_number<double>(cells[4], line_no, "score");
        rows.push_back(std::move(j));
    }
    return JudgmentDataset::from_judgments(std::move(rows));
}

JudgmentDataset read_judgments_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open dataset file '" + path + "'");
    return read_judgments_csv(in);
}

void write_judgments_csv(std::ostream& out, const JudgmentDataset& ds) {
    out << "pair_id,concept1,concept2,user_id,score\n";
    for (const auto& j : ds.judgments()) {
        char buf[32];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, j.score);
        out << j.pair_id << ',' << j.c1.value << ',' << j.c2.value << ',' << j.user_id << ','
            << std::string_view(buf, static_cast<std::size_t>(ptr - buf)) << '\n';
    }
}

}  // namespace ontosim
