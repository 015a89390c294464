#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "mcube/decision.hpp"

namespace mcube {

namespace {

class Fenwick {
public:
    explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {
        for (std::size_t i = 1; i <= n; ++i) {
            tree_[i] += 1;
            std::size_t parent = i + (i & (~i + 1));
            if (parent <= n) tree_[parent] += tree_[i];
        }
        top_ = 1;
        while (top_ * 2 <= n) top_ *= 2;
    }

    void remove(std::size_t pos) {
        for (std::size_t i = pos + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] -= 1;
    }

    // Alive positions in [0, pos).
    std::int64_t prefix(std::size_t pos) const {
        std::int64_t s = 0;
        for (std::size_t i = pos; i > 0; i -= i & (~i + 1)) s += tree_[i];
        return s;
    }

    // Position of the (k+1)-th alive entry; size() when absent.
    std::size_t select(std::int64_t k) const {
        std::size_t pos = 0;
        for (std::size_t step = top_; step > 0; step /= 2) {
            std::size_t next = pos + step;
            if (next < tree_.size() && tree_[next] <= k) {
                pos = next;
                k -= tree_[next];
            }
        }
        return pos;
    }

private:
    std::vector<std::int64_t> tree_;
    std::size_t top_;
};

class SupportFilter {
public:
    SupportFilter(const Logic& logic, const RowSet& rows)
        : logic_(logic), rows_(rows), width_(rows.width()), order_(rows.size()),
          alive_(rows.size(), 1), fenwick_(rows.size()) {
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            auto ra = rows_[a];
            auto rb = rows_[b];
            return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
        });
        std::map<std::string, std::size_t> ids;
        sig_of_.resize(rows.size());
        for (std::size_t p = 0; p < order_.size(); ++p) {
            auto row = rows_[order_[p]];
            std::string key(width_, '\0');
            for (std::size_t c = 0; c < width_; ++c)
                key[c] = static_cast<char>(allowed_successors(logic_, row[c]).bits());
            auto [it, fresh] = ids.try_emplace(key, ids.size());
            if (fresh) masks_.insert(masks_.end(), key.begin(), key.end());
            sig_of_[p] = it->second;
        }
        memo_.assign(ids.size() * width_ * 2, unknown);
    }

    std::size_t run() {
        std::size_t rounds = 0;
        std::vector<std::size_t> doomed;
        for (;;) {
            doomed.clear();
            for (std::size_t p = 0; p < order_.size(); ++p)
                if (alive_[p] && !supported(p)) doomed.push_back(p);
            if (doomed.empty()) break;
            for (std::size_t p : doomed) {
                alive_[p] = 0;
                fenwick_.remove(p);
            }
            ++rounds;
        }
        return rounds;
    }

    std::vector<std::size_t> survivors() const {
        std::vector<std::size_t> out;
        for (std::size_t p = 0; p < order_.size(); ++p)
            if (alive_[p]) out.push_back(order_[p]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static constexpr std::int32_t unknown = -2;
    static constexpr std::int32_t none = -1;

    Value cell(std::size_t p, std::size_t c) const { return rows_[order_[p]][c]; }

    bool supported(std::size_t p) {
        auto row = rows_[order_[p]];
        std::size_t sig = sig_of_[p];
        for (std::size_t c = 0; c < width_; ++c) {
            Value v = row[c];
            for (int polarity = 0; polarity < 2; ++polarity) {
                bool needed = polarity == 0 ? possible_values.contains(v)
                                            : possibly_not_values.contains(v);
                if (!needed) continue;
                std::int32_t& w = memo_[(sig * width_ + c) * 2 + polarity];
                if (w == none) return false;
                if (w >= 0 && alive_[static_cast<std::size_t>(w)]) continue;
                w = search(sig, c, polarity);
                if (w == none) return false;
            }
        }
        return true;
    }

    std::int32_t search(std::size_t sig, std::size_t column, int polarity) {
        query_.assign(masks_.begin() + static_cast<std::ptrdiff_t>(sig * width_),
                      masks_.begin() + static_cast<std::ptrdiff_t>((sig + 1) * width_));
        ValueSet side = polarity == 0 ? logic_.designated : logic_.undesignated;
        query_[column] = static_cast<char>(
            (ValueSet::from_bits(static_cast<std::uint8_t>(query_[column])) & side).bits());
        last_narrow_ = -1;
        for (std::size_t c = 0; c < width_; ++c)
            if (!logic_.values.subset_of(
                    ValueSet::from_bits(static_cast<std::uint8_t>(query_[c]))))
                last_narrow_ = static_cast<std::ptrdiff_t>(c);
        return descend(0, 0, order_.size());
    }

    std::size_t lower(std::size_t lo, std::size_t hi, std::size_t c, unsigned v) const {
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (static_cast<unsigned>(cell(mid, c)) < v)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }

    std::int32_t descend(std::size_t depth, std::size_t lo, std::size_t hi) {
        std::int64_t before = fenwick_.prefix(lo);
        if (fenwick_.prefix(hi) == before) return none;
        if (static_cast<std::ptrdiff_t>(depth) > last_narrow_)
            return static_cast<std::int32_t>(fenwick_.select(before));
        ValueSet mask = ValueSet::from_bits(static_cast<std::uint8_t>(query_[depth]));
        for (Value v : mask) {
            std::size_t a = lower(lo, hi, depth, static_cast<unsigned>(v));
            std::size_t b = lower(a, hi, depth, static_cast<unsigned>(v) + 1);
            if (a == b) continue;
            std::int32_t w = descend(depth + 1, a, b);
            if (w != none) return w;
        }
        return none;
    }

    const Logic& logic_;
    const RowSet& rows_;
    std::size_t width_;
    std::vector<std::size_t> order_;
    std::vector<char> alive_;
    Fenwick fenwick_;
    std::vector<std::size_t> sig_of_;
    std::string masks_;
    std::vector<std::int32_t> memo_;
    std::string query_;
    std::ptrdiff_t last_narrow_ = -1;
};

}  // namespace

FilterResult filter_rows(const Logic& logic, const RowSet& rows) {
    SupportFilter engine(logic, rows);
    FilterResult out;
    out.rounds = engine.run();
    out.survivors = engine.survivors();
    return out;
}

bool is_supported(const TableModel& m) {
    const Logic& logic = *m.logic;
    if (m.relation.node_count() != m.rows.size()) return false;
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        auto row = m.rows[i];
        for (std::uint32_t j : m.relation.successors(i))
            if (!may_succeed(logic, row, m.rows[j])) return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            for (ValueSet need : support_requirements(logic, row[c])) {
                bool found = false;
                for (std::uint32_t j : m.relation.successors(i))
                    if (need.contains(m.rows[j][c])) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
        }
    }
    return true;
}

}  // namespace mcube
