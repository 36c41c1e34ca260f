#include "dcnet/ledger.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dcnet/csv.hpp"

namespace dcnet {

namespace {

double parse_positive_real(const CsvReader& reader, const std::string& field,
                           const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &used);
    } catch (const std::exception&) {
        reader.fail("bad " + what + " '" + field + "'");
    }
    if (used != field.size()) reader.fail("bad " + what + " '" + field + "'");
    return v;
}

} // namespace

Ledger parse_ledger(std::istream& loans_source, std::istream& fundings_source,
                    const std::string& loans_name, const std::string& fundings_name) {
    Ledger ledger;

    CsvReader loans(loans_source,
                    "loan_id,borrower_id,origination_date,term_months,interest_rate,principal",
                    loans_name);
    std::vector<std::string> f;
    while (loans.next(f)) {
        LoanRecord rec;
        rec.loan_id = f[0];
        rec.borrower_id = f[1];
        if (rec.loan_id.empty()) loans.fail("empty loan_id");
        if (rec.borrower_id.empty()) loans.fail("empty borrower_id");
        if (ledger.loan_index.count(rec.loan_id))
            loans.fail("duplicate loan_id '" + rec.loan_id + "'");
        try {
            rec.origination = parse_date(f[2]);
        } catch (const std::exception& e) {
            loans.fail(e.what());
        }
        try {
            rec.term_months = std::stoi(f[3]);
        } catch (const std::exception&) {
            loans.fail("bad term_months '" + f[3] + "'");
        }
        if (rec.term_months < 1) loans.fail("term_months must be >= 1");
        rec.interest_rate = parse_positive_real(loans, f[4], "interest_rate");
        if (rec.interest_rate <= 0.0 || rec.interest_rate >= 1.0)
            loans.fail("interest_rate must lie in (0,1)");
        rec.principal = parse_positive_real(loans, f[5], "principal");
        if (rec.principal <= 0.0) loans.fail("principal must be > 0");

        ledger.loan_index.emplace(rec.loan_id, ledger.loans.size());
        ledger.loans.push_back(std::move(rec));
    }
    ledger.fundings_by_loan.resize(ledger.loans.size());

    CsvReader fundings(fundings_source, "loan_id,lender_id,amount", fundings_name);
    std::set<std::pair<std::string, std::string>> seen;
    while (fundings.next(f)) {
        FundingRecord rec;
        rec.loan_id = f[0];
        rec.lender_id = f[1];
        if (rec.lender_id.empty()) fundings.fail("empty lender_id");
        auto it = ledger.loan_index.find(rec.loan_id);
        if (it == ledger.loan_index.end())
            fundings.fail("funding references unknown loan_id '" + rec.loan_id + "'");
        if (!seen.emplace(rec.loan_id, rec.lender_id).second)
            fundings.fail("duplicate funding for loan '" + rec.loan_id + "' by lender '" +
                          rec.lender_id + "'");
        if (ledger.loans[it->second].borrower_id == rec.lender_id)
            fundings.fail("lender '" + rec.lender_id + "' cannot fund their own loan '" +
                          rec.loan_id + "'");
        rec.amount = parse_positive_real(fundings, f[2], "amount");
        if (rec.amount <= 0.0) fundings.fail("amount must be > 0");

        ledger.fundings_by_loan[it->second].push_back(ledger.fundings.size());
        ledger.fundings.push_back(std::move(rec));
    }

    for (std::size_t i = 0; i < ledger.loans.size(); ++i)
        if (ledger.fundings_by_loan[i].empty())
            throw std::runtime_error(loans_name + ": loan '" + ledger.loans[i].loan_id +
                                     "' has no fundings (unfunded listings are excluded)");
    return ledger;
}

std::vector<LedgerEvent> build_events(const Ledger& ledger) {
    std::vector<LedgerEvent> events;
    events.reserve(ledger.loans.size() * 2);
    for (std::size_t i = 0; i < ledger.loans.size(); ++i) {
        const LoanRecord& loan = ledger.loans[i];
        events.push_back({loan.origination, EventKind::originate, i});
        events.push_back({add_months_clamped(loan.origination, loan.term_months),
                          EventKind::mature, i});
    }
    std::sort(events.begin(), events.end(), [&](const LedgerEvent& a, const LedgerEvent& b) {
        if (a.date != b.date) return a.date < b.date;
        if (a.kind != b.kind) return a.kind == EventKind::originate;
        return ledger.loans[a.loan].loan_id < ledger.loans[b.loan].loan_id;
    });
    return events;
}

namespace {

// Cumulative role flags per participant, kept across departures and returns.
struct RoleState {
    bool borrowed = false;
    bool lent = false;
    bool present = false;
};

class OverlapCounter {
public:
    void note_role(RoleState& s, bool borrowing) {
        if (s.present) drop(s);
        (borrowing ? s.borrowed : s.lent) = true;
        s.present = true;
        raise(s);
    }
    void leave(RoleState& s) {
        if (s.present) {
            s.present = false;
            drop(s);
        }
    }
    OverlapRow row(Date d) const { return {d, borrowers_, lenders_, dual_}; }

private:
    void raise(const RoleState& s) { bucket(s) += 1; }
    void drop(const RoleState& s) { bucket(s) -= 1; }
    std::int64_t& bucket(const RoleState& s) {
        if (s.borrowed && s.lent) return dual_;
        return s.borrowed ? borrowers_ : lenders_;
    }
    std::int64_t borrowers_ = 0;
    std::int64_t lenders_ = 0;
    std::int64_t dual_ = 0;
};

} // namespace

ReplayResult replay(const Ledger& ledger, const std::vector<LedgerEvent>& events) {
    ReplayResult result;
    if (events.empty()) return result;

    std::unordered_map<std::string, NodeId>& node_of = result.participants;
    std::unordered_map<NodeId, std::string> participant_of;
    std::unordered_map<std::string, RoleState> roles;
    OverlapCounter overlap;
    DynamicGraph& g = result.graph;

    auto ensure_node = [&](const std::string& participant, bool borrowing,
                           std::int64_t& added_nodes) {
        auto it = node_of.find(participant);
        RoleState& role = roles[participant];
        if (it == node_of.end()) {
            NodeId v = g.add_node();
            node_of.emplace(participant, v);
            participant_of.emplace(v, participant);
            ++added_nodes;
        }
        overlap.note_role(role, borrowing);
        return node_of.at(participant);
    };

    std::size_t next_event = 0;
    Date last = events.back().date;
    for (Date day = events.front().date; day <= last; day += std::chrono::days{1}) {
        DailySnapshot snap;
        snap.date = day;
        std::vector<NodeId> added_today;
        double rate_sum = 0.0;
        double term_sum = 0.0;
        std::int64_t originated = 0;

        while (next_event < events.size() && events[next_event].date == day) {
            const LedgerEvent& ev = events[next_event++];
            const LoanRecord& loan = ledger.loans[ev.loan];
            if (ev.kind == EventKind::originate) {
                std::int64_t before = snap.added_nodes;
                NodeId borrower = ensure_node(loan.borrower_id, true, snap.added_nodes);
                if (snap.added_nodes > before) added_today.push_back(borrower);
                for (std::size_t fi : ledger.fundings_by_loan[ev.loan]) {
                    const FundingRecord& funding = ledger.fundings[fi];
                    before = snap.added_nodes;
                    NodeId lender = ensure_node(funding.lender_id, false, snap.added_nodes);
                    if (snap.added_nodes > before) added_today.push_back(lender);
                    g.add_edge(borrower, lender, static_cast<EdgeLabel>(ev.loan));
                    ++snap.added_edges;
                }
                rate_sum += loan.interest_rate;
                term_sum += loan.term_months;
                ++originated;
            } else {
                std::int64_t m_before = g.edge_count();
                std::vector<NodeId> removed = g.remove_loan(static_cast<EdgeLabel>(ev.loan));
                snap.deleted_edges += m_before - g.edge_count();
                snap.deleted_nodes += static_cast<std::int64_t>(removed.size());
                for (NodeId v : removed) {
                    const std::string& participant = participant_of.at(v);
                    overlap.leave(roles.at(participant));
                    node_of.erase(participant);
                    participant_of.erase(v);
                }
            }
        }

        snap.n = g.node_count();
        snap.m = g.edge_count();
        snap.avg_degree = snap.n > 0 ? g.average_degree() : 0.0;
        if (!added_today.empty()) {
            double deg_sum = 0.0;
            for (NodeId v : added_today) deg_sum += static_cast<double>(g.degree(v));
            snap.avg_degree_added = deg_sum / static_cast<double>(added_today.size());
        }
        if (originated > 0) {
            snap.mean_rate = rate_sum / static_cast<double>(originated);
            snap.mean_term = term_sum / static_cast<double>(originated);
        }
        snap.histogram = g.degree_histogram();
        result.snapshots.push_back(std::move(snap));
        result.overlap.push_back(overlap.row(day));
    }
    return result;
}

const std::vector<OverlapRow>& participant_overlap_report(const ReplayResult& result) {
    return result.overlap;
}

} // namespace dcnet
