#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcnet/dates.hpp"
#include "dcnet/graph.hpp"

namespace dcnet {

struct LoanRecord {
    std::string loan_id;
    std::string borrower_id;
    Date origination;
    int term_months = 0;        // >= 1
    double interest_rate = 0.0; // annualized fraction in (0, 1)
    double principal = 0.0;     // > 0
};

struct FundingRecord {
    std::string loan_id;
    std::string lender_id;
    double amount = 0.0; // > 0
};

// Parsed and cross-validated ledger. Edge labels are loan indices.
struct Ledger {
    std::vector<LoanRecord> loans;
    std::vector<FundingRecord> fundings;
    std::unordered_map<std::string, std::size_t> loan_index;      // loan_id -> index
    std::vector<std::vector<std::size_t>> fundings_by_loan;       // loan index -> funding indices
};

// loans.csv:    loan_id,borrower_id,origination_date,term_months,interest_rate,principal
// fundings.csv: loan_id,lender_id,amount
// Every funding must reference a parsed loan, every loan must have at least
// one funding, and a borrower may not fund their own loan.
Ledger parse_ledger(std::istream& loans_source, std::istream& fundings_source,
                    const std::string& loans_name = "loans.csv",
                    const std::string& fundings_name = "fundings.csv");

enum class EventKind { originate, mature };

struct LedgerEvent {
    Date date;
    EventKind kind;
    std::size_t loan; // index into Ledger::loans

    // Total order: date, Originate before Mature, then loan_id.
};

// One Originate per loan at origination, one Mature at origination plus
// term_months calendar months (end-of-month clamped), sorted.
std::vector<LedgerEvent> build_events(const Ledger& ledger);

struct DailySnapshot {
    Date date;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t added_nodes = 0;
    std::int64_t added_edges = 0;
    std::int64_t deleted_nodes = 0;
    std::int64_t deleted_edges = 0;
    double avg_degree = 0.0;       // 2m/n, 0 on an empty graph
    double avg_degree_added = 0.0; // mean end-of-day degree of nodes added this day
    double mean_rate = 0.0;        // R_t: mean interest rate of loans originated this day
    double mean_term = 0.0;        // M_t: mean term (months) of loans originated this day
    DegreeHistogram histogram;
};

struct OverlapRow {
    Date date;
    std::int64_t borrowers = 0; // present participants that only ever borrowed
    std::int64_t lenders = 0;   // present participants that only ever lent
    std::int64_t dual = 0;      // present participants that did both
};

struct ReplayResult {
    std::vector<DailySnapshot> snapshots;
    std::vector<OverlapRow> overlap;
    DynamicGraph graph;                                    // state after the last event day
    std::unordered_map<std::string, NodeId> participants;  // still-present participants
};

// Replays the event stream one calendar day at a time, applying that day's
// events (originations add nodes/edges, maturities remove the loan's edges
// and any endpoint left isolated) and then recording a snapshot. Days with
// no events still emit a snapshot with carried-forward counts.
ReplayResult replay(const Ledger& ledger, const std::vector<LedgerEvent>& events);

// Per-day counts of pure-borrower / pure-lender / dual-role participants
// among those present, with roles accumulated over the whole history so far.
const std::vector<OverlapRow>& participant_overlap_report(const ReplayResult& result);

} // namespace dcnet
