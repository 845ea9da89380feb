#pragma once

#include "kodaira/families.hpp"
#include "kodaira/kodaira_type.hpp"
#include "kodaira/tate.hpp"

#include <string>
#include <vector>

namespace kodaira {

// Parameters with the valuations and decompositions the row predicates need.
struct RowContext {
    TorsionTag tag;
    Int p;
    Int a, b, d;
    int va = 0, vb = 0, vd = 0;
    Int t;       // C2: b^2 d - a^2
    int vt = 0;  // C2 only
    Int c, dd, e;  // C3: a = c^3 dd^2 e;  C4: a = c^2 dd

    long m(const Int& x, long k) const { return mod(x, k); }
    int v(const Int& x) const { return val(x, p); }
};

RowContext make_context(const FamilySpec& s, const Int& p);

struct RowOutput {
    KodairaType type;
    int fp;
    int cp;
};

enum class PPattern { Fixed, Odd, NotThree, AtLeastFive };

struct TableRow {
    const char* id;
    TorsionTag tag;
    PPattern pattern;
    int fixed_p;  // used with PPattern::Fixed
    const char* condition;
    const char* type;
    const char* f;
    const char* c;
    bool reconstructed;
    bool (*match)(const RowContext&);
    RowOutput (*out)(const RowContext&);

    bool applies_to(const Int& p) const;
    std::string p_pattern() const;  // "2", "odd", "!=3", ">=5"
};

// Table numbers 2..8; table 2 is C2 at p = 2, table 3 is C2 at odd p.
const std::vector<TableRow>& table_rows(int table);
int table_for(TorsionTag tag, const Int& p);

std::string rows_csv(int table);

struct CoverageError : std::logic_error {
    using std::logic_error::logic_error;
};

struct Classification {
    LocalData data;
    const TableRow* row = nullptr;
};

// Rows whose predicate fires. Exactly one for every additive (s, p).
std::vector<const TableRow*> matching_rows(const FamilySpec& s, const Int& p);

// Throws NotAdditive when p is not additive for s, CoverageError when no row fires.
Classification classify_detailed(const FamilySpec& s, const Int& p);
LocalData classify(const FamilySpec& s, const Int& p);

struct CrosscheckEntry {
    Int p;
    std::string condition;
    std::string row_id;
    LocalData table;
    LocalData engine;
    bool match = false;
    std::string error;  // coverage failure, when set
};

struct CrosscheckReport {
    FamilySpec spec;
    std::vector<CrosscheckEntry> entries;

    bool ok() const;
};

CrosscheckReport crosscheck(const FamilySpec& s, const FactorOptions& opt = default_factor_options());

namespace detail {
const std::vector<TableRow>& c2_at_2_rows();
}

}  // namespace kodaira
