#include "kodaira/kodaira_type.hpp"

#include "kodaira/arith.hpp"

#include <algorithm>
#include <cctype>

namespace kodaira {

int KodairaType::components() const {
    switch (kind) {
        case I: return std::max(n, 1);
        case Istar: return n + 5;
        case II: return 1;
        case III: return 2;
        case IV: return 3;
        case IVstar: return 7;
        case IIIstar: return 8;
        case IIstar: return 9;
    }
    return 0;
}

std::string KodairaType::str() const {
    switch (kind) {
        case I: return "I" + std::to_string(n);
        case Istar: return "I" + std::to_string(n) + "*";
        case II: return "II";
        case III: return "III";
        case IV: return "IV";
        case IIstar: return "II*";
        case IIIstar: return "III*";
        case IVstar: return "IV*";
    }
    return "?";
}

KodairaType parse_kodaira(const std::string& s) {
    if (s == "II") return KodairaType::of(KodairaType::II);
    if (s == "III") return KodairaType::of(KodairaType::III);
    if (s == "IV") return KodairaType::of(KodairaType::IV);
    if (s == "II*") return KodairaType::of(KodairaType::IIstar);
    if (s == "III*") return KodairaType::of(KodairaType::IIIstar);
    if (s == "IV*") return KodairaType::of(KodairaType::IVstar);
    if (s.size() >= 2 && s[0] == 'I') {
        bool star = s.back() == '*';
        std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() && digits.size() < 9 &&
            std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
            int n = std::stoi(digits);
            return star ? KodairaType::Instar(n) : KodairaType::In(n);
        }
    }
    throw ArgumentError("bad Kodaira symbol '" + s + "'");
}

bool cp_allowed(const KodairaType& t, int cp) {
    switch (t.kind) {
        case KodairaType::I:
            if (t.n == 0) return cp == 1;
            return cp == t.n || cp == 1 || cp == 2;
        case KodairaType::Istar:
            if (t.n == 0) return cp == 1 || cp == 2 || cp == 4;
            return cp == 2 || cp == 4;
        case KodairaType::II:
        case KodairaType::IIstar: return cp == 1;
        case KodairaType::III:
        case KodairaType::IIIstar: return cp == 2;
        case KodairaType::IV:
        case KodairaType::IVstar: return cp == 1 || cp == 3;
    }
    return false;
}

}  // namespace kodaira
