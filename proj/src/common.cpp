#include "ordfactor/common.hpp"

namespace ordfactor {

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    case Verdict::NotEvaluated: return "not_evaluated";
    case Verdict::NotApplicable: return "not_applicable";
    }
    return "?";
}

Verdict both(Verdict a, Verdict b)
{
    if (a == Verdict::False || b == Verdict::False)
        return Verdict::False;
    if (a == Verdict::True && b == Verdict::True)
        return Verdict::True;
    return Verdict::NotEvaluated;
}

std::vector<Id> members(const Bits& s)
{
    std::vector<Id> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
        out.push_back(i);
    return out;
}

Bits bits_of(std::size_t n, std::initializer_list<Id> ids)
{
    Bits b(n);
    for (Id i : ids)
        b.set(i);
    return b;
}

Bits bits_of(std::size_t n, const std::vector<Id>& ids)
{
    Bits b(n);
    for (Id i : ids)
        b.set(i);
    return b;
}

bool canonical_less(const Bits& a, const Bits& b)
{
    auto ca = a.count(), cb = b.count();
    if (ca != cb)
        return ca < cb;
    auto i = a.find_first();
    auto j = b.find_first();
    while (i != Bits::npos && j != Bits::npos) {
        if (i != j)
            return i < j;
        i = a.find_next(i);
        j = b.find_next(j);
    }
    return false;
}

Check& Report::add(std::string condition, Verdict v, std::string witness, std::string note)
{
    checks.push_back(Check{std::move(condition), v, std::move(witness), std::move(note)});
    return checks.back();
}

bool Report::any_false() const
{
    for (const auto& c : checks)
        if (c.verdict == Verdict::False)
            return true;
    return false;
}

const Check* Report::find(const std::string& condition) const
{
    for (const auto& c : checks)
        if (c.condition == condition)
            return &c;
    return nullptr;
}

} // namespace ordfactor
