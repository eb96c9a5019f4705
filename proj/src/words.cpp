#include "dyckl/words.hpp"

#include <algorithm>

namespace dyckl {

namespace {

[[noreturn]] void throw_invalid(char c, const char* alphabet) {
    throw InvalidCharacterError(std::string("invalid character '") + c +
                                "' for alphabet " + alphabet);
}

} // namespace

// -------------------------------------------------------------------------
// DyckWord
// -------------------------------------------------------------------------

DyckWord::DyckWord(std::vector<DyckStep> steps) : steps_(std::move(steps)) {
    int height = 0;
    for (DyckStep s : steps_) {
        height += s == DyckStep::Up ? 1 : -1;
        if (height < 0)
            throw PrefixViolationError("Dyck word dips below the axis");
    }
    if (height != 0)
        throw UnbalancedWordError("Dyck word does not end on the axis");
}

DyckWord DyckWord::parse(std::string_view text) {
    std::vector<DyckStep> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'u': steps.push_back(DyckStep::Up); break;
            case 'd': steps.push_back(DyckStep::Down); break;
            default: throw_invalid(c, "dyck");
        }
    }
    return DyckWord(std::move(steps));
}

std::string DyckWord::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (DyckStep s : steps_) out += s == DyckStep::Up ? 'u' : 'd';
    return out;
}

// -------------------------------------------------------------------------
// MotzkinWord
// -------------------------------------------------------------------------

MotzkinWord::MotzkinWord(std::vector<MotzkinStep> steps)
    : steps_(std::move(steps)) {
    int height = 0;
    for (MotzkinStep s : steps_) {
        if (s == MotzkinStep::Up) ++height;
        else if (s == MotzkinStep::Down) --height;
        if (height < 0)
            throw PrefixViolationError("Motzkin word dips below the axis");
    }
    if (height != 0)
        throw UnbalancedWordError("Motzkin word does not end on the axis");
}

MotzkinWord MotzkinWord::parse(std::string_view text) {
    std::vector<MotzkinStep> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'u': steps.push_back(MotzkinStep::Up); break;
            case 'h': steps.push_back(MotzkinStep::Flat); break;
            case 'd': steps.push_back(MotzkinStep::Down); break;
            default: throw_invalid(c, "motzkin");
        }
    }
    return MotzkinWord(std::move(steps));
}

std::string MotzkinWord::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (MotzkinStep s : steps_) {
        switch (s) {
            case MotzkinStep::Up: out += 'u'; break;
            case MotzkinStep::Flat: out += 'h'; break;
            case MotzkinStep::Down: out += 'd'; break;
        }
    }
    return out;
}

int first_down_pos(const MotzkinWord& m) {
    const auto& s = m.steps();
    for (int i = 0; i < m.size(); ++i)
        if (s[i] == MotzkinStep::Down) return i + 1;
    return 0;
}

MotzkinWord reverse_motzkin(const MotzkinWord& m) {
    std::vector<MotzkinStep> out(m.steps().rbegin(), m.steps().rend());
    for (MotzkinStep& s : out) {
        if (s == MotzkinStep::Up) s = MotzkinStep::Down;
        else if (s == MotzkinStep::Down) s = MotzkinStep::Up;
    }
    return MotzkinWord(std::move(out));
}

// -------------------------------------------------------------------------
// StarWord
// -------------------------------------------------------------------------

StarWord::StarWord(std::vector<StarLetter> letters)
    : letters_(std::move(letters)) {
    // Valid iff the star-free subword is a Motzkin path.
    int height = 0;
    for (StarLetter l : letters_) {
        if (l == StarLetter::Up) ++height;
        else if (l == StarLetter::Down) --height;
        if (height < 0)
            throw PrefixViolationError("star word dips below the axis");
    }
    if (height != 0)
        throw UnbalancedWordError("star word does not end on the axis");
}

StarWord::StarWord(const MotzkinWord& m) {
    letters_.reserve(m.steps().size());
    for (MotzkinStep s : m.steps()) {
        switch (s) {
            case MotzkinStep::Up: letters_.push_back(StarLetter::Up); break;
            case MotzkinStep::Flat: letters_.push_back(StarLetter::Flat); break;
            case MotzkinStep::Down: letters_.push_back(StarLetter::Down); break;
        }
    }
}

StarWord StarWord::parse(std::string_view text) {
    std::vector<StarLetter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'u': letters.push_back(StarLetter::Up); break;
            case 'h': letters.push_back(StarLetter::Flat); break;
            case 'd': letters.push_back(StarLetter::Down); break;
            case '*': letters.push_back(StarLetter::Star); break;
            default: throw_invalid(c, "star");
        }
    }
    return StarWord(std::move(letters));
}

int StarWord::star_count() const {
    return static_cast<int>(
        std::count(letters_.begin(), letters_.end(), StarLetter::Star));
}

MotzkinWord StarWord::strip_stars() const {
    std::vector<MotzkinStep> steps;
    steps.reserve(letters_.size());
    for (StarLetter l : letters_) {
        switch (l) {
            case StarLetter::Up: steps.push_back(MotzkinStep::Up); break;
            case StarLetter::Flat: steps.push_back(MotzkinStep::Flat); break;
            case StarLetter::Down: steps.push_back(MotzkinStep::Down); break;
            case StarLetter::Star: break;
        }
    }
    return MotzkinWord(std::move(steps));
}

std::string StarWord::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (StarLetter l : letters_) {
        switch (l) {
            case StarLetter::Up: out += 'u'; break;
            case StarLetter::Flat: out += 'h'; break;
            case StarLetter::Down: out += 'd'; break;
            case StarLetter::Star: out += '*'; break;
        }
    }
    return out;
}

StarContext star_context(const StarWord& w) {
    StarContext ctx;
    int ups = 0;
    int downs = 0;
    const auto& letters = w.letters();
    for (int i = 0; i < w.size(); ++i) {
        switch (letters[i]) {
            case StarLetter::Up: ++ups; break;
            case StarLetter::Down: ++downs; break;
            case StarLetter::Flat: break;
            case StarLetter::Star:
                ctx.stars.push_back({i + 1, ups, downs});
                break;
        }
    }
    return ctx;
}

// -------------------------------------------------------------------------
// CatalanWord
// -------------------------------------------------------------------------

CatalanWord::CatalanWord(std::vector<CatalanLetter> letters)
    : letters_(std::move(letters)) {
    int x = 0, y = 0, z = 0;
    for (CatalanLetter l : letters_) {
        switch (l) {
            case CatalanLetter::X: ++x; break;
            case CatalanLetter::Y: ++y; break;
            case CatalanLetter::Z: ++z; break;
        }
        if (x < y || y < z)
            throw PrefixViolationError("Catalan word violates x >= y >= z");
    }
    if (x != y || y != z)
        throw UnbalancedWordError("Catalan word has unequal letter counts");
}

CatalanWord CatalanWord::parse(std::string_view text) {
    std::vector<CatalanLetter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'x': letters.push_back(CatalanLetter::X); break;
            case 'y': letters.push_back(CatalanLetter::Y); break;
            case 'z': letters.push_back(CatalanLetter::Z); break;
            default: throw_invalid(c, "catalan");
        }
    }
    return CatalanWord(std::move(letters));
}

std::string CatalanWord::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (CatalanLetter l : letters_) {
        switch (l) {
            case CatalanLetter::X: out += 'x'; break;
            case CatalanLetter::Y: out += 'y'; break;
            case CatalanLetter::Z: out += 'z'; break;
        }
    }
    return out;
}

// -------------------------------------------------------------------------
// parse_word / render
// -------------------------------------------------------------------------

ParsedWord parse_word(std::string_view text, Alphabet alphabet) {
    switch (alphabet) {
        case Alphabet::Dyck: return DyckWord::parse(text);
        case Alphabet::Motzkin: return MotzkinWord::parse(text);
        case Alphabet::Star: return StarWord::parse(text);
        case Alphabet::Catalan: return CatalanWord::parse(text);
    }
    throw Error("unknown alphabet");
}

std::string render(const ParsedWord& word) {
    return std::visit([](const auto& w) { return w.str(); }, word);
}

// -------------------------------------------------------------------------
// Dyck statistics
// -------------------------------------------------------------------------

AscDesc asc_desc(const DyckWord& d) {
    AscDesc ad;
    const auto& steps = d.steps();
    int ups = 0, downs = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == DyckStep::Up) {
            ++ups;
            if (i + 1 == steps.size() || steps[i + 1] == DyckStep::Down)
                ad.asc.push_back(ups);
        } else {
            ++downs;
            if (i + 1 == steps.size() || steps[i + 1] == DyckStep::Up)
                ad.des.push_back(downs);
        }
    }
    return ad;
}

DyckWord dyck_from_asc_desc(const AscDesc& ad) {
    if (ad.asc.size() != ad.des.size())
        throw Error("ascent/descent sequences differ in length");
    std::vector<DyckStep> steps;
    int a_prev = 0, b_prev = 0;
    for (std::size_t i = 0; i < ad.asc.size(); ++i) {
        steps.insert(steps.end(), ad.asc[i] - a_prev, DyckStep::Up);
        steps.insert(steps.end(), ad.des[i] - b_prev, DyckStep::Down);
        a_prev = ad.asc[i];
        b_prev = ad.des[i];
    }
    return DyckWord(std::move(steps));
}

RSArray rs_array(const DyckWord& d) {
    const int n = d.semilength();
    RSArray rs;
    if (n == 0) return rs;
    rs.cols.assign(n - 1, {0, 0});
    const AscDesc ad = asc_desc(d);
    const int k = static_cast<int>(ad.asc.size());
    // r_{a_i} = b_i - b_{i-1}, s_{b_i} = a_{i+1} - a_i, everything else 0.
    for (int i = 0; i + 1 < k; ++i) {
        rs.cols[ad.asc[i] - 1].first =
            ad.des[i] - (i > 0 ? ad.des[i - 1] : 0);
        rs.cols[ad.des[i] - 1].second = ad.asc[i + 1] - ad.asc[i];
    }
    return rs;
}

Int l_from_rs(const RSArray& rs) {
    Int product = 1;
    for (const auto& [r, s] : rs.cols) product *= binomial(r + s, r);
    return product;
}

Int l_statistic(const DyckWord& d) { return l_from_rs(rs_array(d)); }

int returns(const DyckWord& d) {
    int height = 0;
    int count = 0;
    for (DyckStep s : d.steps()) {
        height += s == DyckStep::Up ? 1 : -1;
        if (s == DyckStep::Down && height == 0) ++count;
    }
    return count;
}

DyckWord reverse_complement(const DyckWord& d) {
    std::vector<DyckStep> out(d.steps().rbegin(), d.steps().rend());
    for (DyckStep& s : out)
        s = s == DyckStep::Up ? DyckStep::Down : DyckStep::Up;
    return DyckWord(std::move(out));
}

} // namespace dyckl
