#include "lm/transducer.hpp"

#include <deque>
#include <unordered_map>

namespace lm {

namespace {

// Tail-phase states of the letter machines. The x machines rewrite one block
// and then copy; the y machines alternate between the two recursions forever.
enum class St : char {
    match,    // still consuming the subscript prefix
    x_start,  // x: expecting 00 -> 0, 01 -> 10, 1 -> 11
    x_saw0,
    xi_start, // x^{-1}: 0 -> 00, 10 -> 01, 11 -> 1
    xi_saw1,
    y,        // y: 00 -> 0 y, 01 -> 10 y^{-1}, 1 -> 11 y
    y_saw0,
    yi,       // y^{-1}: 0 -> 00 y^{-1}, 10 -> 01 y, 11 -> 1 y^{-1}
    yi_saw1,
    copy,
};

struct Stage {
    GenKind kind;
    int sign; // +1 or -1
    FinWord sub;
    St st = St::match;
    size_t matched = 0;
    std::deque<char> buf;

    Stage(GenKind k, int sgn, FinWord s) : kind(k), sign(sgn), sub(std::move(s)) {
        if (sub.empty()) st = tail_start();
    }

    St tail_start() const {
        if (kind == GenKind::x) return sign > 0 ? St::x_start : St::xi_start;
        return sign > 0 ? St::y : St::yi;
    }

    void emit(const char* s) {
        while (*s) buf.push_back(*s++);
    }

    void feed(char ch) {
        switch (st) {
        case St::match:
            if (ch == sub[matched]) {
                buf.push_back(ch); // matched prefix letters pass through either way
                if (++matched == sub.size()) st = tail_start();
            } else {
                buf.push_back(ch);
                st = St::copy;
            }
            return;
        case St::copy:
            buf.push_back(ch);
            return;
        case St::x_start:
            if (ch == '1') {
                emit("11");
                st = St::copy;
            } else {
                st = St::x_saw0;
            }
            return;
        case St::x_saw0:
            emit(ch == '0' ? "0" : "10");
            st = St::copy;
            return;
        case St::xi_start:
            if (ch == '0') {
                emit("00");
                st = St::copy;
            } else {
                st = St::xi_saw1;
            }
            return;
        case St::xi_saw1:
            emit(ch == '0' ? "01" : "1");
            st = St::copy;
            return;
        case St::y:
            if (ch == '1')
                emit("11");
            else
                st = St::y_saw0;
            return;
        case St::y_saw0:
            if (ch == '0') {
                emit("0");
                st = St::y;
            } else {
                emit("10");
                st = St::yi;
            }
            return;
        case St::yi:
            if (ch == '0')
                emit("00");
            else
                st = St::yi_saw1;
            return;
        case St::yi_saw1:
            if (ch == '0') {
                emit("01");
                st = St::y;
            } else {
                emit("1");
                st = St::yi;
            }
            return;
        }
    }

    void dump_config(std::string& out) const {
        out += static_cast<char>('A' + static_cast<int>(st));
        out += std::to_string(matched);
        out += '[';
        out.append(buf.begin(), buf.end());
        out += ']';
    }
};

constexpr size_t kFeedBudget = 4000000;

} // namespace

EvpSeq run_word(const GroupWord& w, const EvpSeq& xi) {
    std::vector<Stage> stages;
    for (const GenLetter& l : w.letters) {
        int sgn = l.exp > 0 ? 1 : -1;
        for (Int k = 0; k < abs(l.exp); ++k) stages.emplace_back(l.kind, sgn, l.sub);
    }
    if (stages.empty()) return xi;

    size_t srcpos = 0;
    size_t feeds = 0;
    // Pull one output digit from stage k (source = stage -1).
    auto pull = [&](auto&& self, size_t k) -> char {
        if (k == 0) return xi.at(srcpos++);
        Stage& st = stages[k - 1];
        while (st.buf.empty()) {
            if (++feeds > kFeedBudget)
                fail(errc::normalization_overflow, "transducer pipeline exceeded its budget");
            st.feed(self(self, k - 1));
        }
        char c = st.buf.front();
        st.buf.pop_front();
        return c;
    };

    std::string out;
    std::unordered_map<std::string, size_t> seen;
    while (true) {
        out += pull(pull, stages.size());
        if (srcpos < xi.pre.size()) continue;
        std::string key = std::to_string((srcpos - xi.pre.size()) % xi.per.size());
        for (const Stage& st : stages) {
            key += '|';
            st.dump_config(key);
        }
        auto [it, inserted] = seen.emplace(std::move(key), out.size());
        if (!inserted) {
            size_t start = it->second;
            return EvpSeq::make(out.substr(0, start), out.substr(start));
        }
    }
}

EvpSeq run_letter(const GenLetter& g, const EvpSeq& xi) {
    return run_word(GroupWord::make({g}, Marker::G), xi);
}

} // namespace lm
