#pragma once

// Parser for the small lattice-expression language used by the CLI:
//   expr := term ('+' term)*
//   term := atom ('(' int ')')?
//   atom := 'Z' int? | 'A' int | 'D' int | 'E' (6|7|8) | 'gram:' json-matrix
// Whitespace is insignificant.  '+' is direct sum, the parenthesized integer
// rescales the bilinear form.

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "json_io.hpp"
#include "lattice.hpp"

namespace latjac {

struct LatticeTerm {
    char kind = 'Z';  // 'Z', 'A', 'D', 'E' or 'g' (gram literal)
    long n = 1;       // rank parameter for named series
    IntMat gram;      // used when kind == 'g'
    long scale = 1;   // L(a) rescaling, 1 if absent
};

struct LatticeExpr {
    std::vector<LatticeTerm> terms;
};

namespace detail {

class ExprParser {
  public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    LatticeExpr parse() {
        LatticeExpr e;
        e.terms.push_back(term());
        skip_ws();
        while (pos_ < s_.size() && s_[pos_] == '+') {
            ++pos_;
            e.terms.push_back(term());
            skip_ws();
        }
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(what + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool at_digit() const {
        return pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (!at_digit()) fail("expected integer");
        long v = 0;
        while (at_digit()) v = 10 * v + (s_[pos_++] - '0');
        return neg ? -v : v;
    }

    LatticeTerm term() {
        LatticeTerm t = atom();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            t.scale = integer();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
            ++pos_;
        }
        return t;
    }

    LatticeTerm atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected lattice atom");
        LatticeTerm t;
        char c = s_[pos_];
        if (c == 'Z' || c == 'A' || c == 'D' || c == 'E') {
            ++pos_;
            t.kind = c;
            skip_ws();
            if (at_digit())
                t.n = integer();
            else if (c == 'Z')
                t.n = 1;
            else
                fail("expected rank after lattice letter");
            return t;
        }
        if (s_.compare(pos_, 5, "gram:") == 0) {
            pos_ += 5;
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != '[')
                fail("expected '[' after gram:");
            // Find the balanced end of the JSON array (no strings inside).
            std::size_t depth = 0, end = pos_;
            for (; end < s_.size(); ++end) {
                if (s_[end] == '[') ++depth;
                if (s_[end] == ']' && --depth == 0) break;
            }
            if (depth != 0) fail("unbalanced brackets in gram literal");
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(s_.substr(pos_, end + 1 - pos_));
            } catch (const nlohmann::json::exception& ex) {
                fail(std::string("invalid gram JSON: ") + ex.what());
            }
            t.kind = 'g';
            t.gram.clear();
            for (const auto& row : j) {
                IntVec r;
                for (const auto& x : row) {
                    if (x.is_string())
                        r.push_back(Int(x.get<std::string>()));
                    else
                        r.push_back(Int(x.get<long>()));
                }
                t.gram.push_back(r);
            }
            t.n = static_cast<long>(t.gram.size());
            pos_ = end + 1;
            return t;
        }
        fail("expected lattice atom");
    }
};

}  // namespace detail

inline LatticeExpr parse_lattice_expr(const std::string& text) {
    return detail::ExprParser(text).parse();
}

inline std::string print_lattice_expr(const LatticeExpr& e) {
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const LatticeTerm& t = e.terms[i];
        if (i) out += "+";
        if (t.kind == 'g')
            out += "gram:" + gram_to_json(t.gram).dump();
        else {
            out += t.kind;
            out += std::to_string(t.n);
        }
        if (t.scale != 1) out += "(" + std::to_string(t.scale) + ")";
    }
    return out;
}

inline Lattice evaluate_lattice_expr(const LatticeExpr& e) {
    if (e.terms.empty()) throw SyntaxError("empty lattice expression");
    Lattice acc;
    bool first = true;
    for (const LatticeTerm& t : e.terms) {
        Lattice part;
        switch (t.kind) {
            case 'Z':
                if (t.n < 1) throw UnknownLatticeError("Z^n requires n >= 1");
                part = lattice_Zn(static_cast<std::size_t>(t.n));
                break;
            case 'A':
                part = lattice_An(static_cast<std::size_t>(t.n));
                break;
            case 'D':
                part = lattice_Dn(static_cast<std::size_t>(t.n));
                break;
            case 'E':
                part = lattice_En(static_cast<std::size_t>(t.n));
                break;
            default:
                part = make_lattice(t.gram);
        }
        if (t.scale != 1) part = rescale(part, Int(t.scale));
        acc = first ? part : direct_sum(acc, part);
        first = false;
    }
    return acc;
}

inline Lattice lattice_from_expr(const std::string& text) {
    return evaluate_lattice_expr(parse_lattice_expr(text));
}

}  // namespace latjac
