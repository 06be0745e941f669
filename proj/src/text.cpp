#include <capelli/text.hpp>

#include <cctype>
#include <map>

namespace capelli {

namespace {

constexpr std::size_t max_exponent = 65536;

class Cursor {
public:
    Cursor(const RingDescriptor& ring, const std::string& text) : ring_(ring), text_(text) {}

    const RingDescriptor& ring() const { return ring_; }
    std::size_t pos() const { return pos_; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    int peek() {
        skip_ws();
        return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& message) {
        skip_ws();
        if (pos_ < text_.size())
            throw ParseError(message + ", found '" + text_[pos_] + "'", pos_);
        throw ParseError(message + ", found end of input", pos_);
    }

    bool at_number() {
        int c = peek();
        return c >= '0' && c <= '9';
    }

    Int number() {
        skip_ws();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits.push_back(text_[pos_++]);
        if (digits.empty()) fail("expected a number");
        return Int(digits);
    }

    std::size_t exponent_number() {
        Int e = number();
        if (e > max_exponent) throw ParseError("exponent too large", pos_);
        return e.convert_to<std::size_t>();
    }

    bool at_imaginary() {
        int c = peek();
        return c == 'i' || c == 'I';
    }

    RingElement imaginary_unit() {
        if (ring_.kind != RingKind::gaussian_integers)
            fail("'i' is not an element of this ring");
        ++pos_;
        return RingElement(ring_, 0, 1);
    }

    bool done() {
        skip_ws();
        return pos_ == text_.size();
    }

private:
    const RingDescriptor& ring_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

// sign of the next term if present: +1, -1, or 0 when neither sign is next
int read_sign(Cursor& cur) {
    if (cur.accept('+')) return 1;
    if (cur.accept('-')) return -1;
    return 0;
}

RingElement element_sum(Cursor& cur);

// NUMBER ['*'] ['i'] | 'i' | '(' sum ')'
RingElement element_part(Cursor& cur) {
    if (cur.accept('(')) {
        RingElement v = element_sum(cur);
        cur.expect(')');
        return v;
    }
    if (cur.at_imaginary()) return cur.imaginary_unit();
    if (!cur.at_number()) cur.fail("expected a number, 'i', or '('");
    Int v = cur.number();
    bool star = cur.accept('*');
    if (cur.at_imaginary()) {
        cur.imaginary_unit();
        return RingElement(cur.ring(), Int(0), v);
    }
    if (star) cur.fail("expected 'i' after '*'");
    return RingElement(cur.ring(), v);
}

RingElement element_sum(Cursor& cur) {
    int sign = read_sign(cur);
    if (sign == 0) sign = 1;
    RingElement acc = element_part(cur);
    if (sign < 0) acc = -acc;
    for (;;) {
        int s = read_sign(cur);
        if (s == 0) break;
        RingElement t = element_part(cur);
        acc = (s < 0) ? acc - t : acc + t;
    }
    return acc;
}

struct Term {
    RingElement coeff;
    std::size_t exp;
};

// NUMBER | 'i' | x ['^' NUMBER] | '(' element ')'
// returns false if no factor starts here
bool term_factor(Cursor& cur, Term& t) {
    int c = cur.peek();
    if (c == '(') {
        cur.expect('(');
        RingElement v = element_sum(cur);
        cur.expect(')');
        t.coeff = t.coeff * v;
        return true;
    }
    if (c == 'x' || c == 'X') {
        cur.accept(static_cast<char>(c));
        std::size_t k = 1;
        if (cur.accept('^')) k = cur.exponent_number();
        if (t.exp + k > max_exponent) throw ParseError("exponent too large", cur.pos());
        t.exp += k;
        return true;
    }
    if (cur.at_imaginary()) {
        t.coeff = t.coeff * cur.imaginary_unit();
        return true;
    }
    if (cur.at_number()) {
        t.coeff = t.coeff * RingElement(cur.ring(), cur.number());
        return true;
    }
    return false;
}

Term poly_term(Cursor& cur) {
    Term t{RingElement::one(cur.ring()), 0};
    if (!term_factor(cur, t)) cur.fail("expected a term");
    for (;;) {
        bool star = cur.accept('*');
        Term before = t;
        if (!term_factor(cur, t)) {
            if (star) cur.fail("expected a factor after '*'");
            t = before;
            break;
        }
    }
    return t;
}

}  // namespace

RingElement parse_element(const RingDescriptor& ring, const std::string& text) {
    Cursor cur(ring, text);
    RingElement v = element_sum(cur);
    if (!cur.done()) cur.fail("unexpected trailing input");
    return v;
}

Polynomial parse_poly(const RingDescriptor& ring, const std::string& text) {
    Cursor cur(ring, text);
    std::map<std::size_t, RingElement> terms;
    int sign = read_sign(cur);
    if (sign == 0) sign = 1;
    for (;;) {
        Term t = poly_term(cur);
        RingElement c = sign < 0 ? -t.coeff : t.coeff;
        auto it = terms.find(t.exp);
        if (it == terms.end())
            terms.emplace(t.exp, c);
        else
            it->second = it->second + c;
        sign = read_sign(cur);
        if (sign == 0) break;
    }
    if (!cur.done()) cur.fail("unexpected trailing input");
    std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<RingElement> v(top + 1, RingElement::zero(ring));
    for (auto& [k, c] : terms) v[k] = c;
    return Polynomial(ring, std::move(v));
}

namespace {

bool display_negative(const RingElement& x) {
    if (x.ring().kind == RingKind::prime_field) return false;
    return x.re() < 0 || (x.re() == 0 && x.im() < 0);
}

std::string int_text(const Int& v) { return v.str(); }

// text of a Gaussian imaginary part alone, magnitude only
std::string imaginary_text(const Int& b) {
    if (b == 1) return "i";
    return int_text(b) + "*i";
}

}  // namespace

std::string to_string(const RingElement& x) {
    if (x.ring().kind != RingKind::gaussian_integers) return int_text(x.re());
    if (x.im() == 0) return int_text(x.re());
    if (x.re() == 0) return (x.im() < 0 ? "-" : "") + imaginary_text(abs(x.im()));
    return int_text(x.re()) + (x.im() < 0 ? "-" : "+") + imaginary_text(abs(x.im()));
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    auto append = [&out](bool neg, const std::string& body) {
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        out += body;
    };
    for (std::size_t k = f.degree() + 1; k-- > 0;) {
        RingElement c = f.coeff(k);
        if (c.is_zero()) continue;
        if (k == 0 && c.ring().kind == RingKind::gaussian_integers && c.re() != 0 && c.im() != 0) {
            // constant with both parts: print the parts as separate terms
            append(c.re() < 0, int_text(abs(c.re())));
            append(c.im() < 0, imaginary_text(abs(c.im())));
            continue;
        }
        bool neg = display_negative(c);
        RingElement a = neg ? -c : c;
        std::string xpart = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        std::string body;
        if (k == 0) {
            body = to_string(a);
        } else if (a.is_one()) {
            body = xpart;
        } else if (a.ring().kind == RingKind::gaussian_integers && a.re() != 0 && a.im() != 0) {
            body = "(" + to_string(a) + ")*" + xpart;
        } else if (a.ring().kind == RingKind::gaussian_integers && a.re() == 0) {
            body = imaginary_text(a.im()) + "*" + xpart;
        } else {
            body = int_text(a.re()) + "*" + xpart;
        }
        append(neg, body);
    }
    return out;
}

}  // namespace capelli
