#include "lcs/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lcs {

namespace {

struct Token {
    std::string text;
    int line;
    int col;
};

class Tokenizer {
public:
    explicit Tokenizer(const std::string& text) : text_(text) {}

    std::optional<Token> next() {
        for (;;) {
            if (pos_ >= text_.size()) return std::nullopt;
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
                continue;
            }
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
                continue;
            }
            Token t{{}, line_, col_};
            while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
                   text_[pos_] != '#') {
                t.text.push_back(text_[pos_]);
                ++pos_;
                ++col_;
            }
            return t;
        }
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Reader {
public:
    Reader(const std::string& text, const ParseOptions& opts) : tok_(text), opts_(opts) {}

    Token expect_any(const std::string& what) {
        auto t = tok_.next();
        if (!t) throw ParseError("expected " + what + ", found end of input", tok_.line(), tok_.col());
        return *t;
    }

    void expect_keyword(const std::string& kw) {
        Token t = expect_any("'" + kw + "'");
        if (t.text != kw)
            throw ParseError("expected '" + kw + "', found '" + t.text + "'", t.line, t.col);
    }

    int expect_int(const std::string& what) {
        Token t = expect_any(what);
        try {
            std::size_t used = 0;
            int v = std::stoi(t.text, &used);
            if (used != t.text.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw ParseError("expected integer " + what + ", found '" + t.text + "'", t.line, t.col);
        }
    }

    Rational expect_rational() {
        Token t = expect_any("rational entry");
        if (auto r = Rational::parse(t.text)) return *r;
        if (t.text.find('.') != std::string::npos) {
            if (!opts_.rationalize_max_den)
                throw ParseError("decimal literal '" + t.text + "' (use --rationalize to accept)",
                                 t.line, t.col);
            bool too_big = false;
            if (auto r = parse_decimal(t.text, too_big)) return *r;
            if (too_big)
                throw ParseError("decimal literal '" + t.text + "' exceeds the denominator bound",
                                 t.line, t.col);
        }
        throw ParseError("malformed rational '" + t.text + "'", t.line, t.col);
    }

    RationalMatrix expect_matrix(const std::string& keyword, int rows, int cols) {
        expect_keyword(keyword);
        RationalMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = expect_rational();
        return m;
    }

    void expect_end() {
        auto t = tok_.next();
        if (t) throw ParseError("unexpected trailing token '" + t->text + "'", t->line, t->col);
    }

private:
    // Exact decimal conversion, accepted only under --rationalize and only
    // when the reduced denominator stays within the bound.
    std::optional<Rational> parse_decimal(const std::string& s, bool& too_big) const {
        std::size_t i = 0;
        std::string digits;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
        int frac_digits = -1;
        for (; i < s.size(); ++i) {
            if (s[i] == '.') {
                if (frac_digits >= 0) return std::nullopt;
                frac_digits = 0;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
            digits.push_back(s[i]);
            if (frac_digits >= 0) ++frac_digits;
        }
        if (digits.empty() || frac_digits < 0) return std::nullopt;
        mpz_class num(digits, 10);
        if (neg) num = -num;
        mpz_class den = 1;
        for (int d = 0; d < frac_digits; ++d) den *= 10;
        Rational r{mpq_class(num, den)};
        if (r.den() > *opts_.rationalize_max_den) {
            too_big = true;
            return std::nullopt;
        }
        return r;
    }

    Tokenizer tok_;
    ParseOptions opts_;
};

void check_dims(int n, int m) {
    if (n < 1) throw DimensionError("state dimension n must be at least 1");
    if (m < 0) throw DimensionError("control dimension m must be nonnegative");
}

void emit_matrix(std::ostream& os, const std::string& keyword, const RationalMatrix& m) {
    os << keyword << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << "\n";
    }
}

}  // namespace

ControlSystem parse_system(const std::string& text, const ParseOptions& opts) {
    Reader r(text, opts);
    r.expect_keyword("n");
    int n = r.expect_int("n");
    r.expect_keyword("m");
    int m = r.expect_int("m");
    check_dims(n, m);
    RationalMatrix a = r.expect_matrix("A", n, n);
    RationalMatrix b(n, m);
    if (m > 0) b = r.expect_matrix("B", n, m);
    r.expect_end();
    return ControlSystem(std::move(a), std::move(b));
}

std::string serialize_system(const ControlSystem& sys) {
    std::ostringstream os;
    os << "n " << sys.n << "\n" << "m " << sys.m << "\n";
    emit_matrix(os, "A", sys.A);
    if (sys.m > 0) emit_matrix(os, "B", sys.B);
    return os.str();
}

FeedbackWitness parse_witness(const std::string& text, const ParseOptions& opts) {
    Reader r(text, opts);
    r.expect_keyword("n");
    int n = r.expect_int("n");
    r.expect_keyword("m");
    int m = r.expect_int("m");
    check_dims(n, m);
    FeedbackWitness w;
    w.O = r.expect_matrix("O", n, n);
    w.Q = r.expect_matrix("Q", m, m);
    w.L = r.expect_matrix("L", m, n);
    r.expect_end();
    return w;
}

std::string serialize_witness(const FeedbackWitness& w) {
    std::ostringstream os;
    os << "n " << w.O.rows() << "\n" << "m " << w.Q.rows() << "\n";
    emit_matrix(os, "O", w.O);
    emit_matrix(os, "Q", w.Q);
    emit_matrix(os, "L", w.L);
    return os.str();
}

CanonicalFile parse_canonical(const std::string& text, const ParseOptions& opts) {
    Reader r(text, opts);
    r.expect_keyword("n");
    int n = r.expect_int("n");
    r.expect_keyword("m");
    int m = r.expect_int("m");
    check_dims(n, m);
    r.expect_keyword("k");
    int k = r.expect_int("k");
    if (k < 0 || k > n) throw DimensionError("k must lie in [0, n]");

    CanonicalFile f;
    f.n = n;
    f.m = m;
    f.form.k = k;
    r.expect_keyword("p");
    f.form.p.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) f.form.p[static_cast<std::size_t>(i)] = r.expect_int("p entry");
    f.form.C = r.expect_matrix("C", k, k);
    f.form.D = r.expect_matrix("D", k, m);
    f.form.M = r.expect_matrix("M", n - k, n - k);
    f.form.witness.O = r.expect_matrix("O", n, n);
    f.form.witness.Q = r.expect_matrix("Q", m, m);
    f.form.witness.L = r.expect_matrix("L", m, n);
    r.expect_end();
    return f;
}

std::string serialize_canonical(const CanonicalForm& cf, int n, int m) {
    std::ostringstream os;
    os << "n " << n << "\n" << "m " << m << "\n" << "k " << cf.k << "\n";
    os << "p";
    for (int pi : cf.p) os << ' ' << pi;
    os << "\n";
    emit_matrix(os, "C", cf.C);
    emit_matrix(os, "D", cf.D);
    emit_matrix(os, "M", cf.M);
    emit_matrix(os, "O", cf.witness.O);
    emit_matrix(os, "Q", cf.witness.Q);
    emit_matrix(os, "L", cf.witness.L);
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

std::string format_poly_list(const std::vector<RationalPoly>& polys) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i) os << ", ";
        os << polys[i].str();
    }
    os << "]";
    return os.str();
}

std::string format_int_seq(const std::vector<int>& xs) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ", ";
        os << xs[i];
    }
    os << "]";
    return os.str();
}

std::string classify_report(const SystemInvariants& inv) {
    std::ostringstream os;
    os << "n: " << inv.n << "\n";
    os << "m: " << inv.m << "\n";
    os << "k: " << inv.k << "\n";
    os << "r: " << format_int_seq(inv.r) << "\n";
    os << "p: " << format_int_seq(inv.p) << "\n";
    os << "inertia: (" << inv.inertia.n_neg << ", " << inv.inertia.n_pos << ", "
       << inv.inertia.n_zero << ")\n";
    os << "zero-part-factors: " << format_poly_list(inv.zero_part_factors) << "\n";
    os << "uncontrollable-factors: " << format_poly_list(inv.uncontrollable_factors) << "\n";
    return os.str();
}

std::string verdict_line(const EquivalenceVerdict& v) {
    std::ostringstream os;
    os << relation_name(v.relation) << ": " << (v.equivalent ? "yes" : "no");
    if (!v.equivalent) os << " (failed: " << v.failed_condition << ")";
    return os.str();
}

}  // namespace lcs
