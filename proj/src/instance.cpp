#include <jfs/instance.hpp>

#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jfs {

ParseError::ParseError(Kind k, std::size_t ln, std::size_t col, const std::string& message)
    : Error("line " + std::to_string(ln) + ", column " + std::to_string(col) + ": " + message),
      kind(k),
      line(ln),
      column(col)
{
}

const HPolyhedron& Instance::set(const std::string& name) const
{
    auto it = sets.find(name);
    if (it == sets.end())
        throw UnknownName(name);
    return it->second;
}

PolyFunc Instance::func(const std::string& name) const
{
    auto it = funcs.find(name);
    if (it == funcs.end())
        throw UnknownName(name);
    const FuncDecl& f = it->second;
    HPolyhedron dom = f.domain.empty() ? HPolyhedron(f.dim) : set(f.domain);
    return PolyFunc(f.pieces, std::move(dom));
}

const RatMatrix& Instance::matrix(const std::string& name) const
{
    auto it = matrices.find(name);
    if (it == matrices.end())
        throw UnknownName(name);
    return it->second;
}

const Vec& Instance::point(const std::string& name) const
{
    auto it = points.find(name);
    if (it == points.end())
        throw UnknownName(name);
    return it->second;
}

namespace {

struct Token
{
    std::string_view text;
    std::size_t column;
};

using PK = ParseError::Kind;

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Instance run()
    {
        while (next_line())
        {
            const std::string_view kw = toks_[0].text;
            if (kw == "dim")
                parse_dim();
            else if (kw == "set")
                parse_set();
            else if (kw == "func")
                parse_func();
            else if (kw == "matrix")
                parse_matrix();
            else if (kw == "point")
                parse_point();
            else
                fail(PK::Syntax, toks_[0], "unexpected '" + std::string(kw) + "' at top level");
        }
        if (!have_dim_)
            throw ParseError(PK::Syntax, line_no_ + 1, 1, "missing 'dim' declaration");
        return std::move(inst_);
    }

private:
    [[noreturn]] void fail(PK kind, const Token& at, const std::string& msg) const
    {
        throw ParseError(kind, line_no_, at.column, msg);
    }

    // Advances to the next line with content; false at end of input.
    bool next_line()
    {
        while (pos_ < text_.size())
        {
            std::size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos)
                end = text_.size();
            std::string_view line = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_no_;
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            toks_.clear();
            std::size_t i = 0;
            while (i < line.size())
            {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                const std::size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                    ++i;
                if (i > start)
                    toks_.push_back({line.substr(start, i - start), start + 1});
            }
            if (!toks_.empty())
                return true;
        }
        return false;
    }

    Token end_of_line() const
    {
        const Token& last = toks_.back();
        return {"", last.column + last.text.size()};
    }

    std::size_t count(const Token& t) const
    {
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || p != t.text.data() + t.text.size())
            fail(PK::Syntax, t, "expected a nonnegative integer, got '" + std::string(t.text) + "'");
        return v;
    }

    Rational number(const Token& t) const
    {
        try
        {
            return parse_rational(t.text);
        }
        catch (const std::invalid_argument&)
        {
            fail(PK::Syntax, t, "expected a rational number, got '" + std::string(t.text) + "'");
        }
    }

    void require_dim(const Token& at) const
    {
        if (!have_dim_)
            fail(PK::Syntax, at, "'dim' must come first");
    }

    std::string declare(const Token& t)
    {
        const std::string name(t.text);
        if (!names_.insert(name).second)
            fail(PK::DuplicateName, t, "name '" + name + "' is already defined");
        return name;
    }

    // Parses `kw NAME [k]` headers; returns the declared or default dimension.
    std::size_t header_dim(std::size_t extra_allowed)
    {
        if (toks_.size() < 2)
            fail(PK::Syntax, end_of_line(), "expected a name");
        if (toks_.size() > 2 + extra_allowed)
            fail(PK::Syntax, toks_[2 + extra_allowed], "unexpected token");
        return toks_.size() == 3 ? count(toks_[2]) : inst_.dim;
    }

    // Reads `want` numbers starting at token index `from`, which must reach the end of the line.
    Vec numbers(std::size_t from, std::size_t want)
    {
        const std::size_t have = toks_.size() >= from ? toks_.size() - from : 0;
        if (have != want)
        {
            const Token& at = have > want ? toks_[from + want] : end_of_line();
            fail(PK::DimensionMismatch, at,
                 "expected " + std::to_string(want) + " numbers, got " + std::to_string(have));
        }
        Vec v;
        for (std::size_t i = from; i < toks_.size(); ++i)
            v.push_back(number(toks_[i]));
        return v;
    }

    // `... REL b` rows: coefficients up to the relation token, then a single rhs.
    std::pair<Vec, Rational> relation_row(std::size_t k, std::string_view rel)
    {
        std::size_t r = 1;
        while (r < toks_.size() && toks_[r].text != rel)
            ++r;
        if (r == toks_.size())
            fail(PK::Syntax, end_of_line(), "expected '" + std::string(rel) + "'");
        if (r - 1 != k)
            fail(PK::DimensionMismatch, toks_[r],
                 "expected " + std::to_string(k) + " coefficients, got " + std::to_string(r - 1));
        if (toks_.size() != r + 2)
            fail(PK::Syntax, toks_.size() == r + 1 ? end_of_line() : toks_[r + 2], "expected one right-hand side");
        Vec a;
        for (std::size_t i = 1; i < r; ++i)
            a.push_back(number(toks_[i]));
        return {std::move(a), number(toks_[r + 1])};
    }

    void expect_block_line(const char* block)
    {
        if (!next_line())
            throw ParseError(PK::Syntax, line_no_ + 1, 1, std::string("unterminated '") + block + "' block");
    }

    void parse_dim()
    {
        if (have_dim_)
            fail(PK::Syntax, toks_[0], "duplicate 'dim'");
        if (toks_.size() != 2)
            fail(PK::Syntax, toks_.size() < 2 ? end_of_line() : toks_[2], "expected 'dim n'");
        inst_.dim = count(toks_[1]);
        if (inst_.dim == 0)
            fail(PK::Syntax, toks_[1], "dimension must be positive");
        have_dim_ = true;
    }

    void parse_set()
    {
        require_dim(toks_[0]);
        const std::size_t k = header_dim(1);
        const std::string name = declare(toks_[1]);
        HPolyhedron p(k);
        for (;;)
        {
            expect_block_line("set");
            const std::string_view kw = toks_[0].text;
            if (kw == "end" && toks_.size() == 1)
                break;
            if (kw == "ineq")
            {
                auto [a, b] = relation_row(k, "<=");
                p = p.with_ineq(a, b);
            }
            else if (kw == "eq")
            {
                auto [a, b] = relation_row(k, "=");
                p = p.with_eq(a, b);
            }
            else
                fail(PK::Syntax, toks_[0], "expected 'ineq', 'eq' or 'end' in set block");
        }
        inst_.sets.emplace(name, std::move(p));
    }

    void parse_func()
    {
        require_dim(toks_[0]);
        FuncDecl f;
        f.dim = header_dim(1);
        const std::string name = declare(toks_[1]);
        bool have_dom = false;
        for (;;)
        {
            expect_block_line("func");
            const std::string_view kw = toks_[0].text;
            if (kw == "end" && toks_.size() == 1)
                break;
            if (kw == "piece")
            {
                Vec v = numbers(1, f.dim + 1);
                Rational d = v.back();
                v.pop_back();
                f.pieces.push_back({std::move(v), std::move(d)});
            }
            else if (kw == "dom")
            {
                if (have_dom)
                    fail(PK::Syntax, toks_[0], "duplicate 'dom'");
                if (toks_.size() != 2)
                    fail(PK::Syntax, toks_.size() < 2 ? end_of_line() : toks_[2], "expected 'dom SETNAME'");
                auto it = inst_.sets.find(std::string(toks_[1].text));
                if (it == inst_.sets.end())
                    fail(PK::DanglingReference, toks_[1], "no set named '" + std::string(toks_[1].text) + "'");
                if (it->second.dim() != f.dim)
                    fail(PK::DimensionMismatch, toks_[1],
                         "set '" + it->first + "' has dimension " + std::to_string(it->second.dim()) +
                             ", function has " + std::to_string(f.dim));
                f.domain = it->first;
                have_dom = true;
            }
            else
                fail(PK::Syntax, toks_[0], "expected 'piece', 'dom' or 'end' in func block");
        }
        if (f.pieces.empty())
            f.pieces.push_back({zeros(f.dim), Rational(0)});
        inst_.funcs.emplace(name, std::move(f));
    }

    void parse_matrix()
    {
        require_dim(toks_[0]);
        if (toks_.size() != 4)
            fail(PK::Syntax, toks_.size() < 4 ? end_of_line() : toks_[4], "expected 'matrix NAME rows cols'");
        const std::size_t m = count(toks_[2]), n = count(toks_[3]);
        const std::string name = declare(toks_[1]);
        std::vector<Vec> rows;
        for (;;)
        {
            expect_block_line("matrix");
            const std::string_view kw = toks_[0].text;
            if (kw == "end" && toks_.size() == 1)
                break;
            if (kw != "row")
                fail(PK::Syntax, toks_[0], "expected 'row' or 'end' in matrix block");
            if (rows.size() == m)
                fail(PK::DimensionMismatch, toks_[0], "more than " + std::to_string(m) + " rows");
            rows.push_back(numbers(1, n));
        }
        if (rows.size() != m)
            fail(PK::DimensionMismatch, toks_[0],
                 "expected " + std::to_string(m) + " rows, got " + std::to_string(rows.size()));
        inst_.matrices.emplace(name, RatMatrix::from_rows(rows, n));
    }

    void parse_point()
    {
        require_dim(toks_[0]);
        if (toks_.size() < 2)
            fail(PK::Syntax, end_of_line(), "expected a name");
        const std::string name = declare(toks_[1]);
        inst_.points.emplace(name, numbers(2, inst_.dim));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
    std::vector<Token> toks_;
    std::set<std::string> names_;
    Instance inst_;
    bool have_dim_ = false;
};

void print_numbers(std::ostringstream& out, const Vec& v)
{
    for (const Rational& x : v)
        out << ' ' << to_string(x);
}

}  // namespace

Instance parse_instance(std::string_view text)
{
    return Parser(text).run();
}

std::string print_instance(const Instance& inst)
{
    std::ostringstream out;
    out << "dim " << inst.dim << '\n';
    auto dim_suffix = [&](std::size_t k) { return k == inst.dim ? std::string() : " " + std::to_string(k); };
    for (const auto& [name, p] : inst.sets)
    {
        out << "set " << name << dim_suffix(p.dim()) << '\n';
        for (std::size_t i = 0; i < p.num_ineq(); ++i)
        {
            out << "ineq";
            print_numbers(out, p.ineq_row(i));
            out << " <= " << to_string(p.b()[i]) << '\n';
        }
        for (std::size_t i = 0; i < p.num_eq(); ++i)
        {
            out << "eq";
            print_numbers(out, p.eq_row(i));
            out << " = " << to_string(p.d()[i]) << '\n';
        }
        out << "end\n";
    }
    for (const auto& [name, f] : inst.funcs)
    {
        out << "func " << name << dim_suffix(f.dim) << '\n';
        if (!f.domain.empty())
            out << "dom " << f.domain << '\n';
        for (const AffinePiece& p : f.pieces)
        {
            out << "piece";
            print_numbers(out, p.c);
            out << ' ' << to_string(p.d) << '\n';
        }
        out << "end\n";
    }
    for (const auto& [name, m] : inst.matrices)
    {
        out << "matrix " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
        for (std::size_t i = 0; i < m.rows(); ++i)
        {
            out << "row";
            print_numbers(out, m.row(i));
            out << '\n';
        }
        out << "end\n";
    }
    for (const auto& [name, v] : inst.points)
    {
        out << "point " << name;
        print_numbers(out, v);
        out << '\n';
    }
    return out.str();
}

}  // namespace jfs
