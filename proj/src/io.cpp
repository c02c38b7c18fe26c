#include "tomo/io.hpp"

#include "tomo/error.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace tomo {

namespace {

struct Line
{
    int number = 0;
    std::vector<std::string_view> tokens;
    std::string_view raw;
};

// Splits into lines, dropping blank ones but keeping their numbers.
class LineReader
{
public:
    explicit LineReader(std::string_view text)
    {
        int number = 0;
        std::size_t pos = 0;
        while (pos < text.size()) {
            ++number;
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            auto raw = text.substr(pos, end - pos);
            if (!raw.empty() && raw.back() == '\r')
                raw.remove_suffix(1);
            pos = end + 1;
            Line line{number, split(raw), raw};
            if (!line.tokens.empty())
                lines_.push_back(std::move(line));
        }
        last_ = number;
    }

    bool at_end() const { return next_ >= lines_.size(); }

    const Line& next(const char* expecting)
    {
        if (at_end())
            throw ParseError(last_ + 1, std::string("unexpected end of input, expecting ") + expecting);
        return lines_[next_++];
    }

    void expect_end()
    {
        if (!at_end())
            throw ParseError(lines_[next_].number, "trailing content after END");
    }

private:
    static std::vector<std::string_view> split(std::string_view s)
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
                ++i;
            const std::size_t start = i;
            while (i < s.size() && s[i] != ' ' && s[i] != '\t')
                ++i;
            if (i > start)
                out.push_back(s.substr(start, i - start));
        }
        return out;
    }

    std::vector<Line> lines_;
    std::size_t next_ = 0;
    int last_ = 0;
};

int to_int(const Line& line, std::string_view tok)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line.number, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

int to_nonneg(const Line& line, std::string_view tok, const char* what)
{
    const int v = to_int(line, tok);
    if (v < 0)
        throw ParseError(line.number, std::string(what) + " must be nonnegative");
    return v;
}

void expect_keyword(const Line& line, std::string_view kw)
{
    if (line.tokens.size() != 1 || line.tokens[0] != kw)
        throw ParseError(line.number, "expected '" + std::string(kw) + "'");
}

// "<name1> <v1> <name2> <v2> ..." with fixed names.
std::vector<int> keyed_ints(const Line& line, std::initializer_list<std::string_view> names)
{
    if (line.tokens.size() != 2 * names.size())
        throw ParseError(line.number, "malformed parameter line '" + std::string(line.raw) + "'");
    std::vector<int> out;
    std::size_t i = 0;
    for (auto name : names) {
        if (line.tokens[i] != name)
            throw ParseError(line.number, "expected '" + std::string(name) + "'");
        out.push_back(to_int(line, line.tokens[i + 1]));
        i += 2;
    }
    return out;
}

std::vector<int> sum_line(const Line& line, std::string_view tag, int count)
{
    if (line.tokens.empty() || line.tokens[0] != tag)
        throw ParseError(line.number, "expected '" + std::string(tag) + "' line");
    if (static_cast<int>(line.tokens.size()) != count + 1)
        throw ParseError(line.number, "'" + std::string(tag) + "' needs " + std::to_string(count) + " values, got "
                                          + std::to_string(line.tokens.size() - 1));
    std::vector<int> out;
    for (std::size_t i = 1; i < line.tokens.size(); ++i)
        out.push_back(to_nonneg(line, line.tokens[i], "sums"));
    return out;
}

void check_grid(const Line& line, int k, int m, int n)
{
    if (m < 1 || n < 1)
        throw ParseError(line.number, "m and n must be positive");
    if (m % k != 0 || n % k != 0)
        throw ParseError(line.number, "m and n must be divisible by k=" + std::to_string(k));
}

RecInstance parse_rec(LineReader& in)
{
    RecInstance inst;
    const auto& params = in.next("parameters");
    const auto kv = keyed_ints(params, {"k", "nu", "t"});
    inst.k = kv[0];
    inst.nu = kv[1];
    inst.t = kv[2];
    if (inst.k < 1)
        throw ParseError(params.number, "k must be positive");
    if (inst.nu < 1)
        throw ParseError(params.number, "nu must be positive");
    if (inst.t < 0 || inst.t > 2)
        throw ParseError(params.number, "t must be 0, 1 or 2");

    const auto& dims = in.next("dimensions");
    const auto mn = keyed_ints(dims, {"m", "n"});
    inst.m = mn[0];
    inst.n = mn[1];
    check_grid(dims, inst.k, inst.m, inst.n);

    inst.row_sums = sum_line(in.next("row sums"), "R", inst.n);
    inst.col_sums = sum_line(in.next("column sums"), "C", inst.m);
    expect_keyword(in.next("V"), "V");

    inst.block_values.assign(static_cast<std::size_t>(inst.blocks_x()) * inst.blocks_y(), 0);
    std::set<Corner> seen;
    while (true) {
        const auto& line = in.next("block value or END");
        if (line.tokens.size() == 1 && line.tokens[0] == "END") {
            if (seen.size() != inst.block_values.size())
                throw ParseError(line.number, "missing block values: got " + std::to_string(seen.size()) + " of "
                                                  + std::to_string(inst.block_values.size()));
            break;
        }
        if (line.tokens.size() != 3)
            throw ParseError(line.number, "expected '<i> <j> <v>'");
        const Corner c{to_int(line, line.tokens[0]), to_int(line, line.tokens[1])};
        const int v = to_int(line, line.tokens[2]);
        if (c.p < 1 || c.q < 1 || c.p > inst.m || c.q > inst.n || (c.p - 1) % inst.k || (c.q - 1) % inst.k)
            throw ParseError(line.number, to_string(c) + " is not a corner point");
        if (v != 0 && v != inst.nu)
            throw ParseError(line.number, "block value " + std::to_string(v) + " not in {0, nu=" + std::to_string(inst.nu) + "}");
        if (!seen.insert(c).second)
            throw ParseError(line.number, "duplicate block value for " + to_string(c));
        inst.set_block_value(c, v);
    }
    in.expect_end();
    inst.validate();
    return inst;
}

Relation parse_relation(const Line& line, std::string_view tok)
{
    if (tok == "<=")
        return Relation::LE;
    if (tok == ">=")
        return Relation::GE;
    if (tok == "=")
        return Relation::EQ;
    throw ParseError(line.number, "unknown relation '" + std::string(tok) + "'");
}

WRecInstance parse_wrec(LineReader& in)
{
    WRecInstance inst;
    const auto& params = in.next("parameters");
    const auto kt = keyed_ints(params, {"k", "t"});
    inst.k = kt[0];
    inst.t = kt[1];
    if (inst.k < 1)
        throw ParseError(params.number, "k must be positive");
    if (inst.t < 0 || inst.t > 3 || (inst.t == 3 && inst.k < 2))
        throw ParseError(params.number, "t must be in {0,1,2,3} (t=3 needs k >= 2)");

    const auto& dims = in.next("dimensions");
    const auto mn = keyed_ints(dims, {"m", "n"});
    inst.m = mn[0];
    inst.n = mn[1];
    check_grid(dims, inst.k, inst.m, inst.n);

    inst.row_sums = sum_line(in.next("row sums"), "R", inst.n);
    inst.col_sums = sum_line(in.next("column sums"), "C", inst.m);
    expect_keyword(in.next("W"), "W");

    while (true) {
        const auto& line = in.next("window or END");
        if (line.tokens.size() == 1 && line.tokens[0] == "END")
            break;
        if (line.tokens.size() != 4)
            throw ParseError(line.number, "expected '<i> <j> <rel> <val>'");
        const Corner a{to_int(line, line.tokens[0]), to_int(line, line.tokens[1])};
        const Relation rel = parse_relation(line, line.tokens[2]);
        const int v = to_nonneg(line, line.tokens[3], "window value");
        if (a.p < 1 || a.q < 1 || a.p + inst.k - 1 > inst.m || a.q + inst.k - 1 > inst.n)
            throw ParseError(line.number, "window at " + to_string(a) + " exceeds the " + std::to_string(inst.m) + "x"
                                              + std::to_string(inst.n) + " grid");
        if (!inst.windows.emplace(a, WindowMeasurement{rel, v}).second)
            throw ParseError(line.number, "duplicate window anchor " + to_string(a));
    }
    in.expect_end();
    inst.validate();
    return inst;
}

void write_line(std::ostringstream& os, std::string_view tag, const std::vector<int>& values)
{
    os << tag;
    for (int v : values)
        os << ' ' << v;
    os << '\n';
}

} // namespace

Instance parse_instance(std::string_view text)
{
    LineReader in(text);
    const auto& head = in.next("REC or WREC header");
    if (head.tokens.size() == 1 && head.tokens[0] == "REC")
        return parse_rec(in);
    if (head.tokens.size() == 1 && head.tokens[0] == "WREC")
        return parse_wrec(in);
    throw ParseError(head.number, "expected 'REC' or 'WREC' header");
}

std::string write_instance(const RecInstance& inst)
{
    inst.validate();
    std::ostringstream os;
    os << "REC\n";
    os << "k " << inst.k << " nu " << inst.nu << " t " << inst.t << '\n';
    os << "m " << inst.m << " n " << inst.n << '\n';
    write_line(os, "R", inst.row_sums);
    write_line(os, "C", inst.col_sums);
    os << "V\n";
    for (const auto& c : corner_points(inst.m, inst.n, inst.k))
        os << c.p << ' ' << c.q << ' ' << inst.block_value(c) << '\n';
    os << "END\n";
    return os.str();
}

std::string write_instance(const WRecInstance& inst)
{
    inst.validate();
    std::ostringstream os;
    os << "WREC\n";
    os << "k " << inst.k << " t " << inst.t << '\n';
    os << "m " << inst.m << " n " << inst.n << '\n';
    write_line(os, "R", inst.row_sums);
    write_line(os, "C", inst.col_sums);
    os << "W\n";
    for (const auto& [a, w] : inst.windows)
        os << a.p << ' ' << a.q << ' ' << to_string(w.rel) << ' ' << w.value << '\n';
    os << "END\n";
    return os.str();
}

std::string write_instance(const Instance& inst)
{
    return std::visit([](const auto& i) { return write_instance(i); }, inst);
}

std::string write_solution(const BinaryImage& x)
{
    std::string out = "SOL " + std::to_string(x.width()) + " " + std::to_string(x.height()) + "\n";
    out.reserve(out.size() + static_cast<std::size_t>(x.width() + 1) * x.height());
    for (int q = x.height(); q >= 1; --q) {
        for (int p = 1; p <= x.width(); ++p)
            out += x.at(p, q) ? '1' : '0';
        out += '\n';
    }
    return out;
}

BinaryImage parse_solution(std::string_view text)
{
    LineReader in(text);
    const auto& head = in.next("SOL header");
    if (head.tokens.size() != 3 || head.tokens[0] != "SOL")
        throw ParseError(head.number, "expected 'SOL <m> <n>'");
    const int m = to_int(head, head.tokens[1]);
    const int n = to_int(head, head.tokens[2]);
    if (m < 1 || n < 1)
        throw ParseError(head.number, "solution dimensions must be positive");
    BinaryImage x(m, n);
    for (int q = n; q >= 1; --q) {
        const auto& line = in.next("solution row");
        if (line.tokens.size() != 1 || static_cast<int>(line.tokens[0].size()) != m)
            throw ParseError(line.number, "expected " + std::to_string(m) + " characters of 0/1");
        for (int p = 1; p <= m; ++p) {
            const char ch = line.tokens[0][p - 1];
            if (ch != '0' && ch != '1')
                throw ParseError(line.number, std::string("invalid character '") + ch + "'");
            x.set(p, q, ch == '1');
        }
    }
    in.expect_end();
    return x;
}

ThreeColorInstance parse_three_color(std::string_view text)
{
    LineReader in(text);
    expect_keyword(in.next("TCOL header"), "TCOL");
    ThreeColorInstance tc;
    const auto& dims = in.next("dimensions");
    const auto mn = keyed_ints(dims, {"m", "n"});
    tc.m = mn[0];
    tc.n = mn[1];
    if (tc.m < 1 || tc.n < 1)
        throw ParseError(dims.number, "m and n must be positive");
    tc.r1 = sum_line(in.next("R1"), "R1", tc.n);
    tc.r2 = sum_line(in.next("R2"), "R2", tc.n);
    tc.c1 = sum_line(in.next("C1"), "C1", tc.m);
    tc.c2 = sum_line(in.next("C2"), "C2", tc.m);
    expect_keyword(in.next("END"), "END");
    in.expect_end();
    return tc;
}

std::string write_three_color(const ThreeColorInstance& tc)
{
    tc.validate();
    std::ostringstream os;
    os << "TCOL\n";
    os << "m " << tc.m << " n " << tc.n << '\n';
    write_line(os, "R1", tc.r1);
    write_line(os, "R2", tc.r2);
    write_line(os, "C1", tc.c1);
    write_line(os, "C2", tc.c2);
    os << "END\n";
    return os.str();
}

} // namespace tomo
