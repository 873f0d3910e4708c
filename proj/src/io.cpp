#include "ihx/io.hpp"

#include <sstream>

namespace ihx {

namespace {

std::vector<std::string> tokens_of(const std::string& line)
{
    std::string body = line.substr(0, line.find('#'));
    std::istringstream is(body);
    std::vector<std::string> out;
    std::string t;
    while (is >> t)
        out.push_back(t);
    return out;
}

int parse_int(const std::string& t, int line)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size())
            throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + t + "'");
    }
}

} // namespace

ParsedComplex parse_complex_file(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    int n = -1;
    std::vector<Simplex> ambient_maximal;
    std::map<int, std::vector<Simplex>> skeleton_maximal;
    std::map<int, int> skeleton_line; // where each block was declared
    int current_skeleton = -1;        // -1 = ambient block

    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty())
            continue;
        if (toks[0] == "dim") {
            if (toks.size() != 2)
                throw ParseError(lineno, "dim takes exactly one integer");
            if (n >= 0)
                throw ParseError(lineno, "duplicate dim line");
            n = parse_int(toks[1], lineno);
            if (n < 0)
                throw ParseError(lineno, "dimension must be non-negative");
        } else if (toks[0] == "skeleton") {
            if (n < 0)
                throw ParseError(lineno, "skeleton before dim");
            if (toks.size() != 2)
                throw ParseError(lineno, "skeleton takes exactly one integer");
            current_skeleton = parse_int(toks[1], lineno);
            if (current_skeleton < 0 || current_skeleton >= n)
                throw ParseError(lineno, "skeleton index must be in 0.." + std::to_string(n - 1));
            skeleton_line[current_skeleton] = lineno;
        } else if (toks[0] == "simplex") {
            if (n < 0)
                throw ParseError(lineno, "simplex before dim");
            if (toks.size() < 2)
                throw ParseError(lineno, "simplex needs at least one vertex");
            std::vector<Vertex> vs;
            for (std::size_t t = 1; t < toks.size(); ++t)
                vs.push_back(parse_int(toks[t], lineno));
            Simplex s;
            try {
                s = Simplex(std::move(vs));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
            if (current_skeleton < 0)
                ambient_maximal.push_back(s);
            else {
                if (s.dim() > current_skeleton)
                    throw ParseError(lineno, "simplex " + s.str() + " has dimension " +
                                                 std::to_string(s.dim()) + " > skeleton index " +
                                                 std::to_string(current_skeleton));
                skeleton_maximal[current_skeleton].push_back(s);
            }
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (n < 0)
        throw ParseError(lineno, "missing dim line");
    if (ambient_maximal.empty())
        throw ParseError(lineno, "empty complex");

    ParsedComplex pc;
    pc.filtered.n = n;
    pc.filtered.ambient = SimplicialComplex::from_maximal(ambient_maximal);
    if (pc.filtered.ambient.dim() > n)
        throw ParseError(1, "ambient complex has dimension " +
                                std::to_string(pc.filtered.ambient.dim()) + " > declared dim " +
                                std::to_string(n));
    pc.has_filtration = !skeleton_maximal.empty();
    // X_i accumulates everything declared for j <= i
    std::vector<Simplex> acc;
    for (int i = 0; i < n; ++i) {
        if (skeleton_maximal.count(i))
            for (const auto& s : skeleton_maximal[i])
                acc.push_back(s);
        pc.filtered.skeleta.push_back(acc.empty() ? SimplicialComplex()
                                                  : SimplicialComplex::from_maximal(acc));
    }
    for (const auto& [i, sims] : skeleton_maximal)
        for (const auto& s : sims)
            if (!pc.filtered.ambient.contains(s))
                throw ParseError(skeleton_line[i],
                                 "skeleton simplex " + s.str() + " is not in the ambient complex");
    try {
        pc.filtered.validate();
    } catch (const std::exception& e) {
        throw ParseError(lineno, std::string("invalid filtration: ") + e.what());
    }
    return pc;
}

namespace {

std::vector<Simplex> maximal_of(const SimplicialComplex& k)
{
    std::vector<Simplex> out;
    for (const auto& s : k.simplices()) {
        bool maximal = true;
        for (const auto& t : k.simplices())
            if (s != t && s.is_face_of(t)) {
                maximal = false;
                break;
            }
        if (maximal)
            out.push_back(s);
    }
    return out;
}

void write_simplices(std::ostringstream& os, const SimplicialComplex& k)
{
    for (const auto& s : maximal_of(k)) {
        os << "simplex";
        for (Vertex v : s.vertices)
            os << " " << v;
        os << "\n";
    }
}

} // namespace

std::string serialize_complex(const ParsedComplex& pc)
{
    std::ostringstream os;
    os << "dim " << pc.filtered.n << "\n";
    write_simplices(os, pc.filtered.ambient);
    if (pc.has_filtration)
        for (int i = 0; i < pc.filtered.n; ++i) {
            const auto& x = pc.filtered.skeleton(i);
            if (x.empty())
                continue;
            // only emit strictly new material to keep the canonical form minimal
            if (i > 0 && x.size() == pc.filtered.skeleton(i - 1).size())
                continue;
            os << "skeleton " << i << "\n";
            write_simplices(os, x);
        }
    return os.str();
}

FiniteAlgebra parse_algebra_file(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    int d = -1;
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    std::vector<std::vector<std::vector<Rational>>> c;
    std::vector<std::vector<bool>> seen;

    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty())
            continue;
        if (toks[0] == "dim") {
            if (toks.size() != 2 || d >= 0)
                throw ParseError(lineno, "dim takes exactly one integer, once");
            d = parse_int(toks[1], lineno);
            if (d < 1)
                throw ParseError(lineno, "dimension must be >= 1");
        } else if (toks[0] == "basis") {
            if (d < 0)
                throw ParseError(lineno, "basis before dim");
            if (static_cast<int>(toks.size()) != d + 1)
                throw ParseError(lineno, "basis needs exactly " + std::to_string(d) + " labels");
            for (std::size_t t = 1; t < toks.size(); ++t) {
                if (index.count(toks[t]))
                    throw ParseError(lineno, "duplicate basis label '" + toks[t] + "'");
                index[toks[t]] = static_cast<int>(labels.size());
                labels.push_back(toks[t]);
            }
            c.assign(static_cast<std::size_t>(d),
                     std::vector<std::vector<Rational>>(static_cast<std::size_t>(d),
                                                        std::vector<Rational>(
                                                            static_cast<std::size_t>(d))));
            seen.assign(static_cast<std::size_t>(d), std::vector<bool>(static_cast<std::size_t>(d)));
        } else if (toks[0] == "mul") {
            if (labels.empty())
                throw ParseError(lineno, "mul before basis");
            if (toks.size() != static_cast<std::size_t>(d) + 4 || toks[3] != ":")
                throw ParseError(lineno, "expected: mul li lj : " + std::to_string(d) +
                                             " rationals");
            auto li = index.find(toks[1]), lj = index.find(toks[2]);
            if (li == index.end())
                throw ParseError(lineno, "unknown basis label '" + toks[1] + "'");
            if (lj == index.end())
                throw ParseError(lineno, "unknown basis label '" + toks[2] + "'");
            if (seen[static_cast<std::size_t>(li->second)][static_cast<std::size_t>(lj->second)])
                throw ParseError(lineno, "duplicate product " + toks[1] + " * " + toks[2]);
            seen[static_cast<std::size_t>(li->second)][static_cast<std::size_t>(lj->second)] = true;
            for (int m = 0; m < d; ++m) {
                try {
                    c[static_cast<std::size_t>(li->second)][static_cast<std::size_t>(lj->second)]
                     [static_cast<std::size_t>(m)] =
                         parse_rational(toks[static_cast<std::size_t>(4 + m)]);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(lineno, e.what());
                }
            }
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (d < 0)
        throw ParseError(lineno, "missing dim line");
    if (labels.empty())
        throw ParseError(lineno, "missing basis line");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                throw ParseError(lineno, "missing product " + labels[static_cast<std::size_t>(i)] +
                                             " * " + labels[static_cast<std::size_t>(j)]);
    try {
        return FiniteAlgebra(labels, c);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

std::string serialize_algebra(const FiniteAlgebra& a)
{
    std::ostringstream os;
    os << "dim " << a.dim() << "\n";
    os << "basis";
    for (const auto& l : a.labels())
        os << " " << l;
    os << "\n";
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            os << "mul " << a.labels()[static_cast<std::size_t>(i)] << " "
               << a.labels()[static_cast<std::size_t>(j)] << " :";
            for (int m = 0; m < a.dim(); ++m)
                os << " " << rational_to_string(a.product(i, j)[static_cast<std::size_t>(m)]);
            os << "\n";
        }
    return os.str();
}

void Report::add(const std::string& key, const std::string& value)
{
    records.emplace_back(key, value);
}

void Report::add(const std::string& key, long value)
{
    records.emplace_back(key, std::to_string(value));
}

void Report::note(const std::string& line)
{
    summary.push_back(line);
}

std::string Report::render_records() const
{
    std::ostringstream os;
    for (const auto& [k, v] : records)
        os << k << "=" << v << "\n";
    return os.str();
}

std::string Report::render_table() const
{
    std::ostringstream os;
    for (const auto& line : summary)
        os << line << "\n";
    if (!summary.empty() && !records.empty())
        os << "\n";
    std::size_t width = 0;
    for (const auto& [k, v] : records)
        width = std::max(width, k.size());
    for (const auto& [k, v] : records) {
        os << k;
        for (std::size_t t = k.size(); t < width + 2; ++t)
            os << ' ';
        os << v << "\n";
    }
    return os.str();
}

std::uint64_t fnv1a(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_hex(const std::string& bytes)
{
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace ihx
