#include "locdom/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "locdom/errors.hpp"

namespace locdom {

std::string_view format_name(GraphFormat f) {
    return f == GraphFormat::Graph6 ? "graph6" : "edgelist";
}

GraphFormat parse_format_name(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
    if (name == "edgelist" || name == "edges") return GraphFormat::EdgeList;
    throw Error(ErrorCode::BadParameter, "unknown graph format '" + std::string(name) + "'");
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                          s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() &&
           (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

int sixbits(char c, std::size_t pos) {
    int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw Error(ErrorCode::ByteOutOfRange,
                    "byte " + std::to_string(b) + " at offset " + std::to_string(pos));
    return b - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header)
        text.remove_prefix(kGraph6Header.size());
    if (text.empty()) throw Error(ErrorCode::MalformedHeader, "empty graph6 string");

    std::size_t pos = 0;
    long long n = 0;
    int first = static_cast<unsigned char>(text[0]);
    if (first < 63 || first > 126)
        throw Error(ErrorCode::MalformedHeader, "invalid size byte " + std::to_string(first));
    if (first < 126) {
        n = first - 63;
        pos = 1;
    } else {
        std::size_t digits = 3;
        pos = 1;
        if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
            digits = 6;
            pos = 2;
        }
        if (text.size() < pos + digits)
            throw Error(ErrorCode::MalformedHeader, "size field cut short");
        for (std::size_t i = 0; i < digits; ++i) {
            int b = static_cast<unsigned char>(text[pos + i]);
            if (b < 63 || b > 126)
                throw Error(ErrorCode::MalformedHeader, "invalid size byte " + std::to_string(b));
            n = (n << 6) | (b - 63);
        }
        pos += digits;
        if ((digits == 3 && n < 63) || (digits == 6 && n < 258048))
            throw Error(ErrorCode::MalformedHeader, "non-minimal size encoding");
        if (n > 100000) throw Error(ErrorCode::MalformedHeader, "order too large");
    }

    long long bits = n * (n - 1) / 2;
    std::size_t body_len = static_cast<std::size_t>((bits + 5) / 6);
    std::string_view body = text.substr(pos);
    if (body.size() < body_len)
        throw Error(ErrorCode::TruncatedBody, "expected " + std::to_string(body_len) +
                                                  " body bytes, found " +
                                                  std::to_string(body.size()));
    if (body.size() > body_len)
        throw Error(ErrorCode::TrailingData,
                    std::to_string(body.size() - body_len) + " unexpected trailing bytes");

    std::vector<Edge> edges;
    long long k = 0;
    int nn = static_cast<int>(n);
    for (int j = 1; j < nn; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = sixbits(body[k / 6], pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    if (body_len > 0) {
        int last = sixbits(body[body_len - 1], pos + body_len - 1);
        int pad = static_cast<int>(body_len * 6 - bits);
        if (last & ((1 << pad) - 1)) throw Error(ErrorCode::NonZeroPadding, "padding bits set");
    }
    return Graph::from_edges(nn, edges);
}

std::string to_graph6(const Graph& g) {
    std::string out;
    long long n = g.order();
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n < 258048) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
    int acc = 0;
    int count = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++count == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                count = 0;
            }
        }
    if (count > 0) out.push_back(static_cast<char>(63 + (acc << (6 - count))));
    return out;
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<long long> declared;
    std::vector<Edge> edges;
    long long max_index = -1;
    int lineno = 0;
    while (!text.empty()) {
        ++lineno;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        auto where = " on line " + std::to_string(lineno);
        if (toks[0] == "n") {
            long long v = 0;
            if (toks.size() != 2 || !parse_int(toks[1], v) || v < 0)
                throw Error(ErrorCode::MalformedEdgeList, "bad order declaration" + where);
            if (declared) throw Error(ErrorCode::MalformedEdgeList, "repeated order" + where);
            declared = v;
            continue;
        }
        long long u = 0, v = 0;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw Error(ErrorCode::MalformedEdgeList, "expected 'u v'" + where);
        if (u < 0 || v < 0 || u > 1000000 || v > 1000000)
            throw Error(ErrorCode::IndexOutOfRange, "vertex index out of range" + where);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_index = std::max({max_index, u, v});
    }
    long long n = declared ? *declared : max_index + 1;
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.order() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

GraphFormat sniff_format(std::string_view text) {
    auto t = trim(text);
    if (t.substr(0, kGraph6Header.size()) == kGraph6Header) return GraphFormat::Graph6;
    bool single_token = !t.empty() && t.find_first_of(" \t\n#") == std::string_view::npos;
    return single_token ? GraphFormat::Graph6 : GraphFormat::EdgeList;
}

Graph parse_graph(std::string_view text, std::optional<GraphFormat> format) {
    GraphFormat f = format ? *format : sniff_format(text);
    return f == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string format_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::Graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, std::string_view body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    out << body;
}

Graph read_graph_file(const std::string& path, std::optional<GraphFormat> format) {
    return parse_graph(read_text_file(path), format);
}

std::string to_dot(const Graph& g, const DotOptions& opts) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v;
        std::vector<std::string> attrs;
        if (auto it = opts.labels.find(v); it != opts.labels.end())
            attrs.push_back("label=\"" + it->second + "\"");
        if (opts.highlight && opts.highlight->contains(v))
            attrs.push_back("style=filled, fillcolor=gray");
        if (!attrs.empty()) {
            os << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
            os << "]";
        }
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace locdom
