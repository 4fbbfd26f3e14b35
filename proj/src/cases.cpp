#include "gla/cases.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace gla {

namespace {

// Values in the spec format: a quoted string, an integer, a list of
// integers, a list of integer rows, or an inline table.
struct Value {
    enum class Kind { string, integer, int_list, int_rows, table };
    Kind kind;
    std::string str;
    long num = 0;
    std::vector<long> list;
    std::vector<std::vector<long>> rows;
    std::map<std::string, Value> table;
};

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_space(bool newlines)
    {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n')
                    ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' ||
                       (newlines && c == '\n')) {
                ++pos;
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& what)
    {
        throw BadSpec(what + " at offset " + std::to_string(pos));
    }

    bool eat(char c)
    {
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string identifier()
    {
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_'))
            ++pos;
        if (pos == start)
            fail("expected identifier");
        return text.substr(start, pos - start);
    }

    long integer()
    {
        size_t start = pos;
        if (eat('-')) {
        }
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start || (text[start] == '-' && pos == start + 1))
            fail("expected integer");
        return std::stol(text.substr(start, pos - start));
    }

    Value value()
    {
        skip_space(false);
        Value v;
        if (eat('"')) {
            v.kind = Value::Kind::string;
            size_t start = pos;
            while (pos < text.size() && text[pos] != '"')
                ++pos;
            if (pos == text.size())
                fail("unterminated string");
            v.str = text.substr(start, pos - start);
            ++pos;
        } else if (eat('[')) {
            skip_space(true);
            if (pos < text.size() && text[pos] == '[') {
                v.kind = Value::Kind::int_rows;
                while (true) {
                    skip_space(true);
                    if (!eat('['))
                        fail("expected row");
                    std::vector<long> row;
                    skip_space(true);
                    if (!eat(']')) {
                        while (true) {
                            skip_space(true);
                            row.push_back(integer());
                            skip_space(true);
                            if (eat(']'))
                                break;
                            if (!eat(','))
                                fail("expected , or ] in row");
                        }
                    }
                    v.rows.push_back(std::move(row));
                    skip_space(true);
                    if (eat(']'))
                        break;
                    if (!eat(','))
                        fail("expected , or ] after row");
                }
            } else if (eat(']')) {
                v.kind = Value::Kind::int_list;
            } else {
                v.kind = Value::Kind::int_list;
                while (true) {
                    skip_space(true);
                    v.list.push_back(integer());
                    skip_space(true);
                    if (eat(']'))
                        break;
                    if (!eat(','))
                        fail("expected , or ] in list");
                }
            }
        } else if (eat('{')) {
            v.kind = Value::Kind::table;
            skip_space(true);
            if (!eat('}')) {
                while (true) {
                    skip_space(true);
                    std::string key = identifier();
                    skip_space(false);
                    if (!eat('='))
                        fail("expected = in table");
                    Value inner = value();
                    if (!v.table.emplace(key, std::move(inner)).second)
                        fail("duplicate key " + key);
                    skip_space(true);
                    if (eat('}'))
                        break;
                    if (!eat(','))
                        fail("expected , or } in table");
                }
            }
        } else {
            v.kind = Value::Kind::integer;
            v.num = integer();
        }
        return v;
    }

    std::map<std::string, Value> document()
    {
        std::map<std::string, Value> doc;
        while (true) {
            skip_space(true);
            if (pos == text.size())
                break;
            std::string key = identifier();
            skip_space(false);
            if (!eat('='))
                fail("expected = after " + key);
            Value v = value();
            if (!doc.emplace(key, std::move(v)).second)
                fail("duplicate key " + key);
        }
        return doc;
    }
};

std::vector<int> to_int_vec(const Value& v, const std::string& what)
{
    if (v.kind != Value::Kind::int_list)
        throw BadSpec(what + " must be a list of integers");
    std::vector<int> out;
    for (long x : v.list)
        out.push_back(static_cast<int>(x));
    return out;
}

const Value& table_get(const std::map<std::string, Value>& t,
                       const std::string& key, const std::string& ctx)
{
    auto it = t.find(key);
    if (it == t.end())
        throw BadSpec(ctx + " is missing key " + key);
    return it->second;
}

void reject_unknown(const std::map<std::string, Value>& t,
                    std::initializer_list<const char*> allowed,
                    const std::string& ctx)
{
    for (const auto& [key, value] : t) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a)
                ok = true;
        if (!ok)
            throw BadSpec("unknown key " + key + " in " + ctx);
    }
}

CaseSpec parse_fold(const std::map<std::string, Value>& t)
{
    reject_unknown(t, {"source", "word", "perm", "order", "expect_type",
                       "expect_dim"},
                   "fold");
    CaseSpec spec;
    spec.kind = CaseSpec::Kind::fold;
    const Value& src = table_get(t, "source", "fold");
    if (src.kind != Value::Kind::string)
        throw BadSpec("fold.source must be a string");
    spec.fold.source = src.str;
    spec.fold.word = to_int_vec(table_get(t, "word", "fold"), "fold.word");
    spec.fold.perm = to_int_vec(table_get(t, "perm", "fold"), "fold.perm");
    const Value& ord = table_get(t, "order", "fold");
    if (ord.kind != Value::Kind::integer)
        throw BadSpec("fold.order must be an integer");
    spec.fold.theta_order = static_cast<int>(ord.num);
    const Value& ty = table_get(t, "expect_type", "fold");
    if (ty.kind != Value::Kind::string)
        throw BadSpec("fold.expect_type must be a string");
    spec.fold.expected_type = ty.str;
    const Value& dm = table_get(t, "expect_dim", "fold");
    if (dm.kind != Value::Kind::integer)
        throw BadSpec("fold.expect_dim must be an integer");
    spec.fold.expected_dim = dm.num;
    spec.fold.name = spec.fold.source + spec.fold.expected_type;
    return spec;
}

} // namespace

CaseSpec parse_spec_text(const std::string& text)
{
    Parser p(text);
    auto doc = p.document();

    if (doc.count("fold")) {
        reject_unknown(doc, {"fold"}, "spec");
        const Value& f = doc.at("fold");
        if (f.kind != Value::Kind::table)
            throw BadSpec("fold must be a table");
        return parse_fold(f.table);
    }
    if (doc.count("descend")) {
        reject_unknown(doc, {"descend"}, "spec");
        const Value& d = doc.at("descend");
        if (d.kind != Value::Kind::table)
            throw BadSpec("descend must be a table");
        reject_unknown(d.table, {"pipeline"}, "descend");
        const Value& pl = table_get(d.table, "pipeline", "descend");
        if (pl.kind != Value::Kind::string)
            throw BadSpec("descend.pipeline must be a string");
        CaseSpec spec;
        spec.kind = CaseSpec::Kind::descend;
        spec.descend_pipeline = pl.str;
        return spec;
    }

    reject_unknown(doc, {"lattice", "automorphism", "epsilon"}, "spec");
    CaseSpec spec;
    spec.kind = CaseSpec::Kind::datum;
    const Value& lat = table_get(doc, "lattice", "spec");
    if (lat.kind != Value::Kind::string)
        throw BadSpec("lattice must be a string");
    spec.datum.lattice = lat.str;

    const Value& aut = table_get(doc, "automorphism", "spec");
    if (aut.kind != Value::Kind::table)
        throw BadSpec("automorphism must be a table");
    const Value& kind = table_get(aut.table, "kind", "automorphism");
    if (kind.kind != Value::Kind::string)
        throw BadSpec("automorphism.kind must be a string");
    spec.datum.aut_kind = kind.str;
    if (kind.str == "coxeter_power") {
        reject_unknown(aut.table, {"kind", "word", "power"}, "automorphism");
        spec.datum.word =
            to_int_vec(table_get(aut.table, "word", "automorphism"), "word");
        const Value& pw = table_get(aut.table, "power", "automorphism");
        if (pw.kind != Value::Kind::integer)
            throw BadSpec("automorphism.power must be an integer");
        spec.datum.power = pw.num;
    } else if (kind.str == "word") {
        reject_unknown(aut.table, {"kind", "word"}, "automorphism");
        spec.datum.word =
            to_int_vec(table_get(aut.table, "word", "automorphism"), "word");
    } else if (kind.str == "matrix") {
        reject_unknown(aut.table, {"kind", "rows"}, "automorphism");
        const Value& rows = table_get(aut.table, "rows", "automorphism");
        if (rows.kind != Value::Kind::int_rows)
            throw BadSpec("automorphism.rows must be integer rows");
        spec.datum.rows = rows.rows;
    } else if (kind.str == "minus_identity") {
        reject_unknown(aut.table, {"kind"}, "automorphism");
    } else {
        throw BadSpec("unknown automorphism kind: " + kind.str);
    }

    if (doc.count("epsilon")) {
        const Value& eps = doc.at("epsilon");
        if (eps.kind != Value::Kind::string)
            throw BadSpec("epsilon must be a string");
        spec.datum.epsilon = eps_kind_from_name(eps.str);
    }
    return spec;
}

CaseSpec load_spec_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw BadSpec("cannot read spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str());
}

const std::vector<std::string>& case_names()
{
    static const std::vector<std::string> names{
        "a1-minus1",  "a2-coxeter", "a3-coxeter", "d4-coxeter",
        "e8-d2",      "e8-d3",      "e8-d5",      "fold:A3C2",
        "fold:D5B4",  "fold:D4G2",  "fold:E6F4",  "descend:G2Q"};
    return names;
}

std::string case_file_name(const std::string& case_name)
{
    std::string out = case_name;
    for (char& c : out)
        if (c == ':')
            c = '-';
    return out + ".spec";
}

LatticeAut build_aut(const RootLattice& L, const DatumSpec& spec)
{
    if (spec.aut_kind == "coxeter_power")
        return aut_coxeter_power(L, spec.word, spec.power);
    if (spec.aut_kind == "word")
        return aut_from_reflection_word(L, spec.word);
    if (spec.aut_kind == "matrix")
        return make_aut(L, spec.rows);
    if (spec.aut_kind == "minus_identity")
        return aut_minus_identity(L);
    throw BadSpec("unknown automorphism kind: " + spec.aut_kind);
}

ExtensionDatum build_datum(const DatumSpec& spec)
{
    RootLattice L = build_lattice(spec.lattice);
    return make_extension(L, build_aut(L, spec));
}

} // namespace gla
