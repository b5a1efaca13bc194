#include "odyn/format.hpp"

#include <algorithm>
#include <sstream>

namespace odyn {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool is_keyword(const std::string& tok) {
    static const IdSet keywords = {"FAMILY", "GRAPH",     "CLOCK", "ODYN",     "COMPONENT",
                                   "SYNC",   "SYNCINDEX", "REAL",  "INTERACT", "V",
                                   "E",      "STATE",     "TRANS", "DATE"};
    return keywords.count(tok) != 0;
}

struct Parser {
    FamilyDocument doc;
    int line_no = 0;

    enum class Block { none, graph, clock, odyn, real, interact };
    Block block = Block::none;
    Id block_id;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(line_no, msg); }

    Graph& cur_graph() { return doc.graphs.at(block_id); }
    Clock& cur_clock() { return doc.clocks.at(block_id); }
    OpenDynamics& cur_odyn() { return doc.odyns.at(block_id); }

    const Graph& graph_of(const Id& gid) {
        auto it = doc.graphs.find(gid);
        if (it == doc.graphs.end()) fail("unknown graph " + gid);
        return it->second;
    }

    void expect(bool cond, const std::string& msg) const {
        if (!cond) fail(msg);
    }

    void parse(const std::string& text);
    void line(const std::vector<std::string>& toks);
    void header_line(const std::vector<std::string>& toks);
    void body_line(const std::vector<std::string>& toks);
    void real_entry(const std::vector<std::string>& toks);
    void interact_entry(const std::vector<std::string>& toks);
    void map_pairs(const std::vector<std::string>& toks, std::size_t& pos,
                   std::map<Id, Id>& out);
};

void Parser::parse(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    bool saw_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::vector<std::string> toks = tokenize(raw);
        if (toks.empty()) continue;
        if (!saw_header) {
            expect(toks[0] == "FAMILY" && toks.size() == 2, "missing FAMILY header");
            doc.name = toks[1];
            saw_header = true;
            continue;
        }
        line(toks);
    }
    ++line_no;
    expect(saw_header, "missing FAMILY header");
}

void Parser::line(const std::vector<std::string>& toks) {
    const std::string& kw = toks[0];
    if (kw == "GRAPH" || kw == "CLOCK" || kw == "ODYN" || kw == "COMPONENT" || kw == "SYNC" ||
        kw == "SYNCINDEX" || kw == "REAL" || kw == "INTERACT" || kw == "FAMILY") {
        header_line(toks);
    } else if (block == Block::real) {
        real_entry(toks);
    } else if (block == Block::interact) {
        interact_entry(toks);
    } else {
        body_line(toks);
    }
}

void Parser::map_pairs(const std::vector<std::string>& toks, std::size_t& pos,
                       std::map<Id, Id>& out) {
    while (pos < toks.size()) {
        const std::string& tok = toks[pos];
        if (tok == "VMAP" || tok == "EMAP" || tok == "CMAP") return;
        auto eq = tok.find('=');
        expect(eq != std::string::npos, "expected key=value, got " + tok);
        Id key = tok.substr(0, eq);
        expect(out.emplace(key, tok.substr(eq + 1)).second, "duplicate mapping for " + key);
        ++pos;
    }
}

void Parser::header_line(const std::vector<std::string>& toks) {
    const std::string& kw = toks[0];
    if (kw == "FAMILY") fail("duplicate FAMILY header");
    if (kw == "GRAPH") {
        expect(toks.size() == 2, "GRAPH takes one id");
        expect(doc.graphs.emplace(toks[1], Graph{}).second, "duplicate id " + toks[1]);
        block = Block::graph;
        block_id = toks[1];
        return;
    }
    if (kw == "CLOCK") {
        expect(toks.size() == 4 && toks[2] == "ON", "expected CLOCK <id> ON <graph>");
        const Graph& g = graph_of(toks[3]);
        Clock h;
        h.dyn.motor = g;
        expect(doc.clocks.emplace(toks[1], std::move(h)).second, "duplicate id " + toks[1]);
        doc.clock_motor[toks[1]] = toks[3];
        block = Block::clock;
        block_id = toks[1];
        return;
    }
    if (kw == "ODYN") {
        expect(toks.size() >= 7 && toks[2] == "ON" && toks[4] == "CLOCK" && toks[6] == "PARAMS",
               "expected ODYN <id> ON <graph> CLOCK <clock> PARAMS <p>...");
        const Graph& g = graph_of(toks[3]);
        auto cit = doc.clocks.find(toks[5]);
        expect(cit != doc.clocks.end(), "unknown clock " + toks[5]);
        expect(doc.clock_motor.at(toks[5]) == toks[3], "clock " + toks[5] + " is not on " + toks[3]);
        OpenDynamics a;
        a.multi.motor = g;
        a.clock = cit->second;
        for (std::size_t i = 7; i < toks.size(); ++i) a.multi.params.insert(toks[i]);
        expect(!a.multi.params.empty(), "ODYN needs at least one parameter");
        for (const Id& v : g.vertices) a.multi.state_sets[v];
        expect(doc.odyns.emplace(toks[1], std::move(a)).second, "duplicate id " + toks[1]);
        doc.odyn_motor[toks[1]] = toks[3];
        doc.odyn_clock[toks[1]] = toks[5];
        block = Block::odyn;
        block_id = toks[1];
        return;
    }
    if (kw == "COMPONENT") {
        expect(toks.size() == 4 && toks[2] == "USES", "expected COMPONENT <i> USES <odyn>");
        expect(doc.odyns.count(toks[3]) != 0, "unknown dynamics " + toks[3]);
        expect(doc.components.emplace(toks[1], toks[3]).second, "duplicate component " + toks[1]);
        block = Block::none;
        return;
    }
    if (kw == "SYNCINDEX") {
        expect(toks.size() == 2, "SYNCINDEX takes one index");
        expect(doc.components.count(toks[1]) != 0, "unknown component " + toks[1]);
        expect(!doc.sync_index, "duplicate SYNCINDEX");
        doc.sync_index = toks[1];
        block = Block::none;
        return;
    }
    if (kw == "SYNC") {
        expect(toks.size() >= 2, "SYNC takes an index");
        expect(doc.components.count(toks[1]) != 0, "unknown component " + toks[1]);
        Synchronization s;
        std::size_t pos = 2;
        while (pos < toks.size()) {
            const std::string& section = toks[pos++];
            if (section == "VMAP")
                map_pairs(toks, pos, s.graph.vertex_map);
            else if (section == "EMAP")
                map_pairs(toks, pos, s.graph.edge_map);
            else if (section == "CMAP")
                map_pairs(toks, pos, s.clock_map);
            else
                fail("expected VMAP/EMAP/CMAP, got " + section);
        }
        expect(doc.syncs.emplace(toks[1], std::move(s)).second, "duplicate SYNC " + toks[1]);
        block = Block::none;
        return;
    }
    if (kw == "REAL") {
        expect(toks.size() == 6 && toks[2] == "OF" && toks[4] == "PARAM",
               "expected REAL <id> OF <i> PARAM <p>");
        auto cit = doc.components.find(toks[3]);
        expect(cit != doc.components.end(), "unknown component " + toks[3]);
        const OpenDynamics& a = doc.odyns.at(cit->second);
        expect(a.multi.params.count(toks[5]) != 0, "unknown parameter " + toks[5]);
        FamilyDocument::RealDecl r{toks[3], toks[5], {}};
        expect(doc.reals.emplace(toks[1], std::move(r)).second, "duplicate id " + toks[1]);
        block = Block::real;
        block_id = toks[1];
        return;
    }
    // INTERACT
    expect(toks.size() == 1, "INTERACT takes no arguments");
    block = Block::interact;
}

void Parser::body_line(const std::vector<std::string>& toks) {
    const std::string& kw = toks[0];
    if (block == Block::graph) {
        Graph& g = cur_graph();
        if (kw == "V") {
            for (std::size_t i = 1; i < toks.size(); ++i)
                expect(g.vertices.insert(toks[i]).second, "duplicate vertex " + toks[i]);
            return;
        }
        if (kw == "E") {
            expect(toks.size() == 4, "expected E <id> <src> <dst>");
            expect(g.has_vertex(toks[2]), "unknown vertex " + toks[2]);
            expect(g.has_vertex(toks[3]), "unknown vertex " + toks[3]);
            expect(!g.find_edge(toks[1]), "duplicate edge " + toks[1]);
            g.edges.push_back({toks[1], toks[2], toks[3]});
            return;
        }
        fail("unexpected " + kw + " in GRAPH block");
    }
    if (block == Block::clock) {
        Clock& h = cur_clock();
        if (kw == "STATE") {
            expect(toks.size() >= 2, "expected STATE <vertex> <instant>...");
            expect(h.dyn.motor.has_vertex(toks[1]), "unknown vertex " + toks[1]);
            IdSet& ss = h.dyn.state_sets[toks[1]];
            for (std::size_t i = 2; i < toks.size(); ++i)
                expect(ss.insert(toks[i]).second, "duplicate instant " + toks[i]);
            return;
        }
        if (kw == "TRANS") {
            expect(toks.size() == 5 && toks[3] == "->", "expected TRANS <edge> <inst> -> <inst>");
            const Edge* e = h.dyn.motor.find_edge(toks[1]);
            expect(e != nullptr, "unknown edge " + toks[1]);
            expect(h.dyn.state_sets[e->dom].count(toks[2]) != 0, "unknown instant " + toks[2]);
            expect(h.dyn.state_sets[e->cod].count(toks[4]) != 0, "unknown instant " + toks[4]);
            auto& f = h.dyn.edge_trans[e->id];
            expect(f.map.emplace(toks[2], IdSet{toks[4]}).second,
                   "duplicate clock transition at " + toks[2]);
            return;
        }
        fail("unexpected " + kw + " in CLOCK block");
    }
    if (block == Block::odyn) {
        OpenDynamics& a = cur_odyn();
        if (kw == "STATE") {
            expect(toks.size() >= 2, "expected STATE <vertex> <state>...");
            expect(a.multi.motor.has_vertex(toks[1]), "unknown vertex " + toks[1]);
            IdSet& ss = a.multi.state_sets[toks[1]];
            for (std::size_t i = 2; i < toks.size(); ++i)
                expect(ss.insert(toks[i]).second, "duplicate state " + toks[i]);
            return;
        }
        if (kw == "TRANS") {
            expect(toks.size() >= 5 && toks[4] == "->",
                   "expected TRANS <edge> <param> <state> -> <state>...");
            const Edge* e = a.multi.motor.find_edge(toks[1]);
            expect(e != nullptr, "unknown edge " + toks[1]);
            expect(a.multi.params.count(toks[2]) != 0, "unknown parameter " + toks[2]);
            expect(a.multi.state_sets[e->dom].count(toks[3]) != 0, "unknown state " + toks[3]);
            IdSet& img = a.multi.edge_trans[{e->id, toks[2]}].map[toks[3]];
            for (std::size_t i = 5; i < toks.size(); ++i) {
                expect(a.multi.state_sets[e->cod].count(toks[i]) != 0, "unknown state " + toks[i]);
                img.insert(toks[i]);
            }
            return;
        }
        if (kw == "DATE") {
            expect(toks.size() == 3, "expected DATE <state> <instant>");
            bool known = false;
            for (const auto& [v, ss] : a.multi.state_sets) known |= ss.count(toks[1]) != 0;
            expect(known, "unknown state " + toks[1]);
            expect(a.datation.emplace(toks[1], toks[2]).second, "duplicate DATE for " + toks[1]);
            return;
        }
        fail("unexpected " + kw + " in ODYN block");
    }
    fail("unexpected " + kw + " outside a block");
}

void Parser::real_entry(const std::vector<std::string>& toks) {
    expect(toks.size() == 2, "expected <instant> <state>");
    FamilyDocument::RealDecl& r = doc.reals.at(block_id);
    const OpenDynamics& a = doc.odyns.at(doc.components.at(r.component));
    bool known_inst = false;
    for (const auto& [v, ts] : a.clock.dyn.state_sets) known_inst |= ts.count(toks[0]) != 0;
    expect(known_inst, "unknown instant " + toks[0]);
    bool known_state = false;
    for (const auto& [v, ss] : a.multi.state_sets) known_state |= ss.count(toks[1]) != 0;
    expect(known_state, "unknown state " + toks[1]);
    expect(r.assignment.emplace(toks[0], toks[1]).second, "duplicate instant " + toks[0]);
}

void Parser::interact_entry(const std::vector<std::string>& toks) {
    std::map<Id, std::pair<Id, Id>> tuple;
    for (const std::string& tok : toks) {
        expect(tok.size() >= 2 && tok.front() == '(' && tok.back() == ')',
               "expected (<i>:<real>,<param>), got " + tok);
        std::string body = tok.substr(1, tok.size() - 2);
        auto colon = body.find(':');
        auto comma = body.rfind(',');
        expect(colon != std::string::npos && comma != std::string::npos && colon < comma,
               "expected (<i>:<real>,<param>), got " + tok);
        Id comp = body.substr(0, colon);
        Id rid = body.substr(colon + 1, comma - colon - 1);
        Id param = body.substr(comma + 1);
        expect(doc.components.count(comp) != 0, "unknown component " + comp);
        auto rit = doc.reals.find(rid);
        expect(rit != doc.reals.end(), "unknown realization " + rid);
        expect(rit->second.component == comp,
               "realization " + rid + " belongs to component " + rit->second.component);
        const OpenDynamics& a = doc.odyns.at(doc.components.at(comp));
        expect(a.multi.params.count(param) != 0, "unknown parameter " + param);
        expect(tuple.emplace(comp, std::make_pair(rid, param)).second,
               "duplicate slot " + comp);
    }
    for (const auto& [i, odyn_id] : doc.components)
        expect(tuple.count(i) != 0, "tuple misses component " + i);
    doc.tuples.push_back(std::move(tuple));
}

// Fills in derived transition fields once a whole document is parsed.
void finalize(FamilyDocument& doc) {
    for (auto& [cid, h] : doc.clocks) {
        for (const Id& v : h.dyn.motor.vertices) h.dyn.state_sets[v];
        for (const Edge& e : h.dyn.motor.edges) {
            Transition& f = h.dyn.edge_trans[e.id];
            f.source = h.dyn.state_sets.at(e.dom);
            f.target = h.dyn.state_sets.at(e.cod);
            for (const Id& t : f.source) f.map.try_emplace(t);
        }
    }
    for (auto& [oid, a] : doc.odyns) {
        a.clock = doc.clocks.at(doc.odyn_clock.at(oid));
        for (const Edge& e : a.multi.motor.edges) {
            for (const Id& mu : a.multi.params) {
                Transition& f = a.multi.edge_trans[{e.id, mu}];
                f.source = a.multi.state_sets.at(e.dom);
                f.target = a.multi.state_sets.at(e.cod);
                for (const Id& s : f.source) f.map.try_emplace(s);
            }
        }
    }
}

}  // namespace

FamilyDocument parse_family(const std::string& text) {
    Parser p;
    p.parse(text);
    finalize(p.doc);
    return p.doc;
}

DynamicFamily to_family(const FamilyDocument& doc) {
    if (doc.components.empty()) throw error("document declares no components");
    if (!doc.sync_index) throw error("document declares no SYNCINDEX");
    DynamicFamily f;
    f.sync = *doc.sync_index;
    for (const auto& [i, oid] : doc.components) {
        f.index.insert(i);
        f.components.emplace(i, doc.odyns.at(oid));
    }
    const Graph& motor0 = f.components.at(f.sync).multi.motor;
    for (const Id& i : f.index) {
        if (i == f.sync) continue;
        auto it = doc.syncs.find(i);
        if (it == doc.syncs.end()) throw error("missing SYNC for component " + i);
        Synchronization s = it->second;
        s.graph.source = motor0;
        s.graph.target = f.components.at(i).multi.motor;
        f.syncs.emplace(i, std::move(s));
    }
    // realization handles, resolved against the canonical enumeration
    std::map<Id, std::map<Id, IdSet>> real_sets;  // component -> handle -> params
    for (const Id& i : f.index) {
        auto& sets = real_sets[i];
        BinaryMultipleRelation& r = f.interaction;
        r.index.insert(i);
        IdSet& in = r.in_contexts[i];
        for (const OpenRealization& x : enumerate_open_realizations(f.components.at(i))) {
            Id h = encode_assignment(x.assignment);
            in.insert(h);
            sets[h].insert(x.param);
        }
        r.out_contexts[i] = f.components.at(i).multi.params;
    }
    for (const auto& [rid, decl] : doc.reals) {
        Id h = encode_assignment(decl.assignment);
        const auto& sets = real_sets.at(decl.component);
        auto it = sets.find(h);
        if (it == sets.end() || !it->second.count(decl.param))
            throw error("REAL " + rid + ": " + h + " is not a realization of component " +
                        decl.component + " under parameter " + decl.param);
    }
    for (const auto& tuple : doc.tuples) {
        PairTuple t;
        for (const auto& [i, entry] : tuple)
            t[i] = {encode_assignment(doc.reals.at(entry.first).assignment), entry.second};
        f.interaction.graph.insert(std::move(t));
    }
    return f;
}

std::string serialize_open_dynamics(const OpenDynamics& d) {
    std::ostringstream out;
    const Graph& g = d.multi.motor;
    std::vector<Edge> edges = g.edges;
    std::sort(edges.begin(), edges.end());

    out << "FAMILY generated\n";
    out << "GRAPH motor\n";
    if (!g.vertices.empty()) {
        out << "V";
        for (const Id& v : g.vertices) out << " " << v;
        out << "\n";
    }
    for (const Edge& e : edges) out << "E " << e.id << " " << e.dom << " " << e.cod << "\n";

    out << "CLOCK clock ON motor\n";
    for (const Id& v : g.vertices) {
        const IdSet& ts = d.clock.dyn.state_sets.at(v);
        if (ts.empty()) continue;
        out << "STATE " << v;
        for (const Id& t : ts) out << " " << t;
        out << "\n";
    }
    for (const Edge& e : edges) {
        const Transition& f = d.clock.dyn.edge_trans.at(e.id);
        for (const Id& t : f.source) {
            const IdSet& img = f.at(t);
            if (img.empty()) continue;
            out << "TRANS " << e.id << " " << t << " -> " << *img.begin() << "\n";
        }
    }

    out << "ODYN generated ON motor CLOCK clock PARAMS";
    for (const Id& mu : d.multi.params) out << " " << mu;
    out << "\n";
    for (const Id& v : g.vertices) {
        const IdSet& ss = d.multi.state_sets.at(v);
        if (ss.empty()) continue;
        out << "STATE " << v;
        for (const Id& s : ss) out << " " << s;
        out << "\n";
    }
    for (const Edge& e : edges) {
        for (const Id& mu : d.multi.params) {
            const Transition& f = d.multi.edge_trans.at({e.id, mu});
            for (const Id& s : f.source) {
                const IdSet& img = f.at(s);
                if (img.empty()) continue;
                out << "TRANS " << e.id << " " << mu << " " << s << " ->";
                for (const Id& b : img) out << " " << b;
                out << "\n";
            }
        }
    }
    for (const Id& v : g.vertices) {
        for (const Id& s : d.multi.state_sets.at(v)) {
            auto it = d.datation.find(s);
            if (it != d.datation.end()) out << "DATE " << s << " " << it->second << "\n";
        }
    }
    return out.str();
}

OpenDynamics single_odyn(const FamilyDocument& doc) {
    if (doc.odyns.size() != 1) throw error("expected exactly one ODYN block");
    return doc.odyns.begin()->second;
}

}  // namespace odyn
