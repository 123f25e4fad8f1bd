#include "hyperlog/symtab.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hlog {

namespace {

struct Table {
    std::mutex mu;
    std::vector<std::string> names;
    std::map<std::string, Sym> index;
    std::set<Sym> consts;
    std::set<Sym> deltas;
    std::map<Sym, std::vector<int>> zetas;
    std::map<Sym, long> lns;
};

Table& tab() {
    static Table t;
    return t;
}

}  // namespace

Sym sym(const std::string& name) {
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.index.find(name);
    if (it != t.index.end()) return it->second;
    Sym id = (Sym)t.names.size();
    t.names.push_back(name);
    t.index.emplace(name, id);
    return id;
}

const std::string& sym_name(Sym s) {
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.names.at((size_t)s);
}

int sym_count() {
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    return (int)t.names.size();
}

Sym sym_lookup(const std::string& name) {
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.index.find(name);
    return it == t.index.end() ? -1 : it->second;
}

Sym sym_pi() {
    Sym s = sym("pi");
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    t.consts.insert(s);
    return s;
}

Sym sym_i() {
    Sym s = sym("I");
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    t.consts.insert(s);
    return s;
}

Sym sym_ln(long p) {
    if (p < 2) throw std::invalid_argument("sym_ln: base must be >= 2");
    std::ostringstream os;
    if (p == 2)
        os << "ln2";
    else
        os << "ln[" << p << "]";
    Sym s = sym(os.str());
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    t.consts.insert(s);
    t.lns[s] = p;
    return s;
}

Sym sym_zeta(const std::vector<int>& idx) {
    std::ostringstream os;
    os << "zeta[";
    for (size_t i = 0; i < idx.size(); i++) {
        if (i) os << ",";
        os << idx[i];
    }
    os << "]";
    Sym s = sym(os.str());
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    t.consts.insert(s);
    t.zetas[s] = idx;
    return s;
}

bool is_const_sym(Sym s) {
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.consts.count(s) > 0;
}

bool is_zeta_sym(Sym s) {
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.zetas.count(s) > 0;
}

bool is_delta_sym(Sym s) {
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.deltas.count(s) > 0;
}

const std::vector<int>* zeta_indices(Sym s) {
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.zetas.find(s);
    return it == t.zetas.end() ? nullptr : &it->second;
}

long ln_base(Sym s) {
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.lns.find(s);
    return it == t.lns.end() ? 0 : it->second;
}

void mark_delta_sym(Sym s) {
    Table& t = tab();
    std::lock_guard<std::mutex> lock(t.mu);
    t.consts.insert(s);
    t.deltas.insert(s);
}

}  // namespace hlog
