#pragma once
// Global append-only symbol table. Symbols are identified by a small integer
// id; the id order is the variable order used by the monomial order, so it is
// fixed for the lifetime of a process. Registration is guarded by a mutex,
// lookups of existing ids are lock-free reads of an append-only vector.

#include <cstdint>
#include <string>
#include <vector>

namespace hlog {

using Sym = int32_t;

// Registers (or finds) a symbol by name. Indexed names like "x[3]" must be
// normalized to "x_3" by the caller (the parser does this).
Sym sym(const std::string& name);

// Name lookup; id must be valid.
const std::string& sym_name(Sym s);

// Number of registered symbols.
int sym_count();

// Returns the id if the name is registered, -1 otherwise.
Sym sym_lookup(const std::string& name);

// Transcendental constants are ordinary symbols with a side registry so the
// polynomial layer can stay agnostic. zeta indices use the Euler-sum sign
// convention (negative entry = alternating slot).
Sym sym_pi();
Sym sym_i();     // imaginary unit, reduced mod I^2+1 by the expression layer
Sym sym_ln(long p);          // ln(p) for an integer p >= 2; ln(2) prints "ln2"
Sym sym_zeta(const std::vector<int>& idx);

bool is_const_sym(Sym s);    // pi, I, ln*, zeta*, delta* (not ordinary variables)
bool is_zeta_sym(Sym s);
bool is_delta_sym(Sym s);
const std::vector<int>* zeta_indices(Sym s);
// ln symbol's base, or 0 if s is not an ln symbol.
long ln_base(Sym s);

// delta symbols are created by the expression layer (needs RationalFunction);
// the registry here only marks ids as delta-kind.
void mark_delta_sym(Sym s);

}  // namespace hlog
