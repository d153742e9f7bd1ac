#pragma once

#include <cstdlib>
#include <string>

namespace pslrack {

/// Resource bounds. Defaults can be overridden per-call or via environment
/// variables (PSLRACK_MAX_Q, PSLRACK_MAX_ENUM_Q, PSLRACK_MAX_LATTICE,
/// PSLRACK_COSET_LIMIT, PSLRACK_EMBED_BOUND).
struct Limits {
    int max_q = 1024;          // largest field size that may be constructed
    int max_enum_q = 49;       // largest q for full group enumeration
    int max_lattice_order = 660; // largest |PSL(2,q)| for subgroup lattices
    long coset_limit = 1000000;  // Todd-Coxeter table rows
    int embed_bound = 120;     // rack embedding search size bound

    static long env_long(const char* name, long dflt) {
        const char* v = std::getenv(name);
        if (!v || !*v) return dflt;
        return std::strtol(v, nullptr, 10);
    }

    static const Limits& get() {
        static Limits l = [] {
            Limits x;
            x.max_q = (int)env_long("PSLRACK_MAX_Q", x.max_q);
            x.max_enum_q = (int)env_long("PSLRACK_MAX_ENUM_Q", x.max_enum_q);
            x.max_lattice_order =
                (int)env_long("PSLRACK_MAX_LATTICE", x.max_lattice_order);
            x.coset_limit = env_long("PSLRACK_COSET_LIMIT", x.coset_limit);
            x.embed_bound = (int)env_long("PSLRACK_EMBED_BOUND", x.embed_bound);
            return x;
        }();
        return l;
    }
};

} // namespace pslrack
