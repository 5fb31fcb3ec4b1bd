"""Finitely generated left modules as matrix representations.

A :class:`Module` stores one ``d x d`` matrix per algebra basis element.
Right modules are left modules over ``algebra.opposite``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la


class ModuleError(ValueError):
    pass


class Module:
    __slots__ = ("algebra", "mats", "dim", "name", "_cache")

    def __init__(self, algebra, mats, name=None, check=True):
        self.algebra = algebra
        p = algebra.p
        mats = np.asarray(mats, dtype=np.int64)
        if mats.size == 0:
            d = mats.shape[-1] if mats.ndim == 3 else 0
            mats = np.zeros((algebra.dim, d, d), dtype=np.int64)
        self.mats = np.ascontiguousarray(mats % p)
        self.dim = self.mats.shape[1]
        self.name = name
        self._cache = {}
        if check:
            self.verify()

    @classmethod
    def from_generators(cls, algebra, gen_mats, name=None, check=True):
        """Build from matrices of ``algebra.generators`` (same order)."""
        if not gen_mats:
            raise ModuleError("no generator matrices")
        return cls(algebra, algebra.rho_from_generators(gen_mats), name=name, check=check)

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, np.zeros((algebra.dim, 0, 0), dtype=np.int64), check=False)

    def verify(self):
        alg, p, d = self.algebra, self.algebra.p, self.dim
        unit = la.matmul(alg.unit, self.mats.reshape(alg.dim, -1), p).reshape(d, d)
        if not np.array_equal(unit, np.eye(d, dtype=np.int64)):
            raise ModuleError("unit does not act as the identity")
        # rho(b_i) rho(b_j) = sum_k c_ijk rho(b_k)
        if d * (p - 1) ** 2 < 2**62:
            lhs = np.einsum("iab,jbc->ijac", self.mats, self.mats) % p
        else:
            obj = self.mats.astype(object)
            lhs = (np.einsum("iab,jbc->ijac", obj, obj) % p).astype(np.int64)
        rhs = la.matmul(alg.constants.reshape(-1, alg.dim), self.mats.reshape(alg.dim, -1), p)
        if not np.array_equal(lhs.reshape(alg.dim * alg.dim, -1), rhs):
            raise ModuleError("action is not multiplicative (relations fail)")

    def act(self, x):
        """Matrix of an algebra element given in basis coordinates."""
        p = self.algebra.p
        x = np.asarray(x, dtype=np.int64)
        return la.matmul(x, self.mats.reshape(self.algebra.dim, -1), p).reshape(self.dim, self.dim)

    @property
    def gen_mats(self):
        if "gens" not in self._cache:
            self._cache["gens"] = [self.act(g.vec) for g in self.algebra.generators]
        return self._cache["gens"]

    def vertex_space(self, i):
        """Canonical basis of e_i M (rows)."""
        key = ("vs", i)
        if key not in self._cache:
            self._cache[key] = la.column_space(self.act(self.algebra.idempotents[i]), self.algebra.p)
        return self._cache[key]

    @property
    def dim_vector(self):
        return tuple(len(self.vertex_space(i)) for i in range(self.algebra.num_vertices))

    def is_zero(self):
        return self.dim == 0

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<Module{tag} dim={self.dim} dimvec={self.dim_vector}>"


@dataclass
class ModuleMap:
    source: Module
    target: Module
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=np.int64).reshape(self.target.dim, self.source.dim)
        if self.source.algebra is not self.target.algebra:
            raise ModuleError("maps between modules over different algebras")

    def is_homomorphism(self):
        p = self.source.algebra.p
        for a, b in zip(self.source.mats, self.target.mats):
            if not np.array_equal(la.matmul(self.matrix, a, p), la.matmul(b, self.matrix, p)):
                return False
        return True

    def rank(self):
        return la.rank(self.matrix, self.source.algebra.p)

    def is_injective(self):
        return self.rank() == self.source.dim

    def is_surjective(self):
        return self.rank() == self.target.dim

    def compose(self, other):
        """self o other."""
        return ModuleMap(other.source, self.target, la.matmul(self.matrix, other.matrix, self.source.algebra.p))


def _check_same(m, n):
    if m.algebra is not n.algebra:
        raise ModuleError("modules live over different algebras")


def _vertex_frame(m):
    """Per-vertex column bases E_i of e_i M and coordinate rows F_i (E F = projection)."""
    if "frame" in m._cache:
        return m._cache["frame"]
    p = m.algebra.p
    cols = [m.vertex_space(i).T for i in range(m.algebra.num_vertices)]
    t = np.hstack(cols) if cols else np.zeros((m.dim, 0), dtype=np.int64)
    tinv = la.inverse(t, p) if m.dim else t.T
    frames, off = [], 0
    for e in cols:
        k = e.shape[1]
        frames.append((e, tinv[off : off + k]))
        off += k
    m._cache["frame"] = frames
    return frames


def hom_space(m: Module, n: Module):
    """Basis of Hom(m, n) (list of ModuleMap), canonical order."""
    _check_same(m, n)
    alg, p = m.algebra, m.algebra.p
    if m.dim == 0 or n.dim == 0:
        return []
    fm, fn = _vertex_frame(m), _vertex_frame(n)
    units = []
    for i in range(alg.num_vertices):
        en, _ = fn[i]
        _, fmi = fm[i]
        for a in range(en.shape[1]):
            for b in range(fmi.shape[0]):
                units.append(np.outer(en[:, a], fmi[b]) % p)
    if not units:
        return []
    xu = np.array(units)  # (U, dn, dm)
    eqs = []
    for g, ga, gb in zip(alg.generators, m.gen_mats, n.gen_mats):
        if g.source == g.target and np.array_equal(g.vec, alg.idempotents[g.source]):
            continue
        lhs = np.einsum("uab,bc->uac", xu, ga) - np.einsum("ab,ubc->uac", gb, xu)
        eqs.append((lhs % p).reshape(len(units), -1).T)
    if eqs:
        sol = la.kernel_basis(np.vstack(eqs), p)
    else:
        sol = np.eye(len(units), dtype=np.int64)
    if len(sol) == 0:
        return []
    flat = la.matmul(sol, xu.reshape(len(units), -1), p)
    basis = la.row_space(flat, p)
    return [ModuleMap(m, n, row.reshape(n.dim, m.dim)) for row in basis]


def hom_dim(m, n):
    return len(hom_space(m, n))


def direct_sum(*mods, name=None):
    alg = mods[0].algebra
    for x in mods:
        _check_same(mods[0], x)
    d = sum(x.dim for x in mods)
    mats = np.zeros((alg.dim, d, d), dtype=np.int64)
    off = 0
    for x in mods:
        mats[:, off : off + x.dim, off : off + x.dim] = x.mats
        off += x.dim
    return Module(alg, mats, name=name, check=False)


def duality_D(m: Module) -> Module:
    """k-dual Hom_k(M, k), a module over the opposite algebra."""
    name = f"D({m.name})" if m.name else None
    return Module(m.algebra.opposite, m.mats.transpose(0, 2, 1), name=name, check=False)


def _rows(basis, d):
    a = np.asarray(basis, dtype=np.int64)
    if a.size == 0:
        return np.zeros((0, d), dtype=np.int64)
    return a.reshape(-1, d)


def submodule(m: Module, basis):
    """Module on an invariant subspace (RREF rows); returns (module, inclusion)."""
    p = m.algebra.p
    basis = la.row_space(_rows(basis, m.dim), p, m.dim)
    piv = la.pivots_of(basis)
    if len(basis) == 0:
        sub = Module.zero(m.algebra)
        return sub, ModuleMap(sub, m, np.zeros((m.dim, 0), dtype=np.int64))
    imgs = np.einsum("bij,kj->bki", m.mats, basis) % p  # (n, k, d): rho(b) applied to basis rows
    mats = np.empty((m.algebra.dim, len(basis), len(basis)), dtype=np.int64)
    for b in range(m.algebra.dim):
        if la.reduce_mod(imgs[b], basis, p, piv).any():
            raise ModuleError("subspace is not invariant")
        mats[b] = imgs[b][:, piv].T
    sub = Module(m.algebra, mats, check=False)
    return sub, ModuleMap(sub, m, basis.T)


def quotient(m: Module, basis):
    """Quotient by an invariant subspace; returns (module, projection)."""
    p = m.algebra.p
    basis = la.row_space(_rows(basis, m.dim), p, m.dim)
    comp = la.complement(basis, np.eye(m.dim, dtype=np.int64), p)
    cpiv = la.pivots_of(comp)
    k = len(comp)
    proj = la.reduce_mod(np.eye(m.dim, dtype=np.int64), basis, p)[:, cpiv].T if k else np.zeros((0, m.dim), dtype=np.int64)
    mats = np.empty((m.algebra.dim, k, k), dtype=np.int64)
    if k:
        imgs = np.einsum("bij,kj->bki", m.mats, comp) % p
        for b in range(m.algebra.dim):
            mats[b] = la.reduce_mod(imgs[b], basis, p)[:, cpiv].T
    q = Module(m.algebra, mats, check=False)
    return q, ModuleMap(m, q, proj)


def subquotient(m: Module, upper, lower):
    """upper / lower for invariant subspaces lower <= upper of m."""
    sub, inc = submodule(m, upper)
    if len(lower) == 0:
        return sub
    p = m.algebra.p
    upper_rref = la.row_space(_rows(upper, m.dim), p, m.dim)
    lower_coords = la.coords(lower, upper_rref, p)
    q, _ = quotient(sub, lower_coords)
    return q


def image_of(f: ModuleMap):
    return la.column_space(f.matrix, f.source.algebra.p)


def kernel_of(f: ModuleMap):
    return la.kernel_basis(f.matrix, f.source.algebra.p)


def closure(m: Module, vectors):
    """Smallest invariant subspace containing the given row vectors."""
    p = m.algebra.p
    v = np.asarray(vectors, dtype=np.int64).reshape(-1, m.dim)
    if len(v) == 0:
        return np.zeros((0, m.dim), dtype=np.int64)
    imgs = np.einsum("bij,kj->bki", m.mats, v) % p
    return la.row_space(imgs.reshape(-1, m.dim), p, m.dim)


def sub_quotient(m: Module, generators):
    """Submodule generated by vectors and the corresponding quotient.

    Returns ((sub, inclusion), (quot, projection)).
    """
    span = closure(m, generators)
    return submodule(m, span), quotient(m, span)


def radical_subspace(m: Module):
    if "rad" not in m._cache:
        alg, p = m.algebra, m.algebra.p
        if len(alg.radical) == 0 or m.dim == 0:
            m._cache["rad"] = np.zeros((0, m.dim), dtype=np.int64)
        else:
            imgs = [m.act(x).T for x in alg.radical]
            m._cache["rad"] = la.row_space(np.vstack(imgs), p, m.dim)
    return m._cache["rad"]


def socle_subspace(m: Module):
    if "soc" not in m._cache:
        alg, p = m.algebra, m.algebra.p
        if len(alg.radical) == 0 or m.dim == 0:
            m._cache["soc"] = np.eye(m.dim, dtype=np.int64)
        else:
            m._cache["soc"] = la.kernel_basis(np.vstack([m.act(x) for x in alg.radical]), p)
    return m._cache["soc"]


@dataclass
class Structure:
    radical: np.ndarray
    socle: np.ndarray
    top: Module
    top_projection: ModuleMap


def structure(m: Module) -> Structure:
    rad = radical_subspace(m)
    top, proj = quotient(m, rad)
    return Structure(rad, socle_subspace(m), top, proj)


def top_dim_vector(m: Module):
    """Multiplicity of each simple in the top M/JM."""
    p = m.algebra.p
    rad = radical_subspace(m)
    out = []
    for i in range(m.algebra.num_vertices):
        vs = m.vertex_space(i)
        both = la.subspace_sum(vs, rad, p)
        out.append(len(both) - len(rad))
    return tuple(out)


def socle_dim_vector(m: Module):
    p = m.algebra.p
    soc = socle_subspace(m)
    return tuple(len(la.intersection(soc, m.vertex_space(i), p)) for i in range(m.algebra.num_vertices))


def _radical_layers(m):
    alg, p = m.algebra, m.algebra.p
    layers = []
    for power in alg.radical_powers()[1:]:
        if len(power) == 0 or m.dim == 0:
            sub = np.zeros((0, m.dim), dtype=np.int64)
        else:
            sub = la.row_space(np.vstack([m.act(x).T for x in power]), p, m.dim)
        layers.append(tuple(len(la.intersection(sub, m.vertex_space(i), p)) for i in range(alg.num_vertices)))
    return tuple(layers)


def _socle_layers(m):
    alg, p = m.algebra, m.algebra.p
    layers = []
    for power in alg.radical_powers()[1:]:
        if len(power) == 0 or m.dim == 0:
            ann = np.eye(m.dim, dtype=np.int64)
        else:
            ann = la.kernel_basis(np.vstack([m.act(x) for x in power]), p)
        layers.append(tuple(len(la.intersection(ann, m.vertex_space(i), p)) for i in range(alg.num_vertices)))
    return tuple(layers)


def invariant(m: Module):
    """Cheap isomorphism invariant: dimension vector plus radical and socle series."""
    if "inv" not in m._cache:
        m._cache["inv"] = (m.dim, m.dim_vector, _radical_layers(m), _socle_layers(m))
    return m._cache["inv"]


# ---------------------------------------------------------------------------
# fundamental modules


def projective(alg, i):
    """Indecomposable projective A e_i."""
    key = ("P", i)
    if key not in alg._cache:
        alg._cache[key] = Module(alg, alg.proj_action(i), name=f"P{alg.vertex_names[i]}", check=False)
    return alg._cache[key]


def simple(alg, i):
    key = ("S", i)
    if key not in alg._cache:
        top = structure(projective(alg, i)).top
        top.name = f"S{alg.vertex_names[i]}"
        alg._cache[key] = top
    return alg._cache[key]


def injective(alg, i):
    """Indecomposable injective D(e_i A)."""
    key = ("I", i)
    if key not in alg._cache:
        mod = duality_D(projective(alg.opposite, i))
        mod.name = f"I{alg.vertex_names[i]}"
        alg._cache[key] = mod
    return alg._cache[key]


@dataclass
class Fundamental:
    simples: list
    projectives: list
    injectives: list


def fundamental_modules(alg) -> Fundamental:
    r = range(alg.num_vertices)
    return Fundamental([simple(alg, i) for i in r], [projective(alg, i) for i in r], [injective(alg, i) for i in r])


# ---------------------------------------------------------------------------
# submodule lattices


@dataclass
class SubmoduleLattice:
    module: Module
    subspaces: list
    complete: bool
    cap: int

    def __len__(self):
        return len(self.subspaces)

    def nonzero(self):
        return [s for s in self.subspaces if len(s)]


def _key(basis):
    return (len(basis), basis.tobytes())


def _projective_points(d, p):
    """Nonzero vectors of GF(p)^d with leading nonzero entry 1."""
    for lead in range(d):
        for tail in itertools.product(range(p), repeat=d - lead - 1):
            v = np.zeros(d, dtype=np.int64)
            v[lead] = 1
            v[lead + 1 :] = tail
            yield v


def all_submodules(m: Module, cap: int = 10**6, vector_budget: int = 2**20) -> SubmoduleLattice:
    """Every submodule, by closing cyclic submodules under sums.

    Stops with ``complete=False`` once more than ``cap`` subspaces are found or
    if the vector space is too large to sweep.
    """
    p, d = m.algebra.p, m.dim
    zero = np.zeros((0, d), dtype=np.int64)
    found = {_key(zero): zero}
    if d == 0:
        return SubmoduleLattice(m, [zero], True, cap)
    if (p**d - 1) // (p - 1) > vector_budget:
        return SubmoduleLattice(m, [zero], False, cap)
    cyclic = {}
    for v in _projective_points(d, p):
        c = closure(m, v)
        cyclic.setdefault(_key(c), c)
    found.update(cyclic)
    cyc = list(cyclic.values())
    frontier = list(cyclic.values())
    complete = True
    while frontier and complete:
        nxt = []
        for s in frontier:
            for c in cyc:
                if la.contains(s, c, p):
                    continue
                t = la.subspace_sum(s, c, p)
                k = _key(t)
                if k not in found:
                    found[k] = t
                    nxt.append(t)
                    if len(found) > cap:
                        complete = False
                        break
            if not complete:
                break
        frontier = nxt
    subs = [found[k] for k in sorted(found)]
    return SubmoduleLattice(m, subs, complete, cap)


def cached_lattice(m: Module, cap: int = 10**6):
    key = ("lattice", cap)
    if key not in m._cache:
        m._cache[key] = all_submodules(m, cap)
    return m._cache[key]


# ---------------------------------------------------------------------------
# isomorphism


@dataclass
class IsoResult:
    verdict: str  # "yes" | "no" | "unknown"
    witness: np.ndarray | None = None
    reason: str = ""

    def __bool__(self):
        return self.verdict == "yes"


def is_isomorphic(m: Module, n: Module, budget: int = 4096, samples: int = 256, seed: int = 0) -> IsoResult:
    _check_same(m, n)
    p = m.algebra.p
    if m.dim != n.dim:
        return IsoResult("no", reason="dimension")
    if m.dim == 0:
        return IsoResult("yes", np.zeros((0, 0), dtype=np.int64))
    if invariant(m) != invariant(n):
        return IsoResult("no", reason="radical/socle series")
    hom = hom_space(m, n)
    h = len(hom)
    if h == 0:
        return IsoResult("no", reason="Hom(m, n) = 0")
    if h != len(hom_space(m, m)) or h != len(hom_space(n, n)):
        return IsoResult("no", reason="hom dimensions")
    mats = np.array([f.matrix for f in hom])
    for f in hom:
        if la.is_invertible(f.matrix, p):
            return IsoResult("yes", f.matrix)
    rng = np.random.default_rng(seed)
    exhaustive = p**h <= budget
    if not exhaustive:
        for _ in range(samples):
            c = rng.integers(0, p, h)
            x = np.einsum("u,uij->ij", c, mats) % p
            if la.is_invertible(x, p):
                return IsoResult("yes", x)
        return IsoResult("unknown", reason=f"no invertible map in {samples} samples of a {p}^{h} space")
    for c in itertools.product(range(p), repeat=h):
        if not any(c):
            continue
        x = np.einsum("u,uij->ij", np.array(c, dtype=np.int64), mats) % p
        if la.is_invertible(x, p):
            return IsoResult("yes", x)
    return IsoResult("no", reason="exhaustive search of Hom(m, n)")


def find_monomorphism(m: Module, n: Module, budget: int = 4096, samples: int = 256, seed: int = 0):
    """An injective map m -> n, None if none exists (exhaustive), or "unknown"."""
    p = m.algebra.p
    if m.dim == 0:
        return np.zeros((n.dim, 0), dtype=np.int64)
    hom = hom_space(m, n)
    if not hom:
        return None
    mats = np.array([f.matrix for f in hom])
    for f in hom:
        if la.rank(f.matrix, p) == m.dim:
            return f.matrix
    h = len(hom)
    if p**h > budget:
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            x = np.einsum("u,uij->ij", rng.integers(0, p, h), mats) % p
            if la.rank(x, p) == m.dim:
                return x
        return "unknown"
    for c in itertools.product(range(p), repeat=h):
        if not any(c):
            continue
        x = np.einsum("u,uij->ij", np.array(c, dtype=np.int64), mats) % p
        if la.rank(x, p) == m.dim:
            return x
    return None


# ---------------------------------------------------------------------------
# enumeration of modules up to isomorphism


def _layered_slots(alg, verts):
    """Allowed matrix positions for each non-idempotent generator.

    Basis vector c sits at vertex verts[c]; a radical generator from s to t
    may send c only to later basis vectors r > c at vertex t. Every module
    admits such a basis (take one adapted to its radical filtration).
    """
    slots = []
    for g in alg.generators:
        if g.source == g.target and np.array_equal(g.vec, alg.idempotents[g.source]):
            slots.append(None)
            continue
        pos = [(r, c) for c in range(len(verts)) for r in range(c + 1, len(verts)) if verts[c] == g.source and verts[r] == g.target]
        slots.append(pos)
    return slots


def _layered_modules(alg, d):
    p = alg.p
    for verts in itertools.product(range(alg.num_vertices), repeat=d):
        slots = _layered_slots(alg, verts)
        free = [(gi, pos) for gi, pos_list in enumerate(slots) if pos_list for pos in pos_list]
        base = []
        for gi, g in enumerate(alg.generators):
            m = np.zeros((d, d), dtype=np.int64)
            if slots[gi] is None:
                for c in range(d):
                    if verts[c] == g.source:
                        m[c, c] = 1
            base.append(m)
        for values in itertools.product(range(p), repeat=len(free)):
            gens = [b.copy() for b in base]
            for (gi, (r, c)), v in zip(free, values):
                gens[gi][r, c] = v
            mats = alg.rho_from_generators(gens)
            mod = Module(alg, mats, check=False)
            try:
                mod.verify()
            except ModuleError:
                continue
            yield mod


def enumerate_modules(alg, max_dim: int, min_dim: int = 1):
    """One representative per isomorphism class of modules with min_dim <= dim <= max_dim.

    Classes whose isomorphism could not be decided are kept separately,
    so the list may contain duplicates but never misses a class.
    """
    key = ("enum", max_dim, min_dim)
    if key in alg._cache:
        return alg._cache[key]
    reps = []
    for d in range(min_dim, max_dim + 1):
        buckets: dict = {}
        for mod in _layered_modules(alg, d):
            inv = invariant(mod)
            bucket = buckets.setdefault(inv, [])
            if any(is_isomorphic(mod, r).verdict == "yes" for r in bucket):
                continue
            bucket.append(mod)
        for inv in sorted(buckets, key=repr):
            reps.extend(buckets[inv])
    for i, r in enumerate(reps):
        r.name = r.name or f"M{i}"
    alg._cache[key] = reps
    return reps


def random_module(alg, d, rng, tries=200):
    """A random module of dimension d from the layered parametrization."""
    p = alg.p
    for _ in range(tries):
        verts = tuple(int(v) for v in rng.integers(0, alg.num_vertices, d))
        slots = _layered_slots(alg, verts)
        gens = []
        for gi, g in enumerate(alg.generators):
            m = np.zeros((d, d), dtype=np.int64)
            if slots[gi] is None:
                for c in range(d):
                    if verts[c] == g.source:
                        m[c, c] = 1
            else:
                for r, c in slots[gi]:
                    m[r, c] = rng.integers(0, p)
            gens.append(m)
        mod = Module(alg, alg.rho_from_generators(gens), check=False)
        try:
            mod.verify()
        except ModuleError:
            continue
        # random change of basis so the representation is not triangular
        while True:
            t = rng.integers(0, p, (d, d))
            if la.is_invertible(t, p):
                break
        ti = la.inverse(t, p)
        mats = np.einsum("ij,bjk,kl->bil", t, mod.mats, ti) % p
        return Module(alg, mats, check=False)
    raise ModuleError("could not sample a module satisfying the relations")


# ---------------------------------------------------------------------------
# projective summands and serialization


def projective_multiplicities(m: Module):
    """Multiplicity of each A e_i as a direct summand of m.

    A e_i splits off with multiplicity equal to the rank of the pairing
    Hom(m, A e_i) x e_i m -> top(End(A e_i)) = k, (g, x) -> g(x) mod rad.
    """
    alg, p = m.algebra, m.algebra.p
    frame = np.vstack([np.array(alg.idempotents, dtype=np.int64).reshape(-1, alg.dim), alg.radical])
    to_frame = la.inverse(frame.T, p)  # algebra coords -> (idempotent part, radical part)
    out = []
    for i in range(alg.num_vertices):
        xs = m.vertex_space(i)
        if len(xs) == 0:
            out.append(0)
            continue
        pb = alg.proj_basis(i)
        homs = hom_space(m, projective(alg, i))
        if not homs:
            out.append(0)
            continue
        pairing = np.zeros((len(homs), len(xs)), dtype=np.int64)
        for s, g in enumerate(homs):
            vals = la.matmul(la.matmul(g.matrix, xs.T, p).T, pb, p)  # rows: g(x) in A
            pairing[s] = la.matmul(vals, to_frame.T, p)[:, i]
        out.append(la.rank(pairing, p))
    return out


def has_projective_summand(m: Module):
    return any(projective_multiplicities(m))


def to_payload(m: Module):
    """JSON-ready description: one matrix per algebra generator, keyed by name."""
    return {
        "dim": int(m.dim),
        "generators": {g.name: mat.tolist() for g, mat in zip(m.algebra.generators, m.gen_mats)},
    }


def from_payload(alg, payload, name=None):
    d = int(payload["dim"])
    given = payload.get("generators", {})
    unknown = set(given) - {g.name for g in alg.generators}
    if unknown:
        raise ModuleError(f"unknown generators: {sorted(unknown)}")
    mats = []
    for g in alg.generators:
        if g.name in given:
            mat = np.array(given[g.name], dtype=np.int64).reshape(d, d)
        elif g.source == g.target and np.array_equal(g.vec, alg.idempotents[g.source]):
            raise ModuleError(f"missing matrix for idempotent {g.name}")
        else:
            mat = np.zeros((d, d), dtype=np.int64)
        mats.append(mat)
    if d == 0:
        return Module.zero(alg)
    return Module.from_generators(alg, mats, name=name)
