"""Resolutions, Ext^i(-, A), transpose, evaluation maps and grade invariants.

Maps between sums of indecomposable projectives ``P = (+) A e_{v_k}`` are
stored as matrices of algebra elements: entry ``[l, k]`` lies in
``e_{v_k} A e_{w_l}`` and the map sends ``x`` in summand ``k`` to
``x * a[l, k]`` in summand ``l``. Dualizing with Hom(-, A) turns such a map
into the transposed element matrix read over the opposite algebra, which
is how every Ext module below is computed.

Unbounded invariants are three-valued: an ``int`` (exact), ``math.inf``
(proved infinite, e.g. a resolution terminated) or :class:`AtLeast`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from .modules import (
    Module,
    ModuleMap,
    cached_lattice,
    duality_D,
    hom_space,
    injective,
    is_isomorphic,
    projective,
    quotient,
    radical_subspace,
    submodule,
    subquotient,
)

INF = math.inf


@dataclass(frozen=True)
class AtLeast:
    value: int

    def __str__(self):
        return f">={self.value}"


def at_least(x, k):
    """Is x >= k?  True, False, or None when x is only a lower bound below k."""
    if isinstance(x, AtLeast):
        return True if x.value >= k else None
    return x >= k


def fmt(x):
    if isinstance(x, AtLeast):
        return str(x)
    if x == INF:
        return "inf"
    return int(x)


# ---------------------------------------------------------------------------
# sums of indecomposable projectives


class ProjSum:
    """Direct sum of indecomposable projectives A e_v over ``algebra``."""

    def __init__(self, algebra, verts):
        self.algebra = algebra
        self.verts = tuple(int(v) for v in verts)
        self.sizes = [len(algebra.proj_basis(v)) for v in self.verts]
        self.offsets = np.concatenate([[0], np.cumsum(self.sizes)]).astype(int).tolist()
        self.dim = self.offsets[-1]
        self._module = None

    @property
    def module(self):
        if self._module is None:
            alg = self.algebra
            mats = np.zeros((alg.dim, self.dim, self.dim), dtype=np.int64)
            for k, v in enumerate(self.verts):
                a, b = self.offsets[k], self.offsets[k + 1]
                mats[:, a:b, a:b] = alg.proj_action(v)
            self._module = Module(alg, mats, check=False)
        return self._module

    def multiplicities(self):
        out = [0] * self.algebra.num_vertices
        for v in self.verts:
            out[v] += 1
        return out

    def components(self, vec):
        """Split a coordinate vector into algebra elements, one per summand."""
        alg = self.algebra
        out = []
        for k, v in enumerate(self.verts):
            c = vec[self.offsets[k] : self.offsets[k + 1]]
            out.append(la.matmul(c, alg.proj_basis(v), alg.p) if len(c) else np.zeros(alg.dim, dtype=np.int64))
        return out

    def from_components(self, elems):
        alg = self.algebra
        parts = []
        for k, v in enumerate(self.verts):
            basis = alg.proj_basis(v)
            parts.append(la.coords(np.asarray(elems[k]), basis, alg.p)[0])
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def __repr__(self):
        names = self.algebra.vertex_names
        return "ProjSum(" + " + ".join(f"P{names[v]}" for v in self.verts) + ")"


class ProjMap:
    """Homomorphism between projective sums given by an element matrix."""

    def __init__(self, source: ProjSum, target: ProjSum, elems):
        self.source, self.target = source, target
        n = source.algebra.dim
        self.elems = np.asarray(elems, dtype=np.int64).reshape(len(target.verts), len(source.verts), n)
        self._matrix = None

    @property
    def matrix(self):
        if self._matrix is None:
            alg, p = self.source.algebra, self.source.algebra.p
            mat = np.zeros((self.target.dim, self.source.dim), dtype=np.int64)
            for k, v in enumerate(self.source.verts):
                basis = alg.proj_basis(v)
                a = self.source.offsets[k]
                for l, w in enumerate(self.target.verts):
                    elem = self.elems[l, k]
                    if not elem.any():
                        continue
                    tb = alg.proj_basis(w)
                    imgs = la.matmul(basis, alg.right_matrix(elem).T, p)  # rows: y * elem
                    c = la.coords(imgs, tb, p)
                    t0 = self.target.offsets[l]
                    mat[t0 : t0 + len(tb), a : a + len(basis)] = c.T
            self._matrix = mat
        return self._matrix

    def dual(self):
        """Hom(-, A) of this map, a map of projective sums over the opposite algebra."""
        op = self.source.algebra.opposite
        return ProjMap(ProjSum(op, self.target.verts), ProjSum(op, self.source.verts), self.elems.transpose(1, 0, 2))

    def __repr__(self):
        return f"ProjMap({self.source} -> {self.target})"


def _projective_cover_gens(module: Module, subspace=None):
    """Idempotent-homogeneous vectors whose images span the top.

    ``subspace`` (RREF rows) restricts to an invariant subspace of ``module``.
    Returns (vertex list, generator row vectors in module coordinates).
    """
    alg, p = module.algebra, module.algebra.p
    d = module.dim
    if subspace is None:
        sub = np.eye(d, dtype=np.int64)
    else:
        sub = subspace
    if len(sub) == 0:
        return [], np.zeros((0, d), dtype=np.int64)
    rad_imgs = [la.matmul(sub, module.act(x).T, p) for x in alg.radical]
    rad = la.row_space(np.vstack(rad_imgs), p, d) if rad_imgs else np.zeros((0, d), dtype=np.int64)
    verts, gens = [], []
    for i, e in enumerate(alg.idempotents):
        piece = la.row_space(la.matmul(sub, module.act(e).T, p), p, d)
        if len(piece) == 0:
            continue
        rad_i = la.intersection(rad, piece, p)
        for g in la.complement(rad_i, piece, p):
            verts.append(i)
            gens.append(g)
    return verts, np.array(gens, dtype=np.int64).reshape(-1, d)


def _cover_matrix(module, psum: ProjSum, gens):
    """Linear matrix of the map psum -> module sending e_{v_k} to gens[k]."""
    alg, p = module.algebra, module.algebra.p
    mat = np.zeros((module.dim, psum.dim), dtype=np.int64)
    for k, v in enumerate(psum.verts):
        basis = alg.proj_basis(v)
        for j, y in enumerate(basis):
            mat[:, psum.offsets[k] + j] = la.matmul(module.act(y), gens[k], p)
    return mat


@dataclass
class ProjResolution:
    """Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0."""

    target: Module
    terms: list  # ProjSum P_0 .. P_n
    cover: np.ndarray  # linear matrix P_0 -> M
    cover_gens: np.ndarray  # generators of M (rows), one per summand of P_0
    differentials: list  # ProjMap d_i : P_i -> P_{i-1}, i >= 1
    kernels: list  # kernel of P_n -> P_{n-1} (RREF rows in P_n coordinates), last entry pending
    terminated: bool  # the last computed kernel is zero

    @property
    def length(self):
        return len(self.terms) - 1

    def pd(self):
        if self.terminated:
            return self.length if self.target.dim else -1
        return AtLeast(self.length + 1)

    def multiplicities(self):
        return [t.multiplicities() for t in self.terms]

    def is_minimal(self):
        """Every differential has image inside the radical of its target."""
        for d in self.differentials:
            tgt = d.target.module
            rad = radical_subspace(tgt)
            img = la.column_space(d.matrix, d.source.algebra.p)
            if len(img) and not la.contains(rad, img, d.source.algebra.p):
                return False
        return True

    def is_exact(self):
        p = self.target.algebra.p
        if la.rank(self.cover, p) != self.target.dim:
            return False
        prev = la.kernel_basis(self.cover, p)
        for d in self.differentials:
            img = la.column_space(d.matrix, p)
            if not np.array_equal(img, prev):
                return False
            prev = la.kernel_basis(d.matrix, p)
        return True


def _extend(res: ProjResolution, n: int):
    """Extend in place until P_n is computed or the resolution terminates."""
    alg = res.target.algebra
    p = alg.p
    while not res.terminated and res.length < n:
        top = res.terms[-1]
        ker = res.kernels[-1]
        verts, gens = _projective_cover_gens(top.module, ker)
        nxt = ProjSum(alg, verts)
        elems = np.zeros((len(top.verts), len(verts), alg.dim), dtype=np.int64)
        for k, g in enumerate(gens):
            for l, comp in enumerate(top.components(g)):
                elems[l, k] = comp
        d = ProjMap(nxt, top, elems)
        res.terms.append(nxt)
        res.differentials.append(d)
        new_ker = la.kernel_basis(d.matrix, p)
        res.kernels.append(new_ker)
        res.terminated = len(new_ker) == 0
    return res


def min_proj_resolution(m: Module, n: int) -> ProjResolution:
    """Minimal projective resolution computed through degree n (cached per module)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    res = m._cache.get("res")
    if res is None:
        alg = m.algebra
        verts, gens = _projective_cover_gens(m)
        p0 = ProjSum(alg, verts)
        cover = _cover_matrix(m, p0, gens)
        ker = la.kernel_basis(cover, alg.p) if p0.dim else np.zeros((0, 0), dtype=np.int64)
        res = ProjResolution(m, [p0], cover, gens, [], [ker], len(ker) == 0)
        m._cache["res"] = res
    return _extend(res, n)


def pd_of(m: Module, cap: int):
    return min_proj_resolution(m, cap).pd()


def is_projective(m: Module):
    return m.dim == 0 or min_proj_resolution(m, 1).pd() == 0


def syzygy(m: Module, k: int):
    """k-th syzygy of m in the minimal resolution, with its inclusion into P_{k-1}."""
    if k < 1:
        raise ValueError("k must be at least 1")
    res = min_proj_resolution(m, k - 1)
    if res.length < k - 1:
        return Module.zero(m.algebra), None
    ambient = res.terms[k - 1].module
    sub, inc = submodule(ambient, res.kernels[k - 1])
    sub.name = f"syzygy({k}, {m.name})" if m.name else None
    return sub, inc


# ---------------------------------------------------------------------------
# Ext^i(-, A)


@dataclass
class ExtModule:
    base: Module
    degree: int
    value: Module  # over the opposite algebra
    witness: dict = field(default_factory=dict)

    @property
    def dim(self):
        return self.value.dim


def _dual_complex_slot(m: Module, i: int):
    """(P_i^*, kernel of d_{i+1}^*, image of d_i^*) as RREF rows in P_i^* coordinates."""
    res = min_proj_resolution(m, i + 1)
    op = m.algebra.opposite
    if i > res.length:
        z = ProjSum(op, [])
        return z, np.zeros((0, 0), dtype=np.int64), np.zeros((0, 0), dtype=np.int64)
    pi_star = ProjSum(op, res.terms[i].verts)
    p = op.p
    if i + 1 <= res.length:
        dn = res.differentials[i].dual()  # d_{i+1}^* : P_i^* -> P_{i+1}^*
        ker = la.kernel_basis(dn.matrix, p) if dn.target.dim else np.eye(pi_star.dim, dtype=np.int64)
    else:
        ker = np.eye(pi_star.dim, dtype=np.int64)
    if i >= 1:
        dp = res.differentials[i - 1].dual()  # d_i^* : P_{i-1}^* -> P_i^*
        img = la.column_space(dp.matrix, p) if dp.source.dim else np.zeros((0, pi_star.dim), dtype=np.int64)
    else:
        img = np.zeros((0, pi_star.dim), dtype=np.int64)
    return pi_star, ker, img


def ext_dim(m: Module, i: int) -> int:
    key = ("extdim", i)
    if key not in m._cache:
        _, ker, img = _dual_complex_slot(m, i)
        m._cache[key] = len(ker) - len(img)
    return m._cache[key]


def ext_lambda(m: Module, i: int) -> ExtModule:
    """Ext^i_A(m, A) as a module over the opposite algebra."""
    if i < 0:
        raise ValueError("degree must be non-negative")
    key = ("ext", i)
    if key in m._cache:
        return m._cache[key]
    pi_star, ker, img = _dual_complex_slot(m, i)
    if pi_star.dim == 0:
        value = Module.zero(m.algebra.opposite)
    else:
        value = subquotient(pi_star.module, ker, img)
    value.name = f"Ext^{i}({m.name},A)" if m.name else None
    out = ExtModule(m, i, value, {"term": pi_star.verts, "kernel": ker, "image": img})
    m._cache[key] = out
    m._cache[("extdim", i)] = value.dim
    return out


def ext_dims_padded(m: Module, n: int, pad_degree: int, pad_vertex: int):
    """Ext dimensions from the minimal resolution with a split summand added.

    The contractible complex A e_v --id--> A e_v is inserted in degrees
    ``pad_degree`` and ``pad_degree - 1``, giving a non-minimal projective
    resolution of the same module. Used to check that Ext does not depend
    on the chosen resolution.
    """
    if pad_degree < 1:
        raise ValueError("pad_degree must be at least 1")
    res = min_proj_resolution(m, n + 1)
    alg = m.algebra
    op = alg.opposite
    p = alg.p
    e = alg.idempotents[pad_vertex]
    terms = [list(t.verts) for t in res.terms] + [[]] * (n + 2 - len(res.terms))
    diffs = [d.elems for d in res.differentials]
    while len(diffs) < n + 1:
        diffs.append(np.zeros((len(terms[len(diffs)]), len(terms[len(diffs) + 1]), alg.dim), dtype=np.int64))
    terms = [list(t) for t in terms]
    lo, hi = pad_degree - 1, pad_degree
    new_terms = [list(t) for t in terms]
    new_terms[lo].append(pad_vertex)
    new_terms[hi].append(pad_vertex)
    new_diffs = []
    for j, el in enumerate(diffs):
        # d_{j+1}: P_{j+1} -> P_j, shape (len P_j, len P_{j+1}, n)
        rows, cols = len(new_terms[j]), len(new_terms[j + 1])
        out = np.zeros((rows, cols, alg.dim), dtype=np.int64)
        out[: el.shape[0], : el.shape[1]] = el
        if j == lo and j + 1 == hi:
            out[rows - 1, cols - 1] = e
        new_diffs.append(out)
    dims = []
    for i in range(n + 1):
        pi = ProjSum(op, new_terms[i])
        if pi.dim == 0:
            dims.append(0)
            continue
        if i + 1 < len(new_terms) and new_terms[i + 1]:
            dn = ProjMap(ProjSum(alg, new_terms[i + 1]), ProjSum(alg, new_terms[i]), new_diffs[i]).dual()
            ker = len(la.kernel_basis(dn.matrix, p))
        else:
            ker = pi.dim
        if i >= 1 and new_terms[i - 1]:
            dp = ProjMap(ProjSum(alg, new_terms[i]), ProjSum(alg, new_terms[i - 1]), new_diffs[i - 1]).dual()
            img = la.rank(dp.matrix, p)
        else:
            img = 0
        dims.append(ker - img)
    return dims


# ---------------------------------------------------------------------------
# duals, transpose and the evaluation map


@dataclass
class DualData:
    """M^* = ker(P_0^* -> P_1^*) together with what is needed to evaluate it."""

    module: Module  # M^* over the opposite algebra
    basis: np.ndarray  # rows in P_0^* coordinates
    p0: ProjSum
    p0_star: ProjSum
    lift: np.ndarray  # P_0 coordinates of a preimage of each basis vector of M


def _dual_data(m: Module) -> DualData:
    if "dual" in m._cache:
        return m._cache["dual"]
    res = min_proj_resolution(m, 1)
    alg, p = m.algebra, m.algebra.p
    op = alg.opposite
    p0 = res.terms[0]
    p0_star = ProjSum(op, p0.verts)
    if res.length >= 1:
        d1s = res.differentials[0].dual()
        ker = la.kernel_basis(d1s.matrix, p) if d1s.target.dim else np.eye(p0_star.dim, dtype=np.int64)
    else:
        ker = np.eye(p0_star.dim, dtype=np.int64)
    if p0_star.dim == 0:
        ker = np.zeros((0, 0), dtype=np.int64)
        mod = Module.zero(op)
    else:
        mod, _ = submodule(p0_star.module, ker)
    mod.name = f"{m.name}*" if m.name else None
    lift = la.solve(res.cover, np.eye(m.dim, dtype=np.int64), p) if m.dim else np.zeros((p0.dim, 0), dtype=np.int64)
    out = DualData(mod, ker, p0, p0_star, lift)
    m._cache["dual"] = out
    return out


def lambda_dual(m: Module) -> ExtModule:
    """M^* = Hom_A(M, A) as a module over the opposite algebra."""
    dd = _dual_data(m)
    return ExtModule(m, 0, dd.module, {"term": dd.p0.verts, "kernel": dd.basis})


def evaluate_dual(m: Module, phi_p0star):
    """Values phi(m_j) in A of a functional given in P_0^* coordinates; shape (dim A, dim M)."""
    dd = _dual_data(m)
    alg, p = m.algebra, m.algebra.p
    ys = dd.p0_star.components(phi_p0star)
    out = np.zeros((alg.dim, m.dim), dtype=np.int64)
    for j in range(m.dim):
        lams = dd.p0.components(dd.lift[:, j])
        val = np.zeros(alg.dim, dtype=np.int64)
        for lam, y in zip(lams, ys):
            if lam.any() and y.any():
                val = (val + alg.mul(lam, y)) % p
        out[:, j] = val
    return out


def dual_map(f: ModuleMap) -> ModuleMap:
    """f^* : N^* -> M^* for f : M -> N, in the bases of :func:`lambda_dual`."""
    m, n = f.source, f.target
    alg, p = m.algebra, m.algebra.p
    dm, dn = _dual_data(m), _dual_data(n)
    res_m = min_proj_resolution(m, 1)
    gens_m = res_m.cover_gens  # generator k of P_0(M) maps to gens_m[k]
    mat = np.zeros((dm.module.dim, dn.module.dim), dtype=np.int64)
    for s, phi in enumerate(dn.basis):
        vals = evaluate_dual(n, phi)  # (dim A, dim N)
        comps = []
        for k in range(len(dm.p0.verts)):
            image = la.matmul(f.matrix, gens_m[k], p)
            comps.append(la.matmul(vals, image, p))
        vec = dm.p0_star.from_components(comps) if comps else np.zeros(0, dtype=np.int64)
        mat[:, s] = la.coords(vec, dm.basis, p)[0] if len(dm.basis) else []
    return ModuleMap(dn.module, dm.module, mat)


def transpose(m: Module) -> Module:
    """Tr M = coker(P_0^* -> P_1^*) from the minimal presentation."""
    if "tr" in m._cache:
        return m._cache["tr"]
    res = min_proj_resolution(m, 1)
    op = m.algebra.opposite
    if res.length < 1:
        tr = Module.zero(op)
    else:
        d1s = res.differentials[0].dual()
        img = la.column_space(d1s.matrix, op.p) if d1s.source.dim else np.zeros((0, d1s.target.dim), dtype=np.int64)
        tr, _ = quotient(d1s.target.module, img)
    tr.name = f"Tr({m.name})" if m.name else None
    m._cache["tr"] = tr
    return tr


def double_dual(m: Module):
    """(M^{**}, sigma_M) with M^{**} over the algebra of m."""
    if "ddual" in m._cache:
        return m._cache["ddual"]
    alg, p = m.algebra, m.algebra.p
    dd = _dual_data(m)
    mstar = dd.module
    ddd = _dual_data(mstar)  # M^{**} inside Q_0^*, Q_0 the cover of M^*
    res_star = min_proj_resolution(mstar, 1)
    sigma = np.zeros((ddd.module.dim, m.dim), dtype=np.int64)
    if mstar.dim and m.dim:
        q0_star = ddd.p0_star
        gens = res_star.cover_gens  # rows in M^* coordinates
        cols = []
        values = []
        for g in gens:
            phi = la.matmul(g, dd.basis, p)  # P_0^* coordinates
            values.append(evaluate_dual(m, phi))  # (dim A, dim M)
        for j in range(m.dim):
            comps = [v[:, j] for v in values]
            vec = q0_star.from_components(comps)
            cols.append(la.coords(vec, ddd.basis, p)[0])
        sigma = np.array(cols, dtype=np.int64).T.reshape(ddd.module.dim, m.dim)
    out = (ddd.module, ModuleMap(m, ddd.module, sigma))
    m._cache["ddual"] = out
    return out


@dataclass
class EvalReport:
    module: Module
    sigma: ModuleMap
    ker_dim: int
    coker_dim: int
    torsionless: bool
    reflexive: bool
    ext1_tr_dim: int
    ext2_tr_dim: int

    def as_dict(self):
        return {
            "dim": self.module.dim,
            "ker_sigma": self.ker_dim,
            "coker_sigma": self.coker_dim,
            "torsionless": self.torsionless,
            "reflexive": self.reflexive,
            "ext1_op_tr": self.ext1_tr_dim,
            "ext2_op_tr": self.ext2_tr_dim,
        }


class InconsistencyError(RuntimeError):
    """Two independent computations of the same invariant disagree."""


def eval_report(m: Module) -> EvalReport:
    if "eval" in m._cache:
        return m._cache["eval"]
    p = m.algebra.p
    mdd, sigma = double_dual(m)
    r = sigma.rank()
    ker, coker = m.dim - r, mdd.dim - r
    tr = transpose(m)
    e1, e2 = ext_dim(tr, 1), ext_dim(tr, 2)
    if (ker, coker) != (e1, e2):
        raise InconsistencyError(
            f"evaluation map of {m!r}: ker/coker ({ker}, {coker}) but Ext^1/Ext^2 of Tr ({e1}, {e2})"
        )
    rep = EvalReport(m, sigma, ker, coker, ker == 0, ker == 0 and coker == 0, e1, e2)
    m._cache["eval"] = rep
    return rep


def coker_sigma(m: Module) -> Module:
    mdd, sigma = double_dual(m)
    img = la.column_space(sigma.matrix, m.algebra.p) if m.dim else np.zeros((0, mdd.dim), dtype=np.int64)
    q, _ = quotient(mdd, img)
    return q


# ---------------------------------------------------------------------------
# grades


def grade(m: Module, bound: int):
    """Least i <= bound with Ext^i(M, A) != 0."""
    if m.dim == 0:
        return INF
    res = min_proj_resolution(m, bound + 1)
    top = min(bound, res.length) if res.terminated else bound
    for i in range(top + 1):
        if ext_dim(m, i):
            return i
    return INF if res.terminated and res.length <= bound else AtLeast(bound + 1)


def reduced_grade(m: Module, bound: int):
    """Largest k with Ext^j(M, A) = 0 for 1 <= j < k, i.e. the least i >= 1 with Ext^i != 0."""
    if m.dim == 0:
        return INF
    res = min_proj_resolution(m, bound + 1)
    for i in range(1, bound + 1):
        if i > res.length and res.terminated:
            return INF
        if ext_dim(m, i):
            return i
    if res.terminated and res.length <= bound:
        return INF
    return AtLeast(bound + 1)


@dataclass
class GradeReport:
    module: Module
    grade: object
    reduced_grade: object
    strong_grade: object
    strong_complete: bool
    bound: int

    def as_dict(self):
        return {
            "dim": self.module.dim,
            "grade": fmt(self.grade),
            "reduced_grade": fmt(self.reduced_grade),
            "strong_grade": fmt(self.strong_grade),
            "strong_grade_complete": self.strong_complete,
            "bound": self.bound,
        }


def _min_grade(values):
    exact = [v for v in values if not isinstance(v, AtLeast)]
    lower = [v.value for v in values if isinstance(v, AtLeast)]
    best = min(exact) if exact else INF
    if lower and min(lower) < best:
        return AtLeast(min(lower))
    return best


def strong_grade(m: Module, bound: int, lattice_cap: int = 10**6):
    """(min grade over all submodules, lattice complete?)."""
    if m.dim == 0:
        return INF, True
    lat = cached_lattice(m, lattice_cap)
    grades = []
    for s in lat.nonzero():
        sub, _ = submodule(m, s)
        grades.append(grade(sub, bound))
    if not lat.complete:
        grades.append(grade(m, bound))
    return _min_grade(grades), lat.complete


def grade_report(m: Module, bound: int = 6, lattice_cap: int = 10**6) -> GradeReport:
    g = grade(m, bound)
    rg = reduced_grade(m, bound)
    sg, complete = strong_grade(m, bound, lattice_cap)
    return GradeReport(m, g, rg, sg, complete, bound)


def is_k_torsionfree(m: Module, k: int):
    """(flag, reduced grade of Tr M computed up to k + 1)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    rg = reduced_grade(transpose(m), k + 1)
    flag = at_least(rg, k + 1)
    return bool(flag), rg


def torsionfree_degree(m: Module, bound: int):
    """Largest k <= bound with m k-torsionfree (0 if not torsionless); bound+... as AtLeast."""
    rg = reduced_grade(transpose(m), bound + 1)
    if isinstance(rg, AtLeast):
        return AtLeast(bound)
    if rg == INF:
        return INF
    return rg - 1


# ---------------------------------------------------------------------------
# injective side


@dataclass
class InjResolution:
    """Minimal injective resolution 0 -> M -> I'_0 -> I'_1 -> ..."""

    target: Module
    multiplicities: list  # per term, multiplicity of each indecomposable injective
    differentials: list  # linear matrices (transposes of the dual projective resolution)
    terminated: bool

    @property
    def length(self):
        return len(self.multiplicities) - 1

    def id(self):
        if self.terminated:
            return self.length if self.target.dim else -1
        return AtLeast(self.length + 1)

    def term(self, i):
        from .modules import direct_sum

        alg = self.target.algebra
        mods = [injective(alg, v) for v, k in enumerate(self.multiplicities[i]) for _ in range(k)]
        if not mods:
            return Module.zero(alg)
        return direct_sum(*mods)


def min_inj_resolution(m: Module, cap: int) -> InjResolution:
    """Obtained as D of the minimal projective resolution of D(M) over the opposite algebra."""
    dm = m._cache.get("D")
    if dm is None:
        dm = duality_D(m)
        m._cache["D"] = dm
    res = min_proj_resolution(dm, cap)
    mults = res.multiplicities()
    diffs = [res.cover.T] + [d.matrix.T for d in res.differentials]
    return InjResolution(m, mults, diffs, res.terminated)


def _injective_pd(alg, cap):
    key = ("injpd", cap)
    if key not in alg._cache:
        alg._cache[key] = [pd_of(injective(alg, i), cap) for i in range(alg.num_vertices)]
    return alg._cache[key]


def _max_dim(values):
    """Max of exact/lower-bound dimension values; -1 for the empty sum."""
    if not values:
        return -1
    exact = [v for v in values if not isinstance(v, AtLeast)]
    lower = [v.value for v in values if isinstance(v, AtLeast)]
    if lower:
        return AtLeast(max(lower + [e for e in exact if e != INF]))
    return max(exact)


def injective_term_pd(alg, mults, cap):
    pds = _injective_pd(alg, cap)
    return _max_dim([pds[v] for v, k in enumerate(mults) if k])


@dataclass
class Dims:
    pd: object
    id: object
    fd: object
    note: str = "fd equals pd for finitely generated modules over a finite-dimensional algebra"

    def as_dict(self):
        return {"pd": fmt(self.pd), "id": fmt(self.id), "fd": fmt(self.fd), "note": self.note}


def dims(m: Module, cap: int = 6) -> Dims:
    pd = pd_of(m, cap)
    idv = min_inj_resolution(m, cap).id()
    return Dims(pd, idv, pd)


def regular_inj_resolution(alg, cap):
    from .algebra import regular_module

    key = ("reginj", cap)
    if key not in alg._cache:
        reg = alg._cache.get("regular")
        if reg is None:
            reg = regular_module(alg)
            alg._cache["regular"] = reg
        alg._cache[key] = min_inj_resolution(reg, cap)
    return alg._cache[key]


def dominant_dimension(alg, cap: int = 6):
    """Number of leading projective terms in the minimal injective resolution of A."""
    res = regular_inj_resolution(alg, cap)
    pds = _injective_pd(alg, cap + 1)
    for i, mults in enumerate(res.multiplicities):
        proj = all(pds[v] == 0 for v, k in enumerate(mults) if k)
        if not proj:
            return i
    if res.terminated:
        return INF
    return AtLeast(len(res.multiplicities))


# ---------------------------------------------------------------------------
# pseudo-null and pure modules


@dataclass
class Purity:
    pseudo_null: bool
    pure: object  # True / False / None (unknown: incomplete lattice)
    witness: object = None  # offending submodule basis when impure

    def as_dict(self):
        return {
            "pseudo_null": self.pseudo_null,
            "pure": self.pure,
            "witness_dim": None if self.witness is None else int(len(self.witness)),
        }


def low_injective_support(alg, cap=6):
    """Vertices whose indecomposable injective occurs in I'_0 or I'_1."""
    res = regular_inj_resolution(alg, max(cap, 2))
    support = set()
    for mults in res.multiplicities[:2]:
        support |= {v for v, k in enumerate(mults) if k}
    return sorted(support)


def is_pseudo_null(m: Module, cap=6):
    """Hom(M, I'_0 + I'_1) = 0, decided on the indecomposable summands."""
    if m.dim == 0:
        return True
    for v in low_injective_support(m.algebra, cap):
        if hom_space(m, injective(m.algebra, v)):
            return False
    return True


def purity_classify(m: Module, lattice_cap: int = 10**6, bound: int = 6) -> Purity:
    pn = is_pseudo_null(m, bound)
    if m.dim == 0:
        return Purity(pn, None)
    g = grade(m, bound)
    lat = cached_lattice(m, lattice_cap)
    for s in lat.nonzero():
        sub, _ = submodule(m, s)
        if grade(sub, bound) != g:
            return Purity(pn, False, s)
    return Purity(pn, True if lat.complete else None)


# ---------------------------------------------------------------------------
# D-class chains


@dataclass
class DClassStage:
    module: Module
    epimorphism: np.ndarray  # P -> T^* (cover), over the opposite algebra
    embedding: np.ndarray  # T^{**} -> P^*
    cokernel: Module


@dataclass
class DClassChain:
    k: int
    stages: list  # T_1 ... T_r (modules)
    witnesses: list  # DClassStage for each extension step
    complete: bool  # reached T_k with every stage torsionless
    failed_stage: int | None = None

    @property
    def top(self):
        return self.stages[-1]


class NotTorsionless(ValueError):
    def __init__(self, stage):
        super().__init__(f"stage {stage} of the chain is not torsionless")
        self.stage = stage


def d_class_chain(t: Module, k: int, strict: bool = False) -> DClassChain:
    """Build T_1 = t, and T_{i+1} = coker(T_i^{**} -> P^*) from the cover P -> T_i^*."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if not eval_report(t).torsionless:
        if strict:
            raise NotTorsionless(1)
        return DClassChain(k, [t], [], False, 1)
    stages, wits = [t], []
    alg, p = t.algebra, t.algebra.p
    for i in range(1, k):
        cur = stages[-1]
        tstar = _dual_data(cur).module
        res = min_proj_resolution(tstar, 0)
        q0 = res.terms[0]  # P over the opposite algebra, cover of T^*
        tdd = _dual_data(tstar)  # T^{**} inside Q_0^*
        pstar = tdd.p0_star
        emb = tdd.basis.T  # inclusion T^{**} -> P^*
        nxt, _ = quotient(pstar.module, tdd.basis)
        wits.append(DClassStage(cur, res.cover, emb, nxt))
        stages.append(nxt)
        if not eval_report(nxt).torsionless:
            if strict:
                raise NotTorsionless(i + 1)
            return DClassChain(k, stages, wits, False, i + 1)
    return DClassChain(k, stages, wits, True)
