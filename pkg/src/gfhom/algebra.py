"""Finite-dimensional basic algebras over GF(p).

An :class:`Algebra` is stored by structure constants ``c[i, j, k]`` with
``b_i * b_j = sum_k c[i, j, k] b_k``, together with a complete set of
primitive orthogonal idempotents, its Jacobson radical and a set of
idempotent-homogeneous algebra generators.

Path composition is written right to left: the word ``b*a`` means "first
``a``, then ``b``", so a left module is a quiver representation in which
an arrow ``a: i -> j`` maps the space at ``i`` to the space at ``j``.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import linalg as la


class AlgebraError(ValueError):
    """Raised when an algebra presentation or structure fails validation."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class QuiverSpec:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]  # (name, source, target)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("duplicate vertex name")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate arrow name")
        if set(names) & set(self.vertices):
            raise AlgebraError("arrow and vertex names must be distinct")
        for name, s, t in self.arrows:
            if s not in self.vertices or t not in self.vertices:
                raise AlgebraError(f"arrow {name} has an undeclared endpoint")

    def arrow(self, name):
        for a in self.arrows:
            if a[0] == name:
                return a
        raise AlgebraError(f"unknown arrow {name!r}")


# A path is (source, target, arrows in traversal order).
Path = tuple[str, str, tuple[str, ...]]


@dataclass(frozen=True)
class Presentation:
    quiver: QuiverSpec
    relations: tuple[dict, ...]  # each maps a traversal tuple of arrow names to a coefficient
    nilpotency: int
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise AlgebraError(f"field characteristic {self.p} is not prime")
        if self.nilpotency < 1:
            raise AlgebraError("nilpotency degree must be positive")


def path_label(path: Path) -> str:
    src, _, arrows = path
    if not arrows:
        return f"e{src}" if not src.startswith("e") else src
    return "*".join(reversed(arrows))


class Generator(NamedTuple):
    name: str
    vec: np.ndarray
    source: int  # vertex index
    target: int


def _mod_einsum(subscripts, *ops, p):
    bound = 1
    for op in ops[:-1]:
        bound *= max(1, int(np.max(op)) if op.size else 1)
    terms = max(1, ops[-1].size)
    if bound * (p - 1) * terms <= 2**62:
        return np.einsum(subscripts, *ops) % p
    obj = [o.astype(object) for o in ops]
    return (np.einsum(subscripts, *obj) % p).astype(np.int64)


class Algebra:
    """A basic finite-dimensional algebra with designated idempotents."""

    def __init__(
        self,
        p,
        constants,
        unit,
        idempotents,
        radical,
        *,
        vertex_names=None,
        basis_labels=None,
        generators=None,
        name=None,
        check=True,
        derive=True,
    ):
        self.p = int(p)
        self.constants = np.ascontiguousarray(np.asarray(constants, dtype=np.int64) % self.p)
        self.dim = self.constants.shape[0]
        self.unit = np.asarray(unit, dtype=np.int64) % self.p
        self.idempotents = [np.asarray(e, dtype=np.int64) % self.p for e in idempotents]
        self.radical = la.row_space(np.asarray(radical, dtype=np.int64).reshape(-1, self.dim), self.p, self.dim)
        self.num_vertices = len(self.idempotents)
        self.vertex_names = tuple(vertex_names or (str(i + 1) for i in range(self.num_vertices)))
        self.basis_labels = tuple(basis_labels or (f"b{i}" for i in range(self.dim)))
        self.name = name
        self._opposite = None
        self._cache = {}
        if check:
            self.validate()
        if not derive:
            return
        self.generators = list(generators) if generators is not None else self._derive_generators()
        self._build_word_basis()

    # -- arithmetic -------------------------------------------------------
    def mul(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        xy = _mod_einsum("i,ijk->jk", x, self.constants, p=self.p)
        return _mod_einsum("j,jk->k", y, xy, p=self.p)

    def left_matrix(self, x):
        """Matrix of y -> x*y acting on coordinate columns."""
        return _mod_einsum("i,ijk->kj", np.asarray(x, dtype=np.int64), self.constants, p=self.p)

    def right_matrix(self, y):
        """Matrix of x -> x*y acting on coordinate columns."""
        return _mod_einsum("j,ijk->ki", np.asarray(y, dtype=np.int64), self.constants, p=self.p)

    def basis_vector(self, i):
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    # -- validation -------------------------------------------------------
    def validate(self):
        p, n, c = self.p, self.dim, self.constants
        if c.shape != (n, n, n):
            raise AlgebraError("structure constants must have shape (n, n, n)")
        # (b_i b_j) b_k = b_i (b_j b_k)
        left = _mod_einsum("ijm,mkl->ijkl", c, c, p=p)
        right = _mod_einsum("jkm,iml->ijkl", c, c, p=p)
        if not np.array_equal(left, right):
            raise AlgebraError("multiplication is not associative")
        eye = np.eye(n, dtype=np.int64)
        if not np.array_equal(self.left_matrix(self.unit), eye) or not np.array_equal(
            self.right_matrix(self.unit), eye
        ):
            raise AlgebraError("unit does not act as the identity")
        total = np.zeros(n, dtype=np.int64)
        for i, e in enumerate(self.idempotents):
            total = (total + e) % p
            for j, f in enumerate(self.idempotents):
                expect = e if i == j else np.zeros(n, dtype=np.int64)
                if not np.array_equal(self.mul(e, f), expect):
                    raise AlgebraError("idempotents are not orthogonal idempotents")
        if not np.array_equal(total, self.unit):
            raise AlgebraError("idempotents do not sum to the unit")
        self._check_radical()

    def _check_radical(self):
        p, n = self.p, self.dim
        jb = self.radical
        for x in jb:
            prods = np.vstack(
                [self.mul(b, x) for b in np.eye(n, dtype=np.int64)]
                + [self.mul(x, b) for b in np.eye(n, dtype=np.int64)]
            )
            if not la.contains(jb, prods, p):
                raise AlgebraError("radical is not a two-sided ideal")
        if n - len(jb) != self.num_vertices:
            raise AlgebraError(
                "idempotents are not primitive with one-dimensional tops "
                f"(dim A/J = {n - len(jb)}, {self.num_vertices} idempotents)"
            )
        if self.radical_powers()[-1].shape[0] != 0:
            raise AlgebraError("radical is not nilpotent")

    def radical_powers(self):
        """[J^0 = A, J, J^2, ..., 0] as canonical row bases."""
        if "radpow" in self._cache:
            return self._cache["radpow"]
        n, p = self.dim, self.p
        powers = [np.eye(n, dtype=np.int64), self.radical]
        while len(powers[-1]) and len(powers) <= n + 2:
            prods = [self.mul(x, y) for x in powers[-1] for y in self.radical]
            nxt = la.row_space(np.array(prods).reshape(-1, n), p, n)
            if np.array_equal(nxt, powers[-1]):
                break
            powers.append(nxt)
        self._cache["radpow"] = powers
        return powers

    @property
    def loewy_length(self):
        return len(self.radical_powers()) - 1

    # -- idempotent pieces --------------------------------------------------
    def corner(self, i, j):
        """Canonical basis of e_i A e_j."""
        key = ("corner", i, j)
        if key not in self._cache:
            m = la.matmul(self.left_matrix(self.idempotents[i]), self.right_matrix(self.idempotents[j]), self.p)
            self._cache[key] = la.column_space(m, self.p)
        return self._cache[key]

    def proj_basis(self, i):
        """Canonical basis of the indecomposable projective A e_i."""
        key = ("proj", i)
        if key not in self._cache:
            self._cache[key] = la.column_space(self.right_matrix(self.idempotents[i]), self.p)
        return self._cache[key]

    def proj_action(self, i):
        """Left-multiplication matrices of every basis element on A e_i."""
        key = ("projact", i)
        if key not in self._cache:
            basis = self.proj_basis(i)
            piv = la.pivots_of(basis)
            mats = np.zeros((self.dim, len(basis), len(basis)), dtype=np.int64)
            for b in range(self.dim):
                img = la.matmul(basis, self.left_matrix(self.basis_vector(b)).T, self.p)
                mats[b] = la.coords(img, basis, self.p, piv).T
            self._cache[key] = mats
        return self._cache[key]

    def vertex_of(self, vec):
        """Index i with vec in A e_i (for right-homogeneous vectors), else None."""
        for i, e in enumerate(self.idempotents):
            if np.array_equal(self.mul(vec, e), np.asarray(vec) % self.p):
                return i
        return None

    # -- generators and word basis -----------------------------------------
    def _derive_generators(self):
        gens = [
            Generator(f"e{self.vertex_names[i]}", e.copy(), i, i)
            for i, e in enumerate(self.idempotents)
        ]
        powers = self.radical_powers()
        j2 = powers[2] if len(powers) > 2 else np.zeros((0, self.dim), dtype=np.int64)
        count = 0
        for t in range(self.num_vertices):
            for s in range(self.num_vertices):
                block = la.intersection(self.corner(t, s), self.radical, self.p)
                if len(block) == 0:
                    continue
                block_j2 = la.intersection(self.corner(t, s), j2, self.p) if len(j2) else j2
                for v in la.complement(block_j2, block, self.p):
                    # lift back into e_t J e_s
                    lifted = self.mul(self.mul(self.idempotents[t], v), self.idempotents[s])
                    gens.append(Generator(f"g{count}", lifted, s, t))
                    count += 1
        return gens

    def _build_word_basis(self):
        n, p = self.dim, self.p
        words, vecs = [], []
        span = np.zeros((0, n), dtype=np.int64)
        frontier = []
        for gi, g in enumerate(self.generators):
            if not la.contains(span, g.vec, p):
                words.append((gi,))
                vecs.append(g.vec)
                frontier.append(((gi,), g.vec))
                span = la.row_space(np.vstack([span, g.vec]), p, n)
        while frontier and len(words) < n:
            nxt = []
            for word, vec in frontier:
                for gi, g in enumerate(self.generators):
                    prod = self.mul(g.vec, vec)
                    if not prod.any() or la.contains(span, prod, p):
                        continue
                    w = (gi,) + word
                    words.append(w)
                    vecs.append(prod)
                    nxt.append((w, prod))
                    span = la.row_space(np.vstack([span, prod]), p, n)
            frontier = nxt
        if len(words) != n:
            raise AlgebraError("generators do not generate the algebra")
        self.words = words
        self._word_inverse = la.inverse(np.array(vecs).T, p)  # basis coords -> word coords

    def rho_from_generators(self, gen_mats):
        """Action matrices of every basis element from matrices of the generators."""
        p = self.p
        gen_mats = [np.asarray(m, dtype=np.int64) % p for m in gen_mats]
        d = gen_mats[0].shape[0] if gen_mats else 0
        word_mats = []
        for w in self.words:
            m = gen_mats[w[0]]
            for gi in w[1:]:
                m = la.matmul(m, gen_mats[gi], p)
            word_mats.append(m)
        stack = np.array(word_mats).reshape(self.dim, d * d)
        out = la.matmul(self._word_inverse, stack, p)
        return out.reshape(self.dim, d, d)

    # -- derived algebras ------------------------------------------------
    @property
    def opposite(self):
        if self._opposite is None:
            op = Algebra(
                self.p,
                self.constants.transpose(1, 0, 2),
                self.unit,
                self.idempotents,
                self.radical,
                vertex_names=self.vertex_names,
                basis_labels=self.basis_labels,
                generators=[Generator(g.name, g.vec, g.target, g.source) for g in self.generators],
                name=(self.name + "^op") if self.name else None,
                check=False,
            )
            op._opposite = self
            self._opposite = op
        return self._opposite

    def is_semisimple(self):
        return len(self.radical) == 0

    def digest(self):
        """Content hash of a canonical serialization of the structure."""
        h = hashlib.sha256()
        h.update(f"p={self.p};n={self.dim};m={self.num_vertices};".encode())
        h.update(self.constants.astype("<i8").tobytes())
        h.update(self.unit.astype("<i8").tobytes())
        for e in self.idempotents:
            h.update(e.astype("<i8").tobytes())
        return h.hexdigest()

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<Algebra{tag} dim={self.dim} vertices={self.num_vertices} p={self.p}>"


# ---------------------------------------------------------------------------
# construction from a bound quiver


def _paths(quiver: QuiverSpec, max_len: int) -> list[Path]:
    out: list[Path] = [(v, v, ()) for v in quiver.vertices]
    layer = list(out)
    for _ in range(max_len):
        nxt = []
        for src, tgt, arrows in layer:
            for name, s, t in quiver.arrows:
                if s == tgt:
                    nxt.append((src, t, arrows + (name,)))
        out.extend(nxt)
        layer = nxt
    return out


def _concat(q: Path, r: Path):
    """Traverse q then r; None if not composable."""
    if q[1] != r[0]:
        return None
    return (q[0], r[1], q[2] + r[2])


def _path_key(path: Path):
    return (len(path[2]), path[2], path[0])


def build_algebra(pres: Presentation, name=None) -> Algebra:
    """Build kQ/I from a bound-quiver presentation.

    The degree < L slice of the ideal is spanned by u*r*v for relations r and
    paths u, v; J^L being inside the ideal is checked on the length-L slice.
    """
    quiver, L, p = pres.quiver, pres.nilpotency, pres.p
    rels = []
    for rel in pres.relations:
        terms = {}
        ends = set()
        for word, coeff in rel.items():
            coeff %= p
            if not coeff:
                continue
            word = tuple(word)
            if len(word) < 2:
                raise AlgebraError(f"relation term {'*'.join(reversed(word)) or '(trivial)'} has length < 2")
            arrows = [quiver.arrow(a) for a in word]
            for x, y in zip(arrows, arrows[1:]):
                if x[2] != y[1]:
                    raise AlgebraError(f"path {'*'.join(reversed(word))} is not composable")
            path = (arrows[0][1], arrows[-1][2], word)
            ends.add((path[0], path[1]))
            terms[path] = (terms.get(path, 0) + coeff) % p
        if len(ends) > 1:
            raise AlgebraError("relation mixes paths with different endpoints")
        if terms:
            rels.append(terms)

    all_paths = sorted(_paths(quiver, L), key=_path_key)
    # columns: longest paths first so that pivots fall on long paths
    cols = sorted(all_paths, key=_path_key, reverse=True)
    col_of = {path: i for i, path in enumerate(cols)}
    ideal_rows = []
    for rel in rels:
        src, tgt = next(iter(rel))[:2]
        shortest = min(len(path[2]) for path in rel)
        for v in all_paths:
            if v[1] != src:
                continue
            for u in all_paths:
                if u[0] != tgt or len(v[2]) + len(u[2]) + shortest > L:
                    continue
                row = np.zeros(len(cols), dtype=np.int64)
                for path, coeff in rel.items():
                    full = _concat(_concat(v, path), u)
                    if len(full[2]) <= L:
                        row[col_of[full]] = (row[col_of[full]] + coeff) % p
                if row.any():
                    ideal_rows.append(row)
    ideal = la.row_space(np.array(ideal_rows).reshape(-1, len(cols)), p, len(cols))
    for path in all_paths:
        if len(path[2]) == L:
            vec = np.zeros(len(cols), dtype=np.int64)
            vec[col_of[path]] = 1
            if not la.contains(ideal, vec, p):
                raise AlgebraError(
                    f"path {path_label(path)} of length {L} is not in the ideal; "
                    "nilpotency degree too small"
                )
    # restrict to paths of length < L: drop the length-L columns
    short = [i for i, path in enumerate(cols) if len(path[2]) < L]
    ideal_short = la.row_space(ideal[:, short], p, len(short)) if len(ideal) else np.zeros((0, len(short)), dtype=np.int64)
    short_cols = [cols[i] for i in short]
    piv = la.pivots_of(ideal_short)
    piv_set = set(piv)
    basis_paths = sorted((short_cols[i] for i in range(len(short_cols)) if i not in piv_set), key=_path_key)
    index = {path: k for k, path in enumerate(basis_paths)}
    n = len(basis_paths)
    short_col_of = {path: i for i, path in enumerate(short_cols)}
    nonpiv_cols = [short_col_of[path] for path in basis_paths]

    def normal_form(path):
        out = np.zeros(n, dtype=np.int64)
        if path is None or len(path[2]) >= L:
            return out
        c = short_col_of[path]
        if c in piv_set:
            row = ideal_short[piv.index(c)]
            out = (-row[nonpiv_cols]) % p
        else:
            out[index[path]] = 1
        return out

    constants = np.zeros((n, n, n), dtype=np.int64)
    for i, bi in enumerate(basis_paths):
        for j, bj in enumerate(basis_paths):
            # b_i * b_j: traverse b_j then b_i
            constants[i, j] = normal_form(_concat(bj, bi))
    vertices = list(quiver.vertices)
    idempotents = [normal_form((v, v, ())) for v in vertices]
    unit = sum(idempotents) % p
    radical = np.array([np.eye(n, dtype=np.int64)[k] for k, path in enumerate(basis_paths) if path[2]]).reshape(-1, n)
    vidx = {v: i for i, v in enumerate(vertices)}
    gens = [Generator(v, idempotents[i], i, i) for i, v in enumerate(vertices)]
    for aname, s, t in quiver.arrows:
        if L > 1:
            gens.append(Generator(aname, normal_form((s, t, (aname,))), vidx[s], vidx[t]))
    alg = Algebra(
        p,
        constants,
        unit,
        idempotents,
        radical,
        vertex_names=vertices,
        basis_labels=[path_label(b) for b in basis_paths],
        generators=gens,
        name=name,
    )
    alg.presentation = pres
    return alg


# ---------------------------------------------------------------------------
# construction from structure constants


def _frobenius_scalar(alg_mul, x, unit, p, dim):
    """For x in a local algebra with residue field GF(p), return c with x - c*1 nilpotent.

    Uses x^(p^s) = c * 1 once p^s >= dim, valid because c^p = c in GF(p).
    Returns None when x^(p^s) is not a scalar multiple of the unit.
    """
    power = 1
    y = x.copy()
    while power < max(dim, 1) + 1:
        # y <- y^p
        z = unit.copy()
        base = y
        e = p
        while e:
            if e & 1:
                z = alg_mul(z, base)
            base = alg_mul(base, base)
            e >>= 1
        y = z
        power *= p
    nz = np.flatnonzero(unit)
    c = int(y[nz[0]]) if len(nz) else 0
    if not np.array_equal(y, (c * unit) % p):
        return None
    return c


def build_from_constants(dim, constants, unit, idempotents, p, *, vertex_names=None, basis_labels=None, name=None):
    """Validate raw structure constants and compute the radical.

    The radical is assembled as the off-diagonal corners e_i A e_j (i != j)
    plus, in each local corner e_i A e_i, the kernel of the residue character,
    computed by Frobenius powering. The result is checked to be a nilpotent
    two-sided ideal with quotient of dimension equal to the idempotent count,
    which rejects non-primitive idempotents.
    """
    if not is_prime(p):
        raise AlgebraError(f"field characteristic {p} is not prime")
    constants = np.asarray(constants, dtype=np.int64).reshape(dim, dim, dim) % p
    unit = np.asarray(unit, dtype=np.int64) % p
    idempotents = [np.asarray(e, dtype=np.int64) % p for e in idempotents]
    probe = Algebra(p, constants, unit, idempotents, np.eye(dim, dtype=np.int64), check=False, derive=False)
    # basic checks that do not involve the radical
    for i, e in enumerate(idempotents):
        for j, f in enumerate(idempotents):
            expect = e if i == j else np.zeros(dim, dtype=np.int64)
            if not np.array_equal(probe.mul(e, f), expect):
                raise AlgebraError("idempotents are not orthogonal idempotents")
    if not np.array_equal(sum(idempotents) % p, unit):
        raise AlgebraError("idempotents do not sum to the unit")
    rad_rows = []
    m = len(idempotents)
    for i in range(m):
        for j in range(m):
            block = probe.corner(i, j)
            if i != j:
                rad_rows.extend(block)
                continue
            ei = idempotents[i]
            chars = []
            for x in block:
                c = _frobenius_scalar(probe.mul, x, ei, p, dim)
                if c is None:
                    raise AlgebraError(f"idempotent {i} is not primitive (corner algebra is not local)")
                chars.append(c)
            # kernel of the character on this corner
            chars = np.array(chars, dtype=np.int64).reshape(1, -1)
            ker = la.kernel_basis(chars, p)
            if len(block):
                rad_rows.extend(la.matmul(ker, block, p))
    radical = np.array(rad_rows, dtype=np.int64).reshape(-1, dim)
    return Algebra(
        p,
        constants,
        unit,
        idempotents,
        radical,
        vertex_names=vertex_names,
        basis_labels=basis_labels,
        name=name,
    )


def regular_module(alg: Algebra):
    """The left regular module A acting on itself by left multiplication."""
    from .modules import Module

    mats = np.array([alg.left_matrix(alg.basis_vector(b)) for b in range(alg.dim)])
    return Module(alg, mats, name="regular")


def opposite(alg: Algebra) -> Algebra:
    return alg.opposite


# ---------------------------------------------------------------------------
# standard fixtures


def quiver_algebra(vertices, arrows, relations=(), nilpotency=2, p=2, name=None):
    """Convenience wrapper: relations given as {"b*a": coeff} dictionaries or strings."""
    quiver = QuiverSpec(tuple(str(v) for v in vertices), tuple((a, str(s), str(t)) for a, s, t in arrows))
    rels = []
    for r in relations:
        if isinstance(r, str):
            r = {r: 1}
        rels.append({tuple(reversed(word.split("*"))): c for word, c in r.items()})
    return build_algebra(Presentation(quiver, tuple(rels), nilpotency, p), name=name)


def fixture(name: str) -> Algebra:
    """Small named algebras used throughout the tests and the verification suite."""
    if name == "semisimple":
        return quiver_algebra(["1", "2"], [], nilpotency=1, name=name)
    if name == "dual_numbers":
        return quiver_algebra(["1"], [("x", "1", "1")], ["x*x"], nilpotency=2, name=name)
    if name == "a2":
        return quiver_algebra(["1", "2"], [("a", "1", "2")], nilpotency=2, name=name)
    if name == "fork":
        return quiver_algebra(["1", "2", "3"], [("a", "1", "2"), ("b", "1", "3")], nilpotency=2, name=name)
    if name == "a3_rad2":
        return quiver_algebra(
            ["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")], ["b*a"], nilpotency=2, name=name
        )
    raise KeyError(name)


FIXTURES = ("semisimple", "dual_numbers", "a2", "fork", "a3_rad2")
