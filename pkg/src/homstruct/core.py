"""Exact scalars, bilinear maps, linear maps, presentations and the file format.

Everything downstream works with coefficient vectors over exact rationals
(``fractions.Fraction``).  A coefficient may also be an unbound parameter,
stored as its name (optionally prefixed with "-"); all checkers and builders
require fully bound presentations and raise UnboundParameterError otherwise.

Conventions:
  * BilinearMap entry (i, j, k, c) means op(e_i, e_j) has e_k-coefficient c.
  * LinearMap matrix m is column-convention: f(e_c) = sum_r m[r][c] e_r.
  * Indices are 0-based internally; basis names ("e1", ...) are 1-based labels.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction

RATIONAL_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?$")
NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")

ZERO = Fraction(0)
ONE = Fraction(1)


class FormatError(ValueError):
    """A document does not conform to the interchange format."""


class DimensionError(ValueError):
    """Shapes of the supplied objects do not match."""


class UnboundParameterError(ValueError):
    """A parametric presentation was used where concrete scalars are required."""


class MissingOperationError(KeyError):
    """A required op or map is absent from the presentation."""


class PreconditionError(ValueError):
    """A builder's gate check failed; carries the offending report when present."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ConstructionError(AssertionError):
    """A construction's asserted closure property failed to verify."""


# ---------------------------------------------------------------------------
# coefficients

def parse_coefficient(s, params=()):
    """Parse a coefficient token: rational string, parameter name or -name."""
    if not isinstance(s, str):
        raise FormatError("coefficient must be a string, got %r" % (s,))
    if RATIONAL_RE.match(s):
        return Fraction(s)
    if s in params:
        return s
    if s.startswith("-") and s[1:] in params:
        return s
    raise FormatError("bad coefficient %r (not a rational or declared parameter)" % s)


def coefficient_str(c):
    return c if isinstance(c, str) else str(c)


def substitute_coefficient(c, binding):
    if isinstance(c, Fraction):
        return c
    if c.startswith("-"):
        name, sign = c[1:], -1
    else:
        name, sign = c, 1
    if name not in binding:
        raise UnboundParameterError("parameter %r is unbound" % name)
    return sign * binding[name]


def require_bound(c, what="coefficient"):
    if not isinstance(c, Fraction):
        raise UnboundParameterError("unbound parameter %r in %s" % (c, what))
    return c


# ---------------------------------------------------------------------------
# vectors

def zero_vec(n):
    return (ZERO,) * n


def basis_vec(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x):
    return tuple(c * a for a in x)


def vec_neg(x):
    return tuple(-a for a in x)


def vec_is_zero(x):
    return all(a == 0 for a in x)


# ---------------------------------------------------------------------------
# bilinear maps

@dataclass(frozen=True)
class BilinearMap:
    """Sparse rank-3 structure-constant tensor on a dim-dimensional space."""

    dim: int
    entries: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("dim must be positive")
        seen = set()
        cleaned = []
        for e in self.entries:
            i, j, k, c = e
            if not (0 <= i < self.dim and 0 <= j < self.dim and 0 <= k < self.dim):
                raise FormatError("entry index out of range: %r (dim %d)" % (e, self.dim))
            if (i, j, k) in seen:
                raise FormatError("duplicate entry for (%d,%d,%d)" % (i, j, k))
            seen.add((i, j, k))
            if isinstance(c, Fraction) and c == 0:
                continue
            cleaned.append((i, j, k, c))
        cleaned.sort(key=lambda e: (e[0], e[1], e[2]))
        object.__setattr__(self, "entries", tuple(cleaned))

    @property
    def is_zero(self):
        return not self.entries

    def is_bound(self):
        return all(isinstance(c, Fraction) for (_, _, _, c) in self.entries)

    def table(self):
        """Dense product table: table[i][j] is the vector op(e_i, e_j)."""
        n = self.dim
        t = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k, c) in self.entries:
            t[i][j][k] = require_bound(c)
        return [[tuple(v) for v in row] for row in t]


def bilinear_from_table(dim, fn):
    """Build a BilinearMap from a function (i, j) -> coefficient vector."""
    entries = []
    for i in range(dim):
        for j in range(dim):
            v = fn(i, j)
            for k, c in enumerate(v):
                if c != 0:
                    entries.append((i, j, k, c))
    return BilinearMap(dim, tuple(entries))


def eval_bilinear(op, x, y):
    """Evaluate op at coefficient vectors x, y (bilinear extension)."""
    if len(x) != op.dim or len(y) != op.dim:
        raise DimensionError("vector length does not match op dim %d" % op.dim)
    res = [ZERO] * op.dim
    for (i, j, k, c) in op.entries:
        t = x[i] * y[j]
        if t:
            res[k] += t * require_bound(c)
    return tuple(res)


# ---------------------------------------------------------------------------
# linear maps

@dataclass(frozen=True)
class LinearMap:
    """Matrix with column convention f(e_c) = sum_r m[r][c] e_r."""

    rows: int
    cols: int
    m: tuple = ()

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionError("matrix shape must be positive")
        if len(self.m) != self.rows or any(len(r) != self.cols for r in self.m):
            raise FormatError("matrix shape mismatch")
        object.__setattr__(self, "m", tuple(tuple(r) for r in self.m))

    @staticmethod
    def from_rows(rows):
        rows = [tuple(r) for r in rows]
        return LinearMap(len(rows), len(rows[0]), tuple(rows))

    @staticmethod
    def identity(n):
        return LinearMap.from_rows(
            [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows, cols=None):
        cols = rows if cols is None else cols
        return LinearMap.from_rows([[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def diagonal(values):
        values = list(values)
        n = len(values)
        return LinearMap.from_rows(
            [[values[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def from_columns(cols):
        cols = [tuple(c) for c in cols]
        return LinearMap.from_rows(
            [[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])

    def is_bound(self):
        return all(isinstance(c, Fraction) for row in self.m for c in row)

    def require_bound(self):
        for row in self.m:
            for c in row:
                require_bound(c, "linear map")
        return self

    @property
    def is_square(self):
        return self.rows == self.cols

    def is_identity(self):
        return self.is_square and self == LinearMap.identity(self.rows)

    def is_zero(self):
        return all(c == 0 for row in self.m for c in row)

    def column(self, c):
        return tuple(self.m[r][c] for r in range(self.rows))

    def transpose(self):
        return LinearMap.from_rows(
            [[self.m[r][c] for r in range(self.rows)] for c in range(self.cols)])

    def flat(self):
        return tuple(c for row in self.m for c in row)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionError("matrix product shape mismatch")
        self.require_bound()
        other.require_bound()
        return LinearMap.from_rows(
            [[sum((self.m[r][t] * other.m[t][c] for t in range(self.cols)), ZERO)
              for c in range(other.cols)] for r in range(self.rows)])

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("matrix sum shape mismatch")
        return LinearMap.from_rows(
            [[require_bound(a) + require_bound(b) for a, b in zip(r1, r2)]
             for r1, r2 in zip(self.m, other.m)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LinearMap.from_rows([[-require_bound(c) for c in row] for row in self.m])

    def scale(self, s):
        return LinearMap.from_rows([[s * require_bound(c) for c in row] for row in self.m])

    def power(self, n):
        if not self.is_square:
            raise DimensionError("power of a non-square map")
        out = LinearMap.identity(self.rows)
        for _ in range(n):
            out = out @ self
        return out

    def det(self):
        if not self.is_square:
            raise DimensionError("determinant of a non-square map")
        self.require_bound()
        n = self.rows
        m = [list(row) for row in self.m]
        d = ONE
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c] != 0), None)
            if piv is None:
                return ZERO
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = -d
            d *= m[c][c]
            inv = 1 / m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] * inv
                if f:
                    for cc in range(c, n):
                        m[r][cc] -= f * m[c][cc]
        return d

    def inverse(self):
        if not self.is_square:
            raise DimensionError("inverse of a non-square map")
        self.require_bound()
        n = self.rows
        m = [list(row) + [ONE if i == r else ZERO for i in range(n)]
             for r, row in enumerate(self.m)]
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c] != 0), None)
            if piv is None:
                raise DimensionError("map is singular")
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
            inv = 1 / m[c][c]
            m[c] = [v * inv for v in m[c]]
            for r in range(n):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [v - f * w for v, w in zip(m[r], m[c])]
        return LinearMap.from_rows([row[n:] for row in m])


def apply_map(f, x):
    """Matrix-vector product under the column convention."""
    if len(x) != f.cols:
        raise DimensionError("vector length %d does not match cols %d" % (len(x), f.cols))
    return tuple(
        sum((require_bound(f.m[r][c]) * x[c] for c in range(f.cols) if x[c]), ZERO)
        for r in range(f.rows))


def block_diag(f, g):
    n, p = f.rows, g.rows
    rows = []
    for r in range(n):
        rows.append(list(f.m[r]) + [ZERO] * g.cols)
    for r in range(p):
        rows.append([ZERO] * f.cols + list(g.m[r]))
    return LinearMap.from_rows(rows)


def linear_combination(mats, x):
    """sum_i x_i * mats[i] for a coefficient vector x over the algebra."""
    if len(mats) != len(x):
        raise DimensionError("family size does not match vector length")
    out = LinearMap.zero(mats[0].rows, mats[0].cols)
    for c, mat in zip(x, mats):
        if c != 0:
            out = out + mat.scale(c)
    return out


# ---------------------------------------------------------------------------
# presentations

def default_basis(n):
    return tuple("e%d" % (i + 1) for i in range(n))


@dataclass(frozen=True)
class AlgebraPresentation:
    """Dimension + named bilinear ops + named linear maps + free parameters.

    Canonical op names: "dot", "bracket", "star"; canonical map name "alpha"
    (others hold derivations or auxiliary twist data).
    """

    dim: int
    ops: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    basis: tuple = ()
    params: tuple = ()

    def __post_init__(self):
        if not self.basis:
            object.__setattr__(self, "basis", default_basis(self.dim))
        if len(self.basis) != self.dim:
            raise FormatError("basis names do not match dim")
        for name, op in self.ops.items():
            if op.dim != self.dim:
                raise DimensionError("op %r has dim %d, expected %d" % (name, op.dim, self.dim))
        for name, f in self.maps.items():
            if f.is_square and f.rows != self.dim:
                raise DimensionError("map %r has dim %d, expected %d" % (name, f.rows, self.dim))

    def op(self, name):
        if name not in self.ops:
            raise MissingOperationError("op %r is missing" % name)
        return self.ops[name]

    def map(self, name):
        if name not in self.maps:
            raise MissingOperationError("map %r is missing" % name)
        return self.maps[name]

    @property
    def alpha(self):
        return self.map("alpha")

    def is_bound(self):
        return (all(op.is_bound() for op in self.ops.values())
                and all(f.is_bound() for f in self.maps.values()))

    def require_bound(self):
        if self.params or not self.is_bound():
            raise UnboundParameterError(
                "presentation has unbound parameters %r" % (self.params,))
        return self


@dataclass(frozen=True)
class RepresentationPresentation:
    """Action matrix families on a module plus the module twist beta.

    Canonical action names: "s", "rho", "l", "r"; each family has one
    module_dim-square matrix per algebra basis element.
    """

    algebra_dim: int
    module_dim: int
    actions: dict = field(default_factory=dict)
    beta: LinearMap = None
    params: tuple = ()

    def __post_init__(self):
        if self.beta is None:
            object.__setattr__(self, "beta", LinearMap.identity(self.module_dim))
        if self.beta.rows != self.module_dim or self.beta.cols != self.module_dim:
            raise DimensionError("beta must be module_dim-square")
        for name, fam in self.actions.items():
            fam = tuple(fam)
            if len(fam) != self.algebra_dim:
                raise DimensionError("action %r must have %d members" % (name, self.algebra_dim))
            for mat in fam:
                if mat.rows != self.module_dim or mat.cols != self.module_dim:
                    raise DimensionError("action %r matrices must be module_dim-square" % name)
            self.actions[name] = fam

    def action(self, name):
        if name not in self.actions:
            raise MissingOperationError("action %r is missing" % name)
        return self.actions[name]

    def of(self, name, x):
        """Action matrix of the algebra element with coefficient vector x."""
        return linear_combination(self.action(name), x)

    def is_bound(self):
        return (self.beta.is_bound()
                and all(m.is_bound() for fam in self.actions.values() for m in fam))

    def require_bound(self):
        if self.params or not self.is_bound():
            raise UnboundParameterError("representation has unbound parameters")
        return self


@dataclass(frozen=True)
class BilinearFormPresentation:
    dim: int
    B: LinearMap = None

    def __post_init__(self):
        if self.B is None:
            object.__setattr__(self, "B", LinearMap.zero(self.dim))
        if self.B.rows != self.dim or self.B.cols != self.dim:
            raise DimensionError("form matrix must be dim-square")

    def value(self, x, y):
        return sum(
            (require_bound(self.B.m[i][j]) * x[i] * y[j]
             for i in range(self.dim) for j in range(self.dim)
             if x[i] and y[j]), ZERO)

    def is_symmetric(self):
        return self.B == self.B.transpose()

    def is_nondegenerate(self):
        return self.B.det() != 0


# ---------------------------------------------------------------------------
# check reports

@dataclass
class CheckReport:
    """Verdict plus violation witnesses (identity id, basis tuple, residual)."""

    witnesses: list = field(default_factory=list)
    checked: int = 0
    failures: int = 0
    sub_reports: dict = field(default_factory=dict)
    notes: tuple = ()

    @property
    def passed(self):
        return (self.failures == 0 and not self.witnesses
                and all(r.passed for r in self.sub_reports.values()))

    def all_witnesses(self):
        out = list(self.witnesses)
        for name, sub in sorted(self.sub_reports.items()):
            out.extend(sub.all_witnesses())
        return out


def run_identity_families(dim, families, max_witnesses=32, sub_reports=None, notes=()):
    """Evaluate residual functions on all basis tuples; collect sorted witnesses.

    families: iterable of (identity_id, arity, fn) where fn maps a basis index
    tuple to a residual coefficient vector (zero means the identity holds).
    """
    witnesses = []
    checked = 0
    failures = 0
    for (ident, arity, fn) in families:
        for tup in _tuples(dim, arity):
            checked += 1
            res = fn(*tup)
            if not vec_is_zero(res):
                failures += 1
                witnesses.append((ident, tup, tuple(res)))
    witnesses.sort(key=lambda w: (w[0], w[1]))
    return CheckReport(
        witnesses=witnesses[:max_witnesses],
        checked=checked,
        failures=failures,
        sub_reports=dict(sub_reports or {}),
        notes=tuple(notes))


def _tuples(dim, arity):
    if arity == 0:
        yield ()
        return
    for head in _tuples(dim, arity - 1):
        for i in range(dim):
            yield head + (i,)


# ---------------------------------------------------------------------------
# parameter substitution

def substitute_params(p, binding):
    """Return a parameter-free copy of an algebra or representation presentation."""
    binding = {k: Fraction(v) for k, v in binding.items()}
    if isinstance(p, AlgebraPresentation):
        missing = [name for name in p.params if name not in binding]
        if missing:
            raise UnboundParameterError("missing bindings for %r" % (missing,))
        ops = {name: BilinearMap(op.dim, tuple(
                   (i, j, k, substitute_coefficient(c, binding))
                   for (i, j, k, c) in op.entries))
               for name, op in p.ops.items()}
        maps = {name: LinearMap.from_rows(
                    [[substitute_coefficient(c, binding) for c in row] for row in f.m])
                for name, f in p.maps.items()}
        return AlgebraPresentation(p.dim, ops, maps, p.basis, ())
    if isinstance(p, RepresentationPresentation):
        missing = [name for name in p.params if name not in binding]
        if missing:
            raise UnboundParameterError("missing bindings for %r" % (missing,))
        sub = lambda f: LinearMap.from_rows(
            [[substitute_coefficient(c, binding) for c in row] for row in f.m])
        actions = {name: tuple(sub(mat) for mat in fam) for name, fam in p.actions.items()}
        return RepresentationPresentation(
            p.algebra_dim, p.module_dim, actions, sub(p.beta), ())
    raise TypeError("cannot substitute into %r" % type(p).__name__)


# ---------------------------------------------------------------------------
# interchange format

def _coeff_out(c):
    return coefficient_str(c)


def _matrix_out(f):
    return [[_coeff_out(c) for c in row] for row in f.m]


def _matrix_in(doc, params, what, rows=None, cols=None):
    if (not isinstance(doc, list) or not doc
            or any(not isinstance(r, list) for r in doc)):
        raise FormatError("%s: matrix must be a non-empty array of rows" % what)
    parsed = [[parse_coefficient(c, params) for c in row] for row in doc]
    f = LinearMap.from_rows(parsed)
    if rows is not None and (f.rows, f.cols) != (rows, cols):
        raise DimensionError("%s: expected %dx%d matrix, got %dx%d"
                             % (what, rows, cols, f.rows, f.cols))
    return f


def _entries_in(doc, dim, params, what):
    if not isinstance(doc, list):
        raise FormatError("%s: entries must be an array" % what)
    entries = []
    for pos, e in enumerate(doc):
        if not isinstance(e, dict) or set(e) != {"i", "j", "k", "c"}:
            raise FormatError('%s entry %d: expected {"i","j","k","c"}' % (what, pos))
        i, j, k = e["i"], e["j"], e["k"]
        if not all(isinstance(v, int) for v in (i, j, k)):
            raise FormatError("%s entry %d: indices must be integers" % (what, pos))
        if not all(0 <= v < dim for v in (i, j, k)):
            raise FormatError("%s entry %d: index out of range for dim %d" % (what, pos, dim))
        entries.append((i, j, k, parse_coefficient(e["c"], params)))
    return entries


def _entries_out(entries):
    return [{"i": i, "j": j, "k": k, "c": _coeff_out(c)} for (i, j, k, c) in entries]


def _load(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("syntax error at line %d column %d: %s"
                          % (exc.lineno, exc.colno, exc.msg)) from None
    if not isinstance(doc, dict):
        raise FormatError("top-level value must be an object")
    return doc


def _common_header(doc):
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise FormatError('"dim" must be a positive integer')
    params = tuple(doc.get("params", ()))
    for name in params:
        if not NAME_RE.match(name):
            raise FormatError("bad parameter name %r" % name)
    basis = tuple(doc.get("basis", default_basis(dim)))
    return dim, basis, params


def parse_algebra(text):
    doc = _load(text)
    dim, basis, params = _common_header(doc)
    ops = {}
    for name, raw in doc.get("ops", {}).items():
        try:
            ops[name] = BilinearMap(dim, tuple(_entries_in(raw, dim, params, "op %r" % name)))
        except DimensionError as exc:
            raise FormatError(str(exc)) from None
    maps = {name: _matrix_in(raw, params, "map %r" % name, dim, dim)
            for name, raw in doc.get("maps", {}).items()}
    return AlgebraPresentation(dim, ops, maps, basis, params)


def serialize_algebra(p):
    doc = {"dim": p.dim, "basis": list(p.basis)}
    if p.params:
        doc["params"] = list(p.params)
    doc["ops"] = {name: _entries_out(p.ops[name].entries) for name in sorted(p.ops)}
    doc["maps"] = {name: _matrix_out(p.maps[name]) for name in sorted(p.maps)}
    return json.dumps(doc, indent=2) + "\n"


def parse_representation(text):
    doc = _load(text)
    adim = doc.get("algebra_dim", doc.get("dim"))
    if not isinstance(adim, int) or adim < 1:
        raise FormatError('"algebra_dim" must be a positive integer')
    mdim = doc.get("module_dim")
    if not isinstance(mdim, int) or mdim < 1:
        raise FormatError('"module_dim" must be a positive integer')
    params = tuple(doc.get("params", ()))
    actions = {}
    for name, fam in doc.get("actions", {}).items():
        if not isinstance(fam, list) or len(fam) != adim:
            raise FormatError("action %r must list %d matrices" % (name, adim))
        actions[name] = tuple(
            _matrix_in(mat, params, "action %r[%d]" % (name, idx), mdim, mdim)
            for idx, mat in enumerate(fam))
    if "beta" not in doc:
        raise FormatError('"beta" is required')
    beta = _matrix_in(doc["beta"], params, "beta", mdim, mdim)
    return RepresentationPresentation(adim, mdim, actions, beta, params)


def serialize_representation(rep):
    doc = {"algebra_dim": rep.algebra_dim, "module_dim": rep.module_dim}
    if rep.params:
        doc["params"] = list(rep.params)
    doc["actions"] = {name: [_matrix_out(m) for m in rep.actions[name]]
                      for name in sorted(rep.actions)}
    doc["beta"] = _matrix_out(rep.beta)
    return json.dumps(doc, indent=2) + "\n"


def parse_form(text):
    doc = _load(text)
    dim, _, params = _common_header(doc)
    if "B" not in doc:
        raise FormatError('"B" is required')
    return BilinearFormPresentation(dim, _matrix_in(doc["B"], params, "B", dim, dim))


def serialize_form(form):
    doc = {"dim": form.dim, "B": _matrix_out(form.B)}
    return json.dumps(doc, indent=2) + "\n"


def parse_o_operator(text):
    """Parse a file holding an O-operator matrix T (rows = dim A, cols = dim V)."""
    doc = _load(text)
    if "T" not in doc:
        raise FormatError('"T" is required')
    return _matrix_in(doc["T"], (), "T")


def serialize_o_operator(T):
    return json.dumps({"T": _matrix_out(T)}, indent=2) + "\n"


def parse_comultiplications(text):
    """Parse comultiplication entries stored under the "coops" key.

    Returns (dim, {name: entries}) with entry (i, j, k, c) meaning the image
    of e_i has e_j (x) e_k coefficient c.
    """
    doc = _load(text)
    dim, _, params = _common_header(doc)
    coops = {}
    for name, raw in doc.get("coops", {}).items():
        coops[name] = tuple(_entries_in(raw, dim, params, "coop %r" % name))
    return dim, coops


def serialize_comultiplications(dim, coops):
    doc = {"dim": dim,
           "coops": {name: _entries_out(sorted(coops[name])) for name in sorted(coops)}}
    return json.dumps(doc, indent=2) + "\n"
