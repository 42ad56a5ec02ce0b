"""Builders that produce new algebras from old ones, with verified closure.

Every builder checks its hypotheses first (raising PreconditionError with the
failing report) and re-checks its output against the target class checker
(raising ConstructionError if the guaranteed closure fails).
"""

from __future__ import annotations

from fractions import Fraction

from homstruct.axioms import (
    CLASS_OPS,
    check_class,
    check_derivation,
    check_morphism,
    check_multiplicative,
    resolve_class,
)
from homstruct.core import (
    AlgebraPresentation,
    BilinearMap,
    ConstructionError,
    LinearMap,
    PreconditionError,
    apply_map,
    basis_vec,
    bilinear_from_table,
    block_diag,
    eval_bilinear,
    vec_sub,
)


def _require(report, message):
    if not report.passed:
        raise PreconditionError(message, report)
    return report


def _assert_closure(a, class_name, what):
    report = check_class(a, class_name)
    if not report.passed:
        raise ConstructionError(
            "%s: output failed the %s checker; first witnesses %r"
            % (what, class_name, report.all_witnesses()[:4]))
    return a


def _compose_ops(a, g, op_names=None):
    """Replace each op by g o op."""
    names = sorted(a.ops) if op_names is None else op_names
    e = [basis_vec(a.dim, i) for i in range(a.dim)]
    out = {}
    for name in names:
        op = a.op(name)
        out[name] = bilinear_from_table(
            a.dim, lambda i, j, op=op: apply_map(g, eval_bilinear(op, e[i], e[j])))
    return out


def yau_twist(a, g, class_name):
    """Twist an untwisted algebra (alpha = id) by a self-morphism g.

    Output ops are g o op with twist g; the result lands in the Hom-class.
    """
    class_name = resolve_class(class_name)
    a.require_bound()
    if not a.alpha.is_identity():
        raise PreconditionError("yau_twist requires the identity twist on input")
    _require(check_morphism(a, a, g, op_names=CLASS_OPS[class_name]),
             "g is not a morphism of the input algebra")
    ops = _compose_ops(a, g, list(CLASS_OPS[class_name]))
    maps = dict(a.maps)
    maps["alpha"] = g
    out = AlgebraPresentation(a.dim, ops, maps, a.basis)
    return _assert_closure(out, class_name, "yau_twist")


def compose_twist(a, g, class_name):
    """Twist an already-twisted algebra by a self-morphism g commuting with alpha.

    Output ops are g o op with twist alpha o g.
    """
    class_name = resolve_class(class_name)
    a.require_bound()
    _require(check_morphism(a, a, g, op_names=CLASS_OPS[class_name]),
             "g is not a morphism of the input algebra")
    if g @ a.alpha != a.alpha @ g:
        raise PreconditionError("g does not commute with the twist")
    ops = _compose_ops(a, g, list(CLASS_OPS[class_name]))
    maps = dict(a.maps)
    maps["alpha"] = a.alpha @ g
    out = AlgebraPresentation(a.dim, ops, maps, a.basis)
    return _assert_closure(out, class_name, "compose_twist")


def derived_algebra(a, n, class_name, kind=1):
    """n-th derived algebra of a multiplicative algebra, n >= 1.

    kind 1: ops alpha^n o op, twist alpha^(n+1).
    kind 2: ops alpha^(2^n - 1) o op, twist alpha^(2^n).
    """
    class_name = resolve_class(class_name)
    a.require_bound()
    if n < 1:
        raise PreconditionError("derived_algebra requires n >= 1")
    if kind not in (1, 2):
        raise PreconditionError("kind must be 1 or 2")
    _require(check_multiplicative(a),
             "twist is not multiplicative for the algebra's ops")
    p = n if kind == 1 else 2 ** n - 1
    g = a.alpha.power(p)
    ops = _compose_ops(a, g, list(CLASS_OPS[class_name]))
    maps = dict(a.maps)
    maps["alpha"] = a.alpha.power(p + 1)
    out = AlgebraPresentation(a.dim, ops, maps, a.basis)
    return _assert_closure(out, class_name, "derived_algebra")


def alpha_h_twist(a, h):
    """Twist a transposed Poisson algebra (alpha = id) by alpha_h(x) = h.x.

    The ops are kept; only the twist changes.  h is a coefficient vector.
    """
    a.require_bound()
    if not a.alpha.is_identity():
        raise PreconditionError("alpha_h_twist requires the identity twist on input")
    _require(check_class(a, "transposed-hom-poisson"),
             "input is not a transposed Poisson algebra")
    dot = a.op("dot")
    h = tuple(Fraction(c) for c in h)
    alpha_h = LinearMap.from_columns(
        [eval_bilinear(dot, h, basis_vec(a.dim, j)) for j in range(a.dim)])
    maps = dict(a.maps)
    maps["alpha"] = alpha_h
    out = AlgebraPresentation(a.dim, dict(a.ops), maps, a.basis)
    return _assert_closure(out, "transposed-hom-poisson", "alpha_h_twist")


def bracket_from_derivation(a, d):
    """{x,y} = x.D(y) - D(x).y on a commutative Hom-associative algebra.

    D must be a derivation of the dot commuting with alpha; the result is a
    transposed Hom-Poisson algebra.
    """
    a.require_bound()
    _require(check_class(a, "comm-hom-assoc"),
             "input is not commutative Hom-associative")
    _require(check_derivation(a, "dot", d),
             "D is not a derivation commuting with the twist")
    dot = a.op("dot")
    e = [basis_vec(a.dim, i) for i in range(a.dim)]
    bracket = bilinear_from_table(
        a.dim,
        lambda i, j: vec_sub(eval_bilinear(dot, e[i], apply_map(d, e[j])),
                             eval_bilinear(dot, apply_map(d, e[i]), e[j])))
    out = AlgebraPresentation(a.dim, {"dot": dot, "bracket": bracket},
                              dict(a.maps), a.basis)
    return _assert_closure(out, "transposed-hom-poisson", "bracket_from_derivation")


def bracket_from_two_derivations(a, d1, d2):
    """{x,y} = D1(x).D2(y) - D1(y).D2(x) on a commutative Hom-associative algebra.

    D1, D2 must be commuting derivations of the dot, each commuting with
    alpha; the result is a Hom-Poisson algebra.
    """
    a.require_bound()
    _require(check_class(a, "comm-hom-assoc"),
             "input is not commutative Hom-associative")
    for tag, d in (("D1", d1), ("D2", d2)):
        _require(check_derivation(a, "dot", d),
                 "%s is not a derivation commuting with the twist" % tag)
    if d1 @ d2 != d2 @ d1:
        raise PreconditionError("D1 and D2 do not commute")
    dot = a.op("dot")
    e = [basis_vec(a.dim, i) for i in range(a.dim)]
    bracket = bilinear_from_table(
        a.dim,
        lambda i, j: vec_sub(
            eval_bilinear(dot, apply_map(d1, e[i]), apply_map(d2, e[j])),
            eval_bilinear(dot, apply_map(d1, e[j]), apply_map(d2, e[i]))))
    out = AlgebraPresentation(a.dim, {"dot": dot, "bracket": bracket},
                              dict(a.maps), a.basis)
    return _assert_closure(out, "hom-poisson", "bracket_from_two_derivations")


def _kron_index(i, j, d2):
    return i * d2 + j


def tensor_product(a1, a2, class_name):
    """Tensor product on the lexicographic basis e_i (x) f_j -> index i*dim2+j.

    comm Hom-assoc: (x1 (x) x2).(y1 (x) y2) = x1.y1 (x) x2.y2.
    transposed: bracket {,} = {x1,y1} (x) x2.y2 + x1.y1 (x) {x2,y2}.
    pre-Lie Poisson: star * = x1*y1 (x) x2.y2 + x1.y1 (x) x2*y2.
    Twist is the Kronecker product of the twists.
    """
    class_name = resolve_class(class_name)
    a1.require_bound()
    a2.require_bound()
    for a in (a1, a2):
        _require(check_class(a, class_name),
                 "tensor factor is not in class %s" % class_name)
    n1, n2 = a1.dim, a2.dim
    dim = n1 * n2
    e1 = [basis_vec(n1, i) for i in range(n1)]
    e2 = [basis_vec(n2, i) for i in range(n2)]

    def kron_vec(u, v):
        return tuple(u[i] * v[j] for i in range(n1) for j in range(n2))

    def product(opname1, opname2):
        p1, p2 = a1.op(opname1), a2.op(opname2)

        def fn(I, J):
            i1, i2 = divmod(I, n2)
            j1, j2 = divmod(J, n2)
            return kron_vec(eval_bilinear(p1, e1[i1], e1[j1]),
                            eval_bilinear(p2, e2[i2], e2[j2]))
        return fn

    def add_fns(f, g):
        return lambda I, J: tuple(x + y for x, y in zip(f(I, J), g(I, J)))

    ops = {}
    if "dot" in CLASS_OPS[class_name]:
        ops["dot"] = bilinear_from_table(dim, product("dot", "dot"))
    if class_name == "transposed-hom-poisson":
        ops["bracket"] = bilinear_from_table(
            dim, add_fns(product("bracket", "dot"), product("dot", "bracket")))
    if class_name == "hom-pre-lie-poisson":
        ops["star"] = bilinear_from_table(
            dim, add_fns(product("star", "dot"), product("dot", "star")))
    if not ops:
        raise PreconditionError("tensor_product supports the commutative, "
                                "transposed and pre-Lie Poisson classes")
    alpha = LinearMap.from_columns(
        [kron_vec(a1.alpha.column(i1), a2.alpha.column(i2))
         for i1 in range(n1) for i2 in range(n2)])
    out = AlgebraPresentation(dim, ops, {"alpha": alpha})
    return _assert_closure(out, class_name, "tensor_product")


def sub_adjacent(a):
    """Commutator bracket {x,y} = x*y - y*x of a Hom-pre-Lie star.

    A Hom-pre-Lie algebra yields a Hom-Lie algebra; a Hom-pre-Lie Poisson
    algebra yields a transposed Hom-Poisson algebra (the dot is kept).
    """
    a.require_bound()
    has_dot = "dot" in a.ops
    cls_in = "hom-pre-lie-poisson" if has_dot else "hom-pre-lie"
    _require(check_class(a, cls_in), "input is not in class %s" % cls_in)
    st = a.op("star")
    e = [basis_vec(a.dim, i) for i in range(a.dim)]
    bracket = bilinear_from_table(
        a.dim,
        lambda i, j: vec_sub(eval_bilinear(st, e[i], e[j]),
                             eval_bilinear(st, e[j], e[i])))
    ops = {"bracket": bracket}
    if has_dot:
        ops["dot"] = a.op("dot")
    out = AlgebraPresentation(a.dim, ops, {"alpha": a.alpha}, a.basis)
    cls_out = "transposed-hom-poisson" if has_dot else "hom-lie"
    return _assert_closure(out, cls_out, "sub_adjacent")


def twisting_report(a, g, class_name="transposed-hom-poisson"):
    """Inspect the untwisted composed structure g o op on an alpha = id algebra.

    Reports whether both composed products vanish (trivial), whether the
    composed dot is associative and the composed bracket satisfies Jacobi
    without any twist, and the resulting sufficient non-rigidity flag.
    """
    class_name = resolve_class(class_name)
    a.require_bound()
    if not a.alpha.is_identity():
        raise PreconditionError("twisting_report requires the identity twist")
    _require(check_morphism(a, a, g, op_names=CLASS_OPS[class_name]),
             "g is not a morphism of the input algebra")
    ops = _compose_ops(a, g, list(CLASS_OPS[class_name]))
    untwisted = AlgebraPresentation(
        a.dim, ops, {"alpha": LinearMap.identity(a.dim)}, a.basis)
    result = {"trivial": all(op.is_zero for op in ops.values())}
    if "dot" in ops:
        result["dot_associative"] = check_class(untwisted, "comm-hom-assoc").passed
    if "bracket" in ops:
        result["bracket_jacobi"] = check_class(untwisted, "hom-lie").passed
    result["not_rigid"] = not all(
        result.get(k, True) for k in ("dot_associative", "bracket_jacobi"))
    return result
