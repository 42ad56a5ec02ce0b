"""Shared test fixtures and independent oracles."""

import random
from fractions import Fraction

from homstruct import catalog
from homstruct.core import (
    AlgebraPresentation,
    BilinearMap,
    apply_map,
    eval_bilinear,
    vec_add,
    vec_scale,
    vec_sub,
)

F = Fraction


def rand_fraction(rng):
    return F(rng.randint(-6, 6), rng.randint(1, 4))


def rand_vec(rng, n):
    return tuple(rand_fraction(rng) for _ in range(n))


def bound_fixtures():
    """(name, binding_label, algebra, target_class) for the standard bindings."""
    out = []
    for name in ("CA2a", "CA2b", "CA3a", "TP2"):
        out.append((name, "", catalog.get(name), catalog.target_class(name)))
    for p in ((1, 2, 3), (0, 0, 0)):
        b = {"p1": F(p[0]), "p2": F(p[1]), "p3": F(p[2])}
        out.append(("CA3b", "p=%s" % (p,), catalog.get("CA3b", b),
                    catalog.target_class("CA3b")))
    for lam in (F(0), F(1), F(5, 2)):
        out.append(("THP2", "lam=%s" % lam, catalog.get("THP2", {"lam": lam}),
                    catalog.target_class("THP2")))
    for a in (F(0), F(1), F(-2)):
        out.append(("PLP2", "a=%s" % a, catalog.get("PLP2", {"a": a}),
                    catalog.target_class("PLP2")))
    # an HP3 binding satisfying the constraints listed in its description
    hp3 = {"a": F(1), "b": F(0), "c": F(0), "d": F(0),
           "l1": F(0), "l2": F(1), "l3": F(0), "l4": F(2),
           "l5": F(0), "l6": F(3)}
    out.append(("HP3", "constrained", catalog.get("HP3", hp3),
                catalog.target_class("HP3")))
    return out


def perturbed_fixtures(count=100, seed=20260823):
    """Deterministic sparse perturbations of the bound fixtures.

    Each perturbation changes one structure constant of one op by a nonzero
    rational delta.
    """
    rng = random.Random(seed)
    base = bound_fixtures()
    out = []
    for idx in range(count):
        name, label, a, cls = base[rng.randrange(len(base))]
        op_name = rng.choice(sorted(a.ops))
        n = a.dim
        i, j, k = (rng.randrange(n) for _ in range(3))
        delta = F(0)
        while delta == 0:
            delta = rand_fraction(rng)
        table = {(ei, ej, ek): c for (ei, ej, ek, c) in a.op(op_name).entries}
        table[(i, j, k)] = table.get((i, j, k), F(0)) + delta
        ops = dict(a.ops)
        ops[op_name] = BilinearMap(n, tuple(
            (ei, ej, ek, c) for (ei, ej, ek), c in sorted(table.items())))
        out.append(("%s[%s]#%d" % (name, label, idx),
                    AlgebraPresentation(n, ops, dict(a.maps), a.basis), cls))
    return out


# ---------------------------------------------------------------------------
# naive oracle: evaluate the class identities at random vector tuples

def _residuals(a, class_name, x, y, z):
    al = lambda v: apply_map(a.alpha, v)
    res = []
    if class_name in ("comm-hom-assoc", "hom-poisson", "transposed-hom-poisson",
                      "hom-pre-lie-poisson"):
        d = lambda u, v: eval_bilinear(a.op("dot"), u, v)
        res.append(vec_sub(d(x, y), d(y, x)))
        res.append(vec_sub(d(d(x, y), al(z)), d(al(x), d(y, z))))
    if class_name in ("hom-lie", "hom-poisson", "transposed-hom-poisson"):
        b = lambda u, v: eval_bilinear(a.op("bracket"), u, v)
        res.append(vec_add(b(x, y), b(y, x)))
        res.append(vec_add(vec_add(b(al(x), b(y, z)), b(al(y), b(z, x))),
                           b(al(z), b(x, y))))
    if class_name == "hom-poisson":
        d = lambda u, v: eval_bilinear(a.op("dot"), u, v)
        b = lambda u, v: eval_bilinear(a.op("bracket"), u, v)
        res.append(vec_sub(b(al(x), d(y, z)),
                           vec_add(d(al(y), b(x, z)), d(al(z), b(x, y)))))
    if class_name == "transposed-hom-poisson":
        d = lambda u, v: eval_bilinear(a.op("dot"), u, v)
        b = lambda u, v: eval_bilinear(a.op("bracket"), u, v)
        res.append(vec_sub(vec_scale(2, d(al(z), b(x, y))),
                           vec_add(b(d(z, x), al(y)), b(al(x), d(z, y)))))
    if class_name in ("hom-pre-lie", "hom-pre-lie-poisson"):
        s = lambda u, v: eval_bilinear(a.op("star"), u, v)
        aso = lambda u, v, w: vec_sub(s(s(u, v), al(w)), s(al(u), s(v, w)))
        res.append(vec_sub(aso(x, y, z), aso(y, x, z)))
    if class_name == "hom-pre-lie-poisson":
        d = lambda u, v: eval_bilinear(a.op("dot"), u, v)
        s = lambda u, v: eval_bilinear(a.op("star"), u, v)
        res.append(vec_sub(s(d(x, y), al(z)), d(al(x), s(y, z))))
        res.append(vec_sub(vec_sub(d(s(x, y), al(z)), d(s(y, x), al(z))),
                           vec_sub(s(al(x), d(y, z)), s(al(y), d(x, z)))))
    return res


def naive_class_verdict(a, class_name, trials=20, seed=7):
    """Evaluate the class identities at seeded random rational vector tuples."""
    rng = random.Random((seed, a.dim, class_name).__repr__())
    for _ in range(trials):
        x, y, z = (rand_vec(rng, a.dim) for _ in range(3))
        for r in _residuals(a, class_name, x, y, z):
            if any(c != 0 for c in r):
                return False
    return True
