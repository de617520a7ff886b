"""Smash products B#KG and B#KG#KG*, and the evaluation action of the
dual on the middle leg.

Basis labels are tuples: (b, g) for B#KG and (b, g, h) for the double
smash, ordered lexicographically by (B index, morphism index, dual index).
Neither product is assumed unital; find_unit reports one if it exists.
"""

from .exactmath import Matrix, solve
from .walg import FinAlgebra, el_norm


def smash_product(B: FinAlgebra, kg: FinAlgebra, action) -> FinAlgebra:
    """(a # u_s)(b # u_t) = a(s.b) # u_{st}, zero when st is undefined."""
    F = B.field
    g = action.groupoid
    basis = [(b, m) for b in B.basis for m in g.morphism_ids()]
    mul = {}
    for (a, s) in basis:
        for (b, t) in basis:
            st = g.compose(s, t)
            if st is None:
                continue
            coeff = B.multiply(B.basis_element(a), action.act_basis(s, b))
            out = {(lab, st): c for lab, c in coeff.items()}
            if out:
                mul[((a, s), (b, t))] = out
    return FinAlgebra(F, basis, mul, None, name="B#KG",
                      meta={"B": B, "kg": kg, "action": action, "groupoid": g})


def harpoon(rho_label, z: dict) -> dict:
    """Evaluation action of a dual basis vector on B#KG: keeps the terms
    whose middle leg equals the given label."""
    return {lab: c for lab, c in z.items() if lab[1] == rho_label}


def double_smash(B: FinAlgebra, kg: FinAlgebra, kgstar: FinAlgebra,
                 kgstar_co, action) -> FinAlgebra:
    """B#KG#KG* with the dual acting through its coproduct legs:

        (a # u_m # r_n)(b # u_s # r_t)
            = sum over coproduct legs n -> n1 x n2 of
              (a # u_m)(n1 evaluated against u_s) # n2 * t

    For a groupoid dual this collapses to a(m.b) # u_{ms} # r_t when the
    product s*t exists and equals n, and zero otherwise.
    """
    F = B.field
    g = action.groupoid
    ids = g.morphism_ids()
    basis = [(b, m, n) for b in B.basis for m in ids for n in ids]
    mul = {}
    for (a, m, n) in basis:
        legs = kgstar_co.delta.get(n, [])
        for (b, s, t) in basis:
            out = {}
            for n1, n2, c in legs:
                if n1 != s:
                    continue
                conv = kgstar.basis_product(n2, t)
                if not conv:
                    continue
                ms = g.compose(m, s)
                if ms is None:
                    continue
                coeff = B.multiply(B.basis_element(a), action.act_basis(m, b))
                for lab, cb in coeff.items():
                    for rho, cr in conv.items():
                        key = (lab, ms, rho)
                        v = F.add(out.get(key, F.zero), F.mul(c, F.mul(cb, cr)))
                        out[key] = v
            out = el_norm(F, out)
            if out:
                mul[((a, m, n), (b, s, t))] = out
    return FinAlgebra(F, basis, mul, None, name="B#KG#KG*",
                      meta={"B": B, "kg": kg, "kgstar": kgstar,
                            "action": action, "groupoid": g})


def find_unit(alg: FinAlgebra):
    """Two-sided unit of a structure-constant algebra, or None.

    Solves the linear system 'u x = x = x u for all basis x' exactly;
    all-zero equations are dropped and duplicates folded, which keeps the
    system small for the sparse product tables smash products produce.
    """
    F = alg.field
    n = alg.dim
    seen = {}
    rows = []
    rhs = []
    for x in alg.basis:
        # sum_b u_b (b * x) = x   and   sum_b u_b (x * b) = x
        for side in (0, 1):
            cols = []
            for b in alg.basis:
                prod = alg.basis_product(b, x) if side == 0 else alg.basis_product(x, b)
                cols.append(alg.to_vector(prod))
            target = alg.to_vector(alg.basis_element(x))
            for i in range(n):
                row = tuple(cols[j][i] for j in range(n))
                want = target[i]
                if all(c == F.zero for c in row):
                    if want != F.zero:
                        return None
                    continue
                if seen.get(row, want) != want:
                    return None
                if row not in seen:
                    seen[row] = want
                    rows.append(list(row))
                    rhs.append(want)
    sol = solve(Matrix.from_rows(F, rows), rhs)
    if sol is None:
        return None
    unit = alg.from_vector(sol)
    # solve() returns one candidate; confirm it really is two-sided
    for x in alg.basis:
        e = alg.basis_element(x)
        if alg.multiply(unit, e) != e or alg.multiply(e, unit) != e:
            return None
    return unit
