#!/usr/bin/env python3
"""Regenerate the bundled fan files under data/fans/.

Every fan is built from projective spaces by products and stellar
subdivisions (blow-ups of torus-invariant centres), so the maximal cones
are produced mechanically rather than typed in. The Rust side re-validates
every file (smoothness, completeness, -K ample for the toric Fano set).
"""

import json
import os
import re
from itertools import combinations

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fans")


class Fan:
    def __init__(self, rays, cones):
        self.rays = [tuple(r) for r in rays]
        self.cones = [tuple(sorted(c)) for c in cones]

    @property
    def rank(self):
        return len(self.rays[0])

    def index(self, v):
        return self.rays.index(tuple(v))

    def blow_up(self, cone_rays):
        """Star subdivision at the sum of the given rays."""
        idx = sorted(self.index(v) for v in cone_rays)
        new = tuple(sum(self.rays[i][k] for i in idx) for k in range(self.rank))
        assert new not in self.rays, new
        self.rays.append(new)
        n = len(self.rays) - 1
        out = []
        for c in self.cones:
            if set(idx) <= set(c):
                for r in idx:
                    out.append(tuple(sorted([x for x in c if x != r] + [n])))
            else:
                out.append(c)
        self.cones = sorted(out)
        return self


def projective(n):
    rays = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = [c for c in combinations(range(n + 1), n)]
    return Fan(rays, cones)


def product(a, b):
    ra, rb = a.rank, b.rank
    rays = [r + (0,) * rb for r in a.rays] + [(0,) * ra + r for r in b.rays]
    na = len(a.rays)
    cones = [ca + tuple(na + j for j in cb) for ca in a.cones for cb in b.cones]
    return Fan(rays, cones)


def p2_blown_up_twice():
    return projective(2).blow_up([(1, 0), (0, 1)]).blow_up([(0, 1), (-1, -1)])


def hexagon():
    return p2_blown_up_twice().blow_up([(1, 0), (-1, -1)])


def f1():
    return projective(2).blow_up([(1, 0), (0, 1)])


def p1():
    return projective(1)


def cls(fan, terms):
    """Divisor coefficients for sum of coef * D_ray."""
    coeffs = [0] * len(fan.rays)
    for coef, ray in terms:
        coeffs[fan.index(ray)] += coef
    return coeffs


def write(name, fan, basis=None, mm=None, fano=False, note=""):
    doc = {
        "rank": fan.rank,
        "rays": [list(r) for r in fan.rays],
        "max_cones": [list(c) for c in fan.cones],
    }
    if basis:
        doc["basis_map"] = {k: cls(fan, v) for k, v in basis.items()}
    if mm:
        doc["mm_id"] = mm
    if fano:
        doc["toric_fano"] = True
    if note:
        doc["note"] = note
    with open(os.path.join(OUT, name + ".json"), "w") as fh:
        fh.write(compact(doc))
        fh.write("\n")


def compact(doc):
    """Pretty JSON with innermost integer lists kept on one line."""
    text = json.dumps(doc, indent=2)
    return re.sub(r"\[[\s\d,-]*\]",
                  lambda m: json.dumps(json.loads(m.group(0))), text)


def main():
    os.makedirs(OUT, exist_ok=True)
    v0 = (-1, -1, -1)
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)

    # --- the 18 toric Fano 3-folds -------------------------------------
    p3 = projective(3)
    write("mm_1_17", p3, {"H": [(1, v0)]}, "(1.17)", True, "P^3")

    f = projective(3).blow_up([e1, e2])
    write("mm_2_33", f, {"H": [(1, v0)], "E1": [(1, (1, 1, 0))]}, "(2.33)", True,
          "blow-up of P^3 along a line")

    f = product(p1(), projective(2))
    write("mm_2_34", f, {"A": [(1, e1)], "B": [(1, e2)]}, "(2.34)", True, "P^1 x P^2")

    f = projective(3).blow_up([e1, e2, e3])
    write("mm_2_35", f, {"H": [(1, v0)], "E1": [(1, (1, 1, 1))]}, "(2.35)", True,
          "V_7 = blow-up of P^3 at a point")

    f = Fan([e1, e2, (-1, -1, 2), e3, (0, 0, -1)],
            [(0, 1, 3), (0, 1, 4), (1, 2, 3), (1, 2, 4), (0, 2, 3), (0, 2, 4)])
    write("mm_2_36", f, None, "(2.36)", True, "P(O + O(2)) over P^2")

    f = projective(3).blow_up([e1, e2]).blow_up([e3, v0])
    write("mm_3_25", f, {"H": [(1, e1), (1, (1, 1, 0))], "E1": [(1, (1, 1, 0))],
                         "E2": [(1, (-1, -1, 0))]}, "(3.25)", True,
          "blow-up of P^3 along two disjoint lines")

    f = projective(3).blow_up([e1, e2]).blow_up([e1, e3, v0])
    write("mm_3_26", f, None, "(3.26)", True,
          "blow-up of P^3 along a line and a disjoint point")

    f = product(p1(), product(p1(), p1()))
    write("mm_3_27", f, {"A": [(1, e1)], "B": [(1, e2)], "C": [(1, e3)]}, "(3.27)", True,
          "P^1 x P^1 x P^1")

    f = product(p1(), f1())
    write("mm_3_28", f, {"A": [(1, e1)], "B": [(1, e2)], "H": [(1, (0, -1, -1))]},
          "(3.28)", True, "P^1 x F_1")

    f = projective(3).blow_up([e1, e2, e3]).blow_up([(1, 1, 1), e1])
    write("mm_3_29", f, None, "(3.29)", True,
          "blow-up of V_7 along a line in the exceptional plane")

    f = projective(3).blow_up([e1, e2, e3]).blow_up([e1, e2])
    write("mm_3_30", f, None, "(3.30)", True,
          "blow-up of V_7 along the strict transform of a line through the point")

    f = Fan([e1, (-1, 0, 1), e2, (0, -1, 1), e3, (0, 0, -1)],
            [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)])
    write("mm_3_31", f, None, "(3.31)", True, "P(O + O(1,1)) over P^1 x P^1")

    f = projective(3).blow_up([e1, e2]).blow_up([e3, v0]).blow_up([(1, 1, 0), e3])
    write("mm_4_9", f, None, "(4.9)", True,
          "blow-up of (3.25) along an exceptional line")

    f = product(p1(), p2_blown_up_twice())
    write("mm_4_10", f, None, "(4.10)", True, "P^1 x S_7")

    f = product(p1(), f1()).blow_up([e1, (0, 1, 1)])
    write("mm_4_11", f, None, "(4.11)", True,
          "blow-up of P^1 x F_1 along t x e")

    f = projective(3).blow_up([e1, e2]).blow_up([(1, 1, 0), e3]).blow_up([(1, 1, 0), v0])
    write("mm_4_12", f, None, "(4.12)", True,
          "blow-up of (2.33) along two exceptional lines")

    f = (projective(3).blow_up([e1, e2]).blow_up([e3, v0])
         .blow_up([(1, 1, 0), e3]).blow_up([(1, 1, 0), v0]))
    write("mm_5_2", f, None, "(5.2)", True,
          "blow-up of (3.25) along two exceptional lines on one exceptional divisor")

    f = product(p1(), hexagon())
    write("mm_5_3", f, None, "(5.3)", True, "P^1 x S_6")

    # --- ambient and auxiliary fans -----------------------------------
    write("p1", p1(), {"H": [(1, (1,))]}, note="P^1")
    write("p2", projective(2), {"H": [(1, (1, 0))]}, note="P^2")
    write("p1xp1", product(p1(), p1()), {"A": [(1, (1, 0))], "B": [(1, (0, 1))]},
          note="P^1 x P^1 (the surface S_1 of the (4.3) complete intersection)")
    write("f1", f1(), {"H": [(1, (-1, -1))], "E": [(1, (1, 1))]},
          note="blow-up of P^2 at a point")
    s = product(p1(), p1()).blow_up([(1, 0), (0, 1)])
    write("bl_pt_p1xp1", s, {"A": [(1, (-1, 0))], "B": [(1, (0, -1))], "E": [(1, (1, 1))]},
          note="blow-up of P^1 x P^1 at a point (the surface S of (3.16))")
    write("p4", projective(4), {"H": [(1, (1, 0, 0, 0))]}, note="P^4")
    write("p2xp2", product(projective(2), projective(2)),
          {"A": [(1, (1, 0, 0, 0))], "B": [(1, (0, 0, 1, 0))]}, note="P^2 x P^2")
    write("p1xp1xp2", product(product(p1(), p1()), projective(2)),
          {"A": [(1, (1, 0, 0, 0))], "B": [(1, (0, 1, 0, 0))], "C": [(1, (0, 0, 1, 0))]},
          note="P^1 x P^1 x P^2")

    f = projective(3).blow_up([e1, e2]).blow_up([(1, 1, 0), e3])
    write("y_4_4", f, {"H": [(1, v0)], "E1": [(1, (1, 1, 0))], "E2": [(1, (1, 1, 1))]},
          note="blow-up of Bl_line P^3 along the fibre over a point of the line")

    f = product(p1(), projective(2)).blow_up([e2, e3])
    write("z_4_5", f, {"A": [(1, e1)], "B": [(1, (0, -1, -1))], "E2": [(1, (0, 1, 1))]},
          note="blow-up of P^1 x P^2 along P^1 x point")

    f = product(p1(), f1())
    write("y_4_7", f, {"A": [(1, e1)], "B": [(1, e2)], "H": [(1, (0, -1, -1))]},
          note="P^1 x Bl_p P^2 with B the ruling class and H the pullback of O(1)")

    q1, q2, q3, q4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    w0 = (-1, -1, -1, -1)
    f = projective(4).blow_up([q1, q2, q3]).blow_up([q3, q4, w0])
    write("z_3_20", f, {"H": [(1, q1), (1, (1, 1, 1, 0))], "E1": [(1, (1, 1, 1, 0))],
                        "E2": [(1, (-1, -1, 0, 0))]},
          note="blow-up of P^4 along two disjoint lines")

    u = (1, 1, 0, 0)
    f = (projective(4).blow_up([q1, q2]).blow_up([u, q3, q4])
         .blow_up([u, q3, w0]).blow_up([u, q4, w0]))
    write("g_5_1", f, {"H": [(1, w0), (1, (0, 0, 0, -1)), (1, (0, 0, -1, 0))],
                       "E1": [(1, u)], "E2": [(1, (1, 1, 1, 1))],
                       "E3": [(1, (0, 0, 0, -1))], "E4": [(1, (0, 0, -1, 0))]},
          note="blow-up of P^4 along a plane and then three fibres over points of it")


if __name__ == "__main__":
    main()
