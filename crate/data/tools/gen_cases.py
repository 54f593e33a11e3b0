#!/usr/bin/env python3
"""Regenerate data/cases/*.json, data/counterexamples.json and data/manifest.json.

Each case lists the Picard basis, -K, the extremal curves with their
intersection rows, the claimed nef monoid generators and the ample class
every ample class decomposes over. The Rust verifier recomputes all of it.
"""

import json
import os

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")

Q = {"kind": "quadric3"}


def toric(fan):
    return {"kind": "toric", "fan": fan}


def point(base, e):
    return {"kind": "blowup_point", "base": base, "exceptional": e}


def curve(base, e, degrees, genus=0):
    return {"kind": "blowup_curve", "base": base, "exceptional": e, "degrees": degrees, "genus": genus}


def hyper(ambient, cls):
    return {"kind": "hypersurface", "ambient": ambient, "class": cls}


def cons(model, same_basis=True, note=""):
    c = {"model": model, "same_basis": same_basis}
    if note:
        c["note"] = note
    return c


def ci(fan, s1, s2, l, part, restriction=None):
    d = {"fan": fan, "S1": s1, "S2": s2, "L": l, "part": part}
    if restriction:
        d["restriction"] = restriction
    return d


CURVE_CONE = "the listed curves span the closed cone of curves (the claimed generators are basepoint-free)"
RIGID = "H^j(X, Omega^2(-K)) = H^j(X, TX) = 0 for j > 0 by rigidity"
INDUCTION = "general members of the nef generators are smooth toric (or otherwise Bott-vanishing) surfaces"


def case(id_, desc, basis, minus_k, curves, rows, gens, base_ample, unit, constructions, **extra):
    d = {
        "id": id_,
        "bott_vanishing": True,
        "description": desc,
        "picard_basis": basis,
        "minus_K": minus_k,
        "curves": {"curves": curves, "rows": dict(zip(basis, rows))},
        "claimed_nef_generators": gens,
        "base_ample": base_ample,
        "minus_k_unit_degree": unit,
        "constructions": constructions,
    }
    for k in ("toric_ambient", "ambient_facts", "chi_evidence"):
        if k in extra:
            d[k] = extra[k]
    d["assumed"] = [CURVE_CONE, INDUCTION] + extra.get("assumed", [])
    return d


CASES = [
    case(
        "(2.26)", "blow-up of Q along a twisted cubic (equivalently of V_5 along a general line)",
        ["H", "E"], "3H-E", ["C", "D"], [[0, 1], [-1, 2]],
        ["2H-E", "H"], "3H-E", True,
        [cons(curve(Q, "E", {"H": 3}))],
        assumed=[RIGID, "H^j(X, Omega^1(-K)) = 0 for j > 0 via the chain F in S in Q"],
    ),
    case(
        "(2.30)", "blow-up of P^3 along a conic, equivalently of Q at a point",
        ["H", "E"], "3H-2E", ["C", "D"], [[0, 1], [-1, 1]],
        ["H-E", "H"], "2H-E", False,
        [cons(point(Q, "E")),
         cons(curve(toric("mm_1_17"), "E", {"H": 2}), False, "P^3 description; basis is the P^3 hyperplane")],
        assumed=["Bott vanishing for 2H-E on X"],
    ),
    case(
        "(3.15)", "blow-up of Q along a line and a disjoint conic",
        ["A", "B", "E"], "2A+3B-E", ["C", "D1", "D2"], [[0, 1, 0], [0, 0, 1], [-1, 1, 2]],
        ["A+2B-E", "A", "B"], "2A+3B-E", True,
        [cons(curve(toric("mm_2_34"), "E", {"A": 2, "B": 2}))],
        toric_ambient=ci("mm_2_34", "A+B", "2B", "2A+3B", 1),
        assumed=[RIGID],
    ),
    case(
        "(3.16)", "blow-up of V_7 along the strict transform of a twisted cubic through the centre",
        ["H", "E1", "E2"], "4H-2E1-E2", ["C1", "C2", "D"], [[0, 0, 1], [-1, 0, 1], [1, -1, 1]],
        ["H-E1", "2H-E1-E2", "H"], "4H-2E1-E2", True,
        [cons(curve(toric("mm_2_35"), "E2", {"H": 3, "E1": 1}))],
        ambient_facts=[
            {"expect": "ample", "fan": "mm_2_35", "class": "2H-E1"},
            {"expect": "ample", "fan": "bl_pt_p1xp1", "class": "2A+3B-E"},
            {"expect": "nef", "fan": "bl_pt_p1xp1", "class": "B"},
            {"expect": "bott", "fan": "mm_2_35", "class": "4H-2E1", "p": 1},
            {"expect": "bott", "fan": "bl_pt_p1xp1", "class": "2A+3B-E", "p": 1},
        ],
        assumed=[RIGID, "the surface S containing the curve is Bl_pt(P^1 x P^1) with the stated restrictions"],
    ),
    case(
        "(3.18)", "blow-up of P^3 along a line and a disjoint conic",
        ["H", "E1", "E2"], "4H-E1-E2", ["C1", "C2", "D"], [[0, 0, 1], [-1, 0, 1], [0, -1, 2]],
        ["H-E1", "2H-E2", "H"], "4H-E1-E2", True,
        [cons(curve(toric("mm_2_33"), "E2", {"H": 2, "E1": 0}))],
        toric_ambient=ci("mm_2_33", "H", "2H", "4H-E1", 1),
        assumed=[RIGID],
    ),
    case(
        "(3.19)", "blow-up of Q at two non-collinear points",
        ["H", "E1", "E2"], "3H-2E1-2E2", ["C1", "C2", "G1", "G2"],
        [[0, 0, 1, 1], [-1, 0, 1, 0], [0, -1, 0, 1]],
        ["H", "H-E1", "H-E2", "H-E1-E2"], "2H-E1-E2", False,
        [cons(point(point(Q, "E1"), "E2"))],
        assumed=["Bott vanishing for 2H-E1-E2 on X"],
    ),
    case(
        "(3.20)", "blow-up of Q along two disjoint lines",
        ["H", "E1", "E2"], "3H-E1-E2", ["C1", "C2", "D"], [[0, 0, 1], [-1, 0, 1], [0, -1, 1]],
        ["H-E1", "H-E2", "H"], "3H-E1-E2", True,
        [cons(curve(curve(Q, "E1", {"H": 1}), "E2", {"H": 1, "E1": 0})),
         cons(hyper("z_3_20", "2H-E1-E2"), True, "strict transform of a quadric through two lines in P^4")],
        ambient_facts=[
            {"expect": "ample", "fan": "z_3_20", "class": "3H-E1-E2"},
            {"expect": "nef", "fan": "z_3_20", "class": "H"},
        ],
        assumed=[RIGID, "X is a smooth member of |2H-E1-E2| on the blow-up of P^4 along two lines"],
    ),
    case(
        "(3.21)", "blow-up of P^1 x P^2 along a curve of bidegree (2,1)",
        ["A", "B", "E"], "2A+3B-E", ["C", "D1", "D2"], [[0, 1, 0], [0, 0, 1], [-1, 1, 2]],
        ["A+2B-E", "A", "B"], "2A+3B-E", True,
        [cons(curve(toric("mm_2_34"), "E", {"A": 2, "B": 1}))],
        toric_ambient=ci("mm_2_34", "B", "A+2B", "2A+3B", 1),
        assumed=[RIGID],
    ),
    case(
        "(3.22)", "blow-up of P^1 x P^2 along a conic in t x P^2",
        ["A", "B", "E"], "2A+3B-E", ["C", "D1", "D2"], [[0, 0, 1], [0, 1, 0], [-1, 2, 1]],
        ["A+2B-E", "B", "A"], "2A+3B-E", True,
        [cons(curve(toric("mm_2_34"), "E", {"A": 0, "B": 2}))],
        toric_ambient=ci("mm_2_34", "A", "2B", "2A+3B", 1),
        assumed=[RIGID],
    ),
    case(
        "(3.23)", "blow-up of V_7 along a conic through the centre",
        ["H", "E1", "E2"], "4H-2E1-E2", ["C1", "C2", "D"], [[0, 0, 1], [-1, 0, 1], [1, -1, 1]],
        ["H-E1", "2H-E1-E2", "H"], "4H-2E1-E2", True,
        [cons(curve(toric("mm_2_35"), "E2", {"H": 2, "E1": 1}))],
        toric_ambient=ci("mm_2_35", "H-E1", "2H-E1", "4H-2E1", 1),
        assumed=[RIGID],
    ),
    case(
        "(3.24)", "fibre product of W and F_1 over P^2 (blow-up of P^1 x P^2 along a curve of bidegree (1,1))",
        ["A", "B", "E"], "2A+3B-E", ["C", "D1", "D2"], [[0, 1, 0], [0, 0, 1], [-1, 1, 1]],
        ["A+B-E", "A", "B"], "2A+2B-E", False,
        [cons(curve(toric("mm_2_34"), "E", {"A": 1, "B": 1}))],
        toric_ambient=ci("mm_2_34", "B", "A+B", "2A+2B", 2),
        assumed=["Bott vanishing for -K on X"],
    ),
    case(
        "(4.3)", "blow-up of (P^1)^3 along a curve of tridegree (1,1,2)",
        ["A", "B", "C", "E"], "2A+2B+2C-E", ["D1", "D2", "D3", "D4"],
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, -1]],
        ["A", "B", "C", "A+B+C-E"], "2A+2B+2C-E", True,
        [cons(curve(toric("mm_3_27"), "E", {"A": 1, "B": 1, "C": 2}))],
        toric_ambient=ci("mm_3_27", "A+B", "2A+C", "2A+2B+2C", 3, {
            "surface": "p1xp1", "map": {"A": "A", "B": "A", "C": "B"}, "ample": "2A+B", "nef": "B"}),
        assumed=[RIGID, "S1 is the diagonal-type surface P^1 x P^1 on which A and B restrict to the same class"],
    ),
    case(
        "(4.4)", "blow-up of (3.19) along the strict transform of a conic through both points",
        ["H", "E1", "E2", "E3"], "4H-E1-2E2-E3", ["C1", "C2", "C3", "D1", "D2"],
        [[0, 0, 0, 1, 1], [-1, 1, 0, 0, 1], [0, -1, 0, 1, 0], [0, 0, -1, 1, 2]],
        ["H", "H-E2", "H-E1-E2", "2H-E3", "2H-E2-E3"], "4H-E1-2E2-E3", True,
        [cons(curve(toric("y_4_4"), "E3", {"H": 2, "E1": 0, "E2": 0}))],
        toric_ambient=ci("y_4_4", "H", "2H", "4H-E1-2E2", 3, {
            "surface": "f1", "map": {"H": "H", "E1": "E", "E2": "0"}, "ample": "2H-E", "nef": "H-E"}),
        assumed=[RIGID, "S1 is a plane blown up at one point, disjoint from E2"],
    ),
    case(
        "(4.5)", "blow-up of P^1 x P^2 along two disjoint curves of bidegree (2,1) and (1,0)",
        ["A", "B", "E1", "E2"], "2A+3B-E1-E2", ["C1", "C2", "D1", "D2", "D3"],
        [[0, 0, 1, 0, 0], [0, 0, 0, 1, 1], [-1, 0, 1, 1, 2], [0, -1, 0, 1, 0]],
        ["A", "B", "B-E2", "A+2B-E1", "A+2B-E1-E2"], "2A+3B-E1-E2", True,
        [cons(curve(toric("z_4_5"), "E1", {"A": 2, "B": 1, "E2": 0}), True,
              "the toric blow-up carries E2; the basis matches by name")],
        toric_ambient=ci("z_4_5", "B", "A+2B", "2A+3B-E2", 3, {
            "surface": "p1xp1", "map": {"A": "A", "B": "B", "E2": "0"}, "ample": "A+B", "nef": "A"}),
        assumed=[RIGID, "S1 is P^1 x P^1, disjoint from the toric exceptional divisor E2"],
    ),
    case(
        "(4.6)", "blow-up of P^3 along three disjoint lines",
        ["H", "E1", "E2", "E3"], "4H-E1-E2-E3", ["C1", "C2", "C3", "D"],
        [[0, 0, 0, 1], [-1, 0, 0, 1], [0, -1, 0, 1], [0, 0, -1, 1]],
        ["H-E1", "H-E2", "H-E3", "H"], "4H-E1-E2-E3", True,
        [cons(curve(toric("mm_3_25"), "E3", {"H": 1, "E1": 0, "E2": 0}))],
        toric_ambient=ci("mm_3_25", "H", "H", "4H-E1-E2", 1),
        assumed=[RIGID],
    ),
    case(
        "(4.7)", "blow-up of W along two disjoint curves of bidegree (0,1) and (1,0)",
        ["A", "B", "H", "E"], "2A+B+2H-E", ["C", "D", "G", "K"],
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 1, -1]],
        ["A", "B", "H", "A+H-E"], "2A+B+2H-E", True,
        [cons(curve(toric("y_4_7"), "E", {"A": 1, "B": 1, "H": 1}))],
        toric_ambient=ci("y_4_7", "H", "A+H", "2A+B+2H", 1),
        assumed=[RIGID],
    ),
    case(
        "(4.8)", "blow-up of (P^1)^3 along a curve of tridegree (0,1,1)",
        ["A", "B", "C", "E"], "2A+2B+2C-E", ["D1", "D2", "D3", "D4"],
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, -1]],
        ["A", "B", "C", "A+B+C-E"], "2A+2B+2C-E", True,
        [cons(curve(toric("mm_3_27"), "E", {"A": 0, "B": 1, "C": 1}))],
        toric_ambient=ci("mm_3_27", "A", "B+C", "2A+2B+2C", 1),
        assumed=[RIGID],
    ),
    case(
        "(5.1)", "blow-up of Q along a conic and then three exceptional lines over points of it",
        ["H", "E1", "E2", "E3", "E4"], "3H-E1-2E2-2E3-2E4",
        ["C1", "C2", "C3", "C4", "K2", "K3", "K4", "V"],
        [[0, 0, 0, 0, 1, 1, 1, 2],
         [-1, 1, 1, 1, 0, 0, 0, -1],
         [0, -1, 0, 0, 1, 0, 0, 1],
         [0, 0, -1, 0, 0, 1, 0, 1],
         [0, 0, 0, -1, 0, 0, 1, 1]],
        ["H", "H-E2", "H-E3", "H-E4", "H-E2-E3", "H-E2-E4", "H-E3-E4", "H-E1-E2-E3-E4"],
        "3H-E1-2E2-2E3-2E4", True,
        [cons(hyper("g_5_1", "2H-E2-E3-E4"), True, "hypersurface in a toric 4-fold"),
         cons(curve(curve(curve(curve(Q, "E1", {"H": 2}), "E2", {"H": 0, "E1": -1}),
                          "E3", {"H": 0, "E1": -1, "E2": 0}),
                    "E4", {"H": 0, "E1": -1, "E2": 0, "E3": 0}),
              False, "iterated blow-up; exceptional classes differ by strict transforms")],
        ambient_facts=[
            {"expect": "nef_not_ample", "fan": "g_5_1", "class": "3H-E1-2E2-2E3-2E4"},
            {"expect": "nef", "fan": "g_5_1", "class": "H-E1-E2-E3-E4"},
            {"expect": "nef_not_ample", "fan": "g_5_1", "class": "5H-E1-3E2-3E3-3E4"},
            {"expect": "nef_cone", "fan": "g_5_1",
             "generators": ["H", "H-E2", "H-E3", "H-E4", "H-E1-E2-E3-E4", "2H-E2-E3-E4"]},
        ],
        assumed=[RIGID, "H^j(X, Omega^1(-K)) = 0 for j > 0 via the singular toric 4-fold argument"],
    ),
]

EVIDENCE_3_17 = {
    "id": "(3.17)",
    "bott_vanishing": False,
    "description": "divisor of tridegree (1,1,1) in P^1 x P^1 x P^2",
    "picard_basis": ["A", "B", "C"],
    "minus_K": "A+B+2C",
    "constructions": [cons(hyper("p1xp1xp2", "A+B+C"))],
    "ambient_facts": [{"expect": "ample", "fan": "p1xp1xp2", "class": "A+B+C"}],
    "chi_evidence": [{
        "id": "(3.17)", "name": "divisor of degree (1,1,1) in P^1 x P^1 x P^2",
        "model": hyper("p1xp1xp2", "A+B+C"), "p": 2, "L": "A+B+C", "expected": -1}],
    "assumed": ["A+B+C restricts to an ample class on X"],
}

COUNTEREXAMPLES = [
    {"id": "(1.16)", "name": "quadric 3-fold Q", "model": Q, "p": 2, "L": "H", "expected": -1},
    {"id": "(2.32)", "name": "flag manifold W", "model": {"kind": "flag_w"}, "p": 2, "L": "A+B", "expected": -1},
    {"id": "(1.15)", "name": "quintic del Pezzo 3-fold V_5", "model": {"kind": "quintic_v5"}, "p": 2, "L": "H",
     "expected": -3},
    {"id": "(2.27)", "name": "P^3 blown up along a twisted cubic", "model": curve(toric("mm_1_17"), "E", {"H": 3}),
     "p": 2, "L": "3H-E", "expected": -2},
    {"id": "(2.29)", "name": "Q blown up along a conic", "model": curve(Q, "E", {"H": 2}), "p": 2, "L": "2H-E",
     "expected": -2},
    {"id": "(2.31)", "name": "Q blown up along a line", "model": curve(Q, "E", {"H": 1}), "p": 2, "L": "2H-E",
     "expected": -1},
    EVIDENCE_3_17["chi_evidence"][0],
]


def dump(path, obj):
    with open(path, "w") as f:
        json.dump(obj, f, indent=2)
        f.write("\n")


def main():
    cases = os.path.join(DATA, "cases")
    os.makedirs(cases, exist_ok=True)
    manifest = {
        "mm105.tsv": {"kind": "invariant table",
                      "source": "degree, Picard number and h^{2,1} of the 105 Mori-Mukai classes, from the standard tables"},
        "counterexamples.json": {"kind": "chi claims", "source": "Riemann-Roch values of chi(Omega^2(L)) for rigid Fano 3-folds"},
    }
    for c in CASES + [EVIDENCE_3_17]:
        name = c["id"].strip("()").replace(".", "_") + ".json"
        dump(os.path.join(cases, name), c)
        kind = "case" if c["bott_vanishing"] else "counterexample case"
        manifest["cases/" + name] = {"kind": kind, "source": "intersection table and claims for " + c["id"]}
    dump(os.path.join(DATA, "counterexamples.json"), {"claims": COUNTEREXAMPLES})
    for fname in sorted(os.listdir(os.path.join(DATA, "fans"))):
        with open(os.path.join(DATA, "fans", fname)) as f:
            fan = json.load(f)
        kind = "toric Fano fan" if fan.get("toric_fano") else "auxiliary fan"
        manifest["fans/" + fname] = {"kind": kind, "source": "generated by tools/gen_fans.py: " + fan.get("note", "")}
    dump(os.path.join(DATA, "manifest.json"), manifest)


if __name__ == "__main__":
    main()
