#!/usr/bin/env python3
"""Regenerate the JSON fixtures in fixtures/ from first principles."""
import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def cell(cid, dim, boundary=None):
    c = {"id": cid, "dim": dim}
    if boundary:
        c["boundary"] = boundary
    return c


def edge(cid, v_from, v_to, axis=0):
    # one-dimensional cube: the 0-side face enters with +1, the 1-side with -1
    return cell(cid, 1, [[1, axis, 0, v_from], [-1, axis, 1, v_to]])


def circle(v0, v1, e0, e1):
    """Two vertices, two edges, oriented fundamental cycle e0+e1."""
    cells = [cell(v0, 0), cell(v1, 0), edge(e0, v0, v1), edge(e1, v1, v0)]
    return {"cells": cells, "fundamental": [[1, e0], [1, e1]]}


def point(cid):
    return {"cells": [cell(cid, 0)], "fundamental": [[1, cid]]}


def signed_points(plus, minus):
    """Zero-dimensional fiber consisting of one positive and one negative point."""
    return {"cells": [cell(plus, 0), cell(minus, 0)],
            "fundamental": [[1, plus], [-1, minus]]}


def component(cid, dim, complex_):
    c = {"id": cid, "dim": dim}
    c.update(complex_)
    return c


def product(A, B):
    """Cartesian product complex, ids 'a*b', Leibniz signs on the second factor."""
    dim = {c["id"]: c["dim"] for c in A["cells"]}
    cells = []
    for a in A["cells"]:
        for b in B["cells"]:
            bd = []
            for (s, ax, side, t) in a.get("boundary", []):
                bd.append([s, ax, side, t + "*" + b["id"]])
            flip = 1 if a["dim"] % 2 == 0 else -1
            for (s, ax, side, t) in b.get("boundary", []):
                bd.append([s * flip, ax + a["dim"], side, a["id"] + "*" + t])
            cells.append(cell(a["id"] + "*" + b["id"], a["dim"] + b["dim"], bd))
    fund = []
    for (ca, ida) in A["fundamental"]:
        for (cb, idb) in B["fundamental"]:
            fund.append([ca * cb, ida + "*" + idb])
    return {"cells": cells, "fundamental": fund}


def endpoint_map(images):
    return [{"cell_id": k, "image": v} for k, v in images.items()]


def piece(base, fiber, endpoint, coeff=1, strata=None):
    p = {"base_component": base, "orientation_coeff": coeff,
         "fiber": fiber, "endpoint_map": endpoint_map(endpoint)}
    if strata:
        p["strata"] = strata
    return p


def write(name, doc):
    path = os.path.join(OUT, name + ".json")
    with open(path, "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")
    print("wrote", path)


# ---------------------------------------------------------------------------
# categories

def sphere_z2():
    # minimum circle at level 0, two maximum points at level 2
    fiber_n = circle("fv0", "fv1", "fe0", "fe1")
    fiber_s = circle("gv0", "gv1", "ge0", "ge1")
    return {
        "name": "sphere-z2",
        "top_index": 2,
        "levels": [
            {"index": 0, "components": [component("circle", 1, circle("v0", "v1", "e0", "e1"))]},
            {"index": 2, "components": [component("n", 0, point("n")),
                                        component("s", 0, point("s"))]},
        ],
        "moduli": [
            {"from": 2, "to": 0, "pieces": [
                piece("n", fiber_n,
                      {"n*fv0": [[1, "v0"]], "n*fv1": [[1, "v1"]],
                       "n*fe0": [[1, "e0"]], "n*fe1": [[1, "e1"]]}, 1),
                piece("s", fiber_s,
                      {"s*gv0": [[1, "v0"]], "s*gv1": [[1, "v1"]],
                       "s*ge0": [[1, "e0"]], "s*ge1": [[1, "e1"]]}, -1),
            ]}
        ],
    }


def sphere_neg_z2():
    # two minimum points at level 0, maximum circle at level 1
    return {
        "name": "sphere-neg-z2",
        "top_index": 1,
        "levels": [
            {"index": 0, "components": [component("n", 0, point("n")),
                                        component("s", 0, point("s"))]},
            {"index": 1, "components": [component("circle", 1, circle("w0", "w1", "g0", "g1"))]},
        ],
        "moduli": [
            {"from": 1, "to": 0, "pieces": [
                piece("circle", signed_points("pn", "ps"),
                      {"w0*pn": [[1, "n"]], "w0*ps": [[1, "s"]],
                       "w1*pn": [[1, "n"]], "w1*ps": [[1, "s"]]}, -1),
            ]}
        ],
    }


def sphere_morse():
    return {
        "name": "sphere-morse",
        "top_index": 2,
        "levels": [
            {"index": 0, "components": [component("p0", 0, point("p0"))]},
            {"index": 2, "components": [component("r", 0, point("r"))]},
        ],
        "moduli": [
            {"from": 2, "to": 0, "pieces": [
                piece("r", circle("fv0", "fv1", "fe0", "fe1"),
                      {"r*fv0": [[1, "p0"]], "r*fv1": [[1, "p0"]]}, 1),
            ]}
        ],
    }


def torus_constant():
    torus = product(circle("v0", "v1", "e0", "e1"), circle("w0", "w1", "f0", "f1"))
    return {
        "name": "torus-constant",
        "top_index": 0,
        "levels": [{"index": 0, "components": [component("torus", 2, torus)]}],
        "moduli": [],
    }


def torus_morse_smale():
    return {
        "name": "torus-morse-smale",
        "top_index": 2,
        "levels": [
            {"index": 0, "components": [component("p", 0, point("p"))]},
            {"index": 1, "components": [component("q1", 0, point("q1")),
                                        component("q2", 0, point("q2"))]},
            {"index": 2, "components": [component("r", 0, point("r"))]},
        ],
        "moduli": [
            {"from": 1, "to": 0, "pieces": [
                piece("q1", signed_points("t1p", "t1m"),
                      {"q1*t1p": [[1, "p"]], "q1*t1m": [[1, "p"]]}, 1),
                piece("q2", signed_points("t2p", "t2m"),
                      {"q2*t2p": [[1, "p"]], "q2*t2m": [[1, "p"]]}, 1),
            ]},
            {"from": 2, "to": 1, "pieces": [
                piece("r", {"cells": [cell("u1", 0), cell("u2", 0),
                                      cell("u3", 0), cell("u4", 0)],
                            "fundamental": [[1, "u1"], [-1, "u2"],
                                            [1, "u3"], [-1, "u4"]]},
                      {"r*u1": [[1, "q1"]], "r*u2": [[1, "q1"]],
                       "r*u3": [[1, "q2"]], "r*u4": [[1, "q2"]]}, 1),
            ]},
        ],
    }


def three_level():
    # one point per level; the 2 -> 0 moduli fiber is a pair of intervals whose
    # endpoints are the four broken configurations through level 1
    interval_pair = {
        "cells": [cell("P_pp", 0), cell("P_pm", 0), cell("P_mp", 0), cell("P_mm", 0),
                  edge("E1", "P_pp", "P_pm"), edge("E2", "P_mm", "P_mp")],
        "fundamental": [[1, "E1"], [1, "E2"]],
    }
    strata = [
        {"fiber_boundary_cell": "P_pp", "via_index": 1, "left_cell": "up", "right_cell": "tp"},
        {"fiber_boundary_cell": "P_pm", "via_index": 1, "left_cell": "up", "right_cell": "tm"},
        {"fiber_boundary_cell": "P_mp", "via_index": 1, "left_cell": "um", "right_cell": "tp"},
        {"fiber_boundary_cell": "P_mm", "via_index": 1, "left_cell": "um", "right_cell": "tm"},
    ]
    return {
        "name": "three-level",
        "top_index": 2,
        "levels": [
            {"index": 0, "components": [component("a", 0, point("a"))]},
            {"index": 1, "components": [component("b", 0, point("b"))]},
            {"index": 2, "components": [component("c", 0, point("c"))]},
        ],
        "moduli": [
            {"from": 1, "to": 0, "pieces": [
                piece("b", signed_points("tp", "tm"),
                      {"b*tp": [[1, "a"]], "b*tm": [[1, "a"]]}, 1),
            ]},
            {"from": 2, "to": 1, "pieces": [
                piece("c", signed_points("up", "um"),
                      {"c*up": [[1, "b"]], "c*um": [[1, "b"]]}, 1),
            ]},
            {"from": 2, "to": 0, "pieces": [
                piece("c", interval_pair,
                      {"c*P_pp": [[1, "a"]], "c*P_pm": [[1, "a"]],
                       "c*P_mp": [[1, "a"]], "c*P_mm": [[1, "a"]]},
                      1, strata),
            ]},
        ],
    }


def twoflow():
    return {
        "name": "twoflow",
        "top_index": 1,
        "levels": [
            {"index": 0, "components": [component("a", 0, point("a"))]},
            {"index": 1, "components": [component("b", 0, point("b"))]},
        ],
        "moduli": [
            {"from": 1, "to": 0, "pieces": [
                piece("b", signed_points("up", "um"),
                      {"b*up": [[1, "a"]], "b*um": [[1, "a"]]}, 1),
            ]}
        ],
    }


def onepoint():
    return {
        "name": "onepoint",
        "top_index": 0,
        "levels": [{"index": 0, "components": [component("z", 0, point("z"))]}],
        "moduli": [],
    }


# ---------------------------------------------------------------------------
# continuations

def identity_continuation(doc, bad_component=None):
    """Point-fiber identity continuation; flipping one orientation coefficient
    produces the sign-corrupted negative control."""
    bundles = []
    for level in doc["levels"]:
        pieces = []
        for comp in level["components"]:
            coeff = 1 if comp["dim"] % 2 == 0 else -1
            if comp["id"] == bad_component:
                coeff = -coeff
            images = {c["id"] + "*pt": [[1, c["id"]]] for c in comp["cells"]}
            pieces.append(piece(comp["id"],
                                {"cells": [cell("pt", 0)], "fundamental": [[1, "pt"]]},
                                images, coeff))
        bundles.append({"from": level["index"], "to": level["index"], "pieces": pieces})
    suffix = "-identity" if bad_component is None else "-identity-bad"
    return {
        "name": doc["name"] + suffix,
        "source": doc["name"],
        "target": doc["name"],
        "bundles": bundles,
    }


def cont_sphere_z2_to_neg():
    # collapse the minimum circle to the point n; send the maximum n over the
    # whole maximum circle of the target, and s to zero
    return {
        "name": "cont-sphere-z2-to-neg",
        "source": "sphere-z2",
        "target": "sphere-neg-z2",
        "bundles": [
            {"from": 0, "to": 0, "pieces": [
                piece("circle", {"cells": [cell("pt", 0)], "fundamental": [[1, "pt"]]},
                      {"v0*pt": [[1, "n"]], "v1*pt": [[1, "n"]]}, -1),
            ]},
            {"from": 2, "to": 1, "pieces": [
                piece("n", circle("cv0", "cv1", "ce0", "ce1"),
                      {"n*cv0": [[1, "w0"]], "n*cv1": [[1, "w1"]],
                       "n*ce0": [[1, "g0"]], "n*ce1": [[1, "g1"]]}, 1),
            ]},
        ],
    }


def cont_neg_to_sphere_z2():
    # project the maximum circle onto the minimum circle of the target fiberwise;
    # the index-raising direction is carried by a transfer assignment
    return {
        "name": "cont-neg-to-sphere-z2",
        "source": "sphere-neg-z2",
        "target": "sphere-z2",
        "bundles": [
            {"from": 0, "to": 0, "pieces": [
                piece("n", {"cells": [cell("pt", 0)], "fundamental": [[1, "pt"]]},
                      {"n*pt": [[1, "v0"]]}, 1),
                piece("s", {"cells": [cell("pt", 0)], "fundamental": [[1, "pt"]]},
                      {"s*pt": [[1, "v0"]]}, 1),
            ]},
            {"from": 1, "to": 0, "pieces": [
                piece("circle", circle("dv0", "dv1", "de0", "de1"),
                      {"w0*dv0": [[1, "v0"]], "w0*dv1": [[1, "v1"]],
                       "w0*de0": [[1, "e0"]], "w0*de1": [[1, "e1"]],
                       "w1*dv0": [[1, "v0"]], "w1*dv1": [[1, "v1"]],
                       "w1*de0": [[1, "e0"]], "w1*de1": [[1, "e1"]]}, 1),
            ]},
            {"from": 1, "to": 2, "transfers": [
                {"base_component": "circle",
                 "images": [{"cell_id": "g0", "image": [[1, "n"], [1, "s"]]},
                            {"cell_id": "g1", "image": []}]},
            ]},
        ],
    }


def cont_twoflow_to_point(bad=False):
    strata = [
        {"fiber_boundary_cell": "w0", "via_index": 0, "family": "left",
         "left_cell": "um" if bad else "up", "right_cell": "zpt"},
        {"fiber_boundary_cell": "w1", "via_index": 0, "family": "left",
         "left_cell": "um", "right_cell": "zpt"},
    ]
    return {
        "name": "cont-twoflow-to-point" + ("-bad" if bad else ""),
        "source": "twoflow",
        "target": "onepoint",
        "bundles": [
            {"from": 0, "to": 0, "pieces": [
                piece("a", {"cells": [cell("zpt", 0)], "fundamental": [[1, "zpt"]]},
                      {"a*zpt": [[1, "z"]]}, 1),
            ]},
            {"from": 1, "to": 0, "pieces": [
                piece("b", {"cells": [cell("w0", 0), cell("w1", 0),
                                      edge("E", "w0", "w1")],
                            "fundamental": [[-1, "E"]]},
                      {"b*w0": [[1, "z"]], "b*w1": [[1, "z"]]},
                      1, strata),
            ]},
        ],
    }


def homotopy_square(bad=False):
    h_piece = piece("circle", circle("hv0", "hv1", "he0", "he1"),
                    {"v0*hv0": [[1, "v0"]], "v0*hv1": [[1, "v1"]],
                     "v0*he0": [[1, "e0"]], "v0*he1": [[1, "e1"]],
                     "v1*hv0": [[1, "v0"]], "v1*hv1": [[1, "v1"]],
                     "v1*he0": [[1, "e0"]], "v1*he1": [[1, "e1"]]}, 1)
    return {
        "name": "homotopy-square" + ("-bad" if bad else ""),
        "f1": "sphere-z2.json",
        "f2": "sphere-z2.json",
        "f3": "sphere-z2.json",
        "f4": "sphere-z2.json",
        "F21": "identity-sphere-z2.json",
        "F31": "identity-sphere-z2-bad.json" if bad else "identity-sphere-z2.json",
        "F42": "identity-sphere-z2.json",
        "F43": "identity-sphere-z2.json",
        "h_bundles": [{"from": 0, "to": 0, "pieces": [h_piece]}],
    }


def main():
    os.makedirs(OUT, exist_ok=True)
    cats = [sphere_z2(), sphere_neg_z2(), sphere_morse(), torus_constant(),
            torus_morse_smale(), three_level(), twoflow(), onepoint()]
    for doc in cats:
        write(doc["name"], doc)
        write("identity-" + doc["name"], identity_continuation(doc))
    write("identity-sphere-z2-bad", identity_continuation(sphere_z2(), bad_component="n"))
    write("cont-sphere-z2-to-neg", cont_sphere_z2_to_neg())
    write("cont-neg-to-sphere-z2", cont_neg_to_sphere_z2())
    write("cont-twoflow-to-point", cont_twoflow_to_point())
    write("cont-twoflow-to-point-bad", cont_twoflow_to_point(bad=True))
    write("homotopy-square", homotopy_square())
    write("homotopy-square-bad", homotopy_square(bad=True))


if __name__ == "__main__":
    main()
