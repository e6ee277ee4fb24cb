"""Smoke tests for the python bindings; the heavy coverage lives in the
C++ suites."""

import quiverrep as qr

KRONECKER = {
    "vertices": 2,
    "arrows": [
        {"label": "a1", "from": 1, "to": 2},
        {"label": "a2", "from": 1, "to": 2},
    ],
}

A3 = {
    "vertices": 3,
    "arrows": [
        {"label": "a1", "from": 1, "to": 2},
        {"label": "a2", "from": 2, "to": 3},
    ],
}


def test_classify_graph():
    out = qr.classify_graph(KRONECKER)
    assert out == {"type": "euclidean", "family": "A~", "m": 1, "delta": [1, 1]}
    assert qr.classify_graph(A3) == {"type": "dynkin", "family": "A", "n": 3}


def test_roots_and_forms():
    roots = qr.positive_roots(A3)
    assert len(roots) == 6
    assert [1, 1, 1] in roots
    assert qr.quadratic(KRONECKER, [1, 1]) == 0
    assert qr.euler_form(KRONECKER, [1, 0], [0, 1]) == -2
    assert qr.defect(KRONECKER, [1, 2]) == -1
    assert qr.coxeter_transform(KRONECKER, [0, 1]) == [-2, -1]


def test_indecomposables_and_decompose():
    recs = qr.dynkin_indecomposables(A3)
    assert len(recs) == 6
    rep = next(r["rep"] for r in recs if r["dims"] == [1, 1, 1])
    decomposition = qr.decompose(rep)
    assert len(decomposition["summands"]) == 1
    assert decomposition["summands"][0]["multiplicity"] == 1


def test_kronecker_round_trip():
    rep = qr.kronecker_make("R", p=2, point="5:1")
    classes = qr.kronecker_classify(rep)
    assert classes == [{"kind": "R", "p": 2, "point": ["5", "1"], "multiplicity": 1}]

    p1 = qr.kronecker_make("P", r=1)
    assert qr.hom_dim(p1, p1) == 1
    assert qr.ext_dim(p1, p1) == 0


def test_coxeter_and_reflect():
    p0 = qr.kronecker_make("P", r=0)
    shifted = qr.coxeter_power(p0, -1)
    assert shifted["dims"] == [2, 3]
    # the simple at the sink is annihilated; P_1 reflects to dims (1, 0)
    assert qr.reflect(p0, [["+", 2]])["dims"] == [0, 0]
    p1 = qr.kronecker_make("P", r=1)
    assert qr.reflect(p1, [["+", 2]])["dims"] == [1, 0]


def test_mesh_and_wild():
    assert qr.mesh_hom_dim(A3, 1, 0, 1, 0) == 1
    s1 = qr.kronecker_make("P", r=1, field="GF(5)")
    embedded = qr.wild_embed(s1, "gamma2")
    assert embedded["dims"] == [18]


def test_error_mapping():
    try:
        qr.positive_roots({"vertices": 2, "arrows": [
            {"label": "a", "from": 1, "to": 2},
            {"label": "b", "from": 1, "to": 2},
            {"label": "c", "from": 1, "to": 2},
        ]})
    except qr.ValidationError:
        pass
    else:
        raise AssertionError("expected a ValidationError for a wild quiver")
