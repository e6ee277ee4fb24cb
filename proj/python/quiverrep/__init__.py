"""Exact quiver representation toolkit.

The heavy lifting happens in the C++ extension `_quiverrep`; this wrapper
converts between python objects and the JSON schemas shared with the CLI.
"""

import json as _json

import _quiverrep as _core

ValidationError = _core.ValidationError
IncompleteError = _core.IncompleteError


def _dump(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def classify_graph(quiver):
    return _json.loads(_core.classify_graph(_dump(quiver)))


def positive_roots(quiver):
    return _core.positive_roots(_dump(quiver))


def euler_form(quiver, x, y):
    return _core.euler_form(_dump(quiver), list(x), list(y))


def quadratic(quiver, x):
    return _core.quadratic(_dump(quiver), list(x))


def defect(quiver, x):
    return _core.defect(_dump(quiver), list(x))


def coxeter_transform(quiver, x):
    return _core.coxeter_transform(_dump(quiver), list(x))


def dynkin_indecomposables(quiver, field="Q"):
    return _json.loads(_core.dynkin_indecomposables(_dump(quiver), field))


def decompose(rep):
    return _json.loads(_core.decompose(_dump(rep)))


def hom_dim(x, y):
    return _core.hom_dim(_dump(x), _dump(y))


def ext_dim(z, x):
    return _core.ext_dim(_dump(z), _dump(x))


def reflect(rep, word):
    return _json.loads(_core.reflect(_dump(rep), _dump(word)))


def coxeter_power(rep, power):
    return _json.loads(_core.coxeter_power(_dump(rep), power))


def kronecker_make(kind, r=0, p=1, point="0:1", field="Q"):
    return _json.loads(_core.kronecker_make(kind, r, p, point, field))


def kronecker_classify(rep):
    return _json.loads(_core.kronecker_classify(_dump(rep)))


def klein_classify(grouprep):
    return _json.loads(_core.klein_classify(_dump(grouprep)))


def separated(rep):
    return _json.loads(_core.separated(_dump(rep)))


def mesh_hom_dim(quiver, i, r, j, s):
    return _core.mesh_hom_dim(_dump(quiver), i, r, j, s)


def wild_embed(rep, target="k3"):
    return _json.loads(_core.wild_embed(_dump(rep), target))
