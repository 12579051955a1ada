"""JSON / CSV encodings.

Rationals are strings "p/q" (or "p"), QuadExt values are objects
{"rat", "surd", "radicand"}, polynomials are coefficient arrays indexed by
power.  Key order is fixed so identical inputs give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json

from .exactnum import Polynomial, QuadExt, rational_str, to_rational
from .matrices import Tridiagonal


def quad_to_json(x) -> dict:
    x = QuadExt.coerce(x)
    return {
        "rat": rational_str(x.rat),
        "surd": rational_str(x.surd),
        "radicand": rational_str(x.radicand),
    }


def quad_from_json(obj) -> QuadExt:
    if isinstance(obj, (str, int)):
        return QuadExt(to_rational(obj))
    return QuadExt(obj["rat"], obj["surd"], obj["radicand"])


def poly_to_json(p: Polynomial) -> list:
    return [quad_to_json(c) for c in p.coeffs]


def poly_from_json(arr) -> Polynomial:
    return Polynomial(quad_from_json(c) for c in arr)


def rational_poly_to_json(p: Polynomial) -> list:
    """Coefficient strings; only valid when every coefficient is rational."""
    return [rational_str(c) for c in p.coeffs]


def matrix_to_json(T: Tridiagonal) -> dict:
    return {
        "size": T.size,
        "sub": [rational_str(x) for x in T.sub],
        "main": [rational_str(x) for x in T.main],
        "super": [rational_str(x) for x in T.sup],
    }


def matrix_from_json(obj) -> Tridiagonal:
    T = Tridiagonal(obj["sub"], obj["main"], obj["super"])
    if "size" in obj and obj["size"] != T.size:
        raise ValueError(f"size field {obj['size']} disagrees with diagonals of size {T.size}")
    return T


def matrix_to_csv(T: Tridiagonal) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in T.to_dense():
        w.writerow(rational_str(x) for x in row)
    return buf.getvalue()


def factored_to_json(F) -> dict:
    return {
        "j": F.j,
        "scale": quad_to_json(F.scale),
        "factors": [
            {"root": quad_to_json(F.root1), "exp": F.exponent1},
            {"root": quad_to_json(F.root2), "exp": F.exponent2},
        ],
    }


def omega_to_json(om) -> dict:
    return {
        "N": om.N,
        "omega0": rational_poly_to_json(om.omega0),
        "omega1": rational_poly_to_json(om.omega1),
    }


def audit_to_json(audit) -> dict:
    return {
        "family": audit.family,
        "N": audit.N,
        "mapping": list(audit.mapping),
        "all_verified": audit.all_verified,
        "failures": [
            {"family": f, "N": n, "j": j, "reason": reason} for f, n, j, reason in audit.failures
        ],
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()
