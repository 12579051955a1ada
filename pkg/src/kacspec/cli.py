"""``kacspec`` command line.

    kacspec build    --family kac --n 4 [--format csv]
    kacspec spectrum --family abc --a 1 --b 1 --c 1 --n 3
    kacspec eigvec   --family general --alpha 2 --beta 1 --gamma 1 --delta 1 --n 3 --j 1
    kacspec verify   --preset krawtchouk --p 1/3 --n 6
    kacspec appendix --n 8

Exit codes: 0 success, 1 domain/usage/I-O error, 2 an exact identity failed.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from . import appendix, diffop, serialize
from .errors import ConsistencyError, DomainError
from .exactnum import rational_str, to_rational
from .report import FAMILIES, REQUIRED, build_matrix, spectral_report
from .spectral import degenerate_analysis

COMMANDS = ("build", "spectrum", "eigvec", "verify", "appendix")
PRESETS = ("sylvester-kac", "painvin", "krawtchouk", "classic")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage()}")


def make_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="kacspec", description="Exact spectra of Sylvester-Kac type matrices.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--family", choices=FAMILIES)
    ap.add_argument("--preset", choices=PRESETS)
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--j", type=int)
    for name in ("a", "b", "c", "alpha", "beta", "gamma", "delta", "p"):
        ap.add_argument(f"--{name}")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--output")
    ap.add_argument("--seed", type=int)
    # let "-1/3" through as a value, not an option
    ap._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")
    return ap


def _random_rational(rng: random.Random) -> Fraction:
    while True:
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        if q:
            return q


def random_params(family: str, rng: random.Random) -> dict:
    """Admissible random parameters for a closed-form request on ``family``."""
    while True:
        if family == "general":
            al, be, ga, de = (_random_rational(rng) for _ in range(4))
            if al * de != be * ga:
                return {"alpha": al, "beta": be, "gamma": ga, "delta": de}
        elif family == "abc":
            a, b, c = (_random_rational(rng) for _ in range(3))
            if b * b != 4 * a * c:
                return {"a": a, "b": b, "c": c}
        elif family == "hahn":
            al = _random_rational(rng)
            if 2 * al + 1 > 0:  # denominators 2i + 2al + 1 stay positive
                return {"alpha": al}
        else:
            return {}


def resolve(args) -> tuple[str, dict]:
    """(family, params) from flags; presets map onto the abc family."""
    raw = {k: getattr(args, k) for k in ("a", "b", "c", "alpha", "beta", "gamma", "delta")}
    if args.preset:
        if args.family not in (None, "abc"):
            raise DomainError(f"--preset {args.preset} implies --family abc")
        a, b, c = diffop.preset_abc(args.preset, a=args.a, p=args.p)
        return "abc", {"a": a, "b": b, "c": c}
    family = args.family or "kac"
    params = {k: to_rational(v) for k, v in raw.items() if v is not None and k in REQUIRED.get(family, ())}
    missing = [k for k in REQUIRED.get(family, ()) if k not in params]
    if missing and args.seed is not None and args.command == "verify":
        params = random_params(family, random.Random(args.seed))
    return family, params


def _general_degenerate(family, params) -> bool:
    return family == "general" and params["alpha"] * params["delta"] == params["beta"] * params["gamma"]


def cmd_build(args):
    family, params = resolve(args)
    T = build_matrix(family, args.n, params)
    if args.format == "csv":
        return serialize.matrix_to_csv(T), 0
    return serialize.dumps(serialize.matrix_to_json(T)), 0


def _report_csv(rep) -> str:
    width = rep.N + 1
    rows = [
        [p.index, str(p.value), "true" if p.verified else "false"] + [str(x) for x in p.vector]
        for p in rep.pairs
    ]
    return serialize.rows_to_csv(["j", "value", "verified"] + [f"v{k}" for k in range(width)], rows)


def cmd_spectrum(args, only_j=None):
    family, params = resolve(args)
    rep = spectral_report(family, args.n, params, only_j=only_j)
    if args.format == "csv":
        return _report_csv(rep), 0
    return serialize.dumps(rep.to_json()), 0


def cmd_eigvec(args):
    if args.j is None:
        raise DomainError("eigvec needs --j")
    return cmd_spectrum(args, only_j=args.j)


def cmd_verify(args):
    family, params = resolve(args)
    if _general_degenerate(family, params):
        rep = degenerate_analysis(params["alpha"], params["beta"], params["gamma"], params["delta"], args.n)
        out = {
            "family": family,
            "params": {k: rational_str(v) for k, v in params.items()},
            "N": args.n,
            "degenerate": True,
            "eigenvalue": serialize.quad_to_json(rep.eigenvalue),
            "algebraic_multiplicity": rep.algebraic_multiplicity,
            "geometric_multiplicity": rep.geometric_multiplicity,
            "eigenvector": [serialize.quad_to_json(x) for x in rep.eigenvector],
            "case": rep.case_tag,
            "all_verified": True,
        }
        summary = f"degenerate case {rep.case_tag}: eigenvalue {rep.eigenvalue} of multiplicity {args.n + 1}"
        return _verify_emit(args, out, summary, True)
    rep = spectral_report(family, args.n, params)
    n_ok = sum(p.verified for p in rep.pairs)
    poly_ok = rep.char_poly_identity()
    ok = rep.all_verified() and poly_ok
    out = rep.to_json()
    out["verified_pairs"] = n_ok
    out["char_poly_identity"] = poly_ok
    out["all_verified"] = ok
    summary = f"{n_ok}/{args.n + 1} pairs verified, char_poly identity {'holds' if poly_ok else 'FAILS'}"
    if rep.radicand is not None:
        summary += f", radicand {rational_str(rep.radicand)}"
    return _verify_emit(args, out, summary, ok)


def _verify_emit(args, out, summary, ok):
    print(summary, file=sys.stderr)
    if args.format == "csv":
        rows = [[k, json.dumps(v) if isinstance(v, (dict, list)) else v] for k, v in out.items() if k != "pairs"]
        text = serialize.rows_to_csv(["key", "value"], rows)
    else:
        text = serialize.dumps(out)
    return text, 0 if ok else 2


def cmd_appendix(args):
    if args.n < 0:
        raise DomainError(f"--n must be >= 0, got {args.n}")
    battery = appendix.appendix_battery(args.n)
    audits = [appendix.pairing_audit(f, n) for n in range(1, args.n + 1) for f in ("H", "G")]
    ok = all(battery.values())
    if args.format == "csv":
        rows = [[k, "true" if v else "false"] for k, v in battery.items()]
        rows += [
            [f"pairing_{a.family}[{a.N}]", "true" if a.all_verified else "false"] for a in audits
        ]
        text = serialize.rows_to_csv(["check", "result"], rows)
    else:
        text = serialize.dumps(
            {
                "N": args.n,
                "all_identities_hold": ok,
                "checks": battery,
                "omega": [serialize.omega_to_json(appendix.omega_pair(n)) for n in range(args.n + 1)],
                "pairing_audits": [serialize.audit_to_json(a) for a in audits],
            }
        )
    n_bad = sum(not a.all_verified for a in audits)
    print(
        f"{sum(battery.values())}/{len(battery)} identity checks hold; "
        f"{len(audits) - n_bad}/{len(audits)} printed right-vector audits are bijective",
        file=sys.stderr,
    )
    return text, 0 if ok else 2


HANDLERS = {
    "build": cmd_build,
    "spectrum": cmd_spectrum,
    "eigvec": cmd_eigvec,
    "verify": cmd_verify,
    "appendix": cmd_appendix,
}


def _fail(kind: str, message: str, code: int) -> int:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    return code


def run(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        text, code = HANDLERS[args.command](args)
    except UsageError as e:
        print(str(e).rstrip(), file=sys.stderr)
        return 1
    except (DomainError, ZeroDivisionError) as e:
        return _fail("domain", str(e), 1)
    except ConsistencyError as e:
        return _fail("consistency", str(e), 2)
    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as e:
        return _fail("io", str(e), 1)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
